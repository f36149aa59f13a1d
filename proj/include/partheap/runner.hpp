#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "partheap/heap.hpp"
#include "partheap/selection.hpp"
#include "partheap/trace.hpp"

namespace partheap {

std::unique_ptr<AddressableHeap> make_heap(HeapKind kind, SelectMode mode = SelectMode::Deterministic,
                                           std::uint64_t seed = 0);

struct RunOptions {
  bool oracle = true;           // replay on OracleHeap in lockstep and compare
  bool check_find_min = true;   // with the oracle, compare find_min after every op
  std::size_t audit_every = 0;  // audit after every k-th op; 0 disables
  bool track_phi = false;       // fill phi_before/phi_after per op
  bool record_ledger = false;   // keep every ledger row
  bool collect_costs = false;   // keep one CostRow per op
  SelectMode select_mode = SelectMode::Deterministic;
  std::uint64_t seed = 0;
};

struct CostRow {
  std::size_t op_index = 0;
  TraceOp::Kind op_kind = TraceOp::Kind::Insert;
  std::uint64_t comparisons = 0;
  std::uint64_t node_moves = 0;
  std::uint64_t list_links = 0;
  std::uint64_t selection_elements = 0;
  std::int64_t phi_before = 0;
  std::int64_t phi_after = 0;
  std::uint64_t pivot_comparisons = 0;
  std::size_t n_after = 0;
};

struct RunResult {
  HeapKind kind = HeapKind::LP;
  bool ok = true;
  std::string failure;
  std::int64_t failed_op = -1;
  std::vector<UserKey> outputs;  // delete_min results in order
  std::vector<CostRow> costs;
  std::vector<LedgerRow> ledger;
  std::size_t audits = 0;
  std::size_t peak_n = 0;
  std::size_t final_n = 0;
  CostMeter total;
  double seconds = 0.0;
};

RunResult run_trace(const Trace& trace, HeapKind kind, const RunOptions& options = {});

inline RunResult differential_run(const Trace& trace, HeapKind kind) { return run_trace(trace, kind, {}); }

}  // namespace partheap
