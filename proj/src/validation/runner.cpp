#include "partheap/runner.hpp"

#include <chrono>
#include <optional>

#include "partheap/audit.hpp"
#include "partheap/errors.hpp"
#include "partheap/exp_heap.hpp"
#include "partheap/fhtng_heap.hpp"
#include "partheap/lp_heap.hpp"
#include "partheap/oracle_heap.hpp"

namespace partheap {
namespace {

// Result of applying one trace op to one heap: a key (delete_min), nothing,
// or an error code.
struct Outcome {
  std::optional<UserKey> key;
  std::optional<ErrorCode> error;

  bool operator==(const Outcome&) const = default;
};

std::string show(const Outcome& o) {
  if (o.error) return "error " + std::string(to_string(*o.error));
  if (o.key) return std::to_string(*o.key);
  return "ok";
}

Outcome apply(AddressableHeap& h, const TraceOp& op, std::vector<Handle>& handles) {
  Outcome out;
  try {
    switch (op.kind) {
      case TraceOp::Kind::Insert: handles.push_back(h.insert(op.key)); break;
      case TraceOp::Kind::DeleteMin: out.key = h.delete_min(); break;
      case TraceOp::Kind::DecreaseKey: h.decrease_key(handles[op.target], op.key); break;
    }
  } catch (const HeapError& e) {
    out.error = e.code();
  }
  return out;
}

}  // namespace

std::unique_ptr<AddressableHeap> make_heap(HeapKind kind, SelectMode mode, std::uint64_t seed) {
  switch (kind) {
    case HeapKind::LP: return std::make_unique<LPHeap>(LPConfig{mode, seed, 4});
    case HeapKind::FHTNG: return std::make_unique<FHTNGHeap>();
    case HeapKind::Exp: return std::make_unique<ExpHeap>(mode, seed);
    case HeapKind::Oracle: return std::make_unique<OracleHeap>();
  }
  return nullptr;
}

RunResult run_trace(const Trace& trace, HeapKind kind, const RunOptions& options) {
  const auto start = std::chrono::steady_clock::now();
  RunResult result;
  result.kind = kind;
  auto heap = make_heap(kind, options.select_mode, options.seed);
  std::optional<OracleHeap> oracle;
  if (options.oracle && kind != HeapKind::Oracle) oracle.emplace();
  PotentialLedger ledger;
  if (options.record_ledger) heap->set_ledger(&ledger);

  std::vector<Handle> handles;
  std::vector<Handle> oracle_handles;
  std::size_t inserts = 0;
  auto fail = [&](std::size_t idx, const std::string& why) {
    result.ok = false;
    result.failed_op = static_cast<std::int64_t>(idx);
    result.failure = "op " + std::to_string(idx) + ": " + why + " | impl: " + heap->digest() +
                     (oracle ? " | oracle: " + oracle->digest() : "");
  };

  for (std::size_t idx = 0; idx < trace.size(); ++idx) {
    const TraceOp& op = trace[idx];
    if (op.kind == TraceOp::Kind::DecreaseKey && op.target >= inserts) {
      fail(idx, "decrease_key names handle " + std::to_string(op.target) + " before its insert");
      break;
    }
    if (op.kind == TraceOp::Kind::Insert) ++inserts;

    const CostMeter m0 = heap->meter();
    const std::int64_t phi0 = options.track_phi ? heap->potential().total() : 0;
    const Outcome got = apply(*heap, op, handles);
    const CostMeter m1 = heap->meter();
    const std::int64_t phi1 = options.track_phi ? heap->potential().total() : 0;
    if (got.key) result.outputs.push_back(*got.key);

    if (oracle) {
      const Outcome want = apply(*oracle, op, oracle_handles);
      if (!(got == want)) {
        fail(idx, std::string(op_name(op.kind)) + " returned " + show(got) + ", oracle " + show(want));
        break;
      }
      if (options.check_find_min && !oracle->empty() && heap->find_min() != oracle->find_min()) {
        fail(idx, "find_min " + std::to_string(heap->find_min()) + ", oracle " + std::to_string(oracle->find_min()));
        break;
      }
    }
    result.peak_n = std::max(result.peak_n, heap->size());

    if (options.collect_costs) {
      const CostMeter d = m1 - m0;
      CostRow row;
      row.op_index = idx;
      row.op_kind = op.kind;
      row.comparisons = d.comparisons;
      row.node_moves = d.node_moves;
      row.list_links = d.list_links;
      row.selection_elements = d.selection_elements;
      row.pivot_comparisons = d.pivot_comparisons;
      row.phi_before = phi0;
      row.phi_after = phi1;
      row.n_after = heap->size();
      result.costs.push_back(row);
    }

    if (options.audit_every && (idx + 1) % options.audit_every == 0) {
      ++result.audits;
      AuditReport report = audit(*heap);
      if (!report.ok()) {
        fail(idx, "audit " + report.summary());
        break;
      }
    }
  }
  result.final_n = heap->size();
  result.total = heap->meter();
  heap->set_ledger(nullptr);
  result.ledger = ledger.rows();
  result.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return result;
}

}  // namespace partheap
