#pragma once

#include <array>
#include <cstdint>
#include <numeric>
#include <string_view>
#include <vector>

#include "partheap/cost_meter.hpp"

namespace partheap {

enum class HeapKind { LP, FHTNG, Exp, Oracle };

enum class LedgerOp {
  Insert,
  DecreaseKey,
  DeleteMin,
  Delete,
  IncreaseKey,
  OverflowDown,
  OverflowThru,
  UnderflowUp,
  UnderflowThru,
  UnderflowAbsorb,
  MergeDown,
  SplitUp,
  Push,
  Pull,
};

std::string_view to_string(HeapKind kind);
std::string_view to_string(LedgerOp op);

// Potential split into up to three named parts; the meaning of each part
// depends on the heap:
//   LP     {phi, 0, 0}
//   FH:TNG {nonempty, size, up}
//   Exp    {insert, push, pull}
struct Potential {
  std::array<std::int64_t, 3> parts{};
  std::int64_t total() const { return std::accumulate(parts.begin(), parts.end(), std::int64_t{0}); }
};

// State captured at the start of an accounted step.
struct Snapshot {
  Potential phi;
  CostMeter meter;
};

// One accounted step. Heaps fill the raw parameters; the lemma table in the
// validation layer derives nominal cost, bound and threshold from them.
struct LedgerRow {
  HeapKind heap = HeapKind::LP;
  LedgerOp op = LedgerOp::Insert;
  std::int64_t index = 0;  // slot (FH:TNG) or level (Exp) the step acted on
  std::int64_t aux = 0;    // l before (LP delete_min), nonempty slots (FH delete_min), m (push, pull)
  std::int64_t size1 = 0;  // |S_1| before an LP delete_min
  std::int64_t beta = 0;   // LP potential weight
  Potential before;
  Potential after;
  std::uint64_t actual = 0;  // element touches plus link writes spent in the step

  std::int64_t delta() const { return after.total() - before.total(); }
};

class PotentialLedger {
 public:
  void record(const LedgerRow& row) { rows_.push_back(row); }
  const std::vector<LedgerRow>& rows() const { return rows_; }
  void clear() { rows_.clear(); }

 private:
  std::vector<LedgerRow> rows_;
};

}  // namespace partheap
