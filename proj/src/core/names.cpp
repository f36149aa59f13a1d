#include <string>

#include "partheap/heap.hpp"
#include "partheap/potential_ledger.hpp"

namespace partheap {

std::string_view to_string(HeapKind kind) {
  switch (kind) {
    case HeapKind::LP: return "lp";
    case HeapKind::FHTNG: return "fhtng";
    case HeapKind::Exp: return "exp";
    case HeapKind::Oracle: return "oracle";
  }
  return "?";
}

std::optional<HeapKind> parse_heap_kind(std::string_view name) {
  for (HeapKind k : {HeapKind::LP, HeapKind::FHTNG, HeapKind::Exp, HeapKind::Oracle}) {
    if (to_string(k) == name) return k;
  }
  return std::nullopt;
}

std::string_view to_string(LedgerOp op) {
  switch (op) {
    case LedgerOp::Insert: return "insert";
    case LedgerOp::DecreaseKey: return "decrease_key";
    case LedgerOp::DeleteMin: return "delete_min";
    case LedgerOp::Delete: return "delete";
    case LedgerOp::IncreaseKey: return "increase_key";
    case LedgerOp::OverflowDown: return "overflow_down";
    case LedgerOp::OverflowThru: return "overflow_thru";
    case LedgerOp::UnderflowUp: return "underflow_up";
    case LedgerOp::UnderflowThru: return "underflow_thru";
    case LedgerOp::UnderflowAbsorb: return "underflow_absorb";
    case LedgerOp::MergeDown: return "merge_down";
    case LedgerOp::SplitUp: return "split_up";
    case LedgerOp::Push: return "push";
    case LedgerOp::Pull: return "pull";
  }
  return "?";
}

}  // namespace partheap
