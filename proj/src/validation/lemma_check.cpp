#include "partheap/lemma_check.hpp"

#include <algorithm>
#include <sstream>

#include "partheap/fhtng_heap.hpp"

namespace partheap {
namespace {

// Fibonacci numbers with the standard extension F_{-1} = 1, used for nominal
// costs like F_{i-6} at small i.
std::int64_t nominal_fib(std::int64_t k) { return k == -1 ? 1 : fib(k); }

LemmaTerms lp_terms(const LedgerRow& r) {
  switch (r.op) {
    case LedgerOp::Insert:
    case LedgerOp::DecreaseKey: return {0, r.beta, true};
    case LedgerOp::DeleteMin: return {0, r.beta * (r.aux - (r.size1 - 1) / 2), true};
    default: return {};
  }
}

LemmaTerms fhtng_terms(const LedgerRow& r) {
  const std::int64_t i = r.index;
  switch (r.op) {
    case LedgerOp::Insert: return {0, 1, true};
    case LedgerOp::DecreaseKey: return {0, 2, true};
    case LedgerOp::DeleteMin: return {0, r.aux + 1, true};
    case LedgerOp::SplitUp: return {nominal_fib(i - 6), 0, i >= 11};
    case LedgerOp::MergeDown: return {1, 0, true};
    case LedgerOp::OverflowDown: return {1, 0, i >= 3};
    case LedgerOp::OverflowThru: return {nominal_fib(i - 4), 0, i >= 5};
    case LedgerOp::UnderflowUp: return {1, 0, i >= 6};
    case LedgerOp::UnderflowThru: return {nominal_fib(i - 6), 0, i >= 3};
    default: return {};
  }
}

LemmaTerms exp_terms(const LedgerRow& r) {
  switch (r.op) {
    case LedgerOp::Insert:
    case LedgerOp::DecreaseKey: return {0, 2, true};
    case LedgerOp::DeleteMin: return {0, r.aux, true};
    case LedgerOp::Push: return {0, -r.aux + r.index + 3, true};
    case LedgerOp::Pull:
      // The pull lemma is stated for 1 <= i < m; a single element pulled all
      // the way up has no such i.
      if (r.index < 1) return {};
      return {0, -r.aux - (std::int64_t{1} << (r.index - 1)) + 1, true};
    default: return {};
  }
}

}  // namespace

LemmaTerms lemma_terms(const LedgerRow& row) {
  switch (row.heap) {
    case HeapKind::LP: return lp_terms(row);
    case HeapKind::FHTNG: return fhtng_terms(row);
    case HeapKind::Exp: return exp_terms(row);
    case HeapKind::Oracle: return {};
  }
  return {};
}

LemmaVerdict lemma_check(const std::vector<LedgerRow>& rows, std::size_t max_failures) {
  LemmaVerdict v;
  for (std::size_t k = 0; k < rows.size(); ++k) {
    const LedgerRow& r = rows[k];
    const LemmaTerms t = lemma_terms(r);
    auto& tally = v.per_op[std::string(to_string(r.heap)) + "/" + std::string(to_string(r.op))];
    if (!t.checked) {
      ++tally.skipped;
      continue;
    }
    ++tally.checked;
    if (t.nominal > 0) {
      tally.max_cost_ratio =
          std::max(tally.max_cost_ratio, static_cast<double>(r.actual) / static_cast<double>(t.nominal));
    }
    std::string reason;
    if (t.nominal + r.delta() > t.bound) {
      reason = "nominal + dPhi = " + std::to_string(t.nominal + r.delta()) + " > " + std::to_string(t.bound);
    } else if (r.heap == HeapKind::FHTNG && r.op == LedgerOp::DecreaseKey && r.after.parts[2] > r.before.parts[2]) {
      reason = "up potential grew from " + std::to_string(r.before.parts[2]) + " to " +
               std::to_string(r.after.parts[2]);
    }
    if (reason.empty()) continue;
    ++tally.failed;
    ++v.failed;
    if (v.failures.size() < max_failures) v.failures.push_back({k, r, t, reason});
  }
  return v;
}

std::string describe(const LemmaFailure& f) {
  std::ostringstream os;
  const LedgerRow& r = f.data;
  os << "row " << f.row << ' ' << to_string(r.heap) << '/' << to_string(r.op) << " i=" << r.index << " aux=" << r.aux
     << " phi " << r.before.total() << " -> " << r.after.total() << " [" << r.before.parts[0] << ','
     << r.before.parts[1] << ',' << r.before.parts[2] << " -> " << r.after.parts[0] << ',' << r.after.parts[1] << ','
     << r.after.parts[2] << "]: " << f.reason;
  return os.str();
}

}  // namespace partheap
