#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "partheap/potential_ledger.hpp"

namespace partheap {

// Nominal cost and right-hand side for a ledger row: the lemma holds when
// nominal + (phi_after - phi_before) <= bound. Rows whose index is below the
// lemma's threshold, and operations without a lemma, are not checked.
struct LemmaTerms {
  std::int64_t nominal = 0;
  std::int64_t bound = 0;
  bool checked = false;
};

LemmaTerms lemma_terms(const LedgerRow& row);

struct LemmaFailure {
  std::size_t row = 0;
  LedgerRow data;
  LemmaTerms terms;
  std::string reason;
};

struct LemmaTally {
  std::size_t checked = 0;
  std::size_t skipped = 0;
  std::size_t failed = 0;
  double max_cost_ratio = 0.0;  // largest actual / nominal over checked rows with nominal > 0
};

struct LemmaVerdict {
  std::map<std::string, LemmaTally> per_op;  // keyed "<heap>/<op>"
  std::vector<LemmaFailure> failures;        // capped at `max_failures`
  std::size_t failed = 0;

  bool ok() const { return failed == 0; }
};

LemmaVerdict lemma_check(const std::vector<LedgerRow>& rows, std::size_t max_failures = 32);
inline LemmaVerdict lemma_check(const PotentialLedger& ledger, std::size_t max_failures = 32) {
  return lemma_check(ledger.rows(), max_failures);
}

std::string describe(const LemmaFailure& f);

}  // namespace partheap
