#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "partheap/exp_heap.hpp"
#include "partheap/fhtng_heap.hpp"
#include "partheap/heap.hpp"
#include "partheap/lp_heap.hpp"

namespace partheap {

struct AuditFinding {
  std::string check;
  std::int64_t index = -1;  // set number (LP 0-based), slot (FH:TNG) or level (Exp)
  std::string detail;
};

struct AuditReport {
  std::vector<std::string> checks_run;
  std::vector<AuditFinding> failures;  // in discovery order
  std::string digest;

  bool ok() const { return failures.empty(); }
  const AuditFinding* first() const { return failures.empty() ? nullptr : &failures.front(); }
  std::string summary() const;
};

AuditReport audit(const LPHeap& h);
AuditReport audit(const FHTNGHeap& h);
AuditReport audit(const ExpHeap& h);
// Dispatches on the dynamic type; the oracle always passes.
AuditReport audit(const AddressableHeap& h);

}  // namespace partheap
