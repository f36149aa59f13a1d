#include "partheap/audit.hpp"

#include <algorithm>
#include <optional>
#include <sstream>

namespace partheap {
namespace {

struct Range {
  Key lo;
  Key hi;
};

std::optional<Range> key_range(const LinkedSet& s) {
  if (s.empty()) return std::nullopt;
  Range r{s.begin()->key, s.begin()->key};
  for (const Node& n : s) {
    r.lo = std::min(r.lo, n.key);
    r.hi = std::max(r.hi, n.key);
  }
  return r;
}

std::string str(const Key& k) {
  std::ostringstream os;
  os << k;
  return os.str();
}

class Recorder {
 public:
  explicit Recorder(AuditReport& r) : r_(r) {}
  void run(const std::string& check) { r_.checks_run.push_back(check); }
  void fail(const std::string& check, std::int64_t index, const std::string& detail) {
    r_.failures.push_back({check, index, detail});
  }

 private:
  AuditReport& r_;
};

// Shared checks for a sequence of sets with a lower pivot per set (lowest()
// for the first): sizes, sandwich and cross-set order.
struct SetView {
  std::int64_t index;
  const LinkedSet* set;
  Key lower;
};

void check_sets(Recorder& rec, const std::vector<SetView>& sets, std::size_t n) {
  rec.run("size");
  rec.run("sandwich");
  rec.run("order");
  rec.run("pivots-monotone");
  std::size_t total = 0;
  std::optional<Key> prev_max;
  for (std::size_t t = 0; t < sets.size(); ++t) {
    const SetView& v = sets[t];
    const std::size_t walked = v.set->traverse_count();
    if (walked != v.set->size()) {
      rec.fail("size", v.index,
               "traversed " + std::to_string(walked) + " nodes, stored size " + std::to_string(v.set->size()));
    }
    total += walked;
    if (t + 1 < sets.size() && sets[t + 1].lower < v.lower) {
      rec.fail("pivots-monotone", sets[t + 1].index, "pivot " + str(sets[t + 1].lower) + " below " + str(v.lower));
    }
    auto r = key_range(*v.set);
    if (!r) continue;
    const Key upper = t + 1 < sets.size() ? sets[t + 1].lower : Key::highest();
    if (r->lo < v.lower || !(r->hi < upper)) {
      rec.fail("sandwich", v.index,
               "keys [" + str(r->lo) + ", " + str(r->hi) + "] outside [" + str(v.lower) + ", " + str(upper) + ")");
    }
    if (prev_max && !(*prev_max < r->lo)) {
      rec.fail("order", v.index, "min " + str(r->lo) + " not above previous max " + str(*prev_max));
    }
    prev_max = r->hi;
  }
  if (total != n) {
    rec.fail("size", -1, "sets hold " + std::to_string(total) + " elements, n = " + std::to_string(n));
  }
}

__extension__ using Wide = unsigned __int128;

// 2^e <= v for v >= 0, without floating point.
bool pow2_at_most(std::size_t e, Wide v) {
  if (e >= 127) return false;
  return (static_cast<Wide>(1) << e) <= v;
}

}  // namespace

std::string AuditReport::summary() const {
  if (ok()) return "ok (" + std::to_string(checks_run.size()) + " checks) " + digest;
  const AuditFinding& f = failures.front();
  return "FAIL " + f.check + " at " + std::to_string(f.index) + ": " + f.detail + " | " + digest;
}

AuditReport audit(const LPHeap& h) {
  AuditReport report;
  report.digest = h.digest();
  Recorder rec(report);
  std::vector<SetView> views;
  for (std::size_t i = 0; i < h.set_count(); ++i) {
    views.push_back({static_cast<std::int64_t>(i), &h.set(i), i == 0 ? Key::lowest() : h.pivots()[i - 1]});
  }
  check_sets(rec, views, h.size());

  rec.run("cached-min");
  if (h.size() > 0) {
    std::optional<Key> global;
    for (std::size_t i = 0; i < h.set_count(); ++i) {
      if (auto r = key_range(h.set(i)); r && (!global || r->lo < *global)) global = r->lo;
    }
    if (!h.cached_min() || !global || h.cached_min()->key != *global) {
      rec.fail("cached-min", -1, "cached minimum does not hold the smallest key");
    }
  }

  // Invariant (S): l <= 2 lg n + 1, i.e. 2^(l-1) <= n^2.
  rec.run("set-count");
  const std::size_t l = h.set_count();
  const auto n = static_cast<Wide>(h.size());
  if (h.size() >= 1 && !pow2_at_most(l - 1, n * n)) {
    rec.fail("set-count", static_cast<std::int64_t>(l), "l = " + std::to_string(l) + " exceeds 2 lg n + 1");
  }

  if (h.compacted()) {
    rec.run("nonempty");
    rec.run("rule-c");
    rec.run("prefix-growth");
    std::uint64_t prefix = 0;
    for (std::size_t i = 0; i < l; ++i) {
      const std::uint64_t sz = h.set(i).size();
      if (sz == 0 && h.size() > 0) rec.fail("nonempty", static_cast<std::int64_t>(i), "empty set after compaction");
      if (i + 1 < l && sz + h.set(i + 1).size() < prefix) {
        rec.fail("rule-c", static_cast<std::int64_t>(i),
                 "|A| + |B| = " + std::to_string(sz + h.set(i + 1).size()) + " < s_A = " + std::to_string(prefix));
      }
      prefix += sz;
      // Sigma(j) >= 2^((j-1)/2) with j = i + 1, squared to stay in integers.
      const auto p = static_cast<Wide>(prefix);
      if (h.size() > 0 && !pow2_at_most(i, p * p)) {
        rec.fail("prefix-growth", static_cast<std::int64_t>(i),
                 "prefix " + std::to_string(prefix) + " below 2^(" + std::to_string(i) + "/2)");
      }
    }
  }
  return report;
}

AuditReport audit(const FHTNGHeap& h) {
  AuditReport report;
  report.digest = h.digest();
  Recorder rec(report);
  std::vector<SetView> views;
  for (std::size_t i = FHTNGHeap::kFirstSlot; i < h.slot_end(); ++i) {
    if (!h.present(i)) {
      if (h.slot(i).traverse_count() != 0) rec.fail("size", static_cast<std::int64_t>(i), "empty slot holds nodes");
      continue;
    }
    views.push_back({static_cast<std::int64_t>(i), &h.slot(i), h.pivot(i)});
  }
  check_sets(rec, views, h.size());

  rec.run("band");
  rec.run("nonempty-run");
  rec.run("empty-run");
  std::size_t run = 0;
  std::size_t prev = 1;  // virtual occupied slot in front of S_3
  for (std::size_t i = FHTNGHeap::kFirstSlot; i < h.slot_end(); ++i) {
    if (!h.present(i)) {
      run = 0;
      continue;
    }
    const auto sz = static_cast<std::int64_t>(h.slot_size(i));
    const auto ii = static_cast<std::int64_t>(i);
    const std::int64_t lo = i == FHTNGHeap::kFirstSlot ? 1 : fib(ii);
    if (sz < lo || sz > fib(ii + 3)) {
      rec.fail("band", ii,
               "|S_" + std::to_string(i) + "| = " + std::to_string(sz) + " outside [" + std::to_string(lo) + ", " +
                   std::to_string(fib(ii + 3)) + "]");
    }
    if (++run > 2) rec.fail("nonempty-run", ii, "three occupied slots in a row");
    if (i - prev - 1 > 8) {
      rec.fail("empty-run", ii, std::to_string(i - prev - 1) + " empty slots in front of S_" + std::to_string(i));
    }
    prev = i;
  }
  return report;
}

AuditReport audit(const ExpHeap& h) {
  AuditReport report;
  report.digest = h.digest();
  Recorder rec(report);
  std::vector<SetView> views;
  for (std::size_t i = 1; i <= h.level_count(); ++i) {
    views.push_back({static_cast<std::int64_t>(i), &h.level(i), i == 1 ? Key::lowest() : h.pivot(i)});
  }
  check_sets(rec, views, h.size());

  rec.run("capacity");
  for (std::size_t i = 1; i <= h.level_count(); ++i) {
    const auto sz = static_cast<std::int64_t>(h.level(i).size());
    if (sz >= ExpHeap::capacity(i)) {
      rec.fail("capacity", static_cast<std::int64_t>(i),
               "|S_" + std::to_string(i) + "| = " + std::to_string(sz) + " reaches 3*2^i");
    }
  }
  rec.run("level-count");
  const std::size_t l = h.level_count();
  if (l < 1 || (h.size() >= 1 && !pow2_at_most(l - 1, h.size()))) {
    rec.fail("level-count", static_cast<std::int64_t>(l), "l = " + std::to_string(l) + " exceeds 1 + lg n");
  }
  return report;
}

AuditReport audit(const AddressableHeap& h) {
  if (const auto* lp = dynamic_cast<const LPHeap*>(&h)) return audit(*lp);
  if (const auto* fh = dynamic_cast<const FHTNGHeap*>(&h)) return audit(*fh);
  if (const auto* ex = dynamic_cast<const ExpHeap*>(&h)) return audit(*ex);
  AuditReport report;
  report.digest = h.digest();
  return report;
}

}  // namespace partheap
