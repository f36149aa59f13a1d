#include <gtest/gtest.h>

#include <algorithm>
#include <random>
#include <sstream>

#include "partheap/audit.hpp"
#include "partheap/errors.hpp"
#include "partheap/lemma_check.hpp"
#include "partheap/oracle_heap.hpp"
#include "partheap/runner.hpp"
#include "partheap/trace.hpp"
#include "partheap/workload.hpp"

using namespace partheap;

namespace {

const HeapKind kHeaps[] = {HeapKind::LP, HeapKind::FHTNG, HeapKind::Exp};

Trace ten_in_ten_out() {
  Trace t;
  for (UserKey k : {7, 3, 9, 1, 4, 8, 2, 6, 5, 0}) t.push_back({TraceOp::Kind::Insert, k, 0});
  for (int i = 0; i < 10; ++i) t.push_back({TraceOp::Kind::DeleteMin, 0, 0});
  return t;
}

}  // namespace

TEST(Oracle, BasicOperations) {
  OracleHeap o;
  Handle a = o.insert(5);
  o.insert(3);
  o.decrease_key(a, 1);
  EXPECT_EQ(o.find_min(), 1);
  EXPECT_EQ(o.sorted_keys(), (std::vector<UserKey>{1, 3}));
  EXPECT_EQ(o.delete_min(), 1);
  EXPECT_THROW(o.decrease_key(a, 0), HeapError);
  EXPECT_THROW(o.decrease_key(Handle{1, 0}, 4), HeapError);
}

TEST(DifferentialRun, TenInsertsTenDeletes) {
  const Trace t = ten_in_ten_out();
  for (HeapKind k : kHeaps) {
    const RunResult r = differential_run(t, k);
    EXPECT_TRUE(r.ok) << r.failure;
    EXPECT_EQ(r.outputs, (std::vector<UserKey>{0, 1, 2, 3, 4, 5, 6, 7, 8, 9}));
  }
}

TEST(DifferentialRun, EmptyTrace) {
  for (HeapKind k : kHeaps) {
    const RunResult r = differential_run({}, k);
    EXPECT_TRUE(r.ok);
    EXPECT_TRUE(r.outputs.empty());
  }
}

TEST(DifferentialRun, IncreaseIsRejectedOnBothSides) {
  const Trace t = parse_trace_text("i 5\ni 7\nk 0 6\nd\n");
  for (HeapKind k : kHeaps) {
    const RunResult r = differential_run(t, k);
    EXPECT_TRUE(r.ok) << r.failure;
    EXPECT_EQ(r.outputs, (std::vector<UserKey>{5}));
  }
}

TEST(DifferentialRun, DeleteMinOnEmptyAgrees) {
  const Trace t = parse_trace_text("d\ni 1\nd\nd\n");
  for (HeapKind k : kHeaps) EXPECT_TRUE(differential_run(t, k).ok);
}

TEST(DifferentialRun, DeadHandleAgrees) {
  const Trace t = parse_trace_text("i 1\ni 2\nd\nk 0 0\nd\n");
  for (HeapKind k : kHeaps) {
    const RunResult r = differential_run(t, k);
    EXPECT_TRUE(r.ok) << r.failure;
  }
}

TEST(DifferentialRun, HandleBeforeInsertIsMalformed) {
  const Trace t = parse_trace_text("i 1\nk 3 0\n");
  const RunResult r = differential_run(t, HeapKind::LP);
  EXPECT_FALSE(r.ok);
  EXPECT_EQ(r.failed_op, 1);
}

TEST(DifferentialRun, AllHeapsAgreeOnGeneratedTraces) {
  for (Pattern p : all_patterns()) {
    const Trace t = generate(p, 3000, 17);
    std::vector<std::vector<UserKey>> outs;
    for (HeapKind k : kHeaps) {
      RunOptions o;
      o.audit_every = 7;
      const RunResult r = run_trace(t, k, o);
      ASSERT_TRUE(r.ok) << to_string(p) << " " << to_string(k) << ": " << r.failure;
      outs.push_back(r.outputs);
    }
    EXPECT_EQ(outs[0], outs[1]);
    EXPECT_EQ(outs[0], outs[2]);
  }
}

TEST(Audit, SingleElementHeaps) {
  for (HeapKind k : kHeaps) {
    auto h = make_heap(k);
    h->insert(1);
    EXPECT_TRUE(audit(*h).ok()) << audit(*h).summary();
  }
}

TEST(Audit, LPPassesAfterEveryDeleteMin) {
  std::mt19937_64 rng(4);
  LPHeap h;
  std::vector<Handle> hs;
  for (int op = 0; op < 1000; ++op) {
    const auto r = rng() % 4;
    if (h.empty() || r < 2) {
      hs.push_back(h.insert(static_cast<UserKey>(rng() % 10000)));
    } else if (r == 2) {
      h.delete_min();
      const AuditReport a = audit(h);
      ASSERT_TRUE(a.ok()) << a.summary();
    } else {
      const Handle t = hs[rng() % hs.size()];
      try {
        h.decrease_key(t, h.key_of(t) - static_cast<UserKey>(rng() % 100));
      } catch (const HeapError&) {
      }
    }
  }
}

TEST(Audit, CorruptedSizeIsPinpointed) {
  LPHeap lp = LPHeap::from_sets({{1, 2}, {5, 6, 7}});
  lp.mutable_set_for_testing(1).unsafe_set_size(9);
  AuditReport r = audit(lp);
  ASSERT_FALSE(r.ok());
  EXPECT_EQ(r.first()->check, "size");
  EXPECT_EQ(r.first()->index, 1);

  FHTNGHeap fh = FHTNGHeap::from_slots({{3, {1, 2}}, {5, {10, 11, 12, 13, 14, 15}}});
  fh.mutable_slot_for_testing(5).unsafe_set_size(4);
  r = audit(fh);
  ASSERT_FALSE(r.ok());
  EXPECT_EQ(r.first()->check, "size");
  EXPECT_EQ(r.first()->index, 5);

  ExpHeap ex = ExpHeap::from_sets({{1}, {4, 5}});
  ex.mutable_level_for_testing(2).unsafe_set_size(1);
  r = audit(ex);
  ASSERT_FALSE(r.ok());
  EXPECT_EQ(r.first()->check, "size");
  EXPECT_EQ(r.first()->index, 2);
}

TEST(Audit, DetectsStructuralViolations) {
  // Three nonempty FH:TNG slots in a row.
  FHTNGHeap run = FHTNGHeap::from_slots({{3, {1, 2}}, {4, {10, 11, 12, 13}}, {5, {20, 21, 22, 23, 24, 25}}});
  AuditReport r = audit(run);
  ASSERT_FALSE(r.ok());
  EXPECT_EQ(r.first()->check, "nonempty-run");

  // Exp set at capacity.
  ExpHeap full = ExpHeap::from_sets({{1, 2, 3, 4, 5, 6}});
  r = audit(full);
  ASSERT_FALSE(r.ok());
  EXPECT_EQ(r.first()->check, "capacity");
}

TEST(LemmaCheck, LPInsertWithinBeta) {
  LPHeap h;
  PotentialLedger ledger;
  h.set_ledger(&ledger);
  h.insert(1);
  ASSERT_EQ(ledger.rows().size(), 1u);
  const LedgerRow& row = ledger.rows()[0];
  EXPECT_EQ(row.op, LedgerOp::Insert);
  EXPECT_LE(row.delta(), h.beta());
  EXPECT_TRUE(lemma_check(ledger).ok());
}

TEST(LemmaCheck, FHMergeDownPaysForItself) {
  FHTNGHeap h = FHTNGHeap::from_slots({{3, {1, 2}},
                                       {5, {10, 11, 12, 13, 14, 15}},
                                       {6, {20, 21, 22, 23, 24, 25, 26, 27, 28}},
                                       {7, {30, 31, 32, 33, 34, 35, 36, 37, 38, 39, 40, 41, 42, 43}}});
  PotentialLedger ledger;
  h.set_ledger(&ledger);
  h.merge_down(7);
  ASSERT_EQ(ledger.rows().size(), 1u);
  const LedgerRow& row = ledger.rows()[0];
  EXPECT_EQ(lemma_terms(row).nominal, 1);
  EXPECT_LE(1 + row.delta(), 0);
  EXPECT_TRUE(lemma_check(ledger).ok());
}

TEST(LemmaCheck, ExpPushChainWithinBound) {
  ExpHeap h = ExpHeap::from_sets({{0, 1, 2, 3, 4, 5}, {100, 101, 102, 103, 104, 105, 106}});
  PotentialLedger ledger;
  h.set_ledger(&ledger);
  h.push(1);
  ASSERT_EQ(ledger.rows().size(), 1u);
  const LedgerRow& row = ledger.rows()[0];
  EXPECT_EQ(row.op, LedgerOp::Push);
  EXPECT_LE(row.delta(), -row.aux + row.index + 3);
  EXPECT_TRUE(lemma_check(ledger).ok());
}

TEST(LemmaCheck, ViolationIsReported) {
  LedgerRow row;
  row.heap = HeapKind::LP;
  row.op = LedgerOp::Insert;
  row.beta = 4;
  row.after.parts[0] = 5;
  const LemmaVerdict v = lemma_check(std::vector<LedgerRow>{row});
  EXPECT_FALSE(v.ok());
  ASSERT_EQ(v.failures.size(), 1u);
  EXPECT_NE(describe(v.failures[0]).find("lp/insert"), std::string::npos);
}

TEST(LemmaCheck, RowsBelowThresholdAreSkipped) {
  LedgerRow row;
  row.heap = HeapKind::FHTNG;
  row.op = LedgerOp::UnderflowUp;
  row.index = 4;
  row.after.parts[1] = 10;
  const LemmaVerdict v = lemma_check(std::vector<LedgerRow>{row});
  EXPECT_TRUE(v.ok());
  EXPECT_EQ(v.per_op.at("fhtng/underflow_up").skipped, 1u);
}

TEST(Trace, RoundTrip) {
  const Trace t = generate(Pattern::Random, 500, 3);
  EXPECT_EQ(format_trace(parse_trace_text(format_trace(t))), format_trace(t));
  const Trace back = parse_trace_text(format_trace(t));
  ASSERT_EQ(back.size(), t.size());
  for (std::size_t i = 0; i < t.size(); ++i) {
    EXPECT_EQ(back[i].kind, t[i].kind);
    EXPECT_EQ(back[i].key, t[i].key);
    EXPECT_EQ(back[i].target, t[i].target);
  }
}

TEST(Trace, CommentsAndBlankLines) {
  const Trace t = parse_trace_text("# header\n\ni -4\n  d  \nk 0 -9\n");
  ASSERT_EQ(t.size(), 3u);
  EXPECT_EQ(t[0].key, -4);
  EXPECT_EQ(t[2].target, 0u);
  EXPECT_EQ(t[2].key, -9);
}

TEST(Trace, MalformedLinesNameTheLine) {
  for (const char* bad : {"i\n", "x 1\n", "i 1\ni 2 3\n", "k 1\n", "i abc\n", "d 4\n"}) {
    try {
      parse_trace_text(bad);
      FAIL() << "accepted: " << bad;
    } catch (const HeapError& e) {
      EXPECT_EQ(e.code(), ErrorCode::MalformedTrace);
      EXPECT_NE(std::string(e.what()).find("line"), std::string::npos);
    }
  }
}
