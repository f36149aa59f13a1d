#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <random>
#include <set>
#include <sstream>

#include "partheap/costs.hpp"
#include "partheap/errors.hpp"
#include "partheap/report.hpp"
#include "partheap/runner.hpp"
#include "partheap/workload.hpp"

using namespace partheap;

TEST(Generate, EmptyTrace) { EXPECT_TRUE(generate(Pattern::Random, 0, 1).empty()); }

TEST(Generate, SortedInsertsIncrease) {
  const Trace t = generate(Pattern::Sorted, 5, 9);
  ASSERT_EQ(t.size(), 5u);
  for (std::size_t i = 0; i < t.size(); ++i) {
    EXPECT_EQ(t[i].kind, TraceOp::Kind::Insert);
    if (i) EXPECT_GT(t[i].key, t[i - 1].key);
  }
}

TEST(Generate, IsDeterministic) {
  for (Pattern p : all_patterns()) {
    EXPECT_EQ(format_trace(generate(p, 800, 5)), format_trace(generate(p, 800, 5))) << to_string(p);
    EXPECT_EQ(generate(p, 800, 5).size(), 800u);
  }
}

TEST(Generate, UnknownPattern) {
  EXPECT_FALSE(parse_pattern("zigzag").has_value());
  EXPECT_EQ(parse_pattern("dijkstra-like"), Pattern::DijkstraLike);
}

// Replays the trace on the oracle and checks that every decrease_key names
// the current maximum and makes it the new minimum.
TEST(Generate, AdversarialDecreasesTargetTheMaximum) {
  const Trace t = generate(Pattern::AdversarialDk, 4000, 12);
  std::set<std::pair<UserKey, std::uint64_t>> live;  // (key, handle)
  std::vector<UserKey> key_of;
  std::size_t decreases = 0;
  for (const TraceOp& op : t) {
    switch (op.kind) {
      case TraceOp::Kind::Insert:
        live.insert({op.key, key_of.size()});
        key_of.push_back(op.key);
        break;
      case TraceOp::Kind::DeleteMin: live.erase(live.begin()); break;
      case TraceOp::Kind::DecreaseKey: {
        ++decreases;
        ASSERT_EQ(std::prev(live.end())->second, op.target);
        ASSERT_LT(op.key, live.begin()->first);
        live.erase({key_of[op.target], op.target});
        key_of[op.target] = op.key;
        live.insert({op.key, op.target});
        break;
      }
    }
  }
  EXPECT_GT(decreases, 1000u);
}

TEST(Generate, DecreaseAllCoversEveryInsert) {
  const Trace t = generate(Pattern::DecreaseAll, 5000, 2);
  std::vector<int> decreased;
  for (const TraceOp& op : t) {
    if (op.kind == TraceOp::Kind::Insert) decreased.push_back(0);
    if (op.kind == TraceOp::Kind::DecreaseKey) ++decreased.at(op.target);
  }
  EXPECT_EQ(std::count(decreased.begin(), decreased.end(), 0), 0);
  EXPECT_TRUE(differential_run(t, HeapKind::LP).ok);
}

TEST(Costs, RoundTrip) {
  RunOptions o;
  o.collect_costs = true;
  o.track_phi = true;
  const RunResult r = run_trace(generate(Pattern::Random, 300, 1), HeapKind::Exp, o);
  ASSERT_EQ(r.costs.size(), 300u);
  std::stringstream buf;
  write_costs(buf, to_cost_file(r, {{"seed", "1"}}));
  const CostFile back = read_costs(buf);
  EXPECT_EQ(back.meta_or("impl", ""), "exp");
  EXPECT_EQ(back.meta_or("seed", ""), "1");
  ASSERT_EQ(back.rows.size(), r.costs.size());
  for (std::size_t i = 0; i < back.rows.size(); ++i) {
    EXPECT_EQ(back.rows[i].comparisons, r.costs[i].comparisons);
    EXPECT_EQ(back.rows[i].phi_after, r.costs[i].phi_after);
  }
}

TEST(Costs, EmptyRunHasHeaderOnly) {
  RunOptions o;
  o.collect_costs = true;
  const RunResult r = run_trace({}, HeapKind::LP, o);
  EXPECT_TRUE(r.ok);
  std::stringstream buf;
  write_costs(buf, to_cost_file(r));
  EXPECT_TRUE(read_costs(buf).rows.empty());
}

TEST(Costs, MalformedFile) {
  std::stringstream bad("op_index,op_kind\n1,insert\n");
  EXPECT_THROW(read_costs(bad), HeapError);
  std::stringstream bad_row(std::string(kCostsHeader) + "\n1,insert,2,3\n");
  EXPECT_THROW(read_costs(bad_row), HeapError);
}

TEST(Report, OneRowPerOpKind) {
  RunOptions o;
  o.collect_costs = true;
  const RunResult r = run_trace(generate(Pattern::Random, 2000, 4), HeapKind::LP, o);
  const Report rep = build_report({{"a.csv", to_cost_file(r)}});
  ASSERT_EQ(rep.files.size(), 1u);
  EXPECT_EQ(rep.files[0].per_op.size(), 3u);
  EXPECT_NE(render_text(rep).find("delete_min"), std::string::npos);
  EXPECT_EQ(to_json(rep)["files"][0]["ops"].size(), 3u);
}

TEST(Report, ScalingColumnsForTwoSizes) {
  std::vector<std::pair<std::string, CostFile>> files;
  for (std::size_t n : {1024u, 4096u}) {
    Trace t;
    for (std::size_t i = 0; i < n; ++i) t.push_back({TraceOp::Kind::Insert, static_cast<UserKey>(n - i), 0});
    for (std::size_t i = 0; i < n; ++i) t.push_back({TraceOp::Kind::DeleteMin, 0, 0});
    RunOptions o;
    o.collect_costs = true;
    o.oracle = false;
    files.push_back({"n" + std::to_string(n), to_cost_file(run_trace(t, HeapKind::FHTNG, o), {{"n", std::to_string(n)}})});
  }
  const Report rep = build_report(files);
  ASSERT_EQ(rep.scaling.size(), 2u);
  EXPECT_DOUBLE_EQ(rep.scaling[0].ratio, 1.0);
  EXPECT_GT(rep.scaling[1].ratio, 0.0);
  EXPECT_EQ(to_json(rep)["scaling"].size(), 2u);
}

TEST(Report, NeedsAFile) { EXPECT_THROW(build_report({}), HeapError); }

TEST(Report, LPInsertComparisonsAtLargeN) {
  const std::size_t n = std::size_t{1} << 20;
  Trace t;
  std::mt19937_64 rng(1);
  for (std::size_t i = 0; i < n; ++i) t.push_back({TraceOp::Kind::Insert, static_cast<UserKey>(rng() >> 4), 0});
  // A few deletions build the pivot structure; the inserts after them are measured.
  for (int i = 0; i < 64; ++i) t.push_back({TraceOp::Kind::DeleteMin, 0, 0});
  for (std::size_t i = 0; i < 4096; ++i) t.push_back({TraceOp::Kind::Insert, static_cast<UserKey>(rng() >> 4), 0});
  RunOptions o;
  o.oracle = false;
  o.collect_costs = true;
  const RunResult r = run_trace(t, HeapKind::LP, o);
  CostFile tail;
  tail.rows.assign(r.costs.begin() + static_cast<std::ptrdiff_t>(n + 64), r.costs.end());
  const FileSummary s = summarize(tail, "tail");
  const double bound = std::ceil(std::log2(2.0 * 20 + 1)) + 3;
  EXPECT_EQ(bound, 9.0);
  EXPECT_LE(s.per_op.at("insert").mean_comparisons, bound);
}
