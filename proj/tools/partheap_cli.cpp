#include <fstream>
#include <future>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "partheap/costs.hpp"
#include "partheap/errors.hpp"
#include "partheap/lemma_check.hpp"
#include "partheap/report.hpp"
#include "partheap/runner.hpp"
#include "partheap/trace.hpp"
#include "partheap/workload.hpp"

using namespace partheap;

namespace {

Trace load_trace(const std::string& path) {
  if (path == "-") return parse_trace(std::cin);
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open trace " + path);
  return parse_trace(in);
}

HeapKind heap_kind(const std::string& name) {
  auto k = parse_heap_kind(name);
  if (!k) throw std::runtime_error("unknown impl '" + name + "'");
  return *k;
}

SelectMode select_mode(const std::string& name) {
  if (name == "det") return SelectMode::Deterministic;
  if (name == "rand") return SelectMode::Randomized;
  throw std::runtime_error("unknown --select '" + name + "'");
}

int do_gen(const std::string& pattern, std::size_t ops, std::uint64_t seed, const std::string& out) {
  auto p = parse_pattern(pattern);
  if (!p) throw std::runtime_error("unknown pattern '" + pattern + "'");
  const Trace t = generate(*p, ops, seed);
  std::ostringstream header;
  header << "# pattern=" << pattern << " ops=" << ops << " seed=" << seed << '\n';
  if (out.empty() || out == "-") {
    std::cout << header.str();
    write_trace(std::cout, t);
  } else {
    std::ofstream f(out);
    f << header.str();
    write_trace(f, t);
  }
  return 0;
}

struct RunFlags {
  std::string impl = "lp";
  std::uint64_t seed = 0;
  std::size_t audit_every = 0;
  bool oracle = false;
  bool phi = false;
  std::string select = "det";
  std::string costs;
};

int do_run(const std::string& trace_path, const RunFlags& f) {
  const Trace trace = load_trace(trace_path);
  RunOptions o;
  o.oracle = f.oracle;
  o.audit_every = f.audit_every;
  o.track_phi = f.phi;
  o.record_ledger = f.phi;
  o.collect_costs = true;
  o.select_mode = select_mode(f.select);
  o.seed = f.seed;
  const RunResult r = run_trace(trace, heap_kind(f.impl), o);

  if (!f.costs.empty()) {
    std::ofstream out(f.costs);
    write_costs(out, to_cost_file(r, {{"trace", trace_path}, {"seed", std::to_string(f.seed)}}));
  }
  bool ok = r.ok;
  std::cout << "impl=" << f.impl << " ops=" << r.costs.size() << " peak_n=" << r.peak_n
            << " audits=" << r.audits << " touches=" << r.total.touches() << " seconds=" << r.seconds << '\n';
  if (!r.ok) std::cout << "FAIL " << r.failure << '\n';
  if (f.phi) {
    const LemmaVerdict v = lemma_check(r.ledger);
    for (const auto& [op, t] : v.per_op) {
      std::cout << "  lemma " << op << " checked=" << t.checked << " skipped=" << t.skipped << " failed=" << t.failed
                << '\n';
    }
    for (const LemmaFailure& lf : v.failures) std::cout << "  " << describe(lf) << '\n';
    ok = ok && v.ok();
  }
  std::cout << (ok ? "PASS" : "FAIL") << '\n';
  return ok ? 0 : 1;
}

int do_compare(const std::string& trace_path, const std::vector<std::string>& impls, const RunFlags& f) {
  const Trace trace = load_trace(trace_path);
  RunOptions o;
  o.oracle = f.oracle;
  o.audit_every = f.audit_every;
  o.select_mode = select_mode(f.select);
  o.seed = f.seed;
  std::vector<std::future<RunResult>> jobs;
  for (const std::string& name : impls) {
    const HeapKind k = heap_kind(name);
    jobs.push_back(std::async(std::launch::async, [&trace, k, o] { return run_trace(trace, k, o); }));
  }
  std::vector<RunResult> results;
  for (auto& j : jobs) results.push_back(j.get());

  bool ok = true;
  for (std::size_t i = 0; i < results.size(); ++i) {
    const RunResult& r = results[i];
    std::cout << impls[i] << ": " << (r.ok ? "ok" : "FAIL " + r.failure) << " outputs=" << r.outputs.size()
              << " touches=" << r.total.touches() << '\n';
    ok = ok && r.ok;
    if (i > 0 && r.outputs != results[0].outputs) {
      std::size_t at = 0;
      while (at < r.outputs.size() && at < results[0].outputs.size() && r.outputs[at] == results[0].outputs[at]) ++at;
      std::cout << "  delete_min sequence differs from " << impls[0] << " at output " << at << '\n';
      ok = false;
    }
  }
  std::cout << (ok ? "PASS" : "FAIL") << '\n';
  return ok ? 0 : 1;
}

int do_report(const std::vector<std::string>& paths, const std::string& json_out) {
  std::vector<std::pair<std::string, CostFile>> files;
  for (const std::string& p : paths) {
    std::ifstream in(p);
    if (!in) throw std::runtime_error("cannot open cost file " + p);
    files.emplace_back(p, read_costs(in));
  }
  const Report report = build_report(files);
  std::cout << render_text(report);
  if (!json_out.empty()) {
    std::ofstream out(json_out);
    out << to_json(report).dump(2) << '\n';
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"partition heap workloads, replay and cost reports"};
  app.require_subcommand(1);

  std::string pattern = "random", out;
  std::size_t ops = 1000;
  std::uint64_t gen_seed = 1;
  auto* gen = app.add_subcommand("gen", "generate a trace");
  gen->add_option("pattern", pattern, "random|sorted|reverse|dijkstra-like|sawtooth|adversarial-dk|decrease-all");
  gen->add_option("--ops,-n", ops, "number of operations");
  gen->add_option("--seed", gen_seed, "generator seed");
  gen->add_option("--out,-o", out, "output file (default stdout)");

  RunFlags flags;
  std::string trace_path;
  auto add_common = [&](CLI::App* sub) {
    sub->add_option("trace", trace_path, "trace file, or - for stdin")->required();
    sub->add_option("--seed", flags.seed, "seed for randomized selection");
    sub->add_option("--audit-every", flags.audit_every, "audit after every k-th op (0 = never)");
    sub->add_flag("--oracle", flags.oracle, "replay against the reference heap in lockstep");
    sub->add_option("--select", flags.select, "det|rand");
  };
  auto* run = app.add_subcommand("run", "replay a trace on one implementation");
  add_common(run);
  run->add_option("--impl", flags.impl, "lp|fhtng|exp|oracle");
  run->add_flag("--phi", flags.phi, "record the potential ledger and check the amortization bounds");
  run->add_option("--costs", flags.costs, "write per-op costs CSV here");

  std::vector<std::string> impls = {"lp", "fhtng", "exp"};
  auto* compare = app.add_subcommand("compare", "replay a trace on several implementations and compare outputs");
  add_common(compare);
  compare->add_option("--impl", impls, "implementations to compare")->delimiter(',');

  std::vector<std::string> cost_files;
  std::string json_out;
  auto* report = app.add_subcommand("report", "summarize cost files");
  report->add_option("files", cost_files, "cost CSV files")->required();
  report->add_option("--json", json_out, "also write a JSON summary");

  CLI11_PARSE(app, argc, argv);
  try {
    if (*gen) return do_gen(pattern, ops, gen_seed, out);
    if (*run) return do_run(trace_path, flags);
    if (*compare) return do_compare(trace_path, impls, flags);
    if (*report) return do_report(cost_files, json_out);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 0;
}
