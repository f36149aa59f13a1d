#include "partheap/report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

#include "partheap/errors.hpp"

namespace partheap {

FileSummary summarize(const CostFile& file, std::string label) {
  FileSummary s;
  s.label = std::move(label);
  s.impl = file.meta_or("impl", "?");
  s.n = std::stoull(file.meta_or("n", file.meta_or("peak_n", "0")));
  for (const CostRow& r : file.rows) {
    OpAggregate& agg = s.per_op[std::string(op_name(r.op_kind))];
    const std::uint64_t t = r.comparisons + r.node_moves + r.selection_elements;
    ++agg.count;
    agg.mean_comparisons += static_cast<double>(r.comparisons);
    agg.max_comparisons = std::max(agg.max_comparisons, r.comparisons);
    agg.touches += t;
    s.touches += t;
  }
  for (auto& [name, agg] : s.per_op) agg.mean_comparisons /= static_cast<double>(agg.count);
  return s;
}

Report build_report(const std::vector<std::pair<std::string, CostFile>>& files) {
  if (files.empty()) throw HeapError(ErrorCode::Precondition, "report needs at least one cost file");
  Report report;
  for (const auto& [label, file] : files) report.files.push_back(summarize(file, label));

  std::map<std::string, std::map<std::size_t, std::uint64_t>> by_impl;
  for (const FileSummary& s : report.files) {
    if (s.n >= 2) by_impl[s.impl][s.n] += s.touches;
  }
  for (const auto& [impl, points] : by_impl) {
    double base = 0.0;
    for (const auto& [n, touches] : points) {
      const double nd = static_cast<double>(n);
      const double v = static_cast<double>(touches) / (nd * std::log2(nd));
      if (base == 0.0) base = v;
      report.scaling.push_back({impl, n, touches, v, base > 0.0 ? v / base : 0.0});
    }
  }
  return report;
}

std::string render_text(const Report& report) {
  std::ostringstream out;
  char buf[256];
  for (const FileSummary& s : report.files) {
    out << s.label << "  impl=" << s.impl << " n=" << s.n << " touches=" << s.touches << '\n';
    std::snprintf(buf, sizeof buf, "  %-14s %10s %12s %10s %14s\n", "op", "count", "mean_cmp", "max_cmp", "touches");
    out << buf;
    for (const auto& [name, agg] : s.per_op) {
      std::snprintf(buf, sizeof buf, "  %-14s %10zu %12.3f %10llu %14llu\n", name.c_str(), agg.count,
                    agg.mean_comparisons, static_cast<unsigned long long>(agg.max_comparisons),
                    static_cast<unsigned long long>(agg.touches));
      out << buf;
    }
  }
  if (!report.scaling.empty()) {
    out << "\nscaling\n";
    std::snprintf(buf, sizeof buf, "  %-8s %10s %14s %12s %8s\n", "impl", "n", "touches", "t/(n lg n)", "ratio");
    out << buf;
    for (const ScalingRow& r : report.scaling) {
      std::snprintf(buf, sizeof buf, "  %-8s %10zu %14llu %12.4f %8.3f\n", r.impl.c_str(), r.n,
                    static_cast<unsigned long long>(r.touches), r.per_n_lg_n, r.ratio);
      out << buf;
    }
  }
  return out.str();
}

nlohmann::json to_json(const Report& report) {
  nlohmann::json j;
  j["files"] = nlohmann::json::array();
  for (const FileSummary& s : report.files) {
    nlohmann::json f = {{"label", s.label}, {"impl", s.impl}, {"n", s.n}, {"touches", s.touches}};
    for (const auto& [name, agg] : s.per_op) {
      f["ops"][name] = {{"count", agg.count},
                        {"mean_comparisons", agg.mean_comparisons},
                        {"max_comparisons", agg.max_comparisons},
                        {"touches", agg.touches}};
    }
    j["files"].push_back(std::move(f));
  }
  j["scaling"] = nlohmann::json::array();
  for (const ScalingRow& r : report.scaling) {
    j["scaling"].push_back(
        {{"impl", r.impl}, {"n", r.n}, {"touches", r.touches}, {"per_n_lg_n", r.per_n_lg_n}, {"ratio", r.ratio}});
  }
  return j;
}

}  // namespace partheap
