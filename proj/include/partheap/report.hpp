#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "json.hpp"

#include "partheap/costs.hpp"

namespace partheap {

struct OpAggregate {
  std::size_t count = 0;
  double mean_comparisons = 0.0;
  std::uint64_t max_comparisons = 0;
  std::uint64_t touches = 0;  // comparisons + node_moves + selection_elements
};

struct FileSummary {
  std::string label;
  std::string impl;
  std::size_t n = 0;  // meta "n" when present, else peak_n
  std::uint64_t touches = 0;
  std::map<std::string, OpAggregate> per_op;  // keyed by op name
};

struct ScalingRow {
  std::string impl;
  std::size_t n = 0;
  std::uint64_t touches = 0;
  double per_n_lg_n = 0.0;
  double ratio = 0.0;  // per_n_lg_n relative to the smallest n of the same impl
};

struct Report {
  std::vector<FileSummary> files;
  std::vector<ScalingRow> scaling;
};

FileSummary summarize(const CostFile& file, std::string label);
Report build_report(const std::vector<std::pair<std::string, CostFile>>& files);

std::string render_text(const Report& report);
nlohmann::json to_json(const Report& report);

}  // namespace partheap
