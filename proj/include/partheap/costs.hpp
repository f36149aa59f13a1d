#pragma once

#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "partheap/runner.hpp"

namespace partheap {

// Per-op cost file. The first line is a metadata comment of the form
//   # impl=lp pattern=random seed=7 ops=100000 peak_n=4211
// followed by the CSV header and one row per operation.
struct CostFile {
  std::map<std::string, std::string> meta;
  std::vector<CostRow> rows;

  std::string meta_or(const std::string& key, const std::string& fallback) const;
};

inline constexpr const char* kCostsHeader =
    "op_index,op_kind,comparisons,node_moves,list_links,selection_elements,phi_before,phi_after";

void write_costs(std::ostream& out, const CostFile& file);
CostFile read_costs(std::istream& in);

CostFile to_cost_file(const RunResult& result, std::map<std::string, std::string> meta = {});

}  // namespace partheap
