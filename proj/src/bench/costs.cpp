#include "partheap/costs.hpp"

#include <istream>
#include <ostream>
#include <sstream>
#include <string_view>

#include "partheap/errors.hpp"

namespace partheap {
namespace {

[[noreturn]] void malformed(std::size_t line, const std::string& why) {
  throw HeapError(ErrorCode::MalformedTrace, "costs line " + std::to_string(line) + ": " + why);
}

TraceOp::Kind parse_kind(std::string_view name, std::size_t line) {
  for (auto k : {TraceOp::Kind::Insert, TraceOp::Kind::DeleteMin, TraceOp::Kind::DecreaseKey}) {
    if (op_name(k) == name) return k;
  }
  malformed(line, "unknown op_kind '" + std::string(name) + "'");
}

}  // namespace

std::string CostFile::meta_or(const std::string& key, const std::string& fallback) const {
  auto it = meta.find(key);
  return it == meta.end() ? fallback : it->second;
}

void write_costs(std::ostream& out, const CostFile& file) {
  out << '#';
  for (const auto& [k, v] : file.meta) out << ' ' << k << '=' << v;
  out << '\n' << kCostsHeader << '\n';
  for (const CostRow& r : file.rows) {
    out << r.op_index << ',' << op_name(r.op_kind) << ',' << r.comparisons << ',' << r.node_moves << ','
        << r.list_links << ',' << r.selection_elements << ',' << r.phi_before << ',' << r.phi_after << '\n';
  }
}

CostFile read_costs(std::istream& in) {
  CostFile file;
  std::string line;
  std::size_t lineno = 0;
  bool header_seen = false;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    if (line[0] == '#') {
      std::istringstream words(line.substr(1));
      std::string word;
      while (words >> word) {
        const auto eq = word.find('=');
        if (eq != std::string::npos) file.meta[word.substr(0, eq)] = word.substr(eq + 1);
      }
      continue;
    }
    if (!header_seen) {
      if (line != kCostsHeader) malformed(lineno, "expected header");
      header_seen = true;
      continue;
    }
    std::istringstream fields(line);
    std::string cell[8];
    for (int i = 0; i < 8; ++i) {
      if (!std::getline(fields, cell[i], ',')) malformed(lineno, "expected 8 fields");
    }
    try {
      CostRow r;
      r.op_index = std::stoull(cell[0]);
      r.op_kind = parse_kind(cell[1], lineno);
      r.comparisons = std::stoull(cell[2]);
      r.node_moves = std::stoull(cell[3]);
      r.list_links = std::stoull(cell[4]);
      r.selection_elements = std::stoull(cell[5]);
      r.phi_before = std::stoll(cell[6]);
      r.phi_after = std::stoll(cell[7]);
      file.rows.push_back(r);
    } catch (const std::logic_error&) {
      malformed(lineno, "bad number");
    }
  }
  if (!header_seen) malformed(lineno, "missing header");
  return file;
}

CostFile to_cost_file(const RunResult& result, std::map<std::string, std::string> meta) {
  CostFile file;
  file.meta = std::move(meta);
  file.meta.emplace("impl", std::string(to_string(result.kind)));
  file.meta["peak_n"] = std::to_string(result.peak_n);
  file.meta["ops"] = std::to_string(result.costs.size());
  file.rows = result.costs;
  return file;
}

}  // namespace partheap
