#include "partheap/trace.hpp"

#include <istream>
#include <ostream>
#include <sstream>

#include "partheap/errors.hpp"

namespace partheap {

std::string_view op_name(TraceOp::Kind kind) {
  switch (kind) {
    case TraceOp::Kind::Insert: return "insert";
    case TraceOp::Kind::DeleteMin: return "delete_min";
    case TraceOp::Kind::DecreaseKey: return "decrease_key";
  }
  return "?";
}

Trace parse_trace(std::istream& in) {
  Trace trace;
  std::string line;
  std::size_t lineno = 0;
  auto bad = [&](const std::string& why) {
    throw HeapError(ErrorCode::MalformedTrace, "line " + std::to_string(lineno) + ": " + why + ": '" + line + "'");
  };
  while (std::getline(in, line)) {
    ++lineno;
    std::istringstream ls(line);
    std::string tag;
    if (!(ls >> tag) || tag[0] == '#') continue;
    TraceOp op;
    if (tag == "i") {
      op.kind = TraceOp::Kind::Insert;
      if (!(ls >> op.key)) bad("insert needs a key");
    } else if (tag == "d") {
      op.kind = TraceOp::Kind::DeleteMin;
    } else if (tag == "k") {
      op.kind = TraceOp::Kind::DecreaseKey;
      if (!(ls >> op.target >> op.key)) bad("decrease_key needs a handle and a key");
    } else {
      bad("unknown operation");
    }
    std::string extra;
    if (ls >> extra) bad("trailing tokens");
    trace.push_back(op);
  }
  return trace;
}

Trace parse_trace_text(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_trace(in);
}

void write_trace(std::ostream& out, const Trace& trace) {
  for (const TraceOp& op : trace) {
    switch (op.kind) {
      case TraceOp::Kind::Insert: out << "i " << op.key << '\n'; break;
      case TraceOp::Kind::DeleteMin: out << "d\n"; break;
      case TraceOp::Kind::DecreaseKey: out << "k " << op.target << ' ' << op.key << '\n'; break;
    }
  }
}

std::string format_trace(const Trace& trace) {
  std::ostringstream os;
  write_trace(os, trace);
  return os.str();
}

}  // namespace partheap
