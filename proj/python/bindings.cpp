#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <memory>
#include <string>

#include "partheap/audit.hpp"
#include "partheap/errors.hpp"
#include "partheap/exp_heap.hpp"
#include "partheap/fhtng_heap.hpp"
#include "partheap/lemma_check.hpp"
#include "partheap/lp_heap.hpp"
#include "partheap/runner.hpp"
#include "partheap/trace.hpp"
#include "partheap/workload.hpp"

namespace py = pybind11;
using namespace partheap;

namespace {

SelectMode mode_of(const std::string& s) {
  if (s == "det") return SelectMode::Deterministic;
  if (s == "rand") return SelectMode::Randomized;
  throw py::value_error("select must be 'det' or 'rand'");
}

HeapKind kind_of(const std::string& s) {
  auto k = parse_heap_kind(s);
  if (!k) throw py::value_error("unknown heap '" + s + "'");
  return *k;
}

py::tuple audit_tuple(const AddressableHeap& h) {
  const AuditReport r = audit(h);
  return py::make_tuple(r.ok(), r.summary());
}

template <typename H>
void common(py::class_<H, AddressableHeap>& c) {
  c.def("audit", [](const H& h) { return audit_tuple(h); },
        "Full structural audit; returns (ok, summary).");
}

}  // namespace

PYBIND11_MODULE(_partheap, m) {
  m.doc() = "Partition-based addressable heaps";

  // Module-lifetime reference; the interpreter owns the type object.
  static PyObject* heap_error = py::exception<HeapError>(m, "HeapError", PyExc_RuntimeError).release().ptr();
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const HeapError& e) {
      const std::string msg = std::string(to_string(e.code())) + ": " + e.what();
      PyErr_SetString(heap_error, msg.c_str());
    }
  });

  py::class_<Handle>(m, "Handle")
      .def_readonly("index", &Handle::index)
      .def_readonly("generation", &Handle::generation)
      .def("__eq__", [](const Handle& a, const Handle& b) { return a == b; })
      .def("__hash__", [](const Handle& h) { return (std::size_t{h.generation} << 32) ^ h.index; })
      .def("__repr__", [](const Handle& h) {
        return "Handle(" + std::to_string(h.index) + ", " + std::to_string(h.generation) + ")";
      });

  py::class_<AddressableHeap>(m, "Heap")
      .def("insert", &AddressableHeap::insert, py::arg("key"))
      .def("delete_min", &AddressableHeap::delete_min)
      .def("decrease_key", &AddressableHeap::decrease_key, py::arg("handle"), py::arg("key"))
      .def("find_min", &AddressableHeap::find_min)
      .def("key_of", &AddressableHeap::key_of, py::arg("handle"))
      .def("__len__", &AddressableHeap::size)
      .def("__bool__", [](const AddressableHeap& h) { return !h.empty(); })
      .def_property_readonly("size", &AddressableHeap::size)
      .def("potential", [](const AddressableHeap& h) { return h.potential().parts; })
      .def("touches", [](const AddressableHeap& h) { return h.meter().touches(); })
      .def("digest", &AddressableHeap::digest);

  py::class_<LPHeap, AddressableHeap> lp(m, "LPHeap");
  lp.def(py::init([](const std::string& select, std::uint64_t seed, std::int64_t beta) {
           return std::make_unique<LPHeap>(LPConfig{mode_of(select), seed, beta});
         }),
         py::arg("select") = "det", py::arg("seed") = 0, py::arg("beta") = 4)
      .def("set_sizes", [](const LPHeap& h) {
        std::vector<std::size_t> out;
        for (std::size_t i = 0; i < h.set_count(); ++i) out.push_back(h.set(i).size());
        return out;
      });
  common(lp);

  py::class_<FHTNGHeap, AddressableHeap> fh(m, "FHTNGHeap");
  fh.def(py::init<>()).def("slot_sizes", [](const FHTNGHeap& h) {
    std::vector<std::pair<std::size_t, std::size_t>> out;
    for (std::size_t i = FHTNGHeap::kFirstSlot; i < h.slot_end(); ++i) {
      if (h.present(i)) out.emplace_back(i, h.slot_size(i));
    }
    return out;
  });
  common(fh);

  py::class_<ExpHeap, AddressableHeap> ex(m, "ExpHeap");
  ex.def(py::init([](const std::string& select, std::uint64_t seed) {
           return std::make_unique<ExpHeap>(mode_of(select), seed);
         }),
         py::arg("select") = "det", py::arg("seed") = 0)
      .def("level_sizes", [](const ExpHeap& h) {
        std::vector<std::size_t> out;
        for (std::size_t i = 1; i <= h.level_count(); ++i) out.push_back(h.level(i).size());
        return out;
      });
  common(ex);

  m.def(
      "generate_trace",
      [](const std::string& pattern, std::size_t ops, std::uint64_t seed) {
        auto p = parse_pattern(pattern);
        if (!p) throw py::value_error("unknown pattern '" + pattern + "'");
        return format_trace(generate(*p, ops, seed));
      },
      py::arg("pattern"), py::arg("ops"), py::arg("seed") = 0, "Generate a workload in the text trace format.");

  m.def(
      "run_trace",
      [](const std::string& text, const std::string& impl, bool oracle, std::size_t audit_every, bool phi,
         const std::string& select, std::uint64_t seed) {
        RunOptions o;
        o.oracle = oracle;
        o.audit_every = audit_every;
        o.record_ledger = phi;
        o.select_mode = mode_of(select);
        o.seed = seed;
        RunResult r;
        {
          const Trace t = parse_trace_text(text);
          py::gil_scoped_release release;
          r = run_trace(t, kind_of(impl), o);
        }
        py::dict out;
        out["ok"] = r.ok;
        out["failure"] = r.failure;
        out["failed_op"] = r.failed_op;
        out["outputs"] = r.outputs;
        out["peak_n"] = r.peak_n;
        out["touches"] = r.total.touches();
        out["seconds"] = r.seconds;
        if (phi) {
          const LemmaVerdict v = lemma_check(r.ledger);
          py::dict lemmas;
          for (const auto& [op, t] : v.per_op) lemmas[py::str(op)] = py::make_tuple(t.checked, t.skipped, t.failed);
          out["lemmas"] = lemmas;
          out["lemma_ok"] = v.ok();
        }
        return out;
      },
      py::arg("trace"), py::arg("impl") = "lp", py::arg("oracle") = true, py::arg("audit_every") = 0,
      py::arg("phi") = false, py::arg("select") = "det", py::arg("seed") = 0,
      "Replay a text trace on one implementation.");
}
