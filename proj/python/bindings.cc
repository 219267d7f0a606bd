#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <limits>
#include <sstream>

#include "zerosum/constants.h"
#include "zerosum/detect.h"
#include "zerosum/json_io.h"
#include "zerosum/reduction.h"
#include "zerosum/search.h"
#include "zerosum/sequence.h"

namespace py = pybind11;
using namespace zerosum;

namespace {

// Structured results cross the boundary as plain dicts via their JSON form.
py::object ToPython(const Json& j) {
  return py::module_::import("json").attr("loads")(j.dump());
}

py::int_ BigToPython(const BigInt& v) {
  std::ostringstream os;
  os << v;
  return py::int_(py::reinterpret_steal<py::object>(
      PyLong_FromString(os.str().c_str(), nullptr, 10)));
}

SearchOptions MakeSearchOptions(int64_t node_limit, double time_limit,
                                int threads, bool long_running) {
  SearchOptions o;
  o.node_limit = node_limit;
  o.time_limit_seconds = time_limit;
  o.threads = threads;
  o.allow_long_running = long_running;
  return o;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Zero-sum sequences over [-k, k].";

  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<ResourceLimitError>(m, "ResourceLimitError",
                                             PyExc_RuntimeError);

  py::class_<BoundedSequence>(m, "Sequence")
      .def(py::init([](int64_t bound, const std::map<int64_t, int64_t>& terms) {
             return BoundedSequence(bound, terms);
           }),
           py::arg("k"), py::arg("terms") = std::map<int64_t, int64_t>{})
      .def_static("parse", &ParseSequence, py::arg("text"),
                  py::arg("k") = std::nullopt)
      .def_static("repeat", &BoundedSequence::Repeat, py::arg("value"),
                  py::arg("count"), py::arg("k") = std::nullopt)
      .def_property_readonly("k", &BoundedSequence::bound)
      .def_property_readonly("terms", &BoundedSequence::terms)
      .def("__len__", &BoundedSequence::Length)
      .def("sum", &BoundedSequence::Sum)
      .def("multiplicity", &BoundedSequence::Multiplicity)
      .def("negated", &BoundedSequence::Negated)
      .def("__add__", &Concat)
      .def("__eq__", [](const BoundedSequence& a, const BoundedSequence& b) {
        return a == b;
      })
      .def("__str__", &FormatSequence)
      .def("__repr__", [](const BoundedSequence& s) {
        return "Sequence('" + FormatSequence(s) + "', k=" +
               std::to_string(s.bound()) + ")";
      })
      .def("to_dict", [](const BoundedSequence& s) { return ToPython(ToJson(s)); });

  m.def("find_zero_sum", [](const BoundedSequence& s, int64_t t) {
        auto w = FindZeroSumOfLength(s, t);
        return w ? std::optional<BoundedSequence>(w->subsequence) : std::nullopt;
      }, py::arg("seq"), py::arg("t"));
  m.def("is_t_avoiding",
        [](const BoundedSequence& s, int64_t t) { return IsTAvoiding(s, t); },
        py::arg("seq"), py::arg("t"));
  m.def("spectrum",
        [](const BoundedSequence& s) { return ComputeSpectrum(s).lengths; },
        py::arg("seq"));

  m.def("lcm_range", [](int64_t lo, int64_t hi) { return BigToPython(LcmRange(lo, hi)); },
        py::arg("lo"), py::arg("hi"));
  m.def("divides", [](int64_t k, int64_t t) { return ToPython(ToJson(DivisibilityCondition(k, t))); },
        py::arg("k"), py::arg("t"));
  m.def("constant", [](int64_t k, int64_t t) -> py::object {
        const ConstantValue v = SPrimeT(k, t);
        if (!v.is_finite()) return py::float_(std::numeric_limits<double>::infinity());
        return py::int_(v.value());
      }, py::arg("k"), py::arg("t"));
  m.def("bounds", [](int64_t k, int64_t t) {
        const ConstantBounds b = BoundsForConstant(k, t);
        return std::make_pair(b.lower, b.upper);
      }, py::arg("k"), py::arg("t"));
  m.def("frobenius", &FrobeniusNumber, py::arg("a"), py::arg("b"));
  m.def("lcm_growth", &LcmGrowthCheck, py::arg("k"));
  m.def("frequency_margins", [](int64_t t, int64_t n) { return ToPython(ToJson(FrequencyMarginCheck(t, n))); },
        py::arg("t") = 420, py::arg("n") = 29);
  m.def("greedy_counterexamples", [] {
        py::list out;
        for (const auto& row : GreedyCounterexampleSearch()) out.append(ToPython(ToJson(row)));
        return out;
      });
  m.def("max_minimal_length", &MinimalZeroSumMaxLength, py::arg("k"));

  m.def("longest_avoiding",
        [](int64_t k, int64_t t, int64_t ceiling, int64_t node_limit,
           double time_limit, int threads, bool long_running) {
          SearchResult r;
          {
            py::gil_scoped_release release;
            r = LongestAvoiding(k, t, ceiling,
                                MakeSearchOptions(node_limit, time_limit, threads,
                                                  long_running));
          }
          return ToPython(ToJson(r));
        },
        py::arg("k"), py::arg("t"), py::arg("ceiling"), py::arg("node_limit") = 0,
        py::arg("time_limit") = 0.0, py::arg("threads") = 1,
        py::arg("long_running") = false);
  m.def("extremal",
        [](int64_t k, int64_t t, bool long_running) {
          ExtremalReport r;
          {
            py::gil_scoped_release release;
            r = EnumerateExtremal(k, t, MakeSearchOptions(0, 0, 1, long_running));
          }
          return ToPython(ToJson(r));
        },
        py::arg("k"), py::arg("t"), py::arg("long_running") = false);
  m.def("family",
        [](int64_t k, int64_t t, int64_t min_length) {
          return ToPython(ToJson(FamilyGenerator(k, t, min_length)));
        },
        py::arg("k"), py::arg("t"), py::arg("min_length"));

  m.def("reduce",
        [](const BoundedSequence& s, int64_t alpha, int64_t beta, int64_t blocks) {
          const BlockX x = BuildBlock(alpha, beta, s.bound());
          return ToPython(ToJson(ReduceFixpoint(AppendBlocks(s, x, blocks), x)));
        },
        py::arg("seq"), py::arg("alpha"), py::arg("beta"), py::arg("blocks") = 0);
  m.def("strip",
        [](const BoundedSequence& s, int64_t alpha, int64_t beta) {
          const StripResult r = StripBlocks(s, BuildBlock(alpha, beta, s.bound()));
          return std::make_pair(r.stripped, r.count);
        },
        py::arg("seq"), py::arg("alpha"), py::arg("beta"));
  m.def("complete_block",
        [](const BoundedSequence& s, int64_t alpha, int64_t beta) {
          return CompleteBlock(s, BuildBlock(alpha, beta, s.bound()));
        },
        py::arg("seq"), py::arg("alpha"), py::arg("beta"));
  m.def("davenport",
        [](const std::vector<int64_t>& values, int64_t modulus) {
          const DavenportBlock b = DavenportSubset(values, modulus);
          return std::make_pair(b.begin, b.end);
        },
        py::arg("values"), py::arg("modulus"));
}
