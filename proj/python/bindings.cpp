#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "apcover/base4.hpp"
#include "apcover/covering_sequence.hpp"
#include "apcover/cli.hpp"
#include "apcover/density.hpp"
#include "apcover/integer_sequence.hpp"
#include "apcover/oracle.hpp"
#include "apcover/stanley.hpp"
#include "apcover/witness.hpp"

namespace py = pybind11;

// Python int <-> Natural through the decimal representation; negative values
// raise ValueError.
namespace pybind11::detail {
template <>
struct type_caster<apcover::Natural> {
  PYBIND11_TYPE_CASTER(apcover::Natural, const_name("int"));

  bool load(handle src, bool) {
    if (!src || PyBool_Check(src.ptr()) || !PyIndex_Check(src.ptr())) return false;
    auto index = reinterpret_steal<object>(PyNumber_Index(src.ptr()));
    if (!index) {
      PyErr_Clear();
      return false;
    }
    const std::string text = py::str(index);
    if (!text.empty() && text[0] == '-') throw py::value_error("expected a nonnegative integer");
    value = apcover::parse_natural(text);
    return true;
  }

  static handle cast(const apcover::Natural& n, return_value_policy, handle) {
    const std::string text = apcover::to_decimal(n);
    return PyLong_FromString(text.c_str(), nullptr, 10);
  }
};
}  // namespace pybind11::detail

namespace {

py::object to_fraction(const apcover::Rational& r) {
  static const py::object fraction = py::module_::import("fractions").attr("Fraction");
  return fraction(apcover::Natural(boost::multiprecision::numerator(r)),
                  apcover::Natural(boost::multiprecision::denominator(r)));
}

int ordering_to_int(std::strong_ordering o) {
  if (o == std::strong_ordering::less) return -1;
  if (o == std::strong_ordering::greater) return 1;
  return 0;
}

std::vector<unsigned> digit_values(const apcover::DigitVector& d) {
  std::vector<unsigned> out;
  out.reserve(d.size());
  for (auto x : d) out.push_back(x.value());
  return out;
}

std::string element_repr(const apcover::TElement& e) {
  std::ostringstream os;
  os << "TElement(level=" << e.level << ", u=" << e.u << ", v=[";
  for (std::size_t i = 0; i < e.v.size(); ++i) os << (i ? ", " : "") << int(e.v[i]);
  os << "])";
  return os.str();
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "AP_3-covering sequence A = union of T_l: membership, counting, witnesses, density";

  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const std::out_of_range& e) {
      PyErr_SetString(PyExc_ValueError, e.what());
    } catch (const std::domain_error& e) {
      PyErr_SetString(PyExc_ValueError, e.what());
    }
  });

  // base4
  m.def("to_digits", [](const apcover::Natural& n) { return digit_values(apcover::to_digits(n)); },
        py::arg("n"), "Little-endian base-4 digits of n.");
  m.def("from_digits",
        [](const std::vector<unsigned>& d) { return apcover::from_digits(std::span(d)); },
        py::arg("digits"));
  m.def("digit_at",
        [](const apcover::Natural& n, std::size_t i) { return apcover::digit_at(n, i).value(); },
        py::arg("n"), py::arg("i"));

  // covering_sequence
  py::class_<apcover::TElement>(m, "TElement")
      .def(py::init([](std::size_t level, unsigned u, std::vector<std::uint8_t> v) {
             apcover::TElement e{level, u, std::move(v)};
             apcover::check_element(e);
             return e;
           }),
           py::arg("level"), py::arg("u"), py::arg("v"))
      .def_readonly("level", &apcover::TElement::level)
      .def_readonly("u", &apcover::TElement::u)
      .def_property_readonly("v",
                             [](const apcover::TElement& e) {
                               return std::vector<unsigned>(e.v.begin(), e.v.end());
                             })
      .def("__eq__", [](const apcover::TElement& a, const apcover::TElement& b) { return a == b; })
      .def("__repr__", &element_repr);

  m.def("encode", &apcover::encode, py::arg("element"));
  m.def("decompose", &apcover::decompose, py::arg("n"));
  m.def("member", &apcover::member, py::arg("n"));
  m.def("count_leq", &apcover::count_leq, py::arg("n"), "A(n), the number of elements <= n.");
  m.def("element_at",
        [](const apcover::Natural& j) { return apcover::element_at(apcover::Rank(j)); },
        py::arg("j"), "The j-th smallest element (1-based).");
  m.def("level_min", &apcover::level_min, py::arg("level"));
  m.def("level_max", &apcover::level_max, py::arg("level"));

  py::class_<apcover::ElementRange>(m, "ElementRange")
      .def(
          "__iter__",
          [](const apcover::ElementRange& r) {
            return py::make_iterator(r.begin(), r.end());
          },
          py::keep_alive<0, 1>());
  m.def("iter_range", &apcover::iter_range, py::arg("lo"), py::arg("hi"));

  // witness
  py::class_<apcover::Witness>(m, "Witness")
      .def(py::init([](apcover::Natural a, apcover::Natural b, apcover::Natural n,
                       std::size_t level, unsigned m) {
             return apcover::Witness{std::move(a), std::move(b), std::move(n), level, m};
           }),
           py::arg("a"), py::arg("b"), py::arg("n"), py::arg("level"), py::arg("m"))
      .def_readonly("a", &apcover::Witness::a)
      .def_readonly("b", &apcover::Witness::b)
      .def_readonly("n", &apcover::Witness::n)
      .def_readonly("level", &apcover::Witness::level)
      .def_readonly("m", &apcover::Witness::m)
      .def("__repr__", [](const apcover::Witness& w) {
        return "Witness(a=" + apcover::to_decimal(w.a) + ", b=" + apcover::to_decimal(w.b) +
               ", n=" + apcover::to_decimal(w.n) + ")";
      });
  m.def("level_for", &apcover::level_for, py::arg("n"));
  m.def("find_witness", &apcover::find_witness, py::arg("n"));
  m.def("validate", &apcover::validate, py::arg("witness"));

  py::class_<apcover::SweepSummary>(m, "SweepSummary")
      .def_readonly("checked", &apcover::SweepSummary::checked)
      .def_readonly("failures", &apcover::SweepSummary::failures)
      .def_readonly("first_failure", &apcover::SweepSummary::first_failure);
  m.def("verify_covering", &apcover::verify_covering, py::arg("lo"), py::arg("hi"),
        py::arg("jobs") = 1, py::call_guard<py::gil_scoped_release>());

  // oracle
  py::class_<apcover::IntegerSequence>(m, "IntegerSequence")
      .def("contains", &apcover::IntegerSequence::contains, py::arg("n"))
      .def("__contains__", &apcover::IntegerSequence::contains)
      .def("upto", &apcover::IntegerSequence::upto, py::arg("bound"));
  py::class_<apcover::CoveringSequence, apcover::IntegerSequence>(m, "CoveringSequence").def(py::init<>());
  py::class_<apcover::ArithmeticSequence, apcover::IntegerSequence>(m, "ArithmeticSequence")
      .def(py::init<apcover::Natural, apcover::Natural>(), py::arg("offset"), py::arg("step"));
  py::class_<apcover::FiniteSequence, apcover::IntegerSequence>(m, "FiniteSequence")
      .def(py::init<std::vector<apcover::Natural>>(), py::arg("terms"));

  py::class_<apcover::CoverReport>(m, "CoverReport")
      .def_readonly("n", &apcover::CoverReport::n)
      .def_readonly("witness_terms", &apcover::CoverReport::witness_terms)
      .def_readonly("searched", &apcover::CoverReport::searched)
      .def_property_readonly("exempt", &apcover::CoverReport::exempt)
      .def_property_readonly("covered", &apcover::CoverReport::covered);

  m.def("covers", &apcover::covers, py::arg("seq"), py::arg("n"), py::arg("k") = 3);
  m.def("weak_covers", &apcover::weak_covers, py::arg("seq"), py::arg("n"), py::arg("k") = 3);
  m.def("min_threshold", &apcover::min_threshold, py::arg("seq"), py::arg("k"),
        py::arg("scan_to"));
  m.def(
      "has_k_ap",
      [](const std::vector<apcover::Natural>& s, unsigned k) { return apcover::has_k_ap(s, k); },
      py::arg("sorted_set"), py::arg("k"));

  // stanley
  m.def(
      "stanley_generate",
      [](std::vector<apcover::Natural> seed, unsigned k, std::size_t count) {
        return apcover::generate(apcover::StanleySeed(std::move(seed), k), count);
      },
      py::arg("seed"), py::arg("k"), py::arg("count"));
  m.def(
      "stanley_upto",
      [](std::vector<apcover::Natural> seed, unsigned k, const apcover::Natural& bound) {
        return apcover::generate_upto(apcover::StanleySeed(std::move(seed), k), bound);
      },
      py::arg("seed"), py::arg("k"), py::arg("bound"));
  m.def("greedy_next", &apcover::greedy_next, py::arg("produced"), py::arg("k"));

  // density
  py::class_<apcover::QPoint>(m, "QPoint")
      .def_readonly("u", &apcover::QPoint::u)
      .def_readonly("level", &apcover::QPoint::level)
      .def_readonly("value", &apcover::QPoint::value)
      .def_readonly("count", &apcover::QPoint::count);
  py::class_<apcover::DensitySample>(m, "DensitySample")
      .def_readonly("n", &apcover::DensitySample::n)
      .def_readonly("count", &apcover::DensitySample::count)
      .def_property_readonly("ratio_sq",
                             [](const apcover::DensitySample& s) { return to_fraction(s.ratio_sq); })
      .def_readonly("ratio", &apcover::DensitySample::ratio);

  m.def("q_point", &apcover::q_point, py::arg("u"), py::arg("level"));
  m.def("limit_ratio_sq", [](unsigned u) { return to_fraction(apcover::limit_ratio_sq(u)); },
        py::arg("u"), "Exact (u+4)^2 / (u+2/3) as a fractions.Fraction.");
  m.def(
      "compare_ratio",
      [](const apcover::Natural& a, const apcover::Natural& b) {
        return ordering_to_int(apcover::compare_ratio(a, b));
      },
      py::arg("n1"), py::arg("n2"), "-1, 0 or 1 as A(n1)/sqrt(n1) is <, == or > A(n2)/sqrt(n2).");
  m.def("sample_at", &apcover::sample_at, py::arg("n"));
  m.def(
      "profile",
      [](std::size_t max_level) {
        auto p = apcover::profile(max_level);
        return py::make_tuple(p.samples, p.running_argmax.back());
      },
      py::arg("max_level"), "(samples, index of the best sample).");
  m.def("argmax_upto", &apcover::argmax_upto, py::arg("bound"));
  m.def("convergence_gap", &apcover::convergence_gap, py::arg("level"));

  // cli
  m.def(
      "explore_problem1",
      [](unsigned k, std::vector<apcover::Natural> seed, const apcover::Natural& upto) {
        auto r = apcover::explore_problem1(k, std::move(seed), upto);
        py::dict d;
        d["k"] = r.k;
        d["seed"] = r.seed;
        d["upto"] = r.upto;
        d["stanley_terms"] = r.stanley_terms;
        d["uncovered"] = r.uncovered;
        return d;
      },
      py::arg("k"), py::arg("seed"), py::arg("upto"));
  m.def(
      "run_cli",
      [](const std::vector<std::string>& args) {
        std::ostringstream out, err;
        const int code = apcover::run(args, out, err);
        return py::make_tuple(code, out.str(), err.str());
      },
      py::arg("args"), "Run the command-line front end; returns (exit_code, stdout, stderr).");
}
