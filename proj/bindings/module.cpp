// Python bindings for the 2-Ramsey certificate toolkit.  Arbitrary-precision
// integers cross the boundary as native Python ints (via decimal strings), so
// no Python-side GMP dependency is needed.

#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>
#include <utility>
#include <vector>

#include "ramseycert/colouring.hpp"
#include "ramseycert/construct.hpp"
#include "ramseycert/poly.hpp"

namespace py = pybind11;

namespace pybind11 {
namespace detail {

// mpz_class <-> Python int.
template <>
struct type_caster<mpz_class> {
 public:
  PYBIND11_TYPE_CASTER(mpz_class, const_name("int"));

  bool load(handle src, bool) {
    if (!PyLong_Check(src.ptr())) return false;
    PyObject* repr = PyObject_Str(src.ptr());
    if (!repr) {
      PyErr_Clear();
      return false;
    }
    const char* text = PyUnicode_AsUTF8(repr);
    if (!text) {
      Py_DECREF(repr);
      PyErr_Clear();
      return false;
    }
    try {
      value = mpz_class(text);
    } catch (const std::invalid_argument&) {
      Py_DECREF(repr);
      return false;
    }
    Py_DECREF(repr);
    return true;
  }

  static handle cast(const mpz_class& src, return_value_policy, handle) {
    return PyLong_FromString(src.get_str().c_str(), nullptr, 10);
  }
};

}  // namespace detail
}  // namespace pybind11

namespace {

using ramsey::AvoidanceVerdict;
using ramsey::Certificate;
using ramsey::ConditionEntry;
using ramsey::ConditionReport;
using ramsey::ConditionStatus;
using ramsey::Congruence;
using ramsey::ConstructionResult;
using ramsey::EquationSpec;
using ramsey::Int;
using ramsey::IntPolynomial;
using ramsey::MonoSolution;
using ramsey::PeriodicColouring;
using ramsey::ResidueTriple;
using ramsey::ScaledConstruction;
using ramsey::ScalingStep;
using ramsey::TableColouring;
using ramsey::Triple;
using ramsey::Witness;

std::vector<Int> coefficients_list(const IntPolynomial& p) {
  return p.coefficients();
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() =
      "2-Ramsey certificates for a*x + b*y = p(z): exact arithmetic, "
      "certificate construction/verification and periodic colouring tools";

  // ---- exceptions ---------------------------------------------------------
  auto base = py::register_exception<ramsey::Error>(m, "Error", PyExc_RuntimeError);
  auto precondition =
      py::register_exception<ramsey::PreconditionError>(m, "PreconditionError",
                                                        base.ptr());
  py::register_exception<ramsey::InconsistentSystemError>(
      m, "InconsistentSystemError", precondition.ptr());
  py::register_exception<ramsey::BudgetError>(m, "BudgetError", base.ptr());
  py::register_exception<ramsey::HypothesisError>(m, "HypothesisError", base.ptr());
  py::register_exception<ramsey::ParseError>(m, "ParseError", base.ptr());
  py::register_exception<ramsey::ThresholdError>(m, "ThresholdError", base.ptr());

  // ---- exact arithmetic ---------------------------------------------------
  m.def("ext_gcd",
        [](const Int& a, const Int& b) {
          auto r = ramsey::ext_gcd(a, b);
          return py::make_tuple(r.g, r.r, r.s);
        },
        py::arg("a"), py::arg("b"),
        "(g, r, s) with g = gcd(a, b) and r*a + s*b = g");
  m.def("bezout_bounded",
        [](const Int& a, const Int& b) {
          auto r = ramsey::bezout_bounded(a, b);
          return py::make_tuple(r.r, r.s);
        },
        py::arg("a"), py::arg("b"),
        "(r, s) with r*a + s*b = 1, |r| <= b, |s| <= a; requires gcd(a,b) = 1");
  m.def("mod_inverse", &ramsey::mod_inverse, py::arg("a"), py::arg("m"));
  m.def("crt",
        [](const std::vector<std::pair<Int, Int>>& system) {
          std::vector<Congruence> congruences;
          congruences.reserve(system.size());
          for (const auto& [r, mod] : system) congruences.push_back({r, mod});
          auto result = ramsey::crt(congruences);
          return py::make_tuple(result.x, result.modulus);
        },
        py::arg("congruences"),
        "simultaneous solution (x, M) of [(residue, modulus), ...]; moduli "
        "need not be coprime");
  m.def("p_adic_valuation", &ramsey::p_adic_valuation, py::arg("q"), py::arg("n"));
  m.def("factorize",
        [](const Int& n, std::uint64_t budget) {
          return ramsey::factorize(n, budget).factors;
        },
        py::arg("n"), py::arg("budget") = ramsey::kDefaultFactorBudget,
        "[(prime, exponent), ...] ascending");
  m.def("is_prime",
        [](const Int& n) { return ramsey::is_prime(n); }, py::arg("n"));
  m.def("radical",
        [](const Int& n) { return ramsey::radical(n); }, py::arg("n"));

  // ---- polynomials and equations -----------------------------------------
  py::class_<IntPolynomial>(m, "IntPolynomial")
      .def(py::init([](const std::string& text) {
             return IntPolynomial::parse(text);
           }),
           py::arg("text"),
           "parse \"2,3,1\" (coefficients low-to-high) or \"z^2+3*z+2\"")
      .def(py::init([](const std::vector<Int>& coeffs) {
             return IntPolynomial(coeffs);
           }),
           py::arg("coefficients"))
      .def_static("monomial", &IntPolynomial::monomial, py::arg("c"), py::arg("e"))
      .def_property_readonly("coefficients", &coefficients_list)
      .def("coefficient", &IntPolynomial::coefficient, py::arg("i"))
      .def_property_readonly("degree", &IntPolynomial::degree)
      .def_property_readonly("leading_coefficient",
                             &IntPolynomial::leading_coefficient)
      .def("__call__", &IntPolynomial::operator(), py::arg("x"))
      .def("eval_mod", &IntPolynomial::eval_mod, py::arg("x"), py::arg("m"))
      .def("coefficient_string", &IntPolynomial::coefficient_string)
      .def("pretty", &IntPolynomial::pretty)
      .def("__eq__",
           [](const IntPolynomial& p, const IntPolynomial& q) { return p == q; })
      .def("__repr__", [](const IntPolynomial& p) {
        return "IntPolynomial(\"" + p.coefficient_string() + "\")";
      });

  py::class_<EquationSpec>(m, "EquationSpec")
      .def(py::init<Int, Int, IntPolynomial>(), py::arg("a"), py::arg("b"),
           py::arg("p"))
      .def_readonly("a", &EquationSpec::a)
      .def_readonly("b", &EquationSpec::b)
      .def_readonly("p", &EquationSpec::p)
      .def("__repr__", [](const EquationSpec& eq) {
        return "EquationSpec(" + ramsey::to_string(eq.a) + ", " +
               ramsey::to_string(eq.b) + ", \"" + eq.p.coefficient_string() +
               "\")";
      });

  py::class_<Triple>(m, "Triple")
      .def(py::init<Int, Int, Int>(), py::arg("x"), py::arg("y"), py::arg("z"))
      .def_readonly("x", &Triple::x)
      .def_readonly("y", &Triple::y)
      .def_readonly("z", &Triple::z)
      .def("__eq__", [](const Triple& a, const Triple& b) { return a == b; })
      .def("__iter__",
           [](const Triple& t) {
             return py::iter(py::make_tuple(t.x, t.y, t.z));
           })
      .def("__repr__", [](const Triple& t) {
        return "Triple(" + ramsey::to_string(t.x) + ", " + ramsey::to_string(t.y) +
               ", " + ramsey::to_string(t.z) + ")";
      });

  m.def("difference_quotient", &ramsey::difference_quotient, py::arg("eq"),
        py::arg("d"), py::arg("k"), "(p(k+d) - p(k)) / a, exact");
  m.def("scale_reduce", &ramsey::scale_reduce, py::arg("a"), py::arg("b"),
        py::arg("c"), py::arg("p"),
        "reduce (ca)x + (cb)y = p(z) to (a, b, p(cz)/c^2)");
  m.def("lift_scaled_solution", &ramsey::lift_scaled_solution, py::arg("c"),
        py::arg("sol"));

  // ---- certificates -------------------------------------------------------
  py::class_<Certificate>(m, "Certificate")
      .def(py::init<const Int&, const Int&, const Int&, const Int&>(),
           py::arg("d"), py::arg("u"), py::arg("t"), py::arg("v"),
           "t and v are normalized into [0, d) and [0, u)")
      .def_readonly("d", &Certificate::d)
      .def_readonly("u", &Certificate::u)
      .def_readonly("t", &Certificate::t)
      .def_readonly("v", &Certificate::v)
      .def("__repr__", [](const Certificate& c) {
        return "Certificate(" + ramsey::to_string(c.d) + ", " +
               ramsey::to_string(c.u) + ", " + ramsey::to_string(c.t) + ", " +
               ramsey::to_string(c.v) + ")";
      });

  py::class_<Witness>(m, "Witness")
      .def_readonly("k", &Witness::k)
      .def_readonly("q", &Witness::q)
      .def_readonly("j", &Witness::j)
      .def("__repr__", [](const Witness& w) {
        std::string out = "Witness(";
        bool first = true;
        auto add = [&](const char* name, const std::optional<Int>& v) {
          if (!v) return;
          if (!first) out += ", ";
          out += std::string(name) + "=" + ramsey::to_string(*v);
          first = false;
        };
        add("k", w.k);
        add("q", w.q);
        add("j", w.j);
        return out + ")";
      });

  py::class_<ConditionEntry>(m, "ConditionEntry")
      .def_readonly("index", &ConditionEntry::index)
      .def_property_readonly(
          "passed",
          [](const ConditionEntry& e) { return e.status == ConditionStatus::pass; })
      .def_readonly("witnesses", &ConditionEntry::witnesses);

  py::class_<ConditionReport>(m, "ConditionReport")
      .def_readonly("overall", &ConditionReport::overall)
      .def_property_readonly("conditions",
                             [](const ConditionReport& r) {
                               return std::vector<ConditionEntry>(
                                   r.conditions.begin(), r.conditions.end());
                             })
      .def("condition", &ConditionReport::condition, py::arg("index"),
           py::return_value_policy::copy)
      .def("__bool__", [](const ConditionReport& r) { return r.overall; });

  m.def("verify_certificate", &ramsey::verify_certificate, py::arg("eq"),
        py::arg("certificate"),
        "exact decision of all six certificate conditions");
  m.def("unit_coeff_criterion", &ramsey::unit_coeff_criterion, py::arg("p"),
        "x + y = p(z) has the Ramsey property iff p(1)*p(2) is even");

  // ---- constructions ------------------------------------------------------
  py::class_<ConstructionResult>(m, "ConstructionResult")
      .def_readonly("equation", &ConstructionResult::equation)
      .def_readonly("certificate", &ConstructionResult::certificate)
      .def_readonly("swapped", &ConstructionResult::swapped)
      .def_readonly("method", &ConstructionResult::method);

  py::class_<ScalingStep>(m, "ScalingStep")
      .def_readonly("factor", &ScalingStep::factor)
      .def_readonly("original", &ScalingStep::original)
      .def_readonly("reduced", &ScalingStep::reduced);

  py::class_<ScaledConstruction>(m, "ScaledConstruction")
      .def_readonly("chain", &ScaledConstruction::chain)
      .def_readonly("result", &ScaledConstruction::result);

  m.def("construct_general", &ramsey::construct_general, py::arg("a"),
        py::arg("b"), py::arg("p"),
        py::arg("factor_budget") = ramsey::kDefaultFactorBudget);
  m.def("construct_power", &ramsey::construct_power, py::arg("a"), py::arg("n"),
        py::arg("alpha_prime_override") = std::nullopt,
        py::arg("factor_budget") = ramsey::kDefaultFactorBudget);
  m.def("construct_czp", &ramsey::construct_czp, py::arg("a"), py::arg("b"),
        py::arg("c"), py::arg("q"),
        py::arg("scan_budget") = ramsey::kDefaultScanBudget);
  m.def("construct_cz2", &ramsey::construct_cz2, py::arg("a"), py::arg("b"),
        py::arg("c"), py::arg("scan_budget") = ramsey::kDefaultScanBudget);
  m.def("construct_scaled_cz2", &ramsey::construct_scaled_cz2, py::arg("a"),
        py::arg("b"), py::arg("c"),
        py::arg("scan_budget") = ramsey::kDefaultScanBudget);
  m.def("lift_through_chain", &ramsey::lift_through_chain, py::arg("chain"),
        py::arg("sol"));
  m.def("construct_solution_in_class", &ramsey::construct_solution_in_class,
        py::arg("eq"), py::arg("d"), py::arg("t"), py::arg("K"));
  m.def("find_value_in_gap", &ramsey::find_value_in_gap, py::arg("p"),
        py::arg("d"), py::arg("t"), py::arg("delta_num"), py::arg("delta_den"),
        py::arg("x"));
  m.def("resclass_partner", &ramsey::resclass_partner, py::arg("u"),
        py::arg("m_prime"), py::arg("a1"), py::arg("a2"), py::arg("C"),
        py::arg("v"), py::arg("gamma1"));

  // ---- colourings ---------------------------------------------------------
  py::class_<PeriodicColouring>(m, "PeriodicColouring")
      .def(py::init<long, std::vector<int>>(), py::arg("modulus"),
           py::arg("signs"))
      .def_static("from_string", &PeriodicColouring::from_string,
                  py::arg("modulus"), py::arg("signs"))
      .def_readonly("modulus", &PeriodicColouring::modulus)
      .def_readonly("signs", &PeriodicColouring::signs)
      .def("sign_of", &PeriodicColouring::sign_of, py::arg("n"))
      .def("sign_string", &PeriodicColouring::sign_string)
      .def("__eq__",
           [](const PeriodicColouring& a, const PeriodicColouring& b) {
             return a == b;
           })
      .def("__repr__", [](const PeriodicColouring& c) {
        return "PeriodicColouring(" + std::to_string(c.modulus) + ", \"" +
               c.sign_string() + "\")";
      });

  py::class_<TableColouring>(m, "TableColouring")
      .def(py::init([](const std::vector<int>& signs) {
             return TableColouring{signs};
           }),
           py::arg("signs"))
      .def_readonly("signs", &TableColouring::signs)
      .def("sign_of", &TableColouring::sign_of, py::arg("n"));

  m.def("builtin_parity", &ramsey::builtin_parity);
  m.def("builtin_example2", &ramsey::builtin_example2, py::arg("q"), py::arg("n"));
  m.def("builtin_example3", &ramsey::builtin_example3);
  m.def("builtin_const", &ramsey::builtin_const);
  m.def("builtin_colouring", &ramsey::builtin_colouring, py::arg("name"),
        "\"parity\", \"example2:q,n\", \"example3\" or \"const\"");
  m.def("load_periodic_colouring", &ramsey::load_periodic_colouring,
        py::arg("path"));
  m.def("load_table_colouring", &ramsey::load_table_colouring, py::arg("path"));

  py::class_<MonoSolution>(m, "MonoSolution")
      .def_readonly("x", &MonoSolution::x)
      .def_readonly("y", &MonoSolution::y)
      .def_readonly("z", &MonoSolution::z)
      .def_readonly("colour", &MonoSolution::colour)
      .def("__repr__", [](const MonoSolution& s) {
        return "MonoSolution(" + ramsey::to_string(s.x) + ", " +
               ramsey::to_string(s.y) + ", " + ramsey::to_string(s.z) + ", " +
               (s.colour == 1 ? "+1" : "-1") + ")";
      });

  py::class_<ResidueTriple>(m, "ResidueTriple")
      .def(py::init<Int, Int, Int>(), py::arg("x"), py::arg("y"), py::arg("z"))
      .def_readonly("x", &ResidueTriple::x)
      .def_readonly("y", &ResidueTriple::y)
      .def_readonly("z", &ResidueTriple::z);

  py::class_<ramsey::Violation>(m, "Violation")
      .def_readonly("triple", &ramsey::Violation::triple)
      .def_readonly("colour", &ramsey::Violation::colour)
      .def_readonly("lift", &ramsey::Violation::lift);

  py::class_<AvoidanceVerdict>(m, "AvoidanceVerdict")
      .def_readonly("avoids", &AvoidanceVerdict::avoids)
      .def_readonly("violations", &AvoidanceVerdict::violations)
      .def("__bool__", [](const AvoidanceVerdict& v) { return v.avoids; });

  m.def("enumerate_mono_solutions",
        [](const EquationSpec& eq, const std::function<int(const Int&)>& colour,
           const Int& N) { return ramsey::enumerate_mono_solutions(eq, colour, N); },
        py::arg("eq"), py::arg("colour"), py::arg("N"),
        "all monochromatic solutions with x, y, z in [1, N], ordered by (z, x)");
  m.def("lift_residue_triple", &ramsey::lift_residue_triple, py::arg("eq"),
        py::arg("m"), py::arg("triple"), py::arg("K") = Int(1),
        py::arg("budget") = ramsey::kDefaultLiftBudget);
  m.def("check_periodic_avoidance", &ramsey::check_periodic_avoidance,
        py::arg("eq"), py::arg("colouring"),
        py::arg("lift_budget") = ramsey::kDefaultLiftBudget);
  m.def("search_avoiding_colouring", &ramsey::search_avoiding_colouring,
        py::arg("eq"), py::arg("m"),
        py::arg("ceiling") = ramsey::kDefaultSearchCeiling);

  m.attr("__version__") = RAMSEYCERT_VERSION;
}
