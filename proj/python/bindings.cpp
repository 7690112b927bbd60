#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>
#include <variant>

#include "ptri/diophantine.hpp"
#include "ptri/elements.hpp"
#include "ptri/families.hpp"
#include "ptri/papercheck.hpp"
#include "ptri/triples.hpp"

namespace py = pybind11;

namespace pybind11::detail {

// ptri::Int <-> arbitrary-precision Python int, routed through decimal strings.
template <>
struct type_caster<ptri::Int> {
  PYBIND11_TYPE_CASTER(ptri::Int, const_name("int"));

  bool load(handle src, bool) {
    if (!PyLong_Check(src.ptr())) return false;
    object text = reinterpret_steal<object>(PyObject_Str(src.ptr()));
    if (!text) {
      PyErr_Clear();
      return false;
    }
    value = ptri::Int(std::string(PyUnicode_AsUTF8(text.ptr())));
    return true;
  }

  static handle cast(const ptri::Int& v, return_value_policy, handle) {
    return PyLong_FromString(v.str().c_str(), nullptr, 10);
  }
};

}  // namespace pybind11::detail

namespace {

using ptri::Int;
using ptri::Rational;
using ptri::Surd;

py::dict rational_dict(const Rational& r) {
  py::dict d;
  d["num"] = ptri::num(r);
  d["den"] = ptri::den(r);
  return d;
}

py::dict surd_dict(const Surd& v, unsigned digits) {
  py::dict d;
  d["num"] = ptri::num(v.coeff());
  d["den"] = ptri::den(v.coeff());
  d["radicand"] = v.radicand();
  d["decimal"] = v.decimal(digits);
  d["class"] = ptri::to_string(ptri::classify(v));
  return d;
}

py::dict triple_dict(const ptri::Triple& t) {
  py::dict d;
  d["alpha"] = t.alpha;
  d["beta"] = t.beta;
  d["gamma"] = t.gamma;
  return d;
}

py::dict params_dict(const ptri::TripleParams& p) {
  py::dict d;
  d["delta"] = p.delta;
  d["m"] = p.m;
  d["n"] = p.n;
  return d;
}

py::dict report_dict(const ptri::ElementReport& r, unsigned digits) {
  py::dict d;
  d["params"] = params_dict(r.params);
  d["triple"] = triple_dict(r.triple);
  d["s"] = rational_dict(r.s);
  d["area"] = rational_dict(r.area);
  for (std::size_t i = 0; i < ptri::kElementCount; ++i) {
    d[std::string(ptri::kElementNames[i]).c_str()] = surd_dict(r.values[i], digits);
  }
  return d;
}

py::dict member_dict(const ptri::FamilyMember& fm, const Int& delta) {
  py::dict d;
  d["k"] = fm.k;
  d["l"] = fm.l;
  d["m"] = fm.m;
  d["n"] = fm.n;
  d["root"] = fm.root;
  if (fm.t) {
    d["t"] = *fm.t;
  } else {
    d["t"] = py::none();
  }
  Rational value =
      fm.family <= 3 ? ptri::delta_beta_value(fm, delta) : ptri::d_beta_value(fm, delta);
  d["value"] = rational_dict(value);
  return d;
}

py::dict claim_dict(const ptri::ClaimOutcome& c) {
  py::dict d;
  d["claim"] = c.claim_id;
  d["status"] = ptri::to_string(c.status);
  d["claimed"] = c.claimed_value ? py::object(py::str(*c.claimed_value)) : py::object(py::none());
  d["normative"] =
      c.normative_value ? py::object(py::str(*c.normative_value)) : py::object(py::none());
  d["note"] = c.note;
  return d;
}

ptri::Vertex parse_vertex(const std::string& name) {
  if (name == "A") return ptri::Vertex::A;
  if (name == "B") return ptri::Vertex::B;
  if (name == "C") return ptri::Vertex::C;
  throw std::domain_error("vertex must be A, B or C");
}

}  // namespace

PYBIND11_MODULE(_ptri, mod) {
  mod.doc() = "Exact secondary elements of Pythagorean triangles";

  mod.def("gcd", &ptri::gcd, py::arg("a"), py::arg("b"));
  mod.def("isqrt", &ptri::isqrt, py::arg("n"));
  mod.def(
      "is_perfect_square",
      [](const Int& n) {
        auto [square, root] = ptri::is_perfect_square(n);
        return py::make_tuple(square, square ? py::object(py::cast(*root)) : py::none());
      },
      py::arg("n"));
  mod.def(
      "squarefree_decompose",
      [](const Int& n) {
        auto [s, f] = ptri::squarefree_decompose(n);
        return py::make_tuple(s, f);
      },
      py::arg("n"), "Returns (s, f) with n = s * f^2 and s square-free");
  mod.def(
      "sqrt_of_rational",
      [](const Int& num, const Int& den, unsigned digits) {
        return surd_dict(ptri::sqrt_of_rational(Rational(num, den)), digits);
      },
      py::arg("num"), py::arg("den") = 1, py::arg("digits") = 12);
  mod.def(
      "nth_power_decompose",
      [](const Int& a, const Int& b, const Int& c, const Int& d, unsigned n) {
        ptri::NthPowerDecomposition r = ptri::nth_power_decompose(a, b, c, d, n);
        return py::make_tuple(r.delta, r.c1, r.d1);
      },
      py::arg("a"), py::arg("b"), py::arg("c"), py::arg("d"), py::arg("n"));

  mod.def("validate_params", &ptri::validate_params, py::arg("delta"), py::arg("m"), py::arg("n"),
          "Violated generation conditions, empty when valid");
  mod.def(
      "params_valid",
      [](const Int& delta, const Int& m, const Int& n) {
        return ptri::params_valid({delta, m, n});
      },
      py::arg("delta"), py::arg("m"), py::arg("n"));
  mod.def(
      "generate",
      [](const Int& delta, const Int& m, const Int& n) {
        return triple_dict(ptri::generate({delta, m, n}));
      },
      py::arg("delta"), py::arg("m"), py::arg("n"));
  mod.def(
      "decompose",
      [](const Int& a, const Int& b, const Int& c) { return params_dict(ptri::decompose(a, b, c)); },
      py::arg("a"), py::arg("b"), py::arg("c"));
  mod.def("enumerate_params", &ptri::enumerate_params, py::arg("m_max"));

  mod.def(
      "elements",
      [](const Int& delta, const Int& m, const Int& n, unsigned digits) {
        return report_dict(ptri::secondary_elements({delta, m, n}), digits);
      },
      py::arg("delta"), py::arg("m"), py::arg("n"), py::arg("digits") = 12,
      "All seventeen secondary elements, from the general formulas");
  mod.def(
      "elements_from_triple",
      [](const Int& a, const Int& b, const Int& c, unsigned digits) {
        return report_dict(ptri::secondary_elements(ptri::decompose(a, b, c)), digits);
      },
      py::arg("a"), py::arg("b"), py::arg("c"), py::arg("digits") = 12);
  mod.def(
      "closed_forms",
      [](const Int& delta, const Int& m, const Int& n, unsigned digits) {
        return report_dict(ptri::closed_forms({delta, m, n}), digits);
      },
      py::arg("delta"), py::arg("m"), py::arg("n"), py::arg("digits") = 12,
      "The same elements from the corrected parameter closed forms");
  mod.def(
      "internal_bisector",
      [](const Int& a, const Int& b, const Int& c, const std::string& vertex, unsigned digits) {
        return surd_dict(ptri::internal_bisector({a, b, c}, parse_vertex(vertex)), digits);
      },
      py::arg("a"), py::arg("b"), py::arg("c"), py::arg("vertex"), py::arg("digits") = 12,
      "Internal bisector of a general integer triangle (sides opposite A, B, C)");
  mod.def(
      "external_bisector",
      [](const Int& a, const Int& b, const Int& c, const std::string& vertex, unsigned digits) {
        return surd_dict(ptri::external_bisector({a, b, c}, parse_vertex(vertex)), digits);
      },
      py::arg("a"), py::arg("b"), py::arg("c"), py::arg("vertex"), py::arg("digits") = 12);

  mod.def(
      "family_generate",
      [](int family, const Int& k, const Int& l, const Int& delta) {
        ptri::FamilyResult res = ptri::family_generate(family, k, l);
        py::dict d;
        d["family"] = family;
        if (const auto* mem = std::get_if<ptri::FamilyMember>(&res)) {
          d["accepted"] = true;
          d["member"] = member_dict(*mem, delta);
        } else {
          const auto& rej = std::get<ptri::FamilyRejection>(res);
          d["accepted"] = false;
          d["k"] = rej.k;
          d["l"] = rej.l;
          d["reasons"] = rej.reasons;
        }
        return d;
      },
      py::arg("family"), py::arg("k"), py::arg("l"), py::arg("delta") = 1);
  mod.def(
      "family_enumerate",
      [](int family, const Int& bound, const Int& delta) {
        ptri::FamilyEnumeration e = ptri::family_enumerate_full(family, bound);
        py::list members, rejections;
        for (const ptri::FamilyMember& fm : e.members) members.append(member_dict(fm, delta));
        for (const ptri::FamilyRejection& rej : e.rejections) {
          py::dict d;
          d["k"] = rej.k;
          d["l"] = rej.l;
          d["reasons"] = rej.reasons;
          rejections.append(d);
        }
        py::dict d;
        d["family"] = family;
        d["members"] = members;
        d["rejections"] = rejections;
        return d;
      },
      py::arg("family"), py::arg("bound"), py::arg("delta") = 1);

  mod.def(
      "search_quartic",
      [](const std::string& equation, const std::string& regime, const Int& bound) {
        ptri::QuarticId eq = equation == "A" ? ptri::QuarticId::A
                           : equation == "B" ? ptri::QuarticId::B
                                             : throw std::domain_error("equation must be A or B");
        ptri::Regime reg = regime == "mixed"        ? ptri::Regime::MixedParityCoprime
                           : regime == "both-odd"   ? ptri::Regime::BothOddCoprime
                           : regime == "unconstrained"
                               ? ptri::Regime::Unconstrained
                               : throw std::domain_error(
                                     "regime must be mixed, both-odd or unconstrained");
        py::list out;
        for (const ptri::QuarticSolution& s : ptri::search_quartic(eq, reg, bound)) {
          out.append(py::make_tuple(s.x, s.y, s.z));
        }
        return out;
      },
      py::arg("equation"), py::arg("regime"), py::arg("bound") = 300);
  mod.def(
      "median_radicand_scan",
      [](const Int& m_max, bool primitive_filter) {
        py::list out;
        for (const ptri::MedianSquareHit& hit : ptri::median_radicand_scan(m_max, primitive_filter)) {
          py::dict d;
          d["m"] = hit.m;
          d["n"] = hit.n;
          d["median"] = std::string(ptri::element_name(hit.id));
          d["radicand"] = hit.radicand;
          d["root"] = hit.root;
          out.append(d);
        }
        return out;
      },
      py::arg("m_max"), py::arg("primitive_filter") = true);

  mod.def(
      "verify_paper",
      [](const Int& survey_m) {
        std::vector<ptri::ClaimOutcome> claims = ptri::verify_all(survey_m);
        std::vector<std::string> diagnostics;
        bool matched = ptri::outcomes_match_expected(claims, &diagnostics);
        py::list list;
        for (const ptri::ClaimOutcome& c : claims) list.append(claim_dict(c));
        py::dict d;
        d["claims"] = list;
        d["expected_match"] = matched;
        d["diagnostics"] = diagnostics;
        return d;
      },
      py::arg("survey_m") = 50,
      "Grade every surveyed formula and worked example; expected_match reports "
      "agreement with the documented outcome set");
}
