#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "descartes/certifier.hpp"
#include "descartes/error.hpp"
#include "descartes/lowdeg.hpp"
#include "descartes/realizer.hpp"

namespace py = pybind11;
using namespace descartes;

namespace {

py::object fraction(const Rational& q) {
  static py::object cls = py::module_::import("fractions").attr("Fraction");
  return cls(py::int_(py::str(q.get_num().get_str())), py::int_(py::str(q.get_den().get_str())));
}

Rational rational(const py::handle& h) {
  if (py::hasattr(h, "numerator") && py::hasattr(h, "denominator")) {
    Rational q(Integer(py::str(h.attr("numerator")).cast<std::string>()),
               Integer(py::str(h.attr("denominator")).cast<std::string>()));
    q.canonicalize();
    return q;
  }
  return Polynomial::parse(py::str(h).cast<std::string>()).coeff(0);
}

Polynomial polynomial(const py::sequence& coeffs) {
  std::vector<Rational> c;
  for (const auto& h : coeffs) c.push_back(rational(h));
  return Polynomial(c);
}

py::list coefficients(const Polynomial& p) {
  py::list out;
  for (const auto& c : p.coeffs()) out.append(fraction(c));
  return out;
}

py::dict profile_dict(const RootProfile& r) {
  py::dict d;
  d["pos"] = r.pos;
  d["neg"] = r.neg;
  d["pos_mult"] = r.pos_mult;
  d["neg_mult"] = r.neg_mult;
  d["zero_mult"] = r.zero_mult;
  d["complex_pairs"] = r.complex_pairs;
  d["all_simple"] = r.all_simple;
  return d;
}

Couple couple(const std::string& pattern, int pos, int neg) { return Couple::parse(pattern, pos, neg); }

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact realizability of sign patterns with prescribed root counts";

  auto base = py::register_exception<Error>(m, "Error");
  py::register_exception<Incompatible>(m, "Incompatible", base.ptr());
  py::register_exception<IsDPattern>(m, "IsDPattern", base.ptr());
  py::register_exception<OrderInfeasible>(m, "OrderInfeasible", base.ptr());
  py::register_exception<SearchExhausted>(m, "SearchExhausted", base.ptr());

  m.def("compatible_pairs", [](const std::string& pattern) {
    std::vector<std::pair<int, int>> out;
    for (const auto& p : compatible_pairs(SignPattern::parse(pattern))) out.emplace_back(p.pos, p.neg);
    return out;
  });
  m.def("canonical_order", [](const std::string& pattern) { return canonical_order(SignPattern::parse(pattern)).tokens(); });
  m.def("orbit", [](const std::string& pattern, int pos, int neg) {
    std::vector<std::tuple<std::string, int, int>> out;
    for (const auto& c : z2z2_orbit(couple(pattern, pos, neg))) out.emplace_back(c.pattern.str(), c.pair.pos, c.pair.neg);
    return out;
  });
  m.def("root_profile", [](const py::sequence& coeffs) { return profile_dict(root_profile(polynomial(coeffs))); },
        "Real-root census of the polynomial with ascending coefficients.");
  m.def("modulus_signature", [](const py::sequence& coeffs) { return modulus_signature(polynomial(coeffs)); });
  m.def("verify", [](const py::sequence& coeffs, const std::string& pattern, int pos, int neg) {
    return verify_realization(polynomial(coeffs), couple(pattern, pos, neg)).verified;
  });
  m.def(
      "realize",
      [](const std::string& pattern, int pos, int neg, std::int64_t budget, std::uint64_t seed) {
        SurveyOptions opts;
        opts.budget = budget;
        opts.seed = seed;
        const SurveyEntry e = resolve_couple(couple(pattern, pos, neg), opts);
        py::dict d;
        d["status"] = to_string(e.status);
        d["method"] = e.method;
        d["witness"] = e.witness ? py::object(coefficients(*e.witness)) : py::object(py::none());
        return d;
      },
      py::arg("pattern"), py::arg("pos"), py::arg("neg"), py::arg("budget") = 100000, py::arg("seed") = 0);
  m.def("realize_with_order", [](const std::string& pattern, const std::string& order) {
    return coefficients(realize_21_with_order(SignPattern::parse(pattern), parse_order21(order)));
  });
  m.def("realize_30", [](const std::string& pattern) { return coefficients(realize_30(SignPattern::parse(pattern))); });
  m.def("dbis_verdict", [](int a, int b, int c) { return dbis_certificate(a, b, c).verdict; });
  m.def("disconnect", [](int d) {
    const DisconnectWitness w = disconnect_pair(d);
    return std::make_pair(coefficients(w.q1), coefficients(w.q2));
  });
  m.def("d4_membership", [](const py::handle& a, const py::handle& b) { return d4_membership(rational(a), rational(b)); });
  m.def("d5_case", [](const py::handle& b, const py::handle& c) {
    return to_string(classify_case({rational(b), rational(c)}).cls);
  });
}
