#include "descartes/json_io.hpp"

namespace descartes {

Json to_json(const Rational& q) { return q.get_str(); }

Json to_json(const Polynomial& p) {
  Json coeffs = Json::array();
  for (const auto& c : p.coeffs()) coeffs.push_back(c.get_str());
  return Json{{"text", p.str()}, {"coeffs", coeffs}, {"degree", p.degree()}};
}

Json to_json(const Couple& c) {
  return Json{{"pattern", c.pattern.str()}, {"pos", c.pair.pos}, {"neg", c.pair.neg}};
}

Json to_json(const Interval& iv) {
  return Json{{"lo", iv.lo.get_str()}, {"hi", iv.hi.get_str()}, {"approx", iv.midpoint().get_d()}};
}

Json to_json(const RootProfile& r) {
  return Json{{"pos", r.pos},           {"neg", r.neg},
              {"pos_mult", r.pos_mult}, {"neg_mult", r.neg_mult},
              {"zero_mult", r.zero_mult}, {"complex_pairs", r.complex_pairs},
              {"all_simple", r.all_simple}};
}

Json to_json(const RealizationReport& r) {
  Json checks = Json::object();
  for (const auto& c : r.checks) checks[c.name] = c.passed;
  Json j{{"couple", to_json(r.couple)}, {"witness", to_json(r.witness)}, {"checks", checks}, {"verified", r.verified}};
  if (r.profile) j["profile"] = to_json(*r.profile);
  return j;
}

Json to_json(const DbisCertificate& c) {
  Json rows = Json::array();
  for (const auto& r : c.rows) {
    Json row{{"m", r.m}, {"u", r.u}, {"v", r.v}, {"w", r.w}, {"t", r.t}, {"passed", r.passed}};
    if (r.uses_monic_term) row["monic_term"] = r.monic_term;
    rows.push_back(row);
  }
  return Json{{"a", c.a},
              {"b", c.b},
              {"c", c.c},
              {"d", c.d},
              {"degrees", {c.deg_u, c.deg_v, c.deg_w, c.deg_t}},
              {"rows", rows},
              {"verdict", c.verdict}};
}

Json to_json(const SurveyEntry& e) {
  Json j{{"pattern", e.couple.pattern.str()},
         {"pos", e.couple.pair.pos},
         {"neg", e.couple.pair.neg},
         {"status", to_string(e.status)},
         {"method", e.method}};
  if (e.witness) j["witness"] = to_json(*e.witness);
  if (e.dbis) {
    Json cert = to_json(*e.dbis);
    cert["kind"] = "dbis";
    j["certificate"] = cert;
  } else if (e.certificate) {
    j["certificate"] = Json{{"kind", "pair_theorem"}, {"text", *e.certificate}};
  }
  return j;
}

Json to_json(const std::vector<SurveyEntry>& entries) {
  Json arr = Json::array();
  for (const auto& e : entries) arr.push_back(to_json(e));
  return arr;
}

Json to_json(const DisconnectWitness& w, bool q1_verified, bool q2_verified) {
  return Json{{"d", w.d},
              {"branch", to_string(w.branch)},
              {"t0_bracket", to_json(w.t0_bracket)},
              {"q1", to_json(w.q1)},
              {"q1_signature", modulus_signature(w.q1)},
              {"q1_verified", q1_verified},
              {"q2", to_json(w.q2)},
              {"q2_signature", modulus_signature(w.q2)},
              {"q2_verified", q2_verified}};
}

Json to_json(const ObstructionReport& r) {
  return Json{{"d", r.d}, {"even_degrees", r.even_degrees}, {"signs", r.signs}, {"holds", r.holds}};
}

Json to_json(const SignDeductionReport& r) {
  Json ded = Json::array();
  for (const auto& d : r.deductions) ded.push_back(Json{{"claim", d.name}, {"holds", d.holds}});
  return Json{{"quotient", to_json(r.quotient)},
              {"deductions", ded},
              {"quotient_negative_roots", r.quotient_negative_roots},
              {"full_pattern_checked", r.full_pattern_checked},
              {"all_hold", r.all_hold}};
}

Json to_json(const NamedPoint& p) {
  Json j{{"name", p.name}, {"printed", {p.printed_B, p.printed_C}}, {"method", p.method}};
  if (p.exact) {
    j["exact"] = {p.exact->B.get_str(), p.exact->C.get_str()};
  } else {
    j["B"] = to_json(p.B);
    j["C"] = to_json(p.C);
  }
  j["matches"] = p.matches;
  return j;
}

Json region_report(const RegionGrid& grid, const CaseIReport& case_i, const ConnectivityReport& conn,
                   const std::vector<NamedPoint>& points) {
  const auto& b = grid.bounds();
  Json counts = Json::object();
  for (auto c : {CellClass::case_ii, CellClass::case_i, CellClass::neither, CellClass::boundary})
    counts[to_string(c)] = grid.count(c);
  Json named = Json::array();
  for (const auto& p : points) named.push_back(to_json(p));
  return Json{{"bounds", {{"B", {b.b_lo.get_str(), b.b_hi.get_str()}}, {"C", {b.c_lo.get_str(), b.c_hi.get_str()}}}},
              {"resolution", grid.resolution()},
              {"counts", counts},
              {"components", conn.components},
              {"connected", conn.connected},
              {"insufficient_resolution", conn.insufficient_resolution},
              {"seeds_joined", conn.seeds_joined},
              {"case_i_empty", case_i.empty},
              {"case_i_diagnostic", case_i.diagnostic},
              {"named_points", named}};
}

}  // namespace descartes
