#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <map>

#include "descartes/certifier.hpp"
#include "descartes/error.hpp"
#include "descartes/json_io.hpp"
#include "descartes/lowdeg.hpp"
#include "descartes/realizer.hpp"

using namespace descartes;

namespace {

enum Exit { kOk = 0, kUsage = 1, kImpossible = 2, kUnresolved = 3 };

struct RunConfig {
  std::uint64_t seed = 0;
  std::int64_t budget = 100000;
  bool json = false;
  int resolution = 2000;
  int cap = 8;
};

int emit(const RunConfig& cfg, Json j, const std::string& text, int code) {
  if (cfg.json) {
    j["exit_code"] = code;
    std::cout << j.dump(2) << '\n';
  } else {
    std::cout << text;
  }
  return code;
}

Couple parse_couple(const std::string& pattern, int pos, int neg) {
  Couple c = Couple::parse(pattern, pos, neg);
  if (!compatible(c.pattern, c.pair)) throw Incompatible(c.str() + " is not compatible");
  return c;
}

std::string render_checks(const RealizationReport& r) {
  std::string s;
  for (const auto& c : r.checks) s += "  " + c.name + ": " + (c.passed ? "ok" : "FAILED") + "\n";
  return s;
}

std::string render_dbis(const DbisCertificate& c) {
  std::string s = "D(" + std::to_string(c.a) + "," + std::to_string(c.b) + "," + std::to_string(c.c) +
                  "), d = " + std::to_string(c.d) + ", degrees u,v,w,t = " + std::to_string(c.deg_u) + "," +
                  std::to_string(c.deg_v) + "," + std::to_string(c.deg_w) + "," + std::to_string(c.deg_t) + "\n";
  for (const auto& r : c.rows) {
    s += "m=" + std::to_string(r.m) + ": " + std::to_string(r.u) + "," + std::to_string(r.v) + "," +
         std::to_string(r.w) + "," + std::to_string(r.t);
    if (r.uses_monic_term) s += " monic=" + std::to_string(r.monic_term);
    s += r.passed ? " ok\n" : " FAILED\n";
  }
  s += std::string("verdict: ") + (c.verdict ? "not realizable" : "inconclusive") + "\n";
  return s;
}

int cmd_compat(const RunConfig& cfg, const std::string& pattern) {
  const SignPattern sp = SignPattern::parse(pattern);
  const auto cp = changes_preservations(sp);
  Json pairs = Json::array();
  std::string text = sp.str() + ": c = " + std::to_string(cp.changes) + ", p = " + std::to_string(cp.preservations) + "\n";
  for (const auto& pr : compatible_pairs(sp)) {
    pairs.push_back({pr.pos, pr.neg});
    text += "(" + std::to_string(pr.pos) + "," + std::to_string(pr.neg) + ")\n";
  }
  return emit(cfg,
              Json{{"command", "compat"}, {"pattern", sp.str()}, {"changes", cp.changes},
                   {"preservations", cp.preservations}, {"pairs", pairs}},
              text, kOk);
}

int cmd_orbit(const RunConfig& cfg, const std::string& pattern, int pos, int neg) {
  const Couple c = parse_couple(pattern, pos, neg);
  Json arr = Json::array();
  std::string text;
  for (const auto& o : z2z2_orbit(c)) {
    arr.push_back(to_json(o));
    text += o.str() + "\n";
  }
  return emit(cfg, Json{{"command", "orbit"}, {"couple", to_json(c)}, {"orbit", arr}}, text, kOk);
}

int cmd_canonical(const RunConfig& cfg, const std::string& pattern) {
  const SignPattern sp = SignPattern::parse(pattern);
  const ModulusOrder order = canonical_order(sp);
  return emit(cfg, Json{{"command", "canonical"}, {"pattern", sp.str()}, {"tokens", order.tokens()},
                        {"order", order.render()}},
              order.tokens() + "\n" + order.render() + "\n", kOk);
}

int report_witness(const RunConfig& cfg, const char* command, const Polynomial& p, const Couple& c,
                   const std::string& method) {
  const RealizationReport r = verify_realization(p, c);
  Json j{{"command", command}, {"status", r.verified ? "realized" : "unresolved"}, {"method", method},
         {"report", to_json(r)}, {"modulus_signature", modulus_signature(p)}};
  std::string text = c.str() + ": " + (r.verified ? "realized" : "verification failed") + " (" + method + ")\n" +
                     "witness: " + p.str() + "\nmoduli: " + modulus_signature(p) + "\n" + render_checks(r);
  return emit(cfg, j, text, r.verified ? kOk : kUnresolved);
}

int cmd_realize(const RunConfig& cfg, const std::string& pattern, int pos, int neg, const std::string& order) {
  const Couple c = parse_couple(pattern, pos, neg);
  if (!order.empty()) {
    const Order21 o = parse_order21(order);
    if (c.pair != PosNegPair{2, 1}) throw PreconditionViolated("--order applies to (2,1) only");
    try {
      return report_witness(cfg, "realize", realize_21_with_order(c.pattern, o), c, "order:" + to_string(o));
    } catch (const OrderInfeasible& e) {
      return emit(cfg,
                  Json{{"command", "realize"}, {"status", "impossible_certified"}, {"couple", to_json(c)},
                       {"order", to_string(o)}, {"reason", e.what()}},
                  c.str() + ": order " + to_string(o) + " is infeasible: " + e.what() + "\n", kImpossible);
    }
  }
  SurveyOptions opts;
  opts.budget = cfg.budget;
  opts.seed = cfg.seed;
  const SurveyEntry e = resolve_couple(c, opts);
  switch (e.status) {
    case SurveyStatus::realized_constructive:
    case SurveyStatus::realized_search:
      return report_witness(cfg, "realize", *e.witness, c, e.method);
    case SurveyStatus::impossible_certified: {
      Json j{{"command", "realize"}, {"status", "impossible_certified"}, {"couple", to_json(c)}, {"method", e.method}};
      std::string text = c.str() + ": not realizable (" + e.method + ")\n";
      if (e.dbis) {
        j["dbis"] = to_json(*e.dbis);
        j["reason"] = "IsDPattern(" + std::to_string(e.dbis->a) + "," + std::to_string(e.dbis->b) + "," +
                      std::to_string(e.dbis->c) + ")";
        text += j["reason"].get<std::string>() + "\n" + render_dbis(*e.dbis);
      }
      if (e.certificate) {
        j["certificate"] = *e.certificate;
        text += *e.certificate + "\n";
      }
      return emit(cfg, j, text, kImpossible);
    }
    case SurveyStatus::unresolved:
      break;
  }
  return emit(cfg, Json{{"command", "realize"}, {"status", "unresolved"}, {"couple", to_json(c)}, {"method", e.method}},
              c.str() + ": unresolved (" + e.method + ")\n", kUnresolved);
}

int cmd_verify(const RunConfig& cfg, const std::string& poly, const std::string& pattern, int pos, int neg) {
  const Couple c = Couple::parse(pattern, pos, neg);
  const RealizationReport r = verify_realization(Polynomial::parse(poly), c);
  std::string text = c.str() + ": " + (r.verified ? "verified" : "not verified") + "\n" + render_checks(r);
  return emit(cfg, Json{{"command", "verify"}, {"report", to_json(r)}}, text, r.verified ? kOk : kUnresolved);
}

int cmd_disconnect(const RunConfig& cfg, int d) {
  const DisconnectWitness w = disconnect_pair(d);
  const Couple target{sigma_bullet(d), {2, d - 4}};
  const bool v1 = realizes(w.q1, target) && modulus_signature(w.q1) == disconnect_signature_q1(d);
  const bool v2 = realizes(w.q2, target) && modulus_signature(w.q2) == disconnect_signature_q2(d);
  Json j = to_json(w, v1, v2);
  j["command"] = "disconnect";
  std::string text = target.str() + " branch " + to_string(w.branch) + "\nq1: " + w.q1.str() + "\n  moduli " +
                     modulus_signature(w.q1) + (v1 ? " verified" : " FAILED") + "\nq2: " + w.q2.str() +
                     "\n  moduli " + modulus_signature(w.q2) + (v2 ? " verified" : " FAILED") + "\n";
  return emit(cfg, j, text, v1 && v2 ? kOk : kUnresolved);
}

int cmd_obstruction(const RunConfig& cfg, int d) {
  if (d % 2 == 0) {
    const ObstructionReport r = obstruction_check(d);
    Json j = to_json(r);
    j["command"] = "obstruction";
    std::string text = "sigma_bullet(" + std::to_string(d) + ") even coefficients:";
    for (std::size_t k = 0; k < r.even_degrees.size(); ++k)
      text += " x^" + std::to_string(r.even_degrees[k]) + (r.signs[k] > 0 ? "+" : "-");
    text += std::string("\n") + (r.holds ? "holds: p(1) and p(-1) cannot both vanish\n" : "does not hold\n");
    return emit(cfg, j, text, r.holds ? kOk : kUnresolved);
  }
  const OddObstructionCase sample = odd_obstruction_sample(d, cfg.seed);
  const SignDeductionReport r = odd_obstruction_step(sample.p, sample.delta);
  Json j = to_json(r);
  j["command"] = "obstruction";
  j["d"] = d;
  j["p"] = to_json(sample.p);
  j["delta"] = sample.delta.get_str();
  std::string text = "p = (x + " + sample.delta.get_str() + ") U\n";
  for (const auto& ded : r.deductions) text += "  " + ded.name + ": " + (ded.holds ? "ok" : "FAILED") + "\n";
  return emit(cfg, j, text, r.all_hold ? kOk : kUnresolved);
}

int cmd_dbis(const RunConfig& cfg, int a, int b, int c) {
  const DbisCertificate cert = dbis_certificate(a, b, c);
  Json j = to_json(cert);
  j["command"] = "dbis";
  return emit(cfg, j, render_dbis(cert), cert.verdict ? kOk : kUnresolved);
}

int cmd_survey(const RunConfig& cfg, int d) {
  SurveyOptions opts;
  opts.budget = cfg.budget;
  opts.seed = cfg.seed;
  opts.cap = cfg.cap;
  const auto entries = survey(d, opts);
  std::string text;
  std::map<std::string, int> counts;
  for (const auto& e : entries) {
    ++counts[to_string(e.status)];
    text += e.couple.str() + "  " + to_string(e.status) + "  " + e.method + "\n";
  }
  Json summary = Json::object();
  for (const auto& [k, v] : counts) {
    summary[k] = v;
    text += k + ": " + std::to_string(v) + "\n";
  }
  return emit(cfg, Json{{"command", "survey"}, {"d", d}, {"summary", summary}, {"entries", to_json(entries)}}, text,
              kOk);
}

int cmd_region_d5(const RunConfig& cfg, const std::string& ppm) {
  if (cfg.resolution < 256) throw PreconditionViolated("--resolution must be >= 256");
  const RegionGrid grid = RegionGrid::build(cfg.resolution);
  const CaseIReport ci = case_i_empty(grid);
  const ConnectivityReport conn = case_ii_connected(grid);
  const auto points = named_intersections();
  if (!ppm.empty()) {
    std::ofstream out(ppm, std::ios::binary);
    if (!out) throw PreconditionViolated("cannot write " + ppm);
    write_ppm(grid, out);
  }
  Json j = region_report(grid, ci, conn, points);
  j["command"] = "region-d5";
  std::string text = "resolution " + std::to_string(grid.resolution()) + " over [-2,4] x [0,6]\n";
  for (auto c : {CellClass::case_ii, CellClass::case_i, CellClass::neither, CellClass::boundary})
    text += "  " + to_string(c) + ": " + std::to_string(grid.count(c)) + "\n";
  text += std::string("case (i) empty: ") + (ci.empty ? "yes" : "no") + "\n  " + ci.diagnostic + "\n";
  text += "case (ii) components: " + std::to_string(conn.components) +
          (conn.connected ? " (connected)" : " (insufficient resolution)") + "\n";
  for (const auto& p : points) {
    text += "  " + p.name + ": ";
    if (p.exact)
      text += "(" + p.exact->B.get_str() + ", " + p.exact->C.get_str() + ")";
    else
      text += "(" + std::to_string(p.B.midpoint().get_d()) + ", " + std::to_string(p.C.midpoint().get_d()) + ")";
    text += " printed (" + p.printed_B + ", " + p.printed_C + ") " + (p.matches ? "match" : "MISMATCH") + "\n";
  }
  return emit(cfg, j, text, ci.empty && conn.connected ? kOk : kUnresolved);
}

int cmd_region_d4(const RunConfig& cfg, const std::string& a_text, const std::string& b_text) {
  auto parse = [](const std::string& s) { return Polynomial::parse(s).coeff(0); };
  const Rational A = parse(a_text), B = parse(b_text);
  const bool member = d4_membership(A, B);
  const Polynomial q = expand_d4(A, B);
  const RootProfile prof = root_profile(q);
  std::string pattern;
  try {
    pattern = sign_pattern_of(q).str();
  } catch (const ZeroCoefficient&) {
    pattern = "zero coefficient";
  }
  Json j{{"command", "region-d4"}, {"A", A.get_str()}, {"B", B.get_str()}, {"member", member},
         {"polynomial", to_json(q)}, {"pattern", pattern}, {"profile", to_json(prof)}};
  std::string text = "A = " + A.get_str() + ", B = " + B.get_str() + ": " + (member ? "member" : "not a member") +
                     "\n(x-1)^2 (x^2+Ax+B) = " + q.str() + "\npattern " + pattern + "\n";
  return emit(cfg, j, text, kOk);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Realizability of sign patterns with prescribed numbers of positive and negative roots"};
  app.require_subcommand(1);
  app.fallthrough();
  RunConfig cfg;
  app.add_option("--seed", cfg.seed, "random seed")->capture_default_str();
  app.add_option("--budget", cfg.budget, "random search trials")->capture_default_str();
  app.add_flag("--json", cfg.json, "machine-readable output");
  app.add_option("--resolution", cfg.resolution, "grid cells per axis for region-d5")->capture_default_str();
  app.add_option("--cap", cfg.cap, "largest degree accepted by survey")->capture_default_str();

  std::string pattern, poly, order, ppm, a_text, b_text;
  int pos = 0, neg = 0, d = 0, a = 0, b = 0, c = 0;
  std::function<int()> run;

  auto* compat = app.add_subcommand("compat", "list compatible (pos, neg) pairs");
  compat->add_option("PATTERN", pattern)->required();
  compat->callback([&] { run = [&] { return cmd_compat(cfg, pattern); }; });

  auto* orbit = app.add_subcommand("orbit", "orbit of a couple under reflection and reversal");
  orbit->add_option("PATTERN", pattern)->required();
  orbit->add_option("POS", pos)->required();
  orbit->add_option("NEG", neg)->required();
  orbit->callback([&] { run = [&] { return cmd_orbit(cfg, pattern, pos, neg); }; });

  auto* canonical = app.add_subcommand("canonical", "canonical modulus order of a pattern");
  canonical->add_option("PATTERN", pattern)->required();
  canonical->callback([&] { run = [&] { return cmd_canonical(cfg, pattern); }; });

  auto* realize = app.add_subcommand("realize", "construct and verify a witness");
  realize->add_option("PATTERN", pattern)->required();
  realize->add_option("POS", pos)->required();
  realize->add_option("NEG", neg)->required();
  realize->add_option("--order", order, "B_A1_A2, Beq_A1_A2, A1_B_A2, A1_A2eqB or A1_A2_B");
  realize->callback([&] { run = [&] { return cmd_realize(cfg, pattern, pos, neg, order); }; });

  auto* verify = app.add_subcommand("verify", "check a polynomial (ascending coefficients) against a couple");
  verify->add_option("POLY", poly)->required();
  verify->add_option("PATTERN", pattern)->required();
  verify->add_option("POS", pos)->required();
  verify->add_option("NEG", neg)->required();
  verify->callback([&] { run = [&] { return cmd_verify(cfg, poly, pattern, pos, neg); }; });

  auto* disconnect = app.add_subcommand("disconnect", "two realizations with opposite modulus orders");
  disconnect->add_option("D", d)->required();
  disconnect->callback([&] { run = [&] { return cmd_disconnect(cfg, d); }; });

  auto* obstruction = app.add_subcommand("obstruction", "obstruction to the collision at 1 and -1");
  obstruction->add_option("D", d)->required();
  obstruction->callback([&] { run = [&] { return cmd_obstruction(cfg, d); }; });

  auto* dbis = app.add_subcommand("dbis", "falling-factorial certificate for D(a,b,c)");
  dbis->add_option("A", a)->required();
  dbis->add_option("B", b)->required();
  dbis->add_option("C", c)->required();
  dbis->callback([&] { run = [&] { return cmd_dbis(cfg, a, b, c); }; });

  auto* surv = app.add_subcommand("survey", "resolve every compatible couple of degree D");
  surv->add_option("D", d)->required();
  surv->callback([&] { run = [&] { return cmd_survey(cfg, d); }; });

  auto* d5 = app.add_subcommand("region-d5", "grid classification of the degree-5 (B, C) plane");
  d5->add_option("--ppm", ppm, "write the grid as a PPM image");
  d5->callback([&] { run = [&] { return cmd_region_d5(cfg, ppm); }; });

  auto* d4 = app.add_subcommand("region-d4", "membership of (A, B) in the degree-4 region");
  d4->add_option("A", a_text)->required();
  d4->add_option("B", b_text)->required();
  d4->callback([&] { run = [&] { return cmd_region_d4(cfg, a_text, b_text); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kUsage;
  }

  const std::string command = app.get_subcommands().front()->get_name();
  auto fail = [&](const char* kind, const char* label, const std::exception& e, int code) {
    std::cerr << label << ": " << e.what() << '\n';
    if (cfg.json) {
      Json j{{"command", command}, {"status", "error"}, {"error", kind}, {"message", e.what()}, {"exit_code", code}};
      std::cout << j.dump(2) << '\n';
    }
    return code;
  };
  try {
    return run();
  } catch (const IsDPattern& e) {
    return fail("IsDPattern", "not realizable", e, kImpossible);
  } catch (const OrderInfeasible& e) {
    return fail("OrderInfeasible", "not realizable", e, kImpossible);
  } catch (const SearchExhausted& e) {
    return fail("SearchExhausted", "unresolved", e, kUnresolved);
  } catch (const Incompatible& e) {
    return fail("Incompatible", "error", e, kUsage);
  } catch (const ParseError& e) {
    return fail("ParseError", "error", e, kUsage);
  } catch (const DegreeTooSmall& e) {
    return fail("DegreeTooSmall", "error", e, kUsage);
  } catch (const CapExceeded& e) {
    return fail("CapExceeded", "error", e, kUsage);
  } catch (const Error& e) {
    return fail("Error", "error", e, kUsage);
  }
}
