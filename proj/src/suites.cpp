#include "suites.hpp"

#include <random>

#include "deligne.hpp"
#include "json.hpp"
#include "modulespec.hpp"
#include "rmatrix.hpp"

namespace ytw {

using nlohmann::json;

std::string config_hash(const std::string& config) {
  uint64_t h = 1469598103934665603ull;
  for (unsigned char c : config) {
    h ^= c;
    h *= 1099511628211ull;
  }
  char buf[24];
  snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

std::string report_to_json(const Report& report) {
  json j;
  j["schema"] = "ytwist-report/1";
  j["version"] = kVersion;
  j["command"] = report.command;
  j["config_hash"] = config_hash(report.config);
  j["items"] = json::array();
  for (const auto& item : report.items) {
    json ij;
    ij["name"] = item.name;
    ij["pass"] = item.pass;
    if (!item.detail.empty()) ij["detail"] = item.detail;
    j["items"].push_back(ij);
  }
  if (!report.payload.empty()) j["payload"] = json::parse(report.payload);
  j["pass"] = report.pass();
  return j.dump(2);
}

namespace {

std::shared_ptr<GModule> mk(GModule m) { return std::make_shared<GModule>(std::move(m)); }

void add(Report& rep, const std::string& name, bool pass, const std::string& detail = "") {
  rep.items.push_back({name, pass, detail});
}

void suite_ternary(Report& rep, const Field& f, const FormData& form) {
  OperatorMatrix t = evaluation_T(mk(gl_natural(f, form)));
  CheckReport r = check_ternary(t);
  add(rep, "ternary/evaluation", r.ok, r.detail);
  OperatorMatrix t2 = tensor_T(t, t);
  r = check_ternary(t2);
  add(rep, "ternary/tensor2", r.ok, r.detail);
  if (form.N() <= 2) {
    r = check_ternary(tensor_T(t2, t));
    add(rep, "ternary/tensor3", r.ok, r.detail);
  }
}

void suite_twisted(Report& rep, const Field& f, const FormData& form) {
  OperatorMatrix t = evaluation_T(mk(gl_natural(f, form)));
  auto both = [&](const std::string& name, const TwistedOperatorMatrix& s) {
    CheckReport q = form.N() <= 2 ? check_quaternary(s) : check_quaternary_components(s);
    add(rep, name + "/quaternary", q.ok, q.detail);
    CheckReport y = check_symmetry(s);
    add(rep, name + "/symmetry", y.ok, y.detail);
  };
  both("twisted/evaluation", twisted_S(t));
  both("twisted/tensor2", twisted_S(tensor_T(t, t)));
  both("twisted/g-evaluation", twisted_eval(mk(gn_natural(f, form))));
  both("twisted/mixed", mixed_tensor(t, twisted_eval(mk(gn_trivial(f, form)))));
  if (form.flavor() == Flavor::Orthogonal && form.n() == 1)
    both("twisted/o2-gamma", twisted_eval(mk(o2_one_dimensional(f, f(1)))));
}

void suite_yangbaxter(Report& rep, const Field& f, const FormData& form) {
  std::array<Scalar, 3> pts = {f(9), f(4), f(-3)};
  add(rep, "yangbaxter/plain", check_yang_baxter(f, form, YBVariant::Plain, pts));
  add(rep, "yangbaxter/transposed", check_yang_baxter(f, form, YBVariant::Transposed, pts));
  add(rep, "yangbaxter/final_transposed",
      check_yang_baxter(f, form, YBVariant::FinalTransposed, pts));
  add(rep, "yangbaxter/plain_formal", check_yang_baxter_formal(f, form, YBVariant::Plain));
  add(rep, "yangbaxter/final_formal",
      check_yang_baxter_formal(f, form, YBVariant::FinalTransposed));
}

void suite_fused(Report& rep, const Field& f, const FormData& form) {
  int N = form.N();
  for (int m = 2; m <= std::min(4, N); ++m) {
    std::vector<Scalar> pts;
    for (int k = 0; k < m; ++k) pts.push_back(f(m - 1 - k));
    add(rep, "fused/consecutive_m" + std::to_string(m),
        fused_R(f, N, pts) == antisymmetrizer(f, m, N));
  }
  for (int m = 2; m <= 3; ++m)
    add(rep, "fused/orders_m" + std::to_string(m),
        fused_R_formal(f, N, m, false) == fused_R_formal(f, N, m, true));
}

void suite_qdet(Report& rep, const Field& f, const FormData& form, int order) {
  OperatorMatrix t = evaluation_T(mk(gl_natural(f, form)));
  OperatorMatrix t2 = tensor_T(t, t);
  for (const auto& [name, T] : {std::pair<const char*, const OperatorMatrix*>{"eval", &t},
                                {"tensor2", &t2}}) {
    OpSeries qa = qdet_antisym(*T, order);
    std::vector<int> pi;
    for (int i = -form.n(); i <= form.n(); ++i)
      if (i) pi.push_back(i);
    OpSeries qrow = qdet_permutation(*T, pi, true, order);
    OpSeries qcol = qdet_permutation(*T, pi, false, order);
    add(rep, std::string("qdet/routes_agree/") + name,
        (qa - qrow).is_zero() && (qa - qcol).is_zero());
    bool central = true;
    for (int r = 0; r <= order && central; ++r)
      for (int i = -form.n(); i <= form.n() && central; ++i)
        for (int j = -form.n(); j <= form.n() && central; ++j) {
          if (!i || !j) continue;
          for (int d = 0; d <= T->degree(); ++d)
            if (!commutator(qa.coeff(r), T->coeff(i, j, d)).is_zero()) {
              central = false;
              break;
            }
        }
    add(rep, std::string("qdet/centrality/") + name, central);
    USeries q = qa.scalar_series();
    USeries dt = dtilde_series(q, form.N());
    USeries back = USeries::one(f, order);
    for (int i = 0; i < form.N(); ++i) back = back * useries_shift(dt, f(-i), order);
    add(rep, std::string("qdet/dtilde_resubstitution/") + name, back == q);
  }
}

void suite_sdet(Report& rep, const Field& f, const FormData& form, int order) {
  add(rep, "sdet/beta_equals_alpha_series",
      beta_series(f, form, order) == alpha_factor(f, form).expand(order));
  add(rep, "sdet/beta_equals_alpha_points",
      beta_matches_alpha_at_points(f, form, {f(5), f(7), f(11), f(-9), f(13)}));
  OperatorMatrix t = evaluation_T(mk(gl_natural(f, form)));
  TwistedOperatorMatrix s = twisted_S(t);
  USeries sd = sdet_scalar(s, order);
  USeries q = qdet_scalar(t, order);
  add(rep, "sdet/equals_alpha_qdet_qdet",
      sd == alpha_factor(f, form).expand(order) * q *
                useries_neg_shift(q, f(form.N() - 1), order));
  add(rep, "sdet/alpha_parity", check_alpha_parity(sd, form));
  add(rep, "sdet/odd_from_even", odd_coeffs_determined_by_even(sd, form));
  ZhcReport z = zhc_decomposition_check(t, order);
  add(rep, "sdet/zhc_factorization", z.factorization_ok, z.detail);
  add(rep, "sdet/zhc_centrality", z.centrality_ok);
  add(rep, "sdet/zhc_invariance", z.invariance_ok);
}

void suite_brauer(Report& rep, const Field& f, const FormData& form, uint64_t seed) {
  bool dims_ok = true;
  for (int r1 = 0; r1 <= 4 && dims_ok; ++r1)
    for (int r2 = 0; r1 + r2 <= 8; ++r2)
      if (static_cast<int64_t>(enumerate_diagrams(r1, r2).size()) != hom_dimension(r1, r2)) {
        dims_ok = false;
        break;
      }
  add(rep, "brauer/hom_dimensions", dims_ok);
  add(rep, "brauer/dimension_probe", dimension_probe(f, form) == f(form.N()));
  {
    BrauerDiagram a(3, 5, {{7, 6}, {5, 3}, {4, 0}, {1, 2}});
    BrauerDiagram b(5, 3, {{7, 6}, {5, 3}, {2, 4}, {0, 1}});
    auto [d, loops] = compose_diagrams(a, b);
    add(rep, "brauer/worked_composition_loop", loops == 1, d.to_string());
  }
  std::mt19937_64 rng(seed);
  Scalar tval = functor_loop_scalar(f, form);
  bool functorial = true;
  for (int trial = 0; trial < 30 && functorial; ++trial) {
    int r1 = 1 + static_cast<int>(rng() % 3);
    int r2 = static_cast<int>(rng() % 3);
    int r3 = static_cast<int>(rng() % 3);
    if ((r1 + r2) % 2) ++r2;
    if ((r2 + r3) % 2) ++r3;
    auto bs = enumerate_diagrams(r1, r2);
    auto as = enumerate_diagrams(r2, r3);
    if (as.empty() || bs.empty()) continue;
    BrauerDiagram a = as[rng() % as.size()], b = bs[rng() % bs.size()];
    SpMat lhs = evaluate_diagram(a, f, form) * evaluate_diagram(b, f, form);
    SpMat rhs = evaluate_morphism(compose(BrauerMorphism::single(f, a),
                                          BrauerMorphism::single(f, b)),
                                  form, tval);
    functorial = (lhs == rhs);
  }
  add(rep, "brauer/functoriality", functorial,
      "loop scalar " + tval.to_string());
  Poly g2 = gram_determinant(f, 2);
  add(rep, "brauer/gram_m2_nonzero", !g2.is_zero() && !g2.eval(f.half()).is_zero());
}

}  // namespace

Report run_verify(const VerifyConfig& config) {
  Report rep;
  rep.command = "verify";
  rep.config = "verify|" + config.suite + "|" + config.field + "|" + config.flavor + "|" +
               std::to_string(config.n) + "|" + std::to_string(config.order) + "|" +
               std::to_string(config.seed);
  Field f = Field::parse(config.field);
  FormData form(parse_flavor(config.flavor), config.n);
  bool all = config.suite == "all";
  if (all || config.suite == "ternary") suite_ternary(rep, f, form);
  if (all || config.suite == "twisted") suite_twisted(rep, f, form);
  if (all || config.suite == "yangbaxter") suite_yangbaxter(rep, f, form);
  if (all || config.suite == "fused") suite_fused(rep, f, form);
  if (all || config.suite == "qdet") suite_qdet(rep, f, form, config.order);
  if (all || config.suite == "sdet") suite_sdet(rep, f, form, config.order);
  if (all || config.suite == "brauer") suite_brauer(rep, f, form, config.seed);
  if (rep.items.empty()) throw config_error("unknown suite '" + config.suite + "'");
  return rep;
}

Report run_drinfeld(const std::string& config_json) {
  json j = json::parse(config_json, nullptr, false);
  if (j.is_discarded()) throw config_error("malformed JSON");
  Report rep;
  rep.command = "drinfeld";
  rep.config = "drinfeld|" + j.dump();
  Field f = Field::parse(j.value("field", std::string("Q")));
  YangianModuleSpec spec = yangian_spec_from_json(j.at("spec").dump());
  ExtractResult res = pipeline_extract(spec, f);
  rep.payload = drinfeld_data_to_json(res.data);
  add(rep, "drinfeld/extracted", true, spec.describe());
  if (j.value("roundtrip", false)) {
    YangianModuleSpec rebuilt =
        pipeline_build(res.data, spec.flavor, spec.n, f.characteristic());
    ExtractResult again = pipeline_extract(rebuilt, f);
    add(rep, "drinfeld/roundtrip_fixed_point", again.data == res.data, rebuilt.describe());
  }
  return rep;
}

Report run_stability(const std::string& config_json) {
  json j = json::parse(config_json, nullptr, false);
  if (j.is_discarded()) throw config_error("malformed JSON");
  Report rep;
  rep.command = "stability";
  rep.config = "stability|" + j.dump();
  StabilitySpec spec = stability_spec_from_json(j.at("spec").dump());
  std::vector<uint32_t> primes;
  for (const auto& p : j.value("primes", json::array({101, 211, 307})))
    primes.push_back(p.get<uint32_t>());
  if (primes.empty()) throw config_error("prime panel must be nonempty");
  StabilityReport report = stability_experiment(spec, primes, j.value("compare_to_q", true));
  rep.payload = stability_report_to_json(report);
  bool skipped_some = false;
  for (const auto& cell : report.cells) skipped_some = skipped_some || cell.skipped;
  add(rep, "stability/verdict", report.pass, report.detail);
  if (skipped_some)
    rep.exit_hint = 3;  // hypothesis-ledger violations
  else if (!report.pass)
    rep.exit_hint = 1;
  return rep;
}

Report run_brauer(const std::string& config_json) {
  json j = json::parse(config_json, nullptr, false);
  if (j.is_discarded()) throw config_error("malformed JSON");
  Report rep;
  rep.command = "brauer";
  rep.config = "brauer|" + j.dump();
  Field f = Field::parse(j.value("field", std::string("Q")));
  std::string what = j.value("op", std::string("suite"));
  if (what == "gram") {
    int m = j.value("m", 2);
    Poly g = gram_determinant(f, m);
    json payload;
    payload["gram_determinant"] = json::array();
    for (int k = 0; k <= g.degree(); ++k) payload["gram_determinant"].push_back(g.coeff(k).to_string());
    rep.payload = payload.dump();
    add(rep, "brauer/gram", true);
    return rep;
  }
  if (what == "hom_dimension") {
    json payload;
    payload["dimension"] = hom_dimension(j.value("r1", 2), j.value("r2", 2));
    rep.payload = payload.dump();
    add(rep, "brauer/hom_dimension", true);
    return rep;
  }
  FormData form(parse_flavor(j.value("flavor", std::string("o"))), j.value("n", 2));
  suite_brauer(rep, f, form, j.value("seed", 0x59414e47ull));
  return rep;
}

namespace {

Report series_command(const std::string& command, const std::string& config_json) {
  json j = json::parse(config_json, nullptr, false);
  if (j.is_discarded()) throw config_error("malformed JSON");
  Report rep;
  rep.command = command;
  rep.config = command + "|" + j.dump();
  Field f = Field::parse(j.value("field", std::string("Q")));
  int order = j.value("order", 10);
  YangianModuleSpec spec = yangian_spec_from_json(j.at("spec").dump());
  RealizedModule rm = realize_spec(spec, f);
  json payload;
  if (command == "sdet") {
    USeries sd = sdet_scalar(rm.S, order);
    for (int k = 0; k <= order; ++k) payload["coefficients"].push_back(sd.coeff(k).to_string());
    add(rep, "sdet/alpha_parity", check_alpha_parity(sd, FormData(spec.flavor, spec.n)));
  } else {
    // qdet of the gl-part
    std::optional<OperatorMatrix> T;
    FormData form(spec.flavor, spec.n);
    for (const auto& fac : spec.gl_factors) {
      Scalar shift(f, fac.shift);
      OperatorMatrix tf = evaluation_T(
          mk(gl_highest_weight_module(f, form, fac.base, shift)));
      T = T ? tensor_T(*T, tf) : tf;
    }
    if (!T) T = evaluation_T(mk(gl_one_dimensional(f, form, f.zero())));
    USeries q = qdet_scalar(*T, order);
    for (int k = 0; k <= order; ++k) payload["coefficients"].push_back(q.coeff(k).to_string());
    add(rep, "qdet/scalar", true);
  }
  rep.payload = payload.dump();
  return rep;
}

}  // namespace

Report run_qdet(const std::string& config_json) { return series_command("qdet", config_json); }
Report run_sdet(const std::string& config_json) { return series_command("sdet", config_json); }

Report run_request(const std::string& request_json) {
  json j = json::parse(request_json, nullptr, false);
  if (j.is_discarded()) throw config_error("malformed JSON request");
  std::string command = j.value("command", std::string());
  if (command == "verify") {
    VerifyConfig cfg;
    cfg.suite = j.value("suite", cfg.suite);
    cfg.field = j.value("field", cfg.field);
    cfg.flavor = j.value("flavor", cfg.flavor);
    cfg.n = j.value("n", cfg.n);
    cfg.order = j.value("order", cfg.order);
    cfg.seed = j.value("seed", cfg.seed);
    return run_verify(cfg);
  }
  if (command == "drinfeld") return run_drinfeld(request_json);
  if (command == "stability") return run_stability(request_json);
  if (command == "brauer") return run_brauer(request_json);
  if (command == "qdet") return run_qdet(request_json);
  if (command == "sdet") return run_sdet(request_json);
  throw config_error("unknown command '" + command + "'");
}

}  // namespace ytw
