#include "modulespec.hpp"

#include "json.hpp"

namespace ytw {

using nlohmann::json;

namespace {

json parse_checked(const std::string& text) {
  json j = json::parse(text, nullptr, false);
  if (j.is_discarded()) throw config_error("malformed JSON");
  return j;
}

Scalar scalar_from_json(const json& j, const Field& f) {
  if (j.is_number_integer()) return f(j.get<long>());
  if (j.is_string()) return f.scalar_from_string(j.get<std::string>());
  throw config_error("expected a scalar (integer or string)");
}

GModule build_node(const json& node, const Field& f, const FormData& form, bool gl_mode,
                   bool allow_outside) {
  if (!node.is_array() || node.empty() || !node[0].is_string())
    throw config_error("build node must be [op, ...]");
  std::string op = node[0].get<std::string>();
  auto expect_args = [&](size_t k) {
    if (node.size() != k + 1) throw config_error("'" + op + "' expects " + std::to_string(k) + " arguments");
  };
  if (op == "natural") {
    expect_args(0);
    return gl_mode ? gl_natural(f, form) : gn_natural(f, form);
  }
  if (op == "dual") {
    expect_args(0);
    if (!gl_mode) throw config_error("dual is a gl constructor");
    return gl_dual(f, form);
  }
  if (op == "trivial") {
    expect_args(0);
    return gl_mode ? gl_one_dimensional(f, form, f.zero()) : gn_trivial(f, form);
  }
  if (op == "one_dimensional") {
    expect_args(1);
    Scalar c = scalar_from_json(node[1], f);
    if (gl_mode) return gl_one_dimensional(f, form, c);
    if (form.flavor() == Flavor::Orthogonal && form.n() == 1) return o2_one_dimensional(f, c);
    if (c.is_zero()) return gn_trivial(f, form);
    throw config_error("nontrivial one-dimensional g_n-modules exist only for o_2");
  }
  if (op == "tensor") {
    if (node.size() < 2) throw config_error("tensor expects at least one factor");
    GModule acc = build_node(node[1], f, form, gl_mode, allow_outside);
    for (size_t k = 2; k < node.size(); ++k)
      acc = tensor_product(acc, build_node(node[k], f, form, gl_mode, allow_outside));
    return acc;
  }
  if (op == "sym_power" || op == "wedge_power") {
    expect_args(2);
    int k = node[1].get<int>();
    GModule base = build_node(node[2], f, form, gl_mode, allow_outside);
    return op == "sym_power" ? sym_power(base, k) : wedge_power(base, k);
  }
  if (op == "highest_weight_submodule") {
    expect_args(2);
    GModule parent = build_node(node[1], f, form, gl_mode, allow_outside);
    const json& warr = node[2];
    if (!warr.is_array()) throw config_error("weight must be an array");
    std::vector<Scalar> weight;
    for (const auto& entry : warr) weight.push_back(scalar_from_json(entry, f));
    int expected = gl_mode ? form.N() : form.n();
    if (static_cast<int>(weight.size()) != expected)
      throw config_error("weight needs " + std::to_string(expected) + " entries");
    return highest_weight_submodule(parent, weight, gl_mode ? ActionKind::Gl : ActionKind::Gn,
                                    allow_outside);
  }
  throw config_error("unknown build op '" + op + "'");
}

void reject_unknown_keys(const json& j, std::initializer_list<const char*> known) {
  for (auto it = j.begin(); it != j.end(); ++it) {
    bool ok = false;
    for (const char* k : known) ok = ok || it.key() == k;
    if (!ok) throw config_error("unknown key '" + it.key() + "'");
  }
}

}  // namespace

GModule build_module_from_json(const std::string& text, const Field& f, bool allow_outside) {
  json j = parse_checked(text);
  reject_unknown_keys(j, {"flavor", "n", "mode", "build"});
  if (!j.contains("flavor") || !j.contains("n") || !j.contains("build"))
    throw config_error("module spec needs flavor, n, build");
  Flavor flavor = parse_flavor(j["flavor"].get<std::string>());
  int n = j["n"].get<int>();
  bool gl_mode = j.value("mode", std::string("gl")) == "gl";
  FormData form(flavor, n);
  return build_node(j["build"], f, form, gl_mode, allow_outside);
}

YangianModuleSpec yangian_spec_from_json(const std::string& text) {
  json j = parse_checked(text);
  reject_unknown_keys(j, {"flavor", "n", "gl_factors", "v_const", "sharp"});
  YangianModuleSpec spec;
  spec.flavor = parse_flavor(j.at("flavor").get<std::string>());
  spec.n = j.at("n").get<int>();
  if (j.contains("gl_factors")) {
    for (const auto& fac : j["gl_factors"]) {
      reject_unknown_keys(fac, {"base", "shift"});
      GlFactorSpec g;
      for (const auto& v : fac.at("base")) g.base.push_back(v.get<int64_t>());
      std::string shift = "0";
      if (fac.contains("shift")) {
        if (fac["shift"].is_string())
          shift = fac["shift"].get<std::string>();
        else
          shift = std::to_string(fac["shift"].get<long>());
      }
      mpq_class q;
      if (q.set_str(shift, 10) != 0) throw config_error("bad shift '" + shift + "'");
      q.canonicalize();
      g.shift = q;
      spec.gl_factors.push_back(std::move(g));
    }
  }
  spec.v_const = j.value("v_const", static_cast<int64_t>(0));
  spec.sharp_twist = j.value("sharp", false);
  return spec;
}

std::string yangian_spec_to_json(const YangianModuleSpec& spec) {
  json j;
  j["flavor"] = flavor_name(spec.flavor);
  j["n"] = spec.n;
  j["gl_factors"] = json::array();
  for (const auto& fac : spec.gl_factors) {
    json fj;
    fj["base"] = fac.base;
    fj["shift"] = fac.shift.get_str();
    j["gl_factors"].push_back(fj);
  }
  j["v_const"] = spec.v_const;
  j["sharp"] = spec.sharp_twist;
  return j.dump();
}

namespace {

json poly_to_json(const Poly& p) {
  json arr = json::array();
  for (int k = 0; k <= p.degree(); ++k) arr.push_back(p.coeff(k).to_string());
  if (p.is_zero()) arr.push_back("0");
  return arr;
}

Poly poly_from_json(const json& arr, const Field& f) {
  std::vector<Scalar> coeffs;
  for (const auto& c : arr) coeffs.push_back(scalar_from_json(c, f));
  return Poly(f, coeffs);
}

}  // namespace

DrinfeldData drinfeld_data_from_json(const std::string& text, const Field& f) {
  json j = parse_checked(text);
  reject_unknown_keys(j, {"P", "gamma", "type", "g"});
  DrinfeldData data;
  for (const auto& parr : j.at("P")) data.polys.push_back(poly_from_json(parr, f));
  if (j.contains("gamma")) {
    data.gamma = scalar_from_json(j["gamma"], f);
    data.type_tag = classify_type(*data.gamma, f.characteristic());
  }
  return data;
}

std::string drinfeld_data_to_json(const DrinfeldData& data) {
  json j;
  j["P"] = json::array();
  for (const Poly& p : data.polys) j["P"].push_back(poly_to_json(p));
  if (data.gamma) j["gamma"] = data.gamma->to_string();
  if (data.type_tag) j["type"] = gamma_type_name(*data.type_tag);
  j["g"] = json::array({"1"});  // normalized even tag of the main theorem
  return j.dump();
}

StabilitySpec stability_spec_from_json(const std::string& text) {
  json j = parse_checked(text);
  reject_unknown_keys(j, {"name", "flavor", "tail"});
  StabilitySpec spec;
  spec.name = j.value("name", std::string("spec"));
  spec.flavor = parse_flavor(j.at("flavor").get<std::string>());
  Field q = Field::rationals();
  for (const auto& parr : j.at("tail")) spec.tail.push_back(poly_from_json(parr, q));
  return spec;
}

std::string stability_report_to_json(const StabilityReport& report) {
  json j;
  j["spec"] = report.spec_name;
  j["flavor"] = report.flavor;
  j["reference"] = json::array();
  for (const Poly& p : report.reference) j["reference"].push_back(poly_to_json(p));
  j["cells"] = json::array();
  for (const auto& cell : report.cells) {
    json cj;
    cj["field"] = cell.field;
    cj["rank"] = cell.rank;
    cj["hypotheses"] = {{"alcove", cell.ledger.alcove}, {"degree_bound", cell.ledger.degree_bound}};
    cj["skipped"] = cell.skipped;
    if (!cell.skipped) {
      cj["agrees"] = cell.agrees;
      cj["tail"] = json::array();
      for (const Poly& p : cell.tail) cj["tail"].push_back(poly_to_json(p));
    }
    j["cells"].push_back(cj);
  }
  j["verdict"] = report.pass ? "PASS" : "FAIL";
  if (!report.detail.empty()) j["detail"] = report.detail;
  return j.dump();
}

}  // namespace ytw
