#include "epalg/rep_json.hpp"

namespace epalg {

using nlohmann::json;

json scalar_to_json(const ExactScalar& s) {
  return json{{"re", {to_string(s.re_rat()), to_string(s.re_root2())}},
              {"im", {to_string(s.im_rat()), to_string(s.im_root2())}}};
}

ExactScalar scalar_from_json(const json& j) {
  return ExactScalar(parse_rational(j.at("re").at(0).get<std::string>()),
                     parse_rational(j.at("re").at(1).get<std::string>()),
                     parse_rational(j.at("im").at(0).get<std::string>()),
                     parse_rational(j.at("im").at(1).get<std::string>()));
}

json matrix_to_json(const ExactMatrix& m) {
  json rows = json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(scalar_to_json(m.at(r, c)));
    rows.push_back(std::move(row));
  }
  return rows;
}

ExactMatrix matrix_from_json(const json& j) {
  if (!j.is_array() || j.empty()) throw std::invalid_argument("matrix JSON must be a row array");
  ExactMatrix m(j.size(), j.at(0).size());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    const json& row = j.at(r);
    if (row.size() != m.cols()) throw std::invalid_argument("ragged matrix JSON");
    for (std::size_t c = 0; c < m.cols(); ++c) m.at(r, c) = scalar_from_json(row.at(c));
  }
  return m;
}

json label_to_json(const SpinorLabel& l) {
  return json{{"Lambda", to_string(l.Lambda.as_rational())},
              {"J", to_string(l.J.as_rational())},
              {"gamma", to_string(l.gamma.as_rational())},
              {"M", to_string(l.M.as_rational())}};
}

SpinorLabel label_from_json(const json& j) {
  return SpinorLabel{HalfInt::parse(j.at("Lambda").get<std::string>()),
                     HalfInt::parse(j.at("J").get<std::string>()),
                     HalfInt::parse(j.at("gamma").get<std::string>()),
                     HalfInt::parse(j.at("M").get<std::string>())};
}

json rep_to_json(const Representation& rep) {
  json j;
  j["schema"] = "epalg/1";
  j["dim"] = rep.dim;
  j["name"] = rep.name;
  if (rep.lambda) j["lambda"] = to_string(rep.lambda->as_rational());
  json basis = json::array();
  for (const auto& l : rep.basis) basis.push_back(label_to_json(l));
  j["basis"] = std::move(basis);
  json gens;
  for (const auto& [g, m] : rep.mats) gens[name_of(g)] = matrix_to_json(m);
  j["generators"] = std::move(gens);
  json metric = json::array();
  for (std::size_t i = 0; i < rep.dim; ++i) metric.push_back(scalar_to_json(rep.metric.at(i, i)));
  j["metric"] = std::move(metric);
  json manifest = json::array();
  for (const auto& a : rep.manifest)
    manifest.push_back(json{{"generator", name_of(a.gen)},
                            {"row", a.row},
                            {"col", a.col},
                            {"printed", scalar_to_json(a.printed)},
                            {"amended", scalar_to_json(a.amended)}});
  j["manifest"] = std::move(manifest);
  json checks = json::array();
  for (const auto& c : rep.validation.checks)
    checks.push_back(json{{"name", c.name},
                          {"pass", c.pass},
                          {"exact", c.exact},
                          {"residual", c.residual},
                          {"detail", c.detail}});
  j["validation"] = json{{"checks", std::move(checks)}, {"all_pass", rep.validation.all_pass()}};
  return j;
}

Representation rep_from_json(const json& j) {
  if (j.value("schema", "") != "epalg/1")
    throw std::invalid_argument("unsupported representation schema");
  Representation rep;
  rep.dim = j.at("dim").get<std::size_t>();
  rep.name = j.value("name", "");
  if (j.contains("lambda")) rep.lambda = HalfInt::parse(j.at("lambda").get<std::string>());
  for (const auto& l : j.at("basis")) rep.basis.push_back(label_from_json(l));
  for (auto it = j.at("generators").begin(); it != j.at("generators").end(); ++it) {
    auto g = gen_from_name(it.key());
    if (!g) throw std::invalid_argument("unknown generator name: " + it.key());
    rep.mats.emplace(*g, matrix_from_json(it.value()));
  }
  const json& metric = j.at("metric");
  rep.metric = ExactMatrix(rep.dim, rep.dim);
  for (std::size_t i = 0; i < rep.dim; ++i) rep.metric.at(i, i) = scalar_from_json(metric.at(i));
  if (j.contains("manifest")) {
    for (const auto& a : j.at("manifest")) {
      auto g = gen_from_name(a.at("generator").get<std::string>());
      if (!g) throw std::invalid_argument("unknown generator in manifest");
      rep.manifest.push_back({*g, a.at("row").get<std::size_t>(), a.at("col").get<std::size_t>(),
                              scalar_from_json(a.at("printed")),
                              scalar_from_json(a.at("amended"))});
    }
  }
  return rep;
}

json algebra_to_json(const StructureConstants& sc) {
  json j;
  j["schema"] = "epalg/1";
  json gens = json::array();
  for (int i = 0; i < kNumGen; ++i) gens.push_back(kGenNames[static_cast<std::size_t>(i)]);
  j["generators"] = std::move(gens);
  json brackets = json::array();
  for (const auto& [key, terms] : sc.raw()) {
    json entry;
    entry["a"] = kGenNames[static_cast<std::size_t>(key.first)];
    entry["b"] = kGenNames[static_cast<std::size_t>(key.second)];
    json ts = json::array();
    for (const auto& t : terms)
      ts.push_back(json{{"c", name_of(t.c)}, {"f", to_string(t.f)}});
    entry["terms"] = std::move(ts);
    brackets.push_back(std::move(entry));
  }
  j["brackets"] = std::move(brackets);
  return j;
}

}  // namespace epalg
