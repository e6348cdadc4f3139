#include "gtb/export.hpp"

#include <stdexcept>

namespace gtb {

using ojson = nlohmann::ordered_json;

namespace {

ojson matrix_json(const SparseMat& m) {
  ojson a = ojson::array();
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (const auto& [j, x] : m.row(i))
      if (x != 0) a.push_back(ojson::array({i, j, to_string(x)}));
  return a;
}

// generators rewritten in the basis given by the columns of `basis`
SparseMat in_columns(const Coordinates& co, const SparseMat& X, const std::vector<Vec>& basis) {
  std::vector<Vec> cols;
  for (const auto& v : basis) cols.push_back(co.coords(X * v));
  return from_columns(basis.size(), cols);
}

}  // namespace

ojson pattern_json(const Pattern& p) {
  ojson j;
  j["family"] = family_name(p.family);
  j["rows"] = p.rows;
  if (!p.sigma.empty()) j["sigma"] = p.sigma;
  return j;
}

ojson export_gl(const GlnIrrep& rep) {
  ojson j;
  j["schema"] = "gt-export/1";
  j["algebra"] = "gl";
  j["n"] = rep.n;
  j["lambda"] = rep.lambda;
  j["dim"] = rep.dim();
  j["patterns"] = ojson::array();
  for (const auto& p : rep.basis) j["patterns"].push_back(pattern_json(p));
  j["generators"] = ojson::object();
  for (const auto& [key, m] : rep.E)
    j["generators"]["E_" + std::to_string(key.first) + "_" + std::to_string(key.second)] = matrix_json(m);
  j["normsq"] = ojson::array();
  for (const auto& x : rep.normsq) j["normsq"].push_back(to_string(x));
  return j;
}

ojson export_bcd(const BCDIrrep& rep) {
  std::vector<Pattern> pats;
  std::vector<Vec> basis;
  if (rep.alg.conv == Convention::S4) {
    auto b = orth_gt_basis(rep);
    pats = std::move(b.patterns);
    basis = std::move(b.vectors);
  } else {
    Mickelsson M(rep);
    auto b = gt_basis_bcd(M);
    pats = std::move(b.patterns);
    basis = std::move(b.vectors);
  }
  const Coordinates co(basis);
  ojson j;
  j["schema"] = "gt-export/1";
  j["algebra"] = rep.alg.series == Series::C ? "sp" : "so";
  j["n"] = rep.alg.n;
  j["lambda"] = rep.lambda;
  j["dim"] = rep.dim();
  j["patterns"] = ojson::array();
  for (const auto& p : pats) j["patterns"].push_back(pattern_json(p));
  j["generators"] = ojson::object();
  for (const auto& [key, m] : rep.F)
    j["generators"][bcd_generator_label(key.first, key.second)] = matrix_json(in_columns(co, m, basis));
  j["normsq"] = ojson::array();
  for (const auto& v : basis) j["normsq"].push_back(to_string(rep.form(v, v)));
  return j;
}

ExportData parse_export(const nlohmann::json& j) {
  if (!j.is_object() || j.value("schema", "") != "gt-export/1") throw std::invalid_argument("not a gt-export/1 document");
  ExportData d;
  try {
    d.algebra = j.at("algebra").get<std::string>();
    d.n = j.at("n").get<int>();
    d.lambda = j.at("lambda").get<DWeight>();
    d.dim = j.at("dim").get<std::size_t>();
    for (const auto& [name, entries] : j.at("generators").items()) {
      SparseMat m(d.dim, d.dim);
      for (const auto& e : entries) {
        const auto r = e.at(0).get<std::size_t>(), c = e.at(1).get<std::size_t>();
        if (r >= d.dim || c >= d.dim) throw std::invalid_argument("matrix entry out of range in " + name);
        m.set(r, c, parse_rat(e.at(2).get<std::string>()));
      }
      d.generators.emplace(name, std::move(m));
    }
    for (const auto& x : j.at("normsq")) d.normsq.push_back(parse_rat(x.get<std::string>()));
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("malformed export: ") + e.what());
  }
  if (d.algebra != "gl" && d.algebra != "so" && d.algebra != "sp") throw std::invalid_argument("unknown algebra " + d.algebra);
  return d;
}

}  // namespace gtb
