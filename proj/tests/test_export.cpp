#include "doctest.h"
#include "gtb/export.hpp"

using namespace gtb;

TEST_CASE("gl export round trip") {
  auto rep = build_irrep(3, {4, 2, 0});
  const auto j = export_gl(rep);
  CHECK(j["schema"] == "gt-export/1");
  CHECK(j["dim"] == 8);
  CHECK(j["patterns"].size() == 8);
  const std::string text = j.dump();
  CHECK(export_gl(build_irrep(3, {4, 2, 0})).dump() == text);
  auto d = parse_export(nlohmann::json::parse(text));
  CHECK(d.algebra == "gl");
  CHECK(d.n == 3);
  CHECK(d.lambda == DWeight{4, 2, 0});
  CHECK(d.generators.size() == 9);
  for (const auto& [key, m] : rep.E)
    CHECK(d.generators.at("E_" + std::to_string(key.first) + "_" + std::to_string(key.second)) == m);
  CHECK(d.normsq == rep.normsq);
}

TEST_CASE("so/sp export round trip") {
  for (auto [alg, l] : std::vector<std::pair<ClassicalAlgebra, DWeight>>{
           {{Series::C, 2, Convention::S3}, {0, -2}}, {{Series::B, 2, Convention::S3}, {-1, -1}},
           {{Series::B, 2, Convention::S4}, {2, 0}}, {{Series::D, 2, Convention::S4}, {2, 2}}}) {
    auto rep = build_bcd_irrep(alg, l);
    const auto j = export_bcd(rep);
    CHECK(j["algebra"] == (alg.series == Series::C ? "sp" : "so"));
    auto d = parse_export(nlohmann::json::parse(j.dump()));
    CHECK(d.dim == rep.dim());
    CHECK(d.generators.size() == rep.F.size());
    for (const auto& [key, m] : rep.F) {
      const auto& x = d.generators.at(bcd_generator_label(key.first, key.second));
      CHECK(x.rows() == rep.dim());
      // change of basis keeps the trace
      Rat t1 = 0, t2 = 0;
      for (std::size_t i = 0; i < rep.dim(); ++i) t1 += x.get(i, i), t2 += m.get(i, i);
      CHECK(t1 == t2);
    }
    for (const auto& x : d.normsq) CHECK(x > 0);
    if (alg.conv == Convention::S4) {
      // orthogonal basis: <F_ab u, v> = <u, F_ba v> becomes N_r X_rc = N_c Y_cr
      for (const auto& [key, m] : rep.F) {
        (void)m;
        const auto& X = d.generators.at(bcd_generator_label(key.first, key.second));
        const auto& Y = d.generators.at(bcd_generator_label(key.second, key.first));
        for (std::size_t r = 0; r < d.dim; ++r)
          for (std::size_t c = 0; c < d.dim; ++c) CHECK(d.normsq[r] * X.get(r, c) == d.normsq[c] * Y.get(c, r));
      }
    }
  }
  CHECK_THROWS_AS(parse_export(nlohmann::json::parse(R"({"schema":"other"})")), std::invalid_argument);
  CHECK_THROWS_AS(parse_export(nlohmann::json::parse(R"({"schema":"gt-export/1","algebra":"gl"})")),
                  std::invalid_argument);
}
