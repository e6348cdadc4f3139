#pragma once

#include <map>
#include <string>

#include "json.hpp"

#include "gtb/bcd.hpp"
#include "gtb/gln.hpp"

// JSON export, schema "gt-export/1":
//   {"schema","algebra":"gl"|"so"|"sp","n","lambda":[doubled],"dim",
//    "patterns":[{"family","rows":[[doubled..]..],"sigma"?}],
//    "generators":{"E_i_j"|"F_i_j":[[row,col,"p/q"],..]},"normsq":["p/q",..]}
// Matrices are written in the GT basis of the patterns, entries row-major.
namespace gtb {

nlohmann::ordered_json pattern_json(const Pattern& p);

nlohmann::ordered_json export_gl(const GlnIrrep& rep);
// S3 modules: the basis of gt_basis_bcd; S4 (B/D): the orthogonal basis.
// normsq holds <ξ_Λ, ξ_Λ> for the contravariant form.
nlohmann::ordered_json export_bcd(const BCDIrrep& rep);

struct ExportData {
  std::string algebra;
  int n = 0;
  DWeight lambda;
  std::size_t dim = 0;
  std::map<std::string, SparseMat> generators;
  Vec normsq;
};
// throws std::invalid_argument on a schema mismatch
ExportData parse_export(const nlohmann::json& j);

}  // namespace gtb
