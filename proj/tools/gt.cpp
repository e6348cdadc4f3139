#include <algorithm>
#include <cctype>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "gtb/bcd.hpp"
#include "gtb/branching.hpp"
#include "gtb/export.hpp"
#include "gtb/gln.hpp"
#include "gtb/patterns.hpp"
#include "gtb/weyl.hpp"
#include "gtb/yangian.hpp"

using namespace gtb;
using ojson = nlohmann::ordered_json;

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string fmt(const Rat& r) { return to_string(r); }
std::string fmt_half(Doubled d) { return d % 2 == 0 ? std::to_string(d / 2) : std::to_string(d) + "/2"; }

std::string join_half(const DWeight& w) {
  std::string s;
  for (std::size_t i = 0; i < w.size(); ++i) s += (i ? "," : "") + fmt_half(w[i]);
  return s;
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, sep)) out.push_back(item);
  return out;
}

Rat parse_value(const std::string& s) {
  try {
    return parse_rat(s);
  } catch (const std::invalid_argument&) {
    throw UsageError("not a number: '" + s + "'");
  }
}

DWeight parse_weight(const std::string& s) {
  if (s.empty()) throw UsageError("empty weight");
  DWeight w;
  for (const auto& item : split(s, ',')) {
    const Rat x = 2 * parse_value(item);
    if (x.get_den() != 1) throw UsageError("weight entries must be integers or halves (p/2): '" + item + "'");
    w.push_back(x.get_num().get_si());
  }
  return w;
}

struct AlgebraSpec {
  enum Kind { GL, SO, SP } kind = GL;
  int N = 0;  // so: 2n+1 or 2n; 0 means not given
  Series series() const {
    if (kind == GL) return Series::A;
    if (kind == SP) return Series::C;
    return N % 2 == 0 && N != 0 ? Series::D : Series::B;
  }
  std::string name() const { return kind == GL ? "gl" : kind == SO ? "so" : "sp"; }
};

AlgebraSpec parse_algebra(const std::string& s) {
  AlgebraSpec a;
  std::string head = s.substr(0, 2), tail = s.size() > 2 ? s.substr(2) : "";
  if (head == "gl") a.kind = AlgebraSpec::GL;
  else if (head == "so") a.kind = AlgebraSpec::SO;
  else if (head == "sp") a.kind = AlgebraSpec::SP;
  else throw UsageError("unknown algebra '" + s + "' (gl, so, sp, optionally with a size such as so5)");
  if (!tail.empty()) {
    try {
      std::size_t pos = 0;
      a.N = std::stoi(tail, &pos);
      if (pos != tail.size() || a.N < 1) throw std::invalid_argument("");
    } catch (const std::exception&) {
      throw UsageError("bad algebra size in '" + s + "'");
    }
  }
  return a;
}

struct Options {
  std::string verb;
  std::vector<std::string> args;
  std::string json_path;
  std::size_t max_dim = 600;
  std::string series;
  std::string convention = "s3";
  std::string delta;
};

// algebra, rank and weight of a verb invocation; weights of so/sp are
// returned in the S3 convention unless the module is built in S4
struct Target {
  AlgebraSpec alg;
  DWeight lambda;  // as given
  int n = 0;
  bool s4 = false;
  ClassicalAlgebra classical() const {
    return ClassicalAlgebra{alg.series(), n, s4 ? Convention::S4 : Convention::S3};
  }
  // the weight in the convention the module is built in
  DWeight build_weight() const { return s4_input_sp ? weight_s4_to_s3(lambda) : lambda; }
  bool s4_input_sp = false;
  Family family() const {
    switch (alg.series()) {
      case Series::A: return Family::A;
      case Series::C: return Family::C3;
      case Series::B: return s4 ? Family::B4 : Family::B3;
      default: return s4 ? Family::D4 : Family::D3;
    }
  }
};

Target parse_target(const Options& o) {
  std::vector<std::string> a = o.args;
  Target t;
  if (!o.series.empty()) {
    t.alg = parse_algebra(o.series);
  } else {
    if (a.empty()) throw UsageError("missing algebra");
    t.alg = parse_algebra(a.front());
    a.erase(a.begin());
  }
  if (a.size() != 1) throw UsageError("expected one weight, e.g. 2,1,0 or -1/2,-1/2");
  t.lambda = parse_weight(a.front());
  t.n = static_cast<int>(t.lambda.size());
  if (o.convention != "s3" && o.convention != "s4") throw UsageError("--convention must be s3 or s4");
  const bool s4 = o.convention == "s4";
  switch (t.alg.kind) {
    case AlgebraSpec::GL:
      if (t.alg.N && t.alg.N != t.n) throw UsageError("gl" + std::to_string(t.alg.N) + " needs a weight of that length");
      break;
    case AlgebraSpec::SP:
      if (t.alg.N && t.alg.N != 2 * t.n) throw UsageError("sp" + std::to_string(t.alg.N) + " needs a weight of length N/2");
      t.s4_input_sp = s4;  // sp is built in S3; positive input is converted
      break;
    case AlgebraSpec::SO:
      if (!t.alg.N) t.alg.N = 2 * t.n + 1;
      if (t.alg.N / 2 != t.n) throw UsageError("so" + std::to_string(t.alg.N) + " needs a weight of length floor(N/2)");
      t.s4 = s4;
      break;
  }
  return t;
}

Rat target_dim(const Target& t) {
  if (t.alg.kind == AlgebraSpec::GL) {
    check_dominant(Family::A, t.lambda);
    return weyl_dim(Series::A, t.lambda);
  }
  const DWeight w = t.build_weight();
  check_dominant(t.family(), w);
  return t.s4 ? weyl_dim(t.alg.series(), w) : weyl_dim_nonpositive(t.alg.series(), w);
}

void cap(const Rat& d, std::size_t max_dim) {
  if (d > Rat(static_cast<long>(max_dim)))
    throw Refusal("dimension " + fmt(d) + " exceeds the desk-scale cap " + std::to_string(max_dim) + " (--max-dim)");
}

GlnIrrep gl_module(const Target& t, std::size_t max_dim) {
  cap(target_dim(t), max_dim);
  return build_irrep(t.n, t.lambda);
}

BCDIrrep bcd_module(const Target& t, std::size_t max_dim) {
  return build_bcd_irrep(t.classical(), t.build_weight(), DeskCaps{3, max_dim});
}

void write_json(const std::string& path, const ojson& j) {
  if (path.empty() || path == "-") {
    std::cout << j.dump(1) << "\n";
    return;
  }
  std::ofstream f(path);
  if (!f) throw std::runtime_error("cannot write " + path);
  f << j.dump(1) << "\n";
}

std::string poly_string(const std::vector<Rat>& c) {
  std::string s;
  for (std::size_t k = c.size(); k-- > 0;) {
    if (c[k] == 0) continue;
    std::string term = k == 0 ? fmt(c[k]) : (c[k] == 1 ? "" : c[k] == -1 ? "-" : fmt(c[k]) + "*") + (k == 1 ? "u" : "u^" + std::to_string(k));
    s += s.empty() ? term : (term[0] == '-' ? " - " + term.substr(1) : " + " + term);
  }
  return s.empty() ? "0" : s;
}

// ------------------------------------------------------------------ verbs

int cmd_dims(const Options& o) {
  const Target t = parse_target(o);
  const Rat d = target_dim(t);
  std::cout << fmt(d) << "\n";
  if (!o.json_path.empty()) write_json(o.json_path, ojson{{"algebra", t.alg.name()}, {"lambda", t.lambda}, {"dim", fmt(d)}});
  return 0;
}

int cmd_patterns(const Options& o) {
  const Target t = parse_target(o);
  cap(target_dim(t), o.max_dim);
  const auto ps = enumerate(t.family(), t.alg.kind == AlgebraSpec::GL ? t.lambda : t.build_weight());
  ojson arr = ojson::array();
  for (const auto& p : ps) {
    std::string line;
    for (std::size_t r = 0; r < p.rows.size(); ++r) line += (r ? " | " : "") + join_half(p.rows[r]);
    if (!p.sigma.empty()) {
      line += " ; sigma ";
      for (std::size_t i = 0; i < p.sigma.size(); ++i) line += (i ? "," : "") + std::to_string(p.sigma[i]);
    }
    std::cout << line << "\n";
    arr.push_back(pattern_json(p));
  }
  if (!o.json_path.empty()) write_json(o.json_path, arr);
  return 0;
}

int cmd_branch(const Options& o) {
  const Target t = parse_target(o);
  target_dim(t);
  ojson arr = ojson::array();
  Rat total = 0;
  if (t.alg.kind == AlgebraSpec::GL) {
    for (const auto& mu : branch_A(t.lambda)) {
      const Rat d = weyl_dim(Series::A, mu);
      total += d;
      std::cout << join_half(mu) << "  mult 1  dim " << fmt(d) << "\n";
      arr.push_back(ojson{{"mu", mu}, {"mult", 1}, {"dim", fmt(d)}});
    }
  } else {
    const DWeight w = t.s4 ? weight_s4_to_s3(t.lambda) : t.build_weight();
    const bool positive = t.s4 || t.s4_input_sp;
    for (const auto& b : branch_children(t.alg.series(), w)) {
      const Rat d = weyl_dim_nonpositive(t.alg.series(), b.mu);
      const DWeight mu = positive ? weight_s3_to_s4(b.mu) : b.mu;
      total += d * Rat(static_cast<long>(b.multiplicity()));
      std::cout << join_half(mu) << "  mult " << b.multiplicity() << "  dim " << fmt(d) << "\n";
      arr.push_back(ojson{{"mu", mu}, {"mult", b.multiplicity()}, {"dim", fmt(d)}});
    }
  }
  std::cout << "total " << fmt(total) << "\n";
  if (!o.json_path.empty()) write_json(o.json_path, arr);
  return 0;
}

int cmd_build(const Options& o, bool export_only) {
  const Target t = parse_target(o);
  ojson j;
  std::size_t dim = 0;
  if (t.alg.kind == AlgebraSpec::GL) {
    auto rep = gl_module(t, o.max_dim);
    dim = rep.dim();
    if (export_only || !o.json_path.empty()) j = export_gl(rep);
  } else {
    auto rep = bcd_module(t, o.max_dim);
    dim = rep.dim();
    if (export_only || !o.json_path.empty()) j = export_bcd(rep);
  }
  if (export_only) {
    write_json(o.json_path, j);
    return 0;
  }
  std::cout << "algebra " << t.alg.name() << (t.alg.kind == AlgebraSpec::SO ? std::to_string(t.alg.N) : "") << "\n";
  std::cout << "lambda " << join_half(t.lambda) << "\n";
  std::cout << "dim " << dim << "\n";
  if (!o.json_path.empty()) write_json(o.json_path, j);
  return 0;
}

struct Suite {
  std::vector<std::pair<std::string, bool>> results;
  void add(const std::string& name, const std::function<bool()>& f) {
    bool ok = false;
    try {
      ok = f();
    } catch (const Refusal&) {
      throw;
    } catch (const std::exception& e) {
      std::cerr << name << ": " << e.what() << "\n";
      ok = false;
    }
    results.emplace_back(name, ok);
    std::cout << (ok ? "pass " : "FAIL ") << name << std::endl;
  }
  bool all() const {
    for (const auto& r : results)
      if (!r.second) return false;
    return true;
  }
};

void verify_gl(const Target& t, const Options& o, Suite& s) {
  auto rep = gl_module(t, o.max_dim);
  const int n = rep.n;
  const std::size_t d = rep.dim();
  s.add("dim = pattern count = Weyl", [&] {
    return Rat(static_cast<long>(d)) == weyl_dim(Series::A, t.lambda) && enumerate(Family::A, t.lambda).size() == d;
  });
  s.add("commutators", [&] {
    for (int i = 1; i <= n; ++i)
      for (int j = 1; j <= n; ++j)
        for (int k = 1; k <= n; ++k)
          for (int l = 1; l <= n; ++l) {
            SparseMat rhs(d, d);
            if (j == k) rhs += rep.gen(i, l);
            if (l == i) rhs -= rep.gen(k, j);
            if (!(commutator(rep.gen(i, j), rep.gen(k, l)) == rhs)) return false;
          }
    return true;
  });
  s.add("adjointness", [&] {
    for (int k = 1; k < n; ++k)
      for (std::size_t a = 0; a < d; ++a)
        for (std::size_t b = 0; b < d; ++b)
          if (rep.normsq[a] * rep.gen(k, k + 1).get(a, b) != rep.normsq[b] * rep.gen(k + 1, k).get(b, a)) return false;
    return true;
  });
  s.add("basis via lowering operators", [&] {
    auto vs = basis_via_lowering(rep);
    for (std::size_t a = 0; a < d; ++a)
      if (vs[a] != unit_vec(d, a)) return false;
    return true;
  });
  s.add("Capelli determinant", [&] {
    std::vector<Rat> poly{1};
    for (int i = 1; i <= n; ++i) {
      const Rat li = half(t.lambda[static_cast<std::size_t>(i - 1)]) - i + 1;
      std::vector<Rat> next(poly.size() + 1);
      for (std::size_t k = 0; k < poly.size(); ++k) {
        next[k] += li * poly[k];
        next[k + 1] += poly[k];
      }
      poly = next;
    }
    if (!(capelli_det(rep, n) == OpPoly::scalar(d, poly))) return false;
    for (int i = 1; i < n; ++i)
      if (!capelli_interpolation_check(rep, i)) return false;
    return true;
  });
  s.add("quantum minors and z operators", [&] {
    for (int i = 1; i < n; ++i)
      if (!tau_equals_z_check(rep, i)) return false;
    return true;
  });
  s.add("Drinfeld generators", [&] {
    for (int m = 1; m <= n; ++m)
      if (!drinfeld_check(rep, m)) return false;
    auto ks = kappa_basis(rep);
    return rank(ks) == d;
  });
  s.add("GT subalgebra eigenvalues", [&] {
    std::set<std::vector<std::vector<Rat>>> seen;
    for (const auto& p : rep.basis) seen.insert(gt_eigenvalues(p));
    return gt_eigen_check(rep) && seen.size() == d;
  });
  s.add("characteristic identity", [&] { return characteristic_identity_check(rep).ok(); });
  s.add("character = Schur polynomial", [&] {
    const Doubled shift = t.lambda.back();
    std::vector<int> shape;
    for (auto x : t.lambda) {
      if ((x - shift) % 2 != 0) return false;
      shape.push_back(static_cast<int>((x - shift) / 2));
    }
    std::map<std::vector<int>, long> ch;
    for (const auto& p : rep.basis) {
      std::vector<int> e;
      for (Doubled w : weight(p)) e.push_back(static_cast<int>((w - shift) / 2));
      ++ch[e];
    }
    return ch == schur_poly(shape, n);
  });
}

void verify_bcd(const Target& t, const Options& o, Suite& s) {
  auto rep = bcd_module(t, o.max_dim);
  const Series ser = t.alg.series();
  const DWeight w = t.build_weight();
  const Rat wd = t.s4 ? weyl_dim(ser, w) : weyl_dim_nonpositive(ser, w);
  s.add("dim = pattern count = Weyl", [&] {
    return Rat(static_cast<long>(rep.dim())) == wd && Rat(static_cast<long>(enumerate(t.family(), w).size())) == wd;
  });
  s.add("commutators", [&] { return bcd_commutators_ok(rep); });
  s.add("highest vector", [&] { return bcd_highest_vector_ok(rep); });
  s.add("adjointness", [&] { return bcd_adjoint_ok(rep); });
  if (t.s4) {
    auto b = orth_gt_basis(rep);
    s.add("orthogonal GT basis count", [&] { return b.vectors.size() == rep.dim() && rank(b.vectors) == rep.dim(); });
    s.add("orthogonal GT basis Gram matrix", [&] { return orth_gram_ok(rep, b); });
    return;
  }
  Mickelsson M(rep);
  const auto children = branch_children(ser, w);
  s.add("branching sum", [&] {
    Rat total = 0;
    for (const auto& b : children) total += Rat(static_cast<long>(b.multiplicity())) * weyl_dim_nonpositive(ser, b.mu);
    return total == wd;
  });
  s.add("multiplicity bases", [&] {
    for (const auto& b : children) {
      auto mb = multiplicity_basis(M, b.mu);
      if (mb.vectors.size() != b.multiplicity() || rank(mb.vectors) != b.multiplicity()) return false;
      if (ser == Series::C && Rat(static_cast<long>(b.multiplicity())) != c_multiplicity_formula(w, b.mu)) return false;
    }
    return true;
  });
  s.add("GT basis", [&] {
    auto g = gt_basis_bcd(M);
    return g.vectors.size() == rep.dim() && rank(g.vectors) == rep.dim();
  });
  s.add("z_ia weight shifts", [&] { return zia_weight_shift_ok(M); });
  s.add("z_ia commutativity", [&] { return zia_commute_ok(M); });
  s.add("interpolation nodes", [&] {
    interp_node_check(M);
    return true;
  });
  std::vector<ZabOperators> Z;
  for (const auto& b : children) Z.push_back(zab_operators(M, b.mu));
  s.add("Z_ab symmetry relation", [&] {
    for (const auto& z : Z)
      if (!zab_symmetry_ok(z, ser, t.n)) return false;
    return true;
  });
  s.add("Z_ab commutativity", [&] {
    for (const auto& z : Z)
      if (!zab_commute_ok(z)) return false;
    return true;
  });
  s.add("Z_{n,-n} = interpolation polynomial", [&] {
    for (const auto& z : Z)
      if (!zab_interp_ok(M, z)) return false;
    return true;
  });
  s.add("twisted Yangian module structure", [&] {
    for (const auto& z : Z)
      if (!zab_yangian_ok(M, z)) return false;
    return true;
  });
  if (ser == Series::C)
    s.add("F_nn and F_{n,-n} displays", [&] {
      for (const auto& b : children)
        if (!fnn_action_check(M, b.mu)) return false;
      return true;
    });
}

int cmd_verify(const Options& o) {
  const Target t = parse_target(o);
  Suite s;
  if (t.alg.kind == AlgebraSpec::GL)
    verify_gl(t, o, s);
  else
    verify_bcd(t, o, s);
  std::size_t failed = 0;
  for (const auto& r : s.results) failed += !r.second;
  std::cout << (failed ? std::to_string(failed) + " of " + std::to_string(s.results.size()) + " checks failed"
                       : "all " + std::to_string(s.results.size()) + " checks passed")
            << "\n";
  if (!o.json_path.empty()) {
    ojson j = ojson::object();
    for (const auto& [name, ok] : s.results) j[name] = ok;
    write_json(o.json_path, j);
  }
  return failed ? 1 : 0;
}

int cmd_yangian(const Options& o) {
  std::vector<HWString> f;
  for (const auto& arg : o.args)
    for (const auto& item : split(arg, ',')) {
      auto ab = split(item, ':');
      if (ab.size() != 2) throw UsageError("strings are written alpha:beta, e.g. 1:0,3:2");
      HWString s{parse_value(ab[0]), parse_value(ab[1])};
      const Rat len = s.alpha - s.beta;
      if (len.get_den() != 1 || len < 0) throw UsageError("alpha - beta must be a non-negative integer: " + item);
      f.push_back(s);
    }
  if (f.empty() || f.size() > 3) throw UsageError("yangian-demo takes 1 to 3 strings");
  std::vector<Rat> deltas;
  if (!o.delta.empty()) deltas.push_back(parse_value(o.delta));

  auto L = build_tensor_module(f);
  cap(Rat(static_cast<long>(L.dim)), o.max_dim);
  std::cout << "dim " << L.dim << "\n";
  Suite s;
  const bool small = L.dim <= 8;
  std::cout << "irreducible Y(2): " << (irreducible_Y2(f) ? "yes" : "no") << "\n";
  if (small) s.add("Y(2) irreducibility = generated algebra", [&] { return irreducible_Y2(f) == brute_irreducible_Y2(L); });
  s.add("highest vector", [&] { return highest_vector_ok(L); });
  s.add("RTT relation", [&] {
    return rtt_ok(L, {{1, 2}, {Rat(1, 3), -2}, {0, 5}, {-1, Rat(7, 2)}, {3, -4}, {Rat(-5, 2), Rat(1, 2)}});
  });
  s.add("quantum determinant", [&] { return qdet_ok(L); });
  {
    const OpPoly d = quantum_det(L);
    std::vector<Rat> c;
    for (const auto& m : d.coeffs()) c.push_back(m.get(0, 0));
    std::cout << "d(u) = " << poly_string(c) << "\n";
  }
  std::vector<std::string> refused;
  try {
    auto E = eta_basis(L);
    s.add("eta basis actions", [&] { return actt_check(L, E).all(); });
    s.add("S_{n,-n} action, Y-", [&] { return snn_action_ok(L, E, -1); });
    for (const auto& d : deltas) s.add("S_{n,-n} action, Y+ delta=" + fmt(d), [&] { return snn_action_ok(L, E, 1, d); });
  } catch (const Refusal& e) {
    refused.push_back(e.what());
  }
  std::cout << "irreducible Y-(2): " << (irreducible_Yminus(f) ? "yes" : "no") << "\n";
  if (small) s.add("Y- irreducibility = generated algebra", [&] { return irreducible_Yminus(f) == brute_irreducible_twisted(L, -1); });
  s.add("Y- symmetry relation", [&] { return twisted_symmetry_ok(L, -1); });
  s.add("Y- commutativity", [&] { return twisted_commute_ok(L, -1); });
  for (const auto& d : deltas) {
    std::cout << "irreducible Y+(2), delta=" << fmt(d) << ": " << (irreducible_Yplus(f, d) ? "yes" : "no") << "\n";
    if (small)
      s.add("Y+ irreducibility = generated algebra", [&] { return irreducible_Yplus(f, d) == brute_irreducible_twisted(L, 1, d); });
    s.add("Y+ symmetry relation", [&] { return twisted_symmetry_ok(L, 1, d); });
    s.add("Y+ commutativity", [&] { return twisted_commute_ok(L, 1, d); });
  }
  auto twisted = [&](int sign, const Rat& d) {
    try {
      auto X = twisted_basis(L, sign, d);
      std::vector<Vec> vs;
      for (const auto& [g, v] : X) vs.push_back(v);
      s.add(std::string("twisted basis, ") + (sign < 0 ? "Y-" : "Y+ delta=" + fmt(d)), [&] { return rank(vs) == L.dim; });
    } catch (const Refusal& e) {
      refused.push_back(e.what());
    }
  };
  twisted(-1, 0);
  for (const auto& d : deltas) twisted(1, d);
  for (const auto& r : refused) std::cerr << "refused: " << r << "\n";
  if (!o.json_path.empty()) {
    ojson j = ojson::object();
    for (const auto& [name, ok] : s.results) j[name] = ok;
    j["refused"] = refused;
    write_json(o.json_path, j);
  }
  if (!refused.empty()) return 3;
  return s.all() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Gelfand-Tsetlin bases: build, verify and export representations"};
  app.require_subcommand(1);
  Options o;
  const std::vector<std::pair<std::string, std::string>> verbs = {
      {"build", "construct the module and print its size"},
      {"verify", "run the identity checks for a module"},
      {"dims", "dimension from the Weyl formula"},
      {"branch", "branching to the next smaller algebra"},
      {"patterns", "list the Gelfand-Tsetlin patterns"},
      {"yangian-demo", "Y(2) and twisted Yangian checks on strings alpha:beta"},
      {"export", "write the module as JSON (stdout unless --json)"}};
  for (const auto& [name, desc] : verbs) {
    auto* sub = app.add_subcommand(name, desc);
    sub->add_option("args", o.args, name == "yangian-demo" ? "strings alpha:beta" : "[algebra] weight")
        ->allow_extra_args();
    sub->add_option("--json", o.json_path, "write JSON output to this path");
    sub->add_option("--max-dim", o.max_dim, "desk-scale dimension cap")->check(CLI::PositiveNumber);
    sub->add_option("--series", o.series, "gl, so or sp (instead of the algebra argument)")
        ->check(CLI::IsMember({"gl", "so", "sp"}));
    sub->add_option("--convention", o.convention, "s3 (non-positive weights) or s4 (positive), so/sp only")
        ->check(CLI::IsMember({"s3", "s4"}));
    if (name == "yangian-demo") sub->add_option("--delta", o.delta, "W(delta) parameter for Y+");
    sub->callback([&o, name = name] { o.verb = name; });
  }
  std::vector<std::string> fixed(argv + 1, argv + argc);
  std::reverse(fixed.begin(), fixed.end());
  try {
    app.parse(fixed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << "\n" << app.help();
    return 2;
  }
  try {
    if (o.verb == "dims") return cmd_dims(o);
    if (o.verb == "patterns") return cmd_patterns(o);
    if (o.verb == "branch") return cmd_branch(o);
    if (o.verb == "build") return cmd_build(o, false);
    if (o.verb == "export") return cmd_build(o, true);
    if (o.verb == "verify") return cmd_verify(o);
    if (o.verb == "yangian-demo") return cmd_yangian(o);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n" << app.help();
    return 2;
  } catch (const NonDominantWeight& e) {
    std::cerr << "refused: precondition failed: " << e.what() << "\n";
    return 3;
  } catch (const Refusal& e) {
    std::cerr << "refused: " << e.what() << "\n";
    return 3;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n" << app.help();
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  std::cerr << app.help();
  return 2;
}
