#include "gtb/patterns.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>

namespace gtb {

std::string family_name(Family f) {
  switch (f) {
    case Family::A: return "A";
    case Family::B3: return "B3";
    case Family::C3: return "C3";
    case Family::D3: return "D3";
    case Family::B4: return "B4";
    case Family::D4: return "D4";
  }
  return "?";
}

namespace {

bool interleaved_layout(Family f) { return f == Family::D3 || f == Family::D4; }

// index in rows[] of λ_k and λ'_k
std::size_t idx_lam(const Pattern& p, int k) {
  if (p.family == Family::A) return static_cast<std::size_t>(p.n - k);
  if (interleaved_layout(p.family)) return static_cast<std::size_t>(2 * (p.n - k));
  return static_cast<std::size_t>(2 * (p.n - k));
}

std::size_t idx_lamp(const Pattern& p, int k) {
  if (p.family == Family::A) throw std::logic_error("A patterns have no primed rows");
  if (interleaved_layout(p.family)) return static_cast<std::size_t>(2 * (p.n - k) - 1);
  return static_cast<std::size_t>(2 * (p.n - k) + 1);
}

std::size_t expected_rows(Family f, int n) {
  if (f == Family::A) return static_cast<std::size_t>(n);
  if (interleaved_layout(f)) return static_cast<std::size_t>(2 * n - 1);
  return static_cast<std::size_t>(2 * n);
}

bool even(Doubled x) { return x % 2 == 0; }

}  // namespace

const DWeight& Pattern::row(int k) const { return rows.at(idx_lam(*this, k)); }
const DWeight& Pattern::rowp(int k) const { return rows.at(idx_lamp(*this, k)); }
Doubled Pattern::lam(int k, int i) const { return row(k).at(static_cast<std::size_t>(i - 1)); }
Doubled Pattern::lamp(int k, int i) const { return rowp(k).at(static_cast<std::size_t>(i - 1)); }

void check_shape(const Pattern& p) {
  if (p.n < 1) throw MalformedPattern("pattern rank must be positive");
  if (p.rows.size() != expected_rows(p.family, p.n)) throw MalformedPattern("wrong number of rows");
  for (int k = 1; k <= p.n; ++k) {
    if (p.row(k).size() != static_cast<std::size_t>(k)) throw MalformedPattern("wrong row length");
    if (p.family == Family::A) continue;
    if (interleaved_layout(p.family)) {
      if (k < p.n && p.rowp(k).size() != static_cast<std::size_t>(k)) throw MalformedPattern("wrong primed row length");
    } else if (p.rowp(k).size() != static_cast<std::size_t>(k)) {
      throw MalformedPattern("wrong primed row length");
    }
  }
  if (p.family == Family::B3) {
    if (p.sigma.size() != static_cast<std::size_t>(p.n)) throw MalformedPattern("B3 needs one σ per level");
    for (int s : p.sigma)
      if (s != 0 && s != 1) throw MalformedPattern("σ must be 0 or 1");
  } else if (!p.sigma.empty()) {
    throw MalformedPattern("σ flags only exist for B3");
  }
}

bool is_dominant(Family f, const DWeight& l) {
  const std::size_t n = l.size();
  if (n == 0) return false;
  for (std::size_t i = 0; i + 1 < n; ++i)
    if (l[i] < l[i + 1] || !even(l[i] - l[i + 1])) return false;
  switch (f) {
    case Family::A: return true;
    case Family::B3: return l[0] <= 0;
    case Family::C3: return l[0] <= 0 && even(l[0]);
    case Family::D3:
      if (n == 1) return true;
      return l[0] + l[1] <= 0 && even(l[0] + l[1]);
    case Family::B4: return l[n - 1] >= 0;
    case Family::D4:
      if (n == 1) return true;
      return l[n - 2] + l[n - 1] >= 0 && even(l[n - 2] + l[n - 1]);
  }
  return false;
}

void check_dominant(Family f, const DWeight& l) {
  if (!is_dominant(f, l)) throw NonDominantWeight("highest weight violates the dominance conditions of family " + family_name(f));
}

bool validate(const Pattern& p) {
  check_shape(p);
  const int n = p.n;
  const DWeight& top = p.row(n);
  if (!is_dominant(p.family, top)) return false;
  const bool parity = even(top[0]);
  std::vector<const DWeight*> all;
  for (const auto& r : p.rows) all.push_back(&r);
  if (p.family != Family::A)
    for (const auto* r : all)
      for (Doubled x : *r)
        if (even(x) != parity) return false;

  auto ge = [](Doubled a, Doubled b) { return a >= b; };
  switch (p.family) {
    case Family::A:
      for (int k = 2; k <= n; ++k)
        for (int i = 1; i < k; ++i) {
          if (!ge(p.lam(k, i), p.lam(k - 1, i)) || !ge(p.lam(k - 1, i), p.lam(k, i + 1))) return false;
          if (!even(p.lam(k, i) - p.lam(k - 1, i))) return false;
        }
      return true;
    case Family::B3:
    case Family::C3:
      for (int k = 1; k <= n; ++k) {
        if (p.family == Family::C3 && p.lamp(k, 1) > 0) return false;
        // non-positive entries
        for (int i = 1; i <= k; ++i)
          if (p.lam(k, i) > 0 || p.lamp(k, i) > 0) return false;
        for (int i = 1; i <= k; ++i) {
          if (!ge(p.lamp(k, i), p.lam(k, i))) return false;
          if (i < k && !ge(p.lam(k, i), p.lamp(k, i + 1))) return false;
        }
        if (k >= 2)
          for (int i = 1; i < k; ++i)
            if (!ge(p.lamp(k, i), p.lam(k - 1, i)) || !ge(p.lam(k - 1, i), p.lamp(k, i + 1))) return false;
        if (p.family == Family::B3 && p.sigma[static_cast<std::size_t>(k - 1)] == 1) {
          // integer case: λ'_k1 ≤ -1; half-integer entries are already ≤ -1/2
          if (parity && p.lamp(k, 1) > -2) return false;
        }
      }
      return true;
    case Family::D3:
      for (int k = 2; k <= n; ++k) {
        if (!ge(-std::abs(p.lam(k, 1)), p.lamp(k - 1, 1))) return false;
        for (int i = 1; i < k; ++i) {
          if (!ge(p.lamp(k - 1, i), p.lam(k, i + 1))) return false;
          if (i + 1 < k && !ge(p.lam(k, i + 1), p.lamp(k - 1, i + 1))) return false;
        }
        if (!ge(-std::abs(p.lam(k - 1, 1)), p.lamp(k - 1, 1))) return false;
        for (int i = 1; i < k; ++i) {
          if (i >= 2 && !ge(p.lamp(k - 1, i - 1), p.lam(k - 1, i))) return false;
          if (i >= 2 && !ge(p.lam(k - 1, i), p.lamp(k - 1, i))) return false;
        }
        // non-positive entries apart from the first entry of each unprimed row
        for (int i = 1; i < k; ++i)
          if (p.lamp(k - 1, i) > 0) return false;
        for (int i = 2; i <= k; ++i)
          if (p.lam(k, i) > 0) return false;
      }
      return true;
    case Family::B4:
      for (int k = 1; k <= n; ++k) {
        for (int i = 1; i < k; ++i)
          if (!ge(p.lam(k, i), p.lamp(k, i)) || !ge(p.lamp(k, i), p.lam(k, i + 1))) return false;
        if (!ge(p.lam(k, k), std::abs(p.lamp(k, k)))) return false;
        if (k >= 2) {
          for (int i = 1; i < k; ++i)
            if (!ge(p.lamp(k, i), p.lam(k - 1, i))) return false;
          for (int i = 1; i < k - 1; ++i)
            if (!ge(p.lam(k - 1, i), p.lamp(k, i + 1))) return false;
          if (!ge(p.lam(k - 1, k - 1), std::abs(p.lamp(k, k)))) return false;
        }
      }
      return true;
    case Family::D4:
      for (int k = 2; k <= n; ++k) {
        for (int i = 1; i < k; ++i)
          if (!ge(p.lam(k, i), p.lamp(k - 1, i))) return false;
        for (int i = 1; i < k - 1; ++i)
          if (!ge(p.lamp(k - 1, i), p.lam(k, i + 1))) return false;
        if (!ge(p.lamp(k - 1, k - 1), std::abs(p.lam(k, k)))) return false;
      }
      for (int k = 1; k < n; ++k) {
        for (int i = 1; i < k; ++i)
          if (!ge(p.lamp(k, i), p.lam(k, i)) || !ge(p.lam(k, i), p.lamp(k, i + 1))) return false;
        if (!ge(p.lamp(k, k), std::abs(p.lam(k, k)))) return false;
      }
      return true;
  }
  return false;
}

// ------------------------------------------------------------- enumeration

namespace {

struct Interval {
  Doubled lo, hi;
};

// All rows with entries in the given intervals (step 2), descending lex.
void rows_in(const std::vector<Interval>& iv, std::vector<DWeight>& out) {
  DWeight cur(iv.size());
  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    if (i == iv.size()) {
      out.push_back(cur);
      return;
    }
    for (Doubled x = iv[i].hi; x >= iv[i].lo; x -= 2) {
      cur[i] = x;
      rec(i + 1);
    }
  };
  rec(0);
}

// Align the endpoint of an interval with the parity of the weight.
Interval fit(Doubled lo, Doubled hi, bool parity_even) {
  if (even(lo) != parity_even) ++lo;
  if (even(hi) != parity_even) --hi;
  return {lo, hi};
}

}  // namespace

std::vector<Doubled> order_key(const Pattern& p) {
  std::vector<Doubled> key;
  for (std::size_t r = 0; r < p.rows.size(); ++r) {
    key.insert(key.end(), p.rows[r].begin(), p.rows[r].end());
    if (p.family == Family::B3 && r % 2 == 1) {
      int k = p.n - static_cast<int>(r / 2);
      key.push_back(p.sigma[static_cast<std::size_t>(k - 1)]);
    }
  }
  return key;
}

std::vector<Pattern> enumerate(Family f, const DWeight& lambda) {
  check_dominant(f, lambda);
  const int n = static_cast<int>(lambda.size());
  const bool pe = even(lambda[0]);
  std::vector<Pattern> out;
  Pattern cur;
  cur.family = f;
  cur.n = n;
  cur.rows.assign(expected_rows(f, n), {});
  if (f == Family::B3) cur.sigma.assign(static_cast<std::size_t>(n), 0);
  cur.rows[0] = lambda;

  // For each family the array is filled row by row; next(r) fills rows[r].
  std::function<void(std::size_t)> next = [&](std::size_t r) {
    if (r == cur.rows.size()) {
      if (!validate(cur)) throw std::logic_error("enumerate produced an invalid pattern");
      out.push_back(cur);
      return;
    }
    const DWeight& above = cur.rows[r - 1];
    std::vector<Interval> iv;
    const std::size_t m = above.size();
    bool primed_step;  // is rows[r] a primed row?
    if (f == Family::A) {
      for (std::size_t i = 0; i + 1 < m; ++i) iv.push_back({above[i + 1], above[i]});
      std::vector<DWeight> cands;
      rows_in(iv, cands);
      for (auto& c : cands) {
        cur.rows[r] = c;
        next(r + 1);
      }
      return;
    }
    primed_step = interleaved_layout(f) ? (r % 2 == 1) : (r % 2 == 1);
    switch (f) {
      case Family::B3:
      case Family::C3:
        if (primed_step) {  // λ'_k from λ_k: λ'_k1 ∈ [λ_k1, 0], λ'_ki ∈ [λ_ki, λ_{k,i-1}]
          for (std::size_t i = 0; i < m; ++i) iv.push_back(fit(above[i], i == 0 ? 0 : above[i - 1], pe));
        } else {  // λ_{k-1} from λ'_k: λ'_ki ≥ λ_{k-1,i} ≥ λ'_{k,i+1}
          for (std::size_t i = 0; i + 1 < m; ++i) iv.push_back({above[i + 1], above[i]});
        }
        break;
      case Family::D3:
        if (primed_step) {  // λ'_{k-1} from λ_k
          for (std::size_t i = 0; i + 1 < m; ++i) {
            Doubled hi = i == 0 ? -std::abs(above[0]) : above[i];
            iv.push_back({above[i + 1], hi});
          }
        } else {  // λ_{k-1} from λ'_{k-1}: λ_{k-1,1} ∈ [λ', -λ'], λ_{k-1,i} ∈ [λ'_i, λ'_{i-1}]
          for (std::size_t i = 0; i < m; ++i) {
            if (i == 0)
              iv.push_back({above[0], -above[0]});
            else
              iv.push_back({above[i], above[i - 1]});
          }
        }
        break;
      case Family::B4:
        if (primed_step) {  // λ'_k from λ_k
          for (std::size_t i = 0; i + 1 < m; ++i) iv.push_back({above[i + 1], above[i]});
          iv.push_back({-above[m - 1], above[m - 1]});
        } else {  // λ_{k-1} from λ'_k
          for (std::size_t i = 0; i + 2 < m; ++i) iv.push_back({above[i + 1], above[i]});
          if (m >= 2) iv.push_back({std::abs(above[m - 1]), above[m - 2]});
        }
        break;
      case Family::D4:
        if (primed_step) {  // λ'_{k-1} from λ_k
          for (std::size_t i = 0; i + 2 < m; ++i) iv.push_back({above[i + 1], above[i]});
          if (m >= 2) iv.push_back({std::abs(above[m - 1]), above[m - 2]});
        } else {  // λ_{k-1} from λ'_{k-1}, same length
          for (std::size_t i = 0; i + 1 < m; ++i) iv.push_back({above[i + 1], above[i]});
          iv.push_back({-above[m - 1], above[m - 1]});
        }
        break;
      case Family::A: break;
    }
    std::vector<DWeight> cands;
    rows_in(iv, cands);
    for (auto& c : cands) {
      cur.rows[r] = c;
      if (f == Family::B3 && primed_step) {
        int k = n - static_cast<int>(r / 2);
        auto& s = cur.sigma[static_cast<std::size_t>(k - 1)];
        for (int sv : {1, 0}) {
          if (sv == 1 && c[0] >= 0) continue;
          s = sv;
          next(r + 1);
        }
        s = 0;
      } else {
        next(r + 1);
      }
    }
  };
  if (cur.rows.size() == 1) {
    out.push_back(cur);
    return out;
  }
  next(1);
  return out;
}

DWeight weight(const Pattern& p) {
  if (!validate(p)) throw std::invalid_argument("weight of an invalid pattern");
  const int n = p.n;
  DWeight w(static_cast<std::size_t>(n));
  auto sum = [](const DWeight& r) {
    Doubled s = 0;
    for (auto x : r) s += x;
    return s;
  };
  switch (p.family) {
    case Family::A:
      for (int k = 1; k <= n; ++k) w[static_cast<std::size_t>(k - 1)] = sum(p.row(k)) - (k > 1 ? sum(p.row(k - 1)) : 0);
      return w;
    case Family::B3:
    case Family::C3:
      for (int k = 1; k <= n; ++k) {
        Doubled v = 2 * sum(p.rowp(k)) - sum(p.row(k)) - (k > 1 ? sum(p.row(k - 1)) : 0);
        if (p.family == Family::B3) v += 2 * p.sigma[static_cast<std::size_t>(k - 1)];
        w[static_cast<std::size_t>(k - 1)] = v;
      }
      return w;
    case Family::D3:
      w[0] = p.lam(1, 1);
      for (int k = 2; k <= n; ++k) {
        Doubled nu0 = std::max(p.lam(k, 1), p.lam(k - 1, 1));
        w[static_cast<std::size_t>(k - 1)] = 2 * (nu0 + sum(p.rowp(k - 1))) - sum(p.row(k)) - sum(p.row(k - 1));
      }
      return w;
    case Family::B4:
    case Family::D4:
      throw std::logic_error("orthogonal-chain bases are not weight bases");
  }
  return w;
}

// ---------------------------------------------------------------- tableaux

bool is_semistandard(const SemistandardTableau& t) {
  for (std::size_t r = 0; r < t.rows.size(); ++r) {
    if (t.rows[r].empty()) return false;
    if (r > 0 && t.rows[r].size() > t.rows[r - 1].size()) return false;
    for (std::size_t c = 0; c < t.rows[r].size(); ++c) {
      if (t.rows[r][c] < 1) return false;
      if (c > 0 && t.rows[r][c] < t.rows[r][c - 1]) return false;
      if (r > 0 && t.rows[r][c] <= t.rows[r - 1][c]) return false;
    }
  }
  return true;
}

SemistandardTableau pattern_to_tableau(const Pattern& p) {
  if (p.family != Family::A) throw std::invalid_argument("tableaux correspond to A patterns only");
  if (!validate(p)) throw std::invalid_argument("invalid pattern");
  for (const auto& r : p.rows)
    for (Doubled x : r)
      if (x < 0 || !even(x)) throw std::invalid_argument("tableau bijection needs a partition (entries ≥ 0, integral)");
  const int n = p.n;
  SemistandardTableau t;
  const DWeight& top = p.row(n);
  for (Doubled x : top)
    if (x > 0) t.rows.emplace_back();
  for (int k = 1; k <= n; ++k) {
    for (int i = 1; i <= k; ++i) {
      Doubled prev = (k > 1 && i < k) ? p.lam(k - 1, i) : 0;
      for (Doubled c = prev / 2; c < p.lam(k, i) / 2; ++c) t.rows[static_cast<std::size_t>(i - 1)].push_back(k);
    }
  }
  return t;
}

Pattern tableau_to_pattern(const SemistandardTableau& t, int n) {
  if (!is_semistandard(t)) throw std::invalid_argument("not a semistandard tableau");
  Pattern p;
  p.family = Family::A;
  p.n = n;
  p.rows.assign(static_cast<std::size_t>(n), {});
  for (int k = 1; k <= n; ++k) {
    DWeight r(static_cast<std::size_t>(k), 0);
    for (std::size_t i = 0; i < t.rows.size(); ++i) {
      long cnt = std::count_if(t.rows[i].begin(), t.rows[i].end(), [k](int e) { return e <= k; });
      if (cnt > 0 && i >= static_cast<std::size_t>(k)) throw std::invalid_argument("tableau has too many rows for n");
      if (i < static_cast<std::size_t>(k)) r[i] = 2 * cnt;
    }
    for (const auto& row : t.rows)
      for (int e : row)
        if (e > n) throw std::invalid_argument("tableau entry exceeds n");
    p.rows[static_cast<std::size_t>(n - k)] = r;
  }
  return p;
}

DWeight s3_to_standard(const DWeight& lambda) {
  DWeight a(lambda.size());
  for (std::size_t i = 0; i < lambda.size(); ++i) a[i] = -lambda[lambda.size() - 1 - i];
  return a;
}

DWeight standard_to_s3(const DWeight& a) { return s3_to_standard(a); }

}  // namespace gtb
