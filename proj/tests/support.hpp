// Independent reference implementations used as test oracles. Everything here
// is deliberately naive: plain boolean matrices and literal quantifiers.
#pragma once

#include "planelog/formula.hpp"
#include "planelog/frame.hpp"
#include "planelog/semantics.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <string>
#include <vector>

namespace oracle {

using planelog::Formula;
using planelog::FormulaKind;
using planelog::OneFrame;
using Mat = std::vector<std::vector<bool>>;

inline Mat matrix(const OneFrame& f) {
  Mat m(f.size(), std::vector<bool>(f.size()));
  for (std::size_t i = 0; i < f.size(); ++i)
    for (std::size_t j = 0; j < f.size(); ++j) m[i][j] = f.related(i, j);
  return m;
}

inline Mat mul(const Mat& a, const Mat& b) {
  const std::size_t n = a.size();
  Mat c(n, std::vector<bool>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k)
      if (a[i][k])
        for (std::size_t j = 0; j < n; ++j)
          if (b[k][j]) c[i][j] = true;
  return c;
}

inline Mat mpow(const Mat& a, std::size_t k) {
  Mat r(a.size(), std::vector<bool>(a.size()));
  for (std::size_t i = 0; i < a.size(); ++i) r[i][i] = true;
  while (k--) r = mul(r, a);
  return r;
}

inline bool o1(const OneFrame& f) {
  auto m = matrix(f), m2 = mpow(m, 2), m4 = mpow(m, 4);
  for (std::size_t a = 0; a < f.size(); ++a)
    for (std::size_t b = 0; b < f.size(); ++b)
      if (m4[a][b] && !m2[a][b]) return false;
  return true;
}

inline bool o2(const OneFrame& f) {
  auto m = matrix(f), m2 = mpow(m, 2), m3 = mpow(m, 3);
  for (std::size_t a = 0; a < f.size(); ++a)
    for (std::size_t b = 0; b < f.size(); ++b)
      if (!m2[a][b] && !m3[a][b]) return false;
  return true;
}

inline bool o3(const OneFrame& f) {
  const std::size_t n = f.size();
  auto I = matrix(f);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c)
        for (std::size_t d = 0; d < n; ++d)
          if (I[a][b] && I[b][c] && I[c][d] && I[d][a] && a != c && b != d) return false;
  return true;
}

inline bool o4(const OneFrame& f) {
  const std::size_t n = f.size();
  auto I = matrix(f);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c)
        for (std::size_t d = 0; d < n; ++d) {
          if (!(I[a][b] && I[b][c] && I[c][d]) || I[a][d]) continue;
          for (std::size_t e = 0; e < n; ++e)
            for (std::size_t g = 0; g < n; ++g) {
              if (!I[e][g]) continue;
              bool clear = true;
              for (std::size_t x : {a, b, c, d})
                if (I[x][e] || I[x][g]) clear = false;
              if (clear) return true;
            }
        }
  return false;
}

inline bool o4_prime(const OneFrame& f) {
  const std::size_t n = f.size();
  auto I = matrix(f);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c)
        for (std::size_t d = 0; d < n; ++d)
          if (I[a][b] && I[b][c] && a != c && b != d && !I[a][c] && !I[b][d]) return true;
  return false;
}

inline bool o5(const OneFrame& f) {
  auto m2 = mpow(matrix(f), 2);
  for (const auto& row : m2)
    for (bool x : row)
      if (!x) return false;
  return true;
}

inline bool serial(const OneFrame& f) {
  auto I = matrix(f);
  for (const auto& row : I)
    if (std::none_of(row.begin(), row.end(), [](bool x) { return x; })) return false;
  return true;
}

inline bool symmetric(const OneFrame& f) {
  auto I = matrix(f);
  for (std::size_t a = 0; a < f.size(); ++a)
    for (std::size_t b = 0; b < f.size(); ++b)
      if (I[a][b] != I[b][a]) return false;
  return true;
}

inline bool connected(const OneFrame& f) {
  const std::size_t n = f.size();
  if (n == 0) return true;
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x];
    return x;
  };
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      if (f.related(a, b)) parent[find(a)] = find(b);
  for (std::size_t a = 0; a < n; ++a)
    if (find(a) != find(0)) return false;
  return true;
}

inline bool quasi(const OneFrame& f) { return serial(f) && symmetric(f) && o1(f); }

// Number of distinct rows of I^2 (the I^2-classes on a quasi-1-plane).
inline std::size_t i2_class_count(const OneFrame& f) {
  auto m2 = mpow(matrix(f), 2);
  std::set<std::vector<bool>> rows(m2.begin(), m2.end());
  return rows.size();
}

// Truth by the textbook clauses, with <> read as ~[]~.
inline bool holds(const Mat& I, const std::map<std::string, std::set<std::size_t>>& val, const Formula& f,
                  std::size_t w) {
  switch (f.kind()) {
    case FormulaKind::Var: {
      auto it = val.find(f.name());
      return it != val.end() && it->second.count(w);
    }
    case FormulaKind::Not: return !holds(I, val, f.operand(), w);
    case FormulaKind::And: return holds(I, val, f.left(), w) && holds(I, val, f.right(), w);
    case FormulaKind::Box:
      for (std::size_t v = 0; v < I.size(); ++v)
        if (I[w][v] && !holds(I, val, f.operand(), v)) return false;
      return true;
    case FormulaKind::Dia:
      return !holds(I, val, Formula::box(Formula::negation(f.operand())), w);
  }
  return false;
}

inline std::map<std::string, std::set<std::size_t>> as_sets(const planelog::Model& m) {
  std::map<std::string, std::set<std::size_t>> out;
  for (const auto& [k, s] : m.valuation())
    for (auto i = s.find_first(); i != planelog::WorldSet::npos; i = s.find_next(i)) out[k].insert(i);
  return out;
}

// Frame validity by enumerating every valuation of the formula's variables.
inline bool valid(const OneFrame& fr, const Formula& f) {
  const auto vars = f.variables();
  const std::size_t n = fr.size(), bits = vars.size() * n;
  const auto I = matrix(fr);
  for (std::uint64_t v = 0; v < (std::uint64_t{1} << bits); ++v) {
    std::map<std::string, std::set<std::size_t>> val;
    for (std::size_t i = 0; i < vars.size(); ++i)
      for (std::size_t w = 0; w < n; ++w)
        if ((v >> (i * n + w)) & 1) val[vars[i]].insert(w);
    for (std::size_t w = 0; w < n; ++w)
      if (!holds(I, val, f, w)) return false;
  }
  return true;
}

// Random formulas over the given variables using every connective.
inline Formula random_formula(std::mt19937_64& rng, std::size_t depth, const std::vector<std::string>& vars) {
  std::uniform_int_distribution<int> pick(0, depth == 0 ? 0 : 7);
  const int k = pick(rng);
  auto sub = [&] { return random_formula(rng, depth == 0 ? 0 : depth - 1, vars); };
  switch (k) {
    case 0: return Formula::var(vars[rng() % vars.size()]);
    case 1: return Formula::negation(sub());
    case 2: return Formula::conjunction(sub(), sub());
    case 3: return Formula::disjunction(sub(), sub());
    case 4: return Formula::implication(sub(), sub());
    case 5: return Formula::box(sub());
    case 6: return Formula::dia(sub());
    default: return Formula::equivalence(sub(), sub());
  }
}

inline OneFrame random_frame(std::mt19937_64& rng, std::size_t n, double p, bool symmetric) {
  std::bernoulli_distribution coin(p);
  std::vector<planelog::Edge> e;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = symmetric ? a : 0; b < n; ++b)
      if (coin(rng)) e.emplace_back(a, b);
  return OneFrame(n, e, symmetric);
}

inline planelog::Model random_model(std::mt19937_64& rng, const OneFrame& f, const std::vector<std::string>& vars) {
  std::map<std::string, planelog::WorldSet> val;
  for (const auto& v : vars) {
    planelog::WorldSet s(f.size());
    for (std::size_t w = 0; w < f.size(); ++w) s[w] = rng() & 1;
    val.emplace(v, s);
  }
  return planelog::Model(f, val);
}

// Canonical form by trying every permutation: the sorted adjacency matrix
// rows under the best relabelling, flattened.
inline std::vector<bool> brute_canonical(const Mat& m) {
  const std::size_t n = m.size();
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<bool> best;
  do {
    std::vector<bool> code;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) code.push_back(m[perm[i]][perm[j]]);
    if (best.empty() || code < best) best = code;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

// Number of isomorphism classes of frames on n vertices, counted by
// canonicalising every labelled frame.
inline std::size_t brute_iso_count(std::size_t n, bool symmetric) {
  std::vector<std::pair<std::size_t, std::size_t>> slots;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = symmetric ? a : 0; b < n; ++b) slots.emplace_back(a, b);
  std::set<std::vector<bool>> seen;
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << slots.size()); ++bits) {
    Mat m(n, std::vector<bool>(n));
    for (std::size_t k = 0; k < slots.size(); ++k)
      if ((bits >> k) & 1) {
        m[slots[k].first][slots[k].second] = true;
        if (symmetric) m[slots[k].second][slots[k].first] = true;
      }
    seen.insert(brute_canonical(m));
  }
  return seen.size();
}

}  // namespace oracle
