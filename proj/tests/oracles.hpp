#pragma once

// Reference computations for the tests, written independently of the
// library algorithms. They read raw page data (generators, relations,
// pairing, curve classes, arc functionals) and recompute everything else.

#include <algorithm>
#include <cstdlib>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "obk/page.hpp"
#include "obk/twist.hpp"

namespace oracle {

using Int = boost::multiprecision::cpp_int;
using Vec = std::vector<Int>;
using Mat = std::vector<Vec>;  // row major

inline Int gcd(Int a, Int b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    Int r = a % b;
    a = b;
    b = r;
  }
  return a;
}

// Invariant factors by plain elimination: clear each pivot row and column by
// division with remainder, collect the diagonal, then repair divisibility with
// (a, b) -> (gcd, lcm). No transforms are tracked.
inline std::vector<Int> invariant_factors(Mat m) {
  std::size_t rows = m.size(), cols = rows ? m[0].size() : 0;
  std::vector<Int> diag;
  std::size_t t = 0;
  while (t < rows && t < cols) {
    std::size_t pr = rows, pc = cols;
    for (std::size_t r = t; r < rows && pr == rows; ++r)
      for (std::size_t c = t; c < cols; ++c)
        if (m[r][c] != 0) {
          pr = r;
          pc = c;
          break;
        }
    if (pr == rows) break;
    std::swap(m[t], m[pr]);
    for (auto& row : m) std::swap(row[t], row[pc]);
    // Reduce the pivot row and column modulo the pivot; any remainder is
    // smaller than the pivot and becomes the next pivot.
    for (;;) {
      for (std::size_t r = t + 1; r < rows; ++r) {
        Int q = m[r][t] / m[t][t];
        if (q != 0)
          for (std::size_t c = t; c < cols; ++c) m[r][c] -= q * m[t][c];
      }
      for (std::size_t c = t + 1; c < cols; ++c) {
        Int q = m[t][c] / m[t][t];
        if (q != 0)
          for (std::size_t r = t; r < rows; ++r) m[r][c] -= q * m[r][t];
      }
      std::size_t br = 0, bc = 0;
      Int best = 0;
      auto consider = [&](std::size_t r, std::size_t c) {
        Int v = m[r][c] < 0 ? Int(-m[r][c]) : m[r][c];
        if (v != 0 && (best == 0 || v < best)) {
          best = v;
          br = r;
          bc = c;
        }
      };
      for (std::size_t r = t + 1; r < rows; ++r) consider(r, t);
      for (std::size_t c = t + 1; c < cols; ++c) consider(t, c);
      if (best == 0) break;
      if (bc == t) std::swap(m[t], m[br]);
      else
        for (auto& row : m) std::swap(row[t], row[bc]);
    }
    diag.push_back(m[t][t] < 0 ? Int(-m[t][t]) : m[t][t]);
    ++t;
  }
  for (bool changed = true; changed;) {
    changed = false;
    for (std::size_t i = 0; i < diag.size(); ++i)
      for (std::size_t j = i + 1; j < diag.size(); ++j) {
        Int g = gcd(diag[i], diag[j]);
        if (g == 0 || g == diag[i]) continue;
        Int l = diag[i] / g * diag[j];
        diag[i] = g;
        diag[j] = l;
        changed = true;
      }
  }
  std::sort(diag.begin(), diag.end(), [](Int const& a, Int const& b) {
    if (a == 0 || b == 0) return a != 0 && b == 0;
    return a < b;
  });
  return diag;
}

struct Group {
  std::size_t free_rank = 0;
  std::vector<Int> torsion;
  friend bool operator==(Group const&, Group const&) = default;
};

// Z^generators modulo the given relation vectors.
inline Group quotient(std::vector<Vec> const& relations, std::size_t generators) {
  if (relations.empty()) return {generators, {}};
  Mat m(relations.size(), Vec(generators, 0));
  for (std::size_t r = 0; r < relations.size(); ++r)
    for (std::size_t c = 0; c < generators && c < relations[r].size(); ++c) m[r][c] = relations[r][c];
  Group g;
  std::size_t rank = 0;
  for (auto const& d : invariant_factors(m)) {
    if (d == 0) continue;
    ++rank;
    if (d > 1) g.torsion.push_back(d);
  }
  g.free_rank = generators - rank;
  return g;
}

inline Group cyclic(long long n) {
  n = std::llabs(n);
  if (n == 0) return {1, {}};
  if (n == 1) return {};
  return {0, {Int(n)}};
}

// Raw data pulled out of a page.
struct PageData {
  std::size_t n = 0;
  Mat pairing;
  std::vector<Vec> relations;
  std::map<int, Vec> arcs;
  std::map<std::string, Vec> curves;
  std::map<int, std::size_t> component_of_label;  // component index per label
  std::size_t components = 0;
};

inline PageData extract(obk::Page const& p) {
  PageData d;
  d.n = p.generator_count();
  d.pairing.assign(d.n, Vec(d.n, 0));
  for (std::size_t i = 0; i < d.n; ++i)
    for (std::size_t j = 0; j < d.n; ++j) d.pairing[i][j] = p.pairing_matrix()(i, j);
  for (auto const& r : p.relations()) d.relations.emplace_back(r.begin(), r.end());
  for (auto const& [l, a] : p.arcs()) d.arcs[l] = Vec(a.begin(), a.end());
  for (auto const& [name, c] : p.curves()) d.curves[name] = Vec(c.cls.begin(), c.cls.end());
  auto ids = p.component_ids();
  d.components = ids.size();
  for (int l : p.labels())
    d.component_of_label[l] = static_cast<std::size_t>(std::find(ids.begin(), ids.end(), p.component_of_label(l)) - ids.begin());
  return d;
}

inline Int form(PageData const& d, Vec const& x, Vec const& y) {
  Int s = 0;
  for (std::size_t i = 0; i < d.n; ++i)
    for (std::size_t j = 0; j < d.n; ++j) s += x[i] * d.pairing[i][j] * y[j];
  return s;
}

inline Int apply_functional(Vec const& f, Vec const& x) {
  Int s = 0;
  for (std::size_t i = 0; i < f.size() && i < x.size(); ++i) s += f[i] * x[i];
  return s;
}

// One twist applied to a vector, one exponent unit at a time.
inline Vec twist(PageData const& d, Vec x, Vec const& c, long long e) {
  long long steps = std::llabs(e), sign = e < 0 ? -1 : 1;
  for (long long s = 0; s < steps; ++s) {
    Int k = sign * form(d, x, c);
    for (std::size_t i = 0; i < d.n; ++i) x[i] += k * c[i];
  }
  return x;
}

struct Action {
  std::vector<Vec> images;          // image of each generator
  std::map<int, Vec> displacement;  // class swept by each arc
};

// Applies the word to vectors, rightmost letter first.
inline Action act(PageData const& d, obk::TwistWord const& w) {
  Action a;
  for (std::size_t g = 0; g < d.n; ++g) {
    Vec x(d.n, 0);
    x[g] = 1;
    for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it) x = twist(d, x, d.curves.at(it->curve), it->exponent);
    a.images.push_back(x);
  }
  for (auto const& [l, arc] : d.arcs) {
    Vec disp(d.n, 0);
    for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it) {
      Vec const& c = d.curves.at(it->curve);
      long long steps = std::llabs(it->exponent), sign = it->exponent < 0 ? -1 : 1;
      for (long long s = 0; s < steps; ++s) {
        disp = twist(d, disp, c, sign);
        Int k = sign * apply_functional(arc, c);
        for (std::size_t i = 0; i < d.n; ++i) disp[i] += k * c[i];
      }
    }
    a.displacement[l] = disp;
  }
  return a;
}

// Is v in the span of the relation rows? Decided by comparing quotients.
inline bool in_relations(PageData const& d, Vec const& v) {
  if (std::all_of(v.begin(), v.end(), [](Int const& x) { return x == 0; })) return true;
  std::vector<Vec> with = d.relations;
  with.push_back(v);
  Group a = quotient(d.relations, d.n), b = quotient(with, d.n);
  return a == b;
}

inline bool same_action(PageData const& d, Action const& a, Action const& b) {
  for (std::size_t g = 0; g < d.n; ++g) {
    Vec diff(d.n);
    for (std::size_t i = 0; i < d.n; ++i) diff[i] = a.images[g][i] - b.images[g][i];
    if (!in_relations(d, diff)) return false;
  }
  for (auto const& [l, da] : a.displacement) {
    Vec diff(d.n);
    for (std::size_t i = 0; i < d.n; ++i) diff[i] = da[i] - b.displacement.at(l)[i];
    if (!in_relations(d, diff)) return false;
  }
  return true;
}

inline bool is_identity(PageData const& d, Action const& a) {
  Action id;
  for (std::size_t g = 0; g < d.n; ++g) {
    Vec x(d.n, 0);
    x[g] = 1;
    id.images.push_back(x);
  }
  for (auto const& [l, v] : a.displacement) id.displacement[l] = Vec(d.n, 0);
  return same_action(d, a, id);
}

// H1 of the closed manifold: page classes plus one circle per component;
// relations phi(x) = x, the page relations and circle + displacement = 0
// at every binding circle (the base circle of a component has no arc).
inline Group manifold_h1(obk::Page const& p, obk::TwistWord const& w) {
  PageData d = extract(p);
  Action a = act(d, w);
  std::size_t total = d.n + d.components;
  std::vector<Vec> rels;
  for (auto const& r : d.relations) {
    Vec v(total, 0);
    std::copy(r.begin(), r.end(), v.begin());
    rels.push_back(v);
  }
  for (std::size_t g = 0; g < d.n; ++g) {
    Vec v(total, 0);
    for (std::size_t i = 0; i < d.n; ++i) v[i] = a.images[g][i];
    v[g] -= 1;
    rels.push_back(v);
  }
  for (auto const& [l, comp] : d.component_of_label) {
    Vec v(total, 0);
    auto it = a.displacement.find(l);
    if (it != a.displacement.end()) std::copy(it->second.begin(), it->second.end(), v.begin());
    v[d.n + comp] += 1;
    rels.push_back(v);
  }
  return quotient(rels, total);
}

// ---- free group / braids --------------------------------------------------

using Word = std::vector<int>;

inline Word reduce(Word const& w) {
  Word out;
  for (int x : w) {
    if (!out.empty() && out.back() == -x) out.pop_back();
    else out.push_back(x);
  }
  return out;
}

// The automorphism of one letter applied to a word.
inline Word apply_generator(Word const& w, int index, int sign) {
  Word out;
  for (int x : w) {
    int g = std::abs(x);
    Word img;
    if (sign > 0 && g == index) img = {index, index + 1, -index};
    else if (sign > 0 && g == index + 1) img = {index};
    else if (sign < 0 && g == index) img = {index + 1};
    else if (sign < 0 && g == index + 1) img = {-(index + 1), index, index + 1};
    else img = {g};
    if (x < 0) {
      std::reverse(img.begin(), img.end());
      for (auto& y : img) y = -y;
    }
    out.insert(out.end(), img.begin(), img.end());
  }
  return reduce(out);
}

// Images of x_1..x_n; the last letter of the braid is applied first.
inline std::vector<Word> artin(std::size_t n, std::vector<std::pair<int, int>> const& letters) {
  std::vector<Word> out;
  for (std::size_t j = 1; j <= n; ++j) {
    Word w{static_cast<int>(j)};
    for (auto it = letters.rbegin(); it != letters.rend(); ++it) w = apply_generator(w, it->first, it->second);
    out.push_back(w);
  }
  return out;
}

// Strand permutation by following each strand through the crossings.
inline std::vector<std::size_t> strand_endpoints(std::size_t n, std::vector<std::pair<int, int>> const& letters) {
  std::vector<std::size_t> out;
  for (std::size_t s = 1; s <= n; ++s) {
    std::size_t p = s;
    for (auto const& [i, e] : letters) {
      if (p == static_cast<std::size_t>(i)) p = i + 1;
      else if (p == static_cast<std::size_t>(i) + 1) p = i;
    }
    out.push_back(p);
  }
  return out;
}

}  // namespace oracle
