#pragma once

// Invariants of the closed manifold of an open book.
//
// H1 comes from the mapping torus filled along the binding: page classes,
// one circle class t per component, and the relations
//   page relations,   phi_*(x) - x,   t + d_j  (one per binding circle j)
// where d_j is the class swept by the arc a_j under phi (zero at the base).

#include <cstddef>
#include <map>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "obk/integer.hpp"
#include "obk/openbook.hpp"
#include "obk/smith.hpp"
#include "obk/twist.hpp"

namespace obk {

struct Presentation {
  std::vector<std::string> generators;
  std::vector<Vector> relations;

  AbelianGroup group() const { return cokernel(relations, generators.size()); }
};

inline Presentation h1_presentation(OpenBook const& ob) {
  Page const& page = ob.page;
  std::size_t g = page.generator_count();
  auto comps = page.component_ids();
  std::size_t n = g + comps.size();
  Presentation pr;
  for (auto const& gen : page.generators()) pr.generators.push_back(gen.name);
  for (std::size_t i = 0; i < comps.size(); ++i) pr.generators.push_back("t" + std::to_string(i + 1));

  for (auto const& r : page.relations()) pr.relations.push_back(padded(r, n));
  AffineAction a = affine_action(page, ob.monodromy);
  for (std::size_t c = 0; c < g; ++c) {
    Vector col = padded(a.linear.column(c), n);
    col[c] -= 1;
    if (!is_zero(col)) pr.relations.push_back(std::move(col));
  }
  for (int l : page.labels()) {
    std::size_t ci = static_cast<std::size_t>(
        std::find(comps.begin(), comps.end(), page.component_of_label(l)) - comps.begin());
    auto it = a.translation.find(l);
    Vector rel = it == a.translation.end() ? Vector(n, 0) : padded(it->second, n);
    rel[g + ci] += 1;
    pr.relations.push_back(std::move(rel));
  }
  return pr;
}

inline AbelianGroup h1_of_open_book(OpenBook const& ob) { return h1_presentation(ob).group(); }

// Splits the presentation into its connected blocks, one per page component.
inline std::vector<AbelianGroup> h1_by_component(OpenBook const& ob) {
  Page const& page = ob.page;
  Presentation pr = h1_presentation(ob);
  std::size_t g = page.generator_count(), n = pr.generators.size();
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  auto join = [&](std::size_t a, std::size_t b) { parent[find(a)] = find(b); };
  auto join_support = [&](Vector const& v) {
    std::optional<std::size_t> first;
    for (std::size_t i = 0; i < v.size(); ++i)
      if (v[i] != 0) {
        if (first) join(*first, i);
        else first = i;
      }
  };
  for (auto const& r : pr.relations) join_support(r);
  Matrix const& j = page.pairing_matrix();
  for (std::size_t a = 0; a < g; ++a)
    for (std::size_t b = 0; b < g; ++b)
      if (j(a, b) != 0) join(a, b);
  auto comps = page.component_ids();
  for (std::size_t ci = 0; ci < comps.size(); ++ci) {
    Boundary const& base = page.boundary(page.base_label(comps[ci]));
    for (std::size_t i = 0; i < g; ++i)
      if (base.foot[i] != 0) join(g + ci, i);
  }
  std::vector<AbelianGroup> out;
  for (std::size_t ci = 0; ci < comps.size(); ++ci) {
    std::size_t root = find(g + ci);
    std::vector<std::size_t> idx;
    for (std::size_t i = 0; i < n; ++i)
      if (find(i) == root) idx.push_back(i);
    std::vector<Vector> rels;
    for (auto const& r : pr.relations) {
      bool inside = false;
      for (std::size_t i = 0; i < n && !inside; ++i) inside = r[i] != 0 && find(i) == root;
      if (!inside) continue;
      Vector v(idx.size());
      for (std::size_t k = 0; k < idx.size(); ++k) v[k] = r[idx[k]];
      rels.push_back(std::move(v));
    }
    out.push_back(cokernel(rels, idx.size()));
  }
  return out;
}

// Action of the monodromy on H1(page) in a basis of the (free) quotient.
inline Matrix monodromy_matrix(OpenBook const& ob) {
  Page const& page = ob.page;
  std::size_t g = page.generator_count();
  SmithForm s = smith_normal_form(Matrix::from_columns(page.relations(), g));
  std::size_t rank = 0;
  for (std::size_t i = 0; i < std::min(s.D.rows(), s.D.cols()); ++i)
    if (s.D(i, i) != 0) ++rank;
  // y = U x; the last g - rank coordinates of y identify H1 with Z^(g-rank).
  std::size_t r = g - rank;
  Matrix proj(r, g), incl(g, r);
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t c = 0; c < g; ++c) proj(i, c) = s.U(rank + i, c);
    for (std::size_t c = 0; c < g; ++c) incl(c, i) = s.U_inv(c, rank + i);
  }
  return proj * affine_action(page, ob.monodromy).linear * incl;
}

struct BettiTorsion {
  std::size_t b1 = 0;
  std::vector<Integer> torsion;
};

inline BettiTorsion betti_and_torsion(OpenBook const& ob) {
  AbelianGroup h = h1_of_open_book(ob);
  return {h.free_rank, h.torsion};
}

// ---- verification reports -------------------------------------------------

struct Check {
  std::string name;
  std::string expected;
  std::string actual;
  bool pass = false;
};

struct Report {
  std::vector<Check> checks;

  bool pass() const {
    return std::all_of(checks.begin(), checks.end(), [](Check const& c) { return c.pass; });
  }

  void add(std::string name, std::string expected, std::string actual) {
    bool ok = expected == actual;
    checks.push_back({std::move(name), std::move(expected), std::move(actual), ok});
  }

  void add_bool(std::string name, bool ok, std::string detail = {}) {
    checks.push_back({std::move(name), "true", ok ? "true" : (detail.empty() ? "false" : detail), ok});
  }

  void merge(Report const& other) { checks.insert(checks.end(), other.checks.begin(), other.checks.end()); }

  void sort() {
    std::stable_sort(checks.begin(), checks.end(), [](Check const& a, Check const& b) { return a.name < b.name; });
  }
};

struct Expectations {
  std::optional<AbelianGroup> h1;
  std::optional<long long> euler;
  std::optional<std::vector<std::size_t>> genera;  // per component
  std::optional<std::size_t> boundary_count;
  struct Relation {
    RelationKind kind;
    std::vector<std::string> curves;
  };
  std::vector<Relation> relations;
  bool navel_identity = false;  // navel words at every binding label, m in [-3, 3]
};

inline std::string genera_string(std::vector<std::size_t> const& g) {
  std::string out = "[";
  for (std::size_t i = 0; i < g.size(); ++i) out += (i ? "," : "") + std::to_string(g[i]);
  return out + "]";
}

inline Report verify_suite(OpenBook const& ob, Expectations const& e, std::string const& prefix = "") {
  Report r;
  if (e.h1) r.add(prefix + "h1", e.h1->str(), h1_of_open_book(ob).str());
  if (e.euler) r.add(prefix + "euler", std::to_string(*e.euler), std::to_string(ob.page.euler_characteristic()));
  if (e.genera) {
    std::vector<std::size_t> g;
    for (auto const& c : ob.page.components()) g.push_back(c.genus);
    r.add(prefix + "genus", genera_string(*e.genera), genera_string(g));
  }
  if (e.boundary_count)
    r.add(prefix + "boundary_count", std::to_string(*e.boundary_count), std::to_string(ob.page.labels().size()));
  for (auto const& rel : e.relations) {
    RelationReport rr = check_relation(ob.page, rel.kind, rel.curves);
    std::string detail;
    for (auto const& d : rr.diff) detail += (detail.empty() ? "" : "; ") + d;
    r.add_bool(prefix + rr.name, rr.pass, detail);
  }
  if (e.navel_identity) {
    for (int l : ob.page.labels()) {
      Page p = ob.page;
      NavelCurves n = register_navel(p, l);
      AffineAction id = AffineAction::identity(p);
      bool ok = true;
      std::string detail;
      for (long long m = -3; m <= 3 && ok; ++m) {
        auto d = action_diff(p, affine_action(p, navel_word(m, n)), id);
        ok = d.empty();
        if (!ok) detail = "m=" + std::to_string(m) + ": " + d.entries.front();
      }
      r.add_bool(prefix + "navel_identity[" + std::to_string(l) + "]", ok, detail);
    }
  }
  return r;
}

}  // namespace obk
