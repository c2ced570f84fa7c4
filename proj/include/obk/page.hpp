#pragma once

// Combinatorial page of an open book.
//
// A page is glued from planar "pieces" (discs with holes) by tubes. Homology
// is kept as a presentation: generators are classes of concrete curves
// (pushed-in boundary circles, tube meridians, curves running through a tube
// and back, cores of 1-handles) and there is one relation row per piece,
//
//   sum of boundary generators in the piece
//   + meridians of tubes leaving the piece - meridians of tubes entering it = 0.
//
// Arcs from the base boundary of a component to every other boundary are
// stored as linear functionals on the generators: lambda_j(x) is the signed
// number of crossings of the arc a_j with a curve of class x.

#include <algorithm>
#include <cctype>
#include <cstddef>
#include <deque>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "obk/error.hpp"
#include "obk/integer.hpp"
#include "obk/smith.hpp"

namespace obk {

enum class GeneratorKind { boundary, meridian, through, handle };

inline std::string kind_name(GeneratorKind k) {
  switch (k) {
    case GeneratorKind::boundary: return "boundary";
    case GeneratorKind::meridian: return "meridian";
    case GeneratorKind::through: return "through";
    case GeneratorKind::handle: return "handle";
  }
  return "?";
}

inline GeneratorKind kind_from_name(std::string const& s) {
  if (s == "boundary") return GeneratorKind::boundary;
  if (s == "meridian") return GeneratorKind::meridian;
  if (s == "through") return GeneratorKind::through;
  if (s == "handle") return GeneratorKind::handle;
  throw Error("unknown generator kind '" + s + "'");
}

struct Generator {
  std::string name;
  GeneratorKind kind;
  friend bool operator==(Generator const&, Generator const&) = default;
};

struct Piece {
  std::vector<int> labels;
  long long euler = 0;  // contribution to the Euler characteristic
  std::size_t component = 0;
  friend bool operator==(Piece const&, Piece const&) = default;
};

struct Boundary {
  std::size_t piece = 0;
  Vector cls;   // homology class of the boundary circle
  Vector foot;  // what an arc ending on this circle crosses near it
  friend bool operator==(Boundary const&, Boundary const&) = default;
};

struct Tube {
  std::size_t piece0 = 0;
  std::size_t piece1 = 0;
  std::size_t meridian = 0;
  std::optional<std::size_t> through;  // empty when the tube joined two components
  friend bool operator==(Tube const&, Tube const&) = default;
};

struct Curve {
  std::string name;
  Vector cls;
  std::optional<int> boundary_parallel_to;
  friend bool operator==(Curve const&, Curve const&) = default;
};

struct ComponentInfo {
  std::size_t genus = 0;
  std::vector<int> boundary_labels;
  long long euler = 0;
};

inline bool is_identifier(std::string const& s) {
  if (s.empty()) return false;
  auto head = static_cast<unsigned char>(s[0]);
  if (!(std::isalpha(head) || s[0] == '_')) return false;
  return std::all_of(s.begin(), s.end(), [](char ch) {
    auto u = static_cast<unsigned char>(ch);
    return std::isalnum(u) || ch == '_' || ch == '.' || ch == '\'';
  });
}

class Page {
 public:
  Page() = default;

  // ---- queries -----------------------------------------------------------

  std::size_t generator_count() const noexcept { return gens_.size(); }
  std::vector<Generator> const& generators() const noexcept { return gens_; }
  std::vector<Piece> const& pieces() const noexcept { return pieces_; }
  std::vector<Tube> const& tubes() const noexcept { return tubes_; }
  std::map<int, Boundary> const& boundaries() const noexcept { return boundaries_; }
  std::map<std::string, std::size_t> const& sites() const noexcept { return sites_; }
  std::map<std::string, Curve> const& curves() const noexcept { return curves_; }

  Matrix const& pairing_matrix() const noexcept { return pairing_; }

  std::vector<Vector> relations() const {
    std::vector<Vector> out;
    out.reserve(rows_.size());
    for (auto const& r : rows_) out.push_back(padded(r, gens_.size()));
    return out;
  }

  std::vector<int> labels() const {
    std::vector<int> out;
    for (auto const& [l, b] : boundaries_) out.push_back(l);
    return out;
  }

  bool has_label(int label) const { return boundaries_.count(label) != 0; }

  Boundary const& boundary(int label) const {
    auto it = boundaries_.find(label);
    if (it == boundaries_.end()) throw Error("unknown boundary label " + std::to_string(label));
    return it->second;
  }

  Vector boundary_class(int label) const { return padded(boundary(label).cls, gens_.size()); }

  bool has_curve(std::string const& name) const { return curves_.count(name) != 0; }

  Curve const& curve(std::string const& name) const {
    auto it = curves_.find(name);
    if (it == curves_.end()) throw Error("unregistered curve '" + name + "'");
    return it->second;
  }

  Vector curve_class(std::string const& name) const { return padded(curve(name).cls, gens_.size()); }

  std::size_t component_of_label(int label) const { return pieces_[boundary(label).piece].component; }

  // Component ids in order of their base labels.
  std::vector<std::size_t> component_ids() const {
    std::vector<std::pair<int, std::size_t>> order;
    std::set<std::size_t> seen;
    for (auto const& [l, b] : boundaries_) {
      std::size_t c = pieces_[b.piece].component;
      if (seen.insert(c).second) order.emplace_back(l, c);
    }
    std::vector<std::size_t> out;
    for (auto const& [l, c] : order) out.push_back(c);
    return out;
  }

  int base_label(std::size_t component) const {
    for (auto const& [l, b] : boundaries_)
      if (pieces_[b.piece].component == component) return l;
    throw Error("component without boundary");
  }

  std::vector<ComponentInfo> components() const {
    std::vector<ComponentInfo> out;
    for (std::size_t c : component_ids()) {
      ComponentInfo info;
      for (auto const& p : pieces_)
        if (p.component == c) info.euler += p.euler;
      for (auto const& [l, b] : boundaries_)
        if (pieces_[b.piece].component == c) info.boundary_labels.push_back(l);
      long long twice_genus = 2 - info.euler - static_cast<long long>(info.boundary_labels.size());
      if (twice_genus < 0 || twice_genus % 2 != 0) throw Error("inconsistent Euler characteristic");
      info.genus = static_cast<std::size_t>(twice_genus / 2);
      out.push_back(std::move(info));
    }
    return out;
  }

  long long euler_characteristic() const {
    long long chi = 0;
    for (auto const& p : pieces_) chi += p.euler;
    return chi;
  }

  // Rank of H1 computed from the presentation.
  std::size_t h1_rank() const { return cokernel(relations(), gens_.size()).free_rank; }

  // Closed form: sum over components of 2g + b - 1.
  std::size_t expected_h1_rank() const {
    std::size_t r = 0;
    for (auto const& c : components()) r += 2 * c.genus + c.boundary_labels.size() - 1;
    return r;
  }

  Integer pair(Vector const& x, Vector const& y) const {
    Integer s = 0;
    std::size_t n = gens_.size();
    for (std::size_t i = 0; i < n && i < x.size(); ++i) {
      if (x[i] == 0) continue;
      for (std::size_t j = 0; j < n && j < y.size(); ++j)
        if (y[j] != 0 && pairing_(i, j) != 0) s += x[i] * pairing_(i, j) * y[j];
    }
    return s;
  }

  Integer pair(std::string const& a, std::string const& b) const { return pair(curve_class(a), curve_class(b)); }

  // Functional of a path from the base boundary of the component into `piece`.
  Vector start(std::size_t piece) const {
    std::size_t c = pieces_.at(piece).component;
    Boundary const& base = boundary(base_label(c));
    return add(padded(base.foot, gens_.size()), path(base.piece, piece));
  }

  // Arc functional for a boundary label; zero for the base label.
  Vector arc(int label) const {
    Boundary const& b = boundary(label);
    if (label == base_label(pieces_[b.piece].component)) return Vector(gens_.size(), 0);
    return add(start(b.piece), padded(b.foot, gens_.size()), -1);
  }

  std::map<int, Vector> arcs() const {
    std::map<int, Vector> out;
    for (auto const& [l, b] : boundaries_)
      if (l != base_label(pieces_[b.piece].component)) out.emplace(l, arc(l));
    return out;
  }

  Integer arc_crossing(int label, Vector const& cls) const { return dot(arc(label), cls); }

  std::map<int, Integer> arc_crossings(std::string const& curve_name) const {
    Vector cls = curve_class(curve_name);
    std::map<int, Integer> out;
    for (auto const& [l, a] : arcs()) out.emplace(l, dot(a, cls));
    return out;
  }

  // Equality of classes modulo the relation rows.
  bool homologous(Vector const& x, Vector const& y) const {
    return Lattice(relations(), gens_.size()).contains(add(x, y, -1));
  }

  // ---- construction (mutating; the free functions below copy first) ------

  std::size_t add_generator(std::string name, GeneratorKind kind) {
    gens_.push_back({std::move(name), kind});
    std::size_t n = gens_.size();
    pairing_.resize(n, n);
    // Keep every stored vector at full length so values compare exactly.
    for (auto& r : rows_) r = padded(std::move(r), n);
    for (auto& [l, b] : boundaries_) {
      b.cls = padded(std::move(b.cls), n);
      b.foot = padded(std::move(b.foot), n);
    }
    for (auto& [k, c] : curves_) c.cls = padded(std::move(c.cls), n);
    return n - 1;
  }

  std::size_t add_piece(std::vector<int> const& labels) {
    std::size_t p = pieces_.size();
    Piece piece;
    piece.component = p;
    piece.euler = 2 - static_cast<long long>(labels.size());
    pieces_.push_back(piece);
    rows_.emplace_back();
    for (int l : labels) add_label_to_piece(l, p);
    return p;
  }

  void add_site(std::string const& name, int label) {
    if (!is_identifier(name)) throw Error("invalid site name '" + name + "'");
    if (sites_.count(name)) throw Error("site '" + name + "' already exists");
    sites_.emplace(name, boundary(label).piece);
  }

  struct TubeResult {
    std::size_t meridian;
    std::optional<std::size_t> through;
  };

  TubeResult attach_tube(std::string const& site0, std::string const& site1) {
    if (site0 == site1) throw Error("site '" + site0 + "' used twice");
    auto i0 = sites_.find(site0);
    if (i0 == sites_.end()) throw Error("unknown site '" + site0 + "'");
    auto i1 = sites_.find(site1);
    if (i1 == sites_.end()) throw Error("unknown site '" + site1 + "'");
    std::size_t p0 = i0->second, p1 = i1->second;
    sites_.erase(i0);
    sites_.erase(sites_.find(site1));

    std::size_t t = tubes_.size() + 1;
    std::size_t mu = add_generator("m" + std::to_string(t), GeneratorKind::meridian);
    bump(p0, mu, 1);
    bump(p1, mu, -1);
    pieces_[p0].euler -= 2;

    Tube tube{p0, p1, mu, std::nullopt};
    std::size_t c0 = pieces_[p0].component, c1 = pieces_[p1].component;
    if (c0 != c1) {
      std::size_t keep = std::min(c0, c1), drop = std::max(c0, c1);
      for (auto& p : pieces_)
        if (p.component == drop) p.component = keep;
    } else {
      Vector f = add(start(p1), start(p0), -1);
      std::size_t nu = add_generator("n" + std::to_string(t), GeneratorKind::through);
      f = padded(std::move(f), gens_.size());
      f[mu] += 1;
      set_pairing_row(nu, f);
      tube.through = nu;
    }
    tubes_.push_back(tube);
    return {mu, tube.through};
  }

  // A new boundary circle in the piece of `label` (a 1-handle along a
  // boundary-parallel arc splits one boundary circle into two).
  int add_hole(int label) {
    std::size_t p = boundary(label).piece;
    int fresh = labels().back() + 1;
    add_label_to_piece(fresh, p);
    pieces_[p].euler -= 1;
    return fresh;
  }

  // A 1-handle joining boundary circles a and b of one component. The two
  // circles become one, keeping the smaller label. Returns the generator of
  // the handle core closed up by the arc.
  std::size_t merge_boundaries(int a, int b) {
    if (a == b) throw Error("merge_boundaries needs two distinct labels");
    Boundary const& ba = boundary(a);
    Boundary const& bb = boundary(b);
    if (pieces_[ba.piece].component != pieces_[bb.piece].component)
      throw Error("labels " + std::to_string(a) + " and " + std::to_string(b) + " lie on different components");
    Vector f = add(arc(b), arc(a), -1);
    std::size_t h = add_generator("h" + std::to_string(count_kind(GeneratorKind::handle) + 1), GeneratorKind::handle);
    set_pairing_row(h, padded(std::move(f), gens_.size()));

    int keep = std::min(a, b), drop = std::max(a, b);
    Boundary merged = boundaries_.at(keep);
    merged.cls = add(boundaries_.at(a).cls, boundaries_.at(b).cls);
    pieces_[boundaries_.at(a).piece].euler -= 1;
    auto& dropped_labels = pieces_[boundaries_.at(drop).piece].labels;
    dropped_labels.erase(std::find(dropped_labels.begin(), dropped_labels.end(), drop));
    boundaries_.erase(drop);
    boundaries_[keep] = std::move(merged);
    // Curves that were parallel to the vanished circle are interior now.
    for (auto& [n, c] : curves_)
      if (c.boundary_parallel_to == a || c.boundary_parallel_to == b) c.boundary_parallel_to.reset();
    return h;
  }

  void register_curve(Curve c) {
    if (!is_identifier(c.name)) throw Error("invalid curve name '" + c.name + "'");
    if (curves_.count(c.name)) throw Error("curve '" + c.name + "' already registered");
    if (c.cls.size() > gens_.size()) throw Error("curve '" + c.name + "' has too many coordinates");
    if (c.boundary_parallel_to && !has_label(*c.boundary_parallel_to))
      throw Error("curve '" + c.name + "' is parallel to an unknown label");
    c.cls = padded(std::move(c.cls), gens_.size());
    curves_.emplace(c.name, std::move(c));
  }

  std::string fresh_curve_name(std::string const& stem) const {
    if (!has_curve(stem)) return stem;
    for (std::size_t i = 2;; ++i) {
      std::string name = stem + "." + std::to_string(i);
      if (!has_curve(name)) return name;
    }
  }

  // Throws on any violated structural invariant.
  void validate() const {
    std::size_t n = gens_.size();
    if (pairing_.rows() != n || pairing_.cols() != n) throw Error("pairing has the wrong shape");
    for (std::size_t i = 0; i < n; ++i) {
      if (pairing_(i, i) != 0) throw Error("pairing has a nonzero diagonal entry");
      for (std::size_t j = 0; j < i; ++j)
        if (pairing_(i, j) != -pairing_(j, i)) throw Error("pairing is not skew-symmetric");
    }
    if (rows_.size() != pieces_.size()) throw Error("one relation row per piece expected");
    for (auto const& r : rows_) {
      if (r.size() > n) throw Error("relation row too long");
      if (!is_zero(pairing_ * padded(r, n))) throw Error("pairing does not vanish on a relation");
    }
    std::set<int> seen;
    for (std::size_t p = 0; p < pieces_.size(); ++p)
      for (int l : pieces_[p].labels) {
        if (!seen.insert(l).second) throw Error("label " + std::to_string(l) + " appears twice");
        if (!has_label(l) || boundaries_.at(l).piece != p) throw Error("label/piece mismatch");
      }
    if (seen.size() != boundaries_.size()) throw Error("boundary label not attached to a piece");
    for (auto const& [l, b] : boundaries_)
      if (b.cls.size() > n || b.foot.size() > n || dot(b.foot, b.cls) != 1)
        throw Error("boundary " + std::to_string(l) + " is malformed");
    for (auto const& t : tubes_)
      if (t.piece0 >= pieces_.size() || t.piece1 >= pieces_.size() || t.meridian >= n ||
          (t.through && *t.through >= n))
        throw Error("tube refers to missing data");
    for (auto const& [name, p] : sites_)
      if (p >= pieces_.size()) throw Error("site '" + name + "' refers to a missing piece");
    for (auto const& [l, a] : arcs())
      for (auto const& r : rows_)
        if (dot(a, r) != 0) throw Error("arc functional does not vanish on relations");
    Lattice rel(relations(), n);
    for (auto const& [name, c] : curves_) {
      if (c.cls.size() != n) throw Error("curve '" + name + "' has the wrong length");
      if (c.boundary_parallel_to) {
        Vector b = boundary_class(*c.boundary_parallel_to);
        if (!rel.contains(add(c.cls, b, -1)) && !rel.contains(add(c.cls, b)))
          throw Error("curve '" + name + "' is not homologous to its boundary");
        if (!is_zero(pairing_ * c.cls)) throw Error("boundary-parallel curve '" + name + "' pairs nontrivially");
      }
    }
    components();
  }

  // Raw assembly used by the document reader; validate() afterwards.
  static Page assemble(std::vector<Generator> gens, std::vector<Piece> pieces, std::vector<Vector> rows,
                       Matrix pairing, std::map<int, Boundary> boundaries, std::vector<Tube> tubes,
                       std::map<std::string, std::size_t> sites, std::map<std::string, Curve> curves) {
    Page p;
    p.gens_ = std::move(gens);
    p.pieces_ = std::move(pieces);
    p.rows_ = std::move(rows);
    p.pairing_ = std::move(pairing);
    p.boundaries_ = std::move(boundaries);
    p.tubes_ = std::move(tubes);
    p.sites_ = std::move(sites);
    p.curves_ = std::move(curves);
    for (auto& [n, c] : p.curves_) c.name = n;
    p.validate();
    return p;
  }

  // Disjoint union. Labels of `other` shift by the largest label here; curve
  // and site names that collide get a numeric suffix. Returns the renaming of
  // the other page's curves.
  std::map<std::string, std::string> absorb(Page const& other, int label_offset) {
    std::size_t g0 = gens_.size(), p0 = pieces_.size();
    std::size_t n = g0 + other.gens_.size();
    auto shift = [&](Vector const& v) {
      Vector out(n, 0);
      for (std::size_t i = 0; i < v.size(); ++i) out[g0 + i] = v[i];
      return out;
    };
    for (auto const& g : other.gens_) gens_.push_back(g);
    Matrix j(n, n);
    for (std::size_t a = 0; a < g0; ++a)
      for (std::size_t b = 0; b < g0; ++b) j(a, b) = pairing_(a, b);
    for (std::size_t a = 0; a < other.gens_.size(); ++a)
      for (std::size_t b = 0; b < other.gens_.size(); ++b) j(g0 + a, g0 + b) = other.pairing_(a, b);
    pairing_ = std::move(j);
    for (auto& r : rows_) r = padded(std::move(r), n);
    for (auto& [l, b] : boundaries_) {
      b.cls = padded(std::move(b.cls), n);
      b.foot = padded(std::move(b.foot), n);
    }
    for (std::size_t i = 0; i < other.pieces_.size(); ++i) {
      Piece p = other.pieces_[i];
      p.component += p0;
      for (auto& l : p.labels) l += label_offset;
      pieces_.push_back(std::move(p));
      rows_.push_back(shift(other.rows_[i]));
    }
    for (auto const& [l, b] : other.boundaries_)
      boundaries_.emplace(l + label_offset, Boundary{b.piece + p0, shift(b.cls), shift(b.foot)});
    for (auto const& t : other.tubes_) {
      Tube u{t.piece0 + p0, t.piece1 + p0, t.meridian + g0, std::nullopt};
      if (t.through) u.through = *t.through + g0;
      tubes_.push_back(u);
    }
    for (auto const& [name, p] : other.sites_) {
      std::string fresh = name;
      while (sites_.count(fresh)) fresh += "'";
      sites_.emplace(fresh, p + p0);
    }
    for (auto& [name, c] : curves_) c.cls = padded(std::move(c.cls), n);
    std::map<std::string, std::string> renamed;
    for (auto const& [name, c] : other.curves_) {
      std::string fresh = name;
      while (curves_.count(fresh) || (fresh != name && other.curves_.count(fresh))) fresh += "'";
      Curve copy{fresh, shift(c.cls), std::nullopt};
      if (c.boundary_parallel_to) copy.boundary_parallel_to = *c.boundary_parallel_to + label_offset;
      curves_.emplace(fresh, std::move(copy));
      renamed.emplace(name, fresh);
    }
    return renamed;
  }

  friend bool operator==(Page const&, Page const&) = default;

 private:
  void add_label_to_piece(int label, std::size_t piece) {
    if (boundaries_.count(label)) throw Error("label " + std::to_string(label) + " already in use");
    std::size_t g = add_generator("b" + std::to_string(label), GeneratorKind::boundary);
    pieces_[piece].labels.push_back(label);
    bump(piece, g, 1);
    boundaries_.emplace(label, Boundary{piece, unit_vector(g + 1, g), unit_vector(g + 1, g)});
  }

  void bump(std::size_t piece, std::size_t g, Integer const& v) {
    Vector& r = rows_[piece];
    if (r.size() <= g) r.resize(g + 1, 0);
    r[g] += v;
  }

  void set_pairing_row(std::size_t g, Vector const& f) {
    for (std::size_t k = 0; k < f.size(); ++k) {
      if (k == g) continue;
      pairing_(g, k) = f[k];
      pairing_(k, g) = -f[k];
    }
  }

  std::size_t count_kind(GeneratorKind k) const {
    return static_cast<std::size_t>(std::count_if(gens_.begin(), gens_.end(), [k](auto const& g) { return g.kind == k; }));
  }

  // Crossing a tube from piece0 to piece1 meets its meridian with sign -1.
  Vector path(std::size_t from, std::size_t to) const {
    std::map<std::size_t, std::pair<std::size_t, std::pair<std::size_t, int>>> prev;
    std::set<std::size_t> seen{from};
    std::deque<std::size_t> queue{from};
    while (!queue.empty()) {
      std::size_t p = queue.front();
      queue.pop_front();
      for (auto const& t : tubes_) {
        if (t.through) continue;
        for (auto [x, y, s] : {std::tuple{t.piece0, t.piece1, -1}, std::tuple{t.piece1, t.piece0, 1}}) {
          if (x != p || seen.count(y)) continue;
          seen.insert(y);
          prev[y] = {p, {t.meridian, s}};
          queue.push_back(y);
        }
      }
    }
    if (!seen.count(to)) throw Error("pieces are not connected");
    Vector f(gens_.size(), 0);
    for (std::size_t q = to; q != from;) {
      auto const& [p, step] = prev.at(q);
      f[step.first] += step.second;
      q = p;
    }
    return f;
  }

  std::vector<Generator> gens_;
  std::vector<Piece> pieces_;
  std::vector<Vector> rows_;
  Matrix pairing_;
  std::map<int, Boundary> boundaries_;
  std::vector<Tube> tubes_;
  std::map<std::string, std::size_t> sites_;
  std::map<std::string, Curve> curves_;
};

// ---- value-returning operations ------------------------------------------

inline Page make_disc() {
  Page p;
  p.add_piece({1});
  return p;
}

inline Page make_annulus() {
  Page p;
  p.add_piece({1, 2});
  p.register_curve({"c", p.boundary_class(1), 1});
  return p;
}

struct UnionResult {
  Page page;
  int label_offset = 0;
  std::map<std::string, std::string> renamed;  // curves of the second page
};

inline UnionResult disjoint_union(Page const& a, Page const& b) {
  UnionResult r{a, a.labels().empty() ? 0 : a.labels().back(), {}};
  r.renamed = r.page.absorb(b, r.label_offset);
  return r;
}

inline Page with_site(Page p, std::string const& name, int label) {
  p.add_site(name, label);
  return p;
}

inline Page attach_tube(Page p, std::string const& site0, std::string const& site1) {
  p.attach_tube(site0, site1);
  return p;
}

inline long long euler_characteristic(Page const& p) { return p.euler_characteristic(); }

inline std::string chain_a(std::size_t i) { return "a" + std::to_string(i); }
inline std::string chain_g(std::size_t i) { return "g" + std::to_string(i); }
inline std::string chain_d(std::size_t i, std::size_t j) { return "d" + std::to_string(i) + "_" + std::to_string(j); }
inline std::string chain_dp(std::size_t i, std::size_t j) { return "dp" + std::to_string(i) + "_" + std::to_string(j); }

// Two discs joined by n tubes. Tube i has meridian a_i; g_i runs through
// tubes i and i+1; d_{i,j} encircles the feet of tubes i and j on the first
// disc and dp_{i,j} is the same curve seen from the second disc.
inline Page make_chain_page(std::size_t n) {
  if (n == 0) throw Error("chain page needs at least one tube");
  Page p = disjoint_union(make_disc(), make_disc()).page;
  std::vector<std::size_t> mu;
  std::vector<std::optional<std::size_t>> nu;
  for (std::size_t i = 1; i <= n; ++i) {
    std::string f = "front" + std::to_string(i), b = "back" + std::to_string(i);
    p.add_site(f, 1);
    p.add_site(b, 2);
    auto t = p.attach_tube(f, b);
    mu.push_back(t.meridian);
    nu.push_back(t.through);
  }
  std::size_t g = p.generator_count();
  for (std::size_t i = 0; i < n; ++i) p.register_curve({chain_a(i + 1), unit_vector(g, mu[i]), std::nullopt});
  for (std::size_t i = 0; i + 1 < n; ++i) {
    Vector v(g, 0);
    v[*nu[i + 1]] += 1;
    if (nu[i]) v[*nu[i]] -= 1;
    p.register_curve({chain_g(i + 1), v, std::nullopt});
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      Vector v = add(unit_vector(g, mu[i]), unit_vector(g, mu[j]));
      std::optional<int> parallel;
      if (n == 2) parallel = 1;
      p.register_curve({chain_d(i + 1, j + 1), v, parallel});
      if (n == 2) parallel = 2;
      p.register_curve({chain_dp(i + 1, j + 1), scaled(v, -1), parallel});
    }
  return p;
}

}  // namespace obk
