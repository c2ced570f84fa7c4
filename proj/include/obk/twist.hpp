#pragma once

// Dehn twist words and their action on the homology of a page.
//
// A word is read as a composition of maps: in "a b" the twist along b acts
// first. On homology a single twist acts by the Picard-Lefschetz transvection
// x -> x + e<x,c>c; each arc a_j is moved by e*lambda_j(c)*c.

#include <charconv>
#include <cstddef>
#include <map>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "obk/error.hpp"
#include "obk/integer.hpp"
#include "obk/page.hpp"

namespace obk {

struct Letter {
  std::string curve;
  long long exponent = 1;
  friend bool operator==(Letter const&, Letter const&) = default;
};

struct TwistWord {
  std::vector<Letter> letters;

  TwistWord() = default;
  TwistWord(std::initializer_list<Letter> init) : letters(init) {}
  explicit TwistWord(std::vector<Letter> ls) : letters(std::move(ls)) {}

  bool empty() const noexcept { return letters.empty(); }
  std::size_t size() const noexcept { return letters.size(); }

  // Merges adjacent letters on the same curve and drops zero powers.
  TwistWord reduced() const {
    std::vector<Letter> out;
    for (auto const& l : letters) {
      if (l.exponent == 0) continue;
      if (!out.empty() && out.back().curve == l.curve) {
        out.back().exponent += l.exponent;
        if (out.back().exponent == 0) out.pop_back();
      } else {
        out.push_back(l);
      }
    }
    return TwistWord(std::move(out));
  }

  TwistWord inverse() const {
    std::vector<Letter> out(letters.rbegin(), letters.rend());
    for (auto& l : out) l.exponent = -l.exponent;
    return TwistWord(std::move(out));
  }

  TwistWord& append(std::string const& curve, long long exponent = 1) {
    if (exponent != 0) letters.push_back({curve, exponent});
    return *this;
  }

  TwistWord& append(TwistWord const& w) {
    letters.insert(letters.end(), w.letters.begin(), w.letters.end());
    return *this;
  }

  TwistWord renamed(std::map<std::string, std::string> const& names) const {
    TwistWord out = *this;
    for (auto& l : out.letters) {
      auto it = names.find(l.curve);
      if (it != names.end()) l.curve = it->second;
    }
    return out;
  }

  std::string str() const {
    std::string out;
    for (auto const& l : letters) {
      if (!out.empty()) out += ' ';
      out += l.curve;
      if (l.exponent != 1) out += "^" + std::to_string(l.exponent);
    }
    return out;
  }

  // Whitespace-separated letters "name" or "name^k".
  static TwistWord parse(std::string_view text) {
    TwistWord w;
    std::istringstream in{std::string(text)};
    std::string tok;
    while (in >> tok) {
      auto caret = tok.find('^');
      Letter l{tok.substr(0, caret), 1};
      if (!is_identifier(l.curve)) throw Error("bad twist letter '" + tok + "'");
      if (caret != std::string::npos) {
        std::string_view e = std::string_view(tok).substr(caret + 1);
        auto [ptr, ec] = std::from_chars(e.data(), e.data() + e.size(), l.exponent);
        if (e.empty() || ec != std::errc() || ptr != e.data() + e.size())
          throw Error("bad exponent in twist letter '" + tok + "'");
      }
      if (l.exponent != 0) w.letters.push_back(std::move(l));
    }
    return w;
  }

  friend bool operator==(TwistWord const&, TwistWord const&) = default;
};

inline TwistWord compose(TwistWord const& w1, TwistWord const& w2) {
  TwistWord w = w1;
  w.append(w2);
  return w.reduced();
}

inline TwistWord power(TwistWord const& w, long long k) {
  TwistWord base = k < 0 ? w.inverse() : w;
  TwistWord out;
  for (long long i = 0; i < (k < 0 ? -k : k); ++i) out.append(base);
  return out;
}

inline void check_word(Page const& page, TwistWord const& w) {
  for (auto const& l : w.letters)
    if (!page.has_curve(l.curve)) throw Error("unregistered curve '" + l.curve + "'");
}

struct AffineAction {
  Matrix linear;
  std::map<int, Vector> translation;  // non-base labels only

  static AffineAction identity(Page const& page) {
    AffineAction a{Matrix::identity(page.generator_count()), {}};
    for (auto const& [l, arc] : page.arcs()) a.translation.emplace(l, Vector(page.generator_count(), 0));
    return a;
  }

  // (L1, d1) o (L2, d2) = (L1 L2, d1 + L1 d2)
  friend AffineAction operator*(AffineAction const& a, AffineAction const& b) {
    AffineAction out{a.linear * b.linear, {}};
    for (auto const& [l, d] : a.translation) {
      auto it = b.translation.find(l);
      out.translation.emplace(l, it == b.translation.end() ? d : add(d, a.linear * it->second));
    }
    return out;
  }

  friend bool operator==(AffineAction const&, AffineAction const&) = default;
};

inline AffineAction affine_action(Page const& page, TwistWord const& w) {
  check_word(page, w);
  std::size_t n = page.generator_count();
  AffineAction acc = AffineAction::identity(page);
  auto arcs = page.arcs();
  Matrix const& j = page.pairing_matrix();
  for (auto const& letter : w.letters) {
    Vector c = page.curve_class(letter.curve);
    Integer e = letter.exponent;  // <c,c> = 0, so powers act linearly in e
    Vector jc = j * c;            // jc[k] = <e_k, c>
    Vector lc = acc.linear * c;
    for (auto const& [l, arc] : arcs) {
      Integer lam = dot(arc, c);
      if (lam != 0) acc.translation[l] = add(acc.translation[l], lc, e * lam);
    }
    for (std::size_t col = 0; col < n; ++col) {
      if (jc[col] == 0) continue;
      Integer k = e * jc[col];
      for (std::size_t row = 0; row < n; ++row)
        if (lc[row] != 0) acc.linear(row, col) += k * lc[row];
    }
  }
  return acc;
}

// L^T J L == J
inline bool is_symplectic(Page const& page, Matrix const& l) {
  return l.transposed() * page.pairing_matrix() * l == page.pairing_matrix();
}

struct ActionDiff {
  std::vector<std::string> entries;
  bool empty() const { return entries.empty(); }
};

// Differences between two actions that survive modulo the page relations.
inline ActionDiff action_diff(Page const& page, AffineAction const& a, AffineAction const& b) {
  ActionDiff diff;
  std::size_t n = page.generator_count();
  Lattice rel(page.relations(), n);
  auto const& gens = page.generators();
  for (std::size_t c = 0; c < n; ++c) {
    Vector d = add(a.linear.column(c), b.linear.column(c), -1);
    if (rel.contains(d)) continue;
    for (std::size_t r = 0; r < n; ++r)
      if (d[r] != 0)
        diff.entries.push_back("linear[" + gens[r].name + "][" + gens[c].name + "]: " +
                               a.linear(r, c).str() + " vs " + b.linear(r, c).str());
  }
  for (auto const& [l, da] : a.translation) {
    Vector const& db = b.translation.at(l);
    Vector d = add(da, db, -1);
    if (rel.contains(d)) continue;
    for (std::size_t r = 0; r < n; ++r)
      if (d[r] != 0)
        diff.entries.push_back("translation[" + std::to_string(l) + "][" + gens[r].name + "]: " + da[r].str() +
                               " vs " + db[r].str());
  }
  return diff;
}

inline bool actions_equal(Page const& page, TwistWord const& w1, TwistWord const& w2) {
  return action_diff(page, affine_action(page, w1), affine_action(page, w2)).empty();
}

enum class RelationKind { commute, braid, chain3 };

inline RelationKind relation_kind_from_name(std::string const& s) {
  if (s == "commute") return RelationKind::commute;
  if (s == "braid") return RelationKind::braid;
  if (s == "chain3") return RelationKind::chain3;
  throw Error("unknown relation kind '" + s + "'");
}

struct RelationReport {
  std::string name;
  TwistWord lhs, rhs;
  bool pass = false;
  std::vector<std::string> diff;
};

// commute: (a, b) with <a,b> = 0            ab = ba
// braid:   (a, b) with |<a,b>| = 1          aba = bab
// chain3:  (a, g, b, d, d') a 3-chain and the two boundary curves of its
//          neighbourhood                   (a g b)^4 = d d'
inline RelationReport check_relation(Page const& page, RelationKind kind, std::vector<std::string> const& curves) {
  for (auto const& c : curves) page.curve(c);
  auto abs_pair = [&](std::string const& x, std::string const& y) {
    Integer v = page.pair(x, y);
    return v < 0 ? Integer(-v) : v;
  };
  RelationReport r;
  switch (kind) {
    case RelationKind::commute:
      if (curves.size() != 2) throw Error("commute relation takes two curves");
      if (abs_pair(curves[0], curves[1]) != 0) throw Error("commute relation needs disjoint curves");
      r.name = "commute(" + curves[0] + "," + curves[1] + ")";
      r.lhs = TwistWord{{curves[0], 1}, {curves[1], 1}};
      r.rhs = TwistWord{{curves[1], 1}, {curves[0], 1}};
      break;
    case RelationKind::braid:
      if (curves.size() != 2) throw Error("braid relation takes two curves");
      if (abs_pair(curves[0], curves[1]) != 1) throw Error("braid relation needs curves meeting once");
      r.name = "braid(" + curves[0] + "," + curves[1] + ")";
      r.lhs = TwistWord{{curves[0], 1}, {curves[1], 1}, {curves[0], 1}};
      r.rhs = TwistWord{{curves[1], 1}, {curves[0], 1}, {curves[1], 1}};
      break;
    case RelationKind::chain3:
      if (curves.size() != 5) throw Error("chain3 relation takes five curves");
      if (abs_pair(curves[0], curves[1]) != 1 || abs_pair(curves[1], curves[2]) != 1 ||
          abs_pair(curves[0], curves[2]) != 0)
        throw Error("chain3 relation needs a 3-chain");
      r.name = "chain3(" + curves[0] + "," + curves[1] + "," + curves[2] + ")";
      r.lhs = power(TwistWord{{curves[0], 1}, {curves[1], 1}, {curves[2], 1}}, 4);
      r.rhs = TwistWord{{curves[3], 1}, {curves[4], 1}};
      break;
  }
  r.diff = action_diff(page, affine_action(page, r.lhs), affine_action(page, r.rhs)).entries;
  r.pass = r.diff.empty();
  return r;
}

}  // namespace obk
