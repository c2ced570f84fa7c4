#pragma once

// Braid words, the Artin action on the free group, pure braid combing and
// the translation of pure braids into twists on the chain page.

#include <algorithm>
#include <charconv>
#include <cstddef>
#include <cstdlib>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "obk/error.hpp"
#include "obk/page.hpp"
#include "obk/twist.hpp"

namespace obk {

// Letters of a free group word: +i is x_i, -i its inverse (i >= 1).
using FreeWord = std::vector<int>;

inline FreeWord free_reduce(FreeWord const& w) {
  FreeWord out;
  for (int x : w) {
    if (!out.empty() && out.back() == -x) out.pop_back();
    else out.push_back(x);
  }
  return out;
}

inline FreeWord free_inverse(FreeWord const& w) {
  FreeWord out(w.rbegin(), w.rend());
  for (auto& x : out) x = -x;
  return out;
}

// Replaces x_i by images[i-1].
inline FreeWord substitute(FreeWord const& w, std::vector<FreeWord> const& images) {
  FreeWord out;
  for (int x : w) {
    FreeWord const& im = images.at(static_cast<std::size_t>(std::abs(x)) - 1);
    if (x > 0) out.insert(out.end(), im.begin(), im.end());
    else {
      FreeWord inv = free_inverse(im);
      out.insert(out.end(), inv.begin(), inv.end());
    }
  }
  return free_reduce(out);
}

inline std::string free_word_str(FreeWord const& w) {
  if (w.empty()) return "1";
  std::string out;
  for (int x : w) {
    if (!out.empty()) out += ' ';
    out += "x" + std::to_string(std::abs(x));
    if (x < 0) out += "^-1";
  }
  return out;
}

struct BraidLetter {
  int index = 1;  // sigma_index, 1 <= index < strands
  int sign = 1;
  friend bool operator==(BraidLetter const&, BraidLetter const&) = default;
};

struct Braid {
  std::size_t strands = 1;
  std::vector<BraidLetter> letters;

  Braid() = default;
  explicit Braid(std::size_t n, std::vector<BraidLetter> ls = {}) : strands(n), letters(std::move(ls)) {
    if (n == 0) throw Error("a braid needs at least one strand");
    for (auto const& l : letters)
      if (l.index < 1 || static_cast<std::size_t>(l.index) >= n || (l.sign != 1 && l.sign != -1))
        throw Error("braid letter s" + std::to_string(l.index) + " out of range for " + std::to_string(n) +
                    " strands");
  }

  Braid inverse() const {
    Braid b = *this;
    std::reverse(b.letters.begin(), b.letters.end());
    for (auto& l : b.letters) l.sign = -l.sign;
    return b;
  }

  Braid reduced() const {
    Braid b(strands);
    for (auto const& l : letters) {
      if (!b.letters.empty() && b.letters.back().index == l.index && b.letters.back().sign == -l.sign)
        b.letters.pop_back();
      else
        b.letters.push_back(l);
    }
    return b;
  }

  // b1 * b2: the letters of b1, then those of b2.
  friend Braid operator*(Braid const& a, Braid const& b) {
    if (a.strands != b.strands) throw Error("strand counts differ");
    Braid out = a;
    out.letters.insert(out.letters.end(), b.letters.begin(), b.letters.end());
    return out;
  }

  std::string str() const {
    std::string out;
    for (auto const& l : letters) {
      if (!out.empty()) out += ' ';
      out += "s" + std::to_string(l.index);
      if (l.sign < 0) out += "^-1";
    }
    return out;
  }

  // "s1 s2^-1 s1^3"; a power expands into repeated letters. With strands = 0
  // the strand count is one more than the largest generator index.
  static Braid parse(std::string_view text, std::size_t strands = 0) {
    std::vector<BraidLetter> ls;
    std::istringstream in{std::string(text)};
    std::string tok;
    int top = 0;
    auto number = [&](std::string_view s, long long& v) {
      auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
      return !s.empty() && ec == std::errc() && ptr == s.data() + s.size();
    };
    while (in >> tok) {
      if (tok.size() < 2 || tok[0] != 's') throw Error("bad braid letter '" + tok + "'");
      auto caret = tok.find('^');
      long long index = 0, power = 1;
      if (!number(std::string_view(tok).substr(1, caret == std::string::npos ? std::string::npos : caret - 1), index) ||
          index < 1)
        throw Error("bad braid letter '" + tok + "'");
      if (caret != std::string::npos && !number(std::string_view(tok).substr(caret + 1), power))
        throw Error("bad exponent in braid letter '" + tok + "'");
      top = std::max(top, static_cast<int>(index));
      for (long long k = 0; k < std::abs(power); ++k)
        ls.push_back({static_cast<int>(index), power > 0 ? 1 : -1});
    }
    if (strands == 0) strands = static_cast<std::size_t>(top) + 1;
    return Braid(strands, std::move(ls));
  }

  friend bool operator==(Braid const&, Braid const&) = default;
};

// result[s-1] is the final position of the strand starting at position s.
inline std::vector<std::size_t> permutation(Braid const& b) {
  std::vector<std::size_t> at(b.strands);  // at[position-1] = strand
  for (std::size_t i = 0; i < b.strands; ++i) at[i] = i + 1;
  for (auto const& l : b.letters) std::swap(at[l.index - 1], at[l.index]);
  std::vector<std::size_t> pos(b.strands);
  for (std::size_t i = 0; i < b.strands; ++i) pos[at[i] - 1] = i + 1;
  return pos;
}

inline bool is_pure(Braid const& b) {
  auto p = permutation(b);
  for (std::size_t i = 0; i < p.size(); ++i)
    if (p[i] != i + 1) return false;
  return true;
}

// Cycle notation, fixed points omitted; "()" for the identity.
inline std::string cycle_string(std::vector<std::size_t> const& perm) {
  std::vector<bool> seen(perm.size(), false);
  std::string out;
  for (std::size_t s = 1; s <= perm.size(); ++s) {
    if (seen[s - 1] || perm[s - 1] == s) continue;
    out += "(";
    for (std::size_t t = s; !seen[t - 1]; t = perm[t - 1]) {
      seen[t - 1] = true;
      if (out.back() != '(') out += ' ';
      out += std::to_string(t);
    }
    out += ")";
  }
  return out.empty() ? "()" : out;
}

inline std::vector<std::size_t> cycle_type(std::vector<std::size_t> const& perm) {
  std::vector<bool> seen(perm.size(), false);
  std::vector<std::size_t> lengths;
  for (std::size_t s = 1; s <= perm.size(); ++s) {
    if (seen[s - 1]) continue;
    std::size_t len = 0;
    for (std::size_t t = s; !seen[t - 1]; t = perm[t - 1]) {
      seen[t - 1] = true;
      ++len;
    }
    lengths.push_back(len);
  }
  std::sort(lengths.rbegin(), lengths.rend());
  return lengths;
}

inline long long writhe(Braid const& b) {
  long long w = 0;
  for (auto const& l : b.letters) w += l.sign;
  return w;
}

// Images of x_1..x_n. sigma_i: x_i -> x_i x_{i+1} x_i^-1, x_{i+1} -> x_i.
inline std::vector<FreeWord> artin_action(Braid const& b) {
  std::size_t n = b.strands;
  std::vector<FreeWord> images(n);
  for (std::size_t j = 0; j < n; ++j) images[j] = {static_cast<int>(j + 1)};
  for (auto const& l : b.letters) {
    int i = l.index;
    std::vector<FreeWord> g(n);
    for (std::size_t j = 0; j < n; ++j) g[j] = {static_cast<int>(j + 1)};
    if (l.sign > 0) {
      g[i - 1] = {i, i + 1, -i};
      g[i] = {i};
    } else {
      g[i - 1] = {i + 1};
      g[i] = {-(i + 1), i, i + 1};
    }
    std::vector<FreeWord> next(n);
    for (std::size_t j = 0; j < n; ++j) next[j] = substitute(g[j], images);
    images = std::move(next);
  }
  return images;
}

inline bool braids_equal(Braid const& a, Braid const& b) {
  if (a.strands != b.strands) throw Error("strand counts differ");
  return artin_action(a) == artin_action(b);
}

// sigma_{n-1} ... sigma_1, inducing the cycle (n 1 ... n-1).
inline Braid standard_positive(std::size_t n) {
  Braid b(n);
  for (std::size_t i = n - 1; i >= 1; --i) b.letters.push_back({static_cast<int>(i), 1});
  return b;
}

inline Braid standard_negative(std::size_t n) {
  Braid b = standard_positive(n);
  for (auto& l : b.letters) l.sign = -1;
  return b;
}

inline std::vector<std::size_t> standard_cycle(std::size_t n) {
  std::vector<std::size_t> p(n);
  for (std::size_t s = 1; s <= n; ++s) p[s - 1] = s % n + 1;
  return p;
}

// b followed by the positive permutation braid that sorts its strands back,
// so the result is pure.
inline Braid purified(Braid const& b) {
  auto pos = permutation(b);
  std::vector<std::size_t> at(b.strands);
  for (std::size_t s = 0; s < b.strands; ++s) at[pos[s] - 1] = s + 1;
  Braid out = b;
  for (bool changed = true; changed;) {
    changed = false;
    for (std::size_t i = 0; i + 1 < b.strands; ++i)
      if (at[i] > at[i + 1]) {
        std::swap(at[i], at[i + 1]);
        out.letters.push_back({static_cast<int>(i + 1), 1});
        changed = true;
      }
  }
  return out;
}

struct NormalForm {
  Braid pure;      // P
  Braid standard;  // S = S+
};

// b = P * S+ with P pure.
inline NormalForm normal_form(Braid const& b) {
  auto p = permutation(b);
  if (p != standard_cycle(b.strands)) {
    std::string type;
    for (auto len : cycle_type(p)) type += (type.empty() ? "" : ",") + std::to_string(len);
    throw Error("braid permutation " + cycle_string(p) + " (cycle type [" + type + "]) is not the standard " +
                std::to_string(b.strands) + "-cycle " + cycle_string(standard_cycle(b.strands)));
  }
  Braid s = standard_positive(b.strands);
  return {(b * s.inverse()).reduced(), s};
}

struct PureLetter {
  std::size_t i = 1, j = 2;  // i < j
  long long exponent = 1;
  friend bool operator==(PureLetter const&, PureLetter const&) = default;
};

struct PureBraidWord {
  std::size_t strands = 1;
  std::vector<PureLetter> letters;

  std::string str() const {
    std::string out;
    for (auto const& l : letters) {
      if (!out.empty()) out += ' ';
      out += "A" + std::to_string(l.i) + "_" + std::to_string(l.j);
      if (l.exponent != 1) out += "^" + std::to_string(l.exponent);
    }
    return out;
  }
  friend bool operator==(PureBraidWord const&, PureBraidWord const&) = default;
};

// A_ij = (s_{j-1} ... s_{i+1}) s_i^2 (s_{i+1} ... s_{j-1})^-1
inline Braid pure_generator(std::size_t n, std::size_t i, std::size_t j) {
  if (!(1 <= i && i < j && j <= n)) throw Error("pure braid generator index out of range");
  Braid up(n);
  for (std::size_t k = j - 1; k > i; --k) up.letters.push_back({static_cast<int>(k), 1});
  Braid core(n, {{static_cast<int>(i), 1}, {static_cast<int>(i), 1}});
  return up * core * up.inverse();
}

inline Braid recompose(PureBraidWord const& w) {
  Braid out(w.strands);
  for (auto const& l : w.letters) {
    Braid a = pure_generator(w.strands, l.i, l.j);
    if (l.exponent < 0) a = a.inverse();
    for (long long k = 0; k < std::abs(l.exponent); ++k) out = out * a;
  }
  return out;
}

namespace detail {

// Forgets the strand that ends at the last position.
inline Braid delete_last_strand(Braid const& b) {
  std::size_t p = b.strands;
  Braid out(b.strands - 1);
  for (auto const& l : b.letters) {
    std::size_t i = static_cast<std::size_t>(l.index);
    if (p == i) p = i + 1;
    else if (p == i + 1) p = i;
    else out.letters.push_back({static_cast<int>(i < p ? i : i - 1), l.sign});
  }
  return out;
}

inline Braid widen(Braid const& b, std::size_t n) { return Braid(n, b.letters); }

}  // namespace detail

// Combing: P = P' * Q where P' lives on the first n-1 strands and Q lies in
// the free subgroup generated by A_{1n}, ..., A_{n-1,n}. Q is read off from
// the Artin image of x_n, which Q conjugates by a word in x_1..x_{n-1}.
inline PureBraidWord comb(Braid const& p) {
  if (!is_pure(p)) throw Error("comb needs a pure braid, got permutation " + cycle_string(permutation(p)));
  std::size_t n = p.strands;
  PureBraidWord out{n, {}};
  if (n == 1) return out;
  Braid head = detail::delete_last_strand(p);
  for (auto const& l : comb(head).letters) out.letters.push_back(l);

  Braid tail = detail::widen(head, n).inverse() * p;
  FreeWord w = artin_action(tail)[n - 1];
  std::size_t k = (w.size() - 1) / 2;
  int last = static_cast<int>(n);
  if (w.size() % 2 == 0 || w[k] != last) throw Error("combing failed: unexpected image " + free_word_str(w));
  FreeWord ell;
  for (std::size_t t = 0; t < k; ++t)
    if (std::abs(w[t]) != last) ell.push_back(w[t]);
  ell = free_reduce(ell);

  // rho(x_i) = V x_i V^-1 with V = rho(x_{i+1}) ... rho(x_{n-1})
  std::vector<FreeWord> rho(n - 1);
  for (std::size_t i = n - 1; i >= 1; --i) {
    FreeWord v;
    for (std::size_t m = i + 1; m <= n - 1; ++m) v.insert(v.end(), rho[m - 1].begin(), rho[m - 1].end());
    FreeWord r = v;
    r.push_back(static_cast<int>(i));
    FreeWord vi = free_inverse(v);
    r.insert(r.end(), vi.begin(), vi.end());
    rho[i - 1] = free_reduce(r);
  }
  FreeWord u = substitute(ell, rho);
  for (auto it = u.rbegin(); it != u.rend(); ++it)
    out.letters.push_back({static_cast<std::size_t>(std::abs(*it)), n, *it > 0 ? 1 : -1});
  return out;
}

enum class Side { front, back };

inline Side side_from_name(std::string const& s) {
  if (s == "front") return Side::front;
  if (s == "back") return Side::back;
  throw Error("unknown side '" + s + "'");
}

// A_ij^e -> d_ij^e a_i^-e a_j^-e on the chain page (dp_ij on the back): the
// point-push of foot i around foot j, corrected to the blackboard framing.
inline TwistWord pure_braid_to_twists(PureBraidWord const& w, Side side, Page const& page) {
  TwistWord out;
  for (auto const& l : w.letters) {
    if (l.j > w.strands || l.i >= l.j || l.i < 1) throw Error("pure braid letter out of range");
    std::string d = side == Side::front ? chain_d(l.i, l.j) : chain_dp(l.i, l.j);
    if (!page.has_curve(d) || !page.has_curve(chain_a(l.j)))
      throw Error("pure braid on " + std::to_string(w.strands) + " strands does not fit the chain page");
    out.append(d, l.exponent).append(chain_a(l.i), -l.exponent).append(chain_a(l.j), -l.exponent);
  }
  return out;
}

}  // namespace obk
