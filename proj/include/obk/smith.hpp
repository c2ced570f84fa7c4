#pragma once

// Smith normal form with unimodular transforms, and the abelian groups it
// classifies.

#include <cstddef>
#include <string>
#include <vector>

#include "obk/integer.hpp"

namespace obk {

struct SmithForm {
  Matrix D;  // diagonal, d1 | d2 | ..., all >= 0
  Matrix U;  // rows x rows, unimodular
  Matrix V;  // cols x cols, unimodular
  Matrix U_inv;
};

namespace detail {

inline Integer abs_value(Integer const& x) { return x < 0 ? Integer(-x) : x; }

// Smallest nonzero |entry| in the trailing block starting at (t, t).
inline bool find_pivot(Matrix const& m, std::size_t t, std::size_t& pr, std::size_t& pc) {
  bool found = false;
  Integer best = 0;
  for (std::size_t r = t; r < m.rows(); ++r)
    for (std::size_t c = t; c < m.cols(); ++c) {
      if (m(r, c) == 0) continue;
      Integer a = abs_value(m(r, c));
      if (!found || a < best) {
        found = true;
        best = a;
        pr = r;
        pc = c;
        if (best == 1) return true;
      }
    }
  return found;
}

}  // namespace detail

// D = U * M * V. Each round moves the smallest nonzero entry of the trailing
// block to (t, t) and reduces its row and column; a nonzero remainder is
// smaller than the pivot, so the pivot shrinks until it divides everything.
inline SmithForm smith_normal_form(Matrix const& m) {
  SmithForm s{m, Matrix::identity(m.rows()), Matrix::identity(m.cols()), Matrix::identity(m.rows())};
  Matrix& d = s.D;
  auto swap_rows = [&](std::size_t a, std::size_t b) {
    if (a == b) return;
    d.swap_rows(a, b);
    s.U.swap_rows(a, b);
    s.U_inv.swap_cols(a, b);
  };
  auto swap_cols = [&](std::size_t a, std::size_t b) {
    if (a == b) return;
    d.swap_cols(a, b);
    s.V.swap_cols(a, b);
  };
  std::size_t limit = std::min(d.rows(), d.cols());
  for (std::size_t t = 0; t < limit; ++t) {
    for (;;) {
      std::size_t pr = 0, pc = 0;
      if (!detail::find_pivot(d, t, pr, pc)) break;
      swap_rows(t, pr);
      swap_cols(t, pc);

      bool remainder = false;
      for (std::size_t r = t + 1; r < d.rows(); ++r) {
        if (d(r, t) == 0) continue;
        Integer q = d(r, t) / d(t, t);
        d.add_row(r, t, -q);
        s.U.add_row(r, t, -q);
        s.U_inv.add_col(t, r, q);
        remainder = remainder || d(r, t) != 0;
      }
      for (std::size_t c = t + 1; c < d.cols(); ++c) {
        if (d(t, c) == 0) continue;
        Integer q = d(t, c) / d(t, t);
        d.add_col(c, t, -q);
        s.V.add_col(c, t, -q);
        remainder = remainder || d(t, c) != 0;
      }
      if (remainder) continue;

      // Row and column are clear; pull in an entry the pivot does not divide.
      bool divides = true;
      for (std::size_t r = t + 1; r < d.rows() && divides; ++r)
        for (std::size_t c = t + 1; c < d.cols(); ++c)
          if (d(r, c) % d(t, t) != 0) {
            d.add_row(t, r, 1);
            s.U.add_row(t, r, 1);
            s.U_inv.add_col(r, t, -1);
            divides = false;
            break;
          }
      if (divides) break;
    }
    if (d(t, t) < 0) {
      d.negate_row(t);
      s.U.negate_row(t);
      s.U_inv.negate_col(t);
    }
  }
  return s;
}

struct AbelianGroup {
  std::size_t free_rank = 0;
  std::vector<Integer> torsion;  // each >= 2, each divides the next

  bool is_trivial() const { return free_rank == 0 && torsion.empty(); }

  friend bool operator==(AbelianGroup const&, AbelianGroup const&) = default;

  // Direct sum, re-normalised into invariant factors.
  friend AbelianGroup operator+(AbelianGroup const& a, AbelianGroup const& b);

  std::string str() const {
    std::string out;
    auto append = [&](std::string const& part) {
      if (!out.empty()) out += " + ";
      out += part;
    };
    if (free_rank == 1) append("Z");
    else if (free_rank > 1) append("Z^" + std::to_string(free_rank));
    for (auto const& t : torsion) append("Z/" + t.str());
    return out.empty() ? "0" : out;
  }
};

// Group generated by `generators` symbols subject to relations, given as
// vectors over those generators.
inline AbelianGroup cokernel(std::vector<Vector> const& relations, std::size_t generators) {
  Matrix m = Matrix::from_columns(relations, generators);
  SmithForm s = smith_normal_form(m);
  AbelianGroup g;
  std::size_t rank = 0;
  for (std::size_t i = 0; i < std::min(s.D.rows(), s.D.cols()); ++i) {
    Integer const& x = s.D(i, i);
    if (x == 0) continue;
    ++rank;
    if (x > 1) g.torsion.push_back(x);
  }
  g.free_rank = generators - rank;
  return g;
}

inline AbelianGroup operator+(AbelianGroup const& a, AbelianGroup const& b) {
  std::vector<Vector> rels;
  std::size_t n = a.torsion.size() + b.torsion.size();
  std::size_t i = 0;
  for (auto const* part : {&a.torsion, &b.torsion})
    for (auto const& t : *part) {
      Vector v(n, 0);
      v[i++] = t;
      rels.push_back(std::move(v));
    }
  AbelianGroup sum = cokernel(rels, n);
  sum.free_rank = a.free_rank + b.free_rank;
  return sum;
}

}  // namespace obk
