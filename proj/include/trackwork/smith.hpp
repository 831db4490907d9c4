#pragma once

#include <optional>
#include <stdexcept>
#include <vector>

#include "trackwork/intmatrix.hpp"

namespace trackwork {

/// Smith normal form  L * A * R = S  with S diagonal, d_1 | d_2 | ..., d_i >= 0.
/// Linv and Rinv are maintained alongside so that lattice computations
/// (images, kernels, quotients) never need a separate inversion step.
struct SmithForm {
  IntMatrix s;     // diagonal, rows(A) x cols(A)
  IntMatrix l;     // rows x rows, unimodular
  IntMatrix linv;  // inverse of l
  IntMatrix r;     // cols x cols, unimodular
  IntMatrix rinv;  // inverse of r
  int rank = 0;

  Int diag(int i) const {
    if (i < s.rows() && i < s.cols()) return s(i, i);
    return 0;
  }
};

namespace detail {

inline bool pivot_is_lone(const IntMatrix& a, int t) {
  for (int i = t + 1; i < a.rows(); ++i)
    if (a(i, t) != 0) return false;
  for (int j = t + 1; j < a.cols(); ++j)
    if (a(t, j) != 0) return false;
  return true;
}

inline bool find_min_pivot(const IntMatrix& a, int t, int& pi, int& pj) {
  bool found = false;
  Int best = 0;
  for (int i = t; i < a.rows(); ++i)
    for (int j = t; j < a.cols(); ++j) {
      if (a(i, j) == 0) continue;
      Int v = boost::multiprecision::abs(a(i, j));
      if (!found || v < best) {
        best = v;
        pi = i;
        pj = j;
        found = true;
      }
    }
  return found;
}

}  // namespace detail

inline SmithForm smith_normal_form(const IntMatrix& a) {
  const int m = a.rows(), n = a.cols();
  SmithForm f;
  f.s = a;
  f.l = IntMatrix::identity(m);
  f.linv = IntMatrix::identity(m);
  f.r = IntMatrix::identity(n);
  f.rinv = IntMatrix::identity(n);

  IntMatrix& s = f.s;
  auto row_swap = [&](int i, int j) {
    s.swap_rows(i, j);
    f.l.swap_rows(i, j);
    f.linv.swap_cols(i, j);
  };
  auto col_swap = [&](int i, int j) {
    s.swap_cols(i, j);
    f.r.swap_cols(i, j);
    f.rinv.swap_rows(i, j);
  };
  auto row_add = [&](int i, int j, const Int& q) {  // row i += q * row j
    s.add_row(i, j, q);
    f.l.add_row(i, j, q);
    f.linv.add_col(j, i, -q);
  };
  auto col_add = [&](int i, int j, const Int& q) {  // col i += q * col j
    s.add_col(i, j, q);
    f.r.add_col(i, j, q);
    f.rinv.add_row(j, i, -q);
  };
  auto row_neg = [&](int i) {
    s.negate_row(i);
    f.l.negate_row(i);
    f.linv.negate_col(i);
  };

  const int nmin = std::min(m, n);
  for (int t = 0; t < nmin; ++t) {
    int pi = t, pj = t;
    if (!detail::find_min_pivot(s, t, pi, pj)) break;
    row_swap(t, pi);
    col_swap(t, pj);

    while (!detail::pivot_is_lone(s, t)) {
      for (int i = t + 1; i < m; ++i)
        if (s(i, t) != 0) row_add(i, t, -(s(i, t) / s(t, t)));
      for (int j = t + 1; j < n; ++j)
        if (s(t, j) != 0) col_add(j, t, -(s(t, j) / s(t, t)));
      if (detail::pivot_is_lone(s, t)) break;
      if (!detail::find_min_pivot(s, t, pi, pj)) break;
      row_swap(t, pi);
      col_swap(t, pj);
    }

    // enforce d_t | every remaining entry
    bool redo = true;
    while (redo) {
      redo = false;
      for (int i = t + 1; i < m && !redo; ++i)
        for (int j = t + 1; j < n && !redo; ++j)
          if (s(i, j) % s(t, t) != 0) {
            row_add(t, i, 1);
            // re-clear the pivot row/column
            while (!detail::pivot_is_lone(s, t)) {
              int qi = t, qj = t;
              detail::find_min_pivot(s, t, qi, qj);
              row_swap(t, qi);
              col_swap(t, qj);
              for (int ii = t + 1; ii < m; ++ii)
                if (s(ii, t) != 0) row_add(ii, t, -(s(ii, t) / s(t, t)));
              for (int jj = t + 1; jj < n; ++jj)
                if (s(t, jj) != 0) col_add(jj, t, -(s(t, jj) / s(t, t)));
            }
            redo = true;
          }
    }
    if (s(t, t) < 0) row_neg(t);
  }
  for (int t = 0; t < nmin; ++t)
    if (s(t, t) != 0) f.rank = t + 1;
  return f;
}

/// Basis of { x : A x = 0 }, as matrix columns.
inline IntMatrix kernel_basis(const IntMatrix& a) {
  SmithForm f = smith_normal_form(a);
  int n = a.cols();
  int k = n - f.rank;
  IntMatrix ker(n, k);
  for (int c = 0; c < k; ++c) {
    int j = f.rank + c;
    for (int i = 0; i < n; ++i) ker(i, c) = f.r(i, j);
  }
  return ker;
}

/// One solution of A x = b over the integers, if any.
inline std::optional<std::vector<Int>> solve_linear(const IntMatrix& a, const std::vector<Int>& b) {
  if (static_cast<int>(b.size()) != a.rows()) throw std::invalid_argument("solve_linear: size");
  SmithForm f = smith_normal_form(a);
  std::vector<Int> y = f.l.apply(b);
  std::vector<Int> xp(static_cast<size_t>(a.cols()), Int(0));
  for (int i = 0; i < a.rows(); ++i) {
    Int d = f.diag(i);
    if (d == 0) {
      if (y[i] != 0) return std::nullopt;
    } else {
      if (y[i] % d != 0) return std::nullopt;
      if (i < a.cols()) xp[i] = y[i] / d;
    }
  }
  return f.r.apply(xp);
}

/// Lattice basis for the column span of `gens` (columns may be redundant).
inline IntMatrix column_lattice_basis(const IntMatrix& gens) {
  SmithForm f = smith_normal_form(gens);
  IntMatrix basis(gens.rows(), f.rank);
  for (int c = 0; c < f.rank; ++c) {
    Int d = f.diag(c);
    for (int i = 0; i < gens.rows(); ++i) basis(i, c) = f.linv(i, c) * d;
  }
  return basis;
}

/// Solve A x = b modulo the lattice spanned by the columns of `lat`,
/// i.e. find x with A x - b in im(lat).
inline std::optional<std::vector<Int>> solve_mod_lattice(const IntMatrix& a,
                                                         const std::vector<Int>& b,
                                                         const IntMatrix& lat) {
  IntMatrix aug = a.hcat(lat);
  auto sol = solve_linear(aug, b);
  if (!sol) return std::nullopt;
  std::vector<Int> x(sol->begin(), sol->begin() + a.cols());
  return x;
}

/// Does b lie in the column lattice of A?
inline bool in_column_span(const IntMatrix& a, const std::vector<Int>& b) {
  return solve_linear(a, b).has_value();
}

}  // namespace trackwork
