#pragma once

#include <optional>

#include "fsind/zmod/int_matrix.hpp"

namespace fsind::zmod {

/// U * M * V = D with U, V unimodular and D diagonal, d1 | d2 | ..., all >= 0.
struct SmithForm {
  IntMatrix U;
  IntMatrix D;
  IntMatrix V;

  /// Diagonal entries of D, length min(rows, cols).
  IntVector diagonal() const {
    IntVector d;
    for (std::size_t i = 0; i < std::min(D.rows(), D.cols()); ++i) d.push_back(D(i, i));
    return d;
  }

  std::size_t rank() const {
    std::size_t r = 0;
    for (const auto& d : diagonal())
      if (d != 0) ++r;
    return r;
  }
};

namespace detail {

// Floor division keeping remainders in [0, |b|).
inline Int floor_div(const Int& a, const Int& b) {
  Int q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

} // namespace detail

inline SmithForm smith_normal_form(const IntMatrix& M) {
  const std::size_t m = M.rows(), n = M.cols();
  IntMatrix A = M;
  IntMatrix U = IntMatrix::identity(m);
  IntMatrix V = IntMatrix::identity(n);

  bool exhausted = false;
  for (std::size_t t = 0; t < std::min(m, n) && !exhausted; ++t) {
    for (;;) {
      // Smallest nonzero entry of the trailing block becomes the pivot.
      std::size_t pi = m, pj = n;
      for (std::size_t i = t; i < m; ++i)
        for (std::size_t j = t; j < n; ++j)
          if (A(i, j) != 0 && (pi == m || abs(A(i, j)) < abs(A(pi, pj)))) {
            pi = i;
            pj = j;
          }
      if (pi == m) {
        exhausted = true;
        break;
      }
      A.swap_rows(t, pi);
      U.swap_rows(t, pi);
      A.swap_cols(t, pj);
      V.swap_cols(t, pj);

      bool clean = true;
      for (std::size_t i = t + 1; i < m; ++i) {
        if (A(i, t) == 0) continue;
        Int q = detail::floor_div(A(i, t), A(t, t));
        A.add_row(i, t, -q);
        U.add_row(i, t, -q);
        if (A(i, t) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < n; ++j) {
        if (A(t, j) == 0) continue;
        Int q = detail::floor_div(A(t, j), A(t, t));
        A.add_col(j, t, -q);
        V.add_col(j, t, -q);
        if (A(t, j) != 0) clean = false;
      }
      if (!clean) continue;

      // Pivot must divide the rest of the block; otherwise fold a row in.
      std::size_t bad = m;
      for (std::size_t i = t + 1; i < m && bad == m; ++i)
        for (std::size_t j = t + 1; j < n; ++j)
          if (A(i, j) % A(t, t) != 0) {
            bad = i;
            break;
          }
      if (bad == m) break;
      A.add_row(t, bad, 1);
      U.add_row(t, bad, 1);
    }
    if (!exhausted && A(t, t) < 0) {
      A.negate_row(t);
      U.negate_row(t);
    }
  }
  return SmithForm{std::move(U), std::move(A), std::move(V)};
}

/// Basis of the integer kernel {x : M x = 0}, as columns.
inline IntMatrix integer_kernel(const IntMatrix& M) {
  SmithForm s = smith_normal_form(M);
  const std::size_t r = s.rank();
  return s.V.sub(0, M.cols(), r, M.cols());
}

/// Basis (as columns) of the lattice spanned by the columns of `gens`.
inline IntMatrix lattice_basis(const IntMatrix& gens) {
  SmithForm s = smith_normal_form(gens);
  IntMatrix GV = gens * s.V;
  return GV.sub(0, gens.rows(), 0, s.rank());
}

/// Some integer x with M x = v, if one exists.
inline std::optional<IntVector> solve_integer(const IntMatrix& M, const IntVector& v) {
  require(M.rows() == v.size(), "solve_integer: dimension mismatch");
  SmithForm s = smith_normal_form(M);
  IntVector w = s.U * v;
  IntVector y(M.cols());
  const IntVector d = s.diagonal();
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i < d.size() && d[i] != 0) {
      if (w[i] % d[i] != 0) return std::nullopt;
      y[i] = w[i] / d[i];
    } else if (w[i] != 0) {
      return std::nullopt;
    }
  }
  return s.V * y;
}

/// True iff v lies in colspan(M) + colspan(rel).
inline bool image_membership(const IntMatrix& M, const IntVector& v, const IntMatrix& rel) {
  require(M.rows() == v.size() && rel.rows() == v.size(), "image_membership: dimension mismatch");
  return solve_integer(M.hconcat(rel), v).has_value();
}

} // namespace fsind::zmod
