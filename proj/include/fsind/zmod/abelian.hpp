#pragma once

#include <ostream>
#include <string>

#include "fsind/zmod/smith.hpp"

namespace fsind::zmod {

/// Finitely generated abelian group Z^rank + Z/d1 + ... + Z/dk with d1 | ... | dk, di >= 2.
struct FinAbGroup {
  std::size_t rank = 0;
  IntVector invariant_factors;

  bool is_finite() const { return rank == 0; }
  bool is_trivial() const { return rank == 0 && invariant_factors.empty(); }
  bool is_cyclic_torsion() const { return invariant_factors.size() <= 1; }

  /// Order of the torsion subgroup.
  Int torsion_order() const {
    Int o = 1;
    for (const auto& d : invariant_factors) o *= d;
    return o;
  }

  /// Drops the p-primary part of the torsion.
  FinAbGroup prime_to(const Int& p) const {
    FinAbGroup g{rank, {}};
    for (Int d : invariant_factors) {
      while (d % p == 0) d /= p;
      if (d > 1) g.invariant_factors.push_back(d);
    }
    return g;
  }

  FinAbGroup torsion() const { return FinAbGroup{0, invariant_factors}; }

  std::string to_string() const {
    std::string s;
    for (const auto& d : invariant_factors) s += (s.empty() ? "" : " + ") + ("Z/" + d.str());
    if (rank > 0) s += (s.empty() ? "" : " + ") + (rank == 1 ? std::string("Z") : "Z^" + std::to_string(rank));
    return s.empty() ? "0" : s;
  }

  friend bool operator==(const FinAbGroup&, const FinAbGroup&) = default;
  friend std::ostream& operator<<(std::ostream& os, const FinAbGroup& g) { return os << g.to_string(); }
};

/// Z^n / colspan(M), with n = M.rows().
inline FinAbGroup cokernel(const IntMatrix& M) {
  const std::size_t n = M.rows();
  if (M.cols() == 0) return FinAbGroup{n, {}};
  SmithForm s = smith_normal_form(M);
  FinAbGroup g;
  std::size_t nonzero = 0;
  for (const auto& d : s.diagonal()) {
    if (d == 0) continue;
    ++nonzero;
    if (d > 1) g.invariant_factors.push_back(d);
  }
  g.rank = n - nonzero;
  return g;
}

/// Explicit SNF coordinates for Z^n / colspan(M).
///
/// A vector x of Z^n has coordinates y = U x; coordinate i is taken modulo
/// moduli[i] (0 means a free coordinate, 1 a coordinate that is always zero).
struct QuotientCoords {
  IntMatrix U;
  IntMatrix U_inv;
  IntVector moduli;

  std::size_t ambient() const { return moduli.size(); }

  IntVector coords(const IntVector& x) const {
    IntVector y = U * x;
    for (std::size_t i = 0; i < y.size(); ++i)
      if (moduli[i] > 0) {
        y[i] %= moduli[i];
        if (y[i] < 0) y[i] += moduli[i];
      }
    return y;
  }

  /// Indices i with moduli[i] >= 2 (torsion generators).
  std::vector<std::size_t> torsion_indices() const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < moduli.size(); ++i)
      if (moduli[i] >= 2) out.push_back(i);
    return out;
  }

  /// Indices i with moduli[i] == 0 (free generators).
  std::vector<std::size_t> free_indices() const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < moduli.size(); ++i)
      if (moduli[i] == 0) out.push_back(i);
    return out;
  }

  /// A lift to Z^n of the i-th generator.
  IntVector generator_lift(std::size_t i) const { return U_inv.column(i); }
};

/// Inverse of a unimodular matrix via the adjugate-free route: solve U X = I.
inline IntMatrix unimodular_inverse(const IntMatrix& U) {
  const std::size_t n = U.rows();
  IntMatrix inv(n, n);
  for (std::size_t j = 0; j < n; ++j) {
    IntVector e(n);
    e[j] = 1;
    auto x = solve_integer(U, e);
    ensure(x.has_value(), "unimodular_inverse: matrix is not unimodular");
    for (std::size_t i = 0; i < n; ++i) inv(i, j) = (*x)[i];
  }
  return inv;
}

inline QuotientCoords quotient_coords(const IntMatrix& M) {
  const std::size_t n = M.rows();
  QuotientCoords q;
  if (M.cols() == 0) {
    q.U = IntMatrix::identity(n);
    q.U_inv = q.U;
    q.moduli.assign(n, 0);
    return q;
  }
  SmithForm s = smith_normal_form(M);
  q.U = s.U;
  q.U_inv = unimodular_inverse(s.U);
  const IntVector d = s.diagonal();
  q.moduli.assign(n, 0);
  for (std::size_t i = 0; i < d.size(); ++i) q.moduli[i] = d[i];
  return q;
}

/// A finitely presented abelian group Z^n / colspan(relations) with an
/// endomorphism given by its matrix on the n generators.
struct FinAbWithEndo {
  IntMatrix relations;
  IntMatrix endo;

  /// Cyclic-factor presentation: Z/d1 + ... with endo on the factor generators.
  static FinAbWithEndo cyclic(const IntVector& orders, const IntMatrix& endo) {
    return FinAbWithEndo{IntMatrix::diagonal(orders), endo};
  }

  std::size_t generators() const { return relations.rows(); }

  /// Whether endo maps the relation lattice into itself.
  bool well_defined() const {
    if (endo.rows() != generators() || endo.cols() != generators()) return false;
    const IntMatrix image = endo * relations;
    const IntMatrix none(generators(), 0);
    for (std::size_t j = 0; j < image.cols(); ++j)
      if (!image_membership(relations, image.column(j), none)) return false;
    return true;
  }

  FinAbGroup group() const { return cokernel(relations); }
};

/// A / (endo - id) A.
inline FinAbGroup coinvariants(const FinAbWithEndo& A) {
  require(A.well_defined(), "coinvariants: endomorphism does not preserve the relations");
  const IntMatrix shifted = A.endo - IntMatrix::identity(A.generators());
  return cokernel(A.relations.hconcat(shifted));
}

/// Order of the image of `endo` acting on a finite group, |A| / |ker| = |A| / |coker|.
inline Int image_order(const FinAbWithEndo& A) {
  FinAbGroup g = A.group();
  require(g.is_finite(), "image_order: group is infinite");
  require(A.well_defined(), "image_order: endomorphism does not preserve the relations");
  FinAbGroup c = cokernel(A.relations.hconcat(A.endo));
  return g.torsion_order() / c.torsion_order();
}

} // namespace fsind::zmod
