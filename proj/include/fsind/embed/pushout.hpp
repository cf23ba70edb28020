#pragma once

#include <algorithm>
#include <numeric>
#include <optional>

#include "fsind/rootdata.hpp"

namespace fsind::embed {

using rootdata::Int;
using rootdata::IntMatrix;
using rootdata::IntVector;
using rootdata::RootDatum;

/// An embedding of the center Z of G into a torus Z'.
///
/// Column j of z_to_zprime is a lift to X(T) of the restriction to Z of the
/// j-th basis character of X(Z'); it is only meaningful modulo ZPhi.
struct EmbeddingSpec {
  RootDatum base;
  std::size_t zprime_rank = 0;
  IntMatrix z_to_zprime;
};

struct PushoutResult {
  RootDatum datum_prime;
  IntMatrix inclusion_X;        // X(T') -> X(T), dual to T -> T'
  IntMatrix zprime_inclusion;   // X(T') -> X(Z'), dual to Z' -> T'
  IntMatrix basis;              // X(T') inside X(T) + X(Z'), as columns
};

/// Z' with X(Z') free on the SNF generators of X/ZPhi (torsion and free).
inline EmbeddingSpec minimal_embedding(const RootDatum& rd) {
  const IntMatrix R = rd.num_roots() ? rd.root_matrix() : IntMatrix(rd.rank, 0);
  const auto qc = zmod::quotient_coords(R);
  std::vector<IntVector> cols;
  for (std::size_t i = 0; i < qc.moduli.size(); ++i)
    if (qc.moduli[i] != 1) cols.push_back(qc.generator_lift(i));
  return EmbeddingSpec{rd, cols.size(), IntMatrix::from_columns(rd.rank, cols)};
}

/// Z' = T with the identity restriction map.
inline EmbeddingSpec full_torus_embedding(const RootDatum& rd) {
  return EmbeddingSpec{rd, rd.rank, IntMatrix::identity(rd.rank)};
}

/// G' = (G x Z') / Z. X(T') is the fiber product of X(T) and X(Z') over X(Z) = X/ZPhi.
inline PushoutResult pushout(const EmbeddingSpec& spec) {
  const RootDatum& rd = spec.base;
  const std::size_t n = rd.rank, m = spec.zprime_rank;
  require(spec.z_to_zprime.rows() == n && spec.z_to_zprime.cols() == m,
          "pushout: restriction map must be rank x zprime_rank");
  rootdata::validate(rd);
  const IntMatrix Phi = rd.num_roots() ? rd.root_matrix() : IntMatrix(n, 0);
  require(zmod::cokernel(spec.z_to_zprime.hconcat(Phi)).is_trivial(),
          "pushout: not an embedding of Z (X(Z') -> X(Z) is not surjective)");

  // {(chi, chi') : chi - R chi' in ZPhi} is spanned by (R chi' + Phi c, chi').
  IntMatrix gens(n + m, m + Phi.cols());
  for (std::size_t j = 0; j < m; ++j) {
    for (std::size_t i = 0; i < n; ++i) gens(i, j) = spec.z_to_zprime(i, j);
    gens(n + j, j) = 1;
  }
  for (std::size_t j = 0; j < Phi.cols(); ++j)
    for (std::size_t i = 0; i < n; ++i) gens(i, m + j) = Phi(i, j);

  PushoutResult out;
  out.basis = zmod::lattice_basis(gens);
  const std::size_t r = out.basis.cols();
  out.inclusion_X = out.basis.sub(0, n, 0, r);
  out.zprime_inclusion = out.basis.sub(n, n + m, 0, r);

  RootDatum& dp = out.datum_prime;
  dp.name = rd.name + "'";
  dp.rank = r;
  dp.simple = rd.simple;
  const IntMatrix incl_t = out.inclusion_X.transpose();
  for (std::size_t k = 0; k < rd.num_roots(); ++k) {
    IntVector lifted(n + m);
    std::copy(rd.roots[k].begin(), rd.roots[k].end(), lifted.begin());
    auto y = zmod::solve_integer(out.basis, lifted);
    ensure(y.has_value(), "pushout: root " + std::to_string(k) + " outside X(T')");
    dp.roots.push_back(*y);
    dp.coroots.push_back(incl_t * rd.coroots[k]);
  }

  rootdata::validate(dp);
  ensure(rootdata::component_group(dp).is_trivial(), "pushout: center of G' is not connected");
  ensure(dp.cartan() == rd.cartan(), "pushout: Cartan matrix changed");
  return out;
}

/// Predicted index [G'(F_q) : G(F_q) Z'(F_q)] = |(Z/Z°)_sigma|.
inline Int index_formula(const EmbeddingSpec& spec, const rootdata::FrobeniusAction& fr) {
  return rootdata::coinvariants_component(spec.base, fr).torsion_order();
}

namespace detail {

inline bool maps_datum(const RootDatum& a, const RootDatum& b, const IntMatrix& g) {
  if (abs(zmod::determinant(g)) != 1) return false;
  const IntMatrix gt = g.transpose();
  for (std::size_t k = 0; k < a.num_roots(); ++k) {
    auto j = b.find_root(g * a.roots[k]);
    if (!j || gt * b.coroots[*j] != a.coroots[k]) return false;
  }
  return true;
}

} // namespace detail

/// A g in GL(X) carrying a's roots to b's roots and (via g^T) b's coroots to a's,
/// searched among maps sending simple roots to simple roots; entries of the free
/// part of the solution range over [-bound, bound].
inline std::optional<IntMatrix> find_isomorphism(const RootDatum& a, const RootDatum& b, long bound = 0) {
  if (a.rank != b.rank || a.num_roots() != b.num_roots() || a.simple.size() != b.simple.size()) return std::nullopt;
  const std::size_t r = a.rank, l = a.simple.size();
  const IntMatrix Ca = a.cartan(), Cb = b.cartan();
  std::vector<std::size_t> perm(l);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    bool cartan_ok = true;
    for (std::size_t i = 0; i < l && cartan_ok; ++i)
      for (std::size_t j = 0; j < l && cartan_ok; ++j) cartan_ok = Ca(i, j) == Cb(perm[i], perm[j]);
    if (!cartan_ok) continue;

    // Unknown g, row-major; g alpha_i = beta_pi(i) and g^T beta_pi(i)^v = alpha_i^v.
    IntMatrix E(2 * r * l, r * r);
    IntVector rhs(2 * r * l);
    for (std::size_t i = 0; i < l; ++i) {
      const auto& al = a.roots[a.simple[i]];
      const auto& alv = a.coroots[a.simple[i]];
      const auto& be = b.roots[b.simple[perm[i]]];
      const auto& bev = b.coroots[b.simple[perm[i]]];
      for (std::size_t s = 0; s < r; ++s) {
        const std::size_t row = i * r + s;
        for (std::size_t t = 0; t < r; ++t) E(row, s * r + t) = al[t];
        rhs[row] = be[s];
      }
      for (std::size_t t = 0; t < r; ++t) {
        const std::size_t row = r * l + i * r + t;
        for (std::size_t s = 0; s < r; ++s) E(row, s * r + t) = bev[s];
        rhs[row] = alv[t];
      }
    }
    auto x0 = zmod::solve_integer(E, rhs);
    if (!x0) continue;
    const IntMatrix K = zmod::integer_kernel(E);
    const std::size_t kd = K.cols();
    long b_use = bound;
    if (b_use <= 0) b_use = kd <= 1 ? 24 : kd == 2 ? 12 : kd <= 4 ? 3 : 1;
    std::vector<long> c(kd, -b_use);
    while (true) {
      IntMatrix g(r, r);
      for (std::size_t u = 0; u < r * r; ++u) {
        Int v = (*x0)[u];
        for (std::size_t j = 0; j < kd; ++j) v += K(u, j) * c[j];
        g(u / r, u % r) = v;
      }
      if (detail::maps_datum(a, b, g)) return g;
      std::size_t j = 0;
      while (j < kd && c[j] == b_use) c[j++] = -b_use;
      if (j == kd) break;
      ++c[j];
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return std::nullopt;
}

inline bool isomorphic(const RootDatum& a, const RootDatum& b) { return find_isomorphism(a, b).has_value(); }

} // namespace fsind::embed
