#pragma once

#include <complex>
#include <cstdint>
#include <random>
#include <vector>

#include <Eigen/Dense>

#include "fsind/chartab/analysis.hpp"

namespace fsind::chartab {

inline constexpr std::size_t kOracleMaxOrder = 500;
inline constexpr std::size_t kOracleMaxDegree = 8;
inline constexpr double kOracleTolerance = 1e-8;

/// Unitary matrices of the irreducible representation with character chi, one per element.
///
/// Built inside the left regular representation: the isotypic block is the image of
/// the central idempotent, and one copy is an eigenspace of a random Hermitian
/// element of its commutant (right multiplication).
inline std::vector<Eigen::MatrixXcd> irreducible_matrices(const FiniteMatrixGroup& G, const ConjClassData& cl,
                                                          const CharacterTable& t, std::size_t chi, std::mt19937_64& rng) {
  using Eigen::MatrixXcd;
  using cd = std::complex<double>;
  const std::size_t n = G.order(), d = t.degrees[chi];
  require(n <= kOracleMaxOrder, "explicit_form_oracle: |G| = " + std::to_string(n) + " above the oracle limit");
  require(d <= kOracleMaxDegree, "explicit_form_oracle: degree " + std::to_string(d) + " above the oracle limit");

  std::vector<cd> value(cl.size());
  for (std::size_t c = 0; c < cl.size(); ++c) value[c] = t(chi, c).to_complex();
  auto at = [&](Index g) { return value[cl.class_of[g]]; };

  // Right multiplication by s: column g holds g*s.
  auto right_mult = [&](const std::vector<cd>& s) {
    MatrixXcd R = MatrixXcd::Zero(n, n);
    for (Index g = 0; g < n; ++g)
      for (Index h = 0; h < n; ++h)
        if (s[h] != cd(0)) R(G.mul(g, h), g) += s[h];
    return R;
  };

  std::vector<cd> idem(n);
  for (Index h = 0; h < n; ++h) idem[h] = static_cast<double>(d) / static_cast<double>(n) * std::conj(at(h));
  Eigen::SelfAdjointEigenSolver<MatrixXcd> proj(right_mult(idem));
  std::vector<Eigen::Index> image;
  for (Eigen::Index i = 0; i < static_cast<Eigen::Index>(n); ++i)
    if (std::abs(proj.eigenvalues()(i) - 1.0) < 1e-6) image.push_back(i);
  ensure(image.size() == d * d, "explicit_form_oracle: isotypic block has the wrong dimension");
  MatrixXcd Q(n, d * d);
  for (std::size_t j = 0; j < image.size(); ++j) Q.col(j) = proj.eigenvectors().col(image[j]);

  std::normal_distribution<double> normal;
  for (int attempt = 0; attempt < 8; ++attempt) {
    std::vector<cd> r(n), s(n);
    for (auto& x : r) x = cd(normal(rng), normal(rng));
    for (Index h = 0; h < n; ++h) s[h] = r[h] + std::conj(r[G.inv(h)]);
    Eigen::SelfAdjointEigenSolver<MatrixXcd> split(Q.adjoint() * right_mult(s) * Q);
    const auto& ev = split.eigenvalues();
    const double scale = std::max(1.0, ev.cwiseAbs().maxCoeff());
    if (d < d * d && ev(d) - ev(d - 1) < 1e-6 * scale) continue;
    if (ev(d - 1) - ev(0) > 1e-6 * scale) continue;
    const MatrixXcd B = Q * split.eigenvectors().leftCols(d);

    std::vector<MatrixXcd> rho(n);
    for (Index g = 0; g < n; ++g) {
      MatrixXcd LB(n, d);
      for (Index x = 0; x < n; ++x) LB.row(G.mul(g, x)) = B.row(x);
      rho[g] = B.adjoint() * LB;
      ensure(std::abs(rho[g].trace() - at(g)) < 1e-6, "explicit_form_oracle: constructed matrices do not afford chi");
    }
    return rho;
  }
  throw InternalError("explicit_form_oracle: could not split the isotypic block");
}

/// Symmetry type of the form B with B(rho(g)u, rho(g)v) = nu(g)^-1 B(u, v): +1 symmetric, -1 alternating.
///
/// B is the nu-weighted average of a random bilinear form; aborts if every attempt is degenerate.
inline int explicit_form_oracle(const FiniteMatrixGroup& G, const ConjClassData& cl, const CharacterTable& t, std::size_t chi,
                                const LinearCharacter& nu, std::uint64_t seed = 0) {
  using Eigen::MatrixXcd;
  using cd = std::complex<double>;
  std::mt19937_64 rng(seed);
  const auto rho = irreducible_matrices(G, cl, t, chi, rng);
  const std::size_t d = t.degrees[chi];
  const double two_pi = 2.0 * std::acos(-1.0);
  std::normal_distribution<double> normal;
  for (int attempt = 0; attempt < 8; ++attempt) {
    MatrixXcd M(d, d);
    for (Eigen::Index i = 0; i < M.size(); ++i) M(i) = cd(normal(rng), normal(rng));
    MatrixXcd F = MatrixXcd::Zero(d, d);
    for (Index g = 0; g < G.order(); ++g) {
      const std::size_t c = cl.class_of[g];
      const cd w = std::polar(1.0, two_pi * static_cast<double>(nu.value[c]) / static_cast<double>(nu.order));
      F += w * rho[g].transpose() * M * rho[g];
    }
    const double norm = F.norm();
    if (norm < kOracleTolerance * static_cast<double>(G.order()) * M.norm()) continue;
    F /= norm;
    Eigen::JacobiSVD<MatrixXcd> svd(F);
    if (svd.singularValues()(d - 1) < kOracleTolerance) continue;
    const MatrixXcd Ft = F.transpose();
    if ((F - Ft).norm() < kOracleTolerance) return 1;
    if ((F + Ft).norm() < kOracleTolerance) return -1;
    throw InternalError("explicit_form_oracle: averaged form is neither symmetric nor alternating");
  }
  throw InternalError("explicit_form_oracle: degenerate averaged form (nu does not dualize chi)");
}

} // namespace fsind::chartab
