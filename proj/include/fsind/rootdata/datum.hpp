#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "fsind/zmod.hpp"

namespace fsind::rootdata {

using zmod::Int;
using zmod::IntMatrix;
using zmod::IntVector;

/// Root datum in coordinates: X = Z^rank, X^v = Z^rank, pairing = dot product.
///
/// roots[i] lies in X, coroots[i] in X^v and is the coroot of roots[i].
/// `simple` indexes the simple roots determined by the chosen Borel.
struct RootDatum {
  std::string name;
  std::size_t rank = 0;
  std::vector<IntVector> roots;
  std::vector<IntVector> coroots;
  std::vector<std::size_t> simple;

  std::size_t num_roots() const { return roots.size(); }
  std::size_t semisimple_rank() const { return simple.size(); }

  /// rank x |roots| matrix whose columns are the roots.
  IntMatrix root_matrix() const { return IntMatrix::from_columns(rank, roots); }
  IntMatrix coroot_matrix() const { return IntMatrix::from_columns(rank, coroots); }
  IntMatrix simple_root_matrix() const {
    std::vector<IntVector> cols;
    for (auto i : simple) cols.push_back(roots[i]);
    return IntMatrix::from_columns(rank, cols);
  }

  /// Cartan integers <alpha_i, alpha_j^v> over the simple roots.
  IntMatrix cartan() const {
    const std::size_t l = simple.size();
    IntMatrix A(l, l);
    for (std::size_t i = 0; i < l; ++i)
      for (std::size_t j = 0; j < l; ++j) A(i, j) = zmod::dot(roots[simple[i]], coroots[simple[j]]);
    return A;
  }

  std::optional<std::size_t> find_root(const IntVector& v) const {
    auto it = std::find(roots.begin(), roots.end(), v);
    if (it == roots.end()) return std::nullopt;
    return static_cast<std::size_t>(it - roots.begin());
  }
  std::optional<std::size_t> find_coroot(const IntVector& v) const {
    auto it = std::find(coroots.begin(), coroots.end(), v);
    if (it == coroots.end()) return std::nullopt;
    return static_cast<std::size_t>(it - coroots.begin());
  }

  /// Coordinates of every root in the simple-root basis, or nullopt for roots
  /// that are not integral combinations of the simple roots.
  std::vector<std::optional<IntVector>> simple_coordinates() const {
    const IntMatrix S = simple_root_matrix();
    std::vector<std::optional<IntVector>> out;
    out.reserve(roots.size());
    for (const auto& r : roots) out.push_back(zmod::solve_integer(S, r));
    return out;
  }

  /// Indices of positive roots (nonnegative simple coordinates).
  std::vector<std::size_t> positive_roots() const {
    std::vector<std::size_t> pos;
    auto coords = simple_coordinates();
    for (std::size_t i = 0; i < coords.size(); ++i) {
      ensure(coords[i].has_value(), "positive_roots: root " + std::to_string(i) + " outside simple span");
      bool nonneg = std::all_of(coords[i]->begin(), coords[i]->end(), [](const Int& c) { return c >= 0; });
      if (nonneg) pos.push_back(i);
    }
    return pos;
  }
};

/// Frobenius sigma = q * F on X, with F a finite-order automorphism of the datum.
///
/// On cocharacters sigma acts as q * F^T, so sigma(y(z)) = (F^T y)(z^q).
struct FrobeniusAction {
  IntMatrix F;
  Int q = 2;
  Int p = 2;
  unsigned k = 1;

  static FrobeniusAction split(std::size_t rank, const Int& q) { return with_matrix(IntMatrix::identity(rank), q); }

  static FrobeniusAction with_matrix(IntMatrix F, const Int& q);

  IntMatrix coroot_action() const { return F.transpose(); }
  bool is_split() const { return F == IntMatrix::identity(F.rows()); }
};

/// (p, k) with q = p^k, or nullopt if q is not a prime power >= 2.
inline std::optional<std::pair<Int, unsigned>> prime_power(const Int& q) {
  if (q < 2) return std::nullopt;
  Int p = 2;
  Int n = q;
  while (p * p <= n && n % p != 0) ++p;
  if (n % p != 0) p = n;
  unsigned k = 0;
  while (n % p == 0) {
    n /= p;
    ++k;
  }
  if (n != 1) return std::nullopt;
  return std::make_pair(p, k);
}

inline FrobeniusAction FrobeniusAction::with_matrix(IntMatrix F, const Int& q) {
  FrobeniusAction fr;
  fr.F = std::move(F);
  fr.q = q;
  auto pk = prime_power(q);
  require(pk.has_value(), "Frobenius: q = " + q.str() + " is not a prime power");
  fr.p = pk->first;
  fr.k = pk->second;
  return fr;
}

/// Every violated root-datum axiom, one message per offence.
inline std::vector<std::string> datum_violations(const RootDatum& rd) {
  std::vector<std::string> errs;
  auto idx = [](std::size_t i) { return std::to_string(i); };
  if (rd.roots.size() != rd.coroots.size()) {
    errs.push_back("roots and coroots differ in number");
    return errs;
  }
  for (std::size_t i = 0; i < rd.roots.size(); ++i) {
    if (rd.roots[i].size() != rd.rank) errs.push_back("root " + idx(i) + ": wrong length");
    if (rd.coroots[i].size() != rd.rank) errs.push_back("coroot " + idx(i) + ": wrong length");
  }
  if (!errs.empty()) return errs;
  for (auto s : rd.simple)
    if (s >= rd.roots.size()) {
      errs.push_back("simple index " + idx(s) + " out of range");
      return errs;
    }

  for (std::size_t i = 0; i < rd.roots.size(); ++i) {
    if (zmod::dot(rd.roots[i], rd.coroots[i]) != 2) errs.push_back("root " + idx(i) + ": pairing not 2");
    for (std::size_t j = 0; j < i; ++j)
      if (rd.roots[i] == rd.roots[j]) errs.push_back("root " + idx(i) + ": duplicate of root " + idx(j));
  }
  if (!errs.empty()) return errs;

  const IntMatrix A = rd.cartan();
  for (std::size_t a = 0; a < rd.simple.size(); ++a)
    for (std::size_t b = 0; b < rd.simple.size(); ++b)
      if (a != b && A(a, b) > 0)
        errs.push_back("simple root " + idx(rd.simple[a]) + ": positive Cartan integer with simple root " +
                       idx(rd.simple[b]));

  // s_alpha(beta) = beta - <beta, alpha^v> alpha must be a root whose coroot is
  // s_alpha^v(beta^v) = beta^v - <alpha, beta^v> alpha^v.
  for (std::size_t a = 0; a < rd.roots.size(); ++a)
    for (std::size_t b = 0; b < rd.roots.size(); ++b) {
      const Int c = zmod::dot(rd.roots[b], rd.coroots[a]);
      const Int cv = zmod::dot(rd.roots[a], rd.coroots[b]);
      IntVector r = rd.roots[b], rv = rd.coroots[b];
      for (std::size_t t = 0; t < rd.rank; ++t) {
        r[t] -= c * rd.roots[a][t];
        rv[t] -= cv * rd.coroots[a][t];
      }
      auto k = rd.find_root(r);
      if (!k) {
        errs.push_back("root " + idx(b) + ": reflection in root " + idx(a) + " leaves the root set");
      } else if (rd.coroots[*k] != rv) {
        errs.push_back("coroot " + idx(b) + ": reflection in coroot " + idx(a) + " does not match coroot " + idx(*k));
      }
    }

  auto coords = rd.simple_coordinates();
  for (std::size_t i = 0; i < coords.size(); ++i) {
    if (!coords[i]) {
      errs.push_back("root " + idx(i) + ": not an integral combination of simple roots");
      continue;
    }
    bool nonneg = std::all_of(coords[i]->begin(), coords[i]->end(), [](const Int& x) { return x >= 0; });
    bool nonpos = std::all_of(coords[i]->begin(), coords[i]->end(), [](const Int& x) { return x <= 0; });
    if (!nonneg && !nonpos) errs.push_back("root " + idx(i) + ": mixed signs in simple-root coordinates");
  }
  return errs;
}

inline std::vector<std::string> frobenius_violations(const RootDatum& rd, const FrobeniusAction& fr) {
  std::vector<std::string> errs;
  if (fr.F.rows() != rd.rank || fr.F.cols() != rd.rank) {
    errs.push_back("Frobenius matrix has wrong shape");
    return errs;
  }
  if (!prime_power(fr.q)) errs.push_back("q is not a prime power");
  if (abs(zmod::determinant(fr.F)) != 1) errs.push_back("Frobenius matrix is not invertible over Z");

  const IntMatrix Ft = fr.F.transpose();
  for (std::size_t i = 0; i < rd.roots.size(); ++i) {
    auto j = rd.find_root(fr.F * rd.roots[i]);
    if (!j) {
      errs.push_back("root " + std::to_string(i) + ": image under F is not a root");
      continue;
    }
    // F^T carries the coroot of F(alpha) back to the coroot of alpha.
    if (Ft * rd.coroots[*j] != rd.coroots[i])
      errs.push_back("root " + std::to_string(i) + ": F is incompatible with the coroot pairing");
  }
  for (auto s : rd.simple) {
    auto j = rd.find_root(fr.F * rd.roots[s]);
    if (j && std::find(rd.simple.begin(), rd.simple.end(), *j) == rd.simple.end())
      errs.push_back("simple root " + std::to_string(s) + ": F does not preserve the simple roots (not quasi-split)");
  }

  IntMatrix P = fr.F;
  const IntMatrix I = IntMatrix::identity(rd.rank);
  bool finite = false;
  for (int order = 1; order <= 5040; ++order) {
    if (P == I) {
      finite = true;
      break;
    }
    P = P * fr.F;
  }
  if (!finite) errs.push_back("Frobenius matrix does not have finite order");
  return errs;
}

inline std::string join_violations(const std::vector<std::string>& errs) {
  std::string s;
  for (const auto& e : errs) s += (s.empty() ? "" : "; ") + e;
  return s;
}

/// Throws InvalidInput listing every violated axiom.
inline void validate(const RootDatum& rd, const FrobeniusAction& fr) {
  auto errs = datum_violations(rd);
  if (errs.empty()) errs = frobenius_violations(rd, fr);
  if (!errs.empty()) throw InvalidInput("invalid root datum '" + rd.name + "': " + join_violations(errs));
}

inline void validate(const RootDatum& rd) {
  auto errs = datum_violations(rd);
  if (!errs.empty()) throw InvalidInput("invalid root datum '" + rd.name + "': " + join_violations(errs));
}

} // namespace fsind::rootdata
