#pragma once

#include <deque>
#include <set>
#include <string>
#include <vector>

#include "fsind/rootdata/datum.hpp"

namespace fsind::rootdata {

enum class Isogeny { SimplyConnected, Adjoint };

namespace detail {

inline IntVector unit(std::size_t n, std::size_t i, long long v = 1) {
  IntVector e(n);
  e[i] = v;
  return e;
}

inline IntVector axpy(const IntVector& a, long long s, const IntVector& b) {
  IntVector r = a;
  for (std::size_t i = 0; i < r.size(); ++i) r[i] += s * b[i];
  return r;
}

/// All (root, coroot) pairs of the root system with Cartan matrix A,
/// in simple-root / simple-coroot coordinates, by closure under simple reflections.
inline std::vector<std::pair<IntVector, IntVector>> root_pairs(const IntMatrix& A) {
  const std::size_t l = A.rows();
  std::vector<std::pair<IntVector, IntVector>> pairs;
  std::set<IntVector> seen;
  std::deque<std::pair<IntVector, IntVector>> todo;
  for (std::size_t i = 0; i < l; ++i) todo.emplace_back(unit(l, i), unit(l, i));
  while (!todo.empty()) {
    auto [r, rv] = todo.front();
    todo.pop_front();
    if (!seen.insert(r).second) continue;
    pairs.emplace_back(r, rv);
    for (std::size_t i = 0; i < l; ++i) {
      // <beta, alpha_i^v> = sum_j b_j A(j, i); <alpha_i, beta^v> = sum_j c_j A(i, j)
      Int c = 0, cv = 0;
      for (std::size_t j = 0; j < l; ++j) {
        c += r[j] * A(j, i);
        cv += rv[j] * A(i, j);
      }
      IntVector s = r, sv = rv;
      s[i] -= c;
      sv[i] -= cv;
      if (!seen.count(s)) todo.emplace_back(s, sv);
    }
  }
  return pairs;
}

/// Sort roots: positive first by height, then negatives; simple roots come first.
inline RootDatum assemble(std::string name, std::size_t rank, const IntMatrix& A, const IntMatrix& R,
                          const IntMatrix& C) {
  auto pairs = root_pairs(A);
  std::sort(pairs.begin(), pairs.end(), [](const auto& x, const auto& y) {
    Int hx = 0, hy = 0;
    for (const auto& v : x.first) hx += v;
    for (const auto& v : y.first) hy += v;
    bool px = hx > 0, py = hy > 0;
    if (px != py) return px;
    if (px) return hx != hy ? hx < hy : x.first > y.first;
    return hx != hy ? hx > hy : x.first < y.first;
  });
  RootDatum rd;
  rd.name = std::move(name);
  rd.rank = rank;
  for (const auto& [r, rv] : pairs) {
    rd.roots.push_back(R * r);
    rd.coroots.push_back(C * rv);
  }
  for (std::size_t i = 0; i < A.rows(); ++i) rd.simple.push_back(i);
  return rd;
}

} // namespace detail

/// Root datum of the given Cartan matrix (A(i,j) = <alpha_i, alpha_j^v>).
///
/// Simply connected: X is the weight lattice (fundamental-weight basis).
/// Adjoint: X is the root lattice (simple-root basis).
inline RootDatum from_cartan(std::string name, const IntMatrix& A, Isogeny iso) {
  const std::size_t l = A.rows();
  if (iso == Isogeny::SimplyConnected) return detail::assemble(std::move(name), l, A, A.transpose(), IntMatrix::identity(l));
  return detail::assemble(std::move(name), l, A, IntMatrix::identity(l), A);
}

inline IntMatrix cartan_A(std::size_t l) {
  IntMatrix A(l, l);
  for (std::size_t i = 0; i < l; ++i) {
    A(i, i) = 2;
    if (i + 1 < l) A(i, i + 1) = A(i + 1, i) = -1;
  }
  return A;
}

/// Type C_l, alpha_l long: <alpha_{l-1}, alpha_l^v> = -1, <alpha_l, alpha_{l-1}^v> = -2.
inline IntMatrix cartan_C(std::size_t l) {
  IntMatrix A = cartan_A(l);
  if (l >= 2) A(l - 1, l - 2) = -2;
  return A;
}

inline RootDatum general_linear(std::size_t n) {
  RootDatum rd;
  rd.name = "GL" + std::to_string(n);
  rd.rank = n;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      IntVector v = detail::axpy(detail::unit(n, i), -1, detail::unit(n, j));
      rd.roots.push_back(v);
      rd.coroots.push_back(v);
    }
  // Put simple roots e_i - e_{i+1} first so that simple = 0..n-2.
  std::vector<std::size_t> order;
  for (std::size_t i = 0; i + 1 < n; ++i) order.push_back(i * (n - 1) + i);
  for (std::size_t k = 0; k < rd.roots.size(); ++k)
    if (std::find(order.begin(), order.end(), k) == order.end()) order.push_back(k);
  RootDatum out = rd;
  out.roots.clear();
  out.coroots.clear();
  for (auto k : order) {
    out.roots.push_back(rd.roots[k]);
    out.coroots.push_back(rd.coroots[k]);
  }
  for (std::size_t i = 0; i + 1 < n; ++i) out.simple.push_back(i);
  return out;
}

inline RootDatum special_linear(std::size_t n) {
  return from_cartan("SL" + std::to_string(n), cartan_A(n - 1), Isogeny::SimplyConnected);
}

inline RootDatum projective_linear(std::size_t n) {
  return from_cartan("PGL" + std::to_string(n), cartan_A(n - 1), Isogeny::Adjoint);
}

inline RootDatum symplectic4() { return from_cartan("Sp4", cartan_C(2), Isogeny::SimplyConnected); }

/// SO(n), n >= 3, in the standard coordinates X = Z^{floor(n/2)}.
inline RootDatum special_orthogonal(std::size_t n) {
  require(n >= 3, "SO(n) needs n >= 3");
  const std::size_t k = n / 2;
  const bool odd = n % 2 == 1;
  RootDatum rd;
  rd.name = "SO" + std::to_string(n);
  rd.rank = k;
  auto add = [&](IntVector r, IntVector rv) {
    rd.roots.push_back(std::move(r));
    rd.coroots.push_back(std::move(rv));
  };
  using detail::axpy;
  using detail::unit;
  // simple roots first
  for (std::size_t i = 0; i + 1 < k; ++i) {
    auto v = axpy(unit(k, i), -1, unit(k, i + 1));
    add(v, v);
  }
  if (odd) {
    add(unit(k, k - 1), unit(k, k - 1, 2));
  } else {
    auto v = axpy(unit(k, k - 2), 1, unit(k, k - 1));
    add(v, v);
  }
  for (std::size_t i = 0; i < rd.roots.size(); ++i) rd.simple.push_back(i);
  std::set<IntVector> have(rd.roots.begin(), rd.roots.end());
  auto add_new = [&](IntVector r, IntVector rv) {
    if (have.insert(r).second) add(std::move(r), std::move(rv));
  };
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = i + 1; j < k; ++j)
      for (long long s : {1LL, -1LL})
        for (long long t : {1LL, -1LL}) {
          auto v = axpy(unit(k, i, s), t, unit(k, j));
          add_new(v, v);
        }
  if (odd)
    for (std::size_t i = 0; i < k; ++i)
      for (long long s : {1LL, -1LL}) add_new(unit(k, i, s), unit(k, i, 2 * s));
  return rd;
}

/// Spin(n): simply connected datum with the Cartan matrix of SO(n).
inline RootDatum spin(std::size_t n) {
  RootDatum so = special_orthogonal(n);
  return from_cartan("Spin" + std::to_string(n), so.cartan(), Isogeny::SimplyConnected);
}

/// F = -w0 for type A data built by this catalog (the quasi-split unitary form).
inline IntMatrix unitary_frobenius(const RootDatum& rd) {
  const std::size_t n = rd.rank;
  IntMatrix F(n, n);
  if (rd.name.rfind("GL", 0) == 0) {
    for (std::size_t i = 0; i < n; ++i) F(n - 1 - i, i) = -1;
  } else {
    // Fundamental-weight or simple-root basis: reverse the Dynkin diagram.
    for (std::size_t i = 0; i < n; ++i) F(n - 1 - i, i) = 1;
  }
  return F;
}

struct CatalogEntry {
  std::string name;
  RootDatum datum;
  IntMatrix F;
};

inline CatalogEntry unitary(const RootDatum& rd, std::string name) {
  RootDatum d = rd;
  d.name = name;
  return CatalogEntry{std::move(name), d, unitary_frobenius(rd)};
}

/// Built-in root data: split GL_n, SL_n, PGL_n, Sp4, SO(n), Spin(n) and the
/// quasi-split unitary forms of the type A entries.
inline std::vector<CatalogEntry> catalog() {
  std::vector<CatalogEntry> out;
  auto split = [&](RootDatum rd) {
    IntMatrix F = IntMatrix::identity(rd.rank);
    std::string name = rd.name;
    out.push_back(CatalogEntry{std::move(name), std::move(rd), std::move(F)});
  };
  for (std::size_t n = 1; n <= 4; ++n) split(general_linear(n));
  for (std::size_t n = 2; n <= 4; ++n) split(special_linear(n));
  for (std::size_t n = 2; n <= 4; ++n) split(projective_linear(n));
  split(symplectic4());
  for (std::size_t n = 3; n <= 10; ++n) split(special_orthogonal(n));
  for (std::size_t n = 3; n <= 10; ++n) split(spin(n));
  for (std::size_t n = 2; n <= 4; ++n) out.push_back(unitary(general_linear(n), "GU" + std::to_string(n)));
  for (std::size_t n = 3; n <= 4; ++n) out.push_back(unitary(special_linear(n), "SU" + std::to_string(n)));
  for (std::size_t n = 3; n <= 4; ++n) out.push_back(unitary(projective_linear(n), "PGU" + std::to_string(n)));
  return out;
}

inline CatalogEntry catalog_entry(const std::string& name) {
  for (auto& e : catalog())
    if (e.name == name) return e;
  throw InvalidInput("unknown catalog root datum '" + name + "'");
}

} // namespace fsind::rootdata
