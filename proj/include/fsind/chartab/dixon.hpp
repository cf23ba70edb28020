#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "fsind/chartab/cyclo.hpp"
#include "fsind/grp.hpp"

namespace fsind::chartab {

using grp::ConjClassData;
using grp::FiniteMatrixGroup;
using grp::Index;

/// Irreducible characters (rows) on conjugacy classes (columns).
///
/// Values are cyclotomic integers with ambient conductor `exponent`.
/// Rows are sorted by degree, trivial character first, then by canonical values.
struct CharacterTable {
  std::string group;
  std::size_t group_order = 0;
  std::size_t exponent = 1;
  std::vector<std::size_t> class_sizes;
  std::vector<std::size_t> class_orders;
  std::vector<std::size_t> degrees;
  std::vector<std::vector<CycloZ>> values; // canonical
  std::vector<std::vector<RootSum>> sums;  // eigenvalue multiplicities, same values
  std::uint64_t prime = 0;                 // Dixon prime used

  std::size_t size() const { return degrees.size(); }
  const CycloZ& operator()(std::size_t chi, std::size_t c) const { return values[chi][c]; }
  const RootSum& sum(std::size_t chi, std::size_t c) const { return sums[chi][c]; }
};

namespace detail {

using u64 = std::uint64_t;
using ModMatrix = std::vector<std::vector<u64>>;

struct Mod {
  u64 l;
  u64 add(u64 a, u64 b) const { return (a + b) % l; }
  u64 sub(u64 a, u64 b) const { return (a + l - b) % l; }
  u64 mul(u64 a, u64 b) const { return (a * b) % l; }
  u64 pow(u64 a, u64 n) const {
    u64 r = 1;
    a %= l;
    while (n) {
      if (n & 1) r = mul(r, a);
      a = mul(a, a);
      n >>= 1;
    }
    return r;
  }
  u64 inv(u64 a) const {
    ensure(a % l != 0, "Dixon: inverse of zero mod l");
    return pow(a, l - 2);
  }
};

inline bool is_prime(u64 n) {
  if (n < 2) return false;
  for (u64 d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

/// Smallest prime l = 1 mod e with l > 2 sqrt(order).
inline u64 dixon_prime(u64 e, u64 order) {
  const double bound = 2.0 * std::sqrt(static_cast<double>(order));
  for (u64 l = e + 1;; l += e)
    if (static_cast<double>(l) > bound && is_prime(l)) return l;
}

/// A fixed primitive e-th root of unity mod l: g^((l-1)/e) for the least primitive root g.
inline u64 root_of_unity(const Mod& m, u64 e) {
  std::vector<u64> factors;
  u64 n = m.l - 1;
  for (u64 p = 2; p * p <= n; ++p)
    if (n % p == 0) {
      factors.push_back(p);
      while (n % p == 0) n /= p;
    }
  if (n > 1) factors.push_back(n);
  for (u64 g = 2; g < m.l; ++g) {
    bool primitive = std::all_of(factors.begin(), factors.end(), [&](u64 p) { return m.pow(g, (m.l - 1) / p) != 1; });
    if (primitive) return m.pow(g, (m.l - 1) / e);
  }
  throw InternalError("Dixon: no primitive root mod l");
}

/// Reduces H to upper Hessenberg form S H S^-1 in place; returns S^-1.
inline ModMatrix hessenberg(ModMatrix& H, const Mod& m) {
  const std::size_t n = H.size();
  ModMatrix Sinv(n, std::vector<u64>(n, 0));
  for (std::size_t i = 0; i < n; ++i) Sinv[i][i] = 1;
  for (std::size_t c = 1; c + 1 < n; ++c) {
    std::size_t piv = c;
    while (piv < n && H[piv][c - 1] == 0) ++piv;
    if (piv == n) continue;
    if (piv != c) {
      std::swap(H[piv], H[c]);
      for (auto& row : H) std::swap(row[piv], row[c]);
      for (auto& row : Sinv) std::swap(row[piv], row[c]);
    }
    const u64 inv = m.inv(H[c][c - 1]);
    for (std::size_t i = c + 1; i < n; ++i) {
      const u64 u = m.mul(H[i][c - 1], inv);
      if (u == 0) continue;
      for (std::size_t j = 0; j < n; ++j) H[i][j] = m.sub(H[i][j], m.mul(u, H[c][j]));
      for (std::size_t r = 0; r < n; ++r) H[r][c] = m.add(H[r][c], m.mul(u, H[r][i]));
      for (std::size_t r = 0; r < n; ++r) Sinv[r][c] = m.add(Sinv[r][c], m.mul(u, Sinv[r][i]));
    }
  }
  return Sinv;
}

/// Characteristic polynomial (low degree first) of an upper Hessenberg matrix.
inline std::vector<u64> hessenberg_charpoly(const ModMatrix& H, const Mod& m) {
  const std::size_t n = H.size();
  std::vector<std::vector<u64>> p(n + 1);
  p[0] = {1};
  for (std::size_t k = 1; k <= n; ++k) {
    // p_k = (x - h_{k-1,k-1}) p_{k-1} - sum_i h_{i-1,k-1} (prod_{j=i}^{k-1} h_{j,j-1}) p_{i-1}
    std::vector<u64> pk(k + 1, 0);
    for (std::size_t d = 0; d < p[k - 1].size(); ++d) {
      pk[d + 1] = m.add(pk[d + 1], p[k - 1][d]);
      pk[d] = m.sub(pk[d], m.mul(H[k - 1][k - 1], p[k - 1][d]));
    }
    u64 t = 1;
    for (std::size_t i = k - 1; i >= 1; --i) {
      t = m.mul(t, H[i][i - 1]);
      if (t == 0) break;
      const u64 coef = m.mul(H[i - 1][k - 1], t);
      for (std::size_t d = 0; d < p[i - 1].size(); ++d) pk[d] = m.sub(pk[d], m.mul(coef, p[i - 1][d]));
    }
    p[k] = std::move(pk);
  }
  return p[n];
}

/// Reduced row echelon form in place; returns pivot columns.
inline std::vector<std::size_t> rref(ModMatrix& A, const Mod& m) {
  std::vector<std::size_t> pivots;
  if (A.empty()) return pivots;
  const std::size_t rows = A.size(), cols = A[0].size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = r;
    while (piv < rows && A[piv][c] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(A[piv], A[r]);
    const u64 inv = m.inv(A[r][c]);
    for (auto& x : A[r]) x = m.mul(x, inv);
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || A[i][c] == 0) continue;
      const u64 u = A[i][c];
      for (std::size_t j = 0; j < cols; ++j) A[i][j] = m.sub(A[i][j], m.mul(u, A[r][j]));
    }
    pivots.push_back(c);
    ++r;
  }
  A.resize(r);
  return pivots;
}

/// Basis (as rows) of {x : A x = 0}, by forward elimination and back-substitution.
///
/// Zero entries are skipped, so a Hessenberg input costs O(n^2) per basis vector.
inline ModMatrix nullspace(ModMatrix A, const Mod& m) {
  const std::size_t rows = A.size(), n = rows ? A[0].size() : 0;
  std::vector<std::size_t> piv;
  std::size_t r = 0;
  for (std::size_t c = 0; c < n && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && A[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(A[p], A[r]);
    const u64 inv = m.inv(A[r][c]);
    for (std::size_t i = r + 1; i < rows; ++i) {
      if (A[i][c] == 0) continue;
      const u64 u = m.mul(A[i][c], inv);
      for (std::size_t j = c; j < n; ++j)
        if (A[r][j]) A[i][j] = m.sub(A[i][j], m.mul(u, A[r][j]));
    }
    piv.push_back(c);
    ++r;
  }
  std::vector<char> is_piv(n, 0);
  for (auto c : piv) is_piv[c] = 1;
  ModMatrix out;
  for (std::size_t f = 0; f < n; ++f) {
    if (is_piv[f]) continue;
    std::vector<u64> x(n, 0);
    x[f] = 1;
    for (std::size_t t = piv.size(); t-- > 0;) {
      const std::size_t c = piv[t];
      u64 acc = 0;
      for (std::size_t j = c + 1; j < n; ++j)
        if (A[t][j] && x[j]) acc = m.add(acc, m.mul(A[t][j], x[j]));
      x[c] = m.mul(m.sub(0, acc), m.inv(A[t][c]));
    }
    out.push_back(std::move(x));
  }
  return out;
}

/// Class-algebra structure constants a(i, j, l) = #{x in C_i : x^-1 z_l in C_j}.
class StructureConstants {
public:
  template <class Group>
  StructureConstants(const Group& G, const ConjClassData& cl) : k_(cl.size()), a_(k_ * k_ * k_, 0) {
    for (std::size_t l = 0; l < k_; ++l) {
      const Index z = cl.class_reps[l];
      for (Index x = 0; x < G.order(); ++x) {
        const std::size_t i = cl.class_of[x], j = cl.class_of[G.mul(G.inv(x), z)];
        ++a_[(i * k_ + j) * k_ + l];
      }
    }
  }
  std::size_t k() const { return k_; }
  std::uint32_t operator()(std::size_t i, std::size_t j, std::size_t l) const { return a_[(i * k_ + j) * k_ + l]; }

  /// sum_i r_i M_i with (M_i)_{j,l} = a(i, j, l).
  ModMatrix combination(const std::vector<u64>& r, const Mod& m) const {
    ModMatrix A(k_, std::vector<u64>(k_, 0));
    for (std::size_t i = 0; i < k_; ++i) {
      if (r[i] == 0) continue;
      for (std::size_t j = 0; j < k_; ++j)
        for (std::size_t l = 0; l < k_; ++l) {
          const std::uint32_t c = a_[(i * k_ + j) * k_ + l];
          if (c) A[j][l] = m.add(A[j][l], m.mul(r[i], c % m.l));
        }
    }
    return A;
  }

private:
  std::size_t k_;
  std::vector<std::uint32_t> a_;
};

/// Splits `basis` (rows, pivot-normalized) into eigenspaces of A restricted to it.
inline std::vector<ModMatrix> split_space(const ModMatrix& basis, const ModMatrix& A, const Mod& m) {
  const std::size_t d = basis.size(), k = A.size();
  std::vector<std::size_t> pivots(d);
  for (std::size_t s = 0; s < d; ++s) {
    std::size_t c = 0;
    while (basis[s][c] == 0) ++c;
    pivots[s] = c;
  }
  ModMatrix C(d, std::vector<u64>(d, 0));
  for (std::size_t s = 0; s < d; ++s) {
    std::vector<u64> Ab(k, 0);
    for (std::size_t j = 0; j < k; ++j) {
      u64 acc = 0;
      for (std::size_t l = 0; l < k; ++l)
        if (basis[s][l]) acc = m.add(acc, m.mul(A[j][l], basis[s][l]));
      Ab[j] = acc;
    }
    for (std::size_t t = 0; t < d; ++t) C[t][s] = Ab[pivots[t]];
  }
  ModMatrix H = C;
  const ModMatrix Sinv = hessenberg(H, m);
  const auto poly = hessenberg_charpoly(H, m);
  std::vector<u64> roots;
  for (u64 x = 0; x < m.l; ++x) {
    u64 v = 0;
    for (std::size_t i = poly.size(); i-- > 0;) v = m.add(m.mul(v, x), poly[i]);
    if (v == 0) roots.push_back(x);
    if (roots.size() == d) break;
  }
  auto to_ambient = [&](const std::vector<u64>& y) {
    std::vector<u64> v(k, 0);
    for (std::size_t s = 0; s < d; ++s)
      if (y[s])
        for (std::size_t j = 0; j < k; ++j) v[j] = m.add(v[j], m.mul(y[s], basis[s][j]));
    return v;
  };
  std::vector<ModMatrix> parts;
  std::size_t total = 0;
  for (u64 lam : roots) {
    ModMatrix shifted = H;
    for (std::size_t t = 0; t < d; ++t) shifted[t][t] = m.sub(shifted[t][t], lam);
    ModMatrix part;
    for (const auto& x : nullspace(shifted, m)) {
      std::vector<u64> y(d, 0);
      for (std::size_t r = 0; r < d; ++r)
        for (std::size_t c = 0; c < d; ++c)
          if (x[c]) y[r] = m.add(y[r], m.mul(Sinv[r][c], x[c]));
      part.push_back(to_ambient(y));
    }
    rref(part, m);
    total += part.size();
    parts.push_back(std::move(part));
  }
  ensure(total == d, "Dixon: class matrix combination is not diagonalizable over F_l");
  return parts;
}

} // namespace detail

/// Dixon-Schneider: common eigenvectors of the class matrices over F_l,
/// lifted to cyclotomic integers through eigenvalue multiplicities.
/// Group is FiniteMatrixGroup or any type with order, mul, inv, identity, generators, conj, name.
template <class Group>
CharacterTable character_table(const Group& G, const ConjClassData& cl, std::uint64_t seed = 0) {
  using namespace detail;
  const std::size_t k = cl.size();
  const u64 order = G.order(), e = cl.exponent;
  const Mod m{dixon_prime(e, order)};
  ensure(m.l < (u64{1} << 26), "Dixon: prime too large for lazy reduction");
  const u64 z = root_of_unity(m, e);
  const StructureConstants sc(G, cl);

  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<u64> coef(0, m.l - 1);
  auto random_matrix = [&] {
    std::vector<u64> r(k);
    for (auto& x : r) x = coef(rng);
    return sc.combination(r, m);
  };

  ModMatrix whole(k, std::vector<u64>(k, 0));
  for (std::size_t i = 0; i < k; ++i) whole[i][i] = 1;
  std::vector<ModMatrix> todo{whole}, lines;
  ModMatrix A = random_matrix();
  constexpr int kRetries = 8;
  while (!todo.empty()) {
    ModMatrix W = std::move(todo.back());
    todo.pop_back();
    if (W.size() == 1) {
      lines.push_back(std::move(W));
      continue;
    }
    auto parts = split_space(W, A, m);
    for (int attempt = 0; parts.size() == 1 && attempt < kRetries; ++attempt) parts = split_space(W, random_matrix(), m);
    for (std::size_t i = 1; parts.size() == 1 && i < k; ++i) {
      std::vector<u64> r(k, 0);
      r[i] = 1;
      parts = split_space(W, sc.combination(r, m), m);
    }
    ensure(parts.size() > 1, "Dixon: eigenspace splitting failed");
    for (auto& p : parts) todo.push_back(std::move(p));
  }
  ensure(lines.size() == k, "Dixon: wrong number of irreducible characters");

  CharacterTable t;
  t.group = G.name();
  t.group_order = order;
  t.exponent = e;
  t.class_sizes = cl.class_sizes;
  t.class_orders = cl.element_orders;
  t.prime = m.l;

  std::vector<u64> zpow(e);
  zpow[0] = 1;
  for (u64 i = 1; i < e; ++i) zpow[i] = m.mul(zpow[i - 1], z);

  struct Row {
    std::size_t degree;
    std::vector<CycloZ> values;
    std::vector<RootSum> sums;
  };
  std::vector<Row> rows;
  for (const auto& line : lines) {
    std::vector<u64> w = line[0];
    ensure(w[0] != 0, "Dixon: eigenvector vanishes at the identity class");
    const u64 inv0 = m.inv(w[0]);
    for (auto& x : w) x = m.mul(x, inv0);
    // d^2 = |G| / sum_c w_c w_{c^-1} / |C|
    u64 s = 0;
    for (std::size_t c = 0; c < k; ++c) s = m.add(s, m.mul(m.mul(w[c], w[cl.inverse_class[c]]), m.inv(cl.class_sizes[c] % m.l)));
    const u64 d2 = m.mul(order % m.l, m.inv(s));
    std::size_t d = 0;
    for (std::size_t x = 1; x * x <= order; ++x)
      if (m.mul(x, x) == d2) {
        ensure(d == 0, "Dixon: ambiguous degree");
        d = x;
      }
    ensure(d > 0 && order % d == 0, "Dixon: degree not recovered");
    std::vector<u64> chi(k);
    for (std::size_t c = 0; c < k; ++c) chi[c] = m.mul(m.mul(w[c], d), m.inv(cl.class_sizes[c] % m.l));

    Row row{d, {}, {}};
    for (std::size_t c = 0; c < k; ++c) {
      const u64 o = cl.element_orders[c], step = e / o;
      const u64 inv_o = m.inv(o % m.l);
      std::vector<std::int64_t> dense(e, 0);
      std::size_t total = 0;
      for (u64 i = 0; i < o; ++i) {
        u64 acc = 0, idx = 0;
        const u64 back = (o - i) % o;
        for (u64 j = 0; j < o; ++j) {
          acc += chi[cl.powers[c][j]] * zpow[step * idx];
          if ((j & 1023) == 1023) acc %= m.l;
          idx += back;
          if (idx >= o) idx -= o;
        }
        const u64 n = m.mul(acc % m.l, inv_o);
        ensure(n <= d, "Dixon: eigenvalue multiplicity out of range");
        dense[step * i] = static_cast<std::int64_t>(n);
        total += n;
      }
      ensure(total == d, "Dixon: multiplicities do not sum to the degree");
      RootSum rs{static_cast<long>(e), {}};
      for (u64 i = 0; i < e; ++i)
        if (dense[i]) rs.terms.emplace_back(static_cast<long>(i), dense[i]);
      row.values.push_back(CycloZ::from_dense(static_cast<long>(e), std::move(dense)));
      row.sums.push_back(std::move(rs));
    }
    rows.push_back(std::move(row));
  }

  auto trivial = [](const Row& r) {
    return std::all_of(r.values.begin(), r.values.end(), [](const CycloZ& v) { return v == CycloZ(1); });
  };
  std::sort(rows.begin(), rows.end(), [&](const Row& a, const Row& b) {
    if (a.degree != b.degree) return a.degree < b.degree;
    const bool ta = trivial(a), tb = trivial(b);
    if (ta != tb) return ta;
    for (std::size_t c = 0; c < a.values.size(); ++c)
      if (a.values[c].terms() != b.values[c].terms()) return a.values[c].terms() < b.values[c].terms();
    return false;
  });
  for (auto& r : rows) {
    t.degrees.push_back(r.degree);
    t.values.push_back(std::move(r.values));
    t.sums.push_back(std::move(r.sums));
  }
  return t;
}

/// Exact row and column orthogonality, sum of squared degrees, degree divisibility.
/// Returns an empty string on success, else a description of the first failure.
inline std::string orthogonality_defect(const CharacterTable& t, const ConjClassData& cl) {
  const std::size_t k = t.size();
  const long N = static_cast<long>(t.exponent);
  std::size_t sum_sq = 0;
  for (std::size_t i = 0; i < k; ++i) {
    sum_sq += t.degrees[i] * t.degrees[i];
    if (t.group_order % t.degrees[i] != 0) return "degree " + std::to_string(t.degrees[i]) + " does not divide |G|";
    if (!(t(i, 0) == CycloZ(static_cast<std::int64_t>(t.degrees[i])))) return "first column differs from degrees";
  }
  if (sum_sq != t.group_order) return "sum of squared degrees differs from |G|";
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = i; j < k; ++j) {
      CycloAccumulator acc(N);
      for (std::size_t c = 0; c < k; ++c) acc.add_product_conj(t.sum(i, c), t.sum(j, c), static_cast<std::int64_t>(cl.class_sizes[c]));
      const auto r = acc.result().rational_value();
      if (!r || *r != (i == j ? static_cast<std::int64_t>(t.group_order) : 0)) return "row orthogonality fails for characters " + std::to_string(i) + ", " + std::to_string(j);
    }
  for (std::size_t c = 0; c < k; ++c)
    for (std::size_t c2 = c; c2 < k; ++c2) {
      CycloAccumulator acc(N);
      for (std::size_t i = 0; i < k; ++i) acc.add_product_conj(t.sum(i, c), t.sum(i, c2));
      const auto r = acc.result().rational_value();
      if (!r || *r != (c == c2 ? static_cast<std::int64_t>(t.group_order / cl.class_sizes[c]) : 0)) return "column orthogonality fails for classes " + std::to_string(c) + ", " + std::to_string(c2);
    }
  return {};
}

} // namespace fsind::chartab
