#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <numeric>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "fsind/error.hpp"

namespace fsind::chartab {

using Rational = boost::multiprecision::cpp_rational;

namespace detail {

/// (p, a) for each prime power p^a exactly dividing N.
inline std::vector<std::pair<long, int>> prime_powers(long N) {
  std::vector<std::pair<long, int>> out;
  for (long p = 2; p * p <= N; ++p)
    if (N % p == 0) {
      int a = 0;
      while (N % p == 0) {
        N /= p;
        ++a;
      }
      out.emplace_back(p, a);
    }
  if (N > 1) out.emplace_back(N, 1);
  return out;
}

/// Rewrites a dense vector over Z[C_N] in the Zumbroich basis of Q(zeta_N).
///
/// For p^a || N write the p-part of an exponent as x + p^(a-1) y. Basis
/// exponents have y != 0 for odd p and y = 0 for p = 2; the others are
/// eliminated with sum_y zeta^(x + p^(a-1) y) = 0, resp. zeta^(N/2) = -1.
template <class T>
void zumbroich_reduce(std::vector<T>& v, long N) {
  for (auto [p, a] : prime_powers(N)) {
    long pa = 1;
    for (int i = 0; i < a; ++i) pa *= p;
    const long top = pa / p, step = N / p;
    for (long k = 0; k < N; ++k) {
      if (v[k] == 0) continue;
      const long y = (k % pa) / top;
      if (p == 2) {
        if (y == 1) {
          v[(k + N / 2) % N] -= v[k];
          v[k] = 0;
        }
      } else if (y == 0) {
        const T c = v[k];
        v[k] = 0;
        for (long j = 1; j < p; ++j) v[(k + j * step) % N] -= c;
      }
    }
  }
}

inline double to_double(const Rational& x) { return x.convert_to<double>(); }
inline double to_double(std::int64_t x) { return static_cast<double>(x); }
inline std::string to_str(const Rational& x) { return x.str(); }
inline std::string to_str(std::int64_t x) { return std::to_string(x); }

} // namespace detail

/// Element of Q(zeta_N) in canonical (Zumbroich-basis) form.
///
/// N is the ambient conductor, not necessarily minimal; comparisons and
/// arithmetic between different N go through lcm(N, N').
template <class T>
class CycloT {
public:
  using Term = std::pair<long, T>;

  CycloT() = default;
  explicit CycloT(T r) {
    if (r != 0) terms_.emplace_back(0, std::move(r));
  }

  static CycloT root(long N, long k) {
    std::vector<T> v(N, T(0));
    v[((k % N) + N) % N] = 1;
    return from_dense(N, std::move(v));
  }

  static CycloT from_dense(long N, std::vector<T> v) {
    require(N >= 1 && static_cast<long>(v.size()) == N, "CycloT: dense vector length must equal the conductor");
    detail::zumbroich_reduce(v, N);
    CycloT c;
    c.N_ = N;
    for (long k = 0; k < N; ++k)
      if (v[k] != 0) c.terms_.emplace_back(k, std::move(v[k]));
    return c;
  }

  long conductor() const { return N_; }
  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  /// Same element with ambient conductor M (a multiple of N).
  CycloT lifted(long M) const {
    require(M % N_ == 0, "CycloT: lift target must be a multiple of the conductor");
    if (M == N_) return *this;
    std::vector<T> v(M, T(0));
    for (const auto& [k, c] : terms_) v[k * (M / N_)] += c;
    return from_dense(M, std::move(v));
  }

  CycloT conj() const {
    std::vector<T> v(N_, T(0));
    for (const auto& [k, c] : terms_) v[(N_ - k) % N_] += c;
    return from_dense(N_, std::move(v));
  }

  /// The rational value, if this element lies in Q.
  std::optional<T> rational_value() const {
    if (terms_.empty()) return T(0);
    const CycloT one = CycloT(T(1)).lifted(N_);
    const auto& [k0, u] = one.terms_.front();
    auto it = std::find_if(terms_.begin(), terms_.end(), [k0 = k0](const Term& t) { return t.first == k0; });
    if (it == terms_.end() || terms_.size() != one.terms_.size()) return std::nullopt;
    T r = it->second * u; // u = +-1
    if (*this != one.scaled(r)) return std::nullopt;
    return r;
  }

  CycloT scaled(const T& s) const {
    CycloT c = *this;
    if (s == 0) {
      c.terms_.clear();
      return c;
    }
    for (auto& t : c.terms_) t.second *= s;
    return c;
  }

  std::complex<double> to_complex() const {
    std::complex<double> z = 0;
    const double two_pi = 2.0 * std::acos(-1.0);
    for (const auto& [k, c] : terms_) z += detail::to_double(c) * std::polar(1.0, two_pi * static_cast<double>(k) / N_);
    return z;
  }

  /// E(N)^k notation, e.g. "-E(3)-2*E(3)^2"; rationals print plainly.
  std::string to_string() const {
    if (auto r = rational_value()) return detail::to_str(*r);
    std::string s;
    for (const auto& [k, c] : terms_) {
      std::string mono = "E(" + std::to_string(N_) + ")" + (k == 1 ? "" : "^" + std::to_string(k));
      std::string coef;
      if (c == 1) coef = s.empty() ? "" : "+";
      else if (c == -1) coef = "-";
      else coef = (c > 0 && !s.empty() ? "+" : "") + detail::to_str(c) + "*";
      s += coef + mono;
    }
    return s;
  }

  friend CycloT operator+(const CycloT& a, const CycloT& b) { return combine(a, b, T(1)); }
  friend CycloT operator-(const CycloT& a, const CycloT& b) { return combine(a, b, T(-1)); }
  friend CycloT operator-(const CycloT& a) { return a.scaled(T(-1)); }
  friend CycloT operator*(const CycloT& a, const CycloT& b) {
    const long M = std::lcm(a.N_, b.N_);
    std::vector<T> v(M, T(0));
    const long sa = M / a.N_, sb = M / b.N_;
    for (const auto& [i, x] : a.terms_)
      for (const auto& [j, y] : b.terms_) v[(i * sa + j * sb) % M] += x * y;
    return from_dense(M, std::move(v));
  }
  friend bool operator==(const CycloT& a, const CycloT& b) {
    if (a.N_ == b.N_) return a.terms_ == b.terms_;
    const long M = std::lcm(a.N_, b.N_);
    return a.lifted(M).terms_ == b.lifted(M).terms_;
  }

private:
  long N_ = 1;
  std::vector<Term> terms_;

  static CycloT combine(const CycloT& a, const CycloT& b, const T& sign) {
    const long M = std::lcm(a.N_, b.N_);
    std::vector<T> v(M, T(0));
    for (const auto& [i, x] : a.terms_) v[i * (M / a.N_)] += x;
    for (const auto& [j, y] : b.terms_) v[j * (M / b.N_)] += sign * y;
    return from_dense(M, std::move(v));
  }
};

/// Exact element of Q(zeta_N).
using Cyclo = CycloT<Rational>;
/// Cyclotomic integer with machine-size coefficients (character values).
using CycloZ = CycloT<std::int64_t>;

inline Cyclo to_rational(const CycloZ& z) {
  std::vector<Rational> v(z.conductor(), Rational(0));
  for (const auto& [k, c] : z.terms()) v[k] = c;
  return Cyclo::from_dense(z.conductor(), std::move(v));
}

/// Unreduced element sum c_k zeta_N^k of the group ring Z[C_N], kept sparse.
///
/// Character values produced from eigenvalue multiplicities have at most
/// chi(1) terms in this form, far fewer than their canonical expansion.
struct RootSum {
  long N = 1;
  std::vector<std::pair<long, std::int64_t>> terms;

  CycloZ reduced() const {
    std::vector<std::int64_t> v(N, 0);
    for (const auto& [k, c] : terms) v[k] += c;
    return CycloZ::from_dense(N, std::move(v));
  }
};

/// Dense accumulator over Z[C_N] for long sums of products; one reduction at the end.
class CycloAccumulator {
public:
  explicit CycloAccumulator(long N) : N_(N), v_(N, 0) {}

  void add(const CycloZ& a, std::int64_t w = 1) {
    const long s = scale(a);
    for (const auto& [k, c] : a.terms()) v_[(k * s) % N_] += w * c;
  }
  void add_product(const CycloZ& a, const CycloZ& b, std::int64_t w = 1) {
    const long sa = scale(a), sb = scale(b);
    for (const auto& [i, x] : a.terms())
      for (const auto& [j, y] : b.terms()) v_[(i * sa + j * sb) % N_] += w * x * y;
  }
  /// Adds w * a * conj(b).
  void add_product_conj(const CycloZ& a, const CycloZ& b, std::int64_t w = 1) {
    const long sa = scale(a), sb = scale(b);
    for (const auto& [i, x] : a.terms())
      for (const auto& [j, y] : b.terms()) v_[((i * sa - j * sb) % N_ + N_) % N_] += w * x * y;
  }
  void add(const RootSum& a, std::int64_t w = 1) {
    const long s = scale(a.N);
    for (const auto& [k, c] : a.terms) v_[(k * s) % N_] += w * c;
  }
  void add_product(const RootSum& a, const RootSum& b, std::int64_t w = 1) {
    const long sa = scale(a.N), sb = scale(b.N);
    for (const auto& [i, x] : a.terms)
      for (const auto& [j, y] : b.terms) v_[(i * sa + j * sb) % N_] += w * x * y;
  }
  void add_product_conj(const RootSum& a, const RootSum& b, std::int64_t w = 1) {
    const long sa = scale(a.N), sb = scale(b.N);
    for (const auto& [i, x] : a.terms)
      for (const auto& [j, y] : b.terms) v_[((i * sa - j * sb) % N_ + N_) % N_] += w * x * y;
  }
  void add_root(long k, std::int64_t w = 1) { v_[((k % N_) + N_) % N_] += w; }

  CycloZ result() const { return CycloZ::from_dense(N_, v_); }

private:
  long N_;
  std::vector<std::int64_t> v_;

  long scale(const CycloZ& a) const { return scale(a.conductor()); }
  long scale(long n) const {
    require(N_ % n == 0, "CycloAccumulator: conductor mismatch");
    return N_ / n;
  }
};

} // namespace fsind::chartab
