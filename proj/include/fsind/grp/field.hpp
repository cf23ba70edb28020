#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "fsind/error.hpp"

namespace fsind::grp {

/// The finite field F_q, q = p^k <= 1024, with full addition and multiplication tables.
///
/// Elements are the integers 0..q-1; element x encodes the polynomial
/// sum c_i t^i with x = sum c_i p^i, reduced modulo the field's modulus.
class Fq {
public:
  using Elt = std::uint16_t;

  explicit Fq(long q) : q_(q) {
    auto pk = factor(q);
    require(pk.first > 0, "F_q: q = " + std::to_string(q) + " is not a prime power");
    require(q <= 1024, "F_q: q = " + std::to_string(q) + " exceeds the supported range (<= 1024)");
    p_ = pk.first;
    k_ = pk.second;
    if (k_ > 1) modulus_ = pick_modulus();
    build_tables();
    find_generator();
    build_trace();
  }

  long q() const { return q_; }
  long p() const { return p_; }
  int k() const { return k_; }
  /// Low-order coefficients of the monic modulus (empty for prime fields).
  const std::vector<int>& modulus() const { return modulus_; }

  Elt zero() const { return 0; }
  Elt one() const { return 1; }
  Elt add(Elt a, Elt b) const { return add_[a * q_ + b]; }
  Elt sub(Elt a, Elt b) const { return add_[a * q_ + neg_[b]]; }
  Elt mul(Elt a, Elt b) const { return mul_[a * q_ + b]; }
  Elt neg(Elt a) const { return neg_[a]; }
  Elt inv(Elt a) const {
    require(a != 0, "F_q: inverse of zero");
    return inv_[a];
  }
  Elt pow(Elt a, long n) const {
    if (a == 0) return n == 0 ? 1 : 0;
    long m = ((log_[a] * (n % (q_ - 1))) % (q_ - 1) + (q_ - 1)) % (q_ - 1);
    return exp_[m];
  }

  /// Fixed generator of the cyclic group F_q^x.
  Elt generator() const { return gen_; }
  /// Discrete log to base generator(); a != 0.
  long log(Elt a) const {
    require(a != 0, "F_q: log of zero");
    return log_[a];
  }
  Elt exp(long n) const { return exp_[((n % (q_ - 1)) + (q_ - 1)) % (q_ - 1)]; }
  /// Absolute trace to F_p, as an integer in [0, p).
  int trace(Elt a) const { return trace_[a]; }
  /// Image of an integer under Z -> F_p -> F_q.
  Elt from_int(long n) const { return static_cast<Elt>(((n % p_) + p_) % p_); }

  std::string to_string(Elt a) const {
    if (k_ == 1) return std::to_string(a);
    std::string s;
    for (int i = k_ - 1; i >= 0; --i) {
      int c = digit(a, i);
      if (c == 0) continue;
      std::string term = i == 0 ? std::to_string(c) : (c == 1 ? "" : std::to_string(c)) + (i == 1 ? "t" : "t^" + std::to_string(i));
      s += (s.empty() ? "" : "+") + term;
    }
    return s.empty() ? "0" : s;
  }

  static std::pair<long, int> factor(long q) {
    if (q < 2) return {0, 0};
    long p = 2;
    while (p * p <= q && q % p != 0) ++p;
    if (q % p != 0) p = q;
    int k = 0;
    long n = q;
    while (n % p == 0) {
      n /= p;
      ++k;
    }
    return n == 1 ? std::make_pair(p, k) : std::make_pair(0L, 0);
  }

private:
  long q_, p_;
  int k_;
  std::vector<int> modulus_;
  std::vector<Elt> add_, mul_, neg_, inv_, exp_, trace_;
  std::vector<long> log_;
  Elt gen_ = 1;

  int digit(long x, int i) const {
    for (int j = 0; j < i; ++j) x /= p_;
    return static_cast<int>(x % p_);
  }

  std::vector<int> digits(long x) const {
    std::vector<int> d(k_);
    for (int i = 0; i < k_; ++i) {
      d[i] = static_cast<int>(x % p_);
      x /= p_;
    }
    return d;
  }

  long encode(const std::vector<int>& d) const {
    long x = 0;
    for (int i = k_ - 1; i >= 0; --i) x = x * p_ + d[i];
    return x;
  }

  long poly_mul(long a, long b, const std::vector<int>& mod) const {
    auto da = digits(a), db = digits(b);
    std::vector<int> prod(2 * k_, 0);
    for (int i = 0; i < k_; ++i)
      for (int j = 0; j < k_; ++j) prod[i + j] = static_cast<int>((prod[i + j] + da[i] * db[j]) % p_);
    // t^k = -sum mod_i t^i
    for (int d = 2 * k_ - 1; d >= k_; --d) {
      int c = prod[d];
      if (c == 0) continue;
      prod[d] = 0;
      for (int i = 0; i < k_; ++i)
        prod[d - k_ + i] = static_cast<int>(((prod[d - k_ + i] - c * mod[i]) % p_ + p_) % p_);
    }
    prod.resize(k_);
    return encode(prod);
  }

  bool irreducible(const std::vector<int>& mod) const {
    // A field iff no zero divisors among nonzero residues.
    for (long a = 1; a < q_; ++a)
      for (long b = 1; b < q_; ++b)
        if (poly_mul(a, b, mod) == 0) return false;
    return true;
  }

  std::vector<int> pick_modulus() const {
    static const std::map<long, std::vector<int>> table = {
        {4, {1, 1}}, {8, {1, 1, 0}}, {9, {2, 2}}, {16, {1, 1, 0, 0}}, {25, {2, 4}}, {27, {1, 2, 0}},
    };
    auto it = table.find(q_);
    if (it != table.end()) {
      require(irreducible(it->second), "F_q: tabulated modulus is reducible");
      return it->second;
    }
    for (long code = 0; code < q_; ++code) {
      auto mod = digits(code);
      if (mod[0] != 0 && irreducible(mod)) return mod;
    }
    throw InternalError("F_q: no irreducible modulus found");
  }

  void build_tables() {
    const std::size_t n = static_cast<std::size_t>(q_);
    add_.assign(n * n, 0);
    mul_.assign(n * n, 0);
    neg_.assign(n, 0);
    inv_.assign(n, 0);
    for (long a = 0; a < q_; ++a) {
      auto da = digits(a);
      std::vector<int> dn(k_);
      for (int i = 0; i < k_; ++i) dn[i] = static_cast<int>((p_ - da[i]) % p_);
      neg_[a] = static_cast<Elt>(encode(dn));
      for (long b = 0; b < q_; ++b) {
        auto db = digits(b);
        std::vector<int> ds(k_);
        for (int i = 0; i < k_; ++i) ds[i] = static_cast<int>((da[i] + db[i]) % p_);
        add_[a * q_ + b] = static_cast<Elt>(encode(ds));
        long m = k_ == 1 ? (a * b) % p_ : poly_mul(a, b, modulus_);
        mul_[a * q_ + b] = static_cast<Elt>(m);
      }
    }
    for (long a = 1; a < q_; ++a) {
      long found = 0;
      for (long b = 1; b < q_; ++b)
        if (mul_[a * q_ + b] == 1) found = b;
      require(found != 0, "F_q: element without inverse (modulus not irreducible)");
      inv_[a] = static_cast<Elt>(found);
    }
  }

  void find_generator() {
    const long n = q_ - 1;
    for (long g = 1; g < q_; ++g) {
      std::vector<Elt> powers;
      Elt x = 1;
      for (long i = 0; i < n; ++i) {
        powers.push_back(x);
        x = mul(x, static_cast<Elt>(g));
        if (x == 1 && i + 1 < n) break;
      }
      if (static_cast<long>(powers.size()) != n || x != 1) continue;
      gen_ = static_cast<Elt>(g);
      exp_ = powers;
      log_.assign(q_, -1);
      for (long i = 0; i < n; ++i) log_[exp_[i]] = i;
      return;
    }
    throw InternalError("F_q: multiplicative group is not cyclic");
  }

  void build_trace() {
    trace_.assign(q_, 0);
    for (long a = 0; a < q_; ++a) {
      Elt s = 0, x = static_cast<Elt>(a);
      for (int i = 0; i < k_; ++i) {
        s = add(s, x);
        Elt y = 1;
        for (long j = 0; j < p_; ++j) y = mul(y, x);
        x = y;
      }
      ensure(s < p_, "F_q: trace outside the prime field");
      trace_[a] = s;
    }
  }
};

} // namespace fsind::grp
