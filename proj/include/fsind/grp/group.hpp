#pragma once

#include <array>
#include <cstdint>
#include <deque>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "fsind/grp/field.hpp"

namespace fsind::grp {

enum class Family { SL2, GL2 };

inline const char* to_string(Family f) { return f == Family::SL2 ? "sl2" : "gl2"; }

inline Family parse_family(const std::string& s) {
  if (s == "sl2" || s == "SL2") return Family::SL2;
  if (s == "gl2" || s == "GL2") return Family::GL2;
  throw InvalidInput("unknown group family '" + s + "' (expected sl2 or gl2)");
}

/// 2x2 matrix over F_q, entries (a, b; c, d).
struct Mat2 {
  std::array<Fq::Elt, 4> e{};

  Fq::Elt a() const { return e[0]; }
  Fq::Elt b() const { return e[1]; }
  Fq::Elt c() const { return e[2]; }
  Fq::Elt d() const { return e[3]; }
  friend bool operator==(const Mat2&, const Mat2&) = default;
};

inline constexpr std::size_t kDefaultCap = 100000;

/// SL2(F_q) or GL2(F_q), fully enumerated.
///
/// Element 0 is the identity; indices are assigned in breadth-first order from
/// the fixed generator list, so they depend only on (family, q).
class FiniteMatrixGroup {
public:
  using Index = std::uint32_t;

  FiniteMatrixGroup(Family family, long q, std::size_t cap = kDefaultCap) : family_(family), F_(q) {
    const Fq& F = F_;
    const auto w = F.generator(), one = F.one(), zero = F.zero();
    std::vector<Mat2> gens = {
        Mat2{{one, one, zero, one}},             // x(1)
        Mat2{{one, zero, one, one}},             // y(1)
        Mat2{{w, zero, zero, F.inv(w)}},         // h(w)
        Mat2{{one, w, zero, one}},               // x(w)
    };
    if (family == Family::GL2) gens.push_back(Mat2{{w, zero, zero, one}});
    const long expected = family == Family::SL2 ? q * (q - 1) * (q + 1) : (q * q - 1) * (q * q - q);
    if (static_cast<std::size_t>(expected) > cap)
      throw CapExceeded(name() + " has " + std::to_string(expected) + " elements, above the cap of " + std::to_string(cap));
    enumerate(gens, cap);
    ensure(static_cast<long>(elements_.size()) == expected, "build_group: closure has the wrong order");
    mark_subgroups();
  }

  Family family() const { return family_; }
  const Fq& field() const { return F_; }
  long q() const { return F_.q(); }
  std::size_t order() const { return elements_.size(); }
  std::size_t dim() const { return 2; }
  const Mat2& element(Index i) const { return elements_[i]; }
  const std::vector<Mat2>& elements() const { return elements_; }
  const std::vector<Index>& generators() const { return gens_; }
  Index identity() const { return 0; }

  std::optional<Index> find(const Mat2& m) const {
    auto it = index_.find(key(m));
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }

  Index index_of(const Mat2& m) const {
    auto i = find(m);
    require(i.has_value(), "matrix is not an element of the group");
    return *i;
  }

  Mat2 multiply(const Mat2& x, const Mat2& y) const {
    const Fq& F = F_;
    return Mat2{{F.add(F.mul(x.a(), y.a()), F.mul(x.b(), y.c())), F.add(F.mul(x.a(), y.b()), F.mul(x.b(), y.d())),
                 F.add(F.mul(x.c(), y.a()), F.mul(x.d(), y.c())), F.add(F.mul(x.c(), y.b()), F.mul(x.d(), y.d()))}};
  }

  Index mul(Index i, Index j) const { return index_.at(key(multiply(elements_[i], elements_[j]))); }
  Index inv(Index i) const { return inverse_[i]; }
  Index conj(Index g, Index x) const { return mul(mul(g, x), inverse_[g]); }
  Index pow(Index i, long n) const {
    if (n < 0) return pow(inverse_[i], -n);
    Index r = identity(), b = i;
    while (n > 0) {
      if (n & 1) r = mul(r, b);
      b = mul(b, b);
      n >>= 1;
    }
    return r;
  }
  std::size_t element_order(Index i) const {
    std::size_t n = 1;
    for (Index x = i; x != identity(); x = mul(x, i)) ++n;
    return n;
  }

  Fq::Elt det(Index i) const {
    const auto& m = elements_[i];
    return F_.sub(F_.mul(m.a(), m.d()), F_.mul(m.b(), m.c()));
  }

  Mat2 diag(Fq::Elt x, Fq::Elt y) const { return Mat2{{x, 0, 0, y}}; }
  Mat2 upper(Fq::Elt t) const { return Mat2{{F_.one(), t, 0, F_.one()}}; }

  /// Marked subgroups: scalar center, diagonal torus, upper unitriangular, upper Borel.
  const std::vector<Index>& Z_pts() const { return Z_; }
  const std::vector<Index>& T_pts() const { return T_; }
  const std::vector<Index>& U_pts() const { return U_; }
  const std::vector<Index>& B_pts() const { return B_; }

  std::string name() const { return std::string(family_ == Family::SL2 ? "SL2" : "GL2") + "(" + std::to_string(q()) + ")"; }

private:
  Family family_;
  Fq F_;
  std::vector<Mat2> elements_;
  std::unordered_map<std::uint64_t, Index> index_;
  std::vector<Index> inverse_;
  std::vector<Index> gens_;
  std::vector<Index> Z_, T_, U_, B_;

  std::uint64_t key(const Mat2& m) const {
    const std::uint64_t q = static_cast<std::uint64_t>(F_.q());
    return ((static_cast<std::uint64_t>(m.d()) * q + m.c()) * q + m.b()) * q + m.a();
  }

  void enumerate(const std::vector<Mat2>& gens, std::size_t cap) {
    const Fq& F = F_;
    Mat2 id{{F.one(), 0, 0, F.one()}};
    elements_.push_back(id);
    index_.emplace(key(id), 0);
    std::deque<Index> todo{0};
    auto add = [&](const Mat2& m) -> Index {
      auto [it, fresh] = index_.emplace(key(m), static_cast<Index>(elements_.size()));
      if (fresh) {
        if (elements_.size() >= cap)
          throw CapExceeded("enumeration of " + name() + " exceeds the cap of " + std::to_string(cap) + " elements");
        elements_.push_back(m);
        todo.push_back(it->second);
      }
      return it->second;
    };
    for (const auto& g : gens) gens_.push_back(add(g));
    while (!todo.empty()) {
      Index i = todo.front();
      todo.pop_front();
      for (const auto& g : gens) add(multiply(elements_[i], g));
    }
    inverse_.resize(elements_.size());
    for (Index i = 0; i < elements_.size(); ++i) {
      const auto& m = elements_[i];
      const auto di = F.inv(F.sub(F.mul(m.a(), m.d()), F.mul(m.b(), m.c())));
      Mat2 inv{{F.mul(m.d(), di), F.mul(F.neg(m.b()), di), F.mul(F.neg(m.c()), di), F.mul(m.a(), di)}};
      inverse_[i] = index_.at(key(inv));
    }
  }

  void mark_subgroups() {
    for (Index i = 0; i < elements_.size(); ++i) {
      const auto& m = elements_[i];
      if (m.c() != 0) continue;
      B_.push_back(i);
      if (m.b() == 0) {
        T_.push_back(i);
        if (m.a() == m.d()) Z_.push_back(i);
      }
      if (m.a() == F_.one() && m.d() == F_.one()) U_.push_back(i);
    }
  }
};

/// Enumerates SL2(F_q) or GL2(F_q); throws CapExceeded above `cap` elements.
inline FiniteMatrixGroup build_group(Family family, long q, std::size_t cap = kDefaultCap) {
  return FiniteMatrixGroup(family, q, cap);
}

} // namespace fsind::grp
