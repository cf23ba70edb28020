#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "fsind/chartab/dixon.hpp"

namespace fsind::chartab {

using grp::Fq;
using grp::LinearCharacter;

/// Values of a class function, one per conjugacy class.
using ClassFunction = std::vector<CycloZ>;

namespace detail {

inline std::int64_t exact_quotient(const Rational& r, std::int64_t d, const std::string& what) {
  const Rational x = r / d;
  if (denominator(x) != 1) throw InternalError(what + ": non-integral result " + x.str());
  return static_cast<std::int64_t>(numerator(x));
}

inline Rational rational_or_throw(const CycloZ& z, const std::string& what) {
  auto r = z.rational_value();
  if (!r) throw InternalError(what + ": irrational result " + z.to_string());
  return Rational(*r);
}

inline RootSum single_root(long N, long k) { return RootSum{N, {{((k % N) + N) % N, 1}}}; }

} // namespace detail

/// Frobenius-Schur indicator (1/|G|) sum_C |C| chi(C^2).
inline int fs_indicator(const CharacterTable& t, const ConjClassData& cl, std::size_t chi) {
  CycloAccumulator acc(static_cast<long>(t.exponent));
  for (std::size_t c = 0; c < cl.size(); ++c) acc.add(t.sum(chi, cl.square_class[c]), static_cast<std::int64_t>(cl.class_sizes[c]));
  const auto r = detail::rational_or_throw(acc.result(), "fs_indicator");
  const auto v = detail::exact_quotient(r, static_cast<std::int64_t>(t.group_order), "fs_indicator");
  if (v < -1 || v > 1) throw InternalError("fs_indicator: value " + std::to_string(v) + " outside {-1, 0, 1}");
  return static_cast<int>(v);
}

/// n_D = #{g in G : g^2 in D}, by squaring every element.
inline std::vector<std::int64_t> square_counts(const FiniteMatrixGroup& G, const ConjClassData& cl) {
  std::vector<std::int64_t> n(cl.size(), 0);
  for (Index g = 0; g < G.order(); ++g) ++n[cl.class_of[G.mul(g, g)]];
  return n;
}

/// Indicator from element-level squaring, independent of the class square map.
inline int fs_indicator_bruteforce(const CharacterTable& t, const std::vector<std::int64_t>& counts, std::size_t chi) {
  CycloAccumulator acc(static_cast<long>(t.exponent));
  for (std::size_t d = 0; d < counts.size(); ++d)
    if (counts[d]) acc.add(t.sum(chi, d), counts[d]);
  const auto r = detail::rational_or_throw(acc.result(), "fs_indicator_bruteforce");
  const auto v = detail::exact_quotient(r, static_cast<std::int64_t>(t.group_order), "fs_indicator_bruteforce");
  if (v < -1 || v > 1) throw InternalError("fs_indicator_bruteforce: value " + std::to_string(v) + " outside {-1, 0, 1}");
  return static_cast<int>(v);
}

/// Index of the complex-conjugate row.
inline std::size_t dual_index(const CharacterTable& t, const ConjClassData& cl, std::size_t chi) {
  for (std::size_t j = 0; j < t.size(); ++j) {
    if (t.degrees[j] != t.degrees[chi]) continue;
    bool same = true;
    for (std::size_t c = 0; c < cl.size() && same; ++c) same = t(j, c) == t(chi, cl.inverse_class[c]);
    if (same) return j;
  }
  throw InternalError("dual_index: conjugate of character " + std::to_string(chi) + " is not a row");
}

inline bool is_self_dual(const CharacterTable& t, const ConjClassData& cl, std::size_t chi) {
  for (std::size_t c = 0; c < cl.size(); ++c)
    if (!(t(chi, c) == t(chi, cl.inverse_class[c]))) return false;
  return true;
}

/// omega_chi(z) = chi(z) / chi(1) for central z.
inline CycloZ central_character(const CharacterTable& t, const ConjClassData& cl, const FiniteMatrixGroup& G,
                                std::size_t chi, Index z) {
  for (Index g : G.generators())
    require(G.mul(g, z) == G.mul(z, g), "central_character: element is not central");
  const auto d = static_cast<std::int64_t>(t.degrees[chi]);
  const CycloZ& v = t(chi, cl.class_of[z]);
  std::vector<std::int64_t> dense(v.conductor(), 0);
  for (const auto& [k, c] : v.terms()) {
    if (c % d != 0) throw InternalError("central_character: chi(z) is not chi(1) times a root of unity");
    dense[k] = c / d;
  }
  return CycloZ::from_dense(v.conductor(), std::move(dense));
}

/// +1 or -1 when a central character value is real of absolute value 1.
inline int sign_of(const CycloZ& z) {
  auto r = z.rational_value();
  require(r && (*r == 1 || *r == -1), "sign_of: value " + z.to_string() + " is not +-1");
  return static_cast<int>(*r);
}

/// A character of U(F_q) = {x(t)}: psi(x(t)) = zeta_p^{Tr(a t)}.
struct UnipotentCharacter {
  Fq::Elt a = 0;
  long p = 1;
  std::vector<Index> elements; // the group's U_pts
  std::vector<long> exponent;  // zeta_p exponent per element
};

inline UnipotentCharacter additive_character(const FiniteMatrixGroup& G, Fq::Elt a) {
  const Fq& F = G.field();
  UnipotentCharacter psi{a, F.p(), G.U_pts(), {}};
  for (Index u : psi.elements) psi.exponent.push_back(F.trace(F.mul(a, G.element(u).b())));
  return psi;
}

/// Elements of T_pts fixing psi under conjugation, by enumeration.
inline std::vector<Index> psi_stabilizer(const FiniteMatrixGroup& G, const UnipotentCharacter& psi) {
  std::vector<long> value(G.order(), -1);
  for (std::size_t i = 0; i < psi.elements.size(); ++i) value[psi.elements[i]] = psi.exponent[i];
  std::vector<Index> stab;
  for (Index s : G.T_pts()) {
    bool fixes = true;
    for (std::size_t i = 0; i < psi.elements.size() && fixes; ++i) {
      const long v = value[G.conj(s, psi.elements[i])];
      ensure(v >= 0, "psi_stabilizer: torus does not normalize U");
      fixes = v == psi.exponent[i];
    }
    if (fixes) stab.push_back(s);
  }
  return stab;
}

/// Nontrivial on the root subgroup, with trivial stabilizer in (T/Z)(F_q).
inline bool is_nondegenerate(const FiniteMatrixGroup& G, const UnipotentCharacter& psi) {
  const bool nontrivial = std::any_of(psi.exponent.begin(), psi.exponent.end(), [](long e) { return e != 0; });
  return nontrivial && psi_stabilizer(G, psi).size() == G.Z_pts().size();
}

/// First a in F_q^x (by encoding) whose additive character is non-degenerate.
inline UnipotentCharacter nondegenerate_psi(const FiniteMatrixGroup& G) {
  for (long a = 1; a < G.q(); ++a) {
    auto psi = additive_character(G, static_cast<Fq::Elt>(a));
    if (is_nondegenerate(G, psi)) return psi;
  }
  throw InternalError("nondegenerate_psi: no non-degenerate character of U for " + G.name());
}

/// Whittaker multiplicity (1/|U|) sum_u chi(u) conj(psi(u)).
inline std::int64_t genericity(const CharacterTable& t, const ConjClassData& cl, const FiniteMatrixGroup& G,
                               std::size_t chi, const UnipotentCharacter& psi) {
  if (!is_nondegenerate(G, psi)) throw InvalidInput("genericity: psi is degenerate");
  const long N = std::lcm(static_cast<long>(t.exponent), psi.p);
  CycloAccumulator acc(N);
  for (std::size_t i = 0; i < psi.elements.size(); ++i)
    acc.add_product(t.sum(chi, cl.class_of[psi.elements[i]]), detail::single_root(psi.p, -psi.exponent[i]));
  const auto r = detail::rational_or_throw(acc.result(), "genericity");
  const auto m = detail::exact_quotient(r, static_cast<std::int64_t>(psi.elements.size()), "genericity");
  if (m < 0) throw InternalError("genericity: negative multiplicity");
  return m;
}

/// A linear character of a subgroup H: h_i -> zeta_order^{exponent[i]}.
struct SubgroupCharacter {
  std::vector<Index> elements;
  long order = 1;
  std::vector<long> exponent;
};

/// Throws unless theta is a homomorphism on a subgroup.
template <class Group>
void check_subgroup_character(const Group& G, const SubgroupCharacter& theta) {
  require(theta.elements.size() == theta.exponent.size(), "subgroup character: one value per element required");
  std::vector<long> value(G.order(), -1);
  for (std::size_t i = 0; i < theta.elements.size(); ++i) value[theta.elements[i]] = ((theta.exponent[i] % theta.order) + theta.order) % theta.order;
  for (std::size_t i = 0; i < theta.elements.size(); ++i)
    for (std::size_t j = 0; j < theta.elements.size(); ++j) {
      const long v = value[G.mul(theta.elements[i], theta.elements[j])];
      require(v >= 0, "subgroup character: H is not closed under multiplication");
      require(v == (value[theta.elements[i]] + value[theta.elements[j]]) % theta.order,
              "subgroup character: theta is not a homomorphism on H");
    }
}

/// Ind_H^G theta on classes: (|G| / (|H| |C|)) sum_{h in H cap C} theta(h).
template <class Group>
ClassFunction induced_character(const Group& G, const ConjClassData& cl, const SubgroupCharacter& theta) {
  check_subgroup_character(G, theta);
  require(G.order() % theta.elements.size() == 0, "induced_character: |H| does not divide |G|");
  const long N = std::lcm(static_cast<long>(cl.exponent), theta.order);
  std::vector<CycloAccumulator> acc(cl.size(), CycloAccumulator(N));
  for (std::size_t i = 0; i < theta.elements.size(); ++i)
    acc[cl.class_of[theta.elements[i]]].add_root(theta.exponent[i] * (N / theta.order));
  ClassFunction f;
  const auto H = static_cast<std::int64_t>(theta.elements.size());
  for (std::size_t c = 0; c < cl.size(); ++c) {
    const CycloZ s = acc[c].result();
    const std::int64_t num = static_cast<std::int64_t>(G.order()), den = H * static_cast<std::int64_t>(cl.class_sizes[c]);
    std::vector<std::int64_t> dense(N, 0);
    for (const auto& [k, v] : s.terms()) {
      if ((v * num) % den != 0) throw InternalError("induced_character: non-integral value");
      dense[k] = v * num / den;
    }
    f.push_back(CycloZ::from_dense(N, std::move(dense)));
  }
  return f;
}

/// (1/|G|) sum_C |C| f(C) conj(g(C)); must be rational.
inline Rational inner_product(const ConjClassData& cl, std::size_t group_order, const ClassFunction& f, const ClassFunction& g) {
  require(f.size() == cl.size() && g.size() == cl.size(), "inner_product: class function length mismatch");
  long N = 1;
  for (std::size_t c = 0; c < cl.size(); ++c) N = std::lcm(N, std::lcm(f[c].conductor(), g[c].conductor()));
  CycloAccumulator acc(N);
  for (std::size_t c = 0; c < cl.size(); ++c) acc.add_product_conj(f[c], g[c], static_cast<std::int64_t>(cl.class_sizes[c]));
  return detail::rational_or_throw(acc.result(), "inner_product") / static_cast<std::int64_t>(group_order);
}

/// Multiplicity of each irreducible in f.
inline std::vector<std::int64_t> decompose(const CharacterTable& t, const ConjClassData& cl, const ClassFunction& f) {
  std::vector<std::int64_t> m;
  for (std::size_t i = 0; i < t.size(); ++i) {
    const Rational r = inner_product(cl, t.group_order, f, t.values[i]);
    if (denominator(r) != 1) throw InvalidInput("decompose: not a generalized character (multiplicity " + r.str() + ")");
    m.push_back(static_cast<std::int64_t>(numerator(r)));
  }
  return m;
}

inline CycloZ linear_value(const LinearCharacter& nu, std::size_t c) {
  return CycloZ::root(static_cast<long>(nu.order), static_cast<long>(nu.value[c]));
}

inline ClassFunction as_class_function(const LinearCharacter& nu) {
  ClassFunction f;
  for (std::size_t c = 0; c < nu.value.size(); ++c) f.push_back(linear_value(nu, c));
  return f;
}

/// chi = conj(chi) * nu^-1 on every class.
inline bool dualizes(const CharacterTable& t, const ConjClassData& cl, std::size_t chi, const LinearCharacter& nu) {
  const long n = static_cast<long>(nu.order);
  for (std::size_t c = 0; c < cl.size(); ++c)
    if (!(t(chi, c) == t(chi, cl.inverse_class[c]) * CycloZ::root(n, -static_cast<long>(nu.value[c])))) return false;
  return true;
}

/// nu-twisted indicator (1/|G|) sum_C |C| chi(C^2) nu(C).
///
/// +1 when the nu^-1-equivariant form on chi is symmetric, -1 when alternating.
inline int twisted_fs(const CharacterTable& t, const ConjClassData& cl, std::size_t chi, const LinearCharacter& nu) {
  if (!dualizes(t, cl, chi, nu)) throw InvalidInput("twisted_fs: nu does not dualize chi");
  const long N = std::lcm(static_cast<long>(t.exponent), static_cast<long>(nu.order));
  CycloAccumulator acc(N);
  for (std::size_t c = 0; c < cl.size(); ++c)
    acc.add_product(t.sum(chi, cl.square_class[c]), detail::single_root(static_cast<long>(nu.order), static_cast<long>(nu.value[c])),
                    static_cast<std::int64_t>(cl.class_sizes[c]));
  const auto r = detail::rational_or_throw(acc.result(), "twisted_fs");
  const auto v = detail::exact_quotient(r, static_cast<std::int64_t>(t.group_order), "twisted_fs");
  if (v != -1 && v != 1) throw InternalError("twisted_fs: value " + std::to_string(v) + " is not +-1");
  return static_cast<int>(v);
}

enum class Route { DirectEpsilon, RegularEmbedding, PrincipalSeries, NotApplicable };

inline const char* to_string(Route r) {
  switch (r) {
  case Route::DirectEpsilon: return "DIRECT_EPSILON";
  case Route::RegularEmbedding: return "REGULAR_EMBEDDING";
  case Route::PrincipalSeries: return "PRINCIPAL_SERIES";
  case Route::NotApplicable: return "NOT_APPLICABLE";
  }
  return "?";
}

/// Per-irreducible summary; predicted_sign and route are filled in by callers.
struct CharacterAnalysis {
  std::size_t index = 0;
  std::size_t degree = 0;
  bool self_dual = false;
  int fs_indicator = 0;
  bool generic = false;
  std::int64_t whittaker_multiplicity = 0;
  std::vector<CycloZ> central_values; // on Z_pts, in that order
  std::optional<int> predicted_sign;
  Route route = Route::NotApplicable;
};

inline std::vector<CharacterAnalysis> analyze_characters(const FiniteMatrixGroup& G, const ConjClassData& cl, const CharacterTable& t) {
  const auto psi = nondegenerate_psi(G);
  std::vector<CharacterAnalysis> out;
  for (std::size_t chi = 0; chi < t.size(); ++chi) {
    CharacterAnalysis a;
    a.index = chi;
    a.degree = t.degrees[chi];
    a.self_dual = is_self_dual(t, cl, chi);
    a.fs_indicator = fs_indicator(t, cl, chi);
    if ((a.fs_indicator == 0) == a.self_dual) throw InternalError("analyze_characters: indicator disagrees with self-duality");
    a.whittaker_multiplicity = genericity(t, cl, G, chi, psi);
    a.generic = a.whittaker_multiplicity > 0;
    for (Index z : G.Z_pts()) a.central_values.push_back(central_character(t, cl, G, chi, z));
    out.push_back(std::move(a));
  }
  return out;
}

} // namespace fsind::chartab
