#pragma once

#include <optional>
#include <string>

#include "fsind/rootdata/datum.hpp"

namespace fsind::rootdata {

using zmod::FinAbGroup;
using zmod::FinAbWithEndo;

/// lambda = sum of positive coroots, in X^v coordinates.
inline IntVector lambda_sum(const RootDatum& rd) {
  IntVector lam(rd.rank);
  for (auto i : rd.positive_roots())
    for (std::size_t t = 0; t < rd.rank; ++t) lam[t] += rd.coroots[i][t];
  for (auto s : rd.simple)
    ensure(zmod::dot(rd.roots[s], lam) == 2, "lambda_sum: <alpha, lambda> != 2 for a simple root");
  return lam;
}

inline bool frobenius_fixes_lambda(const RootDatum& rd, const FrobeniusAction& fr) {
  const IntVector lam = lambda_sum(rd);
  return fr.coroot_action() * lam == lam;
}

/// X/ZPhi in explicit coordinates, its torsion (the character group of Z/Z°)
/// and the induced action of F on the torsion generators.
struct CenterData {
  zmod::QuotientCoords quotient;
  FinAbGroup character_group;   // X / ZPhi
  FinAbGroup component_group;   // torsion(X / ZPhi)
  IntVector orders;             // cyclic factor orders d_i of the torsion generators
  std::vector<IntVector> lifts; // lift to X of each torsion generator
  IntMatrix F_torsion;          // F on the torsion generators (column i = image of generator i)
};

inline CenterData center_data(const RootDatum& rd, const IntMatrix& F) {
  CenterData c;
  const IntMatrix R = rd.num_roots() ? rd.root_matrix() : IntMatrix(rd.rank, 0);
  c.quotient = zmod::quotient_coords(R);
  c.character_group = zmod::cokernel(R);
  c.component_group = c.character_group.torsion();
  const auto tors = c.quotient.torsion_indices();
  for (auto i : tors) {
    c.orders.push_back(c.quotient.moduli[i]);
    c.lifts.push_back(c.quotient.generator_lift(i));
  }
  const IntMatrix G = c.quotient.U * F * c.quotient.U_inv;
  c.F_torsion = IntMatrix(tors.size(), tors.size());
  for (std::size_t a = 0; a < tors.size(); ++a) {
    for (auto f : c.quotient.free_indices())
      ensure(G(f, tors[a]) == 0, "center_data: F sends torsion to a non-torsion class");
    for (std::size_t b = 0; b < tors.size(); ++b) {
      Int v = G(tors[b], tors[a]) % c.orders[b];
      if (v < 0) v += c.orders[b];
      c.F_torsion(b, a) = v;
    }
  }
  return c;
}

inline FinAbGroup component_group(const RootDatum& rd) {
  const IntMatrix R = rd.num_roots() ? rd.root_matrix() : IntMatrix(rd.rank, 0);
  return zmod::cokernel(R).torsion();
}

/// Torsion of X/ZPhi with the arithmetic Frobenius q*F acting on it.
inline FinAbWithEndo frobenius_on_component(const CenterData& c, const FrobeniusAction& fr) {
  return FinAbWithEndo::cyclic(c.orders, fr.q * c.F_torsion);
}

/// (Z/Z°)_sigma: co-invariants of q*F on the prime-to-p part of torsion(X/ZPhi).
inline FinAbGroup coinvariants_component(const RootDatum& rd, const FrobeniusAction& fr) {
  const CenterData c = center_data(rd, fr.F);
  if (c.orders.empty()) return FinAbGroup{};
  return zmod::coinvariants(frobenius_on_component(c, fr)).prime_to(fr.p);
}

struct Conditions {
  bool a = false; // (Z/Z°)_sigma of odd order
  bool b = false; // q even
  bool c = false; // q = 1 mod 4
  bool d = false; // lambda/2 in X^v

  bool any() const { return a || b || c || d; }
  friend bool operator==(const Conditions&, const Conditions&) = default;
};

inline Conditions check_conditions(const RootDatum& rd, const FrobeniusAction& fr) {
  Conditions k;
  k.a = coinvariants_component(rd, fr).torsion_order() % 2 == 1;
  k.b = fr.p == 2;
  k.c = fr.q % 4 == 1;
  const IntVector lam = lambda_sum(rd);
  k.d = std::all_of(lam.begin(), lam.end(), [](const Int& x) { return x % 2 == 0; });
  return k;
}

/// Whether s = lambda(zeta), zeta^2 = -1, is fixed by sigma.
///
/// In odd characteristic zeta has order 4 and sigma(s) = (q F^T lambda)(zeta),
/// so s is fixed iff q F^T lambda = lambda mod 4 X^v. In characteristic 2,
/// zeta = 1 and s = 1.
inline bool s_fixed_by_frobenius(const RootDatum& rd, const FrobeniusAction& fr) {
  if (fr.p == 2) return true;
  const IntVector lam = lambda_sum(rd);
  const IntVector img = fr.q * fr.coroot_action() * lam;
  for (std::size_t i = 0; i < lam.size(); ++i)
    if ((img[i] - lam[i]) % 4 != 0) return false;
  return true;
}

struct TData {
  bool t_is_epsilon = false;
  bool tbar_trivial = true;
};

namespace detail {

/// The class of t = epsilon in the dual of the component group, as a vector of
/// coordinates b_i with t(g_i) = exp(2 pi i b_i / d_i), together with the dual
/// (transpose) action of q*F on those coordinates.
struct DualT {
  IntVector orders;
  IntVector tbar;
  IntMatrix sigma_dual;
};

inline DualT dual_t(const RootDatum& rd, const FrobeniusAction& fr, const CenterData& c, const IntVector& lam) {
  for (std::size_t i = 0; i < rd.num_roots(); ++i)
    ensure(zmod::dot(rd.roots[i], lam) % 2 == 0, "t_and_tbar: <alpha, lambda> odd for root " + std::to_string(i));
  DualT d;
  d.orders = c.orders;
  const std::size_t k = c.orders.size();
  d.tbar.resize(k);
  for (std::size_t i = 0; i < k; ++i) {
    // t(g_i) = (-1)^{<lift, lambda>} = exp(2 pi i * (d_i <lift, lambda> / 2) / d_i)
    Int num = c.orders[i] * zmod::dot(c.lifts[i], lam);
    ensure(num % 2 == 0, "t_and_tbar: ill-defined lift");
    Int b = (num / 2) % c.orders[i];
    if (b < 0) b += c.orders[i];
    d.tbar[i] = b;
  }
  const IntMatrix S = fr.q * c.F_torsion;
  d.sigma_dual = IntMatrix(k, k);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) {
      Int num = c.orders[i] * S(j, i);
      ensure(num % c.orders[j] == 0, "t_and_tbar: Frobenius not well defined on the component group");
      d.sigma_dual(i, j) = num / c.orders[j];
    }
  return d;
}

} // namespace detail

/// t = s^{-1} sigma(s) and whether its image in (Z/Z°)_sigma is trivial.
///
/// The component-group points are dual to torsion(X/ZPhi); t restricts to the
/// character g -> (-1)^{<lift(g), lambda>}, and triviality of t-bar is
/// membership of that character in the image of (sigma - 1).
inline TData t_and_tbar(const RootDatum& rd, const FrobeniusAction& fr) {
  TData t;
  if (fr.p == 2 || fr.q % 4 == 1) return t;
  t.t_is_epsilon = true;
  const CenterData c = center_data(rd, fr.F);
  if (c.orders.empty()) return t;
  const auto d = detail::dual_t(rd, fr, c, lambda_sum(rd));
  const IntMatrix shifted = d.sigma_dual - IntMatrix::identity(d.orders.size());
  t.tbar_trivial = zmod::image_membership(shifted, d.tbar, IntMatrix::diagonal(d.orders));
  return t;
}

/// For sigma acting on a cyclic group of even order: whether (sigma - 1) has
/// image of even order (equivalently, the unique involution is a coboundary).
inline std::optional<bool> cyclic_criterion(const FinAbWithEndo& sigma) {
  FinAbGroup g = sigma.group();
  if (!g.is_finite() || g.invariant_factors.size() != 1 || g.torsion_order() % 2 != 0) return std::nullopt;
  FinAbWithEndo shifted{sigma.relations, sigma.endo - IntMatrix::identity(sigma.generators())};
  return zmod::image_order(shifted) % 2 == 0;
}

/// Cyclic criterion on the points of Z/Z° (its prime-to-p part).
inline std::optional<bool> cyclic_criterion(const RootDatum& rd, const FrobeniusAction& fr) {
  const CenterData c = center_data(rd, fr.F);
  FinAbGroup pts = c.component_group.prime_to(fr.p);
  if (pts.invariant_factors.size() != 1 || pts.torsion_order() % 2 != 0) return std::nullopt;
  FinAbWithEndo sigma = frobenius_on_component(c, fr);
  FinAbWithEndo shifted{sigma.relations, sigma.endo - IntMatrix::identity(sigma.generators())};
  Int img = zmod::image_order(shifted);
  while (img % fr.p == 0) img /= fr.p;
  return img % 2 == 0;
}

enum class Verdict { DirectS, ViaR, Undetermined };

inline const char* to_string(Verdict v) {
  switch (v) {
  case Verdict::DirectS: return "DIRECT_S";
  case Verdict::ViaR: return "VIA_R";
  case Verdict::Undetermined: return "UNDETERMINED";
  }
  return "?";
}

struct SignReport {
  std::string datum;
  Int q;
  IntVector lambda;
  IntVector epsilon_class; // lambda mod 2X^v
  FinAbGroup component_group;
  FinAbGroup coinvariants;
  Conditions conditions;
  bool s_fixed = false;
  bool t_is_epsilon = false;
  bool tbar_trivial = true;
  std::optional<bool> cyclic;
  Verdict verdict = Verdict::Undetermined;

  /// Whether some s0 in T(F_q) acts by -1 on every simple root space.
  bool s0_rational() const { return verdict != Verdict::Undetermined; }
};

inline SignReport sign_report(const RootDatum& rd, const FrobeniusAction& fr) {
  validate(rd, fr);
  SignReport r;
  r.datum = rd.name;
  r.q = fr.q;
  r.lambda = lambda_sum(rd);
  ensure(frobenius_fixes_lambda(rd, fr), "sign_report: F does not fix lambda");
  for (const auto& x : r.lambda) {
    Int m = x % 2;
    r.epsilon_class.push_back(m < 0 ? m + 2 : m);
  }
  r.component_group = component_group(rd);
  r.coinvariants = coinvariants_component(rd, fr);
  r.conditions = check_conditions(rd, fr);
  r.s_fixed = s_fixed_by_frobenius(rd, fr);
  const TData t = t_and_tbar(rd, fr);
  r.t_is_epsilon = t.t_is_epsilon;
  r.tbar_trivial = t.tbar_trivial;
  r.cyclic = cyclic_criterion(rd, fr);
  if (r.s_fixed) {
    r.verdict = Verdict::DirectS;
  } else if (r.tbar_trivial) {
    r.verdict = Verdict::ViaR;
  } else {
    r.verdict = Verdict::Undetermined;
  }
  return r;
}

} // namespace fsind::rootdata
