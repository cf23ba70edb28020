#pragma once

#include <algorithm>

#include "fsind/grp/classes.hpp"
#include "fsind/rootdata/sign.hpp"

namespace fsind::grp {

/// Whether `rd` is the catalog datum of the family (SL2: X = Z, roots +-2; GL2: X = Z^2, roots +-(1,-1)).
inline bool datum_matches(const rootdata::RootDatum& rd, Family family) {
  using rootdata::IntVector;
  std::vector<IntVector> roots = rd.roots;
  std::sort(roots.begin(), roots.end());
  if (family == Family::SL2) return rd.rank == 1 && roots == std::vector<IntVector>{IntVector{-2}, IntVector{2}};
  return rd.rank == 2 && roots == std::vector<IntVector>{IntVector{-1, 1}, IntVector{1, -1}};
}

/// The element epsilon = lambda(-1) of G, checked to be central.
inline Index epsilon_in_group(const rootdata::RootDatum& rd, const rootdata::FrobeniusAction& fr,
                              const FiniteMatrixGroup& G) {
  require(datum_matches(rd, G.family()), "epsilon_in_group: datum '" + rd.name + "' does not match " + G.name());
  require(fr.q == G.q(), "epsilon_in_group: q differs between datum and group");
  std::vector<long> lam;
  for (const auto& x : rootdata::lambda_sum(rd)) lam.push_back(x.convert_to<long>());
  const Fq& F = G.field();
  const Index eps = cocharacter_value(G, lam, F.neg(F.one()));
  ensure(std::find(G.Z_pts().begin(), G.Z_pts().end(), eps) != G.Z_pts().end(), "epsilon_in_group: epsilon is not central");
  return eps;
}

} // namespace fsind::grp
