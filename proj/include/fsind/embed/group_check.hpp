#pragma once

#include <algorithm>
#include <set>

#include "fsind/embed/pushout.hpp"
#include "fsind/grp.hpp"

namespace fsind::embed {

/// Point counts for SL2 -> GL2 = (SL2 x GL1) / mu2 over F_q.
struct GroupLevelReport {
  long q = 0;
  std::size_t order_G = 0, order_Gprime = 0;
  std::size_t order_GZ = 0;          // |G(F_q) Z'(F_q)|
  std::size_t index = 0;             // [G'(F_q) : G(F_q) Z'(F_q)]
  Int predicted_index = 0;           // index_formula
  bool center_intersection = false;  // Z(F_q) = Z'(F_q) cap G(F_q)
  std::size_t torus_index = 0;       // [T'(F_q) : T(F_q) Z'(F_q)]
  bool quotient_orders = false;      // |G'/G| = |T'/T|

  bool ok() const {
    return center_intersection && quotient_orders && Int(index) == predicted_index && Int(torus_index) == predicted_index;
  }
};

namespace detail {

inline std::size_t product_set_size(const grp::FiniteMatrixGroup& H, const std::vector<grp::Index>& A,
                                    const std::vector<grp::Index>& B) {
  std::set<grp::Index> s;
  for (auto a : A)
    for (auto b : B) s.insert(H.mul(a, b));
  return s.size();
}

} // namespace detail

inline GroupLevelReport group_level_check(long q, std::size_t cap = grp::kDefaultCap) {
  const auto G = grp::build_group(grp::Family::SL2, q, cap);
  const auto H = grp::build_group(grp::Family::GL2, q, cap);
  GroupLevelReport r;
  r.q = q;
  r.order_G = G.order();
  r.order_Gprime = H.order();

  std::vector<grp::Index> G_in_H, ZG_in_H, TG_in_H;
  for (grp::Index i = 0; i < G.order(); ++i) G_in_H.push_back(H.index_of(G.element(i)));
  for (auto z : G.Z_pts()) ZG_in_H.push_back(H.index_of(G.element(z)));
  for (auto t : G.T_pts()) TG_in_H.push_back(H.index_of(G.element(t)));
  const auto& Zp = H.Z_pts();

  std::vector<grp::Index> meet;
  std::set<grp::Index> in_G(G_in_H.begin(), G_in_H.end());
  for (auto z : Zp)
    if (in_G.count(z)) meet.push_back(z);
  std::sort(meet.begin(), meet.end());
  std::sort(ZG_in_H.begin(), ZG_in_H.end());
  r.center_intersection = meet == ZG_in_H;

  r.order_GZ = detail::product_set_size(H, G_in_H, Zp);
  r.index = H.order() / r.order_GZ;
  r.torus_index = H.T_pts().size() / detail::product_set_size(H, TG_in_H, Zp);
  r.quotient_orders = H.order() * G.T_pts().size() == G.order() * H.T_pts().size();

  const auto spec = minimal_embedding(rootdata::special_linear(2));
  r.predicted_index = index_formula(spec, rootdata::FrobeniusAction::split(1, q));
  return r;
}

} // namespace fsind::embed
