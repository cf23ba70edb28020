#pragma once

#include <numeric>
#include <vector>

#include "fsind/grp/group.hpp"

namespace fsind::grp {

using Index = FiniteMatrixGroup::Index;

/// Conjugacy classes, ordered by first element index (class 0 is the identity).
struct ConjClassData {
  std::vector<Index> class_reps;
  std::vector<std::size_t> class_sizes;
  std::vector<std::size_t> class_of;      // element -> class
  std::vector<std::size_t> square_class;  // class of g^2
  std::vector<std::size_t> inverse_class; // class of g^-1
  std::vector<std::size_t> element_orders;
  /// powers[c][j] = class of g^j for g in class c, 0 <= j < order(c).
  std::vector<std::vector<std::size_t>> powers;
  std::size_t exponent = 1;

  std::size_t size() const { return class_reps.size(); }
  std::size_t power_class(std::size_t c, long j) const {
    const long o = static_cast<long>(element_orders[c]);
    return powers[c][static_cast<std::size_t>(((j % o) + o) % o)];
  }
};

template <class Group>
ConjClassData conjugacy_classes(const Group& G) {
  ConjClassData d;
  const std::size_t none = static_cast<std::size_t>(-1);
  d.class_of.assign(G.order(), none);
  std::vector<Index> second_member;
  for (Index x = 0; x < G.order(); ++x) {
    if (d.class_of[x] != none) continue;
    const std::size_t c = d.class_reps.size();
    d.class_reps.push_back(x);
    std::vector<Index> orbit{x};
    d.class_of[x] = c;
    for (std::size_t i = 0; i < orbit.size(); ++i)
      for (Index g : G.generators()) {
        Index y = G.conj(g, orbit[i]);
        if (d.class_of[y] == none) {
          d.class_of[y] = c;
          orbit.push_back(y);
        }
      }
    d.class_sizes.push_back(orbit.size());
    second_member.push_back(orbit.size() > 1 ? orbit[1] : x);
  }
  ensure(std::accumulate(d.class_sizes.begin(), d.class_sizes.end(), std::size_t{0}) == G.order(),
         "conjugacy_classes: class equation fails");

  const std::size_t k = d.size();
  d.square_class.resize(k);
  d.inverse_class.resize(k);
  d.powers.resize(k);
  for (std::size_t c = 0; c < k; ++c) {
    const Index g = d.class_reps[c];
    d.square_class[c] = d.class_of[G.mul(g, g)];
    const Index h = second_member[c];
    ensure(d.class_of[G.mul(h, h)] == d.square_class[c], "conjugacy_classes: square map not a class function");
    d.inverse_class[c] = d.class_of[G.inv(g)];
    Index x = G.identity();
    do {
      d.powers[c].push_back(d.class_of[x]);
      x = G.mul(x, g);
    } while (x != G.identity());
    d.element_orders.push_back(d.powers[c].size());
    d.exponent = std::lcm(d.exponent, d.powers[c].size());
  }
  return d;
}

/// #{g : g^2 = 1} by scanning elements.
inline std::size_t involution_count(const FiniteMatrixGroup& G) {
  std::size_t n = 0;
  for (Index x = 0; x < G.order(); ++x)
    if (G.mul(x, x) == G.identity()) ++n;
  return n;
}

/// #{g : g^2 = 1} from class sizes and the square map.
inline std::size_t involution_count(const ConjClassData& cl) {
  std::size_t n = 0;
  for (std::size_t c = 0; c < cl.size(); ++c)
    if (cl.square_class[c] == 0) n += cl.class_sizes[c];
  return n;
}

/// A linear character g -> exp(2 pi i value[class(g)] / order).
struct LinearCharacter {
  std::size_t order = 1;
  std::vector<std::size_t> value; // per class, exponent mod order

  bool is_trivial() const {
    for (auto v : value)
      if (v != 0) return false;
    return true;
  }
};

/// Commutator subgroup: normal closure of commutators of the generators.
inline std::vector<Index> derived_subgroup(const FiniteMatrixGroup& G) {
  std::vector<char> in(G.order(), 0);
  std::vector<Index> members;
  auto add = [&](Index x) {
    if (!in[x]) {
      in[x] = 1;
      members.push_back(x);
    }
  };
  add(G.identity());
  std::vector<Index> seeds;
  for (Index a : G.generators())
    for (Index b : G.generators()) seeds.push_back(G.mul(G.mul(a, b), G.mul(G.inv(a), G.inv(b))));
  for (Index s : seeds) add(s);
  for (std::size_t i = 0; i < members.size(); ++i) {
    const Index x = members[i];
    for (Index s : seeds) add(G.mul(x, s));
    for (Index g : G.generators()) add(G.conj(g, x));
  }
  return members;
}

/// All linear characters, via the (cyclic, for catalog groups) abelianization.
///
/// Character j sends the coset of g0^n to exp(2 pi i j n / m), where g0 is the
/// first element (by index) whose coset generates G/[G, G]. For GL2 this is
/// the group of characters of F_q^x composed with det.
inline std::vector<LinearCharacter> linear_characters(const FiniteMatrixGroup& G, const ConjClassData& cl) {
  const auto D = derived_subgroup(G);
  const std::size_t m = G.order() / D.size();
  ensure(m * D.size() == G.order(), "linear_characters: derived subgroup order does not divide |G|");
  std::vector<char> inD(G.order(), 0);
  for (Index x : D) inD[x] = 1;

  std::optional<Index> gen;
  for (Index g = 0; g < G.order() && !gen; ++g) {
    std::size_t n = 1;
    for (Index x = g; !inD[x]; x = G.mul(x, g)) ++n;
    if (n == m) gen = g;
  }
  require(gen.has_value(), "linear_characters: abelianization of " + G.name() + " is not cyclic");

  const std::size_t none = static_cast<std::size_t>(-1);
  std::vector<std::size_t> coset(G.order(), none);
  Index power = G.identity();
  for (std::size_t n = 0; n < m; ++n) {
    for (Index d : D) coset[G.mul(power, d)] = n;
    power = G.mul(power, *gen);
  }
  std::vector<LinearCharacter> out;
  for (std::size_t j = 0; j < m; ++j) {
    LinearCharacter chi;
    chi.order = m;
    for (std::size_t c = 0; c < cl.size(); ++c) chi.value.push_back((j * coset[cl.class_reps[c]]) % m);
    out.push_back(std::move(chi));
  }
  return out;
}

/// Torus element y(t) for a cocharacter y in the catalog coordinates of the family:
/// SL2: X^v = Z, y(t) = diag(t^y, t^-y); GL2: X^v = Z^2, y(t) = diag(t^y1, t^y2).
inline Index cocharacter_value(const FiniteMatrixGroup& G, const std::vector<long>& y, Fq::Elt t) {
  const Fq& F = G.field();
  require(t != 0, "cocharacter_value: t must be nonzero");
  if (G.family() == Family::SL2) {
    require(y.size() == 1, "cocharacter_value: SL2 cocharacters have rank 1");
    return G.index_of(G.diag(F.pow(t, y[0]), F.pow(t, -y[0])));
  }
  require(y.size() == 2, "cocharacter_value: GL2 cocharacters have rank 2");
  return G.index_of(G.diag(F.pow(t, y[0]), F.pow(t, y[1])));
}

} // namespace fsind::grp
