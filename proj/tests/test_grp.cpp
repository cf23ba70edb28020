#include <gtest/gtest.h>

#include <random>
#include <set>

#include "fsind/grp.hpp"
#include "fsind/rootdata.hpp"

using namespace fsind::grp;

namespace {

// Number of classes by Burnside: (1/|G|) sum_g |C_G(g)|.
std::size_t burnside_class_count(const FiniteMatrixGroup& G) {
  std::size_t commuting = 0;
  for (Index x = 0; x < G.order(); ++x)
    for (Index y = 0; y < G.order(); ++y)
      if (G.mul(x, y) == G.mul(y, x)) ++commuting;
  return commuting / G.order();
}

} // namespace

TEST(Field, AxiomsByEnumeration) {
  for (long q : {2L, 3L, 4L, 5L, 7L, 8L, 9L, 16L, 25L, 27L}) {
    Fq F(q);
    for (long a = 0; a < q; ++a) {
      const auto x = static_cast<Fq::Elt>(a);
      EXPECT_EQ(F.pow(x, q), x) << "q=" << q;
      EXPECT_EQ(F.add(x, F.neg(x)), 0);
      if (a) EXPECT_EQ(F.mul(x, F.inv(x)), 1);
      for (long b = 0; b < q; ++b) {
        const auto y = static_cast<Fq::Elt>(b);
        EXPECT_EQ(F.trace(F.add(x, y)), (F.trace(x) + F.trace(y)) % F.p());
        if (q > 9) continue;
        for (long c = 0; c < q; ++c) {
          const auto z = static_cast<Fq::Elt>(c);
          ASSERT_EQ(F.mul(x, F.add(y, z)), F.add(F.mul(x, y), F.mul(x, z)));
          ASSERT_EQ(F.mul(F.mul(x, y), z), F.mul(x, F.mul(y, z)));
        }
      }
    }
    std::set<Fq::Elt> powers;
    for (long n = 0; n < q - 1; ++n) powers.insert(F.exp(n));
    EXPECT_EQ(static_cast<long>(powers.size()), q - 1);
    EXPECT_EQ(F.log(F.generator()), q > 2 ? 1 : 0);
  }
}

TEST(Field, ModulusTableAndTrace) {
  EXPECT_EQ(Fq(4).modulus(), (std::vector<int>{1, 1}));
  EXPECT_EQ(Fq(8).modulus(), (std::vector<int>{1, 1, 0}));
  EXPECT_EQ(Fq(9).modulus(), (std::vector<int>{2, 2}));
  Fq F(9);
  std::set<int> traces;
  for (long a = 0; a < 9; ++a) traces.insert(F.trace(static_cast<Fq::Elt>(a)));
  EXPECT_EQ(traces.size(), 3u);
  EXPECT_THROW(Fq(6), fsind::InvalidInput);
  EXPECT_THROW(Fq(1), fsind::InvalidInput);
}

TEST(Group, Orders) {
  auto sl3 = build_group(Family::SL2, 3);
  EXPECT_EQ(sl3.order(), 24u);
  EXPECT_EQ(sl3.Z_pts().size(), 2u);
  EXPECT_EQ(sl3.U_pts().size(), 3u);
  EXPECT_EQ(sl3.T_pts().size(), 2u);
  auto gl3 = build_group(Family::GL2, 3);
  EXPECT_EQ(gl3.order(), 48u);
  EXPECT_EQ(gl3.Z_pts().size(), 2u);
  EXPECT_EQ(gl3.T_pts().size(), 4u);
  auto sl2 = build_group(Family::SL2, 2);
  EXPECT_EQ(sl2.order(), 6u);
  EXPECT_EQ(sl2.Z_pts().size(), 1u);
  for (long q : {2L, 3L, 4L, 5L, 7L, 8L, 9L})
    for (Family f : {Family::SL2, Family::GL2}) {
      auto G = build_group(f, q);
      EXPECT_EQ(G.B_pts().size(), G.T_pts().size() * G.U_pts().size());
      for (Index z : G.Z_pts()) EXPECT_TRUE(std::count(G.T_pts().begin(), G.T_pts().end(), z));
    }
}

TEST(Group, CapExceeded) {
  EXPECT_THROW(build_group(Family::GL2, 13, 1000), fsind::CapExceeded);
  EXPECT_THROW(build_group(Family::SL2, 6), fsind::InvalidInput);
}

TEST(Group, AxiomsSpotCheck) {
  for (long q : {4L, 5L, 9L}) {
    auto G = build_group(Family::GL2, q);
    std::mt19937 rng(7);
    std::uniform_int_distribution<Index> pick(0, static_cast<Index>(G.order() - 1));
    for (int t = 0; t < 500; ++t) {
      Index a = pick(rng), b = pick(rng), c = pick(rng);
      EXPECT_EQ(G.mul(G.mul(a, b), c), G.mul(a, G.mul(b, c)));
    }
    for (Index x = 0; x < G.order(); ++x) {
      EXPECT_EQ(G.mul(x, G.inv(x)), G.identity());
      EXPECT_EQ(G.mul(G.inv(x), x), G.identity());
    }
  }
}

TEST(Classes, Counts) {
  EXPECT_EQ(conjugacy_classes(build_group(Family::SL2, 3)).size(), 7u);
  EXPECT_EQ(conjugacy_classes(build_group(Family::GL2, 3)).size(), 8u);
  for (long q : {2L, 3L, 4L, 5L})
    for (Family f : {Family::SL2, Family::GL2}) {
      auto G = build_group(f, q);
      EXPECT_EQ(conjugacy_classes(G).size(), burnside_class_count(G)) << G.name();
    }
}

TEST(Classes, Structure) {
  for (long q : {2L, 3L, 4L, 5L, 7L, 8L, 9L, 11L, 13L})
    for (Family f : {Family::SL2, Family::GL2}) {
      auto G = build_group(f, q);
      auto cl = conjugacy_classes(G);
      EXPECT_EQ(cl.class_reps[0], G.identity());
      EXPECT_EQ(cl.square_class[0], 0u);
      std::size_t total = 0;
      for (std::size_t c = 0; c < cl.size(); ++c) {
        total += cl.class_sizes[c];
        EXPECT_EQ(G.order() % cl.class_sizes[c], 0u);
        EXPECT_EQ(cl.power_class(c, 2), cl.square_class[c]);
        EXPECT_EQ(cl.power_class(c, -1), cl.inverse_class[c]);
        EXPECT_EQ(cl.exponent % cl.element_orders[c], 0u);
      }
      EXPECT_EQ(total, G.order());
      EXPECT_EQ(involution_count(G), involution_count(cl)) << G.name();
    }
}

TEST(LinearCharacters, Counts) {
  auto count = [](Family f, long q) {
    auto G = build_group(f, q);
    return linear_characters(G, conjugacy_classes(G)).size();
  };
  EXPECT_EQ(count(Family::GL2, 3), 2u);
  EXPECT_EQ(count(Family::GL2, 5), 4u);
  EXPECT_EQ(count(Family::SL2, 5), 1u);
  EXPECT_EQ(count(Family::SL2, 2), 2u);
  EXPECT_EQ(count(Family::SL2, 3), 3u);
  for (long q : {4L, 7L, 8L, 9L}) EXPECT_EQ(count(Family::GL2, q), static_cast<std::size_t>(q - 1));
}

TEST(LinearCharacters, AreHomomorphisms) {
  auto G = build_group(Family::GL2, 5);
  auto cl = conjugacy_classes(G);
  std::mt19937 rng(3);
  std::uniform_int_distribution<Index> pick(0, static_cast<Index>(G.order() - 1));
  for (const auto& chi : linear_characters(G, cl))
    for (int t = 0; t < 200; ++t) {
      Index a = pick(rng), b = pick(rng);
      EXPECT_EQ((chi.value[cl.class_of[a]] + chi.value[cl.class_of[b]]) % chi.order, chi.value[cl.class_of[G.mul(a, b)]]);
    }
}

TEST(Epsilon, Examples) {
  using namespace fsind::rootdata;
  for (long q : {3L, 5L, 7L}) {
    auto G = build_group(Family::SL2, q);
    auto e = epsilon_in_group(special_linear(2), FrobeniusAction::split(1, q), G);
    const auto m1 = G.field().neg(1);
    EXPECT_EQ(e, G.index_of(G.diag(m1, m1)));
    auto H = build_group(Family::GL2, q);
    EXPECT_EQ(epsilon_in_group(general_linear(2), FrobeniusAction::split(2, q), H), H.index_of(H.diag(m1, m1)));
  }
  auto G4 = build_group(Family::SL2, 4);
  EXPECT_EQ(epsilon_in_group(special_linear(2), FrobeniusAction::split(1, 4), G4), G4.identity());
  EXPECT_THROW(epsilon_in_group(general_linear(2), FrobeniusAction::split(2, 4), G4), fsind::InvalidInput);
}
