#include <gtest/gtest.h>

#include <complex>
#include <map>
#include <memory>
#include <numeric>
#include <random>

#include "fsind/chartab.hpp"

using namespace fsind;
using namespace fsind::chartab;
using grp::Family;

namespace {

struct Built {
  FiniteMatrixGroup G;
  ConjClassData cl;
  CharacterTable t;
};

// Tables are expensive at q = 13; build each catalog group once per process.
const Built& built(Family f, long q) {
  static std::map<std::pair<int, long>, std::unique_ptr<Built>> cache;
  auto& slot = cache[{static_cast<int>(f), q}];
  if (!slot) {
    auto G = grp::build_group(f, q);
    auto cl = grp::conjugacy_classes(G);
    auto t = character_table(G, cl, 1);
    slot = std::make_unique<Built>(Built{std::move(G), std::move(cl), std::move(t)});
  }
  return *slot;
}

const std::vector<long> kCatalogQ{2, 3, 4, 5, 7, 8, 9, 11, 13};

// Z/n with generator 1, for the abelian and trivial-subgroup cases.
struct Cyclic {
  using Index = grp::Index;
  Index n;
  std::size_t order() const { return n; }
  Index identity() const { return 0; }
  Index mul(Index a, Index b) const { return (a + b) % n; }
  Index inv(Index a) const { return (n - a) % n; }
  Index conj(Index, Index x) const { return x; }
  std::vector<Index> generators() const { return {1 % n}; }
  std::string name() const { return "Z/" + std::to_string(n); }
};

std::multiset<std::size_t> degree_multiset(const CharacterTable& t) { return {t.degrees.begin(), t.degrees.end()}; }

std::complex<double> root(long N, long k) { return std::polar(1.0, 2.0 * std::acos(-1.0) * static_cast<double>(k) / static_cast<double>(N)); }

// Self-dual degree-2 character with omega(-I) = -1.
std::size_t faithful_self_dual_two(const Built& b) {
  const Index minus = b.G.Z_pts()[1];
  for (std::size_t i = 0; i < b.t.size(); ++i)
    if (b.t.degrees[i] == 2 && is_self_dual(b.t, b.cl, i) && sign_of(central_character(b.t, b.cl, b.G, i, minus)) == -1) return i;
  throw std::runtime_error("no such character");
}

std::size_t row_of_degree(const CharacterTable& t, std::size_t d) {
  for (std::size_t i = 0; i < t.size(); ++i)
    if (t.degrees[i] == d) return i;
  throw std::runtime_error("no row of that degree");
}

} // namespace

TEST(Cyclo, RootRelations) {
  EXPECT_TRUE((CycloZ::root(3, 0) + CycloZ::root(3, 1) + CycloZ::root(3, 2)).is_zero());
  EXPECT_EQ(CycloZ::root(4, 1) * CycloZ::root(4, 1), CycloZ(-1));
  EXPECT_EQ(CycloZ::root(3, 1), CycloZ::root(6, 2));
  EXPECT_EQ(CycloZ::root(12, 6), CycloZ(-1));
  EXPECT_EQ(CycloZ(5).rational_value(), 5);
  EXPECT_FALSE(CycloZ::root(5, 1).rational_value().has_value());
  EXPECT_EQ((CycloZ::root(5, 1) + CycloZ::root(5, 4) + CycloZ::root(5, 2) + CycloZ::root(5, 3)).rational_value(), -1);
  EXPECT_EQ(CycloZ::root(8, 1).to_string(), "E(8)");
}

TEST(Cyclo, CanonicalFormIsUniqueAndMatchesComplexValue) {
  std::mt19937_64 rng(11);
  for (long N : {3L, 4L, 5L, 8L, 9L, 12L, 15L, 24L, 36L, 45L}) {
    std::vector<long> primes;
    for (long p = 2; p <= N; ++p)
      if (N % p == 0 && std::all_of(primes.begin(), primes.end(), [p](long r) { return p % r; })) primes.push_back(p);
    for (int trial = 0; trial < 20; ++trial) {
      std::uniform_int_distribution<int> coef(-3, 3);
      std::vector<std::int64_t> v(N), w;
      for (auto& x : v) x = coef(rng);
      w = v;
      // Add multiples of sum_j zeta^{k + jN/p} = 0.
      for (long p : primes)
        for (long k = 0; k < N / p; ++k) {
          const int m = coef(rng);
          for (long j = 0; j < p; ++j) w[(k + j * (N / p)) % N] += m;
        }
      std::complex<double> direct = 0;
      for (long k = 0; k < N; ++k) direct += static_cast<double>(v[k]) * root(N, k);
      const auto a = CycloZ::from_dense(N, v), b = CycloZ::from_dense(N, w);
      EXPECT_EQ(a.terms(), b.terms()) << "N=" << N;
      EXPECT_NEAR(std::abs(a.to_complex() - direct), 0.0, 1e-9);
      EXPECT_EQ(a.conj().conj(), a);
      EXPECT_NEAR(std::abs(a.conj().to_complex() - std::conj(direct)), 0.0, 1e-9);
      EXPECT_NEAR(std::abs((a * b).to_complex() - direct * direct), 0.0, 1e-7);
      EXPECT_NEAR(std::abs((a - b).to_complex()), 0.0, 1e-9);
      EXPECT_EQ(to_rational(a).terms().size(), a.terms().size());
    }
  }
}

TEST(CharacterTable, CyclicGroupOfOrderThree) {
  Cyclic Z3{3};
  auto cl = grp::conjugacy_classes(Z3);
  auto t = character_table(Z3, cl);
  ASSERT_EQ(t.size(), 3u);
  EXPECT_EQ(orthogonality_defect(t, cl), "");
  std::set<std::string> rows;
  for (std::size_t i = 0; i < 3; ++i) {
    EXPECT_EQ(t.degrees[i], 1u);
    std::string s;
    for (std::size_t c = 0; c < 3; ++c) {
      // Each value is a cube root of unity.
      EXPECT_EQ(t(i, c) * t(i, c) * t(i, c), CycloZ(1));
      s += t(i, c).to_string() + ";";
    }
    rows.insert(s);
  }
  EXPECT_EQ(rows.size(), 3u);
  EXPECT_EQ(t(1, 1) + t(2, 1), CycloZ(-1));
}

TEST(CharacterTable, DegreesOfSmallGroups) {
  EXPECT_EQ(degree_multiset(built(Family::SL2, 3).t), (std::multiset<std::size_t>{1, 1, 1, 2, 2, 2, 3}));
  const auto& gl = built(Family::GL2, 3);
  EXPECT_EQ(gl.cl.size(), 8u);
  EXPECT_EQ(degree_multiset(gl.t), (std::multiset<std::size_t>{1, 1, 2, 2, 2, 3, 3, 4}));
  EXPECT_EQ(built(Family::SL2, 3).t.degrees.front(), 1u);
}

TEST(CharacterTable, SeedDoesNotChangeTheTable) {
  const auto& b = built(Family::GL2, 5);
  for (std::uint64_t seed : {0ull, 7ull, 42ull}) {
    auto t = character_table(b.G, b.cl, seed);
    ASSERT_EQ(t.degrees, b.t.degrees);
    for (std::size_t i = 0; i < t.size(); ++i)
      for (std::size_t c = 0; c < b.cl.size(); ++c) EXPECT_EQ(t(i, c), b.t(i, c));
  }
}

TEST(CharacterTable, CatalogOrthogonalityAndInvolutions) {
  for (Family f : {Family::SL2, Family::GL2})
    for (long q : kCatalogQ) {
      const auto& b = built(f, q);
      SCOPED_TRACE(b.G.name());
      EXPECT_EQ(b.t.size(), b.cl.size());
      EXPECT_EQ(orthogonality_defect(b.t, b.cl), "");
      std::int64_t weighted = 0;
      for (std::size_t i = 0; i < b.t.size(); ++i) weighted += fs_indicator(b.t, b.cl, i) * static_cast<std::int64_t>(b.t.degrees[i]);
      EXPECT_EQ(weighted, static_cast<std::int64_t>(grp::involution_count(b.G)));
    }
}

TEST(CharacterTable, GaloisActionMatchesPowerMap) {
  for (Family f : {Family::SL2, Family::GL2})
    for (long q : {3L, 4L, 5L, 7L}) {
      const auto& b = built(f, q);
      const long N = static_cast<long>(b.t.exponent);
      for (long j = 2; j < N; ++j) {
        if (std::gcd(j, N) != 1) continue;
        for (std::size_t i = 0; i < b.t.size(); ++i)
          for (std::size_t c = 0; c < b.cl.size(); ++c) {
            RootSum s = b.t.sum(i, c);
            for (auto& term : s.terms) term.first = (term.first * j) % s.N;
            EXPECT_EQ(s.reduced(), b.t(i, b.cl.power_class(c, j))) << b.G.name();
          }
      }
    }
}

TEST(Indicator, SmallExamples) {
  const auto& b = built(Family::SL2, 3);
  const auto counts = square_counts(b.G, b.cl);
  EXPECT_EQ(fs_indicator(b.t, b.cl, 0), 1);
  const auto two = faithful_self_dual_two(b);
  EXPECT_EQ(fs_indicator(b.t, b.cl, two), -1);
  EXPECT_EQ(fs_indicator_bruteforce(b.t, counts, two), -1);
  const auto st = row_of_degree(b.t, 3);
  EXPECT_EQ(fs_indicator(b.t, b.cl, st), 1);
  EXPECT_EQ(fs_indicator_bruteforce(b.t, counts, st), 1);
  // The remaining two faithful degree-2 characters are complex conjugates.
  for (std::size_t i = 0; i < b.t.size(); ++i)
    if (b.t.degrees[i] == 2 && i != two) {
      EXPECT_EQ(fs_indicator(b.t, b.cl, i), 0);
      EXPECT_NE(dual_index(b.t, b.cl, i), i);
    }
}

TEST(Indicator, ZeroExactlyWhenNotSelfDual) {
  for (Family f : {Family::SL2, Family::GL2})
    for (long q : kCatalogQ) {
      const auto& b = built(f, q);
      const auto counts = square_counts(b.G, b.cl);
      for (std::size_t i = 0; i < b.t.size(); ++i) {
        const int fs = fs_indicator(b.t, b.cl, i);
        EXPECT_EQ(fs == 0, !is_self_dual(b.t, b.cl, i)) << b.G.name() << " chi" << i;
        EXPECT_EQ(fs, fs_indicator_bruteforce(b.t, counts, i));
        EXPECT_EQ(dual_index(b.t, b.cl, dual_index(b.t, b.cl, i)), i);
      }
    }
}

TEST(Whittaker, NonDegenerateCharacters) {
  for (Family f : {Family::SL2, Family::GL2})
    for (long q : {2L, 3L, 4L, 5L, 9L}) {
      const auto& b = built(f, q);
      EXPECT_FALSE(is_nondegenerate(b.G, additive_character(b.G, 0)));
      for (long a = 1; a < q; ++a) {
        const auto psi = additive_character(b.G, static_cast<Fq::Elt>(a));
        const auto stab = psi_stabilizer(b.G, psi);
        EXPECT_EQ(std::set<Index>(stab.begin(), stab.end()), std::set<Index>(b.G.Z_pts().begin(), b.G.Z_pts().end()));
      }
      EXPECT_EQ(nondegenerate_psi(b.G).a, 1);
    }
}

TEST(Whittaker, Examples) {
  const auto& sl = built(Family::SL2, 3);
  const auto psi = nondegenerate_psi(sl.G);
  EXPECT_EQ(genericity(sl.t, sl.cl, sl.G, 0, psi), 0);
  EXPECT_EQ(genericity(sl.t, sl.cl, sl.G, row_of_degree(sl.t, 3), psi), 1);
  EXPECT_THROW(genericity(sl.t, sl.cl, sl.G, 0, additive_character(sl.G, 0)), InvalidInput);
  const auto& gl = built(Family::GL2, 3);
  EXPECT_EQ(genericity(gl.t, gl.cl, gl.G, row_of_degree(gl.t, 4), nondegenerate_psi(gl.G)), 1);
}

TEST(Whittaker, MultiplicityAtMostOneAndMatchesNumericSum) {
  for (Family f : {Family::SL2, Family::GL2})
    for (long q : kCatalogQ) {
      const auto& b = built(f, q);
      const auto psi = nondegenerate_psi(b.G);
      for (std::size_t i = 0; i < b.t.size(); ++i) {
        const auto m = genericity(b.t, b.cl, b.G, i, psi);
        EXPECT_LE(m, 1) << b.G.name();
        std::complex<double> s = 0;
        for (std::size_t u = 0; u < psi.elements.size(); ++u)
          s += b.t(i, b.cl.class_of[psi.elements[u]]).to_complex() * std::conj(root(psi.p, psi.exponent[u]));
        EXPECT_NEAR(std::abs(s / static_cast<double>(psi.elements.size()) - static_cast<double>(m)), 0.0, 1e-7);
      }
    }
}

TEST(CentralCharacter, Examples) {
  const auto& b = built(Family::SL2, 3);
  const Index minus = b.G.Z_pts()[1];
  EXPECT_EQ(central_character(b.t, b.cl, b.G, faithful_self_dual_two(b), b.G.identity()), CycloZ(1));
  EXPECT_EQ(central_character(b.t, b.cl, b.G, faithful_self_dual_two(b), minus), CycloZ(-1));
  EXPECT_EQ(central_character(b.t, b.cl, b.G, row_of_degree(b.t, 3), minus), CycloZ(1));
  EXPECT_THROW(central_character(b.t, b.cl, b.G, 0, b.G.generators()[0]), InvalidInput);
}

TEST(CentralCharacter, SelfDualSquaresToOneOnInvolutions) {
  for (Family f : {Family::SL2, Family::GL2})
    for (long q : kCatalogQ) {
      const auto& b = built(f, q);
      for (std::size_t i = 0; i < b.t.size(); ++i) {
        if (!is_self_dual(b.t, b.cl, i)) continue;
        for (Index z : b.G.Z_pts()) {
          if (b.G.mul(z, z) != b.G.identity()) continue;
          const auto w = central_character(b.t, b.cl, b.G, i, z);
          EXPECT_EQ(w * w, CycloZ(1));
        }
      }
    }
}

TEST(Induction, BorelTrivialInSL2F3) {
  const auto& b = built(Family::SL2, 3);
  SubgroupCharacter one{b.G.B_pts(), 1, std::vector<long>(b.G.B_pts().size(), 0)};
  const auto ind = induced_character(b.G, b.cl, one);
  const auto m = decompose(b.t, b.cl, ind);
  std::multiset<std::size_t> constituents;
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::int64_t r = 0; r < m[i]; ++r) constituents.insert(b.t.degrees[i]);
  EXPECT_EQ(constituents, (std::multiset<std::size_t>{1, 3}));
  EXPECT_EQ(m[0], 1);
}

TEST(Induction, PrincipalSeriesOfOrderFourIsIrreducible) {
  const auto& b = built(Family::SL2, 5);
  const auto& F = b.G.field();
  SubgroupCharacter theta{b.G.B_pts(), 4, {}};
  for (Index x : b.G.B_pts()) theta.exponent.push_back(F.log(b.G.element(x).a()));
  const auto ind = induced_character(b.G, b.cl, theta);
  EXPECT_EQ(ind[0], CycloZ(6));
  EXPECT_EQ(inner_product(b.cl, b.t.group_order, ind, ind), 1);
  const auto m = decompose(b.t, b.cl, ind);
  EXPECT_EQ(std::accumulate(m.begin(), m.end(), std::int64_t{0}), 1);
}

TEST(Induction, TrivialSubgroupGivesRegularCharacter) {
  Cyclic Z2{2};
  auto cl = grp::conjugacy_classes(Z2);
  SubgroupCharacter one{{0}, 1, {0}};
  const auto reg = induced_character(Z2, cl, one);
  EXPECT_EQ(reg[cl.class_of[0]], CycloZ(2));
  EXPECT_EQ(reg[cl.class_of[1]], CycloZ(0));
  const auto t = character_table(Z2, cl);
  EXPECT_EQ(decompose(t, cl, reg), (std::vector<std::int64_t>{1, 1}));
}

TEST(Induction, RejectsNonHomomorphism) {
  const auto& b = built(Family::SL2, 5);
  SubgroupCharacter bad{b.G.B_pts(), 4, std::vector<long>(b.G.B_pts().size(), 1)};
  EXPECT_THROW(induced_character(b.G, b.cl, bad), InvalidInput);
}

TEST(TwistedIndicator, TrivialTwistIsTheIndicator) {
  for (Family f : {Family::SL2, Family::GL2})
    for (long q : {2L, 3L, 4L, 5L, 7L, 9L}) {
      const auto& b = built(f, q);
      const auto lin = grp::linear_characters(b.G, b.cl);
      ASSERT_TRUE(lin[0].is_trivial());
      for (std::size_t i = 0; i < b.t.size(); ++i) {
        if (is_self_dual(b.t, b.cl, i)) EXPECT_EQ(twisted_fs(b.t, b.cl, i, lin[0]), fs_indicator(b.t, b.cl, i));
        else EXPECT_THROW(twisted_fs(b.t, b.cl, i, lin[0]), InvalidInput);
      }
    }
}

// Golden calibration: the twisted indicator's sign convention agrees with the
// symmetry type of explicitly averaged forms for every (chi, nu) of SL2(F_3), GL2(F_3).
TEST(TwistedIndicator, AgreesWithExplicitForms) {
  std::size_t compared = 0;
  for (Family f : {Family::SL2, Family::GL2}) {
    const auto& b = built(f, 3);
    const auto lin = grp::linear_characters(b.G, b.cl);
    for (std::size_t i = 0; i < b.t.size(); ++i)
      for (const auto& nu : lin) {
        if (!dualizes(b.t, b.cl, i, nu)) continue;
        EXPECT_EQ(twisted_fs(b.t, b.cl, i, nu), explicit_form_oracle(b.G, b.cl, b.t, i, nu, 5)) << b.G.name() << " chi" << i;
        ++compared;
      }
  }
  EXPECT_GT(compared, built(Family::SL2, 3).t.size());
  // GL2(F_3): a non-self-dual degree-2 character carries an alternating det-twisted form.
  const auto& gl = built(Family::GL2, 3);
  const auto lin = grp::linear_characters(gl.G, gl.cl);
  for (std::size_t i = 0; i < gl.t.size(); ++i)
    if (gl.t.degrees[i] == 2 && !is_self_dual(gl.t, gl.cl, i)) {
      ASSERT_TRUE(dualizes(gl.t, gl.cl, i, lin[1]));
      EXPECT_EQ(twisted_fs(gl.t, gl.cl, i, lin[1]), -1);
    }
}

TEST(ExplicitForm, Examples) {
  const auto& b = built(Family::SL2, 3);
  const auto lin = grp::linear_characters(b.G, b.cl);
  EXPECT_EQ(explicit_form_oracle(b.G, b.cl, b.t, faithful_self_dual_two(b), lin[0]), -1);
  EXPECT_EQ(explicit_form_oracle(b.G, b.cl, b.t, row_of_degree(b.t, 3), lin[0]), 1);
  for (std::size_t i = 0; i < b.t.size(); ++i)
    if (!is_self_dual(b.t, b.cl, i)) EXPECT_THROW(explicit_form_oracle(b.G, b.cl, b.t, i, lin[0]), InternalError);
  const auto& big = built(Family::SL2, 11);
  EXPECT_THROW(explicit_form_oracle(big.G, big.cl, big.t, 0, grp::linear_characters(big.G, big.cl)[0]), InvalidInput);
}

TEST(TableIO, JsonCsvText) {
  const auto& b = built(Family::GL2, 3);
  const auto j = table_to_json(b.G, b.cl, b.t);
  EXPECT_EQ(j["schema"], kTableSchema);
  ASSERT_EQ(j["characters"].size(), 8u);
  for (std::size_t i = 0; i < 8; ++i)
    for (std::size_t c = 0; c < 8; ++c) EXPECT_EQ(cyclo_from_json(j["characters"][i]["values"][c]), b.t(i, c));
  const auto csv = table_to_csv(b.cl, b.t);
  EXPECT_EQ(std::count(csv.begin(), csv.end(), '\n'), 9);
  EXPECT_EQ(csv.substr(0, csv.find('\n')), "character,degree,C0,C1,C2,C3,C4,C5,C6,C7");
  const auto text = table_to_text(b.G, b.cl, b.t);
  EXPECT_NE(text.find("GL2(3): order 48, 8 classes"), std::string::npos);
  EXPECT_THROW(cyclo_from_json(nlohmann::json{{"conductor", 3}, {"terms", {{5, 1}}}}), InvalidInput);
}
