#include <gtest/gtest.h>

#include <set>
#include <sstream>

#include "fsind/verify.hpp"

using namespace fsind;
using namespace fsind::verify;
using grp::Family;

namespace {

CellCache& cache() {
  static CellCache c(0, grp::kDefaultCap);
  return c;
}

// Generic self-dual rows, from the indicator by squaring and the Whittaker multiplicity.
std::set<std::size_t> generic_self_dual(Family f, long q) {
  const auto& c = cache().get(f, q);
  const auto psi = chartab::nondegenerate_psi(c.G);
  std::set<std::size_t> out;
  for (std::size_t i = 0; i < c.t.size(); ++i)
    if (c.oracle[i] != 0 && chartab::genericity(c.t, c.cl, c.G, i, psi) > 0) out.insert(i);
  return out;
}

std::set<std::size_t> characters_of(const std::vector<VerificationRecord>& rs) {
  std::set<std::size_t> s;
  for (const auto& r : rs) s.insert(r.character);
  return s;
}

VerifyOptions small_options(std::uint64_t seed) {
  VerifyOptions o;
  o.qs = {2, 3, 5};
  o.seed = seed;
  return o;
}

} // namespace

TEST(Direct, SL2AtFiveMatchesEverywhere) {
  const auto res = run_direct(cache(), Family::SL2, 5);
  EXPECT_EQ(characters_of(res.records), generic_self_dual(Family::SL2, 5));
  for (const auto& r : res.records) {
    EXPECT_EQ(r.verdict, "DIRECT_S");
    EXPECT_TRUE(r.asserted);
    ASSERT_TRUE(r.match.has_value());
    EXPECT_TRUE(*r.match) << "chi" << r.character;
    EXPECT_EQ(r.sgn_predicted, r.omega_epsilon);
  }
}

TEST(Direct, SL2AtSevenIsNotApplicable) {
  const auto res = run_direct(cache(), Family::SL2, 7);
  ASSERT_FALSE(res.records.empty());
  for (const auto& r : res.records) {
    EXPECT_EQ(r.route, chartab::Route::NotApplicable);
    EXPECT_EQ(r.verdict, "UNDETERMINED");
    EXPECT_FALSE(r.sgn_predicted.has_value());
    EXPECT_FALSE(r.asserted);
    EXPECT_FALSE(r.failed());
  }
}

TEST(Direct, GL2SignsArePlusOne) {
  for (long q : {3L, 4L, 5L}) {
    const auto res = run_direct(cache(), Family::GL2, q);
    EXPECT_EQ(characters_of(res.records), generic_self_dual(Family::GL2, q));
    for (const auto& r : res.records) {
      EXPECT_EQ(r.sgn_oracle, 1) << r.group << " chi" << r.character;
      EXPECT_TRUE(r.match.value_or(false)) << r.group << " chi" << r.character;
      EXPECT_TRUE(r.choice_independent.value_or(true));
    }
  }
}

TEST(Direct, SignIsOracleIndicator) {
  const auto& c = cache().get(Family::SL2, 5);
  for (const auto& r : run_direct(cache(), Family::SL2, 5).records) {
    EXPECT_EQ(r.sgn_oracle, c.oracle[r.character]);
    EXPECT_EQ(r.sgn_oracle, chartab::fs_indicator(c.t, c.cl, r.character));
    EXPECT_EQ(r.degree, c.t.degrees[r.character]);
  }
}

TEST(Embedding, MatchesAndIsChoiceIndependent) {
  for (long q : {2L, 3L, 4L, 5L, 7L}) {
    const auto res = run_embedding(cache(), q);
    EXPECT_EQ(characters_of(res.records), generic_self_dual(Family::SL2, q)) << "q=" << q;
    for (const auto& r : res.records) {
      EXPECT_EQ(r.route, chartab::Route::RegularEmbedding);
      EXPECT_TRUE(r.match.value_or(false)) << r.group << " chi" << r.character << " " << r.detail;
      EXPECT_TRUE(r.choice_independent.value_or(false)) << r.group << " chi" << r.character << " " << r.detail;
    }
  }
}

TEST(Embedding, CoversCasesWhereEpsilonIsUndetermined) {
  const auto res = run_embedding(cache(), 7);
  std::set<int> signs;
  for (const auto& r : res.records) signs.insert(r.sgn_oracle);
  EXPECT_EQ(signs, (std::set<int>{-1, 1}));
}

TEST(PrincipalSeries, SL2AtFiveOrderFourTheta) {
  const auto res = run_principal_series(cache(), Family::SL2, 5);
  ASSERT_EQ(res.records.size(), 1u);
  const auto& r = res.records[0];
  EXPECT_EQ(r.degree, 6u);
  EXPECT_TRUE(r.self_dual);
  EXPECT_TRUE(r.generic);
  EXPECT_TRUE(r.match.value_or(false));
  EXPECT_TRUE(r.choice_independent.value_or(false));
  const auto& c = cache().get(Family::SL2, 5);
  EXPECT_EQ(chartab::sign_of(chartab::central_character(c.t, c.cl, c.G, r.character, c.G.Z_pts()[1])), -1);
  EXPECT_EQ(r.sgn_oracle, -1);
}

TEST(PrincipalSeries, SmallFieldsGiveSkipsOnly) {
  for (auto [f, q] : {std::pair{Family::SL2, 3L}, std::pair{Family::GL2, 3L}}) {
    const auto res = run_principal_series(cache(), f, q);
    EXPECT_TRUE(res.records.empty());
    EXPECT_FALSE(res.skips.empty());
    for (const auto& s : res.skips) EXPECT_FALSE(s.reason.empty());
  }
}

TEST(PrincipalSeries, RecordsAreIrreduciblePrincipalSeries) {
  for (auto f : {Family::SL2, Family::GL2})
    for (long q : {5L, 7L}) {
      const auto& c = cache().get(f, q);
      for (const auto& r : run_principal_series(cache(), f, q).records) {
        EXPECT_EQ(r.degree, static_cast<std::size_t>(q + 1));
        EXPECT_TRUE(r.match.value_or(false)) << r.group << " chi" << r.character << " " << r.detail;
        EXPECT_EQ(r.sgn_oracle, c.oracle[r.character]);
      }
    }
}

TEST(Counterexamples, NoneForSL2WhenQIsOneModFour) {
  for (long q : {5L, 9L}) EXPECT_TRUE(find_counterexamples(run_direct(cache(), Family::SL2, q).records).empty()) << "q=" << q;
}

TEST(Counterexamples, GL2MissesAreReportedNotAsserted) {
  for (long q : {3L, 5L, 7L}) {
    for (const auto& c : find_counterexamples(run_direct(cache(), Family::GL2, q).records)) {
      EXPECT_FALSE(c.asserted);
      EXPECT_EQ(c.verdict, "VIA_R");
      EXPECT_NE(c.sgn_oracle, c.omega_epsilon);
    }
  }
}

TEST(Counterexamples, ListsEveryDisagreement) {
  const auto direct = run_direct(cache(), Family::SL2, 7).records;
  std::size_t expected = 0;
  for (const auto& r : direct) expected += r.omega_epsilon && *r.omega_epsilon != r.sgn_oracle;
  EXPECT_EQ(find_counterexamples(direct).size(), expected);
}

TEST(Record, FailureRequiresAssertion) {
  VerificationRecord r;
  r.sgn_oracle = 1;
  r.predict(-1);
  EXPECT_FALSE(r.failed());
  r.asserted = true;
  EXPECT_TRUE(r.failed());
  VerificationRecord s;
  s.sgn_oracle = 1;
  s.predict(1);
  s.asserted = true;
  s.choice_independent = false;
  EXPECT_TRUE(s.failed());
}

TEST(Report, OkIffNoAssertedFailure) {
  VerifyReport rep;
  EXPECT_TRUE(rep.ok());
  VerificationRecord r;
  r.sgn_oracle = -1;
  r.predict(1);
  rep.records.push_back(r);
  EXPECT_TRUE(rep.ok());
  rep.records.back().asserted = true;
  EXPECT_FALSE(rep.ok());
  EXPECT_EQ(rep.asserted_failures(), 1u);
}

TEST(Report, DeterministicForFixedSeed) {
  const auto a = report_to_json(run_verification(small_options(42))).dump();
  const auto b = report_to_json(run_verification(small_options(42))).dump();
  EXPECT_EQ(a, b);
}

TEST(Report, SignsDoNotDependOnSeed) {
  auto signs = [](std::uint64_t seed) {
    std::multiset<std::tuple<std::string, int, std::size_t, int>> s;
    for (const auto& r : run_verification(small_options(seed)).records)
      s.insert({r.group, static_cast<int>(r.route), r.degree, r.sgn_oracle});
    return s;
  };
  EXPECT_EQ(signs(1), signs(99));
}

TEST(Report, JsonAndCsvShape) {
  const auto rep = run_verification(small_options(0));
  EXPECT_TRUE(rep.ok());
  const auto j = report_to_json(rep);
  EXPECT_EQ(j["schema"], "fsind-verify/1");
  EXPECT_EQ(j["summary"]["records"], rep.records.size());
  EXPECT_EQ(j["records"].size(), rep.records.size());
  EXPECT_EQ(j["summary"]["asserted_failures"], 0);
  for (const auto& r : j["records"]) {
    EXPECT_TRUE(r["sgn_oracle"] == 1 || r["sgn_oracle"] == -1);
    EXPECT_TRUE(r["sgn_predicted"].is_null() || r["sgn_predicted"] == r["sgn_oracle"]);
  }
  const auto csv = report_to_csv(rep);
  std::istringstream in(csv);
  std::string header, line;
  std::getline(in, header);
  EXPECT_EQ(header.substr(0, 22), "group,family,q,charact");
  std::size_t rows = 0;
  while (std::getline(in, line)) ++rows;
  EXPECT_EQ(rows, rep.records.size());
}

TEST(Report, CapBecomesSkip) {
  VerifyOptions o;
  o.families = {Family::SL2};
  o.qs = {3, 7};
  o.route = RouteSelection::Direct;
  o.cap = 100;
  const auto rep = run_verification(o);
  ASSERT_EQ(rep.skips.size(), 1u);
  EXPECT_EQ(rep.skips[0].q, 7);
  EXPECT_FALSE(rep.records.empty());
}

TEST(Report, RouteParsing) {
  EXPECT_EQ(parse_route("ps"), RouteSelection::PrincipalSeries);
  EXPECT_STREQ(to_string(parse_route("embedding")), "embedding");
  EXPECT_THROW(parse_route("bogus"), InvalidInput);
}
