#pragma once

#include <cstdint>
#include <cstdlib>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "fsind/chartab.hpp"
#include "fsind/grp.hpp"
#include "fsind/rootdata.hpp"

namespace fsind::verify {

using chartab::CycloZ;
using chartab::Route;
using grp::Family;
using grp::FiniteMatrixGroup;
using grp::Index;

/// Everything computed once per (family, q).
struct Cell {
  FiniteMatrixGroup G;
  grp::ConjClassData cl;
  chartab::CharacterTable t;
  std::vector<chartab::CharacterAnalysis> chars;
  std::vector<grp::LinearCharacter> linear;
  std::vector<std::int64_t> square_counts;
  std::vector<int> oracle; // indicator from element squaring
};

inline Cell build_cell(Family f, long q, std::uint64_t seed, std::size_t cap) {
  auto G = grp::build_group(f, q, cap);
  auto cl = grp::conjugacy_classes(G);
  auto t = chartab::character_table(G, cl, seed);
  const auto defect = chartab::orthogonality_defect(t, cl);
  ensure(defect.empty(), "character table of " + G.name() + ": " + defect);
  Cell c{std::move(G), std::move(cl), std::move(t), {}, {}, {}, {}};
  c.chars = chartab::analyze_characters(c.G, c.cl, c.t);
  c.linear = grp::linear_characters(c.G, c.cl);
  c.square_counts = chartab::square_counts(c.G, c.cl);
  for (std::size_t i = 0; i < c.t.size(); ++i) c.oracle.push_back(chartab::fs_indicator_bruteforce(c.t, c.square_counts, i));
  return c;
}

class CellCache {
public:
  CellCache(std::uint64_t seed, std::size_t cap) : seed_(seed), cap_(cap) {}
  const Cell& get(Family f, long q) {
    auto& slot = cells_[{static_cast<int>(f), q}];
    if (!slot) slot = std::make_unique<Cell>(build_cell(f, q, seed_, cap_));
    return *slot;
  }
  std::uint64_t seed() const { return seed_; }
  std::size_t cap() const { return cap_; }

private:
  std::uint64_t seed_;
  std::size_t cap_;
  std::map<std::pair<int, long>, std::unique_ptr<Cell>> cells_;
};

/// Enumeration cap from FSIND_CAP, else the default.
inline std::size_t cap_from_env() {
  if (const char* s = std::getenv("FSIND_CAP")) {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(s, &end, 10);
    require(end && *end == '\0' && v > 0, std::string("FSIND_CAP: not a positive integer: ") + s);
    return static_cast<std::size_t>(v);
  }
  return grp::kDefaultCap;
}

struct VerificationRecord {
  std::string group;
  std::string family;
  long q = 0;
  std::size_t character = 0;
  std::size_t degree = 0;
  bool self_dual = false;
  bool generic = false;
  int sgn_oracle = 0;
  std::optional<int> sgn_predicted;
  Route route = Route::NotApplicable;
  std::optional<bool> match;
  /// The hypotheses of the statement under test hold, so a mismatch is a failure.
  bool asserted = false;
  /// Prediction identical across every valid auxiliary choice, and sgn(pi) = sgn(pi').
  std::optional<bool> choice_independent;
  std::optional<int> omega_epsilon;
  std::optional<std::string> verdict; // sign_report verdict (direct route)
  std::string detail;

  void predict(int s) {
    sgn_predicted = s;
    match = s == sgn_oracle;
  }
  bool failed() const { return asserted && ((match && !*match) || (choice_independent && !*choice_independent)); }
};

struct Skip {
  std::string group;
  long q = 0;
  Route route = Route::NotApplicable;
  std::string reason;
};

struct RouteResult {
  std::vector<VerificationRecord> records;
  std::vector<Skip> skips;
};

namespace detail {

inline VerificationRecord base_record(const Cell& c, std::size_t chi, Route route) {
  VerificationRecord r;
  r.group = c.G.name();
  r.family = grp::to_string(c.G.family());
  r.q = c.G.q();
  r.character = chi;
  r.degree = c.t.degrees[chi];
  r.self_dual = c.chars[chi].self_dual;
  r.generic = c.chars[chi].generic;
  r.sgn_oracle = c.oracle[chi];
  r.route = route;
  return r;
}

inline rootdata::RootDatum datum_of(Family f) { return f == Family::SL2 ? rootdata::special_linear(2) : rootdata::general_linear(2); }

/// Diagonal elements diag(a, b) with a = -b, i.e. alpha(s) = -1.
inline std::vector<Index> minus_one_on_root(const FiniteMatrixGroup& G) {
  const auto& F = G.field();
  std::vector<Index> out;
  for (Index s : G.T_pts())
    if (G.element(s).a() == F.neg(G.element(s).d())) out.push_back(s);
  return out;
}

inline Index swap_diagonal(const FiniteMatrixGroup& G, Index s) {
  const auto& m = G.element(s);
  return G.index_of(G.diag(m.d(), m.a()));
}

/// Index in G' of the same matrix.
inline Index transport(const FiniteMatrixGroup& from, const FiniteMatrixGroup& to, Index x) {
  return to.index_of(from.element(x));
}

inline int sign_value(const CycloZ& z) { return chartab::sign_of(z); }

inline std::string join(const std::vector<std::string>& parts, const std::string& sep) {
  std::string s;
  for (std::size_t i = 0; i < parts.size(); ++i) s += (i ? sep : "") + parts[i];
  return s;
}

} // namespace detail

/// Prediction omega(epsilon) (verdict DIRECT_S) or omega(r^2) (verdict VIA_R) against the indicator.
inline RouteResult run_direct(CellCache& cache, Family f, long q) {
  using namespace detail;
  const Cell& c = cache.get(f, q);
  const auto rd = datum_of(f);
  const auto fr = rootdata::FrobeniusAction::split(rd.rank, q);
  const auto rep = rootdata::sign_report(rd, fr);
  const Index eps = grp::epsilon_in_group(rd, fr, c.G);
  const auto rs = minus_one_on_root(c.G);
  RouteResult out;
  for (const auto& a : c.chars) {
    if (!a.self_dual || !a.generic) continue;
    auto r = base_record(c, a.index, Route::DirectEpsilon);
    r.omega_epsilon = sign_value(chartab::central_character(c.t, c.cl, c.G, a.index, eps));
    r.verdict = rootdata::to_string(rep.verdict);
    switch (rep.verdict) {
    case rootdata::Verdict::DirectS:
      r.asserted = true;
      r.predict(*r.omega_epsilon);
      r.detail = "element=epsilon";
      break;
    case rootdata::Verdict::ViaR: {
      ensure(!rs.empty(), "run_direct: no rational r with alpha(r) = -1 although tbar is trivial");
      std::set<int> values;
      for (Index x : rs) values.insert(sign_value(chartab::central_character(c.t, c.cl, c.G, a.index, c.G.mul(x, x))));
      r.asserted = true;
      r.choice_independent = values.size() == 1;
      r.predict(*values.begin());
      r.detail = "element=r^2 over " + std::to_string(rs.size()) + " choices of r";
      break;
    }
    case rootdata::Verdict::Undetermined:
      r.route = Route::NotApplicable;
      break;
    }
    out.records.push_back(std::move(r));
  }
  return out;
}

/// SL2(F_q) inside GL2(F_q): omega_{pi'}(s0'^2) nu(s0') over all valid (pi', nu, s0').
inline RouteResult run_embedding(CellCache& cache, long q) {
  using namespace detail;
  const Cell& S = cache.get(Family::SL2, q);
  const Cell& P = cache.get(Family::GL2, q);
  const auto s0s = minus_one_on_root(P.G);
  ensure(!s0s.empty(), "run_embedding: no s0' in T'(F_q) with alpha(s0') = -1");
  // Restriction: class of SL2 class representative inside GL2.
  std::vector<std::size_t> to_prime(S.cl.size());
  for (std::size_t c = 0; c < S.cl.size(); ++c) to_prime[c] = P.cl.class_of[transport(S.G, P.G, S.cl.class_reps[c])];
  RouteResult out;
  for (const auto& a : S.chars) {
    if (!a.self_dual || !a.generic) continue;
    auto r = base_record(S, a.index, Route::RegularEmbedding);
    r.asserted = true;
    std::set<int> predictions;
    bool consistent = true;
    std::vector<std::string> primes;
    for (std::size_t j = 0; j < P.t.size(); ++j) {
      chartab::ClassFunction res;
      for (std::size_t c = 0; c < S.cl.size(); ++c) res.push_back(P.t(j, to_prime[c]));
      const auto m = chartab::inner_product(S.cl, S.t.group_order, res, S.t.values[a.index]);
      if (m == 0) continue;
      if (m != 1) throw InternalError("run_embedding: restriction of GL2 character " + std::to_string(j) + " is not multiplicity free");
      if (!P.chars[j].generic) throw InternalError("run_embedding: extension " + std::to_string(j) + " of a generic character is not generic");
      std::vector<std::size_t> nus;
      for (std::size_t k = 0; k < P.linear.size(); ++k) {
        const bool trivial_on_G = std::all_of(to_prime.begin(), to_prime.end(), [&](std::size_t c) { return P.linear[k].value[c] == 0; });
        if (trivial_on_G && chartab::dualizes(P.t, P.cl, j, P.linear[k])) nus.push_back(k);
      }
      if (nus.empty()) throw InternalError("run_embedding: no nu with pi' = pi'^v nu^-1 for GL2 character " + std::to_string(j));
      for (std::size_t k : nus) {
        const auto& nu = P.linear[k];
        consistent = consistent && chartab::twisted_fs(P.t, P.cl, j, nu) == r.sgn_oracle;
        for (Index s0 : s0s) {
          const CycloZ w = chartab::central_character(P.t, P.cl, P.G, j, P.G.mul(s0, s0));
          predictions.insert(sign_value(w * chartab::linear_value(nu, P.cl.class_of[s0])));
        }
      }
      primes.push_back(std::to_string(j) + "(nu:" + std::to_string(nus.size()) + ")");
    }
    if (primes.empty()) throw InternalError("run_embedding: no GL2 character contains SL2 character " + std::to_string(a.index));
    r.choice_independent = consistent && predictions.size() == 1;
    r.predict(*predictions.begin());
    r.detail = "pi'=" + join(primes, ",") + "; s0' choices=" + std::to_string(s0s.size());
    out.records.push_back(std::move(r));
  }
  return out;
}

/// Principal series Ind_B theta with w-theta = theta^-1: theta'(s0'^2) nu(s0') against the indicator.
inline RouteResult run_principal_series(CellCache& cache, Family f, long q) {
  using namespace detail;
  const Cell& c = cache.get(f, q);
  const Cell& P = cache.get(Family::GL2, q);
  const auto& F = c.G.field();
  const long n = q - 1;
  RouteResult out;
  std::vector<std::pair<long, long>> thetas;
  if (f == Family::SL2)
    for (long j = 0; j < n; ++j) thetas.emplace_back(j, 0);
  else
    for (long j1 = 0; j1 < n; ++j1)
      for (long j2 = 0; j2 < n; ++j2) thetas.emplace_back(j1, j2);
  // theta(diag(a, b)) = zeta_n^(j1 log a + j2 log b); on SL2 this is zeta_n^(j log a).
  auto theta_at = [&](const FiniteMatrixGroup& G, std::pair<long, long> th, Index s) {
    const auto& m = G.element(s);
    return ((th.first * F.log(m.a()) + th.second * F.log(m.d())) % n + n) % n;
  };
  const auto s0s = minus_one_on_root(P.G);
  std::map<std::size_t, VerificationRecord> by_char;
  std::map<std::size_t, std::set<int>> predictions;
  std::map<std::size_t, std::vector<std::string>> labels;
  for (auto th : thetas) {
    const std::string label = f == Family::SL2 ? std::to_string(th.first) : "(" + std::to_string(th.first) + "," + std::to_string(th.second) + ")";
    bool inverted = true;
    for (Index s : c.G.T_pts()) inverted = inverted && (theta_at(c.G, th, s) + theta_at(c.G, th, swap_diagonal(c.G, s))) % n == 0;
    if (!inverted) continue;
    chartab::SubgroupCharacter infl{c.G.B_pts(), n, {}};
    for (Index b : c.G.B_pts()) infl.exponent.push_back(theta_at(c.G, th, c.G.index_of(c.G.diag(c.G.element(b).a(), c.G.element(b).d()))));
    const auto ind = chartab::induced_character(c.G, c.cl, infl);
    const auto norm = chartab::inner_product(c.cl, c.t.group_order, ind, ind);
    if (norm != 1) {
      out.skips.push_back({c.G.name(), q, Route::PrincipalSeries, "theta=" + label + ": Ind_B theta reducible (norm " + norm.str() + ")"});
      continue;
    }
    const auto mult = chartab::decompose(c.t, c.cl, ind);
    const std::size_t chi = static_cast<std::size_t>(std::find(mult.begin(), mult.end(), 1) - mult.begin());
    ensure(chi < mult.size(), "run_principal_series: irreducible induced character not found in the table");

    // Extensions theta' of theta to the diagonal torus of GL2.
    std::vector<std::pair<long, long>> extensions;
    for (long k1 = 0; k1 < n; ++k1)
      for (long k2 = 0; k2 < n; ++k2) {
        bool extends = true;
        for (Index s : c.G.T_pts()) extends = extends && theta_at(P.G, {k1, k2}, transport(c.G, P.G, s)) == theta_at(c.G, th, s);
        if (extends) extensions.emplace_back(k1, k2);
      }
    ensure(!extensions.empty(), "run_principal_series: theta has no extension to T'");
    std::set<int>& preds = predictions[chi];
    for (auto ext : extensions) {
      // mu = theta'^-1 (w theta')^-1 on T'(F_q), trivial on S(F_q), extended through det.
      std::vector<long> mu(P.G.order(), -1);
      for (Index s : P.G.T_pts()) mu[s] = ((-theta_at(P.G, ext, s) - theta_at(P.G, ext, swap_diagonal(P.G, s))) % n + n) % n;
      for (Index s : c.G.T_pts()) ensure(mu[transport(c.G, P.G, s)] == 0, "run_principal_series: mu is not trivial on S(F_q)");
      std::optional<std::size_t> nu_index;
      for (std::size_t k = 0; k < P.linear.size() && !nu_index; ++k) {
        const auto& nu = P.linear[k];
        const long o = static_cast<long>(nu.order);
        bool agrees = true;
        for (Index s : P.G.T_pts()) agrees = agrees && (static_cast<long>(nu.value[P.cl.class_of[s]]) * n - mu[s] * o) % (o * n) == 0;
        if (agrees) nu_index = k;
      }
      ensure(nu_index.has_value(), "run_principal_series: mu does not extend through det");
      const auto& nu = P.linear[*nu_index];
      for (Index s0 : s0s) {
        const CycloZ v = CycloZ::root(n, theta_at(P.G, ext, P.G.mul(s0, s0))) * chartab::linear_value(nu, P.cl.class_of[s0]);
        preds.insert(sign_value(v));
      }
    }
    if (!by_char.count(chi)) {
      auto r = base_record(c, chi, Route::PrincipalSeries);
      r.asserted = true;
      const int fs_ind = chartab::fs_indicator_bruteforce(c.t, c.square_counts, chi);
      ensure(fs_ind == r.sgn_oracle, "run_principal_series: indicator mismatch");
      if (c.G.Z_pts().size() > 1)
        r.detail = "omega(-I)=" + chartab::central_character(c.t, c.cl, c.G, chi, c.G.Z_pts()[1]).to_string() + "; ";
      by_char.emplace(chi, std::move(r));
    }
    labels[chi].push_back(label + "[" + std::to_string(extensions.size()) + " ext]");
  }
  for (auto& [chi, r] : by_char) {
    const auto& preds = predictions[chi];
    r.choice_independent = preds.size() == 1;
    r.predict(*preds.begin());
    r.detail += "theta=" + join(labels[chi], ",") + "; s0' choices=" + std::to_string(s0s.size());
    out.records.push_back(std::move(r));
  }
  if (out.records.empty() && out.skips.empty())
    out.skips.push_back({c.G.name(), q, Route::PrincipalSeries, "no theta with w-theta = theta^-1"});
  return out;
}

/// A generic self-dual character whose indicator differs from omega(epsilon).
struct Counterexample {
  std::string group;
  long q = 0;
  std::size_t character = 0;
  std::size_t degree = 0;
  int sgn_oracle = 0;
  int omega_epsilon = 0;
  std::string verdict;
  bool asserted = false; // epsilon is claimed to detect the sign here
};

/// Scans direct-route records; `asserted` is set where the verdict is DIRECT_S.
inline std::vector<Counterexample> find_counterexamples(const std::vector<VerificationRecord>& direct) {
  std::vector<Counterexample> out;
  for (const auto& r : direct) {
    if (!r.omega_epsilon || *r.omega_epsilon == r.sgn_oracle) continue;
    const std::string verdict = r.verdict.value_or("");
    out.push_back({r.group, r.q, r.character, r.degree, r.sgn_oracle, *r.omega_epsilon, verdict,
                   verdict == rootdata::to_string(rootdata::Verdict::DirectS)});
  }
  return out;
}

} // namespace fsind::verify
