#pragma once

#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "fsind/verify/pipeline.hpp"

namespace fsind::verify {

inline constexpr const char* kReportSchema = "fsind-verify/1";

inline const std::vector<long>& default_catalog_q() {
  static const std::vector<long> qs{2, 3, 4, 5, 7, 8, 9, 11, 13};
  return qs;
}

enum class RouteSelection { Direct, Embedding, PrincipalSeries, All };

inline RouteSelection parse_route(const std::string& s) {
  if (s == "direct") return RouteSelection::Direct;
  if (s == "embedding") return RouteSelection::Embedding;
  if (s == "ps") return RouteSelection::PrincipalSeries;
  if (s == "all") return RouteSelection::All;
  throw InvalidInput("unknown route '" + s + "' (expected direct, embedding, ps or all)");
}

inline const char* to_string(RouteSelection r) {
  switch (r) {
  case RouteSelection::Direct: return "direct";
  case RouteSelection::Embedding: return "embedding";
  case RouteSelection::PrincipalSeries: return "ps";
  case RouteSelection::All: return "all";
  }
  return "?";
}

struct VerifyOptions {
  std::vector<Family> families{Family::SL2, Family::GL2};
  std::vector<long> qs = default_catalog_q();
  RouteSelection route = RouteSelection::All;
  std::uint64_t seed = 0;
  std::size_t cap = grp::kDefaultCap;
};

struct VerifyReport {
  VerifyOptions options;
  std::vector<VerificationRecord> records;
  std::vector<Skip> skips;
  std::vector<Counterexample> counterexamples;

  std::size_t asserted_failures() const {
    std::size_t n = 0;
    for (const auto& r : records) n += r.failed();
    for (const auto& c : counterexamples) n += c.asserted;
    return n;
  }
  bool ok() const { return asserted_failures() == 0; }
};

/// Runs the selected routes over families x q; cells above the cap become skips.
inline VerifyReport run_verification(const VerifyOptions& o) {
  VerifyReport rep{o, {}, {}, {}};
  CellCache cache(o.seed, o.cap);
  auto wants = [&](RouteSelection r) { return o.route == RouteSelection::All || o.route == r; };
  auto has = [&](Family f) { return std::find(o.families.begin(), o.families.end(), f) != o.families.end(); };
  auto absorb = [&](RouteResult r) {
    for (auto& x : r.records) rep.records.push_back(std::move(x));
    for (auto& x : r.skips) rep.skips.push_back(std::move(x));
  };
  auto guarded = [&](const std::string& group, long q, Route route, auto&& run) {
    try {
      absorb(run());
    } catch (const CapExceeded& e) {
      rep.skips.push_back({group, q, route, e.what()});
    }
  };
  auto name = [](Family f, long q) { return std::string(f == Family::SL2 ? "SL2" : "GL2") + "(" + std::to_string(q) + ")"; };

  std::vector<VerificationRecord> direct;
  if (wants(RouteSelection::Direct))
    for (Family f : o.families)
      for (long q : o.qs)
        guarded(name(f, q), q, Route::DirectEpsilon, [&] {
          auto r = run_direct(cache, f, q);
          direct.insert(direct.end(), r.records.begin(), r.records.end());
          return r;
        });
  if (wants(RouteSelection::Embedding) && has(Family::SL2))
    for (long q : o.qs) guarded(name(Family::SL2, q), q, Route::RegularEmbedding, [&] { return run_embedding(cache, q); });
  if (wants(RouteSelection::PrincipalSeries))
    for (Family f : o.families)
      for (long q : o.qs) guarded(name(f, q), q, Route::PrincipalSeries, [&] { return run_principal_series(cache, f, q); });
  rep.counterexamples = find_counterexamples(direct);
  return rep;
}

namespace detail {

template <class T>
nlohmann::ordered_json opt(const std::optional<T>& v) {
  return v ? nlohmann::ordered_json(*v) : nlohmann::ordered_json(nullptr);
}

template <class T>
std::string opt_text(const std::optional<T>& v) {
  if (!v) return "";
  if constexpr (std::is_same_v<T, bool>) return *v ? "true" : "false";
  else if constexpr (std::is_same_v<T, std::string>) return *v;
  else return std::to_string(*v);
}

inline std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char c : s) q += c == '"' ? std::string("\"\"") : std::string(1, c);
  return q + "\"";
}

} // namespace detail

inline nlohmann::ordered_json record_to_json(const VerificationRecord& r) {
  nlohmann::ordered_json j;
  j["group"] = r.group;
  j["family"] = r.family;
  j["q"] = r.q;
  j["character"] = r.character;
  j["degree"] = r.degree;
  j["self_dual"] = r.self_dual;
  j["generic"] = r.generic;
  j["sgn_oracle"] = r.sgn_oracle;
  j["sgn_predicted"] = detail::opt(r.sgn_predicted);
  j["route"] = chartab::to_string(r.route);
  j["match"] = detail::opt(r.match);
  j["asserted"] = r.asserted;
  j["choice_independent"] = detail::opt(r.choice_independent);
  j["omega_epsilon"] = detail::opt(r.omega_epsilon);
  j["verdict"] = detail::opt(r.verdict);
  j["detail"] = r.detail;
  return j;
}

inline nlohmann::ordered_json report_to_json(const VerifyReport& rep) {
  nlohmann::ordered_json j;
  j["schema"] = kReportSchema;
  nlohmann::ordered_json opts;
  opts["families"] = nlohmann::ordered_json::array();
  for (Family f : rep.options.families) opts["families"].push_back(grp::to_string(f));
  opts["q"] = rep.options.qs;
  opts["route"] = to_string(rep.options.route);
  opts["seed"] = rep.options.seed;
  opts["cap"] = rep.options.cap;
  j["options"] = opts;
  std::size_t predicted = 0, matched = 0;
  for (const auto& r : rep.records) {
    predicted += r.sgn_predicted.has_value();
    matched += r.match.value_or(false);
  }
  j["summary"] = {{"records", rep.records.size()},     {"predicted", predicted},
                  {"matched", matched},                {"asserted_failures", rep.asserted_failures()},
                  {"skips", rep.skips.size()},         {"counterexamples", rep.counterexamples.size()}};
  j["records"] = nlohmann::ordered_json::array();
  for (const auto& r : rep.records) j["records"].push_back(record_to_json(r));
  j["skips"] = nlohmann::ordered_json::array();
  for (const auto& s : rep.skips) j["skips"].push_back({{"group", s.group}, {"q", s.q}, {"route", chartab::to_string(s.route)}, {"reason", s.reason}});
  j["counterexamples"] = nlohmann::ordered_json::array();
  for (const auto& c : rep.counterexamples)
    j["counterexamples"].push_back({{"group", c.group},
                                    {"q", c.q},
                                    {"character", c.character},
                                    {"degree", c.degree},
                                    {"sgn_oracle", c.sgn_oracle},
                                    {"omega_epsilon", c.omega_epsilon},
                                    {"verdict", c.verdict},
                                    {"asserted", c.asserted}});
  return j;
}

inline std::string report_to_csv(const VerifyReport& rep) {
  std::ostringstream out;
  out << "group,family,q,character,degree,self_dual,generic,sgn_oracle,sgn_predicted,route,match,asserted,choice_independent,omega_epsilon,verdict,detail\n";
  for (const auto& r : rep.records)
    out << r.group << ',' << r.family << ',' << r.q << ',' << r.character << ',' << r.degree << ',' << (r.self_dual ? "true" : "false") << ','
        << (r.generic ? "true" : "false") << ',' << r.sgn_oracle << ',' << detail::opt_text(r.sgn_predicted) << ',' << chartab::to_string(r.route)
        << ',' << detail::opt_text(r.match) << ',' << (r.asserted ? "true" : "false") << ',' << detail::opt_text(r.choice_independent) << ','
        << detail::opt_text(r.omega_epsilon) << ',' << detail::opt_text(r.verdict) << ',' << detail::csv_field(r.detail) << '\n';
  return out.str();
}

inline std::string report_to_text(const VerifyReport& rep) {
  std::ostringstream out;
  auto sgn = [](int s) { return s > 0 ? std::string("+1") : s < 0 ? std::string("-1") : std::string("0"); };
  for (const auto& r : rep.records) {
    out << r.group << " chi" << r.character << " (deg " << r.degree << ") " << chartab::to_string(r.route) << ": oracle " << sgn(r.sgn_oracle);
    if (r.sgn_predicted) out << ", predicted " << sgn(*r.sgn_predicted) << (*r.match ? " ok" : " MISMATCH");
    else out << ", no prediction";
    if (r.choice_independent && !*r.choice_independent) out << " CHOICE-DEPENDENT";
    if (r.verdict) out << " [" << *r.verdict << "]";
    if (!r.detail.empty()) out << " {" << r.detail << "}";
    out << "\n";
  }
  for (const auto& s : rep.skips) out << "skip " << s.group << " " << chartab::to_string(s.route) << ": " << s.reason << "\n";
  for (const auto& c : rep.counterexamples)
    out << "epsilon misses " << c.group << " chi" << c.character << ": oracle " << sgn(c.sgn_oracle) << ", omega(epsilon) " << sgn(c.omega_epsilon) << " ["
        << c.verdict << (c.asserted ? ", asserted" : ", reported only") << "]\n";
  out << rep.records.size() << " records, " << rep.asserted_failures() << " asserted failures\n";
  return out.str();
}

} // namespace fsind::verify
