#pragma once

#include <fstream>
#include <optional>
#include <sstream>
#include <string>

#include <json.hpp>

#include "fsind/rootdata/datum.hpp"
#include "fsind/rootdata/sign.hpp"

namespace fsind::rootdata {

inline constexpr const char* kDatumSchema = "fsind-rootdatum/1";

/// Contents of a root-datum file (see docs/rootdatum-format.md).
struct DatumFile {
  RootDatum datum;
  IntMatrix F;
  std::optional<Int> q;
};

namespace detail {

inline IntVector read_vector(const nlohmann::json& j, const std::string& what) {
  require(j.is_array(), what + ": expected an array of integers");
  IntVector v;
  for (const auto& x : j) {
    require(x.is_number_integer(), what + ": expected integers");
    v.emplace_back(x.get<long long>());
  }
  return v;
}

inline nlohmann::ordered_json write_vector(const IntVector& v) {
  nlohmann::ordered_json j = nlohmann::ordered_json::array();
  for (const auto& x : v) j.push_back(x.convert_to<long long>());
  return j;
}

} // namespace detail

inline DatumFile parse_datum(const nlohmann::json& j) {
  require(j.is_object(), "root datum: top level must be an object");
  if (j.contains("schema"))
    require(j["schema"] == kDatumSchema, "root datum: unsupported schema " + j["schema"].dump());
  DatumFile f;
  f.datum.name = j.value("name", std::string("datum"));
  require(j.contains("rank") && j["rank"].is_number_unsigned(), "root datum: missing 'rank'");
  f.datum.rank = j["rank"].get<std::size_t>();
  require(j.contains("roots") && j.contains("coroots") && j.contains("simple"),
          "root datum: 'roots', 'coroots' and 'simple' are required");
  for (const auto& r : j["roots"]) f.datum.roots.push_back(detail::read_vector(r, "roots"));
  for (const auto& r : j["coroots"]) f.datum.coroots.push_back(detail::read_vector(r, "coroots"));
  for (const auto& s : j["simple"]) {
    require(s.is_number_unsigned(), "simple: expected root indices");
    f.datum.simple.push_back(s.get<std::size_t>());
  }
  if (j.contains("frobenius")) {
    const auto& m = j["frobenius"];
    require(m.is_array() && m.size() == f.datum.rank, "frobenius: expected a rank x rank matrix");
    f.F = IntMatrix(f.datum.rank, f.datum.rank);
    for (std::size_t i = 0; i < f.datum.rank; ++i) {
      auto row = detail::read_vector(m[i], "frobenius");
      require(row.size() == f.datum.rank, "frobenius: expected a rank x rank matrix");
      for (std::size_t c = 0; c < row.size(); ++c) f.F(i, c) = row[c];
    }
  } else {
    f.F = IntMatrix::identity(f.datum.rank);
  }
  if (j.contains("q")) {
    require(j["q"].is_number_unsigned(), "q: expected a positive integer");
    f.q = Int(j["q"].get<unsigned long long>());
  }
  return f;
}

inline DatumFile read_datum_file(const std::string& path) {
  std::ifstream in(path);
  require(in.good(), "cannot open root datum file '" + path + "'");
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::parse_error& e) {
    throw InvalidInput("root datum file '" + path + "': " + e.what());
  }
  return parse_datum(j);
}

inline nlohmann::ordered_json datum_to_json(const RootDatum& rd, const IntMatrix& F, const std::optional<Int>& q) {
  nlohmann::ordered_json j;
  j["schema"] = kDatumSchema;
  j["name"] = rd.name;
  j["rank"] = rd.rank;
  j["roots"] = nlohmann::ordered_json::array();
  for (const auto& r : rd.roots) j["roots"].push_back(detail::write_vector(r));
  j["coroots"] = nlohmann::ordered_json::array();
  for (const auto& r : rd.coroots) j["coroots"].push_back(detail::write_vector(r));
  j["simple"] = rd.simple;
  j["frobenius"] = nlohmann::ordered_json::array();
  for (std::size_t i = 0; i < F.rows(); ++i) j["frobenius"].push_back(detail::write_vector(F.row(i)));
  if (q) j["q"] = q->convert_to<unsigned long long>();
  return j;
}

inline nlohmann::ordered_json group_to_json(const FinAbGroup& g) {
  nlohmann::ordered_json j;
  j["rank"] = g.rank;
  j["invariant_factors"] = detail::write_vector(g.invariant_factors);
  j["text"] = g.to_string();
  return j;
}

inline nlohmann::ordered_json sign_report_to_json(const SignReport& r) {
  nlohmann::ordered_json j;
  j["datum"] = r.datum;
  j["q"] = r.q.convert_to<unsigned long long>();
  j["lambda"] = detail::write_vector(r.lambda);
  j["epsilon_class"] = detail::write_vector(r.epsilon_class);
  j["component_group"] = group_to_json(r.component_group);
  j["coinvariants"] = group_to_json(r.coinvariants);
  j["conditions"] = {{"a", r.conditions.a}, {"b", r.conditions.b}, {"c", r.conditions.c}, {"d", r.conditions.d}};
  j["s_fixed"] = r.s_fixed;
  j["t_is_epsilon"] = r.t_is_epsilon;
  j["tbar_trivial"] = r.tbar_trivial;
  j["cyclic_criterion"] = r.cyclic ? nlohmann::ordered_json(*r.cyclic) : nlohmann::ordered_json(nullptr);
  j["verdict"] = to_string(r.verdict);
  return j;
}

inline std::string sign_report_to_text(const SignReport& r) {
  std::ostringstream out;
  auto yes = [](bool b) { return b ? "true" : "false"; };
  auto vec = [](const IntVector& v) {
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + v[i].str();
    return s + ")";
  };
  out << "datum          " << r.datum << "\n";
  out << "q              " << r.q << "\n";
  out << "lambda         " << vec(r.lambda) << "\n";
  out << "epsilon class  " << vec(r.epsilon_class) << " mod 2\n";
  out << "Z/Z0           " << r.component_group << "\n";
  out << "(Z/Z0)_sigma   " << r.coinvariants << "\n";
  out << "conditions     a=" << yes(r.conditions.a) << " b=" << yes(r.conditions.b) << " c=" << yes(r.conditions.c) << " d=" << yes(r.conditions.d) << "\n";
  out << "s fixed        " << yes(r.s_fixed) << "\n";
  out << "t = epsilon    " << yes(r.t_is_epsilon) << "\n";
  out << "tbar trivial   " << yes(r.tbar_trivial) << "\n";
  out << "cyclic test    " << (r.cyclic ? yes(*r.cyclic) : "n/a") << "\n";
  out << "verdict        " << to_string(r.verdict) << "\n";
  return out.str();
}

} // namespace fsind::rootdata
