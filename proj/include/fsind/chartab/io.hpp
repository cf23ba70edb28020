#pragma once

#include <algorithm>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "fsind/chartab/dixon.hpp"

namespace fsind::chartab {

inline constexpr const char* kTableSchema = "fsind-chartable/1";

/// {"conductor": N, "terms": [[k, c], ...], "text": "..."} for sum c * E(N)^k.
inline nlohmann::ordered_json cyclo_to_json(const CycloZ& z) {
  nlohmann::ordered_json j;
  j["conductor"] = z.conductor();
  j["terms"] = nlohmann::ordered_json::array();
  for (const auto& [k, c] : z.terms()) j["terms"].push_back({k, c});
  j["text"] = z.to_string();
  return j;
}

inline CycloZ cyclo_from_json(const nlohmann::json& j) {
  require(j.is_object() && j.contains("conductor") && j.contains("terms"), "cyclotomic value: expected conductor and terms");
  const long N = j.at("conductor").get<long>();
  require(N >= 1, "cyclotomic value: conductor must be positive");
  std::vector<std::int64_t> v(N, 0);
  for (const auto& t : j.at("terms")) {
    require(t.is_array() && t.size() == 2, "cyclotomic value: each term is [exponent, coefficient]");
    const long k = t[0].get<long>();
    require(k >= 0 && k < N, "cyclotomic value: exponent out of range");
    v[k] += t[1].get<std::int64_t>();
  }
  return CycloZ::from_dense(N, std::move(v));
}

inline std::string matrix_text(const FiniteMatrixGroup& G, Index g) {
  const auto& F = G.field();
  const auto& m = G.element(g);
  return "[[" + F.to_string(m.a()) + "," + F.to_string(m.b()) + "],[" + F.to_string(m.c()) + "," + F.to_string(m.d()) + "]]";
}

inline nlohmann::ordered_json table_to_json(const FiniteMatrixGroup& G, const ConjClassData& cl, const CharacterTable& t) {
  nlohmann::ordered_json j;
  j["schema"] = kTableSchema;
  j["group"] = t.group;
  j["family"] = grp::to_string(G.family());
  j["q"] = G.q();
  j["order"] = t.group_order;
  j["exponent"] = t.exponent;
  j["classes"] = nlohmann::ordered_json::array();
  for (std::size_t c = 0; c < cl.size(); ++c)
    j["classes"].push_back({{"index", c},
                            {"size", cl.class_sizes[c]},
                            {"element_order", cl.element_orders[c]},
                            {"representative", matrix_text(G, cl.class_reps[c])},
                            {"square_class", cl.square_class[c]},
                            {"inverse_class", cl.inverse_class[c]}});
  j["characters"] = nlohmann::ordered_json::array();
  for (std::size_t i = 0; i < t.size(); ++i) {
    nlohmann::ordered_json row;
    row["index"] = i;
    row["degree"] = t.degrees[i];
    row["values"] = nlohmann::ordered_json::array();
    for (std::size_t c = 0; c < cl.size(); ++c) row["values"].push_back(cyclo_to_json(t(i, c)));
    j["characters"].push_back(std::move(row));
  }
  return j;
}

/// Header "character,degree,C0,...", one row per irreducible; values in E(N)^k notation.
inline std::string table_to_csv(const ConjClassData& cl, const CharacterTable& t) {
  std::ostringstream out;
  out << "character,degree";
  for (std::size_t c = 0; c < cl.size(); ++c) out << ",C" << c;
  out << "\n";
  for (std::size_t i = 0; i < t.size(); ++i) {
    out << "X" << i << "," << t.degrees[i];
    for (std::size_t c = 0; c < cl.size(); ++c) out << "," << t(i, c).to_string();
    out << "\n";
  }
  return out.str();
}

inline std::string table_to_text(const FiniteMatrixGroup& G, const ConjClassData& cl, const CharacterTable& t) {
  std::vector<std::vector<std::string>> cells;
  std::vector<std::string> head{"", "size"}, orders{"", "order"};
  for (std::size_t c = 0; c < cl.size(); ++c) {
    head.push_back(std::to_string(cl.class_sizes[c]));
    orders.push_back(std::to_string(cl.element_orders[c]));
  }
  head[0] = "class";
  std::vector<std::string> idx{"", ""};
  for (std::size_t c = 0; c < cl.size(); ++c) idx.push_back("C" + std::to_string(c));
  cells.push_back(idx);
  cells.push_back(head);
  cells.push_back(orders);
  for (std::size_t i = 0; i < t.size(); ++i) {
    std::vector<std::string> row{"X" + std::to_string(i), std::to_string(t.degrees[i])};
    for (std::size_t c = 0; c < cl.size(); ++c) row.push_back(t(i, c).to_string());
    cells.push_back(std::move(row));
  }
  std::vector<std::size_t> width(cells[0].size(), 0);
  for (const auto& r : cells)
    for (std::size_t c = 0; c < r.size(); ++c) width[c] = std::max(width[c], r[c].size());
  std::ostringstream out;
  out << t.group << ": order " << t.group_order << ", " << cl.size() << " classes, values in Q(E(" << t.exponent << "))\n";
  for (std::size_t c = 0; c < cl.size(); ++c) out << "  C" << c << " = " << matrix_text(G, cl.class_reps[c]) << "\n";
  for (const auto& r : cells) {
    for (std::size_t c = 0; c < r.size(); ++c) {
      if (c) out << "  ";
      out << std::string(width[c] - r[c].size(), ' ') << r[c];
    }
    out << "\n";
  }
  return out.str();
}

} // namespace fsind::chartab
