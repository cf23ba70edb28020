// fsind: root-datum sign analysis, character tables and sign verification.

#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "fsind/chartab.hpp"
#include "fsind/grp.hpp"
#include "fsind/rootdata.hpp"
#include "fsind/verify.hpp"

namespace {

using namespace fsind;

enum Exit { kOk = 0, kMismatch = 1, kError = 2, kCap = 3 };

bool wants_json(int argc, char** argv) {
  for (int i = 1; i < argc; ++i) {
    const std::string a = argv[i];
    if (a == "--format=json" || (a == "--format" && i + 1 < argc && std::string(argv[i + 1]) == "json")) return true;
  }
  return false;
}

int report_error(const std::string& kind, const std::string& message, bool json, int code) {
  if (json) {
    nlohmann::ordered_json j;
    j["error"] = {{"type", kind}, {"message", message}};
    std::cout << j.dump(2) << "\n";
  } else {
    std::cerr << "fsind: " << kind << ": " << message << "\n";
  }
  return code;
}

int cmd_analyze(const std::string& datum_file, const std::string& catalog_name, long q_opt, const std::string& format) {
  rootdata::RootDatum rd;
  rootdata::IntMatrix F;
  std::optional<rootdata::Int> q;
  if (!datum_file.empty()) {
    auto file = rootdata::read_datum_file(datum_file);
    rd = std::move(file.datum);
    F = std::move(file.F);
    q = file.q;
  } else {
    auto e = rootdata::catalog_entry(catalog_name);
    rd = std::move(e.datum);
    F = std::move(e.F);
  }
  if (q_opt > 0) q = rootdata::Int(q_opt);
  require(q.has_value(), "analyze: q is required (give --q or a 'q' field in the datum file)");
  const auto fr = rootdata::FrobeniusAction::with_matrix(F, *q);
  const auto rep = rootdata::sign_report(rd, fr);
  if (format == "json") std::cout << rootdata::sign_report_to_json(rep).dump(2) << "\n";
  else std::cout << rootdata::sign_report_to_text(rep);
  return kOk;
}

int cmd_chartable(const std::string& group, long q, const std::string& format, std::uint64_t seed, std::size_t cap) {
  const auto G = grp::build_group(grp::parse_family(group), q, cap);
  const auto cl = grp::conjugacy_classes(G);
  const auto t = chartab::character_table(G, cl, seed);
  const auto defect = chartab::orthogonality_defect(t, cl);
  ensure(defect.empty(), "character table of " + G.name() + ": " + defect);
  if (format == "json") std::cout << chartab::table_to_json(G, cl, t).dump(2) << "\n";
  else if (format == "csv") std::cout << chartab::table_to_csv(cl, t);
  else std::cout << chartab::table_to_text(G, cl, t);
  return kOk;
}

int cmd_verify(const std::string& group, const std::vector<long>& qs, const std::string& route, const std::string& format,
               std::uint64_t seed, std::size_t cap) {
  verify::VerifyOptions o;
  if (group != "all") o.families = {grp::parse_family(group)};
  if (!qs.empty()) o.qs = qs;
  o.route = verify::parse_route(route);
  o.seed = seed;
  o.cap = cap;
  for (long q : o.qs) require(grp::Fq::factor(q).first > 0, "verify: q = " + std::to_string(q) + " is not a prime power");
  const auto rep = verify::run_verification(o);
  if (format == "json") std::cout << verify::report_to_json(rep).dump(2) << "\n";
  else if (format == "csv") std::cout << verify::report_to_csv(rep);
  else std::cout << verify::report_to_text(rep);
  return rep.ok() ? kOk : kMismatch;
}

int cmd_catalog(const std::string& format) {
  const auto entries = rootdata::catalog();
  if (format == "json") {
    nlohmann::ordered_json j;
    j["root_data"] = nlohmann::ordered_json::array();
    for (const auto& e : entries) j["root_data"].push_back({{"name", e.name}, {"rank", e.datum.rank}, {"roots", e.datum.roots.size()}});
    j["groups"] = nlohmann::ordered_json::array();
    for (const char* fam : {"sl2", "gl2"}) j["groups"].push_back({{"family", fam}, {"q", verify::default_catalog_q()}});
    std::cout << j.dump(2) << "\n";
    return kOk;
  }
  std::cout << "root data (name, rank, number of roots):\n";
  for (const auto& e : entries) std::cout << "  " << e.name << "  " << e.datum.rank << "  " << e.datum.roots.size() << "\n";
  std::cout << "groups: sl2, gl2 over q in {";
  const auto& qs = verify::default_catalog_q();
  for (std::size_t i = 0; i < qs.size(); ++i) std::cout << (i ? ", " : "") << qs[i];
  std::cout << "}\n";
  return kOk;
}

} // namespace

int main(int argc, char** argv) {
  const bool json_errors = wants_json(argc, argv);
  CLI::App app{"Frobenius-Schur signs of generic self-dual representations of finite reductive groups"};
  app.require_subcommand(1);

  std::size_t cap = 0;
  std::uint64_t seed = 0;

  std::string datum_file, catalog_name, analyze_format = "text";
  long analyze_q = 0;
  auto* analyze = app.add_subcommand("analyze", "Sign report for a root datum with Frobenius");
  auto* datum_opt = analyze->add_option("--datum", datum_file, "Root-datum JSON file")->check(CLI::ExistingFile);
  analyze->add_option("--catalog", catalog_name, "Built-in root datum name (see 'catalog')")->excludes(datum_opt);
  analyze->add_option("--q", analyze_q, "Field size q (overrides the file)")->check(CLI::PositiveNumber);
  analyze->add_option("--format", analyze_format, "Output format")->check(CLI::IsMember({"json", "text"}));

  std::string group, table_format = "text";
  long table_q = 0;
  auto* chartable = app.add_subcommand("chartable", "Exact character table of SL2(F_q) or GL2(F_q)");
  chartable->add_option("--group", group, "Group family")->required()->check(CLI::IsMember({"sl2", "gl2"}));
  chartable->add_option("--q", table_q, "Field size q")->required()->check(CLI::PositiveNumber);
  chartable->add_option("--format", table_format, "Output format")->check(CLI::IsMember({"json", "csv", "text"}));
  chartable->add_option("--seed", seed, "Seed for the class-matrix combination");
  chartable->add_option("--cap", cap, "Enumeration cap (default FSIND_CAP or 100000)");

  std::string verify_group = "all", route = "all", verify_format = "text";
  std::vector<long> verify_q;
  auto* verify_cmd = app.add_subcommand("verify", "Compare predicted signs against indicators");
  verify_cmd->add_option("--group", verify_group, "Group family")->check(CLI::IsMember({"sl2", "gl2", "all"}));
  verify_cmd->add_option("--q", verify_q, "Field sizes (repeatable; default catalog)")->check(CLI::PositiveNumber);
  verify_cmd->add_option("--route", route, "Prediction route")->check(CLI::IsMember({"direct", "embedding", "ps", "all"}));
  verify_cmd->add_option("--format", verify_format, "Output format")->check(CLI::IsMember({"json", "csv", "text"}));
  verify_cmd->add_option("--seed", seed, "Seed for the class-matrix combination");
  verify_cmd->add_option("--cap", cap, "Enumeration cap (default FSIND_CAP or 100000)");

  std::string catalog_format = "text";
  auto* catalog = app.add_subcommand("catalog", "List built-in root data and groups");
  catalog->add_option("--format", catalog_format, "Output format")->check(CLI::IsMember({"json", "text"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    if (json_errors) return report_error("usage", e.what(), true, kError);
    return app.exit(e);
  }

  try {
    if (cap == 0) cap = verify::cap_from_env();
    if (*analyze) {
      if (datum_file.empty() && catalog_name.empty()) throw InvalidInput("analyze: give --datum <file> or --catalog <name>");
      return cmd_analyze(datum_file, catalog_name, analyze_q, analyze_format);
    }
    if (*chartable) return cmd_chartable(group, table_q, table_format, seed, cap);
    if (*verify_cmd) return cmd_verify(verify_group, verify_q, route, verify_format, seed, cap);
    if (*catalog) return cmd_catalog(catalog_format);
  } catch (const CapExceeded& e) {
    return report_error("cap_exceeded", e.what(), json_errors, kCap);
  } catch (const InvalidInput& e) {
    return report_error("invalid_input", e.what(), json_errors, kError);
  } catch (const Error& e) {
    return report_error("internal", e.what(), json_errors, kError);
  }
  return kError;
}
