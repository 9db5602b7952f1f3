#include "fano/theorems.hpp"

#include "json_util.hpp"

#include <iomanip>
#include <sstream>

namespace fano {

using nlohmann::json;
using detail::integer_json;

namespace {

json integers_json(const std::vector<BigInt>& values) {
  json out = json::array();
  for (const auto& v : values) out.push_back(integer_json(v));
  return out;
}

json search_json(const SearchResult& r) {
  json polys = json::array();
  for (const auto& f : r.polygons) {
    polys.push_back({{"vertices", detail::points_json(f.polygon.vertices())},
                     {"k", f.polygon.size()},
                     {"parameters", integers_json(f.parameters)}});
  }
  return {{"R", integer_json(r.order)},
          {"kmax", r.kmax},
          {"parameter_bound", r.parameter_bound},
          {"nodes", r.nodes},
          {"closures", r.closures},
          {"polygons", polys}};
}

json mod_json(const ModObstructionReport& m) {
  return {{"R", integer_json(m.order)},
          {"samples", m.samples},
          {"even_zero_sum_samples", m.even_zero_sum_samples},
          {"mod_R_failures", m.mod_r_failures},
          {"mod_R2_failures", m.mod_r2_failures},
          {"anticlockwise_failures", m.anticlockwise_failures},
          {"witnesses", m.witnesses},
          {"passed", m.passed()}};
}

json coefficients_json(const Thm19Coefficients& c) {
  return {{"A", integer_json(c.A)}, {"B", integer_json(c.B)}, {"C", integer_json(c.C)}, {"D", integer_json(c.D)},
          {"E", integer_json(c.E)}, {"F", integer_json(c.F)}, {"G", integer_json(c.G)}, {"H", integer_json(c.H)}};
}

json triple_json(const std::array<BigInt, 3>& t) {
  return json::array({integer_json(t[0]), integer_json(t[1]), integer_json(t[2])});
}

}  // namespace

std::string mod_report_json(const ModObstructionReport& report, int indent) { return mod_json(report).dump(indent); }

std::string search_report_json(const SearchResult& result, int indent) {
  json doc = search_json(result);
  doc["schema_version"] = kReportSchemaVersion;
  doc["kind"] = "search";
  return doc.dump(indent);
}

std::string thm18_report_json(const std::vector<Thm18Report>& reports, int indent) {
  json records = json::array();
  for (const auto& r : reports) {
    json rec = {{"R", integer_json(r.order)},
                {"parity", r.odd ? "odd" : "even"},
                {"label", r.label()},
                {"kmax", r.kmax},
                {"nmax", r.nmax},
                {"matrix_search", search_json(r.matrix_search)},
                {"search_empty", r.search_empty()},
                {"passed", r.passed()}};
    if (r.odd) {
      rec["modular"] = mod_json(*r.modular);
      rec["words"] = {{"checked", r.words->checked},
                      {"phi_failures", r.words->phi_failures},
                      {"matrix_failures", r.words->matrix_failures}};
      rec["min_k"] = integer_json(r.min_k);
      rec["phi_equation"] = "sum n_i = 12 + (" + r.phi_slope.str() + ") k";
      rec["final_congruence"] = {{"statement", "12 = 0 mod R"}, {"residue", integer_json(r.final_residue)}};
      rec["contradiction"] = r.contradiction;
    } else {
      rec["broken_line_search"] = search_json(*r.broken_line_search);
      rec["flagged_12_divisible"] = r.flagged;
    }
    records.push_back(std::move(rec));
  }
  json doc = {{"schema_version", kReportSchemaVersion}, {"kind", "thm18"}, {"records", records}};
  return doc.dump(indent);
}

std::string thm19_report_json(const std::vector<Thm19Report>& reports, std::int64_t rmax, const Thm19Options& options,
                              int indent) {
  json records = json::array();
  std::size_t mismatches = 0, solutions = 0, disagreements = 0;
  for (const auto& r : reports) {
    json sols = json::array();
    for (const auto& [perm, s] : r.solutions)
      sols.push_back({{"ordering", triple_json(perm)}, {"m1", integer_json(s.m1)}, {"m2", integer_json(s.m2)}});
    records.push_back({{"triple", triple_json(r.triple)},
                       {"coefficients", coefficients_json(r.coefficients)},
                       {"coefficient_mismatches", r.coefficient_mismatches},
                       {"solutions", sols},
                       {"degenerate", r.degenerate},
                       {"brute_forced", r.brute_forced},
                       {"brute_force_agrees", r.brute_force_agrees},
                       {"passed", r.passed()}});
    mismatches += r.coefficient_mismatches;
    solutions += r.solutions.size();
    disagreements += r.brute_force_agrees ? 0 : 1;
  }
  json doc = {{"schema_version", kReportSchemaVersion},
              {"kind", "thm19"},
              {"rmax", rmax},
              {"window", options.window},
              {"brute_force_max_order", options.brute_force_max_order},
              {"triples", reports.size()},
              {"coefficient_mismatches", mismatches},
              {"solutions", solutions},
              {"brute_force_disagreements", disagreements},
              {"records", records}};
  return doc.dump(indent);
}

std::string thm18_summary_table(const std::vector<Thm18Report>& reports) {
  std::ostringstream out;
  out << std::left << std::setw(5) << "R" << std::setw(6) << "par" << std::setw(10) << "modular" << std::setw(8) << "words"
      << std::setw(10) << "12 mod R" << std::setw(10) << "nodes" << std::setw(7) << "found" << std::setw(7) << "result"
      << "label\n";
  for (const auto& r : reports) {
    std::uint64_t nodes = r.matrix_search.nodes + (r.broken_line_search ? r.broken_line_search->nodes : 0);
    std::size_t found = r.matrix_search.polygons.size() + (r.broken_line_search ? r.broken_line_search->polygons.size() : 0);
    std::string modular = r.modular ? (r.modular->passed() ? "ok" : "FAIL") : "-";
    std::string words = r.words ? (r.words->phi_failures + r.words->matrix_failures == 0 ? "ok" : "FAIL") : "-";
    std::string residue = r.odd ? r.final_residue.str() : (r.flagged ? "0 (flag)" : "-");
    out << std::setw(5) << r.order.str() << std::setw(6) << (r.odd ? "odd" : "even") << std::setw(10) << modular
        << std::setw(8) << words << std::setw(10) << residue << std::setw(10) << nodes << std::setw(7) << found
        << std::setw(7) << (r.passed() ? "PASS" : "FAIL") << r.label() << "\n";
  }
  return out.str();
}

std::string thm19_summary_table(const std::vector<Thm19Report>& reports) {
  std::size_t mismatches = 0, solutions = 0, brute = 0, disagreements = 0, degenerate = 0, failed = 0;
  for (const auto& r : reports) {
    mismatches += r.coefficient_mismatches;
    solutions += r.solutions.size();
    brute += r.brute_forced ? 1 : 0;
    disagreements += r.brute_force_agrees ? 0 : 1;
    degenerate += r.degenerate ? 1 : 0;
    failed += r.passed() ? 0 : 1;
  }
  std::ostringstream out;
  auto row = [&](const std::string& name, std::size_t value) { out << std::left << std::setw(32) << name << value << "\n"; };
  row("triples", reports.size());
  row("coefficient mismatches", mismatches);
  row("negative integer solutions", solutions);
  row("degenerate eliminations", degenerate);
  row("brute-forced triples", brute);
  row("brute-force disagreements", disagreements);
  row("failed triples", failed);
  return out.str();
}

std::string search_summary(const SearchResult& result) {
  std::ostringstream out;
  out << "R=" << result.order << " kmax=" << result.kmax << " bound=" << result.parameter_bound << " nodes=" << result.nodes
      << " closures=" << result.closures << " polygons=" << result.polygons.size() << "\n";
  for (const auto& f : result.polygons) {
    out << "  k=" << f.polygon.size() << " n=(";
    for (std::size_t i = 0; i < f.parameters.size(); ++i) out << (i ? "," : "") << f.parameters[i];
    out << ") vertices:";
    for (const auto& v : f.polygon.vertices()) out << " " << v.to_string();
    out << "\n";
  }
  return out.str();
}

}  // namespace fano
