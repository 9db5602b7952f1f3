#include "fano_cli/cli.hpp"

#include "fano/broken_line.hpp"
#include "fano/contfrac.hpp"
#include "fano/polygon.hpp"
#include "fano/polygon_io.hpp"
#include "fano/singularity.hpp"
#include "fano/sl2_lift.hpp"
#include "fano/theorems.hpp"
#include "fano_cli/svg.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <limits>
#include <optional>
#include <ostream>
#include <sstream>

namespace fano::cli {

namespace {

using nlohmann::json;

json int_json(const BigInt& v) {
  if (v >= std::numeric_limits<std::int64_t>::min() && v <= std::numeric_limits<std::int64_t>::max())
    return static_cast<std::int64_t>(v);
  return v.str();
}

json point_json(const LatticePoint& p) { return json::array({int_json(p.x), int_json(p.y)}); }

json seq_json(const std::vector<BigInt>& seq) {
  json out = json::array();
  for (const auto& v : seq) out.push_back(int_json(v));
  return out;
}

struct Globals {
  std::string format = "text";
  std::uint64_t seed = 1;
  bool json() const { return format == "json"; }
};

// Raised for any input problem; carries the finished diagnostic.
struct InputFailure {
  std::string message;
};

FanoPolygon load_polygon(const std::string& path) {
  std::vector<LatticePoint> points;
  try {
    points = read_polygon_file(path);
  } catch (const ParseError& e) {
    throw InputFailure{std::string("parse error: ") + e.what()};
  }
  try {
    return FanoPolygon::validate(std::move(points));
  } catch (const PolygonError& e) {
    throw InputFailure{path + ": invalid polygon: " + e.what()};
  }
}

void write_file(const std::filesystem::path& path, const std::string& content) {
  if (path.has_parent_path()) {
    std::error_code ec;
    std::filesystem::create_directories(path.parent_path(), ec);
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw InputFailure{path.string() + ": cannot open for writing"};
  f << content;
  if (!f.flush()) throw InputFailure{path.string() + ": write failed"};
}

// ---------------------------------------------------------------------------

struct AnalyzeArgs {
  std::string file;
  std::string output;
};

int cmd_analyze(const AnalyzeArgs& a, const Globals& g, std::ostream& out) {
  FanoPolygon polygon = load_polygon(a.file);
  auto edges = edge_data(polygon);
  SingularityContent sc = singularity_content(polygon);

  json edge_rows = json::array();
  for (const auto& e : edges) {
    auto sing = cone_from_rays(e.from, e.to);
    auto cone = content_of_cone(e.from, e.to);
    edge_rows.push_back({{"from", point_json(e.from)},
                         {"to", point_json(e.to)},
                         {"length", int_json(e.length)},
                         {"height", int_json(e.height)},
                         {"singularity", sing.to_string()},
                         {"class", std::string(to_string(classify(sing)))},
                         {"n", int_json(cone.primitive_t_count)},
                         {"residue", cone.residue ? json(cone.residue->to_string()) : json(nullptr)}});
  }
  json doc = json::parse(polygon_report_json(polygon));
  doc["source"] = a.file;
  doc["edges"] = edge_rows;
  doc["singularity_content"]["text"] = sc.to_compact_string();
  if (!a.output.empty()) write_file(a.output, doc.dump(2) + "\n");

  if (g.json()) {
    out << doc.dump(2) << "\n";
    return kSuccess;
  }
  out << "vertices (anticlockwise):";
  for (const auto& v : polygon.vertices()) out << " " << v.to_string();
  out << "\n";
  out << std::left << std::setw(6) << "edge" << std::setw(12) << "from" << std::setw(12) << "to" << std::setw(5) << "l"
      << std::setw(5) << "h" << std::setw(14) << "cone" << std::setw(12) << "class" << std::setw(5) << "n"
      << "residue\n";
  for (std::size_t i = 0; i < edges.size(); ++i) {
    const auto& row = edge_rows[i];
    out << std::setw(6) << i << std::setw(12) << edges[i].from.to_string() << std::setw(12) << edges[i].to.to_string()
        << std::setw(5) << edges[i].length.str() << std::setw(5) << edges[i].height.str() << std::setw(14)
        << row["singularity"].get<std::string>() << std::setw(12) << row["class"].get<std::string>() << std::setw(5)
        << row["n"].dump() << (row["residue"].is_null() ? "-" : row["residue"].get<std::string>()) << "\n";
  }
  out << "singularity content: " << sc.to_compact_string() << "\n";
  return kSuccess;
}

// ---------------------------------------------------------------------------

struct LslsArgs {
  std::string file;
  std::size_t start = 0;
  std::string mutate;
};

int cmd_lsls(const LslsArgs& a, const Globals& g, std::ostream& out) {
  FanoPolygon polygon = load_polygon(a.file);
  if (a.start >= polygon.size())
    throw InputFailure{"--start " + std::to_string(a.start) + " out of range for " + std::to_string(polygon.size()) + " vertices"};
  std::vector<BigInt> seq = lsls_polygon(polygon, a.start);

  std::optional<std::pair<std::size_t, BigInt>> mutation;
  if (!a.mutate.empty()) {
    auto comma = a.mutate.find(',');
    try {
      if (comma == std::string::npos) throw std::invalid_argument("missing comma");
      std::size_t idx = std::stoul(a.mutate.substr(0, comma));
      BigInt delta(a.mutate.substr(comma + 1));
      if (idx >= seq.size()) throw std::invalid_argument("index out of range");
      mutation.emplace(idx, delta);
    } catch (const std::exception& e) {
      throw InputFailure{"--mutate-entry expects i,delta with 0 <= i < " + std::to_string(seq.size()) + ": " + e.what()};
    }
    seq[mutation->first] += mutation->second;
  }

  PQPair pq = eval_pq(seq);
  // An unmodified sequence is judged at every start vertex; a mutated one on its own.
  bool closed = mutation ? is_zero_over_one(seq) : closure_test(polygon);

  if (g.json()) {
    json doc = {{"start", a.start},
                {"entries", seq.size()},
                {"sequence", seq_json(seq)},
                {"text", render_sequence(seq)},
                {"P", int_json(pq.p)},
                {"Q", int_json(pq.q)},
                {"closed", closed}};
    doc["mutation"] = mutation ? json{{"index", mutation->first}, {"delta", int_json(mutation->second)}} : json(nullptr);
    out << doc.dump(2) << "\n";
    return kSuccess;
  }
  out << "start vertex: " << a.start << " " << polygon.vertex(a.start).to_string() << "\n";
  if (mutation) out << "mutated entry " << mutation->first << " by " << mutation->second << "\n";
  out << "LSLS (" << seq.size() << " entries): " << render_sequence(seq) << "\n";
  out << "(P,Q) = (" << pq.p << "," << pq.q << ")\n";
  out << "closed=" << (closed ? "true" : "false") << "\n";
  return kSuccess;
}

// ---------------------------------------------------------------------------

struct VerifyArgs {
  int thm = 0;
  std::optional<std::int64_t> r;
  std::optional<std::int64_t> rmax;
  std::optional<std::size_t> kmax;
  std::optional<std::size_t> nmax;
  std::int64_t window = 200;
  std::int64_t brute_max = 12;
  std::size_t samples = 1000;
  std::string parity = "all";
  std::string report;
};

int report_search(const SearchResult& result, const Globals& g, std::ostream& out, const std::string& report_path) {
  std::string doc = search_report_json(result);
  if (!report_path.empty()) write_file(report_path, doc + "\n");
  if (g.json())
    out << doc << "\n";
  else
    out << search_summary(result);
  return kSuccess;
}

int cmd_verify(const VerifyArgs& a, const Globals& g, std::ostream& out) {
  if (a.thm == 19) {
    std::int64_t rmax = a.rmax.value_or(40);
    Thm19Options opts;
    opts.window = a.window;
    opts.brute_force_max_order = a.brute_max;
    auto reports = verify_thm19(rmax, opts);
    std::string doc = thm19_report_json(reports, rmax, opts);
    if (!a.report.empty()) write_file(a.report, doc + "\n");
    if (g.json())
      out << doc << "\n";
    else
      out << thm19_summary_table(reports);
    bool ok = std::all_of(reports.begin(), reports.end(), [](const Thm19Report& r) { return r.passed(); });
    return ok ? kSuccess : kVerificationFailure;
  }

  if (a.r && *a.r == 3) {
    // R = 3 has a solution; reproduce it instead of refuting.
    SearchResult result = search_basket(3, a.kmax.value_or(12), a.nmax.value_or(4));
    if (!g.json()) out << "R=3 admits a solution; running the basket search\n";
    report_search(result, g, out, a.report);
    return result.polygons.size() == 1 ? kSuccess : kVerificationFailure;
  }

  std::vector<std::int64_t> orders;
  if (a.r) {
    if (*a.r < 5) throw InputFailure{"--r must be 3 or at least 5"};
    orders.push_back(*a.r);
  } else {
    std::int64_t rmax = a.rmax.value_or(25);
    for (std::int64_t r = 5; r <= rmax; ++r) {
      bool odd = r % 2 != 0;
      if ((a.parity == "odd" && !odd) || (a.parity == "even" && odd)) continue;
      orders.push_back(r);
    }
  }
  Thm18Options opts;
  opts.samples = a.samples;
  opts.seed = g.seed;
  std::vector<Thm18Report> reports;
  for (auto r : orders) {
    bool odd = r % 2 != 0;
    std::size_t kmax = a.kmax.value_or(odd ? static_cast<std::size_t>(2 * r) : 14);
    std::size_t nmax = a.nmax.value_or(odd ? 5 : 4);
    reports.push_back(verify_thm18(r, kmax, nmax, opts));
  }
  std::string doc = thm18_report_json(reports);
  if (!a.report.empty()) write_file(a.report, doc + "\n");
  if (g.json()) {
    out << doc << "\n";
  } else {
    out << "seed: " << g.seed << "\n" << thm18_summary_table(reports);
  }
  bool ok = std::all_of(reports.begin(), reports.end(), [](const Thm18Report& r) { return r.passed(); });
  return ok ? kSuccess : kVerificationFailure;
}

// ---------------------------------------------------------------------------

struct SearchArgs {
  std::optional<std::int64_t> r;
  std::string basket;
  std::size_t kmax = 12;
  std::size_t nmax = 4;
  std::string out_dir;
};

int cmd_search(const SearchArgs& a, const Globals& g, std::ostream& out) {
  BigInt order;
  if (!a.basket.empty()) {
    CyclicQuotientSingularity s = [&] {
      try {
        return parse_singularity(a.basket);
      } catch (const std::invalid_argument& e) {
        throw InputFailure{std::string("--basket: ") + e.what()};
      }
    }();
    if (!(s == normalize_weights(s.order(), 1, 1)))
      throw InputFailure{"--basket must be of the form 1/R(1,1), got " + s.to_string()};
    order = s.order();
    if (a.r && BigInt(*a.r) != order) throw InputFailure{"--r and --basket disagree"};
  } else if (a.r) {
    order = *a.r;
  } else {
    throw InputFailure{"search needs --r or --basket"};
  }
  if (order < 3) throw InputFailure{"--r must be at least 3"};

  SearchResult result = search_basket(order, a.kmax, a.nmax);
  if (!a.out_dir.empty()) {
    std::filesystem::path dir(a.out_dir);
    for (std::size_t i = 0; i < result.polygons.size(); ++i) {
      auto name = "polygon_R" + order.str() + "_" + std::to_string(i + 1) + ".json";
      write_file(dir / name, polygon_to_json(result.polygons[i].polygon) + "\n");
    }
    write_file(dir / ("search_R" + order.str() + ".json"), search_report_json(result) + "\n");
  }
  return report_search(result, g, out, "");
}

// ---------------------------------------------------------------------------

struct PlotArgs {
  std::string file;
  std::string output;
  bool broken_line = false;
  int scale = 40;
};

int cmd_plot(const PlotArgs& a, const Globals& g, std::ostream& out) {
  FanoPolygon polygon = load_polygon(a.file);
  std::string svg = render_svg(polygon, {a.broken_line, a.scale});
  write_file(a.output, svg);
  if (g.json())
    out << json{{"output", a.output}, {"bytes", svg.size()}}.dump() << "\n";
  else
    out << "wrote " << a.output << " (" << svg.size() << " bytes)\n";
  return kSuccess;
}

// ---------------------------------------------------------------------------

struct WordArgs {
  std::string word;
  std::vector<std::string> matrix;
};

int cmd_word(const WordArgs& a, const Globals& g, std::ostream& out) {
  LiftedWord w;
  if (!a.matrix.empty()) {
    if (a.matrix.size() != 4) throw InputFailure{"--decompose expects four entries a b c d"};
    IntMatrix2 m;
    try {
      m = {BigInt(a.matrix[0]), BigInt(a.matrix[1]), BigInt(a.matrix[2]), BigInt(a.matrix[3])};
    } catch (const std::exception&) {
      throw InputFailure{"--decompose entries must be integers"};
    }
    if (m.det() != 1) throw InputFailure{"--decompose needs a determinant-1 matrix"};
    w = conrad_decompose(m);
  } else {
    try {
      w = parse_word(a.word);
    } catch (const std::invalid_argument& e) {
      throw InputFailure{e.what()};
    }
  }
  IntMatrix2 m = eval_word(w);
  BigInt p = phi(w).phi;
  if (g.json()) {
    out << json{{"word", w.to_string()},
                {"matrix", json::array({json::array({int_json(m.a), int_json(m.b)}), json::array({int_json(m.c), int_json(m.d)})})},
                {"phi", int_json(p)}}
               .dump(2)
        << "\n";
  } else {
    out << "word:   " << w.to_string() << "\nmatrix: " << m.to_string() << "\nphi:    " << p << "\n";
  }
  return kSuccess;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact lattice geometry of Fano polygons", "fano"};
  app.require_subcommand(1);
  Globals g;
  app.add_option("--format", g.format, "Output format")->check(CLI::IsMember({"text", "json"}));
  app.add_option("--seed", g.seed, "Seed for randomized checks");

  AnalyzeArgs analyze;
  auto* an = app.add_subcommand("analyze", "Singularity content and edge table of a polygon file");
  an->add_option("file", analyze.file, "Polygon file (JSON or 'x y' lines)")->required();
  an->add_option("-o,--output", analyze.output, "Also write the JSON report here");

  LslsArgs lsls;
  auto* ls = app.add_subcommand("lsls", "LSLS sequence of the polygon's broken line and the closure test");
  ls->add_option("file", lsls.file, "Polygon file")->required();
  ls->add_option("--start", lsls.start, "Start vertex index");
  ls->add_option("--mutate-entry", lsls.mutate, "Perturb entry i by delta: i,delta");

  VerifyArgs verify;
  auto* ve = app.add_subcommand("verify", "Verify basket obstructions: --thm 18 for {k x 1/R(1,1)}, --thm 19 for three-cone baskets");
  ve->add_option("--thm", verify.thm, "18 or 19")->required()->check(CLI::IsMember({18, 19}));
  auto* r_opt = ve->add_option("--r", verify.r, "Single order R (thm 18)");
  ve->add_option("--rmax", verify.rmax, "Largest order (thm 18: 25, thm 19: 40)")->excludes(r_opt);
  ve->add_option("--kmax", verify.kmax, "Largest number of cones (default 2R odd, 14 even)");
  ve->add_option("--nmax", verify.nmax, "Largest family parameter (default 5 odd, 4 even)");
  ve->add_option("--window", verify.window, "Brute-force window for thm 19")->check(CLI::Range(1, 10000));
  ve->add_option("--brute-max", verify.brute_max, "Brute-force triples with every R_i at most this");
  ve->add_option("--samples", verify.samples, "Random samples for the modular checks");
  ve->add_option("--parity", verify.parity, "Restrict thm 18 to odd or even R")->check(CLI::IsMember({"all", "odd", "even"}));
  ve->add_option("--report", verify.report, "Write the JSON report to this path");

  SearchArgs search;
  auto* se = app.add_subcommand("search", "Search for polygons with basket {k x 1/R(1,1)}");
  se->add_option("--r", search.r, "Order R");
  se->add_option("--basket", search.basket, "Basket entry such as 1/3(1,1)");
  se->add_option("--kmax", search.kmax, "Largest number of cones");
  se->add_option("--nmax", search.nmax, "Largest family parameter");
  se->add_option("--out-dir", search.out_dir, "Directory for polygon files and the summary");

  PlotArgs plot;
  auto* pl = app.add_subcommand("plot", "Render a polygon as SVG");
  pl->add_option("file", plot.file, "Polygon file")->required();
  pl->add_option("-o,--output", plot.output, "SVG output path")->required();
  pl->add_flag("--broken-line", plot.broken_line, "Overlay the glued sail broken line");
  pl->add_option("--scale", plot.scale, "Pixels per lattice unit")->check(CLI::Range(4, 400));

  WordArgs word;
  auto* wo = app.add_subcommand("word", "Evaluate a word in S, T or decompose a matrix");
  auto* w_opt = wo->add_option("word", word.word, "Word such as \"T S^-1 T^-2\"");
  wo->add_option("--decompose", word.matrix, "Matrix entries a b c d")->expected(4)->excludes(w_opt);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kSuccess;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return kSuccess;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  }

  try {
    if (*an) return cmd_analyze(analyze, g, out);
    if (*ls) return cmd_lsls(lsls, g, out);
    if (*ve) return cmd_verify(verify, g, out);
    if (*se) return cmd_search(search, g, out);
    if (*pl) return cmd_plot(plot, g, out);
    if (*wo) {
      if (word.word.empty() && word.matrix.empty()) throw InputFailure{"word needs a word or --decompose"};
      return cmd_word(word, g, out);
    }
  } catch (const InputFailure& f) {
    err << "error: " << f.message << "\n";
    return kInputError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  }
  return kInputError;
}

}  // namespace fano::cli
