#include "fano/polygon_io.hpp"

#include "json_util.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

namespace fano {

ParseError::ParseError(const std::string& source, std::size_t line, const std::string& message)
    : std::runtime_error(source + (line ? ":" + std::to_string(line) : std::string()) + ": " + message), line_(line) {}

namespace {

bool is_blank(std::string_view s) {
  for (char ch : s)
    if (!std::isspace(static_cast<unsigned char>(ch))) return false;
  return true;
}

std::string_view strip_comment(std::string_view line) {
  auto hash = line.find('#');
  return hash == std::string_view::npos ? line : line.substr(0, hash);
}

BigInt parse_integer_token(const std::string& token, const std::string& source, std::size_t line) {
  std::size_t start = (token[0] == '-' || token[0] == '+') ? 1 : 0;
  bool ok = start < token.size();
  for (std::size_t i = start; i < token.size() && ok; ++i) ok = std::isdigit(static_cast<unsigned char>(token[i]));
  if (!ok) throw ParseError(source, line, "expected an integer, got '" + token + "'");
  return BigInt(token[0] == '+' ? token.substr(1) : token);
}

std::vector<LatticePoint> parse_text(std::string_view content, const std::string& source) {
  std::vector<LatticePoint> out;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= content.size()) {
    auto eol = content.find('\n', pos);
    if (eol == std::string_view::npos) eol = content.size();
    std::string_view line = strip_comment(content.substr(pos, eol - pos));
    ++line_no;
    pos = eol + 1;
    if (is_blank(line)) continue;
    std::istringstream in{std::string(line)};
    std::vector<std::string> tokens;
    for (std::string tok; in >> tok;) tokens.push_back(tok);
    if (tokens.size() != 2) throw ParseError(source, line_no, "expected two integers \"x y\", got " + std::to_string(tokens.size()) + " tokens");
    out.emplace_back(parse_integer_token(tokens[0], source, line_no), parse_integer_token(tokens[1], source, line_no));
  }
  return out;
}

BigInt json_integer(const nlohmann::json& j, const std::string& source) {
  if (j.is_number_integer()) return j.is_number_unsigned() ? BigInt(j.get<std::uint64_t>()) : BigInt(j.get<std::int64_t>());
  if (j.is_string()) return parse_integer_token(j.get<std::string>(), source, 0);
  throw ParseError(source, 0, "vertex coordinates must be integers, got " + j.dump());
}

std::vector<LatticePoint> parse_json(std::string_view content, const std::string& source) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(content);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(source, 0, std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("vertices") || !doc["vertices"].is_array())
    throw ParseError(source, 0, "expected an object with a \"vertices\" array");
  std::vector<LatticePoint> out;
  for (const auto& v : doc["vertices"]) {
    if (!v.is_array() || v.size() != 2) throw ParseError(source, 0, "each vertex must be an [x, y] pair, got " + v.dump());
    out.emplace_back(json_integer(v[0], source), json_integer(v[1], source));
  }
  return out;
}

}  // namespace

std::vector<LatticePoint> parse_polygon(std::string_view content, const std::string& source) {
  std::size_t pos = 0;
  while (pos < content.size()) {
    auto eol = content.find('\n', pos);
    if (eol == std::string_view::npos) eol = content.size();
    std::string_view line = strip_comment(content.substr(pos, eol - pos));
    for (char ch : line) {
      if (std::isspace(static_cast<unsigned char>(ch))) continue;
      return ch == '{' ? parse_json(content, source) : parse_text(content, source);
    }
    pos = eol + 1;
  }
  return {};
}

std::vector<LatticePoint> read_polygon_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError(path.string(), 0, "cannot open file");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_polygon(buf.str(), path.string());
}

std::string polygon_to_text(const FanoPolygon& polygon) {
  std::string out = "# Fano polygon, anticlockwise\n";
  for (const auto& v : polygon.vertices()) out += v.x.str() + " " + v.y.str() + "\n";
  return out;
}

std::string polygon_to_json(const FanoPolygon& polygon) {
  nlohmann::json doc;
  doc["vertices"] = detail::points_json(polygon.vertices());
  return doc.dump();
}

std::string polygon_report_json(const FanoPolygon& polygon, int indent) {
  nlohmann::json doc;
  doc["vertices"] = detail::points_json(polygon.vertices());
  doc["orientation"] = "ccw";
  auto sc = singularity_content(polygon);
  nlohmann::json basket = nlohmann::json::array();
  for (const auto& s : sc.basket) basket.push_back(s.to_string());
  doc["singularity_content"] = {{"nT", detail::integer_json(sc.primitive_t_count)}, {"basket", basket}};
  return doc.dump(indent);
}

}  // namespace fano
