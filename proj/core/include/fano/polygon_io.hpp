#pragma once

// Polygon files: a JSON object {"vertices": [[x, y], ...]} or plain text with one
// "x y" pair per line ('#' starts a comment).

#include "fano/lattice.hpp"
#include "fano/polygon.hpp"

#include <cstddef>
#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace fano {

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& source, std::size_t line, const std::string& message);
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

// Format is detected from the first non-blank, non-comment character ('{' means JSON).
std::vector<LatticePoint> parse_polygon(std::string_view content, const std::string& source = "<input>");
std::vector<LatticePoint> read_polygon_file(const std::filesystem::path& path);

std::string polygon_to_text(const FanoPolygon& polygon);
std::string polygon_to_json(const FanoPolygon& polygon);

// {"vertices": ..., "orientation": "ccw", "singularity_content": {"nT": ..., "basket": [...]}}
std::string polygon_report_json(const FanoPolygon& polygon, int indent = 2);

}  // namespace fano
