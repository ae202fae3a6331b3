#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "qcover/complex.hpp"

namespace qcover::io {

/// A parsed input. `labels` is empty when the input used integer labels;
/// otherwise labels[v-1] is the original name of vertex v.
struct ParsedComplex {
  SimplicialComplex complex;
  std::vector<std::string> labels;

  std::string label(Vertex v) const;
};

/// {"facets": [[1,2,3], ...]} with 1-based integer labels.
ParsedComplex parse_json(std::string_view text);

/// One facet per line, vertices separated by whitespace. Blank lines and
/// lines starting with '#' are ignored. If every token is a positive integer
/// the integers are the labels; otherwise tokens are names, numbered 1..n in
/// sorted order so the numbering does not depend on line order.
ParsedComplex parse_text(std::string_view text);

/// Dispatches on the first non-blank character ('{' means JSON).
ParsedComplex parse_complex(std::string_view text);

ParsedComplex read_complex_file(const std::filesystem::path& path);

/// Canonical JSON form, one line, trailing newline.
std::string write_json(const SimplicialComplex& complex);

/// Plain-text form; uses names when `labels` is nonempty.
std::string write_text(const SimplicialComplex& complex, const std::vector<std::string>& labels = {});

}  // namespace qcover::io
