#include "qcover/io.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <map>
#include <sstream>

#include <nlohmann/json.hpp>

#include "qcover/error.hpp"

namespace qcover::io {
namespace {

using nlohmann::json;

bool parse_positive(std::string_view token, int& out) {
  if (token.empty()) return false;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), out);
  return ec == std::errc() && ptr == token.data() + token.size() && out > 0;
}

}  // namespace

std::string ParsedComplex::label(Vertex v) const {
  if (labels.empty()) return std::to_string(v);
  return labels.at(static_cast<std::size_t>(v - 1));
}

ParsedComplex parse_json(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::ParseError, std::string("malformed JSON at byte ") + std::to_string(e.byte));
  }
  if (!doc.is_object() || !doc.contains("facets")) {
    throw Error(ErrorCode::ParseError, "expected an object with a \"facets\" field");
  }
  const json& list = doc["facets"];
  if (!list.is_array()) throw Error(ErrorCode::ParseError, "\"facets\" must be an array");

  std::vector<std::vector<Vertex>> facets;
  for (std::size_t i = 0; i < list.size(); ++i) {
    const json& f = list[i];
    if (!f.is_array()) throw Error(ErrorCode::ParseError, "facets[" + std::to_string(i) + "] must be an array");
    std::vector<Vertex> facet;
    for (std::size_t j = 0; j < f.size(); ++j) {
      if (!f[j].is_number_integer() || f[j].get<long long>() <= 0 || f[j].get<long long>() > 1'000'000) {
        throw Error(ErrorCode::ParseError, "facets[" + std::to_string(i) + "][" + std::to_string(j) +
                                               "] must be a positive integer label");
      }
      facet.push_back(f[j].get<int>());
    }
    facets.push_back(std::move(facet));
  }
  return ParsedComplex{SimplicialComplex::from_facets(std::move(facets)), {}};
}

ParsedComplex parse_text(std::string_view text) {
  struct Row {
    int line = 0;
    std::vector<std::string> tokens;
  };
  std::vector<Row> rows;
  std::istringstream in{std::string(text)};
  std::string line;
  for (int number = 1; std::getline(in, line); ++number) {
    std::istringstream tokens(line);
    Row row{number, {}};
    std::string tok;
    while (tokens >> tok) row.tokens.push_back(tok);
    if (row.tokens.empty() || row.tokens.front().starts_with('#')) continue;
    rows.push_back(std::move(row));
  }

  bool numeric = true;
  for (const auto& row : rows) {
    for (const auto& tok : row.tokens) {
      int value = 0;
      numeric = numeric && parse_positive(tok, value);
    }
  }

  std::vector<std::string> labels;
  std::map<std::string, Vertex> index;
  if (!numeric) {
    for (const auto& row : rows) {
      for (const auto& tok : row.tokens) index.emplace(tok, 0);
    }
    for (auto& [name, id] : index) {
      labels.push_back(name);
      id = static_cast<Vertex>(labels.size());
    }
  }
  std::vector<std::vector<Vertex>> facets;
  for (const auto& row : rows) {
    std::vector<Vertex> facet;
    for (const auto& tok : row.tokens) {
      int value = 0;
      if (numeric) {
        parse_positive(tok, value);
      } else {
        value = index.at(tok);
      }
      if (std::find(facet.begin(), facet.end(), value) != facet.end()) {
        throw Error(ErrorCode::RepeatedVertex, "line " + std::to_string(row.line) + ": vertex " + tok + " repeated");
      }
      if (value > kMaxVertices) {
        throw Error(ErrorCode::TooManyVertices, "line " + std::to_string(row.line) + ": vertex " + tok +
                                                    " exceeds the supported maximum of " +
                                                    std::to_string(kMaxVertices) + " vertices");
      }
      facet.push_back(value);
    }
    facets.push_back(std::move(facet));
  }
  return ParsedComplex{SimplicialComplex::from_facets(std::move(facets)), std::move(labels)};
}

ParsedComplex parse_complex(std::string_view text) {
  auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string_view::npos && text[first] == '{') return parse_json(text);
  return parse_text(text);
}

ParsedComplex read_complex_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::ParseError, "cannot read " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_complex(buffer.str());
}

std::string write_json(const SimplicialComplex& complex) {
  json doc = {{"facets", complex.facets()}};
  return doc.dump() + "\n";
}

std::string write_text(const SimplicialComplex& complex, const std::vector<std::string>& labels) {
  std::ostringstream out;
  for (const auto& facet : complex.facets()) {
    for (std::size_t i = 0; i < facet.size(); ++i) {
      if (i) out << ' ';
      if (labels.empty()) {
        out << facet[i];
      } else {
        out << labels.at(static_cast<std::size_t>(facet[i] - 1));
      }
    }
    out << '\n';
  }
  return out.str();
}

}  // namespace qcover::io
