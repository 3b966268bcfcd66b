#pragma once

// Text format: one hyperedge per line, vertex tokens separated by spaces or
// tabs, `#` starts a comment, blank lines are ignored. A line holding only
// `{}` or `[]` is an explicitly empty hyperedge and is rejected.
//
// Structured format (JSON): {"vertices": [...optional...], "edges": [[...], ...]}.
//
// `|` separates the components of a product vertex token (`left|right`).

#include "hyperkunneth/errors.hpp"
#include "hyperkunneth/hypergraph.hpp"

#include <nlohmann/json.hpp>

#include <cctype>
#include <fstream>
#include <set>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

namespace hyperkunneth {

namespace detail {

inline void check_token(const std::string& t) {
  if (t.empty()) throw FormatError("empty vertex token");
  for (char c : t)
    if (std::isspace(static_cast<unsigned char>(c)) || c == '#')
      throw FormatError("vertex token '" + t + "' contains whitespace or '#'");
  for (auto part : token_components(t))
    if (part.empty()) throw FormatError("vertex token '" + t + "' has an empty '|' component");
}

inline void check_uniform_arity(const std::vector<std::vector<std::string>>& edges) {
  std::size_t arity = 0;
  for (const auto& e : edges)
    for (const auto& t : e) {
      std::size_t a = token_components(t).size();
      if (arity == 0) arity = a;
      if (a != arity) throw ValidationError("vertex tokens mix different numbers of '|' components");
    }
}

inline std::string trim(std::string_view s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

inline Hypergraph parse_json_hypergraph(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw FormatError(std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("edges") || !doc["edges"].is_array())
    throw FormatError("structured hypergraph needs an 'edges' array");
  std::vector<std::vector<std::string>> edges;
  for (const auto& e : doc["edges"]) {
    if (!e.is_array()) throw FormatError("each edge must be a list of vertex tokens");
    if (e.empty()) throw FormatError("empty hyperedge");
    std::vector<std::string> tokens;
    for (const auto& t : e) {
      if (!t.is_string()) throw FormatError("vertex tokens must be strings");
      tokens.push_back(t.get<std::string>());
      check_token(tokens.back());
    }
    edges.push_back(std::move(tokens));
  }
  if (edges.empty()) throw ValidationError("hypergraph has no hyperedges");
  check_uniform_arity(edges);
  if (doc.contains("vertices")) {
    if (!doc["vertices"].is_array()) throw FormatError("'vertices' must be a list");
    std::set<std::string> listed, used;
    for (const auto& t : doc["vertices"]) {
      if (!t.is_string()) throw FormatError("vertex tokens must be strings");
      check_token(t.get<std::string>());
      listed.insert(t.get<std::string>());
    }
    for (const auto& e : edges) used.insert(e.begin(), e.end());
    for (const auto& t : used)
      if (!listed.count(t)) throw ValidationError("edge uses vertex '" + t + "' missing from 'vertices'");
    for (const auto& t : listed)
      if (!used.count(t)) throw ValidationError("vertex '" + t + "' lies in no hyperedge");
  }
  return Hypergraph::from_token_edges(edges);
}

inline Hypergraph parse_text_hypergraph(std::string_view text) {
  std::vector<std::vector<std::string>> edges;
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::string body = trim(line);
    if (body.empty()) continue;
    if (body == "{}" || body == "[]")
      throw FormatError("line " + std::to_string(line_no) + ": empty hyperedge");
    std::istringstream words(body);
    std::vector<std::string> tokens;
    for (std::string t; words >> t;) {
      check_token(t);
      tokens.push_back(std::move(t));
    }
    edges.push_back(std::move(tokens));
  }
  if (edges.empty()) throw ValidationError("input contains no hyperedges");
  check_uniform_arity(edges);
  return Hypergraph::from_token_edges(edges);
}

}  // namespace detail

/// Parses either format; a document whose first non-blank character is `{`
/// is read as JSON.
inline Hypergraph parse_hypergraph(std::string_view text) {
  for (char c : text) {
    if (std::isspace(static_cast<unsigned char>(c))) continue;
    if (c == '{') return detail::parse_json_hypergraph(text);
    break;
  }
  return detail::parse_text_hypergraph(text);
}

inline Hypergraph read_hypergraph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_hypergraph(buf.str());
}

inline std::string write_text(const Hypergraph& h) {
  std::string out;
  for (int d = 0; d <= h.dimension(); ++d)
    for (const auto& e : h.edges(d)) {
      for (std::size_t k = 0; k < e.size(); ++k) {
        if (k) out += ' ';
        out += h.vertex_tokens()[e[k]];
      }
      out += '\n';
    }
  return out;
}

inline nlohmann::json to_json(const Hypergraph& h) {
  nlohmann::json edges = nlohmann::json::array();
  for (int d = 0; d <= h.dimension(); ++d)
    for (const auto& e : h.edges(d)) edges.push_back(h.tokens_of(e));
  return {{"vertices", h.vertex_tokens()}, {"edges", std::move(edges)}};
}

inline std::string write_json(const Hypergraph& h) { return to_json(h).dump(2) + "\n"; }

}  // namespace hyperkunneth
