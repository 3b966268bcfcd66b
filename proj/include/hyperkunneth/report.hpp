#pragma once

// Plain-text and JSON renderings of homology tables, Künneth reports and
// chains. Chains on a product render vertices `a|b` as `(a,b)`.

#include "hyperkunneth/homology.hpp"
#include "hyperkunneth/hypergraph.hpp"
#include "hyperkunneth/kunneth.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <string>
#include <vector>

namespace hyperkunneth {

inline nlohmann::json group_json(const FGAbelianGroup& g, const Coefficients& c) {
  nlohmann::json torsion = nlohmann::json::array();
  for (const auto& t : g.torsion()) torsion.push_back(to_string(t));
  return {{"group", g.to_string(c.free_symbol())}, {"rank", g.rank()}, {"torsion", torsion}};
}

/// Degrees above `max_degree` are omitted when it is non-negative.
inline std::string render_homology_text(const HomologyTable& t, int max_degree = -1) {
  std::string out = "homology over " + t.coefficients.free_symbol() + "\n";
  for (std::size_t n = 0; n < t.groups.size(); ++n) {
    if (max_degree >= 0 && static_cast<int>(n) > max_degree) break;
    out += "H_" + std::to_string(n) + " = " + t.groups[n].to_string(t.coefficients.free_symbol()) + "\n";
  }
  return out;
}

inline nlohmann::json homology_json(const HomologyTable& t, int max_degree = -1) {
  nlohmann::json rows = nlohmann::json::array();
  for (std::size_t n = 0; n < t.groups.size(); ++n) {
    if (max_degree >= 0 && static_cast<int>(n) > max_degree) break;
    auto row = group_json(t.groups[n], t.coefficients);
    row["degree"] = n;
    rows.push_back(std::move(row));
  }
  return {{"coefficients", t.coefficients.tag()}, {"homology", rows}};
}

namespace detail {

inline std::string pad(std::string s, std::size_t width) {
  if (s.size() < width) s.append(width - s.size(), ' ');
  return s;
}

}  // namespace detail

inline std::string render_kunneth_text(const KunnethReport& r, int max_degree = -1) {
  const std::string sym = r.coefficients.free_symbol();
  std::vector<std::vector<std::string>> cells{{"degree", "tensor", "tor", "expected", "product", "verdict"}};
  for (const auto& row : r.rows) {
    if (max_degree >= 0 && row.degree > max_degree) break;
    cells.push_back({std::to_string(row.degree), row.tensor_part.to_string(sym), row.tor_part.to_string(sym),
                     row.expected.to_string(sym), row.product.to_string(sym), row.pass ? "ok" : "MISMATCH"});
  }
  std::vector<std::size_t> width(cells.front().size(), 0);
  for (const auto& line : cells)
    for (std::size_t k = 0; k < line.size(); ++k) width[k] = std::max(width[k], line[k].size());
  std::string out = "kunneth over " + sym + "\n";
  for (const auto& line : cells) {
    std::string text;
    for (std::size_t k = 0; k < line.size(); ++k)
      text += k + 1 < line.size() ? detail::pad(line[k], width[k] + 2) : line[k];
    out += text + "\n";
  }
  bool ok = std::all_of(r.rows.begin(), r.rows.end(), [&](const KunnethRow& row) {
    return row.pass || (max_degree >= 0 && row.degree > max_degree);
  });
  out += ok ? "result: pass\n" : "result: FAIL\n";
  if (!ok) {
    out += "left factor:\n" + render_homology_text(r.left);
    out += "right factor:\n" + render_homology_text(r.right);
    out += "product:\n" + render_homology_text(r.product);
  }
  return out;
}

inline nlohmann::json kunneth_json(const KunnethReport& r, int max_degree = -1) {
  nlohmann::json rows = nlohmann::json::array();
  bool ok = true;
  for (const auto& row : r.rows) {
    if (max_degree >= 0 && row.degree > max_degree) break;
    ok = ok && row.pass;
    rows.push_back({{"degree", row.degree},
                    {"tensor", group_json(row.tensor_part, r.coefficients)},
                    {"tor", group_json(row.tor_part, r.coefficients)},
                    {"expected", group_json(row.expected, r.coefficients)},
                    {"product", group_json(row.product, r.coefficients)},
                    {"pass", row.pass}});
  }
  return {{"coefficients", r.coefficients.tag()},
          {"rows", rows},
          {"pass", ok},
          {"left", homology_json(r.left)},
          {"right", homology_json(r.right)},
          {"product", homology_json(r.product)}};
}

/// `{a,b}` for plain tokens; `{(a,x),(b,y)}` for product tokens.
inline std::string render_simplex(const std::vector<std::string>& tokens, const Simplex& s) {
  std::string out = "{";
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i) out += ",";
    const std::string& t = tokens.at(s[i]);
    auto parts = token_components(t);
    if (parts.size() == 1) {
      out += t;
    } else {
      out += "(";
      for (std::size_t k = 0; k < parts.size(); ++k) out += (k ? "," : "") + std::string(parts[k]);
      out += ")";
    }
  }
  return out + "}";
}

namespace detail {

inline std::string signed_term(std::string& acc, const Integer& c, const std::string& body) {
  std::string lead = c < 0 ? (acc.empty() ? "-" : " - ") : (acc.empty() ? "" : " + ");
  std::string mult = abs_value(c) == 1 ? "" : to_string(abs_value(c)) + "*";
  return lead + mult + body;
}

}  // namespace detail

inline std::string render_chain(const std::vector<std::string>& tokens, const ChainElement& c) {
  std::string out;
  for (const auto& [s, x] : c.terms) out += detail::signed_term(out, x, render_simplex(tokens, s));
  return out.empty() ? "0" : out;
}

inline std::string render_tensor(const std::vector<std::string>& left_tokens,
                                 const std::vector<std::string>& right_tokens, const TensorChain& t) {
  std::string out;
  for (const auto& [st, x] : t.terms)
    out += detail::signed_term(
        out, x, render_simplex(left_tokens, st.first) + "(x)" + render_simplex(right_tokens, st.second));
  return out.empty() ? "0" : out;
}

}  // namespace hyperkunneth
