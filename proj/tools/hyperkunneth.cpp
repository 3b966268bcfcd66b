// Command-line front end: homology, products, closures, Künneth checks and
// the randomized verification suite.
//
// Exit status: 0 success, 1 usage or parse error, 2 validation error,
// 3 verification failure, 4 internal integrity error.

#include "hyperkunneth/hyperkunneth.hpp"

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <fstream>
#include <iostream>
#include <string>

using namespace hyperkunneth;

namespace {

enum Exit { ok = 0, usage = 1, validation = 2, verification = 3, integrity = 4 };

struct Common {
  std::string coeff = "z";
  bool verify = false;
  std::string format = "text";
  int max_dim = -1;
  std::string out;
};

void emit(const Common& c, const std::string& text) {
  if (c.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(c.out);
  if (!f) throw UsageError("cannot write '" + c.out + "'");
  f << text;
}

std::string json_text(const nlohmann::json& j) { return j.dump(2) + "\n"; }

void add_format(CLI::App* cmd, Common& c) {
  cmd->add_option("--format", c.format, "Output format")->check(CLI::IsMember({"text", "json"}));
  cmd->add_option("--out", c.out, "Write the output to a file instead of stdout");
}

void add_coeff(CLI::App* cmd, Common& c) {
  cmd->add_option("--coeff", c.coeff, "Coefficients: z, q or zp:<p>");
  cmd->add_flag("--verify", c.verify, "Cross-check with independent pipelines (infimum vs supremum, tensor Inf)");
  cmd->add_option("--max-dim", c.max_dim, "Report degrees up to this value only");
}

int cmd_homology(const Common& c, const std::string& path) {
  auto h = read_hypergraph_file(path);
  auto coeff = Coefficients::parse(c.coeff);
  auto table = embedded_homology(h, coeff, {c.verify});
  emit(c, c.format == "json" ? json_text(homology_json(table, c.max_dim)) : render_homology_text(table, c.max_dim));
  return ok;
}

std::string write_hypergraph(const Common& c, const Hypergraph& h) {
  return c.format == "json" ? write_json(h) : write_text(h);
}

int cmd_product(const Common& c, const std::string& a, const std::string& b, bool closure) {
  auto h = read_hypergraph_file(a);
  auto h2 = read_hypergraph_file(b);
  Hypergraph p = product_boxtimes(h, h2);
  emit(c, write_hypergraph(c, closure ? Hypergraph(associated_complex(p)) : p));
  return ok;
}

int cmd_closure(const Common& c, const std::string& path) {
  emit(c, write_hypergraph(c, associated_complex(read_hypergraph_file(path))));
  return ok;
}

int cmd_kunneth(const Common& c, const std::string& a, const std::string& b) {
  auto h = read_hypergraph_file(a);
  auto h2 = read_hypergraph_file(b);
  auto coeff = Coefficients::parse(c.coeff);
  if (c.verify) inf_tensor_basis(h, h2, true);
  auto report = kunneth_check(h, h2, coeff, {c.verify});
  emit(c, c.format == "json" ? json_text(kunneth_json(report, c.max_dim)) : render_kunneth_text(report, c.max_dim));
  bool pass = true;
  for (const auto& row : report.rows)
    if (c.max_dim < 0 || row.degree <= c.max_dim) pass = pass && row.pass;
  return pass ? ok : verification;
}

int cmd_ez_aw_demo(const Common& c) {
  SimplicialComplex interval = associated_complex(Hypergraph::from_token_edges({{"0", "1"}}));
  ProductContext ctx(interval, interval);
  SimplicialComplex square = product_complex(interval, interval);
  const auto& tokens = interval.vertex_tokens();
  const auto& square_tokens = square.vertex_tokens();

  nlohmann::json mu = nlohmann::json::array(), nu = nlohmann::json::array();
  std::string text = "Eilenberg-Zilber map on C(I) (x) C(I), I the 1-simplex\n";
  for (int n = 0; n <= 2; ++n)
    for (int p = 0; p <= n; ++p) {
      if (p > 1 || n - p > 1) continue;
      for (const auto& s : interval.edges(p))
        for (const auto& u : interval.edges(n - p)) {
          TensorChain t(n);
          t.add(s, u, Integer(1));
          auto lhs = render_tensor(tokens, tokens, t);
          auto rhs = render_chain(square_tokens, ez_map(t, ctx));
          text += "  " + lhs + " -> " + rhs + "\n";
          mu.push_back({{"tensor", lhs}, {"image", rhs}});
        }
    }
  text += "Alexander-Whitney map on C(I x I)\n";
  for (int n = 0; n <= square.dimension(); ++n)
    for (const auto& s : square.edges(n)) {
      ChainElement x(n);
      x.add(s, Integer(1));
      auto lhs = render_chain(square_tokens, x);
      auto rhs = render_tensor(tokens, tokens, aw_map(x, ctx));
      text += "  " + lhs + " -> " + rhs + "\n";
      nu.push_back({{"simplex", lhs}, {"image", rhs}});
    }
  emit(c, c.format == "json" ? json_text({{"ez", mu}, {"aw", nu}}) : text);
  return ok;
}

int cmd_fuzz(const Common& c, FuzzConfig cfg) {
  if (c.max_dim >= 0) cfg.max_dim = c.max_dim;
  auto report = run_fuzz(cfg);
  emit(c, c.format == "json" ? json_text(fuzz_json(report)) : render_fuzz_text(report));
  return report.passed() ? ok : verification;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Embedded homology of hypergraphs, products, and Künneth verification"};
  app.require_subcommand(1);

  Common common;
  std::string in_a, in_b;
  bool closure = false;
  FuzzConfig fuzz;

  auto* homology = app.add_subcommand("homology", "Embedded homology of a hypergraph");
  homology->add_option("input", in_a, "Hypergraph file")->required();
  add_coeff(homology, common);
  add_format(homology, common);

  auto* product = app.add_subcommand("product", "Product H ⊠ H' of two hypergraphs");
  product->add_option("left", in_a, "Left hypergraph file")->required();
  product->add_option("right", in_b, "Right hypergraph file")->required();
  product->add_flag("--closure", closure, "Write the associated simplicial complex of the product");
  add_format(product, common);

  auto* close = app.add_subcommand("closure", "Associated simplicial complex (downward closure)");
  close->add_option("input", in_a, "Hypergraph file")->required();
  add_format(close, common);

  auto* kunneth = app.add_subcommand("kunneth", "Check the Künneth formula for H ⊠ H'");
  kunneth->add_option("left", in_a, "Left hypergraph file")->required();
  kunneth->add_option("right", in_b, "Right hypergraph file")->required();
  add_coeff(kunneth, common);
  add_format(kunneth, common);

  auto* demo = app.add_subcommand("ez-aw-demo", "Shuffle and Alexander-Whitney maps on the square");
  add_format(demo, common);

  auto* fz = app.add_subcommand("fuzz", "Randomized verification over random hypergraph pairs");
  fz->add_option("--seed", fuzz.seed, "Base seed");
  fz->add_option("--count", fuzz.count, "Number of random pairs");
  fz->add_option("--max-vertices", fuzz.max_vertices, "Vertices per factor, at most")->check(CLI::Range(1, 20));
  fz->add_option("--max-dim", common.max_dim, "Hyperedge dimension per factor, at most");
  fz->add_option("--density", fuzz.density, "Probability of each candidate hyperedge")->check(CLI::Range(0.0, 1.0));
  fz->add_option("--projective-fraction", fuzz.projective_fraction,
                 "Probability that a factor is drawn from the projective plane family")
      ->check(CLI::Range(0.0, 1.0));
  fz->add_option("--threads", fuzz.threads, "Worker threads (0: all cores)");
  add_format(fz, common);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return usage;
  }

  try {
    if (*homology) return cmd_homology(common, in_a);
    if (*product) return cmd_product(common, in_a, in_b, closure);
    if (*close) return cmd_closure(common, in_a);
    if (*kunneth) return cmd_kunneth(common, in_a, in_b);
    if (*demo) return cmd_ez_aw_demo(common);
    if (*fz) return cmd_fuzz(common, fuzz);
  } catch (const FormatError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return usage;
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return usage;
  } catch (const ValidationError& e) {
    std::cerr << "validation error: " << e.what() << "\n";
    return validation;
  } catch (const IntegrityError& e) {
    std::cerr << "integrity error: " << e.what() << "\n";
    return integrity;
  }
  return usage;
}
