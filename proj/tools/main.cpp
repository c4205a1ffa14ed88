#include <iostream>

#include <CLI11.hpp>

#include "embhom/cli.hpp"
#include "embhom/errors.hpp"

using embhom::cli::RunConfig;

namespace {

void add_output(CLI::App* sub, RunConfig& c) {
  sub->add_option("-o,--output", c.output_path, "Write the JSON report here instead of stdout");
}

void add_caps(CLI::App* sub, RunConfig& c) {
  sub->add_option("--max-vertices", c.max_vertices,
                  "Vertex cap for group searches (env EMBHOM_MAX_VERTICES)")
      ->capture_default_str();
  sub->add_option("--max-ambient", c.max_ambient,
                  "Vertex cap for full-simplex ambients (env EMBHOM_MAX_AMBIENT)")
      ->capture_default_str();
}

CLI::App* hypergraph_command(CLI::App& app, const std::string& name, const std::string& about, RunConfig& c,
                             bool with_field) {
  auto* sub = app.add_subcommand(name, about);
  sub->add_option("input", c.inputs, "Hypergraph JSON file")->required()->expected(1);
  sub->add_flag("--directed", c.directed, "Read \"edges\" rows as directed words");
  if (with_field) sub->add_option("--field", c.field, "Coefficient field: Q or a prime p")->capture_default_str();
  add_caps(sub, c);
  add_output(sub, c);
  return sub;
}

}  // namespace

int main(int argc, char** argv) {
  RunConfig c;
  CLI::App app{"Embedded homology of hypergraphs and hard-sphere configuration hypergraphs"};
  app.require_subcommand(1);

  hypergraph_command(app, "closure", "Face closure and lower-associated complex", c, false);
  hypergraph_command(app, "homology", "Betti numbers of the Inf, Sup or ambient complex", c, true)
      ->add_option("--kind", c.kind, "inf|sup|ambient")
      ->check(CLI::IsMember({"inf", "sup", "ambient"}))
      ->capture_default_str();
  hypergraph_command(app, "quasi-check", "Check that Inf -> Sup induces isomorphisms in homology", c, true);
  hypergraph_command(app, "four-term", "Four-term cochain sequence and its consistency checks", c, true);
  hypergraph_command(app, "quotient-check", "Check C/Inf -> C/Sup inside the full simplex", c, true)
      ->add_option("--max-degree", c.max_degree, "Top degree of the full simplex ambient");
  hypergraph_command(app, "aut", "Homeo, Stab and Aut group orders", c, false);

  auto* persist = app.add_subcommand("persist", "Persistent embedded homology of a point sample");
  persist->add_option("input", c.inputs, "Point sample: CSV id,x1,..,xd or JSON")->required()->expected(1);
  persist->add_option("--n-max", c.n_max, "Largest hyperedge cardinality")->capture_default_str();
  persist->add_option("--kind", c.kind, "inf|sup")->check(CLI::IsMember({"inf", "sup"}))->capture_default_str();
  persist->add_flag("--all-pairs", c.all_pairs, "Compute ranks for every pair of steps");
  persist->add_option("--table", c.table_path, "Write the rank table as CSV");
  persist->add_option("--barcode", c.barcode_path, "Write the barcode as JSON (implies --all-pairs)");
  add_output(persist, c);

  auto* isom = app.add_subcommand("isom", "Isometry group of a point sample, optionally against a hypergraph");
  isom->add_option("inputs", c.inputs, "Point sample, then an optional hypergraph JSON")->required()->expected(1, 2);
  add_caps(isom, c);
  add_output(isom, c);

  auto* bundle = app.add_subcommand("bundle-order", "Divisor bound on the order of the configuration bundle");
  bundle->add_option("--space", c.space, "surface|euclidean|sphere|rp|rp-x-euclidean")->required();
  bundle->add_option("--n", c.n, "Number of points")->required();
  bundle->add_option("--m", c.m, "Dimension parameter");
  bundle->add_option("--genus", c.genus, "Surface genus (at least 1)");
  bundle->add_option("--k", c.k, "Euclidean factor dimension for rp-x-euclidean");
  bundle->add_option("--N", c.n_embed, "Embedding dimension of RP^m (known for m <= 4)");
  add_output(bundle, c);

  auto* embed = app.add_subcommand("embed-bound", "Lower bound t + k on the ambient dimension");
  embed->add_option("--t", c.t, "Degree of the nonzero dual class")->required();
  embed->add_option("--k", c.k, "Regularity k (at least 1)")->required();
  add_output(embed, c);

  auto* selftest = app.add_subcommand("selftest", "Run the acceptance property suites");
  selftest->add_option("--seed", c.seed, "Random seed")->capture_default_str();
  add_output(selftest, c);

  try {
    c.apply_environment();
  } catch (const embhom::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return embhom::cli::kBadInput;
  }
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : embhom::cli::kBadInput;
  }
  c.command = app.get_subcommands().front()->get_name();

  try {
    const auto report = embhom::cli::run(c);
    for (const auto& w : report.warnings) std::cerr << "warning: " << w << "\n";
    embhom::cli::emit_report(report, c.output_path);
    return report.exit_code;
  } catch (const embhom::ResourceError& e) {
    std::cerr << "resource cap: " << e.what() << "\n";
    return embhom::cli::kResourceCap;
  } catch (const embhom::InvariantViolation& e) {
    std::cerr << "invariant violated: " << e.what() << "\ncertificate: " << e.certificate() << "\n";
    return embhom::cli::kCheckFailed;
  } catch (const embhom::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return embhom::cli::kBadInput;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
}
