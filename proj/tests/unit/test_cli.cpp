#include <doctest.h>

#include <cstdlib>

#include "embhom/checks/acceptance.hpp"
#include "embhom/cli.hpp"

using namespace embhom;

namespace {

cli::RunConfig config(const std::string& command, const std::string& fixture = "") {
  cli::RunConfig c;
  c.command = command;
  if (!fixture.empty()) c.inputs.push_back(std::string(EMBHOM_FIXTURE_DIR) + "/" + fixture);
  return c;
}

}  // namespace

TEST_CASE("homology of the hollow triangle") {
  auto c = config("homology", "hollow_triangle_singletons.json");
  const auto r = cli::run(c);
  CHECK(r.exit_code == 0);
  CHECK(r.results["betti"] == nlohmann::json({{"0", 1}, {"1", 1}}));
  c.kind = "sup";
  CHECK(cli::run(c).results["betti"] == nlohmann::json({{"0", 1}, {"1", 1}}));
  c.field = "2";
  CHECK(cli::run(c).results["field"] == "Z/2");
}

TEST_CASE("aut on the disjoint pairs fixture") {
  const auto r = cli::run(config("aut", "groups_disjoint_pairs.json"));
  CHECK(r.results["homeo_order"] == 8);
  CHECK(r.results["stab_order"] == 4);
  CHECK(r.results["aut_order"] == 2);
  CHECK(r.results["aut_generators"] == nlohmann::json::array({"({0,1} {2,3})"}));
}

TEST_CASE("bundle order on a torus") {
  auto c = config("bundle-order");
  c.space = "surface";
  c.genus = 1;
  c.n = 4;
  CHECK(cli::run(c).results["divides"] == 4);
  c.space = "klein";
  CHECK_THROWS_AS(cli::run(c), DomainError);
}

TEST_CASE("report schema and determinism") {
  auto c = config("quasi-check", "directed_path.json");
  const auto a = cli::run(c);
  const auto b = cli::run(c);
  CHECK(a.results.dump() == b.results.dump());
  const auto j = a.to_json();
  CHECK(j["schema"] == cli::kReportSchema);
  CHECK(j["command"] == "quasi-check");
  CHECK(j.contains("timing_ms"));
  CHECK(a.results["is_iso"] == true);
}

TEST_CASE("four-term and quotient commands") {
  const auto f = cli::run(config("four-term", "hollow_triangle_singletons.json"));
  CHECK(f.results["all_identity"] == true);
  CHECK(f.exit_code == 0);
  auto q = config("quotient-check", "groups_overlapping_triples.json");
  q.max_degree = 3;
  const auto r = cli::run(q);
  CHECK(r.results["is_iso"] == true);
  CHECK(r.results["surjective"] == true);
}

TEST_CASE("persist on the equilateral triangle") {
  auto c = config("persist", "equilateral_triangle.json");
  c.n_max = 2;
  c.all_pairs = true;
  const auto r = cli::run(c);
  CHECK(r.results["steps"].size() == 2);
  bool found = false;
  for (const auto& e : r.results["table"]) {
    if (e["degree"] == 0 && e["i"] == 0 && e["j"] == 1) {
      found = true;
      CHECK(e["beta_i"] == 3);
      CHECK(e["beta_j"] == 1);
      CHECK(e["rank"] == 1);
    }
  }
  CHECK(found);
  CHECK(r.results.contains("barcode"));
}

TEST_CASE("config validation and caps") {
  auto c = config("homology", "hollow_triangle_singletons.json");
  c.field = "9";
  CHECK_THROWS_AS(cli::run(c), DomainError);
  c.field = "x";
  CHECK_THROWS_AS(cli::run(c), DomainError);

  auto a = config("aut", "groups_disjoint_pairs.json");
  ::setenv("EMBHOM_MAX_VERTICES", "3", 1);
  a.apply_environment();
  ::unsetenv("EMBHOM_MAX_VERTICES");
  CHECK(a.max_vertices == 3);
  CHECK_THROWS_AS(cli::run(a), ResourceError);

  CHECK_THROWS_AS(cli::run(config("homology", "missing.json")), ParseError);
  CHECK_THROWS_AS(cli::run(config("nonsense")), DomainError);
}

TEST_CASE("counterexample shrinking") {
  const auto h = Hypergraph::from_edges({{0}, {0, 1}, {1, 2}, {0, 1, 2}});
  const auto small = checks::shrink_edges<EdgeOrder::unordered>(
      h, [](const Hypergraph& g) { return g.contains(Hyperedge({0, 1})) && g.size() >= 1; });
  CHECK(small.edges() == std::set<Hyperedge>{Hyperedge({0, 1})});
  CHECK(small.vertices() == h.vertices());
}
