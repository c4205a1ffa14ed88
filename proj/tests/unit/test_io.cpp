#include <doctest.h>

#include "embhom/checks/random.hpp"
#include "embhom/io.hpp"

using namespace embhom;

TEST_CASE("hypergraph parsing canonicalizes edges") {
  const auto p = io::parse_hypergraph(R"({"vertices":[0,1],"edges":[[1,0]]})");
  const auto& h = std::get<Hypergraph>(p.graph);
  CHECK(h.edges() == std::set<Hyperedge>{Hyperedge({0, 1})});
  CHECK(p.warnings.empty());
}

TEST_CASE("duplicate edges are dropped with a warning") {
  const auto p = io::parse_hypergraph(R"({"vertices":[0,1,2],"edges":[[0,1],[1,0],[2]]})");
  CHECK(std::get<Hypergraph>(p.graph).size() == 2);
  REQUIRE(p.warnings.size() == 1);
  CHECK(p.warnings[0].find("{0,1}") != std::string::npos);
}

TEST_CASE("hypergraph parse errors") {
  CHECK_THROWS_AS(io::parse_hypergraph(R"({"vertices":[0,1],"edges":[[0,2]]})"), ParseError);
  CHECK_THROWS_AS(io::parse_hypergraph(R"({"vertices":[0,1]})"), ParseError);
  CHECK_THROWS_AS(io::parse_hypergraph(R"({"edges":[[0,0]]})"), ParseError);
  CHECK_THROWS_AS(io::parse_hypergraph(R"({"edges":[[]]})"), ParseError);
  CHECK_THROWS_AS(io::parse_hypergraph(R"({"edges":[[-1]]})"), ParseError);
  CHECK_THROWS_AS(io::parse_hypergraph(R"({"edges":[[0]],"directed_edges":[[0]]})"), ParseError);
  try {
    io::parse_hypergraph("{\"edges\":\n  [[0,1],]}");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 2);
    CHECK(e.column() == 10);
  }
}

TEST_CASE("directed input keeps order") {
  const auto p = io::parse_hypergraph(R"({"directed_edges":[[2,0,1]]})");
  const auto& h = std::get<Hyperdigraph>(p.graph);
  CHECK(h.contains(DirectedHyperedge({2, 0, 1})));
  CHECK(h.vertices() == std::set<VertexId>{0, 1, 2});
  const auto forced = io::parse_hypergraph(R"({"edges":[[1,0]]})", true);
  CHECK(std::get<Hyperdigraph>(forced.graph).contains(DirectedHyperedge({1, 0})));
}

TEST_CASE("emit then parse is stable") {
  random::Rng rng(11);
  for (int i = 0; i < 40; ++i) {
    const auto h = random::hypergraph(rng, 2 + i % 6, 4, random::uniform(rng, 0, 8));
    const auto once = std::get<Hypergraph>(io::parse_hypergraph(io::hypergraph_to_json(h).dump()).graph);
    CHECK(once == h);
    const auto twice = std::get<Hypergraph>(io::parse_hypergraph(io::hypergraph_to_json(once).dump()).graph);
    CHECK(twice == once);
    const auto g = random::hyperdigraph(rng, 2 + i % 6, 4, random::uniform(rng, 0, 8));
    CHECK(std::get<Hyperdigraph>(io::parse_hypergraph(io::hypergraph_to_json(g).dump()).graph) == g);
  }
}

TEST_CASE("exact decimals") {
  CHECK(io::parse_decimal("3") == 3);
  CHECK(io::parse_decimal("-0.5") == mpq_class(-1, 2));
  CHECK(io::parse_decimal("1.25e-3") == mpq_class(1, 800));
  CHECK(io::parse_decimal("+2E2") == 200);
  CHECK(io::parse_decimal(".1") == mpq_class(1, 10));
  CHECK(io::parse_decimal("0.1") + io::parse_decimal("0.2") == io::parse_decimal("0.3"));
  for (const char* bad : {"", "-", "e5", "1.2.3", "1e", "1x", "nan"}) {
    CHECK_THROWS_AS(io::parse_decimal(bad), ParseError);
  }
}

TEST_CASE("csv point samples") {
  const auto s = io::parse_point_sample("id,x,y\n0,0,0\n1,0.3,0.4\n");
  CHECK(s.kind() == MetricKind::euclidean);
  CHECK(s.size() == 2);
  CHECK(s.distance(0, 1) == doctest::Approx(0.5));
  // 0.5 separates at r = 0.2499 but not at exactly 0.25.
  CHECK(s.separated(0, 1, 0.2499));
  CHECK_FALSE(s.separated(0, 1, 0.25));
  try {
    io::parse_point_sample("0,0,0\n1,1,oops\n");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 2);
    CHECK(e.column() == 5);
  }
  CHECK_THROWS_AS(io::parse_point_sample("0,0,0\n1,1\n"), ParseError);
  CHECK_THROWS_AS(io::parse_point_sample("0,0\n0,1\n"), ParseError);
  CHECK_THROWS_AS(io::parse_point_sample(""), ParseError);
}

TEST_CASE("json point samples") {
  const auto m = io::parse_point_sample(R"({"distance_matrix":[[0,1],[1,0]],"ids":[5,9]})");
  CHECK(m.kind() == MetricKind::matrix);
  CHECK(m.ids() == std::vector<VertexId>{5, 9});
  const auto c = io::parse_point_sample(R"({"circle_angles":[0, 3.14159],"tolerance":1e-6})");
  CHECK(c.kind() == MetricKind::circle);
  CHECK(c.tolerance() == 1e-6);
  CHECK_THROWS_AS(io::parse_point_sample(R"({"distance_matrix":[[0,1],[2,0]]})"), ParseError);
  CHECK_THROWS_AS(io::parse_point_sample(R"({"circle_angles":[0],"ids":[1,2]})"), ParseError);
  CHECK_THROWS_AS(io::parse_point_sample(R"({"points":[]})"), ParseError);
}
