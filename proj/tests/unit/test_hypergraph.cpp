#include <doctest.h>

#include "embhom/hypergraph.hpp"

using namespace embhom;

namespace {

Hypergraph hg(std::initializer_list<Hyperedge> edges) { return Hypergraph::from_edges(edges); }

Hypergraph on(std::set<VertexId> v, std::initializer_list<Hyperedge> edges) {
  return Hypergraph(std::move(v), std::set<Hyperedge>(edges));
}

}  // namespace

TEST_CASE("edge validation") {
  CHECK_THROWS_AS(Hyperedge(std::vector<VertexId>{}), DomainError);
  CHECK_THROWS_AS(Hyperedge({1, 0}), DomainError);
  CHECK_THROWS_AS(DirectedHyperedge({1, 1}), DomainError);
  CHECK(DirectedHyperedge({1, 0}).to_string() == "(1,0)");
  CHECK(Hyperedge::canonical({2, 0, 1}) == Hyperedge({0, 1, 2}));
  CHECK(Hyperedge({0, 1, 2}).face(1) == Hyperedge({0, 2}));
  CHECK(DirectedHyperedge({2, 0, 1}).face(0) == DirectedHyperedge({0, 1}));
}

TEST_CASE("graded order puts smaller edges first") {
  CHECK(Hyperedge({5}) < Hyperedge({0, 1}));
  CHECK(Hyperedge({0, 2}) < Hyperedge({1, 2}));
}

TEST_CASE("vertex outside the vertex set is rejected") {
  CHECK_THROWS_AS(on({0}, {{0, 1}}), DomainError);
}

TEST_CASE("delta closure") {
  const auto c = delta_closure(hg({{0, 1, 2}}));
  CHECK(c.size() == 7);
  CHECK(c == hg({{0}, {1}, {2}, {0, 1}, {0, 2}, {1, 2}, {0, 1, 2}}));

  const auto d = delta_closure(Hyperdigraph::from_edges({{1, 0}}));
  CHECK(d == Hyperdigraph::from_edges({{1}, {0}, {1, 0}}));

  const auto e = delta_closure(hg({{0, 1}, {1, 2}, {0, 1, 2}}));
  CHECK(e == hg({{0}, {1}, {2}, {0, 1}, {0, 2}, {1, 2}, {0, 1, 2}}));
  CHECK(delta_closure(e) == e);
}

TEST_CASE("lower associated") {
  const auto s = delta_closure(hg({{0, 1, 2}}));
  CHECK(lower_associated(s) == s);
  CHECK(lower_associated(hg({{0, 1}, {1, 2}, {0, 1, 2}})).empty());
  const auto h = hg({{0}, {1}, {0, 1}, {1, 2}});
  CHECK(lower_associated(h).edges() == hg({{0}, {1}, {0, 1}}).edges());
}

TEST_CASE("associated independence") {
  CHECK(associated_independence(hg({{0, 1}}), {0, 1}).edges() == hg({{0, 1}}).edges());
  CHECK(associated_independence(hg({{0, 1}}), {0, 1, 2}).edges() == hg({{0, 1}, {0, 1, 2}}).edges());
  const auto r = associated_independence(on({0, 1, 2}, {{0}, {2}}), {0, 1, 2});
  CHECK(r.size() == 6);
  CHECK_FALSE(r.contains(Hyperedge({1})));
  CHECK_THROWS_AS(associated_independence(hg({{0, 5}}), {0, 1}), DomainError);
}

TEST_CASE("lower associated independence") {
  const auto full = hg({{0}, {1}, {0, 1}});
  CHECK(lower_associated_independence(full, {0, 1}).edges() == full.edges());
  CHECK(lower_associated_independence(hg({{0, 1}, {0, 1, 2}}), {0, 1, 2}).edges() ==
        hg({{0, 1}, {0, 1, 2}}).edges());
  CHECK(lower_associated_independence(hg({{0, 1}}), {0, 1, 2}).empty());
}

TEST_CASE("maximal and minimal edges") {
  auto mm = max_min_edges(hg({{0, 1}, {0, 1, 2}}));
  CHECK(mm.maximal.edges() == hg({{0, 1, 2}}).edges());
  CHECK(mm.minimal.edges() == hg({{0, 1}}).edges());
  mm = max_min_edges(delta_closure(hg({{0, 1, 2}})));
  CHECK(mm.maximal.size() == 1);
  CHECK(mm.minimal.edges() == hg({{0}, {1}, {2}}).edges());
  mm = max_min_edges(hg({{0, 1}, {2, 3}}));
  CHECK(mm.maximal.size() == 2);
  CHECK(mm.minimal.size() == 2);
}

TEST_CASE("max and min identities") {
  const auto h = on({0, 1, 2, 3}, {{0, 1}, {1, 2, 3}, {2}, {0, 1, 3}});
  const std::set<VertexId> v = h.vertices();
  CHECK(max_min_edges(h).maximal.edges() == max_min_edges(delta_closure(h)).maximal.edges());
  CHECK(delta_closure(h) == delta_closure(max_min_edges(h).maximal));
  CHECK(max_min_edges(h).minimal.edges() == max_min_edges(associated_independence(h, v)).minimal.edges());
  CHECK(associated_independence(h, v) == associated_independence(max_min_edges(h).minimal, v));
}

TEST_CASE("project and lift") {
  CHECK(project(Hyperdigraph::from_edges({{1, 0}})) == hg({{0, 1}}));
  Hyperdigraph all6 = lift(hg({{0, 1, 2}}));
  CHECK(all6.size() == 6);
  CHECK(project(all6) == hg({{0, 1, 2}}));
  CHECK(project(Hyperdigraph::from_edges({{0, 1}, {1, 2}})) == hg({{0, 1}, {1, 2}}));
  CHECK(lift(hg({{0, 1}})) == Hyperdigraph::from_edges({{0, 1}, {1, 0}}));
  CHECK(lift(Hypergraph()).empty());
}

TEST_CASE("sigma invariance") {
  CHECK(is_sigma_invariant(lift(hg({{0, 1, 2}, {3, 4}}))));
  CHECK_FALSE(is_sigma_invariant(Hyperdigraph::from_edges({{0, 1}})));
}

TEST_CASE("vertex map image") {
  const auto h = hg({{0, 2}, {1}});
  CHECK(vertex_map_image(h, {{0, 0}, {1, 1}, {2, 2}}) == h);
  CHECK(vertex_map_image(hg({{0, 1}}), {{0, 0}, {1, 0}}).edges() == hg({{0}}).edges());
  CHECK(vertex_map_image(hg({{0, 2}}), {{0, 1}, {1, 0}, {2, 2}}).edges() == hg({{1, 2}}).edges());
  CHECK_THROWS_AS(vertex_map_image(hg({{0, 2}}), {{0, 1}}), DomainError);
}

TEST_CASE("is simplicial") {
  CHECK(is_simplicial(delta_closure(hg({{0, 1, 2}}))));
  CHECK_FALSE(is_simplicial(hg({{0, 1}})));
  CHECK(is_simplicial(Hypergraph()));
}

TEST_CASE("all permutations") {
  CHECK(all_permutations(3).size() == 6);
  CHECK(all_permutations(0).size() == 1);
}
