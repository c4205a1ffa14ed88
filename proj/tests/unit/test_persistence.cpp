#include <doctest.h>

#include <cmath>
#include <numbers>

#include "embhom/persistence.hpp"

using namespace embhom;

namespace {

constexpr double kPi = std::numbers::pi;

MetricPointSample regular_circle(std::size_t k) {
  std::vector<VertexId> ids;
  std::vector<double> angles;
  for (std::size_t i = 0; i < k; ++i) {
    ids.push_back(static_cast<VertexId>(i));
    angles.push_back(2 * kPi * static_cast<double>(i) / static_cast<double>(k));
  }
  return MetricPointSample::circle(ids, angles);
}

MetricPointSample triangle(double s) {
  return MetricPointSample::from_matrix({0, 1, 2}, {{0, s, s}, {s, 0, s}, {s, s, 0}});
}

}  // namespace

TEST_CASE("point sample validation") {
  CHECK_THROWS_AS(MetricPointSample::from_matrix({0, 1}, {{0, 1}, {2, 0}}), DomainError);
  CHECK_THROWS_AS(MetricPointSample::from_matrix({0, 1}, {{0, 0}, {0, 0}}), DomainError);
  CHECK_THROWS_AS(MetricPointSample::euclidean(std::vector<VertexId>{0, 0}, std::vector<std::vector<double>>{{0}, {1}}),
                  DomainError);
  CHECK_THROWS_AS(MetricPointSample::circle({0, 1}, {0.0, 2 * kPi}), DomainError);
}

TEST_CASE("hard sphere basics") {
  const auto line = MetricPointSample::euclidean(std::vector<VertexId>{0, 1, 2},
                                                 std::vector<std::vector<double>>{{0}, {1}, {3}});
  const auto h0 = hard_sphere(line, 0.0, 2);
  CHECK(h0.size() == 6);
  CHECK_THROWS_AS(hard_sphere(line, 0.0, 0), DomainError);
  // d = 1 at r = 0.5 is not separated.
  CHECK_FALSE(hard_sphere(line, 0.5, 2).contains(Hyperedge({0, 1})));
  CHECK(hard_sphere(line, 0.49, 2).contains(Hyperedge({0, 1})));

  const auto tri = hard_sphere(triangle(2.0), 0.999, 3);
  CHECK(tri.grade(2).size() == 3);
  CHECK(tri.grade(3).size() == 1);
}

TEST_CASE("twelve points on the circle") {
  const auto c = regular_circle(12);
  CHECK(hard_sphere(c, kPi / 3, 3).grade(3).empty());
  CHECK_FALSE(hard_sphere(c, kPi / 3 - 1e-6, 3).grade(3).empty());
  CHECK(emptiness_threshold(c, 3) == doctest::Approx(kPi / 3));
  CHECK(emptiness_threshold(c, 4) == doctest::Approx(kPi / 4));
  CHECK(hard_sphere(c, kPi / 4, 4).grade(4).empty());
  CHECK_FALSE(hard_sphere(c, kPi / 4 - 1e-6, 4).grade(4).empty());
  CHECK(std::isinf(emptiness_threshold(c, 1)));
  CHECK(emptiness_threshold(regular_circle(2), 3) == 0.0);
  CHECK_THROWS_AS(emptiness_threshold(triangle(1.0), 2), DomainError);
}

TEST_CASE("critical radii") {
  CHECK(critical_radii(MetricPointSample::from_matrix({0, 1}, {{0, 2}, {2, 0}}), 2) == std::vector<double>{1.0});
  CHECK(critical_radii(triangle(3.0), 2) == std::vector<double>{1.5});
  const auto line = MetricPointSample::euclidean(std::vector<VertexId>{0, 1, 2},
                                                 std::vector<std::vector<double>>{{0}, {1}, {3}});
  CHECK(critical_radii(line, 2) == std::vector<double>{0.5, 1.0, 1.5});
  CHECK_THROWS_AS(critical_radii(MetricPointSample::from_matrix({0}, {{0}}), 2), DomainError);
}

TEST_CASE("filtration structure") {
  auto steps = build_filtration(MetricPointSample::from_matrix({0, 1}, {{0, 2}, {2, 0}}), 2);
  REQUIRE(steps.size() == 2);
  CHECK(steps[0].hypergraph.size() == 2);
  CHECK(steps[1].hypergraph.size() == 3);
  CHECK(std::isinf(steps[0].upper));
  CHECK(steps[1].lower == 0.0);

  steps = build_filtration(triangle(2.0), 3);
  REQUIRE(steps.size() == 2);
  CHECK(steps[1].hypergraph.grade(3).size() == 1);

  steps = build_filtration(MetricPointSample::from_matrix({7}, {{0}}), 3);
  REQUIRE(steps.size() == 1);
  CHECK(steps[0].hypergraph.edges() == std::set<Hyperedge>{Hyperedge({7})});
}

TEST_CASE("steps match hard sphere at the representative radius") {
  const auto line = MetricPointSample::euclidean(std::vector<VertexId>{0, 1, 2, 3},
                                                 std::vector<std::vector<double>>{{0, 0}, {1, 0}, {0, 2}, {3, 1}});
  for (const auto& s : build_filtration(line, 3)) {
    CHECK(s.hypergraph == hard_sphere(line, s.representative, 3));
  }
}

TEST_CASE("triangle persistence") {
  const auto steps = build_filtration(triangle(2.0), 2);
  const auto t = persistent_betti(steps, EmbeddedKind::inf);
  const auto d0 = t.find(0, 0, 1);
  REQUIRE(d0);
  CHECK(d0->betti_from == 3);
  CHECK(d0->betti_to == 1);
  CHECK(d0->rank == 1);
  const auto d1 = t.find(1, 0, 1);
  REQUIRE(d1);
  CHECK(d1->betti_from == 0);
  CHECK(d1->betti_to == 1);
  CHECK(d1->rank == 0);
}

TEST_CASE("single step table equals plain betti") {
  const auto steps = build_filtration(MetricPointSample::from_matrix({4}, {{0}}), 2);
  const auto t = persistent_betti(steps, EmbeddedKind::sup, true);
  const auto e = t.find(0, 0, 0);
  REQUIRE(e);
  CHECK(e->rank == 1);
  CHECK(e->betti_from == 1);
}

TEST_CASE("non-nested filtration is rejected") {
  std::vector<FiltrationStep> steps(2);
  steps[0].hypergraph = Hypergraph::from_edges({{0}, {1}});
  steps[1].hypergraph = Hypergraph::from_edges({{0}});
  CHECK_THROWS_AS(persistent_betti(steps, EmbeddedKind::inf), DomainError);
}

TEST_CASE("barcode of the triangle") {
  const auto steps = build_filtration(triangle(2.0), 2);
  const auto t = persistent_betti(steps, EmbeddedKind::inf, true);
  const auto bars = barcode(t, steps);
  std::size_t finite0 = 0, infinite0 = 0, infinite1 = 0;
  for (const auto& b : bars) {
    if (b.degree == 0 && b.death_step) finite0 += b.multiplicity;
    if (b.degree == 0 && !b.death_step) infinite0 += b.multiplicity;
    if (b.degree == 1 && !b.death_step) infinite1 += b.multiplicity;
  }
  CHECK(finite0 == 2);
  CHECK(infinite0 == 1);
  CHECK(infinite1 == 1);
  const auto line = build_filtration(MetricPointSample::euclidean(std::vector<VertexId>{0, 1, 2},
                                                                  std::vector<std::vector<double>>{{0}, {1}, {3}}),
                                     2);
  CHECK_THROWS_AS(barcode(persistent_betti(line, EmbeddedKind::inf, false), line), DomainError);
}
