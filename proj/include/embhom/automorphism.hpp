#pragma once

#include <cstddef>
#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "embhom/hypergraph.hpp"
#include "embhom/metric.hpp"

namespace embhom {

// A bijection of {0..k-1}, stored as its image sequence.
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::vector<std::uint32_t> image);
  static Permutation identity(std::size_t k);

  std::size_t degree() const noexcept { return image_.size(); }
  std::uint32_t operator()(std::size_t x) const { return image_[x]; }
  const std::vector<std::uint32_t>& image() const noexcept { return image_; }
  bool is_identity() const;

  // (a * b)(x) = a(b(x))
  friend Permutation operator*(const Permutation& a, const Permutation& b);
  Permutation inverse() const;

  // Disjoint cycles of length > 1, smallest point first.
  std::vector<std::vector<std::uint32_t>> cycles() const;

  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::vector<std::uint32_t> image_;
};

// An explicitly enumerated finite permutation group with a greedy generating
// set. Construction verifies identity, inverses and closure.
class PermutationGroup {
 public:
  static PermutationGroup from_elements(std::size_t degree, std::vector<Permutation> elements);

  std::size_t degree() const noexcept { return degree_; }
  std::size_t order() const noexcept { return elements_.size(); }
  const std::vector<Permutation>& elements() const noexcept { return elements_; }
  const std::vector<Permutation>& generators() const noexcept { return generators_; }
  bool contains(const Permutation& p) const;

  bool is_subgroup_of(const PermutationGroup& g) const;
  // Subgroup closed under conjugation by every element of g.
  bool is_normal_in(const PermutationGroup& g) const;

  friend bool operator==(const PermutationGroup& a, const PermutationGroup& b) {
    return a.degree_ == b.degree_ && a.elements_ == b.elements_;
  }

 private:
  PermutationGroup() = default;
  std::size_t degree_ = 0;
  std::vector<Permutation> elements_;  // sorted
  std::vector<Permutation> generators_;
};

inline constexpr std::size_t kDefaultMaxGroupVertices = 10;

// Vertex permutations are indexed by position in the sorted vertex set.
template <EdgeOrder O>
PermutationGroup homeo_group(const BasicHypergraph<O>& h, std::size_t cap = kDefaultMaxGroupVertices);

template <EdgeOrder O>
PermutationGroup stab_group(const BasicHypergraph<O>& h, std::size_t cap = kDefaultMaxGroupVertices);

// Homeo acting on the edge list (edges in graded order).
template <EdgeOrder O>
Permutation edge_action(const BasicHypergraph<O>& h, const Permutation& vertex_perm);

struct AutReport {
  std::size_t homeo_order = 0;
  std::size_t stab_order = 0;
  std::size_t aut_order = 0;
  // Aut as a group of edge permutations, with a vertex permutation
  // representing each element.
  PermutationGroup aut = PermutationGroup::from_elements(0, {Permutation()});
  std::vector<Permutation> representatives;
  bool stab_normal = false;
  bool faithful = false;  // kernel of the edge action equals Stab
  bool order_identity = false;
  bool ok() const { return stab_normal && faithful && order_identity; }
};

template <EdgeOrder O>
AutReport aut_group(const BasicHypergraph<O>& h, std::size_t cap = kDefaultMaxGroupVertices);

// Cycles of an edge permutation, written with edge labels: "({0,1} {2,3})".
template <EdgeOrder O>
std::string edge_cycles_to_string(const BasicHypergraph<O>& h, const Permutation& p);

// Every edge permutation of Aut(project(h)) is induced by some element of
// Homeo(h). Throws DomainError unless h is closed under coordinate
// permutations.
bool pi_surjection_check(const Hyperdigraph& h, std::size_t cap = kDefaultMaxGroupVertices);

struct SubgroupIdentityReport {
  bool max_matches_closure = false;       // Homeo(max h) == Homeo(closure h)
  bool min_matches_coclosure = false;     // Homeo(min h) == Homeo(co-closure h)
  bool contained_in_intersection = false; // Homeo(h) within all four
  // Aut orders (quotients), for information.
  std::size_t aut_h = 0, aut_max = 0, aut_closure = 0, aut_min = 0, aut_coclosure = 0, aut_lower = 0,
              aut_lower_coclosure = 0;
  bool ok() const { return max_matches_closure && min_matches_coclosure && contained_in_intersection; }
};

// h is placed on the vertex set `ambient` so all groups act on the same set.
SubgroupIdentityReport subgroup_identities(const Hypergraph& h, const std::set<VertexId>& ambient,
                                           std::size_t cap = kDefaultMaxGroupVertices);

// Distance-preserving bijections of the sample, indexed by sorted point id.
PermutationGroup isom_group(const MetricPointSample& points, std::size_t cap = kDefaultMaxGroupVertices);

struct IsomAutReport {
  std::size_t isom_homeo_order = 0;
  std::size_t isom_stab_order = 0;
  std::size_t aut_order = 0;
  bool normal = false;
};

// (Isom ∩ Homeo(h)) / (Isom ∩ Stab(h)); h must live on the sample's ids.
IsomAutReport aut_isom(const Hypergraph& h, const MetricPointSample& points,
                       std::size_t cap = kDefaultMaxGroupVertices);

}  // namespace embhom
