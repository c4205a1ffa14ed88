#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "embhom/errors.hpp"

namespace embhom {

// Vertices are integers; their total order is integer order.
using VertexId = std::uint32_t;

enum class EdgeOrder { unordered, ordered };

// A hyperedge stored as a vertex sequence. Unordered edges keep their
// vertices strictly increasing; ordered (directed) edges keep the given order
// and only require distinct entries. In both cases the i-th face drops the
// vertex at position i, which is why the two kinds share one implementation.
template <EdgeOrder Order>
class BasicEdge {
 public:
  static constexpr EdgeOrder order = Order;

  // Validating constructor: throws DomainError unless the sequence already
  // satisfies the invariant of this edge kind.
  explicit BasicEdge(std::vector<VertexId> vertices) : vertices_(std::move(vertices)) {
    if (vertices_.empty()) throw DomainError("hyperedge must be nonempty");
    if constexpr (Order == EdgeOrder::unordered) {
      for (std::size_t i = 1; i < vertices_.size(); ++i) {
        if (vertices_[i - 1] >= vertices_[i]) {
          throw DomainError("unordered hyperedge must be strictly increasing: " + to_string());
        }
      }
    } else {
      std::vector<VertexId> sorted = vertices_;
      std::sort(sorted.begin(), sorted.end());
      if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
        throw DomainError("directed hyperedge repeats a vertex: " + to_string());
      }
    }
  }

  BasicEdge(std::initializer_list<VertexId> vertices)
      : BasicEdge(std::vector<VertexId>(vertices)) {}

  // Sorts unordered input; ordered input is taken as is.
  static BasicEdge canonical(std::vector<VertexId> vertices) {
    if constexpr (Order == EdgeOrder::unordered) std::sort(vertices.begin(), vertices.end());
    return BasicEdge(std::move(vertices));
  }

  std::span<const VertexId> vertices() const noexcept { return vertices_; }
  std::size_t size() const noexcept { return vertices_.size(); }
  // Chain degree: an edge with n vertices sits in degree n - 1.
  std::size_t degree() const noexcept { return vertices_.size() - 1; }
  VertexId operator[](std::size_t i) const { return vertices_[i]; }

  // The i-th face map: drop the vertex at position i.
  BasicEdge face(std::size_t i) const {
    if (vertices_.size() < 2) throw DomainError("a single vertex has no faces");
    if (i >= vertices_.size()) throw DomainError("face index out of range");
    std::vector<VertexId> out;
    out.reserve(vertices_.size() - 1);
    for (std::size_t k = 0; k < vertices_.size(); ++k) {
      if (k != i) out.push_back(vertices_[k]);
    }
    return BasicEdge(std::move(out), Trusted{});
  }

  // Subsequence test; for sorted edges this is the subset relation.
  bool is_subsequence_of(const BasicEdge& other) const {
    std::size_t k = 0;
    for (VertexId v : other.vertices_) {
      if (k < vertices_.size() && vertices_[k] == v) ++k;
    }
    return k == vertices_.size();
  }

  bool contains_vertex(VertexId v) const {
    return std::find(vertices_.begin(), vertices_.end(), v) != vertices_.end();
  }

  // Graded order: by cardinality first, then lexicographic.
  friend std::strong_ordering operator<=>(const BasicEdge& a, const BasicEdge& b) {
    if (a.vertices_.size() != b.vertices_.size()) return a.vertices_.size() <=> b.vertices_.size();
    return std::lexicographical_compare_three_way(a.vertices_.begin(), a.vertices_.end(),
                                                  b.vertices_.begin(), b.vertices_.end());
  }
  friend bool operator==(const BasicEdge& a, const BasicEdge& b) = default;

  std::string to_string() const {
    std::string s(Order == EdgeOrder::unordered ? "{" : "(");
    for (std::size_t i = 0; i < vertices_.size(); ++i) {
      if (i) s += ',';
      s += std::to_string(vertices_[i]);
    }
    s += (Order == EdgeOrder::unordered ? "}" : ")");
    return s;
  }

 private:
  struct Trusted {};
  BasicEdge(std::vector<VertexId> vertices, Trusted) : vertices_(std::move(vertices)) {}

  std::vector<VertexId> vertices_;
};

using Hyperedge = BasicEdge<EdgeOrder::unordered>;
using DirectedHyperedge = BasicEdge<EdgeOrder::ordered>;

// A finite hypergraph (unordered) or hyperdigraph (ordered) on an explicit
// vertex set. Edges are kept in graded order, so iterating edges() visits
// cardinality 1 first.
template <EdgeOrder Order>
class BasicHypergraph {
 public:
  using Edge = BasicEdge<Order>;
  static constexpr EdgeOrder order = Order;

  BasicHypergraph() = default;

  // Throws DomainError if an edge uses a vertex outside `vertices`.
  BasicHypergraph(std::set<VertexId> vertices, std::set<Edge> edges)
      : vertices_(std::move(vertices)), edges_(std::move(edges)) {
    for (const Edge& e : edges_) {
      for (VertexId v : e.vertices()) {
        if (!vertices_.contains(v)) {
          throw DomainError("edge " + e.to_string() + " uses vertex " + std::to_string(v) +
                            " outside the vertex set");
        }
      }
    }
  }

  // Vertex set taken to be the support of the edges.
  static BasicHypergraph from_edges(std::set<Edge> edges) {
    std::set<VertexId> support;
    for (const Edge& e : edges) support.insert(e.vertices().begin(), e.vertices().end());
    return BasicHypergraph(std::move(support), std::move(edges));
  }

  static BasicHypergraph from_edges(std::initializer_list<Edge> edges) {
    return from_edges(std::set<Edge>(edges));
  }

  const std::set<VertexId>& vertices() const noexcept { return vertices_; }
  const std::set<Edge>& edges() const noexcept { return edges_; }
  std::size_t size() const noexcept { return edges_.size(); }
  bool empty() const noexcept { return edges_.empty(); }
  bool contains(const Edge& e) const { return edges_.contains(e); }

  // Edges with exactly `cardinality` vertices, in lexicographic order.
  std::vector<Edge> grade(std::size_t cardinality) const {
    std::vector<Edge> out;
    for (const Edge& e : edges_) {
      if (e.size() == cardinality) out.push_back(e);
    }
    return out;
  }

  std::size_t max_cardinality() const noexcept {
    return edges_.empty() ? 0 : edges_.rbegin()->size();
  }

  std::set<VertexId> support() const {
    std::set<VertexId> out;
    for (const Edge& e : edges_) out.insert(e.vertices().begin(), e.vertices().end());
    return out;
  }

  // Edge-set inclusion (vertex sets are not compared).
  bool edges_subset_of(const BasicHypergraph& other) const {
    return std::includes(other.edges_.begin(), other.edges_.end(), edges_.begin(), edges_.end());
  }

  BasicHypergraph with_edges(std::set<Edge> edges) const {
    return BasicHypergraph(vertices_, std::move(edges));
  }

  friend bool operator==(const BasicHypergraph&, const BasicHypergraph&) = default;

  std::string to_string() const {
    std::string s = "[";
    bool first = true;
    for (const Edge& e : edges_) {
      if (!first) s += ' ';
      first = false;
      s += e.to_string();
    }
    return s + "]";
  }

 private:
  std::set<VertexId> vertices_;
  std::set<Edge> edges_;
};

using Hypergraph = BasicHypergraph<EdgeOrder::unordered>;
using Hyperdigraph = BasicHypergraph<EdgeOrder::ordered>;

// Smallest vertex-deletion-closed hypergraph containing h: all nonempty
// subsets (unordered) or subsequences (ordered) of every edge.
template <EdgeOrder O>
BasicHypergraph<O> delta_closure(const BasicHypergraph<O>& h);

// Largest vertex-deletion-closed hypergraph contained in h.
template <EdgeOrder O>
BasicHypergraph<O> lower_associated(const BasicHypergraph<O>& h);

template <EdgeOrder O>
bool is_simplicial(const BasicHypergraph<O>& h);

template <EdgeOrder O>
struct ExtremalEdges {
  BasicHypergraph<O> maximal;
  BasicHypergraph<O> minimal;
};

// Maximal edges are not a proper subsequence of another edge; minimal edges
// have no other edge as a subsequence.
template <EdgeOrder O>
ExtremalEdges<O> max_min_edges(const BasicHypergraph<O>& h);

// Upper bound on the ambient size accepted by the superset-closure operators.
inline constexpr std::size_t kMaxIndependenceAmbient = 20;

// All supersets, within `ambient`, of every edge of h. The result lives on the
// vertex set `ambient`.
Hypergraph associated_independence(const Hypergraph& h, const std::set<VertexId>& ambient);

// Edges of h all of whose supersets within `ambient` are also in h.
Hypergraph lower_associated_independence(const Hypergraph& h, const std::set<VertexId>& ambient);

// Forget the order of every directed edge.
Hypergraph project(const Hyperdigraph& h);

// Every ordering of every edge; project(lift(h)) == h.
Hyperdigraph lift(const Hypergraph& h);

// True iff every coordinate permutation of every edge is present.
bool is_sigma_invariant(const Hyperdigraph& h);

// Image of h under a vertex map. Images of an edge are deduplicated, so the
// cardinality may drop. Throws DomainError if f is undefined on the support.
Hypergraph vertex_map_image(const Hypergraph& h, const std::map<VertexId, VertexId>& f);

// Every permutation of `positions` distinct items, in lexicographic order.
std::vector<std::vector<std::size_t>> all_permutations(std::size_t positions);

}  // namespace embhom
