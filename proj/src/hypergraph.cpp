#include "embhom/hypergraph.hpp"

#include <numeric>

namespace embhom {

namespace {

constexpr std::size_t kMaxSubsetEnumeration = 24;

template <EdgeOrder O>
void insert_subsequences(const BasicEdge<O>& e, std::set<BasicEdge<O>>& out) {
  const std::size_t n = e.size();
  if (n > kMaxSubsetEnumeration) {
    throw ResourceError("edge " + e.to_string() + " is too large for closure enumeration");
  }
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask) {
    std::vector<VertexId> sub;
    for (std::size_t i = 0; i < n; ++i) {
      if (mask & (std::uint64_t{1} << i)) sub.push_back(e[i]);
    }
    out.insert(BasicEdge<O>(std::move(sub)));
  }
}

void check_ambient(const Hypergraph& h, const std::set<VertexId>& ambient) {
  for (VertexId v : h.support()) {
    if (!ambient.contains(v)) {
      throw DomainError("ambient vertex set does not contain vertex " + std::to_string(v));
    }
  }
  if (ambient.size() > kMaxIndependenceAmbient) {
    throw ResourceError("ambient vertex set of size " + std::to_string(ambient.size()) +
                        " exceeds the superset-enumeration cap of " +
                        std::to_string(kMaxIndependenceAmbient));
  }
}

// Calls visit(superset) for each superset of e inside ambient until visit
// returns false. Returns false if stopped early.
template <class Visit>
bool for_each_superset(const Hyperedge& e, const std::set<VertexId>& ambient, Visit&& visit) {
  std::vector<VertexId> extra;
  for (VertexId v : ambient) {
    if (!e.contains_vertex(v)) extra.push_back(v);
  }
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << extra.size()); ++mask) {
    std::vector<VertexId> verts(e.vertices().begin(), e.vertices().end());
    for (std::size_t i = 0; i < extra.size(); ++i) {
      if (mask & (std::uint64_t{1} << i)) verts.push_back(extra[i]);
    }
    if (!visit(Hyperedge::canonical(std::move(verts)))) return false;
  }
  return true;
}

}  // namespace

template <EdgeOrder O>
BasicHypergraph<O> delta_closure(const BasicHypergraph<O>& h) {
  std::set<BasicEdge<O>> out;
  for (const auto& e : h.edges()) insert_subsequences(e, out);
  return h.with_edges(std::move(out));
}

template <EdgeOrder O>
BasicHypergraph<O> lower_associated(const BasicHypergraph<O>& h) {
  // Graded order guarantees faces are decided before their cofaces.
  std::set<BasicEdge<O>> out;
  for (const auto& e : h.edges()) {
    bool closed = true;
    for (std::size_t i = 0; e.size() > 1 && i < e.size(); ++i) {
      if (!out.contains(e.face(i))) {
        closed = false;
        break;
      }
    }
    if (closed) out.insert(e);
  }
  return h.with_edges(std::move(out));
}

template <EdgeOrder O>
bool is_simplicial(const BasicHypergraph<O>& h) {
  for (const auto& e : h.edges()) {
    for (std::size_t i = 0; e.size() > 1 && i < e.size(); ++i) {
      if (!h.contains(e.face(i))) return false;
    }
  }
  return true;
}

template <EdgeOrder O>
ExtremalEdges<O> max_min_edges(const BasicHypergraph<O>& h) {
  std::set<BasicEdge<O>> maximal;
  std::set<BasicEdge<O>> minimal;
  const std::vector<BasicEdge<O>> edges(h.edges().begin(), h.edges().end());
  for (const auto& e : edges) {
    bool is_max = true;
    bool is_min = true;
    for (const auto& f : edges) {
      if (f == e) continue;
      if (f.size() > e.size() && e.is_subsequence_of(f)) is_max = false;
      if (f.size() < e.size() && f.is_subsequence_of(e)) is_min = false;
    }
    if (is_max) maximal.insert(e);
    if (is_min) minimal.insert(e);
  }
  return {h.with_edges(std::move(maximal)), h.with_edges(std::move(minimal))};
}

Hypergraph associated_independence(const Hypergraph& h, const std::set<VertexId>& ambient) {
  check_ambient(h, ambient);
  std::set<Hyperedge> out;
  for (const Hyperedge& e : h.edges()) {
    for_each_superset(e, ambient, [&](Hyperedge s) {
      out.insert(std::move(s));
      return true;
    });
  }
  return Hypergraph(ambient, std::move(out));
}

Hypergraph lower_associated_independence(const Hypergraph& h, const std::set<VertexId>& ambient) {
  check_ambient(h, ambient);
  std::set<Hyperedge> out;
  for (const Hyperedge& e : h.edges()) {
    const bool all_present =
        for_each_superset(e, ambient, [&](const Hyperedge& s) { return h.contains(s); });
    if (all_present) out.insert(e);
  }
  return Hypergraph(ambient, std::move(out));
}

Hypergraph project(const Hyperdigraph& h) {
  std::set<Hyperedge> out;
  for (const DirectedHyperedge& e : h.edges()) {
    out.insert(Hyperedge::canonical({e.vertices().begin(), e.vertices().end()}));
  }
  return Hypergraph(h.vertices(), std::move(out));
}

std::vector<std::vector<std::size_t>> all_permutations(std::size_t positions) {
  std::vector<std::size_t> p(positions);
  std::iota(p.begin(), p.end(), std::size_t{0});
  std::vector<std::vector<std::size_t>> out;
  do {
    out.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

Hyperdigraph lift(const Hypergraph& h) {
  std::set<DirectedHyperedge> out;
  for (const Hyperedge& e : h.edges()) {
    std::vector<VertexId> v(e.vertices().begin(), e.vertices().end());
    do {
      out.insert(DirectedHyperedge(v));
    } while (std::next_permutation(v.begin(), v.end()));
  }
  return Hyperdigraph(h.vertices(), std::move(out));
}

bool is_sigma_invariant(const Hyperdigraph& h) {
  for (const DirectedHyperedge& e : h.edges()) {
    std::vector<VertexId> v(e.vertices().begin(), e.vertices().end());
    std::sort(v.begin(), v.end());
    do {
      if (!h.contains(DirectedHyperedge(v))) return false;
    } while (std::next_permutation(v.begin(), v.end()));
  }
  return true;
}

Hypergraph vertex_map_image(const Hypergraph& h, const std::map<VertexId, VertexId>& f) {
  auto image_of = [&](VertexId v) {
    auto it = f.find(v);
    if (it == f.end()) {
      throw DomainError("vertex map is undefined at vertex " + std::to_string(v));
    }
    return it->second;
  };
  std::set<VertexId> vertices;
  for (VertexId v : h.vertices()) {
    if (auto it = f.find(v); it != f.end()) vertices.insert(it->second);
  }
  std::set<Hyperedge> out;
  for (const Hyperedge& e : h.edges()) {
    std::vector<VertexId> img;
    for (VertexId v : e.vertices()) img.push_back(image_of(v));
    std::sort(img.begin(), img.end());
    img.erase(std::unique(img.begin(), img.end()), img.end());
    vertices.insert(img.begin(), img.end());
    out.insert(Hyperedge(std::move(img)));
  }
  return Hypergraph(std::move(vertices), std::move(out));
}

template Hypergraph delta_closure(const Hypergraph&);
template Hyperdigraph delta_closure(const Hyperdigraph&);
template Hypergraph lower_associated(const Hypergraph&);
template Hyperdigraph lower_associated(const Hyperdigraph&);
template bool is_simplicial(const Hypergraph&);
template bool is_simplicial(const Hyperdigraph&);
template ExtremalEdges<EdgeOrder::unordered> max_min_edges(const Hypergraph&);
template ExtremalEdges<EdgeOrder::ordered> max_min_edges(const Hyperdigraph&);

}  // namespace embhom
