#include "embhom/automorphism.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <map>
#include <numeric>

namespace embhom {

Permutation::Permutation(std::vector<std::uint32_t> image) : image_(std::move(image)) {
  std::vector<bool> seen(image_.size(), false);
  for (std::uint32_t x : image_) {
    if (x >= image_.size() || seen[x]) throw DomainError("not a bijection");
    seen[x] = true;
  }
}

Permutation Permutation::identity(std::size_t k) {
  std::vector<std::uint32_t> id(k);
  std::iota(id.begin(), id.end(), 0u);
  return Permutation(std::move(id));
}

bool Permutation::is_identity() const {
  for (std::size_t i = 0; i < image_.size(); ++i) {
    if (image_[i] != i) return false;
  }
  return true;
}

Permutation operator*(const Permutation& a, const Permutation& b) {
  if (a.degree() != b.degree()) throw DomainError("composing permutations of different degree");
  Permutation out;
  out.image_.resize(a.degree());
  for (std::size_t x = 0; x < a.degree(); ++x) out.image_[x] = a.image_[b.image_[x]];
  return out;
}

Permutation Permutation::inverse() const {
  Permutation out;
  out.image_.resize(image_.size());
  for (std::size_t x = 0; x < image_.size(); ++x) out.image_[image_[x]] = static_cast<std::uint32_t>(x);
  return out;
}

std::vector<std::vector<std::uint32_t>> Permutation::cycles() const {
  std::vector<std::vector<std::uint32_t>> out;
  std::vector<bool> seen(image_.size(), false);
  for (std::uint32_t s = 0; s < image_.size(); ++s) {
    if (seen[s] || image_[s] == s) continue;
    std::vector<std::uint32_t> c;
    for (std::uint32_t x = s; !seen[x]; x = image_[x]) {
      seen[x] = true;
      c.push_back(x);
    }
    out.push_back(std::move(c));
  }
  return out;
}

namespace {

std::set<Permutation> generated(const std::vector<Permutation>& gens, std::size_t degree, std::size_t limit) {
  std::set<Permutation> seen{Permutation::identity(degree)};
  std::deque<Permutation> queue{Permutation::identity(degree)};
  while (!queue.empty()) {
    const Permutation p = queue.front();
    queue.pop_front();
    for (const auto& g : gens) {
      Permutation q = p * g;
      if (seen.insert(q).second) {
        if (seen.size() > limit) return seen;
        queue.push_back(std::move(q));
      }
    }
  }
  return seen;
}

}  // namespace

PermutationGroup PermutationGroup::from_elements(std::size_t degree, std::vector<Permutation> elements) {
  PermutationGroup g;
  g.degree_ = degree;
  std::sort(elements.begin(), elements.end());
  elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
  for (const auto& p : elements) {
    if (p.degree() != degree) throw DomainError("group element has the wrong degree");
  }
  g.elements_ = std::move(elements);
  if (!g.contains(Permutation::identity(degree))) {
    throw InvariantViolation("permutation set lacks the identity", std::to_string(g.order()) + " elements");
  }
  std::set<Permutation> span{Permutation::identity(degree)};
  for (const auto& p : g.elements_) {
    if (span.contains(p)) continue;
    g.generators_.push_back(p);
    span = generated(g.generators_, degree, g.order());
    for (const auto& q : span) {
      if (!g.contains(q)) {
        throw InvariantViolation("permutation set is not closed under composition",
                                 "product outside the set, image length " + std::to_string(q.degree()));
      }
    }
  }
  return g;
}

bool PermutationGroup::contains(const Permutation& p) const {
  return std::binary_search(elements_.begin(), elements_.end(), p);
}

bool PermutationGroup::is_subgroup_of(const PermutationGroup& g) const {
  if (degree_ != g.degree_) return false;
  return std::all_of(elements_.begin(), elements_.end(), [&](const Permutation& p) { return g.contains(p); });
}

bool PermutationGroup::is_normal_in(const PermutationGroup& g) const {
  if (!is_subgroup_of(g)) return false;
  constexpr std::size_t kFullCheckLimit = 1'000'000;
  // Conjugating generators by generators is equivalent; use it only when the
  // exhaustive check would be too slow.
  const bool full = g.order() * order() <= kFullCheckLimit;
  const auto& outer = full ? g.elements_ : g.generators_;
  const auto& inner = full ? elements_ : generators_;
  for (const auto& x : outer) {
    const Permutation xi = x.inverse();
    for (const auto& n : inner) {
      if (!contains(x * n * xi)) return false;
    }
  }
  return true;
}

namespace {

template <EdgeOrder O>
struct Indexed {
  std::vector<VertexId> verts;
  std::map<VertexId, std::uint32_t> pos;
  std::vector<std::vector<std::uint32_t>> edges;  // graded order
  std::map<std::vector<std::uint32_t>, std::size_t> edge_index;
  std::vector<std::vector<std::size_t>> edges_closing_at;  // by largest position

  explicit Indexed(const BasicHypergraph<O>& h) : verts(h.vertices().begin(), h.vertices().end()) {
    for (std::uint32_t i = 0; i < verts.size(); ++i) pos.emplace(verts[i], i);
    edges_closing_at.resize(verts.size());
    for (const auto& e : h.edges()) {
      std::vector<std::uint32_t> p;
      for (VertexId v : e.vertices()) p.push_back(pos.at(v));
      edge_index.emplace(p, edges.size());
      edges_closing_at[*std::max_element(p.begin(), p.end())].push_back(edges.size());
      edges.push_back(std::move(p));
    }
  }

  std::vector<std::uint32_t> image(const std::vector<std::uint32_t>& e, const std::vector<std::uint32_t>& f) const {
    std::vector<std::uint32_t> out;
    for (std::uint32_t x : e) out.push_back(f[x]);
    if constexpr (O == EdgeOrder::unordered) std::sort(out.begin(), out.end());
    return out;
  }

  // Edge sizes (and positions, for directed edges) through each vertex.
  std::vector<std::vector<std::pair<std::size_t, std::size_t>>> profiles() const {
    std::vector<std::vector<std::pair<std::size_t, std::size_t>>> out(verts.size());
    for (const auto& e : edges) {
      for (std::size_t k = 0; k < e.size(); ++k) {
        out[e[k]].emplace_back(e.size(), O == EdgeOrder::ordered ? k : 0);
      }
    }
    for (auto& p : out) std::sort(p.begin(), p.end());
    return out;
  }
};

void check_cap(std::size_t n, std::size_t cap) {
  if (n > cap) {
    throw ResourceError("group search on " + std::to_string(n) + " vertices exceeds the cap of " +
                        std::to_string(cap));
  }
}

// Backtracking over vertex bijections; `edge_ok(edge, image)` is tested once
// all vertices of an edge are assigned. `compatible(v, w)` prunes v -> w.
template <EdgeOrder O, class EdgeOk, class Compatible>
std::vector<Permutation> search(const Indexed<O>& ix, EdgeOk&& edge_ok, Compatible&& compatible) {
  const std::size_t k = ix.verts.size();
  std::vector<Permutation> out;
  std::vector<std::uint32_t> f(k);
  std::vector<bool> used(k, false);
  std::function<void(std::size_t)> rec = [&](std::size_t p) {
    if (p == k) {
      out.emplace_back(f);
      return;
    }
    for (std::uint32_t w = 0; w < k; ++w) {
      if (used[w] || !compatible(p, w)) continue;
      f[p] = w;
      bool ok = true;
      for (std::size_t e : ix.edges_closing_at[p]) {
        if (!edge_ok(e, ix.image(ix.edges[e], f))) {
          ok = false;
          break;
        }
      }
      if (!ok) continue;
      used[w] = true;
      rec(p + 1);
      used[w] = false;
    }
  };
  rec(0);
  return out;
}

template <EdgeOrder O>
std::vector<Permutation> homeo_elements(const Indexed<O>& ix) {
  const auto prof = ix.profiles();
  return search(
      ix, [&](std::size_t, const std::vector<std::uint32_t>& img) { return ix.edge_index.contains(img); },
      [&](std::size_t v, std::size_t w) { return prof[v] == prof[w]; });
}

template <EdgeOrder O>
std::vector<Permutation> stab_elements(const Indexed<O>& ix) {
  const auto prof = ix.profiles();
  auto edge_ok = [&](std::size_t e, const std::vector<std::uint32_t>& img) {
    auto canon = ix.edges[e];
    if constexpr (O == EdgeOrder::unordered) std::sort(canon.begin(), canon.end());
    return img == canon;
  };
  return search(ix, edge_ok, [&](std::size_t v, std::size_t w) { return prof[v] == prof[w]; });
}

}  // namespace

template <EdgeOrder O>
PermutationGroup homeo_group(const BasicHypergraph<O>& h, std::size_t cap) {
  check_cap(h.vertices().size(), cap);
  const Indexed<O> ix(h);
  return PermutationGroup::from_elements(ix.verts.size(), homeo_elements(ix));
}

template <EdgeOrder O>
PermutationGroup stab_group(const BasicHypergraph<O>& h, std::size_t cap) {
  check_cap(h.vertices().size(), cap);
  const Indexed<O> ix(h);
  return PermutationGroup::from_elements(ix.verts.size(), stab_elements(ix));
}

template <EdgeOrder O>
Permutation edge_action(const BasicHypergraph<O>& h, const Permutation& g) {
  const Indexed<O> ix(h);
  if (g.degree() != ix.verts.size()) throw DomainError("vertex permutation has the wrong degree");
  std::vector<std::uint32_t> img;
  for (const auto& e : ix.edges) {
    auto it = ix.edge_index.find(ix.image(e, g.image()));
    if (it == ix.edge_index.end()) throw DomainError("vertex permutation does not preserve the edge set");
    img.push_back(static_cast<std::uint32_t>(it->second));
  }
  return Permutation(std::move(img));
}

namespace {

template <EdgeOrder O>
AutReport quotient_report(const BasicHypergraph<O>& h, const PermutationGroup& homeo, const PermutationGroup& stab) {
  AutReport r;
  r.homeo_order = homeo.order();
  r.stab_order = stab.order();
  r.stab_normal = stab.is_normal_in(homeo);
  std::map<Permutation, Permutation> rep_of;
  std::vector<Permutation> kernel;
  for (const auto& g : homeo.elements()) {
    Permutation a = edge_action(h, g);
    if (a.is_identity()) kernel.push_back(g);
    rep_of.emplace(std::move(a), g);
  }
  std::vector<Permutation> aut_elems;
  for (const auto& [a, g] : rep_of) {
    aut_elems.push_back(a);
    r.representatives.push_back(g);
  }
  r.aut = PermutationGroup::from_elements(h.size(), std::move(aut_elems));
  r.aut_order = r.aut.order();
  r.faithful = kernel == stab.elements();
  r.order_identity = r.aut_order * r.stab_order == r.homeo_order;
  return r;
}

}  // namespace

template <EdgeOrder O>
AutReport aut_group(const BasicHypergraph<O>& h, std::size_t cap) {
  return quotient_report(h, homeo_group(h, cap), stab_group(h, cap));
}

template <EdgeOrder O>
std::string edge_cycles_to_string(const BasicHypergraph<O>& h, const Permutation& p) {
  const std::vector<BasicEdge<O>> edges(h.edges().begin(), h.edges().end());
  std::string s;
  for (const auto& c : p.cycles()) {
    s += '(';
    for (std::size_t i = 0; i < c.size(); ++i) {
      if (i) s += ' ';
      s += edges.at(c[i]).to_string();
    }
    s += ')';
  }
  return s.empty() ? "()" : s;
}

bool pi_surjection_check(const Hyperdigraph& h, std::size_t cap) {
  if (!is_sigma_invariant(h)) throw DomainError("hyperdigraph is not closed under coordinate permutations");
  const Hypergraph p = project(h);
  const auto directed = homeo_group(h, cap);
  const auto undirected = aut_group(p, cap);
  std::set<Permutation> induced;
  for (const auto& g : directed.elements()) induced.insert(edge_action(p, g));
  return std::all_of(undirected.aut.elements().begin(), undirected.aut.elements().end(),
                     [&](const Permutation& a) { return induced.contains(a); });
}

SubgroupIdentityReport subgroup_identities(const Hypergraph& h, const std::set<VertexId>& ambient,
                                           std::size_t cap) {
  check_cap(ambient.size(), cap);
  const Hypergraph base(ambient, h.edges());
  const auto mm = max_min_edges(base);
  const Hypergraph closure = delta_closure(base);
  const Hypergraph coclosure = associated_independence(base, ambient);
  const Hypergraph lower = lower_associated(base);
  const Hypergraph lower_co = lower_associated_independence(base, ambient);

  const auto g_h = homeo_group(base, cap);
  const auto g_max = homeo_group(mm.maximal, cap);
  const auto g_min = homeo_group(mm.minimal, cap);
  const auto g_cl = homeo_group(closure, cap);
  const auto g_co = homeo_group(coclosure, cap);
  const auto g_lo = homeo_group(lower, cap);
  const auto g_lc = homeo_group(lower_co, cap);

  SubgroupIdentityReport r;
  r.max_matches_closure = g_max == g_cl;
  r.min_matches_coclosure = g_min == g_co;
  r.contained_in_intersection =
      g_h.is_subgroup_of(g_cl) && g_h.is_subgroup_of(g_co) && g_h.is_subgroup_of(g_lo) && g_h.is_subgroup_of(g_lc);
  auto aut_order = [&](const Hypergraph& x, const PermutationGroup& g) {
    return quotient_report(x, g, stab_group(x, cap)).aut_order;
  };
  r.aut_h = aut_order(base, g_h);
  r.aut_max = aut_order(mm.maximal, g_max);
  r.aut_closure = aut_order(closure, g_cl);
  r.aut_min = aut_order(mm.minimal, g_min);
  r.aut_coclosure = aut_order(coclosure, g_co);
  r.aut_lower = aut_order(lower, g_lo);
  r.aut_lower_coclosure = aut_order(lower_co, g_lc);
  return r;
}

PermutationGroup isom_group(const MetricPointSample& points, std::size_t cap) {
  check_cap(points.size(), cap);
  const std::size_t k = points.size();
  // Sample positions sorted by id, so the group is indexed like homeo_group.
  std::vector<std::size_t> by_id(k);
  std::iota(by_id.begin(), by_id.end(), std::size_t{0});
  std::sort(by_id.begin(), by_id.end(), [&](std::size_t a, std::size_t b) { return points.ids()[a] < points.ids()[b]; });

  std::vector<Permutation> out;
  std::vector<std::uint32_t> f(k);
  std::vector<bool> used(k, false);
  std::function<void(std::size_t)> rec = [&](std::size_t p) {
    if (p == k) {
      out.emplace_back(f);
      return;
    }
    for (std::uint32_t w = 0; w < k; ++w) {
      if (used[w]) continue;
      bool ok = true;
      for (std::size_t q = 0; q < p && ok; ++q) {
        ok = points.compare_distances(by_id[q], by_id[p], by_id[f[q]], by_id[w]) == 0;
      }
      if (!ok) continue;
      f[p] = w;
      used[w] = true;
      rec(p + 1);
      used[w] = false;
    }
  };
  rec(0);
  return PermutationGroup::from_elements(k, std::move(out));
}

IsomAutReport aut_isom(const Hypergraph& h, const MetricPointSample& points, std::size_t cap) {
  if (h.vertices() != points.vertex_set()) throw DomainError("hypergraph must live on the sample's point ids");
  const auto isom = isom_group(points, cap);
  auto intersect = [&](const PermutationGroup& g) {
    std::vector<Permutation> e;
    for (const auto& p : g.elements()) {
      if (isom.contains(p)) e.push_back(p);
    }
    return PermutationGroup::from_elements(g.degree(), std::move(e));
  };
  const auto ih = intersect(homeo_group(h, cap));
  const auto is = intersect(stab_group(h, cap));
  std::set<Permutation> actions;
  for (const auto& g : ih.elements()) actions.insert(edge_action(h, g));
  IsomAutReport r;
  r.isom_homeo_order = ih.order();
  r.isom_stab_order = is.order();
  r.aut_order = actions.size();
  r.normal = is.is_normal_in(ih);
  return r;
}

template PermutationGroup homeo_group(const Hypergraph&, std::size_t);
template PermutationGroup homeo_group(const Hyperdigraph&, std::size_t);
template PermutationGroup stab_group(const Hypergraph&, std::size_t);
template PermutationGroup stab_group(const Hyperdigraph&, std::size_t);
template Permutation edge_action(const Hypergraph&, const Permutation&);
template Permutation edge_action(const Hyperdigraph&, const Permutation&);
template AutReport aut_group(const Hypergraph&, std::size_t);
template AutReport aut_group(const Hyperdigraph&, std::size_t);
template std::string edge_cycles_to_string(const Hypergraph&, const Permutation&);
template std::string edge_cycles_to_string(const Hyperdigraph&, const Permutation&);

}  // namespace embhom
