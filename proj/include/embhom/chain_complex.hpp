#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "embhom/hypergraph.hpp"
#include "embhom/sparse.hpp"

namespace embhom {

// A finite chain complex C_0 <- C_1 <- ... <- C_top with explicit boundary
// matrices B_n : C_n -> C_{n-1}. Degrees above top are zero spaces.
template <class F>
class ChainComplex {
 public:
  explicit ChainComplex(F field) : field_(std::move(field)) {}

  // boundaries[n-1] is B_n for n = 1..dims.size()-1.
  ChainComplex(F field, std::vector<std::size_t> dims, std::vector<SparseMatrix<F>> boundaries)
      : field_(std::move(field)), dims_(std::move(dims)) {
    const std::size_t expected = dims_.empty() ? 0 : dims_.size() - 1;
    if (boundaries.size() != expected) throw DomainError("boundary count does not match degrees");
    for (std::size_t n = 1; n < dims_.size(); ++n) {
      const auto& b = boundaries[n - 1];
      if (b.rows() != dims_[n - 1] || b.cols() != dims_[n]) {
        throw DomainError("boundary matrix B_" + std::to_string(n) + " has the wrong shape");
      }
    }
    boundaries_ = std::move(boundaries);
  }

  const F& field() const noexcept { return field_; }
  // Number of stored degrees (top degree + 1); 0 for the empty complex.
  std::size_t num_degrees() const noexcept { return dims_.size(); }
  std::size_t dim(std::size_t n) const { return n < dims_.size() ? dims_[n] : 0; }
  const std::vector<std::size_t>& dims() const noexcept { return dims_; }
  std::size_t total_dim() const {
    std::size_t s = 0;
    for (std::size_t d : dims_) s += d;
    return s;
  }

  // B_n with shape dim(n-1) x dim(n); zero for n = 0 and beyond the top.
  SparseMatrix<F> boundary(std::size_t n) const {
    if (n >= 1 && n < dims_.size()) return boundaries_[n - 1];
    return SparseMatrix<F>(field_, n == 0 ? 0 : dim(n - 1), dim(n));
  }

  // First degree n with B_n B_{n+1} != 0, if any.
  std::optional<std::size_t> d_squared_failure() const {
    for (std::size_t n = 1; n + 1 < dims_.size(); ++n) {
      if (!multiply(boundaries_[n - 1], boundaries_[n]).is_zero()) return n;
    }
    return std::nullopt;
  }

  void require_d_squared_zero(const std::string& context) const {
    if (auto n = d_squared_failure()) {
      const auto prod = multiply(boundaries_[*n - 1], boundaries_[*n]);
      std::size_t col = 0;
      while (prod.column(col).empty()) ++col;
      throw InvariantViolation(context + ": B_" + std::to_string(*n) + " B_" +
                                   std::to_string(*n + 1) + " != 0",
                               "degree " + std::to_string(*n + 1) + " chain #" +
                                   std::to_string(col) + " has nonzero double boundary");
    }
  }

  friend bool operator==(const ChainComplex& a, const ChainComplex& b) {
    return a.dims_ == b.dims_ && a.boundaries_ == b.boundaries_;
  }

 private:
  F field_;
  std::vector<std::size_t> dims_;
  std::vector<SparseMatrix<F>> boundaries_;
};

// Ordered basis labels per degree; an edge with k vertices sits in degree k-1.
template <EdgeOrder O>
class GradedBasis {
 public:
  using Edge = BasicEdge<O>;

  GradedBasis() = default;

  explicit GradedBasis(const std::set<Edge>& edges) {
    for (const Edge& e : edges) add(e);
  }

  std::size_t num_degrees() const noexcept { return labels_.size(); }
  std::size_t dim(std::size_t n) const { return n < labels_.size() ? labels_[n].size() : 0; }
  const std::vector<Edge>& labels(std::size_t n) const {
    static const std::vector<Edge> kEmpty;
    return n < labels_.size() ? labels_[n] : kEmpty;
  }
  std::optional<std::size_t> index_of(const Edge& e) const {
    const std::size_t n = e.degree();
    if (n >= index_.size()) return std::nullopt;
    auto it = index_[n].find(e);
    if (it == index_[n].end()) return std::nullopt;
    return it->second;
  }
  bool contains(const Edge& e) const { return index_of(e).has_value(); }

  // Appends e to its degree if absent; returns its index.
  std::size_t add(const Edge& e) {
    const std::size_t n = e.degree();
    if (n >= labels_.size()) {
      labels_.resize(n + 1);
      index_.resize(n + 1);
    }
    auto [it, inserted] = index_[n].emplace(e, labels_[n].size());
    if (inserted) labels_[n].push_back(e);
    return it->second;
  }

  std::vector<std::size_t> dims() const {
    std::vector<std::size_t> out;
    for (const auto& l : labels_) out.push_back(l.size());
    return out;
  }

  friend bool operator==(const GradedBasis& a, const GradedBasis& b) { return a.labels_ == b.labels_; }

 private:
  std::vector<std::vector<Edge>> labels_;
  std::vector<std::map<Edge, std::size_t>> index_;
};

enum class MissingFaces { reject, extend };

template <class F, EdgeOrder O>
struct BoundaryColumns {
  SparseMatrix<F> matrix;
  // Codomain labels: labels(n-1) of the basis, followed by any faces added
  // under MissingFaces::extend.
  std::vector<BasicEdge<O>> codomain;
};

// Column for each degree-n label e: sum_i (-1)^i (e with position i removed).
template <class F, EdgeOrder O>
BoundaryColumns<F, O> boundary_matrix(const F& field, const GradedBasis<O>& basis, std::size_t n,
                                      MissingFaces policy = MissingFaces::reject) {
  if (n == 0) throw DomainError("boundary_matrix needs degree n >= 1");
  std::vector<BasicEdge<O>> codomain = basis.labels(n - 1);
  std::map<BasicEdge<O>, std::size_t> index;
  for (std::size_t i = 0; i < codomain.size(); ++i) index.emplace(codomain[i], i);
  std::vector<SparseVector<F>> cols;
  for (const auto& e : basis.labels(n)) {
    std::vector<std::pair<std::size_t, typename F::Element>> entries;
    for (std::size_t i = 0; i < e.size(); ++i) {
      const auto face = e.face(i);
      auto it = index.find(face);
      if (it == index.end()) {
        if (policy == MissingFaces::reject) {
          throw DomainError("face " + face.to_string() + " of " + e.to_string() +
                            " is not in the basis");
        }
        it = index.emplace(face, codomain.size()).first;
        codomain.push_back(face);
      }
      entries.emplace_back(it->second, field.from_int(i % 2 == 0 ? 1 : -1));
    }
    std::sort(entries.begin(), entries.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    SparseVector<F> col;
    for (std::size_t k = 0; k < entries.size(); ++k) {
      if (k + 1 < entries.size() && entries[k].first == entries[k + 1].first) {
        // Only possible for corrupted bases; merge coefficients.
        entries[k + 1].second = field.add(entries[k + 1].second, entries[k].second);
        continue;
      }
      col.push_back(field, entries[k].first, entries[k].second);
    }
    cols.push_back(std::move(col));
  }
  const std::size_t rows = codomain.size();
  return {SparseMatrix<F>::from_columns(field, rows, std::move(cols)), std::move(codomain)};
}

// Chains on a face-closed graded basis.
template <class F, EdgeOrder O>
struct LabeledComplex {
  GradedBasis<O> basis;
  ChainComplex<F> complex;
};

template <class F, EdgeOrder O>
LabeledComplex<F, O> chains_on(const F& field, GradedBasis<O> basis) {
  std::vector<SparseMatrix<F>> bnd;
  for (std::size_t n = 1; n < basis.num_degrees(); ++n) {
    bnd.push_back(boundary_matrix(field, basis, n, MissingFaces::reject).matrix);
  }
  ChainComplex<F> c(field, basis.dims(), std::move(bnd));
  c.require_d_squared_zero("ambient complex");
  return {std::move(basis), std::move(c)};
}

// Closure-mode ambient: chains on the delta closure of h.
template <class F, EdgeOrder O>
LabeledComplex<F, O> ambient_closure(const F& field, const BasicHypergraph<O>& h) {
  return chains_on(field, GradedBasis<O>(delta_closure(h).edges()));
}

inline constexpr std::size_t kDefaultFullSimplexCap = 16;

// Full-simplex ambient: all nonempty subsets of V with at most max_degree+1
// elements (unordered), or all injective words of that length (ordered).
template <class F, EdgeOrder O>
LabeledComplex<F, O> ambient_full(const F& field, const std::set<VertexId>& vertices,
                                  std::size_t max_degree,
                                  std::size_t cap = kDefaultFullSimplexCap) {
  if (vertices.size() > cap) {
    throw ResourceError("full ambient on " + std::to_string(vertices.size()) +
                        " vertices exceeds the cap of " + std::to_string(cap));
  }
  const std::vector<VertexId> v(vertices.begin(), vertices.end());
  std::set<BasicEdge<O>> edges;
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << v.size()); ++mask) {
    std::vector<VertexId> sub;
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (mask & (std::uint64_t{1} << i)) sub.push_back(v[i]);
    }
    if (sub.size() > max_degree + 1) continue;
    if constexpr (O == EdgeOrder::unordered) {
      edges.insert(BasicEdge<O>(std::move(sub)));
    } else {
      do {
        edges.insert(BasicEdge<O>(sub));
      } while (std::next_permutation(sub.begin(), sub.end()));
    }
  }
  return chains_on(field, GradedBasis<O>(edges));
}

// Face-map table of a finite delta set: faces[n][x][i] is the index in degree
// n-1 of the i-th face of element x of degree n.
struct DeltaSet {
  std::vector<std::vector<std::vector<std::size_t>>> faces;
  std::vector<std::size_t> sizes;
};

template <EdgeOrder O>
DeltaSet delta_set_of(const GradedBasis<O>& basis) {
  DeltaSet d;
  d.faces.resize(basis.num_degrees());
  for (std::size_t n = 0; n < basis.num_degrees(); ++n) {
    d.sizes.push_back(basis.dim(n));
    if (n == 0) {
      d.faces[0].assign(basis.dim(0), {});
      continue;
    }
    for (const auto& e : basis.labels(n)) {
      std::vector<std::size_t> row;
      for (std::size_t i = 0; i < e.size(); ++i) {
        auto idx = basis.index_of(e.face(i));
        if (!idx) throw DomainError("basis is not closed under faces at " + e.to_string());
        row.push_back(*idx);
      }
      d.faces[n].push_back(std::move(row));
    }
  }
  return d;
}

struct DeltaViolation {
  std::size_t degree;
  std::size_t element;
  std::size_t i;
  std::size_t j;
};

// First (n, x, i, j) with d_i d_j x != d_{j-1} d_i x for i < j, if any.
std::optional<DeltaViolation> find_delta_violation(const DeltaSet& d);

inline bool delta_identity_holds(const DeltaSet& d) { return !find_delta_violation(d).has_value(); }

template <class F>
struct Homology {
  std::string field;
  std::vector<std::size_t> betti;
  // Optional cycle representatives per degree (columns in chain coordinates).
  std::vector<SparseMatrix<F>> representatives;
};

// Betti numbers: dim_n - rank B_n - rank B_{n+1}. Throws InvariantViolation
// when d^2 != 0.
template <class F>
Homology<F> homology(const ChainComplex<F>& c, bool with_representatives = false) {
  c.require_d_squared_zero("homology");
  Homology<F> h{c.field().name(), {}, {}};
  std::vector<std::size_t> ranks(c.num_degrees() + 1, 0);
  for (std::size_t n = 1; n < c.num_degrees(); ++n) ranks[n] = rank(c.boundary(n));
  for (std::size_t n = 0; n < c.num_degrees(); ++n) {
    h.betti.push_back(c.dim(n) - ranks[n] - ranks[n + 1]);
    if (with_representatives) {
      EchelonBasis<F> span = column_space(c.boundary(n + 1));
      SparseMatrix<F> reps(c.field(), c.dim(n), 0);
      const SparseMatrix<F> z = kernel(c.boundary(n));
      for (const auto& col : z.columns()) {
        if (span.insert(col)) reps.append_column(col);
      }
      h.representatives.push_back(std::move(reps));
    }
  }
  return h;
}

template <class F>
std::vector<std::size_t> betti(const ChainComplex<F>& c) {
  return homology(c).betti;
}

// Per-degree matrices f_n : A_n -> B_n.
template <class F>
struct ChainMap {
  std::vector<SparseMatrix<F>> components;
};

template <class F>
SparseMatrix<F> chain_map_component(const ChainMap<F>& f, const ChainComplex<F>& source,
                                    const ChainComplex<F>& target, std::size_t n) {
  if (n < f.components.size()) return f.components[n];
  return SparseMatrix<F>(source.field(), target.dim(n), source.dim(n));
}

template <class F>
bool is_chain_map(const ChainComplex<F>& a, const ChainComplex<F>& b, const ChainMap<F>& f) {
  const std::size_t top = std::max(a.num_degrees(), b.num_degrees());
  for (std::size_t n = 1; n < top; ++n) {
    const auto lhs = multiply(b.boundary(n), chain_map_component(f, a, b, n));
    const auto rhs = multiply(chain_map_component(f, a, b, n - 1), a.boundary(n));
    if (!(lhs == rhs)) return false;
  }
  return true;
}

// Rank of H_n(a) -> H_n(b) induced by f: dim(f Z_n(a) + B_n(b)) - dim B_n(b).
template <class F>
std::size_t induced_homology_rank(const ChainComplex<F>& a, const ChainComplex<F>& b,
                                  const ChainMap<F>& f, std::size_t n) {
  EchelonBasis<F> span = column_space(b.boundary(n + 1));
  const std::size_t base = span.size();
  const auto fz = multiply(chain_map_component(f, a, b, n), kernel(a.boundary(n)));
  for (const auto& c : fz.columns()) span.insert(c);
  return span.size() - base;
}

// Rank of every component (for surjectivity checks).
template <class F>
std::vector<std::size_t> component_ranks(const ChainMap<F>& f) {
  std::vector<std::size_t> out;
  for (const auto& m : f.components) out.push_back(rank(m));
  return out;
}

template <class F>
struct Laplacian {
  SparseMatrix<F> matrix;
  std::size_t harmonic_rank;
};

// L_n = B_n^T B_n + B_{n+1} B_{n+1}^T in the declared basis; the harmonic
// rank dim_n - rank L_n agrees with the Betti number in characteristic zero.
template <class F>
Laplacian<F> hodge_laplacian(const ChainComplex<F>& c, std::size_t n) {
  const auto down = c.boundary(n);
  const auto up = c.boundary(n + 1);
  auto l = add(multiply(down.transpose(), down), multiply(up, up.transpose()));
  const std::size_t r = rank(l);
  return {std::move(l), c.dim(n) - r};
}

// Permutes the coordinates of a directed edge: position k of the result holds
// entry s[k] of e. No sign is attached.
DirectedHyperedge sigma_action(const DirectedHyperedge& e, const std::vector<std::size_t>& s);

// Dimension of the subspace of span(h_n) fixed by every coordinate
// permutation, computed by linear algebra over Q. Throws DomainError unless h
// is closed under coordinate permutations.
std::size_t invariant_dimension(const Hyperdigraph& h, std::size_t cardinality);

}  // namespace embhom
