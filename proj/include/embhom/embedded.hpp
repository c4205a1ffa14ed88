#pragma once

#include <cstddef>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "embhom/chain_complex.hpp"

namespace embhom {

// A subcomplex of an ambient chain complex, given by an echelon basis of each
// degree in ambient coordinates, together with the restricted boundaries in
// that basis.
template <class F>
struct Subcomplex {
  std::vector<EchelonBasis<F>> spans;
  ChainComplex<F> complex;

  std::size_t dim(std::size_t n) const { return complex.dim(n); }
  SparseMatrix<F> basis_matrix(std::size_t n) const { return spans.at(n).as_matrix(); }
};

// Builds the represented complex of a degreewise family of subspaces. Throws
// DomainError when the ambient boundary does not map the family into itself.
template <class F>
Subcomplex<F> subcomplex_from_spans(const ChainComplex<F>& ambient, std::vector<EchelonBasis<F>> spans) {
  const F& field = ambient.field();
  std::vector<std::size_t> dims;
  for (const auto& s : spans) dims.push_back(s.size());
  std::vector<SparseMatrix<F>> bnd;
  for (std::size_t n = 1; n < spans.size(); ++n) {
    const SparseMatrix<F> b = ambient.boundary(n);
    SparseMatrix<F> restricted(field, spans[n - 1].size(), 0);
    for (std::size_t k = 0; k < spans[n].size(); ++k) {
      auto coords = spans[n - 1].coordinates(b.apply(spans[n].vector(k)));
      if (!coords) {
        throw DomainError("family is not a subcomplex: boundary leaves the span in degree " +
                          std::to_string(n - 1));
      }
      restricted.append_column(std::move(*coords));
    }
    bnd.push_back(std::move(restricted));
  }
  ChainComplex<F> c(field, std::move(dims), std::move(bnd));
  c.require_d_squared_zero("subcomplex");
  return {std::move(spans), std::move(c)};
}

// Selected[n] lists ambient basis indices in degree n spanning the graded
// subspace D.
using IndexFamily = std::vector<std::vector<std::size_t>>;

namespace detail {

inline const std::vector<std::size_t>& selected_at(const IndexFamily& s, std::size_t n) {
  static const std::vector<std::size_t> kNone;
  return n < s.size() ? s[n] : kNone;
}

}  // namespace detail

// Largest subcomplex inside D: Inf_n = { x in D_n : B_n x in D_{n-1} }.
template <class F>
Subcomplex<F> inf_subcomplex(const ChainComplex<F>& ambient, const IndexFamily& selected) {
  const F& field = ambient.field();
  std::vector<EchelonBasis<F>> spans;
  for (std::size_t n = 0; n < ambient.num_degrees(); ++n) {
    EchelonBasis<F> span(field, ambient.dim(n));
    const auto& cols = detail::selected_at(selected, n);
    if (n == 0) {
      for (std::size_t i : cols) span.insert(SparseVector<F>::unit(field, i));
    } else {
      std::vector<bool> in_lower(ambient.dim(n - 1), false);
      for (std::size_t i : detail::selected_at(selected, n - 1)) in_lower.at(i) = true;
      std::vector<std::size_t> outside;
      for (std::size_t i = 0; i < in_lower.size(); ++i) {
        if (!in_lower[i]) outside.push_back(i);
      }
      const auto restricted = ambient.boundary(n).select_columns(cols).select_rows(outside);
      const auto z = kernel(restricted);
      for (const auto& combo : z.columns()) {
        std::vector<std::pair<std::size_t, typename F::Element>> entries;
        for (const auto& e : combo.entries()) entries.emplace_back(cols[e.index], e.value);
        std::sort(entries.begin(), entries.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
        SparseVector<F> v;
        for (auto& [i, x] : entries) v.push_back(field, i, x);
        span.insert(std::move(v));
      }
    }
    spans.push_back(std::move(span));
  }
  return subcomplex_from_spans(ambient, std::move(spans));
}

// Smallest subcomplex containing D: Sup_n = D_n + B_{n+1} D_{n+1}.
template <class F>
Subcomplex<F> sup_subcomplex(const ChainComplex<F>& ambient, const IndexFamily& selected) {
  const F& field = ambient.field();
  std::vector<EchelonBasis<F>> spans;
  for (std::size_t n = 0; n < ambient.num_degrees(); ++n) {
    EchelonBasis<F> span(field, ambient.dim(n));
    for (std::size_t i : detail::selected_at(selected, n)) span.insert(SparseVector<F>::unit(field, i));
    if (n + 1 < ambient.num_degrees()) {
      const auto up = ambient.boundary(n + 1);
      for (std::size_t j : detail::selected_at(selected, n + 1)) span.insert(up.column(j));
    }
    spans.push_back(std::move(span));
  }
  return subcomplex_from_spans(ambient, std::move(spans));
}

// Indices of h's edges inside the ambient basis. Throws DomainError when an
// edge is not an ambient basis element.
template <EdgeOrder O>
IndexFamily edge_indices(const GradedBasis<O>& basis, const BasicHypergraph<O>& h) {
  IndexFamily out(basis.num_degrees());
  for (const auto& e : h.edges()) {
    auto idx = basis.index_of(e);
    if (!idx) throw DomainError("edge " + e.to_string() + " is not in the ambient complex");
    out[e.degree()].push_back(*idx);
  }
  return out;
}

template <class F, EdgeOrder O>
struct EmbeddedComplexes {
  LabeledComplex<F, O> ambient;
  Subcomplex<F> inf;
  Subcomplex<F> sup;
};

// Inf and Sup of span(h) inside the given ambient (closure ambient if none).
template <class F, EdgeOrder O>
EmbeddedComplexes<F, O> embedded_complexes(const F& field, const BasicHypergraph<O>& h,
                                           std::optional<LabeledComplex<F, O>> ambient = std::nullopt) {
  LabeledComplex<F, O> amb = ambient ? std::move(*ambient) : ambient_closure(field, h);
  const IndexFamily sel = edge_indices(amb.basis, h);
  auto inf = inf_subcomplex(amb.complex, sel);
  auto sup = sup_subcomplex(amb.complex, sel);
  return {std::move(amb), std::move(inf), std::move(sup)};
}

template <class F, EdgeOrder O>
Subcomplex<F> inf_complex(const F& field, const BasicHypergraph<O>& h) {
  return embedded_complexes(field, h).inf;
}

template <class F, EdgeOrder O>
Subcomplex<F> sup_complex(const F& field, const BasicHypergraph<O>& h) {
  return embedded_complexes(field, h).sup;
}

// Chain map A -> B induced by inclusion of subcomplexes of a common ambient.
// Throws InvariantViolation if A is not degreewise inside B.
template <class F>
ChainMap<F> inclusion_map(const Subcomplex<F>& a, const Subcomplex<F>& b) {
  ChainMap<F> f;
  for (std::size_t n = 0; n < a.complex.num_degrees(); ++n) {
    SparseMatrix<F> m(a.complex.field(), b.dim(n), 0);
    for (std::size_t k = 0; k < a.dim(n); ++k) {
      if (n >= b.spans.size()) {
        throw InvariantViolation("inclusion fails", "degree " + std::to_string(n) + " is absent in target");
      }
      auto coords = b.spans[n].coordinates(a.spans[n].vector(k));
      if (!coords) {
        throw InvariantViolation("inclusion fails",
                                 "degree " + std::to_string(n) + " basis vector #" + std::to_string(k));
      }
      m.append_column(std::move(*coords));
    }
    f.components.push_back(std::move(m));
  }
  return f;
}

struct QuasiIsoReport {
  std::vector<std::size_t> betti_inf;
  std::vector<std::size_t> betti_sup;
  std::vector<std::size_t> induced_ranks;
  bool is_iso = false;
};

// Compares Betti numbers of a -> b and the rank of the induced map degreewise.
template <class F>
QuasiIsoReport compare_homology(const ChainComplex<F>& a, const ChainComplex<F>& b, const ChainMap<F>& f) {
  QuasiIsoReport r;
  const std::size_t top = std::max(a.num_degrees(), b.num_degrees());
  auto ba = betti(a);
  auto bb = betti(b);
  ba.resize(top, 0);
  bb.resize(top, 0);
  r.is_iso = true;
  for (std::size_t n = 0; n < top; ++n) {
    r.induced_ranks.push_back(induced_homology_rank(a, b, f, n));
    if (ba[n] != bb[n] || r.induced_ranks[n] != ba[n]) r.is_iso = false;
  }
  r.betti_inf = std::move(ba);
  r.betti_sup = std::move(bb);
  return r;
}

template <class F, EdgeOrder O>
QuasiIsoReport verify_quasi_iso_theta(const F& field, const BasicHypergraph<O>& h) {
  const auto ec = embedded_complexes(field, h);
  return compare_homology(ec.inf.complex, ec.sup.complex, inclusion_map(ec.inf, ec.sup));
}

// Quotient of an ambient complex by a subcomplex. Cosets are represented by
// the unit vectors at the non-pivot indices of each span.
template <class F>
struct QuotientComplex {
  std::vector<std::vector<std::size_t>> representatives;
  ChainComplex<F> complex;
};

namespace detail {

template <class F>
SparseVector<F> in_complement(const F& field, const SparseVector<F>& reduced,
                              const std::vector<std::size_t>& complement) {
  SparseVector<F> out;
  for (const auto& e : reduced.entries()) {
    auto it = std::lower_bound(complement.begin(), complement.end(), e.index);
    if (it == complement.end() || *it != e.index) throw DomainError("reduced vector has a pivot entry");
    out.push_back(field, static_cast<std::size_t>(it - complement.begin()), e.value);
  }
  return out;
}

}  // namespace detail

template <class F>
QuotientComplex<F> quotient_complex(const ChainComplex<F>& ambient, const Subcomplex<F>& sub) {
  const F& field = ambient.field();
  if (sub.spans.size() > ambient.num_degrees()) throw DomainError("subcomplex has more degrees than ambient");
  auto span_at = [&](std::size_t n) {
    return n < sub.spans.size() ? sub.spans[n] : EchelonBasis<F>(field, ambient.dim(n));
  };
  std::vector<std::vector<std::size_t>> reps;
  std::vector<std::size_t> dims;
  for (std::size_t n = 0; n < ambient.num_degrees(); ++n) {
    const auto s = span_at(n);
    if (s.ambient_dim() != ambient.dim(n)) throw DomainError("subcomplex span has the wrong ambient dimension");
    reps.push_back(s.complement_indices());
    dims.push_back(reps.back().size());
  }
  std::vector<SparseMatrix<F>> bnd;
  for (std::size_t n = 1; n < ambient.num_degrees(); ++n) {
    const auto lower = span_at(n - 1);
    const auto upper = span_at(n);
    const auto b = ambient.boundary(n);
    for (std::size_t k = 0; k < upper.size(); ++k) {
      if (!lower.contains(b.apply(upper.vector(k)))) {
        throw DomainError("not a subcomplex: boundary leaves the span in degree " + std::to_string(n - 1));
      }
    }
    SparseMatrix<F> m(field, dims[n - 1], 0);
    for (std::size_t i : reps[n]) {
      m.append_column(detail::in_complement(field, lower.reduce_fully(b.column(i)), reps[n - 1]));
    }
    bnd.push_back(std::move(m));
  }
  ChainComplex<F> c(field, std::move(dims), std::move(bnd));
  c.require_d_squared_zero("quotient complex");
  return {std::move(reps), std::move(c)};
}

// The map C/S -> C/T for subcomplexes S inside T of the same ambient.
template <class F>
ChainMap<F> quotient_map(const QuotientComplex<F>& from, const QuotientComplex<F>& to, const Subcomplex<F>& t) {
  const F& field = from.complex.field();
  ChainMap<F> f;
  for (std::size_t n = 0; n < from.complex.num_degrees(); ++n) {
    SparseMatrix<F> m(field, to.complex.dim(n), 0);
    for (std::size_t i : from.representatives[n]) {
      const auto v = SparseVector<F>::unit(field, i);
      const auto r = n < t.spans.size() ? t.spans[n].reduce_fully(v) : v;
      m.append_column(detail::in_complement(field, r, to.representatives[n]));
    }
    f.components.push_back(std::move(m));
  }
  return f;
}

struct QuotientReport {
  std::vector<std::size_t> betti_mod_sup;
  std::vector<std::size_t> betti_mod_inf;
  std::vector<std::size_t> induced_ranks;
  bool surjective = false;
  bool is_iso = false;
};

// The canonical surjection q : C/Inf -> C/Sup inside the full ambient on
// `vertices`, up to max_degree.
template <class F, EdgeOrder O>
QuotientReport verify_quotient_quasi_iso(const F& field, const BasicHypergraph<O>& h,
                                         const std::set<VertexId>& vertices, std::size_t max_degree,
                                         std::size_t cap = kDefaultFullSimplexCap) {
  const auto ec = embedded_complexes(field, h, std::optional(ambient_full<F, O>(field, vertices, max_degree, cap)));
  const auto& c = ec.ambient.complex;
  const auto mod_inf = quotient_complex(c, ec.inf);
  const auto mod_sup = quotient_complex(c, ec.sup);
  const auto q = quotient_map(mod_inf, mod_sup, ec.sup);
  if (!is_chain_map(mod_inf.complex, mod_sup.complex, q)) {
    throw InvariantViolation("quotient map is not a chain map", h.to_string());
  }
  const auto cmp = compare_homology(mod_inf.complex, mod_sup.complex, q);
  QuotientReport r;
  r.betti_mod_inf = cmp.betti_inf;
  r.betti_mod_sup = cmp.betti_sup;
  r.induced_ranks = cmp.induced_ranks;
  r.is_iso = cmp.is_iso;
  r.surjective = true;
  for (std::size_t n = 0; n < q.components.size(); ++n) {
    if (rank(q.components[n]) != mod_sup.complex.dim(n)) r.surjective = false;
  }
  return r;
}

// The cochain picture: degree n of the result is degree top-n of c, and the
// boundaries are the transposed (coboundary) matrices.
template <class F>
ChainComplex<F> reversed_dual(const ChainComplex<F>& c) {
  const std::size_t k = c.num_degrees();
  if (k == 0) return ChainComplex<F>(c.field());
  std::vector<std::size_t> dims;
  for (std::size_t m = 0; m < k; ++m) dims.push_back(c.dim(k - 1 - m));
  std::vector<SparseMatrix<F>> bnd;
  for (std::size_t m = 1; m < k; ++m) bnd.push_back(c.boundary(k - m).transpose());
  return ChainComplex<F>(c.field(), std::move(dims), std::move(bnd));
}

struct FourTermReport {
  // stage_dims[s][n]: cochains on the closure, C / Inf(D), C / Sup(D), and
  // cochains on the lower-associated complex, where D is spanned by the
  // indicators of closure edges missing from h.
  std::vector<std::vector<std::size_t>> stage_dims;
  std::vector<bool> surjective;
  // Dimension of chain-level Sup_n(h) and Inf_n(h) for cross-checking stages 1 and 2.
  std::vector<std::size_t> chain_sup_dims;
  std::vector<std::size_t> chain_inf_dims;
  bool all_identity = false;
};

template <class F, EdgeOrder O>
FourTermReport four_term_sequence(const F& field, const BasicHypergraph<O>& h) {
  const auto ec = embedded_complexes(field, h);
  const auto& basis = ec.ambient.basis;
  const ChainComplex<F> dual = reversed_dual(ec.ambient.complex);
  const std::size_t k = dual.num_degrees();
  auto to_dual = [&](std::size_t n) { return k - 1 - n; };

  const auto lower = lower_associated(h);
  IndexFamily missing(k);
  IndexFamily outside_lower(k);
  for (std::size_t n = 0; n < k; ++n) {
    const auto& labels = basis.labels(n);
    for (std::size_t i = 0; i < labels.size(); ++i) {
      if (!h.contains(labels[i])) missing[to_dual(n)].push_back(i);
      if (!lower.contains(labels[i])) outside_lower[to_dual(n)].push_back(i);
    }
  }
  const auto inf_d = inf_subcomplex(dual, missing);
  const auto sup_d = sup_subcomplex(dual, missing);
  const auto rest = sup_subcomplex(dual, outside_lower);
  const Subcomplex<F> zero = subcomplex_from_spans(dual, [&] {
    std::vector<EchelonBasis<F>> z;
    for (std::size_t m = 0; m < k; ++m) z.emplace_back(field, dual.dim(m));
    return z;
  }());

  const auto s0 = quotient_complex(dual, zero);
  const auto s1 = quotient_complex(dual, inf_d);
  const auto s2 = quotient_complex(dual, sup_d);
  const auto s3 = quotient_complex(dual, rest);
  const std::vector<ChainMap<F>> maps = {quotient_map(s0, s1, inf_d), quotient_map(s1, s2, sup_d),
                                         quotient_map(s2, s3, rest)};
  const std::vector<const QuotientComplex<F>*> stages = {&s0, &s1, &s2, &s3};

  FourTermReport r;
  for (const auto* s : stages) {
    std::vector<std::size_t> d(k);
    for (std::size_t n = 0; n < k; ++n) d[n] = s->complex.dim(to_dual(n));
    r.stage_dims.push_back(std::move(d));
  }
  for (std::size_t m = 0; m < maps.size(); ++m) {
    if (!is_chain_map(stages[m]->complex, stages[m + 1]->complex, maps[m])) {
      throw InvariantViolation("four-term stage map is not a cochain map", h.to_string());
    }
    bool onto = true;
    for (std::size_t n = 0; n < maps[m].components.size(); ++n) {
      if (rank(maps[m].components[n]) != stages[m + 1]->complex.dim(n)) onto = false;
    }
    r.surjective.push_back(onto);
  }
  for (std::size_t n = 0; n < k; ++n) {
    r.chain_sup_dims.push_back(ec.sup.dim(n));
    r.chain_inf_dims.push_back(ec.inf.dim(n));
  }
  r.all_identity = true;
  for (std::size_t s = 1; s < r.stage_dims.size(); ++s) {
    if (r.stage_dims[s] != r.stage_dims[0]) r.all_identity = false;
  }
  return r;
}

}  // namespace embhom
