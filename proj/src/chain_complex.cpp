#include "embhom/chain_complex.hpp"

#include <numeric>

namespace embhom {

std::optional<DeltaViolation> find_delta_violation(const DeltaSet& d) {
  for (std::size_t n = 2; n < d.faces.size(); ++n) {
    for (std::size_t x = 0; x < d.faces[n].size(); ++x) {
      const auto& fx = d.faces[n][x];
      for (std::size_t j = 1; j < fx.size(); ++j) {
        for (std::size_t i = 0; i < j; ++i) {
          const std::size_t a = d.faces[n - 1].at(fx[j]).at(i);
          const std::size_t b = d.faces[n - 1].at(fx[i]).at(j - 1);
          if (a != b) return DeltaViolation{n, x, i, j};
        }
      }
    }
  }
  return std::nullopt;
}

DirectedHyperedge sigma_action(const DirectedHyperedge& e, const std::vector<std::size_t>& s) {
  if (s.size() != e.size()) throw DomainError("permutation length differs from edge length");
  std::vector<bool> seen(s.size(), false);
  std::vector<VertexId> out;
  for (std::size_t k : s) {
    if (k >= s.size() || seen[k]) throw DomainError("not a permutation of coordinate positions");
    seen[k] = true;
    out.push_back(e[k]);
  }
  return DirectedHyperedge(std::move(out));
}

std::size_t invariant_dimension(const Hyperdigraph& h, std::size_t cardinality) {
  if (!is_sigma_invariant(h)) throw DomainError("hyperdigraph is not closed under coordinate permutations");
  const auto labels = h.grade(cardinality);
  if (labels.empty()) return 0;
  std::map<DirectedHyperedge, std::size_t> index;
  for (std::size_t i = 0; i < labels.size(); ++i) index.emplace(labels[i], i);

  // A transposition and a full cycle generate the symmetric group.
  std::vector<std::vector<std::size_t>> generators;
  if (cardinality >= 2) {
    std::vector<std::size_t> swap(cardinality);
    std::iota(swap.begin(), swap.end(), std::size_t{0});
    std::swap(swap[0], swap[1]);
    generators.push_back(swap);
    std::vector<std::size_t> cycle(cardinality);
    for (std::size_t k = 0; k < cardinality; ++k) cycle[k] = (k + 1) % cardinality;
    generators.push_back(cycle);
  }

  const RationalField q;
  const std::size_t m = labels.size();
  std::vector<SparseVector<RationalField>> cols;
  for (std::size_t j = 0; j < m; ++j) {
    std::vector<std::pair<std::size_t, mpq_class>> entries;
    for (std::size_t g = 0; g < generators.size(); ++g) {
      const std::size_t target = index.at(sigma_action(labels[j], generators[g]));
      if (target == j) continue;
      entries.emplace_back(g * m + target, mpq_class(1));
      entries.emplace_back(g * m + j, mpq_class(-1));
    }
    std::sort(entries.begin(), entries.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    SparseVector<RationalField> col;
    for (auto& [i, v] : entries) col.push_back(q, i, v);
    cols.push_back(std::move(col));
  }
  const auto stacked = SparseMatrix<RationalField>::from_columns(q, generators.size() * m, std::move(cols));
  return m - rank(stacked);
}

}  // namespace embhom
