#include "embhom/checks/dense_oracle.hpp"

#include <algorithm>

namespace embhom::oracle {

std::size_t dense_rank(DenseMatrix m) {
  if (m.empty()) return 0;
  const std::size_t rows = m.size();
  const std::size_t cols = m[0].size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && m[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(m[p], m[r]);
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || m[i][c] == 0) continue;
      const mpq_class f = m[i][c] / m[r][c];
      for (std::size_t j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
    }
    ++r;
  }
  return r;
}

DenseMatrix dense_boundary(const std::vector<Simplex>& rows, const std::vector<Simplex>& cols) {
  DenseMatrix m(rows.size(), std::vector<mpq_class>(cols.size(), 0));
  for (std::size_t j = 0; j < cols.size(); ++j) {
    const Simplex& s = cols[j];
    for (std::size_t i = 0; i < s.size(); ++i) {
      Simplex face;
      for (std::size_t k = 0; k < s.size(); ++k) {
        if (k != i) face.push_back(s[k]);
      }
      const auto it = std::find(rows.begin(), rows.end(), face);
      if (it == rows.end()) continue;
      m[static_cast<std::size_t>(it - rows.begin())][j] += (i % 2 == 0) ? 1 : -1;
    }
  }
  return m;
}

namespace {

const std::vector<Simplex>& cells_of(const Cells& c, std::size_t cardinality) {
  static const std::vector<Simplex> kNone;
  auto it = c.find(cardinality);
  return it == c.end() ? kNone : it->second;
}

std::size_t boundary_rank(const Cells& rows, const Cells& cols, std::size_t n) {
  if (n == 0) return 0;
  return dense_rank(dense_boundary(cells_of(rows, n), cells_of(cols, n + 1)));
}

}  // namespace

std::vector<std::size_t> simplicial_betti(const Cells& cells, std::size_t top) {
  std::vector<std::size_t> out;
  for (std::size_t n = 0; n <= top; ++n) {
    const std::size_t dim = cells_of(cells, n + 1).size();
    out.push_back(dim - boundary_rank(cells, cells, n) - boundary_rank(cells, cells, n + 1));
  }
  return out;
}

EmbeddedOracle embedded_oracle(const Cells& h, const Cells& closure, std::size_t top) {
  EmbeddedOracle r;
  auto hn = [&](std::size_t n) { return cells_of(h, n + 1); };
  auto rank_h = [&](std::size_t n) { return boundary_rank(closure, h, n); };

  for (std::size_t n = 0; n <= top + 1; ++n) {
    if (n == 0) {
      r.inf_dims.push_back(hn(0).size());
    } else {
      std::vector<Simplex> outside;
      for (const auto& s : cells_of(closure, n)) {
        const auto& lower = hn(n - 1);
        if (std::find(lower.begin(), lower.end(), s) == lower.end()) outside.push_back(s);
      }
      r.inf_dims.push_back(hn(n).size() - dense_rank(dense_boundary(outside, hn(n))));
    }
    const auto& cn = cells_of(closure, n + 1);
    DenseMatrix gen = dense_boundary(cn, hn(n + 1));
    for (const auto& s : hn(n)) {
      const auto pos = static_cast<std::size_t>(std::find(cn.begin(), cn.end(), s) - cn.begin());
      for (std::size_t i = 0; i < cn.size(); ++i) gen[i].push_back(i == pos ? 1 : 0);
    }
    r.sup_dims.push_back(dense_rank(std::move(gen)));
  }
  for (std::size_t n = 0; n <= top; ++n) {
    const std::size_t cycles = hn(n).size() - rank_h(n);
    const std::size_t bounding = r.inf_dims[n + 1] - (hn(n + 1).size() - rank_h(n + 1));
    r.inf_betti.push_back(cycles - bounding);
    r.sup_betti.push_back(r.sup_dims[n] - rank_h(n) - rank_h(n + 1));
  }
  r.inf_dims.pop_back();
  r.sup_dims.pop_back();
  return r;
}

}  // namespace embhom::oracle
