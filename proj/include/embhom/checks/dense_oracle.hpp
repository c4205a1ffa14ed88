#pragma once

// Textbook dense linear algebra over Q, kept independent of the sparse
// engine so it can cross-check it.

#include <gmpxx.h>

#include <cstddef>
#include <map>
#include <vector>

namespace embhom::oracle {

using DenseMatrix = std::vector<std::vector<mpq_class>>;  // row-major
using Simplex = std::vector<unsigned>;                      // vertex sequence

// Rank by Gauss-Jordan elimination on a copy.
std::size_t dense_rank(DenseMatrix m);

// Boundary of the cells of cardinality k+1 (columns) into the cells of
// cardinality k (rows); faces missing from `rows` are dropped silently.
DenseMatrix dense_boundary(const std::vector<Simplex>& rows, const std::vector<Simplex>& cols);

// Cells grouped by cardinality (index 0 unused).
using Cells = std::map<std::size_t, std::vector<Simplex>>;

// Betti numbers of a face-closed cell family, degrees 0..top.
std::vector<std::size_t> simplicial_betti(const Cells& cells, std::size_t top);

// Dimensions and Betti numbers of Inf and Sup of span(h) inside the chains
// on its closure, from closed-form rank formulas.
struct EmbeddedOracle {
  std::vector<std::size_t> inf_dims;
  std::vector<std::size_t> sup_dims;
  std::vector<std::size_t> inf_betti;
  std::vector<std::size_t> sup_betti;
};

// `h` and `closure` map cardinality to cells; directed cells are sequences.
EmbeddedOracle embedded_oracle(const Cells& h, const Cells& closure, std::size_t top);

}  // namespace embhom::oracle
