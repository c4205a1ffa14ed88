#pragma once

#include <algorithm>
#include <cstddef>
#include <limits>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "embhom/errors.hpp"
#include "embhom/field.hpp"

namespace embhom {

// Sparse vector with entries sorted by index and no stored zeros.
template <class F>
class SparseVector {
 public:
  using Element = typename F::Element;
  struct Entry {
    std::size_t index;
    Element value;
    friend bool operator==(const Entry&, const Entry&) = default;
  };

  SparseVector() = default;

  static SparseVector unit(const F& field, std::size_t index) {
    SparseVector v;
    v.entries_.push_back({index, field.one()});
    return v;
  }

  bool empty() const noexcept { return entries_.empty(); }
  std::size_t nnz() const noexcept { return entries_.size(); }
  const std::vector<Entry>& entries() const noexcept { return entries_; }

  // Appends an entry; indices must arrive in increasing order. Zeros are skipped.
  void push_back(const F& field, std::size_t index, Element value) {
    if (field.is_zero(value)) return;
    if (!entries_.empty() && entries_.back().index >= index) {
      throw DomainError("sparse vector entries must be appended in increasing index order");
    }
    entries_.push_back({index, std::move(value)});
  }

  Element at(const F& field, std::size_t index) const {
    auto it = std::lower_bound(entries_.begin(), entries_.end(), index,
                               [](const Entry& e, std::size_t i) { return e.index < i; });
    if (it != entries_.end() && it->index == index) return it->value;
    return field.zero();
  }

  // Largest stored index.
  std::size_t pivot() const { return entries_.back().index; }
  const Element& pivot_value() const { return entries_.back().value; }

  // *this += c * other
  void axpy(const F& field, const Element& c, const SparseVector& other) {
    if (field.is_zero(c) || other.empty()) return;
    std::vector<Entry> out;
    out.reserve(entries_.size() + other.entries_.size());
    auto a = entries_.begin();
    auto b = other.entries_.begin();
    while (a != entries_.end() || b != other.entries_.end()) {
      if (b == other.entries_.end() || (a != entries_.end() && a->index < b->index)) {
        out.push_back(std::move(*a));
        ++a;
      } else if (a == entries_.end() || b->index < a->index) {
        out.push_back({b->index, field.mul(c, b->value)});
        ++b;
      } else {
        Element s = field.add(a->value, field.mul(c, b->value));
        if (!field.is_zero(s)) out.push_back({a->index, std::move(s)});
        ++a;
        ++b;
      }
    }
    entries_ = std::move(out);
  }

  void scale(const F& field, const Element& c) {
    if (field.is_zero(c)) {
      entries_.clear();
      return;
    }
    for (Entry& e : entries_) e.value = field.mul(c, e.value);
  }

  friend bool operator==(const SparseVector&, const SparseVector&) = default;

 private:
  std::vector<Entry> entries_;
};

// Column-major sparse matrix over a field.
template <class F>
class SparseMatrix {
 public:
  using Element = typename F::Element;
  using Column = SparseVector<F>;

  SparseMatrix(F field, std::size_t rows, std::size_t cols)
      : field_(std::move(field)), rows_(rows), columns_(cols) {}

  static SparseMatrix from_columns(F field, std::size_t rows, std::vector<Column> columns) {
    SparseMatrix m(std::move(field), rows, 0);
    for (const Column& c : columns) {
      if (!c.empty() && c.pivot() >= rows) throw DomainError("column entry out of range");
    }
    m.columns_ = std::move(columns);
    return m;
  }

  static SparseMatrix identity(F field, std::size_t n) {
    SparseMatrix m(field, n, n);
    for (std::size_t i = 0; i < n; ++i) m.columns_[i] = Column::unit(field, i);
    return m;
  }

  const F& field() const noexcept { return field_; }
  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return columns_.size(); }
  const Column& column(std::size_t j) const { return columns_.at(j); }
  const std::vector<Column>& columns() const noexcept { return columns_; }

  void set_column(std::size_t j, Column c) {
    if (!c.empty() && c.pivot() >= rows_) throw DomainError("column entry out of range");
    columns_.at(j) = std::move(c);
  }

  void append_column(Column c) {
    if (!c.empty() && c.pivot() >= rows_) throw DomainError("column entry out of range");
    columns_.push_back(std::move(c));
  }

  Element at(std::size_t i, std::size_t j) const { return columns_.at(j).at(field_, i); }

  std::size_t nnz() const {
    std::size_t n = 0;
    for (const Column& c : columns_) n += c.nnz();
    return n;
  }

  bool is_zero() const {
    return std::all_of(columns_.begin(), columns_.end(), [](const Column& c) { return c.empty(); });
  }

  // M * x
  Column apply(const Column& x) const {
    Column out;
    for (const auto& e : x.entries()) {
      if (e.index >= cols()) throw DomainError("vector length exceeds matrix columns");
      out.axpy(field_, e.value, columns_[e.index]);
    }
    return out;
  }

  SparseMatrix transpose() const {
    std::vector<Column> t(rows_);
    for (std::size_t j = 0; j < cols(); ++j) {
      for (const auto& e : columns_[j].entries()) t[e.index].push_back(field_, j, e.value);
    }
    return from_columns(field_, cols(), std::move(t));
  }

  // Rows `keep` in the given order become rows 0..keep.size()-1.
  SparseMatrix select_rows(const std::vector<std::size_t>& keep) const {
    std::vector<std::size_t> new_index(rows_, std::numeric_limits<std::size_t>::max());
    for (std::size_t k = 0; k < keep.size(); ++k) new_index.at(keep[k]) = k;
    SparseMatrix out(field_, keep.size(), cols());
    for (std::size_t j = 0; j < cols(); ++j) {
      std::vector<std::pair<std::size_t, Element>> tmp;
      for (const auto& e : columns_[j].entries()) {
        if (new_index[e.index] != std::numeric_limits<std::size_t>::max()) {
          tmp.emplace_back(new_index[e.index], e.value);
        }
      }
      std::sort(tmp.begin(), tmp.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
      Column c;
      for (auto& [i, v] : tmp) c.push_back(field_, i, std::move(v));
      out.columns_[j] = std::move(c);
    }
    return out;
  }

  SparseMatrix select_columns(const std::vector<std::size_t>& keep) const {
    SparseMatrix out(field_, rows_, 0);
    for (std::size_t j : keep) out.columns_.push_back(columns_.at(j));
    return out;
  }

  // "row col value" per nonzero, 0-based, preceded by a "rows cols nnz" header.
  std::string to_coordinate_text() const {
    std::ostringstream os;
    os << rows_ << ' ' << cols() << ' ' << nnz() << '\n';
    for (std::size_t j = 0; j < cols(); ++j) {
      for (const auto& e : columns_[j].entries()) {
        os << e.index << ' ' << j << ' ' << field_.format(e.value) << '\n';
      }
    }
    return os.str();
  }

  friend bool operator==(const SparseMatrix& a, const SparseMatrix& b) {
    return a.rows_ == b.rows_ && a.columns_ == b.columns_;
  }

 private:
  F field_;
  std::size_t rows_;
  std::vector<Column> columns_;
};

template <class F>
SparseMatrix<F> multiply(const SparseMatrix<F>& a, const SparseMatrix<F>& b) {
  if (a.cols() != b.rows()) throw DomainError("matrix product dimension mismatch");
  SparseMatrix<F> out(a.field(), a.rows(), b.cols());
  for (std::size_t j = 0; j < b.cols(); ++j) out.set_column(j, a.apply(b.column(j)));
  return out;
}

template <class F>
SparseMatrix<F> add(const SparseMatrix<F>& a, const SparseMatrix<F>& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw DomainError("matrix sum dimension mismatch");
  SparseMatrix<F> out = a;
  for (std::size_t j = 0; j < b.cols(); ++j) {
    SparseVector<F> c = a.column(j);
    c.axpy(a.field(), a.field().one(), b.column(j));
    out.set_column(j, std::move(c));
  }
  return out;
}

// Horizontal concatenation [a | b].
template <class F>
SparseMatrix<F> hconcat(const SparseMatrix<F>& a, const SparseMatrix<F>& b) {
  if (a.rows() != b.rows()) throw DomainError("hconcat row mismatch");
  SparseMatrix<F> out = a;
  for (const auto& c : b.columns()) out.append_column(c);
  return out;
}

// A linearly independent family kept in echelon form: every stored vector has
// a distinct pivot (largest index). Supports membership tests, coordinates in
// the stored basis, and reduction modulo the span.
template <class F>
class EchelonBasis {
 public:
  using Element = typename F::Element;
  using Vector = SparseVector<F>;
  static constexpr std::size_t npos = std::numeric_limits<std::size_t>::max();

  EchelonBasis(F field, std::size_t ambient_dim)
      : field_(std::move(field)), dim_(ambient_dim), slot_of_pivot_(ambient_dim, npos) {}

  const F& field() const noexcept { return field_; }
  std::size_t ambient_dim() const noexcept { return dim_; }
  std::size_t size() const noexcept { return basis_.size(); }
  const Vector& vector(std::size_t k) const { return basis_.at(k); }
  std::size_t pivot(std::size_t k) const { return basis_.at(k).pivot(); }
  bool is_pivot(std::size_t row) const { return slot_of_pivot_.at(row) != npos; }

  // Leading-term reduction; the remainder is zero iff v lies in the span.
  Vector reduce(Vector v) const {
    while (!v.empty()) {
      const std::size_t p = v.pivot();
      const std::size_t k = slot_of_pivot_.at(p);
      if (k == npos) break;
      const Element c = field_.neg(field_.mul(v.pivot_value(), field_.inv(basis_[k].pivot_value())));
      v.axpy(field_, c, basis_[k]);
    }
    return v;
  }

  // Clears every pivot position, leaving a canonical coset representative.
  Vector reduce_fully(Vector v) const {
    std::size_t bound = npos;
    while (true) {
      std::size_t target = npos;
      Element value = field_.zero();
      for (auto it = v.entries().rbegin(); it != v.entries().rend(); ++it) {
        if (bound != npos && it->index >= bound) continue;
        if (slot_of_pivot_.at(it->index) != npos) {
          target = it->index;
          value = it->value;
          break;
        }
      }
      if (target == npos) return v;
      const Vector& b = basis_[slot_of_pivot_[target]];
      v.axpy(field_, field_.neg(field_.mul(value, field_.inv(b.pivot_value()))), b);
      bound = target;
    }
  }

  bool contains(const Vector& v) const { return reduce(v).empty(); }

  // Coefficients of v in the stored basis, or nullopt when v is not in the span.
  std::optional<Vector> coordinates(Vector v) const {
    std::vector<std::pair<std::size_t, Element>> coeff;
    while (!v.empty()) {
      const std::size_t k = slot_of_pivot_.at(v.pivot());
      if (k == npos) return std::nullopt;
      const Element c = field_.mul(v.pivot_value(), field_.inv(basis_[k].pivot_value()));
      v.axpy(field_, field_.neg(c), basis_[k]);
      coeff.emplace_back(k, c);
    }
    std::sort(coeff.begin(), coeff.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    Vector out;
    for (std::size_t i = 0; i < coeff.size(); ++i) {
      // A slot can appear only once: pivots strictly decrease during reduction.
      out.push_back(field_, coeff[i].first, coeff[i].second);
    }
    return out;
  }

  // Adds v when it is independent of the span; returns whether it was added.
  bool insert(Vector v) {
    if (!v.empty() && v.pivot() >= dim_) throw DomainError("vector exceeds ambient dimension");
    v = reduce(std::move(v));
    if (v.empty()) return false;
    slot_of_pivot_[v.pivot()] = basis_.size();
    basis_.push_back(std::move(v));
    return true;
  }

  // Stored vectors as the columns of an ambient_dim x size matrix.
  SparseMatrix<F> as_matrix() const {
    return SparseMatrix<F>::from_columns(field_, dim_, basis_);
  }

  // Indices of unit vectors completing the family to a basis of the ambient space.
  std::vector<std::size_t> complement_indices() const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < dim_; ++i) {
      if (slot_of_pivot_[i] == npos) out.push_back(i);
    }
    return out;
  }

 private:
  F field_;
  std::size_t dim_;
  std::vector<Vector> basis_;
  std::vector<std::size_t> slot_of_pivot_;
};

template <class F>
EchelonBasis<F> column_space(const SparseMatrix<F>& m) {
  EchelonBasis<F> basis(m.field(), m.rows());
  for (const auto& c : m.columns()) basis.insert(c);
  return basis;
}

template <class F>
std::size_t rank(const SparseMatrix<F>& m) {
  return column_space(m).size();
}

// Columns form a basis of the null space of m (m.cols() x nullity).
template <class F>
SparseMatrix<F> kernel(const SparseMatrix<F>& m) {
  const F& field = m.field();
  constexpr std::size_t npos = std::numeric_limits<std::size_t>::max();
  std::vector<std::size_t> slot_of_pivot(m.rows(), npos);
  std::vector<SparseVector<F>> reduced;
  std::vector<SparseVector<F>> combos;
  SparseMatrix<F> out(field, m.cols(), 0);
  for (std::size_t j = 0; j < m.cols(); ++j) {
    SparseVector<F> v = m.column(j);
    SparseVector<F> combo = SparseVector<F>::unit(field, j);
    while (!v.empty() && slot_of_pivot[v.pivot()] != npos) {
      const std::size_t k = slot_of_pivot[v.pivot()];
      const auto c = field.neg(field.mul(v.pivot_value(), field.inv(reduced[k].pivot_value())));
      v.axpy(field, c, reduced[k]);
      combo.axpy(field, c, combos[k]);
    }
    if (v.empty()) {
      out.append_column(std::move(combo));
    } else {
      slot_of_pivot[v.pivot()] = reduced.size();
      reduced.push_back(std::move(v));
      combos.push_back(std::move(combo));
    }
  }
  return out;
}

}  // namespace embhom
