#pragma once

#include <algorithm>
#include <cassert>
#include <map>
#include <utility>
#include <vector>

#include "apolar/field.hpp"

namespace apolar {

/// Sparse coordinate vector: (index, nonzero value) pairs, sorted by index.
struct SparseVec {
  std::vector<std::pair<int, FieldElem>> entries;

  bool is_zero() const { return entries.empty(); }
  int pivot() const { return entries.empty() ? -1 : entries.front().first; }

  FieldElem leading_coeff(FieldSpec field) const {
    return entries.empty() ? FieldElem::zero(field) : entries.front().second;
  }

  FieldElem at(int i, FieldSpec field) const {
    auto it = std::lower_bound(entries.begin(), entries.end(), i,
                               [](const auto& p, int k) { return p.first < k; });
    if (it != entries.end() && it->first == i) return it->second;
    return FieldElem::zero(field);
  }

  void push(int i, const FieldElem& c) {
    if (!c.is_zero()) entries.emplace_back(i, c);
  }

  SparseVec scaled(const FieldElem& c) const {
    SparseVec r;
    if (c.is_zero()) return r;
    r.entries.reserve(entries.size());
    for (const auto& [i, v] : entries) r.entries.emplace_back(i, v * c);
    return r;
  }
};

/// r = a + c*b, merged by index.
inline SparseVec sv_add_scaled(const SparseVec& a, const FieldElem& c, const SparseVec& b) {
  SparseVec r;
  r.entries.reserve(a.entries.size() + b.entries.size());
  std::size_t i = 0, j = 0;
  while (i < a.entries.size() || j < b.entries.size()) {
    if (j >= b.entries.size() ||
        (i < a.entries.size() && a.entries[i].first < b.entries[j].first)) {
      r.entries.push_back(a.entries[i++]);
    } else if (i >= a.entries.size() || b.entries[j].first < a.entries[i].first) {
      FieldElem v = c * b.entries[j].second;
      if (!v.is_zero()) r.entries.emplace_back(b.entries[j].first, v);
      ++j;
    } else {
      FieldElem v = a.entries[i].second + c * b.entries[j].second;
      if (!v.is_zero()) r.entries.emplace_back(a.entries[i].first, v);
      ++i;
      ++j;
    }
  }
  return r;
}

/// A linear subspace given by its canonical RREF basis: rows are nonzero,
/// pivot entries are 1, pivots strictly increase, and pivot columns vanish
/// in every other row.  Two subspaces are equal iff their bases are equal.
class Subspace {
 public:
  Subspace(int ambient_dim, FieldSpec field) : ambient_(ambient_dim), field_(field) {}

  int ambient_dim() const { return ambient_; }
  int dim() const { return static_cast<int>(rows_.size()); }
  const FieldSpec& field() const { return field_; }
  const std::vector<SparseVec>& basis() const { return rows_; }

  std::vector<int> pivot_cols() const {
    std::vector<int> p;
    p.reserve(rows_.size());
    for (const auto& r : rows_) p.push_back(r.pivot());
    return p;
  }

  /// Reduce v against the basis (eliminating pivot coordinates).
  SparseVec reduce(SparseVec v) const {
    // rows_ sorted by pivot; walk v's support once per elimination
    for (std::size_t k = 0; k < rows_.size();) {
      int p = rows_[k].pivot();
      FieldElem c = v.at(p, field_);
      if (c.is_zero()) {
        ++k;
        continue;
      }
      v = sv_add_scaled(v, -c, rows_[k]);
      ++k;
    }
    return v;
  }

  bool contains(const SparseVec& v) const { return reduce(v).is_zero(); }

  /// Insert a vector, keeping the basis in RREF.  Returns true if the
  /// dimension grew.
  bool insert(SparseVec v) {
    v = reduce(std::move(v));
    if (v.is_zero()) return false;
    v = v.scaled(v.leading_coeff(field_).inv());
    int p = v.pivot();
    for (auto& r : rows_) {
      FieldElem c = r.at(p, field_);
      if (!c.is_zero()) r = sv_add_scaled(r, -c, v);
    }
    auto it = std::lower_bound(rows_.begin(), rows_.end(), p,
                               [](const SparseVec& r, int k) { return r.pivot() < k; });
    rows_.insert(it, std::move(v));
    return true;
  }

  static Subspace sum(const Subspace& a, const Subspace& b) {
    if (a.ambient_ != b.ambient_) throw AmbientMismatch();
    Subspace s = a;
    for (const auto& r : b.rows_) s.insert(r);
    return s;
  }

  /// dim(a ∩ b) = dim a + dim b - dim(a + b).
  static int intersection_dim(const Subspace& a, const Subspace& b) {
    return a.dim() + b.dim() - sum(a, b).dim();
  }

  bool operator==(const Subspace& o) const {
    if (ambient_ != o.ambient_ || rows_.size() != o.rows_.size()) return false;
    for (std::size_t k = 0; k < rows_.size(); ++k)
      if (rows_[k].entries != o.rows_[k].entries) return false;
    return true;
  }
  bool operator!=(const Subspace& o) const { return !(*this == o); }

 private:
  int ambient_;
  FieldSpec field_;
  std::vector<SparseVec> rows_;  // RREF, sorted by pivot
};

/// Span tracked in (non-reduced) echelon form: one stored row per pivot,
/// eliminated forward only.  Much cheaper than canonical RREF when only
/// dimension and membership are needed; the basis is NOT canonical.
class EchelonSpan {
 public:
  EchelonSpan(int ambient_dim, FieldSpec field) : ambient_(ambient_dim), field_(field) {}

  int ambient_dim() const { return ambient_; }
  int dim() const { return static_cast<int>(rows_.size()); }

  /// Eliminate leading coordinates until none matches a stored pivot.
  SparseVec reduce(SparseVec v) const {
    while (!v.is_zero()) {
      auto it = rows_.find(v.pivot());
      if (it == rows_.end()) break;
      v = sv_add_scaled(v, -v.leading_coeff(field_), it->second);
    }
    return v;
  }

  bool contains(const SparseVec& v) const { return reduce(v).is_zero(); }

  bool insert(SparseVec v) {
    v = reduce(std::move(v));
    if (v.is_zero()) return false;
    v = v.scaled(v.leading_coeff(field_).inv());
    int p = v.pivot();
    rows_.emplace(p, std::move(v));
    return true;
  }

 private:
  int ambient_;
  FieldSpec field_;
  std::map<int, SparseVec> rows_;  // pivot -> row with that pivot, scaled to 1
};

/// Sparse row reduction.  Returns the subspace spanned by the rows.
inline Subspace sparse_row_space(const std::vector<SparseVec>& rows, int n_cols,
                                 FieldSpec field) {
  Subspace s(n_cols, field);
  for (const auto& r : rows) s.insert(r);
  return s;
}

/// Canonical RREF kernel basis of the linear map given by sparse rows.
inline Subspace sparse_kernel(const std::vector<SparseVec>& rows, int n_cols, FieldSpec field) {
  Subspace row_space = sparse_row_space(rows, n_cols, field);
  std::vector<int> pivots = row_space.pivot_cols();
  std::vector<bool> is_pivot(n_cols, false);
  for (int p : pivots) is_pivot[p] = true;

  Subspace ker(n_cols, field);
  for (int j = 0; j < n_cols; ++j) {
    if (is_pivot[j]) continue;
    // kernel vector for free column j: 1 at j, -row[j] at each pivot column
    SparseVec v;
    for (std::size_t k = 0; k < row_space.basis().size(); ++k) {
      FieldElem c = row_space.basis()[k].at(j, field);
      if (!c.is_zero()) v.push(pivots[k], -c);
    }
    v.push(j, FieldElem::one(field));
    std::sort(v.entries.begin(), v.entries.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    ker.insert(std::move(v));
  }
  if (row_space.dim() + ker.dim() != n_cols)
    throw Error("rank-nullity violation in kernel computation");
  return ker;
}

/// Dense row-major matrix over an exact field.
class Matrix {
 public:
  Matrix(int n_rows, int n_cols, FieldSpec field)
      : nr_(n_rows), nc_(n_cols), field_(field),
        a_(static_cast<std::size_t>(n_rows) * n_cols, FieldElem::zero(field)) {}

  int n_rows() const { return nr_; }
  int n_cols() const { return nc_; }
  const FieldSpec& field() const { return field_; }

  FieldElem& at(int i, int j) { return a_[static_cast<std::size_t>(i) * nc_ + j]; }
  const FieldElem& at(int i, int j) const { return a_[static_cast<std::size_t>(i) * nc_ + j]; }

  static Matrix identity(int n, FieldSpec field) {
    Matrix m(n, n, field);
    for (int i = 0; i < n; ++i) m.at(i, i) = FieldElem::one(field);
    return m;
  }

  Matrix transpose() const {
    Matrix t(nc_, nr_, field_);
    for (int i = 0; i < nr_; ++i)
      for (int j = 0; j < nc_; ++j) t.at(j, i) = at(i, j);
    return t;
  }

  Matrix operator*(const Matrix& o) const {
    if (nc_ != o.nr_) throw AmbientMismatch();
    Matrix r(nr_, o.nc_, field_);
    for (int i = 0; i < nr_; ++i)
      for (int k = 0; k < nc_; ++k) {
        const FieldElem& v = at(i, k);
        if (v.is_zero()) continue;
        for (int j = 0; j < o.nc_; ++j) {
          if (o.at(k, j).is_zero()) continue;
          r.at(i, j) += v * o.at(k, j);
        }
      }
    return r;
  }

  std::vector<SparseVec> sparse_rows() const {
    std::vector<SparseVec> rows(nr_);
    for (int i = 0; i < nr_; ++i)
      for (int j = 0; j < nc_; ++j)
        if (!at(i, j).is_zero()) rows[i].push(j, at(i, j));
    return rows;
  }

  bool operator==(const Matrix& m) const {
    return nr_ == m.nr_ && nc_ == m.nc_ && a_ == m.a_;
  }

 private:
  int nr_, nc_;
  FieldSpec field_;
  std::vector<FieldElem> a_;
};

/// Gauss-Jordan reduced row echelon form; pivot is the first nonzero entry
/// in column order.  Returns the reduced matrix and its pivot columns.
inline std::pair<Matrix, std::vector<int>> rref(Matrix m) {
  std::vector<int> pivots;
  int row = 0;
  for (int col = 0; col < m.n_cols() && row < m.n_rows(); ++col) {
    int sel = -1;
    for (int i = row; i < m.n_rows(); ++i)
      if (!m.at(i, col).is_zero()) {
        sel = i;
        break;
      }
    if (sel < 0) continue;
    if (sel != row)
      for (int j = 0; j < m.n_cols(); ++j) std::swap(m.at(sel, j), m.at(row, j));
    FieldElem inv = m.at(row, col).inv();
    for (int j = col; j < m.n_cols(); ++j)
      if (!m.at(row, j).is_zero()) m.at(row, j) *= inv;
    for (int i = 0; i < m.n_rows(); ++i) {
      if (i == row) continue;
      FieldElem f = m.at(i, col);
      if (f.is_zero()) continue;
      for (int j = col; j < m.n_cols(); ++j) {
        if (m.at(row, j).is_zero()) continue;
        m.at(i, j) -= f * m.at(row, j);
      }
    }
    pivots.push_back(col);
    ++row;
  }
  return {std::move(m), std::move(pivots)};
}

inline int rank(const Matrix& m) { return static_cast<int>(rref(m).second.size()); }

/// Canonical RREF basis of {v : m v = 0}.
inline Subspace kernel_basis(const Matrix& m) {
  return sparse_kernel(m.sparse_rows(), m.n_cols(), m.field());
}

}  // namespace apolar
