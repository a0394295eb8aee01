#pragma once

#include <optional>
#include <random>
#include <vector>

#include "apolar/apolarity.hpp"
#include "apolar/poly.hpp"

namespace apolar {

/// Graded apolar algebra A = R/Ann_R(F) for homogeneous F: per-degree
/// standard-monomial bases (complements of the annihilator slices, chosen
/// by RREF pivots) and the Hilbert vector.
class GradedAlgebra {
 public:
  struct Slice {
    std::vector<ExponentVector> monomials;        // all monomials of this degree
    std::map<ExponentVector, int, GrlexLess> col; // monomial -> column
    Subspace ann;                                  // annihilator slice, RREF
    std::vector<int> standard_cols;                // non-pivot columns
  };

  static GradedAlgebra build(const Poly& F) {
    if (F.is_zero()) throw ZeroPolynomial();
    if (!F.is_homogeneous()) throw NotHomogeneous();
    if (F.context().role != VarRole::dual)
      throw ContextMismatch("graded quotient expects a dual-space polynomial");
    GradedAlgebra A;
    A.n_vars_ = F.context().n_vars;
    A.top_degree_ = F.degree();
    A.field_ = F.field();
    int D = A.top_degree_;
    for (int i = 0; i <= D; ++i) {
      Slice s{monomials_of_degree(A.n_vars_, i), {}, Subspace(0, A.field_), {}};
      int nc = static_cast<int>(s.monomials.size());
      for (int k = 0; k < nc; ++k) s.col[s.monomials[k]] = k;
      // kernel of the degree-i catalecticant R_i -> S_{D-i}
      std::vector<SparseVec> rows;
      for (const ExponentVector& u : monomials_of_degree(A.n_vars_, D - i)) {
        SparseVec row;
        for (const auto& [t, c] : F.terms())
          if (divides(u, t)) row.push(s.col.at(ev_sub(t, u)), c);
        if (row.is_zero()) continue;
        std::sort(row.entries.begin(), row.entries.end(),
                  [](const auto& a, const auto& b) { return a.first < b.first; });
        rows.push_back(std::move(row));
      }
      s.ann = sparse_kernel(rows, nc, A.field_);
      std::vector<bool> is_pivot(nc, false);
      for (int p : s.ann.pivot_cols()) is_pivot[p] = true;
      for (int k = 0; k < nc; ++k)
        if (!is_pivot[k]) s.standard_cols.push_back(k);
      A.h_.push_back(static_cast<int>(s.standard_cols.size()));
      A.slices_.push_back(std::move(s));
    }
    return A;
  }

  int n_vars() const { return n_vars_; }
  int top_degree() const { return top_degree_; }
  const FieldSpec& field() const { return field_; }
  const std::vector<int>& hilbert() const { return h_; }

  std::vector<ExponentVector> degree_basis(int i) const {
    const Slice& s = slices_.at(i);
    std::vector<ExponentVector> basis;
    for (int k : s.standard_cols) basis.push_back(s.monomials[k]);
    return basis;
  }

  /// Coordinates of a degree-i ring polynomial in the degree-i basis,
  /// reducing modulo the annihilator slice.
  std::vector<FieldElem> reduce(const Poly& f, int i) const {
    const Slice& s = slices_.at(i);
    SparseVec v;
    for (const auto& [e, c] : f.terms()) {
      if (total_degree(e) != i) throw DegreeOutOfRange();
      v.push(s.col.at(e), c);
    }
    v = s.ann.reduce(std::move(v));
    std::vector<FieldElem> coords(s.standard_cols.size(), FieldElem::zero(field_));
    std::size_t k = 0;
    for (const auto& [idx, c] : v.entries) {
      while (k < s.standard_cols.size() && s.standard_cols[k] < idx) ++k;
      if (k >= s.standard_cols.size() || s.standard_cols[k] != idx)
        throw Error("reduction left a pivot coordinate");
      coords[k] = c;
    }
    return coords;
  }

 private:
  int n_vars_ = 0;
  int top_degree_ = 0;
  FieldSpec field_;
  std::vector<int> h_;
  std::vector<Slice> slices_;
};

inline GradedAlgebra build_graded_quotient(const Poly& F) { return GradedAlgebra::build(F); }

/// Matrix of multiplication by ell^d from A_i to A_{i+d} in the chosen
/// degree bases.
inline Matrix mult_matrix(const GradedAlgebra& A, const Poly& ell, int i, int d) {
  if (i < 0 || d < 0 || i + d > A.top_degree()) throw DegreeOutOfRange();
  Poly power = ell.pow(d);
  std::vector<ExponentVector> src = A.degree_basis(i);
  const std::vector<int>& h = A.hilbert();
  Matrix m(h[i + d], h[i], A.field());
  for (int c = 0; c < static_cast<int>(src.size()); ++c) {
    Poly prod = power.mul_monomial(src[c], FieldElem::one(A.field()));
    std::vector<FieldElem> coords = A.reduce(prod, i + d);
    for (int r = 0; r < static_cast<int>(coords.size()); ++r) m.at(r, c) = coords[r];
  }
  return m;
}

struct RankDefect {
  int i;
  int d;
  int achieved_rank;
  int max_possible_rank;
};

struct SlpCheck {
  bool ok = true;
  std::vector<RankDefect> failed_pairs;
};

/// True iff every multiplication map x ell^d : A_i -> A_{i+d} (d >= 1) has
/// maximal rank min(h_i, h_{i+d}).
inline SlpCheck has_slp_witness(const GradedAlgebra& A, const Poly& ell) {
  if (ell.degree() != 1 || !ell.is_homogeneous())
    throw Error("Lefschetz candidate must be a homogeneous linear form");
  SlpCheck out;
  const std::vector<int>& h = A.hilbert();
  int D = A.top_degree();
  for (int i = 0; i <= D; ++i) {
    for (int d = 1; i + d <= D; ++d) {
      Matrix m = mult_matrix(A, ell, i, d);
      int r = rank(m);
      int want = std::min(h[i], h[i + d]);
      if (r != want) {
        out.ok = false;
        out.failed_pairs.push_back({i, d, r, want});
      }
    }
  }
  return out;
}

struct SlpReport {
  std::optional<Poly> witness;
  int trials_used = 0;
  std::vector<RankDefect> failed_pairs;  // for the last failed candidate
};

/// Searches for a strong-Lefschetz witness: the deterministic candidate
/// x1 + ... + xN first, then random linear forms with nonzero coefficients
/// from {+-1,...,+-pool}.  A found witness proves SLP; none-found is only
/// evidence.  Positive characteristic is refused without the override.
inline SlpReport find_slp_witness(const GradedAlgebra& A, int trials = 8,
                                  std::uint64_t seed = 1, bool char_override = false,
                                  std::int64_t pool = 5) {
  if (!A.field().is_char_zero() && !char_override) throw CharacteristicRefused();
  VarContext ring{A.n_vars(), VarRole::ring};
  SlpReport report;

  auto attempt = [&](const Poly& ell) {
    ++report.trials_used;
    SlpCheck c = has_slp_witness(A, ell);
    if (c.ok) {
      report.witness = ell;
      report.failed_pairs.clear();
      return true;
    }
    report.failed_pairs = std::move(c.failed_pairs);
    return false;
  };

  Poly all_ones(ring, A.field());
  for (int j = 0; j < A.n_vars(); ++j)
    all_ones = all_ones + Poly::var_power(ring, A.field(), j, 1);
  if (attempt(all_ones)) return report;

  std::mt19937_64 rng(seed);
  for (int t = 0; t < trials; ++t) {
    Poly ell(ring, A.field());
    for (int j = 0; j < A.n_vars(); ++j) {
      FieldElem c = sample_nonzero(A.field(), rng(), pool);
      ell = ell + Poly::var_power(ring, A.field(), j, 1).scaled(c);
    }
    if (attempt(ell)) return report;
  }
  return report;
}

}  // namespace apolar
