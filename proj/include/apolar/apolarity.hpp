#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "apolar/linalg.hpp"
#include "apolar/poly.hpp"

namespace apolar {

/// Conversion between polynomials and coordinate vectors over a canonical
/// monomial index.
inline SparseVec poly_to_vec(const Poly& f, const MonomialIndex& idx) {
  SparseVec v;
  for (const auto& [e, c] : f.terms()) v.push(idx.index(e), c);
  return v;  // term map iterates in index order, so entries are sorted
}

inline Poly vec_to_poly(const SparseVec& v, const MonomialIndex& idx, VarContext ctx,
                        FieldSpec field) {
  Poly p(ctx, field);
  for (const auto& [i, c] : v.entries) p.add_term(idx.at(i), c);
  return p;
}

/// Multiply a coordinate vector by the variable x_j, truncating to the
/// index's degree bound.
inline SparseVec shift_vec(const SparseVec& v, int j, const MonomialIndex& idx) {
  SparseVec r;
  for (const auto& [i, c] : v.entries) {
    ExponentVector e = idx.at(i);
    e[j] += 1;
    if (idx.in_range(e)) r.push(idx.index(e), c);
  }
  return r;  // x_j-shift preserves graded-lex order
}

enum class IdealSource { kernel_of_contraction, generated_by };

/// Vector-space model of an (x_1,...,x_N)-primary ideal inside the
/// degree-<=D+1 slice of the ring, i.e. the ideal modulo m^{D+2}.
struct TruncatedIdeal {
  int n_vars = 0;
  FieldSpec field;
  int socle_bound = 0;    // D = deg F
  int trunc_degree = 0;   // D + 2
  Subspace space;         // over monomials of degree <= D+1
  IdealSource source = IdealSource::kernel_of_contraction;

  MonomialIndex make_index() const { return MonomialIndex(n_vars, socle_bound + 1); }
};

/// Ann_R(F) truncated at degree D+1: the kernel of f -> f o F on the
/// degree-<=D+1 slice of R.  Since m^{D+1} annihilates F, this determines
/// Ann_R(F) modulo m^{D+2}.
inline TruncatedIdeal annihilator_truncated(const Poly& F) {
  if (F.is_zero()) throw ZeroPolynomial();
  if (F.context().role != VarRole::dual)
    throw ContextMismatch("annihilator expects a dual-space polynomial");
  int n = F.context().n_vars;
  int D = F.degree();
  MonomialIndex cols(n, D + 1);
  FieldSpec field = F.field();

  // rows indexed by dual monomials of degree <= D; row u has an entry at
  // column e exactly when some term X^t of F has t - u = e >= 0
  std::vector<SparseVec> rows;
  for (const ExponentVector& u : monomials_up_to(n, D)) {
    SparseVec row;
    for (const auto& [t, c] : F.terms()) {
      if (!divides(u, t)) continue;
      row.push(cols.index(ev_sub(t, u)), c);
    }
    if (row.is_zero()) continue;
    std::sort(row.entries.begin(), row.entries.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    rows.push_back(std::move(row));
  }

  TruncatedIdeal ti{n, field, D, D + 2, sparse_kernel(rows, cols.size(), field),
                    IdealSource::kernel_of_contraction};
  return ti;
}

/// Truncation of the ideal generated by gens, modulo m^{D+2}: the span of
/// all x^e * g truncated to degree <= D+1, computed by closing the span
/// under multiplication by the variables.
inline TruncatedIdeal generated_truncated(const std::vector<Poly>& gens, int n_vars, int D,
                                          FieldSpec field) {
  MonomialIndex idx(n_vars, D + 1);
  Subspace span(idx.size(), field);
  std::vector<SparseVec> work;
  for (const Poly& g : gens) {
    if (g.context().n_vars != n_vars || g.context().role != VarRole::ring)
      throw ContextMismatch("generator context mismatch");
    SparseVec v = poly_to_vec(g.truncated(D + 1), idx);
    if (span.insert(v)) work.push_back(std::move(v));
  }
  while (!work.empty()) {
    SparseVec v = std::move(work.back());
    work.pop_back();
    for (int j = 0; j < n_vars; ++j) {
      SparseVec w = shift_vec(v, j, idx);
      if (w.is_zero()) continue;
      if (span.insert(w)) work.push_back(std::move(w));
    }
  }
  return TruncatedIdeal{n_vars, field, D, D + 2, std::move(span), IdealSource::generated_by};
}

/// Minimal generator count and canonical minimal generators via Nakayama:
/// mu = dim I/mI, computed inside R/m^{D+2} (valid because m^{D+2} <= mI).
/// Generators are lifts of a basis of the complement of mI, chosen greedily
/// by increasing degree from the kernel's RREF basis.
inline std::pair<int, std::vector<Poly>> minimal_generators(const TruncatedIdeal& I) {
  if (I.source != IdealSource::kernel_of_contraction) throw WrongProvenance();
  MonomialIndex idx = I.make_index();
  FieldSpec field = I.field;

  EchelonSpan m_ideal(idx.size(), field);
  for (const SparseVec& f : I.space.basis())
    for (int j = 0; j < I.n_vars; ++j) m_ideal.insert(shift_vec(f, j, idx));

  int mu = I.space.dim() - m_ideal.dim();

  // candidates ordered by degree (stable within the RREF basis order)
  std::vector<const SparseVec*> cand;
  for (const SparseVec& f : I.space.basis()) cand.push_back(&f);
  std::stable_sort(cand.begin(), cand.end(), [&](const SparseVec* a, const SparseVec* b) {
    int da = total_degree(idx.at(a->entries.back().first));
    int db = total_degree(idx.at(b->entries.back().first));
    return da < db;
  });

  VarContext ring{I.n_vars, VarRole::ring};
  std::vector<Poly> gens;
  EchelonSpan reached = m_ideal;
  for (const SparseVec* f : cand) {
    if (reached.insert(*f)) gens.push_back(vec_to_poly(*f, idx, ring, field));
    if (static_cast<int>(gens.size()) == mu) break;
  }
  return {mu, std::move(gens)};
}

/// h_i = rank of the contraction map R_i -> S_{D-i} against F.
inline std::vector<int> hilbert_function(const Poly& F) {
  if (F.is_zero()) throw ZeroPolynomial();
  if (!F.is_homogeneous()) throw NotHomogeneous();
  int n = F.context().n_vars;
  int D = F.degree();
  FieldSpec field = F.field();
  std::vector<int> h;
  for (int i = 0; i <= D; ++i) {
    std::vector<ExponentVector> cols = monomials_of_degree(n, i);
    std::map<ExponentVector, int, GrlexLess> col_of;
    for (int k = 0; k < static_cast<int>(cols.size()); ++k) col_of[cols[k]] = k;
    std::vector<SparseVec> rows;
    for (const ExponentVector& u : monomials_of_degree(n, D - i)) {
      SparseVec row;
      for (const auto& [t, c] : F.terms())
        if (divides(u, t)) row.push(col_of.at(ev_sub(t, u)), c);
      if (row.is_zero()) continue;
      std::sort(row.entries.begin(), row.entries.end(),
                [](const auto& a, const auto& b) { return a.first < b.first; });
      rows.push_back(std::move(row));
    }
    h.push_back(sparse_row_space(rows, static_cast<int>(cols.size()), field).dim());
  }
  return h;
}

struct AnnReport {
  int mu = 0;
  std::vector<Poly> minimal_gens;
  bool is_ci = false;
  int socle_degree = 0;
  std::optional<std::vector<int>> hilbert;
};

/// Full oracle report for any nonzero F.
inline AnnReport analyze_annihilator(const Poly& F) {
  TruncatedIdeal I = annihilator_truncated(F);
  auto [mu, gens] = minimal_generators(I);
  AnnReport r;
  r.mu = mu;
  r.minimal_gens = std::move(gens);
  r.is_ci = (mu == F.context().n_vars);
  r.socle_degree = F.degree();
  if (F.is_homogeneous()) r.hilbert = hilbert_function(F);
  return r;
}

enum class IdealCmp { equal, not_contained, proper_subideal };

struct IdealCheck {
  IdealCmp result = IdealCmp::equal;
  std::optional<Poly> witness;  // offending generator / unreached kernel element
};

/// Nakayama-certified equality test of (gens) against Ann_R(F).
/// Step 1: every g must contract F to zero.  Step 2: the truncation of
/// (gens) modulo m^{D+2} must contain the annihilator kernel; containment
/// both ways modulo m^{D+2} <= m.Ann_R(F) gives true equality by Nakayama.
inline IdealCheck ideal_equals_ann(const std::vector<Poly>& gens, const Poly& F,
                                   const TruncatedIdeal* precomputed = nullptr) {
  if (F.is_zero()) throw ZeroPolynomial();
  for (const Poly& g : gens)
    if (!contract(g, F).is_zero()) return {IdealCmp::not_contained, g};

  int n = F.context().n_vars;
  int D = F.degree();
  std::optional<TruncatedIdeal> local;
  if (!precomputed) local = annihilator_truncated(F);
  const TruncatedIdeal& ann = precomputed ? *precomputed : *local;
  MonomialIndex idx = ann.make_index();

  // step 1 put (gens) inside Ann, so the truncated closure is a subspace of
  // the kernel (the dropped degree-(D+2) parts annihilate F anyway) and
  // equality reduces to a dimension comparison
  EchelonSpan closure(idx.size(), F.field());
  std::vector<SparseVec> work;
  for (const Poly& g : gens) {
    if (g.context().n_vars != n || g.context().role != VarRole::ring)
      throw ContextMismatch("generator context mismatch");
    SparseVec v = poly_to_vec(g.truncated(D + 1), idx);
    if (closure.insert(v)) work.push_back(std::move(v));
  }
  while (!work.empty()) {
    SparseVec v = std::move(work.back());
    work.pop_back();
    for (int j = 0; j < n; ++j) {
      SparseVec w = shift_vec(v, j, idx);
      if (!w.is_zero() && closure.insert(w)) work.push_back(std::move(w));
    }
  }
  if (closure.dim() == ann.space.dim()) return {IdealCmp::equal, std::nullopt};

  for (const SparseVec& k : ann.space.basis())
    if (!closure.contains(k))
      return {IdealCmp::proper_subideal,
              vec_to_poly(k, idx, VarContext{n, VarRole::ring}, F.field())};
  throw Error("dimension mismatch without a witness");
}

/// Term-pairing invariant for annihilator elements of a binomial
/// F = X^a (X^bL - c X^bR) (after scaling the leading term to 1):
/// any term d x^s of f with x^s o F1 != 0 forces the paired term
/// c^{-1} d x^{s - bL + bR} in f, and symmetrically against F2.
inline bool lemma_pairing_check(const Poly& F, const Poly& f) {
  if (F.n_terms() != 2) throw Error("pairing check expects a binomial");
  if (!contract(f, F).is_zero()) throw NotInKernel();

  auto it = F.terms().begin();
  ExponentVector t_small = it->first;
  FieldElem c_small = it->second;
  ++it;
  ExponentVector t_big = it->first;
  FieldElem c_big = it->second;
  // the graded-lex larger term plays the role of F1
  if (grlex_greater(t_small, t_big)) {
    std::swap(t_small, t_big);
    std::swap(c_small, c_big);
  }

  FieldElem c = -(c_small / c_big);  // F/c_big = X^{t_big} - c X^{t_small}
  ExponentVector diff = ev_sub(t_big, t_small);  // bL - bR

  for (const auto& [s, d] : f.terms()) {
    if (divides(s, t_big)) {  // s o F1 != 0
      ExponentVector paired = ev_sub(s, diff);
      bool ok = true;
      for (int e : paired)
        if (e < 0) ok = false;
      if (!ok || f.coeff(paired) != c.inv() * d) return false;
    }
    if (divides(s, t_small)) {  // s o F2 != 0
      ExponentVector paired = ev_add(s, diff);
      bool ok = true;
      for (int e : paired)
        if (e < 0) ok = false;
      if (!ok || f.coeff(paired) != c * d) return false;
    }
  }
  return true;
}

}  // namespace apolar
