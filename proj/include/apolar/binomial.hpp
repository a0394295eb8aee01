#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "apolar/apolarity.hpp"
#include "apolar/poly.hpp"

namespace apolar {

/// Canonicalized binomial X^a (c1 X^bL - c2 X^bR) in internal coordinates:
/// the left-support variables come first, then the right-support variables,
/// then the inert ones, each block keeping its original relative order.
/// perm maps internal positions back to user variable indices (0-based).
/// If the two sides were exchanged to enforce d1 >= d2, swapped is set and
/// the represented polynomial is -1 times the input (Ann is scalar-invariant).
struct BinomialNormalForm {
  int n_vars = 0;
  FieldSpec field;
  ExponentVector a;        // shared monomial factor, internal coordinates
  ExponentVector b_left;   // support exactly {0, ..., d1-1}
  ExponentVector b_right;  // support exactly {d1, ..., d1+d2-1}
  int d1 = 0;
  int d2 = 0;
  FieldElem c1, c2;
  std::vector<int> perm;   // perm[internal] = user index
  bool swapped = false;

  /// F in internal coordinates (dual variables renamed along perm).
  Poly internal_dual() const {
    VarContext ctx{n_vars, VarRole::dual};
    Poly p(ctx, field);
    p.add_term(ev_add(a, b_left), c1);
    p.add_term(ev_add(a, b_right), -c2);
    return p;
  }

  /// Rename a ring polynomial from internal coordinates to user variables.
  Poly to_user(const Poly& f) const {
    Poly r(f.context(), f.field());
    for (const auto& [e, c] : f.terms()) {
      ExponentVector u(n_vars, 0);
      for (int i = 0; i < n_vars; ++i) u[perm[i]] = e[i];
      r.add_term(u, c);
    }
    return r;
  }
};

/// One-term input (or a binomial collapsing to a monomial): Ann is the
/// monomial complete-intersection case.
struct DegenerateMonomial {
  ExponentVector exps;  // user coordinates
  FieldElem coeff;
};

using NormalizeResult = std::variant<BinomialNormalForm, DegenerateMonomial>;

/// Factor a 1- or 2-term F as X^a (c1 X^bL - c2 X^bR) with disjoint residual
/// supports; the graded-lex larger term is taken as the left side, then the
/// sides are exchanged if needed so that d1 >= d2.
inline NormalizeResult normalize(const Poly& F) {
  if (F.is_zero()) throw ZeroPolynomial();
  if (F.context().role != VarRole::dual)
    throw ContextMismatch("normalize expects a dual-space polynomial");
  if (F.n_terms() > 2) throw NotBinomial();
  if (F.n_terms() == 1) {
    const auto& [e, c] = *F.terms().begin();
    return DegenerateMonomial{e, c};
  }

  auto it = F.terms().begin();
  ExponentVector t1 = it->first;
  FieldElem e1 = it->second;
  ++it;
  ExponentVector t2 = it->first;
  FieldElem e2 = it->second;
  // the graded-lex larger term is the left side
  if (grlex_greater(t2, t1)) {
    std::swap(t1, t2);
    std::swap(e1, e2);
  }

  int n = F.context().n_vars;
  ExponentVector a = ev_min(t1, t2);
  ExponentVector r1 = ev_sub(t1, a);
  ExponentVector r2 = ev_sub(t2, a);
  if (r1 == r2) return DegenerateMonomial{t1, e1};  // unreachable for distinct terms

  FieldElem c1 = e1;
  FieldElem c2 = -e2;

  auto supp_size = [](const ExponentVector& e) {
    int d = 0;
    for (int v : e)
      if (v > 0) ++d;
    return d;
  };
  int d1 = supp_size(r1);
  int d2 = supp_size(r2);
  bool swapped = false;
  if (d1 < d2) {
    std::swap(r1, r2);
    std::swap(d1, d2);
    std::swap(c1, c2);  // -F = X^a (c2 X^{r2} - c1 X^{r1})
    swapped = true;
  }

  std::vector<int> perm;
  for (int i = 0; i < n; ++i)
    if (r1[i] > 0) perm.push_back(i);
  for (int i = 0; i < n; ++i)
    if (r2[i] > 0) perm.push_back(i);
  for (int i = 0; i < n; ++i)
    if (r1[i] == 0 && r2[i] == 0) perm.push_back(i);

  BinomialNormalForm nf;
  nf.n_vars = n;
  nf.field = F.field();
  nf.d1 = d1;
  nf.d2 = d2;
  nf.c1 = c1;
  nf.c2 = c2;
  nf.perm = perm;
  nf.swapped = swapped;
  nf.a.resize(n);
  nf.b_left.assign(n, 0);
  nf.b_right.assign(n, 0);
  for (int i = 0; i < n; ++i) {
    nf.a[i] = a[perm[i]];
    if (i < d1) nf.b_left[i] = r1[perm[i]];
    if (i >= d1 && i < d1 + d2) nf.b_right[i] = r2[perm[i]];
  }
  return nf;
}

/// v = min{ i >= 1 : (x^bL)^i o X^{a_left} = 0 }, via the closed form
/// min_j floor(a_j / b_j) + 1 over the left support, cross-checked against
/// the literal contraction loop.
inline int compute_v(const BinomialNormalForm& nf) {
  if (nf.d1 < 1) throw Error("compute_v requires a nonempty left support");
  int v = -1;
  for (int j = 0; j < nf.d1; ++j) {
    int cand = nf.a[j] / nf.b_left[j] + 1;
    if (v < 0 || cand < v) v = cand;
  }
  if (v <= 1000000) {
    // redundant assertion of the closed form
    auto vanishes = [&](int i) {
      for (int j = 0; j < nf.d1; ++j)
        if (i * nf.b_left[j] > nf.a[j]) return true;
      return false;
    };
    if (vanishes(v - 1) && v > 1) throw Error("compute_v closed form mismatch (early)");
    if (!vanishes(v)) throw Error("compute_v closed form mismatch (late)");
  }
  return v;
}

enum class Verdict {
  ci_case_a,
  ci_case_b,
  not_ci_d2_big,
  not_ci_inequality,
  outside_theorem_d2_zero,
  degenerate_monomial
};

inline const char* verdict_name(Verdict v) {
  switch (v) {
    case Verdict::ci_case_a: return "CI_case_a";
    case Verdict::ci_case_b: return "CI_case_b";
    case Verdict::not_ci_d2_big: return "NotCI_d2_big";
    case Verdict::not_ci_inequality: return "NotCI_inequality";
    case Verdict::outside_theorem_d2_zero: return "OutsideTheorem_d2_zero";
    case Verdict::degenerate_monomial: return "Degenerate_monomial";
  }
  return "?";
}

inline bool verdict_is_ci(Verdict v) {
  return v == Verdict::ci_case_a || v == Verdict::ci_case_b ||
         v == Verdict::degenerate_monomial;
}

struct Classification {
  Verdict verdict;
  int v = 0;
  std::optional<int> w;
  // the inequality a_{m+1} + 1 >= v * b_{m+1}, when d2 = 1
  std::optional<int> lhs;
  std::optional<int> rhs;
};

/// The classification dichotomy: CI iff d1 = d2 = 1, or d1 >= 2, d2 = 1 and
/// a_{m+1} + 1 >= v b_{m+1}.  d2 = 0 is outside the hypotheses and callers
/// fall back to the kernel oracle.
inline Classification classify(const BinomialNormalForm& nf) {
  Classification c{Verdict::outside_theorem_d2_zero};
  if (nf.d2 == 0) return c;
  c.v = compute_v(nf);
  if (nf.d2 >= 2) {
    c.verdict = Verdict::not_ci_d2_big;
    return c;
  }
  int rm = nf.d1;  // internal index of the single right-support variable
  int am1 = nf.a[rm];
  int bm1 = nf.b_right[rm];
  c.w = (am1 + 1 + bm1 - 1) / bm1;  // min{ i : a_{m+1}+1 <= i b_{m+1} }
  c.lhs = am1 + 1;
  c.rhs = c.v * bm1;
  if (nf.d1 == 1) {
    c.verdict = Verdict::ci_case_a;
  } else {
    c.verdict = *c.lhs >= *c.rhs ? Verdict::ci_case_b : Verdict::not_ci_inequality;
  }
  return c;
}

/// Generators of Ann for a monomial dual generator X^a: {x_i^{a_i+1}}.
inline std::vector<Poly> monomial_annihilator(const ExponentVector& a, FieldSpec field) {
  VarContext ring{static_cast<int>(a.size()), VarRole::ring};
  std::vector<Poly> gens;
  for (std::size_t i = 0; i < a.size(); ++i)
    gens.push_back(Poly::var_power(ring, field, static_cast<int>(i), a[i] + 1));
  return gens;
}

namespace detail {

/// p = sum_{i=0}^{v} c1^{v-i} c2^i (x^bL)^i x_{m+1}^{a_{m+1}+1-i b_{m+1}}
/// in internal coordinates; the exponents are nonnegative by the theorem's
/// inequality and that is asserted.
inline Poly theorem_p(const BinomialNormalForm& nf, int v) {
  VarContext ring{nf.n_vars, VarRole::ring};
  int rm = nf.d1;
  Poly p(ring, nf.field);
  for (int i = 0; i <= v; ++i) {
    ExponentVector e = ev_scale(nf.b_left, i);
    int er = nf.a[rm] + 1 - i * nf.b_right[rm];
    if (er < 0) throw Error("negative exponent in theorem formula");
    e[rm] += er;
    p.add_term(e, nf.c1.pow(v - i) * nf.c2.pow(i));
  }
  return p;
}

}  // namespace detail

/// The theorem's explicit generators for the CI cases, mapped back to user
/// variables.  Exactly N generators; refuses non-CI normal forms.
inline std::vector<Poly> construct_annihilator(const BinomialNormalForm& nf) {
  Classification cls = classify(nf);
  if (!verdict_is_ci(cls.verdict))
    throw NotCI(std::string("construction refused: verdict is ") + verdict_name(cls.verdict));

  VarContext ring{nf.n_vars, VarRole::ring};
  FieldSpec field = nf.field;
  std::vector<Poly> gens;
  int rm = nf.d1;  // the right-support variable (d2 = 1 in all CI cases)
  int v = cls.v;

  if (cls.verdict == Verdict::ci_case_b) {
    for (int i = 0; i < nf.d1; ++i)
      gens.push_back(Poly::var_power(ring, field, i, nf.a[i] + nf.b_left[i] + 1));
    gens.push_back(detail::theorem_p(nf, v));
    for (int i = rm + 1; i < nf.n_vars; ++i)
      gens.push_back(Poly::var_power(ring, field, i, nf.a[i] + 1));
  } else {
    // d1 = d2 = 1: two-variable formulas plus inert variable powers
    int a1 = nf.a[0], b1 = nf.b_left[0];
    int a2 = nf.a[rm], b2 = nf.b_right[rm];
    int w = *cls.w;
    if (v < w) {
      gens.push_back(Poly::var_power(ring, field, 0, a1 + b1 + 1));
      gens.push_back(detail::theorem_p(nf, v));
    } else if (v > w) {
      gens.push_back(Poly::var_power(ring, field, rm, a2 + b2 + 1));
      Poly q(ring, field);
      for (int i = 0; i <= w; ++i) {
        ExponentVector e(nf.n_vars, 0);
        e[0] = a1 + 1 - i * b1;
        e[rm] = i * b2;
        if (e[0] < 0) throw Error("negative exponent in theorem formula");
        q.add_term(e, nf.c1.pow(i) * nf.c2.pow(w - i));
      }
      gens.push_back(q);
    } else {
      Poly p(ring, field);
      for (int i = 0; i <= v; ++i) {
        ExponentVector e(nf.n_vars, 0);
        e[0] = i * b1;
        e[rm] = (v - i) * b2;
        p.add_term(e, nf.c1.pow(v - i) * nf.c2.pow(i));
      }
      Poly q(ring, field);
      for (int i = 0; i <= v - 1; ++i) {
        ExponentVector e(nf.n_vars, 0);
        e[0] = a1 + 1 - (v - 1 - i) * b1;
        e[rm] = a2 + 1 - i * b2;
        if (e[0] < 0 || e[rm] < 0) throw Error("negative exponent in theorem formula");
        q.add_term(e, nf.c1.pow(v - 1 - i) * nf.c2.pow(i));
      }
      gens.push_back(p);
      gens.push_back(q);
    }
    for (int i = 1; i < nf.n_vars; ++i) {
      if (i == rm) continue;
      gens.push_back(Poly::var_power(ring, field, i, nf.a[i] + 1));
    }
  }

  for (Poly& g : gens) g = nf.to_user(g);
  return gens;
}

/// Ann(X^extra * G) from Ann(G): append a fresh power x_j^{extra_j + 1} per
/// new variable and extend the old generators to the larger ring.
inline std::vector<Poly> augment_variables(const std::vector<Poly>& gens,
                                           const ExponentVector& extra) {
  if (gens.empty()) return {};
  int n_old = gens.front().context().n_vars;
  int n_new = n_old + static_cast<int>(extra.size());
  VarContext ring{n_new, VarRole::ring};
  FieldSpec field = gens.front().field();
  std::vector<Poly> out;
  for (const Poly& g : gens) {
    Poly h(ring, field);
    for (const auto& [e, c] : g.terms()) {
      ExponentVector ee = e;
      ee.resize(n_new, 0);
      h.add_term(ee, c);
    }
    out.push_back(std::move(h));
  }
  for (std::size_t j = 0; j < extra.size(); ++j)
    out.push_back(Poly::var_power(ring, field, n_old + static_cast<int>(j), extra[j] + 1));
  return out;
}

/// The determinant certificate of the two-variable v1 = v2 case: forms the
/// proof's matrix A with (p, q) = (x1, x2) A, contracts det A against F, and
/// checks the value equals c1^v c2^v (nonzero, so the socle is reached).
inline FieldElem det_certificate(const BinomialNormalForm& nf) {
  if (nf.n_vars != 2) throw WrongCase("det certificate requires N = 2");
  Classification cls = classify(nf);
  if (cls.verdict != Verdict::ci_case_a || *cls.w != cls.v)
    throw WrongCase("det certificate requires the v1 = v2 case");
  int v = cls.v;
  int b1 = nf.b_left[0], b2 = nf.b_right[1];
  VarContext ring{2, VarRole::ring};
  FieldSpec field = nf.field;

  // p, q in internal coordinates as in the v = w branch
  Poly p(ring, field), q(ring, field);
  for (int i = 0; i <= v; ++i)
    p.add_term({i * b1, (v - i) * b2}, nf.c1.pow(v - i) * nf.c2.pow(i));
  for (int i = 0; i <= v - 1; ++i)
    q.add_term({nf.a[0] + 1 - (v - 1 - i) * b1, nf.a[1] + 1 - i * b2},
               nf.c1.pow(v - 1 - i) * nf.c2.pow(i));

  auto div_x2 = [&](const Poly& f) {
    Poly r(ring, field);
    for (const auto& [e, c] : f.terms()) {
      if (e[1] < 1) throw CertificateFailed("matrix entry not divisible by x2");
      r.add_term({e[0], e[1] - 1}, c);
    }
    return r;
  };

  Poly a11 = Poly::monomial(ring, field, {v * b1 - 1, 0}, nf.c2.pow(v));
  Poly corner = Poly::monomial(ring, field, {v * b1, 0}, nf.c2.pow(v));
  Poly a21 = div_x2(p - corner);
  Poly a22 = div_x2(q);
  (void)a21;  // a12 = 0, so det A = a11 * a22
  Poly det = a11 * a22;

  Poly F = nf.internal_dual();
  Poly image = contract(det, F);
  FieldElem expected = nf.c1.pow(v) * nf.c2.pow(v);
  ExponentVector zero(2, 0);
  Poly expected_poly = Poly::constant({2, VarRole::dual}, field, expected);
  if (image != expected_poly)
    throw CertificateFailed("det A o F != c1^v c2^v");
  return image.coeff(zero);
}

}  // namespace apolar
