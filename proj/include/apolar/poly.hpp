#pragma once

#include <map>
#include <utility>

#include "apolar/field.hpp"
#include "apolar/monomial.hpp"

namespace apolar {

/// Sparse multivariate polynomial over an exact field.  Terms map exponent
/// vectors to nonzero coefficients; zero coefficients are never stored.
class Poly {
 public:
  using TermMap = std::map<ExponentVector, FieldElem, GrlexLess>;

  Poly(VarContext ctx, FieldSpec field) : ctx_(ctx), field_(field) {}

  static Poly zero(VarContext ctx, FieldSpec field) { return Poly(ctx, field); }

  static Poly monomial(VarContext ctx, FieldSpec field, const ExponentVector& e,
                       const FieldElem& c) {
    Poly p(ctx, field);
    p.add_term(e, c);
    return p;
  }

  static Poly constant(VarContext ctx, FieldSpec field, const FieldElem& c) {
    return monomial(ctx, field, ExponentVector(ctx.n_vars, 0), c);
  }

  /// The i-th variable (0-based), to the given power.
  static Poly var_power(VarContext ctx, FieldSpec field, int i, int e) {
    ExponentVector ev(ctx.n_vars, 0);
    ev[i] = e;
    return monomial(ctx, field, ev, FieldElem::one(field));
  }

  const VarContext& context() const { return ctx_; }
  const FieldSpec& field() const { return field_; }
  const TermMap& terms() const { return terms_; }

  bool is_zero() const { return terms_.empty(); }
  int n_terms() const { return static_cast<int>(terms_.size()); }

  /// Max total degree over terms; -1 for the zero polynomial.
  int degree() const {
    int d = -1;
    for (const auto& [e, c] : terms_) d = std::max(d, total_degree(e));
    return d;
  }

  bool is_homogeneous() const {
    if (terms_.empty()) return true;
    int d = total_degree(terms_.begin()->first);
    for (const auto& [e, c] : terms_)
      if (total_degree(e) != d) return false;
    return true;
  }

  void add_term(const ExponentVector& e, const FieldElem& c) {
    if (c.is_zero()) return;
    auto it = terms_.find(e);
    if (it == terms_.end()) {
      terms_.emplace(e, c);
    } else {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  FieldElem coeff(const ExponentVector& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? FieldElem::zero(field_) : it->second;
  }

  Poly operator+(const Poly& o) const {
    check(o);
    Poly r = *this;
    for (const auto& [e, c] : o.terms_) r.add_term(e, c);
    return r;
  }

  Poly operator-(const Poly& o) const {
    check(o);
    Poly r = *this;
    for (const auto& [e, c] : o.terms_) r.add_term(e, -c);
    return r;
  }

  Poly operator-() const {
    Poly r(ctx_, field_);
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
    return r;
  }

  Poly operator*(const Poly& o) const {
    check(o);
    Poly r(ctx_, field_);
    for (const auto& [e1, c1] : terms_)
      for (const auto& [e2, c2] : o.terms_) r.add_term(ev_add(e1, e2), c1 * c2);
    return r;
  }

  Poly scaled(const FieldElem& c) const {
    Poly r(ctx_, field_);
    if (c.is_zero()) return r;
    for (const auto& [e, k] : terms_) r.terms_.emplace(e, k * c);
    return r;
  }

  Poly mul_monomial(const ExponentVector& e, const FieldElem& c) const {
    Poly r(ctx_, field_);
    if (c.is_zero()) return r;
    for (const auto& [t, k] : terms_) r.terms_.emplace(ev_add(t, e), k * c);
    return r;
  }

  Poly pow(int e) const {
    Poly r = constant(ctx_, field_, FieldElem::one(field_));
    for (int i = 0; i < e; ++i) r = r * *this;
    return r;
  }

  /// Drop every term of total degree > d.
  Poly truncated(int d) const {
    Poly r(ctx_, field_);
    for (const auto& [e, c] : terms_)
      if (total_degree(e) <= d) r.terms_.emplace(e, c);
    return r;
  }

  bool operator==(const Poly& o) const {
    return ctx_ == o.ctx_ && field_ == o.field_ && terms_ == o.terms_;
  }
  bool operator!=(const Poly& o) const { return !(*this == o); }

 private:
  void check(const Poly& o) const {
    if (ctx_ != o.ctx_) throw ContextMismatch("variable contexts differ");
    if (field_ != o.field_) throw MixedFields();
  }

  VarContext ctx_;
  FieldSpec field_;
  TermMap terms_;
};

/// The contraction action of the ring on the dual space:
/// x^a o X^b = X^{b-a} when b >= a componentwise, else 0.  No factorials;
/// this is characteristic-independent.
inline Poly contract(const Poly& f, const Poly& F) {
  if (f.context().role != VarRole::ring || F.context().role != VarRole::dual)
    throw ContextMismatch("contract expects a ring element acting on a dual element");
  if (f.context().n_vars != F.context().n_vars) throw ContextMismatch("variable counts differ");
  if (f.field() != F.field()) throw MixedFields();
  Poly r(F.context(), F.field());
  for (const auto& [ef, cf] : f.terms())
    for (const auto& [eF, cF] : F.terms())
      if (divides(ef, eF)) r.add_term(ev_sub(eF, ef), cf * cF);
  return r;
}

}  // namespace apolar
