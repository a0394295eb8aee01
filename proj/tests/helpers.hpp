#pragma once

#include <optional>
#include <random>
#include <string>

#include "apolar/io.hpp"

namespace t {

inline apolar::FieldSpec Q() { return apolar::FieldSpec::rationals(); }
inline apolar::FieldSpec Fp(std::int64_t p) { return apolar::FieldSpec::prime(p); }

inline apolar::Poly qp(const std::string& s, std::optional<int> n = std::nullopt) {
  return apolar::parse_poly(s, Q(), n);
}

inline apolar::FieldElem qn(std::int64_t num, std::int64_t den = 1) {
  return apolar::FieldElem::from_fraction(Q(), apolar::Int(num), apolar::Int(den));
}

/// Random dense-ish polynomial with small integer coefficients.
inline apolar::Poly random_poly(std::mt19937_64& rng, apolar::VarContext ctx,
                                apolar::FieldSpec field, int max_deg, int n_terms) {
  apolar::Poly p(ctx, field);
  for (int t = 0; t < n_terms; ++t) {
    apolar::ExponentVector e(ctx.n_vars);
    int budget = static_cast<int>(rng() % static_cast<std::uint64_t>(max_deg + 1));
    for (int i = 0; i < ctx.n_vars && budget > 0; ++i) {
      e[i] = static_cast<int>(rng() % static_cast<std::uint64_t>(budget + 1));
      budget -= e[i];
    }
    p.add_term(e, apolar::sample_nonzero(field, rng(), 5));
  }
  return p;
}

}  // namespace t
