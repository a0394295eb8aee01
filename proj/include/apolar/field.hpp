#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <random>
#include <string>

#include "apolar/errors.hpp"

namespace apolar {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

enum class FieldKind { rationals, prime };

/// A coefficient field: the rationals, or a prime field F_p.
struct FieldSpec {
  FieldKind kind = FieldKind::rationals;
  std::int64_t p = 0;

  static FieldSpec rationals() { return FieldSpec{FieldKind::rationals, 0}; }

  static FieldSpec prime(std::int64_t p) {
    if (p < 2 || !is_prime(p)) throw Error("modulus " + std::to_string(p) + " is not prime");
    return FieldSpec{FieldKind::prime, p};
  }

  /// CLI flag syntax: "q" for the rationals, "p:<integer>" for F_p.
  static FieldSpec parse_flag(const std::string& s) {
    if (s == "q" || s == "Q") return rationals();
    if (s.size() > 2 && (s[0] == 'p' || s[0] == 'P') && s[1] == ':')
      return prime(std::stoll(s.substr(2)));
    throw Error("bad field flag '" + s + "' (expected q or p:<prime>)");
  }

  std::string flag() const {
    return kind == FieldKind::rationals ? std::string("q") : "p:" + std::to_string(p);
  }

  bool is_char_zero() const { return kind == FieldKind::rationals; }

  bool operator==(const FieldSpec& o) const { return kind == o.kind && p == o.p; }
  bool operator!=(const FieldSpec& o) const { return !(*this == o); }

  // Trial division; moduli in practice are at most 2^31.
  static bool is_prime(std::int64_t n) {
    if (n < 2) return false;
    for (std::int64_t d = 2; d * d <= n; ++d)
      if (n % d == 0) return false;
    return true;
  }
};

namespace detail {

inline std::int64_t mod_inverse(std::int64_t a, std::int64_t p) {
  // extended Euclid; a in [1, p)
  std::int64_t t = 0, new_t = 1, r = p, new_r = a;
  while (new_r != 0) {
    std::int64_t q = r / new_r;
    std::int64_t tmp = t - q * new_t;
    t = new_t;
    new_t = tmp;
    tmp = r - q * new_r;
    r = new_r;
    new_r = tmp;
  }
  if (r != 1) throw DivisionByZero();
  return t < 0 ? t + p : t;
}

}  // namespace detail

/// An exact field element.  Rationals are kept in lowest terms with a
/// positive denominator (cpp_rational guarantees canonical form);
/// prime-field residues are kept in [0, p).
class FieldElem {
 public:
  FieldElem() = default;

  FieldElem(FieldSpec spec, Rat v) : spec_(spec), v_(std::move(v)) { reduce(); }

  static FieldElem zero(FieldSpec spec) { return FieldElem(spec, Rat(0)); }
  static FieldElem one(FieldSpec spec) { return FieldElem(spec, Rat(1)); }
  static FieldElem from_int(FieldSpec spec, std::int64_t n) { return FieldElem(spec, Rat(n)); }

  static FieldElem from_fraction(FieldSpec spec, const Int& num, const Int& den) {
    if (den == 0) throw DivisionByZero();
    if (spec.kind == FieldKind::rationals) return FieldElem(spec, Rat(num, den));
    FieldElem n(spec, Rat(num));
    FieldElem d(spec, Rat(den));
    return n / d;
  }

  const FieldSpec& spec() const { return spec_; }
  const Rat& value() const { return v_; }

  bool is_zero() const { return v_ == 0; }
  bool is_one() const { return v_ == 1; }

  FieldElem operator+(const FieldElem& o) const {
    check(o);
    return FieldElem(spec_, v_ + o.v_);
  }
  FieldElem operator-(const FieldElem& o) const {
    check(o);
    return FieldElem(spec_, v_ - o.v_);
  }
  FieldElem operator*(const FieldElem& o) const {
    check(o);
    return FieldElem(spec_, v_ * o.v_);
  }
  FieldElem operator/(const FieldElem& o) const {
    check(o);
    return *this * o.inv();
  }
  FieldElem operator-() const { return FieldElem(spec_, -v_); }

  FieldElem& operator+=(const FieldElem& o) { return *this = *this + o; }
  FieldElem& operator-=(const FieldElem& o) { return *this = *this - o; }
  FieldElem& operator*=(const FieldElem& o) { return *this = *this * o; }

  FieldElem inv() const {
    if (is_zero()) throw DivisionByZero();
    if (spec_.kind == FieldKind::rationals) return FieldElem(spec_, 1 / v_);
    std::int64_t a = static_cast<std::int64_t>(numerator(v_));
    return FieldElem(spec_, Rat(detail::mod_inverse(a, spec_.p)));
  }

  FieldElem pow(long e) const {
    if (e < 0) return inv().pow(-e);
    FieldElem r = one(spec_);
    FieldElem b = *this;
    for (; e > 0; e >>= 1) {
      if (e & 1) r *= b;
      b *= b;
    }
    return r;
  }

  bool operator==(const FieldElem& o) const {
    check(o);
    return v_ == o.v_;
  }
  bool operator!=(const FieldElem& o) const { return !(*this == o); }

  /// Exact text form: "5", "-1", "2/3"; residues print as integers.
  std::string str() const {
    std::string s = numerator(v_).str();
    if (denominator(v_) != 1) s += "/" + denominator(v_).str();
    return s;
  }

 private:
  void reduce() {
    if (spec_.kind != FieldKind::prime) return;
    Int num = numerator(v_);
    Int den = denominator(v_);
    Int p(spec_.p);
    num %= p;
    if (num < 0) num += p;
    if (den != 1) {
      den %= p;
      if (den < 0) den += p;
      if (den == 0) throw DivisionByZero();
      std::int64_t di = detail::mod_inverse(static_cast<std::int64_t>(den), spec_.p);
      num = (num * di) % p;
    }
    v_ = Rat(num);
  }

  void check(const FieldElem& o) const {
    if (spec_ != o.spec_) throw MixedFields();
  }

  FieldSpec spec_;
  Rat v_;
};

/// Deterministic nonzero sample: over Q from {+-1,...,+-pool_bound},
/// over F_p from {1,...,min(p-1, pool_bound)}.
inline FieldElem sample_nonzero(FieldSpec spec, std::uint64_t seed, std::int64_t pool_bound) {
  std::mt19937_64 rng(seed);
  if (spec.kind == FieldKind::rationals) {
    std::int64_t mag = 1 + static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(pool_bound));
    bool neg = (rng() & 1) != 0;
    return FieldElem::from_int(spec, neg ? -mag : mag);
  }
  std::int64_t hi = std::min<std::int64_t>(spec.p - 1, pool_bound);
  return FieldElem::from_int(spec, 1 + static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(hi)));
}

}  // namespace apolar
