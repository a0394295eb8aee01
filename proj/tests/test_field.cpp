#include <catch2/catch_amalgamated.hpp>

#include "apolar/field.hpp"
#include "helpers.hpp"

using namespace apolar;

TEST_CASE("rational arithmetic is exact") {
  CHECK(t::qn(1, 3) + t::qn(1, 6) == t::qn(1, 2));
  CHECK(t::qn(2, 3).str() == "2/3");
  CHECK((-t::qn(1)).str() == "-1");
  CHECK(t::qn(4, 6) == t::qn(2, 3));  // canonical form
  CHECK_THROWS_AS(t::qn(0).inv(), DivisionByZero);
}

TEST_CASE("prime field arithmetic") {
  FieldSpec f7 = t::Fp(7);
  auto e = [&](std::int64_t n) { return FieldElem::from_int(f7, n); };
  CHECK(e(3) * e(5) == e(1));
  CHECK(e(3).inv() == e(5));
  CHECK(e(-1) == e(6));  // residues live in [0, p)
  CHECK(e(2).pow(3) == e(1));
  CHECK_THROWS_AS(e(0).inv(), DivisionByZero);
  CHECK_THROWS_AS(FieldSpec::prime(6), Error);
  CHECK_THROWS_AS(e(1) + t::qn(1), MixedFields);
}

TEST_CASE("field flag parsing") {
  CHECK(FieldSpec::parse_flag("q") == FieldSpec::rationals());
  CHECK(FieldSpec::parse_flag("p:11") == FieldSpec::prime(11));
  CHECK(FieldSpec::parse_flag("p:11").flag() == "p:11");
  CHECK_THROWS_AS(FieldSpec::parse_flag("r"), Error);
  CHECK_THROWS_AS(FieldSpec::parse_flag("p:4"), Error);
}

TEST_CASE("field axioms on random pairs") {
  for (FieldSpec spec : {t::Q(), t::Fp(7), t::Fp(101)}) {
    std::mt19937_64 rng(42);
    FieldElem one = FieldElem::one(spec);
    for (int k = 0; k < 1000; ++k) {
      FieldElem a = sample_nonzero(spec, rng(), 50);
      FieldElem b = sample_nonzero(spec, rng(), 50);
      FieldElem c = sample_nonzero(spec, rng(), 50);
      CHECK(a + b == b + a);
      CHECK(a * b == b * a);
      CHECK((a + b) + c == a + (b + c));
      CHECK((a * b) * c == a * (b * c));
      CHECK(a * (b + c) == a * b + a * c);
      CHECK(a * a.inv() == one);
      CHECK(a - a == FieldElem::zero(spec));
      CHECK(a / b * b == a);
    }
  }
}

TEST_CASE("sample_nonzero contract") {
  FieldElem v = sample_nonzero(t::Q(), 1, 3);
  Rat r = v.value();
  CHECK(r != 0);
  CHECK(abs(numerator(r)) <= 3);
  CHECK(denominator(r) == 1);

  CHECK(sample_nonzero(t::Fp(2), 99, 9) == FieldElem::one(t::Fp(2)));
  CHECK(sample_nonzero(t::Q(), 7, 5) == sample_nonzero(t::Q(), 7, 5));
}
