#include <catch2/catch_amalgamated.hpp>

#include "apolar/io.hpp"
#include "apolar/poly.hpp"
#include "helpers.hpp"

using namespace apolar;

TEST_CASE("monomial enumeration and order") {
  auto d22 = monomials_of_degree(2, 2);
  REQUIRE(d22 == std::vector<ExponentVector>{{2, 0}, {1, 1}, {0, 2}});
  CHECK(monomials_of_degree(3, 0) == std::vector<ExponentVector>{{0, 0, 0}});
  CHECK(monomials_of_degree(4, 3).size() == 20);  // C(6,3)

  GrlexLess lt;
  CHECK(lt({1, 0}, {0, 2}));   // degree first
  CHECK(lt({2, 0}, {1, 1}));   // then lex with x1 > x2
  CHECK(!lt({1, 1}, {1, 1}));

  MonomialIndex idx(2, 3);
  CHECK(idx.size() == 10);
  CHECK(idx.at(idx.index({1, 1})) == ExponentVector{1, 1});
  CHECK(!idx.in_range({3, 1}));
}

TEST_CASE("polynomial arithmetic") {
  Poly f = t::qp("x1 + x2");
  Poly g = t::qp("x1 - x2");
  CHECK(f * g == t::qp("x1^2 - x2^2"));
  CHECK(f + Poly::zero(f.context(), f.field()) == f);
  CHECK(f.pow(2) == t::qp("x1^2 + 2x1*x2 + x2^2"));

  FieldSpec f2 = t::Fp(2);
  Poly h = parse_poly("x1 + x2", f2);
  CHECK(h.pow(2) == parse_poly("x1^2 + x2^2", f2));  // char-2 collapse

  CHECK(t::qp("x1 - x1").is_zero());
  CHECK(t::qp("0").degree() == -1);
  CHECK(t::qp("x1*x2 + x1^3").degree() == 3);
  CHECK(t::qp("x1^2 + x1*x2").is_homogeneous());
  CHECK(!t::qp("x1 + x1*x2").is_homogeneous());
  CHECK(t::qp("x1^3 + x2", 2).truncated(1) == t::qp("x2", 2));
}

TEST_CASE("contraction action") {
  CHECK(contract(t::qp("x1^2", 2), t::qp("X1^3*X2")) == t::qp("X1*X2"));
  CHECK(contract(t::qp("x1*x2"), t::qp("X1^2", 2)).is_zero());
  CHECK(contract(t::qp("x1 + x2"), t::qp("X1 - X2")).is_zero());
  CHECK_THROWS_AS(contract(t::qp("X1", 1), t::qp("X1")), ContextMismatch);
}

TEST_CASE("contraction is a module action, bilinearly") {
  std::mt19937_64 rng(7);
  for (FieldSpec spec : {t::Q(), t::Fp(5)}) {
    VarContext ring{3, VarRole::ring};
    VarContext dual{3, VarRole::dual};
    for (int k = 0; k < 60; ++k) {
      Poly f = t::random_poly(rng, ring, spec, 2, 3);
      Poly g = t::random_poly(rng, ring, spec, 2, 3);
      Poly F = t::random_poly(rng, dual, spec, 4, 4);
      Poly G = t::random_poly(rng, dual, spec, 4, 4);
      CHECK(contract(f * g, F) == contract(f, contract(g, F)));
      CHECK(contract(f + g, F) == contract(f, F) + contract(g, F));
      CHECK(contract(f, F + G) == contract(f, F) + contract(f, G));
    }
  }
}

TEST_CASE("parser fixtures") {
  Poly p = t::qp("X1^2*X2 - 3X2^3");
  CHECK(p.coeff({2, 1}) == t::qn(1));
  CHECK(p.coeff({0, 3}) == t::qn(-3));
  CHECK(p.context().role == VarRole::dual);

  CHECK(t::qp("2/3 X1").coeff({1}) == t::qn(2, 3));
  CHECK(t::qp("x2", 4).context().n_vars == 4);
  CHECK(t::qp("x1*x1") == t::qp("x1^2"));

  CHECK_THROWS_AS(t::qp("x1 + X1"), ParseError);
  CHECK_THROWS_AS(t::qp("x0"), ParseError);
  CHECK_THROWS_AS(t::qp("x1 +"), ParseError);
  CHECK_THROWS_AS(t::qp("x1 * * x2"), ParseError);
  CHECK_THROWS_AS(t::qp("1/0"), ParseError);
  CHECK_THROWS_AS(t::qp("x3", 2), ParseError);
  try {
    t::qp("x1 + y2");
  } catch (const ParseError& e) {
    CHECK(e.offset == 5);
  }
}

TEST_CASE("formatter fixtures and round-trips") {
  CHECK(format_poly(t::qp("0")) == "0");
  CHECK(format_poly(t::qp("x2 + x1")) == "x1 + x2");
  CHECK(format_poly(t::qp("3X2^3 - X1^2*X2").scaled(t::qn(-1))) == "X1^2*X2 - 3*X2^3");
  CHECK(format_poly(t::qp("2/3x1 - x2")) == "2/3*x1 - x2");
  CHECK(format_poly(t::qp("1 + x1")) == "1 + x1");

  std::mt19937_64 rng(11);
  for (int k = 0; k < 100; ++k) {
    VarContext ctx{2 + static_cast<int>(rng() % 3),
                   (rng() & 1) ? VarRole::ring : VarRole::dual};
    Poly p = t::random_poly(rng, ctx, t::Q(), 4, 4);
    CHECK(parse_poly(format_poly(p), t::Q(), ctx.n_vars) == p);
  }
}
