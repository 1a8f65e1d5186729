#include <doctest.h>

#include <random>

#include "knotoid/errors.hpp"
#include "knotoid/laurent.hpp"

using namespace knotoid;

namespace {

// Small random polynomials over a few symbols for the ring-axiom checks.
LaurentPoly random_poly(std::mt19937_64& rng) {
  static const std::vector<VariableSymbol> symbols = {
      VariableSymbol::v(), VariableSymbol::x(), VariableSymbol::t(), VariableSymbol::vm(2),
      VariableSymbol::spq(1, 1)};
  LaurentPoly p;
  const int terms = 1 + rng() % 4;
  for (int i = 0; i < terms; ++i) {
    Monomial m;
    m.a_exp = static_cast<long>(rng() % 9) - 4;
    for (const auto& sym : symbols)
      if (rng() % 3 == 0) m.insert(sym, static_cast<long>(rng() % 3) + 1);
    p.add_term(m, Integer(static_cast<long>(rng() % 11) - 5));
  }
  return p;
}

}  // namespace

TEST_CASE("arithmetic basics") {
  const LaurentPoly a = LaurentPoly::a_power(1);
  CHECK(a * LaurentPoly::a_power(-1) == LaurentPoly::one());

  const LaurentPoly d2 = d_poly() * d_poly();
  LaurentPoly expected = LaurentPoly::a_power(4) + LaurentPoly::constant(2) + LaurentPoly::a_power(-4);
  CHECK(d2 == expected);

  const LaurentPoly neg_a3 = LaurentPoly::a_power(3, -1);
  CHECK(neg_a3.pow(-2) == LaurentPoly::a_power(-6));
  CHECK_THROWS_AS(d_poly().pow(-1), Error);
}

TEST_CASE("d polynomial") {
  CHECK(d_poly().eval_trivial() == -2);
  CHECK(d_poly() + LaurentPoly::a_power(2) + LaurentPoly::a_power(-2) == LaurentPoly::zero());
  const LaurentPoly md = d_poly() * LaurentPoly::constant(-1);
  for (const auto& [m, c] : md.terms()) CHECK(c > 0);
}

TEST_CASE("substitution") {
  const LaurentPoly v = LaurentPoly::symbol(VariableSymbol::v());
  const LaurentPoly t = LaurentPoly::symbol(VariableSymbol::t());
  const LaurentPoly p = v * LaurentPoly::a_power(1) + t;
  SubstitutionMap rules;
  rules[VariableSymbol::v()] = d_poly();
  rules[VariableSymbol::t()] = d_poly();
  CHECK(substitute(p, rules) == d_poly() * LaurentPoly::a_power(1) + d_poly());

  // reduced map: s_{1,1} -> X Y
  const LaurentPoly s11 = LaurentPoly::symbol(VariableSymbol::spq(1, 1));
  SubstitutionMap reduced;
  reduced[VariableSymbol::spq(1, 1)] =
      LaurentPoly::symbol(VariableSymbol::rx()) * LaurentPoly::symbol(VariableSymbol::ry());
  const LaurentPoly image = substitute(s11, reduced);
  Monomial m;
  m.insert(VariableSymbol::rx(), 1);
  m.insert(VariableSymbol::ry(), 1);
  CHECK(image == LaurentPoly::monomial(m, 1));
}

TEST_CASE("spq normalization identifies (p,q) with (-p,-q)") {
  CHECK(VariableSymbol::spq(-1, -1) == VariableSymbol::spq(1, 1));
  CHECK(VariableSymbol::spq(1, -1) == VariableSymbol::spq(-1, 1));
  CHECK(VariableSymbol::spq(-2, 0) == VariableSymbol::spq(2, 0));
  CHECK_THROWS_AS(VariableSymbol::spq(2, 2), Error);
}

TEST_CASE("canonical strings") {
  CHECK(canonical_string(LaurentPoly::zero()) == "0");
  CHECK(canonical_string(d_poly()) == "-A^2 - A^-2");

  // the golden planar bracket of the two-crossing knotoid
  LaurentPoly kp = LaurentPoly::a_power(2) + LaurentPoly::one() - LaurentPoly::a_power(-4);
  CHECK(canonical_string(kp) == "A^2 + 1 - A^-4");

  LaurentPoly mixed = LaurentPoly::symbol(VariableSymbol::spq(-1, 1)) +
                      LaurentPoly::a_power(-2) * LaurentPoly::symbol(VariableSymbol::spq(1, 1));
  CHECK(canonical_string(mixed) == "s_{-1,1} + A^-2 s_{1,1}");
}

TEST_CASE("parser round-trips canonical strings") {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 200; ++i) {
    const LaurentPoly p = random_poly(rng);
    CHECK(parse_poly(canonical_string(p)) == p);
  }
  CHECK(parse_poly("0") == LaurentPoly::zero());
  CHECK(parse_poly("A^2 + 1 - A^-4") ==
        LaurentPoly::a_power(2) + LaurentPoly::one() - LaurentPoly::a_power(-4));
  CHECK(parse_poly("v_2 x t_3") == parse_poly("t_3 v_2 x"));
}

TEST_CASE("ring axioms on random polynomials") {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 60; ++i) {
    const LaurentPoly p = random_poly(rng);
    const LaurentPoly q = random_poly(rng);
    const LaurentPoly r = random_poly(rng);
    CHECK(p + q == q + p);
    CHECK(p * q == q * p);
    CHECK((p + q) + r == p + (q + r));
    CHECK((p * q) * r == p * (q * r));
    CHECK(p * (q + r) == p * q + p * r);
    CHECK(p - p == LaurentPoly::zero());
  }
}

TEST_CASE("substitution is a ring homomorphism") {
  std::mt19937_64 rng(13);
  SubstitutionMap rules;
  rules[VariableSymbol::v()] = d_poly();
  rules[VariableSymbol::x()] = LaurentPoly::a_power(2) + LaurentPoly::one();
  rules[VariableSymbol::spq(1, 1)] = LaurentPoly::symbol(VariableSymbol::t());
  for (int i = 0; i < 40; ++i) {
    const LaurentPoly p = random_poly(rng);
    const LaurentPoly q = random_poly(rng);
    CHECK(substitute(p * q, rules) == substitute(p, rules) * substitute(q, rules));
    CHECK(substitute(p + q, rules) == substitute(p, rules) + substitute(q, rules));
  }
}
