#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "qmod/scalar.hpp"

using namespace qmod;

namespace {

Cyclotomic random_elt(std::mt19937& rng, int order) {
  std::vector<mpq_class> c(euler_phi(order));
  for (auto& x : c) {
    x = mpq_class(static_cast<long>(rng() % 11) - 5, 1 + rng() % 4);
    x.canonicalize();
  }
  return Cyclotomic::from_coeffs(order, c);
}

}  // namespace

TEST_CASE("euler phi and cyclotomic polynomials") {
  CHECK(euler_phi(1) == 1);
  CHECK(euler_phi(4) == 2);
  CHECK(euler_phi(12) == 4);
  // Phi_4 = x^2 + 1
  const auto& p4 = cyclotomic_polynomial(4);
  REQUIRE(p4.size() == 3);
  CHECK(p4[0] == 1);
  CHECK(p4[1] == 0);
  CHECK(p4[2] == 1);
  // Phi_6 = x^2 - x + 1
  const auto& p6 = cyclotomic_polynomial(6);
  CHECK(p6[1] == -1);
}

TEST_CASE("zeta relations") {
  for (int n : {3, 4, 5, 8, 12}) {
    Cyclotomic z = Cyclotomic::zeta_power(n, 1);
    Cyclotomic pw(n, 1);
    for (int k = 0; k < n; ++k) pw *= z;
    CHECK(pw.is_one());
    CHECK(Cyclotomic::zeta_power(n, -1) * z == Cyclotomic(n, 1));
    CHECK(Cyclotomic::zeta_power(n, n + 2) == Cyclotomic::zeta_power(n, 2));
  }
  // 1 + z + z^2 = 0 in Q(zeta_3)
  Cyclotomic s(3, 1);
  s += Cyclotomic::zeta_power(3, 1);
  s += Cyclotomic::zeta_power(3, 2);
  CHECK(s.is_zero());
  // z4^2 = -1
  CHECK(Cyclotomic::zeta_power(4, 2) == Cyclotomic(4, -1));
}

TEST_CASE("field axioms on random elements") {
  std::mt19937 rng(3);
  for (int n : {1, 3, 4, 8}) {
    for (int t = 0; t < 25; ++t) {
      Cyclotomic a = random_elt(rng, n), b = random_elt(rng, n), c = random_elt(rng, n);
      CHECK((a + b) + c == a + (b + c));
      CHECK((a * b) * c == a * (b * c));
      CHECK(a * (b + c) == a * b + a * c);
      CHECK(a * b == b * a);
      CHECK(a - a == Cyclotomic(n));
      if (!a.is_zero()) {
        CHECK((a * a.inverse()).is_one());
        CHECK((b / a) * a == b);
      }
      Cyclotomic acc = c;
      acc.add_product(a, b);
      CHECK(acc == c + a * b);
    }
  }
}

TEST_CASE("errors") {
  Cyclotomic a(3, 1), b(4, 1);
  CHECK_THROWS_AS(a + b, OrderMismatch);
  CHECK_THROWS_AS(a * b, OrderMismatch);
  CHECK_THROWS_AS(Cyclotomic(4, 1) / Cyclotomic(4), DivisionByZero);
  CHECK_THROWS_AS(Cyclotomic(4).inverse(), DivisionByZero);
  CHECK_THROWS_AS(cyclo_arith(a, Cyclotomic(3), ArithOp::div), DivisionByZero);
}

TEST_CASE("parse and print round trip") {
  std::mt19937 rng(11);
  for (int n : {1, 3, 5, 12}) {
    for (int t = 0; t < 20; ++t) {
      Cyclotomic a = random_elt(rng, n);
      CHECK(Cyclotomic::parse(a.to_string(), n) == a);
    }
  }
  CHECK(Cyclotomic::parse("1/2 - 3*z^2", 8) ==
        Cyclotomic(8, mpq_class(1, 2)) - Cyclotomic::zeta_power(8, 2, 3));
  CHECK(Cyclotomic::parse("z^-1", 4) == Cyclotomic::zeta_power(4, 3));
  CHECK(Cyclotomic::parse("-z", 3) == -Cyclotomic::zeta_power(3, 1));
  CHECK(Cyclotomic(5).to_string() == "0");
  CHECK_THROWS_AS(Cyclotomic::parse("", 3), ParseError);
  CHECK_THROWS_AS(Cyclotomic::parse("1/0", 3), ParseError);
  CHECK_THROWS_AS(Cyclotomic::parse("2 3", 3), ParseError);
  CHECK_THROWS_AS(Cyclotomic::parse("x", 3), ParseError);
  CHECK_THROWS_AS(Cyclotomic::parse("z^", 3), ParseError);
}

TEST_CASE("embedding and restriction") {
  std::mt19937 rng(5);
  // zeta_3 = zeta_6^2 = zeta_12^4
  CHECK(embed_order(Cyclotomic::zeta_power(3, 1), 12) == Cyclotomic::zeta_power(12, 4));
  for (int t = 0; t < 20; ++t) {
    Cyclotomic a = random_elt(rng, 4), b = random_elt(rng, 4);
    Cyclotomic ea = embed_order(a, 8), eb = embed_order(b, 8);
    CHECK(ea * eb == embed_order(a * b, 8));
    CHECK(restrict_order(ea, 4) == a);
  }
  CHECK_THROWS_AS(embed_order(Cyclotomic(3, 1), 8), NotDivisible);
  CHECK_THROWS_AS(restrict_order(Cyclotomic::zeta_power(8, 1), 4), NotDivisible);
  CHECK(restrict_order(Cyclotomic::zeta_power(8, 2), 4) == Cyclotomic::zeta_power(4, 1));
}

TEST_CASE("rationality predicates") {
  CHECK(Cyclotomic(5, 7).is_rational());
  CHECK(!Cyclotomic::zeta_power(5, 1).is_rational());
  CHECK(Cyclotomic(5, 1).is_one());
  CHECK(Cyclotomic().order() == 1);
}
