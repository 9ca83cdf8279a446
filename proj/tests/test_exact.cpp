#include <doctest.h>

#include <random>

#include "qlift/polynomial.hpp"
#include "qlift/quad.hpp"
#include "qlift/rational.hpp"

using namespace qlift;

TEST_CASE("rational encoding round-trips") {
  CHECK(to_string(make_rational(-65804, 125)) == "-65804/125");
  CHECK(to_string(make_rational(10, 5)) == "2");
  CHECK(parse_rational("-65804/125") == make_rational(65804, -125));
  CHECK(parse_rational("7") == Rational(7));
  CHECK_THROWS_AS(parse_rational("1/0"), domain_error);
  CHECK_THROWS_AS(parse_rational("x"), domain_error);
}

TEST_CASE("rational field axioms on random samples") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<long> d(-40, 40);
  for (int i = 0; i < 500; ++i) {
    Rational x = make_rational(d(rng), 1 + std::abs(d(rng)));
    Rational y = make_rational(d(rng), 1 + std::abs(d(rng)));
    Rational z = make_rational(d(rng), 1 + std::abs(d(rng)));
    CHECK(Rational((x * y) * z) == Rational(x * (y * z)));
    CHECK(Rational(x * (y + z)) == Rational(x * y + x * z));
    if (x != 0) CHECK(Rational(x * (1 / x)) == Rational(1));
  }
}

TEST_CASE("quad norms of the CM values from the quadratic [3,1,1]") {
  // 5 + 8 sqrt(-11) times its conjugate is the constant term of X^2-10X+729
  QuadElem v(Rational(5), Rational(8), -11);
  CHECK(v * v.conj() == QuadElem(Rational(729)));
  CHECK(v.norm() == Rational(729));
  CHECK(v.trace() == Rational(10));
}

TEST_CASE("conjugation fixes rationals and is an involution") {
  QuadElem zero(Rational(0), Rational(0), -3);
  CHECK(zero.conj() == zero);
  QuadElem x(make_rational(3, 2), make_rational(-5, 7), -3);
  CHECK(x.conj().conj() == x);
}

TEST_CASE("cube of the shortest coset vector scaled by 3") {
  // ((3+sqrt(-3))/2)^3 = 3 sqrt(-3); feeds the q^{1/3} theta coefficient
  QuadElem x(make_rational(3, 2), make_rational(1, 2), -3);
  CHECK(x.pow(3) == QuadElem(Rational(0), Rational(3), -3));
}

TEST_CASE("mixed fields are a hard error") {
  QuadElem a(Rational(1), Rational(1), -3);
  QuadElem b(Rational(1), Rational(1), -11);
  CHECK_THROWS_AS(a * b, domain_error);
  CHECK_THROWS_AS(a + b, domain_error);
  CHECK(QuadElem(Rational(2)) * a == a + a);  // rationals embed everywhere
}

TEST_CASE("norm is multiplicative on random samples") {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<long> d(-9, 9);
  for (int i = 0; i < 300; ++i) {
    QuadElem x(make_rational(d(rng), 1 + std::abs(d(rng))),
               make_rational(d(rng), 1 + std::abs(d(rng))), -3);
    QuadElem y(make_rational(d(rng), 1 + std::abs(d(rng))),
               make_rational(d(rng), 1 + std::abs(d(rng))), -3);
    CHECK(Rational((x * y).norm()) == Rational(x.norm() * y.norm()));
  }
}

TEST_CASE("with_radicand extracts square parts") {
  // -23 + 5 sqrt(-8) = -23 + 10 sqrt(-2)
  QuadElem v = QuadElem::with_radicand(Rational(-23), Rational(5), -8);
  CHECK(v == QuadElem(Rational(-23), Rational(10), -2));
  CHECK(v.norm() == Rational(729));
  CHECK_THROWS_AS(QuadElem(Rational(1), Rational(1), -8), domain_error);
}

TEST_CASE("quad text encoding round-trips") {
  QuadElem v(make_rational(1, 2), make_rational(-2, 3), -3);
  CHECK(v.to_text() == "1/2-2/3*sqrt(-3)");
  CHECK(QuadElem::parse(v.to_text()) == v);
  CHECK(QuadElem::parse("729") == QuadElem(Rational(729)));
  CHECK(QuadElem::parse("-3*sqrt(-3)") == QuadElem(Rational(0), Rational(-3), -3));
}

TEST_CASE("identity polynomial evaluates to its argument") {
  CHECK(Polynomial::x().eval(Rational(5)) == Rational(5));
}

TEST_CASE("the degree 12 denominator evaluates to 72^9 at -27") {
  Polynomial q1({Rational(729), Rational(-10), Rational(1)});
  Polynomial q2({Rational(729), Rational(46), Rational(1)});
  Polynomial b = q1.pow(3) * q2.pow(3);
  CHECK(b.degree() == 12);
  CHECK(b.eval(Rational(-27)) == Rational(pow(Integer(72), 9)));
}

namespace {
Polynomial paper_a_polynomial() {
  // ascending coefficients of the printed degree 12 numerator
  std::vector<Rational> coeffs = {
      parse_rational("-9606056659007943744"), parse_rational("-1577126071845011340"),
      parse_rational("-145943768399337864"),  parse_rational("-9521554324373244"),
      parse_rational("-524999237829408"),     parse_rational("-23323899141720"),
      parse_rational("-884044074800"),        parse_rational("-31994374680"),
      parse_rational("-987878688"),           parse_rational("-24576796"),
      parse_rational("-516744"),              parse_rational("-7660"),
      parse_rational("-64")};
  return Polynomial(std::move(coeffs));
}
}  // namespace

TEST_CASE("A/B evaluates to -61 at the CM value -27") {
  Polynomial a = paper_a_polynomial();
  Polynomial q1({Rational(729), Rational(-10), Rational(1)});
  Polynomial q2({Rational(729), Rational(46), Rational(1)});
  RationalFunction f(a, q1.pow(3) * q2.pow(3));
  CHECK(f.eval(Rational(-27)) == Rational(-61));
  CHECK(poly_gcd(f.num(), f.den()).degree() == 0);
}

TEST_CASE("rational function evaluation at a pole fails") {
  RationalFunction f(Polynomial::x(), Polynomial({Rational(-3), Rational(1)}));
  CHECK_THROWS_AS(f.eval(Rational(3)), pole_error);
  CHECK(f.eval(Rational(6)) == Rational(2));
}

TEST_CASE("rational function evaluation over a quadratic field") {
  // X / (X^2 + 3) at sqrt(-3) hits a pole; at 1 + sqrt(-3) it is exact
  RationalFunction f(Polynomial::x(), Polynomial({Rational(3), Rational(0), Rational(1)}));
  QuadElem root(Rational(0), Rational(1), -3);
  CHECK_THROWS_AS(f.eval(root), pole_error);
  QuadElem x(Rational(1), Rational(1), -3);
  // (1+sqrt(-3)) / ((1+sqrt(-3))^2 + 3) = (1+sqrt(-3))/(1+2 sqrt(-3))
  QuadElem expected = x / (x * x + QuadElem(Rational(3)));
  CHECK(f.eval(x) == expected);
}

TEST_CASE("rational function construction reduces to coprime parts") {
  std::mt19937_64 rng(13);
  std::uniform_int_distribution<long> d(-5, 5);
  for (int i = 0; i < 100; ++i) {
    auto rand_poly = [&](int deg) {
      std::vector<Rational> c;
      for (int k = 0; k <= deg; ++k) c.emplace_back(d(rng));
      return Polynomial(std::move(c));
    };
    Polynomial p = rand_poly(3), q = rand_poly(2), common = rand_poly(2);
    if (q.is_zero() || common.is_zero()) continue;
    RationalFunction f(p * common, q * common);
    CHECK(poly_gcd(f.num(), f.den()).degree() <= 0);
    // value is preserved at a non-pole sample point
    Rational x(17);
    if (q.eval(x) != 0 && common.eval(x) != 0 && f.den().eval(x) != 0)
      CHECK(Rational(f.eval(x) * q.eval(x) * common.eval(x)) ==
            Rational(p.eval(x) * common.eval(x)));
  }
}

TEST_CASE("polynomial evaluation distributes over + and *") {
  std::mt19937_64 rng(17);
  std::uniform_int_distribution<long> d(-6, 6);
  for (int i = 0; i < 200; ++i) {
    auto rand_poly = [&] {
      std::vector<Rational> c;
      int deg = static_cast<int>(rng() % 4);
      for (int k = 0; k <= deg; ++k) c.emplace_back(d(rng));
      return Polynomial(std::move(c));
    };
    Polynomial p = rand_poly(), q = rand_poly();
    Rational x = make_rational(d(rng), 1 + std::abs(d(rng)));
    CHECK(Rational((p + q).eval(x)) == Rational(p.eval(x) + q.eval(x)));
    CHECK(Rational((p * q).eval(x)) == Rational(p.eval(x) * q.eval(x)));
  }
}

TEST_CASE("quad evaluation of integer polynomials") {
  Polynomial p({Rational(729), Rational(-10), Rational(1)});  // X^2 - 10X + 729
  QuadElem root(Rational(5), Rational(8), -11);
  CHECK(p.eval(root).is_zero());
}

TEST_CASE("polynomial division invariant on random samples") {
  std::mt19937_64 rng(19);
  std::uniform_int_distribution<long> d(-7, 7);
  for (int i = 0; i < 200; ++i) {
    auto rand_poly = [&](int deg) {
      std::vector<Rational> c;
      for (int k = 0; k <= deg; ++k) c.emplace_back(d(rng));
      return Polynomial(std::move(c));
    };
    Polynomial p = rand_poly(5), q = rand_poly(2);
    if (q.is_zero()) continue;
    PolyDivMod dm = p.divmod(q);
    CHECK(dm.quotient * q + dm.remainder == p);
    CHECK(dm.remainder.degree() < q.degree());
  }
}

TEST_CASE("bounded irreducibility evidence") {
  Polynomial reducible({Rational(-2), Rational(1)});
  CHECK(reducible.has_rational_root());
  Polynomial sq = reducible * reducible;
  CHECK_FALSE(sq.is_squarefree());
  Polynomial irr({Rational(729), Rational(-10), Rational(1)});
  CHECK_FALSE(irr.has_rational_root());
  CHECK(irr.is_squarefree());
}
