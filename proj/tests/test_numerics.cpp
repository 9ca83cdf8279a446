#include <doctest.h>

#include <array>

#include "qlift/eta.hpp"
#include "qlift/numerics.hpp"

using namespace qlift;

namespace {

BigFloat ten_pow_neg(long k, long prec) {
  return BigFloat::of(make_rational(Integer(1), pow(Integer(10), k)), prec);
}

const CMPoint kZU(3, -3, -3);  // z_U = (3 + i sqrt(3))/6

}  // namespace

TEST_CASE("eta translation law: eta(tau+1) = e^{i pi/12} eta(tau)") {
  long bits = 192;
  BigComplex tau(BigFloat::of(make_rational(1, 5), bits), BigFloat::of(make_rational(4, 5), bits));
  BigComplex tau1(tau.re + BigFloat::of(1, bits), tau.im);
  BigComplex lhs = eval_eta(tau1, bits);
  BigFloat angle = BigFloat::pi(bits) / BigFloat::of(12, bits);
  auto [s, c] = angle.sin_cos();
  BigComplex rhs = BigComplex(c, s) * eval_eta(tau, bits);
  CHECK((lhs - rhs).abs() < ten_pow_neg(40, bits) * rhs.abs());
}

TEST_CASE("eta rejects the lower half-plane") {
  long bits = 128;
  BigComplex bad(BigFloat::of(0, bits), BigFloat::of(-1, bits));
  CHECK_THROWS_AS(eval_eta(bad, bits), domain_error);
  CHECK_THROWS_AS(CMPoint(-3, 0, -3), domain_error);
  CHECK_THROWS_AS(CMPoint(3, 0, 3), domain_error);
}

TEST_CASE("eta(z_U)^6 eta(3 z_U)^6 matches the printed value and the period") {
  long bits = 256;
  BigComplex tau = kZU.to_complex(bits + 64);
  BigComplex tau3(BigFloat::of(3, bits + 64) * tau.re, BigFloat::of(3, bits + 64) * tau.im);
  BigComplex val = eval_eta(tau, bits).pow_ui(6) * eval_eta(tau3, bits).pow_ui(6);

  // printed digits -0.36019264... (rounded in the reference display)
  Integer digits;
  mpfr_get_z(digits.get_mpz_t(), ((-val.re) * BigFloat::of(100000000L, bits)).raw(), MPFR_RNDN);
  CHECK(digits == 36019264);
  CHECK(val.im.abs() < ten_pow_neg(40, bits));

  // -3 sqrt(3) Omega^6 within 1e-30 relative at 256 bits
  BigFloat omega = chowla_selberg(bits);
  BigFloat expected = -(BigFloat::of(3, bits) * BigFloat::of(3, bits).sqrt() * omega.pow_si(6));
  BigFloat rel = (val.re - expected).abs() / expected.abs();
  CHECK(rel < ten_pow_neg(30, bits));
}

TEST_CASE("Chowla-Selberg period digits and self-checks") {
  long bits = 256;
  BigFloat omega = chowla_selberg(bits);
  Integer digits;
  mpfr_get_z(digits.get_mpz_t(), (omega * BigFloat::of(100000000L, bits)).raw(), MPFR_RNDD);
  CHECK(digits == 64092738);

  // Gamma(1/3) Gamma(2/3) = 2 pi / sqrt(3)
  BigFloat g13 = (BigFloat::of(1, bits) / BigFloat::of(3, bits)).gamma();
  BigFloat g23 = (BigFloat::of(2, bits) / BigFloat::of(3, bits)).gamma();
  BigFloat rhs = (BigFloat::pi(bits) + BigFloat::pi(bits)) / BigFloat::of(3, bits).sqrt();
  CHECK((g13 * g23 - rhs).abs() < ten_pow_neg(70, bits) * rhs);

  // definition inverted: 6 pi Omega^2 = (Gamma(1/3)/Gamma(2/3))^3
  BigFloat lhs = BigFloat::of(6, bits) * BigFloat::pi(bits) * omega * omega;
  BigFloat ratio = g13 / g23;
  CHECK((lhs - ratio.pow_si(3)).abs() < ten_pow_neg(70, bits) * lhs);
}

TEST_CASE("j3 at z_U is -27") {
  long bits = 256;
  BigComplex v = eval_j3(kZU, bits);
  BigFloat err = (v.re + BigFloat::of(27, bits)).abs() + v.im.abs();
  CHECK(err < ten_pow_neg(30, bits) * BigFloat::of(27, bits));
  CHECK(recognize_algebraic(v) == Polynomial({Rational(27), Rational(1)}));
}

TEST_CASE("j3 at the [3,1,1] and [3,2,1] CM points") {
  long bits = 256;
  BigComplex v1 = eval_j3(CMPoint::from_form(3, 1, 1), bits);
  CHECK(recognize_algebraic(v1) == Polynomial({Rational(729), Rational(-10), Rational(1)}));
  // 5 +- 8 sqrt(11) i: the trace and norm pin the conjugate pair
  CHECK((v1.re - BigFloat::of(5, bits)).abs() < ten_pow_neg(50, bits));
  CHECK((v1.im * v1.im - BigFloat::of(704, bits)).abs() < ten_pow_neg(45, bits));

  BigComplex v2 = eval_j3(CMPoint::from_form(3, 2, 1), bits);
  CHECK(recognize_algebraic(v2) == Polynomial({Rational(729), Rational(46), Rational(1)}));
  CHECK((v2.re + BigFloat::of(23, bits)).abs() < ten_pow_neg(50, bits));
  CHECK((v2.im * v2.im - BigFloat::of(200, bits)).abs() < ten_pow_neg(45, bits));
}

TEST_CASE("j3 agrees at Gamma0(3)-equivalent points") {
  long bits = 192;
  BigComplex tau(BigFloat::of(make_rational(1, 7), bits), BigFloat::of(make_rational(2, 3), bits));
  BigComplex shifted(tau.re + BigFloat::of(1, bits), tau.im);
  BigComplex a = eval_j3(tau, bits);
  CHECK((eval_j3(shifted, bits) - a).abs() < ten_pow_neg(40, bits) * a.abs());
  // tau / (3 tau + 1)
  BigComplex den(BigFloat::of(3, bits) * tau.re + BigFloat::of(1, bits),
                 BigFloat::of(3, bits) * tau.im);
  BigComplex moved = tau / den;
  CHECK((eval_j3(moved, bits) - a).abs() < ten_pow_neg(35, bits) * a.abs());
}

TEST_CASE("recognition basics") {
  long bits = 256;
  BigComplex half(BigFloat::of(1, bits) / BigFloat::of(2, bits), BigFloat::of(0, bits));
  CHECK(recognize_algebraic(half) == Polynomial({Rational(-1), Rational(2)}));
  BigComplex minus27(BigFloat::of(-27, bits), BigFloat::of(0, bits));
  CHECK(recognize_algebraic(minus27) == Polynomial({Rational(27), Rational(1)}));
  // sqrt(2) has no linear polynomial of small height, but a quadratic one
  BigComplex irr(BigFloat::of(2, bits).sqrt(), BigFloat::of(0, bits));
  CHECK_THROWS_AS(recognize_algebraic(irr, 1, 50), recognition_error);
  CHECK(recognize_algebraic(irr, 2, 50) == Polynomial({Rational(-2), Rational(0), Rational(1)}));
}

TEST_CASE("recognition is stable under precision doubling") {
  long bits = 256;
  for (auto [a, b, c] : {std::array<long, 3>{3, -3, 1}, {3, 1, 1}, {3, 2, 1}}) {
    Polynomial p1 = recognize_algebraic(eval_j3(CMPoint::from_form(a, b, c), bits));
    Polynomial p2 = recognize_algebraic(eval_j3(CMPoint::from_form(a, b, c), 2 * bits));
    CHECK(p1 == p2);
  }
}

TEST_CASE("series sum of Delta3 at q(z_U) matches the eta product") {
  long bits = 224;
  long work = bits + 64;
  RationalSeries d3 = named_form(NamedForm::Delta3, 110);
  BigComplex tau = kZU.to_complex(work);
  BigFloat two_pi = BigFloat::pi(work) + BigFloat::pi(work);
  BigComplex q = complex_exp({-(two_pi * tau.im), two_pi * tau.re}, work);
  BigComplex sum(BigFloat::of(0, work), BigFloat::of(0, work));
  for (const auto& [n, c] : d3.terms())
    sum = sum + BigFloat::of(c, work) * q.pow_ui(static_cast<unsigned long>(n));
  BigComplex tau3(BigFloat::of(3, work) * tau.re, BigFloat::of(3, work) * tau.im);
  BigComplex prod = eval_eta(tau, bits).pow_ui(6) * eval_eta(tau3, bits).pow_ui(6);
  CHECK((sum - prod).abs() < ten_pow_neg(45, work) * prod.abs());
}
