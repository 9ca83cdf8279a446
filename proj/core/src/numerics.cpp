#include "qlift/numerics.hpp"

#include <algorithm>

namespace qlift {

BigFloat::BigFloat(long prec) {
  mpfr_init2(v_, std::max(prec, 2L));
  mpfr_set_zero(v_, 1);
}

BigFloat::BigFloat(const BigFloat& o) {
  mpfr_init2(v_, mpfr_get_prec(o.v_));
  mpfr_set(v_, o.v_, MPFR_RNDN);
}

BigFloat::BigFloat(BigFloat&& o) noexcept {
  mpfr_init2(v_, mpfr_get_prec(o.v_));
  mpfr_swap(v_, o.v_);
}

BigFloat& BigFloat::operator=(const BigFloat& o) {
  if (this != &o) {
    mpfr_set_prec(v_, mpfr_get_prec(o.v_));
    mpfr_set(v_, o.v_, MPFR_RNDN);
  }
  return *this;
}

BigFloat& BigFloat::operator=(BigFloat&& o) noexcept {
  if (this != &o) mpfr_swap(v_, o.v_);
  return *this;
}

BigFloat::~BigFloat() { mpfr_clear(v_); }

BigFloat BigFloat::of(long v, long prec) {
  BigFloat out(prec);
  mpfr_set_si(out.v_, v, MPFR_RNDN);
  return out;
}

BigFloat BigFloat::of(const Rational& r, long prec) {
  BigFloat out(prec);
  mpfr_set_q(out.v_, r.get_mpq_t(), MPFR_RNDN);
  return out;
}

BigFloat BigFloat::of(const Integer& z, long prec) {
  BigFloat out(prec);
  mpfr_set_z(out.v_, z.get_mpz_t(), MPFR_RNDN);
  return out;
}

BigFloat BigFloat::pi(long prec) {
  BigFloat out(prec);
  mpfr_const_pi(out.v_, MPFR_RNDN);
  return out;
}

BigFloat BigFloat::two_pow(long e, long prec) {
  BigFloat out(prec);
  mpfr_set_ui_2exp(out.v_, 1, e, MPFR_RNDN);
  return out;
}

namespace {
long join_prec(const BigFloat& a, const BigFloat& b) {
  return std::max(mpfr_get_prec(a.raw()), mpfr_get_prec(b.raw()));
}
}  // namespace

BigFloat operator+(const BigFloat& a, const BigFloat& b) {
  BigFloat out(join_prec(a, b));
  mpfr_add(out.raw(), a.raw(), b.raw(), MPFR_RNDN);
  return out;
}

BigFloat operator-(const BigFloat& a, const BigFloat& b) {
  BigFloat out(join_prec(a, b));
  mpfr_sub(out.raw(), a.raw(), b.raw(), MPFR_RNDN);
  return out;
}

BigFloat operator*(const BigFloat& a, const BigFloat& b) {
  BigFloat out(join_prec(a, b));
  mpfr_mul(out.raw(), a.raw(), b.raw(), MPFR_RNDN);
  return out;
}

BigFloat operator/(const BigFloat& a, const BigFloat& b) {
  BigFloat out(join_prec(a, b));
  mpfr_div(out.raw(), a.raw(), b.raw(), MPFR_RNDN);
  return out;
}

BigFloat BigFloat::operator-() const {
  BigFloat out(prec());
  mpfr_neg(out.v_, v_, MPFR_RNDN);
  return out;
}

BigFloat BigFloat::abs() const {
  BigFloat out(prec());
  mpfr_abs(out.v_, v_, MPFR_RNDN);
  return out;
}

BigFloat BigFloat::sqrt() const {
  BigFloat out(prec());
  mpfr_sqrt(out.v_, v_, MPFR_RNDN);
  return out;
}

BigFloat BigFloat::exp() const {
  BigFloat out(prec());
  mpfr_exp(out.v_, v_, MPFR_RNDN);
  return out;
}

BigFloat BigFloat::log() const {
  BigFloat out(prec());
  mpfr_log(out.v_, v_, MPFR_RNDN);
  return out;
}

BigFloat BigFloat::pow_si(long e) const {
  BigFloat out(prec());
  mpfr_pow_si(out.v_, v_, e, MPFR_RNDN);
  return out;
}

BigFloat BigFloat::gamma() const {
  BigFloat out(prec());
  mpfr_gamma(out.v_, v_, MPFR_RNDN);
  return out;
}

std::pair<BigFloat, BigFloat> BigFloat::sin_cos() const {
  BigFloat s(prec()), c(prec());
  mpfr_sin_cos(s.raw(), c.raw(), v_, MPFR_RNDN);
  return {std::move(s), std::move(c)};
}

Integer BigFloat::round_to_integer() const {
  Integer z;
  BigFloat rounded(prec());
  mpfr_rint(rounded.v_, v_, MPFR_RNDN);
  mpfr_get_z(z.get_mpz_t(), rounded.v_, MPFR_RNDN);
  return z;
}

BigFloat BigFloat::distance_to_integer() const {
  BigFloat nearest = of(round_to_integer(), prec());
  return (*this - nearest).abs();
}

std::string BigFloat::to_string(std::size_t digits) const {
  mpfr_exp_t e;
  char* s = mpfr_get_str(nullptr, &e, 10, digits, v_, MPFR_RNDN);
  std::string mant(s);
  mpfr_free_str(s);
  bool neg = !mant.empty() && mant[0] == '-';
  std::string digits_only = neg ? mant.substr(1) : mant;
  if (digits_only.empty() || mpfr_zero_p(v_)) return "0";
  std::string out = neg ? "-" : "";
  out += "0." + digits_only + "e" + std::to_string(e);
  return out;
}

BigComplex BigComplex::pow_ui(unsigned long e) const {
  long prec = join_prec(re, im);
  BigComplex acc(BigFloat::of(1, prec), BigFloat::of(0, prec));
  BigComplex base = *this;
  while (e > 0) {
    if (e & 1) acc = acc * base;
    base = base * base;
    e >>= 1;
  }
  return acc;
}

std::string BigComplex::to_string(std::size_t digits) const {
  return re.to_string(digits) + (im.sign() < 0 ? " - " : " + ") + im.abs().to_string(digits) +
         "*i";
}

BigComplex complex_exp(const BigComplex& w, long prec) {
  BigFloat mag = w.re.exp();
  auto [s, c] = w.im.sin_cos();
  BigComplex out(prec);
  out.re = mag * c;
  out.im = mag * s;
  return out;
}

BigComplex CMPoint::to_complex(long prec) const {
  BigFloat sq = BigFloat::of(-static_cast<long>(D), prec).sqrt();
  BigFloat den = BigFloat::of(2 * a, prec);
  return {BigFloat::of(-b, prec) / den, sq / den};
}

BigComplex eval_eta(const BigComplex& tau, long prec) {
  if (!(tau.im.sign() > 0)) throw domain_error("eta needs a point in the upper half-plane");
  long work = prec + 48;
  BigFloat two_pi = BigFloat::pi(work) + BigFloat::pi(work);
  // eta(tau) = sum_k (-1)^k exp(2 pi i tau (6k-1)^2 / 24)
  BigFloat wre = -(two_pi * tau.im) / BigFloat::of(24, work);
  BigFloat wim = (two_pi * tau.re) / BigFloat::of(24, work);
  BigComplex acc(BigFloat::of(0, work), BigFloat::of(0, work));
  BigFloat threshold = BigFloat::two_pow(-(prec + 32), work);
  int consecutive_tiny = 0;
  for (long k = 0;; k = (k > 0 ? -k : -k + 1)) {  // 0, 1, -1, 2, -2, ...
    long m = (6 * k - 1) * (6 * k - 1);
    BigFloat mag = (wre * BigFloat::of(m, work)).exp();
    auto [s, c] = (wim * BigFloat::of(m, work)).sin_cos();
    BigComplex term(mag * c, mag * s);
    if (((k % 2) + 2) % 2 == 0)
      acc = acc + term;
    else
      acc = acc - term;
    // Magnitudes decrease in |k| separately for each sign of k; two tiny
    // terms in a row bound the whole tail.
    consecutive_tiny = mag < threshold ? consecutive_tiny + 1 : 0;
    if (consecutive_tiny >= 2) break;
  }
  return acc;
}

BigComplex eval_eta(const CMPoint& tau, long prec) { return eval_eta(tau.to_complex(prec + 48), prec); }

BigComplex eval_j3(const BigComplex& tau, long prec) {
  long work = prec + 64;
  BigComplex three_tau(BigFloat::of(3, work) * tau.re, BigFloat::of(3, work) * tau.im);
  BigComplex num = eval_eta(tau, work);
  BigComplex den = eval_eta(three_tau, work);
  return (num / den).pow_ui(12);
}

BigComplex eval_j3(const CMPoint& tau, long prec) { return eval_j3(tau.to_complex(prec + 64), prec); }

BigFloat chowla_selberg(long prec) {
  // (Gamma(1/3)/Gamma(2/3))^(3/2) / sqrt(6 pi) = 0.64092738...; the square
  // of this is what the eta-product relation at z_U pins down exactly.
  long work = prec + 48;
  BigFloat g13 = (BigFloat::of(1, work) / BigFloat::of(3, work)).gamma();
  BigFloat g23 = (BigFloat::of(2, work) / BigFloat::of(3, work)).gamma();
  BigFloat ratio = g13 / g23;
  BigFloat r32 = ratio * ratio.sqrt();  // ratio^(3/2)
  BigFloat six_pi = BigFloat::of(6, work) * BigFloat::pi(work);
  return r32 / six_pi.sqrt();
}

Polynomial recognize_algebraic(const BigComplex& x, int max_degree, long height_bound) {
  if (max_degree < 1 || max_degree > 2)
    throw domain_error("recognition supports degrees 1 and 2");
  long prec = std::max(x.re.prec(), x.im.prec());
  BigFloat tol = BigFloat::two_pow(-prec / 2, prec);
  BigFloat hb = BigFloat::of(height_bound, prec);

  bool real = x.im.abs() < tol * (BigFloat::of(1, prec) + x.re.abs());
  if (real) {
    for (long a = 1; a <= height_bound; ++a) {
      BigFloat ax = BigFloat::of(a, prec) * x.re;
      if (ax.abs() > hb + BigFloat::of(2, prec)) break;  // b would exceed the height bound
      Integer b = (-ax).round_to_integer();
      if (abs(b) > height_bound) continue;
      BigFloat residual = (ax + BigFloat::of(b, prec)).abs();
      BigFloat scale = BigFloat::of(a, prec).abs() + BigFloat::of(b, prec).abs() +
                       BigFloat::of(1, prec);
      if (residual < tol * scale)
        return Polynomial({Rational(b), Rational(a)});
    }
    if (max_degree < 2)
      throw recognition_error("no linear integer polynomial within tolerance/height");
    // Real of degree 2: the conjugate power sums degenerate, so scan small
    // (a, b) pairs and round the constant term.
    long hq = std::min(height_bound, 600L);
    BigFloat xx = x.re * x.re;
    for (long a = 1; a <= hq; ++a) {
      for (long babs = 0; babs <= hq; ++babs) {
        for (long b : {babs, -babs}) {
          BigFloat head = BigFloat::of(a, prec) * xx + BigFloat::of(b, prec) * x.re;
          Integer c = (-head).round_to_integer();
          if (abs(c) > height_bound) continue;
          BigFloat residual = (head + BigFloat::of(c, prec)).abs();
          BigFloat scale = BigFloat::of(a + std::labs(b), prec) +
                           BigFloat::of(c, prec).abs() + BigFloat::of(1, prec);
          if (residual < tol * scale)
            return Polynomial({Rational(c), Rational(b), Rational(a)});
          if (b == 0) break;
        }
      }
    }
    throw recognition_error("no integer polynomial of degree <= 2 within tolerance/height");
  }
  // Degree 2 with the conjugate pair (x, conj x): since x^2 - s1 x + s2 = 0
  // exactly for s1 = 2 Re x, s2 = |x|^2, rounding a*s1 and a*s2 to integers
  // bounds the residual of a X^2 + b X + c at x.
  BigFloat s1 = x.re + x.re;
  BigFloat s2 = x.norm();
  for (long a = 1; a <= height_bound; ++a) {
    BigFloat as1 = BigFloat::of(a, prec) * s1;
    BigFloat as2 = BigFloat::of(a, prec) * s2;
    if (as1.abs() > hb + BigFloat::of(2, prec) || as2.abs() > hb + BigFloat::of(2, prec)) break;
    Integer b = (-as1).round_to_integer();
    Integer c = as2.round_to_integer();
    if (abs(b) > height_bound || abs(c) > height_bound) continue;
    BigFloat rb = (as1 + BigFloat::of(b, prec)).abs();
    BigFloat rc = (as2 - BigFloat::of(c, prec)).abs();
    BigFloat scale = BigFloat::of(a, prec) + BigFloat::of(b, prec).abs() +
                     BigFloat::of(c, prec).abs() + BigFloat::of(1, prec);
    if (rb + rc < tol * scale) {
      return Polynomial({Rational(c), Rational(b), Rational(a)});
    }
  }
  throw recognition_error("no integer polynomial of degree <= 2 within tolerance/height");
}

}  // namespace qlift
