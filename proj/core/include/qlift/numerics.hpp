#ifndef QLIFT_NUMERICS_HPP
#define QLIFT_NUMERICS_HPP

#include <mpfr.h>

#include <string>
#include <utility>

#include "qlift/polynomial.hpp"
#include "qlift/rational.hpp"

namespace qlift {

// Correctly rounded binary floating point with explicit precision; precision
// travels with the value and results carry the widest operand precision.
class BigFloat {
 public:
  explicit BigFloat(long prec = 64);
  BigFloat(const BigFloat& o);
  BigFloat(BigFloat&& o) noexcept;
  BigFloat& operator=(const BigFloat& o);
  BigFloat& operator=(BigFloat&& o) noexcept;
  ~BigFloat();

  static BigFloat of(long v, long prec);
  static BigFloat of(const Rational& r, long prec);
  static BigFloat of(const Integer& z, long prec);
  static BigFloat pi(long prec);
  static BigFloat two_pow(long e, long prec);  // 2^e

  long prec() const { return mpfr_get_prec(v_); }
  int sign() const { return mpfr_sgn(v_); }
  bool is_zero() const { return mpfr_zero_p(v_); }

  friend BigFloat operator+(const BigFloat& a, const BigFloat& b);
  friend BigFloat operator-(const BigFloat& a, const BigFloat& b);
  friend BigFloat operator*(const BigFloat& a, const BigFloat& b);
  friend BigFloat operator/(const BigFloat& a, const BigFloat& b);
  BigFloat operator-() const;

  friend bool operator<(const BigFloat& a, const BigFloat& b) { return mpfr_cmp(a.v_, b.v_) < 0; }
  friend bool operator>(const BigFloat& a, const BigFloat& b) { return mpfr_cmp(a.v_, b.v_) > 0; }
  friend bool operator<=(const BigFloat& a, const BigFloat& b) { return mpfr_cmp(a.v_, b.v_) <= 0; }
  friend bool operator>=(const BigFloat& a, const BigFloat& b) { return mpfr_cmp(a.v_, b.v_) >= 0; }

  BigFloat abs() const;
  BigFloat sqrt() const;
  BigFloat exp() const;
  BigFloat log() const;
  BigFloat pow_si(long e) const;
  BigFloat gamma() const;
  std::pair<BigFloat, BigFloat> sin_cos() const;

  Integer round_to_integer() const;
  // |x - nearest integer|
  BigFloat distance_to_integer() const;

  double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
  std::string to_string(std::size_t digits = 30) const;

  mpfr_ptr raw() { return v_; }
  mpfr_srcptr raw() const { return v_; }

 private:
  mpfr_t v_;
};

struct BigComplex {
  BigFloat re, im;

  BigComplex(BigFloat r, BigFloat i) : re(std::move(r)), im(std::move(i)) {}
  explicit BigComplex(long prec) : re(prec), im(prec) {}

  BigComplex conj() const { return {re, -im}; }
  BigFloat norm() const { return re * re + im * im; }
  BigFloat abs() const { return norm().sqrt(); }
  BigComplex pow_ui(unsigned long e) const;
  std::string to_string(std::size_t digits = 30) const;

  friend BigComplex operator+(const BigComplex& a, const BigComplex& b) {
    return {a.re + b.re, a.im + b.im};
  }
  friend BigComplex operator-(const BigComplex& a, const BigComplex& b) {
    return {a.re - b.re, a.im - b.im};
  }
  friend BigComplex operator*(const BigComplex& a, const BigComplex& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  friend BigComplex operator*(const BigFloat& s, const BigComplex& a) {
    return {s * a.re, s * a.im};
  }
  friend BigComplex operator/(const BigComplex& a, const BigComplex& b) {
    BigFloat n = b.norm();
    BigComplex num = a * b.conj();
    return {num.re / n, num.im / n};
  }
};

// e^w for complex w.
BigComplex complex_exp(const BigComplex& w, long prec);

// CM point (-b + sqrt(D)) / (2a) with D < 0, a > 0; carries the exact data
// and renders to a float on demand.
struct CMPoint {
  long a, b, D;

  CMPoint(long a_, long b_, long D_) : a(a_), b(b_), D(D_) {
    if (a <= 0 || D >= 0) throw domain_error("CM point needs a > 0 and D < 0");
  }
  static CMPoint from_form(long fa, long fb, long fc) {
    return CMPoint(fa, fb, fb * fb - 4 * fa * fc);
  }
  BigComplex to_complex(long prec) const;
};

// Dedekind eta via the pentagonal series, summed until terms drop below the
// target precision.  Im(tau) must be positive.
BigComplex eval_eta(const BigComplex& tau, long prec);
BigComplex eval_eta(const CMPoint& tau, long prec);

// Hauptmodul j3 = (eta(tau)/eta(3 tau))^12.
BigComplex eval_j3(const BigComplex& tau, long prec);
BigComplex eval_j3(const CMPoint& tau, long prec);

// Chowla-Selberg period of Q(sqrt(-3)): (1/6pi) (Gamma(1/3)/Gamma(2/3))^(3/2).
BigFloat chowla_selberg(long prec);

// Smallest-height integer polynomial of degree <= max_degree vanishing at x
// (and conj(x) for complex x) within 2^(-prec/2); nearest-integer rounding of
// the power sums, leading coefficients scanned in ascending height.
Polynomial recognize_algebraic(const BigComplex& x, int max_degree = 2,
                               long height_bound = 1000000);

}  // namespace qlift

#endif  // QLIFT_NUMERICS_HPP
