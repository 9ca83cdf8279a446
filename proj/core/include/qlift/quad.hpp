#ifndef QLIFT_QUAD_HPP
#define QLIFT_QUAD_HPP

#include <string>
#include <string_view>

#include "qlift/rational.hpp"

namespace qlift {

// Element a + b*sqrt(d) of the quadratic field Q(sqrt(d)), d squarefree.
// A value with b == 0 is a plain rational and combines with any field; for
// b != 0 mixing distinct d is a hard error, there is no implicit compositum.
class QuadElem {
 public:
  QuadElem() : a_(0), b_(0), d_(1) {}
  QuadElem(Rational rational_value) : a_(std::move(rational_value)), b_(0), d_(1) {}
  QuadElem(long rational_value) : a_(rational_value), b_(0), d_(1) {}

  QuadElem(Rational a, Rational b, long d) : a_(std::move(a)), b_(std::move(b)), d_(d) {
    if (b_ != 0) require_valid_radicand(d_);
  }

  // Builds a + b*sqrt(n) for arbitrary nonzero n, extracting the square part
  // of n into b.  E.g. with_radicand(-23, 5, -8) == -23 + 10*sqrt(-2).
  static QuadElem with_radicand(Rational a, Rational b, long n);

  const Rational& a() const { return a_; }
  const Rational& b() const { return b_; }
  long d() const { return d_; }

  bool is_zero() const { return a_ == 0 && b_ == 0; }
  bool is_rational() const { return b_ == 0; }

  // The rational value of an element with b == 0.
  const Rational& rational_value() const {
    if (b_ != 0) throw domain_error("QuadElem is irrational: " + to_text());
    return a_;
  }

  QuadElem conj() const { return QuadElem(a_, -b_, d_); }
  Rational norm() const { return a_ * a_ - Rational(d_) * b_ * b_; }
  Rational trace() const { return 2 * a_; }

  QuadElem operator-() const { return QuadElem(-a_, -b_, d_); }

  QuadElem& operator+=(const QuadElem& o);
  QuadElem& operator-=(const QuadElem& o);
  QuadElem& operator*=(const QuadElem& o);
  QuadElem& operator/=(const QuadElem& o);

  friend QuadElem operator+(QuadElem x, const QuadElem& y) { return x += y; }
  friend QuadElem operator-(QuadElem x, const QuadElem& y) { return x -= y; }
  friend QuadElem operator*(QuadElem x, const QuadElem& y) { return x *= y; }
  friend QuadElem operator/(QuadElem x, const QuadElem& y) { return x /= y; }

  friend bool operator==(const QuadElem& x, const QuadElem& y) {
    if (x.a_ != y.a_ || x.b_ != y.b_) return false;
    return x.b_ == 0 || x.d_ == y.d_;
  }
  friend bool operator!=(const QuadElem& x, const QuadElem& y) { return !(x == y); }

  QuadElem inverse() const;
  QuadElem pow(unsigned long e) const;

  // "a+b*sqrt(d)", or just "a" when b == 0; rationals printed as p/q.
  std::string to_text() const;
  static QuadElem parse(std::string_view text);

 private:
  static void require_valid_radicand(long d);
  // Resolves the common field of two operands, throws on a genuine mismatch.
  static long common_d(const QuadElem& x, const QuadElem& y);

  Rational a_, b_;
  long d_;
};

inline QuadElem conj(const QuadElem& x) { return x.conj(); }
inline Rational norm(const QuadElem& x) { return x.norm(); }

}  // namespace qlift

#endif  // QLIFT_QUAD_HPP
