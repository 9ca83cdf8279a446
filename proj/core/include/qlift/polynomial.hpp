#ifndef QLIFT_POLYNOMIAL_HPP
#define QLIFT_POLYNOMIAL_HPP

#include <string>
#include <vector>

#include "qlift/quad.hpp"
#include "qlift/rational.hpp"

namespace qlift {

class Polynomial;

// Result of Euclidean division over Q.
struct PolyDivMod;

// Polynomial in one variable with exact rational coefficients, stored
// lowest degree first with a nonzero trailing coefficient.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { normalize(); }
  static Polynomial constant(Rational v) { return Polynomial({std::move(v)}); }
  static Polynomial x() { return Polynomial({Rational(0), Rational(1)}); }
  // Monomial c * X^k.
  static Polynomial monomial(Rational c, std::size_t k);

  bool is_zero() const { return c_.empty(); }
  // Degree of the zero polynomial is -1.
  long degree() const { return static_cast<long>(c_.size()) - 1; }
  Rational coeff(std::size_t i) const { return i < c_.size() ? c_[i] : Rational(0); }
  const Rational& leading() const;
  const std::vector<Rational>& coeffs() const { return c_; }

  Polynomial operator-() const;
  friend Polynomial operator+(const Polynomial& p, const Polynomial& q);
  friend Polynomial operator-(const Polynomial& p, const Polynomial& q);
  friend Polynomial operator*(const Polynomial& p, const Polynomial& q);
  Polynomial operator*(const Rational& s) const;
  friend bool operator==(const Polynomial& p, const Polynomial& q) { return p.c_ == q.c_; }

  Polynomial pow(unsigned long e) const;

  // Exact Horner evaluation; T is Rational or QuadElem.
  template <class T>
  T eval(const T& x) const {
    T acc{Rational(0)};
    for (std::size_t i = c_.size(); i-- > 0;) {
      acc = acc * x + T{c_[i]};
    }
    return acc;
  }

  // Euclidean division over Q: *this == quotient * divisor + remainder.
  PolyDivMod divmod(const Polynomial& divisor) const;

  // Positive rational c such that (*this)/c has coprime integer coefficients.
  Rational content() const;
  Polynomial primitive_part() const;
  Polynomial monic() const;

  bool is_integer_polynomial() const;
  // Bounded rational-root search: candidate numerators are divisors d of the
  // constant term with min(d, |a0|/d) <= height_bound, denominators divisors
  // of the leading coefficient.  Complete whenever |a0| <= height_bound^2.
  bool has_rational_root(long height_bound = 1000000) const;
  bool is_squarefree() const;

  // Coefficient list, lowest degree first, e.g. "729 -10 1".
  std::string to_coeff_list() const;
  // Human form, e.g. "X^2 - 10X + 729".
  std::string to_pretty_string(const std::string& var = "X") const;

 private:
  void normalize();
  std::vector<Rational> c_;
};

struct PolyDivMod {
  Polynomial quotient, remainder;
};

// gcd normalized to a primitive integer polynomial with positive leading
// coefficient (primitive pseudo-remainder sequence; deterministic).
Polynomial poly_gcd(const Polynomial& p, const Polynomial& q);

// Pair A/B of polynomials with B != 0, reduced so that gcd(A, B) = 1 and B
// is a primitive integer polynomial with positive leading coefficient.
class RationalFunction {
 public:
  RationalFunction(Polynomial num, Polynomial den);

  const Polynomial& num() const { return num_; }
  const Polynomial& den() const { return den_; }

  template <class T>
  T eval(const T& x) const {
    T d = den_.eval(x);
    if (d == T{Rational(0)}) throw pole_error("denominator vanishes at evaluation point");
    return num_.eval(x) / d;
  }

 private:
  Polynomial num_, den_;
};

}  // namespace qlift

#endif  // QLIFT_POLYNOMIAL_HPP
