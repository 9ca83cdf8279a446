#ifndef QLIFT_RATIONAL_HPP
#define QLIFT_RATIONAL_HPP

#include <gmpxx.h>

#include <string>
#include <string_view>

#include "qlift/errors.hpp"

namespace qlift {

// Exact arithmetic lives on GMP.  mpq_class keeps values canonical: reduced
// to lowest terms, denominator positive, zero stored as 0/1.
using Integer = mpz_class;
using Rational = mpq_class;

inline Rational make_rational(long num, long den = 1) {
  if (den == 0) throw domain_error("rational with zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

inline Rational make_rational(const Integer& num, const Integer& den) {
  if (den == 0) throw domain_error("rational with zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

// Accepts "p", "-p", "p/q".  Whitespace is not tolerated.
inline Rational parse_rational(std::string_view text) {
  Rational r;
  if (text.empty() || mpq_set_str(r.get_mpq_t(), std::string(text).c_str(), 10) != 0)
    throw domain_error("cannot parse rational: '" + std::string(text) + "'");
  if (r.get_den() == 0)
    throw domain_error("rational with zero denominator: '" + std::string(text) + "'");
  r.canonicalize();
  return r;
}

// "p" when the denominator is 1, "p/q" otherwise.
inline std::string to_string(const Rational& r) {
  if (r.get_den() == 1) return r.get_num().get_str();
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

inline bool is_integer(const Rational& r) { return r.get_den() == 1; }

inline long to_long(const Integer& z) {
  if (!z.fits_slong_p()) throw domain_error("integer out of long range: " + z.get_str());
  return z.get_si();
}

inline Integer pow(const Integer& base, unsigned long e) {
  Integer out;
  mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), e);
  return out;
}

inline Rational pow(const Rational& base, unsigned long e) {
  Rational out;
  mpz_pow_ui(out.get_num_mpz_t(), base.get_num().get_mpz_t(), e);
  mpz_pow_ui(out.get_den_mpz_t(), base.get_den().get_mpz_t(), e);
  return out;  // powers of a canonical rational stay canonical
}

// Floor of n/d for exact integers, also correct for negative n.
inline long floor_div(long n, long d) {
  long q = n / d, r = n % d;
  return (r != 0 && ((r < 0) != (d < 0))) ? q - 1 : q;
}

inline long ceil_div(long n, long d) { return -floor_div(-n, d); }

}  // namespace qlift

#endif  // QLIFT_RATIONAL_HPP
