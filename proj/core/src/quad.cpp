#include "qlift/quad.hpp"

#include <cstdlib>

namespace qlift {

void QuadElem::require_valid_radicand(long d) {
  if (d == 0 || d == 1) throw domain_error("invalid radicand: " + std::to_string(d));
  long n = std::labs(d);
  for (long p = 2; p * p <= n; ++p) {
    if (n % (p * p) == 0)
      throw domain_error("radicand not squarefree: " + std::to_string(d));
  }
}

QuadElem QuadElem::with_radicand(Rational a, Rational b, long n) {
  if (n == 0) throw domain_error("radicand must be nonzero");
  long square_part = 1;
  long rest = n;
  for (long p = 2; p * p <= std::labs(rest); ++p) {
    while (rest % (p * p) == 0) {
      rest /= p * p;
      square_part *= p;
    }
  }
  if (rest == 1) return QuadElem(a + b * square_part);  // n was a perfect square
  return QuadElem(std::move(a), b * square_part, rest);
}

long QuadElem::common_d(const QuadElem& x, const QuadElem& y) {
  if (x.b_ == 0) return y.d_;
  if (y.b_ == 0) return x.d_;
  if (x.d_ != y.d_)
    throw domain_error("mixed quadratic fields: sqrt(" + std::to_string(x.d_) +
                       ") vs sqrt(" + std::to_string(y.d_) + ")");
  return x.d_;
}

QuadElem& QuadElem::operator+=(const QuadElem& o) {
  d_ = common_d(*this, o);
  a_ += o.a_;
  b_ += o.b_;
  return *this;
}

QuadElem& QuadElem::operator-=(const QuadElem& o) {
  d_ = common_d(*this, o);
  a_ -= o.a_;
  b_ -= o.b_;
  return *this;
}

QuadElem& QuadElem::operator*=(const QuadElem& o) {
  long d = common_d(*this, o);
  Rational a = a_ * o.a_ + Rational(d) * b_ * o.b_;
  Rational b = a_ * o.b_ + b_ * o.a_;
  a_ = std::move(a);
  b_ = std::move(b);
  d_ = d;
  return *this;
}

QuadElem QuadElem::inverse() const {
  Rational n = norm();
  if (n == 0) throw domain_error("division by zero QuadElem");
  return QuadElem(a_ / n, -b_ / n, d_);
}

QuadElem& QuadElem::operator/=(const QuadElem& o) { return *this *= o.inverse(); }

QuadElem QuadElem::pow(unsigned long e) const {
  QuadElem acc(Rational(1));
  QuadElem base = *this;
  while (e > 0) {
    if (e & 1) acc *= base;
    base *= base;
    e >>= 1;
  }
  // Preserve the ambient field so x.pow(0) combines like x does.
  if (acc.b_ == 0) acc.d_ = d_;
  return acc;
}

std::string QuadElem::to_text() const {
  if (b_ == 0) return to_string(a_);
  std::string out = to_string(a_);
  if (b_ > 0) out += "+";
  out += to_string(b_) + "*sqrt(" + std::to_string(d_) + ")";
  return out;
}

QuadElem QuadElem::parse(std::string_view text) {
  auto star = text.find("*sqrt(");
  if (star == std::string_view::npos) return QuadElem(parse_rational(text));
  if (text.back() != ')') throw domain_error("cannot parse QuadElem: missing ')'");
  std::string_view d_part = text.substr(star + 6, text.size() - star - 7);
  long d = std::stol(std::string(d_part));
  // Split "a+b" / "a-b" at the sign of b; skip position 0 and signs that
  // follow an exponent-free '/' context (coefficients are plain rationals).
  std::string_view head = text.substr(0, star);
  for (std::size_t i = head.size(); i-- > 1;) {
    if (head[i] == '+' || head[i] == '-') {
      Rational a = parse_rational(head.substr(0, i));
      Rational b = head[i] == '+' ? parse_rational(head.substr(i + 1))
                                  : -parse_rational(head.substr(i + 1));
      return QuadElem(std::move(a), std::move(b), d);
    }
  }
  // No explicit a-part: "b*sqrt(d)".
  return QuadElem(Rational(0), parse_rational(head), d);
}

}  // namespace qlift
