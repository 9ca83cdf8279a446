#include "qlift/polynomial.hpp"

#include <algorithm>

namespace qlift {

void Polynomial::normalize() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Polynomial Polynomial::monomial(Rational c, std::size_t k) {
  if (c == 0) return Polynomial();
  std::vector<Rational> v(k + 1, Rational(0));
  v[k] = std::move(c);
  return Polynomial(std::move(v));
}

const Rational& Polynomial::leading() const {
  if (c_.empty()) throw domain_error("zero polynomial has no leading coefficient");
  return c_.back();
}

Polynomial Polynomial::operator-() const {
  std::vector<Rational> v;
  v.reserve(c_.size());
  for (const auto& a : c_) v.push_back(-a);
  return Polynomial(std::move(v));
}

Polynomial operator+(const Polynomial& p, const Polynomial& q) {
  std::vector<Rational> v(std::max(p.c_.size(), q.c_.size()), Rational(0));
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i < p.c_.size()) v[i] += p.c_[i];
    if (i < q.c_.size()) v[i] += q.c_[i];
  }
  return Polynomial(std::move(v));
}

Polynomial operator-(const Polynomial& p, const Polynomial& q) { return p + (-q); }

Polynomial operator*(const Polynomial& p, const Polynomial& q) {
  if (p.is_zero() || q.is_zero()) return Polynomial();
  std::vector<Rational> v(p.c_.size() + q.c_.size() - 1, Rational(0));
  for (std::size_t i = 0; i < p.c_.size(); ++i) {
    if (p.c_[i] == 0) continue;
    for (std::size_t j = 0; j < q.c_.size(); ++j) v[i + j] += p.c_[i] * q.c_[j];
  }
  return Polynomial(std::move(v));
}

Polynomial Polynomial::operator*(const Rational& s) const {
  if (s == 0) return Polynomial();
  std::vector<Rational> v;
  v.reserve(c_.size());
  for (const auto& a : c_) v.push_back(a * s);
  return Polynomial(std::move(v));
}

Polynomial Polynomial::pow(unsigned long e) const {
  Polynomial acc = constant(Rational(1));
  Polynomial base = *this;
  while (e > 0) {
    if (e & 1) acc = acc * base;
    base = base * base;
    e >>= 1;
  }
  return acc;
}

PolyDivMod Polynomial::divmod(const Polynomial& divisor) const {
  if (divisor.is_zero()) throw domain_error("polynomial division by zero");
  Polynomial r = *this;
  std::vector<Rational> q(degree() >= divisor.degree() ? degree() - divisor.degree() + 1 : 0,
                          Rational(0));
  while (!r.is_zero() && r.degree() >= divisor.degree()) {
    std::size_t shift = r.degree() - divisor.degree();
    Rational factor = r.leading() / divisor.leading();
    q[shift] = factor;
    r = r - Polynomial::monomial(factor, shift) * divisor;
  }
  return {Polynomial(std::move(q)), std::move(r)};
}

Rational Polynomial::content() const {
  if (c_.empty()) return Rational(0);
  Integer num_gcd = 0, den_lcm = 1;
  for (const auto& a : c_) {
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), a.get_num().get_mpz_t());
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), a.get_den().get_mpz_t());
  }
  return make_rational(num_gcd, den_lcm);
}

Polynomial Polynomial::primitive_part() const {
  if (c_.empty()) return Polynomial();
  return *this * (Rational(1) / content());
}

Polynomial Polynomial::monic() const {
  if (c_.empty()) return Polynomial();
  return *this * (Rational(1) / leading());
}

bool Polynomial::is_integer_polynomial() const {
  return std::all_of(c_.begin(), c_.end(), [](const Rational& a) { return is_integer(a); });
}

bool Polynomial::has_rational_root(long height_bound) const {
  if (c_.empty()) return true;
  Polynomial p = primitive_part();
  if (p.coeff(0) == 0) return true;  // root at 0
  // Rational root theorem on the primitive integer form: roots are p/q with
  // p | constant and q | leading.
  Integer a0 = abs(p.coeff(0).get_num());
  Integer an = abs(p.leading().get_num());
  std::vector<Integer> nums, dens;
  for (long d = 1; d <= height_bound && Integer(d) * d <= a0; ++d) {
    if (mpz_divisible_ui_p(a0.get_mpz_t(), d)) {
      nums.emplace_back(d);
      nums.push_back(a0 / d);
    }
  }
  if (a0 <= height_bound) nums.push_back(a0);
  for (long d = 1; d <= height_bound && Integer(d) <= an; ++d) {
    if (mpz_divisible_ui_p(an.get_mpz_t(), d)) dens.emplace_back(d);
  }
  for (const Integer& pnum : nums) {
    for (const Integer& qden : dens) {
      Rational cand = make_rational(pnum, qden);
      if (p.eval(cand) == 0 || p.eval(Rational(-cand)) == 0) return true;
    }
  }
  return false;
}

bool Polynomial::is_squarefree() const {
  if (degree() <= 1) return !is_zero();
  std::vector<Rational> d;
  d.reserve(c_.size() - 1);
  for (std::size_t i = 1; i < c_.size(); ++i) d.push_back(c_[i] * Rational(static_cast<long>(i)));
  return poly_gcd(*this, Polynomial(std::move(d))).degree() == 0;
}

std::string Polynomial::to_coeff_list() const {
  if (c_.empty()) return "0";
  std::string out;
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (i) out += ' ';
    out += to_string(c_[i]);
  }
  return out;
}

std::string Polynomial::to_pretty_string(const std::string& var) const {
  if (c_.empty()) return "0";
  std::string out;
  for (std::size_t i = c_.size(); i-- > 0;) {
    const Rational& a = c_[i];
    if (a == 0) continue;
    Rational mag = abs(a);
    if (out.empty()) {
      if (a < 0) out += "-";
    } else {
      out += a < 0 ? " - " : " + ";
    }
    bool unit = (mag == 1) && i > 0;
    if (!unit) out += to_string(mag);
    if (i > 0) {
      out += var;
      if (i > 1) out += "^" + std::to_string(i);
    }
  }
  return out.empty() ? "0" : out;
}

namespace {

// Pseudo-remainder of integer polynomials: lc(b)^(deg a - deg b + 1) * a mod b.
Polynomial pseudo_rem(Polynomial a, const Polynomial& b) {
  long db = b.degree();
  while (!a.is_zero() && a.degree() >= db) {
    long shift = a.degree() - db;
    Rational lead = a.leading();
    a = a * b.leading() - Polynomial::monomial(lead, shift) * b;
  }
  return a;
}

}  // namespace

Polynomial poly_gcd(const Polynomial& p, const Polynomial& q) {
  auto positive_primitive = [](const Polynomial& f) {
    Polynomial g = f.primitive_part();
    if (!g.is_zero() && g.leading() < 0) g = -g;
    return g;
  };
  if (p.is_zero()) return positive_primitive(q);
  if (q.is_zero()) return positive_primitive(p);
  Polynomial a = positive_primitive(p);
  Polynomial b = positive_primitive(q);
  if (a.degree() < b.degree()) std::swap(a, b);
  // Primitive PRS; content stripping each step keeps growth in check.
  while (!b.is_zero()) {
    Polynomial r = pseudo_rem(a, b);
    a = std::move(b);
    b = r.is_zero() ? Polynomial() : r.primitive_part();
  }
  return positive_primitive(a);
}

RationalFunction::RationalFunction(Polynomial num, Polynomial den)
    : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw domain_error("rational function with zero denominator");
  Polynomial g = poly_gcd(num_, den_);
  if (g.degree() > 0) {
    num_ = num_.divmod(g).quotient;
    den_ = den_.divmod(g).quotient;
  }
  // Scale so the denominator is primitive integral with positive leading.
  Rational c = den_.content();
  if (den_.leading() < 0) c = -c;
  num_ = num_ * (Rational(1) / c);
  den_ = den_ * (Rational(1) / c);
}

}  // namespace qlift
