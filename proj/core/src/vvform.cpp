#include "qlift/vvform.hpp"

#include <cassert>

#include "qlift/eta.hpp"

namespace qlift {

namespace {

// P(j)*eta^8 as a series, exact below 1/3 - deg P + terms.
RationalSeries eval_poly_j_eta8(const Polynomial& p, long terms) {
  long n = std::max<long>(p.degree(), 0);
  long work = terms + n + 2;
  RationalSeries j = named_form(NamedForm::J, work);
  RationalSeries eta8 = eta_quotient(parse_eta_spec("1^8"), work);
  RationalSeries acc = RationalSeries::constant(p.coeff(n));
  for (long i = n - 1; i >= 0; --i) {
    acc = acc * j + RationalSeries::constant(p.coeff(static_cast<std::size_t>(i)));
  }
  return acc * eta8;
}

}  // namespace

BasisForm basis_fm(const Rational& m, long terms) {
  if (!is_integer(m - make_rational(2, 3)))
    throw domain_error("basis index m must be 2/3 mod 1, got " + to_string(m));
  if (m < make_rational(-1, 3)) throw domain_error("basis index m must be >= -1/3");
  if (terms < 2) throw domain_error("basis_fm needs at least two terms");
  long n = to_long(Rational(m + make_rational(1, 3)).get_num());

  Polynomial p;
  if (n == 0) {
    p = Polynomial::constant(Rational(1));
  } else {
    // Unitriangular solve for monic P of degree n: the combination
    // sum c_i j^i eta^8 must vanish at the exponents 1/3 - t, t = n-1..0.
    // j = q^-1 + O(1) makes each step determine one coefficient.
    long t0 = n + 4;
    RationalSeries j = named_form(NamedForm::J, t0 + n + 2);
    RationalSeries eta8 = eta_quotient(parse_eta_spec("1^8"), t0 + n + 2);
    std::vector<RationalSeries> basis_vec;  // j^i * eta^8
    basis_vec.reserve(n + 1);
    basis_vec.push_back(eta8);
    for (long i = 1; i <= n; ++i) basis_vec.push_back(basis_vec.back() * j);
    std::vector<Rational> coeffs(n + 1, Rational(0));
    coeffs[n] = 1;
    RationalSeries rem = basis_vec[n];
    for (long t = n - 1; t >= 0; --t) {
      Rational target_exp = make_rational(1 - 3 * t, 3);
      Rational c = -rem.coeff_at(target_exp);
      coeffs[t] = c;
      if (c != 0) rem = rem + basis_vec[t] * c;
    }
    p = Polynomial(std::move(coeffs));
  }

  RationalSeries comp1 = eval_poly_j_eta8(p, terms + 2) * make_rational(1, 2);
  Rational want_trunc = Rational(-m) + terms;
  if (!comp1.is_exact() && Rational(comp1.trunc_index()) < want_trunc * comp1.den())
    throw precision_error("basis_fm working precision shortfall");
  comp1 = comp1.truncated(want_trunc);

  std::vector<RationalSeries> comps{RationalSeries::zero(), comp1, -comp1};
  VectorValuedSeries<Rational> form(3, std::move(comps), KappaParity::Odd, Rational(4));
  return BasisForm{m, std::move(p), std::move(form)};
}

VectorValuedSeries<Rational> kohnen_split(long terms) {
  RationalSeries f = named_form(NamedForm::F, terms);
  assert(f.den() == 1);
  std::map<long, Rational> part0, part1;
  for (const auto& [e, c] : f.terms()) {
    long r = ((e % 4) + 4) % 4;
    if (r == 0)
      part0.emplace(e, c);
    else if (r == 3)
      part1.emplace(e, c);
    else
      throw domain_error("F has a coefficient outside the plus space at q^" + std::to_string(e));
  }
  RationalSeries f0(1, std::move(part0), f.trunc_index());
  RationalSeries f1(1, std::move(part1), f.trunc_index());
  Rational quarter = make_rational(1, 4);
  std::vector<RationalSeries> comps{f0.rescale(quarter), f1.rescale(quarter)};
  return VectorValuedSeries<Rational>(2, std::move(comps), KappaParity::Even,
                                      make_rational(-1, 2));
}

VectorValuedSeries<Rational> tensor(const VectorValuedSeries<Rational>& f,
                                    const VectorValuedSeries<Rational>& g) {
  long n1 = f.modulus(), n2 = g.modulus();
  if (std::gcd(n1, n2) != 1) throw domain_error("tensor needs coprime moduli");
  long n = n1 * n2;
  std::vector<RationalSeries> comps;
  comps.reserve(n);
  for (long mu = 0; mu < n; ++mu) comps.push_back(f.component(mu % n1) * g.component(mu % n2));
  KappaParity parity =
      (f.kappa_odd() != g.kappa_odd()) ? KappaParity::Odd : KappaParity::Even;
  VectorValuedSeries<Rational> out(n, std::move(comps), parity, f.weight() + g.weight());
  if (n1 == 3 && n2 == 2) {
    // Discriminant form of the Z/6 lattice: component mu is supported on
    // exponents mu^2/12 mod 1.  Validates the CRT index map.
    if (out.den() != 12) throw domain_error("tensor over Z/6 should live on the 1/12 grid");
    for (long mu = 0; mu < 6; ++mu) {
      for (const auto& [e, c] : out.component(mu).terms()) {
        if (((e - mu * mu) % 12 + 12) % 12 != 0)
          throw domain_error("tensor component " + std::to_string(mu) +
                             " has an exponent off its discriminant class");
      }
    }
  }
  return out;
}

}  // namespace qlift
