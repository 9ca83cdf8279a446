#include "qlift/theta.hpp"

namespace qlift {

namespace {

long floor_of(const Rational& x) {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), x.get_num().get_mpz_t(), x.get_den().get_mpz_t());
  return to_long(q);
}

long ceil_of(const Rational& x) {
  Integer q;
  mpz_cdiv_q(q.get_mpz_t(), x.get_num().get_mpz_t(), x.get_den().get_mpz_t());
  return to_long(q);
}

// ceil(sqrt(x)) for a nonnegative rational.
long ceil_sqrt(const Rational& x) {
  Integer c(ceil_of(x));
  Integer root;
  mpz_sqrt(root.get_mpz_t(), c.get_mpz_t());
  while (root * root < c) ++root;
  return to_long(root);
}

}  // namespace

BinaryLatticeSpec maximal_order_lattice(long D) {
  if (D <= 0) throw domain_error("field parameter D must be positive");
  if (((-D) % 4 + 4) % 4 == 1) {
    // O_K = Z[(1+sqrt(-D))/2]
    return {D, QuadElem(Rational(1), Rational(0), -D),
            QuadElem(make_rational(1, 2), make_rational(1, 2), -D), Rational(1)};
  }
  return {D, QuadElem(Rational(1), Rational(0), -D), QuadElem(Rational(0), Rational(1), -D),
          Rational(1)};
}

std::pair<Rational, Rational> maximal_order_coset(long D, long mu) {
  // mu times a generator of the dual lattice modulo O_K, in basis
  // coordinates; the generator is chosen so that for D = 3 the coset labels
  // agree with the a-coordinate mod 1 convention of the Z/3 splitting.
  if (((-D) % 4 + 4) % 4 == 1) {
    return {make_rational(mu, D), make_rational(-2 * mu, D)};
  }
  return {Rational(0), make_rational(mu, 2 * D)};
}

QuadSeries binary_theta(const BinaryLatticeSpec& spec, const Rational& c1, const Rational& c2,
                        long k, long terms, long extra_box) {
  if (k < 2) throw domain_error("binary theta needs weight parameter k >= 2");
  if (terms < 1) throw domain_error("binary theta needs at least one term");
  if (spec.scale <= 0) throw domain_error("binary theta needs a positive definite form");

  Rational g11 = spec.b1.norm();
  Rational g22 = spec.b2.norm();
  Rational g12 = (spec.b1 * spec.b2.conj()).trace();  // bilinear pairing of b1, b2
  Rational det = spec.scale * spec.scale * (g11 * g22 - g12 * g12 / 4);
  Rational tr = spec.scale * (g11 + g22);
  if (det <= 0) throw domain_error("degenerate lattice basis");
  Rational lambda_min = det / tr;  // lower bound for the smallest eigenvalue

  long box = 1 + ceil_sqrt(Rational(terms) / lambda_min) + extra_box;
  long x_lo = ceil_of(-c1 - box), x_hi = floor_of(-c1 + box);
  long y_lo = ceil_of(-c2 - box), y_hi = floor_of(-c2 + box);

  std::map<Rational, QuadElem> acc;
  Rational bound(terms);
  for (long x = x_lo; x <= x_hi; ++x) {
    QuadElem u = spec.b1 * QuadElem(c1 + x);
    for (long y = y_lo; y <= y_hi; ++y) {
      QuadElem lam = u + spec.b2 * QuadElem(c2 + y);
      if (lam.is_zero()) continue;
      Rational q = spec.scale * lam.norm();
      if (q >= bound) continue;
      QuadElem value = lam.pow(static_cast<unsigned long>(k - 1));
      auto it = acc.find(q);
      if (it == acc.end())
        acc.emplace(std::move(q), std::move(value));
      else
        it->second += value;
    }
  }

  long den = 1;
  for (const auto& [e, v] : acc) den = std::lcm(den, to_long(e.get_den()));
  std::map<long, QuadElem> terms_map;
  for (auto& [e, v] : acc) {
    if (!v.is_zero()) terms_map.emplace(to_long(Rational(e * den).get_num()), std::move(v));
  }
  return QuadSeries(den, std::move(terms_map), terms * den);
}

VectorValuedSeries<QuadElem> theta_p4_vector(long terms, long extra_box) {
  BinaryLatticeSpec p = maximal_order_lattice(3);
  Rational third = make_rational(1, 3);
  QuadSeries comp0 = binary_theta(p, Rational(0), Rational(0), 4, terms, extra_box);
  QuadSeries comp1 = binary_theta(p, third, third, 4, terms, extra_box);
  QuadSeries comp2 = binary_theta(p, 2 * third, 2 * third, 4, terms, extra_box);
  return VectorValuedSeries<QuadElem>(3, {comp0, comp1, comp2}, KappaParity::Odd, Rational(4));
}

VectorValuedSeries<Rational> unary_theta(UnaryVariant variant, long terms) {
  if (terms < 1) throw domain_error("unary theta needs at least one term");
  long modulus = variant == UnaryVariant::Z1 ? 2 : 12;
  long den = variant == UnaryVariant::Z1 ? 4 : 24;
  // exponents n^2/den over n = r mod modulus
  std::vector<std::map<long, Rational>> comps(modulus);
  long nmax = ceil_sqrt(Rational(terms * den)) + modulus;
  for (long n = -nmax; n <= nmax; ++n) {
    long e = n * n;
    if (e >= terms * den) continue;
    long r = ((n % modulus) + modulus) % modulus;
    auto it = comps[r].find(e);
    if (it == comps[r].end())
      comps[r].emplace(e, Rational(1));
    else
      it->second += 1;
  }
  std::vector<RationalSeries> series;
  series.reserve(modulus);
  for (auto& m : comps) series.emplace_back(den, std::move(m), terms * den);
  return VectorValuedSeries<Rational>(modulus, std::move(series), KappaParity::Even,
                                      make_rational(1, 2));
}

RationalSeries hecke_theta_eta8(long terms, long extra_box) {
  // P = (sqrt(-3) O_k, Nm) with basis sqrt(-3), sqrt(-3) zeta.
  BinaryLatticeSpec p{3, QuadElem(Rational(0), Rational(1), -3),
                      QuadElem(make_rational(-3, 2), make_rational(1, 2), -3), Rational(1)};
  Rational third = make_rational(1, 3);
  // 1 = (1/3) b1 - (2/3) b2
  QuadSeries plus = binary_theta(p, third, -2 * third, 4, terms, extra_box);
  QuadSeries minus = binary_theta(p, -third, 2 * third, 4, terms, extra_box);
  QuadSeries diff = (plus - minus) * QuadElem(make_rational(1, 6));
  return to_rational_series(diff);
}

}  // namespace qlift
