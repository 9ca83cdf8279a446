#ifndef QLIFT_VVFORM_HPP
#define QLIFT_VVFORM_HPP

#include <utility>
#include <vector>

#include "qlift/polynomial.hpp"
#include "qlift/series.hpp"

namespace qlift {

enum class KappaParity { Even, Odd };

// Series valued in the group ring of Z/nZ: one Puiseux series per residue,
// subject to the symmetry component(n-mu) = (-1)^kappa component(mu).
// Weight is metadata only; it never enters the arithmetic.
template <class C>
class VectorValuedSeries {
 public:
  VectorValuedSeries(long modulus, std::vector<PuiseuxSeries<C>> components,
                     KappaParity parity, Rational weight)
      : n_(modulus), comps_(std::move(components)), parity_(parity), weight_(std::move(weight)) {
    if (n_ < 1 || static_cast<long>(comps_.size()) != n_)
      throw domain_error("vector-valued series needs one component per residue");
    long l = 1;
    for (const auto& c : comps_) l = std::lcm(l, c.den());
    for (auto& c : comps_) c = c.with_den_multiple(l / c.den());
    validate_symmetry();
  }

  long modulus() const { return n_; }
  KappaParity parity() const { return parity_; }
  bool kappa_odd() const { return parity_ == KappaParity::Odd; }
  const Rational& weight() const { return weight_; }
  long den() const { return comps_.front().den(); }

  // Component for any integer residue, reduced mod n.
  const PuiseuxSeries<C>& component(long mu) const {
    long r = ((mu % n_) + n_) % n_;
    return comps_[r];
  }

 private:
  void validate_symmetry() const {
    int sign = kappa_odd() ? -1 : 1;
    for (long mu = 0; mu <= n_ / 2; ++mu) {
      const auto& a = comps_[((n_ - mu) % n_)];
      const auto& b = comps_[mu];
      PuiseuxSeries<C> expect = sign < 0 ? -b : b;
      if (!(a == expect))
        throw domain_error("vector-valued symmetry violated at residue " + std::to_string(mu));
    }
    if (kappa_odd()) {
      if (!comps_[0].known_zero())
        throw domain_error("odd kappa forces component 0 to vanish");
      if (n_ % 2 == 0 && !comps_[n_ / 2].known_zero())
        throw domain_error("odd kappa forces the middle component to vanish");
    }
  }

  long n_;
  std::vector<PuiseuxSeries<C>> comps_;
  KappaParity parity_;
  Rational weight_;
};

// Basis element f_m of the weakly holomorphic space for the 1-dimensional
// D = -3 instance: f_m = (1/2) P_{m+1/3}(j) eta^8 (phi_1 - phi_2), with the
// monic polynomial P chosen so the expansion is q^{-m} + O(q^{4/3}) with all
// intermediate coefficients zero.
struct BasisForm {
  Rational m;
  Polynomial p;  // P_{m+1/3}
  VectorValuedSeries<Rational> form;
};

// Components exact below -m + terms.  Requires m = -1/3 or m = 2/3 mod 1.
BasisForm basis_fm(const Rational& m, long terms);

// The weight -1/2 form F split by index mod 4 into a Z/2-valued form in tau/4:
// component 0 carries indices 0 mod 4, component 1 indices -1 mod 4.
VectorValuedSeries<Rational> kohnen_split(long terms);

// Tensor over coprime moduli via mu -> (mu mod n1, mu mod n2); for the
// (3, 2) -> 6 case the exponent classes mu^2/12 mod 1 are asserted.
VectorValuedSeries<Rational> tensor(const VectorValuedSeries<Rational>& f,
                                    const VectorValuedSeries<Rational>& g);

// Bilinear pairing sum_mu f_mu g_mu.
template <class C>
PuiseuxSeries<C> pairing(const VectorValuedSeries<C>& f, const VectorValuedSeries<C>& g) {
  if (f.modulus() != g.modulus())
    throw domain_error("pairing of vector forms over different discriminant groups");
  PuiseuxSeries<C> acc;
  for (long mu = 0; mu < f.modulus(); ++mu) acc = acc + f.component(mu) * g.component(mu);
  return acc;
}

}  // namespace qlift

#endif  // QLIFT_VVFORM_HPP
