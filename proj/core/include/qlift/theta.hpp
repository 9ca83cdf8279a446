#ifndef QLIFT_THETA_HPP
#define QLIFT_THETA_HPP

#include "qlift/series.hpp"
#include "qlift/vvform.hpp"

namespace qlift {

// Positive definite binary lattice inside the imaginary quadratic field
// Q(sqrt(-D)): span of b1, b2 with quadratic form Q(x) = scale * Nm(x).
struct BinaryLatticeSpec {
  long D;        // field parameter, D > 0
  QuadElem b1, b2;
  Rational scale;
};

// The maximal order O_K of Q(sqrt(-D)) with the norm form; D squarefree.
BinaryLatticeSpec maximal_order_lattice(long D);
// Coset coordinates (in the lattice basis) of mu times the dual generator.
std::pair<Rational, Rational> maximal_order_coset(long D, long mu);

// sum over lattice + coset of lambda^(k-1) q^(Q(lambda)), exact below
// q^terms.  The coset is given by rational coordinates in the basis.
// extra_box widens the enumeration box; used to test completeness.
QuadSeries binary_theta(const BinaryLatticeSpec& spec, const Rational& c1, const Rational& c2,
                        long k, long terms, long extra_box = 0);

// Theta_{P,4} for P = (O_k, Nm) over Q(sqrt(-3)): the Z/3-valued cusp form
// whose nonzero components are (sqrt(-3)/3) eta^8 up to sign.
VectorValuedSeries<QuadElem> theta_p4_vector(long terms, long extra_box = 0);

// Unary theta vectors: Z1 is the weight 1/2 theta over (Z, x^2) split mod 2,
// Z6 the theta over (Z, 6x^2) split mod 12.
enum class UnaryVariant { Z1, Z6 };
VectorValuedSeries<Rational> unary_theta(UnaryVariant variant, long terms);

// (theta_{P+1} - theta_{P-1})/6 for P = (sqrt(-3) O_k, Nm), harmonic weight
// lambda^3; equals eta(3 tau)^8.
RationalSeries hecke_theta_eta8(long terms, long extra_box = 0);

}  // namespace qlift

#endif  // QLIFT_THETA_HPP
