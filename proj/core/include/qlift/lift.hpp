#ifndef QLIFT_LIFT_HPP
#define QLIFT_LIFT_HPP

#include <array>
#include <map>
#include <vector>

#include "qlift/numerics.hpp"
#include "qlift/polynomial.hpp"
#include "qlift/series.hpp"
#include "qlift/vvform.hpp"

namespace qlift {

// A pole of the lift: discriminant D < 0 on residue class +-r mod 6, always
// of order 3 in this pipeline.
struct PoleDatum {
  long D;
  long r;  // normalized to 1 or 2
  int order;

  friend bool operator==(const PoleDatum&, const PoleDatum&) = default;
};

// Gamma0(3)-inequivalent forms [a,b,c] with 3|a, b = r mod 6, b^2-4ac = D,
// one representative per class, plus their CM points.
struct HeegnerClass {
  long D, r;
  std::vector<std::array<long, 3>> forms;
  std::vector<CMPoint> points;
};

// Options shared by the lift pipeline.
struct LiftOptions {
  long float_bits = 256;       // precision for CM evaluation / class polynomials
  int divisor_exponent = 2;    // exponent e in sum_{d|n} (n/d)^e c(d^2/12, d)
  long residual_window = 12;   // extra identified coefficients checked to vanish
  long lift_terms = 0;         // floor for the lift length; 0 = what the solve needs
  bool parallel = true;        // fan the per-m pipeline across threads
};

// Fourier expansion of the lift of a Z/6-valued form of denominator 12:
// sum_{n>=1} [sum_{d|n} (n/d)^e c_f(d^2/12, d mod 6)] q^n, exact below
// q^(terms+1).  Requires the tensor coefficients through d^2/12.
RationalSeries lift_expansion(const VectorValuedSeries<Rational>& f, long terms,
                              int divisor_exponent = 2);

// Reads the pole data off the principal part of f.
std::vector<PoleDatum> pole_data(const VectorValuedSeries<Rational>& f);

// Enumerates the Heegner class for (D, r); the expected class count is the
// number of SL2(Z)-classes of forms of discriminant D (including imprimitive
// ones), and enumeration widens until that count is reached.
HeegnerClass heegner_points(long D, long r, long float_bits = 256);

// Number of SL2(Z)-classes of binary quadratic forms of discriminant D,
// imprimitive forms included; exhaustive reduced-form census.
long form_class_count(long D);

// Monic integer polynomial whose roots are the j3-values of the class of
// (D, r) together with its mirror (D, -r), deduplicated; computed at float
// precision and rounded, with a rounding-residual guard.
Polynomial minimal_poly_j3(long D, long r, long float_bits = 256);

struct Identification {
  Polynomial a, b;         // lift = (1/2) Delta3 * a(j3)/b(j3)
  long residual_checked;   // coefficients beyond the solve verified to vanish
};

// Writes a lift series as (1/2) Delta3 * A(j3)/B(j3) with B assembled from
// the pole data; descending-power triangular solve, residual must vanish.
Identification identify_rational(const RationalSeries& lift, const std::vector<PoleDatum>& poles,
                                 long float_bits = 256);

// Holomorphic-part coefficient table r_m, normalized so r_{-1/3} = 1; every
// entry is an exact rational.
struct MockCoefficientTable {
  std::map<Rational, Rational> entries;
};

MockCoefficientTable mock_coefficients(const Rational& m_max, const LiftOptions& opts = {});

// Comparison row of the scalar preimage against the printed reference
// expansion: preimage + (3/4) w must reproduce it.
struct BorRow {
  long exponent;
  Rational expected;
  Rational got;
  bool pass;
};

struct ScalarPreimage {
  RationalSeries series;  // (1/4)(q^-1 + sum_m r_m q^(3m))
  std::vector<BorRow> report;
};

ScalarPreimage scalar_preimage(const MockCoefficientTable& table);

// Full pipeline for one basis index m: tensor with the Kohnen-split F,
// lift, identify.  Exposed for the CLI and tests.
struct LiftRun {
  Rational m;
  Polynomial basis_poly;
  std::vector<PoleDatum> poles;
  RationalSeries lift;
  Identification ident;
  Rational value_at_cm;  // A(-27)/B(-27)
};

LiftRun run_lift_pipeline(const Rational& m, const LiftOptions& opts = {});

}  // namespace qlift

#endif  // QLIFT_LIFT_HPP
