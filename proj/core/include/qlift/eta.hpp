#ifndef QLIFT_ETA_HPP
#define QLIFT_ETA_HPP

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "qlift/series.hpp"

namespace qlift {

// Finite product of eta factors eta(m*z)^r, multipliers distinct.
struct EtaQuotientSpec {
  std::vector<std::pair<long, long>> factors;  // (multiplier m, exponent r)

  // Sum of m*r/24, the exact valuation of the expansion.
  Rational valuation() const;
};

// Parses "3^8", "1^10*2^-5*4^-6" and the like.
EtaQuotientSpec parse_eta_spec(std::string_view text);

// q-expansion of the quotient, exact for `terms` integer q-steps past the
// valuation.  eta(z) itself is expanded by Euler's pentagonal number theorem.
RationalSeries eta_quotient(const EtaQuotientSpec& spec, long terms);

// The scalar forms used throughout: the weight -1/2 form F on Gamma0(4), the
// j-invariant, the Gamma0(3) Hauptmodul j3, Delta3 = eta(z)^6 eta(3z)^6, the
// weight -2 level 9 form w, and eta(3z)^8.
enum class NamedForm { F, J, J3, Delta3, W, Eta8 };

NamedForm named_form_from_string(std::string_view name);
std::string to_string(NamedForm form);

// Memoized per form; repeated calls are observationally pure.
RationalSeries named_form(NamedForm form, long terms);

// Recomputes from scratch, bypassing the memo; the truncation-stability
// tests compare this against the cached path.
RationalSeries named_form_uncached(NamedForm form, long terms);

// E4 = 1 + 240 sum sigma_3(n) q^n, exact below q^terms.
RationalSeries eisenstein_e4(long terms);

}  // namespace qlift

#endif  // QLIFT_ETA_HPP
