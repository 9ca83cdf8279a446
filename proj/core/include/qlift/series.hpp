#ifndef QLIFT_SERIES_HPP
#define QLIFT_SERIES_HPP

#include <limits>
#include <map>
#include <numeric>
#include <optional>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "qlift/quad.hpp"
#include "qlift/rational.hpp"

namespace qlift {

inline bool coeff_is_zero(const Rational& c) { return c == 0; }
inline bool coeff_is_zero(const QuadElem& c) { return c.is_zero(); }
inline std::string coeff_text(const Rational& c) { return to_string(c); }
inline std::string coeff_text(const QuadElem& c) { return c.to_text(); }

// Truncation index of a series known exactly at every exponent.
inline constexpr long kExactSeries = std::numeric_limits<long>::max() / 4;

// Truncated Puiseux series: finitely many terms c_n q^(n/den) with n < trunc,
// exact below trunc/den and unknown from there on.  Values are immutable in
// spirit: every operation returns a fresh series.
template <class C>
class PuiseuxSeries {
 public:
  PuiseuxSeries() : den_(1), trunc_(kExactSeries) {}

  PuiseuxSeries(long den, std::map<long, C> coeffs, long trunc)
      : den_(den), coeffs_(std::move(coeffs)), trunc_(trunc) {
    if (den_ < 1) throw domain_error("series exponent denominator must be positive");
    for (auto it = coeffs_.begin(); it != coeffs_.end();) {
      if (it->first >= trunc_)
        throw domain_error("series term at or beyond its truncation");
      if (coeff_is_zero(it->second))
        it = coeffs_.erase(it);
      else
        ++it;
    }
  }

  static PuiseuxSeries zero() { return PuiseuxSeries(); }
  static PuiseuxSeries constant(C c) {
    PuiseuxSeries s;
    if (!coeff_is_zero(c)) s.coeffs_.emplace(0, std::move(c));
    return s;
  }
  static PuiseuxSeries one() { return constant(C{Rational(1)}); }
  static PuiseuxSeries monomial(C c, const Rational& exponent) {
    PuiseuxSeries s;
    s.den_ = to_long(exponent.get_den());
    if (!coeff_is_zero(c)) s.coeffs_.emplace(to_long(exponent.get_num()), std::move(c));
    return s;
  }

  long den() const { return den_; }
  long trunc_index() const { return trunc_; }
  bool is_exact() const { return trunc_ == kExactSeries; }
  Rational trunc_exponent() const {
    if (is_exact()) throw domain_error("series is exact, no truncation exponent");
    return make_rational(trunc_, den_);
  }
  const std::map<long, C>& terms() const { return coeffs_; }
  bool known_zero() const { return coeffs_.empty(); }

  // Smallest stored exponent; empty for a series with no known nonzero term.
  std::optional<Rational> valuation() const {
    if (coeffs_.empty()) return std::nullopt;
    return make_rational(coeffs_.begin()->first, den_);
  }

  // Coefficient at exponent e.  Exact zero for an unstored exponent below the
  // truncation; beyond the truncation it is an error, never a silent zero.
  C coeff_at(const Rational& e) const {
    if (!is_exact() && e * den_ >= trunc_)
      throw precision_error("coefficient at q^(" + to_string(e) +
                            ") is beyond the series truncation O(q^(" +
                            to_string(trunc_exponent()) + "))");
    Rational scaled = e * den_;
    if (!is_integer(scaled)) return C{Rational(0)};
    Integer idx = scaled.get_num();
    if (!idx.fits_slong_p()) return C{Rational(0)};
    auto it = coeffs_.find(to_long(idx));
    return it == coeffs_.end() ? C{Rational(0)} : it->second;
  }

  // Same series on a grid den*k; exact relabeling.
  PuiseuxSeries with_den_multiple(long k) const {
    if (k == 1) return *this;
    PuiseuxSeries out;
    out.den_ = den_ * k;
    out.trunc_ = is_exact() ? kExactSeries : trunc_ * k;
    for (const auto& [n, c] : coeffs_) out.coeffs_.emplace(n * k, c);
    return out;
  }

  // Divides den by the gcd of all exponent data; used by comparisons and dumps.
  PuiseuxSeries reduced_den() const {
    long g = den_;
    for (const auto& [n, c] : coeffs_) g = std::gcd(g, std::labs(n));
    if (g <= 1) return *this;
    PuiseuxSeries out;
    out.den_ = den_ / g;
    out.trunc_ = is_exact() ? kExactSeries : floor_div(trunc_ - 1, g) + 1;
    for (const auto& [n, c] : coeffs_) out.coeffs_.emplace(n / g, c);
    return out;
  }

  PuiseuxSeries operator-() const {
    PuiseuxSeries out = *this;
    for (auto& [n, c] : out.coeffs_) c = -c;
    return out;
  }

  friend PuiseuxSeries operator+(const PuiseuxSeries& f, const PuiseuxSeries& g) {
    long l = std::lcm(f.den_, g.den_);
    PuiseuxSeries a = f.with_den_multiple(l / f.den_);
    PuiseuxSeries b = g.with_den_multiple(l / g.den_);
    PuiseuxSeries out;
    out.den_ = l;
    out.trunc_ = std::min(a.trunc_, b.trunc_);
    out.coeffs_ = std::move(a.coeffs_);
    for (auto& [n, c] : b.coeffs_) {
      auto it = out.coeffs_.find(n);
      if (it == out.coeffs_.end())
        out.coeffs_.emplace(n, std::move(c));
      else
        it->second += c;
    }
    for (auto it = out.coeffs_.begin(); it != out.coeffs_.end();) {
      if (it->first >= out.trunc_ || coeff_is_zero(it->second))
        it = out.coeffs_.erase(it);
      else
        ++it;
    }
    return out;
  }

  friend PuiseuxSeries operator-(const PuiseuxSeries& f, const PuiseuxSeries& g) {
    return f + (-g);
  }

  friend PuiseuxSeries operator*(const PuiseuxSeries& f, const PuiseuxSeries& g) {
    long l = std::lcm(f.den_, g.den_);
    PuiseuxSeries a = f.with_den_multiple(l / f.den_);
    PuiseuxSeries b = g.with_den_multiple(l / g.den_);
    PuiseuxSeries out;
    out.den_ = l;
    // O-bound of the product: trunc(f) + val(g) and symmetrically; an empty
    // factor contributes its truncation as the valuation lower bound.
    long va = a.coeffs_.empty() ? a.trunc_ : a.coeffs_.begin()->first;
    long vb = b.coeffs_.empty() ? b.trunc_ : b.coeffs_.begin()->first;
    long t1 = sat_add(a.trunc_, vb);
    long t2 = sat_add(b.trunc_, va);
    out.trunc_ = std::min(t1, t2);
    if (a.coeffs_.empty() || b.coeffs_.empty()) return out;
    if (out.trunc_ >= kExactSeries) {
      out.trunc_ = kExactSeries;
      // Dense accumulation needs a finite window; exact*exact keeps all terms.
      long hi = a.coeffs_.rbegin()->first + b.coeffs_.rbegin()->first + 1;
      accumulate_product(a, b, va + vb, hi, out.coeffs_);
      return out;
    }
    accumulate_product(a, b, va + vb, out.trunc_, out.coeffs_);
    return out;
  }

  PuiseuxSeries operator*(const C& s) const {
    PuiseuxSeries out;
    out.den_ = den_;
    out.trunc_ = trunc_;
    if (coeff_is_zero(s)) return out;
    out.coeffs_ = coeffs_;
    for (auto& [n, c] : out.coeffs_) c = c * s;
    return out;
  }

  // Multiplicative inverse.  The leading coefficient must be nonzero; an
  // inexact zero series cannot be inverted.  A single exact term inverts to a
  // monomial; longer exact series must be truncated first.
  PuiseuxSeries inverse() const {
    if (coeffs_.empty()) throw domain_error("inverse of (known-)zero series");
    long v = coeffs_.begin()->first;
    const C& c0 = coeffs_.begin()->second;
    if (is_exact()) {
      if (coeffs_.size() == 1) {
        PuiseuxSeries out;
        out.den_ = den_;
        out.coeffs_.emplace(-v, C{Rational(1)} / c0);
        return out;
      }
      throw domain_error("inverse of an exact multi-term series is unbounded; truncate first");
    }
    long rel = trunc_ - v;  // known grid steps, relative precision
    std::vector<C> f(rel, C{Rational(0)});
    for (const auto& [n, c] : coeffs_) f[n - v] = c;
    std::vector<C> g(rel, C{Rational(0)});
    C inv0 = C{Rational(1)} / c0;
    g[0] = inv0;
    for (long t = 1; t < rel; ++t) {
      C acc{Rational(0)};
      for (long s = 1; s <= t; ++s) {
        if (!coeff_is_zero(f[s]) && !coeff_is_zero(g[t - s])) acc += f[s] * g[t - s];
      }
      if (!coeff_is_zero(acc)) g[t] = -(acc * inv0);
    }
    PuiseuxSeries out;
    out.den_ = den_;
    out.trunc_ = trunc_ - 2 * v;
    for (long t = 0; t < rel; ++t) {
      if (!coeff_is_zero(g[t])) out.coeffs_.emplace(t - v, std::move(g[t]));
    }
    return out;
  }

  // Exponent substitution q^e -> q^(c*e) for positive rational c.
  PuiseuxSeries rescale(const Rational& c) const {
    if (c <= 0) throw domain_error("rescale factor must be positive");
    long p = to_long(c.get_num()), q = to_long(c.get_den());
    PuiseuxSeries out;
    out.den_ = den_ * q;
    out.trunc_ = is_exact() ? kExactSeries : trunc_ * p;
    for (const auto& [n, coef] : coeffs_) out.coeffs_.emplace(n * p, coef);
    return out;
  }

  // Multiplication by the monomial q^e.
  PuiseuxSeries shift(const Rational& e) const {
    long q = to_long(e.get_den());
    long l = std::lcm(den_, q);
    PuiseuxSeries out = with_den_multiple(l / den_);
    long off = to_long(e.get_num()) * (l / q);
    std::map<long, C> moved;
    for (auto& [n, c] : out.coeffs_) moved.emplace(n + off, std::move(c));
    out.coeffs_ = std::move(moved);
    if (!out.is_exact()) out.trunc_ = sat_add(out.trunc_, off);
    return out;
  }

  // Forgets knowledge at and beyond exponent e.
  PuiseuxSeries truncated(const Rational& e) const {
    Rational idx = e * den_;
    Integer ceil_idx;
    mpz_cdiv_q(ceil_idx.get_mpz_t(), idx.get_num().get_mpz_t(), idx.get_den().get_mpz_t());
    long t = to_long(ceil_idx);
    PuiseuxSeries out;
    out.den_ = den_;
    out.trunc_ = std::min(trunc_, t);
    for (const auto& [n, c] : coeffs_) {
      if (n < out.trunc_) out.coeffs_.emplace(n, c);
    }
    return out;
  }

  struct Comparison {
    bool equal;
    long common_trunc;  // on the lcm grid
    long den;
  };

  // Compares all coefficients below min(trunc); the compared range is
  // reported alongside the verdict.
  friend Comparison compare_common(const PuiseuxSeries& f, const PuiseuxSeries& g) {
    long l = std::lcm(f.den_, g.den_);
    PuiseuxSeries a = f.with_den_multiple(l / f.den_);
    PuiseuxSeries b = g.with_den_multiple(l / g.den_);
    long t = std::min(a.trunc_, b.trunc_);
    auto ia = a.coeffs_.begin(), ib = b.coeffs_.begin();
    while (true) {
      while (ia != a.coeffs_.end() && ia->first >= t) ia = a.coeffs_.end();
      while (ib != b.coeffs_.end() && ib->first >= t) ib = b.coeffs_.end();
      bool ea = ia == a.coeffs_.end(), eb = ib == b.coeffs_.end();
      if (ea || eb) return {ea && eb, t, l};
      if (ia->first != ib->first || !(ia->second == ib->second)) return {false, t, l};
      ++ia;
      ++ib;
    }
  }

  friend bool operator==(const PuiseuxSeries& f, const PuiseuxSeries& g) {
    return compare_common(f, g).equal;
  }

  // Canonical dump: one "exponent<TAB>coefficient" line per term in ascending
  // order, then the truncation marker.
  void dump(std::ostream& os) const {
    PuiseuxSeries r = reduced_den();
    for (const auto& [n, c] : r.coeffs_) {
      if (r.den_ == 1)
        os << n;
      else
        os << n << '/' << r.den_;
      os << '\t' << coeff_text(c) << '\n';
    }
    if (!r.is_exact()) {
      os << "O(q^{" << to_string(r.trunc_exponent()) << "})\n";
    }
  }

 private:
  static long sat_add(long a, long b) {
    if (a >= kExactSeries || b >= kExactSeries) return kExactSeries;
    long s = a + b;
    return s >= kExactSeries ? kExactSeries : s;
  }

  // Dense windowed convolution of the nonzero terms of a and b into `out`,
  // restricted to exponents in [base, hi).
  static void accumulate_product(const PuiseuxSeries& a, const PuiseuxSeries& b, long base,
                                 long hi, std::map<long, C>& out) {
    if (hi <= base) return;
    std::vector<std::pair<long, const C*>> ta, tb;
    ta.reserve(a.coeffs_.size());
    tb.reserve(b.coeffs_.size());
    for (const auto& [n, c] : a.coeffs_) ta.emplace_back(n, &c);
    for (const auto& [n, c] : b.coeffs_) tb.emplace_back(n, &c);
    if (ta.size() > tb.size()) std::swap(ta, tb);
    std::vector<C> acc(static_cast<std::size_t>(hi - base), C{Rational(0)});
    for (const auto& [e1, c1] : ta) {
      for (const auto& [e2, c2] : tb) {
        long e = e1 + e2;
        if (e >= hi) break;
        acc[e - base] += *c1 * *c2;
      }
    }
    for (long i = 0; i < hi - base; ++i) {
      if (!coeff_is_zero(acc[i])) out.emplace(base + i, std::move(acc[i]));
    }
  }

  long den_;
  std::map<long, C> coeffs_;
  long trunc_;
};

using RationalSeries = PuiseuxSeries<Rational>;
using QuadSeries = PuiseuxSeries<QuadElem>;

// Rational coefficients embed into any quadratic field.
inline QuadSeries to_quad_series(const RationalSeries& f) {
  std::map<long, QuadElem> m;
  for (const auto& [n, c] : f.terms()) m.emplace(n, QuadElem(c));
  return QuadSeries(f.den(), std::move(m), f.trunc_index());
}

// Extracts a rational series from one whose coefficients are all rational.
inline RationalSeries to_rational_series(const QuadSeries& f) {
  std::map<long, Rational> m;
  for (const auto& [n, c] : f.terms()) m.emplace(n, c.rational_value());
  return RationalSeries(f.den(), std::move(m), f.trunc_index());
}

}  // namespace qlift

#endif  // QLIFT_SERIES_HPP
