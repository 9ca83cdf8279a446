#include "qlift/lift.hpp"

#include <algorithm>
#include <atomic>
#include <mutex>
#include <set>
#include <thread>

#include "qlift/eta.hpp"

namespace qlift {

namespace {

constexpr long kFingerprintBits = 192;

// 10^-20, the relative fingerprint tolerance for class deduplication.
BigFloat fingerprint_tol(long prec) {
  return BigFloat::of(make_rational(Integer(1), pow(Integer(10), 20)), prec);
}

bool close_rel(const BigComplex& x, const BigComplex& y, const BigFloat& tol) {
  BigFloat dist = (x - y).abs();
  BigFloat scale = y.abs();
  BigFloat one = BigFloat::of(1, tol.prec());
  if (scale < one) scale = one;
  return dist < tol * scale;
}

struct HeegnerCache {
  std::mutex mu;
  std::map<std::tuple<long, long, long>, HeegnerClass> classes;
  std::map<std::tuple<long, long, long>, Polynomial> minpolys;
};

HeegnerCache& heegner_cache() {
  static HeegnerCache cache;
  return cache;
}

HeegnerClass enumerate_heegner(long D, long r, long float_bits) {
  if (D >= 0 || (((D % 4) + 4) % 4 != 0 && ((D % 4) + 4) % 4 != 1))
    throw domain_error("not a negative discriminant: " + std::to_string(D));
  if ((((D - r * r) % 12) + 12) % 12 != 0)
    throw domain_error("discriminant " + std::to_string(D) + " is not a square of " +
                       std::to_string(r) + " mod 12");
  long target = form_class_count(D);
  long fp_bits = std::max(float_bits, kFingerprintBits);
  BigFloat tol = fingerprint_tol(fp_bits);

  HeegnerClass out{D, r, {}, {}};
  std::vector<BigComplex> values;
  long a_cap = 12 * (-D) + 36;
  for (long a = 3; a <= a_cap && static_cast<long>(out.forms.size()) < target; a += 3) {
    // b runs over a full period of b mod lcm(2a, 6) within the congruence
    // class r mod 6; translations z -> z+1 make larger |b| redundant.  Small
    // |b| first, so the kept representative is the tidy one.
    long span = 3 * a + 6;
    long b0 = -span + (((r + span) % 6) + 6) % 6;  // smallest b >= -span with b = r mod 6
    std::vector<long> b_candidates;
    for (long b = b0; b <= span; b += 6) b_candidates.push_back(b);
    std::sort(b_candidates.begin(), b_candidates.end(), [](long x, long y) {
      return std::labs(x) != std::labs(y) ? std::labs(x) < std::labs(y) : x > y;
    });
    for (long b : b_candidates) {
      if ((((b * b - D) % (4 * a)) + 4 * a) % (4 * a) != 0) continue;
      long c = (b * b - D) / (4 * a);
      if (c < 1) continue;
      CMPoint pt(a, b, D);
      BigComplex v = eval_j3(pt, fp_bits);
      bool seen = false;
      for (const auto& w : values) {
        if (close_rel(v, w, tol)) {
          seen = true;
          break;
        }
      }
      if (seen) continue;
      values.push_back(v);
      out.forms.push_back({a, b, c});
      out.points.push_back(pt);
      if (static_cast<long>(out.forms.size()) == target) break;
    }
  }
  if (static_cast<long>(out.forms.size()) != target)
    throw domain_error("Heegner enumeration for (" + std::to_string(D) + "," + std::to_string(r) +
                       ") found " + std::to_string(out.forms.size()) + " of " +
                       std::to_string(target) + " classes");
  return out;
}

// Real-coefficient polynomial product helpers for class polynomials.
std::vector<BigFloat> poly_mul_real(const std::vector<BigFloat>& p, const std::vector<BigFloat>& q,
                                    long prec) {
  std::vector<BigFloat> out(p.size() + q.size() - 1, BigFloat::of(0, prec));
  for (std::size_t i = 0; i < p.size(); ++i) {
    for (std::size_t j = 0; j < q.size(); ++j) out[i + j] = out[i + j] + p[i] * q[j];
  }
  return out;
}

Polynomial round_class_polynomial(const std::vector<BigComplex>& roots, long prec) {
  std::vector<BigFloat> acc{BigFloat::of(1, prec)};
  BigFloat tol = fingerprint_tol(prec);
  std::vector<const BigComplex*> upper;
  long reals = 0;
  for (const auto& v : roots) {
    BigFloat one = BigFloat::of(1, prec);
    BigFloat s = v.abs();
    if (s < one) s = one;
    if (v.im.abs() < tol * s) {
      acc = poly_mul_real(acc, {-v.re, BigFloat::of(1, prec)}, prec);
      ++reals;
    } else if (v.im.sign() > 0) {
      acc = poly_mul_real(acc, {v.norm(), -(v.re + v.re), BigFloat::of(1, prec)}, prec);
      upper.push_back(&v);
    }
  }
  if (reals + 2 * static_cast<long>(upper.size()) != static_cast<long>(roots.size()))
    throw precision_error("class polynomial roots do not pair into conjugates");
  std::vector<Rational> coeffs;
  coeffs.reserve(acc.size());
  BigFloat max_dist = BigFloat::of(0, prec);
  for (const auto& c : acc) {
    BigFloat d = c.distance_to_integer();
    if (max_dist < d) max_dist = d;
    coeffs.emplace_back(c.round_to_integer());
  }
  if (!(max_dist < BigFloat::two_pow(-prec / 4, prec)))
    throw precision_error("class polynomial rounding residual too large; raise float precision");
  return Polynomial(std::move(coeffs));
}

}  // namespace

long form_class_count(long D) {
  if (D >= 0) throw domain_error("discriminant must be negative");
  long rem = ((D % 4) + 4) % 4;
  if (rem != 0 && rem != 1) throw domain_error("not a discriminant mod 4: " + std::to_string(D));
  long count = 0;
  for (long a = 1; 3 * a * a <= -D; ++a) {
    for (long b = -a + 1; b <= a; ++b) {
      if ((((b - D) % 2) + 2) % 2 != 0) continue;  // b = D mod 2
      long num = b * b - D;
      if (num % (4 * a) != 0) continue;
      long c = num / (4 * a);
      if (c < a) continue;
      if (b < 0 && (c == a)) continue;  // reduced: b >= 0 when a = c
      ++count;
    }
  }
  return count;
}

HeegnerClass heegner_points(long D, long r, long float_bits) {
  long fp_bits = std::max(float_bits, kFingerprintBits);
  auto key = std::make_tuple(D, r, fp_bits);
  HeegnerCache& cache = heegner_cache();
  {
    std::scoped_lock lock(cache.mu);
    auto it = cache.classes.find(key);
    if (it != cache.classes.end()) return it->second;
  }
  HeegnerClass fresh = enumerate_heegner(D, r, float_bits);
  std::scoped_lock lock(cache.mu);
  return cache.classes.emplace(key, std::move(fresh)).first->second;
}

Polynomial minimal_poly_j3(long D, long r, long float_bits) {
  auto key = std::make_tuple(D, r, float_bits);
  HeegnerCache& cache = heegner_cache();
  {
    std::scoped_lock lock(cache.mu);
    auto it = cache.minpolys.find(key);
    if (it != cache.minpolys.end()) return it->second;
  }
  HeegnerClass plus = heegner_points(D, r, float_bits);
  HeegnerClass minus = heegner_points(D, -r, float_bits);
  BigFloat tol = fingerprint_tol(float_bits);
  std::vector<BigComplex> roots;
  for (const HeegnerClass* cls : {&plus, &minus}) {
    for (const auto& pt : cls->points) {
      BigComplex v = eval_j3(pt, float_bits);
      bool seen = false;
      for (const auto& w : roots) {
        if (close_rel(v, w, tol)) {
          seen = true;
          break;
        }
      }
      if (!seen) roots.push_back(v);
    }
  }
  Polynomial poly = round_class_polynomial(roots, float_bits);
  std::scoped_lock lock(cache.mu);
  return cache.minpolys.emplace(key, std::move(poly)).first->second;
}

RationalSeries lift_expansion(const VectorValuedSeries<Rational>& f, long terms,
                              int divisor_exponent) {
  if (f.modulus() != 6) throw domain_error("lift expects a Z/6-valued form");
  std::map<long, Rational> out;
  for (long n = 1; n <= terms; ++n) {
    Rational b(0);
    for (long d = 1; d <= n; ++d) {
      if (n % d != 0) continue;
      long mu = d % 6;
      if (mu == 0 || mu == 3) continue;  // those components vanish identically
      Rational c = f.component(mu).coeff_at(make_rational(d * d, 12));
      if (c == 0) continue;
      Integer factor = pow(Integer(n / d), static_cast<unsigned long>(divisor_exponent));
      b += Rational(factor) * c;
    }
    if (b != 0) out.emplace(n, std::move(b));
  }
  return RationalSeries(1, std::move(out), terms + 1);
}

std::vector<PoleDatum> pole_data(const VectorValuedSeries<Rational>& f) {
  if (f.modulus() != 6) throw domain_error("pole data expects a Z/6-valued form");
  if (12 % f.den() != 0) throw domain_error("pole data expects exponents on the 1/12 grid");
  long scale = 12 / f.den();
  std::set<std::pair<long, long>> seen;
  for (long mu = 0; mu < 6; ++mu) {
    for (const auto& [n, c] : f.component(mu).terms()) {
      if (n >= 0) break;
      long D = n * scale;  // exponent -|D|/12
      long r = std::min(mu, 6 - mu);
      seen.emplace(D, r);
    }
  }
  std::vector<PoleDatum> out;
  for (const auto& [D, r] : seen) out.push_back({D, r, 3});
  std::sort(out.begin(), out.end(),
            [](const PoleDatum& x, const PoleDatum& y) {
              return x.D != y.D ? x.D < y.D : x.r < y.r;
            });
  return out;
}

Identification identify_rational(const RationalSeries& lift, const std::vector<PoleDatum>& poles,
                                 long float_bits) {
  if (lift.den() != 1) throw domain_error("lift series should have integer exponents");
  Polynomial b_poly = Polynomial::constant(Rational(1));
  for (const auto& pd : poles) {
    Polynomial mp = minimal_poly_j3(pd.D, pd.r, float_bits);
    b_poly = b_poly * mp.pow(static_cast<unsigned long>(pd.order));
  }
  long deg_b = std::max<long>(b_poly.degree(), 0);
  long t_known = lift.trunc_index() - 1;  // largest known exponent
  if (t_known < deg_b + 2)
    throw precision_error("lift series too short to identify: need " +
                          std::to_string(deg_b + 2) + " coefficients, have " +
                          std::to_string(t_known));

  long work = lift.trunc_index() + 6;
  RationalSeries j3 = named_form(NamedForm::J3, work);
  RationalSeries half_delta3 = named_form(NamedForm::Delta3, work) * make_rational(1, 2);
  RationalSeries quotient = lift * half_delta3.inverse();

  std::vector<RationalSeries> pows;
  pows.reserve(deg_b + 1);
  pows.push_back(RationalSeries::one());
  for (long i = 1; i <= deg_b; ++i) pows.push_back(pows.back() * j3);

  RationalSeries b_of_j3;
  for (long k = 0; k <= b_poly.degree(); ++k) {
    Rational bk = b_poly.coeff(static_cast<std::size_t>(k));
    if (bk != 0) b_of_j3 = b_of_j3 + pows[k] * bk;
  }
  RationalSeries g = quotient * b_of_j3;

  std::vector<Rational> a_coeffs(deg_b + 1, Rational(0));
  RationalSeries rem = g;
  for (long i = deg_b; i >= 0; --i) {
    Rational ai = rem.coeff_at(Rational(-i));
    a_coeffs[static_cast<std::size_t>(i)] = ai;
    if (ai != 0) rem = rem - pows[i] * ai;
  }
  if (!rem.known_zero()) {
    auto first = rem.terms().begin();
    throw identification_error(
        "lift is not Delta3 * A(j3)/B(j3): residual at q^(" +
            to_string(make_rational(first->first, rem.den())) + ") is " +
            to_string(first->second),
        first->first, rem.den());
  }
  Polynomial a_poly(std::move(a_coeffs));
  if (!lift.known_zero() && a_poly.degree() < deg_b)
    throw identification_error("leading lift behavior inconsistent: deg A < deg B", 0, 1);
  long checked = std::max<long>(rem.trunc_index(), 0);
  return Identification{std::move(a_poly), std::move(b_poly), checked};
}

namespace {

struct LiftPlan {
  Rational m;
  std::vector<PoleDatum> poles;
  long t_lift, basis_terms, f_terms, j_work;
};

// The small pass: the principal part alone fixes the pole data, hence deg B
// and every working truncation of the full run.
LiftPlan make_plan(const Rational& m, const LiftOptions& opts) {
  BasisForm small = basis_fm(m, 4);
  VectorValuedSeries<Rational> f_small = kohnen_split(16);
  std::vector<PoleDatum> poles = pole_data(tensor(small.form, f_small));

  long deg_b = 0;
  for (const auto& pd : poles)
    deg_b += pd.order * minimal_poly_j3(pd.D, pd.r, opts.float_bits).degree();

  long t_lift = std::max(deg_b + 2 + opts.residual_window, opts.lift_terms);
  long tensor_exp = (t_lift * t_lift + 11) / 12 + 1;  // need c(d^2/12) through d = t_lift
  Integer mc;
  mpz_cdiv_q(mc.get_mpz_t(), m.get_num().get_mpz_t(), m.get_den().get_mpz_t());
  long m_ceil = to_long(mc);
  long basis_terms = tensor_exp + m_ceil + 2;
  long n_basis = to_long(Rational(m + make_rational(1, 3)).get_num());
  return LiftPlan{m, std::move(poles), t_lift, basis_terms,
                  4 * (tensor_exp + m_ceil + 2) + 6, basis_terms + n_basis + 4};
}

LiftRun run_plan(const LiftPlan& plan, const LiftOptions& opts) {
  BasisForm bf = basis_fm(plan.m, plan.basis_terms);
  VectorValuedSeries<Rational> fv = kohnen_split(plan.f_terms);
  VectorValuedSeries<Rational> tens = tensor(bf.form, fv);
  RationalSeries lift = lift_expansion(tens, plan.t_lift, opts.divisor_exponent);
  Identification ident = identify_rational(lift, plan.poles, opts.float_bits);

  Rational b_val = ident.b.eval(Rational(-27));
  if (b_val == 0) throw pole_error("B(-27) vanishes");
  Rational at_cm = ident.a.eval(Rational(-27)) / b_val;
  return LiftRun{plan.m,           bf.p,  plan.poles, std::move(lift),
                 std::move(ident), at_cm};
}

}  // namespace

LiftRun run_lift_pipeline(const Rational& m, const LiftOptions& opts) {
  return run_plan(make_plan(m, opts), opts);
}

MockCoefficientTable mock_coefficients(const Rational& m_max, const LiftOptions& opts) {
  if (!is_integer(m_max - make_rational(2, 3)) || m_max < make_rational(2, 3))
    throw domain_error("mock table needs m_max = 2/3 mod 1, m_max >= 2/3");
  std::vector<LiftPlan> plans;
  for (Rational m = make_rational(2, 3); m <= m_max; m += 1) plans.push_back(make_plan(m, opts));

  MockCoefficientTable table;
  table.entries.emplace(make_rational(-1, 3), Rational(1));  // normalization

  std::vector<Rational> results(plans.size(), Rational(0));
  std::exception_ptr failure;
  std::mutex failure_mu;
  auto worker = [&](std::size_t idx) {
    try {
      results[idx] = run_plan(plans[idx], opts).value_at_cm;
    } catch (...) {
      std::scoped_lock lock(failure_mu);
      if (!failure) failure = std::current_exception();
    }
  };

  if (opts.parallel && plans.size() > 1) {
    // Warm the shared expansions at the largest sizes up front so workers
    // only read the caches; the merge below is keyed by m and deterministic.
    long max_j = 0, max_f = 0, max_lift = 0;
    for (const auto& p : plans) {
      max_j = std::max(max_j, p.j_work);
      max_f = std::max(max_f, p.f_terms);
      max_lift = std::max(max_lift, p.t_lift);
    }
    named_form(NamedForm::J, max_j);
    eta_quotient(parse_eta_spec("1^8"), max_j);
    named_form(NamedForm::F, max_f);
    named_form(NamedForm::J3, max_lift + 7);
    named_form(NamedForm::Delta3, max_lift + 7);
    unsigned hw = std::max(1u, std::thread::hardware_concurrency());
    std::vector<std::size_t> order(plans.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = order.size() - 1 - i;
    std::atomic<std::size_t> next{0};
    auto pump = [&] {
      for (std::size_t k = next.fetch_add(1); k < order.size(); k = next.fetch_add(1))
        worker(order[k]);
    };
    std::vector<std::thread> threads;
    for (unsigned t = 1; t < std::min<unsigned>(hw, plans.size()); ++t)
      threads.emplace_back(pump);
    pump();
    for (auto& t : threads) t.join();
  } else {
    for (std::size_t i = 0; i < plans.size(); ++i) worker(i);
  }
  if (failure) std::rethrow_exception(failure);

  for (std::size_t i = 0; i < plans.size(); ++i) table.entries.emplace(plans[i].m, results[i]);
  return table;
}

ScalarPreimage scalar_preimage(const MockCoefficientTable& table) {
  if (table.entries.empty()) throw domain_error("empty coefficient table");
  Rational quarter = make_rational(1, 4);
  std::map<long, Rational> terms;
  Rational m_max(0);
  for (const auto& [m, r] : table.entries) {
    Rational e = m * 3;
    if (!is_integer(e)) throw domain_error("table index " + to_string(m) + " is not 2/3 mod 1");
    Rational v = r * quarter;
    if (v != 0) terms.emplace(to_long(e.get_num()), v);
    if (m > m_max) m_max = m;
  }
  long top = to_long(Rational(m_max * 3).get_num());
  RationalSeries series(1, std::move(terms), top + 1);

  // Reference values of the good xi-preimage this construction is compared
  // against: preimage + (3/4) w must reproduce them.
  const std::vector<std::pair<long, Rational>> reference = {
      {-1, Rational(1)},
      {2, make_rational(-1, 4)},
      {5, make_rational(49, 125)},
      {8, make_rational(-48, 512)},
      {11, make_rational(-771, 1331)},
      {14, make_rational(2744, 2744)},
  };
  RationalSeries w = named_form(NamedForm::W, top + 4);
  Rational three_quarters = make_rational(3, 4);
  std::vector<BorRow> report;
  for (const auto& [e, expected] : reference) {
    if (e > top) continue;
    Rational got = series.coeff_at(Rational(e)) + three_quarters * w.coeff_at(Rational(e));
    report.push_back({e, expected, got, got == expected});
  }
  return ScalarPreimage{std::move(series), std::move(report)};
}

}  // namespace qlift
