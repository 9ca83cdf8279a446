#include "qlift/eta.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>

namespace qlift {

namespace {

// Signed pentagonal exponents of E(q^m) = prod(1 - q^(m n)): pairs
// (m*k(3k-1)/2, (-1)^k) for k != 0, ascending, below `limit`.
std::vector<std::pair<long, int>> pentagonal_terms(long m, long limit) {
  std::vector<std::pair<long, int>> out;
  for (long k = 1;; ++k) {
    long e1 = m * (k * (3 * k - 1) / 2);
    long e2 = m * (k * (3 * k + 1) / 2);
    int sign = (k % 2 == 0) ? 1 : -1;
    if (e1 < limit) out.emplace_back(e1, sign);
    if (e2 < limit) out.emplace_back(e2, sign);
    if (e1 >= limit && e2 >= limit) break;
  }
  std::sort(out.begin(), out.end());
  return out;
}

using Dense = std::vector<Integer>;  // c[i] = coefficient of q^i

// In-place multiply by E(q^m), truncated below limit = c.size().
void mul_euler(Dense& c, long m) {
  long limit = static_cast<long>(c.size());
  auto pent = pentagonal_terms(m, limit);
  for (long n = limit - 1; n >= 0; --n) {
    for (const auto& [p, s] : pent) {
      if (p > n) break;
      if (s > 0)
        c[n] += c[n - p];
      else
        c[n] -= c[n - p];
    }
  }
}

// In-place divide by E(q^m): solves out * E = in coefficient by coefficient.
void div_euler(Dense& c, long m) {
  long limit = static_cast<long>(c.size());
  auto pent = pentagonal_terms(m, limit);
  for (long n = 0; n < limit; ++n) {
    for (const auto& [p, s] : pent) {
      if (p > n) break;
      if (s > 0)
        c[n] -= c[n - p];
      else
        c[n] += c[n - p];
    }
  }
}

Dense dense_mul(const Dense& a, const Dense& b, long limit) {
  Dense out(limit, Integer(0));
  for (long i = 0; i < static_cast<long>(a.size()) && i < limit; ++i) {
    if (a[i] == 0) continue;
    long jmax = std::min<long>(b.size(), limit - i);
    for (long j = 0; j < jmax; ++j) {
      if (b[j] != 0) out[i + j] += a[i] * b[j];
    }
  }
  return out;
}

// Euler-product part of an eta quotient: prod E(q^m)^r, a unit power series.
Dense euler_product(const std::vector<std::pair<long, long>>& factors, long limit) {
  Dense c(limit, Integer(0));
  c[0] = 1;
  for (const auto& [m, r] : factors) {
    for (long i = 0; i < std::labs(r); ++i) {
      if (r > 0)
        mul_euler(c, m);
      else
        div_euler(c, m);
    }
  }
  return c;
}

RationalSeries dense_to_series(const Dense& c, long val24) {
  // exponents (val24 + 24 i)/24, reduced to the minimal grid
  long g = std::gcd(std::labs(val24), 24L);
  long den = 24 / g;
  std::map<long, Rational> terms;
  for (long i = 0; i < static_cast<long>(c.size()); ++i) {
    if (c[i] != 0) terms.emplace((val24 + 24 * i) / g, Rational(c[i]));
  }
  long trunc = (val24 + 24 * static_cast<long>(c.size())) / g;
  return RationalSeries(den, std::move(terms), trunc);
}

struct FormCache {
  std::mutex mu;
  std::map<std::string, std::pair<long, RationalSeries>> entries;  // key -> (terms, series)
};

FormCache& form_cache() {
  static FormCache cache;
  return cache;
}

std::string spec_key(const EtaQuotientSpec& spec) {
  std::string key = "eta:";
  for (const auto& [m, r] : spec.factors)
    key += std::to_string(m) + "^" + std::to_string(r) + "*";
  return key;
}

RationalSeries compute_eta_quotient(const EtaQuotientSpec& spec, long terms) {
  long val24 = 0;
  for (const auto& [m, r] : spec.factors) val24 += m * r;
  Dense c = euler_product(spec.factors, terms);
  return dense_to_series(c, val24);
}

RationalSeries compute_j(long terms) {
  // j = E4^3 / Delta with Delta = q E(q)^24; exact below q^(terms - 1).
  long limit = terms;
  Dense e4(limit, Integer(0));
  e4[0] = 1;
  for (long d = 1; d < limit; ++d) {
    Integer d3 = Integer(d) * d * d * 240;
    for (long n = d; n < limit; n += d) e4[n] += d3;
  }
  Dense e43 = dense_mul(dense_mul(e4, e4, limit), e4, limit);
  for (int i = 0; i < 24; ++i) div_euler(e43, 1);
  return dense_to_series(e43, -24);
}

RationalSeries compute_named(NamedForm form, long terms) {
  switch (form) {
    case NamedForm::Eta8:
      return compute_eta_quotient({{{3, 8}}}, terms);
    case NamedForm::Delta3:
      return compute_eta_quotient({{{1, 6}, {3, 6}}}, terms);
    case NamedForm::J3:
      return compute_eta_quotient({{{1, 12}, {3, -12}}}, terms);
    case NamedForm::J:
      return compute_j(terms);
    case NamedForm::F: {
      // valuations -1 and 0; the sum is exact below -1 + terms
      RationalSeries a = compute_eta_quotient({{{1, 10}, {2, -5}, {4, -6}}}, terms);
      RationalSeries b = compute_eta_quotient({{{1, 2}, {2, -5}, {4, 2}}}, terms);
      return a + b * Rational(20);
    }
    case NamedForm::W: {
      // valuations -1, 0, 1; exact below -1 + terms
      RationalSeries a = compute_eta_quotient({{{3, 2}, {1, -3}, {9, -3}}}, terms);
      RationalSeries b = compute_eta_quotient({{{1, 3}, {9, 3}, {3, -10}}}, terms);
      RationalSeries c = compute_eta_quotient({{{9, 6}, {3, -10}}}, terms);
      return a - b * Rational(3) - c * Rational(18);
    }
  }
  throw domain_error("unknown named form");
}

// Valuation of each named form; its expansion is exact below val + terms.
Rational named_valuation(NamedForm form) {
  switch (form) {
    case NamedForm::F:
    case NamedForm::J:
    case NamedForm::J3:
    case NamedForm::W:
      return Rational(-1);
    case NamedForm::Delta3:
    case NamedForm::Eta8:
      return Rational(1);
  }
  throw domain_error("unknown named form");
}

}  // namespace

Rational EtaQuotientSpec::valuation() const {
  long val24 = 0;
  for (const auto& [m, r] : factors) val24 += m * r;
  return make_rational(val24, 24);
}

EtaQuotientSpec parse_eta_spec(std::string_view text) {
  EtaQuotientSpec spec;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t star = text.find('*', pos);
    std::string_view part = text.substr(pos, star == std::string_view::npos ? star : star - pos);
    std::size_t caret = part.find('^');
    try {
      long m = std::stol(std::string(part.substr(0, caret)));
      long r = caret == std::string_view::npos ? 1 : std::stol(std::string(part.substr(caret + 1)));
      spec.factors.emplace_back(m, r);
    } catch (const std::exception&) {
      throw domain_error("cannot parse eta spec: '" + std::string(text) + "'");
    }
    if (star == std::string_view::npos) break;
    pos = star + 1;
  }
  if (spec.factors.empty() && !text.empty())
    throw domain_error("cannot parse eta spec: '" + std::string(text) + "'");
  for (std::size_t i = 0; i < spec.factors.size(); ++i) {
    if (spec.factors[i].first < 1) throw domain_error("eta multiplier must be positive");
    for (std::size_t j = i + 1; j < spec.factors.size(); ++j) {
      if (spec.factors[i].first == spec.factors[j].first)
        throw domain_error("eta multipliers must be distinct");
    }
  }
  return spec;
}

RationalSeries eta_quotient(const EtaQuotientSpec& spec, long terms) {
  if (terms < 1) throw domain_error("eta quotient needs at least one term");
  if (spec.factors.empty()) return RationalSeries::one();
  FormCache& cache = form_cache();
  std::string key = spec_key(spec);
  std::scoped_lock lock(cache.mu);
  auto it = cache.entries.find(key);
  if (it == cache.entries.end() || it->second.first < terms) {
    RationalSeries fresh = compute_eta_quotient(spec, terms);
    cache.entries.insert_or_assign(key, std::make_pair(terms, fresh));
    return fresh;
  }
  // Truncate the cached larger expansion to what a direct computation at
  // `terms` would know; bit-identical by construction.
  return it->second.second.truncated(spec.valuation() + terms);
}

NamedForm named_form_from_string(std::string_view name) {
  if (name == "F") return NamedForm::F;
  if (name == "j") return NamedForm::J;
  if (name == "j3") return NamedForm::J3;
  if (name == "Delta3") return NamedForm::Delta3;
  if (name == "w") return NamedForm::W;
  if (name == "eta8") return NamedForm::Eta8;
  throw domain_error("unknown form name: '" + std::string(name) + "'");
}

std::string to_string(NamedForm form) {
  switch (form) {
    case NamedForm::F: return "F";
    case NamedForm::J: return "j";
    case NamedForm::J3: return "j3";
    case NamedForm::Delta3: return "Delta3";
    case NamedForm::W: return "w";
    case NamedForm::Eta8: return "eta8";
  }
  return "?";
}

RationalSeries named_form(NamedForm form, long terms) {
  if (terms < 1) throw domain_error("named form needs at least one term");
  FormCache& cache = form_cache();
  std::string key = "named:" + to_string(form);
  std::scoped_lock lock(cache.mu);
  auto it = cache.entries.find(key);
  if (it == cache.entries.end() || it->second.first < terms) {
    RationalSeries fresh = compute_named(form, terms);
    cache.entries.insert_or_assign(key, std::make_pair(terms, fresh));
    return fresh;
  }
  // Truncate the cached deeper expansion to exactly what a direct run at
  // `terms` would know; the memo stays observationally pure.
  return it->second.second.truncated(named_valuation(form) + terms);
}

RationalSeries named_form_uncached(NamedForm form, long terms) {
  if (terms < 1) throw domain_error("named form needs at least one term");
  return compute_named(form, terms);
}

RationalSeries eisenstein_e4(long terms) {
  if (terms < 1) throw domain_error("E4 needs at least one term");
  std::map<long, Rational> m;
  m.emplace(0, Rational(1));
  for (long d = 1; d < terms; ++d) {
    Integer d3 = Integer(d) * d * d * 240;
    for (long n = d; n < terms; n += d) {
      auto it = m.find(n);
      if (it == m.end())
        m.emplace(n, Rational(d3));
      else
        it->second += Rational(d3);
    }
  }
  return RationalSeries(1, std::move(m), terms);
}

}  // namespace qlift
