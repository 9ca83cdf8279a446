#include <doctest.h>

#include <random>
#include <sstream>

#include "qlift/series.hpp"

using namespace qlift;

namespace {

RationalSeries from_terms(long den, std::vector<std::pair<long, long>> terms, long trunc) {
  std::map<long, Rational> m;
  for (auto [e, c] : terms) m.emplace(e, Rational(c));
  return RationalSeries(den, std::move(m), trunc);
}

RationalSeries random_series(std::mt19937_64& rng, long den, long trunc) {
  std::uniform_int_distribution<long> expd(-8, trunc - 1);
  std::uniform_int_distribution<long> numd(-9, 9);
  std::uniform_int_distribution<long> dend(1, 5);
  std::map<long, Rational> m;
  for (int i = 0; i < 6; ++i) {
    Rational c = make_rational(numd(rng), dend(rng));
    if (c != 0) m[expd(rng)] = c;
  }
  return RationalSeries(den, std::move(m), trunc);
}

}  // namespace

TEST_CASE("monomial shift: (q^-1 + 10) q = 1 + 10q") {
  RationalSeries f = from_terms(1, {{-1, 1}, {0, 10}}, 40);
  RationalSeries q = RationalSeries::monomial(Rational(1), Rational(1));
  RationalSeries got = f * q;
  CHECK(got.coeff_at(Rational(0)) == Rational(1));
  CHECK(got.coeff_at(Rational(1)) == Rational(10));
  CHECK(got.coeff_at(Rational(2)) == Rational(0));
}

TEST_CASE("geometric series inverse") {
  RationalSeries f = from_terms(1, {{0, 1}, {1, -1}}, 12);  // 1 - q + O(q^12)
  RationalSeries inv = f.inverse();
  for (long n = 0; n < 12; ++n) CHECK(inv.coeff_at(Rational(n)) == Rational(1));
  CHECK((f * inv).coeff_at(Rational(0)) == Rational(1));
  CHECK((f * inv).coeff_at(Rational(5)) == Rational(0));
}

TEST_CASE("monomial inverse is exact") {
  RationalSeries q = RationalSeries::monomial(Rational(1), Rational(1));
  RationalSeries inv = q.inverse();
  CHECK(inv.is_exact());
  CHECK(inv.coeff_at(Rational(-1)) == Rational(1));
  CHECK_THROWS_AS(RationalSeries::zero().inverse(), domain_error);
  CHECK_THROWS_AS(from_terms(1, {{0, 1}, {1, 1}}, kExactSeries).inverse(), domain_error);
}

TEST_CASE("inverse contract f * inv(f) = 1 to the propagated truncation") {
  std::mt19937_64 rng(23);
  for (int i = 0; i < 200; ++i) {
    RationalSeries f = random_series(rng, 2, 14);
    if (f.known_zero()) continue;
    RationalSeries prod = f * f.inverse();
    RationalSeries defect = prod - RationalSeries::one();
    CHECK(defect.known_zero());
  }
}

TEST_CASE("rescale moves exponents and round-trips") {
  RationalSeries f = from_terms(1, {{-1, 1}, {3, -64}, {7, -513}}, 10);
  RationalSeries g = f.rescale(make_rational(1, 4));
  CHECK(g.coeff_at(make_rational(-1, 4)) == Rational(1));
  CHECK(g.coeff_at(make_rational(3, 4)) == Rational(-64));
  CHECK(g.coeff_at(make_rational(7, 4)) == Rational(-513));
  RationalSeries back = g.rescale(Rational(4));
  CHECK(compare_common(back, f).equal);
  CHECK(back.trunc_index() * f.den() == f.trunc_index() * back.den());

  std::mt19937_64 rng(29);
  for (int i = 0; i < 100; ++i) {
    RationalSeries h = random_series(rng, 3, 20);
    Rational c = make_rational(1 + static_cast<long>(rng() % 5), 1 + static_cast<long>(rng() % 5));
    RationalSeries round = h.rescale(c).rescale(Rational(1) / c);
    CHECK(compare_common(round, h).equal);
    CHECK(round.trunc_index() * h.den() == h.trunc_index() * round.den());
  }
}

TEST_CASE("rescale by 1 is the identity") {
  RationalSeries f = from_terms(3, {{1, 2}, {5, -7}}, 9);
  RationalSeries g = f.rescale(Rational(1));
  CHECK(g.den() == f.den());
  CHECK(compare_common(f, g).equal);
}

TEST_CASE("coefficient queries beyond the truncation are errors, not zeros") {
  RationalSeries f = from_terms(1, {{1, 3}}, 8);
  CHECK(f.coeff_at(Rational(7)) == Rational(0));
  CHECK_THROWS_AS(f.coeff_at(Rational(8)), precision_error);
  CHECK_THROWS_AS(f.coeff_at(Rational(1000000)), precision_error);
  CHECK(f.coeff_at(make_rational(3, 2)) == Rational(0));  // off-grid but inside
}

TEST_CASE("ring axioms on random truncated series") {
  std::mt19937_64 rng(31);
  for (int i = 0; i < 1000; ++i) {
    RationalSeries a = random_series(rng, 3, 12);
    RationalSeries b = random_series(rng, 3, 14);
    RationalSeries c = random_series(rng, 3, 11);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a * b == b * a);
    CHECK(a + b == b + a);
  }
}

TEST_CASE("truncation propagation is never optimistic") {
  std::mt19937_64 rng(37);
  for (int i = 0; i < 300; ++i) {
    RationalSeries a = random_series(rng, 2, 10);
    RationalSeries b = random_series(rng, 2, 12);
    // recompute at higher input precision: every coefficient below the
    // reported truncation of a*b must be unchanged
    RationalSeries a_hi(a.den(), std::map<long, Rational>(a.terms().begin(), a.terms().end()),
                        a.trunc_index() + 7);
    RationalSeries b_hi(b.den(), std::map<long, Rational>(b.terms().begin(), b.terms().end()),
                        b.trunc_index() + 7);
    RationalSeries lo = a * b;
    RationalSeries hi = a_hi * b_hi;
    CHECK(hi.trunc_index() >= lo.trunc_index());
    for (const auto& [n, c] : lo.terms()) CHECK(hi.coeff_at(make_rational(n, lo.den())) == c);
    for (const auto& [n, c] : hi.terms()) {
      if (n < lo.trunc_index()) CHECK(lo.coeff_at(make_rational(n, hi.den())) == c);
    }
  }
}

TEST_CASE("equality compares the common range and reports it") {
  RationalSeries a = from_terms(1, {{0, 1}, {2, 5}}, 10);
  RationalSeries b = from_terms(1, {{0, 1}, {2, 5}, {11, 9}}, 20);
  auto cmp = compare_common(a, b);
  CHECK(cmp.equal);
  CHECK(cmp.common_trunc == 10);
  RationalSeries c = from_terms(1, {{0, 1}, {2, 6}}, 10);
  CHECK_FALSE(compare_common(a, c).equal);
}

TEST_CASE("canonical dump format") {
  RationalSeries f = from_terms(4, {{-1, 1}, {3, -64}}, 12);
  std::ostringstream os;
  f.dump(os);
  CHECK(os.str() == "-1/4\t1\n3/4\t-64\nO(q^{3})\n");
  RationalSeries g = from_terms(2, {{-2, 1}, {0, 10}}, 8);
  std::ostringstream os2;
  g.dump(os2);  // den reduces to 1
  CHECK(os2.str() == "-1\t1\n0\t10\nO(q^{4})\n");
}

TEST_CASE("shift multiplies by a monomial exactly") {
  RationalSeries f = from_terms(1, {{-1, 1}, {0, 10}}, 6);
  RationalSeries g = f.shift(make_rational(3, 4));
  CHECK(g.coeff_at(make_rational(-1, 4)) == Rational(1));
  CHECK(g.coeff_at(make_rational(3, 4)) == Rational(10));
  CHECK(g.trunc_index() == g.den() * 6 + 3);
  RationalSeries h = f.shift(Rational(2)).shift(Rational(-2));
  CHECK(compare_common(f, h).equal);
}

TEST_CASE("quad coefficient series invert in the field") {
  std::map<long, QuadElem> m;
  m.emplace(0, QuadElem(Rational(1)));
  m.emplace(1, QuadElem(Rational(0), Rational(1), -3));  // 1 + sqrt(-3) q
  QuadSeries f(1, std::move(m), 6);
  QuadSeries prod = f * f.inverse();
  QuadSeries defect = prod - QuadSeries::one();
  CHECK(defect.known_zero());
  // coefficients alternate as powers of -sqrt(-3)
  CHECK(f.inverse().coeff_at(Rational(2)) == QuadElem(Rational(-3)));
}

TEST_CASE("quad coefficient series multiply in the field") {
  std::map<long, QuadElem> m1, m2;
  m1.emplace(0, QuadElem(Rational(0), make_rational(1, 3), -3));  // sqrt(-3)/3
  m2.emplace(0, QuadElem(Rational(0), Rational(1), -3));          // sqrt(-3)
  QuadSeries a(1, std::move(m1), 5), b(1, std::move(m2), 5);
  QuadSeries prod = a * b;
  CHECK(prod.coeff_at(Rational(0)) == QuadElem(Rational(-1)));
}
