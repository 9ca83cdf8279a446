#include <doctest.h>

#include "qlift/eta.hpp"

using namespace qlift;

namespace {
void check_coeffs(const RationalSeries& s, const std::vector<std::pair<long, long>>& expected) {
  for (auto [e, c] : expected) {
    CAPTURE(e);
    CHECK(s.coeff_at(Rational(e)) == Rational(c));
  }
}
}  // namespace

TEST_CASE("eta(3z)^8 matches the newform expansion") {
  RationalSeries s = eta_quotient(parse_eta_spec("3^8"), 30);
  check_coeffs(s, {{1, 1}, {4, -8}, {7, 20}, {13, -70}, {16, 64}, {19, 56}});
  CHECK(s.coeff_at(Rational(2)) == Rational(0));
  CHECK(s.coeff_at(Rational(10)) == Rational(0));
}

TEST_CASE("the Hauptmodul j3") {
  RationalSeries s = eta_quotient(parse_eta_spec("1^12*3^-12"), 10);
  check_coeffs(s, {{-1, 1}, {0, -12}, {1, 54}, {2, -76}, {3, -243}, {4, 1188}, {5, -1384},
                   {6, -2916}});
}

TEST_CASE("empty spec expands to 1") {
  RationalSeries s = eta_quotient(EtaQuotientSpec{}, 10);
  CHECK(s.is_exact());
  CHECK(s.coeff_at(Rational(0)) == Rational(1));
}

TEST_CASE("valuation of an eta quotient is sum of m r / 24") {
  for (const char* text : {"1^8", "3^8", "1^12*3^-12", "1^10*2^-5*4^-6", "1^6*3^6",
                           "3^2*1^-3*9^-3"}) {
    EtaQuotientSpec spec = parse_eta_spec(text);
    RationalSeries s = eta_quotient(spec, 12);
    REQUIRE(s.valuation().has_value());
    CHECK(*s.valuation() == spec.valuation());
  }
}

TEST_CASE("F is the plus-space form q^-1 + 10 + ...") {
  RationalSeries f = named_form(NamedForm::F, 16);
  check_coeffs(f, {{-1, 1}, {0, 10}, {3, -64}, {4, 108}, {7, -513}, {8, 808}, {11, -2752},
                   {12, 4016}});
}

TEST_CASE("F is supported on indices 0 and 3 mod 4") {
  RationalSeries f = named_form(NamedForm::F, 60);
  for (const auto& [e, c] : f.terms()) {
    long r = ((e % 4) + 4) % 4;
    CHECK((r == 0 || r == 3));
  }
}

TEST_CASE("w is the weight -2 level 9 difference form") {
  RationalSeries w = named_form(NamedForm::W, 20);
  check_coeffs(w, {{-1, 1}, {2, 20}, {5, 176}, {8, 1020}, {11, 4794}, {14, 19360}});
}

TEST_CASE("Delta3 begins q - 6q^2 + 9q^3 + 4q^4 + 6q^5") {
  RationalSeries d3 = named_form(NamedForm::Delta3, 8);
  check_coeffs(d3, {{1, 1}, {2, -6}, {3, 9}, {4, 4}, {5, 6}});
}

TEST_CASE("j has the classical expansion") {
  RationalSeries j = named_form(NamedForm::J, 6);
  check_coeffs(j, {{-1, 1}, {0, 744}, {1, 196884}, {2, 21493760}});
}

TEST_CASE("j Delta = E4^3 to the working truncation") {
  long t = 40;
  RationalSeries j = named_form(NamedForm::J, t);
  RationalSeries delta = eta_quotient(parse_eta_spec("1^24"), t);
  RationalSeries e43 = eisenstein_e4(t);
  e43 = e43 * e43 * eisenstein_e4(t);
  CHECK(compare_common(j * delta, e43).equal);
}

TEST_CASE("eta8 = q^{1/3}(1 - 8q + 20q^2 + ...) on the third-integer grid") {
  RationalSeries s = eta_quotient(parse_eta_spec("1^8"), 10);
  CHECK(s.den() == 3);
  CHECK(s.coeff_at(make_rational(1, 3)) == Rational(1));
  CHECK(s.coeff_at(make_rational(4, 3)) == Rational(-8));
  CHECK(s.coeff_at(make_rational(7, 3)) == Rational(20));
  CHECK(s.coeff_at(make_rational(10, 3)) == Rational(0));
  CHECK(s.coeff_at(make_rational(13, 3)) == Rational(-70));
}

TEST_CASE("rescaling eta(3z)^8 by 1/3 gives eta(z)^8") {
  RationalSeries direct = eta_quotient(parse_eta_spec("1^8"), 20);
  RationalSeries rescaled = eta_quotient(parse_eta_spec("3^8"), 60).rescale(make_rational(1, 3));
  auto cmp = compare_common(direct, rescaled);
  CHECK(cmp.equal);
  CHECK(cmp.common_trunc >= 18 * cmp.den);
}

TEST_CASE("coefficient queries on F: stored, plus-space zero, and beyond") {
  RationalSeries f = named_form(NamedForm::F, 20);
  CHECK(f.coeff_at(Rational(4)) == Rational(108));
  CHECK(f.coeff_at(Rational(2)) == Rational(0));  // index 2 mod 4 is absent
  CHECK_THROWS_AS(f.coeff_at(Rational(1000000)), precision_error);
}

TEST_CASE("named form memo is observationally pure") {
  RationalSeries big = named_form(NamedForm::J3, 50);
  RationalSeries small = named_form(NamedForm::J3, 7);
  RationalSeries fresh = named_form_uncached(NamedForm::J3, 7);
  CHECK(small.trunc_index() == fresh.trunc_index());
  CHECK(small.den() == fresh.den());
  CHECK(compare_common(small, fresh).equal);
  CHECK(compare_common(big, fresh).equal);
}

TEST_CASE("eta spec parsing and validation") {
  EtaQuotientSpec spec = parse_eta_spec("1^10*2^-5*4^-6");
  REQUIRE(spec.factors.size() == 3);
  CHECK(spec.factors[1] == std::pair<long, long>{2, -5});
  CHECK(spec.valuation() == Rational(-1));
  CHECK_THROWS_AS(parse_eta_spec("junk"), domain_error);
  CHECK_THROWS_AS(parse_eta_spec("2^3*2^4"), domain_error);
  CHECK_THROWS_AS(parse_eta_spec("0^3"), domain_error);
  CHECK_THROWS_AS(named_form_from_string("nope"), domain_error);
}
