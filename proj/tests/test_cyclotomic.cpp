#include <doctest.h>

#include <cmath>

#include "crysref/cyclotomic.hpp"
#include "crysref/errors.hpp"
#include "crysref/scalar_parse.hpp"

using namespace crysref;

namespace {
CycloNum w() { return CycloNum::zeta(3); }
CycloNum i4() { return CycloNum::zeta(4); }
}  // namespace

TEST_CASE("integer and rational basics") {
  Integer big("123456789012345678901234567890");
  CHECK((big * Integer(2)).to_string() == "246913578024691357802469135780");
  CHECK(gcd(Integer(12), Integer(18)) == Integer(6));
  CHECK(floor_div(Integer(-7), Integer(2)) == Integer(-4));
  Rational r(Integer(6), Integer(-4));
  CHECK(r.to_string() == "-3/2");
  CHECK(r.den() == Integer(2));
  CHECK(Rational("5/10") == Rational(Integer(1), Integer(2)));
  CHECK_THROWS_AS(Rational(1) / Rational(0), Error);
}

TEST_CASE("arithmetic examples") {
  CHECK(w() + w() * w() == CycloNum(-1));
  CHECK((CycloNum(1) - w()) * (CycloNum(1) - conj(w())) == CycloNum(3));
  CHECK(i4() / i4() == CycloNum(1));
  CHECK(i4() * i4() == CycloNum(-1));
  try {
    (void)(i4() / CycloNum(0));
    FAIL("expected DivisionByZero");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::DivisionByZero);
  }
}

TEST_CASE("mixed orders coerce to the lcm") {
  CycloNum s = i4() + w();
  CHECK(s.order() == 12);
  CHECK(coerce_order(s, 12) == s);
  CHECK(coerce_order(CycloNum::zeta(8) + CycloNum::zeta(8, 7), 8) * coerce_order(CycloNum::zeta(8) + CycloNum::zeta(8, 7), 8) ==
        CycloNum(2));
  CHECK_THROWS_AS(coerce_order(i4(), 3), Error);
}

TEST_CASE("conjugation") {
  CHECK(conj(i4()) == -i4());
  CHECK(conj(w()) == w() * w());
  CHECK(conj(CycloNum(Rational(Integer(3), Integer(2)))) == CycloNum(Rational(Integer(3), Integer(2))));
}

TEST_CASE("norm_sq with rational witness") {
  auto a = norm_sq(CycloNum(1) - w());
  REQUIRE(a.rational);
  CHECK(*a.rational == Rational(3));
  auto b = norm_sq(CycloNum(0));
  REQUIRE(b.rational);
  CHECK(b.rational->is_zero());
  // (1 + i)(1 - i) expanded by hand.
  auto c = norm_sq(CycloNum(1) + i4());
  REQUIRE(c.rational);
  CHECK(*c.rational == Rational(2));
  CHECK_FALSE(norm_sq(CycloNum(1) + CycloNum::zeta(5)).rational.has_value());
}

TEST_CASE("imaginary quadratic integrality") {
  CHECK(is_imag_quadratic_integer(CycloNum(1) - w()));
  CHECK_FALSE(is_imag_quadratic_integer(CycloNum::zeta(5) + CycloNum::zeta(5, 4)));
  CHECK(is_imag_quadratic_integer(CycloNum(0)));
  CHECK_FALSE(is_imag_quadratic_integer(CycloNum(Rational(Integer(1), Integer(2)))));
  CHECK(is_imag_quadratic_integer(i4() * 3 + CycloNum(2)));
}

TEST_CASE("cyclotomic polynomials annihilate zeta") {
  for (int N : {3, 4, 8, 12, 24}) {
    const CycloField& f = CycloField::get(N);
    CycloNum acc(0);
    for (size_t k = 0; k < f.cyclotomic_poly.size(); ++k)
      acc += CycloNum(Rational(f.cyclotomic_poly[k]), N) * CycloNum::zeta(N, static_cast<long long>(k));
    CHECK(acc.is_zero());
    CHECK(CycloNum::zeta(N).pow(N) == CycloNum(1));
    CHECK(root_of_unity_order(CycloNum::zeta(N)) == N);
  }
}

TEST_CASE("exact signs") {
  CHECK(sign_re(CycloNum::zeta(5)) == 1);
  CHECK(sign_re(CycloNum::zeta(5, 2)) == -1);
  CHECK(sign_im(CycloNum::zeta(3)) == 1);
  CHECK(sign_re(i4()) == 0);
  CHECK(floor_re(CycloNum(Rational(Integer(-1), Integer(2))) + i4()) == Integer(-1));
}

TEST_CASE("scalar parsing and printing round-trip") {
  CHECK(parse_scalar("i", 4) == i4());
  CHECK(parse_scalar("w^2", 3) == w() * w());
  CHECK(parse_scalar("(1+i)/2", 4) == (CycloNum(1) + i4()) / CycloNum(2));
  CHECK(parse_scalar("2i", 4) == i4() * 2);
  CHECK(parse_scalar("s2", 8) * parse_scalar("s2", 8) == CycloNum(2));
  CHECK(parse_scalar("s3", 12) * parse_scalar("s3", 12) == CycloNum(3));
  CHECK(parse_scalar("z5^4", 5) == CycloNum::zeta(5, 4));
  CHECK_THROWS_AS(parse_scalar("1+", 4), Error);
  CHECK_THROWS_AS(parse_scalar("i", 3), Error);
  for (const CycloNum& z : {CycloNum(0), i4(), (CycloNum(1) + i4()) / CycloNum(2), w() * 3 - CycloNum(7), CycloNum::zeta(8, 3)}) {
    CHECK(parse_scalar(z.to_string(), z.order()) == z);
  }
  auto terms = scalar_terms((CycloNum(1) + i4()) / CycloNum(2));
  REQUIRE(terms.size() == 2);
  CHECK(terms[0] == std::make_pair(0, std::string("1/2")));
  CHECK(terms[1] == std::make_pair(1, std::string("1/2")));
}

TEST_CASE("numerical shadow agrees") {
  auto z = CycloNum(1) - w();
  auto a = z.approx();
  CHECK(std::abs(a.real() - 1.5) < 1e-12);
  CHECK(std::abs(a.imag() + std::sqrt(3.0) / 2) < 1e-12);
}
