#include <doctest.h>

#include <random>

#include "klein4/poly.hpp"

using namespace klein4;

namespace {

AmbientPtr amb4() { return make_ambient({"x1", "x2", "y1", "y2"}); }

Monomial mono(std::vector<int> e) { return Monomial(std::move(e)); }

Polynomial random_poly(const AmbientPtr& a, const FieldPtr& f, std::mt19937& rng, int maxdeg,
                       int nterms) {
  Polynomial p(a, f);
  for (int t = 0; t < nterms; ++t) {
    Monomial m(a->size());
    for (size_t i = 0; i < a->size(); ++i) m.exp(i) = int(rng() % (maxdeg + 1));
    uint16_t bits = uint16_t(rng() % (f->kind() == FieldKind::GF2k ? f->order() : 2));
    p.add_term(m, Scalar(f, bits));
  }
  return p;
}

}  // namespace

TEST_CASE("grevlex basics") {
  // variables ascending x1 < x2 < y1 < y2
  Monomial x1 = mono({1, 0, 0, 0});
  Monomial y1 = mono({0, 0, 1, 0});
  Monomial x1sq = mono({2, 0, 0, 0});
  CHECK(grevlex_compare(x1, y1) == Cmp::LT);
  CHECK(grevlex_compare(x1sq, y1) == Cmp::GT);  // degree first
  CHECK(grevlex_compare(x1, x1) == Cmp::EQ);
  // the V_2 case: y1*x2^3 > x1^2*y2^2 > x1^3*y2 at degree 4
  CHECK(grevlex_compare(mono({0, 3, 1, 0}), mono({2, 0, 0, 2})) == Cmp::GT);
  CHECK(grevlex_compare(mono({2, 0, 0, 2}), mono({3, 0, 0, 1})) == Cmp::GT);
}

TEST_CASE("grevlex order axioms on random triples") {
  std::mt19937 rng(99);
  auto rand_mono = [&] {
    Monomial m(4);
    for (int i = 0; i < 4; ++i) m.exp(i) = int(rng() % 4);
    return m;
  };
  for (int trial = 0; trial < 300; ++trial) {
    Monomial a = rand_mono(), b = rand_mono(), c = rand_mono();
    // totality and antisymmetry
    Cmp ab = grevlex_compare(a, b);
    Cmp ba = grevlex_compare(b, a);
    CHECK(((ab == Cmp::EQ && ba == Cmp::EQ) || (ab == Cmp::GT && ba == Cmp::LT) ||
           (ab == Cmp::LT && ba == Cmp::GT)));
    if (ab == Cmp::EQ) CHECK(a == b);
    // transitivity
    if (ab != Cmp::LT && grevlex_compare(b, c) != Cmp::LT)
      CHECK(grevlex_compare(a, c) != Cmp::LT);
    // multiplicative
    if (ab == Cmp::GT) CHECK(grevlex_compare(a * c, b * c) == Cmp::GT);
    // 1 is minimal
    if (!a.is_one()) CHECK(grevlex_compare(a, Monomial(4)) == Cmp::GT);
  }
}

TEST_CASE("frobenius and ring axioms") {
  std::mt19937 rng(2024);
  AmbientPtr a = amb4();
  for (FieldPtr f : {Field::gf2(), Field::gf2k(2)}) {
    for (int trial = 0; trial < 30; ++trial) {
      Polynomial p = random_poly(a, f, rng, 3, 4);
      Polynomial q = random_poly(a, f, rng, 3, 4);
      Polynomial r = random_poly(a, f, rng, 3, 4);
      CHECK((p + q) * r == p * r + q * r);
      CHECK(p * q == q * p);
      CHECK((p + q).pow(2) == p.pow(2) + q.pow(2));
      CHECK((p + p).is_zero());
    }
  }
}

TEST_CASE("leading term") {
  AmbientPtr a = amb4();
  FieldPtr f = Field::gf2();
  // n1 = y1^2 + x1*y1 leads with y1^2
  Polynomial n1 = Polynomial::parse(a, f, "y1^2+x1*y1");
  CHECK(n1.leading_monomial() == mono({0, 0, 2, 0}));
  CHECK_THROWS_AS(Polynomial::zero(a, f).leading(), Error);
}

TEST_CASE("exact divide") {
  AmbientPtr a = amb4();
  FieldPtr f = Field::gf2();
  Polynomial p = Polynomial::parse(a, f, "x1*y2+x1*x2");
  Monomial x1 = mono({1, 0, 0, 0});
  CHECK(p.exact_divide(x1) == Polynomial::parse(a, f, "y2+x2"));
  // multiply back is the identity
  CHECK(p.exact_divide(x1) * Polynomial::variable(a, f, 0) == p);
  Polynomial bad = Polynomial::parse(a, f, "y1+x2");
  CHECK_THROWS_AS(bad.exact_divide(x1), Error);
  try {
    bad.exact_divide(x1);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotDivisible);
  }
}

TEST_CASE("monic divide") {
  std::mt19937 rng(555);
  AmbientPtr a = amb4();
  FieldPtr f = Field::gf2k(2);
  Polynomial N = Polynomial::parse(a, f, "y1^2+x1*y1+t*x2^2");  // monic of degree 2 in y1
  size_t y1 = 2;

  SUBCASE("f equal to N") {
    auto [q, r] = monic_divide(N, N, y1);
    CHECK(q == Polynomial::constant(a, Scalar::one(f)));
    CHECK(r.is_zero());
  }
  SUBCASE("low degree passes through") {
    Polynomial low = Polynomial::parse(a, f, "y1*x2+y2^3");
    auto [q, r] = monic_divide(low, N, y1);
    CHECK(q.is_zero());
    CHECK(r == low);
  }
  SUBCASE("random division identity and remainder bound") {
    for (int trial = 0; trial < 40; ++trial) {
      Polynomial p = random_poly(a, f, rng, 3, 6);
      auto [q, r] = monic_divide(p, N, y1);
      CHECK(q * N + r == p);
      CHECK(r.degree_in(y1) < 2);
      // uniqueness: dividing q*N + r again returns the same pair
      auto [q2, r2] = monic_divide(q * N + r, N, y1);
      CHECK(q2 == q);
      CHECK(r2 == r);
    }
  }
  SUBCASE("rejects non-monic divisor") {
    Polynomial bad = Polynomial::parse(a, f, "x2*y1^2+x1*y1");
    CHECK_THROWS_AS(monic_divide(bad, bad, y1), Error);
  }
}

TEST_CASE("homogeneous queries") {
  AmbientPtr a = amb4();
  FieldPtr f = Field::gf2();
  Polynomial h = Polynomial::parse(a, f, "y1^2+x1*y1");
  CHECK(h.homogeneous_degree() == 2);
  Polynomial non = Polynomial::parse(a, f, "y1^2+x1");
  CHECK(!non.homogeneous_degree().has_value());
  CHECK(non.component(2) == Polynomial::parse(a, f, "y1^2"));
}

TEST_CASE("text round trips") {
  AmbientPtr a = amb4();
  SUBCASE("gf2") {
    FieldPtr f = Field::gf2();
    for (const char* text : {"0", "1", "y1^2+x1*y1", "y2^4+x2^3*y2+x1^2*y2^2"}) {
      Polynomial p = Polynomial::parse(a, f, text);
      CHECK(p.to_string() == text);
      CHECK(Polynomial::parse(a, f, p.to_string()) == p);
    }
  }
  SUBCASE("coefficients with embedded sums get parenthesized") {
    FieldPtr f = Field::gf2k(2);
    Polynomial p = Polynomial::parse(a, f, "(t+1)*y1+t*x1");
    CHECK(p.to_string() == "(t+1)*y1+t*x1");
    CHECK(Polynomial::parse(a, f, p.to_string()) == p);
  }
  SUBCASE("rational function coefficients") {
    FieldPtr f = Field::rational();
    Polynomial p = Polynomial::parse(a, f, "(l^2+l)/1*y1^2+l/1*x1*x2");
    CHECK(Polynomial::parse(a, f, p.to_string()) == p);
  }
  SUBCASE("emission is descending in the order") {
    FieldPtr f = Field::gf2();
    Polynomial p = Polynomial::parse(a, f, "x1*y1+y1^2");
    CHECK(p.to_string() == "y1^2+x1*y1");
  }
  SUBCASE("parse errors carry positions") {
    FieldPtr f = Field::gf2();
    CHECK_THROWS_AS(Polynomial::parse(a, f, "y1^"), Error);
    CHECK_THROWS_AS(Polynomial::parse(a, f, "q1+x1"), Error);
    CHECK_THROWS_AS(Polynomial::parse(a, f, ""), Error);
  }
}

TEST_CASE("mixed ambients rejected") {
  FieldPtr f = Field::gf2();
  Polynomial p = Polynomial::parse(amb4(), f, "x1");
  Polynomial q = Polynomial::parse(make_ambient({"x1", "x2"}), f, "x1");
  CHECK_THROWS_AS(void(p + q), Error);
}
