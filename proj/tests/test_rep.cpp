#include <doctest.h>

#include <random>

#include "klein4/rep.hpp"

using namespace klein4;

namespace {

Polynomial random_poly(const Representation& rep, std::mt19937& rng, int maxdeg, int nterms) {
  Polynomial p = rep.zero();
  const FieldPtr& f = rep.field();
  for (int t = 0; t < nterms; ++t) {
    Monomial m(rep.ambient()->size());
    for (size_t i = 0; i < m.nvars(); ++i) m.exp(i) = int(rng() % (maxdeg + 1));
    uint16_t bits = uint16_t(1 + rng() % (f->kind() == FieldKind::GF2k ? f->order() - 1 : 1));
    p.add_term(m, Scalar(f, bits));
  }
  return p;
}

Scalar omega() { return Scalar::generator(Field::gf2k(2)); }

Polynomial n_of(const Representation& rep, int i) {
  return rep.y(i) * rep.y(i) + rep.x_or_zero(i) * rep.y(i);
}

Polynomial u_of(const Representation& rep, int i, int j) {
  return rep.x_or_zero(i) * rep.y_or_zero(j) + rep.x_or_zero(j) * rep.y_or_zero(i);
}

}  // namespace

TEST_CASE("group multiplication table") {
  CHECK(group_mul(GroupElement::S1, GroupElement::S1) == GroupElement::E);
  CHECK(group_mul(GroupElement::S2, GroupElement::S2) == GroupElement::E);
  CHECK(group_mul(GroupElement::S1, GroupElement::S2) == GroupElement::S12);
  CHECK(group_mul(GroupElement::S12, GroupElement::S1) == GroupElement::S2);
}

TEST_CASE("action formulas") {
  Representation rep = Representation::even_v(3, omega());
  for (int j = 1; j <= 3; ++j) {
    CHECK(rep.act(GroupElement::S1, rep.y(j)) == rep.y(j) + rep.x(j));
    CHECK(rep.act(GroupElement::S2, rep.x(j)) == rep.x(j));
    CHECK(rep.act(GroupElement::S2, rep.y(j)) ==
          rep.y(j) + rep.x(j) * rep.lambda() + rep.x_or_zero(j - 1));
  }
  Polynomial f = rep.y(2) * rep.y(3) + rep.x(1) * rep.y(1);
  CHECK(rep.act(GroupElement::E, f) == f);
}

TEST_CASE("group law on random polynomials") {
  std::mt19937 rng(42);
  for (const Representation& rep :
       {Representation::even_v(2, omega()), Representation::omega_minus(2),
        Representation::omega_plus(2), Representation::regular()}) {
    for (int trial = 0; trial < 4; ++trial) {
      Polynomial f = random_poly(rep, rng, 2, 4);
      for (GroupElement g : group_elements())
        for (GroupElement h : group_elements())
          CHECK(rep.act(g, rep.act(h, f)) == rep.act(group_mul(g, h), f));
    }
  }
}

TEST_CASE("delta nilpotence and twisted leibniz") {
  std::mt19937 rng(4242);
  for (const Representation& rep :
       {Representation::even_v(3, omega()), Representation::omega_minus(3),
        Representation::omega_plus(3), Representation::regular()}) {
    for (int trial = 0; trial < 5; ++trial) {
      Polynomial f = random_poly(rep, rng, 2, 4);
      Polynomial g = random_poly(rep, rng, 2, 4);
      for (int i : {1, 2}) {
        CHECK(rep.delta(i, rep.delta(i, f)).is_zero());
        Polynomial lhs = rep.delta(i, f * g);
        Polynomial rhs = rep.delta(i, f) * g + f * rep.delta(i, g) +
                         rep.delta(i, f) * rep.delta(i, g);
        CHECK(lhs == rhs);
      }
    }
  }
}

TEST_CASE("delta2 closed forms for the even family") {
  for (const Scalar& lam : {omega(), Scalar::zero(Field::gf2()),
                            Scalar::generator(Field::rational())}) {
    Representation rep = Representation::even_v(3, lam);
    Scalar c = rep.c();
    for (int i = 1; i <= 3; ++i) {
      Polynomial expect = rep.x(i) * rep.x(i) * c +
                          rep.x_or_zero(i - 1) * rep.x_or_zero(i - 1) +
                          rep.x(i) * rep.x_or_zero(i - 1);
      CHECK(rep.delta(2, n_of(rep, i)) == expect);
    }
    for (int i = 1; i <= 3; ++i)
      for (int j = i + 1; j <= 3; ++j) {
        Polynomial expect = rep.x(i) * rep.x_or_zero(j - 1) + rep.x_or_zero(i - 1) * rep.x(j);
        CHECK(rep.delta(2, u_of(rep, i, j)) == expect);
      }
  }
}

TEST_CASE("transfer") {
  Representation rep = Representation::even_v(3, omega());
  CHECK(rep.transfer(rep.one()).is_zero());
  // displayed expansion of Tr(y1*y2*yj) for j > 1
  for (int j = 2; j <= 3; ++j) {
    Polynomial lhs = rep.transfer(rep.y(1) * rep.y(2) * rep.y(j));
    Polynomial xjm = rep.x_or_zero(j - 1);
    Polynomial rhs = rep.y(1) * (rep.x(2) * xjm + rep.x(1) * rep.x(j)) +
                     rep.y(2) * rep.x(1) * xjm + rep.y(j) * rep.x(1) * rep.x(1) +
                     rep.x(1) * rep.x(2) * (rep.x(j) * rep.c() + xjm) +
                     rep.x(1) * rep.x(1) * (rep.x(j) + xjm);
    CHECK(lhs == rhs);
  }
  std::mt19937 rng(7);
  for (int trial = 0; trial < 5; ++trial) {
    Polynomial f = random_poly(rep, rng, 2, 4);
    CHECK(rep.is_invariant(rep.transfer(f)));
    // transfer is linear over invariants
    Polynomial h = rep.x(1) * rep.x(2);
    CHECK(rep.transfer(h * f) == h * rep.transfer(f));
  }
}

TEST_CASE("norm") {
  Representation rep = Representation::even_v(2, omega());
  Scalar c = rep.c();
  // N(y_1) = y1^44 has the closed form with c = l^2+l
  Polynomial y1 = rep.y(1), x1 = rep.x(1);
  Polynomial expect = y1.pow(4) + x1.pow(2) * y1.pow(2) * (c + Scalar::one(rep.field())) +
                      x1.pow(3) * y1 * c;
  CHECK(rep.norm(y1) == expect);
  // invariants have orbits of size one
  CHECK(rep.norm(x1) == x1);
  // N(y_2) = n2^2 + n2*Delta2(n2)
  Polynomial n2 = n_of(rep, 2);
  CHECK(rep.norm(rep.y(2)) == n2 * n2 + n2 * rep.delta(2, n2));
  std::mt19937 rng(77);
  for (int trial = 0; trial < 5; ++trial) {
    Polynomial f = random_poly(rep, rng, 2, 3);
    CHECK(rep.is_invariant(rep.norm(f)));
  }
}

TEST_CASE("is_invariant") {
  Representation rep = Representation::even_v(2, omega());
  CHECK(rep.is_invariant(rep.x(1)));
  CHECK(rep.is_invariant(rep.x(2)));
  CHECK(!rep.is_invariant(rep.y(1)));
  CHECK(rep.delta(1, rep.y(1)) == rep.x(1));
}

TEST_CASE("regular representation basis equations") {
  Representation reg = Representation::regular();
  Polynomial x = reg.var(0), y2 = reg.var(1), y1 = reg.var(2), z = reg.var(3);
  CHECK(reg.delta(1, z) == y1);
  CHECK(reg.delta(2, z) == y2);
  CHECK(reg.transfer(z) == x);
  // u = y1*y2 + x*z and h are invariant
  Polynomial u = y1 * y2 + x * z;
  CHECK(reg.is_invariant(u));
  Polynomial h = y1 * y1 * y2 + y2 * y2 * y1 + x * (z * z + y1 * y2);
  CHECK(reg.is_invariant(h));
  // h = (u^2 + N(y1) N(y2)) / x
  Polynomial mul = reg.norm(y1) * reg.norm(y2);
  Monomial xm(reg.ambient()->size());
  xm.exp(0) = 1;
  CHECK((u * u + mul).exact_divide(xm) == h);
}

TEST_CASE("omega conventions") {
  Representation om = Representation::omega_minus(2);
  // x_0 = 0 and x_{m+1} = 0: y_1 fixed by s2, y_{m+1} fixed by s1
  CHECK(om.act(GroupElement::S2, om.y(1)) == om.y(1));
  CHECK(om.act(GroupElement::S1, om.y(3)) == om.y(3));
  Representation op = Representation::omega_plus(2);
  CHECK(op.act(GroupElement::S1, op.y(2)) == op.y(2) + op.x(2));
  CHECK(op.act(GroupElement::S2, op.y(2)) == op.y(2) + op.x(3));
}

TEST_CASE("trace projector on omega_plus(3)") {
  // Tr(alpha) = (x2+x3)^3 and rho(f) = x^-3 Tr(f*alpha) fixes invariants
  Representation rep = Representation::omega_plus(3);
  Polynomial alpha = (rep.x(1) + rep.x(2) + rep.x(3)) * rep.y(2) * rep.y(3) +
                     (rep.x(1) + rep.x(2) + rep.x(3) + rep.x(4)) * rep.y(1) * rep.y(3) +
                     (rep.x(2) + rep.x(3) + rep.x(4)) * rep.y(1) * rep.y(2) +
                     rep.y(1) * rep.y(1) * rep.y(3) + rep.y(1) * rep.y(3) * rep.y(3);
  Polynomial xx = rep.x(2) + rep.x(3);
  CHECK(rep.transfer(alpha) == xx.pow(3));
  // invariants f of low degree: x-monomials and norms
  std::mt19937 rng(11);
  std::vector<Polynomial> invs = {rep.x(1) * rep.x(4), rep.norm(rep.y(1)),
                                  rep.norm(rep.y(2)), xx * xx * rep.x(1)};
  for (const Polynomial& f : invs) {
    REQUIRE(rep.is_invariant(f));
    CHECK(rep.transfer(f * alpha) == f * xx.pow(3));
  }
}

TEST_CASE("selector round trip") {
  for (const char* sel : {"Vm:3:lambda=t", "Vm:2:lambda=0", "Omega-:3", "Omega+:2", "Vreg"}) {
    Representation rep = Representation::parse_selector(sel);
    CHECK(rep.selector() == sel);
  }
  CHECK_THROWS_AS(Representation::parse_selector("Vm:3"), Error);
  Representation symbolic = Representation::parse_selector("Vm:2:lambda=l/1");
  CHECK(symbolic.field()->kind() == FieldKind::RationalFunction);
}
