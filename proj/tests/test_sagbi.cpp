#include <doctest.h>

#include <set>

#include "klein4/construct.hpp"
#include "klein4/oracle.hpp"
#include "klein4/sagbi.hpp"

using namespace klein4;

namespace {

Scalar omega() { return Scalar::generator(Field::gf2k(2)); }
Scalar sym() { return Scalar::generator(Field::rational()); }

std::vector<Polynomial> values(const std::vector<NamedInvariant>& set) {
  std::vector<Polynomial> out;
  for (const NamedInvariant& e : set) out.push_back(e.value);
  return out;
}

// same algebra: each element of one set subducts to zero against the other
bool mutually_contained(const std::vector<Polynomial>& a, const std::vector<Polynomial>& b) {
  for (const Polynomial& p : a)
    if (!subduct(p, b).remainder.is_zero()) return false;
  for (const Polynomial& p : b)
    if (!subduct(p, a).remainder.is_zero()) return false;
  return true;
}

}  // namespace

TEST_CASE("subduction basics") {
  Representation rep = Representation::even_v(2, omega());
  std::vector<Polynomial> basis = values(candidate_set(rep));
  SUBCASE("members subduct to zero with a sound combination") {
    for (const Polynomial& b : basis) {
      SubductionResult r = subduct(b, basis);
      CHECK(r.remainder.is_zero());
      CHECK(expand_combination(r.combination, basis) == b);
    }
  }
  SUBCASE("products subduct to zero") {
    Polynomial f = basis[2] * basis[3] + basis[0] * basis[0] * basis[4];
    SubductionResult r = subduct(f, basis);
    CHECK(r.remainder.is_zero());
    CHECK(expand_combination(r.combination, basis) == f);
  }
  SUBCASE("soundness: f minus remainder is the combination") {
    Polynomial f = rep.y(1).pow(4) + rep.y(2).pow(4);
    SubductionResult r = subduct(f, basis);
    CHECK(expand_combination(r.combination, basis) + r.remainder == f);
  }
  SUBCASE("inhomogeneous input is rejected") {
    CHECK_THROWS_AS(subduct(rep.x(1) + rep.one(), basis), Error);
  }
}

TEST_CASE("norm subduction identity for V_{4,lambda}") {
  // N(y_1) subducts to zero against {x.., N1, N2, t3, t4}; the recorded
  // combination reproduces the closed form
  Representation rep = Representation::even_v(4, sym());
  std::vector<Polynomial> basis = {rep.x(1),           rep.x(2),
                                   rep.x(3),           rep.x(4),
                                   capital_n(rep, 1),  capital_n(rep, 2),
                                   t_basic(rep, 3),    t_basic(rep, 4)};
  SubductionResult r = subduct(rep.norm(rep.y(1)), basis);
  CHECK(r.remainder.is_zero());
  CHECK(expand_combination(r.combination, basis) == rep.norm(rep.y(1)));
}

TEST_CASE("eq1 via subduction: w^2 against the V_{2,lambda} set") {
  Representation rep = Representation::even_v(2, sym());
  std::vector<Polynomial> basis = values(candidate_set(rep));
  Polynomial w = auxiliary(rep, "w").value;
  SubductionResult r = subduct(w * w, basis);
  CHECK(r.remainder.is_zero());
}

TEST_CASE("tete-a-tete counts") {
  SUBCASE("V_reg candidate set has exactly two nontrivial relations") {
    TeteResult r = tete_a_tetes(values(candidate_set(Representation::regular())));
    int nontrivial = 0;
    for (const TeteATete& t : r.relations) nontrivial += t.nontrivial;
    CHECK(nontrivial == 2);
  }
  SUBCASE("V_{2,lambda} candidate set has exactly one") {
    TeteResult r = tete_a_tetes(values(candidate_set(Representation::even_v(2, sym()))));
    int nontrivial = 0;
    for (const TeteATete& t : r.relations) nontrivial += t.nontrivial;
    CHECK(nontrivial == 1);
  }
  SUBCASE("algebraically independent lead terms give none") {
    Representation rep = Representation::even_v(1, omega());
    std::vector<Polynomial> basis = {rep.x(1), n_basic(rep, 1)};
    CHECK(tete_a_tetes(basis).relations.empty());
  }
}

TEST_CASE("sagbi tests") {
  SUBCASE("V_reg candidate set") {
    SagbiVerdict v = sagbi_test(values(candidate_set(Representation::regular())));
    CHECK(v.pass);
  }
  SUBCASE("V_{2,lambda} hypersurface set, symbolically and at omega") {
    CHECK(sagbi_test(values(candidate_set(Representation::even_v(2, sym())))).pass);
    CHECK(sagbi_test(values(candidate_set(Representation::even_v(2, omega())))).pass);
  }
  SUBCASE("B_2") {
    SagbiVerdict v = sagbi_test(values(candidate_set(Representation::omega_plus(2))));
    CHECK(v.pass);
  }
  SUBCASE("B_2 without the top transfer fails with a degree-6 witness") {
    std::vector<NamedInvariant> set = candidate_set(Representation::omega_plus(2));
    std::vector<Polynomial> basis;
    for (const NamedInvariant& e : set)
      if (e.name.find("Tr(") == std::string::npos) basis.push_back(e.value);
    CHECK(basis.size() == set.size() - 1);
    SagbiVerdict v = sagbi_test(basis);
    CHECK(!v.pass);
    REQUIRE(v.witness.has_value());
    CHECK(v.witness->degree() == 6);
  }
}

TEST_CASE("sagbi test for B_{3,lambda} over the rational function field") {
  Representation rep = Representation::even_v(3, sym());
  std::vector<NamedInvariant> set = candidate_set(rep);
  REQUIRE(set.size() == 16);
  SagbiVerdict v = sagbi_test(values(set));
  CHECK(v.pass);
  // dropping Tr(y1 y2^3 y3^3) leaves a degree-7 hole
  std::vector<Polynomial> smaller;
  for (const NamedInvariant& e : set)
    if (e.name != "Tr(y1*y2^3*y3^3)") smaller.push_back(e.value);
  REQUIRE(smaller.size() == 15);
  SagbiVerdict bad = sagbi_test(smaller);
  CHECK(!bad.pass);
  REQUIRE(bad.witness.has_value());
  CHECK(bad.witness->degree() == 7);
}

TEST_CASE("sagbi pass implies oracle agreement at low degree") {
  Representation rep = Representation::regular();
  std::vector<Polynomial> basis = values(candidate_set(rep));
  REQUIRE(sagbi_test(basis).pass);
  Oracle oracle(rep);
  for (int d = 1; d <= 6; ++d) {
    oracle.for_each_invariant(d, Subgroup::Full, [&](const Polynomial& f) {
      CHECK(subduct(f, basis).remainder.is_zero());
    });
  }
}

TEST_CASE("the sixteen-element set specializes to GF4 and passes there too") {
  Representation rep = Representation::even_v(3, omega());
  std::vector<Polynomial> basis = values(candidate_set(rep));
  REQUIRE(basis.size() == 16);
  CHECK(sagbi_test(basis).pass);
  // symbolic elements evaluated at l = t agree with the GF4 construction
  Representation sym3 = Representation::even_v(3, sym());
  std::vector<NamedInvariant> symbolic = candidate_set(sym3);
  std::vector<NamedInvariant> concrete = candidate_set(rep);
  REQUIRE(symbolic.size() == concrete.size());
  for (size_t i = 0; i < symbolic.size(); ++i)
    CHECK(evaluate_lambda(symbolic[i].value, omega()) == concrete[i].value);
  // oracle agreement: every invariant of degree <= noether + 2 subducts to zero
  Oracle oracle(rep);
  for (int d = 1; d <= 9; ++d)
    oracle.for_each_invariant(d, Subgroup::Full, [&](const Polynomial& f) {
      CHECK(subduct(f, basis).remainder.is_zero());
    });
}

TEST_CASE("sagbi pass implies oracle agreement for B_2 at noether + 2") {
  Representation rep = Representation::omega_plus(2);
  std::vector<Polynomial> basis = values(candidate_set(rep));
  REQUIRE(sagbi_test(basis).pass);
  Oracle oracle(rep);
  for (int d = 1; d <= 8; ++d)
    oracle.for_each_invariant(d, Subgroup::Full, [&](const Polynomial& f) {
      CHECK(subduct(f, basis).remainder.is_zero());
    });
}

TEST_CASE("divide-by-x completions") {
  SUBCASE("omega_minus(2): the input set is already complete") {
    Representation rep = Representation::omega_minus(2);
    std::vector<Polynomial> input = values(candidate_set(rep));
    CHECK(input.size() == 6);
    DivideByXResult r = sagbi_divide_by_x(input, rep.x(1));
    CHECK(r.completed);
    CHECK(r.basis.size() == 6);
    CHECK(sagbi_test(r.basis).pass);
  }
  SUBCASE("omega_minus(3) completes to the twelve-element set") {
    Representation rep = Representation::omega_minus(3);
    std::vector<Polynomial> input = values(candidate_set(rep));
    CHECK(input.size() == 9);
    DivideByXResult r = sagbi_divide_by_x(input, rep.x(1));
    CHECK(r.completed);
    CHECK(sagbi_test(r.basis).pass);
    // the stated generating set
    std::vector<Polynomial> stated = input;
    stated.push_back(auxiliary(rep, "u133").value);
    stated.push_back(auxiliary(rep, "u233").value);
    stated.push_back(rep.transfer(rep.y(1) * rep.y(2) * rep.y(3) * rep.y(4)));
    CHECK(r.basis.size() == 12);
    CHECK(mutually_contained(r.basis, stated));
  }
  SUBCASE("V_{3,0} completes to the ten-element set") {
    Representation rep = Representation::even_v(3, Scalar::zero(Field::gf2()));
    std::vector<Polynomial> input = values(candidate_set(rep));
    CHECK(input.size() == 7);
    DivideByXResult r = sagbi_divide_by_x(input, rep.x(1));
    CHECK(r.completed);
    CHECK(sagbi_test(r.basis).pass);
    std::vector<Polynomial> stated = input;
    stated.push_back((rep.x(3) + rep.x(2)) * u_basic(rep, 1, 3) + n_basic(rep, 3) * rep.x(1));
    stated.push_back(rep.transfer(rep.y(2) * rep.y(3).pow(3)));
    stated.push_back(rep.transfer(rep.y(1) * rep.y(2) * rep.y(3).pow(3)));
    CHECK(r.basis.size() == 10);
    CHECK(mutually_contained(r.basis, stated));
  }
  SUBCASE("output contains the input and passes the test") {
    Representation rep = Representation::omega_minus(2);
    std::vector<Polynomial> input = values(candidate_set(rep));
    DivideByXResult r = sagbi_divide_by_x(input, rep.x(1));
    for (const Polynomial& p : input) {
      bool found = false;
      for (const Polynomial& b : r.basis)
        if (b == p) found = true;
      CHECK(found);
    }
  }
}

TEST_CASE("divide by a sum of two variables via coordinate change") {
  // small synthetic case in omega_plus(3): complete {x2+x3, N(y1), v2-ish}
  // against x = x2 + x3; here we just exercise the coordinate path on a
  // set that is already a sagbi basis after the change
  Representation rep = Representation::omega_plus(3);
  Polynomial x = rep.x(2) + rep.x(3);
  std::vector<Polynomial> input = {x, rep.x(1), rep.x(4), rep.norm(rep.y(1))};
  DivideByXResult r = sagbi_divide_by_x(input, x);
  CHECK(r.completed);
  for (const Polynomial& p : input) {
    bool found = false;
    for (const Polynomial& b : r.basis)
      if (b == p) found = true;
    CHECK(found);
  }
}
