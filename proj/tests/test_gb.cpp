#include <doctest.h>

#include "klein4/gb.hpp"

using namespace klein4;

namespace {

Scalar omega() { return Scalar::generator(Field::gf2k(2)); }

}  // namespace

TEST_CASE("buchberger on monomial and coprime inputs") {
  Representation rep = Representation::even_v(2, omega());
  SUBCASE("a monomial ideal is its own basis") {
    std::vector<Polynomial> gens = {rep.x(1), rep.x(2)};
    GroebnerBasis gb = buchberger(gens);
    CHECK(gb.generators.size() == 2);
    CHECK(gb.reduced);
  }
  SUBCASE("pairwise coprime lead terms are already a basis") {
    std::vector<Polynomial> gens;
    for (const NamedInvariant& e : hsop_spec(Representation::even_v(4, omega())).elements)
      gens.push_back(e.value);
    GroebnerBasis gb = buchberger(gens, false);
    CHECK(gb.generators.size() == gens.size());
  }
}

TEST_CASE("normal form properties") {
  Representation rep = Representation::even_v(2, omega());
  HsopSpec spec = hsop_spec(rep);
  std::vector<Polynomial> gens;
  for (const NamedInvariant& e : spec.elements) gens.push_back(e.value);
  GroebnerBasis gb = buchberger(gens);
  // members reduce to zero
  CHECK(normal_form(capital_n(rep, 1), gb).is_zero());
  CHECK(normal_form(rep.x(1) * rep.norm(rep.y(2)), gb).is_zero());
  // the top class is reduced
  Polynomial beta = Polynomial::term(rep.ambient(), top_class(rep), Scalar::one(rep.field()));
  CHECK(normal_form(beta, gb) == beta);
  // idempotence and linearity on a few samples
  Polynomial f = rep.y(1).pow(4) + rep.x(2) * rep.y(2).pow(3);
  Polynomial nf = normal_form(f, gb);
  CHECK(normal_form(nf, gb) == nf);
  Polynomial g = rep.y(2).pow(4);
  CHECK(normal_form(f + g, gb) == normal_form(f, gb) + normal_form(g, gb));
}

TEST_CASE("normal form of y1^4 modulo the omega_minus(2) hsop lands in the x algebra") {
  Representation rep = Representation::omega_minus(2);
  HsopSpec spec = hsop_spec(rep);
  std::vector<Polynomial> gens;
  for (const NamedInvariant& e : spec.elements) gens.push_back(e.value);
  GroebnerBasis gb = buchberger(gens);
  Polynomial nf = normal_form(rep.y(1).pow(4), gb);
  for (const auto& [m, c] : nf.terms())
    for (int j = 1; j <= 3; ++j) CHECK(m.exp(rep.y_index(j)) == 0);
}

TEST_CASE("is_hsop") {
  CHECK(is_hsop(hsop_spec(Representation::omega_minus(3))).pass);
  CHECK(is_hsop(hsop_spec(Representation::regular())).pass);
  // {x1, x1^2} in two variables fails
  Representation rep = Representation::even_v(1, omega());
  HsopSpec bad;
  bad.family = "bad";
  bad.elements.push_back({"x1", rep.x(1)});
  bad.elements.push_back({"x1^2", rep.x(1) * rep.x(1)});
  bad.top_class = Monomial(2);
  HsopVerdict v = is_hsop(bad);
  CHECK(!v.pass);
  CHECK(v.detail.find("y1") != std::string::npos);
}

TEST_CASE("is_block_hsop across the catalog") {
  auto check_family = [](const Representation& rep) {
    HsopSpec spec = hsop_spec(rep);
    BlockHsopVerdict v = is_block_hsop(spec);
    CHECK(v.pass);
    CHECK(v.top_matches_claim);
    CHECK(v.computed_top == spec.top_class);
  };
  for (int m : {2, 3, 4, 5}) check_family(Representation::even_v(m, omega()));
  for (int m : {2, 3, 4, 5}) check_family(Representation::even_v(m, Scalar::zero(Field::gf2())));
  for (int m : {1, 2, 3, 4}) check_family(Representation::omega_minus(m));
  for (int m : {1, 2, 3}) check_family(Representation::omega_plus(m));
  check_family(Representation::regular());
}

TEST_CASE("block check on non-coprime pairs") {
  Representation rep = Representation::even_v(1, omega());
  SUBCASE("a pair that fails the Buchberger criterion is rejected") {
    // x1 + y1 leads with y1, and the s-polynomial against y1^2 reduces to
    // x1^2, which is outside the pair
    HsopSpec spec;
    spec.family = "derived";
    spec.elements.push_back({"x1+y1", rep.x(1) + rep.y(1)});
    spec.elements.push_back({"y1^2", rep.y(1) * rep.y(1)});
    Monomial beta(2);
    beta.exp(rep.y_index(1)) = 1;
    spec.top_class = beta;
    BlockHsopVerdict v = is_block_hsop(spec);
    CHECK(!v.pass);
    CHECK(v.detail.find("s-polynomial") != std::string::npos);
  }
  SUBCASE("a genuine basis with a non-monomial element") {
    // {y1 + x1, x1^2}: reduced monomials {1, x1} are the divisors of x1
    HsopSpec spec;
    spec.family = "derived";
    spec.elements.push_back({"y1+x1", rep.x(1) + rep.y(1)});
    spec.elements.push_back({"x1^2", rep.x(1) * rep.x(1)});
    Monomial beta(2);
    beta.exp(rep.x_index(1)) = 1;
    spec.top_class = beta;
    BlockHsopVerdict v = is_block_hsop(spec);
    CHECK(v.pass);
    CHECK(v.computed_top == beta);
    CHECK(v.top_matches_claim);
  }
}

TEST_CASE("degreewise free module dimensions match divisor counts") {
  // for a block hsop, dim (ambient / ideal)_d = number of divisors of beta
  // of degree d; checked through the reduced-monomial enumeration inside
  // is_block_hsop plus direct divisor counting at small degree
  Representation rep = Representation::even_v(2, omega());
  HsopSpec spec = hsop_spec(rep);
  BlockHsopVerdict v = is_block_hsop(spec);
  REQUIRE(v.pass);
  // beta = y1 y2^3: degree-2 divisors are y1 y2 and y2^2
  std::vector<Polynomial> gens;
  for (const NamedInvariant& e : spec.elements) gens.push_back(e.value);
  GroebnerBasis gb = buchberger(gens);
  int reduced_count = 0;
  Oracle oracle(rep);
  // count degree-2 monomials with nonzero normal form
  MonomialTable t(4, 2);
  for (size_t i = 0; i < t.size(); ++i) {
    const int32_t* e = t.exps(i);
    Monomial m(std::vector<int>(e, e + 4));
    Polynomial p = Polynomial::term(rep.ambient(), m, Scalar::one(rep.field()));
    if (normal_form(p, gb) == p) ++reduced_count;
  }
  CHECK(reduced_count == 2);
}

TEST_CASE("hilbert ideal equality") {
  SUBCASE("V_{2,lambda}") {
    Representation rep = Representation::even_v(2, omega());
    Oracle oracle(rep);
    HilbertVerdict v = hilbert_ideal_equals(rep, hilbert_generators(rep), 4, oracle);
    CHECK(v.pass);
    CHECK(v.checked_up_to == 4);
  }
  SUBCASE("V_reg has the five-generator non-hsop Hilbert ideal") {
    Representation rep = Representation::regular();
    Oracle oracle(rep);
    std::vector<NamedInvariant> gens = hilbert_generators(rep);
    CHECK(gens.size() == 5);
    CHECK(hilbert_ideal_equals(rep, gens, 4, oracle).pass);
    // dropping u breaks it: the four-element hsop does not span the ideal
    std::vector<NamedInvariant> hsop_only = hsop_spec(rep).elements;
    HilbertVerdict bad = hilbert_ideal_equals(rep, hsop_only, 4, oracle);
    CHECK(!bad.pass);
    CHECK(bad.witness.has_value());
  }
  SUBCASE("V_{3,0}") {
    Representation rep = Representation::even_v(3, Scalar::zero(Field::gf2()));
    Oracle oracle(rep);
    HilbertVerdict v = hilbert_ideal_equals(rep, hilbert_generators(rep), 5, oracle);
    CHECK(v.pass);
  }
  SUBCASE("every stated generator has degree at most 4") {
    for (Representation rep :
         {Representation::even_v(4, omega()), Representation::omega_minus(3),
          Representation::omega_plus(2), Representation::regular()}) {
      for (const NamedInvariant& g : hilbert_generators(rep))
        CHECK(g.value.degree() <= 4);
    }
  }
}

TEST_CASE("reduced basis of the V_reg Hilbert ideal is stable") {
  Representation rep = Representation::regular();
  std::vector<Polynomial> gens;
  for (const NamedInvariant& e : hilbert_generators(rep)) gens.push_back(e.value);
  GroebnerBasis gb = buchberger(gens);
  REQUIRE(gb.reduced);
  // frozen fixture: lead monomials of the reduced basis
  std::vector<std::string> leads;
  for (const Polynomial& p : gb.generators) {
    Polynomial lt = Polynomial::term(rep.ambient(), p.leading_monomial(),
                                     Scalar::one(rep.field()));
    leads.push_back(lt.to_string());
  }
  std::vector<std::string> expect = {"z^4", "y1^2", "y2*y1", "y2^2", "x"};
  CHECK(leads == expect);
  // determinism: recomputation gives the identical basis
  GroebnerBasis again = buchberger(gens);
  REQUIRE(again.generators.size() == gb.generators.size());
  for (size_t i = 0; i < gb.generators.size(); ++i)
    CHECK(again.generators[i] == gb.generators[i]);
}
