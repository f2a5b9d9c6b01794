#pragma once

#include <optional>

#include "klein4/construct.hpp"
#include "klein4/oracle.hpp"

namespace klein4 {

struct GroebnerBasis {
  std::vector<Polynomial> generators;
  bool reduced = false;
};

// Buchberger's algorithm with the normal pair-selection strategy (smallest
// lcm degree first) and the coprime-lcm skip criterion. Termination is
// guaranteed; when make_reduced is set the unique reduced basis is returned.
GroebnerBasis buchberger(std::vector<Polynomial> gens, bool make_reduced = true);

// Full normal form: no monomial of the result is divisible by any leading
// monomial of the basis.
Polynomial normal_form(const Polynomial& f, const std::vector<Polynomial>& basis);
inline Polynomial normal_form(const Polynomial& f, const GroebnerBasis& gb) {
  return normal_form(f, gb.generators);
}

struct HsopVerdict {
  bool pass = false;
  std::string detail;
};

// Zero-dimensionality of the generated ideal: every variable has a power
// with normal form zero, searched up to the product of the element degrees.
HsopVerdict is_hsop(const HsopSpec& spec);

struct BlockHsopVerdict {
  bool pass = false;           // elements are a Groebner basis and the
                               // reduced monomials are the divisors of one monomial
  Monomial computed_top;       // that monomial
  bool top_matches_claim = false;
  std::string detail;
};

BlockHsopVerdict is_block_hsop(const HsopSpec& spec);

struct HilbertVerdict {
  bool pass = false;
  int checked_up_to = 0;       // invariants of degrees 1..checked_up_to verified
  std::optional<Polynomial> witness;  // first invariant outside the ideal
};

// Confirms that every generator is invariant and that every oracle invariant
// of positive degree <= bound reduces to zero modulo the ideal the
// generators span.
HilbertVerdict hilbert_ideal_equals(const Representation& rep,
                                    const std::vector<NamedInvariant>& gens, int bound,
                                    Oracle& oracle);

}  // namespace klein4
