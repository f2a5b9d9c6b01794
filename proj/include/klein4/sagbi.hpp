#pragma once

#include <optional>

#include "klein4/poly.hpp"

namespace klein4 {

// A pair of power products of the generators with equal lead monomials;
// nontrivial when the exponent supports are disjoint.
struct TeteATete {
  std::vector<int> left, right;  // exponents over the generator list
  int degree = 0;                // ambient degree of the shared lead monomial
  bool nontrivial = false;
};

struct SubductionResult {
  Polynomial remainder;
  // accumulated representation: f = sum coeff * prod basis^exps + remainder
  std::vector<std::pair<Scalar, std::vector<int>>> combination;
};

// Subalgebra analog of division: repeatedly cancels the leading term by a
// product of generator lead terms until none matches. f must be homogeneous.
SubductionResult subduct(const Polynomial& f, const std::vector<Polynomial>& basis);

// Expands the recorded combination back into a polynomial (soundness checks).
Polynomial expand_combination(const std::vector<std::pair<Scalar, std::vector<int>>>& comb,
                              const std::vector<Polynomial>& basis);

struct TeteResult {
  std::vector<TeteATete> relations;  // minimal generators, degree ascending
  int degree_cap = 0;                // relations complete up to this degree
};

// Minimal generating set of the lead-term relations, computed fiber by fiber
// degree-ascending up to the cap (default twice the largest generator degree).
TeteResult tete_a_tetes(const std::vector<Polynomial>& basis, int degree_cap = 0);

// the polynomial divided by the gcd of its monomials
Polynomial primitive_part(const Polynomial& f);

struct SagbiVerdict {
  bool pass = false;
  // the smallest-degree primitive part among the non-subducting remainders;
  // a new invariant candidate
  std::optional<Polynomial> witness;
  int degree_cap = 0;
};

SagbiVerdict sagbi_test(const std::vector<Polynomial>& basis, int degree_cap = 0);

struct DivideByXResult {
  bool completed = false;  // false when the sweep budget ran out
  std::vector<Polynomial> basis;
  struct LogEntry {
    TeteATete tete;
    int remainder_degree = 0;
    int stripped_power = 0;
    Polynomial inserted;
  };
  std::vector<LogEntry> log;
  int sweeps = 0;
};

// Completion loop: subduct every nontrivial tete-a-tete; strip the maximal
// power of x from each nonzero remainder and adjoin the quotient; repeat
// until everything subducts to zero. x may be a variable or a sum of two
// variables (handled by a linear change of coordinates).
DivideByXResult sagbi_divide_by_x(std::vector<Polynomial> basis, const Polynomial& x,
                                  int sweep_budget = 32, int degree_cap = 0);

}  // namespace klein4
