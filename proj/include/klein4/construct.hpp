#pragma once

#include <string>
#include <vector>

#include "klein4/rep.hpp"

namespace klein4 {

struct NamedInvariant {
  std::string name;
  Polynomial value;
};

// A candidate homogeneous system of parameters with its claimed top class.
struct HsopSpec {
  std::string family;  // "H", "H'", "H-", "H+", "Vreg"
  std::vector<NamedInvariant> elements;
  Monomial top_class;
};

struct IdentityResult {
  std::string id;
  bool holds;           // difference is exactly zero
  Polynomial witness;   // lhs + rhs (char 2); zero iff holds
};

// sigma_1-stable building blocks: n_i = y_i^2 + x_i y_i and
// u_ij = x_i y_j + x_j y_i, with out-of-range variables read as zero.
Polynomial n_basic(const Representation& rep, int i);
Polynomial u_basic(const Representation& rep, int i, int j);

// The G-invariant N_i of the relevant family; leading term y_i^2.
Polynomial capital_n(const Representation& rep, int i);

// t_j = u_12 x_{j-1} + u_1j x_1, an element of the transfer image.
Polynomial t_basic(const Representation& rep, int j);

// Named auxiliary invariants, scoped per representation family:
//  even m>=2:        "w", "wtilde"; V_{2,0} additionally "Ntilde2"
//  V_{3,lambda}:     "u123", "n23", "u133", "n222", "u2333"
//  Omega^{-3}:       "u133", "u233"
//  Omega^{+m}:       "v2".."vm", "n13", "u1233", "alpha" (m>=3)
//  regular:          "u", "h"
// Every value returned is checked G-invariant except "alpha".
NamedInvariant auxiliary(const Representation& rep, const std::string& name);

// The block hsop of the representation's family with its claimed top class.
HsopSpec hsop_spec(const Representation& rep);
Monomial top_class(const Representation& rep);

// Generators of the Hilbert ideal as stated for each family.
std::vector<NamedInvariant> hilbert_generators(const Representation& rep);

// The candidate generating set fed to the SAGBI machinery.
std::vector<NamedInvariant> candidate_set(const Representation& rep);

// Closed-form identities, evaluated exactly. verify_identity returns the
// verdict together with the difference polynomial as witness.
std::vector<std::string> identity_ids(const Representation& rep);
IdentityResult verify_identity(const Representation& rep, const std::string& id);

// Closed-form Noether number of the family.
int noether_number_formula(const Representation& rep);

}  // namespace klein4
