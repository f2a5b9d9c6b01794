#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "klein4/field.hpp"

namespace klein4 {

// Ordered list of variable names, ascending in the term order
// (names[0] is the smallest variable).
class VariableList {
public:
  explicit VariableList(std::vector<std::string> names);
  size_t size() const { return names_.size(); }
  const std::string& name(size_t i) const { return names_[i]; }
  const std::vector<std::string>& names() const { return names_; }
  std::optional<size_t> index_of(const std::string& name) const;
  bool operator==(const VariableList& o) const { return names_ == o.names_; }

private:
  std::vector<std::string> names_;
};

using AmbientPtr = std::shared_ptr<const VariableList>;

AmbientPtr make_ambient(std::vector<std::string> names);

// Exponent vector; one slot per ambient variable.
class Monomial {
public:
  Monomial() = default;
  explicit Monomial(size_t nvars) : e_(nvars, 0) {}
  explicit Monomial(std::vector<int> exps) : e_(std::move(exps)) {}

  size_t nvars() const { return e_.size(); }
  int exp(size_t i) const { return e_[i]; }
  int& exp(size_t i) { return e_[i]; }
  int degree() const;
  bool is_one() const;

  Monomial operator*(const Monomial& o) const;
  bool divides(const Monomial& o) const;       // this | o
  Monomial divide(const Monomial& o) const;    // o / this, assumes divides
  static Monomial lcm(const Monomial& a, const Monomial& b);
  static Monomial gcd(const Monomial& a, const Monomial& b);

  bool operator==(const Monomial& o) const { return e_ == o.e_; }
  bool operator!=(const Monomial& o) const { return !(*this == o); }

  const std::vector<int>& exps() const { return e_; }

private:
  std::vector<int> e_;
};

enum class Cmp { LT, EQ, GT };

// Graded reverse lexicographic order: higher total degree wins; on equal
// degree the smallest variable with differing exponent decides and the
// smaller exponent there wins.
Cmp grevlex_compare(const Monomial& a, const Monomial& b);

struct GrevlexGreater {
  bool operator()(const Monomial& a, const Monomial& b) const {
    return grevlex_compare(a, b) == Cmp::GT;
  }
};

// Sparse multivariate polynomial: term map sorted descending in grevlex,
// no zero coefficients stored.
class Polynomial {
public:
  using TermMap = std::map<Monomial, Scalar, GrevlexGreater>;

  Polynomial(AmbientPtr ambient, FieldPtr field)
      : ambient_(std::move(ambient)), field_(std::move(field)) {}

  static Polynomial zero(const AmbientPtr& a, const FieldPtr& f) { return Polynomial(a, f); }
  static Polynomial constant(const AmbientPtr& a, const Scalar& c);
  static Polynomial variable(const AmbientPtr& a, const FieldPtr& f, size_t index);
  static Polynomial term(const AmbientPtr& a, const Monomial& m, const Scalar& c);

  const AmbientPtr& ambient() const { return ambient_; }
  const FieldPtr& field() const { return field_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  size_t term_count() const { return terms_.size(); }

  // total degree of the leading term, -1 for zero
  int degree() const;
  // degree if all terms share one total degree
  std::optional<int> homogeneous_degree() const;
  // terms of one total degree
  Polynomial component(int degree) const;

  void add_term(const Monomial& m, const Scalar& c);  // coefficient accumulate

  Polynomial operator+(const Polynomial& o) const;
  Polynomial operator*(const Polynomial& o) const;
  Polynomial operator*(const Scalar& c) const;
  Polynomial pow(int k) const;
  bool operator==(const Polynomial& o) const;
  bool operator!=(const Polynomial& o) const { return !(*this == o); }

  // order-maximal term; throws ZeroPolynomial on zero input
  std::pair<Monomial, Scalar> leading() const;
  Monomial leading_monomial() const { return leading().first; }

  // exact division by a monomial; throws NotDivisible with the first
  // offending monomial in the message
  Polynomial exact_divide(const Monomial& m) const;

  // substitute each variable by the degree-<=1 image in `images`
  Polynomial substitute(const std::vector<Polynomial>& images) const;

  // degree in one variable
  int degree_in(size_t var) const;
  // coefficient of var^k, a polynomial in the remaining variables
  Polynomial coefficient_of(size_t var, int k) const;

  std::string to_string() const;
  static Polynomial parse(const AmbientPtr& a, const FieldPtr& f, const std::string& text);

private:
  void check_compatible(const Polynomial& o) const;
  AmbientPtr ambient_;
  FieldPtr field_;
  TermMap terms_;
};

// f = q*N + r with deg_var(r) < deg_var(N); N must have an invertible
// scalar coefficient at its top var-power. Quotient and remainder are unique.
std::pair<Polynomial, Polynomial> monic_divide(const Polynomial& f, const Polynomial& N,
                                               size_t var);

// Maps an F_2(l) polynomial into a concrete field by evaluating every
// coefficient at v; throws PoleAtValue when a denominator vanishes.
Polynomial evaluate_lambda(const Polynomial& f, const Scalar& v);

}  // namespace klein4
