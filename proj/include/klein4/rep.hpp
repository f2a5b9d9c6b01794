#pragma once

#include <string>
#include <vector>

#include "klein4/poly.hpp"

namespace klein4 {

// Klein four group <s1, s2 | s1^2 = s2^2 = e, s1 s2 = s2 s1>.
enum class GroupElement { E, S1, S2, S12 };

GroupElement group_mul(GroupElement a, GroupElement b);
const std::vector<GroupElement>& group_elements();

enum class RepKind { EvenV, OmegaMinus, OmegaPlus, Regular };

// A representation from the indecomposable catalog together with the induced
// substitution action on its polynomial ring. Variables are listed ascending
// in the term order.
class Representation {
public:
  // V_{m,lambda}: x_1..x_m, y_1..y_m; s1(y_j) = y_j + x_j,
  // s2(y_1) = y_1 + lambda x_1, s2(y_j) = y_j + lambda x_j + x_{j-1}.
  static Representation even_v(int m, const Scalar& lambda);
  // Omega^{-m}: x_1..x_m, y_1..y_{m+1}; s1(y_j) = y_j + x_j,
  // s2(y_j) = y_j + x_{j-1}, with x_0 = x_{m+1} = 0.
  static Representation omega_minus(int m, FieldPtr field = Field::gf2());
  // Omega^{+m}: x_1..x_{m+1}, y_1..y_m; s1(y_j) = y_j + x_j, s2(y_j) = y_j + x_{j+1}.
  static Representation omega_plus(int m, FieldPtr field = Field::gf2());
  // Regular representation, basis x < y_2 < y_1 < z chosen so that
  // Delta_i(z) = y_i and Tr(z) = x.
  static Representation regular(FieldPtr field = Field::gf2());

  // CLI selector grammar: "Vm:<m>:lambda=<scalar>", "Omega-:<m>",
  // "Omega+:<m>", "Vreg".
  static Representation parse_selector(const std::string& selector);

  RepKind kind() const { return kind_; }
  int m() const { return m_; }
  const Scalar& lambda() const { return lambda_; }
  const Scalar& c() const { return c_; }  // lambda^2 + lambda (EvenV)
  const AmbientPtr& ambient() const { return ambient_; }
  const FieldPtr& field() const { return field_; }
  std::string selector() const;

  size_t x_count() const { return x_count_; }
  size_t y_count() const { return y_count_; }
  // 1-based math indices to ambient slots; Regular maps x/y_1/y_2/z specially
  size_t x_index(int j) const;
  size_t y_index(int j) const;

  Polynomial zero() const { return Polynomial::zero(ambient_, field_); }
  Polynomial one() const { return Polynomial::constant(ambient_, Scalar::one(field_)); }
  Polynomial var(size_t index) const { return Polynomial::variable(ambient_, field_, index); }
  Polynomial x(int j) const { return var(x_index(j)); }
  Polynomial y(int j) const { return var(y_index(j)); }
  // x_j with the convention that out-of-range indices give 0
  Polynomial x_or_zero(int j) const;
  Polynomial y_or_zero(int j) const;

  Polynomial act(GroupElement g, const Polynomial& f) const;
  Polynomial delta(int i, const Polynomial& f) const;  // sigma_i(f) + f
  Polynomial transfer(const Polynomial& f) const;
  Polynomial norm(const Polynomial& f) const;  // product over the distinct orbit
  bool is_invariant(const Polynomial& f) const;
  bool is_sigma1_invariant(const Polynomial& f) const;

  const std::vector<Polynomial>& images(GroupElement g) const;

private:
  Representation(RepKind kind, int m, Scalar lambda, AmbientPtr ambient, FieldPtr field,
                 std::vector<Polynomial> sigma1, std::vector<Polynomial> sigma2,
                 size_t x_count, size_t y_count);
  void verify_construction() const;

  RepKind kind_;
  int m_;
  Scalar lambda_, c_;
  AmbientPtr ambient_;
  FieldPtr field_;
  size_t x_count_, y_count_;
  std::vector<Polynomial> identity_, sigma1_, sigma2_, sigma12_;
};

}  // namespace klein4
