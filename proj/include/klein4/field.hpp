#pragma once

#include <cstdint>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

namespace klein4 {

enum class ErrorCode {
  MixedFields,
  DivisionByZero,
  PoleAtValue,
  MixedAmbient,
  ZeroPolynomial,
  NotDivisible,
  NotMonicInVariable,
  IndexOutOfRange,
  UnknownName,
  UnknownIdentity,
  NonHomogeneousMix,
  DegreeBoundExceeded,
  IterationBudgetExceeded,
  NotInvariant,
  UnknownLemma,
  BudgetExceeded,
  ParseError,
  Internal,
};

class Error : public std::runtime_error {
public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}
  ErrorCode code() const { return code_; }

private:
  ErrorCode code_;
};

// Univariate polynomial over F_2, coefficients packed little-endian into
// 64-bit words. Used both as the payload of F_2(l) fractions and as the
// modulus arithmetic behind GF(2^k).
class F2Poly {
public:
  F2Poly() = default;
  explicit F2Poly(uint64_t bits) {
    if (bits) w_.push_back(bits);
  }
  static F2Poly zero() { return F2Poly(); }
  static F2Poly one() { return F2Poly(1); }
  static F2Poly gen() { return F2Poly(2); }  // the variable itself
  static F2Poly monomial(int degree);

  bool is_zero() const { return w_.empty(); }
  bool is_one() const { return w_.size() == 1 && w_[0] == 1; }
  int degree() const;  // -1 for the zero polynomial
  bool bit(int i) const;
  void flip_bit(int i);

  friend F2Poly operator+(const F2Poly& a, const F2Poly& b);
  friend F2Poly operator*(const F2Poly& a, const F2Poly& b);
  // quotient/remainder; b must be nonzero
  static std::pair<F2Poly, F2Poly> divmod(const F2Poly& a, const F2Poly& b);
  static F2Poly gcd(F2Poly a, F2Poly b);

  bool operator==(const F2Poly& o) const { return w_ == o.w_; }
  bool operator!=(const F2Poly& o) const { return !(*this == o); }
  bool operator<(const F2Poly& o) const;  // degree then bits, for canonical maps

  // Evaluate at an element of GF(2^k) given its multiplication closure.
  uint16_t eval(uint16_t x, const class Field& gf2k) const;

  std::string to_string(char var) const;
  static F2Poly parse(const std::string& text, char var);  // throws ParseError

  size_t hash() const;

private:
  void trim();
  std::vector<uint64_t> w_;
};

enum class FieldKind { GF2, GF2k, RationalFunction };

class Field;
using FieldPtr = std::shared_ptr<const Field>;

// A coefficient field: F_2, GF(2^k) for 1 < k <= 8 with a fixed irreducible
// modulus, or the rational function field F_2(l).
class Field {
public:
  static FieldPtr gf2();
  static FieldPtr gf2k(int k);
  static FieldPtr rational();

  FieldKind kind() const { return kind_; }
  int ext_degree() const { return k_; }
  uint32_t modulus_bits() const { return modulus_; }
  size_t order() const { return size_t(1) << k_; }  // GF2/GF2k only

  bool same(const Field& o) const {
    return kind_ == o.kind_ && k_ == o.k_ && modulus_ == o.modulus_;
  }
  std::string name() const;

  // GF(2^k) element arithmetic on packed bit representations.
  uint16_t mul(uint16_t a, uint16_t b) const;
  uint16_t inv(uint16_t a) const;

private:
  Field(FieldKind kind, int k, uint32_t modulus);
  FieldKind kind_;
  int k_ = 1;
  uint32_t modulus_ = 0;
  std::vector<uint16_t> exp_, log_;
};

// An element of one of the three coefficient fields, always in canonical
// form: GF(2^k) payloads reduced mod the modulus, fractions reduced with
// gcd(num, den) = 1 and zero represented as 0/1.
class Scalar {
public:
  Scalar() : Scalar(Field::gf2(), 0) {}
  Scalar(FieldPtr field, uint16_t bits);
  Scalar(FieldPtr field, F2Poly num, F2Poly den);

  static Scalar zero(const FieldPtr& f);
  static Scalar one(const FieldPtr& f);
  // the canonical generator: t for GF(2^k), l for F_2(l)
  static Scalar generator(const FieldPtr& f);

  const FieldPtr& field() const { return field_; }
  bool is_zero() const;
  bool is_one() const;
  uint16_t bits() const { return bits_; }
  const F2Poly& num() const { return num_; }
  const F2Poly& den() const { return den_; }

  Scalar operator+(const Scalar& o) const;
  Scalar operator*(const Scalar& o) const;
  Scalar inverse() const;  // throws DivisionByZero on zero
  bool operator==(const Scalar& o) const;
  bool operator!=(const Scalar& o) const { return !(*this == o); }

  // Substitute a concrete GF(2^k) value for l in an F_2(l) scalar.
  // Throws PoleAtValue if the denominator vanishes at v.
  Scalar evaluate_lambda(const Scalar& v) const;

  std::string to_string() const;
  static Scalar parse(const FieldPtr& f, const std::string& text);

  size_t hash() const;

private:
  void check_same_field(const Scalar& o) const;
  void canonicalize();
  FieldPtr field_;
  uint16_t bits_ = 0;  // GF2 / GF2k payload
  F2Poly num_, den_;   // F_2(l) payload
};

}  // namespace klein4
