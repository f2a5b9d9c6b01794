#include "klein4/field.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cctype>
#include <map>
#include <mutex>

namespace klein4 {

// ---------------------------------------------------------------------------
// F2Poly

void F2Poly::trim() {
  while (!w_.empty() && w_.back() == 0) w_.pop_back();
}

F2Poly F2Poly::monomial(int degree) {
  F2Poly p;
  p.flip_bit(degree);
  return p;
}

int F2Poly::degree() const {
  if (w_.empty()) return -1;
  return int(64 * (w_.size() - 1) + 63 - std::countl_zero(w_.back()));
}

bool F2Poly::bit(int i) const {
  size_t word = size_t(i) / 64;
  if (word >= w_.size()) return false;
  return (w_[word] >> (i % 64)) & 1u;
}

void F2Poly::flip_bit(int i) {
  size_t word = size_t(i) / 64;
  if (word >= w_.size()) w_.resize(word + 1, 0);
  w_[word] ^= uint64_t(1) << (i % 64);
  trim();
}

F2Poly operator+(const F2Poly& a, const F2Poly& b) {
  F2Poly r;
  r.w_.resize(std::max(a.w_.size(), b.w_.size()), 0);
  for (size_t i = 0; i < a.w_.size(); ++i) r.w_[i] ^= a.w_[i];
  for (size_t i = 0; i < b.w_.size(); ++i) r.w_[i] ^= b.w_[i];
  r.trim();
  return r;
}

F2Poly operator*(const F2Poly& a, const F2Poly& b) {
  if (a.is_zero() || b.is_zero()) return F2Poly();
  F2Poly r;
  r.w_.assign(a.w_.size() + b.w_.size(), 0);
  for (size_t i = 0; i < a.w_.size(); ++i) {
    uint64_t wa = a.w_[i];
    while (wa) {
      int s = std::countr_zero(wa);
      wa &= wa - 1;
      // xor b shifted by 64*i + s into r
      int shift = s;
      for (size_t j = 0; j < b.w_.size(); ++j) {
        uint64_t wb = b.w_[j];
        r.w_[i + j] ^= wb << shift;
        if (shift) r.w_[i + j + 1] ^= wb >> (64 - shift);
      }
    }
  }
  r.trim();
  return r;
}

std::pair<F2Poly, F2Poly> F2Poly::divmod(const F2Poly& a, const F2Poly& b) {
  if (b.is_zero()) throw Error(ErrorCode::DivisionByZero, "divmod by zero polynomial");
  F2Poly q, r = a;
  int db = b.degree();
  while (!r.is_zero() && r.degree() >= db) {
    int shift = r.degree() - db;
    q.flip_bit(shift);
    // r ^= b << shift
    F2Poly t = b * F2Poly::monomial(shift);
    r = r + t;
  }
  return {q, r};
}

F2Poly F2Poly::gcd(F2Poly a, F2Poly b) {
  while (!b.is_zero()) {
    F2Poly r = divmod(a, b).second;
    a = b;
    b = r;
  }
  return a;
}

bool F2Poly::operator<(const F2Poly& o) const {
  if (degree() != o.degree()) return degree() < o.degree();
  for (size_t i = w_.size(); i-- > 0;)
    if (w_[i] != o.w_[i]) return w_[i] < o.w_[i];
  return false;
}

uint16_t F2Poly::eval(uint16_t x, const Field& gf2k) const {
  uint16_t acc = 0;
  for (int i = degree(); i >= 0; --i) {
    acc = gf2k.mul(acc, x);
    if (bit(i)) acc ^= 1;
  }
  return acc;
}

std::string F2Poly::to_string(char var) const {
  if (is_zero()) return "0";
  std::string s;
  for (int i = degree(); i >= 0; --i) {
    if (!bit(i)) continue;
    if (!s.empty()) s += "+";
    if (i == 0)
      s += "1";
    else if (i == 1)
      s += var;
    else {
      s += var;
      s += "^" + std::to_string(i);
    }
  }
  return s;
}

F2Poly F2Poly::parse(const std::string& text, char var) {
  F2Poly r;
  size_t i = 0;
  auto fail = [&](const std::string& msg) {
    throw Error(ErrorCode::ParseError,
                msg + " at column " + std::to_string(i + 1) + " in '" + text + "'");
  };
  if (text.empty()) fail("empty polynomial");
  while (i < text.size()) {
    int deg;
    if (text[i] == '0' || text[i] == '1') {
      deg = (text[i] == '1') ? 0 : -1;
      ++i;
    } else if (text[i] == var) {
      ++i;
      deg = 1;
      if (i < text.size() && text[i] == '^') {
        ++i;
        if (i >= text.size() || !std::isdigit(uint8_t(text[i]))) fail("expected exponent");
        deg = 0;
        while (i < text.size() && std::isdigit(uint8_t(text[i])))
          deg = deg * 10 + (text[i++] - '0');
      }
    } else {
      fail("unexpected character");
    }
    if (deg >= 0) r.flip_bit(deg);
    if (i < text.size()) {
      if (text[i] != '+') fail("expected '+'");
      ++i;
      if (i == text.size()) fail("trailing '+'");
    }
  }
  return r;
}

size_t F2Poly::hash() const {
  size_t h = 0xcbf29ce484222325ull;
  for (uint64_t w : w_) h = (h ^ w) * 0x100000001b3ull;
  return h;
}

// ---------------------------------------------------------------------------
// Field

namespace {

// fixed irreducible moduli, degree 2..8
constexpr std::array<uint32_t, 9> kModuli = {
    0, 0,
    0b111,        // t^2+t+1
    0b1011,       // t^3+t+1
    0b10011,      // t^4+t+1
    0b100101,     // t^5+t^2+1
    0b1000011,    // t^6+t+1
    0b10000011,   // t^7+t+1
    0b100011011,  // t^8+t^4+t^3+t+1
};

bool is_irreducible(uint32_t modulus, int k) {
  // exhaustive trial division by every polynomial of degree 1..k/2
  auto degree_of = [](uint32_t p) {
    int d = -1;
    while (p) {
      ++d;
      p >>= 1;
    }
    return d;
  };
  auto mod = [&](uint32_t a, uint32_t b) {
    int db = degree_of(b);
    while (degree_of(a) >= db) a ^= b << (degree_of(a) - db);
    return a;
  };
  for (int d = 1; 2 * d <= k; ++d)
    for (uint32_t f = 1u << d; f < (2u << d); ++f)
      if (mod(modulus, f) == 0) return false;
  return true;
}

}  // namespace

Field::Field(FieldKind kind, int k, uint32_t modulus)
    : kind_(kind), k_(k), modulus_(modulus) {
  if (kind_ != FieldKind::GF2k) return;
  if (k < 2 || k > 8) throw Error(ErrorCode::Internal, "GF2k requires 2 <= k <= 8");
  if (!is_irreducible(modulus_, k_))
    throw Error(ErrorCode::Internal, "GF2k modulus is reducible");
  // carry-less multiply with reduction, used only to build the tables
  auto direct_mul = [&](uint32_t a, uint32_t b) {
    uint32_t acc = 0;
    for (int i = 0; b >> i; ++i)
      if ((b >> i) & 1) acc ^= a << i;
    for (int d = 2 * (k_ - 1); d >= k_; --d)
      if ((acc >> d) & 1) acc ^= modulus_ << (d - k_);
    return acc;
  };
  // exp/log tables over a searched multiplicative generator (the modulus
  // need not be primitive)
  size_t n = order();
  for (uint32_t g = 2; g < n; ++g) {
    exp_.assign(2 * (n - 1), 0);
    log_.assign(n, 0);
    uint32_t v = 1;
    size_t covered = 0;
    for (size_t i = 0; i < n - 1; ++i) {
      if (i > 0 && v == 1) break;  // g has small order
      exp_[i] = exp_[i + n - 1] = uint16_t(v);
      log_[v] = uint16_t(i);
      v = direct_mul(v, g);
      ++covered;
    }
    if (covered == n - 1 && v == 1) return;
  }
  throw Error(ErrorCode::Internal, "no multiplicative generator found");
}

FieldPtr Field::gf2() {
  static FieldPtr f(new Field(FieldKind::GF2, 1, 0));
  return f;
}

FieldPtr Field::gf2k(int k) {
  static std::mutex mu;
  static std::map<int, FieldPtr> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(k);
  if (it != cache.end()) return it->second;
  if (k < 2 || k > 8) throw Error(ErrorCode::Internal, "GF2k requires 2 <= k <= 8");
  FieldPtr f(new Field(FieldKind::GF2k, k, kModuli[k]));
  cache[k] = f;
  return f;
}

FieldPtr Field::rational() {
  static FieldPtr f(new Field(FieldKind::RationalFunction, 1, 0));
  return f;
}

std::string Field::name() const {
  switch (kind_) {
    case FieldKind::GF2:
      return "GF(2)";
    case FieldKind::GF2k:
      return "GF(2^" + std::to_string(k_) + ")";
    case FieldKind::RationalFunction:
      return "F_2(l)";
  }
  return "?";
}

uint16_t Field::mul(uint16_t a, uint16_t b) const {
  if (kind_ == FieldKind::GF2) return a & b;
  if (a == 0 || b == 0) return 0;
  return exp_[log_[a] + log_[b]];
}

uint16_t Field::inv(uint16_t a) const {
  if (a == 0) throw Error(ErrorCode::DivisionByZero, "inverse of zero in " + name());
  if (kind_ == FieldKind::GF2) return 1;
  size_t n = order();
  return exp_[(n - 1 - log_[a]) % (n - 1)];
}

// ---------------------------------------------------------------------------
// Scalar

Scalar::Scalar(FieldPtr field, uint16_t bits) : field_(std::move(field)), bits_(bits) {
  if (field_->kind() == FieldKind::RationalFunction) {
    num_ = bits ? F2Poly::one() : F2Poly::zero();
    den_ = F2Poly::one();
    bits_ = 0;
  } else {
    canonicalize();
  }
}

Scalar::Scalar(FieldPtr field, F2Poly num, F2Poly den)
    : field_(std::move(field)), num_(std::move(num)), den_(std::move(den)) {
  if (field_->kind() != FieldKind::RationalFunction)
    throw Error(ErrorCode::Internal, "fraction payload needs F_2(l)");
  if (den_.is_zero()) throw Error(ErrorCode::DivisionByZero, "fraction with zero denominator");
  canonicalize();
}

void Scalar::canonicalize() {
  switch (field_->kind()) {
    case FieldKind::GF2:
      bits_ &= 1;
      break;
    case FieldKind::GF2k:
      bits_ &= uint16_t(field_->order() - 1);
      break;
    case FieldKind::RationalFunction: {
      if (num_.is_zero()) {
        den_ = F2Poly::one();
        return;
      }
      F2Poly g = F2Poly::gcd(num_, den_);
      if (!g.is_one()) {
        num_ = F2Poly::divmod(num_, g).first;
        den_ = F2Poly::divmod(den_, g).first;
      }
      break;
    }
  }
}

Scalar Scalar::zero(const FieldPtr& f) { return Scalar(f, uint16_t(0)); }
Scalar Scalar::one(const FieldPtr& f) { return Scalar(f, uint16_t(1)); }

Scalar Scalar::generator(const FieldPtr& f) {
  switch (f->kind()) {
    case FieldKind::GF2:
      return one(f);
    case FieldKind::GF2k:
      return Scalar(f, uint16_t(2));
    case FieldKind::RationalFunction:
      return Scalar(f, F2Poly::gen(), F2Poly::one());
  }
  throw Error(ErrorCode::Internal, "bad field kind");
}

bool Scalar::is_zero() const {
  return field_->kind() == FieldKind::RationalFunction ? num_.is_zero() : bits_ == 0;
}

bool Scalar::is_one() const {
  return field_->kind() == FieldKind::RationalFunction
             ? (num_.is_one() && den_.is_one())
             : bits_ == 1;
}

void Scalar::check_same_field(const Scalar& o) const {
  if (!field_->same(*o.field_))
    throw Error(ErrorCode::MixedFields,
                "mixed fields: " + field_->name() + " vs " + o.field_->name());
}

Scalar Scalar::operator+(const Scalar& o) const {
  check_same_field(o);
  if (field_->kind() == FieldKind::RationalFunction)
    return Scalar(field_, num_ * o.den_ + o.num_ * den_, den_ * o.den_);
  return Scalar(field_, uint16_t(bits_ ^ o.bits_));
}

Scalar Scalar::operator*(const Scalar& o) const {
  check_same_field(o);
  if (field_->kind() == FieldKind::RationalFunction)
    return Scalar(field_, num_ * o.num_, den_ * o.den_);
  return Scalar(field_, field_->mul(bits_, o.bits_));
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw Error(ErrorCode::DivisionByZero, "inverse of zero");
  if (field_->kind() == FieldKind::RationalFunction) return Scalar(field_, den_, num_);
  return Scalar(field_, field_->inv(bits_));
}

bool Scalar::operator==(const Scalar& o) const {
  if (!field_->same(*o.field_)) return false;
  if (field_->kind() == FieldKind::RationalFunction)
    return num_ == o.num_ && den_ == o.den_;
  return bits_ == o.bits_;
}

Scalar Scalar::evaluate_lambda(const Scalar& v) const {
  if (field_->kind() != FieldKind::RationalFunction)
    throw Error(ErrorCode::Internal, "evaluate_lambda needs an F_2(l) scalar");
  const Field& target = *v.field();
  if (target.kind() == FieldKind::RationalFunction)
    throw Error(ErrorCode::Internal, "evaluation point must be concrete");
  uint16_t d = den_.eval(v.bits(), target);
  if (d == 0)
    throw Error(ErrorCode::PoleAtValue,
                "denominator " + den_.to_string('l') + " vanishes at l=" + v.to_string());
  uint16_t n = num_.eval(v.bits(), target);
  return Scalar(v.field(), target.mul(n, target.inv(d)));
}

std::string Scalar::to_string() const {
  switch (field_->kind()) {
    case FieldKind::GF2:
      return bits_ ? "1" : "0";
    case FieldKind::GF2k: {
      F2Poly p(bits_);
      return p.to_string('t');
    }
    case FieldKind::RationalFunction: {
      auto wrap = [](const F2Poly& p) {
        std::string s = p.to_string('l');
        return s.find('+') == std::string::npos ? s : "(" + s + ")";
      };
      return wrap(num_) + "/" + wrap(den_);
    }
  }
  return "?";
}

Scalar Scalar::parse(const FieldPtr& f, const std::string& text) {
  auto strip_parens = [](std::string s) {
    if (s.size() >= 2 && s.front() == '(' && s.back() == ')')
      return s.substr(1, s.size() - 2);
    return s;
  };
  switch (f->kind()) {
    case FieldKind::GF2: {
      if (text == "0") return zero(f);
      if (text == "1") return one(f);
      throw Error(ErrorCode::ParseError, "GF(2) scalar must be 0 or 1, got '" + text + "'");
    }
    case FieldKind::GF2k: {
      F2Poly p = F2Poly::parse(strip_parens(text), 't');
      if (p.degree() >= f->ext_degree())
        throw Error(ErrorCode::ParseError, "GF2k scalar out of range: " + text);
      uint16_t bits = 0;
      for (int i = 0; i <= p.degree(); ++i)
        if (p.bit(i)) bits |= uint16_t(1) << i;
      return Scalar(f, bits);
    }
    case FieldKind::RationalFunction: {
      // num/den with either part optionally parenthesized; bare num means /1
      int depth = 0;
      size_t slash = std::string::npos;
      for (size_t i = 0; i < text.size(); ++i) {
        if (text[i] == '(') ++depth;
        if (text[i] == ')') --depth;
        if (text[i] == '/' && depth == 0) {
          slash = i;
          break;
        }
      }
      std::string ns = slash == std::string::npos ? text : text.substr(0, slash);
      std::string ds = slash == std::string::npos ? "1" : text.substr(slash + 1);
      F2Poly num = F2Poly::parse(strip_parens(ns), 'l');
      F2Poly den = F2Poly::parse(strip_parens(ds), 'l');
      if (den.is_zero()) throw Error(ErrorCode::ParseError, "zero denominator: " + text);
      return Scalar(f, num, den);
    }
  }
  throw Error(ErrorCode::Internal, "bad field kind");
}

size_t Scalar::hash() const {
  if (field_->kind() == FieldKind::RationalFunction)
    return num_.hash() * 31 + den_.hash();
  return bits_;
}

}  // namespace klein4
