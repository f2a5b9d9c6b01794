#include "klein4/poly.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>

namespace klein4 {

VariableList::VariableList(std::vector<std::string> names) : names_(std::move(names)) {
  std::set<std::string> seen(names_.begin(), names_.end());
  if (seen.size() != names_.size())
    throw Error(ErrorCode::Internal, "duplicate variable names");
}

std::optional<size_t> VariableList::index_of(const std::string& name) const {
  for (size_t i = 0; i < names_.size(); ++i)
    if (names_[i] == name) return i;
  return std::nullopt;
}

AmbientPtr make_ambient(std::vector<std::string> names) {
  return std::make_shared<const VariableList>(std::move(names));
}

int Monomial::degree() const {
  int d = 0;
  for (int e : e_) d += e;
  return d;
}

bool Monomial::is_one() const {
  for (int e : e_)
    if (e) return false;
  return true;
}

Monomial Monomial::operator*(const Monomial& o) const {
  Monomial r(*this);
  for (size_t i = 0; i < e_.size(); ++i) r.e_[i] += o.e_[i];
  return r;
}

bool Monomial::divides(const Monomial& o) const {
  for (size_t i = 0; i < e_.size(); ++i)
    if (e_[i] > o.e_[i]) return false;
  return true;
}

Monomial Monomial::divide(const Monomial& o) const {
  Monomial r(o);
  for (size_t i = 0; i < e_.size(); ++i) r.e_[i] -= e_[i];
  return r;
}

Monomial Monomial::lcm(const Monomial& a, const Monomial& b) {
  Monomial r(a);
  for (size_t i = 0; i < r.e_.size(); ++i) r.e_[i] = std::max(a.e_[i], b.e_[i]);
  return r;
}

Monomial Monomial::gcd(const Monomial& a, const Monomial& b) {
  Monomial r(a);
  for (size_t i = 0; i < r.e_.size(); ++i) r.e_[i] = std::min(a.e_[i], b.e_[i]);
  return r;
}

Cmp grevlex_compare(const Monomial& a, const Monomial& b) {
  if (a.nvars() != b.nvars())
    throw Error(ErrorCode::MixedAmbient, "comparing monomials of different ambients");
  int da = a.degree(), db = b.degree();
  if (da != db) return da > db ? Cmp::GT : Cmp::LT;
  for (size_t i = 0; i < a.nvars(); ++i) {
    if (a.exp(i) != b.exp(i)) return a.exp(i) < b.exp(i) ? Cmp::GT : Cmp::LT;
  }
  return Cmp::EQ;
}

Polynomial Polynomial::constant(const AmbientPtr& a, const Scalar& c) {
  Polynomial p(a, c.field());
  p.add_term(Monomial(a->size()), c);
  return p;
}

Polynomial Polynomial::variable(const AmbientPtr& a, const FieldPtr& f, size_t index) {
  if (index >= a->size()) throw Error(ErrorCode::IndexOutOfRange, "variable index");
  Monomial m(a->size());
  m.exp(index) = 1;
  return term(a, m, Scalar::one(f));
}

Polynomial Polynomial::term(const AmbientPtr& a, const Monomial& m, const Scalar& c) {
  Polynomial p(a, c.field());
  p.add_term(m, c);
  return p;
}

int Polynomial::degree() const {
  if (terms_.empty()) return -1;
  return terms_.begin()->first.degree();
}

std::optional<int> Polynomial::homogeneous_degree() const {
  if (terms_.empty()) return 0;
  int d = terms_.begin()->first.degree();
  for (const auto& [m, c] : terms_)
    if (m.degree() != d) return std::nullopt;
  return d;
}

Polynomial Polynomial::component(int degree) const {
  Polynomial r(ambient_, field_);
  for (const auto& [m, c] : terms_)
    if (m.degree() == degree) r.terms_.emplace(m, c);
  return r;
}

void Polynomial::add_term(const Monomial& m, const Scalar& c) {
  if (m.nvars() != ambient_->size())
    throw Error(ErrorCode::MixedAmbient, "monomial size mismatch");
  if (c.is_zero()) return;
  auto it = terms_.find(m);
  if (it == terms_.end()) {
    terms_.emplace(m, c);
  } else {
    Scalar s = it->second + c;
    if (s.is_zero())
      terms_.erase(it);
    else
      it->second = s;
  }
}

void Polynomial::check_compatible(const Polynomial& o) const {
  if (!(*ambient_ == *o.ambient_))
    throw Error(ErrorCode::MixedAmbient, "polynomials over different variable lists");
  if (!field_->same(*o.field_))
    throw Error(ErrorCode::MixedFields, "polynomials over different fields");
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
  check_compatible(o);
  Polynomial r(*this);
  for (const auto& [m, c] : o.terms_) r.add_term(m, c);
  return r;
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
  check_compatible(o);
  Polynomial r(ambient_, field_);
  for (const auto& [ma, ca] : terms_)
    for (const auto& [mb, cb] : o.terms_) r.add_term(ma * mb, ca * cb);
  return r;
}

Polynomial Polynomial::operator*(const Scalar& c) const {
  if (c.is_zero()) return Polynomial(ambient_, field_);
  Polynomial r(ambient_, field_);
  for (const auto& [m, s] : terms_) r.terms_.emplace(m, s * c);
  return r;
}

Polynomial Polynomial::pow(int k) const {
  Polynomial acc = constant(ambient_, Scalar::one(field_));
  Polynomial base(*this);
  while (k > 0) {
    if (k & 1) acc = acc * base;
    k >>= 1;
    if (k) base = base * base;
  }
  return acc;
}

bool Polynomial::operator==(const Polynomial& o) const {
  if (!(*ambient_ == *o.ambient_) || !field_->same(*o.field_)) return false;
  return terms_ == o.terms_;
}

std::pair<Monomial, Scalar> Polynomial::leading() const {
  if (terms_.empty()) throw Error(ErrorCode::ZeroPolynomial, "leading term of zero");
  return *terms_.begin();
}

Polynomial Polynomial::exact_divide(const Monomial& m) const {
  Polynomial r(ambient_, field_);
  for (const auto& [mono, c] : terms_) {
    if (!m.divides(mono)) {
      std::string witness;
      for (size_t i = 0; i < mono.nvars(); ++i)
        if (mono.exp(i)) witness += ambient_->name(i) + "^" + std::to_string(mono.exp(i));
      throw Error(ErrorCode::NotDivisible, "monomial not divisible: " + witness);
    }
    r.terms_.emplace(m.divide(mono), c);
  }
  return r;
}

Polynomial Polynomial::substitute(const std::vector<Polynomial>& images) const {
  if (images.size() != ambient_->size())
    throw Error(ErrorCode::MixedAmbient, "substitution image count mismatch");
  Polynomial r(ambient_, field_);
  for (const auto& [m, c] : terms_) {
    Polynomial t = constant(ambient_, c);
    for (size_t i = 0; i < m.nvars(); ++i)
      if (m.exp(i)) t = t * images[i].pow(m.exp(i));
    r = r + t;
  }
  return r;
}

int Polynomial::degree_in(size_t var) const {
  int d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, m.exp(var));
  return d;
}

Polynomial Polynomial::coefficient_of(size_t var, int k) const {
  Polynomial r(ambient_, field_);
  for (const auto& [m, c] : terms_) {
    if (m.exp(var) != k) continue;
    Monomial rest(m);
    rest.exp(var) = 0;
    r.terms_.emplace(rest, c);
  }
  return r;
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [m, c] : terms_) {
    if (!out.empty()) out += "+";
    std::string mono;
    for (size_t i = 0; i < m.nvars(); ++i) {
      if (!m.exp(i)) continue;
      if (!mono.empty()) mono += "*";
      mono += ambient_->name(i);
      if (m.exp(i) > 1) mono += "^" + std::to_string(m.exp(i));
    }
    std::string coef = c.to_string();
    bool needs_parens = coef.find('+') != std::string::npos;
    if (needs_parens) coef = "(" + coef + ")";
    if (mono.empty())
      out += coef;
    else if (c.is_one())
      out += mono;
    else
      out += coef + "*" + mono;
  }
  return out;
}

namespace {

// splits on a separator at paren depth zero
std::vector<std::string> split_top(const std::string& s, char sep) {
  std::vector<std::string> parts;
  int depth = 0;
  std::string cur;
  for (char ch : s) {
    if (ch == '(') ++depth;
    if (ch == ')') --depth;
    if (ch == sep && depth == 0) {
      parts.push_back(cur);
      cur.clear();
    } else {
      cur += ch;
    }
  }
  parts.push_back(cur);
  return parts;
}

}  // namespace

Polynomial Polynomial::parse(const AmbientPtr& a, const FieldPtr& f, const std::string& text) {
  std::string clean;
  for (char ch : text)
    if (!std::isspace(uint8_t(ch))) clean += ch;
  if (clean.empty()) throw Error(ErrorCode::ParseError, "empty polynomial text");
  Polynomial r(a, f);
  if (clean == "0") return r;
  size_t column = 1;
  for (const std::string& term_text : split_top(clean, '+')) {
    if (term_text.empty())
      throw Error(ErrorCode::ParseError,
                  "empty term at column " + std::to_string(column));
    Monomial m(a->size());
    Scalar c = Scalar::one(f);
    bool saw_factor = false;
    for (const std::string& factor : split_top(term_text, '*')) {
      if (factor.empty())
        throw Error(ErrorCode::ParseError, "empty factor at column " + std::to_string(column));
      // variable factor: name[^exp] with name from the ambient list
      size_t caret = factor.find('^');
      std::string base = caret == std::string::npos ? factor : factor.substr(0, caret);
      auto idx = a->index_of(base);
      if (idx.has_value()) {
        int e = 1;
        if (caret != std::string::npos) {
          std::string es = factor.substr(caret + 1);
          if (es.empty() || !std::all_of(es.begin(), es.end(),
                                         [](char ch) { return std::isdigit(uint8_t(ch)); }))
            throw Error(ErrorCode::ParseError,
                        "bad exponent at column " + std::to_string(column + caret + 1));
          e = std::stoi(es);
        }
        m.exp(*idx) += e;
      } else {
        if (saw_factor)
          throw Error(ErrorCode::ParseError,
                      "coefficient must come first at column " + std::to_string(column));
        std::string body = factor;
        if (body.size() >= 2 && body.front() == '(' && body.back() == ')')
          body = body.substr(1, body.size() - 2);
        c = c * Scalar::parse(f, body);
      }
      saw_factor = true;
      column += factor.size() + 1;
    }
    r.add_term(m, c);
  }
  return r;
}

std::pair<Polynomial, Polynomial> monic_divide(const Polynomial& f, const Polynomial& N,
                                               size_t var) {
  int dn = N.degree_in(var);
  Polynomial lead = N.coefficient_of(var, dn);
  if (lead.term_count() != 1 || !lead.leading_monomial().is_one())
    throw Error(ErrorCode::NotMonicInVariable,
                "divisor is not monic in " + N.ambient()->name(var));
  Scalar lc_inv = lead.leading().second.inverse();

  Polynomial q(f.ambient(), f.field());
  Polynomial r = f;
  while (true) {
    int dr = r.degree_in(var);
    if (r.is_zero() || dr < dn) break;
    Polynomial top = r.coefficient_of(var, dr);  // nonzero by construction
    Monomial shift(f.ambient()->size());
    shift.exp(var) = dr - dn;
    Polynomial piece = (top * lc_inv) * Polynomial::term(f.ambient(), shift, Scalar::one(f.field()));
    q = q + piece;
    r = r + piece * N;  // char 2: subtraction is addition
  }
  return {q, r};
}

Polynomial evaluate_lambda(const Polynomial& f, const Scalar& v) {
  Polynomial out(f.ambient(), v.field());
  for (const auto& [m, c] : f.terms()) out.add_term(m, c.evaluate_lambda(v));
  return out;
}

}  // namespace klein4
