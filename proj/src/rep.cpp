#include "klein4/rep.hpp"

#include <algorithm>

namespace klein4 {

GroupElement group_mul(GroupElement a, GroupElement b) {
  auto v = [](GroupElement g) {
    switch (g) {
      case GroupElement::E: return 0;
      case GroupElement::S1: return 1;
      case GroupElement::S2: return 2;
      case GroupElement::S12: return 3;
    }
    return 0;
  };
  static const GroupElement table[4] = {GroupElement::E, GroupElement::S1, GroupElement::S2,
                                        GroupElement::S12};
  return table[v(a) ^ v(b)];
}

const std::vector<GroupElement>& group_elements() {
  static const std::vector<GroupElement> all = {GroupElement::E, GroupElement::S1,
                                                GroupElement::S2, GroupElement::S12};
  return all;
}

Representation::Representation(RepKind kind, int m, Scalar lambda, AmbientPtr ambient,
                               FieldPtr field, std::vector<Polynomial> sigma1,
                               std::vector<Polynomial> sigma2, size_t x_count, size_t y_count)
    : kind_(kind),
      m_(m),
      lambda_(lambda),
      c_(lambda * lambda + lambda),
      ambient_(std::move(ambient)),
      field_(std::move(field)),
      x_count_(x_count),
      y_count_(y_count),
      sigma1_(std::move(sigma1)),
      sigma2_(std::move(sigma2)) {
  for (size_t i = 0; i < ambient_->size(); ++i)
    identity_.push_back(Polynomial::variable(ambient_, field_, i));
  for (const Polynomial& img : sigma1_) sigma12_.push_back(img.substitute(sigma2_));
  verify_construction();
}

void Representation::verify_construction() const {
  for (size_t i = 0; i < ambient_->size(); ++i) {
    Polynomial v = identity_[i];
    if (sigma1_[i].substitute(sigma1_) != v || sigma2_[i].substitute(sigma2_) != v)
      throw Error(ErrorCode::Internal, "generator is not an involution on " + ambient_->name(i));
    if (sigma1_[i].substitute(sigma2_) != sigma2_[i].substitute(sigma1_))
      throw Error(ErrorCode::Internal, "generators do not commute on " + ambient_->name(i));
  }
  if (kind_ == RepKind::Regular) {
    if (transfer(var(3)) != var(0))
      throw Error(ErrorCode::Internal, "regular representation: Tr(z) != x");
  }
}

Representation Representation::even_v(int m, const Scalar& lambda) {
  if (m < 1) throw Error(ErrorCode::IndexOutOfRange, "even_v needs m >= 1");
  FieldPtr f = lambda.field();
  std::vector<std::string> names;
  for (int j = 1; j <= m; ++j) names.push_back("x" + std::to_string(j));
  for (int j = 1; j <= m; ++j) names.push_back("y" + std::to_string(j));
  AmbientPtr amb = make_ambient(names);
  std::vector<Polynomial> s1, s2;
  auto xv = [&](int j) { return Polynomial::variable(amb, f, j - 1); };
  auto yv = [&](int j) { return Polynomial::variable(amb, f, m + j - 1); };
  for (int j = 1; j <= m; ++j) {
    s1.push_back(xv(j));
    s2.push_back(xv(j));
  }
  for (int j = 1; j <= m; ++j) {
    s1.push_back(yv(j) + xv(j));
    Polynomial img = yv(j) + xv(j) * lambda;
    if (j > 1) img = img + xv(j - 1);
    s2.push_back(img);
  }
  return Representation(RepKind::EvenV, m, lambda, amb, f, std::move(s1), std::move(s2),
                        size_t(m), size_t(m));
}

Representation Representation::omega_minus(int m, FieldPtr field) {
  if (m < 1) throw Error(ErrorCode::IndexOutOfRange, "omega_minus needs m >= 1");
  std::vector<std::string> names;
  for (int j = 1; j <= m; ++j) names.push_back("x" + std::to_string(j));
  for (int j = 1; j <= m + 1; ++j) names.push_back("y" + std::to_string(j));
  AmbientPtr amb = make_ambient(names);
  std::vector<Polynomial> s1, s2;
  auto xv = [&](int j) {
    if (j < 1 || j > m) return Polynomial::zero(amb, field);
    return Polynomial::variable(amb, field, j - 1);
  };
  auto yv = [&](int j) { return Polynomial::variable(amb, field, m + j - 1); };
  for (int j = 1; j <= m; ++j) {
    s1.push_back(xv(j));
    s2.push_back(xv(j));
  }
  for (int j = 1; j <= m + 1; ++j) {
    s1.push_back(yv(j) + xv(j));
    s2.push_back(yv(j) + xv(j - 1));
  }
  return Representation(RepKind::OmegaMinus, m, Scalar::zero(field), amb, field, std::move(s1),
                        std::move(s2), size_t(m), size_t(m + 1));
}

Representation Representation::omega_plus(int m, FieldPtr field) {
  if (m < 1) throw Error(ErrorCode::IndexOutOfRange, "omega_plus needs m >= 1");
  std::vector<std::string> names;
  for (int j = 1; j <= m + 1; ++j) names.push_back("x" + std::to_string(j));
  for (int j = 1; j <= m; ++j) names.push_back("y" + std::to_string(j));
  AmbientPtr amb = make_ambient(names);
  std::vector<Polynomial> s1, s2;
  auto xv = [&](int j) { return Polynomial::variable(amb, field, j - 1); };
  auto yv = [&](int j) { return Polynomial::variable(amb, field, m + 1 + j - 1); };
  for (int j = 1; j <= m + 1; ++j) {
    s1.push_back(xv(j));
    s2.push_back(xv(j));
  }
  for (int j = 1; j <= m; ++j) {
    s1.push_back(yv(j) + xv(j));
    s2.push_back(yv(j) + xv(j + 1));
  }
  return Representation(RepKind::OmegaPlus, m, Scalar::zero(field), amb, field, std::move(s1),
                        std::move(s2), size_t(m + 1), size_t(m));
}

Representation Representation::regular(FieldPtr field) {
  // ascending order x < y2 < y1 < z
  AmbientPtr amb = make_ambient({"x", "y2", "y1", "z"});
  auto v = [&](size_t i) { return Polynomial::variable(amb, field, i); };
  Polynomial x = v(0), y2 = v(1), y1 = v(2), z = v(3);
  // s1: z -> z + y1, y2 -> y2 + x, y1 and x fixed
  std::vector<Polynomial> s1 = {x, y2 + x, y1, z + y1};
  // s2: z -> z + y2, y1 -> y1 + x, y2 and x fixed
  std::vector<Polynomial> s2 = {x, y2, y1 + x, z + y2};
  return Representation(RepKind::Regular, 1, Scalar::zero(field), amb, field, std::move(s1),
                        std::move(s2), 1, 2);
}

namespace {

Scalar parse_lambda_text(const std::string& text) {
  if (text == "0" || text == "1") return Scalar::parse(Field::gf2(), text);
  std::string body = text;
  FieldPtr f;
  if (body.rfind("gf", 0) == 0) {
    size_t colon = body.find(':');
    if (colon == std::string::npos)
      throw Error(ErrorCode::ParseError, "lambda field prefix needs gf<order>:<value>");
    int order = std::stoi(body.substr(2, colon - 2));
    int k = 0;
    while ((1 << k) < order) ++k;
    f = Field::gf2k(k);
    body = body.substr(colon + 1);
  } else if (body.find('l') != std::string::npos) {
    f = Field::rational();
  } else {
    f = Field::gf2k(2);
  }
  return Scalar::parse(f, body);
}

}  // namespace

Representation Representation::parse_selector(const std::string& selector) {
  auto split = [](const std::string& s, char sep) {
    std::vector<std::string> parts;
    std::string cur;
    for (char ch : s) {
      if (ch == sep) {
        parts.push_back(cur);
        cur.clear();
      } else
        cur += ch;
    }
    parts.push_back(cur);
    return parts;
  };
  std::vector<std::string> parts = split(selector, ':');
  if (parts[0] == "Vreg") return regular();
  if (parts[0] == "Vm") {
    if (parts.size() != 3 || parts[2].rfind("lambda=", 0) != 0)
      throw Error(ErrorCode::ParseError, "expected Vm:<m>:lambda=<scalar>, got " + selector);
    return even_v(std::stoi(parts[1]), parse_lambda_text(parts[2].substr(7)));
  }
  if (parts[0] == "Omega-" && parts.size() == 2) return omega_minus(std::stoi(parts[1]));
  if (parts[0] == "Omega+" && parts.size() == 2) return omega_plus(std::stoi(parts[1]));
  throw Error(ErrorCode::ParseError, "unknown representation selector: " + selector);
}

std::string Representation::selector() const {
  switch (kind_) {
    case RepKind::EvenV:
      return "Vm:" + std::to_string(m_) + ":lambda=" + lambda_.to_string();
    case RepKind::OmegaMinus:
      return "Omega-:" + std::to_string(m_);
    case RepKind::OmegaPlus:
      return "Omega+:" + std::to_string(m_);
    case RepKind::Regular:
      return "Vreg";
  }
  return "?";
}

size_t Representation::x_index(int j) const {
  if (j < 1 || size_t(j) > x_count_) throw Error(ErrorCode::IndexOutOfRange, "x index");
  return size_t(j) - 1;
}

size_t Representation::y_index(int j) const {
  if (j < 1 || size_t(j) > y_count_) throw Error(ErrorCode::IndexOutOfRange, "y index");
  if (kind_ == RepKind::Regular) return j == 1 ? 2 : 1;
  return x_count_ + size_t(j) - 1;
}

Polynomial Representation::x_or_zero(int j) const {
  if (j < 1 || size_t(j) > x_count_) return zero();
  return x(j);
}

Polynomial Representation::y_or_zero(int j) const {
  if (j < 1 || size_t(j) > y_count_) return zero();
  return y(j);
}

const std::vector<Polynomial>& Representation::images(GroupElement g) const {
  switch (g) {
    case GroupElement::E: return identity_;
    case GroupElement::S1: return sigma1_;
    case GroupElement::S2: return sigma2_;
    case GroupElement::S12: return sigma12_;
  }
  return identity_;
}

Polynomial Representation::act(GroupElement g, const Polynomial& f) const {
  if (!(*f.ambient() == *ambient_))
    throw Error(ErrorCode::MixedAmbient, "polynomial not over this representation");
  if (g == GroupElement::E) return f;
  return f.substitute(images(g));
}

Polynomial Representation::delta(int i, const Polynomial& f) const {
  return act(i == 1 ? GroupElement::S1 : GroupElement::S2, f) + f;
}

Polynomial Representation::transfer(const Polynomial& f) const {
  Polynomial r = f;
  r = r + act(GroupElement::S1, f);
  r = r + act(GroupElement::S2, f);
  r = r + act(GroupElement::S12, f);
  return r;
}

Polynomial Representation::norm(const Polynomial& f) const {
  std::vector<Polynomial> orbit;
  for (GroupElement g : group_elements()) {
    Polynomial t = act(g, f);
    bool seen = false;
    for (const Polynomial& o : orbit)
      if (o == t) {
        seen = true;
        break;
      }
    if (!seen) orbit.push_back(t);
  }
  Polynomial r = one();
  for (const Polynomial& o : orbit) r = r * o;
  return r;
}

bool Representation::is_invariant(const Polynomial& f) const {
  return delta(1, f).is_zero() && delta(2, f).is_zero();
}

bool Representation::is_sigma1_invariant(const Polynomial& f) const {
  return delta(1, f).is_zero();
}

}  // namespace klein4
