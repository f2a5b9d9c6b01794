#include "klein4/construct.hpp"

#include <algorithm>

namespace klein4 {

namespace {

bool generic_lambda(const Representation& rep) { return !rep.c().is_zero(); }

void require(bool cond, ErrorCode code, const std::string& msg) {
  if (!cond) throw Error(code, msg);
}

Monomial y_power_monomial(const Representation& rep, const std::vector<int>& yexp) {
  Monomial m(rep.ambient()->size());
  for (size_t j = 0; j < yexp.size(); ++j) m.exp(rep.y_index(int(j) + 1)) = yexp[j];
  return m;
}

std::string transfer_name(const Representation& rep, const Monomial& beta) {
  std::string s = "Tr(";
  bool first = true;
  for (size_t i = 0; i < beta.nvars(); ++i) {
    if (!beta.exp(i)) continue;
    if (!first) s += "*";
    s += rep.ambient()->name(i);
    if (beta.exp(i) > 1) s += "^" + std::to_string(beta.exp(i));
    first = false;
  }
  return s + ")";
}

Polynomial checked_invariant(const Representation& rep, const Polynomial& value,
                             const std::string& name) {
  if (!rep.is_invariant(value))
    throw Error(ErrorCode::Internal, name + " failed its invariance check");
  return value;
}

}  // namespace

Polynomial n_basic(const Representation& rep, int i) {
  return rep.y_or_zero(i) * rep.y_or_zero(i) + rep.x_or_zero(i) * rep.y_or_zero(i);
}

Polynomial u_basic(const Representation& rep, int i, int j) {
  return rep.x_or_zero(i) * rep.y_or_zero(j) + rep.x_or_zero(j) * rep.y_or_zero(i);
}

Polynomial capital_n(const Representation& rep, int i) {
  switch (rep.kind()) {
    case RepKind::EvenV: {
      int m = rep.m();
      int bound = generic_lambda(rep) ? m / 2 : (m + 1) / 2;
      require(i >= 1 && i <= bound, ErrorCode::IndexOutOfRange,
              "N_" + std::to_string(i) + " out of family range");
      Polynomial r = n_basic(rep, i);
      Scalar c = rep.c();
      if (!c.is_zero()) {
        Polynomial s = rep.zero();
        for (int j = 1; j <= i; ++j) s = s + u_basic(rep, i - j + 1, i + j);
        r = r + s * c;
      }
      for (int j = 1; j <= i - 1; ++j)
        r = r + u_basic(rep, i - j, i + j) + u_basic(rep, i - j, i + j - 1);
      return checked_invariant(rep, r, "N_" + std::to_string(i));
    }
    case RepKind::OmegaMinus: {
      require(i >= 1 && i <= rep.m() + 1, ErrorCode::IndexOutOfRange,
              "N_" + std::to_string(i) + " out of family range");
      Polynomial r = n_basic(rep, i);
      for (int j = 1; j <= i - 1; ++j)
        r = r + u_basic(rep, i - j, i + j) + u_basic(rep, i - j, i + j - 1);
      return checked_invariant(rep, r, "N_" + std::to_string(i));
    }
    default:
      throw Error(ErrorCode::IndexOutOfRange, "no N_i family for this representation");
  }
}

Polynomial t_basic(const Representation& rep, int j) {
  require(j >= 3, ErrorCode::IndexOutOfRange, "t_j needs j >= 3");
  require(size_t(j) <= rep.y_count(), ErrorCode::IndexOutOfRange, "t_j out of range");
  return u_basic(rep, 1, 2) * rep.x_or_zero(j - 1) + u_basic(rep, 1, j) * rep.x(1);
}

NamedInvariant auxiliary(const Representation& rep, const std::string& name) {
  const Scalar c = rep.c();
  auto named = [&](const Polynomial& v) {
    return NamedInvariant{name, checked_invariant(rep, v, name)};
  };

  if (rep.kind() == RepKind::EvenV) {
    if (name == "w" && rep.m() >= 2) {
      Polynomial n2 = n_basic(rep, 2);
      return named(rep.delta(2, n2) * u_basic(rep, 1, 2) + rep.x(1) * rep.x(1) * n2);
    }
    if (name == "wtilde" && rep.m() >= 2)
      return named((rep.x(1) + rep.x(2)) * u_basic(rep, 1, 2) + rep.x(1) * n_basic(rep, 2));
    if (name == "Ntilde2" && rep.m() == 2 && !generic_lambda(rep)) {
      Polynomial n2 = n_basic(rep, 2);
      return named(n2 * n2 + n2 * (rep.x(1) * rep.x(1) + rep.x(1) * rep.x(2)));
    }
    if (rep.m() == 3) {
      Polynomial n2 = n_basic(rep, 2), n3 = n_basic(rep, 3);
      Polynomial u12 = u_basic(rep, 1, 2), u13 = u_basic(rep, 1, 3), u23 = u_basic(rep, 2, 3);
      Polynomial x1 = rep.x(1), x2 = rep.x(2), x3 = rep.x(3);
      if (name == "u123") return named(x1 * (n2 + u12 + u13) + x2 * u13 * c);
      if (name == "n23")
        return named((n2 + u12 + u13) * (x3 * c + x2 + x1) +
                     (x1 * n3 + x2 * u23 + x3 * u23 * c) * c);
      Monomial mx1(rep.ambient()->size());
      mx1.exp(rep.x_index(1)) = 1;
      Polynomial t3 = t_basic(rep, 3);
      if (name == "u133")
        return named((x3 * t3 * c + x2 * auxiliary(rep, "u123").value).exact_divide(mx1));
      if (name == "n222") {
        Polynomial inner = t3 * t3 + capital_n(rep, 1) * (x2.pow(4) + x1 * x1 * x3 * x3) +
                           ((x2.pow(3) + x1 * x2 * x3) * c + x1 * x2 * x2) * t3;
        return named(inner.exact_divide(mx1).exact_divide(mx1));
      }
      if (name == "u2333") {
        Polynomial inner = (x3 * c + x2) * auxiliary(rep, "n222").value +
                           auxiliary(rep, "n23").value * x2 * x2 +
                           x2 * x2 * (auxiliary(rep, "u123").value + t3);
        return named(inner.exact_divide(mx1));
      }
    }
  }

  if (rep.kind() == RepKind::OmegaMinus && rep.m() == 3) {
    if (name == "u133")
      return named(rep.x(3) * u_basic(rep, 1, 3) + rep.x(1) * u_basic(rep, 2, 4));
    if (name == "u233")
      return named(rep.x(3) * u_basic(rep, 2, 3) + rep.x(2) * u_basic(rep, 2, 4) +
                   rep.x(3) * u_basic(rep, 1, 4));
  }

  if (rep.kind() == RepKind::OmegaPlus) {
    if (name.size() > 1 && name[0] == 'v' && std::isdigit(uint8_t(name[1]))) {
      int j = std::stoi(name.substr(1));
      require(j >= 2 && j <= rep.m(), ErrorCode::IndexOutOfRange, "v_j out of range");
      return named(u_basic(rep, 1, j) * (rep.x(2) * rep.x(2) + rep.x(1) * rep.x(2)) +
                   n_basic(rep, 1) *
                       (rep.x_or_zero(j) * rep.x(2) + rep.x(1) * rep.x_or_zero(j + 1)));
    }
    if (name == "n13" && rep.m() >= 2)
      return named(rep.x(3) * n_basic(rep, 1) + rep.x(3) * u_basic(rep, 1, 2) +
                   rep.x(1) * n_basic(rep, 2));
    if (name == "u1233" && rep.m() >= 2)
      return named((rep.x(3) * rep.x(3) + rep.x(2) * rep.x(3)) * u_basic(rep, 1, 2) +
                   (rep.x(2) * rep.x(2) + rep.x(1) * rep.x(3)) * n_basic(rep, 2));
    if (name == "alpha" && rep.m() >= 3) {
      Polynomial a = (rep.x(1) + rep.x(2) + rep.x(3)) * rep.y(2) * rep.y(3) +
                     (rep.x(1) + rep.x(2) + rep.x(3) + rep.x(4)) * rep.y(1) * rep.y(3) +
                     (rep.x(2) + rep.x(3) + rep.x(4)) * rep.y(1) * rep.y(2) +
                     rep.y(1) * rep.y(1) * rep.y(3) + rep.y(1) * rep.y(3) * rep.y(3);
      return NamedInvariant{name, a};  // not invariant itself; Tr(alpha) is
    }
  }

  if (rep.kind() == RepKind::Regular) {
    Polynomial x = rep.var(0), y2 = rep.var(1), y1 = rep.var(2), z = rep.var(3);
    if (name == "u") return named(y1 * y2 + x * z);
    if (name == "h") return named(y1 * y1 * y2 + y2 * y2 * y1 + x * (z * z + y1 * y2));
  }

  throw Error(ErrorCode::UnknownName,
              "no auxiliary invariant '" + name + "' for " + rep.selector());
}

Monomial top_class(const Representation& rep) {
  switch (rep.kind()) {
    case RepKind::EvenV: {
      int m = rep.m();
      int ell = generic_lambda(rep) ? m / 2 : (m + 1) / 2;
      std::vector<int> yexp(size_t(m), 3);
      for (int i = 0; i < ell; ++i) yexp[size_t(i)] = 1;
      return y_power_monomial(rep, yexp);
    }
    case RepKind::OmegaMinus:
      return y_power_monomial(rep, std::vector<int>(size_t(rep.m() + 1), 1));
    case RepKind::OmegaPlus:
      return y_power_monomial(rep, std::vector<int>(size_t(rep.m()), 3));
    case RepKind::Regular: {
      Monomial m(rep.ambient()->size());
      m.exp(1) = 1;  // y2
      m.exp(2) = 1;  // y1
      m.exp(3) = 3;  // z
      return m;
    }
  }
  throw Error(ErrorCode::Internal, "unreachable");
}

HsopSpec hsop_spec(const Representation& rep) {
  HsopSpec spec;
  spec.top_class = top_class(rep);
  auto add_x = [&](int count) {
    for (int j = 1; j <= count; ++j)
      spec.elements.push_back({"x" + std::to_string(j), rep.x(j)});
  };
  switch (rep.kind()) {
    case RepKind::EvenV: {
      int m = rep.m();
      bool generic = generic_lambda(rep);
      spec.family = generic ? "H" : "H'";
      int ell = generic ? m / 2 : (m + 1) / 2;
      add_x(m);
      for (int i = 1; i <= ell; ++i)
        spec.elements.push_back({"N" + std::to_string(i), capital_n(rep, i)});
      for (int j = ell + 1; j <= m; ++j)
        spec.elements.push_back({"N(y" + std::to_string(j) + ")", rep.norm(rep.y(j))});
      break;
    }
    case RepKind::OmegaMinus: {
      spec.family = "H-";
      add_x(rep.m());
      for (int i = 1; i <= rep.m() + 1; ++i)
        spec.elements.push_back({"N" + std::to_string(i), capital_n(rep, i)});
      break;
    }
    case RepKind::OmegaPlus: {
      spec.family = "H+";
      add_x(rep.m() + 1);
      for (int j = 1; j <= rep.m(); ++j)
        spec.elements.push_back({"N(y" + std::to_string(j) + ")", rep.norm(rep.y(j))});
      break;
    }
    case RepKind::Regular: {
      spec.family = "Vreg";
      spec.elements.push_back({"x", rep.var(0)});
      spec.elements.push_back({"N(y1)", rep.norm(rep.var(2))});
      spec.elements.push_back({"N(y2)", rep.norm(rep.var(1))});
      spec.elements.push_back({"N(z)", rep.norm(rep.var(3))});
      break;
    }
  }
  if (spec.elements.size() != rep.ambient()->size())
    throw Error(ErrorCode::Internal, "hsop size mismatch");
  return spec;
}

std::vector<NamedInvariant> hilbert_generators(const Representation& rep) {
  std::vector<NamedInvariant> gens = hsop_spec(rep).elements;
  if (rep.kind() == RepKind::Regular) {
    gens.push_back(auxiliary(rep, "u"));
    std::swap(gens[1], gens.back());  // x, u, N(y1), N(y2), N(z)
    std::swap(gens[2], gens.back());
    std::swap(gens[3], gens.back());
  }
  return gens;
}

std::vector<NamedInvariant> candidate_set(const Representation& rep) {
  std::vector<NamedInvariant> set;
  switch (rep.kind()) {
    case RepKind::EvenV: {
      int m = rep.m();
      if (generic_lambda(rep)) {
        if (m == 2) {
          set.push_back({"x1", rep.x(1)});
          set.push_back({"x2", rep.x(2)});
          set.push_back({"N1", capital_n(rep, 1)});
          set.push_back(auxiliary(rep, "w"));
          set.push_back({"N(y2)", rep.norm(rep.y(2))});
          return set;
        }
        if (m == 3) {
          for (int j = 1; j <= 3; ++j) set.push_back({"x" + std::to_string(j), rep.x(j)});
          set.push_back({"N1", capital_n(rep, 1)});
          set.push_back({"t3", t_basic(rep, 3)});
          for (const char* nm : {"u123", "u133", "n23", "n222", "u2333"})
            set.push_back(auxiliary(rep, nm));
          set.push_back({"N(y2)", rep.norm(rep.y(2))});
          set.push_back({"N(y3)", rep.norm(rep.y(3))});
          for (std::vector<int> yexp :
               {std::vector<int>{1, 1, 3}, {1, 3, 1}, {0, 3, 3}, {1, 3, 3}}) {
            Monomial beta = y_power_monomial(rep, yexp);
            Polynomial tr =
                rep.transfer(Polynomial::term(rep.ambient(), beta, Scalar::one(rep.field())));
            set.push_back({transfer_name(rep, beta), tr});
          }
          return set;
        }
        set = hsop_spec(rep).elements;
        for (int j = 3; j <= m; ++j) set.push_back({"t" + std::to_string(j), t_basic(rep, j)});
        return set;
      }
      if (m == 2) {
        set.push_back({"x1", rep.x(1)});
        set.push_back({"x2", rep.x(2)});
        set.push_back({"n1", n_basic(rep, 1)});
        set.push_back(auxiliary(rep, "wtilde"));
        set.push_back(auxiliary(rep, "Ntilde2"));
        return set;
      }
      set = hsop_spec(rep).elements;
      for (int j = 3; j <= m; ++j) set.push_back({"t" + std::to_string(j), t_basic(rep, j)});
      return set;
    }
    case RepKind::OmegaMinus: {
      set = hsop_spec(rep).elements;
      for (int j = 3; j <= rep.m() + 1; ++j)
        set.push_back({"t" + std::to_string(j), t_basic(rep, j)});
      return set;
    }
    case RepKind::OmegaPlus: {
      if (rep.m() == 2) {
        for (int j = 1; j <= 3; ++j) set.push_back({"x" + std::to_string(j), rep.x(j)});
        set.push_back({"N(y1)", rep.norm(rep.y(1))});
        set.push_back({"N(y2)", rep.norm(rep.y(2))});
        set.push_back(auxiliary(rep, "v2"));
        set.push_back(auxiliary(rep, "n13"));
        set.push_back(auxiliary(rep, "u1233"));
        Monomial beta = y_power_monomial(rep, {3, 3});
        set.push_back(
            {transfer_name(rep, beta),
             rep.transfer(Polynomial::term(rep.ambient(), beta, Scalar::one(rep.field())))});
        return set;
      }
      // H_m plus the nonzero transfers of divisors of (y_1...y_m)^3,
      // enumerated lexicographically over exponent vectors
      set = hsop_spec(rep).elements;
      std::vector<Polynomial> seen;
      std::vector<int> yexp(size_t(rep.m()), 0);
      while (true) {
        size_t i = 0;
        while (i < yexp.size() && yexp[i] == 3) yexp[i++] = 0;
        if (i == yexp.size()) break;
        ++yexp[i];
        Monomial beta = y_power_monomial(rep, yexp);
        Polynomial tr =
            rep.transfer(Polynomial::term(rep.ambient(), beta, Scalar::one(rep.field())));
        if (tr.is_zero()) continue;
        bool dup = false;
        for (const Polynomial& p : seen)
          if (p == tr) {
            dup = true;
            break;
          }
        if (dup) continue;
        seen.push_back(tr);
        set.push_back({transfer_name(rep, beta), tr});
      }
      return set;
    }
    case RepKind::Regular: {
      set.push_back({"x", rep.var(0)});
      set.push_back(auxiliary(rep, "u"));
      set.push_back({"N(y1)", rep.norm(rep.var(2))});
      set.push_back({"N(y2)", rep.norm(rep.var(1))});
      set.push_back(auxiliary(rep, "h"));
      set.push_back({"N(z)", rep.norm(rep.var(3))});
      return set;
    }
  }
  throw Error(ErrorCode::Internal, "unreachable");
}

std::vector<std::string> identity_ids(const Representation& rep) {
  std::vector<std::string> ids;
  switch (rep.kind()) {
    case RepKind::EvenV:
      if (rep.m() == 2 && generic_lambda(rep))
        ids = {"eq1", "v2_norm_y1_printed"};
      else if (rep.m() == 2 && !generic_lambda(rep))
        ids = {"v20_hypersurface"};
      else if (rep.m() >= 3 && generic_lambda(rep)) {
        ids = {"tr_y1y2yj"};
        if (rep.m() == 3) ids.push_back("w_via_u123");
        if (rep.m() > 3) ids.push_back("norm_y1_subduction");
      } else if (rep.m() >= 3) {
        ids = {"wtilde_via_t3"};
      }
      break;
    case RepKind::OmegaMinus:
      if (rep.m() == 2) ids = {"om_minus2_hypersurface"};
      if (rep.m() == 3) ids = {"om_minus3_syzygy"};
      break;
    case RepKind::OmegaPlus:
      if (rep.m() == 2) ids = {"om2_syzygy"};
      if (rep.m() >= 3) ids = {"tr_alpha"};
      break;
    case RepKind::Regular:
      ids = {"vreg_u_sq", "vreg_h_sq"};
      break;
  }
  return ids;
}

IdentityResult verify_identity(const Representation& rep, const std::string& id) {
  const Scalar c = rep.c();
  Polynomial diff = rep.zero();

  if (id == "eq1" && rep.kind() == RepKind::EvenV && rep.m() == 2) {
    Polynomial w = auxiliary(rep, "w").value;
    Polynomial d2n2 = rep.delta(2, n_basic(rep, 2));
    Polynomial x1 = rep.x(1), x2 = rep.x(2);
    diff = w * w + d2n2 * d2n2 * x2 * x2 * capital_n(rep, 1) + x1.pow(4) * rep.norm(rep.y(2)) +
           w * d2n2 * (d2n2 + x1 * x1);
  } else if (id == "v2_norm_y1_printed" && rep.kind() == RepKind::EvenV && rep.m() == 2) {
    Polynomial w = auxiliary(rep, "w").value;
    Polynomial n1c = capital_n(rep, 1);
    Polynomial x1 = rep.x(1), x2 = rep.x(2);
    diff = rep.norm(rep.y(1)) + n1c * n1c + (x2 * x2 * n1c + w) * (c * c) +
           x1 * x1 * (w * w + w) * n1c;
  } else if (id == "v20_hypersurface" && rep.kind() == RepKind::EvenV && rep.m() == 2 &&
             !generic_lambda(rep)) {
    Polynomial wt = auxiliary(rep, "wtilde").value;
    Polynomial x1 = rep.x(1), x2 = rep.x(2);
    diff = wt * wt + x2 * x2 * (x2 + x1) * (x2 + x1) * n_basic(rep, 1) +
           x1 * x2 * (x1 + x2) * wt + x1 * x1 * auxiliary(rep, "Ntilde2").value;
  } else if (id == "w_via_u123" && rep.kind() == RepKind::EvenV && rep.m() == 3) {
    Polynomial t3 = t_basic(rep, 3);
    diff = auxiliary(rep, "w").value + rep.x(2) * t3 * c +
           rep.x(1) * auxiliary(rep, "u123").value + rep.x(1) * t3;
  } else if (id == "wtilde_via_t3" && rep.kind() == RepKind::EvenV && rep.m() >= 3 &&
             !generic_lambda(rep)) {
    diff = auxiliary(rep, "wtilde").value + rep.x(1) * capital_n(rep, 2) + t_basic(rep, 3);
  } else if (id == "norm_y1_subduction" && rep.kind() == RepKind::EvenV && rep.m() > 3) {
    Polynomial n1c = capital_n(rep, 1), n2c = capital_n(rep, 2);
    Polynomial x1 = rep.x(1), x2 = rep.x(2);
    Scalar c2 = c * c, c3 = c * c * c;
    diff = rep.norm(rep.y(1)) + n1c * n1c + (x2 * x2 * c2 + x1 * x1 * c) * n1c +
           x1 * x1 * c2 * n2c + (x2 * c3 + x1 * c2) * t_basic(rep, 3) +
           x1 * c3 * t_basic(rep, 4);
  } else if (id == "tr_y1y2yj" && rep.kind() == RepKind::EvenV && rep.m() >= 3) {
    // both displayed forms of Tr(y1 y2 yj), checked for every j in 3..m
    for (int j = 3; j <= rep.m(); ++j) {
      Polynomial tr = rep.transfer(rep.y(1) * rep.y(2) * rep.y(j));
      Polynomial xjm = rep.x(j - 1), xj = rep.x(j);
      Polynomial x1 = rep.x(1), x2 = rep.x(2);
      Polynomial form1 = rep.y(1) * (x2 * xjm + x1 * xj) + rep.y(2) * x1 * xjm +
                         rep.y(j) * x1 * x1 + x1 * x2 * (xj * c + xjm) + x1 * x1 * (xj + xjm);
      Polynomial form2 = u_basic(rep, 1, 2) * xjm + u_basic(rep, 1, j) * x1 +
                         rep.transfer(rep.y(1) * rep.y(3)) * (xj * c + xjm) +
                         rep.transfer(rep.y(1) * rep.y(2)) * (xj + xjm);
      diff = diff + (tr + form1) + (tr + form2);
    }
  } else if (id == "om_minus2_hypersurface" && rep.kind() == RepKind::OmegaMinus &&
             rep.m() == 2) {
    Polynomial t3 = t_basic(rep, 3);
    Polynomial x1 = rep.x(1), x2 = rep.x(2);
    diff = t3 * t3 + x2.pow(4) * capital_n(rep, 1) + x1 * x2 * (x1 + x2) * t3 +
           x1 * x1 * x2 * x2 * capital_n(rep, 2) + x1.pow(4) * capital_n(rep, 3);
  } else if (id == "om_minus3_syzygy" && rep.kind() == RepKind::OmegaMinus && rep.m() == 3) {
    diff = rep.x(2) * t_basic(rep, 4) + rep.x(3) * t_basic(rep, 3) +
           rep.x(1) * auxiliary(rep, "u133").value;
  } else if (id == "om2_syzygy" && rep.kind() == RepKind::OmegaPlus && rep.m() == 2) {
    diff = rep.x(3) * auxiliary(rep, "v2").value +
           (rep.x(2) * rep.x(2) + rep.x(1) * rep.x(3)) * auxiliary(rep, "n13").value +
           rep.x(1) * auxiliary(rep, "u1233").value;
  } else if (id == "tr_alpha" && rep.kind() == RepKind::OmegaPlus && rep.m() >= 3) {
    diff = rep.transfer(auxiliary(rep, "alpha").value) + (rep.x(2) + rep.x(3)).pow(3);
  } else if (id == "vreg_u_sq" && rep.kind() == RepKind::Regular) {
    Polynomial u = auxiliary(rep, "u").value, h = auxiliary(rep, "h").value;
    Polynomial x = rep.var(0);
    diff = u * u + rep.norm(rep.var(2)) * rep.norm(rep.var(1)) + x * h;
  } else if (id == "vreg_h_sq" && rep.kind() == RepKind::Regular) {
    Polynomial u = auxiliary(rep, "u").value, h = auxiliary(rep, "h").value;
    Polynomial x = rep.var(0);
    Polynomial ny1 = rep.norm(rep.var(2)), ny2 = rep.norm(rep.var(1));
    diff = h * h + ny1 * ny1 * ny2 + ny1 * ny2 * ny2 +
           x * (h * ny1 + u * h + h * ny2 + x * rep.norm(rep.var(3)));
  } else {
    throw Error(ErrorCode::UnknownIdentity,
                "unknown identity '" + id + "' for " + rep.selector());
  }

  return IdentityResult{id, diff.is_zero(), diff};
}

int noether_number_formula(const Representation& rep) {
  int m = rep.m();
  switch (rep.kind()) {
    case RepKind::EvenV:
      if (m == 1) return generic_lambda(rep) ? 4 : 2;
      return generic_lambda(rep) ? 3 * m - 2 * (m / 2) : 3 * m - 2 * ((m + 1) / 2);
    case RepKind::OmegaMinus:
      return m + 1;
    case RepKind::OmegaPlus:
      return m == 1 ? 4 : 3 * m;
    case RepKind::Regular:
      return 4;
  }
  throw Error(ErrorCode::Internal, "unreachable");
}

}  // namespace klein4
