#include "klein4/sagbi.hpp"

#include <algorithm>
#include <map>

namespace klein4 {

namespace {

// DFS search for exponents E >= 0 with prod lms[i]^E[i] == target.
// Generators are tried in the given index order.
bool find_representation(const std::vector<Monomial>& lms, const std::vector<size_t>& order,
                         size_t pos, std::vector<int>& target, std::vector<int>& out) {
  bool any = false;
  for (int t : target)
    if (t) {
      any = true;
      break;
    }
  if (!any) return true;
  if (pos == order.size()) return false;
  size_t g = order[pos];
  const Monomial& lm = lms[g];
  int cap = -1;
  for (size_t v = 0; v < target.size(); ++v) {
    if (lm.exp(v) == 0) continue;
    int c = target[v] / lm.exp(v);
    cap = cap < 0 ? c : std::min(cap, c);
  }
  if (cap < 0) cap = 0;  // constant lead monomials never occur here
  for (int count = cap; count >= 0; --count) {
    for (size_t v = 0; v < target.size(); ++v) target[v] -= count * lm.exp(v);
    bool feasible = true;
    for (int t : target)
      if (t < 0) feasible = false;
    if (feasible && find_representation(lms, order, pos + 1, target, out)) {
      out[g] = count;
      for (size_t v = 0; v < target.size(); ++v) target[v] += count * lm.exp(v);
      return true;
    }
    for (size_t v = 0; v < target.size(); ++v) target[v] += count * lm.exp(v);
  }
  return false;
}

std::vector<size_t> degree_descending_order(const std::vector<Polynomial>& basis) {
  std::vector<size_t> order(basis.size());
  for (size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(), [&](size_t a, size_t b) {
    return basis[a].degree() > basis[b].degree();
  });
  return order;
}

Polynomial power_product(const std::vector<Polynomial>& basis, const std::vector<int>& exps) {
  Polynomial acc =
      Polynomial::constant(basis.front().ambient(), Scalar::one(basis.front().field()));
  for (size_t i = 0; i < basis.size(); ++i)
    if (exps[i]) acc = acc * basis[i].pow(exps[i]);
  return acc;
}

}  // namespace

Polynomial expand_combination(const std::vector<std::pair<Scalar, std::vector<int>>>& comb,
                              const std::vector<Polynomial>& basis) {
  if (basis.empty()) throw Error(ErrorCode::Internal, "empty basis");
  Polynomial acc = Polynomial::zero(basis.front().ambient(), basis.front().field());
  for (const auto& [c, exps] : comb) acc = acc + power_product(basis, exps) * c;
  return acc;
}

SubductionResult subduct(const Polynomial& f, const std::vector<Polynomial>& basis) {
  if (basis.empty()) throw Error(ErrorCode::Internal, "empty basis");
  if (!f.homogeneous_degree().has_value())
    throw Error(ErrorCode::NonHomogeneousMix, "subduction runs degreewise");
  std::vector<Monomial> lms;
  std::vector<Scalar> lcs;
  for (const Polynomial& b : basis) {
    auto [lm, lc] = b.leading();
    lms.push_back(lm);
    lcs.push_back(lc);
  }
  std::vector<size_t> order = degree_descending_order(basis);

  SubductionResult out{f, {}};
  while (!out.remainder.is_zero()) {
    auto [lm, lc] = out.remainder.leading();
    std::vector<int> target = lm.exps();
    std::vector<int> exps(basis.size(), 0);
    if (!find_representation(lms, order, 0, target, exps)) break;
    Scalar denom = Scalar::one(f.field());
    for (size_t i = 0; i < basis.size(); ++i)
      for (int k = 0; k < exps[i]; ++k) denom = denom * lcs[i];
    Scalar coeff = lc * denom.inverse();
    out.remainder = out.remainder + power_product(basis, exps) * coeff;
    out.combination.emplace_back(coeff, exps);
  }
  return out;
}

TeteResult tete_a_tetes(const std::vector<Polynomial>& basis, int degree_cap) {
  if (basis.empty()) throw Error(ErrorCode::Internal, "empty basis");
  size_t nvars = basis.front().ambient()->size();
  std::vector<Monomial> lms;
  std::vector<int> degs;
  int maxdeg = 1;
  for (const Polynomial& b : basis) {
    lms.push_back(b.leading_monomial());
    degs.push_back(b.degree());
    maxdeg = std::max(maxdeg, b.degree());
  }
  int cap = degree_cap > 0 ? degree_cap : 2 * maxdeg;

  // all power products of weighted degree <= cap, grouped into fibers
  std::map<std::vector<int>, std::vector<std::vector<int>>> fibers;
  std::vector<int> exps(basis.size(), 0);
  std::vector<int> mono(nvars, 0);
  std::function<void(size_t, int)> enumerate = [&](size_t i, int rem) {
    if (i == basis.size()) {
      int deg = 0;
      for (int v : mono) deg += v;
      if (deg > 0) fibers[mono].push_back(exps);
      return;
    }
    enumerate(i + 1, rem);
    int count = 0;
    while ((count + 1) * degs[i] <= rem) {
      ++count;
      exps[i] = count;
      for (size_t v = 0; v < nvars; ++v) mono[v] += lms[i].exp(v);
      enumerate(i + 1, rem - count * degs[i]);
    }
    if (count) {
      for (size_t v = 0; v < nvars; ++v) mono[v] -= count * lms[i].exp(v);
      exps[i] = 0;
    }
  };
  enumerate(0, cap);

  // fibers ascending by total degree, then by exponent vector
  std::vector<const std::pair<const std::vector<int>, std::vector<std::vector<int>>>*> sorted;
  for (const auto& fiber : fibers)
    if (fiber.second.size() > 1) sorted.push_back(&fiber);
  std::stable_sort(sorted.begin(), sorted.end(), [](const auto* a, const auto* b) {
    int da = 0, db = 0;
    for (int v : a->first) da += v;
    for (int v : b->first) db += v;
    return da < db;
  });

  TeteResult out;
  out.degree_cap = cap;
  std::vector<std::pair<std::vector<int>, std::vector<int>>> moves;
  for (const auto* fiber : sorted) {
    const std::vector<std::vector<int>>& elems = fiber->second;
    int fiber_degree = 0;
    for (int v : fiber->first) fiber_degree += v;
    // connectivity under the moves collected so far
    std::vector<int> comp(elems.size(), -1);
    int ncomp = 0;
    for (size_t s = 0; s < elems.size(); ++s) {
      if (comp[s] >= 0) continue;
      int id = ncomp++;
      std::vector<size_t> stack = {s};
      comp[s] = id;
      while (!stack.empty()) {
        std::vector<int> cur = elems[stack.back()];
        stack.pop_back();
        for (const auto& [p, q] : moves) {
          for (int dir = 0; dir < 2; ++dir) {
            const std::vector<int>& from = dir ? q : p;
            const std::vector<int>& to = dir ? p : q;
            bool applies = true;
            for (size_t i = 0; i < cur.size(); ++i)
              if (cur[i] < from[i]) {
                applies = false;
                break;
              }
            if (!applies) continue;
            std::vector<int> next = cur;
            for (size_t i = 0; i < cur.size(); ++i) next[i] += to[i] - from[i];
            for (size_t t = 0; t < elems.size(); ++t)
              if (comp[t] < 0 && elems[t] == next) {
                comp[t] = id;
                stack.push_back(t);
              }
          }
        }
      }
    }
    if (ncomp <= 1) continue;
    // connect every further component to the first, cancelling common factors
    std::vector<size_t> reps(size_t(ncomp), SIZE_MAX);
    for (size_t s = 0; s < elems.size(); ++s)
      if (reps[size_t(comp[s])] == SIZE_MAX) reps[size_t(comp[s])] = s;
    for (int k = 1; k < ncomp; ++k) {
      std::vector<int> left = elems[reps[0]];
      std::vector<int> right = elems[size_t(reps[size_t(k)])];
      for (size_t i = 0; i < left.size(); ++i) {
        int m = std::min(left[i], right[i]);
        left[i] -= m;
        right[i] -= m;
      }
      bool disjoint = true;
      for (size_t i = 0; i < left.size(); ++i)
        if (left[i] && right[i]) disjoint = false;
      int deg = 0;
      for (size_t i = 0; i < left.size(); ++i) deg += left[i] * degs[i];
      out.relations.push_back({left, right, deg, disjoint});
      moves.emplace_back(left, right);
    }
  }
  return out;
}

Polynomial primitive_part(const Polynomial& f) {
  if (f.is_zero()) return f;
  Monomial g = f.leading_monomial();
  for (const auto& [m, c] : f.terms()) g = Monomial::gcd(g, m);
  return f.exact_divide(g);
}

SagbiVerdict sagbi_test(const std::vector<Polynomial>& basis, int degree_cap) {
  TeteResult rels = tete_a_tetes(basis, degree_cap);
  SagbiVerdict out;
  out.degree_cap = rels.degree_cap;
  for (const TeteATete& t : rels.relations) {
    if (!t.nontrivial) continue;
    Polynomial lhs = power_product(basis, t.left);
    Polynomial rhs = power_product(basis, t.right);
    Polynomial diff =
        lhs * lhs.leading().second.inverse() + rhs * rhs.leading().second.inverse();
    if (diff.is_zero()) continue;
    SubductionResult s = subduct(diff, basis);
    if (!s.remainder.is_zero()) {
      Polynomial cand = primitive_part(s.remainder);
      if (!out.witness.has_value() || cand.degree() < out.witness->degree())
        out.witness = cand;
    }
  }
  out.pass = !out.witness.has_value();
  return out;
}

namespace {

// change of coordinates making x = x_a + x_b a smallest-ordered variable
struct CoordinateChange {
  AmbientPtr from, to;
  std::vector<Polynomial> fwd;   // old variable -> poly in new ambient
  std::vector<Polynomial> back;  // new variable -> poly in old ambient
  size_t new_var = 0;            // index of the distinguished variable in `to`
};

CoordinateChange make_change(const AmbientPtr& amb, const FieldPtr& field, size_t va,
                             size_t vb) {
  CoordinateChange ch;
  ch.from = amb;
  size_t drop = std::min(va, vb);     // replaced variable
  size_t keep = std::max(va, vb);
  std::string fresh = amb->index_of("x").has_value() ? "x0" : "x";
  std::vector<std::string> names = {fresh};
  for (size_t i = 0; i < amb->size(); ++i)
    if (i != drop) names.push_back(amb->name(i));
  ch.to = make_ambient(names);
  ch.new_var = 0;
  auto newvar = [&](size_t i) {
    // position of old variable i inside `to`
    size_t pos = 1;
    for (size_t t = 0; t < amb->size(); ++t) {
      if (t == drop) continue;
      if (t == i) return Polynomial::variable(ch.to, field, pos);
      ++pos;
    }
    throw Error(ErrorCode::Internal, "variable mapping");
  };
  for (size_t i = 0; i < amb->size(); ++i) {
    if (i == drop)
      ch.fwd.push_back(Polynomial::variable(ch.to, field, 0) + newvar(keep));
    else
      ch.fwd.push_back(newvar(i));
  }
  // back: new variable 0 -> x_a + x_b, others -> themselves
  ch.back.push_back(Polynomial::variable(amb, field, va) +
                    Polynomial::variable(amb, field, vb));
  for (size_t t = 0; t < amb->size(); ++t)
    if (t != drop) ch.back.push_back(Polynomial::variable(amb, field, t));
  return ch;
}

Polynomial map_through(const Polynomial& f, const AmbientPtr& target,
                       const std::vector<Polynomial>& images) {
  Polynomial out(target, f.field());
  for (const auto& [m, c] : f.terms()) {
    Polynomial t = Polynomial::constant(target, c);
    for (size_t i = 0; i < m.nvars(); ++i)
      if (m.exp(i)) t = t * images[i].pow(m.exp(i));
    out = out + t;
  }
  return out;
}

}  // namespace

DivideByXResult sagbi_divide_by_x(std::vector<Polynomial> basis, const Polynomial& x,
                                  int sweep_budget, int degree_cap) {
  if (basis.empty()) throw Error(ErrorCode::Internal, "empty basis");
  AmbientPtr amb = basis.front().ambient();
  FieldPtr field = basis.front().field();

  // locate the distinguished variable, changing coordinates when x is a
  // two-variable sum
  std::optional<CoordinateChange> change;
  size_t xvar = SIZE_MAX;
  if (x.term_count() == 1 && x.leading_monomial().degree() == 1) {
    for (size_t v = 0; v < amb->size(); ++v)
      if (x.leading_monomial().exp(v)) xvar = v;
  } else if (x.term_count() == 2 && x.degree() == 1) {
    std::vector<size_t> vars;
    for (const auto& [m, c] : x.terms())
      for (size_t v = 0; v < amb->size(); ++v)
        if (m.exp(v)) vars.push_back(v);
    change = make_change(amb, field, vars[0], vars[1]);
    xvar = change->new_var;
    for (Polynomial& b : basis) b = map_through(b, change->to, change->fwd);
  } else {
    throw Error(ErrorCode::Internal,
                "divide-by-x needs a variable or a sum of two variables");
  }

  AmbientPtr work_amb = change ? change->to : amb;
  const size_t input_count = basis.size();
  DivideByXResult out;
  for (int sweep = 0; sweep < sweep_budget; ++sweep) {
    out.sweeps = sweep + 1;
    TeteResult rels = tete_a_tetes(basis, degree_cap);
    std::vector<Polynomial> inserts;
    for (const TeteATete& t : rels.relations) {
      if (!t.nontrivial) continue;
      Polynomial lhs = power_product(basis, t.left);
      Polynomial rhs = power_product(basis, t.right);
      Polynomial diff =
          lhs * lhs.leading().second.inverse() + rhs * rhs.leading().second.inverse();
      if (diff.is_zero()) continue;
      Polynomial rem = subduct(diff, basis).remainder;
      int guard = 0;
      while (!rem.is_zero() && guard++ < 16) {
        int strip = rem.degree_in(xvar);
        for (const auto& [m, c] : rem.terms()) strip = std::min(strip, m.exp(xvar));
        if (strip > 0) {
          Monomial xm(work_amb->size());
          xm.exp(xvar) = strip;
          rem = rem.exact_divide(xm);
        }
        Polynomial again = subduct(rem, basis).remainder;
        if (again == rem) {
          out.log.push_back({t, rem.degree(), strip, rem});
          inserts.push_back(rem);
          break;
        }
        rem = again;
      }
    }
    if (inserts.empty()) {
      out.completed = true;
      break;
    }
    for (Polynomial& p : inserts) {
      bool dup = false;
      for (const Polynomial& b : basis)
        if (b == p) dup = true;
      if (!dup) basis.push_back(p * p.leading().second.inverse());
    }
  }

  // drop inserted elements the rest of the basis already generates,
  // latest first; the input set stays
  bool removed = true;
  while (removed && basis.size() > input_count) {
    removed = false;
    for (size_t i = basis.size(); i-- > input_count;) {
      std::vector<Polynomial> rest;
      for (size_t j = 0; j < basis.size(); ++j)
        if (j != i) rest.push_back(basis[j]);
      if (subduct(basis[i], rest).remainder.is_zero()) {
        basis.erase(basis.begin() + long(i));
        removed = true;
      }
    }
  }

  if (change) {
    for (Polynomial& b : basis) b = map_through(b, amb, change->back);
    for (auto& entry : out.log) entry.inserted = map_through(entry.inserted, amb, change->back);
  }
  out.basis = std::move(basis);
  return out;
}

}  // namespace klein4
