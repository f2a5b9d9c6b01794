#include "klein4/gb.hpp"

#include <algorithm>
#include <deque>

namespace klein4 {

namespace {

// s-polynomial with both sides scaled monic; char 2 so subtraction is +
Polynomial s_poly(const Polynomial& f, const Polynomial& g) {
  auto [lmf, lcf] = f.leading();
  auto [lmg, lcg] = g.leading();
  Monomial l = Monomial::lcm(lmf, lmg);
  Polynomial a = f * Polynomial::term(f.ambient(), lmf.divide(l), lcf.inverse());
  Polynomial b = g * Polynomial::term(g.ambient(), lmg.divide(l), lcg.inverse());
  return a + b;
}

}  // namespace

Polynomial normal_form(const Polynomial& f, const std::vector<Polynomial>& basis) {
  Polynomial p = f;
  Polynomial r(f.ambient(), f.field());
  while (!p.is_zero()) {
    auto [lm, lc] = p.leading();
    bool reduced = false;
    for (const Polynomial& g : basis) {
      if (g.is_zero()) continue;
      auto [lmg, lcg] = g.leading();
      if (!lmg.divides(lm)) continue;
      p = p + g * Polynomial::term(f.ambient(), lmg.divide(lm), lc * lcg.inverse());
      reduced = true;
      break;
    }
    if (!reduced) {
      r.add_term(lm, lc);
      p.add_term(lm, lc);  // removes the leading term (char 2)
    }
  }
  return r;
}

GroebnerBasis buchberger(std::vector<Polynomial> gens, bool make_reduced) {
  std::vector<Polynomial> basis;
  for (Polynomial& g : gens)
    if (!g.is_zero()) basis.push_back(std::move(g));
  if (basis.empty()) return {basis, true};

  struct Pair {
    size_t i, j;
    int lcm_degree;
  };
  auto lcm_deg = [&](size_t i, size_t j) {
    return Monomial::lcm(basis[i].leading_monomial(), basis[j].leading_monomial()).degree();
  };
  std::deque<Pair> queue;
  auto push_pairs = [&](size_t j) {
    for (size_t i = 0; i < j; ++i) queue.push_back({i, j, lcm_deg(i, j)});
  };
  for (size_t j = 0; j < basis.size(); ++j) push_pairs(j);

  while (!queue.empty()) {
    auto best = std::min_element(queue.begin(), queue.end(),
                                 [](const Pair& a, const Pair& b) {
                                   return a.lcm_degree < b.lcm_degree;
                                 });
    Pair p = *best;
    queue.erase(best);
    Monomial lmi = basis[p.i].leading_monomial();
    Monomial lmj = basis[p.j].leading_monomial();
    if (Monomial::gcd(lmi, lmj).is_one()) continue;  // coprime criterion
    Polynomial r = normal_form(s_poly(basis[p.i], basis[p.j]), basis);
    if (r.is_zero()) continue;
    basis.push_back(r);
    push_pairs(basis.size() - 1);
  }

  if (make_reduced) {
    // drop generators whose lead is divisible by another lead, then
    // tail-reduce and normalize
    std::vector<Polynomial> keep;
    for (size_t i = 0; i < basis.size(); ++i) {
      Monomial lm = basis[i].leading_monomial();
      bool redundant = false;
      for (size_t j = 0; j < basis.size() && !redundant; ++j) {
        if (i == j) continue;
        Monomial lmj = basis[j].leading_monomial();
        if (lmj == lm ? j < i : lmj.divides(lm)) redundant = true;
      }
      if (!redundant) keep.push_back(basis[i]);
    }
    std::vector<Polynomial> reduced;
    for (size_t i = 0; i < keep.size(); ++i) {
      std::vector<Polynomial> others;
      for (size_t j = 0; j < keep.size(); ++j)
        if (j != i) others.push_back(keep[j]);
      Polynomial r = normal_form(keep[i], others);
      if (!r.is_zero()) reduced.push_back(r * r.leading().second.inverse());
    }
    std::sort(reduced.begin(), reduced.end(), [](const Polynomial& a, const Polynomial& b) {
      return grevlex_compare(a.leading_monomial(), b.leading_monomial()) == Cmp::GT;
    });
    return {reduced, true};
  }
  return {basis, false};
}

HsopVerdict is_hsop(const HsopSpec& spec) {
  if (spec.elements.empty()) return {false, "empty"};
  const Polynomial& first = spec.elements.front().value;
  size_t nvars = first.ambient()->size();
  if (spec.elements.size() != nvars) return {false, "element count != variable count"};
  uint64_t bound = 1;
  for (const NamedInvariant& e : spec.elements) {
    auto hd = e.value.homogeneous_degree();
    if (!hd.has_value() || e.value.is_zero()) return {false, e.name + " not homogeneous"};
    bound *= uint64_t(*hd);
  }
  std::vector<Polynomial> gens;
  for (const NamedInvariant& e : spec.elements) gens.push_back(e.value);
  GroebnerBasis gb = buchberger(gens);
  for (size_t v = 0; v < nvars; ++v) {
    Polynomial p = Polynomial::variable(first.ambient(), first.field(), v);
    Polynomial power = p;
    bool vanished = false;
    for (uint64_t k = 1; k <= bound; ++k) {
      if (normal_form(power, gb).is_zero()) {
        vanished = true;
        break;
      }
      power = power * p;
    }
    if (!vanished)
      return {false, "no vanishing power of " + first.ambient()->name(v) +
                         " up to exponent " + std::to_string(bound)};
  }
  return {true, ""};
}

BlockHsopVerdict is_block_hsop(const HsopSpec& spec) {
  BlockHsopVerdict out;
  HsopVerdict h = is_hsop(spec);
  if (!h.pass) {
    out.detail = "not an hsop: " + h.detail;
    return out;
  }
  std::vector<Polynomial> gens;
  for (const NamedInvariant& e : spec.elements) gens.push_back(e.value);
  // the elements themselves must satisfy the Buchberger criterion
  for (size_t i = 0; i < gens.size(); ++i)
    for (size_t j = i + 1; j < gens.size(); ++j) {
      if (Monomial::gcd(gens[i].leading_monomial(), gens[j].leading_monomial()).is_one())
        continue;
      if (!normal_form(s_poly(gens[i], gens[j]), gens).is_zero()) {
        out.detail = "s-polynomial of " + spec.elements[i].name + ", " +
                     spec.elements[j].name + " does not reduce to zero";
        return out;
      }
    }
  // reduced monomials, grown from 1 by single-variable multiplications
  size_t nvars = gens.front().ambient()->size();
  std::vector<Monomial> leads;
  for (const Polynomial& g : gens) leads.push_back(g.leading_monomial());
  auto reduced = [&](const Monomial& m) {
    for (const Monomial& l : leads)
      if (l.divides(m)) return false;
    return true;
  };
  std::vector<Monomial> frontier = {Monomial(nvars)};
  std::vector<Monomial> all = frontier;
  while (!frontier.empty()) {
    std::vector<Monomial> next;
    for (const Monomial& m : frontier)
      for (size_t v = 0; v < nvars; ++v) {
        Monomial ext = m;
        ext.exp(v) += 1;
        if (!reduced(ext)) continue;
        if (std::find(all.begin(), all.end(), ext) != all.end()) continue;
        all.push_back(ext);
        next.push_back(ext);
      }
    frontier = std::move(next);
  }
  // componentwise max must itself be reduced and dominate everything
  Monomial top(nvars);
  for (const Monomial& m : all)
    for (size_t v = 0; v < nvars; ++v) top.exp(v) = std::max(top.exp(v), m.exp(v));
  uint64_t divisors = 1;
  for (size_t v = 0; v < nvars; ++v) divisors *= uint64_t(top.exp(v) + 1);
  if (!reduced(top) || divisors != all.size()) {
    out.detail = "reduced monomials are not the divisors of a single monomial";
    return out;
  }
  out.pass = true;
  out.computed_top = top;
  out.top_matches_claim = (top == spec.top_class);
  return out;
}

HilbertVerdict hilbert_ideal_equals(const Representation& rep,
                                    const std::vector<NamedInvariant>& gens, int bound,
                                    Oracle& oracle) {
  HilbertVerdict out;
  std::vector<Polynomial> raw;
  for (const NamedInvariant& g : gens) {
    if (!rep.is_invariant(g.value)) {
      out.witness = g.value;
      return out;
    }
    raw.push_back(g.value);
  }
  GroebnerBasis gb = buchberger(raw);
  for (int d = 1; d <= bound; ++d) {
    bool ok = true;
    oracle.for_each_invariant(d, Subgroup::Full, [&](const Polynomial& f) {
      if (!ok) return;
      if (!normal_form(f, gb).is_zero()) {
        ok = false;
        out.witness = f;
      }
    });
    if (!ok) {
      out.checked_up_to = d - 1;
      return out;
    }
    out.checked_up_to = d;
  }
  out.pass = true;
  return out;
}

}  // namespace klein4
