#pragma once

#include <functional>
#include <memory>
#include <optional>

#include "klein4/linalg.hpp"
#include "klein4/rep.hpp"

namespace klein4 {

enum class Subgroup { Sigma1, Sigma2, Full };

// Degree-d exponent vectors in a fixed enumeration with O(nvars) ranking.
// A nonzero seed permutes the processing order of the variables, which
// permutes the enumeration without changing the underlying set.
class MonomialTable {
public:
  MonomialTable(size_t nvars, int degree, uint32_t seed = 0);
  size_t size() const { return size_; }
  size_t nvars() const { return nvars_; }
  int degree() const { return degree_; }
  size_t rank(const std::vector<int>& exps) const;
  const int32_t* exps(size_t index) const { return flat_.data() + index * nvars_; }

private:
  size_t nvars_;
  int degree_;
  size_t size_;
  std::vector<size_t> perm_;
  std::vector<int32_t> flat_;
};

struct GradedBasis {
  int degree = 0;
  std::vector<Polynomial> basis;
  size_t dimension() const { return basis.size(); }
};

struct GeneratorProfile {
  // slot d holds data for degree d; slot 0 unused
  std::vector<size_t> invariant_dim;
  std::vector<size_t> decomposable_dim;
  std::vector<size_t> new_generators;
  int noether_number = 0;  // largest degree <= certified_up_to with new generators
  // last fully computed degree; smaller than the requested maximum when the
  // dimension budget cut the run short (partial profile)
  int certified_up_to = 0;
};

struct TransferBasisResult {
  int degree = 0;
  size_t dimension = 0;
  std::vector<Polynomial> basis;
  // the degree-d transfer span equals its slice of the ideal generated by
  // the transfers of the top-class divisors
  bool generated_by_top_divisors = false;
};

// Brute-force ground truth by exact linear algebra on graded pieces.
class Oracle {
public:
  explicit Oracle(const Representation& rep, uint32_t enumeration_seed = 0);
  ~Oracle();
  Oracle(Oracle&&) noexcept;
  Oracle& operator=(Oracle&&) noexcept;

  const Representation& rep() const;

  size_t space_dimension(int d) const;  // dim of the full degree-d piece
  size_t invariant_dimension(int d, Subgroup sub = Subgroup::Full);
  GradedBasis invariant_basis(int d, Subgroup sub = Subgroup::Full);
  void for_each_invariant(int d, Subgroup sub,
                          const std::function<void(const Polynomial&)>& fn);

  GeneratorProfile generator_profile(int max_degree);
  // f homogeneous invariant; true iff f lies in the span of products of
  // lower-degree invariants
  bool is_decomposable(const Polynomial& f);
  bool in_invariant_span(const Polynomial& f);

  TransferBasisResult transfer_image_basis(int d);
  // smallest k <= kmax with f^k in the ideal of S^G generated by the
  // transfers of top-class divisors, or nullopt
  std::optional<int> radical_membership(const Polynomial& f, int kmax);

  // largest monomial-table size the oracle may allocate before it throws
  // BudgetExceeded
  void set_dimension_budget(size_t max_monomials);

  struct Impl;

private:
  std::unique_ptr<Impl> impl_;
};

struct LemmaVerdict {
  bool pass = false;
  std::optional<Monomial> violator;
};

// Which kernel a lemma's hypothesis lives in.
Subgroup lemma_scope(const std::string& lemma);
std::vector<std::string> lemma_ids(const Representation& rep);
// Scans the support of f and checks the named structural condition.
LemmaVerdict lemma_predicate(const Representation& rep, const Polynomial& f,
                             const std::string& lemma);

}  // namespace klein4
