#include "klein4/oracle.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <numeric>
#include <random>

#include "klein4/construct.hpp"

namespace klein4 {

// ---------------------------------------------------------------------------
// MonomialTable: enumeration is lexicographic descending over the permuted
// exponent vector; rank uses the hockey-stick closed form.

MonomialTable::MonomialTable(size_t nvars, int degree, uint32_t seed)
    : nvars_(nvars), degree_(degree) {
  perm_.resize(nvars);
  std::iota(perm_.begin(), perm_.end(), size_t(0));
  if (seed) {
    std::mt19937 rng(seed);
    std::shuffle(perm_.begin(), perm_.end(), rng);
  }
  size_ = size_t(binomial(degree + int(nvars) - 1, int(nvars) - 1));
  flat_.resize(size_ * nvars_);
  std::vector<int32_t> buf(nvars_, 0);
  size_t out = 0;
  // recursive descent without recursion: buf holds permuted exponents
  std::function<void(size_t, int)> emit = [&](size_t i, int rem) {
    if (i + 1 == nvars_) {
      buf[i] = rem;
      for (size_t v = 0; v < nvars_; ++v) flat_[out * nvars_ + perm_[v]] = buf[v];
      ++out;
      return;
    }
    for (int t = rem; t >= 0; --t) {
      buf[i] = t;
      emit(i + 1, rem - t);
    }
  };
  if (nvars_ > 0) emit(0, degree);
  if (out != size_) throw Error(ErrorCode::Internal, "monomial enumeration mismatch");
}

size_t MonomialTable::rank(const std::vector<int>& exps) const {
  size_t r = 0;
  int rem = degree_;
  for (size_t i = 0; i + 1 < nvars_; ++i) {
    int e = exps[perm_[i]];
    int v = int(nvars_ - i) - 1;  // variables after this one
    if (e < rem) r += size_t(binomial(rem - e - 1 + v, v));
    rem -= e;
  }
  return r;
}

// ---------------------------------------------------------------------------
// storage adapters over the three echelon back ends

namespace {

struct SparseVec {
  int degree = 0;
  std::vector<std::pair<std::vector<int>, Scalar>> terms;
};

struct Gf2Adapter {
  FieldPtr f;
  using Ech = Gf2Echelon;
  using Row = Gf2Echelon::Row;
  Ech make_ech(size_t cols, size_t lim) const { return Ech(cols, lim); }
  Row zero(size_t cols) const { return Row((cols + 63) / 64, 0); }
  void add(Row& r, size_t, size_t col, const Scalar& c) const {
    if (c.bits() & 1) r[col / 64] ^= uint64_t(1) << (col % 64);
  }
  Scalar get(const Row& r, size_t, size_t col) const {
    return Scalar(f, uint16_t((r[col / 64] >> (col % 64)) & 1));
  }
  template <class Fn>
  void for_each_nonzero(const Row& r, size_t cols, Fn&& fn) const {
    Scalar one = Scalar::one(f);
    for (size_t w = 0; w < r.size(); ++w) {
      uint64_t bits = r[w];
      while (bits) {
        size_t col = 64 * w + size_t(std::countr_zero(bits));
        bits &= bits - 1;
        if (col < cols) fn(col, one);
      }
    }
  }
  Row slice(const Row& r, size_t, size_t from_col, size_t out_cols) const {
    Row out((out_cols + 63) / 64, 0);
    size_t w0 = from_col / 64;  // from_col is 64-aligned by construction
    for (size_t i = 0; i < out.size(); ++i) out[i] = r[w0 + i];
    // clear any bits beyond out_cols
    if (out_cols % 64) out.back() &= (uint64_t(1) << (out_cols % 64)) - 1;
    return out;
  }
};

struct GfkAdapter {
  FieldPtr f;
  using Ech = GfkEchelon;
  using Row = GfkEchelon::Row;
  Ech make_ech(size_t cols, size_t lim) const { return Ech(f, cols, lim); }
  Row zero(size_t cols) const {
    return Row(size_t(f->ext_degree()) * ((cols + 63) / 64), 0);
  }
  void add(Row& r, size_t cols, size_t col, const Scalar& c) const {
    size_t stride = (cols + 63) / 64;
    uint16_t v = c.bits();
    for (int p = 0; p < f->ext_degree(); ++p)
      if ((v >> p) & 1) r[size_t(p) * stride + col / 64] ^= uint64_t(1) << (col % 64);
  }
  Scalar get(const Row& r, size_t cols, size_t col) const {
    size_t stride = (cols + 63) / 64;
    uint16_t v = 0;
    for (int p = 0; p < f->ext_degree(); ++p)
      v |= uint16_t((r[size_t(p) * stride + col / 64] >> (col % 64)) & 1) << p;
    return Scalar(f, v);
  }
  template <class Fn>
  void for_each_nonzero(const Row& r, size_t cols, Fn&& fn) const {
    size_t stride = (cols + 63) / 64;
    int k = f->ext_degree();
    for (size_t w = 0; w < stride; ++w) {
      uint64_t any = 0;
      for (int p = 0; p < k; ++p) any |= r[size_t(p) * stride + w];
      while (any) {
        size_t col = 64 * w + size_t(std::countr_zero(any));
        any &= any - 1;
        if (col < cols) fn(col, get(r, cols, col));
      }
    }
  }
  Row slice(const Row& r, size_t cols, size_t from_col, size_t out_cols) const {
    size_t stride = (cols + 63) / 64;
    size_t out_stride = (out_cols + 63) / 64;
    size_t w0 = from_col / 64;
    int k = f->ext_degree();
    Row out(size_t(k) * out_stride, 0);
    for (int p = 0; p < k; ++p)
      for (size_t i = 0; i < out_stride; ++i)
        out[size_t(p) * out_stride + i] = r[size_t(p) * stride + w0 + i];
    if (out_cols % 64) {
      uint64_t m = (uint64_t(1) << (out_cols % 64)) - 1;
      for (int p = 0; p < k; ++p) out[size_t(p) * out_stride + out_stride - 1] &= m;
    }
    return out;
  }
};

struct ScalarAdapter {
  FieldPtr f;
  using Ech = ScalarEchelon;
  using Row = ScalarEchelon::Row;
  Ech make_ech(size_t cols, size_t lim) const { return Ech(f, cols, lim); }
  Row zero(size_t cols) const { return Row(cols, Scalar::zero(f)); }
  void add(Row& r, size_t, size_t col, const Scalar& c) const { r[col] = r[col] + c; }
  Scalar get(const Row& r, size_t, size_t col) const { return r[col]; }
  template <class Fn>
  void for_each_nonzero(const Row& r, size_t cols, Fn&& fn) const {
    for (size_t i = 0; i < cols && i < r.size(); ++i)
      if (!r[i].is_zero()) fn(i, r[i]);
  }
  Row slice(const Row& r, size_t, size_t from_col, size_t out_cols) const {
    return Row(r.begin() + long(from_col), r.begin() + long(from_col + out_cols));
  }
};

}  // namespace

// ---------------------------------------------------------------------------
// Oracle implementation

struct Oracle::Impl {
  virtual ~Impl() = default;
  virtual const Representation& rep() const = 0;
  virtual size_t space_dimension(int d) = 0;
  virtual size_t invariant_dimension(int d, Subgroup sub) = 0;
  virtual GradedBasis invariant_basis(int d, Subgroup sub) = 0;
  virtual void for_each_invariant(int d, Subgroup sub,
                                  const std::function<void(const Polynomial&)>& fn) = 0;
  virtual GeneratorProfile generator_profile(int max_degree) = 0;
  virtual bool is_decomposable(const Polynomial& f) = 0;
  virtual bool in_invariant_span(const Polynomial& f) = 0;
  virtual TransferBasisResult transfer_image_basis(int d) = 0;
  virtual std::optional<int> radical_membership(const Polynomial& f, int kmax) = 0;
  virtual void set_dimension_budget(size_t max_monomials) = 0;
};

namespace {

template <class A>
class Core final : public Oracle::Impl {
public:
  Core(Representation rep, A ad, uint32_t seed)
      : rep_(std::move(rep)), ad_(std::move(ad)), seed_(seed),
        nvars_(rep_.ambient()->size()), field_(rep_.field()) {}

  const Representation& rep() const override { return rep_; }

  size_t space_dimension(int d) override { return table(d).size(); }

  size_t invariant_dimension(int d, Subgroup sub) override {
    return basis_ech(d, sub).rank();
  }

  GradedBasis invariant_basis(int d, Subgroup sub) override {
    GradedBasis out;
    out.degree = d;
    for_each_invariant(d, sub, [&](const Polynomial& p) { out.basis.push_back(p); });
    return out;
  }

  void for_each_invariant(int d, Subgroup sub,
                          const std::function<void(const Polynomial&)>& fn) override {
    const auto& ech = basis_ech(d, sub);
    const MonomialTable& T = table(d);
    for (const auto& row : ech.rows()) fn(poly_of(row, T));
  }

  GeneratorProfile generator_profile(int max_degree) override {
    GeneratorProfile p;
    p.invariant_dim.assign(size_t(max_degree) + 1, 0);
    p.decomposable_dim.assign(size_t(max_degree) + 1, 0);
    p.new_generators.assign(size_t(max_degree) + 1, 0);
    for (int d = 1; d <= max_degree; ++d) {
      try {
        profile_step(d);
      } catch (const Error& e) {
        if (e.code() != ErrorCode::BudgetExceeded) throw;
        return p;  // partial profile; certified_up_to marks the cut
      }
      p.invariant_dim[size_t(d)] = dims_[d].invariant;
      p.decomposable_dim[size_t(d)] = dims_[d].decomposable;
      p.new_generators[size_t(d)] = dims_[d].fresh;
      if (dims_[d].fresh > 0) p.noether_number = d;
      p.certified_up_to = d;
    }
    return p;
  }

  bool is_decomposable(const Polynomial& f) override {
    if (!rep_.is_invariant(f)) throw Error(ErrorCode::NotInvariant, "is_decomposable needs an invariant");
    auto hd = f.homogeneous_degree();
    if (!hd.has_value())
      throw Error(ErrorCode::NonHomogeneousMix, "is_decomposable needs a homogeneous input");
    int d = *hd;
    if (d <= 0) return false;
    for (int e = 1; e < d; ++e) profile_step(e);
    return dec_echelon(d).contains(vec_of(f, table(d)));
  }

  bool in_invariant_span(const Polynomial& f) override {
    auto hd = f.homogeneous_degree();
    if (!hd.has_value())
      throw Error(ErrorCode::NonHomogeneousMix, "span query needs a homogeneous input");
    if (f.is_zero()) return true;
    return basis_ech(*hd, Subgroup::Full).contains(vec_of(f, table(*hd)));
  }

  TransferBasisResult transfer_image_basis(int d) override {
    TransferBasisResult out;
    out.degree = d;
    const MonomialTable& T = table(d);
    size_t N = T.size();
    auto trech = ad_.make_ech(N, N);
    for (size_t i = 0; i < N; ++i) {
      typename A::Row row = ad_.zero(N);
      for (GroupElement g : group_elements())
        sigma_terms(g, T.exps(i), d, [&](const std::vector<int>& e, const Scalar& c) {
          ad_.add(row, N, T.rank(e), c);
        });
      trech.insert(std::move(row));
    }
    for (const auto& row : trech.rows()) out.basis.push_back(poly_of(row, T));
    out.dimension = trech.rank();

    const auto& ideal = ideal_span(d);
    bool fwd = true, bwd = true;
    for (const auto& row : trech.rows())
      if (!ideal.contains(row)) fwd = false;
    for (const auto& row : ideal.rows())
      if (!trech.contains(row)) bwd = false;
    out.generated_by_top_divisors = fwd && bwd;
    return out;
  }

  std::optional<int> radical_membership(const Polynomial& f, int kmax) override {
    auto hd = f.homogeneous_degree();
    if (!hd.has_value() || f.is_zero())
      throw Error(ErrorCode::NonHomogeneousMix, "radical query needs a homogeneous input");
    Polynomial fk = rep_.one();
    for (int k = 1; k <= kmax; ++k) {
      fk = fk * f;
      int d = k * *hd;
      if (ideal_span(d).contains(vec_of(fk, table(d)))) return k;
    }
    return std::nullopt;
  }

  void set_dimension_budget(size_t max_monomials) override { budget_ = max_monomials; }

private:
  struct Dims {
    size_t invariant = 0, decomposable = 0, fresh = 0;
  };

  // --- tables and budget

  const MonomialTable& table(int d) {
    auto it = tables_.find(d);
    if (it != tables_.end()) return it->second;
    uint64_t size = binomial(d + int(nvars_) - 1, int(nvars_) - 1);
    if (size > budget_)
      throw Error(ErrorCode::BudgetExceeded,
                  "degree " + std::to_string(d) + " needs " + std::to_string(size) +
                      " monomials, budget " + std::to_string(budget_));
    return tables_.emplace(d, MonomialTable(nvars_, d, seed_)).first->second;
  }

  // --- substitution expansions

  using Expansion = std::vector<std::pair<std::vector<int>, Scalar>>;

  const Expansion& expansion(GroupElement g, size_t var, int e) {
    uint64_t key = (uint64_t(g) << 40) | (uint64_t(var) << 20) | uint64_t(e);
    auto it = expansions_.find(key);
    if (it != expansions_.end()) return it->second;
    Polynomial p = rep_.images(g)[var].pow(e);
    Expansion exp;
    for (const auto& [m, c] : p.terms()) {
      std::vector<int> ev(nvars_);
      for (size_t i = 0; i < nvars_; ++i) ev[i] = m.exp(i);
      exp.emplace_back(std::move(ev), c);
    }
    return expansions_.emplace(key, std::move(exp)).first->second;
  }

  // streams the terms of g applied to the monomial with exponents me
  template <class Fn>
  void sigma_terms(GroupElement g, const int32_t* me, int, Fn&& fn) {
    std::vector<size_t> active;
    for (size_t v = 0; v < nvars_; ++v)
      if (me[v]) active.push_back(v);
    std::vector<int> acc(nvars_, 0);
    Scalar coeff = Scalar::one(field_);
    dfs(g, me, active, 0, acc, coeff, fn);
  }

  template <class Fn>
  void dfs(GroupElement g, const int32_t* me, const std::vector<size_t>& active, size_t idx,
           std::vector<int>& acc, const Scalar& coeff, Fn&& fn) {
    if (idx == active.size()) {
      fn(acc, coeff);
      return;
    }
    size_t v = active[idx];
    const Expansion& terms = expansion(g, v, me[v]);
    for (const auto& [ev, c] : terms) {
      for (size_t i = 0; i < nvars_; ++i) acc[i] += ev[i];
      dfs(g, me, active, idx + 1, acc, coeff * c, fn);
      for (size_t i = 0; i < nvars_; ++i) acc[i] -= ev[i];
    }
  }

  // --- kernels

  using Ech = typename A::Ech;
  using Row = typename A::Row;

  int sub_key(int d, Subgroup sub) const { return d * 4 + int(sub); }

  const Ech& basis_ech(int d, Subgroup sub) {
    int key = sub_key(d, sub);
    auto it = bases_.find(key);
    if (it != bases_.end()) return it->second;

    const MonomialTable& T = table(d);
    size_t N = T.size();
    std::vector<GroupElement> deltas;
    if (sub == Subgroup::Sigma1) deltas = {GroupElement::S1};
    else if (sub == Subgroup::Sigma2) deltas = {GroupElement::S2};
    else deltas = {GroupElement::S1, GroupElement::S2};

    size_t pivot_limit = deltas.size() * N;
    size_t tracker_off = ((pivot_limit + 63) / 64) * 64;
    size_t width = tracker_off + N;
    Ech work = ad_.make_ech(width, pivot_limit);
    Ech canon = ad_.make_ech(N, N);
    Scalar one = Scalar::one(field_);
    for (size_t i = 0; i < N; ++i) {
      Row row = ad_.zero(width);
      for (size_t k = 0; k < deltas.size(); ++k) {
        sigma_terms(deltas[k], T.exps(i), d, [&](const std::vector<int>& e, const Scalar& c) {
          ad_.add(row, width, k * N + T.rank(e), c);
        });
        ad_.add(row, width, k * N + i, one);  // subtract the identity part
      }
      ad_.add(row, width, tracker_off + i, one);
      Row tail;
      if (work.insert(std::move(row), &tail) == Ech::Insert::Tail)
        canon.insert(ad_.slice(tail, width, tracker_off, N));
    }
    return bases_.emplace(key, std::move(canon)).first->second;
  }

  // --- vector/polynomial conversion

  Row vec_of(const Polynomial& f, const MonomialTable& T) {
    size_t N = T.size();
    Row row = ad_.zero(N);
    std::vector<int> e(nvars_);
    for (const auto& [m, c] : f.terms()) {
      for (size_t i = 0; i < nvars_; ++i) e[i] = m.exp(i);
      ad_.add(row, N, T.rank(e), c);
    }
    return row;
  }

  Polynomial poly_of(const Row& row, const MonomialTable& T) {
    Polynomial p(rep_.ambient(), field_);
    ad_.for_each_nonzero(row, T.size(), [&](size_t col, const Scalar& c) {
      const int32_t* e = T.exps(col);
      Monomial m(std::vector<int>(e, e + nvars_));
      p.add_term(m, c);
    });
    return p;
  }

  SparseVec sparse_of(const Row& row, const MonomialTable& T) {
    SparseVec s;
    s.degree = T.degree();
    ad_.for_each_nonzero(row, T.size(), [&](size_t col, const Scalar& c) {
      const int32_t* e = T.exps(col);
      s.terms.emplace_back(std::vector<int>(e, e + nvars_), c);
    });
    return s;
  }

  SparseVec sparse_of_poly(const Polynomial& f, int degree) {
    SparseVec s;
    s.degree = degree;
    for (const auto& [m, c] : f.terms()) {
      std::vector<int> e(nvars_);
      for (size_t i = 0; i < nvars_; ++i) e[i] = m.exp(i);
      s.terms.emplace_back(std::move(e), c);
    }
    return s;
  }

  Row product_row(const SparseVec& g, const Row& b, const MonomialTable& Tb,
                  const MonomialTable& Td) {
    size_t Nd = Td.size();
    Row out = ad_.zero(Nd);
    std::vector<int> e(nvars_);
    ad_.for_each_nonzero(b, Tb.size(), [&](size_t col, const Scalar& cb) {
      const int32_t* eb = Tb.exps(col);
      for (const auto& [eg, cg] : g.terms) {
        for (size_t i = 0; i < nvars_; ++i) e[i] = eb[i] + eg[i];
        ad_.add(out, Nd, Td.rank(e), cg * cb);
      }
    });
    return out;
  }

  // --- decomposable span and generators

  Ech& dec_echelon(int d) {
    auto it = dec_.find(d);
    if (it != dec_.end()) return it->second;
    for (int e = 1; e < d; ++e) profile_step(e);
    const MonomialTable& Td = table(d);
    Ech E = ad_.make_ech(Td.size(), Td.size());
    for (int e = 1; e < d; ++e) {
      auto git = gens_.find(e);
      if (git == gens_.end()) continue;
      const MonomialTable& Tb = table(d - e);
      const Ech& B = basis_ech(d - e, Subgroup::Full);
      for (const SparseVec& g : git->second)
        for (const Row& b : B.rows()) E.insert(product_row(g, b, Tb, Td));
    }
    return dec_.emplace(d, std::move(E)).first->second;
  }

  void profile_step(int d) {
    if (dims_.count(d)) return;
    const Ech& B = basis_ech(d, Subgroup::Full);
    Ech& D = dec_echelon(d);
    const MonomialTable& T = table(d);
    Dims dims;
    dims.invariant = B.rank();
    dims.decomposable = D.rank();
    Ech aux = ad_.make_ech(T.size(), T.size());
    std::vector<SparseVec> fresh;
    for (const Row& r : B.rows()) {
      Row tmp = r;
      D.reduce(tmp);
      if (aux.insert(std::move(tmp)) == Ech::Insert::Pivot) fresh.push_back(sparse_of(r, T));
    }
    dims.fresh = fresh.size();
    if (dims.decomposable + dims.fresh != dims.invariant)
      throw Error(ErrorCode::Internal, "generator extraction mismatch at degree " +
                                           std::to_string(d));
    gens_[d] = std::move(fresh);
    dims_[d] = dims;
  }

  // --- transfer ideal spans

  const Ech& ideal_span(int d) {
    auto it = ideal_.find(d);
    if (it != ideal_.end()) return it->second;
    const MonomialTable& Td = table(d);
    Ech E = ad_.make_ech(Td.size(), Td.size());
    Monomial top = top_class(rep_);
    // enumerate divisors beta of the top class with 1 <= deg <= d
    std::vector<int> caps, slots;
    for (size_t i = 0; i < nvars_; ++i)
      if (top.exp(i)) {
        caps.push_back(top.exp(i));
        slots.push_back(int(i));
      }
    std::vector<int> cur(caps.size(), 0);
    while (true) {
      size_t i = 0;
      while (i < cur.size() && cur[i] == caps[i]) cur[i++] = 0;
      if (i == cur.size()) break;
      ++cur[i];
      Monomial beta(nvars_);
      int deg = 0;
      for (size_t s = 0; s < slots.size(); ++s) {
        beta.exp(size_t(slots[s])) = cur[s];
        deg += cur[s];
      }
      if (deg < 1 || deg > d) continue;
      Polynomial tr =
          rep_.transfer(Polynomial::term(rep_.ambient(), beta, Scalar::one(field_)));
      if (tr.is_zero()) continue;
      if (deg == d) {
        E.insert(vec_of(tr, Td));
      } else {
        SparseVec g = sparse_of_poly(tr, deg);
        const MonomialTable& Tb = table(d - deg);
        for (const Row& b : basis_ech(d - deg, Subgroup::Full).rows())
          E.insert(product_row(g, b, Tb, Td));
      }
    }
    return ideal_.emplace(d, std::move(E)).first->second;
  }

  Representation rep_;
  A ad_;
  uint32_t seed_;
  size_t nvars_;
  FieldPtr field_;
  size_t budget_ = 150000;
  std::map<int, MonomialTable> tables_;
  std::map<uint64_t, Expansion> expansions_;
  std::map<int, Ech> bases_;  // key = d*4 + subgroup
  std::map<int, Ech> dec_, ideal_;
  std::map<int, std::vector<SparseVec>> gens_;
  std::map<int, Dims> dims_;
};

}  // namespace

Oracle::Oracle(const Representation& rep, uint32_t enumeration_seed) {
  switch (rep.field()->kind()) {
    case FieldKind::GF2:
      impl_ = std::make_unique<Core<Gf2Adapter>>(rep, Gf2Adapter{rep.field()}, enumeration_seed);
      break;
    case FieldKind::GF2k:
      impl_ = std::make_unique<Core<GfkAdapter>>(rep, GfkAdapter{rep.field()}, enumeration_seed);
      break;
    case FieldKind::RationalFunction:
      impl_ = std::make_unique<Core<ScalarAdapter>>(rep, ScalarAdapter{rep.field()},
                                                    enumeration_seed);
      break;
  }
}

Oracle::~Oracle() = default;
Oracle::Oracle(Oracle&&) noexcept = default;
Oracle& Oracle::operator=(Oracle&&) noexcept = default;

const Representation& Oracle::rep() const { return impl_->rep(); }
size_t Oracle::space_dimension(int d) const { return impl_->space_dimension(d); }
size_t Oracle::invariant_dimension(int d, Subgroup sub) {
  return impl_->invariant_dimension(d, sub);
}
GradedBasis Oracle::invariant_basis(int d, Subgroup sub) { return impl_->invariant_basis(d, sub); }
void Oracle::for_each_invariant(int d, Subgroup sub,
                                const std::function<void(const Polynomial&)>& fn) {
  impl_->for_each_invariant(d, sub, fn);
}
GeneratorProfile Oracle::generator_profile(int max_degree) {
  return impl_->generator_profile(max_degree);
}
bool Oracle::is_decomposable(const Polynomial& f) { return impl_->is_decomposable(f); }
bool Oracle::in_invariant_span(const Polynomial& f) { return impl_->in_invariant_span(f); }
TransferBasisResult Oracle::transfer_image_basis(int d) { return impl_->transfer_image_basis(d); }
std::optional<int> Oracle::radical_membership(const Polynomial& f, int kmax) {
  return impl_->radical_membership(f, kmax);
}
void Oracle::set_dimension_budget(size_t max_monomials) {
  impl_->set_dimension_budget(max_monomials);
}

// ---------------------------------------------------------------------------
// lemma predicates: structural support scans

Subgroup lemma_scope(const std::string& lemma) {
  if (lemma == "ilk_even_y" || lemma == "ilk_mixed" || lemma == "permute" || lemma == "lift")
    return Subgroup::Sigma1;
  return Subgroup::Full;
}

std::vector<std::string> lemma_ids(const Representation& rep) {
  switch (rep.kind()) {
    case RepKind::EvenV:
      return {"ilk_even_y", "ilk_mixed", "permute", "lift", "shift", "double"};
    case RepKind::OmegaPlus:
      return {"artikiki", "ciftiki"};
    default:
      return {};
  }
}

namespace {

struct Shape {
  // exponents split into the x-part and y-part of the representation
  std::vector<int> x, y;
  int xdeg = 0;
};

Shape shape_of(const Representation& rep, const Monomial& m) {
  Shape s;
  s.x.resize(rep.x_count() + 1, 0);  // 1-based
  s.y.resize(rep.y_count() + 1, 0);
  for (size_t j = 1; j <= rep.x_count(); ++j) s.x[j] = m.exp(rep.x_index(int(j)));
  for (size_t j = 1; j <= rep.y_count(); ++j) s.y[j] = m.exp(rep.y_index(int(j)));
  for (size_t j = 1; j <= rep.x_count(); ++j) s.xdeg += s.x[j];
  return s;
}

Monomial monomial_from_shape(const Representation& rep, const Shape& s) {
  Monomial m(rep.ambient()->size());
  for (size_t j = 1; j <= rep.x_count(); ++j) m.exp(rep.x_index(int(j))) = s.x[j];
  for (size_t j = 1; j <= rep.y_count(); ++j) m.exp(rep.y_index(int(j))) = s.y[j];
  return m;
}

Scalar coeff_of(const Polynomial& f, const Monomial& m) {
  auto it = f.terms().find(m);
  return it == f.terms().end() ? Scalar::zero(f.field()) : it->second;
}

}  // namespace

LemmaVerdict lemma_predicate(const Representation& rep, const Polynomial& f,
                             const std::string& lemma) {
  size_t m = rep.y_count();
  auto fail = [&](const Monomial& mono) { return LemmaVerdict{false, mono}; };

  for (const auto& [mono, c] : f.terms()) {
    Shape s = shape_of(rep, mono);

    if (lemma == "ilk_even_y") {
      // pure-y monomials have all even exponents
      if (s.xdeg == 0)
        for (size_t j = 1; j <= m; ++j)
          if (s.y[j] % 2) return fail(mono);
    } else if (lemma == "ilk_mixed") {
      // y_1^{a_1}..y_{m-1}^{a_{m-1}} y_m x_m forces a_i even below m
      if (s.xdeg == 1 && s.x[m] == 1 && s.y[m] == 1)
        for (size_t j = 1; j + 1 <= m; ++j)
          if (s.y[j] % 2) return fail(mono);
    } else if (lemma == "permute") {
      // M' x_i y_j with deg_{y_j} M' even: deg_{y_i} M' is even and the
      // swapped monomial M' x_j y_i carries the same coefficient
      if (s.xdeg != 1) continue;
      size_t i = 0;
      for (size_t j = 1; j <= m; ++j)
        if (s.x[j] == 1) i = j;
      if (i == 0) continue;
      for (size_t j = 1; j <= m; ++j) {
        if (j == i || s.y[j] % 2 == 0) continue;  // need odd y_j-degree in M
        Shape base = s;
        base.y[j] -= 1;  // M' = M / (x_i y_j)
        base.x[i] = 0;
        if (base.y[i] % 2) return fail(mono);
        Shape swapped = base;
        swapped.x[j] = 1;
        swapped.y[i] += 1;
        if (coeff_of(f, monomial_from_shape(rep, swapped)) != c) return fail(mono);
      }
    } else if (lemma == "lift") {
      // M' y_j x_j appears iff M' y_j^2 appears, same coefficient; and
      // M' y_j^3 x_j never appears
      if (s.xdeg == 1) {
        size_t j = 0;
        for (size_t t = 1; t <= m; ++t)
          if (s.x[t] == 1) j = t;
        if (j == 0) continue;
        if (s.y[j] == 3) return fail(mono);  // the y_j^3 x_j shape never appears
        if (s.y[j] == 1) {
          Shape twin = s;
          twin.x[j] = 0;
          twin.y[j] = 2;
          if (coeff_of(f, monomial_from_shape(rep, twin)) != c) return fail(mono);
        }
      } else if (s.xdeg == 0) {
        for (size_t j = 1; j <= m; ++j) {
          if (s.y[j] != 2) continue;
          Shape twin = s;
          twin.y[j] = 1;
          twin.x[j] = 1;
          if (coeff_of(f, monomial_from_shape(rep, twin)) != c) return fail(mono);
        }
      }
    } else if (lemma == "shift") {
      // G-invariants of the even family: M' y_i x_m never appears for i > 1
      // with even deg_{y_i}(M'); and M' y_i x_j pairs with M' y_{j+1} x_{i-1}
      if (s.xdeg != 1) continue;
      size_t j = 0;
      for (size_t t = 1; t <= m; ++t)
        if (s.x[t] == 1) j = t;
      if (j == 0) continue;
      for (size_t i = 2; i <= m; ++i) {
        if (s.y[i] % 2 == 0) continue;  // M = M' y_i x_j with deg_{y_i} M' even
        if (j == m) return fail(mono);
        Shape base = s;
        base.y[i] -= 1;
        base.x[j] = 0;
        if (base.y[j + 1] % 2) return fail(mono);
        Shape partner = base;
        partner.y[j + 1] += 1;
        partner.x[i - 1] = 1;
        if (coeff_of(f, monomial_from_shape(rep, partner)) != c) return fail(mono);
      }
    } else if (lemma == "double") {
      // squares-only pure-y monomials force 2j <= m+1, and 2j <= m generically
      if (s.xdeg != 0) continue;
      bool squares = true;
      size_t top = 0;
      bool any = false;
      for (size_t t = 1; t <= m; ++t) {
        if (s.y[t] == 2) {
          top = t;
          any = true;
        } else if (s.y[t] != 0) {
          squares = false;
        }
      }
      if (!squares || !any) continue;
      size_t bound = rep.c().is_zero() ? m + 1 : m;
      if (2 * top > bound) return fail(mono);
    } else if (lemma == "artikiki") {
      // x-part a pure power of x_1 or x_{m+1} forces even y-exponents
      bool pure1 = s.xdeg > 0 && s.x[1] == s.xdeg;
      bool pureLast = s.xdeg > 0 && s.x[rep.x_count()] == s.xdeg;
      if (!pure1 && !pureLast) continue;
      for (size_t t = 1; t <= m; ++t)
        if (s.y[t] % 2) return fail(mono);
    } else if (lemma == "ciftiki") {
      // no squares-only pure-y monomial appears at all
      if (s.xdeg != 0) continue;
      bool squares = true, any = false;
      for (size_t t = 1; t <= m; ++t) {
        if (s.y[t] == 2)
          any = true;
        else if (s.y[t] != 0)
          squares = false;
      }
      if (squares && any) return fail(mono);
    } else {
      throw Error(ErrorCode::UnknownLemma, "unknown lemma '" + lemma + "'");
    }
  }
  return LemmaVerdict{true, std::nullopt};
}

}  // namespace klein4
