#include "schur0/algebra_ops.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "schur0/combinatorics.hpp"
#include "schur0/errors.hpp"

namespace schur0 {

Index LazyOrbitAlgebra::intern(const OrbitMatrix& a) {
  if (a.n() != n_ || a.r() != r_) throw ShapeMismatch("orbit does not belong to this algebra");
  auto [it, inserted] = index_.try_emplace(a, labels_.size());
  if (inserted) labels_.push_back(a);
  return it->second;
}

SparseVector LazyOrbitAlgebra::multiply_basis(Index i, Index j) {
  const std::uint64_t key = (static_cast<std::uint64_t>(i) << 32) | static_cast<std::uint64_t>(j);
  if (auto it = memo_.find(key); it != memo_.end()) return it->second;
  // copies: intern() may grow labels_
  const OrbitMatrix a = labels_.at(i);
  const OrbitMatrix b = labels_.at(j);
  auto c = mul_(a, b);
  SparseVector out;
  if (!c.is_zero()) out = SparseVector::unit(intern(*c.matrix), std::move(c.coeff));
  memo_.emplace(key, out);
  return out;
}

SparseVector LazyOrbitAlgebra::multiply(const SparseVector& a, const SparseVector& b) {
  std::vector<SparseVector::Term> acc;
  for (const auto& [i, ci] : a.terms()) {
    for (const auto& [j, cj] : b.terms()) {
      auto p = multiply_basis(i, j);
      for (const auto& [k, ck] : p.terms()) acc.emplace_back(k, ci * cj * ck);
    }
  }
  return SparseVector(std::move(acc));
}

namespace {

// b·v for every b that can give a nonzero product.
template <class Sink>
void left_products(const StructureTable& t, const SparseVector& v, Sink&& sink) {
  std::set<Index> candidates;
  for (const auto& [a, c] : v.terms()) {
    const auto& col = t.column(a);
    candidates.insert(col.begin(), col.end());
  }
  for (Index b : candidates) sink(t.multiply(SparseVector::unit(b), v));
}

template <class Sink>
void right_products(const StructureTable& t, const SparseVector& v, Sink&& sink) {
  std::set<Index> candidates;
  for (const auto& [a, c] : v.terms()) {
    for (const auto& entry : t.row(a)) candidates.insert(entry.first);
  }
  for (Index b : candidates) sink(t.multiply(v, SparseVector::unit(b)));
}

}  // namespace

IdealBasis ideal_closure(const StructureTable& t, std::span<const SparseVector> generators) {
  IdealBasis ideal;
  std::deque<SparseVector> work;
  for (const auto& g : generators) {
    if (ideal.subspace.insert(g)) work.push_back(g);
  }
  auto absorb = [&](SparseVector p) {
    if (ideal.subspace.insert(p)) work.push_back(std::move(p));
  };
  while (!work.empty()) {
    SparseVector v = std::move(work.front());
    work.pop_front();
    left_products(t, v, absorb);
    right_products(t, v, absorb);
  }
  return ideal;
}

IdealBasis ideal_closure(const StructureTable& t, std::span<const Index> generators) {
  std::vector<SparseVector> vecs;
  vecs.reserve(generators.size());
  for (Index g : generators) vecs.push_back(SparseVector::unit(g));
  return ideal_closure(t, std::span<const SparseVector>(vecs));
}

std::vector<OrbitMatrix> boundary_ideal_basis(int n, int r) {
  std::vector<OrbitMatrix> out;
  for (auto& a : enumerate_basis(n, r)) {
    if (a.min_diagonal() == 0) out.push_back(std::move(a));
  }
  return out;
}

std::vector<Index> boundary_idempotents(const StructureTable& t) {
  std::vector<Index> out;
  for (const auto& lambda : enumerate_compositions(t.n(), t.r())) {
    if (lambda.is_boundary()) out.push_back(idempotent_index(t, lambda));
  }
  return out;
}

std::vector<Index> face_idempotents(const StructureTable& t, const std::vector<int>& support) {
  std::vector<Index> out;
  for (const auto& lambda : enumerate_compositions(t.n(), t.r())) {
    bool inside = true;
    for (int m = 1; m <= t.n(); ++m) {
      if (lambda.part(m) != 0 && std::find(support.begin(), support.end(), m) == support.end()) inside = false;
    }
    if (inside) out.push_back(idempotent_index(t, lambda));
  }
  return out;
}

std::vector<Index> idempotents_with_support_at_most(const StructureTable& t, int i) {
  std::vector<Index> out;
  for (const auto& lambda : enumerate_compositions(t.n(), t.r())) {
    if (static_cast<int>(lambda.nonzero_parts()) <= i) out.push_back(idempotent_index(t, lambda));
  }
  return out;
}

std::int64_t boundary_ideal_rank_formula(int n, int r) {
  std::int64_t total = 0;
  const std::int64_t top = static_cast<std::int64_t>(n) * n + r - n - 1;
  for (int s = 1; s <= n; ++s) total += binomial(n, s) * binomial(top, r + s - n);
  return total;
}

std::int64_t boundary_quotient_rank_formula(int n, int r) {
  return binomial(static_cast<std::int64_t>(n) * n + r - n - 1, r - n);
}

void require_two_sided_ideal(const StructureTable& t, const IdealBasis& ideal) {
  auto check = [&](const SparseVector& p) {
    if (!contains(ideal.subspace, p)) throw NotAnIdeal("subspace is not closed under multiplication by the algebra");
  };
  for (const auto& [pivot, row] : ideal.subspace.rows()) {
    left_products(t, row, check);
    right_products(t, row, check);
  }
}

StructureTable quotient_algebra(const StructureTable& t, const IdealBasis& ideal) {
  require_two_sided_ideal(t, ideal);
  std::vector<Index> keep;
  std::vector<std::optional<Index>> remap(t.dimension());
  for (Index i = 0; i < t.dimension(); ++i) {
    if (!ideal.subspace.is_pivot(i)) {
      remap[i] = keep.size();
      keep.push_back(i);
    }
  }
  std::vector<BasisLabel> labels;
  labels.reserve(keep.size());
  for (Index i : keep) labels.push_back(t.label(i));
  StructureTable q(t.name() + "/I", t.n(), t.r(), t.product_tag() + "/ideal", std::move(labels));
  auto project = [&](const SparseVector& v) {
    std::vector<SparseVector::Term> terms;
    const SparseVector residual = ideal.subspace.reduce(v);
    for (const auto& [k, c] : residual.terms()) terms.emplace_back(*remap[k], c);
    return SparseVector(std::move(terms));
  };
  for (Index a = 0; a < keep.size(); ++a) {
    for (const auto& [j, p] : t.row(keep[a])) {
      if (!remap[j]) continue;
      q.set_product(a, *remap[j], project(p));
    }
  }
  q.set_unit(project(t.unit()));
  return q;
}

StructureTable subalgebra_closure(const StructureTable& t, std::span<const SparseVector> generators,
                                  const SparseVector& unit) {
  const auto span = subalgebra_span(t, generators, unit);
  return table_from_subspace(t, span, "sub(" + t.name() + ")", t.n(), t.r(), t.product_tag(), unit);
}

StructureTable subalgebra_closure(LazyOrbitAlgebra& alg, std::span<const SparseVector> generators,
                                  const SparseVector& unit) {
  const auto span = subalgebra_span(alg, generators, unit);
  return table_from_subspace(alg, span,
                             "sub(" + alg.spec().tag() + "(" + std::to_string(alg.n()) + "," + std::to_string(alg.r()) + "))",
                             alg.n(), alg.r(), alg.spec().tag(), unit);
}

StructureTable corner_algebra(const StructureTable& t, const SparseVector& idem) {
  if (t.multiply(idem, idem) != idem) throw NotIdempotent("corner element is not idempotent");
  Subspace span;
  for (Index b = 0; b < t.dimension(); ++b) {
    span.insert(t.multiply(t.multiply(idem, SparseVector::unit(b)), idem));
  }
  return table_from_subspace(t, span, "corner(" + t.name() + ")", t.n(), t.r(), t.product_tag(), idem);
}

StructureTable orbit_corner_table(const Composition& lambda, const ProductSpec& spec) {
  const auto matrices = enumerate_with_margins(lambda, lambda);
  std::vector<BasisLabel> labels(matrices.begin(), matrices.end());
  StructureTable table("corner[" + lambda.to_string() + "](" + spec.tag() + ")", lambda.n(), lambda.weight(),
                       spec.tag(), std::move(labels));
  CachedMultiplier mul(spec);
  for (Index i = 0; i < matrices.size(); ++i) {
    for (Index j = 0; j < matrices.size(); ++j) {
      auto c = mul(matrices[i], matrices[j]);
      if (c.is_zero()) continue;
      table.set_product(i, j, SparseVector::unit(table.require_index(*c.matrix), std::move(c.coeff)));
    }
  }
  table.set_unit(SparseVector::unit(table.require_index(OrbitMatrix::diag(lambda))));
  return table;
}

std::optional<std::array<Index, 3>> find_associativity_failure(const StructureTable& t) {
  const Index d = t.dimension();
  for (Index a = 0; a < d; ++a) {
    for (Index b = 0; b < d; ++b) {
      const auto& ab = t.product(a, b);
      for (Index c = 0; c < d; ++c) {
        const auto& bc = t.product(b, c);
        if (ab.is_zero() && bc.is_zero()) continue;
        SparseVector lhs = ab.is_zero() ? SparseVector{} : t.multiply(ab, SparseVector::unit(c));
        SparseVector rhs = bc.is_zero() ? SparseVector{} : t.multiply(SparseVector::unit(a), bc);
        if (lhs != rhs) return std::array<Index, 3>{a, b, c};
      }
    }
  }
  return std::nullopt;
}

bool check_associativity(const StructureTable& t) { return !find_associativity_failure(t).has_value(); }

bool verify_iso_by_bijection(const StructureTable& t1, const StructureTable& t2, std::span<const Index> bij,
                             const std::optional<std::vector<Rational>>& scale) {
  const Index d = t1.dimension();
  if (t2.dimension() != d || bij.size() != d) throw std::invalid_argument("bijection size does not match the tables");
  std::vector<bool> hit(d, false);
  for (Index k : bij) {
    if (k >= d || hit[k]) throw std::invalid_argument("map is not a bijection of bases");
    hit[k] = true;
  }
  if (scale) {
    if (scale->size() != d) throw std::invalid_argument("scale has the wrong length");
    for (const auto& s : *scale) {
      if (s == 0) throw std::invalid_argument("scale factors must be nonzero");
    }
  }
  auto s = [&](Index i) -> Rational { return scale ? (*scale)[i] : Rational(1); };
  auto transport = [&](const SparseVector& v) {
    std::vector<SparseVector::Term> terms;
    for (const auto& [k, c] : v.terms()) terms.emplace_back(bij[k], c * s(k));
    return SparseVector(std::move(terms));
  };
  for (Index i = 0; i < d; ++i) {
    for (Index j = 0; j < d; ++j) {
      const SparseVector lhs = transport(t1.product(i, j));
      const SparseVector rhs = t2.product(bij[i], bij[j]).scaled(s(i) * s(j));
      if (lhs != rhs) return false;
    }
  }
  return true;
}

std::vector<Index> bijection_by_labels(const StructureTable& t1, const StructureTable& t2,
                                       const std::function<OrbitMatrix(const OrbitMatrix&)>& map) {
  std::vector<Index> bij;
  bij.reserve(t1.dimension());
  for (const auto& label : t1.basis()) {
    const auto* m = std::get_if<OrbitMatrix>(&label);
    if (!m) throw std::invalid_argument("bijection by labels needs orbit-labelled bases");
    bij.push_back(t2.require_index(map(*m)));
  }
  return bij;
}

}  // namespace schur0
