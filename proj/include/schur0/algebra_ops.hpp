#pragma once

#include <array>
#include <concepts>
#include <cstdint>
#include <deque>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "schur0/products.hpp"
#include "schur0/sparse.hpp"
#include "schur0/structure_table.hpp"

namespace schur0 {

/// Anything that multiplies SparseVectors over its own basis indices and can
/// name its basis elements.
template <class A>
concept BasisAlgebra = requires(A& alg, const SparseVector& x, Index i) {
  { alg.multiply(x, x) } -> std::convertible_to<SparseVector>;
  { alg.label(i) } -> std::convertible_to<BasisLabel>;
};

/// The monoid-like algebra over orbits of one Ξ(n,r), with basis indices
/// assigned on first use. Products are computed on demand and memoized, so
/// corners and subalgebras of large algebras never materialize the full table.
class LazyOrbitAlgebra {
public:
  LazyOrbitAlgebra(int n, int r, ProductSpec spec) : n_(n), r_(r), mul_(std::move(spec)) {}

  int n() const { return n_; }
  int r() const { return r_; }
  const ProductSpec& spec() const { return mul_.spec(); }

  Index intern(const OrbitMatrix& a);
  BasisLabel label(Index i) const { return labels_.at(i); }
  const OrbitMatrix& matrix(Index i) const { return labels_.at(i); }
  std::size_t size() const { return labels_.size(); }

  SparseVector multiply_basis(Index i, Index j);
  SparseVector multiply(const SparseVector& a, const SparseVector& b);

private:
  int n_;
  int r_;
  CachedMultiplier mul_;
  std::vector<OrbitMatrix> labels_;
  std::unordered_map<OrbitMatrix, Index> index_;
  std::unordered_map<std::uint64_t, SparseVector> memo_;
};

/// A two-sided ideal, as a subspace of the ambient table's coordinates.
struct IdealBasis {
  Subspace subspace;
  std::size_t rank() const { return subspace.rank(); }
};

/// Least two-sided ideal containing the generators (fixed-point iteration
/// with exact rank tests).
IdealBasis ideal_closure(const StructureTable& t, std::span<const SparseVector> generators);
IdealBasis ideal_closure(const StructureTable& t, std::span<const Index> generators);

/// All A in Ξ(n,r) with some zero diagonal entry, canonical order.
std::vector<OrbitMatrix> boundary_ideal_basis(int n, int r);

/// k_λ for every boundary λ (some part zero).
std::vector<Index> boundary_idempotents(const StructureTable& t);

/// k_λ with λ_m = 0 for every m outside `support` (1-based positions): the
/// idempotents on one face of the simplex.
std::vector<Index> face_idempotents(const StructureTable& t, const std::vector<int>& support);
/// k_λ with at most i nonzero parts; these generate I_i(n,r).
std::vector<Index> idempotents_with_support_at_most(const StructureTable& t, int i);

/// rank I(n,r) = Σ_{s=1}^{n} C(n,s) C(n²+r-n-1, r+s-n)
std::int64_t boundary_ideal_rank_formula(int n, int r);
/// rank S₀(n,r)/I(n,r) = C(n²+r-n-1, r-n)
std::int64_t boundary_quotient_rank_formula(int n, int r);

/// Throws NotAnIdeal if some b·v or v·b leaves the subspace.
void require_two_sided_ideal(const StructureTable& t, const IdealBasis& ideal);

/// T/I on the non-pivot basis elements of I's echelon form, which are the
/// basis labels outside I whenever I is spanned by labels. Throws NotAnIdeal.
StructureTable quotient_algebra(const StructureTable& t, const IdealBasis& ideal);

/// Table of a subalgebra (or corner) spanned by the rows of `span`, in those
/// rows' coordinates. Rows that are single basis elements with coefficient 1
/// keep the parent label. Throws std::invalid_argument if not closed.
template <BasisAlgebra A>
StructureTable table_from_subspace(A& parent, const Subspace& span, std::string name, int n, int r,
                                   std::string product_tag, const SparseVector& unit);

/// Least subspace containing `unit` and closed under left multiplication by
/// the generators. With unit acting as identity on the generators this is
/// the unital subalgebra they generate.
template <BasisAlgebra A>
Subspace subalgebra_span(A& parent, std::span<const SparseVector> generators, const SparseVector& unit);

StructureTable subalgebra_closure(const StructureTable& t, std::span<const SparseVector> generators,
                                  const SparseVector& unit);
StructureTable subalgebra_closure(LazyOrbitAlgebra& alg, std::span<const SparseVector> generators,
                                  const SparseVector& unit);

/// idem·T·idem with unit idem. Throws NotIdempotent.
StructureTable corner_algebra(const StructureTable& t, const SparseVector& idem);

/// k_λ · A · k_λ for the orbit algebra of Ξ(n,r) under `spec`, built directly
/// from the orbits with ro = co = λ.
StructureTable orbit_corner_table(const Composition& lambda, const ProductSpec& spec);

/// First basis triple (a,b,c) with (ab)c != a(bc), if any.
std::optional<std::array<Index, 3>> find_associativity_failure(const StructureTable& t);
bool check_associativity(const StructureTable& t);

/// True iff b_i ↦ scale_i · b'_{bij[i]} transports every structure constant of
/// t1 onto t2. Throws std::invalid_argument if bij is not a bijection or a
/// scale is zero.
bool verify_iso_by_bijection(const StructureTable& t1, const StructureTable& t2, std::span<const Index> bij,
                             const std::optional<std::vector<Rational>>& scale = std::nullopt);

/// Bijection of orbit-labelled tables induced by a map on labels.
std::vector<Index> bijection_by_labels(const StructureTable& t1, const StructureTable& t2,
                                       const std::function<OrbitMatrix(const OrbitMatrix&)>& map);

// ---------------------------------------------------------------------------

template <BasisAlgebra A>
Subspace subalgebra_span(A& parent, std::span<const SparseVector> generators, const SparseVector& unit) {
  Subspace span;
  std::deque<SparseVector> work;
  if (span.insert(unit)) work.push_back(unit);
  while (!work.empty()) {
    SparseVector v = std::move(work.front());
    work.pop_front();
    for (const auto& g : generators) {
      SparseVector p = parent.multiply(g, v);
      if (span.insert(p)) work.push_back(std::move(p));
    }
  }
  return span;
}

template <BasisAlgebra A>
StructureTable table_from_subspace(A& parent, const Subspace& span, std::string name, int n, int r,
                                   std::string product_tag, const SparseVector& unit) {
  const auto rows = span.basis();
  std::vector<BasisLabel> labels;
  labels.reserve(rows.size());
  for (std::size_t k = 0; k < rows.size(); ++k) {
    const auto& terms = rows[k].terms();
    if (terms.size() == 1 && terms.front().second == 1) {
      labels.push_back(parent.label(terms.front().first));
    } else {
      labels.emplace_back("v" + std::to_string(k));
    }
  }
  StructureTable table(std::move(name), n, r, std::move(product_tag), std::move(labels));
  auto to_coords = [&](const SparseVector& v) {
    auto coords = span.coordinates(v);
    if (!coords) throw std::invalid_argument("subspace is not closed under multiplication");
    std::vector<SparseVector::Term> terms;
    for (std::size_t k = 0; k < coords->size(); ++k) {
      if ((*coords)[k] != 0) terms.emplace_back(k, (*coords)[k]);
    }
    return SparseVector(std::move(terms));
  };
  for (std::size_t a = 0; a < rows.size(); ++a) {
    for (std::size_t b = 0; b < rows.size(); ++b) {
      table.set_product(a, b, to_coords(parent.multiply(rows[a], rows[b])));
    }
  }
  table.set_unit(to_coords(unit));
  return table;
}

}  // namespace schur0
