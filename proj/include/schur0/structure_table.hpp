#pragma once

#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <variant>
#include <vector>

#include "schur0/orbit_matrix.hpp"
#include "schur0/products.hpp"
#include "schur0/sparse.hpp"

namespace schur0 {

/// Basis elements are orbits e_A, or opaque names for non-monomial bases.
using BasisLabel = std::variant<OrbitMatrix, std::string>;

std::string label_to_string(const BasisLabel& label);

/// Tables larger than this need an explicit higher cap.
inline constexpr std::size_t kDefaultMaxDim = 5000;

/// A finite-dimensional algebra given by an indexed basis and its structure
/// constants c_{ij}^k, stored sparsely by row. Built tables are treated as
/// immutable; set_product exists for construction and regression fixtures.
class StructureTable {
public:
  using RowEntry = std::pair<Index, SparseVector>;

  StructureTable() = default;
  StructureTable(std::string name, int n, int r, std::string product, std::vector<BasisLabel> basis);

  const std::string& name() const { return name_; }
  int n() const { return n_; }
  int r() const { return r_; }
  const std::string& product_tag() const { return product_; }
  std::size_t dimension() const { return basis_.size(); }
  const std::vector<BasisLabel>& basis() const { return basis_; }
  const BasisLabel& label(Index i) const { return basis_.at(i); }
  /// Index of the basis element labelled by the orbit a, if any.
  std::optional<Index> index_of(const OrbitMatrix& a) const;
  /// Same but throws std::out_of_range when absent.
  Index require_index(const OrbitMatrix& a) const;

  /// b_i · b_j (empty vector when zero).
  const SparseVector& product(Index i, Index j) const;
  void set_product(Index i, Index j, SparseVector value);
  /// Nonzero products b_i · b_j, sorted by j.
  const std::vector<RowEntry>& row(Index i) const { return rows_.at(i); }
  /// All i with b_i · b_j nonzero, sorted.
  const std::vector<Index>& column(Index j) const { return cols_.at(j); }
  std::size_t nonzero_products() const;

  SparseVector multiply(const SparseVector& a, const SparseVector& b) const;
  SparseVector multiply_basis(Index i, Index j) const { return product(i, j); }

  const SparseVector& unit() const { return unit_; }
  void set_unit(SparseVector unit) { unit_ = std::move(unit); }

private:
  std::string name_;
  int n_ = 0;
  int r_ = 0;
  std::string product_;
  std::vector<BasisLabel> basis_;
  std::unordered_map<OrbitMatrix, Index> index_;
  std::vector<std::vector<RowEntry>> rows_;
  std::vector<std::vector<Index>> cols_;
  SparseVector unit_;
};

/// Table of S₀(n,r), DS₀(n,r) or D_t(n,r) over enumerate_basis(n,r). Throws
/// GuardExceeded when the basis is larger than max_dim.
StructureTable build_table(int n, int r, const ProductSpec& spec, std::size_t max_dim = kDefaultMaxDim);

/// Basis index of k_λ in a table over Ξ(n,r).
Index idempotent_index(const StructureTable& t, const Composition& lambda);

}  // namespace schur0
