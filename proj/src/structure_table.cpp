#include "schur0/structure_table.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "schur0/errors.hpp"

namespace schur0 {

std::string label_to_string(const BasisLabel& label) {
  if (const auto* m = std::get_if<OrbitMatrix>(&label)) return m->to_string();
  return std::get<std::string>(label);
}

StructureTable::StructureTable(std::string name, int n, int r, std::string product, std::vector<BasisLabel> basis)
    : name_(std::move(name)), n_(n), r_(r), product_(std::move(product)), basis_(std::move(basis)) {
  rows_.resize(basis_.size());
  cols_.resize(basis_.size());
  for (Index i = 0; i < basis_.size(); ++i) {
    if (const auto* m = std::get_if<OrbitMatrix>(&basis_[i])) index_.emplace(*m, i);
  }
}

std::optional<Index> StructureTable::index_of(const OrbitMatrix& a) const {
  auto it = index_.find(a);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

Index StructureTable::require_index(const OrbitMatrix& a) const {
  auto idx = index_of(a);
  if (!idx) throw std::out_of_range("matrix " + a.to_string() + " is not a basis label of " + name_);
  return *idx;
}

const SparseVector& StructureTable::product(Index i, Index j) const {
  static const SparseVector kZero;
  const auto& row = rows_.at(i);
  auto it = std::lower_bound(row.begin(), row.end(), j, [](const RowEntry& e, Index k) { return e.first < k; });
  if (it != row.end() && it->first == j) return it->second;
  return kZero;
}

void StructureTable::set_product(Index i, Index j, SparseVector value) {
  auto& row = rows_.at(i);
  auto& col = cols_.at(j);
  auto it = std::lower_bound(row.begin(), row.end(), j, [](const RowEntry& e, Index k) { return e.first < k; });
  auto cit = std::lower_bound(col.begin(), col.end(), i);
  const bool present = it != row.end() && it->first == j;
  if (value.is_zero()) {
    if (present) {
      row.erase(it);
      col.erase(cit);
    }
    return;
  }
  if (present) {
    it->second = std::move(value);
  } else {
    row.insert(it, RowEntry{j, std::move(value)});
    col.insert(cit, i);
  }
}

std::size_t StructureTable::nonzero_products() const {
  std::size_t count = 0;
  for (const auto& row : rows_) count += row.size();
  return count;
}

SparseVector StructureTable::multiply(const SparseVector& a, const SparseVector& b) const {
  std::vector<SparseVector::Term> acc;
  for (const auto& [i, ci] : a.terms()) {
    const auto& row = rows_.at(i);
    if (row.empty()) continue;
    for (const auto& [j, cj] : b.terms()) {
      const auto& p = product(i, j);
      if (p.is_zero()) continue;
      const Rational factor = ci * cj;
      for (const auto& [k, ck] : p.terms()) acc.emplace_back(k, factor * ck);
    }
  }
  return SparseVector(std::move(acc));
}

StructureTable build_table(int n, int r, const ProductSpec& spec, std::size_t max_dim) {
  if (n < 1) throw std::invalid_argument("n must be positive");
  if (r < 0) throw std::invalid_argument("r must be nonnegative");
  if (r > kMaxWeight) throw GuardExceeded("r exceeds " + std::to_string(kMaxWeight));
  if (spec.kind == ProductKind::T && static_cast<int>(spec.t.size()) != n - 1) {
    throw ShapeMismatch("parameter tuple must have n-1 entries");
  }
  const auto count = basis_count(n, r);
  if (count < 0 || static_cast<std::size_t>(count) > max_dim) {
    throw GuardExceeded("basis of size " + std::to_string(count) + " exceeds the cap " + std::to_string(max_dim));
  }
  const auto matrices = enumerate_basis(n, r);
  std::vector<BasisLabel> labels(matrices.begin(), matrices.end());
  std::string name = spec.tag() + "(" + std::to_string(n) + "," + std::to_string(r) + ")";
  if (spec.kind == ProductKind::T) name += "[t=" + spec.t.to_string() + "]";
  StructureTable table(std::move(name), n, r, spec.tag(), std::move(labels));

  std::map<Composition, std::vector<Index>> by_row;
  std::vector<Composition> cos;
  cos.reserve(matrices.size());
  for (Index i = 0; i < matrices.size(); ++i) {
    by_row[matrices[i].ro()].push_back(i);
    cos.push_back(matrices[i].co());
  }
  CachedMultiplier mul(spec);
  for (Index i = 0; i < matrices.size(); ++i) {
    auto it = by_row.find(cos[i]);
    if (it == by_row.end()) continue;
    for (Index j : it->second) {
      auto c = mul(matrices[i], matrices[j]);
      if (c.is_zero()) continue;
      table.set_product(i, j, SparseVector::unit(table.require_index(*c.matrix), std::move(c.coeff)));
    }
  }
  std::vector<SparseVector::Term> unit;
  for (const auto& lambda : enumerate_compositions(n, r)) unit.emplace_back(table.require_index(OrbitMatrix::diag(lambda)), 1);
  table.set_unit(SparseVector(std::move(unit)));
  return table;
}

Index idempotent_index(const StructureTable& t, const Composition& lambda) {
  return t.require_index(OrbitMatrix::diag(lambda));
}

}  // namespace schur0
