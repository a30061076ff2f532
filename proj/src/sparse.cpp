#include "schur0/sparse.hpp"

#include <algorithm>

namespace schur0 {

SparseVector::SparseVector(std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(),
            [](const Term& a, const Term& b) { return a.first < b.first; });
  for (auto& [index, coeff] : terms) {
    if (!terms_.empty() && terms_.back().first == index) {
      terms_.back().second += coeff;
      if (terms_.back().second == 0) terms_.pop_back();
    } else if (coeff != 0) {
      terms_.emplace_back(index, std::move(coeff));
    }
  }
}

SparseVector SparseVector::unit(Index index, Rational coeff) {
  SparseVector v;
  if (coeff != 0) v.terms_.emplace_back(index, std::move(coeff));
  return v;
}

Rational SparseVector::coefficient(Index index) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), index,
                             [](const Term& t, Index i) { return t.first < i; });
  if (it != terms_.end() && it->first == index) return it->second;
  return 0;
}

void SparseVector::add_scaled(const SparseVector& other, const Rational& factor) {
  if (factor == 0 || other.is_zero()) return;
  std::vector<Term> merged;
  merged.reserve(terms_.size() + other.terms_.size());
  auto a = terms_.begin();
  auto b = other.terms_.begin();
  while (a != terms_.end() || b != other.terms_.end()) {
    if (b == other.terms_.end() || (a != terms_.end() && a->first < b->first)) {
      merged.push_back(std::move(*a++));
    } else if (a == terms_.end() || b->first < a->first) {
      merged.emplace_back(b->first, factor * b->second);
      ++b;
    } else {
      Rational sum = a->second + factor * b->second;
      if (sum != 0) merged.emplace_back(a->first, std::move(sum));
      ++a;
      ++b;
    }
  }
  terms_ = std::move(merged);
}

SparseVector SparseVector::scaled(const Rational& factor) const {
  SparseVector out;
  if (factor == 0) return out;
  out.terms_.reserve(terms_.size());
  for (const auto& [index, coeff] : terms_) out.terms_.emplace_back(index, coeff * factor);
  return out;
}

SparseVector& SparseVector::operator+=(const SparseVector& other) {
  add_scaled(other, 1);
  return *this;
}

SparseVector& SparseVector::operator-=(const SparseVector& other) {
  add_scaled(other, -1);
  return *this;
}

std::vector<SparseVector> Subspace::basis() const {
  std::vector<SparseVector> out;
  out.reserve(rows_.size());
  for (const auto& [pivot, row] : rows_) out.push_back(row);
  return out;
}

std::vector<Index> Subspace::pivots() const {
  std::vector<Index> out;
  out.reserve(rows_.size());
  for (const auto& [pivot, row] : rows_) out.push_back(pivot);
  return out;
}

SparseVector Subspace::reduce(const SparseVector& v) const {
  SparseVector residual = v;
  // Rows carry no foreign pivots, so one pass over v's own pivot entries suffices.
  for (const auto& [index, coeff] : v.terms()) {
    auto it = rows_.find(index);
    if (it != rows_.end()) residual.add_scaled(it->second, -coeff);
  }
  return residual;
}

bool Subspace::insert(const SparseVector& v) {
  SparseVector residual = reduce(v);
  if (residual.is_zero()) return false;
  const Index pivot = residual.leading_index();
  const Rational lead = residual.terms().front().second;
  if (lead != 1) residual = residual.scaled(1 / lead);
  for (auto& [other_pivot, row] : rows_) {
    const Rational c = row.coefficient(pivot);
    if (c != 0) row.add_scaled(residual, -c);
  }
  rows_.emplace(pivot, std::move(residual));
  return true;
}

std::optional<std::vector<Rational>> Subspace::coordinates(const SparseVector& v) const {
  if (!reduce(v).is_zero()) return std::nullopt;
  std::vector<Rational> coords;
  coords.reserve(rows_.size());
  for (const auto& [pivot, row] : rows_) coords.push_back(v.coefficient(pivot));
  return coords;
}

Subspace rref(std::span<const SparseVector> vectors) {
  Subspace s;
  for (const auto& v : vectors) s.insert(v);
  return s;
}

bool contains(const Subspace& s, const SparseVector& v) { return s.reduce(v).is_zero(); }

}  // namespace schur0
