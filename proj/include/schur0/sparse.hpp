#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "schur0/rational.hpp"

namespace schur0 {

using Index = std::size_t;

/// Finite map basis-index -> nonzero Rational, kept sorted by index.
class SparseVector {
public:
  using Term = std::pair<Index, Rational>;

  SparseVector() = default;
  /// Terms may be unsorted and contain duplicates or zeros; they are merged.
  explicit SparseVector(std::vector<Term> terms);

  static SparseVector unit(Index index, Rational coeff = 1);

  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  Rational coefficient(Index index) const;
  /// Smallest index in the support; requires a nonzero vector.
  Index leading_index() const { return terms_.front().first; }

  /// this += factor * other
  void add_scaled(const SparseVector& other, const Rational& factor);
  SparseVector scaled(const Rational& factor) const;

  SparseVector& operator+=(const SparseVector& other);
  SparseVector& operator-=(const SparseVector& other);
  friend SparseVector operator+(SparseVector a, const SparseVector& b) { return a += b; }
  friend SparseVector operator-(SparseVector a, const SparseVector& b) { return a -= b; }
  friend bool operator==(const SparseVector& a, const SparseVector& b) { return a.terms_ == b.terms_; }

private:
  std::vector<Term> terms_;
};

/// Row space kept in reduced row-echelon form. Pivots are the smallest index of
/// each row, rows are normalized to pivot coefficient 1, and no pivot column
/// appears in any other row.
class Subspace {
public:
  Subspace() = default;

  std::size_t rank() const { return rows_.size(); }
  /// Rows ordered by strictly increasing pivot.
  std::vector<SparseVector> basis() const;
  std::vector<Index> pivots() const;
  bool is_pivot(Index index) const { return rows_.contains(index); }
  const std::map<Index, SparseVector>& rows() const { return rows_; }

  /// Residual of v after eliminating every pivot column; supported on non-pivots.
  SparseVector reduce(const SparseVector& v) const;
  /// Adds v to the span. Returns true iff the rank grew.
  bool insert(const SparseVector& v);
  /// Coefficients of v in the basis() rows (one per pivot, in pivot order), or
  /// nullopt when v lies outside the span.
  std::optional<std::vector<Rational>> coordinates(const SparseVector& v) const;

private:
  std::map<Index, SparseVector> rows_;
};

Subspace rref(std::span<const SparseVector> vectors);
bool contains(const Subspace& s, const SparseVector& v);

}  // namespace schur0
