#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

#include "schur0/composition.hpp"

namespace schur0 {

/// Largest supported weight r.
inline constexpr int kMaxWeight = 64;

/// An n×n nonnegative integer matrix with entry sum r: an element of Ξ(n,r),
/// labelling the basis element e_A. Entries are addressed 0-based; generator
/// indices elsewhere in the library are 1-based like the algebra notation.
class OrbitMatrix {
public:
  OrbitMatrix() = default;
  /// Row-major entries. Throws std::invalid_argument for a non-square size or a
  /// negative entry, GuardExceeded when the sum exceeds kMaxWeight.
  OrbitMatrix(int n, std::vector<int> entries);
  OrbitMatrix(std::initializer_list<std::initializer_list<int>> rows);

  static OrbitMatrix diag(const Composition& lambda);
  static OrbitMatrix identity(int n);

  int n() const { return n_; }
  int r() const { return r_; }
  int at(int row, int col) const { return entries_[static_cast<std::size_t>(row * n_ + col)]; }
  const std::vector<int>& flat() const { return entries_; }

  Composition ro() const;
  Composition co() const;
  int row_sum(int row) const;
  int col_sum(int col) const;
  int min_diagonal() const;
  bool is_diagonal() const;
  bool is_permutation_matrix() const;

  /// A + Identity_n (the embedding Ξ(n,r) -> Ξ(n,r+n)).
  OrbitMatrix plus_identity() const;

  /// Adds delta to one entry; used by the fundamental rules. The caller keeps
  /// entries nonnegative and the total sum fixed across a pair of moves.
  void shift(int row, int col, int delta) { entries_[static_cast<std::size_t>(row * n_ + col)] += delta; }

  /// "a,b;c,d" row-major, rows separated by ';'.
  std::string to_string() const;

  friend bool operator==(const OrbitMatrix&, const OrbitMatrix&) = default;
  /// Lexicographic on (n, row-major flattening).
  friend std::strong_ordering operator<=>(const OrbitMatrix& a, const OrbitMatrix& b) {
    if (auto c = a.n_ <=> b.n_; c != 0) return c;
    return a.entries_ <=> b.entries_;
  }

private:
  int n_ = 0;
  int r_ = 0;
  std::vector<int> entries_;
};

/// Parses "a,b;c,d". Throws std::invalid_argument on malformed input
/// (non-integers, negative entries, ragged or non-square shape).
OrbitMatrix parse_matrix(std::string_view text);

/// |Ξ(n,r)| = C(n²+r-1, r).
std::int64_t basis_count(int n, int r);

/// All of Ξ(n,r) exactly once, lexicographic on the row-major flattening.
std::vector<OrbitMatrix> enumerate_basis(int n, int r);

/// All nonnegative integer matrices with the given row and column sums
/// (same canonical order). Used to build corner algebras k_λ S k_μ directly.
std::vector<OrbitMatrix> enumerate_with_margins(const Composition& rows, const Composition& cols);

}  // namespace schur0

template <>
struct std::hash<schur0::OrbitMatrix> {
  std::size_t operator()(const schur0::OrbitMatrix& a) const noexcept;
};
