#pragma once

#include <compare>
#include <string>
#include <vector>

#include "schur0/orbit_matrix.hpp"

namespace schur0 {

/// Largest r for which word and group enumerations are allowed.
inline constexpr int kMaxPermutationDegree = 7;

/// w ∈ S_r as its images w(1..r). Products compose right to left:
/// (u*v)(x) = u(v(x)).
class Permutation {
public:
  Permutation() = default;
  /// Throws std::invalid_argument unless images is a permutation of 1..r.
  explicit Permutation(std::vector<int> images);

  static Permutation identity(int r);
  /// Simple transposition s_i = (i, i+1), 1 <= i < r.
  static Permutation s(int i, int r);
  static Permutation from_word(const std::vector<int>& word, int r);
  /// Inverse of to_matrix; throws std::invalid_argument if m is not a permutation matrix.
  static Permutation from_matrix(const OrbitMatrix& m);

  int degree() const { return static_cast<int>(images_.size()); }
  int operator()(int x) const { return images_.at(static_cast<std::size_t>(x - 1)); }
  const std::vector<int>& images() const { return images_; }
  /// Number of inversions.
  int length() const;
  Permutation inverse() const;
  /// m[i][j] = 1 iff w(j) = i.
  OrbitMatrix to_matrix() const;
  std::string to_string() const;

  friend Permutation operator*(const Permutation& u, const Permutation& v);
  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation& a, const Permutation& b) { return a.images_ <=> b.images_; }

private:
  std::vector<int> images_;
};

using ReducedWord = std::vector<int>;

/// S_r in lexicographic order of images. Throws GuardExceeded for r > 7.
std::vector<Permutation> all_permutations(int r);

/// Every reduced expression s_{a_1}...s_{a_k} of w, sorted. Throws GuardExceeded for r > 7.
std::vector<ReducedWord> reduced_words(const Permutation& w);

/// One reduced expression of w, built by peeling right descents.
ReducedWord reduced_word(const Permutation& w);

}  // namespace schur0
