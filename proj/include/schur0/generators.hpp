#pragma once

#include <optional>
#include <string>
#include <vector>

#include "schur0/composition.hpp"
#include "schur0/orbit_matrix.hpp"
#include "schur0/rational.hpp"

namespace schur0 {

/// A basis element with a scalar, or Zero. Products of two basis elements in
/// all supported algebras have this shape.
struct ScaledOrbit {
  Rational coeff = 0;
  std::optional<OrbitMatrix> matrix;

  static ScaledOrbit zero() { return {}; }
  /// Collapses to zero when coeff == 0.
  static ScaledOrbit of(OrbitMatrix m, Rational coeff = 1);

  bool is_zero() const { return !matrix.has_value(); }
  std::string to_string() const;

  friend bool operator==(const ScaledOrbit&, const ScaledOrbit&) = default;
};

enum class LetterKind { E, F, K };

/// One symbol of a path in Σ(n,r): e_i, f_i (1 <= i <= n-1) or k_λ.
struct Letter {
  LetterKind kind = LetterKind::K;
  int index = 0;
  Composition weight;  // only meaningful for K

  static Letter e(int i) { return {LetterKind::E, i, {}}; }
  static Letter f(int i) { return {LetterKind::F, i, {}}; }
  static Letter k(Composition lambda) { return {LetterKind::K, 0, std::move(lambda)}; }

  std::string to_string() const;
  friend bool operator==(const Letter&, const Letter&) = default;
};

/// A word read left to right; it acts on a basis element right to left.
class GeneratorWord {
public:
  GeneratorWord() = default;
  explicit GeneratorWord(std::vector<Letter> letters) : letters_(std::move(letters)) {}

  const std::vector<Letter>& letters() const { return letters_; }
  bool empty() const { return letters_.empty(); }

  void push_back(Letter letter) { letters_.push_back(std::move(letter)); }
  void append_power(const Letter& letter, int exponent);
  void append(const GeneratorWord& other);

  /// e(i,j) = e_i e_{i+1} ... e_j   (i <= j)
  static GeneratorWord e_run(int i, int j);
  /// f(j,i) = f_j ... f_{i+1} f_i   (j >= i)
  static GeneratorWord f_run(int j, int i);

  /// Number of e/f letters (K letters excluded).
  std::size_t generator_length() const;
  int count(LetterKind kind, int i) const;
  /// Copy with every K letter removed.
  GeneratorWord without_idempotents() const;

  /// Run-length form, e.g. "e1^2 e2^6 e1 f2^5 k(8,7,6)".
  std::string to_string() const;

  friend bool operator==(const GeneratorWord&, const GeneratorWord&) = default;

private:
  std::vector<Letter> letters_;
};

/// Degree vectors (E(e_A), F(e_A)), each of length n-1.
struct DegreeVector {
  std::vector<int> e_deg;
  std::vector<int> f_deg;

  int total() const;
  friend bool operator==(const DegreeVector&, const DegreeVector&) = default;
};

// Fundamental multiplication rules. Generator index i is 1-based; an index
// outside 1..n-1 throws std::out_of_range. nullopt is the Zero product.

/// e_i · e_A
std::optional<OrbitMatrix> left_apply_e(int i, const OrbitMatrix& a);
/// f_i · e_A
std::optional<OrbitMatrix> left_apply_f(int i, const OrbitMatrix& a);
/// e_A · e_i
std::optional<OrbitMatrix> right_apply_e(int i, const OrbitMatrix& a);
/// e_A · f_i
std::optional<OrbitMatrix> right_apply_f(int i, const OrbitMatrix& a);

DegreeVector degree_vectors(const OrbitMatrix& a);

/// Reduced path for e_A: e-powers, then f-powers, then k_{co(A)}.
GeneratorWord decompose_monomial(const OrbitMatrix& a);
/// Reduced path for e_A built from e(i,j) / f(j,i) blocks, then k_{co(A)}.
GeneratorWord decompose_pbw(const OrbitMatrix& a);

/// Applies the word right to left to e_start. A K(λ) letter keeps the current
/// element iff λ = ro(current). Returns coefficient 1 or Zero.
ScaledOrbit evaluate_word(const GeneratorWord& w, const OrbitMatrix& start);

namespace detail {
// In-place rule application; false means the product is Zero (a is then unspecified).
bool apply_left_e(int i, OrbitMatrix& a);
bool apply_left_f(int i, OrbitMatrix& a);
/// Applies only the e/f letters of w (right to left); K letters are ignored.
bool apply_generators(const GeneratorWord& w, OrbitMatrix& a);
}  // namespace detail

}  // namespace schur0
