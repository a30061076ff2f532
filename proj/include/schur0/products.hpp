#pragma once

#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "schur0/generators.hpp"
#include "schur0/orbit_matrix.hpp"
#include "schur0/rational.hpp"

namespace schur0 {

/// Per-index parameters t = (t_1, ..., t_{n-1}) of the deformed commutator
/// relations, constant in λ.
class ParamTuple {
public:
  ParamTuple() = default;
  explicit ParamTuple(std::vector<Rational> values) : values_(std::move(values)) {}
  static ParamTuple constant(int n, const Rational& value);
  /// Comma list of rationals, e.g. "1/2,1/3".
  static ParamTuple parse(std::string_view text);

  std::size_t size() const { return values_.size(); }
  /// 1-based, matching t_i.
  const Rational& at(int i) const { return values_.at(static_cast<std::size_t>(i - 1)); }
  const std::vector<Rational>& values() const { return values_; }
  std::string to_string() const;

  friend bool operator==(const ParamTuple&, const ParamTuple&) = default;

private:
  std::vector<Rational> values_;
};

enum class ProductKind { S0, Star, T };

struct ProductSpec {
  ProductKind kind = ProductKind::S0;
  ParamTuple t;

  static ProductSpec s0() { return {ProductKind::S0, {}}; }
  static ProductSpec star() { return {ProductKind::Star, {}}; }
  static ProductSpec deformed(ParamTuple t) { return {ProductKind::T, std::move(t)}; }

  /// "s0", "star" or "t".
  std::string tag() const;
};

ProductKind parse_product_kind(std::string_view text);

/// e_A · e_B in S₀(n,r): Zero unless co(A) = ro(B); otherwise the monomial path
/// of A applied to B. Coefficient 1 when nonzero. Throws ShapeMismatch.
ScaledOrbit s0_multiply(const OrbitMatrix& a, const OrbitMatrix& b);

/// e_A ⋆ e_B in DS₀(n,r): the S₀ product when E-degrees add exactly, else Zero.
ScaledOrbit star_multiply(const OrbitMatrix& a, const OrbitMatrix& b);

/// Product of D_t(n,r) for per-index constant t: ∏ t_i^{d_i} · C where
/// e_A e_B = e_C in S₀ and d_i = E(A)_i + E(B)_i - E(C)_i (0^0 = 1).
/// Throws ShapeMismatch if t has the wrong length.
ScaledOrbit t_multiply(const ParamTuple& t, const OrbitMatrix& a, const OrbitMatrix& b);

ScaledOrbit multiply(const ProductSpec& spec, const OrbitMatrix& a, const OrbitMatrix& b);

/// Same products, memoizing the monomial path of each left factor and the
/// degree vectors. Not safe for concurrent use.
class CachedMultiplier {
public:
  explicit CachedMultiplier(ProductSpec spec) : spec_(std::move(spec)) {}

  const ProductSpec& spec() const { return spec_; }
  ScaledOrbit operator()(const OrbitMatrix& a, const OrbitMatrix& b);

private:
  const GeneratorWord& word_for(const OrbitMatrix& a);
  const DegreeVector& degrees_for(const OrbitMatrix& a);

  ProductSpec spec_;
  std::unordered_map<OrbitMatrix, GeneratorWord> words_;
  std::unordered_map<OrbitMatrix, DegreeVector> degrees_;
};

}  // namespace schur0
