#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace schur0 {

/// A composition of r into n nonnegative parts (an element of Λ(n,r)).
/// Labels the vertex k_λ of the quiver and the diagonal idempotent diag(λ).
class Composition {
public:
  Composition() = default;
  /// Throws std::invalid_argument on a negative part.
  explicit Composition(std::vector<int> parts);

  int n() const { return static_cast<int>(parts_.size()); }
  int weight() const { return weight_; }
  const std::vector<int>& parts() const { return parts_; }
  /// 1-based access, matching λ_i.
  int part(int i) const { return parts_.at(static_cast<std::size_t>(i - 1)); }

  /// λ + α_i (α_i = +1 at i, -1 at i+1), or nullopt when that leaves Λ(n,r).
  std::optional<Composition> add_alpha(int i) const;
  /// λ - α_i, or nullopt when that leaves Λ(n,r).
  std::optional<Composition> subtract_alpha(int i) const;

  /// Some part equals zero (the composition lies on the simplex boundary).
  bool is_boundary() const;
  std::size_t nonzero_parts() const;

  std::string to_string() const;

  friend bool operator==(const Composition&, const Composition&) = default;
  friend auto operator<=>(const Composition& a, const Composition& b) { return a.parts_ <=> b.parts_; }

private:
  std::vector<int> parts_;
  int weight_ = 0;
};

/// Λ(n,r) in lexicographic order of the parts.
std::vector<Composition> enumerate_compositions(int n, int r);

/// The all-ones composition α = (1,...,1) of Λ(r,r).
Composition all_ones(int r);

}  // namespace schur0

template <>
struct std::hash<schur0::Composition> {
  std::size_t operator()(const schur0::Composition& c) const noexcept;
};
