#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "schur0/permutation.hpp"
#include "schur0/structure_table.hpp"

namespace schur0 {

/// Named outcome of one structural check. Builders record these instead of
/// throwing so that a failed law can be reported with its witnesses.
struct Check {
  std::string name;
  bool pass = true;
  std::string detail;
};

bool all_pass(const std::vector<Check>& checks);

/// A corner k_α A k_α of S₀(r,r) or DS₀(r,r), α = (1,...,1). Basis labels
/// are the permutation matrices; generators[i-1] = k_α f_i e_i k_α.
struct HeckeCorner {
  int r = 0;
  StructureTable table;
  std::vector<SparseVector> generators;
  /// T_w evaluated along one reduced word of w.
  std::map<Permutation, SparseVector> t_w;
  std::vector<Check> checks;

  SparseVector element(const Permutation& w) const;
  SparseVector generator_product(const std::vector<int>& word) const;
};

inline constexpr int kMaxCornerDegree = 5;

/// Corner of S₀(r,r). Checks: dimension r!, T_i² = T_i, commutation, braid,
/// well-defined T_w, T_w = e_{P(w)}, and T_i T_w = T_{s_i w} or T_w by length.
/// Throws GuardExceeded for r > 5.
HeckeCorner hecke0_build(int r);

/// Corner of DS₀(r,r). Checks: dimension r!, T_i² = 0, commutation, braid,
/// well-defined T_w, and e_{P(u)} e_{P(v)} = e_{P(uv)} when lengths add, 0
/// otherwise. Throws GuardExceeded for r > 5.
HeckeCorner nilhecke_graded_build(int r);

/// Subalgebra of the DS₀(r,r) corner generated by x_i = k_α f_i e_i k_α.
struct NtlAlgebra {
  int r = 0;
  StructureTable table;
  std::vector<SparseVector> generators;
  std::vector<Check> checks;
};

/// Checks: dimension Catalan(r), permutation-matrix basis, x_i² = 0, distant
/// commutation, x_i x_{i±1} x_i = 0. Throws GuardExceeded for r > 7.
NtlAlgebra ntl_build(int r);

/// Peak entries (i_l, j_l) with j_l < i_l, both sequences strictly increasing.
struct PeakSet {
  std::vector<std::pair<int, int>> peaks;

  /// Throws std::invalid_argument unless the invariants hold with indices in 1..r.
  void validate(int r) const;
  std::string to_string() const;
  friend bool operator==(const PeakSet&, const PeakSet&) = default;
};

std::vector<PeakSet> all_peak_sets(int r);

/// Matrix of x k_α in DS₀(r,r), x = x^(1)...x^(s), x^(l) = x_{i_l-1}...x_{j_l}.
/// The optional trace receives the matrix after each x^(l) is applied,
/// starting from l = s.
OrbitMatrix peaks_to_element(int r, const PeakSet& p, std::vector<OrbitMatrix>* trace = nullptr);

/// Below-diagonal nonzero positions (row, column), 1-based, sorted. Throws
/// std::invalid_argument if a is not a permutation matrix.
PeakSet element_to_peaks(const OrbitMatrix& a);

/// One text row per matrix row, columns 1..row: 'P' peak, 'F' diagonal foot of
/// a peak, 'o' other diagonal one, '.' empty.
std::string render_peaks(const OrbitMatrix& a);

/// No reduced word of w contains s_i s_j s_i with |i-j| = 1.
bool avoids_braid_factor(const Permutation& w);

}  // namespace schur0
