#include "schur0/centralizers.hpp"

#include <set>
#include <sstream>
#include <stdexcept>

#include "schur0/algebra_ops.hpp"
#include "schur0/combinatorics.hpp"
#include "schur0/errors.hpp"

namespace schur0 {

bool all_pass(const std::vector<Check>& checks) {
  for (const auto& c : checks) {
    if (!c.pass) return false;
  }
  return true;
}

namespace {

constexpr std::size_t kMaxWitnesses = 5;

// Accumulates failures of one law and keeps the first few witnesses.
class CheckBuilder {
public:
  explicit CheckBuilder(std::string name) : name_(std::move(name)) {}

  void fail(const std::string& witness) {
    if (failures_++ < kMaxWitnesses) witnesses_.push_back(witness);
  }
  void note(std::string text) { note_ = std::move(text); }

  Check finish() const {
    Check c{name_, failures_ == 0, note_};
    if (failures_) {
      c.detail = std::to_string(failures_) + " violation(s)";
      for (const auto& w : witnesses_) c.detail += "; " + w;
    }
    return c;
  }

private:
  std::string name_;
  std::size_t failures_ = 0;
  std::vector<std::string> witnesses_;
  std::string note_;
};

// k_α f_i e_i k_α under the given product, via the fundamental rules.
ScaledOrbit corner_generator(int r, int i, const ProductSpec& spec) {
  const auto k = OrbitMatrix::identity(r);
  auto x = left_apply_e(i, k);
  if (!x) throw std::logic_error("e_i k_alpha vanished");
  auto f = left_apply_f(i, OrbitMatrix::diag(x->ro()));
  if (!f) throw std::logic_error("f_i arrow missing");
  return multiply(spec, *f, *x);
}

std::string word_string(const std::vector<int>& word) {
  if (word.empty()) return "1";
  std::string s;
  for (int i : word) s += "s" + std::to_string(i);
  return s;
}

std::string vec_string(const StructureTable& t, const SparseVector& v) {
  if (v.is_zero()) return "0";
  std::string s;
  for (const auto& [k, c] : v.terms()) {
    if (!s.empty()) s += " + ";
    if (c != 1) s += to_display_string(c) + "*";
    s += label_to_string(t.label(k));
  }
  return s;
}

HeckeCorner build_corner(int r, const ProductSpec& spec) {
  if (r < 1) throw std::invalid_argument("r must be positive");
  if (r > kMaxCornerDegree) throw GuardExceeded("corner degree " + std::to_string(r) + " exceeds 5");
  HeckeCorner h;
  h.r = r;
  h.table = orbit_corner_table(all_ones(r), spec);
  for (int i = 1; i < r; ++i) {
    auto g = corner_generator(r, i, spec);
    h.generators.push_back(g.is_zero() ? SparseVector{}
                                       : SparseVector::unit(h.table.require_index(*g.matrix), g.coeff));
  }
  const auto perms = all_permutations(r);
  CheckBuilder dim("dimension");
  dim.note("dim " + std::to_string(h.table.dimension()));
  if (h.table.dimension() != perms.size()) dim.fail("expected " + std::to_string(perms.size()));
  h.checks.push_back(dim.finish());

  CheckBuilder well_defined("t_w_well_defined");
  for (const auto& w : perms) {
    const auto words = reduced_words(w);
    h.t_w[w] = h.generator_product(words.front());
    for (std::size_t k = 1; k < words.size(); ++k) {
      if (h.generator_product(words[k]) != h.t_w[w]) {
        well_defined.fail(word_string(words.front()) + " vs " + word_string(words[k]));
      }
    }
  }
  h.checks.push_back(well_defined.finish());

  CheckBuilder commute("commutation"), braid("braid");
  for (int i = 1; i < r; ++i) {
    for (int j = i + 2; j < r; ++j) {
      if (h.generator_product({i, j}) != h.generator_product({j, i})) commute.fail(word_string({i, j}));
    }
    if (i + 1 < r && h.generator_product({i, i + 1, i}) != h.generator_product({i + 1, i, i + 1})) {
      braid.fail(word_string({i, i + 1, i}));
    }
  }
  h.checks.push_back(commute.finish());
  h.checks.push_back(braid.finish());

  CheckBuilder orbit("t_w_orbit_basis");
  for (const auto& w : perms) {
    const auto expected = SparseVector::unit(h.table.require_index(w.to_matrix()));
    if (h.t_w[w] != expected) orbit.fail("T_" + w.to_string() + " = " + vec_string(h.table, h.t_w[w]));
  }
  h.checks.push_back(orbit.finish());
  return h;
}

}  // namespace

SparseVector HeckeCorner::generator_product(const std::vector<int>& word) const {
  SparseVector v = table.unit();
  for (auto it = word.rbegin(); it != word.rend() && !v.is_zero(); ++it) {
    v = table.multiply(generators.at(static_cast<std::size_t>(*it - 1)), v);
  }
  return v;
}

SparseVector HeckeCorner::element(const Permutation& w) const { return t_w.at(w); }

HeckeCorner hecke0_build(int r) {
  auto h = build_corner(r, ProductSpec::s0());
  CheckBuilder idem("t_i_idempotent");
  for (int i = 1; i < h.r; ++i) {
    if (h.generator_product({i, i}) != h.generator_product({i})) idem.fail("T_" + std::to_string(i));
  }
  h.checks.push_back(idem.finish());

  CheckBuilder law("hecke0_product_law");
  for (int i = 1; i < h.r; ++i) {
    const auto si = Permutation::s(i, h.r);
    for (const auto& [w, tw] : h.t_w) {
      const auto siw = si * w;
      const auto expected = siw.length() == w.length() + 1 ? h.t_w.at(siw) : tw;
      const auto got = h.table.multiply(h.generators[static_cast<std::size_t>(i - 1)], tw);
      if (got != expected) law.fail("T_" + std::to_string(i) + " T_" + w.to_string() + " = " + vec_string(h.table, got));
    }
  }
  h.checks.push_back(law.finish());
  return h;
}

HeckeCorner nilhecke_graded_build(int r) {
  auto h = build_corner(r, ProductSpec::star());
  CheckBuilder square("t_i_square_zero");
  for (int i = 1; i < h.r; ++i) {
    if (!h.generator_product({i, i}).is_zero()) square.fail("T_" + std::to_string(i));
  }
  h.checks.push_back(square.finish());

  CheckBuilder law("nilhecke_product_law");
  const auto perms = all_permutations(h.r);
  for (const auto& u : perms) {
    const Index a = h.table.require_index(u.to_matrix());
    for (const auto& v : perms) {
      const Index b = h.table.require_index(v.to_matrix());
      const auto uv = u * v;
      const auto expected = uv.length() == u.length() + v.length()
                                ? SparseVector::unit(h.table.require_index(uv.to_matrix()))
                                : SparseVector{};
      const auto& got = h.table.product(a, b);
      if (got != expected) {
        law.fail("P" + u.to_string() + "*P" + v.to_string() + " = " + vec_string(h.table, got) + ", expected " +
                 vec_string(h.table, expected));
      }
    }
  }
  h.checks.push_back(law.finish());
  return h;
}

NtlAlgebra ntl_build(int r) {
  if (r < 1) throw std::invalid_argument("r must be positive");
  if (r > kMaxPermutationDegree) throw GuardExceeded("NTL degree " + std::to_string(r) + " exceeds 7");
  const auto spec = ProductSpec::star();
  LazyOrbitAlgebra alg(r, r, spec);
  const SparseVector unit = SparseVector::unit(alg.intern(OrbitMatrix::identity(r)));
  std::vector<SparseVector> gens;
  std::vector<ScaledOrbit> gen_orbits;
  for (int i = 1; i < r; ++i) {
    auto g = corner_generator(r, i, spec);
    gens.push_back(g.is_zero() ? SparseVector{} : SparseVector::unit(alg.intern(*g.matrix), g.coeff));
    gen_orbits.push_back(std::move(g));
  }
  NtlAlgebra ntl;
  ntl.r = r;
  ntl.table = subalgebra_closure(alg, gens, unit);
  for (const auto& g : gen_orbits) {
    ntl.generators.push_back(g.is_zero() ? SparseVector{}
                                         : SparseVector::unit(ntl.table.require_index(*g.matrix), g.coeff));
  }

  const auto& t = ntl.table;
  auto product = [&](const std::vector<int>& word) {
    SparseVector v = t.unit();
    for (auto it = word.rbegin(); it != word.rend() && !v.is_zero(); ++it) {
      v = t.multiply(ntl.generators.at(static_cast<std::size_t>(*it - 1)), v);
    }
    return v;
  };

  CheckBuilder dim("dimension");
  dim.note("dim " + std::to_string(t.dimension()));
  if (static_cast<std::int64_t>(t.dimension()) != catalan(r)) dim.fail("expected " + std::to_string(catalan(r)));
  ntl.checks.push_back(dim.finish());

  CheckBuilder perm_basis("permutation_basis");
  for (const auto& label : t.basis()) {
    const auto* m = std::get_if<OrbitMatrix>(&label);
    if (!m || !m->is_permutation_matrix()) perm_basis.fail(label_to_string(label));
  }
  ntl.checks.push_back(perm_basis.finish());

  CheckBuilder square("x_i_square_zero"), commute("distant_commutation"), tl("x_i_x_j_x_i_zero");
  for (int i = 1; i < r; ++i) {
    if (!product({i, i}).is_zero()) square.fail("x_" + std::to_string(i));
    for (int j = i + 2; j < r; ++j) {
      if (product({i, j}) != product({j, i})) commute.fail(word_string({i, j}));
    }
    for (int j : {i - 1, i + 1}) {
      if (j >= 1 && j < r && !product({i, j, i}).is_zero()) tl.fail(word_string({i, j, i}));
    }
  }
  ntl.checks.push_back(square.finish());
  ntl.checks.push_back(commute.finish());
  ntl.checks.push_back(tl.finish());
  return ntl;
}

void PeakSet::validate(int r) const {
  for (std::size_t l = 0; l < peaks.size(); ++l) {
    const auto [i, j] = peaks[l];
    if (j < 1 || i > r || j >= i) throw std::invalid_argument("peak (" + std::to_string(i) + "," + std::to_string(j) + ") is not below the diagonal");
    if (l > 0 && (peaks[l - 1].first >= i || peaks[l - 1].second >= j)) {
      throw std::invalid_argument("peaks must increase strictly in both coordinates");
    }
  }
}

std::string PeakSet::to_string() const {
  std::string s = "{";
  for (std::size_t l = 0; l < peaks.size(); ++l) {
    if (l) s += ",";
    s += "(" + std::to_string(peaks[l].first) + "," + std::to_string(peaks[l].second) + ")";
  }
  return s + "}";
}

namespace {

void extend_peaks(int r, PeakSet& cur, std::vector<PeakSet>& out) {
  out.push_back(cur);
  const int i0 = cur.peaks.empty() ? 2 : cur.peaks.back().first + 1;
  const int j0 = cur.peaks.empty() ? 1 : cur.peaks.back().second + 1;
  for (int i = i0; i <= r; ++i) {
    for (int j = j0; j < i; ++j) {
      cur.peaks.emplace_back(i, j);
      extend_peaks(r, cur, out);
      cur.peaks.pop_back();
    }
  }
}

}  // namespace

std::vector<PeakSet> all_peak_sets(int r) {
  std::vector<PeakSet> out;
  PeakSet cur;
  extend_peaks(r, cur, out);
  return out;
}

OrbitMatrix peaks_to_element(int r, const PeakSet& p, std::vector<OrbitMatrix>* trace) {
  p.validate(r);
  const auto spec = ProductSpec::star();
  std::vector<OrbitMatrix> x;
  for (int m = 1; m < r; ++m) x.push_back(*corner_generator(r, m, spec).matrix);
  OrbitMatrix cur = OrbitMatrix::identity(r);
  for (auto it = p.peaks.rbegin(); it != p.peaks.rend(); ++it) {
    const auto [i, j] = *it;
    for (int m = j; m <= i - 1; ++m) {
      auto next = star_multiply(x[static_cast<std::size_t>(m - 1)], cur);
      if (next.is_zero()) throw std::logic_error("peak product vanished for " + p.to_string());
      cur = *next.matrix;
    }
    if (trace) trace->push_back(cur);
  }
  return cur;
}

PeakSet element_to_peaks(const OrbitMatrix& a) {
  if (!a.is_permutation_matrix()) throw std::invalid_argument("not a permutation matrix: " + a.to_string());
  PeakSet p;
  for (int row = 0; row < a.n(); ++row) {
    for (int col = 0; col < row; ++col) {
      if (a.at(row, col)) p.peaks.emplace_back(row + 1, col + 1);
    }
  }
  return p;
}

std::string render_peaks(const OrbitMatrix& a) {
  const auto p = element_to_peaks(a);
  std::set<int> feet;
  for (const auto& [i, j] : p.peaks) {
    feet.insert(i);
    feet.insert(j);
  }
  std::ostringstream out;
  for (int row = 0; row < a.n(); ++row) {
    for (int col = 0; col <= row; ++col) {
      char c = '.';
      if (col < row && a.at(row, col)) {
        c = 'P';
      } else if (col == row) {
        c = feet.contains(row + 1) ? 'F' : (a.at(row, row) ? 'o' : '.');
      }
      out << c;
    }
    out << '\n';
  }
  return out.str();
}

bool avoids_braid_factor(const Permutation& w) {
  for (const auto& word : reduced_words(w)) {
    for (std::size_t k = 0; k + 2 < word.size(); ++k) {
      if (word[k] == word[k + 2] && std::abs(word[k] - word[k + 1]) == 1) return false;
    }
  }
  return true;
}

}  // namespace schur0
