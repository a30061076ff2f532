#include "schur0/orbit_matrix.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <stdexcept>

#include "schur0/combinatorics.hpp"
#include "schur0/errors.hpp"

namespace schur0 {

OrbitMatrix::OrbitMatrix(int n, std::vector<int> entries) : n_(n), entries_(std::move(entries)) {
  if (n < 1 || entries_.size() != static_cast<std::size_t>(n) * static_cast<std::size_t>(n)) {
    throw std::invalid_argument("orbit matrix must be square with n >= 1");
  }
  long long sum = 0;
  for (int v : entries_) {
    if (v < 0) throw std::invalid_argument("orbit matrix entries must be nonnegative");
    sum += v;
  }
  if (sum > kMaxWeight) throw GuardExceeded("orbit matrix weight exceeds " + std::to_string(kMaxWeight));
  r_ = static_cast<int>(sum);
}

namespace {

std::vector<int> flatten(std::initializer_list<std::initializer_list<int>> rows) {
  std::vector<int> flat;
  for (const auto& row : rows) {
    if (row.size() != rows.size()) throw std::invalid_argument("orbit matrix must be square");
    flat.insert(flat.end(), row.begin(), row.end());
  }
  return flat;
}

}  // namespace

OrbitMatrix::OrbitMatrix(std::initializer_list<std::initializer_list<int>> rows)
    : OrbitMatrix(static_cast<int>(rows.size()), flatten(rows)) {}

OrbitMatrix OrbitMatrix::diag(const Composition& lambda) {
  const int n = lambda.n();
  std::vector<int> entries(static_cast<std::size_t>(n * n), 0);
  for (int i = 0; i < n; ++i) entries[static_cast<std::size_t>(i * n + i)] = lambda.parts()[static_cast<std::size_t>(i)];
  return OrbitMatrix(n, std::move(entries));
}

OrbitMatrix OrbitMatrix::identity(int n) { return diag(all_ones(n)); }

int OrbitMatrix::row_sum(int row) const {
  int s = 0;
  for (int j = 0; j < n_; ++j) s += at(row, j);
  return s;
}

int OrbitMatrix::col_sum(int col) const {
  int s = 0;
  for (int i = 0; i < n_; ++i) s += at(i, col);
  return s;
}

Composition OrbitMatrix::ro() const {
  std::vector<int> parts(static_cast<std::size_t>(n_));
  for (int i = 0; i < n_; ++i) parts[static_cast<std::size_t>(i)] = row_sum(i);
  return Composition(std::move(parts));
}

Composition OrbitMatrix::co() const {
  std::vector<int> parts(static_cast<std::size_t>(n_));
  for (int j = 0; j < n_; ++j) parts[static_cast<std::size_t>(j)] = col_sum(j);
  return Composition(std::move(parts));
}

int OrbitMatrix::min_diagonal() const {
  int m = at(0, 0);
  for (int i = 1; i < n_; ++i) m = std::min(m, at(i, i));
  return m;
}

bool OrbitMatrix::is_diagonal() const {
  for (int i = 0; i < n_; ++i) {
    for (int j = 0; j < n_; ++j) {
      if (i != j && at(i, j) != 0) return false;
    }
  }
  return true;
}

bool OrbitMatrix::is_permutation_matrix() const {
  for (int i = 0; i < n_; ++i) {
    if (row_sum(i) != 1 || col_sum(i) != 1) return false;
  }
  return std::all_of(entries_.begin(), entries_.end(), [](int v) { return v == 0 || v == 1; });
}

OrbitMatrix OrbitMatrix::plus_identity() const {
  std::vector<int> e = entries_;
  for (int i = 0; i < n_; ++i) ++e[static_cast<std::size_t>(i * n_ + i)];
  return OrbitMatrix(n_, std::move(e));
}

std::string OrbitMatrix::to_string() const {
  std::string s;
  for (int i = 0; i < n_; ++i) {
    if (i) s += ';';
    for (int j = 0; j < n_; ++j) {
      if (j) s += ',';
      s += std::to_string(at(i, j));
    }
  }
  return s;
}

namespace {

std::vector<std::string_view> split(std::string_view text, char sep) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  while (true) {
    const auto pos = text.find(sep, start);
    parts.push_back(text.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return parts;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
  while (!s.empty() && s.back() == ' ') s.remove_suffix(1);
  return s;
}

}  // namespace

OrbitMatrix parse_matrix(std::string_view text) {
  const auto rows = split(text, ';');
  const int n = static_cast<int>(rows.size());
  std::vector<int> entries;
  for (auto row : rows) {
    const auto cells = split(row, ',');
    if (static_cast<int>(cells.size()) != n) {
      throw std::invalid_argument("matrix literal '" + std::string(text) + "' is not square");
    }
    for (auto cell : cells) {
      cell = trim(cell);
      int value = 0;
      auto [ptr, ec] = std::from_chars(cell.data(), cell.data() + cell.size(), value);
      if (cell.empty() || ec != std::errc() || ptr != cell.data() + cell.size()) {
        throw std::invalid_argument("malformed matrix entry '" + std::string(cell) + "'");
      }
      if (value < 0) throw std::invalid_argument("negative matrix entry in '" + std::string(text) + "'");
      entries.push_back(value);
    }
  }
  return OrbitMatrix(n, std::move(entries));
}

std::int64_t basis_count(int n, int r) { return binomial(static_cast<std::int64_t>(n) * n + r - 1, r); }

namespace {

void basis_rec(std::size_t pos, int remaining, std::vector<int>& cells, int n, std::vector<OrbitMatrix>& out) {
  if (pos + 1 == cells.size()) {
    cells[pos] = remaining;
    out.emplace_back(n, cells);
    return;
  }
  for (int v = 0; v <= remaining; ++v) {
    cells[pos] = v;
    basis_rec(pos + 1, remaining - v, cells, n, out);
  }
}

}  // namespace

std::vector<OrbitMatrix> enumerate_basis(int n, int r) {
  if (n < 1) throw std::invalid_argument("n must be positive");
  if (r < 0) throw std::invalid_argument("r must be nonnegative");
  if (r > kMaxWeight) throw GuardExceeded("r exceeds " + std::to_string(kMaxWeight));
  std::vector<OrbitMatrix> out;
  out.reserve(static_cast<std::size_t>(basis_count(n, r)));
  std::vector<int> cells(static_cast<std::size_t>(n * n), 0);
  basis_rec(0, r, cells, n, out);
  return out;
}

namespace {

void margins_rec(int n, int cell, std::vector<int>& row_left, std::vector<int>& col_left, std::vector<int>& cells,
                 std::vector<OrbitMatrix>& out) {
  if (cell == n * n) {
    out.emplace_back(n, cells);
    return;
  }
  const int i = cell / n;
  const int j = cell % n;
  auto& rl = row_left[static_cast<std::size_t>(i)];
  auto& cl = col_left[static_cast<std::size_t>(j)];
  // The last cell of a row (or column) is forced.
  int lo = 0;
  int hi = std::min(rl, cl);
  if (j == n - 1) lo = rl;
  if (i == n - 1) lo = std::max(lo, cl);
  for (int v = lo; v <= hi; ++v) {
    if (j == n - 1 && v != rl) continue;
    if (i == n - 1 && v != cl) continue;
    cells[static_cast<std::size_t>(cell)] = v;
    rl -= v;
    cl -= v;
    margins_rec(n, cell + 1, row_left, col_left, cells, out);
    rl += v;
    cl += v;
  }
  cells[static_cast<std::size_t>(cell)] = 0;
}

}  // namespace

std::vector<OrbitMatrix> enumerate_with_margins(const Composition& rows, const Composition& cols) {
  if (rows.n() != cols.n() || rows.weight() != cols.weight()) {
    throw ShapeMismatch("row and column margins must share n and r");
  }
  const int n = rows.n();
  std::vector<int> row_left = rows.parts();
  std::vector<int> col_left = cols.parts();
  std::vector<int> cells(static_cast<std::size_t>(n * n), 0);
  std::vector<OrbitMatrix> out;
  margins_rec(n, 0, row_left, col_left, cells, out);
  return out;
}

}  // namespace schur0

std::size_t std::hash<schur0::OrbitMatrix>::operator()(const schur0::OrbitMatrix& a) const noexcept {
  std::size_t h = 0xcbf29ce484222325ULL;
  for (int v : a.flat()) h = (h ^ static_cast<std::size_t>(v)) * 0x100000001b3ULL;
  return h ^ static_cast<std::size_t>(a.n());
}
