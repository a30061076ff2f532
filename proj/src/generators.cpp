#include "schur0/generators.hpp"

#include <stdexcept>

namespace schur0 {

ScaledOrbit ScaledOrbit::of(OrbitMatrix m, Rational coeff) {
  if (coeff == 0) return zero();
  return {std::move(coeff), std::move(m)};
}

std::string ScaledOrbit::to_string() const {
  if (is_zero()) return "0";
  if (coeff == 1) return matrix->to_string();
  return to_display_string(coeff) + "*" + matrix->to_string();
}

std::string Letter::to_string() const {
  switch (kind) {
    case LetterKind::E:
      return "e" + std::to_string(index);
    case LetterKind::F:
      return "f" + std::to_string(index);
    case LetterKind::K:
      return "k" + weight.to_string();
  }
  return {};
}

void GeneratorWord::append_power(const Letter& letter, int exponent) {
  for (int k = 0; k < exponent; ++k) letters_.push_back(letter);
}

void GeneratorWord::append(const GeneratorWord& other) {
  letters_.insert(letters_.end(), other.letters_.begin(), other.letters_.end());
}

GeneratorWord GeneratorWord::e_run(int i, int j) {
  GeneratorWord w;
  for (int l = i; l <= j; ++l) w.push_back(Letter::e(l));
  return w;
}

GeneratorWord GeneratorWord::f_run(int j, int i) {
  GeneratorWord w;
  for (int l = j; l >= i; --l) w.push_back(Letter::f(l));
  return w;
}

std::size_t GeneratorWord::generator_length() const {
  std::size_t len = 0;
  for (const auto& l : letters_) len += l.kind != LetterKind::K ? 1 : 0;
  return len;
}

int GeneratorWord::count(LetterKind kind, int i) const {
  int c = 0;
  for (const auto& l : letters_) c += (l.kind == kind && l.index == i) ? 1 : 0;
  return c;
}

GeneratorWord GeneratorWord::without_idempotents() const {
  GeneratorWord w;
  for (const auto& l : letters_) {
    if (l.kind != LetterKind::K) w.push_back(l);
  }
  return w;
}

std::string GeneratorWord::to_string() const {
  std::string s;
  for (std::size_t k = 0; k < letters_.size();) {
    std::size_t run = 1;
    while (k + run < letters_.size() && letters_[k + run] == letters_[k]) ++run;
    if (!s.empty()) s += ' ';
    s += letters_[k].to_string();
    if (run > 1) s += "^" + std::to_string(run);
    k += run;
  }
  return s;
}

int DegreeVector::total() const {
  int t = 0;
  for (int v : e_deg) t += v;
  for (int v : f_deg) t += v;
  return t;
}

namespace {

void check_index(int i, const OrbitMatrix& a) {
  if (i < 1 || i > a.n() - 1) {
    throw std::out_of_range("generator index " + std::to_string(i) + " out of range for n=" + std::to_string(a.n()));
  }
}

}  // namespace

namespace detail {

bool apply_left_e(int i, OrbitMatrix& a) {
  check_index(i, a);
  const int n = a.n();
  // rows i and i+1 are 0-based rows i-1 and i
  for (int p = n - 1; p >= 0; --p) {
    if (a.at(i, p) > 0) {
      a.shift(i - 1, p, +1);
      a.shift(i, p, -1);
      return true;
    }
  }
  return false;
}

bool apply_left_f(int i, OrbitMatrix& a) {
  check_index(i, a);
  const int n = a.n();
  for (int p = 0; p < n; ++p) {
    if (a.at(i - 1, p) > 0) {
      a.shift(i - 1, p, -1);
      a.shift(i, p, +1);
      return true;
    }
  }
  return false;
}

bool apply_generators(const GeneratorWord& w, OrbitMatrix& a) {
  const auto& letters = w.letters();
  for (auto it = letters.rbegin(); it != letters.rend(); ++it) {
    if (it->kind == LetterKind::E) {
      if (!apply_left_e(it->index, a)) return false;
    } else if (it->kind == LetterKind::F) {
      if (!apply_left_f(it->index, a)) return false;
    }
  }
  return true;
}

}  // namespace detail

std::optional<OrbitMatrix> left_apply_e(int i, const OrbitMatrix& a) {
  OrbitMatrix x = a;
  if (!detail::apply_left_e(i, x)) return std::nullopt;
  return x;
}

std::optional<OrbitMatrix> left_apply_f(int i, const OrbitMatrix& a) {
  OrbitMatrix y = a;
  if (!detail::apply_left_f(i, y)) return std::nullopt;
  return y;
}

std::optional<OrbitMatrix> right_apply_f(int i, const OrbitMatrix& a) {
  check_index(i, a);
  // X = A + E_{p,i} - E_{p,i+1}, p = max{j | a_{j,i+1} > 0}
  for (int p = a.n() - 1; p >= 0; --p) {
    if (a.at(p, i) > 0) {
      OrbitMatrix x = a;
      x.shift(p, i - 1, +1);
      x.shift(p, i, -1);
      return x;
    }
  }
  return std::nullopt;
}

std::optional<OrbitMatrix> right_apply_e(int i, const OrbitMatrix& a) {
  check_index(i, a);
  // Y = A - E_{p,i} + E_{p,i+1}, p = min{j | a_{j,i} > 0}
  for (int p = 0; p < a.n(); ++p) {
    if (a.at(p, i - 1) > 0) {
      OrbitMatrix y = a;
      y.shift(p, i - 1, -1);
      y.shift(p, i, +1);
      return y;
    }
  }
  return std::nullopt;
}

DegreeVector degree_vectors(const OrbitMatrix& a) {
  const int n = a.n();
  DegreeVector d;
  d.e_deg.assign(static_cast<std::size_t>(n > 0 ? n - 1 : 0), 0);
  d.f_deg.assign(d.e_deg.size(), 0);
  // 0-based: E_i counts a(l,m) with l <= i-1 < m; F_i counts a(l,m) with m <= i-1 < l.
  for (int l = 0; l < n; ++l) {
    for (int m = 0; m < n; ++m) {
      const int v = a.at(l, m);
      if (v == 0 || l == m) continue;
      if (l < m) {
        for (int i = l; i < m; ++i) d.e_deg[static_cast<std::size_t>(i)] += v;
      } else {
        for (int i = m; i < l; ++i) d.f_deg[static_cast<std::size_t>(i)] += v;
      }
    }
  }
  return d;
}

GeneratorWord decompose_monomial(const OrbitMatrix& a) {
  const int n = a.n();
  GeneratorWord w;
  // (prod_{s=n-1}^{1} prod_{l=1}^{s} e_l^{sum_{p<=l} a_{p,s+1}})
  for (int s = n - 1; s >= 1; --s) {
    for (int l = 1; l <= s; ++l) {
      int exp = 0;
      for (int p = 1; p <= l; ++p) exp += a.at(p - 1, s);
      w.append_power(Letter::e(l), exp);
    }
  }
  // (prod_{s=1}^{n-1} prod_{l=n-1}^{s} f_l^{sum_{l<p<=n} a_{p,s}})
  for (int s = 1; s <= n - 1; ++s) {
    for (int l = n - 1; l >= s; --l) {
      int exp = 0;
      for (int p = l + 1; p <= n; ++p) exp += a.at(p - 1, s - 1);
      w.append_power(Letter::f(l), exp);
    }
  }
  w.push_back(Letter::k(a.co()));
  return w;
}

GeneratorWord decompose_pbw(const OrbitMatrix& a) {
  const int n = a.n();
  GeneratorWord w;
  // Upper part, column by column from the right; within a column the
  // entry nearest the diagonal is created first (appears leftmost).
  for (int j = n; j >= 2; --j) {
    for (int i = j - 1; i >= 1; --i) {
      const auto block = GeneratorWord::e_run(i, j - 1);
      for (int k = 0; k < a.at(i - 1, j - 1); ++k) w.append(block);
    }
  }
  // Lower part, column by column from the left; within a column the lowest
  // entry is created first (appears rightmost).
  for (int j = 1; j <= n - 1; ++j) {
    for (int i = j + 1; i <= n; ++i) {
      const auto block = GeneratorWord::f_run(i - 1, j);
      for (int k = 0; k < a.at(i - 1, j - 1); ++k) w.append(block);
    }
  }
  w.push_back(Letter::k(a.co()));
  return w;
}

ScaledOrbit evaluate_word(const GeneratorWord& w, const OrbitMatrix& start) {
  OrbitMatrix current = start;
  const auto& letters = w.letters();
  for (auto it = letters.rbegin(); it != letters.rend(); ++it) {
    switch (it->kind) {
      case LetterKind::E:
        if (!detail::apply_left_e(it->index, current)) return ScaledOrbit::zero();
        break;
      case LetterKind::F:
        if (!detail::apply_left_f(it->index, current)) return ScaledOrbit::zero();
        break;
      case LetterKind::K:
        if (it->weight.n() != current.n()) throw std::out_of_range("idempotent letter has wrong length");
        if (it->weight != current.ro()) return ScaledOrbit::zero();
        break;
    }
  }
  return ScaledOrbit::of(std::move(current));
}

}  // namespace schur0
