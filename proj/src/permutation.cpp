#include "schur0/permutation.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "schur0/errors.hpp"

namespace schur0 {

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size() + 1, false);
  for (int x : images_) {
    if (x < 1 || x > static_cast<int>(images_.size()) || seen[static_cast<std::size_t>(x)]) {
      throw std::invalid_argument("not a permutation of 1..r");
    }
    seen[static_cast<std::size_t>(x)] = true;
  }
}

Permutation Permutation::identity(int r) {
  std::vector<int> images(static_cast<std::size_t>(r));
  for (int x = 1; x <= r; ++x) images[static_cast<std::size_t>(x - 1)] = x;
  return Permutation(std::move(images));
}

Permutation Permutation::s(int i, int r) {
  if (i < 1 || i >= r) throw std::out_of_range("simple transposition index out of range");
  auto w = identity(r);
  std::swap(w.images_[static_cast<std::size_t>(i - 1)], w.images_[static_cast<std::size_t>(i)]);
  return w;
}

Permutation Permutation::from_word(const std::vector<int>& word, int r) {
  auto w = identity(r);
  for (int i : word) w = w * s(i, r);
  return w;
}

Permutation Permutation::from_matrix(const OrbitMatrix& m) {
  if (!m.is_permutation_matrix()) throw std::invalid_argument("not a permutation matrix: " + m.to_string());
  std::vector<int> images(static_cast<std::size_t>(m.n()));
  for (int row = 0; row < m.n(); ++row) {
    for (int col = 0; col < m.n(); ++col) {
      if (m.at(row, col)) images[static_cast<std::size_t>(col)] = row + 1;
    }
  }
  return Permutation(std::move(images));
}

int Permutation::length() const {
  int inv = 0;
  for (std::size_t a = 0; a < images_.size(); ++a) {
    for (std::size_t b = a + 1; b < images_.size(); ++b) inv += images_[a] > images_[b];
  }
  return inv;
}

Permutation Permutation::inverse() const {
  std::vector<int> inv(images_.size());
  for (std::size_t x = 0; x < images_.size(); ++x) inv[static_cast<std::size_t>(images_[x] - 1)] = static_cast<int>(x) + 1;
  return Permutation(std::move(inv));
}

OrbitMatrix Permutation::to_matrix() const {
  const int r = degree();
  std::vector<int> entries(static_cast<std::size_t>(r * r), 0);
  for (int j = 1; j <= r; ++j) entries[static_cast<std::size_t>(((*this)(j) - 1) * r + (j - 1))] = 1;
  return OrbitMatrix(r, std::move(entries));
}

std::string Permutation::to_string() const {
  std::string s = "[";
  for (std::size_t k = 0; k < images_.size(); ++k) {
    if (k) s += ' ';
    s += std::to_string(images_[k]);
  }
  return s + "]";
}

Permutation operator*(const Permutation& u, const Permutation& v) {
  if (u.degree() != v.degree()) throw std::invalid_argument("permutations of different degree");
  std::vector<int> images(v.images_.size());
  for (std::size_t x = 0; x < images.size(); ++x) images[x] = u(v.images_[x]);
  return Permutation(std::move(images));
}

namespace {

void guard(int r) {
  if (r > kMaxPermutationDegree) throw GuardExceeded("permutation degree " + std::to_string(r) + " exceeds 7");
}

const std::vector<ReducedWord>& words_memo(const Permutation& w, std::map<Permutation, std::vector<ReducedWord>>& memo) {
  if (auto it = memo.find(w); it != memo.end()) return it->second;
  std::vector<ReducedWord> out;
  const int r = w.degree();
  if (w.length() == 0) {
    out.emplace_back();
  } else {
    for (int i = 1; i < r; ++i) {
      if (w(i) < w(i + 1)) continue;  // not a right descent
      for (auto word : words_memo(w * Permutation::s(i, r), memo)) {
        word.push_back(i);
        out.push_back(std::move(word));
      }
    }
    std::sort(out.begin(), out.end());
  }
  return memo.emplace(w, std::move(out)).first->second;
}

}  // namespace

std::vector<Permutation> all_permutations(int r) {
  guard(r);
  std::vector<Permutation> out;
  auto images = Permutation::identity(r).images();
  do {
    out.emplace_back(images);
  } while (std::next_permutation(images.begin(), images.end()));
  return out;
}

std::vector<ReducedWord> reduced_words(const Permutation& w) {
  guard(w.degree());
  std::map<Permutation, std::vector<ReducedWord>> memo;
  return words_memo(w, memo);
}

ReducedWord reduced_word(const Permutation& w) {
  ReducedWord word;
  auto cur = w;
  while (cur.length() > 0) {
    for (int i = 1; i < cur.degree(); ++i) {
      if (cur(i) > cur(i + 1)) {
        word.push_back(i);
        cur = cur * Permutation::s(i, cur.degree());
        break;
      }
    }
  }
  std::reverse(word.begin(), word.end());
  return word;
}

}  // namespace schur0
