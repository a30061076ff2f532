#include "schur0/composition.hpp"

#include <numeric>
#include <stdexcept>

namespace schur0 {

Composition::Composition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (int p : parts_) {
    if (p < 0) throw std::invalid_argument("composition parts must be nonnegative");
  }
  weight_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

std::optional<Composition> Composition::add_alpha(int i) const {
  if (i < 1 || i >= n()) throw std::out_of_range("alpha index out of range");
  if (part(i + 1) == 0) return std::nullopt;
  std::vector<int> p = parts_;
  ++p[static_cast<std::size_t>(i - 1)];
  --p[static_cast<std::size_t>(i)];
  return Composition(std::move(p));
}

std::optional<Composition> Composition::subtract_alpha(int i) const {
  if (i < 1 || i >= n()) throw std::out_of_range("alpha index out of range");
  if (part(i) == 0) return std::nullopt;
  std::vector<int> p = parts_;
  --p[static_cast<std::size_t>(i - 1)];
  ++p[static_cast<std::size_t>(i)];
  return Composition(std::move(p));
}

bool Composition::is_boundary() const {
  for (int p : parts_) {
    if (p == 0) return true;
  }
  return false;
}

std::size_t Composition::nonzero_parts() const {
  std::size_t count = 0;
  for (int p : parts_) count += p != 0 ? 1 : 0;
  return count;
}

std::string Composition::to_string() const {
  std::string s = "(";
  for (std::size_t k = 0; k < parts_.size(); ++k) {
    if (k) s += ",";
    s += std::to_string(parts_[k]);
  }
  return s + ")";
}

namespace {

void compositions_rec(int n, int remaining, std::vector<int>& prefix, std::vector<Composition>& out) {
  if (static_cast<int>(prefix.size()) == n - 1) {
    prefix.push_back(remaining);
    out.emplace_back(prefix);
    prefix.pop_back();
    return;
  }
  for (int v = 0; v <= remaining; ++v) {
    prefix.push_back(v);
    compositions_rec(n, remaining - v, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

std::vector<Composition> enumerate_compositions(int n, int r) {
  if (n < 1) throw std::invalid_argument("n must be positive");
  if (r < 0) throw std::invalid_argument("r must be nonnegative");
  std::vector<Composition> out;
  std::vector<int> prefix;
  compositions_rec(n, r, prefix, out);
  return out;
}

Composition all_ones(int r) { return Composition(std::vector<int>(static_cast<std::size_t>(r), 1)); }

}  // namespace schur0

std::size_t std::hash<schur0::Composition>::operator()(const schur0::Composition& c) const noexcept {
  std::size_t h = 0x9e3779b97f4a7c15ULL;
  for (int p : c.parts()) h = (h ^ static_cast<std::size_t>(p)) * 0x100000001b3ULL;
  return h;
}
