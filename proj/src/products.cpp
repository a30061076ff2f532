#include "schur0/products.hpp"

#include <stdexcept>

#include "schur0/errors.hpp"

namespace schur0 {

ParamTuple ParamTuple::constant(int n, const Rational& value) {
  return ParamTuple(std::vector<Rational>(static_cast<std::size_t>(n > 0 ? n - 1 : 0), value));
}

ParamTuple ParamTuple::parse(std::string_view text) {
  std::vector<Rational> values;
  if (text.empty()) return ParamTuple{};
  std::size_t start = 0;
  while (true) {
    const auto pos = text.find(',', start);
    values.push_back(parse_rational(text.substr(start, pos == std::string_view::npos ? pos : pos - start)));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return ParamTuple(std::move(values));
}

std::string ParamTuple::to_string() const {
  std::string s;
  for (std::size_t k = 0; k < values_.size(); ++k) {
    if (k) s += ',';
    s += to_display_string(values_[k]);
  }
  return s;
}

std::string ProductSpec::tag() const {
  switch (kind) {
    case ProductKind::S0:
      return "s0";
    case ProductKind::Star:
      return "star";
    case ProductKind::T:
      return "t";
  }
  return {};
}

ProductKind parse_product_kind(std::string_view text) {
  if (text == "s0") return ProductKind::S0;
  if (text == "star") return ProductKind::Star;
  if (text == "t") return ProductKind::T;
  throw std::invalid_argument("unknown product '" + std::string(text) + "'");
}

namespace {

void check_shapes(const OrbitMatrix& a, const OrbitMatrix& b) {
  if (a.n() != b.n() || a.r() != b.r()) {
    throw ShapeMismatch("operands must lie in the same Xi(n,r)");
  }
}

void check_params(const ParamTuple& t, const OrbitMatrix& a) {
  if (static_cast<int>(t.size()) != a.n() - 1) {
    throw ShapeMismatch("parameter tuple must have n-1 entries");
  }
}

std::optional<OrbitMatrix> s0_product(const GeneratorWord& word_a, const OrbitMatrix& a, const OrbitMatrix& b) {
  if (a.co() != b.ro()) return std::nullopt;
  OrbitMatrix c = b;
  if (!detail::apply_generators(word_a, c)) return std::nullopt;
  return c;
}

bool degrees_add(const DegreeVector& da, const DegreeVector& db, const DegreeVector& dc) {
  for (std::size_t i = 0; i < da.e_deg.size(); ++i) {
    if (da.e_deg[i] + db.e_deg[i] != dc.e_deg[i]) return false;
  }
  return true;
}

Rational defect_coefficient(const ParamTuple& t, const DegreeVector& da, const DegreeVector& db,
                            const DegreeVector& dc) {
  Rational coeff = 1;
  for (std::size_t i = 0; i < da.e_deg.size(); ++i) {
    const int d = da.e_deg[i] + db.e_deg[i] - dc.e_deg[i];
    if (d < 0) throw std::logic_error("negative degree defect");
    coeff *= power(t.values()[i], static_cast<unsigned>(d));
  }
  return coeff;
}

}  // namespace

ScaledOrbit s0_multiply(const OrbitMatrix& a, const OrbitMatrix& b) {
  check_shapes(a, b);
  auto c = s0_product(decompose_monomial(a), a, b);
  return c ? ScaledOrbit::of(std::move(*c)) : ScaledOrbit::zero();
}

ScaledOrbit star_multiply(const OrbitMatrix& a, const OrbitMatrix& b) {
  auto c = s0_multiply(a, b);
  if (c.is_zero()) return c;
  if (!degrees_add(degree_vectors(a), degree_vectors(b), degree_vectors(*c.matrix))) return ScaledOrbit::zero();
  return c;
}

ScaledOrbit t_multiply(const ParamTuple& t, const OrbitMatrix& a, const OrbitMatrix& b) {
  check_shapes(a, b);
  check_params(t, a);
  auto c = s0_multiply(a, b);
  if (c.is_zero()) return c;
  Rational coeff = defect_coefficient(t, degree_vectors(a), degree_vectors(b), degree_vectors(*c.matrix));
  return ScaledOrbit::of(std::move(*c.matrix), std::move(coeff));
}

ScaledOrbit multiply(const ProductSpec& spec, const OrbitMatrix& a, const OrbitMatrix& b) {
  switch (spec.kind) {
    case ProductKind::S0:
      return s0_multiply(a, b);
    case ProductKind::Star:
      return star_multiply(a, b);
    case ProductKind::T:
      return t_multiply(spec.t, a, b);
  }
  return ScaledOrbit::zero();
}

const GeneratorWord& CachedMultiplier::word_for(const OrbitMatrix& a) {
  auto it = words_.find(a);
  if (it == words_.end()) it = words_.emplace(a, decompose_monomial(a).without_idempotents()).first;
  return it->second;
}

const DegreeVector& CachedMultiplier::degrees_for(const OrbitMatrix& a) {
  auto it = degrees_.find(a);
  if (it == degrees_.end()) it = degrees_.emplace(a, degree_vectors(a)).first;
  return it->second;
}

ScaledOrbit CachedMultiplier::operator()(const OrbitMatrix& a, const OrbitMatrix& b) {
  check_shapes(a, b);
  if (spec_.kind == ProductKind::T) check_params(spec_.t, a);
  auto c = s0_product(word_for(a), a, b);
  if (!c) return ScaledOrbit::zero();
  switch (spec_.kind) {
    case ProductKind::S0:
      return ScaledOrbit::of(std::move(*c));
    case ProductKind::Star: {
      if (!degrees_add(degrees_for(a), degrees_for(b), degrees_for(*c))) return ScaledOrbit::zero();
      return ScaledOrbit::of(std::move(*c));
    }
    case ProductKind::T: {
      Rational coeff = defect_coefficient(spec_.t, degrees_for(a), degrees_for(b), degrees_for(*c));
      return ScaledOrbit::of(std::move(*c), std::move(coeff));
    }
  }
  return ScaledOrbit::zero();
}

}  // namespace schur0
