#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "schur0/sparse.hpp"

using namespace schur0;

TEST(Rational, ParseAndFormat) {
  EXPECT_EQ(to_fraction_string(parse_rational("6/4")), "3/2");
  EXPECT_EQ(to_fraction_string(parse_rational("-2/-4")), "1/2");
  EXPECT_EQ(to_fraction_string(parse_rational("0")), "0/1");
  EXPECT_EQ(to_fraction_string(parse_rational("3")), "3/1");
  EXPECT_EQ(to_display_string(parse_rational("4/2")), "2");
  EXPECT_EQ(to_fraction_string(make_rational(2, -6)), "-1/3");
  EXPECT_THROW(parse_rational("1/0"), std::invalid_argument);
  EXPECT_THROW(parse_rational("x"), std::invalid_argument);
  EXPECT_THROW(parse_rational(""), std::invalid_argument);
  EXPECT_THROW(make_rational(1, 0), std::invalid_argument);
}

TEST(Rational, PowerConvention) {
  EXPECT_EQ(power(0, 0), 1);
  EXPECT_EQ(power(0, 3), 0);
  EXPECT_EQ(power(make_rational(1, 2), 3), make_rational(1, 8));
}

TEST(SparseVector, MergesAndDropsZeros) {
  SparseVector v({{3, 1}, {1, 2}, {3, -1}, {2, 0}});
  ASSERT_EQ(v.size(), 1u);
  EXPECT_EQ(v.coefficient(1), 2);
  EXPECT_EQ(v.coefficient(3), 0);
  v.add_scaled(SparseVector::unit(1), -2);
  EXPECT_TRUE(v.is_zero());
  EXPECT_EQ(SparseVector::unit(4, 0), SparseVector{});
}

TEST(Rref, SmallCases) {
  EXPECT_EQ(rref(std::vector<SparseVector>{}).rank(), 0u);
  const std::vector<SparseVector> multiples{SparseVector::unit(0, 1), SparseVector::unit(0, 2)};
  EXPECT_EQ(rref(multiples).rank(), 1u);
  const std::vector<SparseVector> perm{SparseVector::unit(1), SparseVector::unit(2), SparseVector::unit(0)};
  const auto s = rref(perm);
  EXPECT_EQ(s.rank(), 3u);
  EXPECT_EQ(s.pivots(), (std::vector<Index>{0, 1, 2}));
}

TEST(Contains, SmallCases) {
  const Subspace empty;
  EXPECT_TRUE(contains(empty, SparseVector{}));
  const SparseVector x({{0, 1}, {2, make_rational(1, 3)}});
  const auto sx = rref(std::vector<SparseVector>{x});
  EXPECT_TRUE(contains(sx, x.scaled(2)));
  EXPECT_FALSE(contains(rref(std::vector<SparseVector>{SparseVector::unit(0)}), SparseVector::unit(1)));
}

namespace {

SparseVector random_vector(std::mt19937& rng, Index dim, int density) {
  std::uniform_int_distribution<int> coin(0, 9), value(-3, 3);
  std::vector<SparseVector::Term> terms;
  for (Index k = 0; k < dim; ++k) {
    if (coin(rng) < density) terms.emplace_back(k, make_rational(value(rng), 1 + coin(rng) % 3));
  }
  return SparseVector(std::move(terms));
}

std::vector<Rational> dense(const SparseVector& v, Index dim) {
  std::vector<Rational> row(dim, 0);
  for (const auto& [k, c] : v.terms()) row[k] = c;
  return row;
}

}  // namespace

TEST(Subspace, AgreesWithDenseElimination) {
  std::mt19937 rng(20240611);
  for (int trial = 0; trial < 200; ++trial) {
    const Index dim = 1 + static_cast<Index>(trial % 50);
    std::vector<SparseVector> rows;
    for (int k = 0; k < 1 + trial % 7; ++k) rows.push_back(random_vector(rng, dim, 3));
    const auto s = rref(rows);
    std::vector<std::vector<Rational>> m;
    for (const auto& r : rows) m.push_back(dense(r, dim));
    ASSERT_EQ(s.rank(), oracle::dense_rank(m));
    ASSERT_LE(s.rank(), std::min<std::size_t>(rows.size(), dim));

    // Pivots strictly increase, each row is normalized, and no pivot column is shared.
    const auto basis = s.basis();
    for (std::size_t k = 0; k < basis.size(); ++k) {
      EXPECT_EQ(basis[k].terms().front().second, 1);
      if (k) { EXPECT_LT(basis[k - 1].leading_index(), basis[k].leading_index()); }
      for (std::size_t other = 0; other < basis.size(); ++other) {
        if (other != k) { EXPECT_EQ(basis[other].coefficient(basis[k].leading_index()), 0); }
      }
    }
    EXPECT_EQ(rref(basis).basis(), basis);

    const auto probe = random_vector(rng, dim, 5);
    auto with_probe = m;
    with_probe.push_back(dense(probe, dim));
    const bool in_span = oracle::dense_rank(with_probe) == s.rank();
    ASSERT_EQ(contains(s, probe), in_span);
    if (in_span) {
      const auto coords = s.coordinates(probe);
      ASSERT_TRUE(coords.has_value());
      SparseVector back;
      for (std::size_t k = 0; k < basis.size(); ++k) back.add_scaled(basis[k], (*coords)[k]);
      EXPECT_EQ(back, probe);
    } else {
      EXPECT_FALSE(s.coordinates(probe).has_value());
    }
  }
}
