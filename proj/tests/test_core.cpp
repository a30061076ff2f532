#include <gtest/gtest.h>

#include <set>

#include "oracles.hpp"
#include "schur0/combinatorics.hpp"
#include "schur0/errors.hpp"
#include "schur0/generators.hpp"
#include "schur0/orbit_matrix.hpp"
#include "schur0/products.hpp"

using namespace schur0;

namespace {

const OrbitMatrix kExample{{0, 1, 2}, {3, 0, 4}, {5, 6, 0}};

OrbitMatrix apply_n(std::optional<OrbitMatrix> (*rule)(int, const OrbitMatrix&), int i, OrbitMatrix a, int times) {
  for (int k = 0; k < times; ++k) {
    auto next = rule(i, a);
    if (!next) throw std::logic_error("rule vanished");
    a = *next;
  }
  return a;
}

}  // namespace

TEST(Composition, EnumerationAndAlpha) {
  EXPECT_EQ(enumerate_compositions(3, 5).size(), 21u);
  EXPECT_EQ(enumerate_compositions(1, 4).size(), 1u);
  const auto all = enumerate_compositions(3, 3);
  EXPECT_TRUE(std::is_sorted(all.begin(), all.end()));
  const Composition lambda({1, 2, 0});
  EXPECT_EQ(lambda.add_alpha(1), Composition({2, 1, 0}));
  EXPECT_FALSE(lambda.add_alpha(2).has_value());
  EXPECT_EQ(lambda.subtract_alpha(2), Composition({1, 1, 1}));
  EXPECT_TRUE(lambda.is_boundary());
  EXPECT_FALSE(all_ones(4).is_boundary());
  EXPECT_THROW(lambda.add_alpha(3), std::out_of_range);
  EXPECT_THROW(Composition({1, -1}), std::invalid_argument);
}

TEST(OrbitMatrix, ConstructionErrors) {
  EXPECT_THROW(OrbitMatrix(2, {1, 2, 3}), std::invalid_argument);
  EXPECT_THROW(OrbitMatrix(2, {1, -1, 0, 0}), std::invalid_argument);
  EXPECT_THROW(OrbitMatrix(1, {65}), GuardExceeded);
  EXPECT_THROW(parse_matrix("1,2;3"), std::invalid_argument);
  EXPECT_THROW(parse_matrix("1,a;0,0"), std::invalid_argument);
  EXPECT_THROW(parse_matrix("1,-2;0,0"), std::invalid_argument);
  EXPECT_EQ(parse_matrix("2,2;0,1"), (OrbitMatrix{{2, 2}, {0, 1}}));
  EXPECT_EQ(parse_matrix(kExample.to_string()), kExample);
}

TEST(OrbitMatrix, Margins) {
  EXPECT_EQ(kExample.ro(), Composition({3, 7, 11}));
  EXPECT_EQ(kExample.co(), Composition({8, 7, 6}));
  const Composition lambda({2, 0, 3});
  EXPECT_EQ(OrbitMatrix::diag(lambda).ro(), lambda);
  EXPECT_EQ(OrbitMatrix::diag(lambda).co(), lambda);
  EXPECT_EQ(OrbitMatrix(1, {4}).ro(), Composition({4}));
}

TEST(EnumerateBasis, MatchesBruteForceAndBinomial) {
  for (int n = 1; n <= 3; ++n) {
    for (int r = 0; r <= (n == 3 ? 4 : 6); ++r) {
      const auto basis = enumerate_basis(n, r);
      const auto brute = oracle::all_matrices(n, r);
      ASSERT_EQ(basis.size(), brute.size()) << n << "," << r;
      for (std::size_t k = 0; k < basis.size(); ++k) ASSERT_EQ(basis[k].flat(), brute[k]);
      EXPECT_EQ(static_cast<std::int64_t>(basis.size()), binomial(n * n + r - 1, r));
      EXPECT_EQ(basis_count(n, r), binomial(n * n + r - 1, r));
    }
  }
  EXPECT_EQ(enumerate_basis(1, 5), std::vector<OrbitMatrix>{OrbitMatrix(1, {5})});
  EXPECT_EQ(enumerate_basis(2, 2).size(), 10u);
  EXPECT_EQ(enumerate_basis(3, 3).size(), 165u);
  EXPECT_THROW(enumerate_basis(0, 1), std::invalid_argument);
}

TEST(EnumerateBasis, MarginsFilter) {
  const Composition rows({1, 1, 1});
  const auto perms = enumerate_with_margins(rows, rows);
  EXPECT_EQ(perms.size(), 6u);
  for (const auto& p : perms) EXPECT_TRUE(p.is_permutation_matrix());
}

TEST(FundamentalRules, WorkedExampleSteps) {
  const OrbitMatrix before_e2{{0, 1, 0}, {3, 0, 0}, {5, 6, 6}};
  EXPECT_EQ(apply_n(left_apply_e, 2, before_e2, 6), (OrbitMatrix{{0, 1, 0}, {3, 0, 6}, {5, 6, 0}}));
  EXPECT_EQ(left_apply_e(1, OrbitMatrix{{0, 1, 1}, {3, 0, 5}, {5, 6, 0}}), kExample);
  EXPECT_FALSE(left_apply_e(1, OrbitMatrix{{2, 1}, {0, 0}}).has_value());

  const OrbitMatrix before_f1{{8, 0, 0}, {0, 1, 0}, {0, 6, 6}};
  EXPECT_EQ(apply_n(left_apply_f, 1, before_f1, 8), (OrbitMatrix{{0, 0, 0}, {8, 1, 0}, {0, 6, 6}}));
  EXPECT_EQ(apply_n(left_apply_f, 2, OrbitMatrix::diag(Composition({8, 7, 6})), 6), before_f1);
  EXPECT_FALSE(left_apply_f(1, OrbitMatrix{{0, 0}, {1, 1}}).has_value());

  EXPECT_THROW(left_apply_e(0, kExample), std::out_of_range);
  EXPECT_THROW(left_apply_f(3, kExample), std::out_of_range);
  EXPECT_THROW(right_apply_e(3, kExample), std::out_of_range);
}

TEST(FundamentalRules, RightRules) {
  // diag(1,2,0): f_2 needs column 3, f_1 moves the (2,2) unit to (2,1).
  const auto d = OrbitMatrix::diag(Composition({1, 2, 0}));
  EXPECT_EQ(right_apply_f(1, d), (OrbitMatrix{{1, 0, 0}, {1, 1, 0}, {0, 0, 0}}));
  EXPECT_FALSE(right_apply_f(2, d).has_value());
  EXPECT_FALSE(right_apply_e(2, OrbitMatrix::diag(Composition({1, 0, 2}))).has_value());
}

TEST(FundamentalRules, MarginShifts) {
  for (const auto& a : enumerate_basis(3, 3)) {
    for (int i = 1; i <= 2; ++i) {
      const Composition ro = a.ro(), co = a.co();
      if (auto x = left_apply_e(i, a)) {
        EXPECT_EQ(x->ro(), *ro.add_alpha(i));
        EXPECT_EQ(x->co(), co);
      } else {
        EXPECT_EQ(ro.part(i + 1), 0);
      }
      if (auto y = left_apply_f(i, a)) {
        EXPECT_EQ(y->ro(), *ro.subtract_alpha(i));
        EXPECT_EQ(y->co(), co);
      } else {
        EXPECT_EQ(ro.part(i), 0);
      }
      if (auto x = right_apply_f(i, a)) {
        EXPECT_EQ(x->co(), *co.add_alpha(i));
        EXPECT_EQ(x->ro(), ro);
      } else {
        EXPECT_EQ(co.part(i + 1), 0);
      }
      if (auto y = right_apply_e(i, a)) {
        EXPECT_EQ(y->co(), *co.subtract_alpha(i));
        EXPECT_EQ(y->ro(), ro);
      } else {
        EXPECT_EQ(co.part(i), 0);
      }
    }
  }
}

TEST(FundamentalRules, LeftAndRightCommute) {
  using Rule = std::optional<OrbitMatrix> (*)(int, const OrbitMatrix&);
  const Rule lefts[] = {left_apply_e, left_apply_f};
  const Rule rights[] = {right_apply_e, right_apply_f};
  for (const auto& a : enumerate_basis(3, 3)) {
    auto x = right_apply_f(2, a);
    auto lx = x ? left_apply_e(1, *x) : std::nullopt;
    auto y = left_apply_e(1, a);
    auto ry = y ? right_apply_f(2, *y) : std::nullopt;
    EXPECT_EQ(lx, ry) << a.to_string();
    for (auto l : lefts) {
      for (auto r : rights) {
        for (int i = 1; i <= 2; ++i) {
          for (int j = 1; j <= 2; ++j) {
            auto p = r(j, a);
            auto q = l(i, a);
            auto pq = p ? l(i, *p) : std::nullopt;
            auto qp = q ? r(j, *q) : std::nullopt;
            if (pq && qp) { EXPECT_EQ(*pq, *qp); }
          }
        }
      }
    }
  }
}

TEST(DegreeVectors, Formulae) {
  const auto d = degree_vectors(kExample);
  EXPECT_EQ(d.e_deg, (std::vector<int>{3, 6}));
  EXPECT_EQ(d.f_deg, (std::vector<int>{8, 11}));
  const auto z = degree_vectors(OrbitMatrix::diag(Composition({3, 1, 2})));
  EXPECT_EQ(z.e_deg, (std::vector<int>{0, 0}));
  EXPECT_EQ(z.f_deg, (std::vector<int>{0, 0}));
  const auto up = degree_vectors(OrbitMatrix{{0, 5}, {0, 0}});
  EXPECT_EQ(up.e_deg, std::vector<int>{5});
  EXPECT_EQ(up.f_deg, std::vector<int>{0});
}

TEST(Decompositions, WorkedExampleWords) {
  EXPECT_EQ(decompose_monomial(kExample).to_string(), "e1^2 e2^6 e1 f2^5 f1^8 f2^6 k(8,7,6)");
  GeneratorWord pbw;
  pbw.append_power(Letter::e(2), 4);
  for (int k = 0; k < 2; ++k) pbw.append(GeneratorWord::e_run(1, 2));
  pbw.append(GeneratorWord::e_run(1, 1));
  for (int k = 0; k < 3; ++k) pbw.append(GeneratorWord::f_run(1, 1));
  for (int k = 0; k < 5; ++k) pbw.append(GeneratorWord::f_run(2, 1));
  for (int k = 0; k < 6; ++k) pbw.append(GeneratorWord::f_run(2, 2));
  pbw.push_back(Letter::k(Composition({8, 7, 6})));
  EXPECT_EQ(decompose_pbw(kExample), pbw);

  const Composition lambda({2, 0, 1});
  const GeneratorWord just_k({Letter::k(lambda)});
  EXPECT_EQ(decompose_monomial(OrbitMatrix::diag(lambda)), just_k);
  EXPECT_EQ(decompose_pbw(OrbitMatrix::diag(lambda)), just_k);
}

TEST(Decompositions, EvaluateToTheOrbit) {
  for (int n = 2; n <= 3; ++n) {
    for (const auto& a : enumerate_basis(n, n == 2 ? 4 : 3)) {
      const auto start = OrbitMatrix::diag(a.co());
      const auto mono = decompose_monomial(a);
      const auto pbw = decompose_pbw(a);
      EXPECT_EQ(evaluate_word(mono, start), ScaledOrbit::of(a));
      EXPECT_EQ(evaluate_word(pbw, start), ScaledOrbit::of(a));
      const auto d = degree_vectors(a);
      for (int i = 1; i < n; ++i) {
        EXPECT_EQ(mono.count(LetterKind::E, i), d.e_deg[static_cast<std::size_t>(i - 1)]);
        EXPECT_EQ(mono.count(LetterKind::F, i), d.f_deg[static_cast<std::size_t>(i - 1)]);
      }
    }
  }
  for (const auto& a : enumerate_basis(3, 4)) {
    const auto d = degree_vectors(a);
    const auto w = decompose_monomial(a);
    EXPECT_EQ(w.generator_length(), static_cast<std::size_t>(d.total()));
  }
}

TEST(EvaluateWord, IdempotentLetters) {
  const Composition lambda({1, 2}), mu({2, 1});
  const auto d = OrbitMatrix::diag(lambda);
  EXPECT_EQ(evaluate_word(GeneratorWord({Letter::k(lambda)}), d), ScaledOrbit::of(d));
  EXPECT_TRUE(evaluate_word(GeneratorWord({Letter::k(mu)}), d).is_zero());
  EXPECT_THROW(evaluate_word(GeneratorWord({Letter::e(2)}), d), std::out_of_range);
}

TEST(Products, NewexExample) {
  const OrbitMatrix a{{2, 2}, {0, 1}}, b{{2, 0}, {2, 1}}, c{{3, 1}, {1, 0}};
  EXPECT_EQ(s0_multiply(a, b), ScaledOrbit::of(c));
  EXPECT_TRUE(star_multiply(a, b).is_zero());
  // d = E(a) + E(b) - E(c) = 2 + 0 - 1.
  const auto da = degree_vectors(a), db = degree_vectors(b), dc = degree_vectors(c);
  const int d = da.e_deg[0] + db.e_deg[0] - dc.e_deg[0];
  ASSERT_EQ(d, 1);
  const auto half = make_rational(1, 2);
  EXPECT_EQ(t_multiply(ParamTuple({half}), a, b), ScaledOrbit::of(c, power(half, d)));
  EXPECT_TRUE(t_multiply(ParamTuple({0}), a, b).is_zero());
}

TEST(Products, IdentitiesAndZero) {
  for (const auto& b : enumerate_basis(2, 3)) {
    for (const auto& spec : {ProductSpec::s0(), ProductSpec::star(), ProductSpec::deformed(ParamTuple({make_rational(2, 3)}))}) {
      EXPECT_EQ(multiply(spec, OrbitMatrix::diag(b.ro()), b), ScaledOrbit::of(b));
      EXPECT_EQ(multiply(spec, b, OrbitMatrix::diag(b.co())), ScaledOrbit::of(b));
    }
  }
  const OrbitMatrix a{{1, 0}, {0, 2}}, b{{2, 0}, {0, 1}};
  EXPECT_TRUE(s0_multiply(a, b).is_zero());
  EXPECT_THROW(s0_multiply(a, OrbitMatrix{{1}}), ShapeMismatch);
  EXPECT_THROW(s0_multiply(a, OrbitMatrix{{1, 1}, {1, 1}}), ShapeMismatch);
  EXPECT_THROW(t_multiply(ParamTuple({1, 1}), a, a), ShapeMismatch);
}

TEST(Products, SpecializationsAndFiltration) {
  const auto basis = enumerate_basis(2, 3);
  const ParamTuple ones({1}), zeros({0});
  for (const auto& a : basis) {
    for (const auto& b : basis) {
      const auto p = s0_multiply(a, b);
      EXPECT_EQ(t_multiply(ones, a, b), p);
      EXPECT_EQ(t_multiply(zeros, a, b), star_multiply(a, b));
      if (p.is_zero()) {
        EXPECT_TRUE(star_multiply(a, b).is_zero());
        continue;
      }
      EXPECT_EQ(p.matrix->ro(), a.ro());
      EXPECT_EQ(p.matrix->co(), b.co());
      const auto da = degree_vectors(a), db = degree_vectors(b), dc = degree_vectors(*p.matrix);
      const int de = da.e_deg[0] + db.e_deg[0] - dc.e_deg[0];
      const int df = da.f_deg[0] + db.f_deg[0] - dc.f_deg[0];
      EXPECT_EQ(de, df);
      EXPECT_GE(de, 0);
      EXPECT_EQ(star_multiply(a, b).is_zero(), de != 0);
    }
  }
}

TEST(Products, CachedMultiplierAgrees) {
  const auto spec = ProductSpec::deformed(ParamTuple({make_rational(1, 3), make_rational(-2, 1)}));
  CachedMultiplier cached(spec);
  const auto basis = enumerate_basis(3, 2);
  for (const auto& a : basis)
    for (const auto& b : basis) ASSERT_EQ(cached(a, b), multiply(spec, a, b));
}
