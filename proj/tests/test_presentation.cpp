#include <gtest/gtest.h>

#include <map>
#include <set>
#include <tuple>
#include <queue>

#include "schur0/errors.hpp"
#include "schur0/presentation.hpp"

using namespace schur0;

namespace {

const RelationElement* find_relation(const std::vector<RelationElement>& rels, RelationFamily f, int i, int j,
                                     const Composition& lambda) {
  for (const auto& rel : rels) {
    if (rel.family == f && rel.i == i && rel.j == j && rel.lambda == lambda) return &rel;
  }
  return nullptr;
}

}  // namespace

TEST(Quiver, Counts) {
  const auto q22 = build_quiver(2, 2);
  EXPECT_EQ(q22.vertices.size(), 3u);
  EXPECT_EQ(q22.arrows.size(), 4u);
  EXPECT_EQ(build_quiver(3, 5).vertices.size(), 21u);
  const auto q1 = build_quiver(1, 4);
  EXPECT_EQ(q1.vertices.size(), 1u);
  EXPECT_TRUE(q1.arrows.empty());
}

TEST(Quiver, ArrowsMatchRuleZeroCases) {
  const auto q = build_quiver(3, 3);
  std::set<std::tuple<int, int, std::vector<int>>> arrows;
  for (const auto& a : q.arrows) arrows.emplace(static_cast<int>(a.kind), a.i, a.source.parts());
  for (const auto& lambda : q.vertices) {
    const auto k = OrbitMatrix::diag(lambda);
    for (int i = 1; i <= 2; ++i) {
      EXPECT_EQ(left_apply_e(i, k).has_value(), arrows.contains({static_cast<int>(LetterKind::E), i, lambda.parts()}));
      EXPECT_EQ(left_apply_f(i, k).has_value(), arrows.contains({static_cast<int>(LetterKind::F), i, lambda.parts()}));
    }
  }
  // Arrows come in opposite pairs.
  for (const auto& a : q.arrows) {
    bool paired = false;
    for (const auto& b : q.arrows) paired |= b.kind != a.kind && b.i == a.i && b.source == a.target && b.target == a.source;
    EXPECT_TRUE(paired);
  }
}

TEST(Relations, CommutatorCases) {
  const auto rels = relation_set(2, 2, ParamTuple({1}));
  const auto* mid = find_relation(rels, RelationFamily::C, 1, 1, Composition({1, 1}));
  ASSERT_NE(mid, nullptr);
  ASSERT_EQ(mid->terms.size(), 2u);
  EXPECT_EQ(mid->terms[0].coeff, 1);
  EXPECT_EQ(mid->terms[0].word.without_idempotents().to_string(), "e1 f1");
  EXPECT_EQ(mid->terms[1].coeff, -1);
  EXPECT_EQ(mid->terms[1].word.without_idempotents().to_string(), "f1 e1");

  // λ = (2,0): f1 e1 has no path, leaving e1 f1 - t k.
  const auto* edge = find_relation(rels, RelationFamily::C, 1, 1, Composition({2, 0}));
  ASSERT_NE(edge, nullptr);
  ASSERT_EQ(edge->terms.size(), 2u);
  EXPECT_EQ(edge->terms[0].word.without_idempotents().to_string(), "e1 f1");
  EXPECT_EQ(edge->terms[1].coeff, -1);
  EXPECT_TRUE(edge->terms[1].word.without_idempotents().empty());

  for (const auto& rel : rels) EXPECT_EQ(rel.family, RelationFamily::C);
}

TEST(Relations, EmptyCommutatorOmitted) {
  for (const auto& rel : relation_set(3, 2, ParamTuple({1, 1}))) {
    if (rel.family == RelationFamily::C && rel.i == rel.j) {
      EXPECT_FALSE(rel.lambda.part(rel.i) == 0 && rel.lambda.part(rel.i + 1) == 0) << rel.to_string();
    }
  }
  EXPECT_EQ(find_relation(relation_set(3, 2, ParamTuple({1, 1})), RelationFamily::C, 1, 1, Composition({0, 0, 2})), nullptr);
  EXPECT_THROW(relation_set(3, 2, ParamTuple({1})), ShapeMismatch);
}

TEST(Relations, TermsShareEndpoints) {
  for (const auto& rel : relation_set(3, 3, ParamTuple({1, 1}))) {
    std::optional<Composition> target;
    for (const auto& term : rel.terms) {
      const auto& letters = term.word.letters();
      ASSERT_EQ(letters.back().weight, rel.lambda);
      auto end = path_target(term.word, rel.lambda);
      ASSERT_TRUE(end.has_value());
      if (target) { EXPECT_EQ(*end, *target); }
      target = end;
    }
  }
}

TEST(Relations, VanishInTheirAlgebras) {
  for (const auto& [n, r] : {std::pair{2, 3}, std::pair{3, 2}, std::pair{3, 3}}) {
    std::vector<Rational> third;
    for (int i = 1; i < n; ++i) third.push_back(make_rational(1, i + 1));
    const std::vector<std::pair<ProductSpec, ParamTuple>> cases{
        {ProductSpec::s0(), ParamTuple::constant(n, 1)},
        {ProductSpec::star(), ParamTuple::constant(n, 0)},
        {ProductSpec::deformed(ParamTuple(third)), ParamTuple(third)}};
    for (const auto& [spec, t] : cases) {
      const auto table = build_table(n, r, spec);
      const auto report = check_relations(table, t);
      EXPECT_GT(report.relations_checked, 0u);
      EXPECT_TRUE(report.ok()) << report.to_json(table);
    }
  }
}

TEST(Relations, WrongParameterIsDetected) {
  const auto table = build_table(2, 3, ProductSpec::s0());
  const auto report = check_relations(table, ParamTuple({make_rational(1, 2)}));
  EXPECT_FALSE(report.ok());
  const auto json = report.to_json(table);
  EXPECT_NE(json.find("\"family\":\"C\""), std::string::npos);
  EXPECT_NE(json.find("\"relations_checked\":4"), std::string::npos);
  const auto other = build_table(2, 2, ProductSpec::s0());
  EXPECT_THROW(evaluate_relation(relation_set(2, 3, ParamTuple({1})).front(), other), ShapeMismatch);
}

TEST(Relations, SerreTermsKeepDegree) {
  const auto table = build_table(3, 3, ProductSpec::s0());
  RelationEvaluator eval(table);
  for (const auto& rel : relation_set(3, 3, ParamTuple({1, 1}))) {
    if (rel.family == RelationFamily::C) continue;
    std::optional<int> degree;
    for (const auto& term : rel.terms) {
      const auto v = eval.evaluate(term.word);
      if (v.is_zero()) continue;
      ASSERT_EQ(v.size(), 1u);
      const int d = degree_vectors(std::get<OrbitMatrix>(table.label(v.leading_index()))).total();
      if (degree) { EXPECT_EQ(d, *degree) << rel.to_string(); }
      degree = d;
    }
  }
}

TEST(ReducedWord, LengthIsDegree) {
  EXPECT_EQ(reduced_word_for(OrbitMatrix::diag(Composition({2, 1}))).generator_length(), 0u);
  EXPECT_EQ(reduced_word_for(OrbitMatrix{{0, 1, 2}, {3, 0, 4}, {5, 6, 0}}).generator_length(), 28u);
}

TEST(ReducedWord, MinimalAmongAllWordsForXi22) {
  // Breadth-first search over words applied to the idempotents.
  std::map<OrbitMatrix, std::size_t> shortest;
  std::queue<OrbitMatrix> frontier;
  for (const auto& lambda : enumerate_compositions(2, 2)) {
    shortest.emplace(OrbitMatrix::diag(lambda), 0);
    frontier.push(OrbitMatrix::diag(lambda));
  }
  while (!frontier.empty()) {
    const auto a = frontier.front();
    frontier.pop();
    for (auto next : {left_apply_e(1, a), left_apply_f(1, a)}) {
      if (next && shortest.emplace(*next, shortest[a] + 1).second) frontier.push(*next);
    }
  }
  const auto basis = enumerate_basis(2, 2);
  ASSERT_EQ(shortest.size(), basis.size());
  for (const auto& a : basis) EXPECT_EQ(reduced_word_for(a).generator_length(), shortest.at(a)) << a.to_string();
}
