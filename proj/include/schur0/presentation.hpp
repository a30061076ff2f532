#pragma once

#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "schur0/composition.hpp"
#include "schur0/generators.hpp"
#include "schur0/products.hpp"
#include "schur0/structure_table.hpp"

namespace schur0 {

struct Arrow {
  LetterKind kind;  // E or F
  int i;
  Composition source;
  Composition target;
};

/// Σ(n,r): one vertex per composition, e_i from λ to λ+α_i when λ_{i+1} > 0,
/// f_i from λ to λ-α_i when λ_i > 0.
struct Quiver {
  std::vector<Composition> vertices;
  std::vector<Arrow> arrows;
};

Quiver build_quiver(int n, int r);

/// Target of the path w (read right to left) starting at λ, or nullopt if the
/// path leaves the quiver. K letters must match the current vertex.
std::optional<Composition> path_target(const GeneratorWord& w, const Composition& source);

enum class RelationFamily { P, N, C };
std::string family_name(RelationFamily f);

struct RelationTerm {
  Rational coeff;
  GeneratorWord word;  // k(μ) ... k(λ)
};

struct RelationElement {
  RelationFamily family;
  int i;
  int j;
  Composition lambda;
  std::vector<RelationTerm> terms;

  std::string to_string() const;
};

/// P, N and C(t) relations at every vertex, keeping only terms whose paths
/// exist. C_{ii} at λ with λ_i = λ_{i+1} = 0 is omitted, as are relations left
/// with no terms. Throws ShapeMismatch if t does not have n-1 entries.
std::vector<RelationElement> relation_set(int n, int r, const ParamTuple& t);

/// Evaluates the relation in T, reading e_i, f_i as the sums Σ_λ e_{i,λ},
/// Σ_λ f_{i,λ} and k(λ) as the idempotent. Zero means the relation holds.
/// Throws ShapeMismatch if T is not over Ξ(n,r) of the relation.
class RelationEvaluator {
public:
  explicit RelationEvaluator(const StructureTable& table);

  SparseVector evaluate(const GeneratorWord& w) const;
  SparseVector evaluate(const RelationElement& rel) const;

private:
  const SparseVector& letter(const Letter& l) const;

  const StructureTable& table_;
  std::vector<SparseVector> e_;
  std::vector<SparseVector> f_;
  mutable std::unordered_map<Composition, SparseVector> k_;
};

SparseVector evaluate_relation(const RelationElement& rel, const StructureTable& t);

/// decompose_pbw(A), checked to have Σ E(A) + Σ F(A) generator letters.
GeneratorWord reduced_word_for(const OrbitMatrix& a);

/// {relations_checked, failures:[{family,i,j,lambda,residual}]}
struct RelationReport {
  std::size_t relations_checked = 0;
  struct Failure {
    RelationElement relation;
    SparseVector residual;
  };
  std::vector<Failure> failures;

  bool ok() const { return failures.empty(); }
  std::string to_json(const StructureTable& t) const;
};

RelationReport check_relations(const StructureTable& t, const ParamTuple& param);

}  // namespace schur0
