#include "schur0/presentation.hpp"

#include <cstdlib>
#include <nlohmann/json.hpp>
#include <stdexcept>

#include "schur0/errors.hpp"

namespace schur0 {

Quiver build_quiver(int n, int r) {
  Quiver q;
  q.vertices = enumerate_compositions(n, r);
  for (const auto& lambda : q.vertices) {
    for (int i = 1; i < n; ++i) {
      if (auto up = lambda.add_alpha(i)) q.arrows.push_back({LetterKind::E, i, lambda, *up});
      if (auto down = lambda.subtract_alpha(i)) q.arrows.push_back({LetterKind::F, i, lambda, *down});
    }
  }
  return q;
}

std::optional<Composition> path_target(const GeneratorWord& w, const Composition& source) {
  std::optional<Composition> at = source;
  const auto& letters = w.letters();
  for (auto it = letters.rbegin(); it != letters.rend() && at; ++it) {
    switch (it->kind) {
      case LetterKind::E:
        at = at->add_alpha(it->index);
        break;
      case LetterKind::F:
        at = at->subtract_alpha(it->index);
        break;
      case LetterKind::K:
        if (it->weight != *at) at.reset();
        break;
    }
  }
  return at;
}

std::string family_name(RelationFamily f) {
  switch (f) {
    case RelationFamily::P:
      return "P";
    case RelationFamily::N:
      return "N";
    case RelationFamily::C:
      return "C";
  }
  return {};
}

std::string RelationElement::to_string() const {
  std::string s = family_name(family) + "_{" + std::to_string(i) + std::to_string(j) + "," + lambda.to_string() + "}:";
  for (const auto& term : terms) {
    s += ' ';
    s += term.coeff < 0 ? "- " : "+ ";
    const Rational mag = abs(term.coeff);
    if (mag != 1) s += to_display_string(mag) + " ";
    s += term.word.to_string();
  }
  return s;
}

namespace {

using Letters = std::vector<Letter>;

Letter gen(LetterKind kind, int i) { return kind == LetterKind::E ? Letter::e(i) : Letter::f(i); }

// Serre words for P (kind E) or N (kind F), as (coefficient, letters).
std::vector<std::pair<int, Letters>> serre_terms(LetterKind kind, int i, int j) {
  const Letter a = gen(kind, i), b = gen(kind, j);
  const bool e = kind == LetterKind::E;
  if (i == j - 1) {
    if (e) return {{1, {a, a, b}}, {-1, {a, b, a}}};
    return {{-1, {a, b, a}}, {1, {b, a, a}}};
  }
  if (i == j + 1) {
    if (e) return {{-1, {a, b, a}}, {1, {b, a, a}}};
    return {{1, {a, a, b}}, {-1, {a, b, a}}};
  }
  return {{1, {a, b}}, {-1, {b, a}}};
}

void add_relation(std::vector<RelationElement>& out, RelationFamily family, int i, int j, const Composition& lambda,
                  const std::vector<std::pair<Rational, Letters>>& raw) {
  RelationElement rel{family, i, j, lambda, {}};
  for (const auto& [coeff, letters] : raw) {
    if (coeff == 0) continue;
    GeneratorWord bare(letters);
    auto mu = path_target(bare, lambda);
    if (!mu) continue;
    GeneratorWord framed;
    framed.push_back(Letter::k(*mu));
    framed.append(bare);
    framed.push_back(Letter::k(lambda));
    rel.terms.push_back({coeff, std::move(framed)});
  }
  if (!rel.terms.empty()) out.push_back(std::move(rel));
}

}  // namespace

std::vector<RelationElement> relation_set(int n, int r, const ParamTuple& t) {
  if (t.size() != static_cast<std::size_t>(n > 0 ? n - 1 : 0)) {
    throw ShapeMismatch("parameter tuple needs n-1 entries");
  }
  std::vector<RelationElement> out;
  for (const auto& lambda : enumerate_compositions(n, r)) {
    for (const auto& [kind, family] : {std::pair{LetterKind::E, RelationFamily::P}, std::pair{LetterKind::F, RelationFamily::N}}) {
      for (int i = 1; i < n; ++i) {
        for (int j = 1; j < n; ++j) {
          if (i == j || (std::abs(i - j) > 1 && i > j)) continue;
          std::vector<std::pair<Rational, Letters>> raw;
          for (auto& [c, w] : serre_terms(kind, i, j)) raw.emplace_back(c, std::move(w));
          add_relation(out, family, i, j, lambda, raw);
        }
      }
    }
    for (int i = 1; i < n; ++i) {
      for (int j = 1; j < n; ++j) {
        std::vector<std::pair<Rational, Letters>> raw{{1, {Letter::e(i), Letter::f(j)}}, {-1, {Letter::f(j), Letter::e(i)}}};
        if (i == j) {
          const bool low = lambda.part(i) == 0, high = lambda.part(i + 1) == 0;
          if (low && high) continue;
          const int sign = static_cast<int>(high) - static_cast<int>(low);
          raw.emplace_back(-t.at(i) * sign, Letters{});
        }
        add_relation(out, RelationFamily::C, i, j, lambda, raw);
      }
    }
  }
  return out;
}

RelationEvaluator::RelationEvaluator(const StructureTable& table) : table_(table) {
  const int n = table.n();
  e_.resize(static_cast<std::size_t>(n));
  f_.resize(static_cast<std::size_t>(n));
  for (const auto& lambda : enumerate_compositions(n, table.r())) {
    const auto k = OrbitMatrix::diag(lambda);
    for (int i = 1; i < n; ++i) {
      if (auto x = left_apply_e(i, k)) e_[static_cast<std::size_t>(i)] += SparseVector::unit(table.require_index(*x));
      if (auto y = left_apply_f(i, k)) f_[static_cast<std::size_t>(i)] += SparseVector::unit(table.require_index(*y));
    }
  }
}

const SparseVector& RelationEvaluator::letter(const Letter& l) const {
  switch (l.kind) {
    case LetterKind::E:
    case LetterKind::F: {
      if (l.index < 1 || l.index >= table_.n()) throw ShapeMismatch("generator index outside the table");
      return (l.kind == LetterKind::E ? e_ : f_)[static_cast<std::size_t>(l.index)];
    }
    case LetterKind::K:
      break;
  }
  if (l.weight.n() != table_.n() || l.weight.weight() != table_.r()) throw ShapeMismatch("idempotent outside the table");
  auto it = k_.find(l.weight);
  if (it == k_.end()) it = k_.emplace(l.weight, SparseVector::unit(idempotent_index(table_, l.weight))).first;
  return it->second;
}

SparseVector RelationEvaluator::evaluate(const GeneratorWord& w) const {
  const auto& letters = w.letters();
  if (letters.empty()) return table_.unit();
  SparseVector v = letter(letters.back());
  for (auto it = letters.rbegin() + 1; it != letters.rend() && !v.is_zero(); ++it) v = table_.multiply(letter(*it), v);
  return v;
}

SparseVector RelationEvaluator::evaluate(const RelationElement& rel) const {
  if (rel.lambda.n() != table_.n() || rel.lambda.weight() != table_.r()) {
    throw ShapeMismatch("relation and table have different (n,r)");
  }
  SparseVector sum;
  for (const auto& term : rel.terms) sum.add_scaled(evaluate(term.word), term.coeff);
  return sum;
}

SparseVector evaluate_relation(const RelationElement& rel, const StructureTable& t) {
  return RelationEvaluator(t).evaluate(rel);
}

GeneratorWord reduced_word_for(const OrbitMatrix& a) {
  auto w = decompose_pbw(a);
  const auto deg = degree_vectors(a);
  if (w.generator_length() != static_cast<std::size_t>(deg.total())) {
    throw std::logic_error("PBW word length differs from the degree of " + a.to_string());
  }
  return w;
}

std::string RelationReport::to_json(const StructureTable& t) const {
  nlohmann::ordered_json doc;
  doc["relations_checked"] = relations_checked;
  auto failures_json = nlohmann::ordered_json::array();
  for (const auto& f : failures) {
    auto residual = nlohmann::ordered_json::array();
    for (const auto& [k, c] : f.residual.terms()) residual.push_back({label_to_string(t.label(k)), to_fraction_string(c)});
    failures_json.push_back({{"family", family_name(f.relation.family)},
                             {"i", f.relation.i},
                             {"j", f.relation.j},
                             {"lambda", f.relation.lambda.parts()},
                             {"residual", std::move(residual)}});
  }
  doc["failures"] = std::move(failures_json);
  return doc.dump();
}

RelationReport check_relations(const StructureTable& t, const ParamTuple& param) {
  RelationReport report;
  RelationEvaluator eval(t);
  for (auto& rel : relation_set(t.n(), t.r(), param)) {
    ++report.relations_checked;
    auto residual = eval.evaluate(rel);
    if (!residual.is_zero()) report.failures.push_back({std::move(rel), std::move(residual)});
  }
  return report;
}

}  // namespace schur0
