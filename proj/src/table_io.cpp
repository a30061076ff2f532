#include "schur0/table_io.hpp"

#include <map>
#include <nlohmann/json.hpp>
#include <ostream>
#include <stdexcept>

namespace schur0 {

using nlohmann::ordered_json;

std::string table_to_json(const StructureTable& t, int indent) {
  ordered_json doc;
  doc["name"] = t.name();
  doc["n"] = t.n();
  doc["r"] = t.r();
  doc["product"] = t.product_tag();
  ordered_json basis = ordered_json::array();
  for (const auto& label : t.basis()) {
    if (const auto* m = std::get_if<OrbitMatrix>(&label)) {
      basis.push_back(m->flat());
    } else {
      basis.push_back(std::get<std::string>(label));
    }
  }
  doc["basis"] = std::move(basis);
  ordered_json entries = ordered_json::array();
  for (Index i = 0; i < t.dimension(); ++i) {
    for (const auto& [j, v] : t.row(i)) {
      for (const auto& [k, c] : v.terms()) entries.push_back({i, j, k, to_fraction_string(c)});
    }
  }
  doc["entries"] = std::move(entries);
  ordered_json unit = ordered_json::array();
  for (const auto& [k, c] : t.unit().terms()) unit.push_back({k, to_fraction_string(c)});
  doc["unit"] = std::move(unit);
  return doc.dump(indent);
}

void write_table(std::ostream& out, const StructureTable& t) { out << table_to_json(t) << '\n'; }

StructureTable table_from_json(const std::string& text) {
  try {
    const auto doc = ordered_json::parse(text);
    const int n = doc.at("n").get<int>();
    std::vector<BasisLabel> labels;
    for (const auto& b : doc.at("basis")) {
      if (b.is_string()) {
        labels.emplace_back(b.get<std::string>());
      } else {
        labels.emplace_back(OrbitMatrix(n, b.get<std::vector<int>>()));
      }
    }
    const Index dim = labels.size();
    StructureTable t(doc.at("name").get<std::string>(), n, doc.at("r").get<int>(),
                     doc.at("product").get<std::string>(), std::move(labels));
    std::map<std::pair<Index, Index>, std::vector<SparseVector::Term>> products;
    for (const auto& e : doc.at("entries")) {
      const auto i = e.at(0).get<Index>(), j = e.at(1).get<Index>(), k = e.at(2).get<Index>();
      if (i >= dim || j >= dim || k >= dim) throw std::invalid_argument("entry index out of range");
      products[{i, j}].emplace_back(k, parse_rational(e.at(3).get<std::string>()));
    }
    for (auto& [ij, terms] : products) t.set_product(ij.first, ij.second, SparseVector(std::move(terms)));
    if (doc.contains("unit")) {
      std::vector<SparseVector::Term> terms;
      for (const auto& u : doc.at("unit")) terms.emplace_back(u.at(0).get<Index>(), parse_rational(u.at(1).get<std::string>()));
      t.set_unit(SparseVector(std::move(terms)));
    }
    return t;
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("malformed table JSON: ") + e.what());
  }
}

}  // namespace schur0
