#include "verify.hpp"

#include <chrono>
#include <functional>
#include <map>
#include <nlohmann/json.hpp>
#include <stdexcept>

#include "schur0/algebra_ops.hpp"
#include "schur0/centralizers.hpp"
#include "schur0/combinatorics.hpp"
#include "schur0/presentation.hpp"

namespace schur0::cli {

namespace {

std::string shape(int n, int r) { return "(" + std::to_string(n) + "," + std::to_string(r) + ")"; }

class Harness {
public:
  explicit Harness(const VerifyOptions& options) : options_(options) {}

  void run(const std::string& name, const std::function<std::string()>& body) {
    const auto start = std::chrono::steady_clock::now();
    CheckRecord rec{name, true, {}, 0};
    try {
      rec.detail = body();
    } catch (const std::exception& e) {
      rec.pass = false;
      rec.detail = e.what();
    }
    rec.elapsed_ms =
        std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
    records_.push_back(std::move(rec));
  }

  // Tables are shared between suites; the fault is applied once per S₀ table.
  const StructureTable& table(int n, int r, const ProductSpec& spec) {
    const std::string key = spec.tag() + shape(n, r) + spec.t.to_string();
    auto it = tables_.find(key);
    if (it != tables_.end()) return it->second;
    auto t = build_table(n, r, spec, options_.max_dim);
    if (options_.inject_fault && spec.kind == ProductKind::S0) {
      for (Index i = 0; i < t.dimension(); ++i) {
        if (t.row(i).empty()) continue;
        const auto [j, v] = t.row(i).front();
        t.set_product(i, j, v.scaled(-1));
        break;
      }
    }
    return tables_.emplace(key, std::move(t)).first->second;
  }

  const VerifyOptions& options() const { return options_; }
  std::vector<CheckRecord> take() { return std::move(records_); }

private:
  VerifyOptions options_;
  std::map<std::string, StructureTable> tables_;
  std::vector<CheckRecord> records_;
};

struct Fail : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void require(bool ok, const std::string& what) {
  if (!ok) throw Fail(what);
}

std::vector<ProductSpec> specs_for(int n) {
  std::vector<ProductSpec> specs{ProductSpec::s0(), ProductSpec::star()};
  if (n >= 2) {
    specs.push_back(ProductSpec::deformed(ParamTuple::constant(n, 0)));
    specs.push_back(ProductSpec::deformed(ParamTuple::constant(n, make_rational(1, 2))));
    std::vector<Rational> mixed;
    for (int i = 1; i < n; ++i) mixed.emplace_back(i % 2 ? make_rational(2, i + 2) : make_rational(-3, i + 2));
    specs.push_back(ProductSpec::deformed(ParamTuple(mixed)));
  }
  return specs;
}

void filtration_suite(Harness& h) {
  const auto& o = h.options();
  for (int n = 1; n <= o.max_n; ++n) {
    for (int r = 1; r <= o.max_r; ++r) {
      h.run("filtration" + shape(n, r), [&] {
        const auto basis = enumerate_basis(n, r);
        std::size_t pairs = 0;
        for (const auto& a : basis) {
          const auto da = degree_vectors(a);
          for (const auto& b : basis) {
            auto c = s0_multiply(a, b);
            if (c.is_zero()) continue;
            ++pairs;
            const auto db = degree_vectors(b), dc = degree_vectors(*c.matrix);
            for (std::size_t i = 0; i + 1 < static_cast<std::size_t>(n); ++i) {
              const int de = da.e_deg[i] + db.e_deg[i] - dc.e_deg[i];
              const int df = da.f_deg[i] + db.f_deg[i] - dc.f_deg[i];
              require(de == df && de >= 0, "defect mismatch at " + a.to_string() + " * " + b.to_string());
            }
          }
        }
        return std::to_string(pairs) + " nonzero products";
      });
      for (const auto& spec : specs_for(n)) {
        h.run("associativity " + spec.tag() + shape(n, r) + (spec.t.size() ? "[t=" + spec.t.to_string() + "]" : ""), [&] {
          const auto& t = h.table(n, r, spec);
          const auto bad = find_associativity_failure(t);
          require(!bad, bad ? "fails at " + label_to_string(t.label((*bad)[0])) + ", " + label_to_string(t.label((*bad)[1])) +
                                  ", " + label_to_string(t.label((*bad)[2]))
                            : "");
          return std::to_string(t.dimension()) + " basis elements";
        });
      }
    }
  }
}

void presentation_suite(Harness& h) {
  const auto& o = h.options();
  for (int n = 2; n <= o.max_n; ++n) {
    for (int r = 1; r <= o.max_r; ++r) {
      std::vector<Rational> mixed;
      for (int i = 1; i < n; ++i) mixed.push_back(make_rational(1, i + 1));
      const std::vector<std::pair<ProductSpec, ParamTuple>> cases{
          {ProductSpec::s0(), ParamTuple::constant(n, 1)},
          {ProductSpec::star(), ParamTuple::constant(n, 0)},
          {ProductSpec::deformed(ParamTuple(mixed)), ParamTuple(mixed)}};
      for (const auto& [spec, t] : cases) {
        h.run("relations " + spec.tag() + shape(n, r) + "[t=" + t.to_string() + "]", [&] {
          const auto& table = h.table(n, r, spec);
          const auto report = check_relations(table, t);
          require(report.ok(), report.to_json(table));
          return std::to_string(report.relations_checked) + " relations";
        });
      }
    }
  }
}

void maintheorem_suite(Harness& h) {
  const auto& o = h.options();
  for (int n = 1; n <= o.max_n; ++n) {
    for (int r = 1; r <= o.max_r; ++r) {
      h.run("maintheorem" + shape(n, r), [&] {
        const auto& ds = h.table(n, r, ProductSpec::star());
        const auto& big = h.table(n, n + r, ProductSpec::s0());
        const auto ideal = ideal_closure(big, boundary_idempotents(big));
        const auto quotient = quotient_algebra(big, ideal);
        const auto bij = bijection_by_labels(ds, quotient, [](const OrbitMatrix& a) { return a.plus_identity(); });
        require(verify_iso_by_bijection(ds, quotient, bij), "structure constants differ under A -> A + I");
        // Products that fall into the ideal are exactly the vanishing star products.
        std::size_t killed = 0;
        for (Index i = 0; i < ds.dimension(); ++i) {
          const auto& a = std::get<OrbitMatrix>(ds.label(i));
          for (Index j = 0; j < ds.dimension(); ++j) {
            const auto& b = std::get<OrbitMatrix>(ds.label(j));
            const auto lifted = s0_multiply(a.plus_identity(), b.plus_identity());
            const bool in_ideal = lifted.is_zero() || contains(ideal.subspace, SparseVector::unit(big.require_index(*lifted.matrix)));
            require(in_ideal == ds.product(i, j).is_zero(), "ideal/star mismatch at " + a.to_string() + " * " + b.to_string());
            killed += in_ideal;
          }
        }
        return "dim " + std::to_string(ds.dimension()) + ", " + std::to_string(killed) + " products in the ideal";
      });
    }
  }
}

void ideals_suite(Harness& h) {
  const auto& o = h.options();
  for (int n = 1; n <= o.max_n; ++n) {
    for (int r = 1; r <= o.max_r; ++r) {
      h.run("boundary_ideal" + shape(n, r), [&] {
        const auto& t = h.table(n, r, ProductSpec::s0());
        const auto ideal = ideal_closure(t, boundary_idempotents(t));
        std::vector<SparseVector> expected;
        for (const auto& a : boundary_ideal_basis(n, r)) expected.push_back(SparseVector::unit(t.require_index(a)));
        const auto span = rref(expected);
        require(span.pivots() == ideal.subspace.pivots() && span.rank() == ideal.rank(), "closure differs from the zero-diagonal span");
        require(static_cast<std::int64_t>(ideal.rank()) == boundary_ideal_rank_formula(n, r), "ideal rank differs from the formula");
        const auto q = quotient_algebra(t, ideal);
        require(static_cast<std::int64_t>(q.dimension()) == boundary_quotient_rank_formula(n, r),
                "quotient dimension differs from the formula");
        return "rank " + std::to_string(ideal.rank()) + ", quotient " + std::to_string(q.dimension());
      });
    }
  }
  if (o.max_n >= 3 && o.max_r >= 3) {
    h.run("single_face_generates(3,3,i=2)", [&] {
      const auto& t = h.table(3, 3, ProductSpec::s0());
      const auto all = ideal_closure(t, idempotents_with_support_at_most(t, 2));
      for (const auto& face : std::vector<std::vector<int>>{{1, 2}, {1, 3}, {2, 3}}) {
        const auto one = ideal_closure(t, face_idempotents(t, face));
        require(one.subspace.pivots() == all.subspace.pivots(), "a single face generates a smaller ideal");
      }
      return "rank " + std::to_string(all.rank());
    });
  }
}

std::string summarize(const std::vector<Check>& checks) {
  std::string failed;
  for (const auto& c : checks) {
    if (!c.pass) failed += (failed.empty() ? "" : " | ") + c.name + ": " + c.detail;
  }
  if (!failed.empty()) throw Fail(failed);
  return std::to_string(checks.size()) + " checks";
}

void hecke_suite(Harness& h) {
  const int top = std::min(h.options().max_r, kMaxCornerDegree);
  for (int r = 2; r <= top; ++r) {
    h.run("hecke0(" + std::to_string(r) + ")", [&] { return summarize(hecke0_build(r).checks); });
    h.run("nilhecke_graded(" + std::to_string(r) + ")", [&] { return summarize(nilhecke_graded_build(r).checks); });
  }
}

void ntl_suite(Harness& h) {
  const int top = std::min(h.options().max_r, kMaxPermutationDegree);
  for (int r = 2; r <= top; ++r) {
    h.run("ntl(" + std::to_string(r) + ")", [&] {
      const auto ntl = ntl_build(r);
      summarize(ntl.checks);
      for (const auto& label : ntl.table.basis()) {
        const auto& m = std::get<OrbitMatrix>(label);
        require(peaks_to_element(r, element_to_peaks(m)) == m, "peak round trip fails at " + m.to_string());
      }
      require(all_peak_sets(r).size() == ntl.table.dimension(), "peak sets and basis differ in size");
      return "dim " + std::to_string(ntl.table.dimension());
    });
  }
}

}  // namespace

std::vector<CheckRecord> run_suite(const std::string& suite, const VerifyOptions& options) {
  static const std::map<std::string, void (*)(Harness&)> suites{
      {"filtration", filtration_suite}, {"presentation", presentation_suite}, {"maintheorem", maintheorem_suite},
      {"ideals", ideals_suite},         {"hecke", hecke_suite},               {"ntl", ntl_suite}};
  Harness h(options);
  if (suite == "all") {
    for (const auto& name : kSuites) {
      if (name != "all") suites.at(name)(h);
    }
  } else if (auto it = suites.find(suite); it != suites.end()) {
    it->second(h);
  } else {
    throw std::invalid_argument("unknown suite '" + suite + "'");
  }
  return h.take();
}

std::string report_json(const std::vector<CheckRecord>& checks) {
  nlohmann::ordered_json doc;
  auto arr = nlohmann::ordered_json::array();
  for (const auto& c : checks) {
    arr.push_back({{"name", c.name}, {"status", c.pass ? "pass" : "fail"}, {"detail", c.detail}, {"elapsed_ms", c.elapsed_ms}});
  }
  doc["checks"] = std::move(arr);
  return doc.dump(2);
}

}  // namespace schur0::cli
