#include "cli.hpp"

#include <CLI11.hpp>
#include <cstdlib>
#include <fstream>
#include <nlohmann/json.hpp>
#include <ostream>

#include "schur0/algebra_ops.hpp"
#include "schur0/centralizers.hpp"
#include "schur0/combinatorics.hpp"
#include "schur0/errors.hpp"
#include "schur0/table_io.hpp"
#include "verify.hpp"

namespace schur0::cli {

namespace {

using nlohmann::ordered_json;

struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct Options {
  int n = 2;
  int r = 2;
  std::string product = "s0";
  std::string t;
  std::string format = "text";
  std::string out_path;
  std::string a;
  std::string b;
  std::string suite = "all";
  int max_n = 3;
  int max_r = 3;
  bool graded = false;
  bool inject_fault = false;
};

std::size_t max_dim_from_env() {
  const char* raw = std::getenv("SCHUR0_MAX_DIM");
  if (!raw || !*raw) return kDefaultMaxDim;
  try {
    std::size_t used = 0;
    const long long v = std::stoll(raw, &used);
    if (used != std::string(raw).size() || v <= 0) throw std::invalid_argument("");
    return static_cast<std::size_t>(v);
  } catch (const std::exception&) {
    throw UsageError("SCHUR0_MAX_DIM must be a positive integer");
  }
}

ProductSpec product_spec(const Options& o) {
  ProductKind kind;
  ParamTuple t;
  try {
    kind = parse_product_kind(o.product);
    t = o.t.empty() ? ParamTuple::constant(o.n, 1) : ParamTuple::parse(o.t);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  switch (kind) {
    case ProductKind::S0:
      return ProductSpec::s0();
    case ProductKind::Star:
      return ProductSpec::star();
    case ProductKind::T:
      return ProductSpec::deformed(t);
  }
  return ProductSpec::s0();
}

OrbitMatrix matrix_arg(const std::string& text, const char* flag) {
  try {
    return parse_matrix(text);
  } catch (const GuardExceeded&) {
    throw;
  } catch (const std::invalid_argument& e) {
    throw UsageError(std::string(flag) + ": " + e.what());
  }
}

// Writes to --out when given, else to out.
void emit(const Options& o, std::ostream& out, const std::string& text) {
  if (o.out_path.empty()) {
    out << text;
    return;
  }
  std::ofstream file(o.out_path, std::ios::binary);
  if (!file) throw std::runtime_error("cannot open " + o.out_path);
  file << text;
  if (!file.flush()) throw std::runtime_error("write failed: " + o.out_path);
}

ordered_json checks_json(const std::vector<Check>& checks) {
  auto arr = ordered_json::array();
  for (const auto& c : checks) arr.push_back({{"name", c.name}, {"status", c.pass ? "pass" : "fail"}, {"detail", c.detail}});
  return arr;
}

int cmd_basis(const Options& o, std::ostream& out) {
  const auto basis = enumerate_basis(o.n, o.r);
  if (basis.size() > max_dim_from_env()) throw GuardExceeded("basis larger than SCHUR0_MAX_DIM");
  if (o.format == "json") {
    ordered_json doc{{"n", o.n}, {"r", o.r}, {"count", basis.size()}, {"basis", ordered_json::array()}};
    for (const auto& a : basis) doc["basis"].push_back(a.to_string());
    emit(o, out, doc.dump(2) + "\n");
  } else {
    std::string text = "count " + std::to_string(basis.size()) + "\n";
    for (const auto& a : basis) text += a.to_string() + "\n";
    emit(o, out, text);
  }
  return kOk;
}

int cmd_mult(const Options& o, std::ostream& out) {
  if (o.a.empty() || o.b.empty()) throw UsageError("mult needs -A and -B");
  const auto a = matrix_arg(o.a, "-A");
  const auto b = matrix_arg(o.b, "-B");
  if (a.n() != o.n || b.n() != o.n || a.r() != o.r || b.r() != o.r) throw ShapeMismatch("operands are not in Xi(n,r)");
  const auto c = multiply(product_spec(o), a, b);
  if (o.format == "json") {
    ordered_json doc{{"product", c.is_zero() ? ordered_json(nullptr) : ordered_json(c.matrix->to_string())},
                     {"coefficient", to_fraction_string(c.coeff)}};
    out << doc.dump() << "\n";
  } else {
    out << c.to_string() << "\n";
  }
  return kOk;
}

int cmd_table(const Options& o, std::ostream& out) {
  const auto t = build_table(o.n, o.r, product_spec(o), max_dim_from_env());
  emit(o, out, table_to_json(t) + "\n");
  return kOk;
}

int cmd_ideal(const Options& o, std::ostream& out) {
  const auto t = build_table(o.n, o.r, ProductSpec::s0(), max_dim_from_env());
  const auto ideal = ideal_closure(t, boundary_idempotents(t));
  std::vector<SparseVector> expected;
  for (const auto& a : boundary_ideal_basis(o.n, o.r)) expected.push_back(SparseVector::unit(t.require_index(a)));
  const bool matches = rref(expected).pivots() == ideal.subspace.pivots();
  const auto formula = boundary_ideal_rank_formula(o.n, o.r);
  ordered_json doc{{"n", o.n},
                   {"r", o.r},
                   {"dimension", t.dimension()},
                   {"ideal_rank", ideal.rank()},
                   {"rank_formula", formula},
                   {"matches_zero_diagonal_span", matches}};
  if (o.format == "json") {
    out << doc.dump(2) << "\n";
  } else {
    out << "dimension " << t.dimension() << "\nideal rank " << ideal.rank() << " (formula " << formula << ")\n"
        << "zero-diagonal span " << (matches ? "yes" : "no") << "\n";
  }
  return matches && static_cast<std::int64_t>(ideal.rank()) == formula ? kOk : kFailure;
}

int cmd_quotient(const Options& o, std::ostream& out) {
  const auto t = build_table(o.n, o.r, ProductSpec::s0(), max_dim_from_env());
  const auto q = quotient_algebra(t, ideal_closure(t, boundary_idempotents(t)));
  if (!o.out_path.empty() || o.format == "json") {
    emit(o, out, table_to_json(q) + "\n");
  } else {
    out << "dimension " << q.dimension() << " (formula " << boundary_quotient_rank_formula(o.n, o.r) << ")\n";
    for (const auto& label : q.basis()) out << label_to_string(label) << "\n";
  }
  return kOk;
}

int cmd_hecke(const Options& o, std::ostream& out) {
  const auto h = o.graded ? nilhecke_graded_build(o.r) : hecke0_build(o.r);
  if (o.format == "json") {
    ordered_json doc{{"r", o.r}, {"graded", o.graded}, {"dimension", h.table.dimension()}, {"checks", checks_json(h.checks)}};
    out << doc.dump(2) << "\n";
  } else {
    out << (o.graded ? "graded nil-Hecke corner" : "0-Hecke corner") << ", dimension " << h.table.dimension() << "\n";
    for (const auto& c : h.checks) out << (c.pass ? "pass " : "FAIL ") << c.name << (c.detail.empty() ? "" : ": " + c.detail) << "\n";
  }
  return all_pass(h.checks) ? kOk : kFailure;
}

int cmd_ntl(const Options& o, std::ostream& out) {
  const auto ntl = ntl_build(o.r);
  if (o.format == "json") {
    ordered_json doc{{"r", o.r}, {"dimension", ntl.table.dimension()}, {"basis", ordered_json::array()}, {"checks", checks_json(ntl.checks)}};
    for (const auto& label : ntl.table.basis()) {
      const auto& m = std::get<OrbitMatrix>(label);
      doc["basis"].push_back({{"matrix", m.to_string()}, {"peaks", element_to_peaks(m).to_string()}});
    }
    out << doc.dump(2) << "\n";
  } else {
    out << "dimension " << ntl.table.dimension() << " (Catalan " << catalan(o.r) << ")\n";
    for (const auto& label : ntl.table.basis()) {
      const auto& m = std::get<OrbitMatrix>(label);
      out << "\n" << m.to_string() << "  peaks " << element_to_peaks(m).to_string() << "\n" << render_peaks(m);
    }
  }
  return all_pass(ntl.checks) ? kOk : kFailure;
}

int cmd_verify(const Options& o, std::ostream& out) {
  VerifyOptions vo;
  vo.max_n = o.max_n;
  vo.max_r = o.max_r;
  vo.max_dim = std::max(max_dim_from_env(), std::size_t{5000});
  vo.inject_fault = o.inject_fault;
  const auto records = run_suite(o.suite, vo);
  out << report_json(records) << "\n";
  for (const auto& r : records) {
    if (!r.pass) return kFailure;
  }
  return kOk;
}

}  // namespace

int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"0-Schur algebras: bases, products, tables and structural checks", "schur0"};
  app.require_subcommand(1);
  Options o;

  auto shape_flags = [&](CLI::App* cmd, bool need_n) {
    if (need_n) cmd->add_option("-n", o.n, "matrix size")->check(CLI::PositiveNumber);
    cmd->add_option("-r", o.r, "total weight")->check(CLI::NonNegativeNumber);
    cmd->add_option("--format", o.format, "text or json")->check(CLI::IsMember({"text", "json"}));
  };
  auto product_flags = [&](CLI::App* cmd) {
    cmd->add_option("--product", o.product, "s0, star or t")->check(CLI::IsMember({"s0", "star", "t"}));
    cmd->add_option("--t", o.t, "comma list of rationals for --product t");
  };

  auto* basis = app.add_subcommand("basis", "list the orbit basis of Xi(n,r)");
  shape_flags(basis, true);
  basis->add_option("--out", o.out_path);
  auto* mult = app.add_subcommand("mult", "multiply two basis elements");
  shape_flags(mult, true);
  product_flags(mult);
  mult->add_option("-A", o.a, "left matrix, e.g. 2,2;0,1")->required();
  mult->add_option("-B", o.b, "right matrix")->required();
  auto* table = app.add_subcommand("table", "write the structure table as JSON");
  shape_flags(table, true);
  product_flags(table);
  table->add_option("--out", o.out_path);
  auto* verify = app.add_subcommand("verify", "run structural checks and print a JSON report");
  verify->add_option("--suite", o.suite)->check(CLI::IsMember(kSuites));
  verify->add_option("--max-n", o.max_n)->check(CLI::PositiveNumber);
  verify->add_option("--max-r", o.max_r)->check(CLI::PositiveNumber);
  verify->add_flag("--inject-fault", o.inject_fault, "negate one structure constant (harness self-test)");
  auto* quotient = app.add_subcommand("quotient", "S0(n,r) modulo the boundary ideal");
  shape_flags(quotient, true);
  quotient->add_option("--out", o.out_path);
  auto* ideal = app.add_subcommand("ideal", "rank of the boundary ideal of S0(n,r)");
  shape_flags(ideal, true);
  auto* hecke = app.add_subcommand("hecke", "corner of S0(r,r) (or DS0 with --graded) at (1,...,1)");
  shape_flags(hecke, false);
  hecke->add_flag("--graded", o.graded);
  auto* ntl = app.add_subcommand("ntl", "nil-Temperley-Lieb subalgebra and its peak sets");
  shape_flags(ntl, false);

  std::reverse(args.begin(), args.end());
  try {
    app.parse(args);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }

  try {
    if (*basis) return cmd_basis(o, out);
    if (*mult) return cmd_mult(o, out);
    if (*table) return cmd_table(o, out);
    if (*verify) return cmd_verify(o, out);
    if (*quotient) return cmd_quotient(o, out);
    if (*ideal) return cmd_ideal(o, out);
    if (*hecke) return cmd_hecke(o, out);
    if (*ntl) return cmd_ntl(o, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kFailure;
  }
  return kUsage;
}

}  // namespace schur0::cli
