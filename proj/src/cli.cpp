#include "semibrace/cli.hpp"

#include <sstream>

#include "CLI11.hpp"
#include "semibrace/io.hpp"

namespace semibrace {

namespace {

int exit_code_for(const Diag& d) {
  switch (d.code) {
    case Fail::none: return 0;
    case Fail::parse_error: return 2;
    case Fail::budget_exceeded: return 3;
    case Fail::internal_implication: return 4;
    default: return 1;
  }
}

std::string witness_names(const CayleyTable& t, const std::vector<int>& w) {
  if (w.empty()) return "";
  std::string out = " (witness";
  for (int i : w)
    out += " " + (i >= 0 && i < t.n ? t.name(i) : std::to_string(i));
  return out + ")";
}

// picks the structure a single-table check applies to
Result<CayleyTable> single_table(const TableFile& f) {
  if (f.has("add")) return table_from(f, "add");
  if (f.has("mul")) return table_from(f, "mul");
  return fail(Fail::parse_error, {}, "file has neither add nor mul block");
}

int report_failure(const Diag& d, const CayleyTable* t, std::ostream& out,
                   std::ostream& err) {
  const int code = exit_code_for(d);
  std::ostream& sink = code == 2 ? err : out;
  sink << "fail: " << to_string(d.code);
  if (t != nullptr) sink << witness_names(*t, d.witness);
  if (!d.detail.empty()) sink << ": " << d.detail;
  sink << '\n';
  return code;
}

int cmd_check(const std::string& path, const std::string& as,
              std::ostream& out, std::ostream& err) {
  auto file = load_table_file(path);
  if (!file.ok()) return report_failure(file.error(), nullptr, out, err);
  if (as == "brace" || as == "dual-brace") {
    auto add = table_from(*file, "add");
    if (!add.ok()) return report_failure(add.error(), nullptr, out, err);
    auto mul = table_from(*file, "mul");
    if (!mul.ok()) return report_failure(mul.error(), nullptr, out, err);
    auto brace = check_weak_brace(*add, *mul);
    if (!brace.ok()) return report_failure(brace.error(), &*add, out, err);
    if (as == "dual-brace") {
      DualCheck d = is_dual(*brace);
      if (!d.dual) {
        out << "fail: mul not Clifford" << witness_names(*add, d.detail.witness)
            << '\n';
        return 1;
      }
      if (!d.detail.ok()) return report_failure(d.detail, &*add, out, err);
    }
    out << "ok: " << (as == "dual-brace" ? "dual " : "")
        << "weak left brace on " << add->n << " elements\n";
    return 0;
  }
  auto table = single_table(*file);
  if (!table.ok()) return report_failure(table.error(), nullptr, out, err);
  if (as == "semigroup") {
    if (Diag d = check_associative(*table); !d.ok())
      return report_failure(d, &*table, out, err);
    out << "ok: semigroup on " << table->n << " elements\n";
    return 0;
  }
  auto inv = von_neumann_inverses(*table);
  if (!inv.ok()) return report_failure(inv.error(), &*table, out, err);
  if (as == "inverse") {
    out << "ok: inverse semigroup on " << table->n << " elements\n";
    return 0;
  }
  // clifford
  auto cliff = build_clifford(*inv);
  if (!cliff.ok()) return report_failure(cliff.error(), &*table, out, err);
  out << "ok: Clifford semigroup on " << table->n << " elements, "
      << cliff->h_classes.size() << " subgroup classes\n";
  return 0;
}

int cmd_enumerate(const std::string& path, const std::string& route,
                  const std::string& emit, const SearchOptions& opt,
                  std::ostream& out, std::ostream& err) {
  auto file = load_table_file(path);
  if (!file.ok()) return report_failure(file.error(), nullptr, out, err);

  Result<EnumerationReport> report = fail(Fail::parse_error);
  if (route == "gamma" || route == "good") {
    auto add = table_from(*file, "add");
    if (!add.ok()) return report_failure(add.error(), nullptr, out, err);
    auto inv = von_neumann_inverses(*add);
    if (!inv.ok()) return report_failure(inv.error(), &*add, out, err);
    auto cliff = build_clifford(*inv);
    if (!cliff.ok()) return report_failure(cliff.error(), &*add, out, err);
    report = route == "gamma" ? enumerate_gamma_functions(*cliff, opt)
                              : enumerate_good_subsemigroups(*cliff, opt);
  } else if (route == "affine") {
    auto mul = table_from(*file, "mul");
    if (!mul.ok()) return report_failure(mul.error(), nullptr, out, err);
    auto inv = von_neumann_inverses(*mul);
    if (!inv.ok()) return report_failure(inv.error(), &*mul, out, err);
    report = enumerate_affine_structures(*inv, opt);
  } else {  // oracle: fixed add when present, else fixed mul
    const bool has_add = file->has("add");
    auto t = table_from(*file, has_add ? "add" : "mul");
    if (!t.ok()) return report_failure(t.error(), nullptr, out, err);
    auto inv = von_neumann_inverses(*t);
    if (!inv.ok()) return report_failure(inv.error(), &*t, out, err);
    report = oracle_enumerate_braces(*inv,
                                     has_add ? OracleSide::second_op_mul
                                             : OracleSide::second_op_add,
                                     opt);
  }
  if (!report.ok()) return report_failure(report.error(), nullptr, out, err);

  if (emit == "json")
    out << report_json(*report);
  else if (emit == "tables")
    out << report_tables(*report);
  else
    out << report_summary(*report);
  err << "stats: " << report->stats.nodes << " nodes, "
      << report->stats.pruned << " pruned, " << report->stats.leaves
      << " leaves, " << report->stats.wall_seconds << "s\n";
  return report->stats.complete ? 0 : 3;
}

int cmd_classify(const std::string& path, std::ostream& out,
                 std::ostream& err) {
  auto file = load_table_file(path);
  if (!file.ok()) return report_failure(file.error(), nullptr, out, err);
  auto add = table_from(*file, "add");
  if (!add.ok()) return report_failure(add.error(), nullptr, out, err);
  auto mul = table_from(*file, "mul");
  if (!mul.ok()) return report_failure(mul.error(), nullptr, out, err);
  auto brace = check_weak_brace(*add, *mul);
  if (!brace.ok()) {
    out << "weak: no" << witness_names(*add, brace.error().witness) << ": "
        << brace.error().str() << '\n';
    return exit_code_for(brace.error());
  }
  out << "weak: yes\n";
  DualCheck dual = is_dual(*brace);
  if (!dual.detail.ok() && dual.dual)
    return report_failure(dual.detail, &*add, out, err);
  out << "dual: " << (dual.dual ? "yes" : "no");
  if (!dual.dual) out << witness_names(*add, dual.detail.witness);
  out << '\n';

  struct Row {
    const char* label;
    ClassifyResult r;
  };
  Row rows[] = {{"symmetric", is_symmetric(*brace)},
                {"lambda-homomorphic", is_lambda_homomorphic(*brace)},
                {"lambda-anti-homomorphic", is_lambda_anti_homomorphic(*brace)}};
  for (const Row& row : rows) {
    out << row.label << ": " << (row.r.holds ? "yes" : "no");
    if (!row.r.holds) out << witness_names(*add, row.r.witness.witness);
    out << '\n';
  }
  // implications: symmetric <=> anti-homomorphic; each class => dual
  for (const Row& row : rows)
    if (!row.r.implication.ok())
      return report_failure(row.r.implication, &*add, out, err);
  const bool sym = rows[0].r.holds, hom = rows[1].r.holds,
             anti = rows[2].r.holds;
  if (sym != anti || ((sym || hom || anti) && !dual.dual)) {
    err << "fail: internal implication violated among classifier flags\n";
    return 4;
  }
  return 0;
}

int cmd_semilattice(const std::string& path, bool compose, bool roundtrip,
                    std::ostream& out, std::ostream& err) {
  auto spec = load_semilattice_spec(path);
  if (!spec.ok()) return report_failure(spec.error(), nullptr, out, err);
  auto composed = compose_semilattice(*spec);
  if (!composed.ok()) return report_failure(composed.error(), nullptr, out, err);
  if (compose) {
    TableFile f;
    f.names = composed->add.base.base.names;
    f.ops["add"] = composed->add.base.base.table;
    f.ops["mul"] = composed->mul.base.table;
    out << emit_table_file(f);
    return 0;
  }
  if (roundtrip) {
    auto decomposed = decompose_semilattice(*composed);
    if (!decomposed.ok())
      return report_failure(decomposed.error(), nullptr, out, err);
    auto recomposed = compose_semilattice(*decomposed);
    if (!recomposed.ok())
      return report_failure(recomposed.error(), nullptr, out, err);
    if (Diag d = check_recomposition(*composed, *recomposed); !d.ok())
      return report_failure(d, nullptr, out, err);
    out << "roundtrip ok: " << composed->n() << " elements, "
        << decomposed->meet.n << " components\n";
    return 0;
  }
  out << "ok: valid strong semilattice spec, composite has "
      << composed->n() << " elements\n";
  return 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"finite inverse semigroups, Clifford semigroups and weak left braces"};
  app.name("semibrace");
  app.require_subcommand(1);

  std::string path, as = "semigroup", route = "gamma", emit = "summary";
  SearchOptions opt;
  bool compose = false, roundtrip = false;

  auto* check = app.add_subcommand("check", "validate a structure");
  check->add_option("file", path)->required();
  check->add_option("--as", as)
      ->check(CLI::IsMember(
          {"semigroup", "inverse", "clifford", "brace", "dual-brace"}))
      ->required();

  auto* enumerate = app.add_subcommand("enumerate", "enumerate structures");
  enumerate->add_option("file", path)->required();
  enumerate->add_option("--route", route)
      ->check(CLI::IsMember({"gamma", "good", "affine", "oracle"}))
      ->required();
  enumerate->add_option("--emit", emit)
      ->check(CLI::IsMember({"summary", "tables", "json"}));
  enumerate->add_option("--budget", opt.budget);
  enumerate->add_option("--jobs", opt.jobs);

  auto* classify = app.add_subcommand("classify", "classify a brace");
  classify->add_option("file", path)->required();

  auto* semilattice =
      app.add_subcommand("semilattice", "strong semilattice operations");
  semilattice->add_option("file", path)->required();
  semilattice->add_flag("--compose", compose);
  semilattice->add_flag("--roundtrip", roundtrip);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {  // --help
      out << app.help();
      return 0;
    }
    err << "usage error: " << e.what() << '\n';
    return 2;
  }

  if (check->parsed()) return cmd_check(path, as, out, err);
  if (enumerate->parsed())
    return cmd_enumerate(path, route, emit, opt, out, err);
  if (classify->parsed()) return cmd_classify(path, out, err);
  return cmd_semilattice(path, compose, roundtrip, out, err);
}

}  // namespace semibrace
