// Copyright 2026 The ssd Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "ssd/cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "ssd/bounds.hpp"
#include "ssd/constructions.hpp"
#include "ssd/criteria.hpp"
#include "ssd/design.hpp"
#include "ssd/error.hpp"
#include "ssd/oracle.hpp"
#include "ssd/report.hpp"

namespace ssd::cli {
namespace {

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::string item;
  std::istringstream in(text);
  while (std::getline(in, item, sep)) {
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

std::uint64_t parse_unsigned(const std::string& text) {
  std::size_t used = 0;
  unsigned long long v = 0;
  try {
    v = std::stoull(text, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != text.size() || text.empty() || text[0] == '-') {
    throw Error(ErrorCode::kInvalidArgument, "not a number: '" + text + "'");
  }
  return v;
}

std::vector<std::uint32_t> parse_u32_list(const std::string& text) {
  std::vector<std::uint32_t> out;
  for (const auto& item : split(text, ',')) {
    out.push_back(static_cast<std::uint32_t>(parse_unsigned(item)));
  }
  return out;
}

// 1-based column numbers to 0-based indices.
std::vector<std::size_t> parse_columns(const std::string& text) {
  std::vector<std::size_t> out;
  for (std::uint32_t c : parse_u32_list(text)) {
    if (c == 0) throw Error(ErrorCode::kInvalidArgument, "columns are 1-based");
    out.push_back(c - 1);
  }
  return out;
}

// "9:1,0,1" -> {9, x^2 + 1}.
std::map<std::uint32_t, Polynomial> parse_moduli(
    const std::vector<std::string>& specs) {
  std::map<std::uint32_t, Polynomial> out;
  for (const std::string& spec : specs) {
    const auto colon = spec.find(':');
    if (colon == std::string::npos) {
      throw Error(ErrorCode::kInvalidArgument,
                  "modulus must look like ORDER:c0,c1,...");
    }
    out[static_cast<std::uint32_t>(parse_unsigned(spec.substr(0, colon)))] =
        parse_u32_list(spec.substr(colon + 1));
  }
  return out;
}

// "9^99,3^4" or "3,3,3".
std::vector<std::uint32_t> parse_profile(const std::string& text) {
  std::vector<std::uint32_t> out;
  for (const auto& item : split(text, ',')) {
    const auto caret = item.find('^');
    const auto s = static_cast<std::uint32_t>(parse_unsigned(item.substr(0, caret)));
    const std::uint64_t count =
        caret == std::string::npos ? 1 : parse_unsigned(item.substr(caret + 1));
    if (count > Design::kMaxColumns * 1000ull) {
      throw Error(ErrorCode::kTooLarge, "level profile is too long");
    }
    out.insert(out.end(), count, s);
  }
  return out;
}

void write_text(const std::string& path, const std::string& text,
                std::ostream& out) {
  if (path == "-") {
    out << text;
    return;
  }
  std::ofstream file(path);
  if (!file) throw Error(ErrorCode::kInvalidArgument, "cannot write " + path);
  file << text;
}

void emit_design(const std::string& path, const Design& d, std::ostream& out) {
  std::ostringstream text;
  write_design(text, d);
  write_text(path, text.str(), out);
}

std::uint64_t default_budget() {
  if (const char* env = std::getenv("SSD_BUDGET")) {
    return parse_unsigned(env);
  }
  return oracle::SearchOptions{}.budget;
}

struct ConstructArgs {
  std::string theorem;
  std::uint32_t s = 0;
  int n = 2;
  int k = 0;
  std::string branch;
  std::string levels;
  std::string hs;
  std::size_t replaced = 0;
  std::string modulus;
  std::string out = "-";
};

int do_construct(const ConstructArgs& a, std::ostream& out) {
  Recipe r;
  r.theorem = parse_theorem(a.theorem);
  r.s = a.s;
  r.n = r.theorem == Theorem::kExample3 ? 3 : a.n;
  r.k = a.k;
  r.replaced = a.replaced;
  if (!a.modulus.empty()) r.modulus = parse_u32_list(a.modulus);
  const Field field(r.s, r.modulus);
  if (!a.levels.empty()) {
    r.subset = parse_u32_list(a.levels);
    if (r.k == 0) r.k = static_cast<int>(r.subset.size());
  }
  if (!a.branch.empty()) r.branch = parse_label(field, a.branch, r.n);
  for (const auto& text : split(a.hs, ';')) {
    const ColumnLabel h = parse_label(field, text, r.n);
    if (!h.is_linear()) {
      throw Error(ErrorCode::kInvalidArgument, "h must be a linear form");
    }
    r.hs.push_back(h.linear());
  }
  if (r.theorem == Theorem::kThm5 && r.hs.empty() && r.k != 0 && r.k != 2) {
    throw Error(ErrorCode::kInvalidArgument, "Theorem 5 is the k = 2 case");
  }
  const Design d = build(r, field);
  emit_design(a.out, d, out);
  return kExitOk;
}

struct EvaluateArgs {
  std::string file;
  std::string json;
  std::string drop;
  bool allow_unbalanced = false;
  bool quiet = false;
  int jmax = 3;
  double budget = GwlpOptions{}.budget;
  std::vector<std::string> moduli;
};

int do_evaluate(const EvaluateArgs& a, std::ostream& out) {
  Design d = load_design(a.file, a.allow_unbalanced);
  if (!a.drop.empty()) d = d.drop_columns(parse_columns(a.drop));
  std::vector<Field> overrides;
  for (const auto& [order, poly] : parse_moduli(a.moduli)) {
    overrides.emplace_back(order, poly);
  }
  const FieldSet fields(std::move(overrides));
  GwlpOptions gopts;
  gopts.budget = a.budget;
  gopts.fields = &fields;
  const CriteriaReport report = aggregate_stats(d, a.jmax, gopts);
  std::optional<BoundReport> bounds;
  if (d.is_balanced()) bounds = certify(d);
  if (!a.quiet) print_report(out, report, bounds ? &*bounds : nullptr);
  if (!a.json.empty()) {
    const auto j = bounds ? report_json(report, *bounds) : report_json(report);
    write_text(a.json, j.dump(2) + "\n", out);
  }
  return kExitOk;
}

struct BoundArgs {
  std::int64_t runs = 0;
  std::int64_t m = 0;
  std::uint32_t s = 0;
  std::string profile;
  bool json = false;
};

int do_bound(const BoundArgs& a, std::ostream& out) {
  nlohmann::ordered_json j;
  std::vector<std::uint32_t> profile;
  if (!a.profile.empty()) {
    profile = parse_profile(a.profile);
  } else {
    if (a.s == 0 || a.m <= 0) {
      throw Error(ErrorCode::kInvalidArgument, "give --m and --s, or --profile");
    }
    j["theorem1"] = rational_json(std::max(Rational(0), lb_theorem1(a.runs, a.m, a.s)));
    j["theorem1_raw"] = rational_json(lb_theorem1(a.runs, a.m, a.s));
    j["lemma2"] = rational_json(lb_lemma2(a.runs, a.m, a.s));
    j["eta"] = rational_json(eta(a.runs, a.m, a.s));
    profile.assign(static_cast<std::size_t>(a.m), a.s);
  }
  j["theorem10"] = rational_json(lb_theorem10(a.runs, profile));
  const bool two_level =
      std::all_of(profile.begin(), profile.end(), [](auto s) { return s == 2; });
  if (two_level && !profile.empty()) {
    const Es2Bound es2 = lb_es2(a.runs, static_cast<std::int64_t>(profile.size()));
    j["eq1_es2"] = rational_json(es2.value);
  }
  if (a.json) {
    out << j.dump(2) << "\n";
    return kExitOk;
  }
  for (const auto& [key, value] : j.items()) {
    out << key << " = " << to_string(rational_from_json(value)) << "\n";
  }
  return kExitOk;
}

struct BranchArgs {
  std::string file;
  std::size_t column = 0;
  std::string levels;
  std::string out = "-";
};

int do_branch(const BranchArgs& a, std::ostream& out) {
  const Design d = load_design(a.file);
  if (a.column == 0) throw Error(ErrorCode::kInvalidArgument, "columns are 1-based");
  const auto subset = parse_u32_list(a.levels);
  emit_design(a.out, branch_design(d, a.column - 1, subset), out);
  return kExitOk;
}

struct ReplaceArgs {
  std::string file;
  std::string columns;
  std::string table;
  std::string out = "-";
};

int do_replace(const ReplaceArgs& a, std::ostream& out) {
  Design d = load_design(a.file);
  const Design table = load_design(a.table);
  auto cols = parse_columns(a.columns);
  // Replace from the right so earlier indices stay valid.
  std::sort(cols.rbegin(), cols.rend());
  cols.erase(std::unique(cols.begin(), cols.end()), cols.end());
  for (std::size_t c : cols) d = replace_column(d, c, table);
  emit_design(a.out, d, out);
  return kExitOk;
}

struct OracleArgs {
  std::size_t runs = 0;
  std::uint32_t s = 0;
  std::size_t m = 0;
  std::size_t t = 0;
  std::size_t m_lo = 1;
  std::size_t m_hi = 1;
  std::uint64_t budget = 0;
  bool stop_at_bound = false;
  std::string out;
};

int do_min_a2(const OracleArgs& a, std::ostream& out) {
  oracle::SearchOptions opts;
  opts.budget = a.budget;
  if (a.stop_at_bound) {
    opts.stop_at = std::max(
        Rational(0), lb_theorem1(static_cast<std::int64_t>(a.runs),
                                 static_cast<std::int64_t>(a.m), a.s));
  }
  const auto res = oracle::exhaustive_min_a2(a.runs, a.s, a.m, opts);
  out << "min A2 = " << to_string(res.best_a2)
      << (res.exhaustive ? " (proven" : " (best found, search incomplete")
      << (res.stopped_at_bound ? ", reached the Theorem 1 bound" : "") << ", "
      << res.evaluations << " evaluations)\n";
  if (!a.out.empty()) emit_design(a.out, res.certificate, out);
  return kExitOk;
}

int do_periodicity(const OracleArgs& a, std::ostream& out) {
  oracle::SearchOptions opts;
  opts.budget = a.budget;
  const auto rows =
      oracle::periodicity_spot_check(a.runs, a.s, a.t, a.m_lo, a.m_hi, opts);
  for (const auto& row : rows) {
    out << "m = " << row.m << ": a2(m) = " << to_string(row.a2_m)
        << ", a2(m+" << a.t << ") = " << to_string(row.a2_m_plus_t)
        << ", difference " << to_string(row.a2_m_plus_t - row.a2_m)
        << " vs m(s-1) = " << row.m * (a.s - 1) << " -> "
        << (row.holds ? "holds" : "differs")
        << (row.exact ? "" : " (inexact)") << "\n";
  }
  return kExitOk;
}

struct CatalogArgs {
  std::string table;
  bool dual_route = false;
  std::vector<std::string> moduli;
};

int do_verify_catalog(const CatalogArgs& a, std::ostream& out) {
  CatalogOptions opts;
  opts.table_filter = a.table;
  opts.dual_route = a.dual_route;
  opts.moduli = parse_moduli(a.moduli);
  const CatalogReport report = catalog_verify(opts);
  std::size_t passed = 0;
  for (const auto& row : report.rows) {
    if (row.ok) {
      ++passed;
      out << "PASS " << row.id << ": A2 = " << to_string(row.a2)
          << ", spread " << row.coincidence_spread << "\n";
    } else {
      out << "FAIL " << row.id << "\n";
      for (const auto& f : row.failures) out << "     " << f << "\n";
    }
  }
  out << passed << "/" << report.rows.size() << " rows verified\n";
  return report.ok() && !report.rows.empty() ? kExitOk
                                             : kExitVerificationFailed;
}

struct ExportArgs {
  std::string file;
  std::string out = "-";
  std::string drop;
  std::string catalog_dir;
};

std::string file_stem(const CatalogRow& row, std::size_t index) {
  std::string table = row.table;
  table.erase(std::remove(table.begin(), table.end(), ' '), table.end());
  std::transform(table.begin(), table.end(), table.begin(),
                 [](unsigned char c) { return std::tolower(c); });
  return table + "_" + std::to_string(index + 1) + "_N" +
         std::to_string(row.runs) + "_m" + std::to_string(row.columns);
}

int do_export(const ExportArgs& a, std::ostream& out) {
  if (!a.catalog_dir.empty()) {
    std::filesystem::create_directories(a.catalog_dir);
    const auto rows = catalog();
    for (std::size_t i = 0; i < rows.size(); ++i) {
      const auto path = std::filesystem::path(a.catalog_dir) /
                        (file_stem(rows[i], i) + ".ssd");
      save_design(path.string(), build(rows[i].recipe));
      out << path.string() << "  " << rows[i].id() << "\n";
    }
    return kExitOk;
  }
  if (a.file.empty()) {
    throw Error(ErrorCode::kInvalidArgument, "export needs a design file or --catalog");
  }
  Design d = load_design(a.file, true);
  if (!a.drop.empty()) d = d.drop_columns(parse_columns(a.drop));
  emit_design(a.out, d, out);
  return kExitOk;
}

int exit_code_for(const Error& e) {
  switch (e.code()) {
    case ErrorCode::kUnbalancedDesign:
    case ErrorCode::kUnbalancedTable:
      return kExitVerificationFailed;
    default:
      return kExitUsage;
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Multi-level supersaturated designs from polynomial columns",
               "ssd"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all", "Help for every subcommand");

  ConstructArgs construct;
  auto* c = app.add_subcommand("construct", "Build a design from a theorem");
  c->add_option("--theorem", construct.theorem,
                "4..9, example3, s4-dealias, cor2, replace")
      ->required();
  c->add_option("--s", construct.s, "Number of levels (prime power)")->required();
  c->add_option("--n", construct.n, "Number of variables")->capture_default_str();
  c->add_option("--k", construct.k, "Number of h's, fractions or OAs");
  c->add_option("--branch", construct.branch, "Branching column label");
  c->add_option("--levels", construct.levels, "Fraction levels, e.g. 0,1");
  c->add_option("--hs", construct.hs, "Members of H, e.g. 'X1;X2;X1+X2'");
  c->add_option("--replaced", construct.replaced, "Columns to replace");
  c->add_option("--modulus", construct.modulus,
                "Field modulus coefficients, constant term first");
  c->add_option("--out", construct.out, "Output file ('-' for stdout)")
      ->capture_default_str();

  EvaluateArgs evaluate;
  auto* e = app.add_subcommand("evaluate", "Criteria and bounds for a design");
  e->add_option("file", evaluate.file, "Design file")->required();
  e->add_option("--json", evaluate.json, "Write the JSON report here ('-' for stdout)");
  e->add_option("--drop", evaluate.drop, "1-based columns to drop, e.g. 1,5");
  e->add_flag("--allow-unbalanced", evaluate.allow_unbalanced,
              "Accept unbalanced columns (no bounds are reported)");
  e->add_flag("--quiet", evaluate.quiet, "No human-readable summary");
  e->add_option("--jmax", evaluate.jmax, "GWLP terms (0 disables)")
      ->capture_default_str();
  e->add_option("--budget", evaluate.budget, "GWLP character-sum budget")
      ->capture_default_str();
  e->add_option("--modulus", evaluate.moduli, "ORDER:c0,c1,... field override");

  BoundArgs bound;
  auto* b = app.add_subcommand("bound", "Lower bounds on A2");
  b->add_option("--N", bound.runs, "Run size")->required();
  b->add_option("--m", bound.m, "Number of columns");
  b->add_option("--s", bound.s, "Number of levels");
  b->add_option("--profile", bound.profile, "Mixed levels, e.g. 9^99,3^4");
  b->add_flag("--json", bound.json, "JSON output");

  BranchArgs branch;
  auto* br = app.add_subcommand("branch", "Keep fractions of a branching column");
  br->add_option("file", branch.file, "Design file")->required();
  br->add_option("--column", branch.column, "1-based branching column")->required();
  br->add_option("--levels", branch.levels, "Fraction levels, e.g. 0,1")->required();
  br->add_option("--out", branch.out, "Output file")->capture_default_str();

  ReplaceArgs replace;
  auto* rp = app.add_subcommand("replace", "Replace columns by a table");
  rp->add_option("file", replace.file, "Design file")->required();
  rp->add_option("--column", replace.columns, "1-based columns, e.g. 1,2")
      ->required();
  rp->add_option("--table", replace.table, "Replacement table file")->required();
  rp->add_option("--out", replace.out, "Output file")->capture_default_str();

  OracleArgs orc;
  orc.budget = default_budget();
  auto* o = app.add_subcommand("oracle", "Brute-force checks for tiny cases");
  o->require_subcommand(1);
  auto* omin = o->add_subcommand("min-a2", "Minimum A2 by exhaustive search");
  omin->add_option("--N", orc.runs, "Run size")->required();
  omin->add_option("--s", orc.s, "Number of levels")->required();
  omin->add_option("--m", orc.m, "Number of columns")->required();
  omin->add_option("--budget", orc.budget, "Candidate evaluations")
      ->capture_default_str();
  omin->add_flag("--stop-at-bound", orc.stop_at_bound,
                 "Stop once the Theorem 1 bound is reached");
  omin->add_option("--out", orc.out, "Write the certificate design");
  auto* oper = o->add_subcommand("periodicity", "a2(m + t) - a2(m) spot check");
  oper->add_option("--N", orc.runs, "Run size")->required();
  oper->add_option("--s", orc.s, "Number of levels")->required();
  oper->add_option("--t", orc.t, "Period")->required();
  oper->add_option("--m-lo", orc.m_lo, "First m")->capture_default_str();
  oper->add_option("--m-hi", orc.m_hi, "Last m")->capture_default_str();
  oper->add_option("--budget", orc.budget, "Candidate evaluations")
      ->capture_default_str();

  CatalogArgs cat;
  auto* vc = app.add_subcommand("verify-catalog",
                                "Rebuild and check every frequency-table row");
  vc->add_option("--table", cat.table, "Only this table, e.g. 'Table 2'");
  vc->add_flag("--dual-route", cat.dual_route,
               "Also check the character route");
  vc->add_option("--modulus", cat.moduli, "ORDER:c0,c1,... field override");

  ExportArgs exp;
  auto* ex = app.add_subcommand("export", "Rewrite a design or dump the catalog");
  ex->add_option("file", exp.file, "Design file");
  ex->add_option("--out", exp.out, "Output file")->capture_default_str();
  ex->add_option("--drop", exp.drop, "1-based columns to drop");
  ex->add_option("--catalog", exp.catalog_dir,
                 "Write every catalog design into this directory");

  std::vector<std::string> rest(args.size() > 1 ? args.begin() + 1 : args.end(),
                                args.end());
  std::reverse(rest.begin(), rest.end());
  try {
    app.parse(rest);
  } catch (const CLI::ParseError& pe) {
    const int code = app.exit(pe, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (c->parsed()) return do_construct(construct, out);
    if (e->parsed()) return do_evaluate(evaluate, out);
    if (b->parsed()) return do_bound(bound, out);
    if (br->parsed()) return do_branch(branch, out);
    if (rp->parsed()) return do_replace(replace, out);
    if (omin->parsed()) return do_min_a2(orc, out);
    if (oper->parsed()) return do_periodicity(orc, out);
    if (vc->parsed()) return do_verify_catalog(cat, out);
    if (ex->parsed()) return do_export(exp, out);
  } catch (const Error& error) {
    err << "ssd: " << error.what() << "\n";
    return exit_code_for(error);
  } catch (const std::exception& ex_) {
    err << "ssd: " << ex_.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace ssd::cli
