// starpir: command-line front end for building, running and auditing
// star-product PIR schemes.
//
//   starpir rates --series fig-left
//   starpir info --code RM:1,4 --dcode RM:1,4
//   starpir plan --code FIX:C2 --dcode REP:2,11 --out c2.plan
//   starpir retrieve --code RM:1,4 --dcode RM:1,4 --files 3 --want 2 --seed 7
//   starpir audit --dcode RM:1,4 --t 5 --exact
//
// Exit status: 0 on success, 1 on invalid input, 2 when a budget or plan
// size cap is exceeded.

#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "starpir/builders.hpp"
#include "starpir/code_spec.hpp"
#include "starpir/errors.hpp"
#include "starpir/manifest.hpp"
#include "starpir/privacy.hpp"
#include "starpir/protocol.hpp"
#include "starpir/rates.hpp"

namespace {

using namespace starpir;

constexpr const char* kCodeHelp =
    "Code spec: RM:r,m | GRS:q,n,k | REP:q,n | FIX:C1|C2|RM14-G | FILE:path";

struct PlanChoice {
  RetrievalPlan plan;
  std::vector<std::string> log;
};

PlanChoice build_plan(const CodeSpec& c, const CodeSpec& d, const std::string& choice, std::size_t cap) {
  LadderOptions options;
  options.cap = cap;
  if (choice == "auto") {
    if (c.rm && d.rm && c.rm->m == d.rm->m) {
      auto result = plan_rm(c.rm->r, d.rm->r, c.rm->m, options);
      return {std::move(result.plan), std::move(result.log)};
    }
    options.stages = {LadderStage::cyclic, LadderStage::basic};
    auto result = plan_auto(c.code, d.code, options);
    return {std::move(result.plan), std::move(result.log)};
  }
  if (choice == "auto-basic") return {plan_basic(c.code, d.code, kDefaultCodewordBudget, cap), {}};
  if (choice == "auto-symmetric") return {plan_symmetric(c.code, d.code, information_set(c.code), cap), {}};
  if (choice == "auto-cyclic") {
    options.stages = {LadderStage::cyclic};
    auto result = plan_auto(c.code, d.code, options);
    return {std::move(result.plan), std::move(result.log)};
  }
  return {read_manifest_file(choice, c.code, d.code), {}};
}

std::string distance_text(const LinearCode& code) {
  try {
    return std::to_string(min_distance(code));
  } catch (const BudgetExceeded&) {
    return "over budget";
  }
}

void print_rate(std::ostream& out, const Rational& r) { out << to_fraction(r) << " (" << to_decimal(r) << ")"; }

void print_row(std::ostream& out, const std::string& key, const std::string& value) {
  out << std::left << std::setw(18) << key << value << '\n';
}

int cmd_rates(const std::string& series, unsigned r, unsigned m, std::size_t t, const std::string& out_path) {
  std::vector<RateTableRow> rows;
  if (series == "fig-left")
    rows = fig_left_rates();
  else if (series == "fig-right")
    rows = fig_right_rates();
  else if (series == "custom")
    rows = custom_rates(r, m, t);
  else
    throw ValidationError("unknown series '" + series + "'; expected fig-left, fig-right or custom");
  if (out_path.empty()) {
    write_rates_csv(std::cout, rows);
  } else {
    std::ofstream out(out_path);
    if (!out) throw ValidationError("cannot write " + out_path);
    write_rates_csv(out, rows);
  }
  return 0;
}

int cmd_info(const std::string& code, const std::string& dcode, const std::string& choice, std::size_t cap) {
  const CodeSpec c = parse_code_spec(code);
  const CodeSpec d = parse_code_spec(dcode);
  const LinearCode star = star_product(c.code, d.code);
  std::ostringstream line;

  line << "n = " << c.code.length() << ", k = " << c.code.dimension() << ", d = " << distance_text(c.code);
  print_row(std::cout, "storage code", c.label + "  " + line.str());
  line.str("");
  line << "n = " << d.code.length() << ", k = " << d.code.dimension();
  print_row(std::cout, "retrieval code", d.label + "  " + line.str());
  line.str("");
  line << "[" << star.length() << ", " << star.dimension() << ", " << distance_text(star) << "]";
  print_row(std::cout, "star product", line.str());
  print_row(std::cout, "(C*D)^perp dim", std::to_string(star.length() - star.dimension()));

  try {
    print_row(std::cout, "collusion t", std::to_string(collusion_parameter(d.code)));
  } catch (const BudgetExceeded&) {
    print_row(std::cout, "collusion t", "over budget");
  }

  const PlanChoice chosen = build_plan(c, d, choice, cap);
  for (const std::string& failure : chosen.log) print_row(std::cout, "stage failed", failure);
  line.str("");
  line << chosen.plan.strategy() << "  b = " << chosen.plan.b() << ", s = " << chosen.plan.s();
  print_row(std::cout, "plan", line.str());
  line.str("");
  print_rate(line, pir_rate(chosen.plan));
  print_row(std::cout, "PIR rate", line.str());
  return 0;
}

int cmd_plan(const std::string& code, const std::string& dcode, const std::string& choice, std::size_t cap,
             const std::string& out_path) {
  const CodeSpec c = parse_code_spec(code);
  const CodeSpec d = parse_code_spec(dcode);
  const PlanChoice chosen = build_plan(c, d, choice, cap);
  const auto problems = verify_plan(chosen.plan);
  if (!problems.empty()) throw ValidationError("plan failed verification: " + problems.front());
  if (out_path.empty()) {
    write_manifest(std::cout, chosen.plan);
    return 0;
  }
  std::ofstream out(out_path);
  if (!out) throw ValidationError("cannot write " + out_path);
  write_manifest(out, chosen.plan);
  std::cout << chosen.plan.strategy() << " plan b = " << chosen.plan.b() << ", s = " << chosen.plan.s()
            << ", rate " << to_fraction(pir_rate(chosen.plan)) << " written to " << out_path << '\n';
  return 0;
}

int cmd_retrieve(const std::string& code, const std::string& dcode, const std::string& choice, std::size_t cap,
                 std::size_t files, std::size_t want, std::uint64_t seed) {
  const CodeSpec c = parse_code_spec(code);
  const CodeSpec d = parse_code_spec(dcode);
  if (want == 0 || want > files)
    throw ValidationError("--want must lie in 1.." + std::to_string(files));
  const RetrievalPlan plan = build_plan(c, d, choice, cap).plan;

  const SeededRng root(seed);
  SeededRng data_rng = root.split(0);
  const Database db = Database::random(c.code.field(), files, plan.b(), plan.k(), data_rng);
  const StorageSystem storage = StorageSystem::store(db, c.code);
  const RetrievalResult result = retrieve(storage, plan, want - 1, root.split(1));

  std::cout << "file " << want << " of " << files << " (" << result.file.rows() << " x " << result.file.cols()
            << " over " << c.code.field().name() << "):\n";
  for (std::size_t row = 0; row < result.file.rows(); ++row) {
    for (std::size_t col = 0; col < result.file.cols(); ++col) std::cout << (col ? " " : "") << result.file(row, col);
    std::cout << '\n';
  }
  std::cout << "plan: " << plan.strategy() << ", b = " << plan.b() << ", s = " << plan.s() << '\n';
  std::cout << "downloaded: " << result.downloaded << " symbols\n";
  std::cout << "rate: " << to_fraction(result.rate) << '\n';
  std::cout << "matches stored file: " << (result.file == db.file(want - 1) ? "yes" : "no") << '\n';
  return result.file == db.file(want - 1) ? 0 : 1;
}

int cmd_audit(const std::string& dcode, std::size_t t, bool bound_only, const std::string& set_text, bool csv,
              std::uint64_t budget) {
  const CodeSpec d = parse_code_spec(dcode);
  if (!set_text.empty()) {
    const IndexSet set = IndexSet::parse(set_text);
    const bool safe = protects_set(d.code, set);
    if (csv) {
      std::cout << "dcode,set,protected\n\"" << d.label << "\",\"" << set.to_string() << "\"," << (safe ? 1 : 0)
                << '\n';
    } else {
      print_row(std::cout, "retrieval code", d.label);
      print_row(std::cout, "set", "{" + set.to_string() + "}");
      print_row(std::cout, "verdict", safe ? "protected" : "unprotected");
    }
    return 0;
  }

  const CollusionReport report = collusion_report(d.code, t, d.rm, !bound_only, budget);
  if (bound_only && !report.bound)
    throw ValidationError("no closed-form bound: needs an RM retrieval code RM(r,m) with 2^{r+1} <= t <= 2^m");

  if (csv) {
    std::cout << "dcode,n,k,t,total,unprotected,protected,bound,tight\n";
    std::cout << '"' << d.label << "\"," << report.n << ',' << report.dimension << ',' << report.t << ','
              << report.total << ',';
    if (report.unprotected) std::cout << *report.unprotected << ',' << report.total - *report.unprotected;
    else std::cout << ',';
    std::cout << ',';
    if (report.bound) std::cout << report.bound->count << ',' << (report.bound->tight ? 1 : 0);
    else std::cout << ',';
    std::cout << '\n';
    return 0;
  }

  std::ostringstream line;
  line << d.label << "  [" << report.n << ", " << report.dimension << "]";
  print_row(std::cout, "retrieval code", line.str());
  print_row(std::cout, "coalition size", std::to_string(report.t));
  print_row(std::cout, "t-sets", std::to_string(report.total));
  if (report.unprotected) {
    print_row(std::cout, "unprotected", std::to_string(*report.unprotected));
    line.str("");
    line << report.total - *report.unprotected << "/" << report.total << " (" << to_decimal(*report.protected_fraction)
         << ")";
    print_row(std::cout, "protected", line.str());
  }
  if (report.bound) {
    line.str("");
    line << "at most " << report.bound->count << " unprotected, " << (report.bound->tight ? "tight" : "not tight");
    print_row(std::cout, "bound", line.str());
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Star-product private information retrieval: build, run and audit schemes."};
  app.require_subcommand(1);
  app.footer(kCodeHelp);

  std::string series = "fig-left", out_path, code, dcode, choice = "auto", set_text;
  unsigned r = 1, m = 4;
  std::size_t t = 1, files = 1, want = 1, cap = kDefaultPlanCap;
  std::uint64_t seed = 0, budget = kDefaultSubsetBudget;
  bool exact = false, bound = false, csv = false;

  auto* rates = app.add_subcommand("rates", "Rate table as CSV");
  rates->add_option("--series", series, "fig-left, fig-right or custom")->capture_default_str();
  rates->add_option("--r", r, "custom: RM storage order")->capture_default_str();
  rates->add_option("--m", m, "custom: RM number of variables")->capture_default_str();
  rates->add_option("--t", t, "custom: collusion size 2^{r'+1} - 1")->capture_default_str();
  rates->add_option("--out", out_path, "write the CSV to this file");

  const std::string plan_help = "auto, auto-basic, auto-symmetric, auto-cyclic, or a manifest file";
  auto* info = app.add_subcommand("info", "Parameters of a code pair and its plan");
  info->add_option("--code", code, "storage code")->required();
  info->add_option("--dcode", dcode, "retrieval code")->required();
  info->add_option("--plan", choice, plan_help)->capture_default_str();
  info->add_option("--cap", cap, "largest b or s a plan may use")->capture_default_str();

  auto* plan = app.add_subcommand("plan", "Build a plan and write its manifest");
  plan->add_option("--code", code, "storage code")->required();
  plan->add_option("--dcode", dcode, "retrieval code")->required();
  plan->add_option("--plan", choice, plan_help)->capture_default_str();
  plan->add_option("--cap", cap, "largest b or s a plan may use")->capture_default_str();
  plan->add_option("--out", out_path, "manifest file (default: stdout)");

  auto* retrieve_cmd = app.add_subcommand("retrieve", "Store random files and retrieve one privately");
  retrieve_cmd->add_option("--code", code, "storage code")->required();
  retrieve_cmd->add_option("--dcode", dcode, "retrieval code")->required();
  retrieve_cmd->add_option("--plan", choice, plan_help)->capture_default_str();
  retrieve_cmd->add_option("--cap", cap, "largest b or s a plan may use")->capture_default_str();
  retrieve_cmd->add_option("--files", files, "number of files M")->capture_default_str();
  retrieve_cmd->add_option("--want", want, "wanted file, 1-based")->capture_default_str();
  retrieve_cmd->add_option("--seed", seed, "seed for file contents and query randomness")->capture_default_str();

  auto* audit = app.add_subcommand("audit", "Collusion audit of a retrieval code");
  audit->add_option("--dcode", dcode, "retrieval code")->required();
  audit->add_option("--t", t, "coalition size");
  audit->add_option("--set", set_text, "audit one coalition, e.g. 1,2,3");
  auto* exact_flag = audit->add_flag("--exact", exact, "count unprotected t-sets exactly (default)");
  audit->add_flag("--bound", bound, "closed-form bound only (RM codes)")->excludes(exact_flag);
  audit->add_flag("--csv", csv, "CSV instead of aligned text");
  audit->add_option("--budget", budget, "largest number of subsets to visit")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int status = app.exit(e);
    return status == 0 ? 0 : 1;
  }

  try {
    if (*rates) return cmd_rates(series, r, m, t, out_path);
    if (*info) return cmd_info(code, dcode, choice, cap);
    if (*plan) return cmd_plan(code, dcode, choice, cap, out_path);
    if (*retrieve_cmd) return cmd_retrieve(code, dcode, choice, cap, files, want, seed);
    if (*audit) {
      if (set_text.empty() && audit->count("--t") == 0) throw ValidationError("audit needs --t or --set");
      return cmd_audit(dcode, t, bound, set_text, csv, budget);
    }
  } catch (const BudgetExceeded& e) {
    std::cerr << "budget exceeded: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 1;
}
