#include "twystoff/cli.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <thread>

#include "twystoff/analysis.hpp"
#include "twystoff/engine.hpp"
#include "twystoff/errors.hpp"
#include "twystoff/infinite.hpp"
#include "twystoff/memo.hpp"
#include "twystoff/solver.hpp"

namespace twystoff {

namespace {

struct UsageError : Error {
  using Error::Error;
};

RuleSet rules_from(const std::string& name) {
  if (auto r = parse_ruleset(name)) return *r;
  throw UsageError("unknown rule set '" + name + "' (standard, frozen or heavy)");
}

Position read_position(const std::string& text, RuleSet rules) {
  const Position raw = parse_position(text);
  const Position pos = normalize(raw, rules);
  // Validates the heavy-handed length restriction.
  legal_moves(pos, rules);
  return pos;
}

void add_rules_option(CLI::App* cmd, std::string& rules) {
  cmd->add_option("--rules", rules, "standard, frozen or heavy")->capture_default_str();
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact solver and verification tool for the stack game Twyst-off", "twystoff"};
  app.require_subcommand(1);

  std::string memo_file;
  app.add_option("--memo", memo_file, "load the memo from FILE if present and save it back afterwards");

  std::string pos_text;
  std::string rules_name = "standard";

  auto* solve = app.add_subcommand("solve", "print P or N");
  solve->add_option("position", pos_text, "e.g. 4,2,2")->required();
  add_rules_option(solve, rules_name);

  auto* grundy = app.add_subcommand("grundy", "print the Grundy number");
  grundy->add_option("position", pos_text)->required();
  add_rules_option(grundy, rules_name);

  auto* opts = app.add_subcommand("options", "list the options, one per line, sorted");
  opts->add_option("position", pos_text)->required();
  add_rules_option(opts, rules_name);

  Stack a_max = 0;
  Stack b_max = 1;
  std::string format = "csv";
  std::string out_file;
  unsigned threads = std::max(1u, std::thread::hardware_concurrency());
  auto* table = app.add_subcommand("table", "emit the f(a,b) table");
  table->add_option("--amax", a_max)->required();
  table->add_option("--bmax", b_max)->required()->check(CLI::PositiveNumber);
  table->add_option("--format", format)->check(CLI::IsMember({"csv", "svg", "txt"}))->capture_default_str();
  table->add_option("--out", out_file, "write to FILE instead of stdout");
  table->add_option("--threads", threads)->check(CLI::PositiveNumber);
  add_rules_option(table, rules_name);

  std::string suite;
  Stack bound = 10;
  auto* verify = app.add_subcommand("verify", "run a verification suite");
  verify->add_option("--suite", suite)->required();
  verify->add_option("--bound", bound)->capture_default_str();
  verify->add_flag_callback("--list", [&] {
    for (auto name : analysis_suite_names()) out << name << '\n';
    for (auto name : infinite_suite_names()) out << name << '\n';
    throw CLI::Success();
  }, "list suite names");

  auto* inf = app.add_subcommand("infinite", "decide a position with infinite stacks");
  inf->add_option("position", pos_text, "e.g. 3,2,inf,1")->required();

  auto* explore = app.add_subcommand("explore", "exploratory searches");
  explore->require_subcommand(1);
  Stack budget = 2;
  std::size_t node_limit = 200000;
  auto* seven = explore->add_subcommand("seven", "bounded search on inf^7");
  seven->add_option("--budget", budget)->capture_default_str();
  seven->add_option("--node-limit", node_limit)->capture_default_str();
  Stack conj_a = 1;
  Stack conj_b = 20;
  Stack conj_c = 40;
  auto* conj2 = explore->add_subcommand("conjecture2", "P completions of (a,b,c,a)");
  conj2->add_option("--a", conj_a)->required();
  conj2->add_option("--bmax", conj_b)->capture_default_str();
  conj2->add_option("--cmax", conj_c)->capture_default_str();

  std::string cache_action;
  std::string cache_file;
  Stack cache_amax = 0;
  Stack cache_bmax = 0;
  auto* cache = app.add_subcommand("cache", "save or load the memo table");
  cache->add_option("action", cache_action)->required()->check(CLI::IsMember({"save", "load"}));
  cache->add_option("file", cache_file)->required();
  cache->add_option("--amax", cache_amax, "save: first solve the f-table up to this a");
  cache->add_option("--bmax", cache_bmax, "save: first solve the f-table up to this b");

  auto* play_cmd = app.add_subcommand("play", "play against the engine");
  play_cmd->add_option("position", pos_text)->required();
  add_rules_option(play_cmd, rules_name);

  std::vector<std::string> argv_storage{"twystoff"};
  argv_storage.insert(argv_storage.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& a : argv_storage) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  auto memo = std::make_shared<MemoTable>();
  try {
    if (!memo_file.empty() && std::filesystem::exists(memo_file)) load_memo(*memo, memo_file);
    const Solver solver(memo);
    int status = kExitOk;

    if (solve->parsed()) {
      const RuleSet rules = rules_from(rules_name);
      out << to_char(solver.outcome(read_position(pos_text, rules), rules)) << '\n';
    } else if (grundy->parsed()) {
      const RuleSet rules = rules_from(rules_name);
      out << solver.grundy(read_position(pos_text, rules), rules) << '\n';
    } else if (opts->parsed()) {
      const RuleSet rules = rules_from(rules_name);
      for (const Position& p : options(read_position(pos_text, rules), rules)) out << p.to_string() << '\n';
    } else if (table->parsed()) {
      const RuleSet rules = rules_from(rules_name);
      const FTable t = build_f_table(solver, a_max, b_max, rules, threads);
      const std::string text = format == "svg" ? to_svg(t) : format == "txt" ? to_text(t) : to_csv(t);
      if (out_file.empty()) {
        out << text;
      } else {
        std::ofstream f(out_file, std::ios::binary);
        if (!(f << text)) throw IoError("cannot write " + out_file);
      }
    } else if (verify->parsed()) {
      std::optional<VerificationReport> report = twystoff::verify(suite, bound, solver);
      if (!report) report = verify_infinite(suite, bound, InfiniteSolver(solver));
      if (!report) throw UsageError("unknown suite '" + suite + "' (see verify --list)");
      out << report->to_string();
      status = report->passed() || report->conjecture ? kExitOk : kExitFailed;
    } else if (inf->parsed()) {
      const ExtPosition pos = ext_normalize(parse_ext_position(pos_text));
      const DecisionResult d = InfiniteSolver(solver).decide(pos);
      out << d.to_string() << '\n';
      status = d.kind == DecisionResult::Kind::Undecided ? kExitUndecided : kExitOk;
    } else if (seven->parsed()) {
      out << explore_seven(InfiniteSolver(solver), budget, node_limit).to_string();
    } else if (conj2->parsed()) {
      out << explore_conjecture2(solver, conj_a, conj_b, conj_c).to_string();
    } else if (cache->parsed()) {
      if (cache_action == "save") {
        if (cache_bmax > 0) build_f_table(solver, cache_amax, cache_bmax, RuleSet::Standard, threads);
        save_memo(*memo, cache_file);
        out << "saved " << memo->size() << " records to " << cache_file << '\n';
      } else {
        MemoTable loaded;
        load_memo(loaded, cache_file);
        load_memo(*memo, cache_file);
        out << "loaded " << loaded.size() << " records from " << cache_file << '\n';
      }
    } else if (play_cmd->parsed()) {
      const RuleSet rules = rules_from(rules_name);
      play(solver, read_position(pos_text, rules), rules, in, out);
    }

    if (!memo_file.empty()) save_memo(*memo, memo_file);
    return status;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const HeavyHandedUndefined& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitFailed;
  }
}

}  // namespace twystoff
