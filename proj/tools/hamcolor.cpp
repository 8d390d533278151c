// Command-line front end; every subcommand prints one JSON report.

#include <CLI11.hpp>

#include <iostream>
#include <optional>
#include <string>

#include "hamcolor/cli.hpp"

namespace hc = hamcolor;
namespace cli = hamcolor::cli;

int main(int argc, char** argv) {
  CLI::App app{"Hamilton cycle color-bias toolkit"};
  app.require_subcommand(1);
  app.fallthrough();
  bool timing = false;
  std::string out;
  app.add_flag("--timing", timing, "Append wall-clock timing to the report");
  app.add_option("--out", out, "Write the report here instead of stdout");

  // gen
  auto* gen = app.add_subcommand("gen", "Write a construction as .ecg plus partition JSON");
  gen->require_subcommand(1);
  hc::ConstructionSpec spec;
  std::string gen_path;
  auto add_gen = [&](const std::string& name, hc::ConstructionKind kind, bool has_r, bool has_t) {
    auto* sub = gen->add_subcommand(name);
    sub->add_option("--n", spec.n, "Number of vertices")->required();
    if (has_r) sub->add_option("--r", spec.r, "Number of colors")->required();
    if (has_t) sub->add_option("--t", spec.t, "Size of V0")->required();
    sub->add_option("-o,--file", gen_path, "Output .ecg path")->required();
    sub->callback([&spec, kind] {
      spec.kind = kind;
      if (kind == hc::ConstructionKind::Tripartite3) spec.r = 3;
      if (kind == hc::ConstructionKind::Counterexample2) spec.r = 2;
    });
  };
  add_gen("general-r", hc::ConstructionKind::GeneralR, true, false);
  add_gen("tripartite3", hc::ConstructionKind::Tripartite3, false, false);
  add_gen("counterexample2", hc::ConstructionKind::Counterexample2, false, true);

  std::string graph_path;
  std::uint64_t budget = hc::kDefaultNodeBudget;

  auto* verify = app.add_subcommand("verify-balance", "Exact bias spectrum against a bound");
  long long max_bias = 0;
  verify->add_option("graph", graph_path, "Input .ecg")->required();
  verify->add_option("--max-bias-scaled", max_bias, "Bound on max_i |r c_i - n|")->required();
  verify->add_option("--budget", budget, "Search-node budget");

  auto* analyze = app.add_subcommand("analyze", "Strip, classify, recover and certify");
  int m = 1;
  std::optional<int> s;
  analyze->add_option("graph", graph_path, "Input .ecg")->required();
  analyze->add_option("--m", m, "Bias parameter m");
  analyze->add_option("--s", s, "Matching bound (default from the detected mode)");

  auto* search = app.add_subcommand("search", "Sample random colored graphs and record spectra");
  cli::SearchOptions so;
  std::string save;
  search->add_option("--n", so.n)->required();
  search->add_option("--r", so.r)->required();
  search->add_option("--min-degree", so.min_degree)->required();
  search->add_option("--samples", so.samples)->required();
  search->add_option("--seed", so.seed)->required();
  search->add_option("--p", so.edge_probability, "Edge probability before repair");
  search->add_option("--budget", so.node_budget, "Search-node budget per sample");
  search->add_option("--workers", so.workers, "Worker threads");
  search->add_option("--save-extremal", save, "Write the most balanced sample as .ecg");

  auto* amplify = app.add_subcommand("amplify", "Swap L1 for L2 along disjoint bad bowties");
  std::string bowtie_path;
  hc::Color color = 1;
  hc::ExtensionOptions ext;
  amplify->add_option("graph", graph_path, "Input .ecg")->required();
  amplify->add_option("bowties", bowtie_path, "Bowtie list, one 'v1 v2 v3 v4 v5' per line")
      ->required();
  amplify->add_option("--color", color, "Color k")->required();
  amplify->add_option("--seed", ext.seed, "Rotation-extension seed");

  auto* bowties = app.add_subcommand("bowties", "List bowties and the greedy bad packing");
  cli::BowtieListOptions bo;
  std::optional<std::size_t> cap;
  bowties->add_option("graph", graph_path, "Input .ecg")->required();
  bowties->add_flag("--only-bad", bo.only_bad);
  bowties->add_option("--cap", cap);
  bowties->add_flag("--packing", bo.packing);

  CLI11_PARSE(app, argc, argv);

  cli::CommandOutcome outcome;
  if (gen->parsed()) {
    outcome = cli::run_guarded("gen", [&] { return cli::cmd_gen(spec, gen_path); }, timing);
  } else if (verify->parsed()) {
    outcome = cli::run_guarded(
        "verify-balance",
        [&] { return cli::cmd_verify_balance(cli::read_file(graph_path), max_bias, budget); },
        timing);
  } else if (analyze->parsed()) {
    outcome = cli::run_guarded(
        "analyze", [&] { return cli::cmd_analyze(cli::read_file(graph_path), m, s); }, timing);
  } else if (search->parsed()) {
    if (!save.empty()) so.save_extremal = save;
    outcome = cli::run_guarded("search", [&] { return cli::cmd_search(so); }, timing);
  } else if (amplify->parsed()) {
    outcome = cli::run_guarded(
        "amplify",
        [&] {
          return cli::cmd_amplify(cli::read_file(graph_path), cli::read_file(bowtie_path), color,
                                  ext);
        },
        timing);
  } else if (bowties->parsed()) {
    bo.cap = cap;
    outcome = cli::run_guarded(
        "bowties", [&] { return cli::cmd_bowties(cli::read_file(graph_path), bo); }, timing);
  }

  std::string text = cli::serialize(outcome.report);
  if (out.empty()) {
    std::cout << text;
  } else {
    try {
      cli::write_file(out, text);
    } catch (const std::exception& e) {
      std::cerr << e.what() << '\n';
      return cli::kExitError;
    }
  }
  if (outcome.exit_code == cli::kExitError && outcome.report.contains("error")) {
    std::cerr << outcome.report["error"]["type"].get<std::string>() << ": "
              << outcome.report["error"]["message"].get<std::string>() << '\n';
  }
  return outcome.exit_code;
}
