#include <CLI11.hpp>

#include <iostream>
#include <sstream>

#include "spanfact/errors.hpp"
#include "spanfact/pipeline.hpp"

using namespace spanfact;

namespace {

struct Globals {
  std::string config;
  std::string fixture;
  std::string format;
  std::uint64_t seed = 0;
  std::optional<std::uint64_t> max_nodes;
  std::optional<double> max_seconds;
  bool quiet = false;
};

ExperimentConfig load(const Globals &g) {
  if (g.config.empty() == g.fixture.empty())
    throw ParseError("config", "", "give exactly one of --config or --fixture");
  auto cfg = g.config.empty() ? fixture_config(g.fixture) : load_config(g.config);
  if (!g.format.empty())
    cfg.format = parse_format(g.format);
  if (g.max_nodes)
    cfg.budgets.max_nodes = *g.max_nodes;
  if (g.max_seconds)
    cfg.budgets.max_seconds = *g.max_seconds;
  return cfg;
}

void print(const std::vector<ReportTable> &tables, OutputFormat fmt) {
  for (std::size_t i = 0; i < tables.size(); ++i) {
    if (i && fmt == OutputFormat::Tsv)
      std::cout << '\n';
    emit_table(std::cout, tables[i], fmt);
  }
}

std::vector<Word> split_words(const std::string &text) {
  std::vector<Word> out;
  std::string tok;
  std::istringstream in(text);
  while (in >> tok) {
    try {
      out.push_back(parse_word(tok));
    } catch (const ParseError &e) {
      throw ParseError("words", tok, e.what());
    }
  }
  return out;
}

} // namespace

int main(int argc, char **argv) {
  CLI::App app{"Factorizations of vertex-transitive digraphs of out-degree 2"};
  app.set_version_flag("--version", std::string(tool_version()));
  app.require_subcommand(1);

  Globals g;
  app.add_option("--config", g.config, "Experiment config (JSON)");
  app.add_option("--fixture", g.fixture, "Built-in fixture: a5-ex2, a5-ex3, morris, toy:<m>");
  app.add_option("--format", g.format, "Output format: tsv or json-lines");
  app.add_option("--seed", g.seed, "Accepted for reproducible scripts; the tool is deterministic");
  app.add_option("--max-nodes", g.max_nodes, "Tree-search node budget");
  app.add_option("--max-seconds", g.max_seconds, "Tree-search wall-clock budget");
  app.add_flag("--quiet", g.quiet, "Suppress diagnostics on stderr");

  Mask bitmask = 0;
  bool classify_flag = false, swap_flag = false, table_flag = false, all_classes = false;
  std::string method = "addressing";
  std::string words_text;
  std::size_t threads = 0;

  auto *build = app.add_subcommand("build", "Build the digraph and report its structure");
  auto *enumerate = app.add_subcommand("enumerate", "Enumerate all 1-factorizations");
  enumerate->add_flag("--classify", classify_flag, "Classify modulo left multiplications");
  enumerate->add_flag("--swap", swap_flag, "Also identify (F1,F2) with (F2,F1)");
  enumerate->add_flag("--table", table_flag, "Print the cycle-type distribution only");
  auto *blocks = app.add_subcommand("blocks", "Position system, phases and block systems");
  blocks->add_option("--bitmask", bitmask, "Orientation bitmask");
  auto *tree = app.add_subcommand("tree-search", "Maximum relocatable tree");
  tree->add_option("--bitmask", bitmask, "Orientation bitmask");
  tree->add_flag("--all-classes", all_classes, "One search per class representative");
  tree->add_flag("--swap", swap_flag, "Classify with the swap as well");
  tree->add_option("--threads", threads, "Worker threads (0 = hardware)");
  auto *spanning = app.add_subcommand("spanning", "Construct a sharply transitive word set");
  spanning->add_option("--bitmask", bitmask, "Orientation bitmask");
  spanning->add_option("--method", method, "blocks or addressing");
  auto *verify = app.add_subcommand("verify", "Check a word list against a factorization");
  verify->add_option("--bitmask", bitmask, "Orientation bitmask");
  verify->add_option("--words", words_text, "Whitespace-separated words, e.g. \"e 1 2 12\"")
      ->required();
  auto *run = app.add_subcommand("run", "Full pipeline as configured");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp &e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion &e) {
    return app.exit(e);
  } catch (const CLI::ParseError &e) {
    app.exit(e);
    return kExitConfig;
  }

  try {
    auto cfg = load(g);
    auto fmt = cfg.format;
    if (run->parsed()) {
      auto res = run_pipeline(cfg);
      print(res.tables, fmt);
      return res.budget_exhausted ? kExitBudget : kExitOk;
    }

    auto s = open_session(cfg);
    if (build->parsed()) {
      std::vector<ReportTable> out{build_report(s)};
      if (s.instance.coset)
        out.push_back(validation_report(s));
      print(out, fmt);
    } else if (enumerate->parsed()) {
      if (classify_flag)
        classify(s, swap_flag);
      if (table_flag) {
        std::vector<ReportTable> out{distribution_report(s)};
        if (s.classification)
          out.push_back(classification_summary(s));
        print(out, fmt);
      } else if (classify_flag) {
        print({class_report(s), classification_summary(s)}, fmt);
      } else {
        print({enumerate_report(s)}, fmt);
      }
    } else if (blocks->parsed()) {
      print(blocks_report(s, bitmask), fmt);
    } else if (tree->parsed()) {
      TreeSearchOptions opts;
      opts.max_nodes = cfg.budgets.max_nodes;
      if (cfg.budgets.max_seconds)
        opts.max_time = std::chrono::duration<double>(*cfg.budgets.max_seconds);
      std::vector<Mask> masks{bitmask};
      if (all_classes) {
        classify(s, swap_flag || cfg.analysis.swap);
        masks.clear();
        for (const auto &c : s.classification->classes)
          masks.push_back(c.representative);
      }
      auto rep = tree_search_report(s, masks, opts, threads);
      print({rep.table}, fmt);
      if (rep.budget_exhausted) {
        if (!g.quiet)
          std::cerr << "spanfact: search budget exhausted; results are not certified\n";
        return kExitBudget;
      }
    } else if (spanning->parsed()) {
      print({spanning_report(s, bitmask, parse_spanning_method(method))}, fmt);
    } else if (verify->parsed()) {
      print({verify_report(s, bitmask, split_words(words_text))}, fmt);
    }
    return kExitOk;
  } catch (const std::exception &e) {
    if (!g.quiet)
      std::cerr << "spanfact: " << e.what() << '\n';
    return exit_code_for(e);
  }
}
