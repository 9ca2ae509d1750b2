#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "spanfact/group.hpp"
#include "spanfact/perm.hpp"

namespace spanfact {

struct PresentationSpec {
  std::string name;
  std::size_t degree = 0;
  std::vector<Permutation> group_generators;
  std::vector<Permutation> h_generators;
  std::vector<Permutation> s;
};

struct AnalysisToggles {
  bool classify = true;
  bool swap = true;
  bool blocks = false;
  bool tree_search = false;
  bool spanning = false;
};

struct Budgets {
  std::uint64_t max_nodes = 100'000'000;
  std::optional<double> max_seconds;
  std::size_t group_cap = kDefaultGroupCap;
  std::size_t cycle_cap = 24;
  std::size_t max_pool = 50'000;
};

enum class OutputFormat { Tsv, JsonLines };

OutputFormat parse_format(std::string_view text);
std::string_view format_name(OutputFormat f);

/// Exactly one of `presentation` and `toy_m` is set.
struct ExperimentConfig {
  std::string name;
  std::optional<PresentationSpec> presentation;
  std::optional<std::size_t> toy_m;
  AnalysisToggles analysis;
  Budgets budgets;
  OutputFormat format = OutputFormat::Tsv;
};

/// Throws ParseError citing the offending field and token.
ExperimentConfig parse_config(const nlohmann::json &doc);
ExperimentConfig parse_config_text(std::string_view text);
ExperimentConfig load_config(const std::filesystem::path &path);

nlohmann::json to_json(const ExperimentConfig &cfg);

} // namespace spanfact
