#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "spanfact/config.hpp"
#include "spanfact/digraph.hpp"

namespace spanfact {

/// a5-ex2, a5-ex3, morris, toy:<m>. Throws ParseError for unknown names.
ExperimentConfig fixture_config(std::string_view name);
std::vector<std::string> fixture_names();

/// The digraph of an experiment together with the symmetry used to classify it.
struct Instance {
  std::string name;
  std::optional<CosetDigraph> coset;
  std::optional<ToyDigraph> toy;
  std::vector<Permutation> automorphisms;

  const Digraph2 &graph() const { return coset ? coset->graph : toy->graph; }
};

Instance build_instance(const ExperimentConfig &cfg);

} // namespace spanfact
