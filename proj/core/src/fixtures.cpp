#include "spanfact/fixtures.hpp"

#include <charconv>
#include <memory>

#include "spanfact/errors.hpp"

namespace spanfact {

namespace {

ExperimentConfig a5_fixture(std::string name, std::string_view h_text) {
  auto s = parse_permutation("(0 1 2 3 4)", 5);
  auto h = parse_permutation(h_text, 5);
  PresentationSpec spec;
  spec.name = name;
  spec.degree = 5;
  spec.group_generators = {s, parse_permutation("(0 1 2)", 5)};
  spec.h_generators = {h};
  spec.s = {s, compose(h, s)};
  ExperimentConfig cfg;
  cfg.name = std::move(name);
  cfg.presentation = std::move(spec);
  return cfg;
}

// C2^3 ⋊ C3 on three 2-point blocks; b rotates the blocks.
ExperimentConfig morris_fixture() {
  auto a1 = parse_permutation("(0 1)", 6);
  auto a2 = parse_permutation("(2 3)", 6);
  auto a3 = parse_permutation("(4 5)", 6);
  auto b = parse_permutation("(0 2 4)(1 3 5)", 6);
  PresentationSpec spec;
  spec.name = "morris";
  spec.degree = 6;
  spec.group_generators = {a1, a2, a3, b};
  spec.h_generators = {a2, a3};
  spec.s = {b, compose(a2, b)};
  ExperimentConfig cfg;
  cfg.name = "morris";
  cfg.presentation = std::move(spec);
  return cfg;
}

} // namespace

ExperimentConfig fixture_config(std::string_view name) {
  if (name == "a5-ex2")
    return a5_fixture("a5-ex2", "(0 2)(1 3)");
  if (name == "a5-ex3")
    return a5_fixture("a5-ex3", "(0 1)(2 3)");
  if (name == "morris")
    return morris_fixture();
  if (name.starts_with("toy:")) {
    auto digits = name.substr(4);
    std::size_t m = 0;
    auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), m);
    if (ec != std::errc{} || ptr != digits.data() + digits.size() || m < 3)
      throw ParseError("fixture", std::string(name), "toy fixture needs an integer m >= 3");
    ExperimentConfig cfg;
    cfg.name = std::string(name);
    cfg.toy_m = m;
    return cfg;
  }
  throw ParseError("fixture", std::string(name),
                   "unknown fixture (a5-ex2, a5-ex3, morris, toy:<m>)");
}

std::vector<std::string> fixture_names() { return {"a5-ex2", "a5-ex3", "morris", "toy:3"}; }

Instance build_instance(const ExperimentConfig &cfg) {
  Instance inst;
  inst.name = cfg.name;
  if (cfg.toy_m) {
    inst.toy = build_toy(*cfg.toy_m);
    auto m = *cfg.toy_m;
    std::vector<Point> flip(2 * m);
    for (std::size_t v = 0; v < 2 * m; ++v)
      flip[v] = static_cast<Point>((v + m) % (2 * m));
    inst.automorphisms = {inst.toy->canonical.f1, Permutation(std::move(flip))};
    return inst;
  }
  const auto &spec = *cfg.presentation;
  auto group = std::make_shared<const FiniteGroup>(
      enumerate_group(spec.group_generators, spec.degree, cfg.budgets.group_cap));
  auto p = make_presentation(spec.name, group, spec.h_generators, spec.s);
  inst.coset = build_coset_digraph(p);
  inst.automorphisms = inst.coset->left_multiplications();
  return inst;
}

} // namespace spanfact
