#include "spanfact/config.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "spanfact/errors.hpp"

namespace spanfact {

using nlohmann::json;

OutputFormat parse_format(std::string_view text) {
  if (text == "tsv")
    return OutputFormat::Tsv;
  if (text == "json-lines" || text == "jsonl")
    return OutputFormat::JsonLines;
  throw ParseError("format", std::string(text), "expected 'tsv' or 'json-lines'");
}

std::string_view format_name(OutputFormat f) {
  return f == OutputFormat::Tsv ? "tsv" : "json-lines";
}

namespace {

const json &require(const json &obj, const std::string &field) {
  auto it = obj.find(field);
  if (it == obj.end())
    throw ParseError(field, "", "missing required field");
  return *it;
}

std::vector<std::string> string_list(const json &node, const std::string &field) {
  if (!node.is_array())
    throw ParseError(field, node.dump(), "expected a list of permutation strings");
  std::vector<std::string> out;
  for (std::size_t i = 0; i < node.size(); ++i) {
    if (!node[i].is_string())
      throw ParseError(field + "[" + std::to_string(i) + "]", node[i].dump(),
                       "expected a string");
    out.push_back(node[i].get<std::string>());
  }
  return out;
}

std::vector<Permutation> permutations(const std::vector<std::string> &texts,
                                      const std::string &field, std::size_t degree) {
  std::vector<Permutation> out;
  for (std::size_t i = 0; i < texts.size(); ++i) {
    try {
      out.push_back(parse_permutation(texts[i], degree));
    } catch (const ParseError &e) {
      throw ParseError(field + "[" + std::to_string(i) + "]",
                       e.token().empty() ? texts[i] : e.token(), e.what());
    }
  }
  return out;
}

template <class T> T number(const json &obj, const std::string &field, T fallback) {
  auto it = obj.find(field);
  if (it == obj.end())
    return fallback;
  if (!it->is_number() || (std::is_integral_v<T> && !it->is_number_integer()) ||
      (std::is_unsigned_v<T> && it->is_number_integer() && it->get<long long>() < 0))
    throw ParseError(field, it->dump(), "expected a non-negative number");
  return it->get<T>();
}

bool flag(const json &obj, const std::string &field, bool fallback) {
  auto it = obj.find(field);
  if (it == obj.end())
    return fallback;
  if (!it->is_boolean())
    throw ParseError(field, it->dump(), "expected true or false");
  return it->get<bool>();
}

std::size_t degree_of(const json &doc, const std::vector<std::vector<std::string>> &lists) {
  if (doc.contains("degree"))
    return number<std::size_t>(doc, "degree", 0);
  std::size_t n = 0;
  static const char *fields[] = {"group_generators", "H_generators", "S"};
  for (std::size_t l = 0; l < lists.size(); ++l) {
    for (std::size_t i = 0; i < lists[l].size(); ++i) {
      try {
        if (auto p = max_point_in(lists[l][i]))
          n = std::max<std::size_t>(n, *p + 1);
      } catch (const ParseError &e) {
        throw ParseError(std::string(fields[l]) + "[" + std::to_string(i) + "]",
                         e.token().empty() ? lists[l][i] : e.token(), e.what());
      }
    }
  }
  return n;
}

} // namespace

ExperimentConfig parse_config(const json &doc) {
  if (!doc.is_object() || doc.empty())
    throw ParseError("", doc.dump(), "config must be a non-empty JSON object");

  static const char *known[] = {"name",     "degree",   "group_generators", "H_generators",
                                "S",        "toy",      "analysis",         "budgets",
                                "format"};
  for (const auto &[key, value] : doc.items()) {
    if (std::find(std::begin(known), std::end(known), key) == std::end(known))
      throw ParseError(key, key, "unknown field");
  }

  ExperimentConfig cfg;
  bool has_pres = doc.contains("group_generators") || doc.contains("S") ||
                  doc.contains("H_generators");
  bool has_toy = doc.contains("toy");
  if (has_pres == has_toy)
    throw ParseError(has_toy ? "toy" : "group_generators", "",
                     "exactly one of a presentation or 'toy' must be given");

  if (has_toy) {
    const auto &toy = doc["toy"];
    if (!toy.is_object())
      throw ParseError("toy", toy.dump(), "expected an object {\"m\": <int>}");
    auto m = number<std::size_t>(toy, "m", 0);
    if (m < 3)
      throw ParseError("toy.m", std::to_string(m), "m must be at least 3");
    cfg.toy_m = m;
    cfg.name = "toy:" + std::to_string(m);
  } else {
    auto gens = string_list(require(doc, "group_generators"), "group_generators");
    auto hs = doc.contains("H_generators") ? string_list(doc["H_generators"], "H_generators")
                                           : std::vector<std::string>{};
    auto s = string_list(require(doc, "S"), "S");
    if (s.empty() || s.size() > 2)
      throw ParseError("S", std::to_string(s.size()), "S must have one or two elements");
    PresentationSpec spec;
    spec.degree = degree_of(doc, {gens, hs, s});
    if (spec.degree == 0)
      throw ParseError("group_generators", "", "cannot infer the degree; give 'degree'");
    spec.group_generators = permutations(gens, "group_generators", spec.degree);
    spec.h_generators = permutations(hs, "H_generators", spec.degree);
    spec.s = permutations(s, "S", spec.degree);
    cfg.presentation = std::move(spec);
    cfg.name = "presentation";
  }
  if (doc.contains("name")) {
    if (!doc["name"].is_string())
      throw ParseError("name", doc["name"].dump(), "expected a string");
    cfg.name = doc["name"].get<std::string>();
  }
  if (cfg.presentation)
    cfg.presentation->name = cfg.name;

  if (doc.contains("analysis")) {
    const auto &a = doc["analysis"];
    if (!a.is_object())
      throw ParseError("analysis", a.dump(), "expected an object");
    cfg.analysis.classify = flag(a, "classify", cfg.analysis.classify);
    cfg.analysis.swap = flag(a, "swap", cfg.analysis.swap);
    cfg.analysis.blocks = flag(a, "blocks", cfg.analysis.blocks);
    cfg.analysis.tree_search = flag(a, "tree_search", cfg.analysis.tree_search);
    cfg.analysis.spanning = flag(a, "spanning", cfg.analysis.spanning);
  }
  if (doc.contains("budgets")) {
    const auto &b = doc["budgets"];
    if (!b.is_object())
      throw ParseError("budgets", b.dump(), "expected an object");
    cfg.budgets.max_nodes = number<std::uint64_t>(b, "max_nodes", cfg.budgets.max_nodes);
    if (b.contains("max_seconds"))
      cfg.budgets.max_seconds = number<double>(b, "max_seconds", 0.0);
    cfg.budgets.group_cap = number<std::size_t>(b, "group_cap", cfg.budgets.group_cap);
    cfg.budgets.cycle_cap = number<std::size_t>(b, "cycle_cap", cfg.budgets.cycle_cap);
    cfg.budgets.max_pool = number<std::size_t>(b, "max_pool", cfg.budgets.max_pool);
  }
  if (doc.contains("format")) {
    if (!doc["format"].is_string())
      throw ParseError("format", doc["format"].dump(), "expected a string");
    cfg.format = parse_format(doc["format"].get<std::string>());
  }
  return cfg;
}

ExperimentConfig parse_config_text(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error &e) {
    throw ParseError("", std::to_string(e.byte), std::string("malformed JSON: ") + e.what());
  }
  return parse_config(doc);
}

ExperimentConfig load_config(const std::filesystem::path &path) {
  std::ifstream in(path);
  if (!in)
    throw ParseError("config", path.string(), "cannot open config file");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_config_text(ss.str());
}

nlohmann::json to_json(const ExperimentConfig &cfg) {
  json doc;
  doc["name"] = cfg.name;
  if (cfg.toy_m) {
    doc["toy"] = {{"m", *cfg.toy_m}};
  } else {
    const auto &p = *cfg.presentation;
    doc["degree"] = p.degree;
    auto strs = [](const std::vector<Permutation> &ps) {
      json arr = json::array();
      for (const auto &q : ps)
        arr.push_back(format_cycles(q));
      return arr;
    };
    doc["group_generators"] = strs(p.group_generators);
    doc["H_generators"] = strs(p.h_generators);
    doc["S"] = strs(p.s);
  }
  doc["analysis"] = {{"classify", cfg.analysis.classify},
                     {"swap", cfg.analysis.swap},
                     {"blocks", cfg.analysis.blocks},
                     {"tree_search", cfg.analysis.tree_search},
                     {"spanning", cfg.analysis.spanning}};
  doc["budgets"] = {{"max_nodes", cfg.budgets.max_nodes},
                    {"group_cap", cfg.budgets.group_cap},
                    {"cycle_cap", cfg.budgets.cycle_cap},
                    {"max_pool", cfg.budgets.max_pool}};
  if (cfg.budgets.max_seconds)
    doc["budgets"]["max_seconds"] = *cfg.budgets.max_seconds;
  doc["format"] = std::string(format_name(cfg.format));
  return doc;
}

} // namespace spanfact
