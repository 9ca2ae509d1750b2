#include "spanfact/pipeline.hpp"

#include <map>

#include "spanfact/errors.hpp"

namespace spanfact {

using nlohmann::json;

int exit_code_for(const std::exception &e) noexcept {
  if (dynamic_cast<const ParseError *>(&e))
    return kExitConfig;
  if (dynamic_cast<const PreconditionError *>(&e))
    return kExitPrecondition;
  if (dynamic_cast<const CapExceededError *>(&e))
    return kExitBudget;
  return kExitInternal;
}

const Factorization &Session::factorization(Mask mask) const {
  if (mask >= family.members.size())
    throw PreconditionError("bitmask " + std::to_string(mask) + " out of range for r = " +
                            std::to_string(family.r()));
  return family.members[mask];
}

Session open_session(const ExperimentConfig &cfg) {
  auto inst = build_instance(cfg);
  auto family = enumerate_factorizations(inst.graph(), cfg.budgets.cycle_cap);
  return {cfg, std::move(inst), std::move(family), std::nullopt};
}

void classify(Session &s, bool allow_swap) {
  s.classification =
      classify_factorizations(s.instance.graph(), s.family, s.instance.automorphisms, allow_swap);
}

namespace {

json strings(const std::vector<std::string> &v) { return json(v); }

json word_list(const std::vector<Word> &words) {
  std::vector<std::string> out;
  for (const auto &w : words)
    out.push_back(format_word(w));
  return strings(out);
}

std::string mask_bits(Mask mask, std::size_t r) {
  std::string s(r, '0');
  for (std::size_t c = 0; c < r; ++c)
    if ((mask >> c) & 1u)
      s[r - 1 - c] = '1';
  return s;
}

const Classification &require_classes(const Session &s) {
  if (!s.classification)
    throw PreconditionError("classification was not computed");
  return *s.classification;
}

} // namespace

ReportTable build_report(const Session &s) {
  ReportTable t{"build", {"name", "n", "edges", "strongly_connected", "r", "factorizations"}, {}};
  const auto &d = s.instance.graph();
  std::vector<std::string> edges;
  for (Vertex v = 0; v < d.size(); ++v)
    for (auto w : d.out(v))
      edges.push_back(std::to_string(v) + ">" + std::to_string(w));
  t.add({s.instance.name, d.size(), strings(edges), d.strongly_connected(), s.family.r(),
         s.family.members.size()});
  return t;
}

ReportTable validation_report(const Session &s) {
  ReportTable t{"validation", {"condition", "statement", "passed", "detail"}, {}};
  if (!s.instance.coset)
    return t;
  auto rep = validate_presentation(s.instance.coset->presentation);
  for (const auto &c : rep.conditions)
    t.add({c.id, c.statement, c.passed, c.detail});
  return t;
}

ReportTable enumerate_report(const Session &s) {
  ReportTable t{"factorization", {"bitmask", "orientation", "f1_type", "f2_type", "class"}, {}};
  for (const auto &f : s.family.members) {
    json cls = nullptr;
    if (s.classification)
      cls = s.classification->class_of[f.orientation];
    t.add({f.orientation, mask_bits(f.orientation, s.family.r()), cycle_type(f.f1).str(),
           cycle_type(f.f2).str(), cls});
  }
  return t;
}

ReportTable class_report(const Session &s) {
  const auto &c = require_classes(s);
  ReportTable t{"class", {"class", "representative", "size", "f1_type", "f2_type"}, {}};
  for (const auto &cls : c.classes)
    t.add({cls.id, cls.representative, cls.members.size(), cls.f1_type.str(), cls.f2_type.str()});
  return t;
}

ReportTable distribution_report(const Session &s) {
  // Keyed by the unordered type pair so swapped classes share a row.
  std::map<std::pair<CycleType, CycleType>, std::pair<std::size_t, std::size_t>> rows;
  auto key = [](CycleType a, CycleType b) {
    if (b < a)
      std::swap(a, b);
    return std::pair{a, b};
  };
  if (s.classification) {
    for (const auto &cls : s.classification->classes) {
      auto &row = rows[key(cls.f1_type, cls.f2_type)];
      ++row.first;
      row.second += cls.members.size();
    }
  } else {
    for (const auto &f : s.family.members)
      ++rows[key(cycle_type(f.f1), cycle_type(f.f2))].second;
  }
  ReportTable t{"distribution", {"type_a", "type_b", "classes", "factorizations"}, {}};
  for (const auto &[k, v] : rows)
    t.add({k.first.str(), k.second.str(), s.classification ? json(v.first) : json(nullptr),
           v.second});
  return t;
}

ReportTable classification_summary(const Session &s) {
  const auto &c = require_classes(s);
  std::size_t total = 0;
  for (const auto &cls : c.classes)
    total += cls.members.size();
  ReportTable t{"classification",
                {"name", "r", "factorizations", "classes", "class_sizes_sum", "consistent"},
                {}};
  t.add({s.instance.name, s.family.r(), s.family.members.size(), c.classes.size(), total,
         total == (std::size_t{1} << s.family.r())});
  return t;
}

// ---------------------------------------------------------------------------

namespace {

json block_row(const std::string &name, const BlockSystem &bs, const Factorization &f) {
  json tau = nullptr, der = nullptr;
  bool inv = is_invariant(bs, f);
  if (inv) {
    auto rel = relative_block_permutation(f, bs);
    tau = format_cycles(rel.tau);
    der = rel.derangement;
  }
  json size = bs.size() == 0 ? json(0)
              : bs.uniform() ? json(bs.blocks().front().size()) : json("mixed");
  return json::array({name, bs.size(), size, bs.covers_all(), inv, tau, der});
}

} // namespace

std::vector<ReportTable> blocks_report(const Session &s, Mask mask) {
  const auto &f = s.factorization(mask);
  auto ps = position_system(f);
  auto offsets = phase_offsets(f, ps);
  auto laws = check_phase_laws(f, ps);
  auto table = atoms(f, ps);
  auto pi = difference_class_orbits(f, ps);
  auto refs = invariant_refinements(f, ps, pi);

  json delta = json::array();
  for (const auto &o : offsets)
    delta.push_back(o.size() == 1 ? json(o.front()) : json(o));
  json rd = json::array();
  for (std::size_t d = 0; d < ps.m; ++d)
    rd.push_back(table.at(0, d).size());
  std::size_t invariant = 0;
  for (const auto &r : refs)
    invariant += r.c_invariant;

  ReportTable summary{"blocks",
                      {"bitmask", "m", "r", "phases_constant", "delta", "r_d", "atom_laws", "pi",
                       "refinements", "c_invariant_refinements", "detail"},
                      {}};
  summary.add({mask, ps.m, ps.r, laws.phases_constant, delta, rd, laws.ok(), json(pi),
               refs.size(), invariant, laws.detail});

  ReportTable systems{"block_system",
                      {"system", "blocks", "block_size", "covers_all", "c_invariant", "tau",
                       "derangement"},
                      {}};
  auto push = [&](const json &row) {
    systems.add(std::vector<json>(row.begin(), row.end()));
  };
  push(block_row("position", position_blocks(ps), f));
  push(block_row("x-cycles", cycle_blocks(ps), f));
  for (std::size_t i = 0; i < refs.size(); ++i) {
    std::string name = "U=";
    for (std::size_t k = 0; k < refs[i].classes.size(); ++k)
      name += (k ? "," : "{") + std::to_string(refs[i].classes[k]);
    push(block_row(name + "}", refs[i].system, f));
  }
  return {summary, systems};
}

TreeSearchReport tree_search_report(const Session &s, const std::vector<Mask> &masks,
                                    const TreeSearchOptions &opts, std::size_t threads) {
  auto results = parallel_map(
      masks.size(),
      [&](std::size_t i) { return max_relocatable_tree(s.factorization(masks[i]), opts); },
      threads);
  TreeSearchReport rep{{"tree_search",
                        {"class", "bitmask", "f1_type", "f2_type", "max_size", "certified",
                         "budget_exhausted", "nodes", "witness"},
                        {}},
                       false};
  for (std::size_t i = 0; i < masks.size(); ++i) {
    const auto &f = s.factorization(masks[i]);
    json cls = s.classification ? json(s.classification->class_of[masks[i]]) : json(nullptr);
    const auto &res = results[i];
    rep.budget_exhausted = rep.budget_exhausted || res.budget_exhausted;
    rep.table.add({cls, masks[i], cycle_type(f.f1).str(), cycle_type(f.f2).str(), res.max_size,
                   res.certified, res.budget_exhausted, res.nodes,
                   word_list(res.tree.sorted_words())});
  }
  return rep;
}

SpanningMethod parse_spanning_method(std::string_view text) {
  if (text == "blocks")
    return SpanningMethod::Blocks;
  if (text == "addressing")
    return SpanningMethod::Addressing;
  throw ParseError("method", std::string(text), "expected 'blocks' or 'addressing'");
}

ReportTable spanning_report(const Session &s, Mask mask, SpanningMethod method) {
  const auto &f = s.factorization(mask);
  auto ps = position_system(f);
  ReportTable t{"spanning",
                {"method", "bitmask", "size", "constructed", "separated", "contains_generators",
                 "sharply_transitive", "reason", "words"},
                {}};
  const auto &b = s.config.budgets;
  if (method == SpanningMethod::Blocks) {
    BlockConstructionOptions opts;
    opts.max_pool = b.max_pool;
    auto res = block_construction(f, ps, position_blocks(ps), opts);
    json verdict = nullptr;
    std::string reason = res.failure;
    if (res.success) {
      auto v = verify_sharply_transitive(res.words, f);
      verdict = v.passed;
      reason = v.reason;
    }
    bool gens = res.words.contains(Word::empty()) && res.words.contains(Word::of({1})) &&
                res.words.contains(Word::of({2}));
    t.add({"blocks", mask, res.words.size(), res.success, nullptr, gens, verdict, reason,
           word_list(res.words.words())});
    return t;
  }

  AddressingOptions opts;
  opts.max_pool = b.max_pool;
  auto res = phase_addressing(f, ps, opts);
  auto spliced = splice_generators(res.words, f);
  auto v = verify_sharply_transitive(spliced, f);
  bool gens = spliced.contains(Word::empty()) && spliced.contains(Word::of({1})) &&
              spliced.contains(Word::of({2}));
  t.add({"addressing", mask, spliced.size(), true, res.separated, gens, v.passed, v.reason,
         word_list(spliced.words())});
  return t;
}

ReportTable verify_report(const Session &s, Mask mask, const std::vector<Word> &words) {
  const auto &f = s.factorization(mask);
  WordSet ws(words, f);
  auto sharp = verify_sharply_transitive(ws, f);
  auto tree = check_relocatable_tree(words, f);
  ReportTable t{"verify",
                {"bitmask", "size", "n", "sharply_transitive", "sharp_reason", "relocatable_tree",
                 "tree_reason"},
                {}};
  t.add({mask, ws.size(), f.size(), sharp.passed, sharp.reason, tree.ok, tree.reason});
  return t;
}

PipelineResult run_pipeline(const ExperimentConfig &cfg) {
  auto s = open_session(cfg);
  PipelineResult out;
  out.tables.push_back(build_report(s));
  if (s.instance.coset)
    out.tables.push_back(validation_report(s));
  if (cfg.analysis.classify)
    classify(s, cfg.analysis.swap);
  out.tables.push_back(enumerate_report(s));
  if (s.classification) {
    out.tables.push_back(class_report(s));
    out.tables.push_back(classification_summary(s));
  }
  out.tables.push_back(distribution_report(s));

  std::vector<Mask> targets;
  if (s.classification) {
    for (const auto &c : s.classification->classes)
      targets.push_back(c.representative);
  } else {
    targets.push_back(0);
  }

  if (cfg.analysis.blocks) {
    for (auto &t : blocks_report(s, 0))
      out.tables.push_back(std::move(t));
  }
  if (cfg.analysis.tree_search) {
    TreeSearchOptions opts;
    opts.max_nodes = cfg.budgets.max_nodes;
    if (cfg.budgets.max_seconds)
      opts.max_time = std::chrono::duration<double>(*cfg.budgets.max_seconds);
    auto rep = tree_search_report(s, targets, opts);
    out.budget_exhausted = rep.budget_exhausted;
    out.tables.push_back(std::move(rep.table));
  }
  if (cfg.analysis.spanning)
    out.tables.push_back(spanning_report(s, 0, SpanningMethod::Addressing));
  return out;
}

} // namespace spanfact
