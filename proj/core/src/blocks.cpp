#include "spanfact/blocks.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "spanfact/errors.hpp"
#include "spanfact/spanning.hpp"

namespace spanfact {

PositionSystem position_system(const Factorization &f) {
  PositionSystem ps;
  ps.x = f.x();
  ps.cycles = orbits(ps.x);
  ps.r = ps.cycles.size();
  ps.m = ps.r ? ps.cycles.front().size() : 0;
  for (const auto &c : ps.cycles) {
    if (c.size() != ps.m)
      throw UniformityError("x-cycles have lengths " + cycle_type(ps.x).str() +
                            "; a position system needs equal lengths");
  }
  auto n = f.size();
  ps.cycle_of.assign(n, 0);
  ps.position_of.assign(n, 0);
  ps.blocks.assign(ps.m, {});
  for (std::size_t i = 0; i < ps.r; ++i) {
    for (std::size_t j = 0; j < ps.m; ++j) {
      auto v = ps.cycles[i][j];
      ps.cycle_of[v] = i;
      ps.position_of[v] = j;
      ps.blocks[j].push_back(v);
    }
  }
  return ps;
}

std::vector<std::size_t> tied_index(const Factorization &f, const PositionSystem &ps) {
  std::vector<std::size_t> tied(f.size());
  for (Vertex v = 0; v < f.size(); ++v)
    tied[f.f1(v)] = ps.position_of[v];
  return tied;
}

std::vector<std::vector<std::size_t>> phase_offsets(const Factorization &f,
                                                    const PositionSystem &ps) {
  auto tied = tied_index(f, ps);
  std::vector<std::vector<std::size_t>> out(ps.r);
  for (std::size_t i = 0; i < ps.r; ++i) {
    std::set<std::size_t> seen;
    for (std::size_t j = 0; j < ps.m; ++j)
      seen.insert((tied[ps.cycles[i][j]] + ps.m - j) % ps.m);
    out[i].assign(seen.begin(), seen.end());
  }
  return out;
}

namespace {

std::string list_str(const std::vector<std::size_t> &v) {
  std::string s = "{";
  for (std::size_t i = 0; i < v.size(); ++i)
    s += (i ? "," : "") + std::to_string(v[i]);
  return s + "}";
}

} // namespace

PhaseProfile phase_profile(const Factorization &f, const PositionSystem &ps) {
  auto offsets = phase_offsets(f, ps);
  PhaseProfile pp;
  pp.phase_counts.assign(ps.m, 0);
  for (std::size_t i = 0; i < ps.r; ++i) {
    if (offsets[i].size() != 1)
      throw InconsistencyError("phase of x-cycle " + std::to_string(i) +
                               " is not constant: offsets " + list_str(offsets[i]));
    pp.delta.push_back(offsets[i][0]);
    ++pp.phase_counts[offsets[i][0]];
  }
  for (std::size_t j = 0; j < ps.m; ++j) {
    auto &tb = pp.tied_blocks.emplace_back();
    for (auto v : ps.blocks[j])
      tb.push_back(f.f1(v));
    std::sort(tb.begin(), tb.end());
  }
  return pp;
}

AtomTable atoms(const Factorization &f, const PositionSystem &ps) {
  auto tied = tied_index(f, ps);
  AtomTable table;
  table.m = ps.m;
  table.cells.assign(ps.m * ps.m, {});
  for (Vertex v = 0; v < f.size(); ++v)
    table.cells[ps.position_of[v] * ps.m + tied[v]].push_back(v);
  return table;
}

PhaseLawReport check_phase_laws(const Factorization &f, const PositionSystem &ps) {
  PhaseLawReport rep;
  auto offsets = phase_offsets(f, ps);
  for (std::size_t i = 0; i < ps.r; ++i) {
    if (offsets[i].size() != 1) {
      rep.detail = "x-cycle " + std::to_string(i) + " has offsets " + list_str(offsets[i]);
      return rep;
    }
  }
  rep.phases_constant = true;
  auto pp = phase_profile(f, ps);
  rep.counts_sum_to_r =
      std::accumulate(pp.phase_counts.begin(), pp.phase_counts.end(), std::size_t{0}) == ps.r;
  auto table = atoms(f, ps);
  rep.atom_sizes_match = true;
  for (std::size_t j = 0; j < ps.m && rep.atom_sizes_match; ++j) {
    for (std::size_t d = 0; d < ps.m; ++d) {
      auto size = table.at(j, (j + d) % ps.m).size();
      if (size != pp.phase_counts[d]) {
        rep.atom_sizes_match = false;
        rep.detail = "|A_{" + std::to_string(j) + "," + std::to_string((j + d) % ps.m) +
                     "}| = " + std::to_string(size) + " but r_" + std::to_string(d) + " = " +
                     std::to_string(pp.phase_counts[d]);
        break;
      }
    }
  }
  if (!rep.counts_sum_to_r && rep.detail.empty())
    rep.detail = "phase counts do not sum to r";
  return rep;
}

// ---------------------------------------------------------------------------

BlockSystem::BlockSystem(std::size_t n, std::vector<std::vector<Vertex>> blocks)
    : n_(n), blocks_(std::move(blocks)) {
  constexpr auto none = static_cast<std::size_t>(-1);
  block_of_.assign(n_, none);
  for (std::size_t b = 0; b < blocks_.size(); ++b) {
    auto &blk = blocks_[b];
    if (blk.empty())
      throw PreconditionError("block " + std::to_string(b) + " is empty");
    std::sort(blk.begin(), blk.end());
    for (auto v : blk) {
      if (v >= n_)
        throw PreconditionError("block vertex " + std::to_string(v) + " out of range");
      if (block_of_[v] != none)
        throw PreconditionError("vertex " + std::to_string(v) + " lies in two blocks");
      block_of_[v] = b;
    }
  }
}

std::optional<std::size_t> BlockSystem::block_of(Vertex v) const {
  auto b = block_of_.at(v);
  if (b == static_cast<std::size_t>(-1))
    return std::nullopt;
  return b;
}

bool BlockSystem::covers_all() const noexcept {
  return std::none_of(block_of_.begin(), block_of_.end(),
                      [](std::size_t b) { return b == static_cast<std::size_t>(-1); });
}

bool BlockSystem::uniform() const noexcept {
  return std::all_of(blocks_.begin(), blocks_.end(),
                     [&](const auto &b) { return b.size() == blocks_.front().size(); });
}

BlockSystem position_blocks(const PositionSystem &ps) {
  return BlockSystem(ps.x.size(), ps.blocks);
}

BlockSystem cycle_blocks(const PositionSystem &ps) {
  return BlockSystem(ps.x.size(), ps.cycles);
}

namespace {

std::optional<Permutation> try_block_action(const Permutation &g, const BlockSystem &bs) {
  std::vector<Point> images(bs.size());
  std::vector<bool> hit(bs.size(), false);
  for (std::size_t b = 0; b < bs.size(); ++b) {
    const auto &blk = bs.blocks()[b];
    auto target = bs.block_of(g(blk.front()));
    if (!target || bs.blocks()[*target].size() != blk.size() || hit[*target])
      return std::nullopt;
    for (auto v : blk)
      if (bs.block_of(g(v)) != target)
        return std::nullopt;
    hit[*target] = true;
    images[b] = static_cast<Point>(*target);
  }
  return Permutation(std::move(images));
}

} // namespace

bool is_invariant(const BlockSystem &bs, const Permutation &g) {
  return try_block_action(g, bs).has_value();
}

bool is_invariant(const BlockSystem &bs, const Factorization &f) {
  return is_invariant(bs, f.f1) && is_invariant(bs, f.f2);
}

Permutation block_action(const Permutation &g, const BlockSystem &bs) {
  if (g.size() != bs.vertex_count())
    throw SizeMismatchError("block_action: permutation degree differs from the block system");
  auto sigma = try_block_action(g, bs);
  if (!sigma)
    throw NonInvarianceError(format_cycles(g) + " does not permute the blocks");
  return *sigma;
}

RelativeBlockPermutation relative_block_permutation(const Factorization &f,
                                                    const BlockSystem &bs) {
  auto s1 = block_action(f.f1, bs);
  auto s2 = block_action(f.f2, bs);
  auto tau = compose(inverse(s1), s2);
  bool der = is_derangement(tau);
  return {std::move(tau), der};
}

std::vector<std::vector<std::size_t>> difference_class_orbits(const Factorization &f,
                                                              const PositionSystem &ps) {
  auto m = ps.m;
  auto tied = tied_index(f, ps);
  std::vector<std::size_t> parent(m);
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  auto find = [&](std::size_t a) {
    while (parent[a] != a)
      a = parent[a] = parent[parent[a]];
    return a;
  };
  auto unite = [&](std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a != b)
      parent[std::max(a, b)] = std::min(a, b);
  };
  auto cls = [&](Vertex v) { return (tied[v] + m - ps.position_of[v]) % m; };
  for (Vertex v = 0; v < f.size(); ++v) {
    unite(cls(v), cls(f.f1(v)));
    unite(cls(v), cls(f.f2(v)));
    unite(cls(v), cls(ps.x(v)));
  }
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> slot(m, static_cast<std::size_t>(-1));
  for (std::size_t d = 0; d < m; ++d) {
    auto root = find(d);
    if (slot[root] == static_cast<std::size_t>(-1)) {
      slot[root] = out.size();
      out.emplace_back();
    }
    out[slot[root]].push_back(d);
  }
  return out;
}

std::vector<Refinement> invariant_refinements(const Factorization &f, const PositionSystem &ps,
                                              const std::vector<std::vector<std::size_t>> &pi) {
  if (pi.size() >= 24)
    throw CapExceededError("too many difference-class orbits to enumerate refinements");
  auto table = atoms(f, ps);
  std::vector<Refinement> out;
  for (Mask u = 1; u < (Mask{1} << pi.size()); ++u) {
    Refinement ref;
    for (std::size_t p = 0; p < pi.size(); ++p) {
      if ((u >> p) & 1u) {
        ref.parts.push_back(p);
        ref.classes.insert(ref.classes.end(), pi[p].begin(), pi[p].end());
      }
    }
    std::sort(ref.classes.begin(), ref.classes.end());
    std::vector<std::vector<Vertex>> blocks;
    for (std::size_t j = 0; j < ps.m; ++j) {
      std::vector<Vertex> blk;
      for (auto d : ref.classes) {
        const auto &a = table.at(j, (j + d) % ps.m);
        blk.insert(blk.end(), a.begin(), a.end());
      }
      if (!blk.empty())
        blocks.push_back(std::move(blk));
    }
    for (auto d : ref.classes)
      ref.expected_block_size += table.at(0, d % ps.m).size();
    ref.system = BlockSystem(f.size(), std::move(blocks));
    ref.c_invariant = is_invariant(ref.system, f);
    ref.uniform = ref.system.uniform();
    out.push_back(std::move(ref));
  }
  return out;
}

Factorization swap_relabel(const AltCycleDecomposition &cycles, const Factorization &f,
                           Mask mask) {
  auto out = orient(f, cycles, mask);
  out.orientation = f.orientation ^ mask;
  return out;
}

BlockConstruction block_construction(const Factorization &f, const PositionSystem &ps,
                                     const BlockSystem &bs,
                                     const BlockConstructionOptions &opts) {
  BlockConstruction result;
  if (f.size() == 1) {
    result.success = true;
    result.words = WordSet({Word::empty()}, f, 0);
    return result;
  }
  if (!is_invariant(bs, f))
    throw PreconditionError("block construction: the factors do not preserve the block system");
  auto rel = relative_block_permutation(f, bs);
  if (!rel.derangement)
    throw PreconditionError("block construction: relative block permutation " +
                            format_cycles(rel.tau) + " is not a derangement");

  CompletionOptions copts{opts.max_word_length, opts.max_pool, opts.max_nodes};
  auto found = search_sharply_transitive(f, ps.root(), copts);
  if (!found) {
    result.failure = "no sharply transitive completion among words of length <= " +
                     std::to_string(opts.max_word_length ? opts.max_word_length : 4 * f.size());
    return result;
  }
  auto report = verify_sharply_transitive(*found, f);
  if (!report.passed)
    throw InconsistencyError("block construction produced a set that fails verification: " +
                             report.reason);
  result.success = true;
  result.words = std::move(*found);
  return result;
}

} // namespace spanfact
