#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "spanfact/digraph.hpp"
#include "spanfact/perm.hpp"
#include "spanfact/words.hpp"

namespace spanfact {

/**
 * The position system of a factorization. With x = F2^-1 F1 having r
 * cycles of common length m, cycles[i][j] is a_{i,j} (each cycle starting
 * at its minimum vertex, cycles ordered by that minimum) and
 * blocks[j] = P_j = x^j(P_0) lists a_{0,j}, ..., a_{r-1,j}.
 */
struct PositionSystem {
  std::size_t m = 0;
  std::size_t r = 0;
  Permutation x;
  std::vector<std::vector<Vertex>> cycles;
  std::vector<std::vector<Vertex>> blocks;
  std::vector<std::size_t> cycle_of;
  std::vector<std::size_t> position_of;

  Vertex root() const { return cycles.at(0).at(0); }
};

/// Throws UniformityError when the x-cycles differ in length.
PositionSystem position_system(const Factorization &f);

/// Index k of the tied block P'_k = F1(P_k) containing each vertex.
std::vector<std::size_t> tied_index(const Factorization &f, const PositionSystem &ps);

struct PhaseProfile {
  std::vector<std::size_t> delta;        // per x-cycle, in Z_m
  std::vector<std::size_t> phase_counts; // r_d for d in Z_m
  std::vector<std::vector<Vertex>> tied_blocks;
};

/**
 * Offsets k - j observed along each x-cycle, where a_{i,j} lies in the
 * tied block P'_k. A phase exists for cycle i exactly when its set has a
 * single element.
 */
std::vector<std::vector<std::size_t>> phase_offsets(const Factorization &f,
                                                    const PositionSystem &ps);

/// Throws InconsistencyError naming the first cycle whose offset varies.
PhaseProfile phase_profile(const Factorization &f, const PositionSystem &ps);

/// A_{j,k} = P_j ∩ P'_k, computed from the two partitions directly.
struct AtomTable {
  std::size_t m = 0;
  std::vector<std::vector<Vertex>> cells; // row-major (j, k)

  const std::vector<Vertex> &at(std::size_t j, std::size_t k) const { return cells[j * m + k]; }
};

AtomTable atoms(const Factorization &f, const PositionSystem &ps);

/// Outcome of checking the phase and atom laws on one factorization.
struct PhaseLawReport {
  bool phases_constant = false;
  bool counts_sum_to_r = false;
  bool atom_sizes_match = false;
  std::string detail; // first violation, empty when all hold

  bool ok() const noexcept { return phases_constant && counts_sum_to_r && atom_sizes_match; }
};

PhaseLawReport check_phase_laws(const Factorization &f, const PositionSystem &ps);

/// A partition of a set of vertices (usually all of V) into nonempty blocks.
class BlockSystem {
public:
  BlockSystem() = default;
  /// Throws PreconditionError for empty, overlapping, or out-of-range blocks.
  BlockSystem(std::size_t n, std::vector<std::vector<Vertex>> blocks);

  std::size_t vertex_count() const noexcept { return n_; }
  std::size_t size() const noexcept { return blocks_.size(); }
  const std::vector<std::vector<Vertex>> &blocks() const noexcept { return blocks_; }
  std::optional<std::size_t> block_of(Vertex v) const;

  bool covers_all() const noexcept;
  bool uniform() const noexcept;

  friend bool operator==(const BlockSystem &, const BlockSystem &) = default;

private:
  std::size_t n_ = 0;
  std::vector<std::vector<Vertex>> blocks_;
  std::vector<std::size_t> block_of_;
};

BlockSystem position_blocks(const PositionSystem &ps);
BlockSystem cycle_blocks(const PositionSystem &ps); // the x-orbits

bool is_invariant(const BlockSystem &bs, const Permutation &g);
bool is_invariant(const BlockSystem &bs, const Factorization &f); // under F1 and F2

/// σ(g) on block ids; throws NonInvarianceError if g splits a block.
Permutation block_action(const Permutation &g, const BlockSystem &bs);

struct RelativeBlockPermutation {
  Permutation tau; // σ(F1)^-1 σ(F2)
  bool derangement = false;
};

RelativeBlockPermutation relative_block_permutation(const Factorization &f,
                                                    const BlockSystem &bs);

/// Orbits of ⟨F1, F2⟩ on the difference classes Z_m, traced through atom images.
std::vector<std::vector<std::size_t>> difference_class_orbits(const Factorization &f,
                                                              const PositionSystem &ps);

struct Refinement {
  std::vector<std::size_t> parts;   // indices into Π
  std::vector<std::size_t> classes; // difference classes d in the union
  BlockSystem system;               // nonempty B_{j,U}, in order of j
  std::size_t expected_block_size = 0;
  bool c_invariant = false;
  bool uniform = false;
};

/// B_{j,U} for every nonempty U ⊆ Π, in ascending order of U's bitmask.
std::vector<Refinement> invariant_refinements(const Factorization &f, const PositionSystem &ps,
                                              const std::vector<std::vector<std::size_t>> &pi);

/// Swaps the F1/F2 labels on the masked alternating cycles.
Factorization swap_relabel(const AltCycleDecomposition &cycles, const Factorization &f,
                           Mask mask);

struct BlockConstructionOptions {
  std::size_t max_word_length = 0; // 0 means 4n
  std::size_t max_pool = 200'000;
  std::uint64_t max_nodes = 10'000'000;
};

struct BlockConstruction {
  bool success = false;
  WordSet words;
  std::string failure;
};

/**
 * Builds a sharply transitive set containing ∅, F1, F2 from words found by
 * breadth-first search in ⟨F1, F2⟩. Throws PreconditionError unless both
 * factors preserve `bs` and σ(F1)^-1 σ(F2) is a derangement on it.
 */
BlockConstruction block_construction(const Factorization &f, const PositionSystem &ps,
                                     const BlockSystem &bs,
                                     const BlockConstructionOptions &opts = {});

} // namespace spanfact
