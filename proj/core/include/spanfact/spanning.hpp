#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "spanfact/blocks.hpp"
#include "spanfact/digraph.hpp"
#include "spanfact/perm.hpp"
#include "spanfact/words.hpp"

namespace spanfact {

/// Walks that agree at every vertex.
bool equivalent(const Word &a, const Word &b, const Factorization &f);
/// Walks that disagree at every vertex.
bool relocatable(const Word &a, const Word &b, const Factorization &f);
bool relocatable(const Permutation &a, const Permutation &b);

struct SharpnessReport {
  bool passed = false;
  bool size_ok = false;
  bool pairwise_relocatable = false; // every pair of words relocatable
  bool unique_transfer = false;      // each ordered (u, v) hit by exactly one word
  std::optional<std::pair<std::size_t, std::size_t>> violating_words;
  std::optional<std::pair<Vertex, Vertex>> violating_vertices;
  std::string reason;
};

SharpnessReport verify_sharply_transitive(const WordSet &ws, const Factorization &f);

struct TreeSearchOptions {
  std::uint64_t max_nodes = 100'000'000;
  std::optional<std::chrono::duration<double>> max_time;
  bool canonical_witness = true; // keep the shortlex-least maximum tree
};

struct TreeSearchResult {
  WordSet tree;
  std::size_t max_size = 0;
  bool certified = false;        // search exhausted within budget
  bool budget_exhausted = false;
  std::uint64_t nodes = 0;
};

/**
 * Maximum prefix-closed, pairwise relocatable set of positive words.
 * Children of w are [1]·w and [2]·w; the include/exclude enumeration
 * visits every relocatable tree exactly once.
 */
TreeSearchResult max_relocatable_tree(const Factorization &f, const TreeSearchOptions &opts = {});

enum class PrefixConvention {
  DropLastApplied,  // parent of s·w is w
  DropFirstApplied, // parent of w·s is w
};

struct TreeCheck {
  bool ok = false;
  std::string reason;
};

/// Checks ∅ membership, prefix closure and pairwise relocatability.
TreeCheck check_relocatable_tree(const std::vector<Word> &words, const Factorization &f,
                                 PrefixConvention conv = PrefixConvention::DropLastApplied);

struct AddressingOptions {
  std::size_t max_word_length = 0; // 0 means 4n
  std::size_t max_pool = 50'000;
  std::uint64_t max_nodes = 1'000'000;
};

struct AddressingResult {
  WordSet words;                      // W_{i,j} ordered by (i, j)
  std::vector<Word> transversal;      // u_i
  std::vector<std::size_t> shift;     // net phase shift of u_i at the root
  std::vector<bool> shift_uniform;    // u_i moves every position of cycle 0 by shift[i]
  bool separated = false;             // u_i(v) lie in distinct x-cycles at every v
  bool generators_in_transversal = false;
};

/**
 * Addresses a_{i,j} from the root a_{0,0} by W_{i,j} = x^{j-σ(i)} u_i.
 * Transversal elements are searched so their images separate the x-cycles
 * at every vertex, which makes the family sharply transitive; when no such
 * family is found in the pool the first element reaching each cycle is used
 * and only root bijectivity holds. Throws PreconditionError if some x-cycle
 * is not reached.
 */
AddressingResult phase_addressing(const Factorization &f, const PositionSystem &ps,
                                  const AddressingOptions &opts = {});

/// Replaces the words hitting root, F1(root), F2(root) by ∅, [1], [2].
WordSet splice_generators(const WordSet &s0, const Factorization &f);

struct CompletionOptions {
  std::size_t max_word_length = 0; // 0 means 4n
  std::size_t max_pool = 200'000;
  std::uint64_t max_nodes = 10'000'000;
};

/// Backtracking search for a sharply transitive set containing ∅, F1, F2.
std::optional<WordSet> search_sharply_transitive(const Factorization &f, Vertex root,
                                                 const CompletionOptions &opts = {});

} // namespace spanfact
