#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "spanfact/group.hpp"
#include "spanfact/perm.hpp"

namespace spanfact {

using Vertex = Point;
using Mask = std::uint64_t;

inline constexpr std::size_t kDefaultCycleCap = 24;

/**
 * A digraph with exactly two out-edges and two in-edges at every vertex.
 * The out-edge pair is a multiset; loops and parallel edges are tolerated
 * so hand-built test graphs can exercise degenerate cases.
 */
class Digraph2 {
public:
  /// Throws InvalidDigraphError on bad degrees and NotStronglyConnectedError
  /// when `require_strong` is set and the digraph is not strongly connected.
  explicit Digraph2(std::vector<std::array<Vertex, 2>> out_edges, bool require_strong = true);

  std::size_t size() const noexcept { return out_.size(); }
  const std::array<Vertex, 2> &out(Vertex v) const { return out_[v]; }
  std::span<const std::array<Vertex, 2>> out_edges() const noexcept { return out_; }
  bool strongly_connected() const noexcept { return strong_; }

  bool has_edge(Vertex from, Vertex to) const;

  friend bool operator==(const Digraph2 &, const Digraph2 &) = default;

private:
  std::vector<std::array<Vertex, 2>> out_;
  bool strong_ = false;
};

bool is_strongly_connected(std::span<const std::array<Vertex, 2>> out_edges);

/// Same out-neighbour multisets at every vertex.
bool same_edges(const Digraph2 &a, const Digraph2 &b);

/// A 1-factorization (F1, F2) tagged with its orientation bitmask.
struct Factorization {
  Permutation f1;
  Permutation f2;
  Mask orientation = 0;

  std::size_t size() const noexcept { return f1.size(); }
  Permutation x() const { return compose(inverse(f2), f1); } // F2^-1 F1
  Permutation y() const { return compose(f1, inverse(f2)); } // F1 F2^-1
};

bool is_factorization_of(const Digraph2 &d, const Factorization &f);

/**
 * Alternating cycles of a degree-2 digraph. Cycle c consists of both
 * out-edges of every vertex in tails[c] (an orbit of x = F2^-1 F1), so the
 * out-edges of v belong to cycle cycle_of_tail[v]. Cycles are ordered by
 * minimum tail vertex.
 */
struct AltCycleDecomposition {
  std::vector<std::vector<Vertex>> tails;
  std::vector<std::size_t> cycle_of_tail;

  std::size_t size() const noexcept { return tails.size(); }
  std::size_t cycle_of_edge(Vertex tail) const { return cycle_of_tail[tail]; }

  /// The cycle's edges (tail, head) in alternating order, starting at its
  /// minimum tail: v -F1-> F1(v) <-F2- x(v) -F1-> ...
  std::vector<std::array<Vertex, 2>> edges(std::size_t c, const Factorization &f) const;
};

AltCycleDecomposition alternating_cycles(const Digraph2 &d, const Factorization &f);

/// Perfect matching on the out/in incidence graph, then its complement.
Factorization initial_factorization(const Digraph2 &d);

/// The factorization obtained from `base` by flipping the masked cycles.
Factorization orient(const Factorization &base, const AltCycleDecomposition &cycles,
                     Mask mask);

/// Recovers the orientation mask of `f` relative to `base`.
Mask orientation_of(const Factorization &base, const AltCycleDecomposition &cycles,
                    const Factorization &f);

struct FactorizationFamily {
  Factorization initial;
  AltCycleDecomposition cycles;
  std::vector<Factorization> members; // members[b].orientation == b

  std::size_t r() const noexcept { return cycles.size(); }
};

/// All 2^r factorizations; throws CapExceededError when r > cycle_cap.
FactorizationFamily enumerate_factorizations(const Digraph2 &d,
                                             std::size_t cycle_cap = kDefaultCycleCap);

bool is_automorphism(const Digraph2 &d, const Permutation &phi);

struct FactorizationClass {
  std::size_t id = 0;
  Mask representative = 0; // minimal mask in the orbit
  std::vector<Mask> members;
  CycleType f1_type;
  CycleType f2_type;
};

struct Classification {
  std::vector<FactorizationClass> classes; // ordered by representative
  std::vector<std::size_t> class_of;       // indexed by mask
};

/**
 * Orbits of ⟨aut_generators⟩ acting by conjugation φ(F1,F2)φ^-1, joined with
 * the label swap when `allow_swap`. Throws NotAutomorphismError for a
 * generator that is not an automorphism of d.
 */
Classification classify_factorizations(const Digraph2 &d, const FactorizationFamily &family,
                                       std::span<const Permutation> aut_generators,
                                       bool allow_swap);

/// A coset digraph together with the data it was built from.
struct CosetDigraph {
  Presentation presentation;
  CosetSpace cosets;
  Digraph2 graph;

  /// λ_g : kH -> gkH as a permutation of coset ids.
  Permutation left_multiplication(const Permutation &g) const;
  std::vector<Permutation> left_multiplications() const; // by group generators
};

CosetDigraph build_coset_digraph(const Presentation &p);

struct ToyDigraph {
  std::size_t m = 0;
  Digraph2 graph;
  Factorization canonical;
};

/// Vertices m*i + j on {0,1} x Z_m with F1(i,j) = (i,j+1), F2(i,j) = (1-i,j+1).
ToyDigraph build_toy(std::size_t m);

} // namespace spanfact
