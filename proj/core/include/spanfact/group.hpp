#pragma once

#include <array>
#include <cstddef>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "spanfact/perm.hpp"

namespace spanfact {

using ElementId = std::size_t;

inline constexpr std::size_t kDefaultGroupCap = 10'000;

/// A permutation group held as its full element list.
struct FiniteGroup {
  std::size_t degree = 0;
  std::vector<Permutation> generators;
  std::vector<Permutation> elements; // elements[0] is the identity
  std::unordered_map<Permutation, ElementId> index;

  std::size_t order() const noexcept { return elements.size(); }
  std::optional<ElementId> find(const Permutation &p) const;
  ElementId id_of(const Permutation &p) const; // throws NotSubgroupError
  ElementId multiply(ElementId a, ElementId b) const; // a after b
  ElementId invert(ElementId a) const;
};

/**
 * Closure of `generators` by breadth-first search from the identity, new
 * elements being gen∘a for each generator in the given order.
 */
FiniteGroup enumerate_group(std::span<const Permutation> generators, std::size_t degree,
                            std::size_t cap = kDefaultGroupCap);

/// Elements of the subgroup generated by `generators` inside `group`.
std::vector<ElementId> subgroup_elements(const FiniteGroup &group,
                                         std::span<const Permutation> generators);

/// Right cosets gH of a subgroup H.
struct CosetSpace {
  std::shared_ptr<const FiniteGroup> group;
  std::vector<ElementId> subgroup;           // elements of H, ascending
  std::vector<std::vector<ElementId>> cosets; // each ascending
  std::vector<ElementId> representative;      // minimal element of each coset
  std::vector<std::size_t> coset_of;          // element -> coset id

  std::size_t size() const noexcept { return cosets.size(); }
  std::size_t coset_containing(const Permutation &g) const;
};

CosetSpace coset_space(std::shared_ptr<const FiniteGroup> group,
                       std::span<const Permutation> h_generators);

/// The triple (G, S, H) of a Cayley coset digraph.
struct Presentation {
  std::string name;
  std::shared_ptr<const FiniteGroup> group;
  std::vector<Permutation> h_generators;
  std::vector<ElementId> s;
};

/// Resolves S against the group; throws NotSubgroupError for outsiders.
Presentation make_presentation(std::string name, std::shared_ptr<const FiniteGroup> group,
                               std::vector<Permutation> h_generators,
                               std::span<const Permutation> s);

struct ConditionCheck {
  int id = 0;
  std::string statement;
  bool passed = false;
  std::string detail;
};

struct ValidationReport {
  std::array<ConditionCheck, 4> conditions;
  bool valid() const noexcept;
};

/// Checks S∩H=∅, HSH=SH, one S element per coset of SH, and ⟨S⟩H=G.
ValidationReport validate_presentation(const Presentation &p);

struct NormalizationResult {
  bool swapped = false; // false: no h in H moves sH (no-swap case)
  Presentation presentation;
  std::optional<ElementId> h;
  std::optional<ElementId> k; // h s = t k
};

/// Rewrites S = {s, t} as {s, hs} when some h in H moves the coset sH.
NormalizationResult normalize_degree2(const Presentation &p);

struct KernelReport {
  std::vector<ElementId> kernel;
  bool normal_in_group = false;
};

/// Kernel of the action of H on the two cosets {sH, tH}.
KernelReport local_action_kernel(const Presentation &p);

} // namespace spanfact
