#include "spanfact/group.hpp"

#include <algorithm>
#include <deque>
#include <set>

#include "spanfact/errors.hpp"

namespace spanfact {

std::optional<ElementId> FiniteGroup::find(const Permutation &p) const {
  auto it = index.find(p);
  if (it == index.end())
    return std::nullopt;
  return it->second;
}

ElementId FiniteGroup::id_of(const Permutation &p) const {
  auto id = find(p);
  if (!id)
    throw NotSubgroupError("permutation " + format_cycles(p) + " is not in the group");
  return *id;
}

ElementId FiniteGroup::multiply(ElementId a, ElementId b) const {
  return index.at(compose(elements[a], elements[b]));
}

ElementId FiniteGroup::invert(ElementId a) const { return index.at(inverse(elements[a])); }

FiniteGroup enumerate_group(std::span<const Permutation> generators, std::size_t degree,
                            std::size_t cap) {
  FiniteGroup g;
  g.degree = degree;
  for (const auto &gen : generators) {
    if (gen.size() != degree)
      throw SizeMismatchError("generator " + format_cycles(gen) + " has degree " +
                              std::to_string(gen.size()) + ", expected " +
                              std::to_string(degree));
    g.generators.push_back(gen);
  }

  auto add = [&](Permutation p) {
    if (g.index.contains(p))
      return false;
    if (g.elements.size() >= cap)
      throw CapExceededError("group closure exceeds cap of " + std::to_string(cap) +
                             " elements");
    g.index.emplace(p, g.elements.size());
    g.elements.push_back(std::move(p));
    return true;
  };

  add(Permutation::identity(degree));
  for (std::size_t head = 0; head < g.elements.size(); ++head) {
    for (const auto &gen : g.generators) {
      add(compose(gen, g.elements[head]));
    }
  }
  return g;
}

std::vector<ElementId> subgroup_elements(const FiniteGroup &group,
                                         std::span<const Permutation> generators) {
  std::vector<ElementId> gens;
  for (const auto &p : generators)
    gens.push_back(group.id_of(p));

  std::vector<bool> seen(group.order(), false);
  std::vector<ElementId> out{0};
  seen[0] = true;
  for (std::size_t head = 0; head < out.size(); ++head) {
    for (auto gen : gens) {
      auto e = group.multiply(gen, out[head]);
      if (!seen[e]) {
        seen[e] = true;
        out.push_back(e);
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::size_t CosetSpace::coset_containing(const Permutation &g) const {
  return coset_of[group->id_of(g)];
}

CosetSpace coset_space(std::shared_ptr<const FiniteGroup> group,
                       std::span<const Permutation> h_generators) {
  CosetSpace cs;
  cs.group = group;
  cs.subgroup = subgroup_elements(*group, h_generators);

  constexpr auto unassigned = static_cast<std::size_t>(-1);
  cs.coset_of.assign(group->order(), unassigned);
  // Scanning elements in index order makes each representative the minimum
  // of its coset, and puts H (which holds element 0) first.
  for (ElementId g = 0; g < group->order(); ++g) {
    if (cs.coset_of[g] != unassigned)
      continue;
    auto id = cs.cosets.size();
    auto &members = cs.cosets.emplace_back();
    for (auto h : cs.subgroup) {
      auto gh = group->multiply(g, h);
      cs.coset_of[gh] = id;
      members.push_back(gh);
    }
    std::sort(members.begin(), members.end());
    cs.representative.push_back(g);
  }
  return cs;
}

Presentation make_presentation(std::string name, std::shared_ptr<const FiniteGroup> group,
                               std::vector<Permutation> h_generators,
                               std::span<const Permutation> s) {
  Presentation p;
  p.name = std::move(name);
  for (const auto &h : h_generators)
    group->id_of(h);
  for (const auto &x : s)
    p.s.push_back(group->id_of(x));
  p.group = std::move(group);
  p.h_generators = std::move(h_generators);
  return p;
}

bool ValidationReport::valid() const noexcept {
  return std::all_of(conditions.begin(), conditions.end(),
                     [](const ConditionCheck &c) { return c.passed; });
}

ValidationReport validate_presentation(const Presentation &p) {
  const auto &G = *p.group;
  auto H = subgroup_elements(G, p.h_generators);
  std::set<ElementId> hset(H.begin(), H.end());

  ValidationReport report;

  auto &c1 = report.conditions[0];
  c1 = {1, "S ∩ H = ∅", true, {}};
  for (auto s : p.s) {
    if (hset.contains(s)) {
      c1.passed = false;
      c1.detail = format_cycles(G.elements[s]) + " lies in H";
      break;
    }
  }

  std::set<ElementId> sh, hsh;
  for (auto s : p.s)
    for (auto k : H)
      sh.insert(G.multiply(s, k));
  for (auto h : H)
    for (auto x : sh)
      hsh.insert(G.multiply(h, x));
  auto &c2 = report.conditions[1];
  c2 = {2, "HSH = SH", hsh == sh, {}};
  c2.detail = "|SH| = " + std::to_string(sh.size()) + ", |HSH| = " + std::to_string(hsh.size());

  // SH is the union of the cosets sH, so condition 3 is injectivity of s -> sH.
  auto cs = coset_space(p.group, p.h_generators);
  std::set<std::size_t> hit;
  auto &c3 = report.conditions[2];
  c3 = {3, "S has exactly one representative per coset of SH", true, {}};
  for (auto s : p.s) {
    if (!hit.insert(cs.coset_of[s]).second) {
      c3.passed = false;
      c3.detail = "two elements of S share the coset of " + format_cycles(G.elements[s]);
    }
  }
  if (c3.passed)
    c3.detail = std::to_string(hit.size()) + " cosets";

  std::vector<Permutation> sgens;
  for (auto s : p.s)
    sgens.push_back(G.elements[s]);
  auto generated = subgroup_elements(G, sgens);
  std::set<ElementId> product;
  for (auto g : generated)
    for (auto k : H)
      product.insert(G.multiply(g, k));
  auto &c4 = report.conditions[3];
  c4 = {4, "G = ⟨S⟩H", product.size() == G.order(), {}};
  c4.detail = "|⟨S⟩H| = " + std::to_string(product.size()) + ", |G| = " +
              std::to_string(G.order());
  return report;
}

NormalizationResult normalize_degree2(const Presentation &p) {
  if (p.s.size() != 2)
    throw InvalidPresentationError("degree-2 normalization needs |S| = 2");
  if (!validate_presentation(p).valid())
    throw InvalidPresentationError("presentation '" + p.name + "' is not valid");

  const auto &G = *p.group;
  auto cs = coset_space(p.group, p.h_generators);
  auto s = p.s[0];
  auto t = p.s[1];

  NormalizationResult result;
  result.presentation = p;
  for (auto h : cs.subgroup) {
    auto hs = G.multiply(h, s);
    if (cs.coset_of[hs] == cs.coset_of[s])
      continue;
    // hsH = tH, so hs = t k with k = t^-1 hs in H.
    auto k = G.multiply(G.invert(t), hs);
    result.swapped = true;
    result.h = h;
    result.k = k;
    result.presentation.s = {s, hs};
    return result;
  }
  return result;
}

KernelReport local_action_kernel(const Presentation &p) {
  if (p.s.size() != 2)
    throw InvalidPresentationError("local action needs |S| = 2");
  const auto &G = *p.group;
  auto cs = coset_space(p.group, p.h_generators);

  KernelReport report;
  for (auto h : cs.subgroup) {
    bool fixes = true;
    for (auto s : p.s)
      fixes = fixes && cs.coset_of[G.multiply(h, s)] == cs.coset_of[s];
    if (fixes)
      report.kernel.push_back(h);
  }

  std::set<ElementId> kset(report.kernel.begin(), report.kernel.end());
  report.normal_in_group = true;
  for (const auto &g : G.generators) {
    auto gi = G.id_of(g);
    auto ginv = G.invert(gi);
    for (auto k : report.kernel) {
      if (!kset.contains(G.multiply(G.multiply(gi, k), ginv))) {
        report.normal_in_group = false;
        return report;
      }
    }
  }
  return report;
}

} // namespace spanfact
