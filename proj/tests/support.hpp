#pragma once

// Shared fixtures and independent oracles for the unit and acceptance tests.
// The oracles work on raw image arrays and never call the search code they check.

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "spanfact/blocks.hpp"
#include "spanfact/digraph.hpp"
#include "spanfact/fixtures.hpp"
#include "spanfact/perm.hpp"

namespace spanfact::testing {

using Rng = std::mt19937_64;
using Images = std::vector<Point>;

inline Permutation random_permutation(Rng &rng, std::size_t n) {
  std::vector<Point> v(n);
  std::iota(v.begin(), v.end(), Point{0});
  std::shuffle(v.begin(), v.end(), rng);
  return Permutation(std::move(v));
}

inline Word random_word(Rng &rng, std::size_t max_len, bool positive) {
  std::uniform_int_distribution<std::size_t> len(0, max_len);
  std::uniform_int_distribution<int> sym(0, positive ? 1 : 3);
  Word w;
  for (auto k = len(rng); k > 0; --k)
    w.symbols.push_back(static_cast<Symbol>(sym(rng)));
  return w;
}

inline Images images_of(const Permutation &p) { return {p.images().begin(), p.images().end()}; }

// ---------------------------------------------------------------------------
// Small digraph corpus (n <= 8)

struct NamedDigraph {
  std::string name;
  Digraph2 graph;
};

/// Cay(Z_n, {a, b}): v -> v + a, v + b.
inline Digraph2 circulant(std::size_t n, std::size_t a, std::size_t b) {
  std::vector<std::array<Vertex, 2>> out(n);
  for (std::size_t v = 0; v < n; ++v)
    out[v] = {static_cast<Vertex>((v + a) % n), static_cast<Vertex>((v + b) % n)};
  return Digraph2(std::move(out));
}

inline std::vector<NamedDigraph> small_corpus() {
  std::vector<NamedDigraph> out;
  out.push_back({"double-edge n=2", Digraph2({{1, 1}, {0, 0}})});
  out.push_back({"toy:3", build_toy(3).graph});
  out.push_back({"toy:4", build_toy(4).graph});
  out.push_back({"morris", build_instance(fixture_config("morris")).graph()});
  out.push_back({"Cay(Z5,{1,2})", circulant(5, 1, 2)});
  out.push_back({"Cay(Z6,{1,2})", circulant(6, 1, 2)});
  out.push_back({"Cay(Z7,{1,3})", circulant(7, 1, 3)});
  out.push_back({"Cay(Z8,{1,3})", circulant(8, 1, 3)});
  return out;
}

// ---------------------------------------------------------------------------
// Naive relocatable-tree oracle: grows trees one admissible child at a time
// and memoizes every tree seen, so each is expanded once.

inline std::size_t naive_max_tree(const Images &f1, const Images &f2) {
  auto n = f1.size();
  using Walk = std::vector<int>; // application order
  auto end_of = [&](const Walk &w, Point v) {
    for (int s : w)
      v = s == 1 ? f1[v] : f2[v];
    return v;
  };
  auto compatible = [&](const std::vector<Walk> &tree, const Walk &w) {
    for (const auto &u : tree)
      for (Point v = 0; v < n; ++v)
        if (end_of(u, v) == end_of(w, v))
          return false;
    return true;
  };
  std::set<std::vector<Walk>> seen;
  std::size_t best = 0;
  std::vector<std::vector<Walk>> stack{{Walk{}}};
  seen.insert(stack.back());
  while (!stack.empty()) {
    auto tree = std::move(stack.back());
    stack.pop_back();
    best = std::max(best, tree.size());
    for (const auto &parent : tree) {
      for (int s : {1, 2}) {
        auto child = parent;
        child.push_back(s);
        if (std::find(tree.begin(), tree.end(), child) != tree.end() || !compatible(tree, child))
          continue;
        auto grown = tree;
        grown.push_back(child);
        std::sort(grown.begin(), grown.end());
        if (seen.insert(grown).second)
          stack.push_back(std::move(grown));
      }
    }
  }
  return best;
}

// ---------------------------------------------------------------------------
// Brute-force refinement oracle: every nonempty set U of difference classes,
// blocks {v : pos(v) = j, tied(v) - j in U}, kept when F1 and F2 map blocks
// onto blocks.

using Partition = std::set<std::vector<Point>>;

inline std::set<Partition> brute_force_invariant_refinements(const Images &f1, const Images &f2) {
  auto n = f1.size();
  Images f2inv(n);
  for (Point v = 0; v < n; ++v)
    f2inv[f2[v]] = v;
  Images x(n);
  for (Point v = 0; v < n; ++v)
    x[v] = f2inv[f1[v]];

  std::vector<std::size_t> pos(n, 0);
  std::vector<bool> seen(n, false);
  std::size_t m = 0;
  for (Point start = 0; start < n; ++start) {
    if (seen[start])
      continue;
    std::size_t j = 0;
    for (Point v = start; !seen[v]; v = x[v]) {
      seen[v] = true;
      pos[v] = j++;
    }
    m = j;
  }
  std::vector<std::size_t> tied(n);
  for (Point v = 0; v < n; ++v)
    tied[f1[v]] = pos[v];

  std::set<Partition> out;
  for (std::uint64_t u = 1; u < (std::uint64_t{1} << m); ++u) {
    std::vector<std::vector<Point>> blocks(m);
    for (Point v = 0; v < n; ++v)
      if ((u >> ((tied[v] + m - pos[v]) % m)) & 1u)
        blocks[pos[v]].push_back(v);
    Partition part;
    for (auto &b : blocks)
      if (!b.empty())
        part.insert(b);
    if (part.empty())
      continue;
    auto maps_onto_blocks = [&](const Images &g) {
      for (const auto &b : part) {
        std::vector<Point> img;
        for (auto v : b)
          img.push_back(g[v]);
        std::sort(img.begin(), img.end());
        if (!part.contains(img))
          return false;
      }
      return true;
    };
    if (maps_onto_blocks(f1) && maps_onto_blocks(f2))
      out.insert(part);
  }
  return out;
}

inline Partition as_partition(const BlockSystem &bs) {
  return Partition(bs.blocks().begin(), bs.blocks().end());
}

// ---------------------------------------------------------------------------
// Brute-force sharply transitive search: closure of <F1, F2> by image arrays,
// then depth-first choice of one element per target vertex of the root.

inline bool brute_force_sharply_transitive_with_generators(const Images &f1, const Images &f2) {
  auto n = f1.size();
  Images id(n);
  std::iota(id.begin(), id.end(), Point{0});
  auto after = [&](const Images &g, const Images &h) {
    Images r(n);
    for (Point v = 0; v < n; ++v)
      r[v] = g[h[v]];
    return r;
  };
  std::vector<Images> elems{id};
  std::set<Images> known{id};
  for (std::size_t i = 0; i < elems.size() && elems.size() < 200000; ++i) {
    for (const auto *g : {&f1, &f2}) {
      auto e = after(*g, elems[i]);
      if (known.insert(e).second)
        elems.push_back(e);
    }
  }
  auto clash = [&](const Images &a, const Images &b) {
    for (Point v = 0; v < n; ++v)
      if (a[v] == b[v])
        return true;
    return false;
  };
  std::vector<Images> chosen{id, f1, f2};
  for (std::size_t a = 0; a < 3; ++a)
    for (std::size_t b = a + 1; b < 3; ++b)
      if (clash(chosen[a], chosen[b]))
        return false;
  std::vector<bool> hit(n, false);
  for (const auto &c : chosen)
    hit[c[0]] = true;

  auto dfs = [&](auto &&self) -> bool {
    auto t = std::find(hit.begin(), hit.end(), false);
    if (t == hit.end())
      return true;
    auto target = static_cast<Point>(t - hit.begin());
    for (const auto &e : elems) {
      if (e[0] != target)
        continue;
      bool ok = true;
      for (const auto &c : chosen)
        ok = ok && !clash(c, e);
      if (!ok)
        continue;
      chosen.push_back(e);
      hit[target] = true;
      if (self(self))
        return true;
      hit[target] = false;
      chosen.pop_back();
    }
    return false;
  };
  return dfs(dfs);
}

// ---------------------------------------------------------------------------
// Isomorphism of two out-degree-2 digraphs by trying every vertex bijection.

inline std::multiset<std::pair<Point, Point>> edge_set(const Digraph2 &d) {
  std::multiset<std::pair<Point, Point>> e;
  for (Vertex v = 0; v < d.size(); ++v)
    for (auto w : d.out(v))
      e.emplace(v, w);
  return e;
}

inline bool brute_force_isomorphic(const Digraph2 &a, const Digraph2 &b,
                                   std::size_t *checked = nullptr) {
  if (a.size() != b.size())
    return false;
  auto target = edge_set(b);
  std::vector<Point> phi(a.size());
  std::iota(phi.begin(), phi.end(), Point{0});
  std::size_t count = 0;
  bool found = false;
  do {
    ++count;
    std::multiset<std::pair<Point, Point>> mapped;
    for (Vertex v = 0; v < a.size(); ++v)
      for (auto w : a.out(v))
        mapped.emplace(phi[v], phi[w]);
    if (mapped == target) {
      found = true;
      break;
    }
  } while (std::next_permutation(phi.begin(), phi.end()));
  if (checked)
    *checked = count;
  return found;
}

/// Cay(S3, {a, b}) on the six permutations of {0,1,2}, g -> g∘a, g∘b.
inline Digraph2 cayley_s3(const Permutation &a, const Permutation &b) {
  std::vector<Permutation> elems;
  std::vector<Point> p{0, 1, 2};
  do
    elems.emplace_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  auto index = [&](const Permutation &g) {
    return static_cast<Vertex>(std::find(elems.begin(), elems.end(), g) - elems.begin());
  };
  std::vector<std::array<Vertex, 2>> out;
  for (const auto &g : elems)
    out.push_back({index(compose(g, a)), index(compose(g, b))});
  return Digraph2(std::move(out), false);
}

} // namespace spanfact::testing
