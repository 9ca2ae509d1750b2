#include "spanfact/digraph.hpp"

#include <algorithm>
#include <functional>

#include "spanfact/errors.hpp"

namespace spanfact {

namespace {

std::vector<bool> reach(const std::vector<std::vector<Vertex>> &adj, Vertex start) {
  std::vector<bool> seen(adj.size(), false);
  std::vector<Vertex> stack{start};
  seen[start] = true;
  while (!stack.empty()) {
    auto v = stack.back();
    stack.pop_back();
    for (auto w : adj[v]) {
      if (!seen[w]) {
        seen[w] = true;
        stack.push_back(w);
      }
    }
  }
  return seen;
}

std::array<Vertex, 2> sorted_pair(std::array<Vertex, 2> p) {
  if (p[1] < p[0])
    std::swap(p[0], p[1]);
  return p;
}

} // namespace

bool is_strongly_connected(std::span<const std::array<Vertex, 2>> out_edges) {
  auto n = out_edges.size();
  if (n == 0)
    return true;
  std::vector<std::vector<Vertex>> fwd(n), rev(n);
  for (Vertex v = 0; v < n; ++v) {
    for (auto w : out_edges[v]) {
      fwd[v].push_back(w);
      rev[w].push_back(v);
    }
  }
  auto all = [](const std::vector<bool> &s) { return std::all_of(s.begin(), s.end(), std::identity{}); };
  return all(reach(fwd, 0)) && all(reach(rev, 0));
}

Digraph2::Digraph2(std::vector<std::array<Vertex, 2>> out_edges, bool require_strong)
    : out_(std::move(out_edges)) {
  std::vector<int> indeg(out_.size(), 0);
  for (Vertex v = 0; v < out_.size(); ++v) {
    for (auto w : out_[v]) {
      if (w >= out_.size())
        throw InvalidDigraphError("edge " + std::to_string(v) + " -> " + std::to_string(w) +
                                  " leaves the vertex set");
      ++indeg[w];
    }
  }
  for (Vertex v = 0; v < out_.size(); ++v)
    if (indeg[v] != 2)
      throw InvalidDigraphError("vertex " + std::to_string(v) + " has in-degree " +
                                std::to_string(indeg[v]) + ", expected 2");
  strong_ = is_strongly_connected(out_);
  if (require_strong && !strong_)
    throw NotStronglyConnectedError("digraph on " + std::to_string(out_.size()) +
                                    " vertices is not strongly connected");
}

bool Digraph2::has_edge(Vertex from, Vertex to) const {
  return out_[from][0] == to || out_[from][1] == to;
}

bool same_edges(const Digraph2 &a, const Digraph2 &b) {
  if (a.size() != b.size())
    return false;
  for (Vertex v = 0; v < a.size(); ++v)
    if (sorted_pair(a.out(v)) != sorted_pair(b.out(v)))
      return false;
  return true;
}

bool is_factorization_of(const Digraph2 &d, const Factorization &f) {
  if (f.f1.size() != d.size() || f.f2.size() != d.size())
    return false;
  for (Vertex v = 0; v < d.size(); ++v)
    if (sorted_pair({f.f1(v), f.f2(v)}) != sorted_pair(d.out(v)))
      return false;
  return true;
}

Factorization initial_factorization(const Digraph2 &d) {
  auto n = d.size();
  constexpr auto none = static_cast<Vertex>(-1);
  std::vector<Vertex> match_right(n, none); // head -> tail
  std::vector<int> visited(n, -1);

  std::function<bool(Vertex, int)> augment = [&](Vertex v, int stamp) {
    for (auto w : d.out(v)) {
      if (visited[w] == stamp)
        continue;
      visited[w] = stamp;
      if (match_right[w] == none || augment(match_right[w], stamp)) {
        match_right[w] = v;
        return true;
      }
    }
    return false;
  };

  for (Vertex v = 0; v < n; ++v)
    if (!augment(v, static_cast<int>(v)))
      throw InconsistencyError("no perfect matching in a 2-regular digraph");

  std::vector<Point> f1(n), f2(n);
  for (Vertex w = 0; w < n; ++w)
    f1[match_right[w]] = w;
  for (Vertex v = 0; v < n; ++v) {
    auto [a, b] = d.out(v);
    f2[v] = (a == f1[v]) ? b : a;
  }
  return {Permutation(std::move(f1)), Permutation(std::move(f2)), 0};
}

std::vector<std::array<Vertex, 2>> AltCycleDecomposition::edges(std::size_t c,
                                                                const Factorization &f) const {
  std::vector<std::array<Vertex, 2>> out;
  auto x = f.x();
  for (auto u : tails[c]) {
    out.push_back({u, f.f1(u)});
    out.push_back({x(u), f.f1(u)});
  }
  return out;
}

AltCycleDecomposition alternating_cycles(const Digraph2 &d, const Factorization &f) {
  if (!is_factorization_of(d, f))
    throw PreconditionError("alternating_cycles: factorization does not match the digraph");
  AltCycleDecomposition dec;
  dec.tails = orbits(f.x());
  dec.cycle_of_tail.assign(d.size(), 0);
  for (std::size_t c = 0; c < dec.tails.size(); ++c)
    for (auto v : dec.tails[c])
      dec.cycle_of_tail[v] = c;
  return dec;
}

Factorization orient(const Factorization &base, const AltCycleDecomposition &cycles, Mask mask) {
  auto n = base.size();
  std::vector<Point> f1(base.f1.images().begin(), base.f1.images().end());
  std::vector<Point> f2(base.f2.images().begin(), base.f2.images().end());
  for (Vertex v = 0; v < n; ++v)
    if ((mask >> cycles.cycle_of_tail[v]) & 1u)
      std::swap(f1[v], f2[v]);
  return {Permutation(std::move(f1)), Permutation(std::move(f2)), mask};
}

Mask orientation_of(const Factorization &base, const AltCycleDecomposition &cycles,
                    const Factorization &f) {
  Mask mask = 0;
  for (std::size_t c = 0; c < cycles.size(); ++c) {
    for (auto v : cycles.tails[c]) {
      if (f.f1(v) != base.f1(v)) {
        mask |= Mask{1} << c;
        break;
      }
    }
  }
  auto check = orient(base, cycles, mask);
  if (check.f1 != f.f1 || check.f2 != f.f2)
    throw InconsistencyError("factorization is not an orientation of the base alternating cycles");
  return mask;
}

FactorizationFamily enumerate_factorizations(const Digraph2 &d, std::size_t cycle_cap) {
  auto initial = initial_factorization(d);
  auto cycles = alternating_cycles(d, initial);
  if (cycles.size() > cycle_cap || cycles.size() >= 64)
    throw CapExceededError(std::to_string(cycles.size()) +
                           " alternating cycles exceed the cap of " + std::to_string(cycle_cap));
  FactorizationFamily fam{initial, cycles, {}};
  Mask count = Mask{1} << cycles.size();
  fam.members.reserve(count);
  for (Mask b = 0; b < count; ++b)
    fam.members.push_back(orient(initial, cycles, b));
  return fam;
}

bool is_automorphism(const Digraph2 &d, const Permutation &phi) {
  if (phi.size() != d.size())
    return false;
  for (Vertex v = 0; v < d.size(); ++v) {
    auto [a, b] = d.out(v);
    if (sorted_pair({phi(a), phi(b)}) != sorted_pair(d.out(phi(v))))
      return false;
  }
  return true;
}

Classification classify_factorizations(const Digraph2 &d, const FactorizationFamily &family,
                                       std::span<const Permutation> aut_generators,
                                       bool allow_swap) {
  std::vector<Permutation> inverses;
  for (const auto &phi : aut_generators) {
    if (!is_automorphism(d, phi))
      throw NotAutomorphismError(format_cycles(phi) + " is not an automorphism of the digraph");
    inverses.push_back(inverse(phi));
  }

  const auto &members = family.members;
  constexpr auto unset = static_cast<std::size_t>(-1);
  Classification out;
  out.class_of.assign(members.size(), unset);

  auto locate = [&](const Permutation &f1, const Permutation &f2) {
    Factorization probe{f1, f2, 0};
    auto mask = orientation_of(family.initial, family.cycles, probe);
    return mask;
  };

  for (Mask b = 0; b < members.size(); ++b) {
    if (out.class_of[b] != unset)
      continue;
    auto id = out.classes.size();
    FactorizationClass cls;
    cls.id = id;
    cls.representative = b;
    cls.f1_type = cycle_type(members[b].f1);
    cls.f2_type = cycle_type(members[b].f2);

    std::vector<Mask> queue{b};
    out.class_of[b] = id;
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const auto &f = members[queue[head]];
      auto visit = [&](Mask m) {
        if (out.class_of[m] == unset) {
          out.class_of[m] = id;
          queue.push_back(m);
        }
      };
      for (std::size_t g = 0; g < aut_generators.size(); ++g) {
        const auto &phi = aut_generators[g];
        visit(locate(compose(phi, compose(f.f1, inverses[g])),
                     compose(phi, compose(f.f2, inverses[g]))));
      }
      if (allow_swap)
        visit(locate(f.f2, f.f1));
    }
    std::sort(queue.begin(), queue.end());
    cls.members = std::move(queue);
    out.classes.push_back(std::move(cls));
  }
  return out;
}

Permutation CosetDigraph::left_multiplication(const Permutation &g) const {
  const auto &G = *cosets.group;
  auto gi = G.id_of(g);
  std::vector<Point> images(cosets.size());
  for (std::size_t c = 0; c < cosets.size(); ++c)
    images[c] = static_cast<Point>(cosets.coset_of[G.multiply(gi, cosets.representative[c])]);
  return Permutation(std::move(images));
}

std::vector<Permutation> CosetDigraph::left_multiplications() const {
  std::vector<Permutation> out;
  for (const auto &g : cosets.group->generators)
    out.push_back(left_multiplication(g));
  return out;
}

CosetDigraph build_coset_digraph(const Presentation &p) {
  if (p.s.size() != 2)
    throw InvalidPresentationError("coset digraph of out-degree 2 needs |S| = 2, got " +
                                   std::to_string(p.s.size()));
  auto report = validate_presentation(p);
  if (!report.valid()) {
    std::string failed;
    for (const auto &c : report.conditions)
      if (!c.passed)
        failed += " (" + std::to_string(c.id) + ") " + c.statement + ";";
    throw InvalidPresentationError("presentation '" + p.name + "' fails" + failed);
  }
  auto cs = coset_space(p.group, p.h_generators);
  const auto &G = *p.group;
  std::vector<std::array<Vertex, 2>> out(cs.size());
  for (std::size_t c = 0; c < cs.size(); ++c) {
    auto g = cs.representative[c];
    out[c] = {static_cast<Vertex>(cs.coset_of[G.multiply(g, p.s[0])]),
              static_cast<Vertex>(cs.coset_of[G.multiply(g, p.s[1])])};
  }
  return {p, std::move(cs), Digraph2(std::move(out), true)};
}

ToyDigraph build_toy(std::size_t m) {
  if (m < 3)
    throw PreconditionError("toy family needs m >= 3, got " + std::to_string(m));
  auto n = 2 * m;
  std::vector<Point> f1(n), f2(n);
  std::vector<std::array<Vertex, 2>> out(n);
  for (std::size_t i = 0; i < 2; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      auto v = m * i + j;
      f1[v] = static_cast<Point>(m * i + (j + 1) % m);
      f2[v] = static_cast<Point>(m * (1 - i) + (j + 1) % m);
      out[v] = {f1[v], f2[v]};
    }
  }
  return {m, Digraph2(std::move(out), true),
          Factorization{Permutation(std::move(f1)), Permutation(std::move(f2)), 0}};
}

} // namespace spanfact
