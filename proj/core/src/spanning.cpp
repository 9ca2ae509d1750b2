#include "spanfact/spanning.hpp"

#include <algorithm>
#include <set>
#include <unordered_set>

#include "spanfact/errors.hpp"

namespace spanfact {

bool equivalent(const Word &a, const Word &b, const Factorization &f) {
  return evaluate(a, f.f1, f.f2) == evaluate(b, f.f1, f.f2);
}

bool relocatable(const Permutation &a, const Permutation &b) {
  if (a.size() != b.size())
    throw SizeMismatchError("relocatable: permutations of different degree");
  for (Point v = 0; v < a.size(); ++v)
    if (a(v) == b(v))
      return false;
  return true;
}

bool relocatable(const Word &a, const Word &b, const Factorization &f) {
  return relocatable(evaluate(a, f.f1, f.f2), evaluate(b, f.f1, f.f2));
}

SharpnessReport verify_sharply_transitive(const WordSet &ws, const Factorization &f) {
  SharpnessReport rep;
  auto n = f.size();
  const auto &img = ws.images();
  rep.size_ok = ws.size() == n;

  rep.pairwise_relocatable = true;
  for (std::size_t a = 0; a < img.size() && rep.pairwise_relocatable; ++a) {
    for (std::size_t b = a + 1; b < img.size(); ++b) {
      if (!relocatable(img[a], img[b])) {
        rep.pairwise_relocatable = false;
        rep.violating_words = {a, b};
        break;
      }
    }
  }

  rep.unique_transfer = true;
  std::vector<std::uint32_t> hits(n * n, 0);
  for (const auto &p : img)
    for (Point u = 0; u < n; ++u)
      ++hits[u * n + p(u)];
  for (Point u = 0; u < n && rep.unique_transfer; ++u) {
    for (Point v = 0; v < n; ++v) {
      if (hits[u * n + v] != 1) {
        rep.unique_transfer = false;
        rep.violating_vertices = {u, v};
        break;
      }
    }
  }

  rep.passed = rep.size_ok && rep.pairwise_relocatable && rep.unique_transfer;
  if (!rep.size_ok) {
    rep.reason = "size " + std::to_string(ws.size()) + " != n = " + std::to_string(n);
  } else if (rep.violating_words) {
    auto [a, b] = *rep.violating_words;
    rep.reason = "words " + format_word(ws.words()[a]) + " and " + format_word(ws.words()[b]) +
                 " agree at some vertex";
  } else if (rep.violating_vertices) {
    auto [u, v] = *rep.violating_vertices;
    rep.reason = std::to_string(hits[u * n + v]) + " words map " + std::to_string(u) + " to " +
                 std::to_string(v);
  }
  return rep;
}

// ---------------------------------------------------------------------------
// Relocatable trees

namespace {

struct Candidate {
  Word word;
  Permutation image;
};

class TreeSearch {
public:
  TreeSearch(const Factorization &f, const TreeSearchOptions &opts)
      : f_(f), opts_(opts), n_(f.size()), occ_(n_ * n_, 0),
        start_(std::chrono::steady_clock::now()) {}

  TreeSearchResult run() {
    Candidate root{Word::empty(), Permutation::identity(n_)};
    mark(root.image, 1);
    tree_.push_back(root.word);
    std::vector<Candidate> frontier;
    push_children(root, frontier);
    recurse(frontier);

    TreeSearchResult res;
    res.tree = WordSet(best_, f_);
    res.max_size = best_.size();
    res.nodes = nodes_;
    res.budget_exhausted = stopped_;
    res.certified = !stopped_;
    return res;
  }

private:
  void mark(const Permutation &p, std::uint8_t value) {
    for (Point v = 0; v < n_; ++v)
      occ_[v * n_ + p(v)] = value;
  }

  bool admissible(const Permutation &p) const {
    for (Point v = 0; v < n_; ++v)
      if (occ_[v * n_ + p(v)])
        return false;
    return true;
  }

  void push_children(const Candidate &c, std::vector<Candidate> &out) const {
    for (auto s : {Symbol::F1, Symbol::F2}) {
      auto img = compose(s == Symbol::F1 ? f_.f1 : f_.f2, c.image);
      if (admissible(img))
        out.push_back({c.word.then(s), std::move(img)});
    }
  }

  bool over_budget() {
    if (++nodes_ > opts_.max_nodes)
      return true;
    if (opts_.max_time && (nodes_ & 0xfff) == 0)
      return std::chrono::steady_clock::now() - start_ > *opts_.max_time;
    return false;
  }

  void record() {
    if (tree_.size() < best_.size())
      return;
    auto sorted = tree_;
    std::sort(sorted.begin(), sorted.end(), shortlex_less);
    if (sorted.size() > best_.size() ||
        std::lexicographical_compare(sorted.begin(), sorted.end(), best_.begin(), best_.end(),
                                     shortlex_less))
      best_ = std::move(sorted);
  }

  bool done() const { return stopped_ || (!opts_.canonical_witness && best_.size() == n_); }

  void recurse(const std::vector<Candidate> &frontier) {
    if (done())
      return;
    if (over_budget()) {
      stopped_ = true;
      return;
    }
    if (frontier.empty()) {
      record();
      return;
    }
    const auto &c = frontier.front();

    // Include c: survivors of the frontier plus c's children, kept shortlex.
    mark(c.image, 1);
    tree_.push_back(c.word);
    std::vector<Candidate> next;
    next.reserve(frontier.size() + 1);
    for (std::size_t i = 1; i < frontier.size(); ++i)
      if (admissible(frontier[i].image))
        next.push_back(frontier[i]);
    auto mid = next.size();
    push_children(c, next);
    std::inplace_merge(next.begin(), next.begin() + static_cast<std::ptrdiff_t>(mid), next.end(),
                       [](const Candidate &a, const Candidate &b) {
                         return shortlex_less(a.word, b.word);
                       });
    recurse(next);
    tree_.pop_back();
    mark(c.image, 0);

    // Exclude c and, with it, its whole subtree.
    std::vector<Candidate> rest(frontier.begin() + 1, frontier.end());
    recurse(rest);
  }

  const Factorization &f_;
  TreeSearchOptions opts_;
  std::size_t n_;
  std::vector<std::uint8_t> occ_; // occ_[v*n + w] set when some member maps v to w
  std::vector<Word> tree_;
  std::vector<Word> best_;
  std::uint64_t nodes_ = 0;
  bool stopped_ = false;
  std::chrono::steady_clock::time_point start_;
};

} // namespace

TreeSearchResult max_relocatable_tree(const Factorization &f, const TreeSearchOptions &opts) {
  return TreeSearch(f, opts).run();
}

TreeCheck check_relocatable_tree(const std::vector<Word> &words, const Factorization &f,
                                 PrefixConvention conv) {
  auto n = f.size();
  std::set<Word> members(words.begin(), words.end());
  if (members.size() != words.size())
    return {false, "repeated word"};
  if (!members.count(Word{}))
    return {false, "empty word missing"};

  std::vector<std::vector<Point>> walks;
  for (const auto &w : words) {
    if (!w.is_positive())
      return {false, "word " + format_word(w) + " uses an inverse symbol"};
    if (!w.symbols.empty()) {
      Word parent = w;
      if (conv == PrefixConvention::DropLastApplied)
        parent.symbols.erase(parent.symbols.begin());
      else
        parent.symbols.pop_back();
      if (!members.count(parent))
        return {false, "parent of " + format_word(w) + " missing"};
    }
    auto &end = walks.emplace_back(n);
    for (Point v = 0; v < n; ++v) {
      Point u = v;
      for (auto it = w.symbols.rbegin(); it != w.symbols.rend(); ++it)
        u = *it == Symbol::F1 ? f.f1[u] : f.f2[u];
      end[v] = u;
    }
  }
  for (std::size_t a = 0; a < walks.size(); ++a)
    for (std::size_t b = a + 1; b < walks.size(); ++b)
      for (Point v = 0; v < n; ++v)
        if (walks[a][v] == walks[b][v])
          return {false, "walks " + format_word(words[a]) + " and " + format_word(words[b]) +
                             " meet at vertex " + std::to_string(v)};
  return {true, {}};
}

// ---------------------------------------------------------------------------
// Separating searches over elements of the covering group

namespace {

/// Elements of ⟨F1, F2⟩ with a shortest positive word, breadth-first.
std::vector<Candidate> element_pool(const Factorization &f, std::size_t max_len,
                                    std::size_t max_pool) {
  std::vector<Candidate> pool;
  std::unordered_set<Permutation> seen;
  pool.push_back({Word::empty(), Permutation::identity(f.size())});
  seen.insert(pool.back().image);
  std::size_t level_start = 0;
  for (std::size_t len = 1; len <= max_len && pool.size() < max_pool; ++len) {
    auto level_end = pool.size();
    for (auto i = level_start; i < level_end && pool.size() < max_pool; ++i) {
      for (auto s : {Symbol::F1, Symbol::F2}) {
        auto img = compose(s == Symbol::F1 ? f.f1 : f.f2, pool[i].image);
        if (seen.insert(img).second) {
          pool.push_back({pool[i].word.then(s), std::move(img)});
          if (pool.size() >= max_pool)
            break;
        }
      }
    }
    if (pool.size() == level_end)
      break;
    level_start = level_end;
  }
  return pool;
}

/**
 * Picks one signature per slot so that no two chosen signatures share a
 * value at any coordinate. Minimum-remaining-values order with forward
 * checking.
 */
class SeparatingSearch {
public:
  SeparatingSearch(const std::vector<std::vector<std::uint32_t>> &sig, std::size_t width,
                   std::size_t values, std::uint64_t max_nodes)
      : sig_(sig), width_(width), values_(values), max_nodes_(max_nodes),
        occ_(width * values, 0) {}

  std::optional<std::vector<std::size_t>> solve(std::vector<std::vector<std::size_t>> lists) {
    choice_.assign(lists.size(), 0);
    done_.assign(lists.size(), false);
    for (auto &l : lists)
      if (l.empty())
        return std::nullopt;
    if (recurse(lists))
      return choice_;
    return std::nullopt;
  }

  bool exhausted() const { return exhausted_; }

private:
  bool compatible(std::size_t c) const {
    for (std::size_t v = 0; v < width_; ++v)
      if (occ_[v * values_ + sig_[c][v]])
        return false;
    return true;
  }

  bool clash(std::size_t a, std::size_t b) const {
    for (std::size_t v = 0; v < width_; ++v)
      if (sig_[a][v] == sig_[b][v])
        return true;
    return false;
  }

  void mark(std::size_t c, std::uint8_t value) {
    for (std::size_t v = 0; v < width_; ++v)
      occ_[v * values_ + sig_[c][v]] = value;
  }

  bool recurse(const std::vector<std::vector<std::size_t>> &lists) {
    if (++nodes_ > max_nodes_) {
      exhausted_ = true;
      return false;
    }
    std::size_t slot = lists.size();
    for (std::size_t s = 0; s < lists.size(); ++s)
      if (!done_[s] && (slot == lists.size() || lists[s].size() < lists[slot].size()))
        slot = s;
    if (slot == lists.size())
      return true;

    for (auto c : lists[slot]) {
      if (!compatible(c))
        continue;
      std::vector<std::vector<std::size_t>> next(lists.size());
      bool dead = false;
      for (std::size_t s = 0; s < lists.size() && !dead; ++s) {
        if (done_[s] || s == slot)
          continue;
        for (auto d : lists[s])
          if (!clash(c, d))
            next[s].push_back(d);
        dead = next[s].empty();
      }
      if (dead)
        continue;
      mark(c, 1);
      done_[slot] = true;
      choice_[slot] = c;
      if (recurse(next))
        return true;
      done_[slot] = false;
      mark(c, 0);
      if (exhausted_)
        return false;
    }
    return false;
  }

  const std::vector<std::vector<std::uint32_t>> &sig_;
  std::size_t width_;
  std::size_t values_;
  std::uint64_t max_nodes_;
  std::uint64_t nodes_ = 0;
  bool exhausted_ = false;
  std::vector<std::uint8_t> occ_;
  std::vector<std::size_t> choice_;
  std::vector<bool> done_;
};

Word x_power_word(std::size_t k) {
  Word w;
  for (std::size_t i = 0; i < k; ++i) {
    w.symbols.push_back(Symbol::F2Inv);
    w.symbols.push_back(Symbol::F1);
  }
  return w;
}

} // namespace

AddressingResult phase_addressing(const Factorization &f, const PositionSystem &ps,
                                  const AddressingOptions &opts) {
  auto n = f.size();
  auto root = ps.root();
  auto pool = element_pool(f, opts.max_word_length ? opts.max_word_length : 4 * n, opts.max_pool);

  // Elements with the same cycle signature are interchangeable here.
  std::vector<std::vector<std::uint32_t>> sigs;
  std::vector<std::size_t> origin;
  std::set<std::vector<std::uint32_t>> seen;
  for (std::size_t e = 0; e < pool.size(); ++e) {
    std::vector<std::uint32_t> sig(n);
    for (Point v = 0; v < n; ++v)
      sig[v] = static_cast<std::uint32_t>(ps.cycle_of[pool[e].image(v)]);
    if (seen.insert(sig).second) {
      sigs.push_back(std::move(sig));
      origin.push_back(e);
    }
  }

  std::vector<std::vector<std::size_t>> lists(ps.r);
  for (std::size_t c = 0; c < sigs.size(); ++c)
    lists[sigs[c][root]].push_back(c);
  for (std::size_t i = 0; i < ps.r; ++i)
    if (lists[i].empty())
      throw PreconditionError("x-cycle " + std::to_string(i) +
                              " is not reached from the root by the covering group");

  // Signatures 0, 1, 2 come from ∅, [1], [2] when those are pairwise distinct.
  auto find_sig = [&](const Word &w) -> std::optional<std::size_t> {
    for (std::size_t c = 0; c < sigs.size(); ++c)
      if (pool[origin[c]].word == w)
        return c;
    return std::nullopt;
  };

  std::optional<std::vector<std::size_t>> chosen;
  bool forced_generators = false;
  {
    auto l = lists;
    l[0] = {0};
    auto s1 = find_sig(Word::of({1}));
    auto s2 = find_sig(Word::of({2}));
    if (s1 && s2 && sigs[*s1][root] != 0 && sigs[*s2][root] != 0 &&
        sigs[*s1][root] != sigs[*s2][root]) {
      l[sigs[*s1][root]] = {*s1};
      l[sigs[*s2][root]] = {*s2};
      SeparatingSearch search(sigs, n, ps.r, opts.max_nodes);
      chosen = search.solve(l);
      forced_generators = chosen.has_value();
    }
    if (!chosen) {
      SeparatingSearch search(sigs, n, ps.r, opts.max_nodes);
      chosen = search.solve(l);
    }
  }

  AddressingResult res;
  res.separated = chosen.has_value();
  res.generators_in_transversal = forced_generators;
  for (std::size_t i = 0; i < ps.r; ++i) {
    auto c = chosen ? (*chosen)[i] : lists[i].front();
    res.transversal.push_back(pool[origin[c]].word);
  }

  res.words.set_root(root);
  for (std::size_t i = 0; i < ps.r; ++i) {
    auto u = evaluate(res.transversal[i], f.f1, f.f2);
    auto sigma = ps.position_of[u(root)];
    res.shift.push_back(sigma);
    bool uniform = true;
    for (std::size_t j = 0; j < ps.m; ++j) {
      auto v = u(ps.cycles[0][j]);
      if (ps.cycle_of[v] != i || ps.position_of[v] != (j + sigma) % ps.m)
        uniform = false;
    }
    res.shift_uniform.push_back(uniform);
    for (std::size_t j = 0; j < ps.m; ++j)
      res.words.add(concat(x_power_word((j + ps.m - sigma) % ps.m), res.transversal[i]), f);
  }
  return res;
}

WordSet splice_generators(const WordSet &s0, const Factorization &f) {
  if (!s0.root())
    throw PreconditionError("splice_generators: word set has no root");
  auto root = *s0.root();
  auto n = f.size();
  std::vector<std::optional<std::size_t>> word_at(n);
  for (std::size_t i = 0; i < s0.size(); ++i) {
    auto t = s0.images()[i](root);
    if (word_at[t])
      throw PreconditionError("splice_generators: two words reach vertex " + std::to_string(t));
    word_at[t] = i;
  }
  Point targets[3] = {root, f.f1(root), f.f2(root)};
  if (targets[0] == targets[1] || targets[0] == targets[2] || targets[1] == targets[2])
    throw PreconditionError("splice_generators: root, F1(root), F2(root) are not distinct");

  auto words = s0.words();
  Word replacements[3] = {Word::empty(), Word::of({1}), Word::of({2})};
  for (int k = 0; k < 3; ++k) {
    if (!word_at[targets[k]])
      throw PreconditionError("splice_generators: no word reaches vertex " +
                              std::to_string(targets[k]));
    words[*word_at[targets[k]]] = replacements[k];
  }
  return WordSet(std::move(words), f, root);
}

std::optional<WordSet> search_sharply_transitive(const Factorization &f, Vertex root,
                                                 const CompletionOptions &opts) {
  auto n = f.size();
  Point targets[3] = {root, f.f1(root), f.f2(root)};
  if (n > 1 && (targets[0] == targets[1] || targets[0] == targets[2] || targets[1] == targets[2]))
    return std::nullopt;

  auto pool = element_pool(f, opts.max_word_length ? opts.max_word_length : 4 * n, opts.max_pool);
  std::vector<std::vector<std::uint32_t>> sigs;
  sigs.reserve(pool.size());
  for (const auto &c : pool) {
    auto im = c.image.images();
    sigs.emplace_back(im.begin(), im.end());
  }

  std::vector<std::vector<std::size_t>> lists(n);
  for (std::size_t e = 0; e < pool.size(); ++e)
    lists[pool[e].image(root)].push_back(e);
  Word forced[3] = {Word::empty(), Word::of({1}), Word::of({2})};
  for (int k = 0; k < (n > 1 ? 3 : 1); ++k) {
    auto &l = lists[targets[k]];
    auto it = std::find_if(l.begin(), l.end(), [&](std::size_t e) {
      return pool[e].image == evaluate(forced[k], f.f1, f.f2);
    });
    if (it == l.end())
      return std::nullopt;
    l = {*it};
  }

  SeparatingSearch search(sigs, n, n, opts.max_nodes);
  auto chosen = search.solve(lists);
  if (!chosen)
    return std::nullopt;
  WordSet out;
  out.set_root(root);
  for (auto e : *chosen)
    out.add(pool[e].word, f);
  return out;
}

} // namespace spanfact
