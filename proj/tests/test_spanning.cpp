#include <doctest.h>

#include "spanfact/errors.hpp"
#include "spanfact/spanning.hpp"
#include "support.hpp"

using namespace spanfact;

namespace {

Permutation P(std::vector<Point> v) { return Permutation(std::move(v)); }

} // namespace

TEST_CASE("equivalence and relocatability on the toy digraph") {
  auto f = build_toy(3).canonical;
  auto w = Word::of({2, 1, 1});
  CHECK(equivalent(w, w, f));
  CHECK(equivalent(Word::of({1, 1, 1}), Word::empty(), f));
  CHECK_FALSE(equivalent(Word::of({1}), Word::of({2}), f));
  CHECK_FALSE(relocatable(w, w, f));
  CHECK(relocatable(Word::empty(), Word::of({1}), f));
  CHECK(relocatable(Word::of({1}), Word::of({2}), f));
}

TEST_CASE("property: relocatability is symmetric and equivalence is transitive") {
  testing::Rng rng(99);
  auto f = build_toy(5).canonical;
  for (int trial = 0; trial < 300; ++trial) {
    auto a = testing::random_word(rng, 5, false);
    auto b = testing::random_word(rng, 5, false);
    auto c = testing::random_word(rng, 5, false);
    CHECK(relocatable(a, b, f) == relocatable(b, a, f));
    CHECK(equivalent(a, b, f) == equivalent(b, a, f));
    if (equivalent(a, b, f) && equivalent(b, c, f))
      CHECK(equivalent(a, c, f));
  }
}

TEST_CASE("sharply transitive verifier") {
  Factorization one{Permutation::identity(1), Permutation::identity(1), 0};
  CHECK(verify_sharply_transitive(WordSet({Word::empty()}, one), one).passed);

  auto f = build_toy(3).canonical;
  WordSet good({Word::empty(), Word::of({1}), Word::of({1, 1}), Word::of({2}), Word::of({2, 1}),
                Word::of({2, 1, 1})},
               f);
  CHECK(verify_sharply_transitive(good, f).passed);

  WordSet dup({Word::empty(), Word::of({1}), Word::of({1, 1, 1}), Word::of({2}),
               Word::of({2, 1}), Word::of({2, 1, 1})},
              f);
  auto rep = verify_sharply_transitive(dup, f);
  CHECK_FALSE(rep.passed);
  REQUIRE(rep.violating_words);
  CHECK(*rep.violating_words == std::pair<std::size_t, std::size_t>{0, 2});
  CHECK(dup.duplicates().size() == 1);

  WordSet small({Word::empty(), Word::of({1})}, f);
  CHECK_FALSE(verify_sharply_transitive(small, f).size_ok);
}

TEST_CASE("property: the two verifier readings agree") {
  testing::Rng rng(314);
  for (std::size_t m : {3, 4}) {
    auto f = build_toy(m).canonical;
    auto n = f.size();
    for (int trial = 0; trial < 300; ++trial) {
      std::vector<Word> words{Word::empty()};
      while (words.size() < n)
        words.push_back(testing::random_word(rng, 4, true));
      auto rep = verify_sharply_transitive(WordSet(words, f), f);
      CHECK(rep.pairwise_relocatable == rep.unique_transfer);
    }
  }
}

TEST_CASE("tree search on a one-vertex digraph") {
  Factorization one{Permutation::identity(1), Permutation::identity(1), 0};
  auto res = max_relocatable_tree(one);
  CHECK(res.max_size == 1);
  CHECK(res.certified);
  CHECK(res.tree.words() == std::vector<Word>{Word::empty()});
}

TEST_CASE("tree search matches the naive enumerator on small digraphs") {
  for (const auto &[name, d] : testing::small_corpus()) {
    auto fam = enumerate_factorizations(d);
    for (const auto &f : fam.members) {
      CAPTURE(name);
      CAPTURE(f.orientation);
      auto res = max_relocatable_tree(f);
      REQUIRE(res.certified);
      CHECK(res.max_size ==
            testing::naive_max_tree(testing::images_of(f.f1), testing::images_of(f.f2)));
      auto check = check_relocatable_tree(res.tree.words(), f);
      CHECK_MESSAGE(check.ok, check.reason);
    }
  }
}

TEST_CASE("canonical witness is stable") {
  auto f = build_toy(4).canonical;
  auto a = max_relocatable_tree(f);
  auto b = max_relocatable_tree(f);
  CHECK(a.tree.words() == b.tree.words());
  CHECK(a.tree.words() == a.tree.sorted_words());
}

TEST_CASE("tree search budget") {
  auto inst = build_instance(fixture_config("a5-ex2"));
  auto f = enumerate_factorizations(inst.graph()).members[0];
  TreeSearchOptions opts;
  opts.max_nodes = 100;
  auto res = max_relocatable_tree(f, opts);
  CHECK(res.budget_exhausted);
  CHECK_FALSE(res.certified);
  CHECK(check_relocatable_tree(res.tree.words(), f).ok);
}

TEST_CASE("relocatable tree checker") {
  auto f = build_toy(3).canonical;
  std::vector<Word> chain{Word::empty(), Word::of({1}), Word::of({1, 1})};
  CHECK(check_relocatable_tree(chain, f).ok);
  std::vector<Word> gap{Word::empty(), Word::of({1, 2})};
  CHECK_FALSE(check_relocatable_tree(gap, f).ok);
  std::vector<Word> branch{Word::empty(), Word::of({2}), Word::of({1, 2})};
  CHECK(check_relocatable_tree(branch, f, PrefixConvention::DropLastApplied).ok);
  std::vector<Word> other{Word::empty(), Word::of({2}), Word::of({2, 1})};
  CHECK_FALSE(check_relocatable_tree(other, f, PrefixConvention::DropLastApplied).ok);
  CHECK_FALSE(check_relocatable_tree({Word::of({1})}, f).ok);
  std::vector<Word> clash{Word::empty(), Word::of({1}), Word::of({1, 1}), Word::of({1, 1, 1})};
  CHECK_FALSE(check_relocatable_tree(clash, f).ok);
}

TEST_CASE("addressing with a single x-cycle") {
  Factorization f{P({1, 2, 3, 4, 0}), P({2, 3, 4, 0, 1}), 0};
  auto ps = position_system(f);
  auto res = phase_addressing(f, ps);
  REQUIRE(res.transversal.size() == 1);
  CHECK(res.transversal[0].is_empty());
  for (std::size_t j = 0; j < 5; ++j)
    CHECK(res.words.images()[j] == power(ps.x, static_cast<long long>(j)));
}

TEST_CASE("addressing and splicing on Example 3") {
  auto inst = build_instance(fixture_config("a5-ex3"));
  auto fam = enumerate_factorizations(inst.graph());
  std::size_t passing = 0;
  for (const auto &f : fam.members) {
    auto ps = position_system(f);
    auto res = phase_addressing(f, ps);
    CHECK(res.words.size() == 30);
    std::set<Vertex> hit;
    for (const auto &img : res.words.images())
      hit.insert(img(ps.root()));
    CHECK(hit.size() == 30);

    auto spliced = splice_generators(res.words, f);
    std::set<Vertex> hit2;
    for (const auto &img : spliced.images())
      hit2.insert(img(ps.root()));
    CHECK(hit2 == hit);
    CHECK(spliced.contains(Word::empty()));
    CHECK(spliced.contains(Word::of({1})));
    CHECK(spliced.contains(Word::of({2})));
    bool sharp = verify_sharply_transitive(spliced, f).passed;
    if (res.separated)
      CHECK(sharp);
    passing += sharp;
  }
  CHECK(passing > 0);
}

TEST_CASE("splice leaves a set that already has the generators") {
  auto f = build_toy(3).canonical;
  WordSet s({Word::empty(), Word::of({1}), Word::of({1, 1}), Word::of({2}), Word::of({2, 1}),
             Word::of({2, 1, 1})},
            f, 0);
  auto out = splice_generators(s, f);
  CHECK(out.words() == s.words());
  WordSet no_root(s.words(), f);
  CHECK_THROWS_AS(splice_generators(no_root, f), PreconditionError);
}

TEST_CASE("completion search on the toy family") {
  for (std::size_t m : {3, 4, 5}) {
    auto f = build_toy(m).canonical;
    auto res = search_sharply_transitive(f, 0);
    REQUIRE(res);
    CHECK(verify_sharply_transitive(*res, f).passed);
    CHECK(res->contains(Word::of({1})));
    CHECK(res->contains(Word::of({2})));
  }
}
