#include <doctest.h>

#include "spanfact/digraph.hpp"
#include "spanfact/errors.hpp"
#include "spanfact/perm.hpp"
#include "support.hpp"

using namespace spanfact;
using spanfact::testing::Rng;

namespace {

Permutation P(std::vector<Point> v) { return Permutation(std::move(v)); }

} // namespace

TEST_CASE("construction rejects non-bijections") {
  CHECK_THROWS_AS(P({0, 0, 1}), InvalidPermutationError);
  CHECK_THROWS_AS(P({0, 3}), InvalidPermutationError);
  CHECK(P({2, 0, 1}).size() == 3);
}

TEST_CASE("compose applies the right factor first") {
  auto toy = build_toy(3);
  const auto &f1 = toy.canonical.f1;
  const auto &f2 = toy.canonical.f2;
  CHECK(f1 == P({1, 2, 0, 4, 5, 3}));
  CHECK(f2 == P({4, 5, 3, 1, 2, 0}));
  CHECK(compose(f1, Permutation::identity(6)) == f1);
  CHECK(compose(inverse(f2), f1) == P({3, 4, 5, 0, 1, 2}));
  CHECK(compose(f1, inverse(f1)).is_identity());
  CHECK_THROWS_AS(compose(f1, Permutation::identity(5)), SizeMismatchError);
}

TEST_CASE("inverse") {
  auto f2 = build_toy(3).canonical.f2;
  CHECK(inverse(Permutation::identity(4)).is_identity());
  CHECK(inverse(f2) == P({5, 3, 4, 2, 0, 1}));
  CHECK(inverse(inverse(f2)) == f2);
}

TEST_CASE("power") {
  auto c = P({1, 2, 3, 4, 0});
  CHECK(power(c, 5).is_identity());
  CHECK(power(c, -1) == inverse(c));
  CHECK(power(c, 7) == compose(c, c));
}

TEST_CASE("cycle types and orbits") {
  auto toy = build_toy(3);
  CHECK(cycle_type(Permutation::identity(6)).str() == "(1,1,1,1,1,1)");
  CHECK(cycle_type(toy.canonical.f2).str() == "(6)");
  auto x = toy.canonical.x();
  CHECK(orbits(x) == std::vector<std::vector<Point>>{{0, 3}, {1, 4}, {2, 5}});
  CHECK(orbits(Permutation::identity(3)).size() == 3);
  CHECK(orbits(toy.canonical.f2) == std::vector<std::vector<Point>>{{0, 4, 2, 3, 1, 5}});
}

TEST_CASE("derangements") {
  CHECK_FALSE(is_derangement(Permutation::identity(3)));
  CHECK(is_derangement(build_toy(3).canonical.x()));
  CHECK_FALSE(is_derangement(P({0, 2, 1})));
}

TEST_CASE("evaluate") {
  auto f = build_toy(3).canonical;
  CHECK(evaluate(Word::empty(), f.f1, f.f2).is_identity());
  CHECK(evaluate(Word::of({1}), f.f1, f.f2) == f.f1);
  CHECK(evaluate(Word::of({2, 1}), f.f1, f.f2) == P({5, 3, 4, 2, 0, 1}));
  CHECK(evaluate(Word::of({-2, 1}), f.f1, f.f2) == f.x());
}

TEST_CASE("word text form is in application order") {
  auto w = Word::of({2, 1, 1});
  CHECK(format_word(w) == "112");
  CHECK(parse_word("112") == w);
  CHECK(format_word(Word::empty()) == "e");
  CHECK(parse_word("e").is_empty());
  CHECK(format_word(Word::of({-2, 1})) == "12'");
  CHECK(parse_word("12'") == Word::of({-2, 1}));
  CHECK_THROWS_AS(parse_word("13"), ParseError);
}

TEST_CASE("cycle notation round trip") {
  auto p = parse_permutation("(0 2)(1 3)", 5);
  CHECK(format_cycles(p) == "(0 2)(1 3)");
  CHECK(format_cycles(Permutation::identity(3)) == "()");
  CHECK(parse_permutation("()", 3).is_identity());
  CHECK(parse_permutation(format_one_line(p)) == p);
  CHECK(format_one_line(P({1, 2, 0})) == "[1,2,0]");
  CHECK_THROWS_AS(parse_permutation("(0 1", 3), ParseError);
  CHECK_THROWS_AS(parse_permutation("(0 5)", 3), ParseError);
  CHECK_THROWS_AS(parse_permutation("[0,0]"), ParseError);
}

TEST_CASE("property: algebra laws on random permutations") {
  Rng rng(20240611);
  for (int trial = 0; trial < 200; ++trial) {
    std::size_t n = 1 + rng() % 12;
    auto a = testing::random_permutation(rng, n);
    auto b = testing::random_permutation(rng, n);
    auto c = testing::random_permutation(rng, n);
    CHECK(compose(compose(a, b), c) == compose(a, compose(b, c)));
    CHECK(compose(a, Permutation::identity(n)) == a);
    CHECK(compose(Permutation::identity(n), a) == a);
    CHECK(compose(a, inverse(a)).is_identity());

    auto oa = orbits(a);
    auto ob = orbits(inverse(a));
    std::vector<std::set<Point>> sa, sb;
    for (auto &o : oa)
      sa.emplace_back(o.begin(), o.end());
    for (auto &o : ob)
      sb.emplace_back(o.begin(), o.end());
    CHECK(sa == sb);

    auto ct = cycle_type(a);
    bool has_one = std::find(ct.lengths.begin(), ct.lengths.end(), 1u) != ct.lengths.end();
    CHECK(is_derangement(a) == !has_one);
    CHECK(parse_permutation(format_cycles(a), n) == a);
    CHECK(parse_permutation(format_one_line(a)) == a);
  }
}

TEST_CASE("property: evaluation respects concatenation") {
  Rng rng(7);
  auto f = build_toy(4).canonical;
  for (int trial = 0; trial < 200; ++trial) {
    auto u = testing::random_word(rng, 6, false);
    auto v = testing::random_word(rng, 6, false);
    CHECK(evaluate(concat(u, v), f.f1, f.f2) ==
          compose(evaluate(u, f.f1, f.f2), evaluate(v, f.f1, f.f2)));
    CHECK(parse_word(format_word(u)) == u);
  }
}
