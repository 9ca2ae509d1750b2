#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace spanfact {

using Point = std::uint32_t;

/**
 * A bijection on {0, ..., n-1} stored as its image array.
 *
 * Products follow the right-to-left convention used everywhere in the
 * library: compose(g, f) applies f first, then g.
 */
class Permutation {
public:
  Permutation() = default;

  /// Throws InvalidPermutationError unless `images` is a bijection.
  explicit Permutation(std::vector<Point> images);

  static Permutation identity(std::size_t n);

  std::size_t size() const noexcept { return images_.size(); }
  Point operator()(Point v) const { return images_[v]; }
  Point operator[](Point v) const { return images_[v]; }
  std::span<const Point> images() const noexcept { return images_; }

  bool is_identity() const noexcept;

  friend bool operator==(const Permutation &, const Permutation &) = default;
  friend auto operator<=>(const Permutation &, const Permutation &) = default;

private:
  struct Unchecked {};
  Permutation(std::vector<Point> images, Unchecked) : images_(std::move(images)) {}

  friend Permutation compose(const Permutation &, const Permutation &);
  friend Permutation inverse(const Permutation &);

  std::vector<Point> images_;
};

/// g after f: result(v) = g(f(v)).
Permutation compose(const Permutation &g, const Permutation &f);
Permutation inverse(const Permutation &p);
Permutation power(const Permutation &p, long long k);

struct CycleType {
  std::vector<std::size_t> lengths; // ascending

  std::string str() const; // "(3,3,18)"
  friend bool operator==(const CycleType &, const CycleType &) = default;
  friend auto operator<=>(const CycleType &, const CycleType &) = default;
};

CycleType cycle_type(const Permutation &p);

/// Cycles sorted by minimum element, each listed from its minimum.
std::vector<std::vector<Point>> orbits(const Permutation &p);

bool is_derangement(const Permutation &p);

/// Cycle notation "(0 2)(1 3)", fixed points omitted, identity "()".
std::string format_cycles(const Permutation &p);
/// One-line notation "[1,2,0]".
std::string format_one_line(const Permutation &p);

/**
 * Parses cycle notation or one-line notation. `degree` is required for
 * cycle notation (points above the largest mentioned one are fixed); it
 * must match the array length for one-line notation when given.
 */
Permutation parse_permutation(std::string_view text,
                              std::optional<std::size_t> degree = std::nullopt);

/// Largest point mentioned in a cycle-notation string, if any.
std::optional<Point> max_point_in(std::string_view text);

// ---------------------------------------------------------------------------
// Words over the two factors

enum class Symbol : std::uint8_t { F1, F2, F1Inv, F2Inv };

/**
 * A walk w = s_k ... s_2 s_1. `symbols` holds the written order, so
 * symbols.front() is applied last and symbols.back() first.
 */
struct Word {
  std::vector<Symbol> symbols;

  static Word empty() { return {}; }
  static Word of(std::initializer_list<int> written); // 1,2 and -1,-2

  bool is_empty() const noexcept { return symbols.empty(); }
  std::size_t length() const noexcept { return symbols.size(); }
  bool is_positive() const noexcept;

  /// s·w: the walk w followed by one more step s.
  Word then(Symbol s) const;

  friend bool operator==(const Word &, const Word &) = default;
  friend auto operator<=>(const Word &, const Word &) = default;
};

/// u·v: v is applied first.
Word concat(const Word &u, const Word &v);

/// Orders by length, then lexicographically over the written symbols.
bool shortlex_less(const Word &a, const Word &b);

/**
 * Text form in application order: "112" applies F1, F1, then F2, i.e. the
 * word F2 F1 F1. Inverses carry a trailing apostrophe ("2'1"). The empty
 * word is "e".
 */
std::string format_word(const Word &w);
Word parse_word(std::string_view text);

Permutation evaluate(const Word &w, const Permutation &f1, const Permutation &f2);

} // namespace spanfact

template <> struct std::hash<spanfact::Permutation> {
  std::size_t operator()(const spanfact::Permutation &p) const noexcept {
    std::size_t h = 1469598103934665603ull;
    for (auto v : p.images()) {
      h ^= v;
      h *= 1099511628211ull;
    }
    return h;
  }
};
