#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "spanfact/digraph.hpp"
#include "spanfact/perm.hpp"

namespace spanfact {

/// Words with their evaluated permutations under a fixed factorization.
class WordSet {
public:
  WordSet() = default;
  WordSet(std::vector<Word> words, const Factorization &f,
          std::optional<Vertex> root = std::nullopt);

  void add(Word w, const Factorization &f);

  std::size_t size() const noexcept { return words_.size(); }
  const std::vector<Word> &words() const noexcept { return words_; }
  const std::vector<Permutation> &images() const noexcept { return images_; }
  std::optional<Vertex> root() const noexcept { return root_; }
  void set_root(std::optional<Vertex> r) noexcept { root_ = r; }

  bool positive_only() const noexcept;
  bool contains(const Word &w) const;

  /// Index pairs whose words evaluate to the same permutation.
  std::vector<std::pair<std::size_t, std::size_t>> duplicates() const;

  /// Words sorted shortlex, for stable output.
  std::vector<Word> sorted_words() const;

private:
  std::vector<Word> words_;
  std::vector<Permutation> images_;
  std::optional<Vertex> root_;
};

} // namespace spanfact
