#include "spanfact/words.hpp"

#include <algorithm>
#include <unordered_map>

namespace spanfact {

WordSet::WordSet(std::vector<Word> words, const Factorization &f, std::optional<Vertex> root)
    : root_(root) {
  words_.reserve(words.size());
  images_.reserve(words.size());
  for (auto &w : words)
    add(std::move(w), f);
}

void WordSet::add(Word w, const Factorization &f) {
  images_.push_back(evaluate(w, f.f1, f.f2));
  words_.push_back(std::move(w));
}

bool WordSet::positive_only() const noexcept {
  return std::all_of(words_.begin(), words_.end(), [](const Word &w) { return w.is_positive(); });
}

bool WordSet::contains(const Word &w) const {
  return std::find(words_.begin(), words_.end(), w) != words_.end();
}

std::vector<std::pair<std::size_t, std::size_t>> WordSet::duplicates() const {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  std::unordered_map<Permutation, std::size_t> first;
  for (std::size_t i = 0; i < images_.size(); ++i) {
    auto [it, inserted] = first.emplace(images_[i], i);
    if (!inserted)
      out.emplace_back(it->second, i);
  }
  return out;
}

std::vector<Word> WordSet::sorted_words() const {
  auto out = words_;
  std::sort(out.begin(), out.end(), shortlex_less);
  return out;
}

} // namespace spanfact
