#include "spanfact/perm.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>

#include "spanfact/errors.hpp"

namespace spanfact {

Permutation::Permutation(std::vector<Point> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (auto v : images_) {
    if (v >= images_.size() || seen[v])
      throw InvalidPermutationError("image array is not a bijection on " +
                                    std::to_string(images_.size()) + " points");
    seen[v] = true;
  }
}

Permutation Permutation::identity(std::size_t n) {
  std::vector<Point> id(n);
  for (std::size_t i = 0; i < n; ++i)
    id[i] = static_cast<Point>(i);
  return Permutation(std::move(id), Unchecked{});
}

bool Permutation::is_identity() const noexcept {
  for (std::size_t i = 0; i < images_.size(); ++i)
    if (images_[i] != i)
      return false;
  return true;
}

Permutation compose(const Permutation &g, const Permutation &f) {
  if (g.size() != f.size())
    throw SizeMismatchError("compose: degrees " + std::to_string(g.size()) + " and " +
                            std::to_string(f.size()));
  std::vector<Point> out(f.size());
  for (std::size_t v = 0; v < f.size(); ++v)
    out[v] = g.images_[f.images_[v]];
  return Permutation(std::move(out), Permutation::Unchecked{});
}

Permutation inverse(const Permutation &p) {
  std::vector<Point> out(p.size());
  for (std::size_t v = 0; v < p.size(); ++v)
    out[p.images_[v]] = static_cast<Point>(v);
  return Permutation(std::move(out), Permutation::Unchecked{});
}

Permutation power(const Permutation &p, long long k) {
  Permutation base = k < 0 ? inverse(p) : p;
  unsigned long long e = k < 0 ? static_cast<unsigned long long>(-k)
                               : static_cast<unsigned long long>(k);
  Permutation result = Permutation::identity(p.size());
  while (e) {
    if (e & 1)
      result = compose(base, result);
    base = compose(base, base);
    e >>= 1;
  }
  return result;
}

std::string CycleType::str() const {
  std::string s = "(";
  for (std::size_t i = 0; i < lengths.size(); ++i) {
    if (i)
      s += ',';
    s += std::to_string(lengths[i]);
  }
  return s + ")";
}

std::vector<std::vector<Point>> orbits(const Permutation &p) {
  std::vector<std::vector<Point>> out;
  std::vector<bool> seen(p.size(), false);
  for (Point v = 0; v < p.size(); ++v) {
    if (seen[v])
      continue;
    auto &cycle = out.emplace_back();
    for (Point w = v; !seen[w]; w = p(w)) {
      seen[w] = true;
      cycle.push_back(w);
    }
  }
  return out;
}

CycleType cycle_type(const Permutation &p) {
  CycleType ct;
  for (const auto &c : orbits(p))
    ct.lengths.push_back(c.size());
  std::sort(ct.lengths.begin(), ct.lengths.end());
  return ct;
}

bool is_derangement(const Permutation &p) {
  for (Point v = 0; v < p.size(); ++v)
    if (p(v) == v)
      return false;
  return true;
}

std::string format_cycles(const Permutation &p) {
  std::string s;
  for (const auto &c : orbits(p)) {
    if (c.size() < 2)
      continue;
    s += '(';
    for (std::size_t i = 0; i < c.size(); ++i) {
      if (i)
        s += ' ';
      s += std::to_string(c[i]);
    }
    s += ')';
  }
  return s.empty() ? "()" : s;
}

std::string format_one_line(const Permutation &p) {
  std::string s = "[";
  for (Point v = 0; v < p.size(); ++v) {
    if (v)
      s += ',';
    s += std::to_string(p(v));
  }
  return s + "]";
}

namespace {

struct Scanner {
  std::string_view text;
  std::size_t pos = 0;

  void skip_ws() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos])))
      ++pos;
  }
  bool done() {
    skip_ws();
    return pos >= text.size();
  }
  char peek() { return done() ? '\0' : text[pos]; }

  [[noreturn]] void fail(const std::string &what) const {
    auto tok = text.substr(std::min(pos, text.size()), 8);
    throw ParseError("", std::string(tok), "permutation '" + std::string(text) + "': " + what +
                                               " at offset " + std::to_string(pos));
  }

  Point number() {
    skip_ws();
    Point v = 0;
    auto begin = text.data() + pos;
    auto [ptr, ec] = std::from_chars(begin, text.data() + text.size(), v);
    if (ec != std::errc{} || ptr == begin)
      fail("expected a point index");
    pos += static_cast<std::size_t>(ptr - begin);
    return v;
  }
};

std::vector<std::vector<Point>> scan_cycles(std::string_view text) {
  Scanner sc{text};
  std::vector<std::vector<Point>> cycles;
  if (sc.done())
    sc.fail("empty string");
  while (!sc.done()) {
    if (sc.peek() != '(')
      sc.fail("expected '('");
    ++sc.pos;
    auto &c = cycles.emplace_back();
    while (sc.peek() != ')') {
      if (sc.done())
        sc.fail("unterminated cycle");
      c.push_back(sc.number());
      if (sc.peek() == ',')
        ++sc.pos;
    }
    ++sc.pos;
  }
  return cycles;
}

} // namespace

std::optional<Point> max_point_in(std::string_view text) {
  std::optional<Point> best;
  auto consider = [&](Point v) { best = best ? std::max(*best, v) : v; };
  auto trimmed = text;
  while (!trimmed.empty() && std::isspace(static_cast<unsigned char>(trimmed.front())))
    trimmed.remove_prefix(1);
  if (!trimmed.empty() && trimmed.front() == '[') {
    auto p = parse_permutation(text);
    if (p.size() > 0)
      consider(static_cast<Point>(p.size() - 1));
    return best;
  }
  for (const auto &c : scan_cycles(text))
    for (auto v : c)
      consider(v);
  return best;
}

Permutation parse_permutation(std::string_view text, std::optional<std::size_t> degree) {
  Scanner sc{text};
  if (sc.peek() == '[') {
    ++sc.pos;
    std::vector<Point> images;
    while (sc.peek() != ']') {
      if (sc.done())
        sc.fail("unterminated one-line form");
      images.push_back(sc.number());
      if (sc.peek() == ',')
        ++sc.pos;
    }
    ++sc.pos;
    if (!sc.done())
      sc.fail("trailing characters");
    if (degree && *degree != images.size())
      throw ParseError("", std::string(text),
                       "one-line form has " + std::to_string(images.size()) +
                           " points, expected " + std::to_string(*degree));
    try {
      return Permutation(std::move(images));
    } catch (const InvalidPermutationError &e) {
      throw ParseError("", std::string(text), e.what());
    }
  }

  auto cycles = scan_cycles(text);
  std::size_t n = degree.value_or(0);
  if (!degree) {
    for (const auto &c : cycles)
      for (auto v : c)
        n = std::max<std::size_t>(n, v + 1);
  }
  std::vector<Point> images(n);
  for (std::size_t i = 0; i < n; ++i)
    images[i] = static_cast<Point>(i);
  std::vector<bool> used(n, false);
  for (const auto &c : cycles) {
    for (std::size_t i = 0; i < c.size(); ++i) {
      if (c[i] >= n)
        throw ParseError("", std::to_string(c[i]),
                         "point out of range for degree " + std::to_string(n));
      if (used[c[i]])
        throw ParseError("", std::to_string(c[i]), "point repeated in cycle notation");
      used[c[i]] = true;
      images[c[i]] = c[(i + 1) % c.size()];
    }
  }
  return Permutation(std::move(images));
}

// ---------------------------------------------------------------------------

Word Word::of(std::initializer_list<int> written) {
  Word w;
  for (int s : written) {
    switch (s) {
    case 1: w.symbols.push_back(Symbol::F1); break;
    case 2: w.symbols.push_back(Symbol::F2); break;
    case -1: w.symbols.push_back(Symbol::F1Inv); break;
    case -2: w.symbols.push_back(Symbol::F2Inv); break;
    default: throw ParseError("", std::to_string(s), "word symbols are 1, 2, -1, -2");
    }
  }
  return w;
}

bool Word::is_positive() const noexcept {
  return std::all_of(symbols.begin(), symbols.end(),
                     [](Symbol s) { return s == Symbol::F1 || s == Symbol::F2; });
}

Word Word::then(Symbol s) const {
  Word w;
  w.symbols.reserve(symbols.size() + 1);
  w.symbols.push_back(s);
  w.symbols.insert(w.symbols.end(), symbols.begin(), symbols.end());
  return w;
}

Word concat(const Word &u, const Word &v) {
  Word w = u;
  w.symbols.insert(w.symbols.end(), v.symbols.begin(), v.symbols.end());
  return w;
}

bool shortlex_less(const Word &a, const Word &b) {
  if (a.length() != b.length())
    return a.length() < b.length();
  return a.symbols < b.symbols;
}

std::string format_word(const Word &w) {
  if (w.is_empty())
    return "e";
  std::string s;
  for (auto it = w.symbols.rbegin(); it != w.symbols.rend(); ++it) {
    switch (*it) {
    case Symbol::F1: s += "1"; break;
    case Symbol::F2: s += "2"; break;
    case Symbol::F1Inv: s += "1'"; break;
    case Symbol::F2Inv: s += "2'"; break;
    }
  }
  return s;
}

Word parse_word(std::string_view text) {
  Word w;
  if (text == "e" || text.empty())
    return w;
  std::vector<Symbol> applied;
  for (std::size_t i = 0; i < text.size(); ++i) {
    char c = text[i];
    if (c != '1' && c != '2')
      throw ParseError("", std::string(1, c), "word '" + std::string(text) + "': expected 1 or 2");
    bool inv = i + 1 < text.size() && text[i + 1] == '\'';
    if (inv)
      ++i;
    if (c == '1')
      applied.push_back(inv ? Symbol::F1Inv : Symbol::F1);
    else
      applied.push_back(inv ? Symbol::F2Inv : Symbol::F2);
  }
  w.symbols.assign(applied.rbegin(), applied.rend());
  return w;
}

Permutation evaluate(const Word &w, const Permutation &f1, const Permutation &f2) {
  if (f1.size() != f2.size())
    throw SizeMismatchError("evaluate: factors of different degree");
  Permutation f1inv, f2inv;
  bool need_inv = !w.is_positive();
  if (need_inv) {
    f1inv = inverse(f1);
    f2inv = inverse(f2);
  }
  Permutation result = Permutation::identity(f1.size());
  for (auto it = w.symbols.rbegin(); it != w.symbols.rend(); ++it) {
    switch (*it) {
    case Symbol::F1: result = compose(f1, result); break;
    case Symbol::F2: result = compose(f2, result); break;
    case Symbol::F1Inv: result = compose(f1inv, result); break;
    case Symbol::F2Inv: result = compose(f2inv, result); break;
    }
  }
  return result;
}

} // namespace spanfact
