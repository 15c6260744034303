#include "wordorder/word_poset.hpp"

#include <algorithm>
#include <numeric>

namespace wordorder {

void BitMatrix::or_row(std::size_t dst, std::size_t src) {
  for (std::size_t k = 0; k < stride_; ++k) bits_[dst * stride_ + k] |= bits_[src * stride_ + k];
}

bool BitMatrix::row_subset(std::size_t sub, std::size_t sup) const {
  for (std::size_t k = 0; k < stride_; ++k)
    if (bits_[sub * stride_ + k] & ~bits_[sup * stride_ + k]) return false;
  return true;
}

bool BitMatrix::rows_intersect(std::size_t i, const BitMatrix& other, std::size_t j) const {
  for (std::size_t k = 0; k < stride_; ++k)
    if (bits_[i * stride_ + k] & other.bits_[j * other.stride_ + k]) return true;
  return false;
}

std::vector<Word> enumerate_words(const Poset& alphabet, int max_len, std::size_t node_cap) {
  if (max_len < 0) throw Error(ErrorKind::ValidationError, "max_len must be non-negative");
  const std::size_t n = alphabet.size();

  std::size_t total = 1;
  for (std::size_t len = 1, layer = 1; n > 0 && len <= static_cast<std::size_t>(max_len); ++len) {
    layer = (layer > node_cap / n) ? node_cap + 1 : layer * n;
    total += layer;
    if (total > node_cap)
      throw Error(ErrorKind::SizeLimit, "window exceeds the node cap of " +
                                            std::to_string(node_cap) + " words");
  }

  std::vector<Word> words;
  words.reserve(total);
  words.emplace_back();  // the empty word
  if (n == 0) return words;
  for (int len = 1; len <= max_len; ++len) {
    Word w(static_cast<std::size_t>(len), 0);
    while (true) {
      words.push_back(w);
      // odometer increment, most significant position first
      int pos = len - 1;
      while (pos >= 0 && w[static_cast<std::size_t>(pos)] == static_cast<LetterId>(n - 1)) {
        w[static_cast<std::size_t>(pos)] = 0;
        --pos;
      }
      if (pos < 0) break;
      ++w[static_cast<std::size_t>(pos)];
    }
  }
  return words;
}

std::vector<std::pair<int, int>> transitive_reduction(const BitMatrix& leq) {
  const std::size_t n = leq.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (!leq.get(i, i)) throw Error(ErrorKind::NotAPoset, "relation is not reflexive");
    for (std::size_t j = i + 1; j < n; ++j)
      if (leq.get(i, j) && leq.get(j, i))
        throw Error(ErrorKind::NotAPoset, "relation is not antisymmetric");
  }

  BitMatrix strict_up = leq;
  for (std::size_t i = 0; i < n; ++i) strict_up.clear(i, i);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (strict_up.get(i, j) && !leq.row_subset(j, i))
        throw Error(ErrorKind::NotAPoset, "relation is not transitive");

  BitMatrix strict_down(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (strict_up.get(i, j)) strict_down.set(j, i);

  std::vector<std::pair<int, int>> covers;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (strict_up.get(i, j) && !strict_up.rows_intersect(i, strict_down, j))
        covers.emplace_back(static_cast<int>(i), static_cast<int>(j));
  return covers;
}

std::vector<std::vector<int>> connected_components(
    std::size_t n, const std::vector<std::pair<int, int>>& covers) {
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto root = [&](int x) {
    while (parent[static_cast<std::size_t>(x)] != x) {
      parent[static_cast<std::size_t>(x)] =
          parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
      x = parent[static_cast<std::size_t>(x)];
    }
    return x;
  };
  for (const auto& [a, b] : covers) {
    int ra = root(a), rb = root(b);
    if (ra != rb) parent[static_cast<std::size_t>(std::max(ra, rb))] = std::min(ra, rb);
  }

  std::vector<std::vector<int>> groups(n);
  for (std::size_t i = 0; i < n; ++i)
    groups[static_cast<std::size_t>(root(static_cast<int>(i)))].push_back(static_cast<int>(i));
  std::vector<std::vector<int>> components;
  for (auto& g : groups)
    if (!g.empty()) components.push_back(std::move(g));  // already ascending, keyed by minimum
  return components;
}

WordPosetGraph build_word_poset(const Augmentation& aug, int max_len, std::size_t node_cap) {
  const auto words = enumerate_words(aug.working(), max_len, node_cap);
  const std::size_t n = words.size();

  WordPosetGraph g;
  g.leq = BitMatrix(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (leq_induced(aug, words[i], words[j])) g.leq.set(i, j);

  g.covers = transitive_reduction(g.leq);
  g.components = connected_components(n, g.covers);

  g.words.reserve(n);
  const Poset& work = aug.working();
  for (const Word& w : words) {
    std::vector<std::string> spelled;
    spelled.reserve(w.size());
    for (LetterId x : w) spelled.push_back(work.name(x));
    g.words.push_back(std::move(spelled));
  }
  return g;
}

}  // namespace wordorder
