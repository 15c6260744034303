#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "wordorder/induced.hpp"

namespace wordorder {

/// Square bit matrix; row i holds the set {j : (i, j)}.
class BitMatrix {
 public:
  BitMatrix() = default;
  explicit BitMatrix(std::size_t n) : n_(n), stride_((n + 63) / 64), bits_(n * stride_, 0) {}

  std::size_t size() const noexcept { return n_; }

  bool get(std::size_t i, std::size_t j) const {
    return bits_[i * stride_ + j / 64] >> (j % 64) & 1;
  }
  void set(std::size_t i, std::size_t j) {
    bits_[i * stride_ + j / 64] |= std::uint64_t{1} << (j % 64);
  }
  void clear(std::size_t i, std::size_t j) {
    bits_[i * stride_ + j / 64] &= ~(std::uint64_t{1} << (j % 64));
  }

  /// row[dst] |= row[src]
  void or_row(std::size_t dst, std::size_t src);
  /// row[sub] subset of row[sup]?
  bool row_subset(std::size_t sub, std::size_t sup) const;
  /// row i of *this intersects row j of other?
  bool rows_intersect(std::size_t i, const BitMatrix& other, std::size_t j) const;

  bool operator==(const BitMatrix&) const = default;

 private:
  std::size_t n_ = 0;
  std::size_t stride_ = 0;
  std::vector<std::uint64_t> bits_;
};

/// A window of an induced word poset: every word up to a length bound, the
/// full order on the window, its covering edges and connected components.
/// Words are spelled as letter-name sequences; the empty word is the empty
/// sequence. Deterministic: two builds of the same inputs are identical.
struct WordPosetGraph {
  std::vector<std::vector<std::string>> words;  // canonical order, empty word first
  BitMatrix leq;                                // word i <= word j
  std::vector<std::pair<int, int>> covers;      // lesser -> greater, sorted by index
  std::vector<std::vector<int>> components;     // each ascending; ordered by minimal word

  bool operator==(const WordPosetGraph&) const = default;
};

/// All words of length 0..max_len in canonical order: by length, then
/// lexicographically by letter index. Throws SizeLimit when the window
/// would exceed `node_cap` words, ValidationError for negative max_len.
std::vector<Word> enumerate_words(const Poset& alphabet, int max_len,
                                  std::size_t node_cap = 20000);

/// Materializes the induced order on the window of words over
/// aug.working() up to max_len, with covers and components.
WordPosetGraph build_word_poset(const Augmentation& aug, int max_len,
                                std::size_t node_cap = 20000);

/// Minimal edge set whose reflexive-transitive closure is `leq`; unique
/// for finite posets. Re-checks that the table is a poset (NotAPoset).
std::vector<std::pair<int, int>> transitive_reduction(const BitMatrix& leq);

/// Connected components of the undirected cover graph on n nodes.
/// Components are ordered by their minimal node; members ascend.
std::vector<std::vector<int>> connected_components(std::size_t n,
                                                   const std::vector<std::pair<int, int>>& covers);

}  // namespace wordorder
