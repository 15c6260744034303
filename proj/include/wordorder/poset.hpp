#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "wordorder/errors.hpp"

namespace wordorder {

/// Index of a letter within a poset's element list.
using LetterId = int;

/// A word over some alphabet: letter indices into the alphabet's element
/// list. The empty vector is the empty word.
using Word = std::vector<LetterId>;

/// A finite partially ordered alphabet: named letters with a reflexive,
/// antisymmetric, transitive leq table. Built by closing user-supplied
/// generator pairs; anything whose closure cannot be antisymmetric is
/// rejected. The element list order is the canonical iteration and
/// serialization order.
///
/// Immutable after construction; all member functions are pure reads.
class Poset {
 public:
  /// Dense-table cap. Alphabets in scope are tiny; one 64-bit row per
  /// element keeps the closure and all queries branch-free.
  static constexpr std::size_t kMaxElements = 64;

  /// The empty poset.
  Poset() = default;

  /// Builds the reflexive-transitive closure of `pairs` over `elements`.
  /// Throws DuplicateElement, UnknownLetter, CycleDetected, SizeLimit,
  /// ValidationError (letter name with whitespace, '.', empty, or "ε").
  static Poset from_relations(std::vector<std::string> elements,
                              const std::vector<std::pair<std::string, std::string>>& pairs);

  std::size_t size() const noexcept { return names_.size(); }
  bool empty() const noexcept { return names_.empty(); }
  const std::vector<std::string>& elements() const noexcept { return names_; }

  const std::string& name(LetterId x) const;
  std::optional<LetterId> find(std::string_view name) const noexcept;
  LetterId id(std::string_view name) const;  // UnknownLetter if absent

  bool leq(LetterId x, LetterId y) const;
  bool leq(std::string_view x, std::string_view y) const;

  /// Transitive reduction of the strict part, ordered by element index.
  std::vector<std::pair<LetterId, LetterId>> covers() const;

  /// Componentwise comparison of two equal-length letter tuples.
  /// Vacuously true for two empty tuples. Throws LengthMismatch.
  bool product_leq(const Word& xs, const Word& ys) const;

  /// The poset minus one element, order restricted (no re-closure needed:
  /// a restriction of a poset is a poset).
  Poset without(LetterId a) const;
  Poset without(std::string_view a) const;

  /// Unique global minimum / maximum, if one exists.
  std::optional<LetterId> least() const noexcept;
  std::optional<LetterId> greatest() const noexcept;

  /// Same carrier, order reversed.
  Poset dual() const;

  /// True iff every relation of *this holds in q. The carriers must be
  /// equal as sets (CarrierMismatch otherwise); element order may differ.
  bool is_suborder_of(const Poset& q) const;

  /// All strict pairs (x, y), x < y, in element order. Feeding these back
  /// into from_relations reproduces the poset.
  std::vector<std::pair<std::string, std::string>> strict_pairs() const;

  bool operator==(const Poset&) const = default;

 private:
  Poset(std::vector<std::string> names, std::vector<std::uint64_t> rows)
      : names_(std::move(names)), rows_(std::move(rows)) {}

  void check_id(LetterId x) const;

  std::vector<std::string> names_;
  std::vector<std::uint64_t> rows_;  // bit y of rows_[x] set iff x <= y
};

/// A total assignment of source letters to target letters.
struct PosetMap {
  Poset source;
  Poset target;
  std::vector<LetterId> assignment;  // source id -> target id

  /// True iff x <= y in source implies f(x) <= f(y) in target.
  /// Throws ValidationError if the assignment is not total on the source.
  bool is_homomorphism() const;

  /// Letter-wise image of a word.
  Word apply(const Word& w) const;
};

}  // namespace wordorder
