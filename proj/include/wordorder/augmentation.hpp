#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "wordorder/poset.hpp"

namespace wordorder {

/// An alphabet with one designated auxiliary letter whose deletion yields
/// the working alphabet. Words live over the working alphabet; the induced
/// order compares them through extensions by the auxiliary letter.
class Augmentation {
 public:
  /// Principal construction: designate `aux` within an existing poset.
  Augmentation(Poset alphabet, std::string_view aux);

  /// The full alphabet A' (working letters plus aux).
  const Poset& alphabet() const noexcept { return alphabet_; }
  /// The working alphabet: alphabet() minus the auxiliary letter.
  const Poset& working() const noexcept { return working_; }

  LetterId aux_id() const noexcept { return aux_; }
  const std::string& aux_name() const { return alphabet_.name(aux_); }

  /// Maps a working-alphabet letter index to its index in alphabet().
  LetterId to_alphabet(LetterId working_id) const;

  bool operator==(const Augmentation&) const = default;

 private:
  Poset alphabet_;
  Poset working_;
  LetterId aux_ = 0;
};

/// Adjoins a fresh letter `e` with the relations {x < e : x in below} and
/// {e < y : y in above}, closed transitively. Rejects any choice whose
/// closure would relate two original letters that were not related before
/// (AugmentationDistorts) or break antisymmetry (CycleDetected).
Augmentation augment_custom(const Poset& p, std::string_view e,
                            const std::vector<std::string>& below,
                            const std::vector<std::string>& above);

/// e below every letter of p.
Augmentation augment_raising(const Poset& p, std::string_view e);

/// e unrelated to p.
Augmentation augment_trivial(const Poset& p, std::string_view e);

/// least(p) < e < greatest(p). Requires both bounds to exist and differ.
Augmentation augment_span(const Poset& p, std::string_view e);

/// Working alphabet p plus an unrelated separator `bar`; e below every
/// letter of p but not below bar.
Augmentation augment_partition(const Poset& p, std::string_view e, std::string_view bar);

/// Union of two disjoint posets joined through e: a < e < b for all
/// a in pa, b in pb (closure relates every a below every b).
Augmentation join_chron(const Poset& pa, const Poset& pb, std::string_view e);

enum class ConeLabel { ConeA, ConeB, Origin, Elsewhere };

const char* to_string(ConeLabel label) noexcept;

/// Places a word over the union alphabet: the empty word at the origin,
/// pure-A words in cone A, pure-B words in cone B, mixed words elsewhere.
ConeLabel classify_cone(const std::vector<std::string>& word, const Poset& a, const Poset& b);

}  // namespace wordorder
