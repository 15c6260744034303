#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "wordorder/augmentation.hpp"

namespace wordorder {

/// Certificate that v is below w in the induced order: a pair of
/// equal-length aux-extensions, componentwise related in the augmented
/// alphabet. Letters are indices into aug.alphabet(). Normalized so that
/// no column pairs the auxiliary letter with itself, which bounds the
/// length by |v| + |w|.
struct AlignmentWitness {
  Word left;   // extension of v
  Word right;  // extension of w

  bool operator==(const AlignmentWitness&) const = default;
};

/// Decides v <= w in the order induced by deleting the auxiliary letter:
/// true iff equal-length aux-extensions v', w' exist with v' <= w'
/// componentwise in the augmented alphabet.
///
/// Runs a feasibility DP over prefix pairs in O(|v|*|w|). A cell (i, j) is
/// reachable iff the first i letters of v can be aligned against the first
/// j letters of w, where a column either matches v_i against w_j
/// (needs v_i <= w_j), pairs v_i against an inserted aux on the right
/// (needs v_i <= aux), or pairs an inserted aux on the left against w_j
/// (needs aux <= w_j). Columns pairing aux with aux never help and are
/// excluded, so any feasible alignment has at most |v| + |w| columns;
/// leq_bruteforce independently enumerates extensions to that same bound.
bool leq_induced(const Augmentation& aug, const Word& v, const Word& w);

/// Constructive form of leq_induced: absent iff the relation fails,
/// otherwise a witness from the DP traceback. Ties break deterministically
/// preferring a matched column, then an aux inserted into the left word,
/// then an aux inserted into the right word.
std::optional<AlignmentWitness> witness(const Augmentation& aug, const Word& v, const Word& w);

/// Exhaustive reference oracle for leq_induced: enumerates every insertion
/// of the auxiliary letter into v and into w up to total length |v| + |w|
/// and tests every equal-length pair componentwise. Exponential; throws
/// SizeLimit when |v| + |w| exceeds `cap`.
bool leq_bruteforce(const Augmentation& aug, const Word& v, const Word& w, std::size_t cap = 12);

/// Subsequence order: v <= w iff w arises from v by inserting letters.
bool leq_morphological(const Word& v, const Word& w);

/// Two-letter chronological order on a 2-chain {past < future}: v <= w iff
/// w arises from v by erasing `past` letters and/or inserting `future`
/// letters. Throws WrongAlphabet unless `two_chain` is a 2-element chain
/// and the words stay inside it.
bool leq_chronological(const Poset& two_chain, const Word& v, const Word& w);

/// All single-letter-insertion successors of v, position by position,
/// deduplicated, in deterministic order.
std::vector<Word> step_successors_morph(const Word& v, const Poset& alphabet);

/// All single-step chronological successors of v: erase one `past` letter
/// or insert one `future` letter. Deduplicated, erasures first.
std::vector<Word> step_successors_chron(const Poset& two_chain, const Word& v);

}  // namespace wordorder
