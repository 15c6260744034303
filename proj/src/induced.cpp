#include "wordorder/induced.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <set>

namespace wordorder {

namespace {

void check_word(const Augmentation& aug, const Word& w) {
  const auto n = static_cast<LetterId>(aug.working().size());
  for (LetterId x : w)
    if (x < 0 || x >= n)
      throw Error(ErrorKind::UnknownLetter,
                  "letter index " + std::to_string(x) + " not in the working alphabet");
}

// Per-letter comparisons against the auxiliary letter, precomputed once.
struct AuxProfile {
  std::vector<char> below_aux;  // below_aux[i]: v_i <= aux in A'
  std::vector<char> aux_below;  // aux_below[j]: aux <= w_j in A'

  AuxProfile(const Augmentation& aug, const Word& v, const Word& w) {
    const Poset& ap = aug.alphabet();
    const LetterId aux = aug.aux_id();
    below_aux.reserve(v.size());
    for (LetterId x : v) below_aux.push_back(ap.leq(aug.to_alphabet(x), aux));
    aux_below.reserve(w.size());
    for (LetterId y : w) aux_below.push_back(ap.leq(aux, aug.to_alphabet(y)));
  }
};

}  // namespace

bool leq_induced(const Augmentation& aug, const Word& v, const Word& w) {
  check_word(aug, v);
  check_word(aug, w);
  const std::size_t n = v.size(), k = w.size();
  const Poset& work = aug.working();
  const AuxProfile aux(aug, v, w);

  std::vector<char> prev(k + 1), cur(k + 1);
  prev[0] = 1;
  for (std::size_t j = 1; j <= k; ++j) prev[j] = prev[j - 1] && aux.aux_below[j - 1];
  for (std::size_t i = 1; i <= n; ++i) {
    cur[0] = prev[0] && aux.below_aux[i - 1];
    for (std::size_t j = 1; j <= k; ++j) {
      cur[j] = (prev[j - 1] && work.leq(v[i - 1], w[j - 1])) ||
               (prev[j] && aux.below_aux[i - 1]) ||
               (cur[j - 1] && aux.aux_below[j - 1]);
    }
    std::swap(prev, cur);
  }
  return prev[k];
}

std::optional<AlignmentWitness> witness(const Augmentation& aug, const Word& v, const Word& w) {
  check_word(aug, v);
  check_word(aug, w);
  const std::size_t n = v.size(), k = w.size();
  const Poset& work = aug.working();
  const AuxProfile aux(aug, v, w);

  std::vector<char> reach((n + 1) * (k + 1), 0);
  auto at = [&](std::size_t i, std::size_t j) -> char& { return reach[i * (k + 1) + j]; };
  at(0, 0) = 1;
  for (std::size_t j = 1; j <= k; ++j) at(0, j) = at(0, j - 1) && aux.aux_below[j - 1];
  for (std::size_t i = 1; i <= n; ++i) {
    at(i, 0) = at(i - 1, 0) && aux.below_aux[i - 1];
    for (std::size_t j = 1; j <= k; ++j)
      at(i, j) = (at(i - 1, j - 1) && work.leq(v[i - 1], w[j - 1])) ||
                 (at(i - 1, j) && aux.below_aux[i - 1]) ||
                 (at(i, j - 1) && aux.aux_below[j - 1]);
  }
  if (!at(n, k)) return std::nullopt;

  const LetterId e = aug.aux_id();
  AlignmentWitness wit;
  std::size_t i = n, j = k;
  while (i > 0 || j > 0) {
    if (i > 0 && j > 0 && at(i - 1, j - 1) && work.leq(v[i - 1], w[j - 1])) {
      wit.left.push_back(aug.to_alphabet(v[i - 1]));
      wit.right.push_back(aug.to_alphabet(w[j - 1]));
      --i, --j;
    } else if (j > 0 && at(i, j - 1) && aux.aux_below[j - 1]) {
      wit.left.push_back(e);
      wit.right.push_back(aug.to_alphabet(w[j - 1]));
      --j;
    } else {
      wit.left.push_back(aug.to_alphabet(v[i - 1]));
      wit.right.push_back(e);
      --i;
    }
  }
  std::reverse(wit.left.begin(), wit.left.end());
  std::reverse(wit.right.begin(), wit.right.end());
  return wit;
}

namespace {

// All length-n extensions of `base` by the letter `aux`: one word per
// n-bit mask whose set bits mark positions holding the next base letter.
std::vector<Word> extensions_of_length(const Word& base, const Augmentation& aug, std::size_t n) {
  std::vector<Word> out;
  const auto want = base.size();
  const LetterId e = aug.aux_id();
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    if (static_cast<std::size_t>(std::popcount(mask)) != want) continue;
    Word ext;
    ext.reserve(n);
    std::size_t next = 0;
    for (std::size_t pos = 0; pos < n; ++pos)
      ext.push_back((mask >> pos & 1) ? aug.to_alphabet(base[next++]) : e);
    out.push_back(std::move(ext));
  }
  return out;
}

}  // namespace

bool leq_bruteforce(const Augmentation& aug, const Word& v, const Word& w, std::size_t cap) {
  check_word(aug, v);
  check_word(aug, w);
  const std::size_t total = v.size() + w.size();
  if (total > cap)
    throw Error(ErrorKind::SizeLimit, "|v|+|w| = " + std::to_string(total) +
                                          " exceeds the oracle cap " + std::to_string(cap));
  const Poset& ap = aug.alphabet();
  for (std::size_t n = std::max(v.size(), w.size()); n <= total; ++n) {
    const auto lefts = extensions_of_length(v, aug, n);
    const auto rights = extensions_of_length(w, aug, n);
    for (const Word& l : lefts)
      for (const Word& r : rights)
        if (ap.product_leq(l, r)) return true;
  }
  return false;
}

bool leq_morphological(const Word& v, const Word& w) {
  std::size_t i = 0;
  for (std::size_t j = 0; j < w.size() && i < v.size(); ++j)
    if (v[i] == w[j]) ++i;
  return i == v.size();
}

namespace {

// Identifies the 2-chain roles: returns {past, future}.
std::pair<LetterId, LetterId> chron_roles(const Poset& two_chain) {
  if (two_chain.size() != 2)
    throw Error(ErrorKind::WrongAlphabet, "chronological order needs a two-letter alphabet");
  if (two_chain.leq(0, 1) && !two_chain.leq(1, 0)) return {0, 1};
  if (two_chain.leq(1, 0) && !two_chain.leq(0, 1)) return {1, 0};
  throw Error(ErrorKind::WrongAlphabet, "chronological order needs a two-element chain");
}

void check_chron_word(const Word& w) {
  for (LetterId x : w)
    if (x != 0 && x != 1)
      throw Error(ErrorKind::WrongAlphabet,
                  "letter index " + std::to_string(x) + " outside the two-letter alphabet");
}

}  // namespace

bool leq_chronological(const Poset& two_chain, const Word& v, const Word& w) {
  const auto [past, future] = chron_roles(two_chain);
  check_chron_word(v);
  check_chron_word(w);
  const std::size_t n = v.size(), k = w.size();

  std::vector<char> prev(k + 1), cur(k + 1);
  prev[0] = 1;
  for (std::size_t j = 1; j <= k; ++j) prev[j] = prev[j - 1] && w[j - 1] == future;
  for (std::size_t i = 1; i <= n; ++i) {
    cur[0] = prev[0] && v[i - 1] == past;
    for (std::size_t j = 1; j <= k; ++j)
      cur[j] = (prev[j - 1] && v[i - 1] == w[j - 1]) ||
               (prev[j] && v[i - 1] == past) ||
               (cur[j - 1] && w[j - 1] == future);
    std::swap(prev, cur);
  }
  return prev[k];
}

std::vector<Word> step_successors_morph(const Word& v, const Poset& alphabet) {
  for (LetterId x : v)
    if (x < 0 || static_cast<std::size_t>(x) >= alphabet.size())
      throw Error(ErrorKind::UnknownLetter,
                  "letter index " + std::to_string(x) + " not in the alphabet");
  std::vector<Word> out;
  std::set<Word> seen;
  for (std::size_t pos = 0; pos <= v.size(); ++pos)
    for (std::size_t x = 0; x < alphabet.size(); ++x) {
      Word s = v;
      s.insert(s.begin() + static_cast<std::ptrdiff_t>(pos), static_cast<LetterId>(x));
      if (seen.insert(s).second) out.push_back(std::move(s));
    }
  return out;
}

std::vector<Word> step_successors_chron(const Poset& two_chain, const Word& v) {
  const auto [past, future] = chron_roles(two_chain);
  check_chron_word(v);
  std::vector<Word> out;
  std::set<Word> seen;
  for (std::size_t pos = 0; pos < v.size(); ++pos) {
    if (v[pos] != past) continue;
    Word s = v;
    s.erase(s.begin() + static_cast<std::ptrdiff_t>(pos));
    if (seen.insert(s).second) out.push_back(std::move(s));
  }
  for (std::size_t pos = 0; pos <= v.size(); ++pos) {
    Word s = v;
    s.insert(s.begin() + static_cast<std::ptrdiff_t>(pos), future);
    if (seen.insert(s).second) out.push_back(std::move(s));
  }
  return out;
}

}  // namespace wordorder
