#include "wordorder/poset.hpp"

#include <algorithm>
#include <cctype>

namespace wordorder {

const char* to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::DuplicateElement: return "DuplicateElement";
    case ErrorKind::UnknownLetter: return "UnknownLetter";
    case ErrorKind::CycleDetected: return "CycleDetected";
    case ErrorKind::LengthMismatch: return "LengthMismatch";
    case ErrorKind::CarrierMismatch: return "CarrierMismatch";
    case ErrorKind::LetterCollision: return "LetterCollision";
    case ErrorKind::AugmentationDistorts: return "AugmentationDistorts";
    case ErrorKind::NoLeast: return "NoLeast";
    case ErrorKind::NoGreatest: return "NoGreatest";
    case ErrorKind::DegenerateBounds: return "DegenerateBounds";
    case ErrorKind::AuxInWord: return "AuxInWord";
    case ErrorKind::WrongAlphabet: return "WrongAlphabet";
    case ErrorKind::SizeLimit: return "SizeLimit";
    case ErrorKind::NotAPoset: return "NotAPoset";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::ValidationError: return "ValidationError";
    case ErrorKind::IoError: return "IoError";
  }
  return "Error";
}

namespace {

constexpr std::uint64_t bit(LetterId x) { return std::uint64_t{1} << x; }

void check_letter_name(const std::string& name) {
  if (name.empty())
    throw Error(ErrorKind::ValidationError, "letter name is empty");
  if (name == "\xce\xb5")  // the rendering token for the empty word
    throw Error(ErrorKind::ValidationError, "\"\xce\xb5\" is reserved and cannot name a letter");
  for (unsigned char c : name) {
    if (std::isspace(c))
      throw Error(ErrorKind::ValidationError, "letter name '" + name + "' contains whitespace");
    if (c == '.')
      throw Error(ErrorKind::ValidationError, "letter name '" + name + "' contains '.'");
  }
}

void transitive_close(std::vector<std::uint64_t>& rows) {
  const std::size_t n = rows.size();
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      if (rows[i] >> k & 1) rows[i] |= rows[k];
}

}  // namespace

Poset Poset::from_relations(std::vector<std::string> elements,
                            const std::vector<std::pair<std::string, std::string>>& pairs) {
  if (elements.size() > kMaxElements)
    throw Error(ErrorKind::SizeLimit,
                "poset has " + std::to_string(elements.size()) + " elements; cap is " +
                    std::to_string(kMaxElements));
  const std::size_t n = elements.size();
  for (std::size_t i = 0; i < n; ++i) {
    check_letter_name(elements[i]);
    for (std::size_t j = i + 1; j < n; ++j)
      if (elements[i] == elements[j])
        throw Error(ErrorKind::DuplicateElement, "'" + elements[i] + "' appears twice");
  }

  std::vector<std::uint64_t> rows(n, 0);
  for (std::size_t i = 0; i < n; ++i) rows[i] = bit(static_cast<LetterId>(i));

  auto lookup = [&](const std::string& s) -> LetterId {
    for (std::size_t i = 0; i < n; ++i)
      if (elements[i] == s) return static_cast<LetterId>(i);
    throw Error(ErrorKind::UnknownLetter, "'" + s + "' is not an element of the poset");
  };
  for (const auto& [lo, hi] : pairs) rows[lookup(lo)] |= bit(lookup(hi));

  transitive_close(rows);

  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if ((rows[i] >> j & 1) && (rows[j] >> i & 1))
        throw Error(ErrorKind::CycleDetected,
                    "closure relates '" + elements[i] + "' and '" + elements[j] +
                        "' in both directions");

  return Poset(std::move(elements), std::move(rows));
}

void Poset::check_id(LetterId x) const {
  if (x < 0 || static_cast<std::size_t>(x) >= size())
    throw Error(ErrorKind::UnknownLetter, "letter index " + std::to_string(x) + " out of range");
}

const std::string& Poset::name(LetterId x) const {
  check_id(x);
  return names_[static_cast<std::size_t>(x)];
}

std::optional<LetterId> Poset::find(std::string_view name) const noexcept {
  for (std::size_t i = 0; i < names_.size(); ++i)
    if (names_[i] == name) return static_cast<LetterId>(i);
  return std::nullopt;
}

LetterId Poset::id(std::string_view name) const {
  if (auto x = find(name)) return *x;
  throw Error(ErrorKind::UnknownLetter, "'" + std::string(name) + "' is not an element of the poset");
}

bool Poset::leq(LetterId x, LetterId y) const {
  check_id(x);
  check_id(y);
  return rows_[static_cast<std::size_t>(x)] >> y & 1;
}

bool Poset::leq(std::string_view x, std::string_view y) const { return leq(id(x), id(y)); }

std::vector<std::pair<LetterId, LetterId>> Poset::covers() const {
  const std::size_t n = size();
  std::vector<std::uint64_t> strict_up(n), strict_down(n, 0);
  for (std::size_t x = 0; x < n; ++x)
    strict_up[x] = rows_[x] & ~bit(static_cast<LetterId>(x));
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      if (strict_up[x] >> y & 1) strict_down[y] |= bit(static_cast<LetterId>(x));

  std::vector<std::pair<LetterId, LetterId>> result;
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      if ((strict_up[x] >> y & 1) && (strict_up[x] & strict_down[y]) == 0)
        result.emplace_back(static_cast<LetterId>(x), static_cast<LetterId>(y));
  return result;
}

bool Poset::product_leq(const Word& xs, const Word& ys) const {
  if (xs.size() != ys.size())
    throw Error(ErrorKind::LengthMismatch, "tuples of length " + std::to_string(xs.size()) +
                                               " and " + std::to_string(ys.size()));
  for (std::size_t i = 0; i < xs.size(); ++i)
    if (!leq(xs[i], ys[i])) return false;
  return true;
}

Poset Poset::without(LetterId a) const {
  check_id(a);
  const std::size_t n = size();
  std::vector<std::string> names;
  names.reserve(n - 1);
  std::vector<std::uint64_t> rows;
  rows.reserve(n - 1);
  for (std::size_t x = 0; x < n; ++x) {
    if (static_cast<LetterId>(x) == a) continue;
    names.push_back(names_[x]);
    std::uint64_t row = 0;
    LetterId to = 0;
    for (std::size_t y = 0; y < n; ++y) {
      if (static_cast<LetterId>(y) == a) continue;
      if (rows_[x] >> y & 1) row |= bit(to);
      ++to;
    }
    rows.push_back(row);
  }
  return Poset(std::move(names), std::move(rows));
}

Poset Poset::without(std::string_view a) const { return without(id(a)); }

std::optional<LetterId> Poset::least() const noexcept {
  const std::size_t n = size();
  if (n == 0) return std::nullopt;
  const std::uint64_t all = (n == 64) ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
  for (std::size_t x = 0; x < n; ++x)
    if (rows_[x] == all) return static_cast<LetterId>(x);
  return std::nullopt;
}

std::optional<LetterId> Poset::greatest() const noexcept {
  const std::size_t n = size();
  if (n == 0) return std::nullopt;
  for (std::size_t y = 0; y < n; ++y) {
    bool top = true;
    for (std::size_t x = 0; x < n && top; ++x) top = rows_[x] >> y & 1;
    if (top) return static_cast<LetterId>(y);
  }
  return std::nullopt;
}

Poset Poset::dual() const {
  const std::size_t n = size();
  std::vector<std::uint64_t> rows(n, 0);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      if (rows_[x] >> y & 1) rows[y] |= bit(static_cast<LetterId>(x));
  return Poset(names_, std::move(rows));
}

bool Poset::is_suborder_of(const Poset& q) const {
  if (size() != q.size())
    throw Error(ErrorKind::CarrierMismatch, "carriers have different sizes");
  std::vector<LetterId> to_q(size());
  for (std::size_t x = 0; x < size(); ++x) {
    auto qx = q.find(names_[x]);
    if (!qx)
      throw Error(ErrorKind::CarrierMismatch, "'" + names_[x] + "' missing from the other carrier");
    to_q[x] = *qx;
  }
  for (std::size_t x = 0; x < size(); ++x)
    for (std::size_t y = 0; y < size(); ++y)
      if ((rows_[x] >> y & 1) &&
          !q.leq(to_q[x], to_q[static_cast<std::size_t>(y)]))
        return false;
  return true;
}

std::vector<std::pair<std::string, std::string>> Poset::strict_pairs() const {
  std::vector<std::pair<std::string, std::string>> result;
  for (std::size_t x = 0; x < size(); ++x)
    for (std::size_t y = 0; y < size(); ++y)
      if (x != y && (rows_[x] >> y & 1)) result.emplace_back(names_[x], names_[y]);
  return result;
}

bool PosetMap::is_homomorphism() const {
  if (assignment.size() != source.size())
    throw Error(ErrorKind::ValidationError, "assignment is not total on the source carrier");
  for (LetterId t : assignment)
    if (t < 0 || static_cast<std::size_t>(t) >= target.size())
      throw Error(ErrorKind::ValidationError, "assignment target index out of range");
  for (std::size_t x = 0; x < source.size(); ++x)
    for (std::size_t y = 0; y < source.size(); ++y)
      if (source.leq(static_cast<LetterId>(x), static_cast<LetterId>(y)) &&
          !target.leq(assignment[x], assignment[y]))
        return false;
  return true;
}

Word PosetMap::apply(const Word& w) const {
  Word out;
  out.reserve(w.size());
  for (LetterId x : w) {
    if (x < 0 || static_cast<std::size_t>(x) >= assignment.size())
      throw Error(ErrorKind::UnknownLetter, "letter index " + std::to_string(x) + " out of range");
    out.push_back(assignment[static_cast<std::size_t>(x)]);
  }
  return out;
}

}  // namespace wordorder
