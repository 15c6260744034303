#include "wordorder/augmentation.hpp"

#include <utility>

namespace wordorder {

Augmentation::Augmentation(Poset alphabet, std::string_view aux)
    : alphabet_(std::move(alphabet)), working_(), aux_(alphabet_.id(aux)) {
  working_ = alphabet_.without(aux_);
}

LetterId Augmentation::to_alphabet(LetterId working_id) const {
  if (working_id < 0 || static_cast<std::size_t>(working_id) >= working_.size())
    throw Error(ErrorKind::UnknownLetter,
                "letter index " + std::to_string(working_id) + " out of range");
  return working_id < aux_ ? working_id : working_id + 1;
}

namespace {

void check_fresh(const Poset& p, std::string_view e) {
  if (p.find(e))
    throw Error(ErrorKind::LetterCollision,
                "'" + std::string(e) + "' is already a letter of the alphabet");
}

}  // namespace

Augmentation augment_custom(const Poset& p, std::string_view e,
                            const std::vector<std::string>& below,
                            const std::vector<std::string>& above) {
  check_fresh(p, e);
  for (const auto& x : below) p.id(x);  // UnknownLetter before anything else
  for (const auto& y : above) p.id(y);

  std::vector<std::string> elements = p.elements();
  elements.emplace_back(e);
  auto pairs = p.strict_pairs();
  for (const auto& x : below) pairs.emplace_back(x, std::string(e));
  for (const auto& y : above) pairs.emplace_back(std::string(e), y);

  Poset augmented = Poset::from_relations(std::move(elements), pairs);  // CycleDetected here
  Augmentation aug(std::move(augmented), e);
  if (!(aug.working() == p))
    throw Error(ErrorKind::AugmentationDistorts,
                "closure adds a relation between original letters");
  return aug;
}

Augmentation augment_raising(const Poset& p, std::string_view e) {
  return augment_custom(p, e, {}, p.elements());
}

Augmentation augment_trivial(const Poset& p, std::string_view e) {
  return augment_custom(p, e, {}, {});
}

Augmentation augment_span(const Poset& p, std::string_view e) {
  auto lo = p.least();
  if (!lo) throw Error(ErrorKind::NoLeast, "poset has no least element");
  auto hi = p.greatest();
  if (!hi) throw Error(ErrorKind::NoGreatest, "poset has no greatest element");
  if (*lo == *hi)
    throw Error(ErrorKind::DegenerateBounds,
                "least and greatest coincide; the span letter would collapse onto them");
  return augment_custom(p, e, {p.name(*lo)}, {p.name(*hi)});
}

Augmentation augment_partition(const Poset& p, std::string_view e, std::string_view bar) {
  if (e == bar)
    throw Error(ErrorKind::LetterCollision, "auxiliary and bar letters coincide");
  check_fresh(p, e);
  check_fresh(p, bar);

  std::vector<std::string> elements = p.elements();
  elements.emplace_back(bar);
  elements.emplace_back(e);
  auto pairs = p.strict_pairs();
  for (const auto& x : p.elements()) pairs.emplace_back(std::string(e), x);

  return Augmentation(Poset::from_relations(std::move(elements), pairs), e);
}

Augmentation join_chron(const Poset& pa, const Poset& pb, std::string_view e) {
  for (const auto& x : pa.elements())
    if (pb.find(x))
      throw Error(ErrorKind::LetterCollision, "'" + x + "' occurs in both carriers");
  check_fresh(pa, e);
  check_fresh(pb, e);

  std::vector<std::string> elements = pa.elements();
  for (const auto& x : pb.elements()) elements.push_back(x);
  elements.emplace_back(e);

  auto pairs = pa.strict_pairs();
  for (auto& pr : pb.strict_pairs()) pairs.push_back(std::move(pr));
  for (const auto& x : pa.elements()) pairs.emplace_back(x, std::string(e));
  for (const auto& y : pb.elements()) pairs.emplace_back(std::string(e), y);

  return Augmentation(Poset::from_relations(std::move(elements), pairs), e);
}

const char* to_string(ConeLabel label) noexcept {
  switch (label) {
    case ConeLabel::ConeA: return "ConeA";
    case ConeLabel::ConeB: return "ConeB";
    case ConeLabel::Origin: return "Origin";
    case ConeLabel::Elsewhere: return "Elsewhere";
  }
  return "ConeLabel";
}

ConeLabel classify_cone(const std::vector<std::string>& word, const Poset& a, const Poset& b) {
  for (const auto& x : a.elements())
    if (b.find(x))
      throw Error(ErrorKind::LetterCollision, "'" + x + "' occurs in both carriers");
  if (word.empty()) return ConeLabel::Origin;
  bool all_a = true, all_b = true;
  for (const auto& letter : word) {
    const bool in_a = a.find(letter).has_value();
    const bool in_b = b.find(letter).has_value();
    if (!in_a && !in_b)
      throw Error(ErrorKind::UnknownLetter, "'" + letter + "' is in neither carrier");
    all_a = all_a && in_a;
    all_b = all_b && in_b;
  }
  if (all_a) return ConeLabel::ConeA;
  if (all_b) return ConeLabel::ConeB;
  return ConeLabel::Elsewhere;
}

}  // namespace wordorder
