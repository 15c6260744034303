#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "wordorder/word_poset.hpp"

namespace wordorder {

enum class ConstructionKind { Custom, Raising, Trivial, Span, Partition, ChronJoin };

struct ConstructionSpec {
  ConstructionKind kind = ConstructionKind::Custom;
  std::string aux;
  std::vector<std::string> below;   // custom
  std::vector<std::string> above;   // custom
  std::string bar;                  // partition
  std::vector<std::string> b_side;  // chron-join
};

/// Parsed alphabet-spec file. `letters` and `relations` define the base
/// poset; either `auxiliary` names an existing letter to delete (principal
/// construction) or `construction` describes how to adjoin a fresh one.
struct AlphabetSpec {
  std::vector<std::string> letters;
  std::vector<std::pair<std::string, std::string>> relations;
  std::optional<std::string> auxiliary;
  std::optional<ConstructionSpec> construction;
};

/// Parses the JSON alphabet-spec format. Unknown keys are rejected.
/// Throws ParseError (malformed JSON) or ValidationError (duplicate
/// names, unknown letters in relations, missing construction parameters).
AlphabetSpec parse_alphabet_spec(std::string_view text);

/// The poset over `letters` closed from `relations`.
Poset base_poset(const AlphabetSpec& spec);

/// Builds the augmentation a spec describes. ValidationError if the spec
/// carries neither an auxiliary letter nor a construction.
Augmentation realize(const AlphabetSpec& spec);

/// One DOT digraph: nodes labeled by word text (the empty word rendered
/// "ε"), cover edges oriented lesser -> greater, canonical emission order.
std::string export_dot(const WordPosetGraph& g);

/// {"words":[...],"covers":[[i,j],...],"components":[[...],...]} with
/// letters as name strings and the empty word as an empty array.
std::string export_graph_json(const WordPosetGraph& g);

/// Inverse of export_graph_json: the order table is recovered as the
/// reflexive-transitive closure of the covers.
WordPosetGraph parse_graph_json(std::string_view text);

/// {"left":[...],"right":[...]} with letters named in `alphabet`.
std::string export_witness_json(const AlignmentWitness& wit, const Poset& alphabet);

/// Splits command-line word text into letter names: "@" is the empty
/// word, "."-separated names otherwise; plain concatenation is accepted
/// when every name in `names` is a single character.
std::vector<std::string> split_word_text(std::string_view text,
                                         const std::vector<std::string>& names);

/// split_word_text resolved against the working alphabet. Throws
/// AuxInWord if the auxiliary letter is spelled, UnknownLetter otherwise.
Word parse_word_text(const Augmentation& aug, std::string_view text);

/// Joins letter names for display; the empty word renders as "ε".
std::string render_word(const std::vector<std::string>& letters, bool concatenate);

}  // namespace wordorder
