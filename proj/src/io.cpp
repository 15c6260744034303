#include "wordorder/io.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include <json.hpp>

namespace wordorder {

namespace {

using nlohmann::json;
using nlohmann::ordered_json;

void reject_unknown_keys(const json& obj, std::initializer_list<const char*> allowed,
                         const std::string& where) {
  for (const auto& [key, value] : obj.items()) {
    if (std::find_if(allowed.begin(), allowed.end(),
                     [&](const char* k) { return key == k; }) == allowed.end())
      throw Error(ErrorKind::ValidationError, "unknown key '" + key + "' in " + where);
  }
}

std::vector<std::string> string_array(const json& value, const std::string& where) {
  if (!value.is_array())
    throw Error(ErrorKind::ValidationError, where + " must be an array of strings");
  std::vector<std::string> out;
  for (const auto& item : value) {
    if (!item.is_string())
      throw Error(ErrorKind::ValidationError, where + " must be an array of strings");
    out.push_back(item.get<std::string>());
  }
  return out;
}

void check_subset(const std::vector<std::string>& subset, const std::set<std::string>& letters,
                  const std::string& where) {
  for (const auto& name : subset)
    if (!letters.count(name))
      throw Error(ErrorKind::ValidationError, "unknown letter '" + name + "' in " + where);
}

ConstructionSpec parse_construction(const json& obj, const std::set<std::string>& letters) {
  if (!obj.is_object())
    throw Error(ErrorKind::ValidationError, "construction must be an object");
  if (!obj.contains("kind") || !obj["kind"].is_string())
    throw Error(ErrorKind::ValidationError, "construction needs a string 'kind'");
  const std::string kind = obj["kind"].get<std::string>();

  auto required_string = [&](const char* key) {
    if (!obj.contains(key) || !obj[key].is_string())
      throw Error(ErrorKind::ValidationError,
                  std::string("construction '") + kind + "' needs a string '" + key + "'");
    return obj[key].get<std::string>();
  };

  ConstructionSpec c;
  if (kind == "custom") {
    reject_unknown_keys(obj, {"kind", "aux", "below", "above"}, "construction");
    c.kind = ConstructionKind::Custom;
    c.aux = required_string("aux");
    if (obj.contains("below")) c.below = string_array(obj["below"], "construction 'below'");
    if (obj.contains("above")) c.above = string_array(obj["above"], "construction 'above'");
    check_subset(c.below, letters, "construction 'below'");
    check_subset(c.above, letters, "construction 'above'");
  } else if (kind == "raising" || kind == "trivial" || kind == "span") {
    reject_unknown_keys(obj, {"kind", "aux"}, "construction");
    c.kind = kind == "raising" ? ConstructionKind::Raising
             : kind == "trivial" ? ConstructionKind::Trivial
                                 : ConstructionKind::Span;
    c.aux = required_string("aux");
  } else if (kind == "partition") {
    reject_unknown_keys(obj, {"kind", "aux", "bar"}, "construction");
    c.kind = ConstructionKind::Partition;
    c.aux = required_string("aux");
    c.bar = required_string("bar");
  } else if (kind == "chron-join") {
    reject_unknown_keys(obj, {"kind", "aux", "b_side"}, "construction");
    c.kind = ConstructionKind::ChronJoin;
    c.aux = required_string("aux");
    if (!obj.contains("b_side"))
      throw Error(ErrorKind::ValidationError, "construction 'chron-join' needs 'b_side'");
    c.b_side = string_array(obj["b_side"], "construction 'b_side'");
    check_subset(c.b_side, letters, "construction 'b_side'");
  } else {
    throw Error(ErrorKind::ValidationError, "unknown construction kind '" + kind + "'");
  }
  return c;
}

}  // namespace

AlphabetSpec parse_alphabet_spec(std::string_view text) {
  json root;
  try {
    root = json::parse(text);
  } catch (const json::exception& e) {
    throw Error(ErrorKind::ParseError, e.what());
  }
  if (!root.is_object())
    throw Error(ErrorKind::ValidationError, "alphabet spec must be a JSON object");
  reject_unknown_keys(root, {"letters", "relations", "auxiliary", "construction"},
                      "alphabet spec");
  if (!root.contains("letters"))
    throw Error(ErrorKind::ValidationError, "alphabet spec needs 'letters'");

  AlphabetSpec spec;
  spec.letters = string_array(root["letters"], "'letters'");
  std::set<std::string> letters;
  for (const auto& name : spec.letters)
    if (!letters.insert(name).second)
      throw Error(ErrorKind::ValidationError, "duplicate letter '" + name + "'");

  if (root.contains("relations")) {
    if (!root["relations"].is_array())
      throw Error(ErrorKind::ValidationError, "'relations' must be an array of pairs");
    for (const auto& item : root["relations"]) {
      auto pair = string_array(item, "'relations' entry");
      if (pair.size() != 2)
        throw Error(ErrorKind::ValidationError, "'relations' entries must be pairs");
      check_subset(pair, letters, "'relations'");
      spec.relations.emplace_back(pair[0], pair[1]);
    }
  }

  if (root.contains("auxiliary") && !root["auxiliary"].is_null()) {
    if (!root["auxiliary"].is_string())
      throw Error(ErrorKind::ValidationError, "'auxiliary' must be a string or null");
    spec.auxiliary = root["auxiliary"].get<std::string>();
  }
  if (root.contains("construction") && !root["construction"].is_null())
    spec.construction = parse_construction(root["construction"], letters);

  if (spec.construction) {
    if (spec.auxiliary && *spec.auxiliary != spec.construction->aux)
      throw Error(ErrorKind::ValidationError,
                  "'auxiliary' disagrees with the construction's aux letter");
  } else if (spec.auxiliary && !letters.count(*spec.auxiliary)) {
    throw Error(ErrorKind::ValidationError,
                "auxiliary letter '" + *spec.auxiliary + "' is not in 'letters'");
  }
  return spec;
}

Poset base_poset(const AlphabetSpec& spec) {
  return Poset::from_relations(spec.letters, spec.relations);
}

Augmentation realize(const AlphabetSpec& spec) {
  if (spec.construction) {
    const ConstructionSpec& c = *spec.construction;
    switch (c.kind) {
      case ConstructionKind::Custom:
        return augment_custom(base_poset(spec), c.aux, c.below, c.above);
      case ConstructionKind::Raising:
        return augment_raising(base_poset(spec), c.aux);
      case ConstructionKind::Trivial:
        return augment_trivial(base_poset(spec), c.aux);
      case ConstructionKind::Span:
        return augment_span(base_poset(spec), c.aux);
      case ConstructionKind::Partition:
        return augment_partition(base_poset(spec), c.aux, c.bar);
      case ConstructionKind::ChronJoin: {
        const std::set<std::string> b_side(c.b_side.begin(), c.b_side.end());
        std::vector<std::string> a_letters, b_letters;
        for (const auto& name : spec.letters)
          (b_side.count(name) ? b_letters : a_letters).push_back(name);
        std::vector<std::pair<std::string, std::string>> a_rel, b_rel;
        for (const auto& [lo, hi] : spec.relations) {
          const bool lo_b = b_side.count(lo) > 0, hi_b = b_side.count(hi) > 0;
          if (lo_b != hi_b)
            throw Error(ErrorKind::ValidationError,
                        "relation (" + lo + ", " + hi + ") crosses the chron-join sides");
          (lo_b ? b_rel : a_rel).emplace_back(lo, hi);
        }
        return join_chron(Poset::from_relations(a_letters, a_rel),
                          Poset::from_relations(b_letters, b_rel), c.aux);
      }
    }
  }
  if (spec.auxiliary) return Augmentation(base_poset(spec), *spec.auxiliary);
  throw Error(ErrorKind::ValidationError,
              "spec defines no augmentation: give 'auxiliary' or 'construction'");
}

namespace {

std::size_t utf8_codepoints(std::string_view s) {
  std::size_t count = 0;
  for (unsigned char c : s)
    if ((c & 0xC0) != 0x80) ++count;  // count non-continuation bytes
  return count;
}

bool all_single_codepoint(const std::set<std::string>& names) {
  for (const auto& name : names)
    if (utf8_codepoints(name) != 1) return false;
  return true;
}

std::string dot_quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  out += '"';
  return out;
}

std::set<std::string> letters_in(const WordPosetGraph& g) {
  std::set<std::string> names;
  for (const auto& w : g.words) names.insert(w.begin(), w.end());
  return names;
}

}  // namespace

std::string render_word(const std::vector<std::string>& letters, bool concatenate) {
  if (letters.empty()) return "\xce\xb5";
  std::string out;
  for (std::size_t i = 0; i < letters.size(); ++i) {
    if (i > 0 && !concatenate) out += '.';
    out += letters[i];
  }
  return out;
}

std::string export_dot(const WordPosetGraph& g) {
  const bool concat = all_single_codepoint(letters_in(g));
  std::ostringstream os;
  os << "digraph wordposet {\n";
  for (const auto& w : g.words) os << "  " << dot_quote(render_word(w, concat)) << ";\n";
  for (const auto& [i, j] : g.covers)
    os << "  " << dot_quote(render_word(g.words[static_cast<std::size_t>(i)], concat)) << " -> "
       << dot_quote(render_word(g.words[static_cast<std::size_t>(j)], concat)) << ";\n";
  os << "}\n";
  return os.str();
}

std::string export_graph_json(const WordPosetGraph& g) {
  ordered_json root;
  root["words"] = g.words;
  root["covers"] = json::array();
  for (const auto& [i, j] : g.covers) root["covers"].push_back({i, j});
  root["components"] = g.components;
  return root.dump();
}

WordPosetGraph parse_graph_json(std::string_view text) {
  json root;
  try {
    root = json::parse(text);
  } catch (const json::exception& e) {
    throw Error(ErrorKind::ParseError, e.what());
  }
  if (!root.is_object() || !root.contains("words") || !root.contains("covers") ||
      !root.contains("components"))
    throw Error(ErrorKind::ValidationError,
                "graph JSON needs 'words', 'covers' and 'components'");
  reject_unknown_keys(root, {"words", "covers", "components"}, "graph JSON");

  WordPosetGraph g;
  if (!root["words"].is_array())
    throw Error(ErrorKind::ValidationError, "'words' must be an array");
  for (const auto& item : root["words"]) g.words.push_back(string_array(item, "'words' entry"));
  const std::size_t n = g.words.size();

  auto index_in_range = [&](const json& v, const std::string& where) {
    if (!v.is_number_integer())
      throw Error(ErrorKind::ValidationError, where + " must hold word indices");
    const auto i = v.get<long long>();
    if (i < 0 || static_cast<std::size_t>(i) >= n)
      throw Error(ErrorKind::ValidationError, where + " index out of range");
    return static_cast<int>(i);
  };

  if (!root["covers"].is_array())
    throw Error(ErrorKind::ValidationError, "'covers' must be an array");
  for (const auto& item : root["covers"]) {
    if (!item.is_array() || item.size() != 2)
      throw Error(ErrorKind::ValidationError, "'covers' entries must be index pairs");
    g.covers.emplace_back(index_in_range(item[0], "'covers'"),
                          index_in_range(item[1], "'covers'"));
  }

  if (!root["components"].is_array())
    throw Error(ErrorKind::ValidationError, "'components' must be an array");
  for (const auto& item : root["components"]) {
    if (!item.is_array())
      throw Error(ErrorKind::ValidationError, "'components' entries must be arrays");
    std::vector<int> comp;
    for (const auto& v : item) comp.push_back(index_in_range(v, "'components'"));
    g.components.push_back(std::move(comp));
  }

  // The covers are a transitive reduction; closing them restores the order.
  g.leq = BitMatrix(n);
  for (std::size_t i = 0; i < n; ++i) g.leq.set(i, i);
  for (const auto& [i, j] : g.covers) g.leq.set(static_cast<std::size_t>(i),
                                                static_cast<std::size_t>(j));
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      if (g.leq.get(i, k)) g.leq.or_row(i, k);
  return g;
}

std::string export_witness_json(const AlignmentWitness& wit, const Poset& alphabet) {
  auto names = [&](const Word& w) {
    std::vector<std::string> out;
    out.reserve(w.size());
    for (LetterId x : w) out.push_back(alphabet.name(x));
    return out;
  };
  ordered_json root;
  root["left"] = names(wit.left);
  root["right"] = names(wit.right);
  return root.dump();
}

std::vector<std::string> split_word_text(std::string_view text,
                                         const std::vector<std::string>& names) {
  if (text == "@") return {};
  if (text.empty())
    throw Error(ErrorKind::ValidationError, "empty word text; spell the empty word as '@'");

  std::vector<std::string> tokens;
  if (text.find('.') != std::string_view::npos) {
    std::size_t start = 0;
    while (start <= text.size()) {
      const std::size_t dot = text.find('.', start);
      const auto token = text.substr(start, dot == std::string_view::npos ? dot : dot - start);
      if (token.empty())
        throw Error(ErrorKind::ValidationError, "empty letter between '.' separators");
      tokens.emplace_back(token);
      if (dot == std::string_view::npos) break;
      start = dot + 1;
    }
    return tokens;
  }

  const std::set<std::string> name_set(names.begin(), names.end());
  if (!all_single_codepoint(name_set) || name_set.count(std::string(text))) {
    tokens.emplace_back(text);  // a single letter name
    return tokens;
  }
  // every letter is one character: read the text as a plain concatenation
  std::size_t i = 0;
  while (i < text.size()) {
    std::size_t len = 1;
    while (i + len < text.size() && (static_cast<unsigned char>(text[i + len]) & 0xC0) == 0x80)
      ++len;
    tokens.emplace_back(text.substr(i, len));
    i += len;
  }
  return tokens;
}

Word parse_word_text(const Augmentation& aug, std::string_view text) {
  const auto tokens = split_word_text(text, aug.working().elements());
  Word out;
  out.reserve(tokens.size());
  for (const auto& token : tokens) {
    if (token == aug.aux_name())
      throw Error(ErrorKind::AuxInWord,
                  "the auxiliary letter '" + token + "' cannot occur in a word");
    if (auto x = aug.working().find(token)) {
      out.push_back(*x);
    } else {
      throw Error(ErrorKind::UnknownLetter,
                  "'" + token + "' is not a letter of the working alphabet");
    }
  }
  return out;
}

}  // namespace wordorder
