#include "wordorder/cli.hpp"

#include <fstream>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "wordorder/io.hpp"
#include "wordorder/selftest.hpp"

namespace wordorder {

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::IoError, "cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Augmentation load_augmentation(const std::string& path) {
  return realize(parse_alphabet_spec(read_file(path)));
}

bool concat_rendering(const WordPosetGraph& g) {
  // match export_dot: concatenate iff every letter is a single character
  for (const auto& w : g.words)
    for (const auto& name : w) {
      std::size_t codepoints = 0;
      for (unsigned char c : name)
        if ((c & 0xC0) != 0x80) ++codepoints;
      if (codepoints != 1) return false;
    }
  return true;
}

}  // namespace

int cli_main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"induced word orders over partially ordered alphabets"};
  app.require_subcommand(1);

  std::string spec_path, v_text, w_text;
  bool want_witness = false;
  auto* compare = app.add_subcommand("compare", "Decide v <= w in the induced order");
  compare->add_option("spec", spec_path, "alphabet spec file (JSON)")->required();
  compare->add_option("v", v_text, "left word ('.'-separated letters, '@' for the empty word)")
      ->required();
  compare->add_option("w", w_text, "right word")->required();
  compare->add_flag("--witness", want_witness, "print the alignment witness when true");

  int max_len = 3;
  std::string format = "dot";
  std::size_t node_cap = 20000;
  auto* hasse = app.add_subcommand("hasse", "Emit a word-poset window as a Hasse diagram");
  hasse->add_option("spec", spec_path, "alphabet spec file (JSON)")->required();
  hasse->add_option("--max-len", max_len, "maximum word length")->check(CLI::NonNegativeNumber);
  hasse->add_option("--format", format, "dot or json")->check(CLI::IsMember({"dot", "json"}));
  hasse->add_option("--node-cap", node_cap, "maximum window size");

  auto* components = app.add_subcommand("components", "List the window's connected components");
  components->add_option("spec", spec_path, "alphabet spec file (JSON)")->required();
  components->add_option("--max-len", max_len, "maximum word length")
      ->check(CLI::NonNegativeNumber);
  components->add_option("--node-cap", node_cap, "maximum window size");

  std::string spec_a, spec_b, word_text, future_side = "A";
  auto* classify = app.add_subcommand("classify", "Place a word in the cones of a joined alphabet");
  classify->add_option("specA", spec_a, "A-side alphabet spec file")->required();
  classify->add_option("specB", spec_b, "B-side alphabet spec file")->required();
  classify->add_option("w", word_text, "word over the union alphabet")->required();
  classify->add_option("--future", future_side, "which cone to call the future")
      ->check(CLI::IsMember({"A", "B"}));

  int self_len = 3;
  auto* selftest_cmd = app.add_subcommand("selftest", "Run the full property suites");
  selftest_cmd->add_option("--max-len", self_len, "exhaustive word-length bound")
      ->check(CLI::PositiveNumber);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    return 2;
  }

  try {
    if (compare->parsed()) {
      const Augmentation aug = load_augmentation(spec_path);
      const Word v = parse_word_text(aug, v_text);
      const Word w = parse_word_text(aug, w_text);
      if (!leq_induced(aug, v, w)) {
        out << "false\n";
        return 1;
      }
      out << "true\n";
      if (want_witness)
        out << export_witness_json(*witness(aug, v, w), aug.alphabet()) << "\n";
      return 0;
    }
    if (hasse->parsed()) {
      const auto g = build_word_poset(load_augmentation(spec_path), max_len, node_cap);
      if (format == "dot")
        out << export_dot(g);
      else
        out << export_graph_json(g) << "\n";
      return 0;
    }
    if (components->parsed()) {
      const auto g = build_word_poset(load_augmentation(spec_path), max_len, node_cap);
      const bool concat = concat_rendering(g);
      for (const auto& comp : g.components) {
        for (std::size_t i = 0; i < comp.size(); ++i) {
          if (i > 0) out << ' ';
          out << render_word(g.words[static_cast<std::size_t>(comp[i])], concat);
        }
        out << "\n";
      }
      return 0;
    }
    if (classify->parsed()) {
      const Poset a = base_poset(parse_alphabet_spec(read_file(spec_a)));
      const Poset b = base_poset(parse_alphabet_spec(read_file(spec_b)));
      std::vector<std::string> names = a.elements();
      names.insert(names.end(), b.elements().begin(), b.elements().end());
      const ConeLabel label = classify_cone(split_word_text(word_text, names), a, b);
      switch (label) {
        case ConeLabel::Origin: out << "origin\n"; break;
        case ConeLabel::Elsewhere: out << "elsewhere\n"; break;
        case ConeLabel::ConeA: out << (future_side == "A" ? "future\n" : "past\n"); break;
        case ConeLabel::ConeB: out << (future_side == "A" ? "past\n" : "future\n"); break;
      }
      return 0;
    }
    // selftest
    const auto results = selftest::run_all(self_len);
    bool all_passed = true;
    for (const auto& r : results) {
      out << (r.passed ? "PASS" : "FAIL") << "  " << r.name;
      if (!r.detail.empty()) out << ": " << r.detail;
      out << "\n";
      all_passed = all_passed && r.passed;
    }
    out << (all_passed ? "all checks passed\n" : "some checks FAILED\n");
    return all_passed ? 0 : 1;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 3;
  }
}

}  // namespace wordorder
