// tlfg -- command-line driver. Subcommands:
//   parse "<sentence>"   readings with f-structures (and c-structures)
//   analyze <word>       morphological analyses, one per line
//   batch <file>         one sentence per line, statistics table
//
// Exit codes: 0 success, 1 unknown word, 2 ungrammatical, 3 usage/config.
#pragma once

#include <fstream>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "tlfg/avm_json.hpp"
#include "tlfg/pipeline.hpp"

namespace tlfg::cli {

namespace detail {

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// Drops the two pure-intermediary wrappers from printed c-structures.
inline glr::ParseTree simplify_tree(const glr::ParseTree& t, const glr::Tables& tables) {
  if (t.leaf()) return t;
  const std::string& label = tables.name(t.sym);
  if ((label == "XP" || label == "ADVC") && t.children.size() == 1)
    return simplify_tree(t.children[0], tables);
  glr::ParseTree out{t.prod, t.sym, -1, {}};
  for (const auto& c : t.children) out.children.push_back(simplify_tree(c, tables));
  return out;
}

inline void print_tree(std::ostream& out, const glr::ParseTree& t,
                       const glr::Tables& tables, const glr::Lattice& lattice,
                       bool ascii, int depth) {
  out << std::string(static_cast<std::size_t>(depth) * 2, ' ');
  if (t.leaf()) {
    std::string word = lattice.words[static_cast<std::size_t>(t.pos)];
    if (ascii) word = text::to_ascii(word);
    out << tables.name(t.sym) << " " << word << "\n";
    return;
  }
  out << tables.name(t.sym) << "\n";
  for (const auto& c : t.children) print_tree(out, c, tables, lattice, ascii, depth + 1);
}

inline void print_dot(std::ostream& out, const glr::ParseTree& t,
                      const glr::Tables& tables, const glr::Lattice& lattice,
                      bool ascii, int reading_index) {
  out << "digraph reading" << reading_index << " {\n";
  out << "  node [fontname=\"monospace\"];\n";
  int counter = 0;
  std::function<int(const glr::ParseTree&)> emit = [&](const glr::ParseTree& node) {
    int id = counter++;
    if (node.leaf()) {
      std::string word = lattice.words[static_cast<std::size_t>(node.pos)];
      if (ascii) word = text::to_ascii(word);
      out << "  n" << id << " [label=\"" << tables.name(node.sym) << "\\n" << word
          << "\" shape=box];\n";
      return id;
    }
    out << "  n" << id << " [label=\"" << tables.name(node.sym) << "\"];\n";
    for (const auto& c : node.children) {
      int cid = emit(c);
      out << "  n" << id << " -> n" << cid << ";\n";
    }
    return id;
  };
  emit(t);
  out << "}\n";
}

inline avm::ojson tree_json(const glr::ParseTree& t, const glr::Tables& tables,
                            const glr::Lattice& lattice) {
  avm::ojson j;
  if (t.leaf()) {
    j["cat"] = tables.name(t.sym);
    j["word"] = lattice.words[static_cast<std::size_t>(t.pos)];
    return j;
  }
  j["label"] = tables.name(t.sym);
  avm::ojson children = avm::ojson::array();
  for (const auto& c : t.children) children.push_back(tree_json(c, tables, lattice));
  j["children"] = std::move(children);
  return j;
}

}  // namespace detail

inline int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"unification-grammar parsing toolkit for Turkish"};
  app.name("tlfg");

  std::string lexicon_path, suffixes_path, subcat_path, grammar_path;
  app.add_option("--lexicon", lexicon_path, "root lexicon file (default: built-in)");
  app.add_option("--suffixes", suffixes_path, "suffix table file (default: built-in)");
  app.add_option("--subcat", subcat_path, "subcategorization file (default: built-in)");
  app.add_option("--grammar", grammar_path, "backbone rule file (default: built-in)");

  std::string sentence, word, batch_path;
  std::string format = "figure3";
  bool ascii = false, ctree = false, dot = false;
  int max_readings = 256;

  CLI::App* parse_cmd = app.add_subcommand("parse", "parse one sentence");
  parse_cmd->add_option("sentence", sentence, "sentence to parse")->required();
  parse_cmd->add_option("--format", format, "figure3 or json")
      ->check(CLI::IsMember({"figure3", "json"}));
  parse_cmd->add_flag("--ascii", ascii, "legacy ASCII transliteration on output");
  parse_cmd->add_flag("--ctree", ctree, "print c-structure trees");
  parse_cmd->add_flag("--dot", dot, "print c-structures as DOT digraphs");
  parse_cmd->add_option("--max-readings", max_readings, "reading cap")
      ->check(CLI::PositiveNumber);

  CLI::App* analyze_cmd = app.add_subcommand("analyze", "morphological analyses of one word");
  analyze_cmd->add_option("word", word, "word to analyze")->required();
  analyze_cmd->add_flag("--ascii", ascii, "legacy ASCII transliteration on output");
  analyze_cmd->add_option("--format", format, "figure3 (feature lists) or json")
      ->check(CLI::IsMember({"figure3", "json"}));

  CLI::App* batch_cmd = app.add_subcommand("batch", "parse a corpus, one sentence per line");
  batch_cmd->add_option("file", batch_path, "corpus file")->required();
  batch_cmd->add_option("--max-readings", max_readings, "reading cap")
      ->check(CLI::PositiveNumber);

  app.require_subcommand(1);

  try {
    std::reverse(args.begin(), args.end());
    app.parse(args);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    return 3;
  }

  std::optional<pipeline::Pipeline> pipe;
  try {
    std::string lex = lexicon_path.empty() ? seed::kLexicon : detail::read_file(lexicon_path);
    std::string suf = suffixes_path.empty() ? seed::kSuffixes : detail::read_file(suffixes_path);
    std::string sub = subcat_path.empty() ? seed::kSubcat : detail::read_file(subcat_path);
    std::string gra = grammar_path.empty() ? seed::kGrammar : detail::read_file(grammar_path);
    pipe.emplace(lexdb::LexDb::from_text(lex, suf, sub), grammar::Grammar::from_text(gra));
  } catch (const std::exception& e) {
    err << "configuration error: " << e.what() << "\n";
    return 3;
  }

  if (*analyze_cmd) {
    auto analyses = pipe->morphology().analyze(text::normalize_word(word));
    if (analyses.empty()) {
      err << "unknown word: " << word << "\n";
      return 1;
    }
    if (format == "json") {
      avm::ojson doc = avm::ojson::array();
      for (const auto& a : analyses) {
        avm::ojson ja;
        ja["root"] = a.root;
        ja["cat"] = a.root_cat;
        avm::ojson feats = avm::ojson::array();
        for (const auto& f : a.features) {
          avm::ojson jf;
          jf["feature"] = f.name;
          jf["value"] = f.value;
          if (!f.extra.empty()) jf["suffix"] = f.extra;
          feats.push_back(std::move(jf));
        }
        ja["features"] = std::move(feats);
        doc.push_back(std::move(ja));
      }
      out << doc.dump(2) << "\n";
    } else {
      for (std::size_t i = 0; i < analyses.size(); ++i)
        out << (i + 1) << ". " << analyses[i].list_format(ascii) << "\n";
    }
    return 0;
  }

  if (*parse_cmd) {
    auto result = pipe->parse_sentence(sentence, max_readings);
    if (result.status == pipeline::SentenceResult::Status::UnknownWord) {
      err << "unknown word: " << result.unknown_word << "\n";
      return 1;
    }
    if (result.status == pipeline::SentenceResult::Status::NoParse) {
      err << "ungrammatical: no reading for \"" << sentence << "\"\n";
      return 2;
    }
    if (format == "json") {
      avm::ojson doc;
      doc["sentence"] = sentence;
      doc["words"] = result.lattice.words;
      doc["ambiguity"] = result.readings.size();
      avm::ojson readings = avm::ojson::array();
      for (const auto& r : result.readings) {
        avm::ojson jr;
        jr["fstructure"] = avm::to_json(r.fstruct);
        jr["ctree"] = detail::tree_json(detail::simplify_tree(r.tree, pipe->tables()),
                                        pipe->tables(), result.lattice);
        jr["lexical_choice"] = r.lex_choice;
        readings.push_back(std::move(jr));
      }
      doc["readings"] = std::move(readings);
      out << doc.dump(2) << "\n";
      return 0;
    }
    out << "ambiguity: " << result.readings.size() << "\n";
    avm::PrettyOptions popt;
    popt.ascii = ascii;
    for (std::size_t i = 0; i < result.readings.size(); ++i) {
      const auto& r = result.readings[i];
      out << "\n;**** ambiguity " << (i + 1) << " ***\n";
      out << avm::pretty(r.fstruct, popt) << "\n";
      glr::ParseTree simplified = detail::simplify_tree(r.tree, pipe->tables());
      if (dot)
        detail::print_dot(out, simplified, pipe->tables(), result.lattice, ascii,
                          static_cast<int>(i + 1));
      else if (ctree)
        detail::print_tree(out, simplified, pipe->tables(), result.lattice, ascii, 0);
    }
    return 0;
  }

  // batch
  std::ifstream in(batch_path);
  if (!in) {
    err << "configuration error: cannot open " << batch_path << "\n";
    return 3;
  }
  pipeline::BatchReport report = pipe->batch(in, nullptr, max_readings);
  out << std::left << std::setw(5) << "Doc" << std::setw(7) << "#S" << std::setw(8)
      << "Parsed" << std::setw(8) << "Failed" << std::setw(10) << "#P/Sent"
      << "Secs/Sent\n";
  out << std::left << std::setw(5) << 1 << std::setw(7) << report.sentences
      << std::setw(8) << report.parsed << std::setw(8) << report.failed << std::setw(10)
      << std::fixed << std::setprecision(2) << report.avg_parses << std::setprecision(5)
      << report.avg_seconds << "\n";
  return 0;
}

}  // namespace tlfg::cli
