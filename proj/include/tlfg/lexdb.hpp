// tlfg -- lexical database: root lexicon, suffix table, continuation
// classes and the verb subcategorization ("argument structure") frames.
//
// File formats (UTF-8, line oriented, # comments):
//   lexicon:  surface<TAB>category<TAB>flag,flag,...
//   suffixes: id<TAB>template<TAB>fromClass[,fromClass...]<TAB>toClass<TAB>feature=value;...
//   subcat:   root<TAB>voice<TAB>role:case[|case...][:opt][:indef];...
#pragma once

#include <cctype>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "tlfg/text.hpp"

namespace tlfg::lexdb {

struct LoadError : std::runtime_error {
  LoadError(const std::string& file, int line, const std::string& what)
      : std::runtime_error(file + ":" + std::to_string(line) + ": " + what) {}
};

// -- domain records ------------------------------------------------------

struct RootEntry {
  std::string surface;   // canonical lowercase Turkish
  std::string cat;       // N, ADJ, V, PRON, ADVP
  bool soften = false;   // stem-final alternation (çocuk~çocuğ)
  bool qual = false;     // qualitative adjective (usable adverbially)
  // preset lexical features, e.g. agr=1SG / case=GEN on pronoun forms
  std::vector<std::pair<std::string, std::string>> presets;
};

struct Suffix {
  std::string id;
  std::string surface_template;  // harmony metaphonemes A I D, buffers (y)(s)(n)(I)
  std::vector<std::string> from_classes;
  std::string to_class;
  std::vector<std::pair<std::string, std::string>> emits;  // feature -> value
  std::string conv_to;    // nonempty for category conversions (ADJ, ADVP)
  std::string conv_name;  // citation form recorded in CONV ("ki", "dikce")
};

struct SubcatArg {
  std::string role;                // THEME, GOAL, LOCATIVE, SOURCE
  std::vector<std::string> cases;  // licensed case markers
  bool required = true;
  bool indef_allowed = false;      // may surface as preverbal nominative
};

struct SubcatFrame {
  std::string root;
  std::string voice = "ACT";
  std::vector<SubcatArg> args;
};

// -- continuation classes -------------------------------------------------

struct ClassInfo {
  bool accepting = false;
};

inline const std::map<std::string, ClassInfo>& continuation_classes() {
  static const std::map<std::string, ClassInfo> classes = {
      {"NStem", {true}},  {"NPlu", {true}},  {"NPoss", {true}},
      {"NCase", {true}},  {"NCaseKi", {true}}, {"AdjKi", {true}},
      {"Adj", {true}},    {"Pron", {true}},  {"Adv", {true}},
      {"VStem", {false}}, {"VPast", {false}}, {"VFin", {true}},
      {"GerAdvp", {true}},
  };
  return classes;
}

inline std::string start_class_for(std::string_view cat) {
  if (cat == "N") return "NStem";
  if (cat == "V") return "VStem";
  if (cat == "ADJ") return "Adj";
  if (cat == "PRON") return "Pron";
  if (cat == "ADVP") return "Adv";
  return "";
}

// -- database --------------------------------------------------------------

class LexDb {
 public:
  const std::vector<RootEntry>& roots() const { return roots_; }
  const std::vector<Suffix>& suffixes() const { return suffixes_; }

  const Suffix* suffix(std::string_view id) const {
    for (const auto& s : suffixes_)
      if (s.id == id) return &s;
    return nullptr;
  }

  const RootEntry* root(std::string_view surface, std::string_view cat) const {
    for (const auto& r : roots_)
      if (r.surface == surface && r.cat == cat) return &r;
    return nullptr;
  }

  // Frame lookup for a (root, voice) pair; nullptr means unknown verb,
  // which callers report separately from parse failure.
  const SubcatFrame* subcat_of(std::string_view root, std::string_view voice) const {
    auto it = frames_.find({std::string(root), std::string(voice)});
    return it == frames_.end() ? nullptr : &it->second;
  }

  std::size_t frame_count() const { return frames_.size(); }

  static LexDb from_text(std::string_view lexicon, std::string_view suffixes,
                         std::string_view subcat,
                         const std::string& lexicon_name = "lexicon",
                         const std::string& suffixes_name = "suffixes",
                         const std::string& subcat_name = "subcat") {
    LexDb db;
    db.parse_lexicon(lexicon, lexicon_name);
    db.parse_suffixes(suffixes, suffixes_name);
    db.parse_subcat(subcat, subcat_name);
    db.validate(lexicon_name);
    return db;
  }

 private:
  std::vector<RootEntry> roots_;
  std::vector<Suffix> suffixes_;
  std::map<std::pair<std::string, std::string>, SubcatFrame> frames_;

  struct Line {
    int number;
    std::vector<std::string> cols;
  };

  static std::vector<Line> tab_lines(std::string_view body) {
    std::vector<Line> out;
    int number = 0;
    std::size_t pos = 0;
    while (pos <= body.size()) {
      std::size_t nl = body.find('\n', pos);
      std::string_view raw =
          body.substr(pos, nl == std::string_view::npos ? body.size() - pos : nl - pos);
      ++number;
      pos = nl == std::string_view::npos ? body.size() + 1 : nl + 1;
      if (!raw.empty() && raw.back() == '\r') raw.remove_suffix(1);
      if (raw.empty() || raw.front() == '#') continue;
      Line line{number, {}};
      std::size_t c = 0;
      while (true) {
        std::size_t tab = raw.find('\t', c);
        line.cols.emplace_back(raw.substr(c, tab == std::string_view::npos ? raw.size() - c : tab - c));
        if (tab == std::string_view::npos) break;
        c = tab + 1;
      }
      out.push_back(std::move(line));
    }
    return out;
  }

  static std::vector<std::string> split(std::string_view s, char sep) {
    std::vector<std::string> out;
    if (s.empty()) return out;
    std::size_t pos = 0;
    while (true) {
      std::size_t p = s.find(sep, pos);
      out.emplace_back(s.substr(pos, p == std::string_view::npos ? s.size() - pos : p - pos));
      if (p == std::string_view::npos) break;
      pos = p + 1;
    }
    return out;
  }

  void parse_lexicon(std::string_view body, const std::string& file) {
    for (const auto& line : tab_lines(body)) {
      if (line.cols.size() < 2)
        throw LoadError(file, line.number, "expected surface<TAB>category");
      RootEntry r;
      r.surface = text::normalize_word(line.cols[0]);
      r.cat = line.cols[1];
      if (r.cat.empty()) throw LoadError(file, line.number, "empty category");
      if (start_class_for(r.cat).empty())
        throw LoadError(file, line.number, "unknown category " + r.cat);
      if (line.cols.size() > 2) {
        for (const auto& flag : split(line.cols[2], ',')) {
          if (flag.empty()) continue;
          if (flag == "soft") {
            r.soften = true;
          } else if (flag == "qual") {
            r.qual = true;
            r.presets.emplace_back("SUB", "QUAL");
          } else if (auto eq = flag.find('='); eq != std::string::npos) {
            std::string key = flag.substr(0, eq);
            std::string value = flag.substr(eq + 1);
            for (auto& ch : key) ch = static_cast<char>(std::toupper(static_cast<unsigned char>(ch)));
            r.presets.emplace_back(key, value);
          } else {
            throw LoadError(file, line.number, "unknown flag " + flag);
          }
        }
      }
      if (root(r.surface, r.cat))
        throw LoadError(file, line.number, "duplicate root " + r.surface + "/" + r.cat);
      roots_.push_back(std::move(r));
    }
  }

  void parse_suffixes(std::string_view body, const std::string& file) {
    for (const auto& line : tab_lines(body)) {
      if (line.cols.size() < 4)
        throw LoadError(file, line.number,
                        "expected id<TAB>template<TAB>fromClass<TAB>toClass[<TAB>features]");
      Suffix s;
      s.id = line.cols[0];
      if (suffix(s.id)) throw LoadError(file, line.number, "duplicate suffix " + s.id);
      // kept verbatim: uppercase A/I/D are harmony metaphonemes
      s.surface_template = line.cols[1];
      s.from_classes = split(line.cols[2], ',');
      s.to_class = line.cols[3];
      const auto& classes = continuation_classes();
      for (const auto& c : s.from_classes)
        if (!classes.count(c)) throw LoadError(file, line.number, "unknown class " + c);
      if (!classes.count(s.to_class))
        throw LoadError(file, line.number, "unknown class " + s.to_class);
      if (line.cols.size() > 4) {
        for (const auto& fv : split(line.cols[4], ';')) {
          if (fv.empty()) continue;
          auto eq = fv.find('=');
          if (eq == std::string::npos)
            throw LoadError(file, line.number, "expected feature=value, got " + fv);
          std::string key = fv.substr(0, eq);
          std::string value = fv.substr(eq + 1);
          if (key == "conv") {
            auto colon = value.find(':');
            if (colon == std::string::npos)
              throw LoadError(file, line.number, "conv needs TARGET:name");
            s.conv_to = value.substr(0, colon);
            s.conv_name = value.substr(colon + 1);
          } else {
            for (auto& ch : key)
              ch = static_cast<char>(std::toupper(static_cast<unsigned char>(ch)));
            s.emits.emplace_back(key, value);
          }
        }
      }
      suffixes_.push_back(std::move(s));
    }
  }

  void parse_subcat(std::string_view body, const std::string& file) {
    for (const auto& line : tab_lines(body)) {
      if (line.cols.size() < 2)
        throw LoadError(file, line.number, "expected root<TAB>voice[<TAB>args]");
      SubcatFrame f;
      f.root = text::normalize_word(line.cols[0]);
      f.voice = line.cols[1];
      if (f.voice.empty()) throw LoadError(file, line.number, "empty voice");
      if (line.cols.size() > 2 && !line.cols[2].empty()) {
        for (const auto& spec : split(line.cols[2], ';')) {
          if (spec.empty()) continue;
          auto parts = split(spec, ':');
          if (parts.size() < 2)
            throw LoadError(file, line.number, "expected role:case[...], got " + spec);
          SubcatArg arg;
          arg.role = parts[0];
          arg.cases = split(parts[1], '|');
          if (arg.cases.empty() || arg.cases[0].empty())
            throw LoadError(file, line.number, "argument " + arg.role + " has no cases");
          for (std::size_t i = 2; i < parts.size(); ++i) {
            if (parts[i] == "opt")
              arg.required = false;
            else if (parts[i] == "indef")
              arg.indef_allowed = true;
            else
              throw LoadError(file, line.number, "unknown argument flag " + parts[i]);
          }
          for (const auto& existing : f.args)
            if (existing.role == arg.role)
              throw LoadError(file, line.number, "duplicate role " + arg.role);
          f.args.push_back(std::move(arg));
        }
      }
      auto key = std::make_pair(f.root, f.voice);
      if (frames_.count(key))
        throw LoadError(file, line.number, "duplicate frame for " + f.root + "/" + f.voice);
      frames_.emplace(std::move(key), std::move(f));
    }
  }

  // Every verb root must carry a frame; the parser consults it
  // unconditionally when it reaches a finite verb or gerund.
  void validate(const std::string& file) const {
    for (const auto& r : roots_)
      if (r.cat == "V" && !subcat_of(r.surface, "ACT"))
        throw LoadError(file, 0, "verb " + r.surface + " has no subcat frame");
  }
};

}  // namespace tlfg::lexdb
