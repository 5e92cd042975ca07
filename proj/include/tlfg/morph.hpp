// tlfg -- morphotactic analyzer for agglutinative word forms.
//
// Segmentation-based: candidate roots (with stem-final alternations) are
// matched against the surface word, then a DFS over the suffix
// continuation classes consumes the rest, resolving each suffix template
// through vowel harmony, consonant voicing and buffer consonants. Every
// licensed segmentation yields one analysis as an ordered feature list;
// projection to a lexical f-structure (with nominative/3SG defaults)
// happens separately.
#pragma once

#include <algorithm>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "tlfg/avm.hpp"
#include "tlfg/lexdb.hpp"
#include "tlfg/text.hpp"

namespace tlfg::morph {

struct MorphFeat {
  std::string name;   // AGR, CASE, POSS, ASPECT, SUB, CONV, ...
  std::string value;  // 3SG, LOC, PAST, TEMP, ADJ, ...
  std::string extra;  // CONV only: suffix citation form ("ki", "dikce")

  friend bool operator==(const MorphFeat&, const MorphFeat&) = default;
};

// One reading of a surface word. Feature order reflects suffixation
// order; CONV entries mark inflectional-group boundaries.
struct MorphAnalysis {
  std::string root;      // canonical root surface
  std::string root_cat;  // category of the root
  std::string surface;   // normalized word
  std::vector<MorphFeat> features;
  std::vector<std::string> suffix_ids;

  // ((*CAT* N)(*R* "ev")(*CASE* LOC)(*CONV* ADJ "ki")(*AGR* 3PL)(*CASE* GEN))
  std::string list_format(bool ascii = false) const {
    auto word = [&](const std::string& s) { return ascii ? text::to_ascii(s) : s; };
    std::string out = "((*CAT* " + root_cat + ")(*R* \"" + word(root) + "\")";
    for (const auto& f : features) {
      if (f.name == "CONV")
        out += "(*CONV* " + f.value + " \"" + word(f.extra) + "\")";
      else
        out += "(*" + f.name + "* " + f.value + ")";
    }
    out += ")";
    return out;
  }

  friend bool operator==(const MorphAnalysis&, const MorphAnalysis&) = default;
};

// -- allomorphy -----------------------------------------------------------

// Realizes a suffix template against a stem: A/I harmonize with the last
// vowel (updated left to right within the suffix), D voices by the
// stem-final consonant, parenthesized buffers appear only where the stem
// requires them. Throws std::invalid_argument if the stem has no vowel.
inline std::string allomorph(const lexdb::Suffix& suffix, std::string_view stem) {
  const std::string& tpl = suffix.surface_template;
  if (tpl.empty()) return "";
  auto stem_cps = text::decode_utf8(stem);
  char32_t harmony = text::last_vowel(stem_cps);
  if (harmony == 0) throw std::invalid_argument("stem has no vowel: " + std::string(stem));
  bool stem_ends_vowel = !stem_cps.empty() && text::is_vowel(stem_cps.back());
  char32_t stem_final = stem_cps.empty() ? 0 : stem_cps.back();

  auto low_i = [&](char32_t v) -> char32_t {
    if (v == U'a' || v == text::kDotlessI) return text::kDotlessI;
    if (v == U'e' || v == U'i') return U'i';
    if (v == U'o' || v == U'u') return U'u';
    return text::kUDia;  // ö, ü
  };

  std::vector<char32_t> out;
  auto tpl_cps = text::decode_utf8(tpl);
  std::size_t i = 0;
  // optional buffer: (y) (s) (n) after vowels, (I) after consonants
  if (tpl_cps.size() >= 3 && tpl_cps[0] == U'(') {
    char32_t buf = tpl_cps[1];
    if (tpl_cps[2] != U')') throw std::invalid_argument("bad template " + tpl);
    i = 3;
    if (buf == U'I') {
      if (!stem_ends_vowel) {
        char32_t v = low_i(harmony);
        out.push_back(v);
        harmony = v;
      }
    } else if (stem_ends_vowel) {
      out.push_back(buf);
    }
  }
  for (; i < tpl_cps.size(); ++i) {
    char32_t c = tpl_cps[i];
    if (c == U'A') {
      char32_t v = text::is_back_vowel(harmony) ? U'a' : U'e';
      out.push_back(v);
      harmony = v;
    } else if (c == U'I') {
      char32_t v = low_i(harmony);
      out.push_back(v);
      harmony = v;
    } else if (c == U'D') {
      out.push_back(text::is_voiceless_consonant(stem_final) ? U't' : U'd');
    } else {
      out.push_back(c);
      if (text::is_vowel(c)) harmony = c;
    }
  }
  return text::encode_utf8(out);
}

// -- analyzer ---------------------------------------------------------------

class Morphology {
 public:
  explicit Morphology(const lexdb::LexDb& db) : db_(&db) {}

  // Every analysis licensed by the lexicon, allomorphy and continuation
  // classes; empty when the word is unknown.
  std::vector<MorphAnalysis> analyze(std::string_view word) const {
    std::string norm = text::normalize_word(word);
    std::vector<MorphAnalysis> out;
    for (const auto& root : db_->roots()) {
      try_root(root, root.surface, false, norm, out);
      if (root.soften) try_root(root, softened(root.surface), true, norm, out);
    }
    std::stable_sort(out.begin(), out.end(), [](const MorphAnalysis& a, const MorphAnalysis& b) {
      auto alen = text::decode_utf8(a.root).size();
      auto blen = text::decode_utf8(b.root).size();
      if (alen != blen) return alen > blen;
      return a.suffix_ids < b.suffix_ids;
    });
    return out;
  }

  // Inverse direction, used as the round-trip oracle for analyze().
  std::string generate(const lexdb::RootEntry& root,
                       std::span<const std::string> suffix_ids) const {
    std::string stem = root.surface;
    std::string cls = lexdb::start_class_for(root.cat);
    bool at_root_junction = true;
    for (const auto& id : suffix_ids) {
      const lexdb::Suffix* s = db_->suffix(id);
      if (!s) throw std::invalid_argument("unknown suffix " + id);
      if (std::find(s->from_classes.begin(), s->from_classes.end(), cls) ==
          s->from_classes.end())
        throw std::invalid_argument("suffix " + id + " cannot follow class " + cls);
      std::string realized = allomorph(*s, stem);
      if (at_root_junction && root.soften && !realized.empty() &&
          text::is_vowel(text::decode_utf8(realized)[0]))
        stem = softened(stem);
      stem += realized;
      cls = s->to_class;
      at_root_junction = false;
    }
    if (!lexdb::continuation_classes().at(cls).accepting)
      throw std::invalid_argument("suffix chain ends in non-final class " + cls);
    return stem;
  }

  // Lexical f-structure for one analysis: category conversions nest the
  // pre-conversion core under CONV, nominals get unmarked-case and
  // agreement defaults, finite verbs get TYPE/VOICE defaults.
  std::pair<std::string, avm::FeatureStructure> project(const MorphAnalysis& a) const {
    using avm::FeatureStructure;
    FeatureStructure fs = FeatureStructure::make_avm(
        {{"CAT", FeatureStructure::atom(a.root_cat)},
         {"R", FeatureStructure::str(a.root)}});
    for (const auto& f : a.features) {
      if (f.name == "CONV") {
        FeatureStructure inner = fs.with("WITH-SUFFIX", FeatureStructure::str(f.extra));
        fs = FeatureStructure::make_avm({{"CAT", FeatureStructure::atom(f.value)},
                                         {"CONV", inner}});
      } else {
        fs = fs.with(f.name, FeatureStructure::atom(f.value));
      }
    }
    fs = fs.with("LEX", FeatureStructure::str(a.surface));
    std::string cat = fs.atom_at("CAT");
    if (cat == "N" || cat == "ADJ" || cat == "PRON") {
      if (!fs.has("AGR")) fs = fs.with("AGR", FeatureStructure::atom("3SG"));
      if (!fs.has("CASE")) fs = fs.with("CASE", FeatureStructure::atom("NOM"));
    } else if (cat == "V") {
      if (!fs.has("TYPE")) fs = fs.with("TYPE", FeatureStructure::atom("VERBAL"));
      if (!fs.has("VOICE")) fs = fs.with("VOICE", FeatureStructure::atom("ACT"));
    }
    return {cat, fs};
  }

 private:
  const lexdb::LexDb* db_;

  static std::string softened(std::string_view surface) {
    auto cps = text::decode_utf8(surface);
    if (!cps.empty()) cps.back() = text::soften_consonant(cps.back());
    return text::encode_utf8(cps);
  }

  void try_root(const lexdb::RootEntry& root, const std::string& variant, bool soft,
                const std::string& norm, std::vector<MorphAnalysis>& out) const {
    if (norm.size() < variant.size() || norm.compare(0, variant.size(), variant) != 0)
      return;
    if (soft) {
      // the alternated stem only appears before a vowel-initial suffix
      if (norm.size() == variant.size()) return;
      auto rest = text::decode_utf8(std::string_view(norm).substr(variant.size()));
      if (rest.empty() || !text::is_vowel(rest[0])) return;
    }
    std::vector<MorphFeat> feats;
    for (const auto& [k, v] : root.presets) feats.push_back({k, v, ""});
    std::vector<std::string> chain;
    dfs(root, norm, variant.size(), lexdb::start_class_for(root.cat), feats, chain, out, 0);
  }

  void dfs(const lexdb::RootEntry& root, const std::string& norm, std::size_t pos,
           const std::string& cls, std::vector<MorphFeat>& feats,
           std::vector<std::string>& chain, std::vector<MorphAnalysis>& out,
           int depth) const {
    if (depth > 16) return;
    if (pos == norm.size() && lexdb::continuation_classes().at(cls).accepting)
      out.push_back({root.surface, root.cat, norm, feats, chain});
    for (const auto& s : db_->suffixes()) {
      if (std::find(s.from_classes.begin(), s.from_classes.end(), cls) ==
          s.from_classes.end())
        continue;
      std::string realized;
      try {
        realized = allomorph(s, std::string_view(norm).substr(0, pos));
      } catch (const std::invalid_argument&) {
        continue;  // vowel-less stem: no harmony possible
      }
      if (norm.compare(pos, realized.size(), realized) != 0) continue;
      std::size_t nfeats = feats.size();
      if (!s.conv_to.empty()) feats.push_back({"CONV", s.conv_to, s.conv_name});
      for (const auto& [k, v] : s.emits) feats.push_back({k, v, ""});
      chain.push_back(s.id);
      dfs(root, norm, pos + realized.size(), s.to_class, feats, chain, out, depth + 1);
      chain.pop_back();
      feats.resize(nfeats);
    }
  }
};

}  // namespace tlfg::morph
