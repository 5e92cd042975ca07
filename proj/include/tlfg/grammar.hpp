// tlfg -- c-structure backbone rules and their constraint programs.
//
// Sentence-level rules pair an order-free <XP> backbone with the
// five-step assignment procedure: identify the single verb, route each
// remaining constituent (adverbials to ADVCOMPLEMENTS, the nominative NP
// to SUBJ, other NPs to frame-licensed object slots), then check that
// required objects are present, that no thematic role is doubled, and
// that subject and verb agree (with a covert subject synthesized from
// the verb's agreement when no nominative is present).
#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "tlfg/avm.hpp"
#include "tlfg/lexdb.hpp"
#include "tlfg/result.hpp"

namespace tlfg::grammar {

using avm::FeatureStructure;

// -- agreement ------------------------------------------------------------

struct Agr {
  int person = 3;      // 1, 2, 3
  bool plural = false;

  friend bool operator==(const Agr&, const Agr&) = default;

  static std::optional<Agr> parse(std::string_view s) {
    if (s.size() != 3) return std::nullopt;
    if (s[0] < '1' || s[0] > '3') return std::nullopt;
    std::string_view num = s.substr(1);
    if (num != "SG" && num != "PL") return std::nullopt;
    return Agr{s[0] - '0', num == "PL"};
  }

  std::string text() const { return std::to_string(person) + (plural ? "PL" : "SG"); }
};

// Subject-verb agreement: persons must match, numbers must match except
// that a third person plural subject may take a third person singular verb.
inline bool check_agreement(Agr subj, Agr verb) {
  if (subj.person != verb.person) return false;
  if (subj.plural == verb.plural) return true;
  return subj.person == 3 && subj.plural && !verb.plural;
}

// Genitive modifier vs. possessive of the modified in a possessive
// compound. Strict match except for one third-person mixed pair; the
// direction is fixed by the reported behaviour on "onların çocukları",
// where the PLU+3SG-POSS reading must be rejected.
inline bool check_poss_compound(Agr modifier, Agr possessive) {
  if (modifier == possessive) return true;
  return modifier.person == 3 && !modifier.plural && possessive.person == 3 &&
         possessive.plural;
}

// -- violations -------------------------------------------------------------

// A failed constraint; `where` names the assignment step ("step 1".."step 5")
// or the backbone rule id.
struct Violation {
  std::string where;
  std::string detail;
};

struct Constituent {
  std::string cat;  // effective category (XP nodes pass the child through)
  FeatureStructure fs;
};

// -- backbone rules -----------------------------------------------------------

struct Rule {
  std::string id;
  std::string lhs;
  std::vector<std::string> rhs;
  std::string program;
};

class Grammar {
 public:
  const std::vector<Rule>& rules() const { return rules_; }

  const Rule* rule(std::string_view id) const {
    for (const auto& r : rules_)
      if (r.id == id) return &r;
    return nullptr;
  }

  // `id: LHS -> RHS... @program`, UTF-8, # comments.
  static Grammar from_text(std::string_view body, const std::string& name = "grammar") {
    Grammar g;
    int number = 0;
    std::size_t pos = 0;
    while (pos <= body.size()) {
      std::size_t nl = body.find('\n', pos);
      std::string line(
          body.substr(pos, nl == std::string_view::npos ? body.size() - pos : nl - pos));
      ++number;
      pos = nl == std::string_view::npos ? body.size() + 1 : nl + 1;
      if (!line.empty() && line.back() == '\r') line.pop_back();
      if (line.empty() || line[0] == '#') continue;
      Rule r;
      auto colon = line.find(':');
      if (colon == std::string::npos)
        throw lexdb::LoadError(name, number, "expected `id: LHS -> RHS @program`");
      r.id = line.substr(0, colon);
      std::vector<std::string> tokens;
      std::size_t i = colon + 1;
      while (i < line.size()) {
        while (i < line.size() && line[i] == ' ') ++i;
        std::size_t j = i;
        while (j < line.size() && line[j] != ' ') ++j;
        if (j > i) tokens.push_back(line.substr(i, j - i));
        i = j;
      }
      if (tokens.size() < 4 || tokens[1] != "->" || tokens.back()[0] != '@')
        throw lexdb::LoadError(name, number, "expected `id: LHS -> RHS @program`");
      r.lhs = tokens[0];
      r.program = tokens.back().substr(1);
      for (std::size_t k = 2; k + 1 < tokens.size(); ++k) r.rhs.push_back(tokens[k]);
      if (r.rhs.empty()) throw lexdb::LoadError(name, number, "empty right-hand side");
      if (!known_program(r.program))
        throw lexdb::LoadError(name, number, "unknown equation program " + r.program);
      if (g.rule(r.id)) throw lexdb::LoadError(name, number, "duplicate rule id " + r.id);
      g.rules_.push_back(std::move(r));
    }
    if (g.rules_.empty()) throw lexdb::LoadError(name, 0, "no rules");
    return g;
  }

  static bool known_program(std::string_view p) {
    static const char* names[] = {"sentence", "xp",       "np_lex",  "np_nominal",
                                  "np_modify", "np_poss",  "vp",      "advp_lex",
                                  "qadvp",     "gerund_clause"};
    for (auto n : names)
      if (p == n) return true;
    return false;
  }

 private:
  std::vector<Rule> rules_;
};

// -- constraint programs -------------------------------------------------------

namespace detail {

inline bool adverbial_cat(std::string_view cat) { return cat == "ADVC" || cat == "GERC"; }

inline std::string unquoted(const FeatureStructure& fs, std::string_view feature) {
  auto v = fs.get(feature);
  return (v && v->is_atom()) ? v->atom_text() : std::string();
}

// Shared by the sentence rule and the gerund-clause rule. `base` is the
// clause f-structure under construction, `verb` the avm consulted for the
// frame and agreement; gerunds are non-finite (no agreement step, no
// covert subject).
inline Result<FeatureStructure, Violation> assign_to_clause(
    std::span<const Constituent> constituents, FeatureStructure base,
    const FeatureStructure& verb, bool finite, const lexdb::LexDb& db) {
  std::string root = detail::unquoted(verb, "R");
  std::string voice = verb.atom_at("VOICE");
  if (voice.empty()) voice = "ACT";
  const lexdb::SubcatFrame* frame = db.subcat_of(root, voice);
  if (!frame)
    throw std::runtime_error("no subcategorization frame for verb " + root + "/" + voice);

  FeatureStructure cur = std::move(base);
  // step 2: route each constituent
  for (const auto& c : constituents) {
    if (adverbial_cat(c.cat)) {
      auto added = avm::add_element(cur, "ADVCOMPLEMENTS", c.fs);
      if (!added) return Violation{"step 2", added.error()};
      cur = added.value();
      continue;
    }
    if (c.cat != "NP")
      return Violation{"step 2", "unexpected constituent of category " + c.cat};
    std::string kase = c.fs.atom_at("CASE");
    if (kase == "NOM") {
      if (cur.has("SUBJ"))
        return Violation{"step 2", "second nominative subject candidate"};
      FeatureStructure subj = c.fs;
      if (!subj.has("DEF")) {
        bool definite = subj.atom_at("CAT") == "PRON" || subj.has("POSS");
        subj = subj.with("DEF", FeatureStructure::atom(definite ? "+" : "-"));
      }
      cur = cur.with("SUBJ", subj);
      continue;
    }
    const lexdb::SubcatArg* arg = nullptr;
    for (const auto& a : frame->args)
      if (std::find(a.cases.begin(), a.cases.end(), kase) != a.cases.end()) {
        arg = &a;
        break;
      }
    if (arg) {
      if (cur.has(arg->role))
        return Violation{"step 4", "two objects with thematic role " + arg->role};
      FeatureStructure obj = c.fs;
      if (kase == "ACC" && !obj.has("DEF"))
        obj = obj.with("DEF", FeatureStructure::atom("+"));
      cur = cur.with(arg->role, obj);
      continue;
    }
    if (kase == "LOC" || kase == "ABL" || kase == "INS") {
      // non-subcategorized oblique: adverbial adjunct
      auto added = avm::add_element(cur, "ADVCOMPLEMENTS", c.fs);
      if (!added) return Violation{"step 2", added.error()};
      cur = added.value();
      continue;
    }
    return Violation{"step 2", "verb " + root + " does not take a " + kase + " object"};
  }

  // step 3: required objects
  for (const auto& a : frame->args)
    if (a.required && !cur.has(a.role))
      return Violation{"step 3", "missing required " + a.role + " object of " + root};

  // step 5: agreement, covert subject
  if (finite) {
    auto verb_agr = Agr::parse(verb.atom_at("AGR"));
    if (!verb_agr) return Violation{"step 5", "verb has no agreement feature"};
    if (auto subj = cur.get("SUBJ")) {
      auto subj_agr = Agr::parse(subj->atom_at("AGR"));
      if (!subj_agr) return Violation{"step 5", "subject has no agreement feature"};
      if (!check_agreement(*subj_agr, *verb_agr))
        return Violation{"step 5", "subject " + subj_agr->text() + " does not agree with verb " +
                                       verb_agr->text()};
    } else {
      FeatureStructure covert = FeatureStructure::make_avm(
          {{"AGR", FeatureStructure::atom(verb_agr->text())},
           {"COVERT", FeatureStructure::atom("+")}});
      cur = cur.with("SUBJ", covert);
    }
  }
  return cur;
}

}  // namespace detail

// The sentence-level assignment over order-free constituents. Exactly one
// child must be a VP (step 1); the rest are routed per step 2.
inline Result<FeatureStructure, Violation> assign_constituents(
    std::span<const Constituent> children, const lexdb::LexDb& db) {
  int verb_index = -1;
  for (std::size_t i = 0; i < children.size(); ++i) {
    if (children[i].cat == "VP") {
      if (verb_index >= 0) return Violation{"step 1", "more than one verb"};
      verb_index = static_cast<int>(i);
    }
  }
  if (verb_index < 0) return Violation{"step 1", "sentence has no verb"};
  const FeatureStructure& base = children[static_cast<std::size_t>(verb_index)].fs;
  auto verb = base.get("VERB");
  if (!verb) return Violation{"step 1", "verb phrase lacks a VERB"};
  std::vector<Constituent> rest;
  for (std::size_t i = 0; i < children.size(); ++i)
    if (static_cast<int>(i) != verb_index) rest.push_back(children[i]);
  return detail::assign_to_clause(rest, base, *verb, /*finite=*/true, db);
}

// -- rule evaluation -------------------------------------------------------------

namespace detail {

inline bool lexical_cat(std::string_view cat) {
  return cat == "N" || cat == "ADJ" || cat == "PRON";
}

// NP -> ADJ NP and NP -> NP[GEN] NP[POSS] both produce a MODIFIER/MODIFIED
// composite; head agreement, case (and LEX for a lexical head) propagate.
inline FeatureStructure composite_np(const FeatureStructure& modifier,
                                     const FeatureStructure& head, bool possessive) {
  std::vector<avm::Feature> feats = {
      {"CAT", FeatureStructure::atom("NP")},
      {"MODIFIER", modifier},
      {"MODIFIED", head},
  };
  if (auto agr = head.get("AGR")) feats.emplace_back("AGR", *agr);
  if (auto kase = head.get("CASE")) feats.emplace_back("CASE", *kase);
  if (auto poss = head.get("POSS")) feats.emplace_back("POSS", *poss);
  if (lexical_cat(head.atom_at("CAT")))
    if (auto lex = head.get("LEX")) feats.emplace_back("LEX", *lex);
  if (auto def = head.get("DEF"))
    feats.emplace_back("DEF", *def);
  else
    feats.emplace_back("DEF", FeatureStructure::atom(possessive ? "+" : "-"));
  return FeatureStructure::make_avm(std::move(feats));
}

}  // namespace detail

// Evaluates one backbone rule over already-evaluated children, returning
// the constituent the parent rules see, or the violation that discards
// this derivation.
inline Result<Constituent, Violation> eval_rule(const Rule& rule,
                                                std::span<const Constituent> children,
                                                const lexdb::LexDb& db) {
  const std::string& p = rule.program;

  if (p == "xp") return Constituent{children[0].cat, children[0].fs};

  if (p == "np_lex") return Constituent{"NP", children[0].fs};

  if (p == "np_nominal")  // any adjective can be used as a noun
    return Constituent{"NP", children[0].fs.with("CAT", FeatureStructure::atom("NP"))};

  if (p == "np_modify")
    return Constituent{"NP", detail::composite_np(children[0].fs, children[1].fs, false)};

  if (p == "np_poss") {
    const FeatureStructure& modifier = children[0].fs;
    const FeatureStructure& head = children[1].fs;
    if (modifier.atom_at("CASE") != "GEN")
      return Violation{rule.id, "possessive-compound modifier is not genitive"};
    auto poss = grammar::Agr::parse(head.atom_at("POSS"));
    if (!poss) return Violation{rule.id, "possessive-compound head has no possessive"};
    auto mod_agr = grammar::Agr::parse(modifier.atom_at("AGR"));
    if (!mod_agr) return Violation{rule.id, "modifier has no agreement feature"};
    if (!check_poss_compound(*mod_agr, *poss))
      return Violation{rule.id, "modifier " + mod_agr->text() +
                                    " does not agree with possessive " + poss->text()};
    return Constituent{"NP", detail::composite_np(modifier, head, true)};
  }

  if (p == "vp") {
    FeatureStructure out;
    const FeatureStructure& v = children.back().fs;
    out = out.with("VERB", v);
    for (std::size_t i = 0; i + 1 < children.size(); ++i) {
      const Constituent& c = children[i];
      if (c.cat == "QADVP") {
        auto added = avm::add_element(out, "ADVCOMPLEMENTS", c.fs);
        if (!added) return Violation{rule.id, added.error()};
        out = added.value();
        continue;
      }
      // preverbal indefinite direct object: nominative, non-pronominal,
      // not possessive-marked
      if (c.fs.atom_at("CASE") != "NOM")
        return Violation{rule.id, "verb-phrase object must be nominative"};
      if (c.fs.atom_at("CAT") == "PRON")
        return Violation{rule.id, "pronoun cannot be an indefinite object"};
      if (c.fs.has("POSS"))
        return Violation{rule.id, "possessive-marked phrase cannot be an indefinite object"};
      std::string root = detail::unquoted(v, "R");
      std::string voice = v.atom_at("VOICE");
      const lexdb::SubcatFrame* frame = db.subcat_of(root, voice.empty() ? "ACT" : voice);
      if (!frame)
        throw std::runtime_error("no subcategorization frame for verb " + root);
      const lexdb::SubcatArg* arg = nullptr;
      for (const auto& a : frame->args)
        if (a.indef_allowed) {
          arg = &a;
          break;
        }
      if (!arg)
        return Violation{rule.id, "verb " + root + " does not take an indefinite object"};
      out = out.with(arg->role, c.fs.with("DEF", FeatureStructure::atom("-")));
    }
    return Constituent{"VP", out};
  }

  if (p == "advp_lex") return Constituent{"ADVC", children[0].fs};

  if (p == "qadvp") {
    const FeatureStructure& adj = children[0].fs;
    if (adj.atom_at("SUB") != "QUAL")
      return Violation{rule.id, "only qualitative adjectives act as adverbial complements"};
    return Constituent{"QADVP", adj.with("CAT", FeatureStructure::atom("ADVP"))};
  }

  if (p == "gerund_clause") {
    const Constituent& head = children.back();
    auto conv = head.fs.get("CONV");
    if (!conv || conv->atom_at("CAT") != "V")
      return Violation{rule.id, "gerund clause head is not a converted verb"};
    std::span<const Constituent> rest = children.first(children.size() - 1);
    auto res = detail::assign_to_clause(rest, head.fs, *conv, /*finite=*/false, db);
    if (!res) return res.error();
    return Constituent{"GERC", res.value()};
  }

  if (p == "sentence") {
    auto res = assign_constituents(children, db);
    if (!res) return res.error();
    return Constituent{"S", res.value()};
  }

  throw std::logic_error("unknown equation program " + p);
}

}  // namespace tlfg::grammar
