#include <catch2/catch_amalgamated.hpp>

#include "helpers.hpp"
#include "tlfg/grammar.hpp"
#include "tlfg/morph.hpp"
#include "tlfg/seed.hpp"

using namespace tlfg;
using avm::FeatureStructure;
using grammar::Agr;
using grammar::Constituent;

namespace {

const lexdb::LexDb& db() {
  static lexdb::LexDb d =
      lexdb::LexDb::from_text(seed::kLexicon, seed::kSuffixes, seed::kSubcat);
  return d;
}

// lexical constituent via the real morphology; `chain` selects among
// ambiguous analyses by suffix ids (empty = first analysis)
Constituent lex(const std::string& word, std::vector<std::string> chain = {}) {
  static morph::Morphology m(db());
  auto analyses = m.analyze(word);
  REQUIRE_FALSE(analyses.empty());
  for (const auto& a : analyses)
    if (chain.empty() || a.suffix_ids == chain) {
      auto [cat, fs] = m.project(a);
      return {cat, fs};
    }
  FAIL("no analysis of " + word + " with the requested chain");
  return {"", avm::FeatureStructure()};
}

Constituent np(const Constituent& c) { return {"NP", c.fs}; }

Constituent vp(const Constituent& v) {
  return {"VP", FeatureStructure::make_avm({{"VERB", v.fs}})};
}

std::vector<Agr> all_agr() {
  std::vector<Agr> out;
  for (int p = 1; p <= 3; ++p)
    for (bool plural : {false, true}) out.push_back({p, plural});
  return out;
}

}  // namespace

TEST_CASE("subject-verb agreement table") {
  CHECK(grammar::check_agreement({3, true}, {3, true}));    // onlar geldiler
  CHECK(grammar::check_agreement({3, true}, {3, false}));   // 3PL subject, 3SG verb
  CHECK_FALSE(grammar::check_agreement({3, false}, {3, true}));
  CHECK_FALSE(grammar::check_agreement({1, false}, {2, false}));

  int accepted = 0;
  for (Agr s : all_agr())
    for (Agr v : all_agr())
      if (grammar::check_agreement(s, v)) ++accepted;
  CHECK(accepted == 7);  // six matching pairs plus the 3PL/3SG exception
}

TEST_CASE("possessive-compound agreement table") {
  CHECK(grammar::check_poss_compound({3, true}, {3, true}));
  CHECK_FALSE(grammar::check_poss_compound({3, true}, {3, false}));  // rejects (1a) in (2a)
  CHECK(grammar::check_poss_compound({3, false}, {3, true}));
  CHECK_FALSE(grammar::check_poss_compound({1, false}, {3, true}));

  int accepted = 0;
  for (Agr m : all_agr())
    for (Agr p : all_agr())
      if (grammar::check_poss_compound(m, p)) ++accepted;
  CHECK(accepted == 7);
}

TEST_CASE("agr parsing") {
  auto a = Agr::parse("3PL");
  REQUIRE(a.has_value());
  CHECK(a->person == 3);
  CHECK(a->plural);
  CHECK(a->text() == "3PL");
  CHECK_FALSE(Agr::parse("4SG").has_value());
  CHECK_FALSE(Agr::parse("").has_value());
}

TEST_CASE("constituent assignment follows the five steps") {
  SECTION("typical transitive sentence") {
    std::vector<Constituent> children = {np(lex("ben")), np(lex("çocuğa")),
                                         np(lex("kitabı")), vp(lex("verdim"))};
    auto r = grammar::assign_constituents(children, db());
    REQUIRE(r.ok());
    const auto& fs = r.value();
    CHECK(fs.get("SUBJ")->atom_at("AGR") == "1SG");
    CHECK(fs.get("GOAL")->atom_at("CASE") == "DAT");
    CHECK(fs.get("THEME")->atom_at("CASE") == "ACC");
    CHECK(fs.get("THEME")->atom_at("DEF") == "+");  // accusative object is definite
    CHECK(fs.get("SUBJ")->atom_at("DEF") == "+");   // pronoun subject
  }
  SECTION("assignment is order-insensitive") {
    std::vector<Constituent> a = {np(lex("ben")), np(lex("çocuğa")), np(lex("kitabı")),
                                  vp(lex("verdim"))};
    std::vector<Constituent> b = {vp(lex("verdim")), np(lex("kitabı")), np(lex("ben")),
                                  np(lex("çocuğa"))};
    auto ra = grammar::assign_constituents(a, db());
    auto rb = grammar::assign_constituents(b, db());
    REQUIRE(ra.ok());
    REQUIRE(rb.ok());
    CHECK(ra.value() == rb.value());
  }
  SECTION("covert subject takes the verb's agreement") {
    std::vector<Constituent> children = {np(lex("çocuğa")), np(lex("kitabı")),
                                         vp(lex("verdim"))};
    auto r = grammar::assign_constituents(children, db());
    REQUIRE(r.ok());
    auto subj = r.value().get("SUBJ");
    REQUIRE(subj.has_value());
    CHECK(subj->atom_at("AGR") == "1SG");
    CHECK(subj->atom_at("COVERT") == "+");
  }
  SECTION("step 1: no verb") {
    std::vector<Constituent> children = {np(lex("ben"))};
    auto r = grammar::assign_constituents(children, db());
    REQUIRE_FALSE(r.ok());
    CHECK(r.error().where == "step 1");
  }
  SECTION("step 1: two verbs") {
    std::vector<Constituent> children = {vp(lex("verdim")), vp(lex("geldiler"))};
    auto r = grammar::assign_constituents(children, db());
    REQUIRE_FALSE(r.ok());
    CHECK(r.error().where == "step 1");
  }
  SECTION("step 2: two nominative subjects") {
    std::vector<Constituent> children = {np(lex("ben")), np(lex("top")),
                                         vp(lex("geldiler"))};
    auto r = grammar::assign_constituents(children, db());
    REQUIRE_FALSE(r.ok());
    CHECK(r.error().where == "step 2");
  }
  SECTION("step 2: unlicensed accusative") {
    // gel does not subcategorize for an accusative object
    std::vector<Constituent> children = {np(lex("kitabı", {"ACC"})), vp(lex("geldiler"))};
    REQUIRE(lex("kitabı", {"ACC"}).fs.atom_at("CASE") == "ACC");
    auto r = grammar::assign_constituents(children, db());
    REQUIRE_FALSE(r.ok());
    CHECK(r.error().where == "step 2");
  }
  SECTION("step 3: missing required object") {
    std::vector<Constituent> children = {np(lex("ben")), np(lex("çocuğa")),
                                         vp(lex("verdim"))};
    auto r = grammar::assign_constituents(children, db());
    REQUIRE_FALSE(r.ok());
    CHECK(r.error().where == "step 3");
  }
  SECTION("step 4: duplicate thematic role") {
    std::vector<Constituent> children = {np(lex("kitabı", {"ACC"})), np(lex("yemeği", {"ACC"})),
                                         vp(lex("verdim")), np(lex("çocuğa"))};
    auto r = grammar::assign_constituents(children, db());
    REQUIRE_FALSE(r.ok());
    CHECK(r.error().where == "step 4");
  }
  SECTION("step 5: agreement") {
    std::vector<Constituent> children = {np(lex("ben")), vp(lex("geldiler"))};
    auto r = grammar::assign_constituents(children, db());
    REQUIRE_FALSE(r.ok());
    CHECK(r.error().where == "step 5");
  }
  SECTION("oblique without a frame slot becomes an adverbial adjunct") {
    std::vector<Constituent> children = {np(lex("ben")), np(lex("okulda")),
                                         np(lex("çocuğa")), np(lex("kitabı")),
                                         vp(lex("verdim"))};
    auto r = grammar::assign_constituents(children, db());
    REQUIRE(r.ok());
    auto adv = r.value().get("ADVCOMPLEMENTS");
    REQUIRE(adv.has_value());
    REQUIRE(adv->is_set());
    CHECK(adv->elements().size() == 1);
    CHECK(adv->elements()[0].atom_at("CASE") == "LOC");
  }
}

TEST_CASE("eval_rule builds the modifier structure") {
  grammar::Grammar g = grammar::Grammar::from_text(seed::kGrammar);

  SECTION("NP -> ADJ NP mirrors the published subject substructure") {
    auto inner = grammar::eval_rule(*g.rule("N4"), std::vector<Constituent>{lex("kırmızı"), np(lex("top"))}, db());
    REQUIRE(inner.ok());
    auto outer = grammar::eval_rule(*g.rule("N4"), std::vector<Constituent>{lex("küçük"), inner.value()}, db());
    REQUIRE(outer.ok());
    const auto& fs = outer.value().fs;
    CHECK(fs.atom_at("CAT") == "NP");
    CHECK(fs.atom_at("AGR") == "3SG");
    CHECK(fs.atom_at("CASE") == "NOM");
    CHECK(fs.atom_at("DEF") == "-");
    CHECK_FALSE(fs.has("LEX"));  // composite head does not surface a lexeme
    auto modified = fs.get("MODIFIED");
    REQUIRE(modified.has_value());
    CHECK(modified->atom_at("LEX") == "top");  // lexical head does
    CHECK(modified->atom_at("DEF") == "-");
    CHECK(modified->get("MODIFIER")->atom_at("CAT") == "ADJ");
  }

  SECTION("possessive compound accepts matching agreement") {
    auto r = grammar::eval_rule(*g.rule("N5"),
                                std::vector<Constituent>{np(lex("onların")), np(lex("çocukları", {"PLU", "POSS.3PL.PL"}))},
                                db());
    // index 2 = PLU+POSS.3PL.PL (their children)
    REQUIRE(lex("çocukları", {"PLU", "POSS.3PL.PL"}).fs.atom_at("POSS") == "3PL");
    REQUIRE(r.ok());
    CHECK(r.value().fs.atom_at("DEF") == "+");
    CHECK(r.value().fs.atom_at("AGR") == "3PL");
  }

  SECTION("possessive compound rejects the 3PL-modifier/3SG-possessive pair") {
    auto r = grammar::eval_rule(*g.rule("N5"),
                                std::vector<Constituent>{np(lex("onların")), np(lex("çocukları", {"PLU", "POSS.3SG"}))},
                                db());
    REQUIRE(lex("çocukları", {"PLU", "POSS.3SG"}).fs.atom_at("POSS") == "3SG");
    REQUIRE_FALSE(r.ok());
    CHECK(r.error().where == "N5");
  }

  SECTION("possessive compound rejects a non-3PL mismatch") {
    auto r = grammar::eval_rule(*g.rule("N5"),
                                std::vector<Constituent>{np(lex("benim")), np(lex("çocukları", {"PLU", "POSS.3PL.PL"}))},
                                db());
    REQUIRE_FALSE(r.ok());
    CHECK(r.error().where == "N5");
  }

  SECTION("possessive compound requires a genitive modifier") {
    auto r = grammar::eval_rule(*g.rule("N5"),
                                std::vector<Constituent>{np(lex("ben")), np(lex("çocukları", {"PLU", "POSS.3SG"}))},
                                db());
    REQUIRE_FALSE(r.ok());
    CHECK(r.error().where == "N5");
  }

  SECTION("qualitative adverb rule") {
    auto ok = grammar::eval_rule(*g.rule("Q1"), std::vector<Constituent>{lex("iyi")}, db());
    REQUIRE(ok.ok());
    CHECK(ok.value().cat == "QADVP");
    CHECK(ok.value().fs.atom_at("CAT") == "ADVP");
    CHECK(ok.value().fs.atom_at("SUB") == "QUAL");

    auto bad = grammar::eval_rule(*g.rule("Q1"), std::vector<Constituent>{lex("kırmızı")}, db());
    REQUIRE_FALSE(bad.ok());
    CHECK(bad.error().where == "Q1");
  }

  SECTION("verb phrase with indefinite object") {
    auto r = grammar::eval_rule(*g.rule("V3"),
                                std::vector<Constituent>{np(lex("yemek")), lex("pişirdin")},
                                db());
    REQUIRE(r.ok());
    CHECK(r.value().cat == "VP");
    CHECK(r.value().fs.get("THEME")->atom_at("DEF") == "-");
  }

  SECTION("verb phrase rejects non-nominative, pronominal and possessive objects") {
    auto acc = grammar::eval_rule(*g.rule("V3"),
                                  std::vector<Constituent>{np(lex("yemeği", {"ACC"})), lex("pişirdin")},
                                  db());
    CHECK_FALSE(acc.ok());
    auto pron = grammar::eval_rule(*g.rule("V3"),
                                   std::vector<Constituent>{np(lex("ben")), lex("pişirdin")},
                                   db());
    CHECK_FALSE(pron.ok());
    auto poss = grammar::eval_rule(*g.rule("V3"),
                                   std::vector<Constituent>{np(lex("yemeği", {"POSS.3SG"})), lex("pişirdin")},
                                   db());
    REQUIRE(lex("yemeği", {"POSS.3SG"}).fs.has("POSS"));
    CHECK_FALSE(poss.ok());
  }

  SECTION("verb phrase rejects indefinite object of an intransitive") {
    auto r = grammar::eval_rule(*g.rule("V3"),
                                std::vector<Constituent>{np(lex("top")), lex("geldiler")},
                                db());
    REQUIRE_FALSE(r.ok());
    CHECK(r.error().where == "V3");
  }

  SECTION("gerund clause assigns its own subject, non-finite") {
    auto r = grammar::eval_rule(*g.rule("G1"),
                                std::vector<Constituent>{np(lex("top")), lex("gittikçe")},
                                db());
    REQUIRE(r.ok());
    CHECK(r.value().cat == "GERC");
    const auto& fs = r.value().fs;
    CHECK(fs.atom_at("SUB") == "TEMP");
    CHECK(fs.get("SUBJ")->atom_at("LEX") == "top");
    CHECK_FALSE(fs.get("SUBJ")->has("COVERT"));
  }

  SECTION("gerund clause head must be a converted verb") {
    auto r = grammar::eval_rule(*g.rule("G1"),
                                std::vector<Constituent>{np(lex("top")), lex("dün")},
                                db());
    REQUIRE_FALSE(r.ok());
    CHECK(r.error().where == "G1");
  }
}

TEST_CASE("every violation names a step or a rule id") {
  grammar::Grammar g = grammar::Grammar::from_text(seed::kGrammar);
  std::vector<grammar::Violation> violations;
  auto collect = [&](Result<Constituent, grammar::Violation> r) {
    if (!r.ok()) violations.push_back(r.error());
  };
  collect(grammar::eval_rule(*g.rule("N5"),
                             std::vector<Constituent>{np(lex("ben")), np(lex("top"))}, db()));
  collect(grammar::eval_rule(*g.rule("Q1"), std::vector<Constituent>{lex("kırmızı")}, db()));
  std::vector<Constituent> nosubj = {np(lex("ben")), np(lex("top")), vp(lex("geldiler"))};
  auto r = grammar::assign_constituents(nosubj, db());
  if (!r.ok()) violations.push_back(r.error());
  REQUIRE(violations.size() == 3);
  for (const auto& v : violations) {
    bool step = v.where.rfind("step ", 0) == 0 && v.where.size() == 6 &&
                v.where[5] >= '1' && v.where[5] <= '5';
    bool rule_id = g.rule(v.where) != nullptr;
    CHECK((step || rule_id));
  }
}

TEST_CASE("grammar file diagnostics") {
  CHECK_THROWS_WITH(grammar::Grammar::from_text("S1 S -> XP @sentence\n", "g.txt"),
                    Catch::Matchers::StartsWith("g.txt:1:"));
  CHECK_THROWS_WITH(grammar::Grammar::from_text("S1: S -> XP @nosuch\n", "g.txt"),
                    Catch::Matchers::ContainsSubstring("unknown equation program"));
  CHECK_THROWS_WITH(
      grammar::Grammar::from_text("S1: S -> XP @sentence\nS1: S -> XP @sentence\n", "g.txt"),
      Catch::Matchers::ContainsSubstring("duplicate rule id"));
}
