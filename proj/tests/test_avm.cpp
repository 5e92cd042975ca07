#include <random>

#include <catch2/catch_amalgamated.hpp>

#include "helpers.hpp"
#include "tlfg/avm.hpp"
#include "tlfg/avm_json.hpp"

using namespace tlfg;
using avm::FeatureStructure;

namespace {

FeatureStructure A(const std::string& s) { return FeatureStructure::atom(s); }

FeatureStructure avm1(const std::string& f, FeatureStructure v) {
  return FeatureStructure::make_avm({{f, std::move(v)}});
}

// random feature structures, depth-bounded, with a pool of plausible
// atoms and feature names
struct Gen {
  std::mt19937 rng{20240817};

  FeatureStructure atom() {
    static const char* pool[] = {"3SG", "3PL", "1SG", "NOM", "ACC", "QUAL", "PAST", "+", "-"};
    if (pick(4) == 0) return FeatureStructure::str(pick(2) ? "top" : "ev");
    return A(pool[pick(std::size(pool))]);
  }

  FeatureStructure structure(int depth) {
    if (depth == 0) return atom();
    switch (pick(10)) {
      case 0: case 1: case 2: case 3:
        return atom();
      case 4: case 5: case 6: case 7: {
        static const char* names[] = {"AGR", "CASE", "SUBJ", "MODIFIER", "CAT", "LEX", "POSS"};
        std::vector<avm::Feature> feats;
        std::size_t n = pick(4);
        for (std::size_t i = 0; i < n && feats.size() < n; ++i) {
          std::string name = names[pick(std::size(names))];
          bool dup = false;
          for (auto& [f, v] : feats) dup |= (f == name);
          if (!dup) feats.emplace_back(name, structure(depth - 1));
        }
        return FeatureStructure::make_avm(std::move(feats));
      }
      default: {
        std::vector<FeatureStructure> elems;
        std::size_t n = 1 + pick(2);
        for (std::size_t i = 0; i < n; ++i) elems.push_back(structure(depth - 1));
        return FeatureStructure::make_set(std::move(elems));
      }
    }
  }

  // a structure related to `base`: sometimes equal, sometimes mutated, so
  // unification pairs exercise both success and clash paths
  FeatureStructure related(const FeatureStructure& base, int depth) {
    switch (pick(3)) {
      case 0: return base;
      case 1: return structure(depth);
      default: break;
    }
    if (base.is_avm() && !base.features().empty()) {
      std::vector<avm::Feature> feats(base.features().begin(), base.features().end());
      std::size_t i = pick(feats.size());
      feats[i].second = related(feats[i].second, depth > 0 ? depth - 1 : 0);
      return FeatureStructure::make_avm(std::move(feats));
    }
    return structure(depth);
  }

  std::size_t pick(std::size_t n) { return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng); }
};

}  // namespace

TEST_CASE("unify basics") {
  auto agr = avm1("AGR", A("3SG"));
  SECTION("idempotence on a simple avm") {
    auto r = avm::unify(agr, agr);
    REQUIRE(r.ok());
    CHECK(r.value() == agr);
  }
  SECTION("atom conflict reports the path") {
    auto r = avm::unify(agr, avm1("AGR", A("3PL")));
    REQUIRE_FALSE(r.ok());
    CHECK(r.error().path_string() == "AGR");
    CHECK(r.error().left == A("3SG"));
    CHECK(r.error().right == A("3PL"));
  }
  SECTION("empty avm is an identity") {
    auto rich = FeatureStructure::make_avm({{"CASE", A("NOM")}, {"AGR", A("3PL")}});
    auto r = avm::unify(FeatureStructure(), rich);
    REQUIRE(r.ok());
    CHECK(r.value() == rich);
  }
  SECTION("atom vs avm clashes") {
    auto r = avm::unify(avm1("AGR", A("3SG")), avm1("AGR", avm1("CASE", A("NOM"))));
    CHECK_FALSE(r.ok());
  }
}

TEST_CASE("add_element") {
  auto advp1 = avm1("LEX", FeatureStructure::str("dün"));
  auto advp2 = avm1("LEX", FeatureStructure::str("gittikçe"));
  auto one = avm::add_element(FeatureStructure(), "ADVCOMPLEMENTS", advp1);
  REQUIRE(one.ok());
  auto got = one.value().get("ADVCOMPLEMENTS");
  REQUIRE(got.has_value());
  REQUIRE(got->is_set());
  CHECK(got->elements().size() == 1);

  auto two = avm::add_element(one.value(), "ADVCOMPLEMENTS", advp2);
  REQUIRE(two.ok());
  CHECK(two.value().get("ADVCOMPLEMENTS")->elements().size() == 2);

  auto bad = avm::add_element(avm1("AGR", A("3SG")), "AGR", advp1);
  CHECK_FALSE(bad.ok());
}

TEST_CASE("pretty print") {
  auto fs = FeatureStructure::make_avm({{"AGR", A("3SG")}, {"CASE", A("NOM")}});
  CHECK(avm::pretty(fs) == "((*AGR* 3SG) (*CASE* NOM))");
  CHECK(avm::pretty(FeatureStructure()) == "()");
  SECTION("canonical order is input-order independent") {
    auto swapped = FeatureStructure::make_avm({{"CASE", A("NOM")}, {"AGR", A("3SG")}});
    CHECK(avm::pretty(swapped) == avm::pretty(fs));
  }
  SECTION("quoted atoms and ascii transliteration") {
    auto lex = avm1("LEX", FeatureStructure::str("küçük"));
    CHECK(avm::pretty(lex) == "((*LEX* \"küçük\"))");
    avm::PrettyOptions opt;
    opt.ascii = true;
    CHECK(avm::pretty(lex, opt) == "((*LEX* \"kUCUk\"))");
  }
  SECTION("functions print bare, grammatical features starred") {
    auto fs2 = avm1("SUBJ", avm1("AGR", A("3SG")));
    CHECK(avm::pretty(fs2) == "((SUBJ ((*AGR* 3SG))))");
  }
}

TEST_CASE("pretty output re-parses to an equal structure") {
  auto subj = FeatureStructure::make_avm(
      {{"AGR", A("3SG")}, {"CASE", A("NOM")}, {"LEX", FeatureStructure::str("top")}});
  auto fs = FeatureStructure::make_avm({{"SUBJ", subj}, {"VERB", avm1("CAT", A("V"))}});
  CHECK(testutil::parse_fs(avm::pretty(fs)) == fs);
}

TEST_CASE("unification laws hold on random structures") {
  Gen gen;
  int commutes_ok = 0, associates_ok = 0;
  for (int i = 0; i < 1000; ++i) {
    auto a = gen.structure(4);
    auto b = gen.related(a, 3);
    auto c = gen.related(a, 2);

    // idempotence
    auto aa = avm::unify(a, a);
    REQUIRE(aa.ok());
    CHECK(aa.value() == a);

    // identity
    auto ae = avm::unify(a, FeatureStructure());
    if (a.is_avm()) {
      REQUIRE(ae.ok());
      CHECK(ae.value() == a);
    }

    // commutativity: both orders succeed or fail together, equal results
    auto ab = avm::unify(a, b);
    auto ba = avm::unify(b, a);
    REQUIRE(ab.ok() == ba.ok());
    if (ab.ok()) {
      CHECK(ab.value() == ba.value());
      ++commutes_ok;
    }

    // associativity (exact for tree-shaped values)
    auto bc = avm::unify(b, c);
    auto left = ab.ok() ? avm::unify(ab.value(), c) : ab;
    auto right = bc.ok() ? avm::unify(a, bc.value()) : bc;
    REQUIRE(left.ok() == right.ok());
    if (left.ok()) {
      CHECK(left.value() == right.value());
      ++associates_ok;
    }
  }
  // the generator must exercise the success paths, not just clashes
  CHECK(commutes_ok > 200);
  CHECK(associates_ok > 100);
}

TEST_CASE("json dump round trip") {
  Gen gen;
  for (int i = 0; i < 300; ++i) {
    auto fs = gen.structure(4);
    auto j = avm::to_json(fs);
    CHECK(avm::from_json(j) == fs);
  }
  // sets survive explicitly (singleton sets are not avms in the dump)
  auto single = FeatureStructure::make_set({avm1("AGR", A("3SG"))});
  auto j = avm::to_json(single);
  REQUIRE(j.contains("set"));
  CHECK(avm::from_json(j) == single);
}
