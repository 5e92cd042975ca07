// tlfg -- end-to-end driver: tokenize, analyze each word, build the
// lexical lattice, parse, evaluate. Unknown words are reported before
// parsing; an empty reading list afterwards means ungrammatical.
#pragma once

#include <chrono>
#include <istream>
#include <string>
#include <vector>

#include "tlfg/glr.hpp"
#include "tlfg/grammar.hpp"
#include "tlfg/lexdb.hpp"
#include "tlfg/morph.hpp"
#include "tlfg/parse_table.hpp"
#include "tlfg/seed.hpp"

namespace tlfg::pipeline {

struct SentenceResult {
  enum class Status { Ok, UnknownWord, NoParse };
  Status status = Status::NoParse;
  std::string unknown_word;
  std::vector<glr::Reading> readings;
  glr::Lattice lattice;
  double seconds = 0.0;
};

struct BatchReport {
  int sentences = 0;
  int parsed = 0;
  int failed = 0;
  double avg_parses = 0.0;   // over parsed sentences only
  double avg_seconds = 0.0;  // over parsed sentences only
};

class Pipeline {
 public:
  Pipeline(lexdb::LexDb db, grammar::Grammar g)
      : db_(std::move(db)),
        grammar_(std::move(g)),
        morph_(db_),
        tables_(glr::Tables::compile(grammar_)) {}

  Pipeline(const Pipeline&) = delete;
  Pipeline& operator=(const Pipeline&) = delete;

  static Pipeline from_seed() {
    return Pipeline(lexdb::LexDb::from_text(seed::kLexicon, seed::kSuffixes, seed::kSubcat),
                    grammar::Grammar::from_text(seed::kGrammar));
  }

  const lexdb::LexDb& db() const { return db_; }
  const grammar::Grammar& grammar() const { return grammar_; }
  const morph::Morphology& morphology() const { return morph_; }
  const glr::Tables& tables() const { return tables_; }

  // Whitespace tokenization with surrounding punctuation stripped; the
  // corpus is pre-segmented prose.
  static std::vector<std::string> tokenize(const std::string& sentence) {
    std::vector<std::string> words;
    std::size_t i = 0;
    while (i < sentence.size()) {
      while (i < sentence.size() && std::isspace(static_cast<unsigned char>(sentence[i]))) ++i;
      std::size_t j = i;
      while (j < sentence.size() && !std::isspace(static_cast<unsigned char>(sentence[j]))) ++j;
      if (j > i) {
        std::string w = sentence.substr(i, j - i);
        auto is_punct = [](char c) {
          return c == '.' || c == ',' || c == '!' || c == '?' || c == ';' ||
                 c == ':' || c == '"' || c == '(' || c == ')' || c == '*';
        };
        while (!w.empty() && is_punct(w.back())) w.pop_back();
        while (!w.empty() && is_punct(w.front())) w.erase(w.begin());
        if (!w.empty()) words.push_back(std::move(w));
      }
      i = j;
    }
    return words;
  }

  SentenceResult parse_sentence(const std::string& sentence, int max_readings = 256) const {
    SentenceResult result;
    auto t0 = std::chrono::steady_clock::now();
    for (const std::string& raw : tokenize(sentence)) {
      std::string word = text::normalize_word(raw);
      auto analyses = morph_.analyze(word);
      if (analyses.empty()) {
        result.status = SentenceResult::Status::UnknownWord;
        result.unknown_word = raw;
        return result;
      }
      std::vector<glr::LexAlt> alts;
      for (const auto& a : analyses) {
        auto [cat, fs] = morph_.project(a);
        alts.push_back({cat, std::move(fs)});
      }
      result.lattice.words.push_back(std::move(word));
      result.lattice.alternatives.push_back(std::move(alts));
    }
    if (result.lattice.words.empty()) {
      result.status = SentenceResult::Status::NoParse;
      return result;
    }
    result.readings = glr::parse(result.lattice, tables_, grammar_, db_, max_readings);
    auto t1 = std::chrono::steady_clock::now();
    result.seconds = std::chrono::duration<double>(t1 - t0).count();
    result.status = result.readings.empty() ? SentenceResult::Status::NoParse
                                            : SentenceResult::Status::Ok;
    return result;
  }

  BatchReport batch(std::istream& in, std::vector<SentenceResult>* details = nullptr,
                    int max_readings = 256) const {
    BatchReport report;
    double parse_sum = 0.0;
    double time_sum = 0.0;
    std::string line;
    while (std::getline(in, line)) {
      if (tokenize(line).empty()) continue;
      SentenceResult r = parse_sentence(line, max_readings);
      ++report.sentences;
      if (r.status == SentenceResult::Status::Ok) {
        ++report.parsed;
        parse_sum += static_cast<double>(r.readings.size());
        time_sum += r.seconds;
      } else {
        ++report.failed;
      }
      if (details) details->push_back(std::move(r));
    }
    if (report.parsed > 0) {
      report.avg_parses = parse_sum / report.parsed;
      report.avg_seconds = time_sum / report.parsed;
    }
    return report;
  }

 private:
  lexdb::LexDb db_;
  grammar::Grammar grammar_;
  morph::Morphology morph_;
  glr::Tables tables_;
};

}  // namespace tlfg::pipeline
