// shared test utilities: a reader for the parenthesized f-structure
// format, whitespace normalization for golden comparisons, and the seed
// pipeline (built once; table construction is deterministic).
#pragma once

#include <cctype>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "tlfg/avm.hpp"
#include "tlfg/pipeline.hpp"

namespace testutil {

inline tlfg::pipeline::Pipeline& seed_pipeline() {
  static tlfg::pipeline::Pipeline p = tlfg::pipeline::Pipeline::from_seed();
  return p;
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline std::string source_path(const std::string& relative) {
  return std::string(TLFG_SOURCE_DIR) + "/" + relative;
}

inline std::string ws_normalize(std::string_view s) {
  std::string out;
  bool in_space = true;  // also trims leading space
  for (char c : s) {
    if (std::isspace(static_cast<unsigned char>(c))) {
      in_space = true;
      continue;
    }
    if (in_space && !out.empty()) out.push_back(' ');
    in_space = false;
    out.push_back(c);
  }
  return out;
}

// -- reader for the parenthesized format (test oracle only) -------------
//
// Singleton sets print as their element, so sets read back as avms; the
// structural golden comparison parses both sides with this same reader.

class FsReader {
 public:
  explicit FsReader(std::string_view text) : text_(text) {}

  tlfg::avm::FeatureStructure parse() {
    auto fs = value();
    skip_ws();
    if (pos_ != text_.size()) throw std::runtime_error("trailing input in f-structure text");
    return fs;
  }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;

  void skip_ws() {
    while (pos_ < text_.size() &&
           std::isspace(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
  }

  char peek() {
    skip_ws();
    if (pos_ >= text_.size()) throw std::runtime_error("unexpected end of f-structure text");
    return text_[pos_];
  }

  std::string token() {
    skip_ws();
    std::size_t start = pos_;
    while (pos_ < text_.size() && !std::isspace(static_cast<unsigned char>(text_[pos_])) &&
           text_[pos_] != '(' && text_[pos_] != ')')
      ++pos_;
    if (start == pos_) throw std::runtime_error("expected token");
    return std::string(text_.substr(start, pos_ - start));
  }

  tlfg::avm::FeatureStructure value() {
    char c = peek();
    if (c == '"') {
      ++pos_;
      std::size_t start = pos_;
      while (pos_ < text_.size() && text_[pos_] != '"') ++pos_;
      if (pos_ >= text_.size()) throw std::runtime_error("unterminated string");
      std::string s(text_.substr(start, pos_ - start));
      ++pos_;
      return tlfg::avm::FeatureStructure::str(s);
    }
    if (c != '(') return tlfg::avm::FeatureStructure::atom(token());
    ++pos_;  // consume '('
    std::vector<tlfg::avm::Feature> feats;
    while (peek() != ')') {
      if (peek() != '(') throw std::runtime_error("expected feature group");
      ++pos_;
      std::string name = token();
      if (name.size() > 2 && name.front() == '*' && name.back() == '*')
        name = name.substr(1, name.size() - 2);
      feats.emplace_back(name, value());
      if (peek() != ')') throw std::runtime_error("unterminated feature group");
      ++pos_;
    }
    ++pos_;  // consume ')'
    return tlfg::avm::FeatureStructure::make_avm(std::move(feats));
  }
};

inline tlfg::avm::FeatureStructure parse_fs(std::string_view text) {
  return FsReader(text).parse();
}

}  // namespace testutil
