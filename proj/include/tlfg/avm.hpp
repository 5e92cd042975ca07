// tlfg -- attribute-value matrices (f-structures).
//
// A FeatureStructure is an immutable tree: an atom ("3SG", "top"), an
// attribute-value matrix, or an unordered set. There is no structure
// sharing and no reentrancy, so unification is plain recursive merge and
// equality is structural. Features are kept in a fixed canonical order so
// printed output is deterministic.
#pragma once

#include <algorithm>
#include <array>
#include <cstddef>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "tlfg/result.hpp"
#include "tlfg/text.hpp"

namespace tlfg::avm {

class FeatureStructure;
using Feature = std::pair<std::string, FeatureStructure>;

namespace detail {

// Declaration order of the canonical print list; anything else sorts
// alphabetically after these.
inline const std::vector<std::string>& canonical_order() {
  static const std::vector<std::string> order = {
      "SUBJ", "VERB", "THEME", "GOAL", "LOCATIVE", "SOURCE", "ADVCOMPLEMENTS",
      "TYPE", "SUB", "VOICE", "AGR", "CASE", "POSS", "DEF", "WITH-SUFFIX",
      "CAT", "ASPECT", "LEX", "R", "CONV", "COVERT", "MODIFIER", "MODIFIED"};
  return order;
}

inline std::pair<std::size_t, std::string_view> feature_rank(std::string_view name) {
  const auto& order = canonical_order();
  for (std::size_t i = 0; i < order.size(); ++i)
    if (order[i] == name) return {i, name};
  return {order.size(), name};
}

inline bool feature_less(std::string_view a, std::string_view b) {
  return feature_rank(a) < feature_rank(b);
}

// Grammatical features print starred (*AGR* 3SG); grammatical functions
// and structural slots print bare. Unknown names fall back to starring
// atomic values only.
inline bool starred_feature(std::string_view name, bool atomic_value) {
  static const std::array<std::string_view, 14> starred = {
      "CAT", "AGR", "CASE", "LEX", "R", "DEF", "SUB", "CONV",
      "VOICE", "ASPECT", "TYPE", "WITH-SUFFIX", "POSS", "COVERT"};
  static const std::array<std::string_view, 11> bare = {
      "MODIFIER", "MODIFIED", "SUBJ", "VERB", "ADVCOMPLEMENTS",
      "THEME", "GOAL", "LOCATIVE", "SOURCE", "OBJ", "OBJ2"};
  for (auto s : starred)
    if (s == name) return true;
  for (auto s : bare)
    if (s == name) return false;
  return atomic_value;
}

}  // namespace detail

class FeatureStructure {
 public:
  enum class Kind { Atom, Avm, Set };

  // An empty avm.
  FeatureStructure() : node_(empty_node()) {}

  static FeatureStructure atom(std::string text, bool quoted = false) {
    auto n = std::make_shared<Node>();
    n->kind = Kind::Atom;
    n->atom = std::move(text);
    n->quoted = quoted;
    return FeatureStructure(std::move(n));
  }

  static FeatureStructure str(std::string text) { return atom(std::move(text), true); }

  static FeatureStructure make_avm(std::vector<Feature> feats = {}) {
    auto n = std::make_shared<Node>();
    n->kind = Kind::Avm;
    n->feats = std::move(feats);
    sort_features(n->feats);
    for (std::size_t i = 1; i < n->feats.size(); ++i)
      if (n->feats[i].first == n->feats[i - 1].first)
        throw std::invalid_argument("duplicate feature: " + n->feats[i].first);
    return FeatureStructure(std::move(n));
  }

  static FeatureStructure make_set(std::vector<FeatureStructure> elems) {
    auto n = std::make_shared<Node>();
    n->kind = Kind::Set;
    n->elems = std::move(elems);
    sort_elements(n->elems);
    return FeatureStructure(std::move(n));
  }

  Kind kind() const { return node_->kind; }
  bool is_atom() const { return kind() == Kind::Atom; }
  bool is_avm() const { return kind() == Kind::Avm; }
  bool is_set() const { return kind() == Kind::Set; }
  bool empty() const { return is_avm() && node_->feats.empty(); }

  const std::string& atom_text() const { return node_->atom; }
  bool atom_quoted() const { return node_->quoted; }

  const std::vector<Feature>& features() const { return node_->feats; }
  const std::vector<FeatureStructure>& elements() const { return node_->elems; }

  bool has(std::string_view name) const { return get(name).has_value(); }

  std::optional<FeatureStructure> get(std::string_view name) const {
    if (!is_avm()) return std::nullopt;
    for (const auto& [f, v] : node_->feats)
      if (f == name) return v;
    return std::nullopt;
  }

  // Convenience for atoms: text of an atomic feature value, or "".
  std::string atom_at(std::string_view name) const {
    auto v = get(name);
    return (v && v->is_atom()) ? v->atom_text() : std::string();
  }

  // Returns a copy with `name` set (replacing any existing value).
  FeatureStructure with(std::string name, FeatureStructure value) const {
    std::vector<Feature> feats;
    feats.reserve(node_->feats.size() + 1);
    for (const auto& f : node_->feats)
      if (f.first != name) feats.push_back(f);
    feats.emplace_back(std::move(name), std::move(value));
    return make_avm(std::move(feats));
  }

  FeatureStructure without(std::string_view name) const {
    std::vector<Feature> feats;
    for (const auto& f : node_->feats)
      if (f.first != name) feats.push_back(f);
    return make_avm(std::move(feats));
  }

  friend bool operator==(const FeatureStructure& a, const FeatureStructure& b) {
    if (a.node_ == b.node_) return true;
    if (a.kind() != b.kind()) return false;
    switch (a.kind()) {
      case Kind::Atom:
        return a.node_->atom == b.node_->atom && a.node_->quoted == b.node_->quoted;
      case Kind::Avm:
        return a.node_->feats == b.node_->feats;
      case Kind::Set:
        return a.node_->elems == b.node_->elems;
    }
    return false;
  }
  friend bool operator!=(const FeatureStructure& a, const FeatureStructure& b) {
    return !(a == b);
  }

  // Total order used to canonicalize set elements.
  std::string sort_key() const {
    std::ostringstream os;
    key(os);
    return os.str();
  }

 private:
  struct Node {
    Kind kind = Kind::Avm;
    std::string atom;
    bool quoted = false;
    std::vector<Feature> feats;
    std::vector<FeatureStructure> elems;
  };

  explicit FeatureStructure(std::shared_ptr<const Node> n) : node_(std::move(n)) {}

  static const std::shared_ptr<const Node>& empty_node() {
    static const std::shared_ptr<const Node> n = std::make_shared<Node>();
    return n;
  }

  static void sort_features(std::vector<Feature>& feats) {
    std::stable_sort(feats.begin(), feats.end(), [](const Feature& a, const Feature& b) {
      return detail::feature_less(a.first, b.first);
    });
  }

  static void sort_elements(std::vector<FeatureStructure>& elems) {
    std::stable_sort(elems.begin(), elems.end(),
                     [](const FeatureStructure& a, const FeatureStructure& b) {
                       return a.sort_key() < b.sort_key();
                     });
  }

  void key(std::ostringstream& os) const {
    switch (kind()) {
      case Kind::Atom:
        os << (node_->quoted ? "q:" : "a:") << node_->atom << ';';
        break;
      case Kind::Avm:
        os << "m{";
        for (const auto& [f, v] : node_->feats) {
          os << f << '=';
          v.key(os);
        }
        os << '}';
        break;
      case Kind::Set:
        os << "s{";
        for (const auto& e : node_->elems) e.key(os);
        os << '}';
        break;
    }
  }

  std::shared_ptr<const Node> node_;
};

// -- unification --------------------------------------------------------

struct Clash {
  std::vector<std::string> path;
  FeatureStructure left;
  FeatureStructure right;

  std::string path_string() const {
    if (path.empty()) return "<root>";
    std::string s;
    for (const auto& p : path) {
      if (!s.empty()) s += '.';
      s += p;
    }
    return s;
  }
};

namespace detail {

inline Result<FeatureStructure, Clash> unify_at(const FeatureStructure& a,
                                                const FeatureStructure& b,
                                                std::vector<std::string>& path) {
  if (a == b) return a;
  if (a.is_avm() && b.is_avm()) {
    std::vector<Feature> feats;
    for (const auto& [f, av] : a.features()) {
      auto bv = b.get(f);
      if (!bv) {
        feats.emplace_back(f, av);
        continue;
      }
      path.push_back(f);
      auto sub = unify_at(av, *bv, path);
      if (!sub) return sub.error();
      path.pop_back();
      feats.emplace_back(f, sub.value());
    }
    for (const auto& [f, bv] : b.features())
      if (!a.has(f)) feats.emplace_back(f, bv);
    return FeatureStructure::make_avm(std::move(feats));
  }
  // Atom-vs-different-atom, atom-vs-avm, and unequal sets all clash; sets
  // only ever grow through add_element.
  return Clash{path, a, b};
}

}  // namespace detail

// Least structure subsumed by both, or the clash that prevents it.
inline Result<FeatureStructure, Clash> unify(const FeatureStructure& a,
                                             const FeatureStructure& b) {
  std::vector<std::string> path;
  return detail::unify_at(a, b, path);
}

// Appends `element` to the set at `feature`, creating a singleton set if
// the feature is absent. Errors if the feature holds an atom or avm.
inline Result<FeatureStructure, std::string> add_element(const FeatureStructure& fs,
                                                         const std::string& feature,
                                                         const FeatureStructure& element) {
  if (!fs.is_avm()) return std::string("add_element target is not an avm");
  auto cur = fs.get(feature);
  if (!cur) return fs.with(feature, FeatureStructure::make_set({element}));
  if (!cur->is_set())
    return std::string("feature " + feature + " does not hold a set");
  auto elems = cur->elements();
  elems.push_back(element);
  return fs.with(feature, FeatureStructure::make_set(std::move(elems)));
}

// -- printing -----------------------------------------------------------

struct PrettyOptions {
  bool ascii = false;  // legacy transliteration of quoted strings
  int width = 64;      // soft wrap column
};

namespace detail {

inline std::string atom_token(const FeatureStructure& fs, const PrettyOptions& opt) {
  std::string t = fs.atom_text();
  if (opt.ascii) t = text::to_ascii(t);
  if (fs.atom_quoted()) return "\"" + t + "\"";
  return t;
}

std::string render(const FeatureStructure& fs, int col, const PrettyOptions& opt);

inline std::string render_feature(const Feature& f, int col, const PrettyOptions& opt) {
  const auto& [name, value] = f;
  bool star = starred_feature(name, value.is_atom());
  std::string label = star ? "*" + name + "*" : name;
  std::string head = "(" + label + " ";
  std::string inline_value = render(value, col + static_cast<int>(head.size()), opt);
  if (inline_value.find('\n') == std::string::npos &&
      col + static_cast<int>(head.size() + inline_value.size()) + 1 <= opt.width)
    return head + inline_value + ")";
  // value on its own lines, indented under the feature name
  std::string body = render(value, col + 2, opt);
  return "(" + label + "\n" + std::string(static_cast<std::size_t>(col) + 2, ' ') + body + ")";
}

inline std::string render(const FeatureStructure& fs, int col, const PrettyOptions& opt) {
  switch (fs.kind()) {
    case FeatureStructure::Kind::Atom:
      return atom_token(fs, opt);
    case FeatureStructure::Kind::Avm: {
      if (fs.features().empty()) return "()";
      // try one line
      std::string one = "(";
      for (std::size_t i = 0; i < fs.features().size(); ++i) {
        if (i) one += " ";
        one += render_feature(fs.features()[i], col + 1, opt);
        if (one.find('\n') != std::string::npos) break;
      }
      one += ")";
      if (one.find('\n') == std::string::npos &&
          col + static_cast<int>(one.size()) <= opt.width)
        return one;
      std::string out = "(";
      for (std::size_t i = 0; i < fs.features().size(); ++i) {
        if (i) out += "\n" + std::string(static_cast<std::size_t>(col) + 1, ' ');
        out += render_feature(fs.features()[i], col + 1, opt);
      }
      out += ")";
      return out;
    }
    case FeatureStructure::Kind::Set: {
      // A singleton set prints as its element, matching the parser output
      // format for ADVCOMPLEMENTS; larger sets juxtapose their elements.
      if (fs.elements().size() == 1) return render(fs.elements()[0], col, opt);
      std::string out = "(";
      for (std::size_t i = 0; i < fs.elements().size(); ++i) {
        if (i) out += "\n" + std::string(static_cast<std::size_t>(col) + 1, ' ');
        out += render(fs.elements()[i], col + 1, opt);
      }
      out += ")";
      return out;
    }
  }
  return "";
}

}  // namespace detail

// Parenthesized textual form with starred feature names.
inline std::string pretty(const FeatureStructure& fs, const PrettyOptions& opt = {}) {
  return detail::render(fs, 0, opt);
}

}  // namespace tlfg::avm
