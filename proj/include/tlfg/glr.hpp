// tlfg -- generalized LR parsing over a lexical lattice.
//
// A graph-structured stack explores every action in the (multi-valued)
// SLR table; complete derivations are kept in a packed forest keyed by
// (symbol, span) and unpacked bottom-up, bounded by a reading cap.
// Equation programs run after backbone parsing: each derivation is
// evaluated against every combination of per-word lexical alternatives,
// and combinations that violate a constraint are discarded.
//
// oracle_parse is an exhaustive chart enumerator over the same backbone,
// kept independent of the GSS machinery as a correctness oracle.
#pragma once

#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <tuple>
#include <vector>

#include "tlfg/avm.hpp"
#include "tlfg/grammar.hpp"
#include "tlfg/parse_table.hpp"

namespace tlfg::glr {

// One lexical alternative of one input word.
struct LexAlt {
  std::string cat;
  avm::FeatureStructure fs;
};

struct Lattice {
  std::vector<std::string> words;                  // normalized surface forms
  std::vector<std::vector<LexAlt>> alternatives;   // per position

  std::size_t size() const { return words.size(); }
};

// Materialized backbone derivation. Leaves carry the input position and
// terminal symbol; inner nodes the production that built them.
struct ParseTree {
  int prod = -1;  // production index; -1 for leaves
  int sym = -1;
  int pos = -1;   // leaves only
  std::vector<ParseTree> children;

  bool leaf() const { return prod < 0; }
  friend bool operator==(const ParseTree&, const ParseTree&) = default;
};

// -- canonical derivation order ------------------------------------------

namespace detail {

inline int cat_rank(std::string_view name) {
  static const char* order[] = {"N",  "ADJ", "PRON", "V",     "ADVP", "NP",
                                "VP", "ADVC", "QADVP", "GERC", "XP",   "S"};
  for (int i = 0; i < static_cast<int>(std::size(order)); ++i)
    if (name == order[i]) return i;
  return static_cast<int>(std::size(order));
}

// Total order on derivations of one sentence: category rank first, then
// children; where one child list is a prefix of the other, the wider
// constituent sorts first, which puts the all-main-clause derivation
// ahead of its gerund-clause rebracketings.
inline int compare_trees(const ParseTree& a, const ParseTree& b, const Tables& t) {
  int ra = cat_rank(t.name(a.sym));
  int rb = cat_rank(t.name(b.sym));
  if (ra != rb) return ra < rb ? -1 : 1;
  if (a.leaf() && b.leaf()) return 0;
  if (a.leaf() != b.leaf()) return a.leaf() ? 1 : -1;
  std::size_t common = std::min(a.children.size(), b.children.size());
  for (std::size_t i = 0; i < common; ++i)
    if (int c = compare_trees(a.children[i], b.children[i], t)) return c;
  if (a.children.size() != b.children.size())
    return a.children.size() > b.children.size() ? -1 : 1;
  return 0;
}

}  // namespace detail

inline std::string tree_to_string(const ParseTree& tree, const Tables& t,
                                  const Lattice* lat = nullptr) {
  if (tree.leaf()) {
    std::string word = lat ? lat->words[static_cast<std::size_t>(tree.pos)]
                           : std::to_string(tree.pos);
    return "(" + t.name(tree.sym) + " " + word + ")";
  }
  std::string out = "(" + t.name(tree.sym);
  for (const auto& c : tree.children) out += " " + tree_to_string(c, t, lat);
  out += ")";
  return out;
}

// -- packed forest -----------------------------------------------------------

class Forest {
 public:
  struct Alt {
    int prod;
    std::vector<int> children;
    friend bool operator==(const Alt&, const Alt&) = default;
  };
  struct Node {
    int sym;
    int from, to;
    bool leaf = false;
    std::vector<Alt> alts;
  };

  std::vector<Node> nodes;
  std::vector<int> roots;

  int leaf_node(int sym, int pos) {
    auto key = std::make_tuple(sym, pos, -1);
    auto it = index_.find(key);
    if (it != index_.end()) return it->second;
    int id = static_cast<int>(nodes.size());
    nodes.push_back({sym, pos, pos + 1, true, {}});
    index_.emplace(key, id);
    return id;
  }

  int packed_node(int sym, int from, int to) {
    auto key = std::make_tuple(sym, from, to);
    auto it = index_.find(key);
    if (it != index_.end()) return it->second;
    int id = static_cast<int>(nodes.size());
    nodes.push_back({sym, from, to, false, {}});
    index_.emplace(key, id);
    return id;
  }

  void add_alt(int node, Alt alt) {
    auto& alts = nodes[static_cast<std::size_t>(node)].alts;
    if (std::find(alts.begin(), alts.end(), alt) == alts.end())
      alts.push_back(std::move(alt));
  }

 private:
  std::map<std::tuple<int, int, int>, int> index_;
};

// -- graph-structured stack ----------------------------------------------------

namespace detail {

struct GssLink {
  int target;   // earlier GSS node
  int symnode;  // forest node carried by this edge
};

struct GssNode {
  int state;
  int pos;
  std::vector<GssLink> links;
};

}  // namespace detail

// All-paths backbone parse of the lattice; returns the packed forest
// (roots empty when the backbone rejects the sentence).
inline Forest glr_parse(const Lattice& lattice, const Tables& tables) {
  using detail::GssLink;
  using detail::GssNode;
  Forest forest;
  const int n = static_cast<int>(lattice.size());

  std::vector<GssNode> gss;
  std::vector<std::map<int, int>> frontier(static_cast<std::size_t>(n) + 1);
  gss.push_back({tables.start_state(), 0, {}});
  frontier[0][tables.start_state()] = 0;

  // distinct grammar-known terminal symbols per position, sorted
  auto terminals_at = [&](int i) {
    std::set<int> syms;
    for (const auto& alt : lattice.alternatives[static_cast<std::size_t>(i)]) {
      int s = tables.id(alt.cat);
      if (s >= 0 && tables.is_terminal(s)) syms.insert(s);
    }
    return syms;
  };

  for (int i = 0; i <= n; ++i) {
    std::set<int> lookahead =
        i < n ? terminals_at(i) : std::set<int>{tables.end_symbol()};

    // reduce worklist: (gss node, link restriction); -1 means every link
    std::vector<std::pair<int, int>> work;
    for (const auto& [state, node] : frontier[static_cast<std::size_t>(i)])
      work.push_back({node, -1});

    struct ReducePath {
      std::vector<int> symnodes;  // link payloads from the reducing node down
      int base;
    };
    // Paths are collected before any GSS mutation: applying a reduction
    // may grow the node and link vectors being walked.
    auto reduce_paths = [&](int from_node, int length, int restrict_link) {
      std::vector<ReducePath> paths;
      std::vector<int> symnodes;
      std::function<void(int, int, bool)> walk = [&](int node, int remaining,
                                                     bool first) {
        if (remaining == 0) {
          paths.push_back({symnodes, node});
          return;
        }
        const auto& links = gss[static_cast<std::size_t>(node)].links;
        for (std::size_t li = 0; li < links.size(); ++li) {
          if (first && restrict_link >= 0 && static_cast<int>(li) != restrict_link)
            continue;
          symnodes.push_back(links[li].symnode);
          walk(links[li].target, remaining - 1, false);
          symnodes.pop_back();
        }
      };
      walk(from_node, length, true);
      return paths;
    };

    for (std::size_t w = 0; w < work.size(); ++w) {
      auto [node, restrict_link] = work[w];
      for (int la : lookahead) {
        const auto* acts = tables.actions(gss[static_cast<std::size_t>(node)].state, la);
        if (!acts) continue;
        for (const auto& act : *acts) {
          if (act.kind != Action::Kind::Reduce) continue;
          const Prod& prod = tables.productions()[static_cast<std::size_t>(act.target)];
          for (const ReducePath& path :
               reduce_paths(node, static_cast<int>(prod.rhs.size()), restrict_link)) {
            int base = path.base;
            int goto_state =
                tables.goto_state(gss[static_cast<std::size_t>(base)].state, prod.lhs);
            if (goto_state < 0) continue;
            int from = gss[static_cast<std::size_t>(base)].pos;
            int packed = forest.packed_node(prod.lhs, from, i);
            Forest::Alt alt{act.target, {}};
            alt.children.assign(path.symnodes.rbegin(), path.symnodes.rend());
            forest.add_alt(packed, std::move(alt));

            auto& fmap = frontier[static_cast<std::size_t>(i)];
            auto it = fmap.find(goto_state);
            if (it == fmap.end()) {
              int id = static_cast<int>(gss.size());
              gss.push_back({goto_state, i, {{base, packed}}});
              fmap.emplace(goto_state, id);
              work.push_back({id, -1});
            } else {
              auto& links = gss[static_cast<std::size_t>(it->second)].links;
              bool present = false;
              for (const auto& l : links)
                if (l.target == base && l.symnode == packed) present = true;
              if (!present) {
                links.push_back({base, packed});
                work.push_back({it->second, static_cast<int>(links.size()) - 1});
              }
            }
          }
        }
      }
    }

    if (i == n) {
      std::set<int> roots;
      for (const auto& [state, node] : frontier[static_cast<std::size_t>(n)]) {
        const auto* acts = tables.actions(state, tables.end_symbol());
        if (!acts) continue;
        bool accepts = false;
        for (const auto& act : *acts)
          if (act.kind == Action::Kind::Accept) accepts = true;
        if (!accepts) continue;
        for (const auto& link : gss[static_cast<std::size_t>(node)].links)
          roots.insert(link.symnode);
      }
      forest.roots.assign(roots.begin(), roots.end());
      break;
    }

    // shift phase
    for (const auto& [state, node] : frontier[static_cast<std::size_t>(i)]) {
      for (int sym : terminals_at(i)) {
        const auto* acts = tables.actions(state, sym);
        if (!acts) continue;
        for (const auto& act : *acts) {
          if (act.kind != Action::Kind::Shift) continue;
          int leaf = forest.leaf_node(sym, i);
          auto& fmap = frontier[static_cast<std::size_t>(i) + 1];
          auto it = fmap.find(act.target);
          if (it == fmap.end()) {
            int id = static_cast<int>(gss.size());
            gss.push_back({act.target, i + 1, {{node, leaf}}});
            fmap.emplace(act.target, id);
          } else {
            auto& links = gss[static_cast<std::size_t>(it->second)].links;
            bool present = false;
            for (const auto& l : links)
              if (l.target == node && l.symnode == leaf) present = true;
            if (!present) links.push_back({node, leaf});
          }
        }
      }
    }
  }
  return forest;
}

// -- unpacking ---------------------------------------------------------------

// Enumerates derivations out of the packed forest, in canonical order,
// bounded by `cap` per node (local ambiguity can multiply, so the bound
// applies during unpacking, not just at the end).
inline std::vector<ParseTree> enumerate_trees(const Forest& forest, const Tables& tables,
                                              int cap = 256) {
  std::vector<std::optional<std::vector<ParseTree>>> memo(forest.nodes.size());
  std::function<const std::vector<ParseTree>&(int)> expand =
      [&](int id) -> const std::vector<ParseTree>& {
    auto& slot = memo[static_cast<std::size_t>(id)];
    if (slot) return *slot;
    const Forest::Node& node = forest.nodes[static_cast<std::size_t>(id)];
    std::vector<ParseTree> out;
    if (node.leaf) {
      out.push_back({-1, node.sym, node.from, {}});
    } else {
      for (const auto& alt : node.alts) {
        std::vector<ParseTree> partial = {{alt.prod, node.sym, -1, {}}};
        for (int child : alt.children) {
          const auto& sub = expand(child);
          std::vector<ParseTree> next;
          for (const auto& base : partial) {
            for (const auto& ct : sub) {
              ParseTree grown = base;
              grown.children.push_back(ct);
              next.push_back(std::move(grown));
              if (static_cast<int>(next.size()) > cap) break;
            }
            if (static_cast<int>(next.size()) > cap) break;
          }
          partial = std::move(next);
        }
        for (auto& tr : partial) {
          out.push_back(std::move(tr));
          if (static_cast<int>(out.size()) > cap) break;
        }
        if (static_cast<int>(out.size()) > cap) break;
      }
    }
    slot = std::move(out);
    return *slot;
  };

  std::vector<ParseTree> trees;
  for (int root : forest.roots)
    for (const auto& tr : expand(root)) trees.push_back(tr);
  std::sort(trees.begin(), trees.end(), [&](const ParseTree& a, const ParseTree& b) {
    return detail::compare_trees(a, b, tables) < 0;
  });
  if (static_cast<int>(trees.size()) > cap) trees.resize(static_cast<std::size_t>(cap));
  return trees;
}

// -- equation evaluation --------------------------------------------------------

struct Reading {
  ParseTree tree;
  std::vector<int> lex_choice;  // per input position, lexical alternative index
  avm::FeatureStructure fstruct;
};

namespace detail {

inline Result<grammar::Constituent, grammar::Violation> eval_tree(
    const ParseTree& tree, const Lattice& lattice, const std::vector<int>& choice,
    const Tables& tables, const grammar::Grammar& g, const lexdb::LexDb& db) {
  if (tree.leaf()) {
    const auto& alt = lattice.alternatives[static_cast<std::size_t>(tree.pos)]
                                          [static_cast<std::size_t>(
                                              choice[static_cast<std::size_t>(tree.pos)])];
    return grammar::Constituent{alt.cat, alt.fs};
  }
  std::vector<grammar::Constituent> children;
  children.reserve(tree.children.size());
  for (const auto& c : tree.children) {
    auto sub = eval_tree(c, lattice, choice, tables, g, db);
    if (!sub) return sub.error();
    children.push_back(sub.value());
  }
  int rule_index = tables.productions()[static_cast<std::size_t>(tree.prod)].rule;
  const grammar::Rule& rule = g.rules()[static_cast<std::size_t>(rule_index)];
  return grammar::eval_rule(rule, children, db);
}

inline void leaf_positions(const ParseTree& tree, std::vector<const ParseTree*>& out) {
  if (tree.leaf()) {
    out.push_back(&tree);
    return;
  }
  for (const auto& c : tree.children) leaf_positions(c, out);
}

}  // namespace detail

// Full parse: backbone derivations, then per-derivation evaluation over
// every combination of lexical alternatives. Readings are ordered by
// lexical-alternative indices first, then by canonical derivation order.
// `max_readings` caps the returned readings; `derivation_cap` bounds
// forest unpacking (violating derivations do not count against the
// reading cap, so the two limits are separate).
inline std::vector<Reading> parse(const Lattice& lattice, const Tables& tables,
                                  const grammar::Grammar& g, const lexdb::LexDb& db,
                                  int max_readings = 256, int derivation_cap = 256) {
  Forest forest = glr_parse(lattice, tables);
  std::vector<ParseTree> trees =
      enumerate_trees(forest, tables, std::max(max_readings, derivation_cap));

  struct Keyed {
    std::vector<int> lex;
    int tree_rank;
    Reading reading;
  };
  std::vector<Keyed> found;

  for (std::size_t tr = 0; tr < trees.size(); ++tr) {
    const ParseTree& tree = trees[tr];
    std::vector<const ParseTree*> leaves;
    detail::leaf_positions(tree, leaves);
    // candidate alternative indices per position, ascending
    std::vector<std::vector<int>> cands(lattice.size());
    bool viable = true;
    for (const ParseTree* leaf : leaves) {
      auto pos = static_cast<std::size_t>(leaf->pos);
      const auto& alts = lattice.alternatives[pos];
      for (std::size_t k = 0; k < alts.size(); ++k)
        if (tables.id(alts[k].cat) == leaf->sym) cands[pos].push_back(static_cast<int>(k));
      if (cands[pos].empty()) viable = false;
    }
    if (!viable) continue;

    std::vector<std::size_t> odo(lattice.size(), 0);
    while (true) {
      std::vector<int> choice(lattice.size(), 0);
      for (std::size_t p = 0; p < lattice.size(); ++p)
        choice[p] = cands[p][odo[p]];
      auto res = detail::eval_tree(tree, lattice, choice, tables, g, db);
      if (res)
        found.push_back({choice, static_cast<int>(tr),
                         Reading{tree, choice, res.value().fs}});
      // advance odometer, last position fastest
      std::size_t p = lattice.size();
      while (p > 0) {
        --p;
        if (++odo[p] < cands[p].size()) break;
        odo[p] = 0;
        if (p == 0) goto done_combos;
      }
      if (lattice.size() == 0) break;
    }
  done_combos:;
  }

  std::stable_sort(found.begin(), found.end(), [](const Keyed& a, const Keyed& b) {
    if (a.lex != b.lex) return a.lex < b.lex;
    return a.tree_rank < b.tree_rank;
  });
  std::vector<Reading> readings;
  for (auto& k : found) {
    readings.push_back(std::move(k.reading));
    if (static_cast<int>(readings.size()) >= max_readings) break;
  }
  return readings;
}

// -- exhaustive oracle ------------------------------------------------------------

// Brute-force chart enumeration of every backbone derivation; used to
// cross-check the GSS engine. Quadratic-ish in spans and exponential in
// ambiguity, fine for desk-scale sentences.
inline std::vector<ParseTree> oracle_parse(const Lattice& lattice, const Tables& tables) {
  const int n = static_cast<int>(lattice.size());
  const auto& prods = tables.productions();
  std::map<std::tuple<int, int, int>, std::vector<ParseTree>> chart;

  auto has_cat = [&](int pos, int sym) {
    for (const auto& alt : lattice.alternatives[static_cast<std::size_t>(pos)])
      if (tables.id(alt.cat) == sym) return true;
    return false;
  };

  for (int len = 1; len <= n; ++len) {
    for (int from = 0; from + len <= n; ++from) {
      int to = from + len;
      // non-unary productions and unary productions over a terminal
      for (std::size_t pi = 1; pi < prods.size(); ++pi) {
        const Prod& p = prods[pi];
        if (p.rhs.size() == 1 && !tables.is_terminal(p.rhs[0])) continue;
        std::vector<ParseTree> acc;
        std::function<void(std::size_t, int)> compose = [&](std::size_t idx, int start) {
          if (idx == p.rhs.size()) {
            if (start != to) return;
            ParseTree tree{static_cast<int>(pi), p.lhs, -1, acc};
            chart[{p.lhs, from, to}].push_back(std::move(tree));
            return;
          }
          int sym = p.rhs[idx];
          int tail = static_cast<int>(p.rhs.size() - idx - 1);
          if (tables.is_terminal(sym)) {
            if (start + 1 <= to - tail && has_cat(start, sym)) {
              acc.push_back({-1, sym, start, {}});
              compose(idx + 1, start + 1);
              acc.pop_back();
            }
            return;
          }
          for (int end = start + 1; end <= to - tail; ++end) {
            auto it = chart.find({sym, start, end});
            if (it == chart.end()) continue;
            for (const auto& sub : it->second) {
              acc.push_back(sub);
              compose(idx + 1, end);
              acc.pop_back();
            }
          }
        };
        compose(0, from);
      }
      // unary nonterminal closure (XP -> NP etc., then S -> XP)
      std::map<std::size_t, std::size_t> watermark;
      bool changed = true;
      while (changed) {
        changed = false;
        for (std::size_t pi = 1; pi < prods.size(); ++pi) {
          const Prod& p = prods[pi];
          if (p.rhs.size() != 1 || tables.is_terminal(p.rhs[0])) continue;
          auto it = chart.find({p.rhs[0], from, to});
          if (it == chart.end()) continue;
          std::size_t& seen = watermark[pi];
          std::size_t total = it->second.size();
          for (std::size_t k = seen; k < total; ++k) {
            ParseTree tree{static_cast<int>(pi), p.lhs, -1, {it->second[k]}};
            chart[{p.lhs, from, to}].push_back(std::move(tree));
            changed = true;
          }
          seen = total;
        }
      }
    }
  }

  auto it = chart.find({tables.id("S"), 0, n});
  if (it == chart.end()) return {};
  return it->second;
}

}  // namespace tlfg::glr
