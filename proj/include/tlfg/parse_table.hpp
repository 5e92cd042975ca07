// tlfg -- SLR(1) table construction over the c-structure backbone.
//
// Conflicts are expected (free word order guarantees them) and are kept
// as multi-valued action cells for the graph-structured stack to explore;
// only unreachable or unproductive nonterminals are construction errors.
#pragma once

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "tlfg/grammar.hpp"

namespace tlfg::glr {

struct Prod {
  int lhs;
  std::vector<int> rhs;
  int rule = -1;  // index into Grammar::rules(); -1 for the augmented start
};

struct Action {
  enum class Kind { Shift, Reduce, Accept };
  Kind kind;
  int target = -1;  // shift: state; reduce: production index

  friend bool operator==(const Action&, const Action&) = default;
};

class Tables {
 public:
  static Tables compile(const grammar::Grammar& g) {
    Tables t;
    // intern symbols: nonterminals first (in declaration order), then
    // terminals as they appear on right-hand sides
    for (const auto& r : g.rules()) t.intern(r.lhs);
    int num_nonterminals = static_cast<int>(t.names_.size());
    for (const auto& r : g.rules())
      for (const auto& s : r.rhs) t.intern(s);
    t.end_ = t.intern("$end");
    t.terminal_.assign(t.names_.size(), true);
    for (int s = 0; s < num_nonterminals; ++s) t.terminal_[static_cast<std::size_t>(s)] = false;

    int start = t.id("S");
    if (start < 0 || t.terminal_[static_cast<std::size_t>(start)])
      throw std::invalid_argument("backbone has no start symbol S");

    t.prods_.push_back({t.intern("$accept"), {start}, -1});
    t.terminal_.resize(t.names_.size(), false);
    t.terminal_[static_cast<std::size_t>(t.prods_[0].lhs)] = false;
    for (std::size_t i = 0; i < g.rules().size(); ++i) {
      const auto& r = g.rules()[i];
      Prod p;
      p.lhs = t.id(r.lhs);
      for (const auto& s : r.rhs) p.rhs.push_back(t.id(s));
      p.rule = static_cast<int>(i);
      t.prods_.push_back(std::move(p));
    }

    t.check_reachable_productive(start);
    t.build_follow(start);
    t.build_automaton();
    return t;
  }

  int id(std::string_view name) const {
    auto it = ids_.find(std::string(name));
    return it == ids_.end() ? -1 : it->second;
  }
  const std::string& name(int sym) const { return names_[static_cast<std::size_t>(sym)]; }
  bool is_terminal(int sym) const { return terminal_[static_cast<std::size_t>(sym)]; }
  int end_symbol() const { return end_; }
  int start_state() const { return 0; }
  int state_count() const { return static_cast<int>(actions_.size()); }
  const std::vector<Prod>& productions() const { return prods_; }

  const std::vector<Action>* actions(int state, int terminal) const {
    const auto& row = actions_[static_cast<std::size_t>(state)];
    auto it = row.find(terminal);
    return it == row.end() ? nullptr : &it->second;
  }

  int goto_state(int state, int nonterminal) const {
    const auto& row = gotos_[static_cast<std::size_t>(state)];
    auto it = row.find(nonterminal);
    return it == row.end() ? -1 : it->second;
  }

  // Number of multi-valued action cells (shift/reduce or reduce/reduce).
  int conflict_cells() const {
    int n = 0;
    for (const auto& row : actions_)
      for (const auto& [sym, acts] : row)
        if (acts.size() > 1) ++n;
    return n;
  }

 private:
  std::vector<std::string> names_;
  std::map<std::string, int> ids_;
  std::vector<bool> terminal_;
  std::vector<Prod> prods_;
  int end_ = -1;
  std::vector<std::set<int>> follow_;
  std::vector<std::map<int, std::vector<Action>>> actions_;
  std::vector<std::map<int, int>> gotos_;

  int intern(const std::string& name) {
    auto it = ids_.find(name);
    if (it != ids_.end()) return it->second;
    int id = static_cast<int>(names_.size());
    names_.push_back(name);
    ids_.emplace(name, id);
    return id;
  }

  void check_reachable_productive(int start) {
    std::set<int> reachable = {start};
    bool changed = true;
    while (changed) {
      changed = false;
      for (const auto& p : prods_) {
        if (p.rule < 0 || !reachable.count(p.lhs)) continue;
        for (int s : p.rhs)
          if (!is_terminal(s) && reachable.insert(s).second) changed = true;
      }
    }
    std::set<int> productive;
    changed = true;
    while (changed) {
      changed = false;
      for (const auto& p : prods_) {
        if (p.rule < 0 || productive.count(p.lhs)) continue;
        bool all = true;
        for (int s : p.rhs)
          if (!is_terminal(s) && !productive.count(s)) all = false;
        if (all) {
          productive.insert(p.lhs);
          changed = true;
        }
      }
    }
    for (const auto& p : prods_) {
      if (p.rule < 0) continue;
      if (!reachable.count(p.lhs))
        throw std::invalid_argument("unreachable nonterminal " + name(p.lhs));
      if (!productive.count(p.lhs))
        throw std::invalid_argument("unproductive nonterminal " + name(p.lhs));
    }
  }

  // No empty productions, so FIRST needs no nullability bookkeeping.
  void build_follow(int start) {
    std::vector<std::set<int>> first(names_.size());
    for (std::size_t s = 0; s < names_.size(); ++s)
      if (terminal_[s]) first[s].insert(static_cast<int>(s));
    bool changed = true;
    while (changed) {
      changed = false;
      for (const auto& p : prods_) {
        auto& f = first[static_cast<std::size_t>(p.lhs)];
        for (int s : first[static_cast<std::size_t>(p.rhs[0])])
          if (f.insert(s).second) changed = true;
      }
    }
    follow_.assign(names_.size(), {});
    follow_[static_cast<std::size_t>(start)].insert(end_);
    changed = true;
    while (changed) {
      changed = false;
      for (const auto& p : prods_) {
        for (std::size_t i = 0; i < p.rhs.size(); ++i) {
          int x = p.rhs[i];
          if (is_terminal(x)) continue;
          auto& fx = follow_[static_cast<std::size_t>(x)];
          if (i + 1 < p.rhs.size()) {
            for (int s : first[static_cast<std::size_t>(p.rhs[i + 1])])
              if (fx.insert(s).second) changed = true;
          } else {
            for (int s : follow_[static_cast<std::size_t>(p.lhs)])
              if (fx.insert(s).second) changed = true;
          }
        }
      }
    }
  }

  using Item = std::pair<int, int>;  // production index, dot
  using ItemSet = std::vector<Item>;

  ItemSet closure(ItemSet items) const {
    std::set<Item> seen(items.begin(), items.end());
    for (std::size_t i = 0; i < items.size(); ++i) {
      auto [pi, dot] = items[i];
      const Prod& p = prods_[static_cast<std::size_t>(pi)];
      if (dot >= static_cast<int>(p.rhs.size())) continue;
      int x = p.rhs[static_cast<std::size_t>(dot)];
      if (is_terminal(x)) continue;
      for (std::size_t q = 0; q < prods_.size(); ++q)
        if (prods_[q].lhs == x && seen.insert({static_cast<int>(q), 0}).second)
          items.push_back({static_cast<int>(q), 0});
    }
    std::sort(items.begin(), items.end());
    return items;
  }

  void build_automaton() {
    std::map<ItemSet, int> state_ids;
    std::vector<ItemSet> states;
    ItemSet start_set = closure({{0, 0}});
    state_ids.emplace(start_set, 0);
    states.push_back(std::move(start_set));
    actions_.emplace_back();
    gotos_.emplace_back();

    for (std::size_t si = 0; si < states.size(); ++si) {
      std::map<int, ItemSet> moved;
      for (auto [pi, dot] : states[si]) {
        const Prod& p = prods_[static_cast<std::size_t>(pi)];
        if (dot < static_cast<int>(p.rhs.size()))
          moved[p.rhs[static_cast<std::size_t>(dot)]].push_back({pi, dot + 1});
      }
      for (auto& [sym, kernel] : moved) {
        ItemSet next = closure(std::move(kernel));
        auto [it, inserted] = state_ids.emplace(next, static_cast<int>(states.size()));
        if (inserted) {
          states.push_back(std::move(next));
          actions_.emplace_back();
          gotos_.emplace_back();
        }
        int target = it->second;
        if (is_terminal(sym))
          add_action(static_cast<int>(si), sym, {Action::Kind::Shift, target});
        else
          gotos_[si][sym] = target;
      }
      for (auto [pi, dot] : states[si]) {
        const Prod& p = prods_[static_cast<std::size_t>(pi)];
        if (dot != static_cast<int>(p.rhs.size())) continue;
        if (pi == 0) {
          add_action(static_cast<int>(si), end_, {Action::Kind::Accept, 0});
        } else {
          for (int la : follow_[static_cast<std::size_t>(p.lhs)])
            add_action(static_cast<int>(si), la, {Action::Kind::Reduce, pi});
        }
      }
    }
  }

  void add_action(int state, int terminal, Action a) {
    auto& cell = actions_[static_cast<std::size_t>(state)][terminal];
    if (std::find(cell.begin(), cell.end(), a) == cell.end()) cell.push_back(a);
  }
};

}  // namespace tlfg::glr
