#include "wordlab/automaton.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include "wordlab/error.hpp"

namespace wordlab {

DeterministicAutomaton::DeterministicAutomaton(std::size_t alphabet_size, std::size_t states, std::size_t initial)
    : k_(alphabet_size), initial_(initial), delta_(alphabet_size * states, none), terminal_(states, 0) {
  if (initial >= states) throw Error(ErrorKind::invalid_argument, "initial state out of range");
}

std::vector<std::size_t> DeterministicAutomaton::terminals() const {
  std::vector<std::size_t> out;
  for (std::size_t p = 0; p < terminal_.size(); ++p)
    if (terminal_[p]) out.push_back(p);
  return out;
}

void DeterministicAutomaton::set_transition(std::size_t p, Letter a, std::size_t q) {
  if (p >= state_count() || q >= state_count() || a >= k_) throw Error(ErrorKind::invalid_argument, "bad transition");
  delta_[p * k_ + a] = q;
}

void DeterministicAutomaton::set_terminal(std::size_t p, bool t) { terminal_.at(p) = t ? 1 : 0; }

std::size_t DeterministicAutomaton::run(std::size_t p, const Word& w) const {
  for (Letter a : w) {
    if (p == none) return none;
    p = next(p, a);
  }
  return p;
}

bool DeterministicAutomaton::accepts(const Word& w) const {
  auto p = run(initial_, w);
  return p != none && terminal_[p];
}

bool DeterministicAutomaton::is_trim() const {
  const auto n = state_count();
  std::vector<char> acc(n, 0), coacc(n, 0);
  std::vector<std::size_t> stack{initial_};
  acc[initial_] = 1;
  while (!stack.empty()) {
    auto p = stack.back();
    stack.pop_back();
    for (std::size_t a = 0; a < k_; ++a) {
      auto q = delta_[p * k_ + a];
      if (q != none && !acc[q]) {
        acc[q] = 1;
        stack.push_back(q);
      }
    }
  }
  for (std::size_t p = 0; p < n; ++p)
    if (terminal_[p]) coacc[p] = 1;
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t p = 0; p < n; ++p) {
      if (coacc[p]) continue;
      for (std::size_t a = 0; a < k_; ++a) {
        auto q = delta_[p * k_ + a];
        if (q != none && coacc[q]) {
          coacc[p] = 1;
          changed = true;
          break;
        }
      }
    }
  }
  for (std::size_t p = 0; p < n; ++p)
    if (!acc[p] || !coacc[p]) return false;
  return true;
}

bool DeterministicAutomaton::is_simple() const {
  auto t = terminals();
  return is_trim() && t.size() == 1 && t[0] == initial_;
}

bool DeterministicAutomaton::is_group_automaton() const {
  auto t = terminals();
  if (t.size() != 1 || t[0] != initial_) return false;
  for (std::size_t a = 0; a < k_; ++a) {
    std::vector<char> hit(state_count(), 0);
    for (std::size_t p = 0; p < state_count(); ++p) {
      auto q = delta_[p * k_ + a];
      if (q == none || hit[q]) return false;
      hit[q] = 1;
    }
  }
  return true;
}

std::string DeterministicAutomaton::to_dot(const Alphabet& alphabet, const std::string& name) const {
  std::ostringstream out;
  out << "digraph \"" << name << "\" {\n  rankdir=LR;\n  start [shape=point];\n";
  for (std::size_t p = 0; p < state_count(); ++p) {
    out << "  " << p << " [shape=" << (p == initial_ ? "doublecircle" : "circle");
    if (terminal_[p]) out << ", style=bold, peripheries=" << (p == initial_ ? 3 : 2);
    out << "];\n";
  }
  out << "  start -> " << initial_ << ";\n";
  for (std::size_t p = 0; p < state_count(); ++p)
    for (std::size_t a = 0; a < k_; ++a) {
      auto q = delta_[p * k_ + a];
      if (q != none) out << "  " << p << " -> " << q << " [label=\"" << alphabet.symbol(static_cast<Letter>(a)) << "\"];\n";
    }
  out << "}\n";
  return out.str();
}

DeterministicAutomaton minimize(const DeterministicAutomaton& a) {
  const auto n = a.state_count();
  const auto k = a.alphabet_size();
  const std::size_t sink = n;
  auto step = [&](std::size_t p, std::size_t c) {
    if (p == sink) return sink;
    auto q = a.next(p, static_cast<Letter>(c));
    return q == DeterministicAutomaton::none ? sink : q;
  };
  // classes over n + 1 states, the extra one a rejecting sink
  std::vector<std::size_t> cls(n + 1);
  for (std::size_t p = 0; p < n; ++p) cls[p] = a.is_terminal(p) ? 1 : 0;
  cls[sink] = 0;
  std::size_t count = 0;
  while (true) {
    std::map<std::vector<std::size_t>, std::size_t> sig;
    std::vector<std::size_t> next(n + 1);
    for (std::size_t p = 0; p <= n; ++p) {
      std::vector<std::size_t> key{cls[p]};
      for (std::size_t c = 0; c < k; ++c) key.push_back(cls[step(p, c)]);
      auto it = sig.emplace(std::move(key), sig.size()).first;
      next[p] = it->second;
    }
    bool stable = sig.size() == count;
    count = sig.size();
    cls = std::move(next);
    if (stable) break;
  }
  // drop the sink class and unreachable classes, numbering by BFS from i
  const auto dead = cls[sink];
  std::vector<std::size_t> rep(count, DeterministicAutomaton::none);
  for (std::size_t p = 0; p < n; ++p)
    if (rep[cls[p]] == DeterministicAutomaton::none) rep[cls[p]] = p;
  std::vector<std::size_t> order, id(count, DeterministicAutomaton::none);
  if (cls[a.initial()] == dead) return DeterministicAutomaton(k, 1, 0);
  order.push_back(cls[a.initial()]);
  id[cls[a.initial()]] = 0;
  for (std::size_t i = 0; i < order.size(); ++i) {
    auto p = rep[order[i]];
    for (std::size_t c = 0; c < k; ++c) {
      auto q = cls[step(p, c)];
      if (q == dead || id[q] != DeterministicAutomaton::none) continue;
      id[q] = order.size();
      order.push_back(q);
    }
  }
  DeterministicAutomaton m(k, order.size(), 0);
  for (std::size_t i = 0; i < order.size(); ++i) {
    auto p = rep[order[i]];
    m.set_terminal(i, a.is_terminal(p));
    for (std::size_t c = 0; c < k; ++c) {
      auto q = cls[step(p, c)];
      if (q != dead) m.set_transition(i, static_cast<Letter>(c), id[q]);
    }
  }
  return m;
}

DeterministicAutomaton minimal_automaton_of_star(const CodeSet& X) {
  if (!is_prefix_code(X.words())) throw Error(ErrorKind::not_prefix, "X must be a prefix code");
  // trie on proper prefixes; completing a word of X returns to the root
  std::map<Word, std::size_t> state{{Word{}, 0}};
  std::vector<Word> prefixes{Word{}};
  for (const auto& x : X.words())
    for (std::size_t len = 1; len < x.size(); ++len) {
      Word p = slice(x, 0, len);
      if (state.emplace(p, prefixes.size()).second) prefixes.push_back(p);
    }
  const auto k = X.alphabet().size();
  DeterministicAutomaton trie(k, prefixes.size(), 0);
  trie.set_terminal(0);
  for (std::size_t i = 0; i < prefixes.size(); ++i)
    for (std::size_t c = 0; c < k; ++c) {
      Word pc = concat(prefixes[i], Word{static_cast<Letter>(c)});
      if (X.contains(pc)) {
        trie.set_transition(i, static_cast<Letter>(c), 0);
      } else if (auto it = state.find(pc); it != state.end()) {
        trie.set_transition(i, static_cast<Letter>(c), it->second);
      }
    }
  return minimize(trie);
}

Permutation compose_perm(const Permutation& first, const Permutation& then) {
  Permutation r(first.size());
  for (std::size_t i = 0; i < first.size(); ++i) r[i] = then[first[i]];
  return r;
}

Permutation perm_of_word(const std::vector<Permutation>& actions, const Word& w) {
  if (actions.empty()) throw Error(ErrorKind::invalid_argument, "no letter actions");
  Permutation r(actions[0].size());
  std::iota(r.begin(), r.end(), std::size_t{0});
  for (Letter c : w) r = compose_perm(r, actions.at(c));
  return r;
}

namespace {

void validate_actions(const std::vector<Permutation>& actions) {
  if (actions.empty()) throw Error(ErrorKind::invalid_argument, "no letter actions");
  const auto n = actions[0].size();
  for (const auto& p : actions) {
    if (p.size() != n) throw Error(ErrorKind::invalid_argument, "letter actions act on different sets");
    std::vector<char> hit(n, 0);
    for (auto q : p) {
      if (q >= n || hit[q]) throw Error(ErrorKind::invalid_argument, "letter action is not a permutation");
      hit[q] = 1;
    }
  }
}

}  // namespace

GroupAutomatonSpec group_automaton(const std::vector<Permutation>& actions, std::size_t base) {
  validate_actions(actions);
  const auto n = actions[0].size();
  if (base >= n) throw Error(ErrorKind::invalid_argument, "base point out of range");
  std::vector<std::size_t> id(n, DeterministicAutomaton::none), order{base};
  id[base] = 0;
  for (std::size_t i = 0; i < order.size(); ++i)
    for (const auto& p : actions) {
      auto q = p[order[i]];
      if (id[q] == DeterministicAutomaton::none) {
        id[q] = order.size();
        order.push_back(q);
      }
    }
  GroupAutomatonSpec g;
  g.automaton = DeterministicAutomaton(actions.size(), order.size(), 0);
  g.automaton.set_terminal(0);
  for (std::size_t a = 0; a < actions.size(); ++a) {
    Permutation local(order.size());
    for (std::size_t i = 0; i < order.size(); ++i) {
      local[i] = id[actions[a][order[i]]];
      g.automaton.set_transition(i, static_cast<Letter>(a), local[i]);
    }
    g.letter_actions.push_back(std::move(local));
  }
  return g;
}

std::vector<Permutation> group_elements(const std::vector<Permutation>& generators) {
  validate_actions(generators);
  Permutation e(generators[0].size());
  std::iota(e.begin(), e.end(), std::size_t{0});
  std::vector<Permutation> elems{e};
  std::set<Permutation> seen{e};
  for (std::size_t i = 0; i < elems.size(); ++i)
    for (const auto& g : generators) {
      auto h = compose_perm(elems[i], g);
      if (seen.insert(h).second) elems.push_back(h);
    }
  return elems;
}

GroupAutomatonSpec regular_representation(const std::vector<Permutation>& generators) {
  auto elems = group_elements(generators);
  std::map<Permutation, std::size_t> index;
  for (std::size_t i = 0; i < elems.size(); ++i) index[elems[i]] = i;
  std::vector<Permutation> actions;
  for (const auto& g : generators) {
    Permutation act(elems.size());
    for (std::size_t i = 0; i < elems.size(); ++i) act[i] = index.at(compose_perm(elems[i], g));
    actions.push_back(std::move(act));
  }
  return group_automaton(actions, 0);
}

std::vector<Permutation> length_mod_action(std::size_t letters, std::size_t n) {
  if (n == 0) throw Error(ErrorKind::invalid_argument, "modulus must be positive");
  Permutation shift(n);
  for (std::size_t i = 0; i < n; ++i) shift[i] = (i + 1) % n;
  return std::vector<Permutation>(letters, shift);
}

CodeSet group_code_intersection(const GroupAutomatonSpec& g, const FactorSet& s) {
  if (!s.certified()) throw Error(ErrorKind::incomplete_set, "group code needs a certified factor set");
  const auto& aut = g.automaton;
  if (aut.alphabet_size() != s.alphabet().size())
    throw Error(ErrorKind::alphabet_mismatch, "automaton and set use different alphabets");
  std::vector<Word> found;
  std::vector<std::pair<Word, std::size_t>> level{{Word{}, aut.initial()}};
  while (!level.empty()) {
    std::vector<std::pair<Word, std::size_t>> next;
    for (const auto& [w, p] : level) {
      for (std::size_t c = 0; c < aut.alphabet_size(); ++c) {
        Word wc = concat(w, Word{static_cast<Letter>(c)});
        if (wc.size() > s.depth()) {
          if (s.exhaustive()) continue;
          throw Error(ErrorKind::insufficient_depth,
                      "a path of length " + std::to_string(s.depth()) + " has not returned yet");
        }
        if (!s.contains(wc)) continue;
        auto q = aut.next(p, static_cast<Letter>(c));
        if (q == DeterministicAutomaton::none) continue;
        if (q == aut.initial())
          found.push_back(std::move(wc));
        else
          next.emplace_back(std::move(wc), q);
      }
    }
    level = std::move(next);
  }
  return CodeSet(s.alphabet(), std::move(found));
}

}  // namespace wordlab
