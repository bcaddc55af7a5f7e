#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "wordlab/code.hpp"
#include "wordlab/factor_set.hpp"
#include "wordlab/word.hpp"

namespace wordlab {

/// Partial deterministic automaton (Q, i, T) over letters 0..k-1.
class DeterministicAutomaton {
 public:
  static constexpr std::size_t none = static_cast<std::size_t>(-1);

  DeterministicAutomaton() = default;
  DeterministicAutomaton(std::size_t alphabet_size, std::size_t states, std::size_t initial);

  std::size_t alphabet_size() const noexcept { return k_; }
  std::size_t state_count() const noexcept { return terminal_.size(); }
  std::size_t initial() const noexcept { return initial_; }
  bool is_terminal(std::size_t p) const { return terminal_.at(p) != 0; }
  std::vector<std::size_t> terminals() const;

  void set_transition(std::size_t p, Letter a, std::size_t q);
  void set_terminal(std::size_t p, bool t = true);
  // none when undefined
  std::size_t next(std::size_t p, Letter a) const { return delta_.at(p * k_ + a); }
  std::size_t run(std::size_t p, const Word& w) const;
  bool accepts(const Word& w) const;

  bool is_trim() const;
  bool is_simple() const;  // trim with T = {i}
  // complete, every letter acts as a permutation, T = {i}
  bool is_group_automaton() const;

  std::string to_dot(const Alphabet& alphabet, const std::string& name = "A") const;

 private:
  std::size_t k_ = 0;
  std::size_t initial_ = 0;
  std::vector<std::size_t> delta_;
  std::vector<char> terminal_;
};

// Minimal automaton of X* for a finite prefix code X.
DeterministicAutomaton minimal_automaton_of_star(const CodeSet& X);

// Moore refinement; drops states that are not useful.
DeterministicAutomaton minimize(const DeterministicAutomaton& a);

using Permutation = std::vector<std::size_t>;

/// Group automaton given by one permutation of Q per letter, p·a = perm[a][p].
struct GroupAutomatonSpec {
  DeterministicAutomaton automaton;
  std::vector<Permutation> letter_actions;
};

// Action of the letters on {0..n-1}, restricted to the orbit of `base`.
GroupAutomatonSpec group_automaton(const std::vector<Permutation>& actions, std::size_t base);
// States are the elements of the generated group, g·a = g φ(a); initial is
// the identity. The listed elements are available through `group_elements`.
GroupAutomatonSpec regular_representation(const std::vector<Permutation>& generators);
std::vector<Permutation> group_elements(const std::vector<Permutation>& generators);

// Cyclic group Z/n with every letter acting as +1.
std::vector<Permutation> length_mod_action(std::size_t letters, std::size_t n);

Permutation compose_perm(const Permutation& first, const Permutation& then);  // apply first, then `then`
Permutation perm_of_word(const std::vector<Permutation>& actions, const Word& w);

// X = Z ∩ S with Z the first returns to the initial state. Throws
// insufficient_depth when some path in s leaves the truncation before
// returning.
CodeSet group_code_intersection(const GroupAutomatonSpec& g, const FactorSet& s);

}  // namespace wordlab
