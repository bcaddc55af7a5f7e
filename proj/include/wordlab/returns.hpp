#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "wordlab/extension.hpp"
#include "wordlab/factor_set.hpp"
#include "wordlab/morphism.hpp"

namespace wordlab {

struct ReturnData {
  Word base;
  std::vector<Word> gamma;               // Γ_S(w) within the truncation
  std::vector<Word> first_returns;       // R_S(w)
  std::vector<Word> gamma_left;          // Γ'_S(w)
  std::vector<Word> first_returns_left;  // R'_S(w)
  // Set when some K <= depth-1 has every member of length K containing w;
  // then every first return x satisfies |wx| <= K+1 and R is complete.
  bool complete = false;
  std::size_t certificate_length = 0;
  std::size_t max_return_length = 0;
};

// Smallest K <= depth-1 with every member of length K containing w.
std::optional<std::size_t> return_certificate(const FactorSet& s, const Word& w);

ReturnData return_words(const FactorSet& s, const Word& w);

struct Conjugation {
  bool holds = false;
  // (x, x') with w x = x' w, x in R, x' in R'
  std::vector<std::pair<Word, Word>> pairs;
};

// w R = R' w; throws incomplete_returns when rd is not certified.
Conjugation left_right_conjugation(const ReturnData& rd);

// Coding morphism for R_S(w): fresh letters r0 < r1 < ... bound to R in
// length-then-lex order.
Morphism default_return_coding(const FactorSet& s, const ReturnData& rd);

struct DerivedSet {
  Morphism coding;  // B -> A, images R_S(w)
  FactorSet set;    // D_f(S) ∩ B^{<=m}
  RecurrenceVerdict recurrence;
};

// D_f(S) = f^{-1}(Γ_S(w)) ∪ {1}, to depth floor((depth - |w|) / max|R|).
// The coding must map bijectively onto R_S(w).
DerivedSet derived_set(const FactorSet& s, const Word& w, const Morphism& coding);
DerivedSet derived_set(const FactorSet& s, const Word& w);

// Source of ever longer prefixes of an infinite word.
using PrefixSource = std::function<Word(std::size_t)>;

// First n letters of D_f(x); the source is queried with growing lengths up
// to `horizon`. Throws not_found when w does not occur within the horizon.
Word derived_word(const PrefixSource& x, const Word& w, const Morphism& coding, std::size_t n,
                  std::size_t horizon = std::size_t{1} << 22);

struct UniformRecurrenceVerdict {
  bool passed = true;
  std::size_t up_to = 0;
  std::optional<Word> witness;
  std::string reason;
  std::size_t max_certificate = 0;  // largest K used
};

UniformRecurrenceVerdict uniform_recurrence_check(const FactorSet& s, std::size_t up_to);

}  // namespace wordlab
