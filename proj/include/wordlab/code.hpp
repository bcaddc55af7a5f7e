#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "wordlab/factor_set.hpp"
#include "wordlab/morphism.hpp"
#include "wordlab/report.hpp"
#include "wordlab/word.hpp"

namespace wordlab {

/// Finite set of nonempty words, kept sorted and duplicate free.
class CodeSet {
 public:
  CodeSet() = default;
  CodeSet(Alphabet alphabet, std::vector<Word> words);
  static CodeSet parse(const Alphabet& alphabet, std::string_view list);

  const Alphabet& alphabet() const noexcept { return alphabet_; }
  const std::vector<Word>& words() const noexcept { return words_; }
  std::size_t size() const noexcept { return words_.size(); }
  std::size_t max_length() const noexcept;
  bool contains(const Word& w) const;
  std::vector<std::string> format() const { return alphabet_.format_all(words_); }

  bool operator==(const CodeSet& o) const { return alphabet_ == o.alphabet_ && words_ == o.words_; }

 private:
  Alphabet alphabet_;
  std::vector<Word> words_;
};

bool is_prefix_code(const std::vector<Word>& X);
bool is_suffix_code(const std::vector<Word>& X);
bool is_bifix_code(const std::vector<Word>& X);
// Sardinas–Patterson
bool is_code(const std::vector<Word>& X);

// Indices into X of a factorization of w over X, if w ∈ X^*.
std::optional<std::vector<std::size_t>> factorize(const std::vector<Word>& X, const Word& w);
bool in_star(const std::vector<Word>& X, const Word& w);

struct Parse {
  Word v;  // no suffix in X
  Word x;  // in X^*
  Word u;  // no prefix in X
};

// All triples (v, x, u) with w = v x u. Requires a bifix code.
std::vector<Parse> parses(const CodeSet& X, const Word& w);
// Number of suffixes of w with no prefix in X.
std::size_t parse_count_by_suffixes(const std::vector<Word>& X, const Word& w);
// Number of prefixes of w with no suffix in X.
std::size_t parse_count_by_prefixes(const std::vector<Word>& X, const Word& w);
// d_X(w)
std::size_t parse_count(const CodeSet& X, const Word& w);

// Every w in s of length <= max|X| is prefix-comparable with a member of X.
// Exact for certified sets; needs depth >= max|X| (or an exhaustive set).
// Returns false when X is not contained in s.
bool is_s_maximal_prefix(const std::vector<Word>& X, const FactorSet& s);
bool is_s_maximal_suffix(const std::vector<Word>& X, const FactorSet& s);
// Uses the prefix criterion when s passes the desk recurrence check, and a
// direct search for a bifix extension inside the truncation otherwise.
bool is_s_maximal_bifix(const std::vector<Word>& X, const FactorSet& s);

// Maximum of d_X over s. Requires X ⊂ s bifix and S-maximal, and s deeper
// than 3*max|X| unless exhaustive.
std::size_t s_degree(const CodeSet& X, const FactorSet& s);
// I(X) = {w in s : d_X(w) < d}
std::vector<Word> internal_factors(const CodeSet& X, const FactorSet& s);
// K(X) = I(X) ∩ X
CodeSet kernel(const CodeSet& X, const FactorSet& s);

// T = f^{-1}(s) ∩ B^{<=m} with m = floor(depth / max|f(b)|); exact because
// membership of f(w) is tested directly. Exhaustive sources give exhaustive
// results.
FactorSet inverse_image(const FactorSet& s, const Morphism& f);

// X = f(Y); Y must use every letter of f's source and f must be injective on
// letters.
CodeSet compose_codes(const CodeSet& Y, const Morphism& f);

struct Decomposition {
  bool possible = false;
  std::string reason;  // when impossible
  CodeSet Y;
  Morphism f;          // B -> Z
};

// Fresh letters z0, z1, ... bound to Z in sorted order unless `letters` is
// given (one symbol per word of Z, same order).
Decomposition decompose_over(const CodeSet& X, const CodeSet& Z,
                             const std::optional<Alphabet>& letters = std::nullopt);

// Both statements relating maximality of X = f(Y) to maximality of Y and Z.
Report maximality_transfer_check(const CodeSet& Y, const Morphism& f, const FactorSet& s);

}  // namespace wordlab
