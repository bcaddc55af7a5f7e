#pragma once

#include <cstddef>
#include <string>
#include <unordered_set>
#include <vector>

#include "wordlab/word.hpp"

namespace wordlab {

enum class Completeness { certified, possibly_incomplete };
enum class Provenance { explicit_words, morphic, iet, derived, decoded, periodic, replay };

const char* to_string(Completeness c) noexcept;
const char* to_string(Provenance p) noexcept;

/// A factorial language truncated at `depth`.
///
/// When `certified()` the member list equals S ∩ A^{<=depth} for the language
/// S being approximated. An `exhaustive()` set is finite and has no members
/// longer than its depth, so membership queries beyond depth answer "no"
/// instead of throwing.
class FactorSet {
 public:
  FactorSet() = default;

  // All factors (of length <= depth) of the given words.
  static FactorSet from_cover(Alphabet alphabet, const std::vector<Word>& cover, std::size_t depth,
                              Completeness completeness, Provenance provenance);
  // Fac(words), finite and exhaustive.
  static FactorSet finite(Alphabet alphabet, const std::vector<Word>& words,
                          Provenance provenance = Provenance::explicit_words);
  // Members listed explicitly; must already be factorial.
  static FactorSet from_members(Alphabet alphabet, std::vector<Word> members, std::size_t depth,
                                Completeness completeness, Provenance provenance,
                                bool exhaustive = false);

  const Alphabet& alphabet() const noexcept { return alphabet_; }
  std::size_t depth() const noexcept { return depth_; }
  Completeness completeness() const noexcept { return completeness_; }
  bool certified() const noexcept { return completeness_ == Completeness::certified; }
  bool exhaustive() const noexcept { return exhaustive_; }
  Provenance provenance() const noexcept { return provenance_; }

  // Throws depth_exceeded for |w| > depth unless the set is exhaustive.
  bool contains(const Word& w) const;
  // Sorted lexicographically. Throws depth_exceeded for n > depth.
  const std::vector<Word>& words_of_length(std::size_t n) const;
  // Length then lexicographic order.
  std::vector<Word> words() const;
  std::size_t size() const noexcept { return members_.size(); }
  // Letters of the alphabet that occur in the set.
  std::vector<Letter> letters() const;

  FactorSet truncate(std::size_t depth) const;
  FactorSet with_completeness(Completeness c) const;

  bool same_words(const FactorSet& other) const;

 private:
  void index_members(std::vector<Word> members);

  Alphabet alphabet_;
  std::size_t depth_ = 0;
  Completeness completeness_ = Completeness::possibly_incomplete;
  Provenance provenance_ = Provenance::explicit_words;
  bool exhaustive_ = false;
  std::vector<std::vector<Word>> by_length_;
  std::unordered_set<Word, WordHash> members_;
};

// {w in s : |w| = n}
std::vector<Word> factors_of_length(const FactorSet& s, std::size_t n);
// p_n; requires a certified set.
std::size_t complexity(const FactorSet& s, std::size_t n);

}  // namespace wordlab
