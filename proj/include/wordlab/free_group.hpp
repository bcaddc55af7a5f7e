#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "wordlab/code.hpp"
#include "wordlab/factor_set.hpp"
#include "wordlab/morphism.hpp"
#include "wordlab/word.hpp"

namespace wordlab {

struct SignedLetter {
  Letter letter = 0;
  bool inverse = false;

  bool operator==(const SignedLetter& o) const { return letter == o.letter && inverse == o.inverse; }
  bool operator<(const SignedLetter& o) const {
    return letter != o.letter ? letter < o.letter : inverse < o.inverse;
  }
};

using SignedWord = std::vector<SignedLetter>;

SignedWord to_signed(const Word& w);
SignedWord inverse(const SignedWord& w);
SignedWord reduce(const SignedWord& w);
SignedWord multiply(const SignedWord& u, const SignedWord& v);
bool is_positive(const SignedWord& w);
Word to_positive(const SignedWord& w);  // throws invalid_argument on inverses

// Letters, parenthesised groups and integer powers: "(cba)(ba)^-1", "c^-2cca".
SignedWord parse_signed(const Alphabet& alphabet, std::string_view text);
std::vector<SignedWord> parse_signed_list(const Alphabet& alphabet, std::string_view text);
std::string format_signed(const Alphabet& alphabet, const SignedWord& w);

// Extends a morphism to the free group.
SignedWord apply_signed(const Morphism& m, const SignedWord& w);

/// Folded (Stallings) graph of a finitely generated subgroup; vertex 0 is the
/// base and vertices are numbered by a canonical breadth-first walk.
class FoldedGraph {
 public:
  struct Edge {
    std::size_t from;
    Letter letter;
    std::size_t to;
    bool operator<(const Edge& o) const {
      if (from != o.from) return from < o.from;
      if (letter != o.letter) return letter < o.letter;
      return to < o.to;
    }
    bool operator==(const Edge& o) const { return from == o.from && letter == o.letter && to == o.to; }
  };

  static FoldedGraph fold(std::size_t alphabet_size, const std::vector<SignedWord>& generators);

  std::size_t alphabet_size() const noexcept { return k_; }
  std::size_t vertex_count() const noexcept { return vertices_; }
  std::size_t edge_count() const noexcept { return edges_.size(); }
  const std::vector<Edge>& edges() const noexcept { return edges_; }
  std::size_t base() const noexcept { return 0; }

  std::optional<std::size_t> out(std::size_t v, Letter a) const;
  std::optional<std::size_t> in(std::size_t v, Letter a) const;

  bool contains(const SignedWord& g) const;
  bool contains(const Word& w) const { return contains(to_signed(w)); }

  std::size_t rank() const { return edges_.size() + 1 - vertices_; }
  bool is_complete() const;
  // nullopt for infinite index
  std::optional<std::size_t> index() const;
  bool is_rose() const { return vertices_ == 1 && edges_.size() == k_; }

  std::string canonical_form() const;
  std::string to_dot(const Alphabet& alphabet, const std::string& name = "H") const;

  bool operator==(const FoldedGraph& o) const { return k_ == o.k_ && vertices_ == o.vertices_ && edges_ == o.edges_; }

 private:
  std::size_t k_ = 0;
  std::size_t vertices_ = 1;
  std::vector<Edge> edges_;  // sorted
  std::vector<std::size_t> out_;  // vertex * k + letter, or none
  std::vector<std::size_t> in_;
};

FoldedGraph fold(const std::vector<SignedWord>& X, std::size_t alphabet_size);
FoldedGraph fold(const std::vector<Word>& X, std::size_t alphabet_size);

struct RankIndex {
  std::size_t rank = 0;
  std::optional<std::size_t> index;  // nullopt means infinite
};
RankIndex rank_and_index(const FoldedGraph& g);

bool is_basis(const std::vector<SignedWord>& X, std::size_t alphabet_size);
bool is_basis(const std::vector<Word>& X, std::size_t alphabet_size);

struct SaturationVerdict {
  bool passed = true;
  std::size_t checked = 0;
  std::optional<Word> witness;  // a word of s in exactly one of X^*, <X>
};

// X^* ∩ s = <X> ∩ s on every member of s.
SaturationVerdict saturation_check(const CodeSet& X, const FactorSet& s);

}  // namespace wordlab
