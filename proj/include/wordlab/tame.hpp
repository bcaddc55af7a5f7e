#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "wordlab/free_group.hpp"
#include "wordlab/morphism.hpp"

namespace wordlab {

enum class StepKind { alpha, alpha_tilde, permutation };
const char* to_string(StepKind k) noexcept;

struct TameStep {
  StepKind kind = StepKind::alpha;
  Letter a = 0;
  Letter b = 0;
  std::vector<Letter> map;  // permutation steps: letter i -> map[i]

  bool operator==(const TameStep& o) const { return kind == o.kind && a == o.a && b == o.b && map == o.map; }
};

// α_{a,b}: a -> ab; α~_{a,b}: a -> ba; other letters fixed.
Morphism elementary(StepKind kind, Letter a, Letter b, const Alphabet& alphabet);
Morphism permutation_morphism(const std::vector<Letter>& map, const Alphabet& alphabet);
Morphism step_morphism(const TameStep& step, const Alphabet& alphabet);
// Images of the letters under the inverse automorphism, as reduced words.
std::vector<SignedWord> inverse_images(const TameStep& step, const Alphabet& alphabet);

// Applies the steps in order to the tuple (a_0, ..., a_{k-1}); the result is
// the image of each letter under step_m ∘ ... ∘ step_1.
std::vector<Word> replay(const std::vector<TameStep>& steps, const Alphabet& alphabet);
Morphism replay_morphism(const std::vector<TameStep>& steps, const Alphabet& alphabet);

enum class TameVerdict { tame, not_tame, undetermined };
const char* to_string(TameVerdict v) noexcept;

struct TameResult {
  TameVerdict verdict = TameVerdict::undetermined;
  std::vector<TameStep> steps;  // when tame
  std::vector<Word> assignment;  // letter i is sent to assignment[i]
  std::vector<Word> stuck;       // bifix set reached when not tame
  bool replay_verified = false;
};

// Greedy reduction of a positive basis to the alphabet. Throws not_a_basis.
TameResult tame_decompose(const std::vector<Word>& X, const Alphabet& alphabet);

}  // namespace wordlab
