#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "wordlab/automaton.hpp"
#include "wordlab/code.hpp"
#include "wordlab/factor_set.hpp"
#include "wordlab/morphism.hpp"
#include "wordlab/report.hpp"

namespace wordlab {

/// f : B* -> A* coding an S-maximal bifix code Z = f(B).
struct DecodingJob {
  FactorSet source;
  Morphism coding;
  std::size_t depth = 0;  // 0: as deep as the source allows
};

// T ∩ B^{<=m} with T = f^{-1}(S). Throws not_bifix, not_maximal_code or
// insufficient_depth (when m * max|Z| exceeds the source depth).
FactorSet max_bifix_decode(const DecodingJob& job);

struct MainTheoremBounds {
  std::optional<std::size_t> tree_up_to;        // default depth - 2
  std::optional<std::size_t> recurrence_up_to;  // default 1: letters only
  std::optional<std::size_t> complexity_up_to;  // default depth
};

// Tree condition, recurrence, uniform recurrence and p_n = (|B|-1)n + 1 on
// the decoded set, preceded by the same tree check on the source.
Report verify_main_theorem(const DecodingJob& job, const MainTheoremBounds& bounds = {});

// φ(S) = G, and φ(Γ_S(w) ∪ {1}) = G for each sampled w. `actions` gives
// φ(a) as a permutation for each letter a. Throws insufficient_depth when a
// non-exhaustive truncation is too shallow for Γ_S(w) to reach all of G.
Report verify_group_morphism_props(const FactorSet& s, const std::vector<Permutation>& actions,
                                   const std::vector<Word>& samples);

// d_X(S) = d_Y(T) d_Z(S) with X = f(Y), T = f^{-1}(S). Throws
// decomposition_impossible when X is not in Z^* with every word of Z used.
Report degree_multiplicativity(const FactorSet& s, const CodeSet& X, const CodeSet& Z,
                               const std::optional<Alphabet>& letters = std::nullopt);

}  // namespace wordlab
