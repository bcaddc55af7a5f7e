#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <vector>

#include "wordlab/factor_set.hpp"
#include "wordlab/morphism.hpp"
#include "wordlab/tame.hpp"

namespace wordlab {

// Produces a certified cover of the source set to at least the requested
// depth; called repeatedly with growing depths.
using CoverSource = std::function<FactorCover(std::size_t depth)>;

CoverSource cover_source(const FixedPointSpec& spec);
// Uses the words of maximal length of each generated set as the cover, which
// is exact for sets whose members all extend to the right.
CoverSource cover_source(std::function<FactorSet(std::size_t)> generate);

/// How σ_n was obtained during extraction.
struct SadicStepSource {
  Letter seed = 0;                // a^{(n)}
  Word base;                      // u_{n+1} in the source
  std::vector<Word> returns;      // R_S(u_{n+1}); returns[i] is σ_0⋯σ_n(letter i)
  std::size_t source_depth = 0;   // cover depth that certified the returns
  std::size_t certificate = 0;    // every source word of this length contains u_{n+1}
  bool basis = false;
  TameResult decomposition;
};

struct SadicSequence {
  Alphabet alphabet;
  std::vector<Morphism> morphisms;   // σ_0, σ_1, ... all A -> A
  std::vector<SadicStepSource> provenance;  // empty unless extracted
};

SadicSequence periodic_sequence(const std::vector<Morphism>& period, std::size_t length);

struct SadicOptions {
  std::vector<Letter> seeds;  // a^{(n)} = seeds[n mod size]; empty: first letter
  std::size_t initial_depth = 64;
  std::size_t max_depth = std::size_t{1} << 16;
};

// Iterates derived sets: u_{n+1} = u_n σ_0⋯σ_{n-1}(a^{(n)}), σ_n codes the
// first returns to u_{n+1} in the previous returns, letters bound in
// length-then-lex order of the coded words. Throws depth_exhausted when the
// cover cannot be made deep enough within max_depth.
SadicSequence sadic_extract(const CoverSource& source, const Alphabet& alphabet, std::size_t steps,
                            const SadicOptions& options = {});

struct SadicReplay {
  FactorSet set;             // Fac(σ_0⋯σ_n(A^*)) ∩ A^{<=depth}
  std::size_t stable_from = 0;  // least k <= n with the same truncation from k to n
};

SadicReplay sadic_replay(const SadicSequence& seq, std::size_t n, std::size_t depth);

struct SequencePrimitivity {
  bool found = false;
  std::size_t s = 0;  // least s with every letter in every σ_r⋯σ_{s-1}(a)
  std::size_t horizon = 0;
};

SequencePrimitivity primitivity_of_sequence(const SadicSequence& seq, std::size_t r, std::size_t horizon);

}  // namespace wordlab
