#pragma once

#include <cstddef>
#include <cstdint>
#include <string>

namespace props {

struct Outcome {
  std::string name;
  std::size_t cases = 0;
  std::size_t failures = 0;
  std::string first_failure;

  bool passed() const { return cases > 0 && failures == 0; }
  std::string summary() const;
};

// WORDLAB_SEED from the environment, or a fixed default.
std::uint64_t default_seed();

Outcome factoriality(std::uint64_t seed, std::size_t cases);
Outcome parse_count_agreement(std::uint64_t seed, std::size_t cases);
Outcome return_conjugation(std::uint64_t seed, std::size_t cases);
Outcome saturation(std::uint64_t seed, std::size_t cases);
Outcome fold_idempotence(std::uint64_t seed, std::size_t cases);
// Stabilizers of random transitive actions: index n, rank n(k-1)+1.
Outcome nielsen_schreier(std::uint64_t seed, std::size_t cases);

}  // namespace props
