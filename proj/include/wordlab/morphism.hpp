#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "wordlab/factor_set.hpp"
#include "wordlab/word.hpp"

namespace wordlab {

/// Nonerasing morphism source* -> target*.
class Morphism {
 public:
  Morphism() = default;
  Morphism(Alphabet source, Alphabet target, std::vector<Word> images);

  // "a->ab; b->a". The source alphabet is taken from the rule order and the
  // result is an endomorphism unless `target` is supplied.
  static Morphism parse(std::string_view rules);
  static Morphism parse(std::string_view rules, const Alphabet& target);
  static Morphism identity(const Alphabet& a);

  const Alphabet& source() const noexcept { return source_; }
  const Alphabet& target() const noexcept { return target_; }
  const Word& image(Letter c) const { return images_.at(c); }
  const std::vector<Word>& images() const noexcept { return images_; }
  bool is_endomorphism() const { return source_ == target_; }

  Word apply(const Word& w) const;
  std::size_t max_image_length() const;
  std::size_t min_image_length() const;

  std::string to_string() const;

  bool operator==(const Morphism& o) const {
    return source_ == o.source_ && target_ == o.target_ && images_ == o.images_;
  }

 private:
  Alphabet source_;
  Alphabet target_;
  std::vector<Word> images_;
};

// (outer ∘ inner)(c) = outer(inner(c))
Morphism compose(const Morphism& outer, const Morphism& inner);

struct PrimitivityVerdict {
  bool primitive = false;
  std::size_t exponent = 0;  // least k with f^k positive
  std::size_t k_max = 0;
};

PrimitivityVerdict is_primitive(const Morphism& m, std::size_t k_max);
// Decided exactly using the Wielandt bound (n-1)^2 + 1.
bool is_primitive(const Morphism& m);

// ψ_a: a -> a, b -> ab
Morphism episturmian_morphism(Letter a, const Alphabet& alphabet);

struct FixedPointSpec {
  Morphism morphism;
  Letter seed = 0;
};

// Validates f(a) = a u with u nonempty; throws non_growing_seed otherwise.
FixedPointSpec make_fixed_point(Morphism m, Letter seed);

Word fixed_point_prefix(const FixedPointSpec& spec, std::size_t n);

/// A list of words whose factors of length <= depth are the factors of the
/// language being described; `certified` means exactly, not just a subset.
struct FactorCover {
  Alphabet alphabet;
  std::vector<Word> words;
  std::size_t depth = 0;
  bool certified = false;

  FactorSet to_factor_set(Provenance provenance) const;
};

// Two-letter factors of f^ω(seed), computed exactly by closure.
std::vector<Word> fixed_point_two_factors(const FixedPointSpec& spec);

// Certified when every letter of the fixed point has unbounded iterates
// (always the case for primitive f); otherwise falls back to prefix scanning.
FactorCover fixed_point_cover(const FixedPointSpec& spec, std::size_t depth);

FactorSet factor_set_of_fixed_point(const FixedPointSpec& spec, std::size_t depth);

// Prefix scanning: expands until the prefix is at least 4*depth long and two
// successive expansions give the same per-length counts. Never certified.
FactorSet factor_set_by_prefix_scan(const FixedPointSpec& spec, std::size_t depth);

// Fac((period)^*) truncated; certified.
FactorSet periodic_factor_set(const Alphabet& alphabet, const Word& period, std::size_t depth);

}  // namespace wordlab
