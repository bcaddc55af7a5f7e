#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "wordlab/factor_set.hpp"
#include "wordlab/quadratic.hpp"
#include "wordlab/word.hpp"

namespace wordlab {

// [lo, hi); empty when lo >= hi
struct SemiInterval {
  QuadraticNumber lo;
  QuadraticNumber hi;

  bool empty() const { return !(lo < hi); }
  bool contains(const QuadraticNumber& z) const { return lo <= z && z < hi; }
  QuadraticNumber length() const { return empty() ? QuadraticNumber(0) : hi - lo; }
};

SemiInterval intersect(const SemiInterval& x, const SemiInterval& y);

/// Interval exchange over exact quadratic numbers. The alphabet order is the
/// top order; `bottom_order` lists the letters in the bottom order.
class IntervalExchange {
 public:
  IntervalExchange(Alphabet alphabet, std::vector<QuadraticNumber> lengths, std::vector<Letter> bottom_order,
                   bool assume_minimal = false);

  // "d=5; a=3/2-1/2*sqrt(5); b=-1+1*sqrt(5); c=...; order=b,c,a; minimal"
  static IntervalExchange parse(std::string_view text);
  // R(z) = z + alpha mod 1 as the 2-interval exchange on {a,b}
  static IntervalExchange rotation(const QuadraticNumber& alpha, bool assume_minimal);

  const Alphabet& alphabet() const noexcept { return alphabet_; }
  std::size_t size() const noexcept { return alphabet_.size(); }
  const std::vector<Letter>& bottom_order() const noexcept { return bottom_; }
  bool minimal_asserted() const noexcept { return minimal_; }

  const QuadraticNumber& length(Letter a) const { return lengths_.at(a); }
  const SemiInterval& top(Letter a) const { return top_.at(a); }        // I_a = [γ_a, μ_a)
  const SemiInterval& bottom(Letter a) const { return bottom_int_.at(a); }  // J_a = [δ_a, ν_a)
  const QuadraticNumber& translation(Letter a) const { return shift_.at(a); }  // α_a = ν_a - μ_a

  Letter letter_at(const QuadraticNumber& z) const;
  QuadraticNumber apply(const QuadraticNumber& z) const;
  QuadraticNumber apply_inverse(const QuadraticNumber& z) const;

  // non-zero separation points μ_1 .. μ_{s-1}
  std::vector<QuadraticNumber> separation_points() const;

  std::string to_string() const;

 private:
  Alphabet alphabet_;
  std::vector<QuadraticNumber> lengths_;
  std::vector<Letter> bottom_;
  bool minimal_;
  std::vector<SemiInterval> top_;
  std::vector<SemiInterval> bottom_int_;
  std::vector<QuadraticNumber> shift_;
};

Word natural_coding(const IntervalExchange& t, const QuadraticNumber& z, std::size_t m);

// I_w, computed right to left: I_{aw} = I_a ∩ T^{-1}(I_w).
SemiInterval word_interval(const IntervalExchange& t, const Word& w);

// Words with nonempty interval, by breadth-first left extension. Certified
// only when minimality was asserted at construction.
FactorSet factor_set(const IntervalExchange& t, std::size_t depth);

struct OrbitCollision {
  std::size_t point_a = 0;  // index into separation_points()
  std::size_t step_a = 0;
  std::size_t point_b = 0;
  std::size_t step_b = 0;
  QuadraticNumber value;
};

struct RegularityEvidence {
  std::size_t iterations = 0;
  std::optional<OrbitCollision> collision;
  bool no_collision() const { return !collision.has_value(); }
};

RegularityEvidence regularity_evidence(const IntervalExchange& t, std::size_t n_iterations);

}  // namespace wordlab
