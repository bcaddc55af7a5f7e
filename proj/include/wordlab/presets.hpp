#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "wordlab/factor_set.hpp"
#include "wordlab/iet.hpp"
#include "wordlab/morphism.hpp"

namespace wordlab {

enum class PresetKind { morphic, iet, periodic, finite };
const char* to_string(PresetKind k) noexcept;

/// Named source of a factorial set.
struct Preset {
  std::string name;
  std::string description;
  PresetKind kind = PresetKind::morphic;
  Alphabet alphabet;
  std::optional<FixedPointSpec> fixed_point;
  std::optional<IntervalExchange> iet;
  Word period;
  std::vector<Word> words;
  bool tree = false;  // expected to be a uniformly recurrent tree set

  FactorSet generate(std::size_t depth) const;
};

const std::vector<Preset>& presets();
// Throws not_found.
const Preset& preset(std::string_view name);

}  // namespace wordlab
