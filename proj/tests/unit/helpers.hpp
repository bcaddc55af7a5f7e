#pragma once

#include <set>
#include <string>
#include <vector>

#include "wordlab/factor_set.hpp"
#include "wordlab/word.hpp"

namespace testing_util {

inline std::set<std::string> strs(const wordlab::Alphabet& a, const std::vector<wordlab::Word>& ws) {
  std::set<std::string> out;
  for (const auto& w : ws) out.insert(a.format(w));
  return out;
}

inline std::set<std::string> level(const wordlab::FactorSet& s, std::size_t n) {
  return strs(s.alphabet(), s.words_of_length(n));
}

// "ab ba" -> {"ab", "ba"}
inline std::set<std::string> set_of(const std::string& text) {
  std::set<std::string> out;
  std::string cur;
  for (char c : text + " ") {
    if (c == ' ') {
      if (!cur.empty()) out.insert(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  return out;
}

}  // namespace testing_util
