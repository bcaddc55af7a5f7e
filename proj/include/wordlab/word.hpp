#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace wordlab {

using Letter = std::uint8_t;
// Words are letter indices; the alphabet is carried by whichever container
// owns them (FactorSet, CodeSet, Morphism ...).
using Word = std::vector<Letter>;

struct WordHash {
  std::size_t operator()(const Word& w) const noexcept {
    std::uint64_t h = 1469598103934665603ull;
    for (Letter c : w) {
      h ^= static_cast<std::uint64_t>(c) + 1;
      h *= 1099511628211ull;
    }
    return static_cast<std::size_t>(h ^ (w.size() << 1));
  }
};

class Alphabet {
 public:
  Alphabet() = default;
  explicit Alphabet(std::vector<std::string> symbols, std::string name = "");

  // One letter per character, e.g. letters("abc").
  static Alphabet letters(std::string_view chars, std::string name = "");
  // prefix0, prefix1, ..., prefix{n-1}
  static Alphabet fresh(std::string_view prefix, std::size_t n, std::string name = "");

  std::size_t size() const noexcept { return symbols_.size(); }
  const std::string& symbol(Letter c) const;
  const std::vector<std::string>& symbols() const noexcept { return symbols_; }
  const std::string& name() const noexcept { return name_; }
  std::optional<Letter> index_of(std::string_view symbol) const;
  Letter letter(std::string_view symbol) const;  // throws parse error

  // Greedy longest-match parse; '.', whitespace are ignored separators and
  // "", "1", "eps" denote the empty word.
  Word parse(std::string_view text) const;
  // Comma separated list of words.
  std::vector<Word> parse_list(std::string_view text) const;

  std::string format(const Word& w) const;
  std::vector<std::string> format_all(const std::vector<Word>& ws) const;
  // As format, but the empty word is shown as "1".
  std::string show(const Word& w) const { return w.empty() ? "1" : format(w); }

  bool single_char() const noexcept { return single_char_; }

  bool operator==(const Alphabet& other) const { return symbols_ == other.symbols_; }
  bool operator!=(const Alphabet& other) const { return !(*this == other); }

 private:
  std::vector<std::string> symbols_;
  std::string name_;
  bool single_char_ = true;
};

bool is_prefix(const Word& u, const Word& w);
bool is_suffix(const Word& u, const Word& w);
bool is_factor(const Word& u, const Word& w);
Word concat(const Word& u, const Word& v);
Word slice(const Word& w, std::size_t pos, std::size_t len);

// length first, then lexicographic by letter index
bool shortlex_less(const Word& u, const Word& v);
void sort_shortlex(std::vector<Word>& ws);
void sort_lex(std::vector<Word>& ws);

// All factors of w of the given length, deduplicated and sorted.
std::vector<Word> factors_of(const Word& w, std::size_t length);

}  // namespace wordlab
