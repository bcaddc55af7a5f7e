#include "wordlab/word.hpp"

#include <algorithm>
#include <set>

#include "wordlab/error.hpp"

namespace wordlab {

Alphabet::Alphabet(std::vector<std::string> symbols, std::string name)
    : symbols_(std::move(symbols)), name_(std::move(name)) {
  if (symbols_.empty()) throw Error(ErrorKind::invalid_argument, "alphabet must be nonempty");
  if (symbols_.size() > 255) throw Error(ErrorKind::invalid_argument, "alphabet too large");
  std::set<std::string> seen;
  for (const auto& s : symbols_) {
    if (s.empty()) throw Error(ErrorKind::invalid_argument, "empty letter symbol");
    if (s.find_first_of(" \t\n.,;") != std::string::npos || s == "1" || s == "eps")
      throw Error(ErrorKind::invalid_argument, "reserved character in symbol '" + s + "'");
    if (!seen.insert(s).second)
      throw Error(ErrorKind::invalid_argument, "duplicate letter '" + s + "'");
    if (s.size() != 1) single_char_ = false;
  }
}

Alphabet Alphabet::letters(std::string_view chars, std::string name) {
  std::vector<std::string> syms;
  for (char c : chars) syms.emplace_back(1, c);
  return Alphabet(std::move(syms), std::move(name));
}

Alphabet Alphabet::fresh(std::string_view prefix, std::size_t n, std::string name) {
  std::vector<std::string> syms;
  for (std::size_t i = 0; i < n; ++i) syms.push_back(std::string(prefix) + std::to_string(i));
  return Alphabet(std::move(syms), std::move(name));
}

const std::string& Alphabet::symbol(Letter c) const {
  if (c >= symbols_.size()) throw Error(ErrorKind::alphabet_mismatch, "letter index out of range");
  return symbols_[c];
}

std::optional<Letter> Alphabet::index_of(std::string_view symbol) const {
  for (std::size_t i = 0; i < symbols_.size(); ++i)
    if (symbols_[i] == symbol) return static_cast<Letter>(i);
  return std::nullopt;
}

Letter Alphabet::letter(std::string_view symbol) const {
  auto i = index_of(symbol);
  if (!i) throw Error(ErrorKind::parse, "unknown letter '" + std::string(symbol) + "'");
  return *i;
}

Word Alphabet::parse(std::string_view text) const {
  auto trimmed = text;
  while (!trimmed.empty() && (trimmed.front() == ' ' || trimmed.front() == '\t')) trimmed.remove_prefix(1);
  while (!trimmed.empty() && (trimmed.back() == ' ' || trimmed.back() == '\t')) trimmed.remove_suffix(1);
  if (trimmed.empty() || trimmed == "1" || trimmed == "eps") return {};
  Word w;
  std::size_t i = 0;
  while (i < trimmed.size()) {
    char ch = trimmed[i];
    if (ch == '.' || ch == ' ' || ch == '\t') {
      ++i;
      continue;
    }
    std::size_t best_len = 0;
    Letter best = 0;
    for (std::size_t k = 0; k < symbols_.size(); ++k) {
      const auto& s = symbols_[k];
      if (s.size() > best_len && trimmed.compare(i, s.size(), s) == 0) {
        best_len = s.size();
        best = static_cast<Letter>(k);
      }
    }
    if (best_len == 0)
      throw Error(ErrorKind::parse, "cannot read '" + std::string(trimmed) + "' at offset " + std::to_string(i));
    w.push_back(best);
    i += best_len;
  }
  return w;
}

std::vector<Word> Alphabet::parse_list(std::string_view text) const {
  std::vector<Word> out;
  if (text.find_first_not_of(" \t\n") == std::string_view::npos) return out;
  std::size_t start = 0;
  while (true) {
    auto end = text.find(',', start);
    if (end == std::string_view::npos) {
      out.push_back(parse(text.substr(start)));
      break;
    }
    out.push_back(parse(text.substr(start, end - start)));
    start = end + 1;
  }
  return out;
}

std::string Alphabet::format(const Word& w) const {
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (!single_char_ && i > 0) out += '.';
    out += symbol(w[i]);
  }
  return out;
}

std::vector<std::string> Alphabet::format_all(const std::vector<Word>& ws) const {
  std::vector<std::string> out;
  out.reserve(ws.size());
  for (const auto& w : ws) out.push_back(format(w));
  return out;
}

bool is_prefix(const Word& u, const Word& w) {
  return u.size() <= w.size() && std::equal(u.begin(), u.end(), w.begin());
}

bool is_suffix(const Word& u, const Word& w) {
  return u.size() <= w.size() && std::equal(u.rbegin(), u.rend(), w.rbegin());
}

bool is_factor(const Word& u, const Word& w) {
  if (u.size() > w.size()) return false;
  return std::search(w.begin(), w.end(), u.begin(), u.end()) != w.end();
}

Word concat(const Word& u, const Word& v) {
  Word r;
  r.reserve(u.size() + v.size());
  r.insert(r.end(), u.begin(), u.end());
  r.insert(r.end(), v.begin(), v.end());
  return r;
}

Word slice(const Word& w, std::size_t pos, std::size_t len) {
  return Word(w.begin() + static_cast<std::ptrdiff_t>(pos),
              w.begin() + static_cast<std::ptrdiff_t>(pos + len));
}

bool shortlex_less(const Word& u, const Word& v) {
  if (u.size() != v.size()) return u.size() < v.size();
  return u < v;
}

void sort_shortlex(std::vector<Word>& ws) {
  std::sort(ws.begin(), ws.end(), shortlex_less);
  ws.erase(std::unique(ws.begin(), ws.end()), ws.end());
}

void sort_lex(std::vector<Word>& ws) {
  std::sort(ws.begin(), ws.end());
  ws.erase(std::unique(ws.begin(), ws.end()), ws.end());
}

std::vector<Word> factors_of(const Word& w, std::size_t length) {
  std::vector<Word> out;
  if (length > w.size()) return out;
  for (std::size_t i = 0; i + length <= w.size(); ++i) out.push_back(slice(w, i, length));
  sort_lex(out);
  return out;
}

}  // namespace wordlab
