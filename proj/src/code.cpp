#include "wordlab/code.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <unordered_set>

#include "wordlab/error.hpp"
#include "wordlab/extension.hpp"

namespace wordlab {

CodeSet::CodeSet(Alphabet alphabet, std::vector<Word> words) : alphabet_(std::move(alphabet)), words_(std::move(words)) {
  for (const auto& w : words_) {
    if (w.empty()) throw Error(ErrorKind::invalid_argument, "codes cannot contain the empty word");
    for (Letter c : w)
      if (c >= alphabet_.size()) throw Error(ErrorKind::alphabet_mismatch, "letter outside alphabet");
  }
  sort_lex(words_);
}

CodeSet CodeSet::parse(const Alphabet& alphabet, std::string_view list) {
  return CodeSet(alphabet, alphabet.parse_list(list));
}

std::size_t CodeSet::max_length() const noexcept {
  std::size_t m = 0;
  for (const auto& w : words_) m = std::max(m, w.size());
  return m;
}

bool CodeSet::contains(const Word& w) const { return std::binary_search(words_.begin(), words_.end(), w); }

bool is_prefix_code(const std::vector<Word>& X) {
  for (std::size_t i = 0; i < X.size(); ++i)
    for (std::size_t j = 0; j < X.size(); ++j)
      if (i != j && is_prefix(X[i], X[j])) return false;
  return true;
}

bool is_suffix_code(const std::vector<Word>& X) {
  for (std::size_t i = 0; i < X.size(); ++i)
    for (std::size_t j = 0; j < X.size(); ++j)
      if (i != j && is_suffix(X[i], X[j])) return false;
  return true;
}

bool is_bifix_code(const std::vector<Word>& X) { return is_prefix_code(X) && is_suffix_code(X); }

bool is_code(const std::vector<Word>& X) {
  std::set<Word> xs(X.begin(), X.end());
  if (xs.size() != X.size() || xs.count(Word{})) return false;
  // dangling suffixes
  std::set<Word> current;
  for (const auto& x : xs)
    for (const auto& y : xs)
      if (x != y && is_prefix(x, y)) current.insert(Word(y.begin() + static_cast<std::ptrdiff_t>(x.size()), y.end()));
  std::set<Word> all_seen;
  while (!current.empty()) {
    if (current.count(Word{})) return false;
    std::set<Word> next;
    for (const auto& u : current) {
      if (!all_seen.insert(u).second) continue;
      for (const auto& x : xs) {
        if (is_prefix(x, u)) next.insert(Word(u.begin() + static_cast<std::ptrdiff_t>(x.size()), u.end()));
        if (is_prefix(u, x)) next.insert(Word(x.begin() + static_cast<std::ptrdiff_t>(u.size()), x.end()));
      }
    }
    for (const auto& u : all_seen) next.erase(u);
    current = std::move(next);
  }
  return true;
}

std::optional<std::vector<std::size_t>> factorize(const std::vector<Word>& X, const Word& w) {
  const std::size_t n = w.size();
  // back[i] = index of the word ending a factorization of w[0, i)
  std::vector<long> back(n + 1, -1);
  std::vector<char> ok(n + 1, 0);
  ok[0] = 1;
  for (std::size_t i = 0; i < n; ++i) {
    if (!ok[i]) continue;
    for (std::size_t k = 0; k < X.size(); ++k) {
      const auto& x = X[k];
      if (x.empty() || i + x.size() > n || ok[i + x.size()]) continue;
      if (std::equal(x.begin(), x.end(), w.begin() + static_cast<std::ptrdiff_t>(i))) {
        ok[i + x.size()] = 1;
        back[i + x.size()] = static_cast<long>(k);
      }
    }
  }
  if (!ok[n]) return std::nullopt;
  std::vector<std::size_t> out;
  for (std::size_t i = n; i > 0;) {
    auto k = static_cast<std::size_t>(back[i]);
    out.push_back(k);
    i -= X[k].size();
  }
  std::reverse(out.begin(), out.end());
  return out;
}

bool in_star(const std::vector<Word>& X, const Word& w) { return factorize(X, w).has_value(); }

namespace {

bool has_prefix_in(const std::vector<Word>& X, const Word& w, std::size_t from) {
  for (const auto& x : X)
    if (x.size() <= w.size() - from && std::equal(x.begin(), x.end(), w.begin() + static_cast<std::ptrdiff_t>(from)))
      return true;
  return false;
}

bool has_suffix_in(const std::vector<Word>& X, const Word& w, std::size_t len) {
  // suffix of w[0, len)
  for (const auto& x : X)
    if (x.size() <= len && std::equal(x.rbegin(), x.rend(), w.rbegin() + static_cast<std::ptrdiff_t>(w.size() - len)))
      return true;
  return false;
}

void require_bifix(const std::vector<Word>& X) {
  if (!is_bifix_code(X)) throw Error(ErrorKind::not_bifix, "the code is not bifix");
}

}  // namespace

std::vector<Parse> parses(const CodeSet& X, const Word& w) {
  require_bifix(X.words());
  std::vector<Parse> out;
  const auto n = w.size();
  for (std::size_t i = 0; i <= n; ++i) {
    if (has_suffix_in(X.words(), w, i)) continue;
    for (std::size_t j = i; j <= n; ++j) {
      if (has_prefix_in(X.words(), w, j)) continue;
      Word x = slice(w, i, j - i);
      if (!in_star(X.words(), x)) continue;
      out.push_back(Parse{slice(w, 0, i), std::move(x), slice(w, j, n - j)});
    }
  }
  return out;
}

std::size_t parse_count_by_suffixes(const std::vector<Word>& X, const Word& w) {
  std::size_t count = 0;
  for (std::size_t i = 0; i <= w.size(); ++i)
    if (!has_prefix_in(X, w, i)) ++count;
  return count;
}

std::size_t parse_count_by_prefixes(const std::vector<Word>& X, const Word& w) {
  std::size_t count = 0;
  for (std::size_t len = 0; len <= w.size(); ++len)
    if (!has_suffix_in(X, w, len)) ++count;
  return count;
}

std::size_t parse_count(const CodeSet& X, const Word& w) {
  require_bifix(X.words());
  return parse_count_by_suffixes(X.words(), w);
}

namespace {

template <class Comparable>
bool maximal_by(const std::vector<Word>& X, const FactorSet& s, Comparable comparable) {
  if (!s.certified()) throw Error(ErrorKind::incomplete_set, "maximality needs a certified factor set");
  std::size_t m = 0;
  for (const auto& x : X) m = std::max(m, x.size());
  if (m > s.depth() && !s.exhaustive())
    throw Error(ErrorKind::insufficient_depth,
                "maximality test needs depth " + std::to_string(m) + ", set has " + std::to_string(s.depth()));
  for (const auto& x : X)
    if (!s.contains(x)) return false;
  for (std::size_t n = 0; n <= std::min(m, s.depth()); ++n)
    for (const auto& w : s.words_of_length(n)) {
      bool found = false;
      for (const auto& x : X)
        if (comparable(x, w)) {
          found = true;
          break;
        }
      if (!found) return false;
    }
  return true;
}

}  // namespace

bool is_s_maximal_prefix(const std::vector<Word>& X, const FactorSet& s) {
  if (!is_prefix_code(X)) throw Error(ErrorKind::not_prefix, "not a prefix code");
  return maximal_by(X, s, [](const Word& x, const Word& w) { return is_prefix(x, w) || is_prefix(w, x); });
}

bool is_s_maximal_suffix(const std::vector<Word>& X, const FactorSet& s) {
  if (!is_suffix_code(X)) throw Error(ErrorKind::not_a_code, "not a suffix code");
  return maximal_by(X, s, [](const Word& x, const Word& w) { return is_suffix(x, w) || is_suffix(w, x); });
}

bool is_s_maximal_bifix(const std::vector<Word>& X, const FactorSet& s) {
  require_bifix(X);
  std::size_t m = 0;
  for (const auto& x : X) m = std::max(m, x.size());
  std::size_t probe = std::min(m, s.depth() / 4);
  if (s.exhaustive()) probe = std::min(m, s.depth());
  if (is_recurrent_desk(s, probe).passed) return is_s_maximal_prefix(X, s);
  // bounded direct search: is there y in s \ X keeping X ∪ {y} bifix?
  for (const auto& x : X)
    if (!s.contains(x)) return false;
  for (const auto& y : s.words()) {
    if (y.empty() || std::binary_search(X.begin(), X.end(), y)) continue;
    bool clash = false;
    for (const auto& x : X)
      if (is_prefix(x, y) || is_prefix(y, x) || is_suffix(x, y) || is_suffix(y, x)) {
        clash = true;
        break;
      }
    if (!clash) return false;
  }
  return true;
}

namespace {

void require_degree_inputs(const CodeSet& X, const FactorSet& s) {
  require_bifix(X.words());
  for (const auto& x : X.words())
    if (!s.contains(x)) throw Error(ErrorKind::not_a_member, "'" + X.alphabet().format(x) + "' is not in the set");
  if (!s.exhaustive() && s.depth() <= 3 * X.max_length())
    throw Error(ErrorKind::insufficient_depth, "degree needs depth above " + std::to_string(3 * X.max_length()));
  if (!is_s_maximal_prefix(X.words(), s)) throw Error(ErrorKind::not_maximal_code, "the code is not S-maximal");
}

}  // namespace

std::size_t s_degree(const CodeSet& X, const FactorSet& s) {
  require_degree_inputs(X, s);
  std::size_t d = 0;
  for (const auto& w : s.words()) d = std::max(d, parse_count_by_suffixes(X.words(), w));
  return d;
}

std::vector<Word> internal_factors(const CodeSet& X, const FactorSet& s) {
  auto d = s_degree(X, s);
  std::vector<Word> out;
  for (std::size_t n = 0; n <= std::min(X.max_length(), s.depth()); ++n)
    for (const auto& w : s.words_of_length(n))
      if (parse_count_by_suffixes(X.words(), w) < d) out.push_back(w);
  return out;
}

CodeSet kernel(const CodeSet& X, const FactorSet& s) {
  auto inner = internal_factors(X, s);
  std::vector<Word> k;
  for (const auto& x : X.words())
    if (std::find(inner.begin(), inner.end(), x) != inner.end()) k.push_back(x);
  return CodeSet(X.alphabet(), std::move(k));
}

FactorSet inverse_image(const FactorSet& s, const Morphism& f) {
  if (!(f.target() == s.alphabet())) throw Error(ErrorKind::alphabet_mismatch, "morphism target differs from set alphabet");
  const std::size_t maxz = f.max_image_length();
  const std::size_t m = s.exhaustive() ? s.depth() : s.depth() / maxz;
  std::vector<Word> members;
  std::vector<std::pair<Word, Word>> level{{Word{}, Word{}}};  // (w, f(w))
  std::size_t reached = 0;
  while (!level.empty()) {
    std::vector<std::pair<Word, Word>> next;
    for (auto& [w, fw] : level) {
      reached = std::max(reached, w.size());
      if (w.size() == m) {
        members.push_back(std::move(w));
        continue;
      }
      for (std::size_t b = 0; b < f.source().size(); ++b) {
        Word fwb = concat(fw, f.image(static_cast<Letter>(b)));
        if (!s.contains(fwb)) continue;
        next.emplace_back(concat(w, Word{static_cast<Letter>(b)}), std::move(fwb));
      }
      members.push_back(std::move(w));
    }
    level = std::move(next);
  }
  return FactorSet::from_members(f.source(), std::move(members), s.exhaustive() ? reached : m, s.completeness(),
                                 Provenance::decoded, s.exhaustive());
}

CodeSet compose_codes(const CodeSet& Y, const Morphism& f) {
  if (!(Y.alphabet() == f.source())) throw Error(ErrorKind::alphabet_mismatch, "Y is not over the source of f");
  std::vector<char> used(f.source().size(), 0);
  for (const auto& y : Y.words())
    for (Letter c : y) used[c] = 1;
  if (std::find(used.begin(), used.end(), 0) != used.end())
    throw Error(ErrorKind::alphabet_mismatch, "some letter of the coding alphabet does not occur in Y");
  std::set<Word> images(f.images().begin(), f.images().end());
  if (images.size() != f.images().size()) throw Error(ErrorKind::invalid_argument, "coding morphism is not injective");
  std::vector<Word> xs;
  for (const auto& y : Y.words()) xs.push_back(f.apply(y));
  CodeSet X(f.target(), xs);
  if (X.size() != Y.size()) throw Error(ErrorKind::not_a_code, "images of Y collide");
  return X;
}

Decomposition decompose_over(const CodeSet& X, const CodeSet& Z, const std::optional<Alphabet>& letters) {
  Decomposition d;
  if (!(X.alphabet() == Z.alphabet())) throw Error(ErrorKind::alphabet_mismatch, "X and Z use different alphabets");
  if (!is_code(Z.words())) {
    d.reason = "Z is not a code";
    return d;
  }
  std::vector<char> used(Z.size(), 0);
  std::vector<Word> ys;
  for (const auto& x : X.words()) {
    auto fac = factorize(Z.words(), x);
    if (!fac) {
      d.reason = "'" + X.alphabet().format(x) + "' is not in Z*";
      return d;
    }
    Word y;
    for (auto k : *fac) {
      used[k] = 1;
      y.push_back(static_cast<Letter>(k));
    }
    ys.push_back(std::move(y));
  }
  for (std::size_t k = 0; k < Z.size(); ++k)
    if (!used[k]) {
      d.reason = "alp_Z(X) misses '" + Z.alphabet().format(Z.words()[k]) + "'";
      return d;
    }
  Alphabet b = letters ? *letters : Alphabet::fresh("z", Z.size());
  if (b.size() != Z.size()) throw Error(ErrorKind::invalid_argument, "need one letter per word of Z");
  d.possible = true;
  d.Y = CodeSet(b, std::move(ys));
  d.f = Morphism(b, Z.alphabet(), Z.words());
  return d;
}

Report maximality_transfer_check(const CodeSet& Y, const Morphism& f, const FactorSet& s) {
  Report r;
  r.title = "maximality transfer";
  CodeSet Z(f.target(), f.images());
  if (!is_prefix_code(Y.words()) || !is_prefix_code(Z.words()))
    throw Error(ErrorKind::not_prefix, "transfer statements concern prefix codes");
  auto X = compose_codes(Y, f);
  auto T = inverse_image(s, f);
  if (!T.exhaustive() && T.depth() < Y.max_length())
    throw Error(ErrorKind::insufficient_depth, "decoded set too shallow for the maximality of Y");

  bool y_max = is_s_maximal_prefix(Y.words(), T);
  bool z_max = is_s_maximal_prefix(Z.words(), s);
  bool x_max = is_s_maximal_prefix(X.words(), s);
  // f(T)-maximality of X over the available part of f(T)
  bool x_ft = true;
  for (const auto& t : T.words()) {
    auto w = f.apply(t);
    bool found = false;
    for (const auto& x : X.words())
      if (is_prefix(x, w) || is_prefix(w, x)) {
        found = true;
        break;
      }
    if (!found) {
      x_ft = false;
      break;
    }
  }
  std::size_t probe = s.exhaustive() ? std::min(s.depth(), X.max_length() + Z.max_length())
                                     : std::min(s.depth() / 4, X.max_length() + Z.max_length());
  auto rec = is_recurrent_desk(s, probe);

  r.note("X", "{" + [&] {
    std::string out;
    for (const auto& w : X.format()) out += (out.empty() ? "" : ",") + w;
    return out;
  }() + "}");
  r.note("Y T-maximal prefix", y_max ? "true" : "false");
  r.note("Z S-maximal prefix", z_max ? "true" : "false");
  r.note("X S-maximal prefix", x_max ? "true" : "false");
  r.note("X f(T)-maximal prefix", x_ft ? "true" : "false");
  r.note("S recurrent (desk)", rec.passed ? "true" : "false");
  r.note("converse holds on instance", (!(y_max && z_max) || x_max) ? "true" : "false");

  r.add("Y T-maximal implies X f(T)-maximal", !y_max || x_ft);
  r.add("X S-maximal implies Y T-maximal and Z S-maximal", !x_max || (y_max && z_max));
  r.add("converse for recurrent S", !(rec.passed && y_max && z_max) || x_max,
        rec.passed ? "S passes the desk recurrence check" : "S is not recurrent; converse not claimed");
  return r;
}

}  // namespace wordlab
