#include "wordlab/returns.hpp"

#include <algorithm>
#include <set>

#include "wordlab/code.hpp"
#include "wordlab/error.hpp"

namespace wordlab {

std::optional<std::size_t> return_certificate(const FactorSet& s, const Word& w) {
  if (s.depth() == 0) return std::nullopt;
  for (std::size_t k = w.size(); k + 1 <= s.depth(); ++k) {
    const auto& level = s.words_of_length(k);
    if (level.empty()) return std::nullopt;
    if (std::all_of(level.begin(), level.end(), [&](const Word& u) { return is_factor(w, u); })) return k;
  }
  return std::nullopt;
}

ReturnData return_words(const FactorSet& s, const Word& w) {
  if (!s.contains(w)) throw Error(ErrorKind::not_a_member, "'" + s.alphabet().format(w) + "' is not in the set");
  ReturnData rd;
  rd.base = w;
  const auto n = w.size();
  for (std::size_t len = n + 1; len <= s.depth(); ++len)
    for (const auto& u : s.words_of_length(len)) {
      bool starts = is_prefix(w, u), ends = is_suffix(w, u);
      if (starts && ends) {
        rd.gamma.push_back(slice(u, n, len - n));
        rd.gamma_left.push_back(slice(u, 0, len - n));
      }
    }
  sort_lex(rd.gamma);
  sort_lex(rd.gamma_left);
  std::set<Word> g(rd.gamma.begin(), rd.gamma.end()), gl(rd.gamma_left.begin(), rd.gamma_left.end());
  for (const auto& x : rd.gamma) {
    bool first = true;
    for (std::size_t k = 1; k < x.size() && first; ++k)
      if (g.count(slice(x, 0, k))) first = false;
    if (first) rd.first_returns.push_back(x);
  }
  for (const auto& x : rd.gamma_left) {
    bool first = true;
    for (std::size_t k = 1; k < x.size() && first; ++k)
      if (gl.count(slice(x, x.size() - k, k))) first = false;
    if (first) rd.first_returns_left.push_back(x);
  }
  for (const auto& x : rd.first_returns) rd.max_return_length = std::max(rd.max_return_length, x.size());
  if (s.certified()) {
    if (auto k = return_certificate(s, w)) {
      rd.complete = true;
      rd.certificate_length = *k;
    }
  }
  return rd;
}

Conjugation left_right_conjugation(const ReturnData& rd) {
  if (!rd.complete) throw Error(ErrorKind::incomplete_returns, "return words are not certified complete");
  Conjugation c;
  std::set<Word> lhs, rhs;
  for (const auto& x : rd.first_returns) {
    Word wx = concat(rd.base, x);
    lhs.insert(wx);
    c.pairs.emplace_back(x, slice(wx, 0, x.size()));
  }
  for (const auto& x : rd.first_returns_left) rhs.insert(concat(x, rd.base));
  c.holds = lhs == rhs;
  return c;
}

Morphism default_return_coding(const FactorSet& s, const ReturnData& rd) {
  if (!rd.complete) throw Error(ErrorKind::incomplete_returns, "return words are not certified complete");
  auto images = rd.first_returns;
  sort_shortlex(images);
  return Morphism(Alphabet::fresh("r", images.size()), s.alphabet(), images);
}

DerivedSet derived_set(const FactorSet& s, const Word& w, const Morphism& coding) {
  auto rd = return_words(s, w);
  if (!rd.complete) throw Error(ErrorKind::incomplete_returns, "return words are not certified complete");
  if (!(coding.target() == s.alphabet())) throw Error(ErrorKind::alphabet_mismatch, "coding target differs from set");
  std::set<Word> want(rd.first_returns.begin(), rd.first_returns.end());
  std::set<Word> got(coding.images().begin(), coding.images().end());
  if (want != got || got.size() != coding.images().size())
    throw Error(ErrorKind::invalid_argument, "coding is not a bijection onto the first return words");

  const std::size_t m = (s.depth() - w.size()) / rd.max_return_length;
  std::vector<Word> members;
  // w f(y) ∈ S already forces the suffix w, since each return conjugates w
  std::vector<std::pair<Word, Word>> level{{Word{}, w}};
  while (!level.empty()) {
    std::vector<std::pair<Word, Word>> next;
    for (auto& [y, wy] : level) {
      if (y.size() < m)
        for (std::size_t b = 0; b < coding.source().size(); ++b) {
          Word ext = concat(wy, coding.image(static_cast<Letter>(b)));
          if (s.contains(ext)) next.emplace_back(concat(y, Word{static_cast<Letter>(b)}), std::move(ext));
        }
      members.push_back(std::move(y));
    }
    level = std::move(next);
  }
  DerivedSet d;
  d.coding = coding;
  d.set = FactorSet::from_members(coding.source(), std::move(members), m, s.completeness(), Provenance::derived);
  d.recurrence = is_recurrent_desk(d.set, std::min<std::size_t>(m / 4, 3));
  return d;
}

DerivedSet derived_set(const FactorSet& s, const Word& w) {
  auto rd = return_words(s, w);
  return derived_set(s, w, default_return_coding(s, rd));
}

Word derived_word(const PrefixSource& x, const Word& w, const Morphism& coding, std::size_t n, std::size_t horizon) {
  std::size_t len = std::max<std::size_t>(64, 4 * (w.size() + coding.max_image_length()) * (n + 1));
  while (true) {
    len = std::min(len, horizon);
    Word prefix = x(len);
    auto it = std::search(prefix.begin(), prefix.end(), w.begin(), w.end());
    if (it == prefix.end()) {
      if (len >= horizon) throw Error(ErrorKind::not_found, "word does not occur within the horizon");
      len *= 2;
      continue;
    }
    std::size_t pos = static_cast<std::size_t>(it - prefix.begin()) + w.size();
    Word out;
    while (out.size() < n) {
      bool matched = false, truncated = false;
      for (std::size_t b = 0; b < coding.source().size(); ++b) {
        const auto& img = coding.image(static_cast<Letter>(b));
        if (pos + img.size() > prefix.size()) {
          if (std::equal(prefix.begin() + static_cast<std::ptrdiff_t>(pos), prefix.end(), img.begin()))
            truncated = true;
          continue;
        }
        if (std::equal(img.begin(), img.end(), prefix.begin() + static_cast<std::ptrdiff_t>(pos))) {
          out.push_back(static_cast<Letter>(b));
          pos += img.size();
          matched = true;
          break;
        }
      }
      if (matched) continue;
      if (truncated || pos >= prefix.size()) break;
      throw Error(ErrorKind::invalid_argument, "coding does not parse the tail of the word");
    }
    if (out.size() >= n) return out;
    if (len >= horizon) throw Error(ErrorKind::not_found, "horizon too short for the requested prefix");
    len *= 2;
  }
}

UniformRecurrenceVerdict uniform_recurrence_check(const FactorSet& s, std::size_t up_to) {
  if (!s.certified()) throw Error(ErrorKind::incomplete_set, "uniform recurrence check needs a certified set");
  UniformRecurrenceVerdict v;
  v.up_to = up_to;
  for (std::size_t n = 0; n <= std::min(up_to, s.depth()); ++n)
    for (const auto& w : s.words_of_length(n)) {
      auto k = return_certificate(s, w);
      if (!k) {
        v.passed = false;
        v.witness = w;
        v.reason = "no length K <= " + std::to_string(s.depth() == 0 ? 0 : s.depth() - 1) +
                   " where every member contains the word";
        return v;
      }
      v.max_certificate = std::max(v.max_certificate, *k);
    }
  return v;
}

}  // namespace wordlab
