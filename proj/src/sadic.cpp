#include "wordlab/sadic.hpp"

#include <algorithm>
#include <set>
#include <string>
#include <unordered_map>

#include "wordlab/error.hpp"
#include "wordlab/free_group.hpp"

namespace wordlab {

CoverSource cover_source(const FixedPointSpec& spec) {
  return [spec](std::size_t depth) { return fixed_point_cover(spec, depth); };
}

CoverSource cover_source(std::function<FactorSet(std::size_t)> generate) {
  return [generate = std::move(generate)](std::size_t depth) {
    auto s = generate(depth);
    FactorCover cover;
    cover.alphabet = s.alphabet();
    cover.depth = s.depth();
    cover.words = s.words_of_length(s.depth());
    cover.certified = s.certified();
    return cover;
  };
}

SadicSequence periodic_sequence(const std::vector<Morphism>& period, std::size_t length) {
  if (period.empty()) throw Error(ErrorKind::invalid_argument, "empty period");
  SadicSequence seq;
  seq.alphabet = period.front().source();
  for (const auto& m : period)
    if (!(m.source() == seq.alphabet) || !(m.target() == seq.alphabet))
      throw Error(ErrorKind::alphabet_mismatch, "periodic sequence needs endomorphisms of one alphabet");
  for (std::size_t i = 0; i < length; ++i) seq.morphisms.push_back(period[i % period.size()]);
  return seq;
}

namespace {

std::vector<std::size_t> occurrences(const Word& text, const Word& u) {
  std::vector<std::size_t> out;
  if (u.size() > text.size()) return out;
  auto it = text.begin();
  while (true) {
    it = std::search(it, text.end(), u.begin(), u.end());
    if (it == text.end()) break;
    out.push_back(static_cast<std::size_t>(it - text.begin()));
    ++it;
  }
  return out;
}

struct CoverReturns {
  std::vector<Word> returns;
  std::size_t certificate = 0;
};

// First returns to u read off a certified cover, provided every window of
// length K <= depth-1 of every cover word contains u.
std::optional<CoverReturns> returns_on_cover(const FactorCover& cover, const Word& u) {
  std::size_t longest_free = 0;
  std::set<Word> found;
  for (const auto& c : cover.words) {
    auto occ = occurrences(c, u);
    if (occ.empty()) {
      longest_free = std::max(longest_free, c.size());
      continue;
    }
    longest_free = std::max(longest_free, occ.front() + u.size() - 1);
    longest_free = std::max(longest_free, c.size() - occ.back() - 1);
    for (std::size_t i = 0; i + 1 < occ.size(); ++i) {
      longest_free = std::max(longest_free, occ[i + 1] - occ[i] + u.size() - 2);
      found.insert(slice(c, occ[i] + u.size(), occ[i + 1] - occ[i]));
    }
  }
  const std::size_t k = longest_free + 1;
  if (k + 1 > cover.depth) return std::nullopt;
  CoverReturns out;
  out.returns.assign(found.begin(), found.end());
  out.certificate = k;
  return out;
}

// Unique factorization over a prefix code.
Word parse_over(const std::vector<Word>& code, const Word& w) {
  Word out;
  std::size_t pos = 0;
  while (pos < w.size()) {
    bool matched = false;
    for (std::size_t i = 0; i < code.size(); ++i) {
      const auto& x = code[i];
      if (x.size() <= w.size() - pos && std::equal(x.begin(), x.end(), w.begin() + static_cast<long>(pos))) {
        out.push_back(static_cast<Letter>(i));
        pos += x.size();
        matched = true;
        break;
      }
    }
    if (!matched) throw Error(ErrorKind::internal, "return word does not factor over the previous returns");
  }
  return out;
}

// Fac(m(A^*)) ∩ A^{<=depth}, following positions inside the images.
std::vector<Word> image_language_factors(const Morphism& m, std::size_t depth) {
  std::vector<Letter> label;
  std::vector<char> last;
  std::vector<std::size_t> starts;
  for (const auto& img : m.images()) {
    starts.push_back(label.size());
    for (std::size_t i = 0; i < img.size(); ++i) {
      label.push_back(img[i]);
      last.push_back(i + 1 == img.size());
    }
  }
  std::vector<Word> members{Word{}};
  std::unordered_map<Word, std::set<std::size_t>, WordHash> layer;
  for (std::size_t p = 0; p < label.size() && depth > 0; ++p) layer[Word{label[p]}].insert(p);
  for (std::size_t len = 1; len <= depth && !layer.empty(); ++len) {
    std::unordered_map<Word, std::set<std::size_t>, WordHash> next;
    for (const auto& [w, ps] : layer) {
      members.push_back(w);
      if (len == depth) continue;
      for (auto p : ps) {
        auto extend = [&](std::size_t q) {
          Word v = w;
          v.push_back(label[q]);
          next[std::move(v)].insert(q);
        };
        if (!last[p])
          extend(p + 1);
        else
          for (auto q : starts) extend(q);
      }
    }
    layer = std::move(next);
  }
  return members;
}

}  // namespace

SadicSequence sadic_extract(const CoverSource& source, const Alphabet& alphabet, std::size_t steps,
                            const SadicOptions& options) {
  const std::size_t k = alphabet.size();
  SadicSequence seq;
  seq.alphabet = alphabet;
  std::vector<Word> alpha;  // σ_0⋯σ_{n-1}(letter)
  for (std::size_t c = 0; c < k; ++c) alpha.push_back(Word{static_cast<Letter>(c)});
  Word u;
  std::size_t depth = std::max<std::size_t>(options.initial_depth, 2);

  for (std::size_t n = 0; n < steps; ++n) {
    Letter seed = options.seeds.empty() ? Letter{0} : options.seeds[n % options.seeds.size()];
    if (seed >= k) throw Error(ErrorKind::invalid_argument, "seed letter outside the alphabet");
    u = concat(u, alpha[seed]);

    std::optional<CoverReturns> found;
    depth = std::max(depth, 2 * u.size() + 2);
    while (true) {
      auto cover = source(depth);
      if (!(cover.alphabet == alphabet)) throw Error(ErrorKind::alphabet_mismatch, "cover alphabet differs");
      if (!cover.certified) throw Error(ErrorKind::incomplete_set, "S-adic extraction needs a certified cover");
      found = returns_on_cover(cover, u);
      if (found) break;
      if (depth >= options.max_depth)
        throw Error(ErrorKind::depth_exhausted, "step " + std::to_string(n) + ": returns to a word of length " +
                                                    std::to_string(u.size()) + " are not certified at depth " +
                                                    std::to_string(depth) + "; a deeper source is needed");
      depth = std::min(depth * 4, options.max_depth);
    }
    if (found->returns.size() != k)
      throw Error(ErrorKind::invalid_argument, "step " + std::to_string(n) + ": " +
                                                   std::to_string(found->returns.size()) + " first returns over " +
                                                   std::to_string(k) + " letters; not a tree set");

    std::vector<std::pair<Word, Word>> coded;  // (σ_n image, return word)
    for (const auto& x : found->returns) coded.emplace_back(parse_over(alpha, x), x);
    std::sort(coded.begin(), coded.end(),
              [](const auto& p, const auto& q) { return shortlex_less(p.first, q.first); });

    std::vector<Word> images;
    SadicStepSource info;
    info.seed = seed;
    info.base = u;
    info.source_depth = depth;
    info.certificate = found->certificate;
    for (auto& [img, ret] : coded) {
      images.push_back(img);
      info.returns.push_back(ret);
    }
    info.basis = is_basis(images, k);
    if (info.basis) info.decomposition = tame_decompose(images, alphabet);
    seq.morphisms.emplace_back(alphabet, alphabet, images);
    alpha = info.returns;
    seq.provenance.push_back(std::move(info));
  }
  return seq;
}

SadicReplay sadic_replay(const SadicSequence& seq, std::size_t n, std::size_t depth) {
  if (n >= seq.morphisms.size())
    throw Error(ErrorKind::invalid_argument, "sequence has only " + std::to_string(seq.morphisms.size()) + " morphisms");
  std::vector<FactorSet> sets;
  Morphism product = seq.morphisms.front();
  for (std::size_t i = 0; i <= n; ++i) {
    if (i > 0) product = compose(product, seq.morphisms[i]);
    sets.push_back(FactorSet::from_members(seq.alphabet, image_language_factors(product, depth), depth,
                                           Completeness::certified, Provenance::replay));
  }
  SadicReplay out;
  out.stable_from = n;
  while (out.stable_from > 0 && sets[out.stable_from - 1].same_words(sets[n])) --out.stable_from;
  out.set = std::move(sets[n]);
  return out;
}

SequencePrimitivity primitivity_of_sequence(const SadicSequence& seq, std::size_t r, std::size_t horizon) {
  SequencePrimitivity out;
  out.horizon = horizon;
  const std::size_t k = seq.alphabet.size();
  // occ[a][b]: letter b occurs in σ_r⋯σ_{s-1}(a)
  std::vector<std::vector<char>> occ(k, std::vector<char>(k, 0));
  for (std::size_t a = 0; a < k; ++a) occ[a][a] = 1;
  for (std::size_t s = r + 1; s <= horizon && s <= seq.morphisms.size(); ++s) {
    const auto& sigma = seq.morphisms[s - 1];
    std::vector<std::vector<char>> next(k, std::vector<char>(k, 0));
    for (std::size_t a = 0; a < k; ++a)
      for (Letter c : sigma.image(static_cast<Letter>(a)))
        for (std::size_t b = 0; b < k; ++b) next[a][b] |= occ[c][b];
    occ = std::move(next);
    bool all = true;
    for (std::size_t a = 0; a < k && all; ++a)
      for (std::size_t b = 0; b < k && all; ++b) all = occ[a][b] != 0;
    if (all) {
      out.found = true;
      out.s = s;
      return out;
    }
  }
  return out;
}

}  // namespace wordlab
