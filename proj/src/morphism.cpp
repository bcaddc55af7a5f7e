#include "wordlab/morphism.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <unordered_set>

#include "wordlab/error.hpp"

namespace wordlab {

Morphism::Morphism(Alphabet source, Alphabet target, std::vector<Word> images)
    : source_(std::move(source)), target_(std::move(target)), images_(std::move(images)) {
  if (images_.size() != source_.size())
    throw Error(ErrorKind::invalid_argument, "one image per source letter required");
  for (const auto& w : images_) {
    if (w.empty()) throw Error(ErrorKind::invalid_argument, "erasing morphisms are not supported");
    for (Letter c : w)
      if (c >= target_.size()) throw Error(ErrorKind::alphabet_mismatch, "image letter outside target alphabet");
  }
}

namespace {

struct Rule {
  std::string lhs;
  std::string rhs;
};

std::string trim(std::string_view s) {
  auto b = s.find_first_not_of(" \t\n\r");
  if (b == std::string_view::npos) return {};
  auto e = s.find_last_not_of(" \t\n\r");
  return std::string(s.substr(b, e - b + 1));
}

std::vector<Rule> split_rules(std::string_view text) {
  std::vector<Rule> rules;
  std::size_t start = 0;
  while (start <= text.size()) {
    auto end = text.find(';', start);
    if (end == std::string_view::npos) end = text.size();
    auto piece = trim(text.substr(start, end - start));
    start = end + 1;
    if (piece.empty()) continue;
    auto arrow = piece.find("->");
    if (arrow == std::string::npos) throw Error(ErrorKind::parse, "rule without '->': " + piece);
    Rule r{trim(piece.substr(0, arrow)), trim(piece.substr(arrow + 2))};
    if (r.lhs.empty()) throw Error(ErrorKind::parse, "rule with empty left side");
    rules.push_back(std::move(r));
  }
  if (rules.empty()) throw Error(ErrorKind::parse, "no rules in morphism text");
  return rules;
}

}  // namespace

Morphism Morphism::parse(std::string_view rules_text) {
  auto rules = split_rules(rules_text);
  std::vector<std::string> syms;
  for (const auto& r : rules) syms.push_back(r.lhs);
  Alphabet a(syms);
  return parse(rules_text, a);
}

Morphism Morphism::parse(std::string_view rules_text, const Alphabet& target) {
  auto rules = split_rules(rules_text);
  std::vector<std::string> syms;
  std::vector<Word> images;
  for (const auto& r : rules) {
    syms.push_back(r.lhs);
    auto w = target.parse(r.rhs);
    if (w.empty()) throw Error(ErrorKind::parse, "empty image for '" + r.lhs + "'");
    images.push_back(std::move(w));
  }
  Alphabet source(syms);
  if (source.size() == target.size() && std::is_permutation(syms.begin(), syms.end(), target.symbols().begin()) &&
      !(source == target))
    throw Error(ErrorKind::parse, "rules for an endomorphism must follow the alphabet order");
  return Morphism(std::move(source), target, std::move(images));
}

Morphism Morphism::identity(const Alphabet& a) {
  std::vector<Word> images;
  for (std::size_t i = 0; i < a.size(); ++i) images.push_back(Word{static_cast<Letter>(i)});
  return Morphism(a, a, std::move(images));
}

Word Morphism::apply(const Word& w) const {
  Word out;
  for (Letter c : w) {
    if (c >= images_.size()) throw Error(ErrorKind::alphabet_mismatch, "letter outside source alphabet");
    const auto& img = images_[c];
    out.insert(out.end(), img.begin(), img.end());
  }
  return out;
}

std::size_t Morphism::max_image_length() const {
  std::size_t m = 0;
  for (const auto& w : images_) m = std::max(m, w.size());
  return m;
}

std::size_t Morphism::min_image_length() const {
  std::size_t m = images_.empty() ? 0 : images_[0].size();
  for (const auto& w : images_) m = std::min(m, w.size());
  return m;
}

std::string Morphism::to_string() const {
  std::ostringstream out;
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (i) out << "; ";
    out << source_.symbol(static_cast<Letter>(i)) << "->" << target_.format(images_[i]);
  }
  return out.str();
}

Morphism compose(const Morphism& outer, const Morphism& inner) {
  if (!(inner.target() == outer.source()))
    throw Error(ErrorKind::alphabet_mismatch, "cannot compose: inner target differs from outer source");
  std::vector<Word> images;
  for (const auto& w : inner.images()) images.push_back(outer.apply(w));
  return Morphism(inner.source(), outer.target(), std::move(images));
}

namespace {

using BoolMatrix = std::vector<std::vector<char>>;

BoolMatrix incidence(const Morphism& m) {
  const auto n = m.source().size();
  BoolMatrix r(n, std::vector<char>(n, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (Letter c : m.image(static_cast<Letter>(i))) r[i][c] = 1;
  return r;
}

BoolMatrix product(const BoolMatrix& x, const BoolMatrix& y) {
  const auto n = x.size();
  BoolMatrix r(n, std::vector<char>(n, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k)
      if (x[i][k])
        for (std::size_t j = 0; j < n; ++j)
          if (y[k][j]) r[i][j] = 1;
  return r;
}

bool positive(const BoolMatrix& x) {
  for (const auto& row : x)
    for (char v : row)
      if (!v) return false;
  return true;
}

}  // namespace

PrimitivityVerdict is_primitive(const Morphism& m, std::size_t k_max) {
  if (!m.is_endomorphism()) throw Error(ErrorKind::alphabet_mismatch, "primitivity needs an endomorphism");
  PrimitivityVerdict v;
  v.k_max = k_max;
  auto base = incidence(m);
  auto power = base;
  for (std::size_t k = 1; k <= k_max; ++k) {
    if (positive(power)) {
      v.primitive = true;
      v.exponent = k;
      return v;
    }
    power = product(power, base);
  }
  return v;
}

bool is_primitive(const Morphism& m) {
  const auto n = m.source().size();
  return is_primitive(m, (n - 1) * (n - 1) + 1).primitive;
}

Morphism episturmian_morphism(Letter a, const Alphabet& alphabet) {
  if (a >= alphabet.size()) throw Error(ErrorKind::invalid_argument, "letter not in alphabet");
  std::vector<Word> images;
  for (std::size_t i = 0; i < alphabet.size(); ++i) {
    auto b = static_cast<Letter>(i);
    images.push_back(b == a ? Word{a} : Word{a, b});
  }
  return Morphism(alphabet, alphabet, std::move(images));
}

FixedPointSpec make_fixed_point(Morphism m, Letter seed) {
  if (!m.is_endomorphism()) throw Error(ErrorKind::alphabet_mismatch, "fixed points need an endomorphism");
  if (seed >= m.source().size()) throw Error(ErrorKind::invalid_argument, "seed letter outside alphabet");
  const auto& img = m.image(seed);
  if (img.front() != seed)
    throw Error(ErrorKind::non_growing_seed, "image of the seed does not begin with the seed");
  // nonerasing: f^n(a) = a u f(u) ... f^{n-1}(u), so growth is |u| > 0
  if (img.size() < 2) throw Error(ErrorKind::non_growing_seed, "seed image has length 1");
  return FixedPointSpec{std::move(m), seed};
}

Word fixed_point_prefix(const FixedPointSpec& spec, std::size_t n) {
  Word w{spec.seed};
  while (w.size() < n) w = spec.morphism.apply(w);
  w.resize(n);
  return w;
}

FactorSet FactorCover::to_factor_set(Provenance provenance) const {
  return FactorSet::from_cover(alphabet, words, depth,
                               certified ? Completeness::certified : Completeness::possibly_incomplete, provenance);
}

std::vector<Word> fixed_point_two_factors(const FixedPointSpec& spec) {
  const auto& f = spec.morphism;
  Word start{spec.seed};
  while (start.size() < 2) start = f.apply(start);
  std::set<Word> found;
  std::vector<Word> queue;
  auto add_from = [&](const Word& w) {
    for (std::size_t i = 0; i + 2 <= w.size(); ++i) {
      Word cd{w[i], w[i + 1]};
      if (found.insert(cd).second) queue.push_back(cd);
    }
  };
  add_from(start);
  while (!queue.empty()) {
    Word cd = queue.back();
    queue.pop_back();
    add_from(f.apply(cd));
  }
  return {found.begin(), found.end()};
}

namespace {

// letters whose iterated images have unbounded length
std::vector<char> growing_letters(const Morphism& f) {
  const auto n = f.source().size();
  std::vector<char> grows(n, 0);
  for (std::size_t i = 0; i < n; ++i)
    if (f.image(static_cast<Letter>(i)).size() >= 2) grows[i] = 1;
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i < n; ++i) {
      if (grows[i]) continue;
      for (Letter c : f.image(static_cast<Letter>(i)))
        if (grows[c]) {
          grows[i] = 1;
          changed = true;
          break;
        }
    }
  }
  return grows;
}

}  // namespace

FactorCover fixed_point_cover(const FixedPointSpec& spec, std::size_t depth) {
  const auto& f = spec.morphism;
  FactorCover cover;
  cover.alphabet = f.source();
  cover.depth = depth;
  auto pairs = fixed_point_two_factors(spec);
  std::set<Letter> used;
  for (const auto& p : pairs) used.insert(p.begin(), p.end());
  auto grows = growing_letters(f);
  bool all_grow = std::all_of(used.begin(), used.end(), [&](Letter c) { return grows[c] != 0; });
  if (!all_grow) {
    // bounded letters break the two-block argument; scan a long prefix instead
    std::size_t n = std::max<std::size_t>(4 * depth, 16);
    cover.words.push_back(fixed_point_prefix(spec, n));
    cover.certified = false;
    return cover;
  }
  // any window of length <= depth in f^k(x) meets at most two blocks f^k(c)
  std::vector<Word> blocks(f.source().size());
  for (Letter c : used) blocks[c] = Word{c};
  auto shortest = [&] {
    std::size_t m = SIZE_MAX;
    for (Letter c : used) m = std::min(m, blocks[c].size());
    return m;
  };
  while (shortest() + 1 < depth)
    for (Letter c : used) blocks[c] = f.apply(blocks[c]);
  for (const auto& p : pairs) cover.words.push_back(concat(blocks[p[0]], blocks[p[1]]));
  cover.certified = true;
  return cover;
}

FactorSet factor_set_of_fixed_point(const FixedPointSpec& spec, std::size_t depth) {
  auto cover = fixed_point_cover(spec, depth);
  if (!cover.certified) return factor_set_by_prefix_scan(spec, depth);
  return cover.to_factor_set(Provenance::morphic);
}

FactorSet factor_set_by_prefix_scan(const FixedPointSpec& spec, std::size_t depth) {
  const auto& f = spec.morphism;
  Word w{spec.seed};
  std::vector<std::size_t> previous;
  FactorSet current;
  while (true) {
    w = f.apply(w);
    current = FactorSet::from_cover(f.source(), {w}, depth, Completeness::possibly_incomplete, Provenance::morphic);
    std::vector<std::size_t> counts;
    for (std::size_t n = 0; n <= depth; ++n) counts.push_back(current.words_of_length(n).size());
    if (w.size() >= 4 * depth && counts == previous) return current;
    previous = std::move(counts);
    if (w.size() > (std::size_t{1} << 24)) return current;
  }
}

FactorSet periodic_factor_set(const Alphabet& alphabet, const Word& period, std::size_t depth) {
  if (period.empty()) throw Error(ErrorKind::invalid_argument, "empty period");
  Word w;
  while (w.size() < depth + period.size()) w.insert(w.end(), period.begin(), period.end());
  return FactorSet::from_cover(alphabet, {w}, depth, Completeness::certified, Provenance::periodic);
}

}  // namespace wordlab
