#include "wordlab/factor_set.hpp"

#include <algorithm>

#include "wordlab/error.hpp"

namespace wordlab {

const char* to_string(Completeness c) noexcept {
  return c == Completeness::certified ? "certified" : "possibly-incomplete";
}

const char* to_string(Provenance p) noexcept {
  switch (p) {
    case Provenance::explicit_words: return "explicit";
    case Provenance::morphic: return "morphic";
    case Provenance::iet: return "iet";
    case Provenance::derived: return "derived";
    case Provenance::decoded: return "decoded";
    case Provenance::periodic: return "periodic";
    case Provenance::replay: return "replay";
  }
  return "unknown";
}

void FactorSet::index_members(std::vector<Word> members) {
  by_length_.assign(depth_ + 1, {});
  members_.clear();
  members_.insert(Word{});
  by_length_[0].push_back(Word{});
  for (auto& w : members) {
    if (w.size() > depth_) continue;
    for (Letter c : w)
      if (c >= alphabet_.size()) throw Error(ErrorKind::alphabet_mismatch, "letter outside alphabet");
    if (members_.insert(w).second) by_length_[w.size()].push_back(std::move(w));
  }
  for (auto& bucket : by_length_) std::sort(bucket.begin(), bucket.end());
}

FactorSet FactorSet::from_cover(Alphabet alphabet, const std::vector<Word>& cover, std::size_t depth,
                                Completeness completeness, Provenance provenance) {
  FactorSet s;
  s.alphabet_ = std::move(alphabet);
  s.depth_ = depth;
  s.completeness_ = completeness;
  s.provenance_ = provenance;
  std::unordered_set<Word, WordHash> seen;
  std::vector<Word> members;
  for (const auto& c : cover) {
    for (std::size_t i = 0; i < c.size(); ++i) {
      std::size_t max_len = std::min(depth, c.size() - i);
      for (std::size_t len = 1; len <= max_len; ++len) {
        Word f(c.begin() + static_cast<std::ptrdiff_t>(i), c.begin() + static_cast<std::ptrdiff_t>(i + len));
        if (seen.insert(f).second) members.push_back(std::move(f));
      }
    }
  }
  s.index_members(std::move(members));
  return s;
}

FactorSet FactorSet::finite(Alphabet alphabet, const std::vector<Word>& words, Provenance provenance) {
  std::size_t depth = 0;
  for (const auto& w : words) depth = std::max(depth, w.size());
  auto s = from_cover(std::move(alphabet), words, depth, Completeness::certified, provenance);
  s.exhaustive_ = true;
  return s;
}

FactorSet FactorSet::from_members(Alphabet alphabet, std::vector<Word> members, std::size_t depth,
                                  Completeness completeness, Provenance provenance, bool exhaustive) {
  FactorSet s;
  s.alphabet_ = std::move(alphabet);
  s.depth_ = depth;
  s.completeness_ = completeness;
  s.provenance_ = provenance;
  s.exhaustive_ = exhaustive;
  for (const auto& w : members)
    if (w.size() > depth) throw Error(ErrorKind::depth_exceeded, "member longer than declared depth");
  s.index_members(std::move(members));
  // prefix and suffix closure at each length gives full factoriality
  for (std::size_t n = 1; n <= depth; ++n) {
    for (const auto& w : s.by_length_[n]) {
      Word p(w.begin(), w.end() - 1), q(w.begin() + 1, w.end());
      if (!s.members_.count(p) || !s.members_.count(q))
        throw Error(ErrorKind::invalid_argument, "member list is not factorial");
    }
  }
  return s;
}

bool FactorSet::contains(const Word& w) const {
  if (w.size() > depth_) {
    if (exhaustive_) return false;
    throw Error(ErrorKind::depth_exceeded,
                "word of length " + std::to_string(w.size()) + " beyond depth " + std::to_string(depth_));
  }
  return members_.count(w) != 0;
}

const std::vector<Word>& FactorSet::words_of_length(std::size_t n) const {
  static const std::vector<Word> none;
  if (n > depth_) {
    if (exhaustive_) return none;
    throw Error(ErrorKind::depth_exceeded,
                "length " + std::to_string(n) + " beyond depth " + std::to_string(depth_));
  }
  return by_length_[n];
}

std::vector<Word> FactorSet::words() const {
  std::vector<Word> out;
  out.reserve(members_.size());
  for (const auto& bucket : by_length_) out.insert(out.end(), bucket.begin(), bucket.end());
  return out;
}

std::vector<Letter> FactorSet::letters() const {
  std::vector<Letter> out;
  if (depth_ >= 1)
    for (const auto& w : by_length_[1]) out.push_back(w[0]);
  return out;
}

FactorSet FactorSet::truncate(std::size_t depth) const {
  if (depth > depth_ && !exhaustive_)
    throw Error(ErrorKind::depth_exceeded, "cannot truncate above current depth");
  FactorSet s = *this;
  if (depth >= depth_) {
    return s;
  }
  std::vector<Word> keep;
  for (std::size_t n = 0; n <= depth; ++n) keep.insert(keep.end(), by_length_[n].begin(), by_length_[n].end());
  s.depth_ = depth;
  // a truncated finite set is no longer exhaustive unless nothing was cut
  s.exhaustive_ = exhaustive_ && std::all_of(by_length_.begin() + static_cast<std::ptrdiff_t>(depth + 1),
                                             by_length_.end(), [](const auto& b) { return b.empty(); });
  s.index_members(std::move(keep));
  return s;
}

FactorSet FactorSet::with_completeness(Completeness c) const {
  FactorSet s = *this;
  s.completeness_ = c;
  return s;
}

bool FactorSet::same_words(const FactorSet& other) const {
  return alphabet_ == other.alphabet_ && members_ == other.members_;
}

std::vector<Word> factors_of_length(const FactorSet& s, std::size_t n) {
  return s.words_of_length(n);
}

std::size_t complexity(const FactorSet& s, std::size_t n) {
  if (!s.certified())
    throw Error(ErrorKind::incomplete_set, "complexity needs a certified factor set");
  if (n > s.depth() && !s.exhaustive())
    throw Error(ErrorKind::depth_exceeded, "length beyond depth");
  return s.words_of_length(n).size();
}

}  // namespace wordlab
