#include "wordlab/tame.hpp"

#include <algorithm>
#include <set>

#include "wordlab/code.hpp"
#include "wordlab/error.hpp"

namespace wordlab {

const char* to_string(StepKind k) noexcept {
  switch (k) {
    case StepKind::alpha: return "alpha";
    case StepKind::alpha_tilde: return "alpha_tilde";
    case StepKind::permutation: return "perm";
  }
  return "unknown";
}

const char* to_string(TameVerdict v) noexcept {
  switch (v) {
    case TameVerdict::tame: return "tame";
    case TameVerdict::not_tame: return "not-tame";
    case TameVerdict::undetermined: return "undetermined-by-greedy";
  }
  return "unknown";
}

Morphism elementary(StepKind kind, Letter a, Letter b, const Alphabet& alphabet) {
  if (kind == StepKind::permutation) throw Error(ErrorKind::invalid_argument, "use permutation_morphism");
  if (a >= alphabet.size() || b >= alphabet.size()) throw Error(ErrorKind::invalid_argument, "letter outside alphabet");
  if (a == b) throw Error(ErrorKind::equal_letters, "elementary automorphisms need two distinct letters");
  std::vector<Word> images;
  for (std::size_t i = 0; i < alphabet.size(); ++i) images.push_back(Word{static_cast<Letter>(i)});
  images[a] = kind == StepKind::alpha ? Word{a, b} : Word{b, a};
  return Morphism(alphabet, alphabet, std::move(images));
}

Morphism permutation_morphism(const std::vector<Letter>& map, const Alphabet& alphabet) {
  std::vector<Letter> check = map;
  std::sort(check.begin(), check.end());
  bool ok = check.size() == alphabet.size();
  for (std::size_t i = 0; ok && i < check.size(); ++i) ok = check[i] == i;
  if (!ok) throw Error(ErrorKind::invalid_argument, "not a permutation of the alphabet");
  std::vector<Word> images;
  for (Letter c : map) images.push_back(Word{c});
  return Morphism(alphabet, alphabet, std::move(images));
}

Morphism step_morphism(const TameStep& step, const Alphabet& alphabet) {
  if (step.kind == StepKind::permutation) return permutation_morphism(step.map, alphabet);
  return elementary(step.kind, step.a, step.b, alphabet);
}

std::vector<SignedWord> inverse_images(const TameStep& step, const Alphabet& alphabet) {
  std::vector<SignedWord> images;
  for (std::size_t i = 0; i < alphabet.size(); ++i) images.push_back(SignedWord{{static_cast<Letter>(i), false}});
  if (step.kind == StepKind::permutation) {
    for (std::size_t i = 0; i < step.map.size(); ++i) images[step.map[i]] = SignedWord{{static_cast<Letter>(i), false}};
  } else if (step.kind == StepKind::alpha) {
    images[step.a] = SignedWord{{step.a, false}, {step.b, true}};
  } else {
    images[step.a] = SignedWord{{step.b, true}, {step.a, false}};
  }
  return images;
}

std::vector<Word> replay(const std::vector<TameStep>& steps, const Alphabet& alphabet) {
  std::vector<Word> tuple;
  for (std::size_t i = 0; i < alphabet.size(); ++i) tuple.push_back(Word{static_cast<Letter>(i)});
  for (const auto& s : steps) {
    auto m = step_morphism(s, alphabet);
    for (auto& w : tuple) w = m.apply(w);
  }
  return tuple;
}

Morphism replay_morphism(const std::vector<TameStep>& steps, const Alphabet& alphabet) {
  return Morphism(alphabet, alphabet, replay(steps, alphabet));
}

namespace {

bool is_alphabet(const std::vector<Word>& y) {
  std::set<Letter> seen;
  for (const auto& w : y) {
    if (w.size() != 1) return false;
    seen.insert(w[0]);
  }
  return seen.size() == y.size();
}

// (i, j) with y[i] a proper prefix of y[j], y[i] length-lex least, then y[j]
bool find_prefix_pair(const std::vector<Word>& y, std::size_t& i_out, std::size_t& j_out, bool suffix) {
  bool found = false;
  for (std::size_t i = 0; i < y.size(); ++i)
    for (std::size_t j = 0; j < y.size(); ++j) {
      if (i == j || y[i].size() >= y[j].size()) continue;
      if (suffix ? !is_suffix(y[i], y[j]) : !is_prefix(y[i], y[j])) continue;
      if (!found || shortlex_less(y[i], y[i_out]) || (y[i] == y[i_out] && shortlex_less(y[j], y[j_out]))) {
        i_out = i;
        j_out = j;
        found = true;
      }
    }
  return found;
}

}  // namespace

TameResult tame_decompose(const std::vector<Word>& X, const Alphabet& alphabet) {
  if (!is_basis(X, alphabet.size())) throw Error(ErrorKind::not_a_basis, "input is not a basis of the free group");
  for (const auto& x : X)
    if (x.empty()) throw Error(ErrorKind::not_a_basis, "empty word in basis");
  TameResult r;
  r.assignment = X;
  sort_lex(r.assignment);
  std::vector<Word> y = r.assignment;
  std::vector<TameStep> steps;
  while (!is_alphabet(y)) {
    std::size_t i = 0, j = 0;
    if (find_prefix_pair(y, i, j, false)) {
      // y[j] = y[i] v: letter j was sent through a_j -> a_i a_j
      y[j] = Word(y[j].begin() + static_cast<std::ptrdiff_t>(y[i].size()), y[j].end());
      steps.push_back({StepKind::alpha_tilde, static_cast<Letter>(j), static_cast<Letter>(i), {}});
    } else if (find_prefix_pair(y, i, j, true)) {
      // y[j] = u y[i]: a_j -> a_j a_i
      y[j] = Word(y[j].begin(), y[j].end() - static_cast<std::ptrdiff_t>(y[i].size()));
      steps.push_back({StepKind::alpha, static_cast<Letter>(j), static_cast<Letter>(i), {}});
    } else {
      r.stuck = y;
      sort_lex(r.stuck);
      r.verdict = steps.empty() ? TameVerdict::not_tame : TameVerdict::undetermined;
      return r;
    }
  }
  std::vector<Letter> map;
  bool identity = true;
  for (std::size_t k = 0; k < y.size(); ++k) {
    map.push_back(y[k][0]);
    identity = identity && y[k][0] == k;
  }
  if (!identity) steps.push_back({StepKind::permutation, 0, 0, map});
  r.steps = std::move(steps);
  r.verdict = TameVerdict::tame;
  auto images = replay(r.steps, alphabet);
  auto want = X;
  sort_lex(want);
  auto got = images;
  sort_lex(got);
  r.replay_verified = got == want;
  return r;
}

}  // namespace wordlab
