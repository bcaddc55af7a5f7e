#include "wordlab/decoding.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "wordlab/error.hpp"
#include "wordlab/extension.hpp"
#include "wordlab/returns.hpp"

namespace wordlab {

namespace {

std::string braces(const std::vector<std::string>& items) {
  std::string out = "{";
  for (std::size_t i = 0; i < items.size(); ++i) out += (i ? "," : "") + items[i];
  return out + "}";
}

std::size_t decoded_depth(const DecodingJob& job) {
  const std::size_t maxz = job.coding.max_image_length();
  if (job.source.exhaustive()) return job.depth ? job.depth : job.source.depth();
  const std::size_t cap = job.source.depth() / maxz;
  if (job.depth == 0) return cap;
  if (job.depth > cap)
    throw Error(ErrorKind::insufficient_depth, "decoding to depth " + std::to_string(job.depth) +
                                                   " needs source depth " + std::to_string(job.depth * maxz));
  return job.depth;
}

}  // namespace

FactorSet max_bifix_decode(const DecodingJob& job) {
  const auto& f = job.coding;
  if (!(f.target() == job.source.alphabet()))
    throw Error(ErrorKind::alphabet_mismatch, "coding target differs from the source alphabet");
  const auto& Z = f.images();
  if (std::set<Word>(Z.begin(), Z.end()).size() != Z.size())
    throw Error(ErrorKind::invalid_argument, "coding morphism is not injective");
  if (!is_bifix_code(Z)) throw Error(ErrorKind::not_bifix, "coded words do not form a bifix code");
  if (!is_s_maximal_bifix(Z, job.source))
    throw Error(ErrorKind::not_maximal_code, "coded words are not an S-maximal bifix code");
  const std::size_t m = decoded_depth(job);
  auto t = inverse_image(job.source, f);
  if (t.exhaustive()) return t;
  return t.truncate(m);
}

Report verify_main_theorem(const DecodingJob& job, const MainTheoremBounds& bounds) {
  Report r;
  r.title = "maximal bifix decoding of a uniformly recurrent tree set";
  const auto& s = job.source;
  if (s.depth() >= 2) {
    auto src = is_tree_set(s, s.exhaustive() ? s.depth() : s.depth() - 2);
    r.add("source tree set", src.passed,
          src.passed ? "" : "G(" + s.alphabet().show(*src.witness) + ") " + to_string(src.failure));
  }

  auto t = max_bifix_decode(job);
  const std::size_t m = t.depth();
  const std::size_t k = t.alphabet().size();
  r.note("decoded alphabet size", std::to_string(k));
  r.note("decoded depth", std::to_string(m));

  std::size_t tree_bound = bounds.tree_up_to.value_or(m >= 2 ? m - 2 : 0);
  if (m >= 2 || t.exhaustive()) {
    auto tv = is_tree_set(t, tree_bound);
    r.add("decoded tree set", tv.passed,
          tv.passed ? "up to " + std::to_string(tree_bound)
                    : "G(" + t.alphabet().show(*tv.witness) + ") " + to_string(tv.failure));
  }

  std::size_t rec_bound = bounds.recurrence_up_to.value_or(1);
  auto rv = is_recurrent_desk(t, rec_bound);
  r.add("decoded recurrent", rv.passed,
        rv.passed ? "pairs up to " + std::to_string(rec_bound)
                  : t.alphabet().show(rv.witness->first) + " and " + t.alphabet().show(rv.witness->second) +
                        " never co-occur within depth " + std::to_string(m));

  if (t.certified()) {
    auto uv = uniform_recurrence_check(t, rec_bound);
    r.add("decoded uniformly recurrent", uv.passed,
          uv.passed ? "return certificates up to " + std::to_string(uv.max_certificate)
                    : t.alphabet().show(*uv.witness) + ": " + uv.reason);
  }

  std::size_t cx_bound = std::min(bounds.complexity_up_to.value_or(m), m);
  if (t.certified()) {
    bool ok = true;
    std::string detail;
    for (std::size_t n = 0; n <= cx_bound; ++n) {
      std::size_t p = complexity(t, n);
      if (p != (k - 1) * n + 1) {
        ok = false;
        detail = "p_" + std::to_string(n) + " = " + std::to_string(p) + ", expected " +
                 std::to_string((k - 1) * n + 1);
        break;
      }
    }
    r.add("decoded complexity (|B|-1)n+1", ok, ok ? "n <= " + std::to_string(cx_bound) : detail);
  }
  return r;
}

Report verify_group_morphism_props(const FactorSet& s, const std::vector<Permutation>& actions,
                                   const std::vector<Word>& samples) {
  if (actions.size() != s.alphabet().size())
    throw Error(ErrorKind::invalid_argument, "need one permutation per letter");
  Report r;
  r.title = "morphisms onto a finite group";
  auto elements = group_elements(actions);
  std::set<Permutation> group(elements.begin(), elements.end());
  r.note("group order", std::to_string(group.size()));

  std::set<Permutation> image;
  for (const auto& w : s.words()) image.insert(perm_of_word(actions, w));
  r.add("phi(S) = G", image == group,
        std::to_string(image.size()) + " of " + std::to_string(group.size()) + " elements reached");

  for (const auto& w : samples) {
    if (!s.contains(w)) throw Error(ErrorKind::not_a_member, "sample '" + s.alphabet().show(w) + "' is not in S");
    auto rd = return_words(s, w);
    std::set<Permutation> hit{perm_of_word(actions, Word{})};
    for (const auto& x : rd.gamma) hit.insert(perm_of_word(actions, x));
    bool ok = hit == group;
    if (!ok && !s.exhaustive())
      throw Error(ErrorKind::insufficient_depth, "returns to '" + s.alphabet().show(w) + "' reach " +
                                                     std::to_string(hit.size()) + " of " +
                                                     std::to_string(group.size()) + " elements at depth " +
                                                     std::to_string(s.depth()));
    r.add("phi(Gamma(" + s.alphabet().show(w) + ") + 1) = G", ok,
          std::to_string(hit.size()) + " of " + std::to_string(group.size()) + " elements reached");
  }
  return r;
}

Report degree_multiplicativity(const FactorSet& s, const CodeSet& X, const CodeSet& Z,
                               const std::optional<Alphabet>& letters) {
  auto dec = decompose_over(X, Z, letters);
  if (!dec.possible) throw Error(ErrorKind::decomposition_impossible, dec.reason);
  Report r;
  r.title = "degree of a composition";
  auto t = inverse_image(s, dec.f);
  std::size_t dx = s_degree(X, s);
  std::size_t dz = s_degree(Z, s);
  std::size_t dy = s_degree(dec.Y, t);

  r.note("X", braces(X.format()));
  r.note("Z", braces(Z.format()));
  r.note("Y", braces(dec.Y.format()));
  r.note("f", dec.f.to_string());
  r.note("d_X", std::to_string(dx));
  r.note("d_Z", std::to_string(dz));
  r.note("d_Y", std::to_string(dy));
  r.note("K(X)", braces(kernel(X, s).format()));
  r.note("K(Z)", braces(kernel(Z, s).format()));
  r.note("K(Y)", braces(kernel(dec.Y, t).format()));

  r.add("d_Z divides d_X", dz != 0 && dx % dz == 0,
        std::to_string(dz) + (dz != 0 && dx % dz == 0 ? " divides " : " does not divide ") + std::to_string(dx));
  r.add("d_X = d_Y d_Z", dx == dy * dz,
        std::to_string(dx) + (dx == dy * dz ? " = " : " != ") + std::to_string(dy) + " * " + std::to_string(dz));
  return r;
}

}  // namespace wordlab
