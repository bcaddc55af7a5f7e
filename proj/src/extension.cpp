#include "wordlab/extension.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <unordered_map>

#include "union_find.hpp"
#include "wordlab/code.hpp"
#include "wordlab/error.hpp"

namespace wordlab {

const char* to_string(Speciality s) noexcept {
  switch (s) {
    case Speciality::none: return "none";
    case Speciality::left_special: return "left-special";
    case Speciality::right_special: return "right-special";
    case Speciality::bispecial: return "bispecial";
  }
  return "unknown";
}

const char* to_string(GraphFailure f) noexcept {
  switch (f) {
    case GraphFailure::none: return "none";
    case GraphFailure::disconnected: return "disconnected";
    case GraphFailure::cycle: return "cycle";
  }
  return "unknown";
}

namespace {

void require_depth(const FactorSet& s, std::size_t needed, const char* what) {
  if (needed > s.depth() && !s.exhaustive())
    throw Error(ErrorKind::depth_exceeded, std::string(what) + " needs depth " + std::to_string(needed) +
                                               ", set has " + std::to_string(s.depth()));
}

Word wrap(Letter a, const Word& w, Letter b) {
  Word r;
  r.reserve(w.size() + 2);
  r.push_back(a);
  r.insert(r.end(), w.begin(), w.end());
  r.push_back(b);
  return r;
}

}  // namespace

ExtensionRecord extensions(const FactorSet& s, const Word& w) {
  require_depth(s, w.size() + 2, "extensions");
  if (!s.contains(w)) throw Error(ErrorKind::not_a_member, "'" + s.alphabet().format(w) + "' is not in the set");
  ExtensionRecord rec;
  rec.word = w;
  const auto k = static_cast<Letter>(s.alphabet().size());
  for (Letter a = 0; a < k; ++a) {
    Word aw = concat(Word{a}, w);
    if (s.contains(aw)) rec.left.push_back(a);
    Word wa = concat(w, Word{a});
    if (s.contains(wa)) rec.right.push_back(a);
  }
  for (Letter a : rec.left)
    for (Letter b : rec.right)
      if (s.contains(wrap(a, w, b))) rec.pairs.emplace_back(a, b);
  return rec;
}

Speciality is_special(const FactorSet& s, const Word& w) {
  auto rec = extensions(s, w);
  bool left = rec.l() >= 2, right = rec.r() >= 2;
  if (left && right) return Speciality::bispecial;
  if (left) return Speciality::left_special;
  if (right) return Speciality::right_special;
  return Speciality::none;
}

std::size_t ExtensionGraph::component_count() const {
  detail::UnionFind uf(vertex_count());
  for (auto [l, r] : edges) uf.unite(l, left.size() + r);
  return uf.components();
}

bool ExtensionGraph::is_connected() const {
  return vertex_count() > 0 && component_count() == 1;
}

bool ExtensionGraph::is_acyclic() const {
  // a forest has exactly V - C edges
  return edges.size() + component_count() == vertex_count();
}

std::string ExtensionGraph::to_dot(const Alphabet& alphabet, const std::string& name) const {
  auto label = [&](const Word& w) {
    auto t = alphabet.format(w);
    return t.empty() ? std::string("1") : t;
  };
  std::ostringstream out;
  out << "graph \"" << name << "\" {\n  rankdir=LR;\n";
  for (const auto& l : left) out << "  \"L:" << label(l) << "\" [shape=box];\n";
  for (const auto& r : right) out << "  \"R:" << label(r) << "\" [shape=ellipse];\n";
  for (auto [l, r] : edges) out << "  \"L:" << label(left[l]) << "\" -- \"R:" << label(right[r]) << "\";\n";
  out << "}\n";
  return out.str();
}

ExtensionGraph extension_graph(const FactorSet& s, const Word& w) {
  auto rec = extensions(s, w);
  ExtensionGraph g;
  std::map<Letter, std::size_t> li, ri;
  for (Letter a : rec.left) {
    li[a] = g.left.size();
    g.left.push_back(Word{a});
  }
  for (Letter b : rec.right) {
    ri[b] = g.right.size();
    g.right.push_back(Word{b});
  }
  for (auto [a, b] : rec.pairs) g.edges.emplace_back(li[a], ri[b]);
  return g;
}

ExtensionGraph generalized_extension_graph(const FactorSet& s, const Word& w, const std::vector<Word>& U,
                                           const std::vector<Word>& V, bool check_codes) {
  std::size_t mu = 0, mv = 0;
  for (const auto& u : U) mu = std::max(mu, u.size());
  for (const auto& v : V) mv = std::max(mv, v.size());
  require_depth(s, w.size() + mu + mv, "generalized extension graph");
  if (!s.contains(w)) throw Error(ErrorKind::not_a_member, "'" + s.alphabet().format(w) + "' is not in the set");
  if (check_codes) {
    if (!is_s_maximal_suffix(U, s)) throw Error(ErrorKind::not_maximal_code, "U is not an S-maximal suffix code");
    if (!is_s_maximal_prefix(V, s)) throw Error(ErrorKind::not_maximal_code, "V is not an S-maximal prefix code");
  }
  auto us = U, vs = V;
  sort_lex(us);
  sort_lex(vs);
  ExtensionGraph g;
  for (const auto& u : us)
    if (s.contains(concat(u, w))) g.left.push_back(u);
  for (const auto& v : vs)
    if (s.contains(concat(w, v))) g.right.push_back(v);
  for (std::size_t i = 0; i < g.left.size(); ++i)
    for (std::size_t j = 0; j < g.right.size(); ++j)
      if (s.contains(concat(concat(g.left[i], w), g.right[j]))) g.edges.emplace_back(i, j);
  return g;
}

namespace {

TreeVerdict scan_graphs(const FactorSet& s, std::size_t up_to, bool need_connected) {
  require_depth(s, up_to + 2, "tree check");
  TreeVerdict v;
  v.up_to = up_to;
  for (std::size_t n = 0; n <= up_to; ++n) {
    for (const auto& w : s.words_of_length(n)) {
      auto g = extension_graph(s, w);
      if (!g.is_acyclic()) {
        v.passed = false;
        v.witness = w;
        v.failure = GraphFailure::cycle;
        return v;
      }
      if (need_connected && !g.is_connected()) {
        v.passed = false;
        v.witness = w;
        v.failure = GraphFailure::disconnected;
        return v;
      }
    }
  }
  return v;
}

}  // namespace

TreeVerdict is_tree_set(const FactorSet& s, std::size_t up_to) { return scan_graphs(s, up_to, true); }

TreeVerdict is_acyclic_set(const FactorSet& s, std::size_t up_to) { return scan_graphs(s, up_to, false); }

RecurrenceVerdict is_recurrent_desk(const FactorSet& s, std::size_t up_to) {
  if (up_to > s.depth() && !s.exhaustive())
    throw Error(ErrorKind::depth_exceeded, "recurrence bound beyond depth");
  RecurrenceVerdict verdict;
  verdict.up_to = up_to;
  verdict.search_bound = s.depth();
  verdict.definitive = s.exhaustive();

  std::vector<Word> shortw;
  std::unordered_map<Word, std::size_t, WordHash> id;
  for (std::size_t n = 0; n <= std::min(up_to, s.depth()); ++n)
    for (const auto& w : s.words_of_length(n)) {
      id.emplace(w, shortw.size());
      shortw.push_back(w);
    }
  const std::size_t m = shortw.size();
  std::vector<char> seen(m * m, 0);
  // every member z = u v w contributes the pairs (prefix, suffix) that do not overlap
  for (const auto& z : s.words()) {
    for (std::size_t i = 0; i <= std::min(up_to, z.size()); ++i) {
      auto pu = id.find(slice(z, 0, i));
      for (std::size_t j = 0; j <= std::min(up_to, z.size() - i); ++j) {
        auto pw = id.find(slice(z, z.size() - j, j));
        seen[pu->second * m + pw->second] = 1;
      }
    }
  }
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b)
      if (!seen[a * m + b]) {
        verdict.passed = false;
        verdict.witness = std::make_pair(shortw[a], shortw[b]);
        return verdict;
      }
  return verdict;
}

}  // namespace wordlab
