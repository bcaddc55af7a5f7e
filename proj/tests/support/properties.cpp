#include "properties.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <optional>
#include <random>
#include <set>

#include "oracles.hpp"
#include "wordlab/automaton.hpp"
#include "wordlab/code.hpp"
#include "wordlab/error.hpp"
#include "wordlab/free_group.hpp"
#include "wordlab/morphism.hpp"
#include "wordlab/presets.hpp"
#include "wordlab/returns.hpp"

namespace props {

namespace wl = wordlab;

std::string Outcome::summary() const {
  std::string s = name + ": " + std::to_string(cases - failures) + "/" + std::to_string(cases) + " cases";
  if (!first_failure.empty()) s += " (first failure: " + first_failure + ")";
  return s;
}

std::uint64_t default_seed() {
  if (const char* env = std::getenv("WORDLAB_SEED")) return std::strtoull(env, nullptr, 10);
  return 20150612;
}

namespace {

using Rng = std::mt19937_64;

std::size_t pick(Rng& rng, std::size_t lo, std::size_t hi) {  // inclusive
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

void fail(Outcome& o, const std::string& what) {
  ++o.failures;
  if (o.first_failure.empty()) o.first_failure = what;
}

std::string letters_of(std::size_t k) { return std::string("abcd").substr(0, k); }

wl::Word random_word(Rng& rng, std::size_t k, std::size_t len) {
  wl::Word w(len);
  for (auto& c : w) c = static_cast<wl::Letter>(pick(rng, 0, k - 1));
  return w;
}

oracle::Rules rules_of(const wl::Morphism& m) {
  oracle::Rules r;
  for (std::size_t c = 0; c < m.source().size(); ++c)
    r[m.source().symbol(static_cast<wl::Letter>(c))[0]] = m.target().format(m.image(static_cast<wl::Letter>(c)));
  return r;
}

struct Fixture {
  std::string name;
  wl::FactorSet set;
  std::string prefix;  // long word whose factors are the set
};

std::string oracle_prefix(const std::string& preset_name, std::size_t n) {
  // golden-three-iet has the same factors as the morphic word with seed b
  const auto& p = wl::preset(preset_name == "golden-three-iet" ? "golden-three-morphic" : preset_name);
  return oracle::fixed_point(rules_of(p.fixed_point->morphism), p.fixed_point->morphism.source().symbol(p.fixed_point->seed)[0], n);
}

}  // namespace

Outcome factoriality(std::uint64_t seed, std::size_t cases) {
  Outcome o{"factoriality"};
  Rng rng(seed);
  while (o.cases < cases) {
    std::size_t k = pick(rng, 2, 3);
    auto a = wl::Alphabet::letters(letters_of(k));
    std::vector<wl::Word> images;
    for (std::size_t c = 0; c < k; ++c) images.push_back(random_word(rng, k, pick(rng, 1, 3)));
    if (images[0].size() < 2) images[0].push_back(static_cast<wl::Letter>(pick(rng, 0, k - 1)));
    images[0][0] = 0;
    wl::Morphism m(a, a, images);
    auto spec = wl::make_fixed_point(m, 0);
    std::size_t depth = pick(rng, 2, 5);
    auto s = wl::factor_set_of_fixed_point(spec, depth);
    ++o.cases;
    std::string label = m.to_string() + " depth " + std::to_string(depth);

    bool ok = true;
    for (const auto& w : s.words()) {
      if (w.empty()) continue;
      if (!s.contains(wl::slice(w, 1, w.size() - 1)) || !s.contains(wl::slice(w, 0, w.size() - 1))) {
        fail(o, label + ": '" + a.format(w) + "' has a missing factor");
        ok = false;
        break;
      }
    }
    if (!ok) continue;

    auto x = oracle::fixed_point(rules_of(m), 'a', 6000);
    auto ref = oracle::factors_upto(x, depth);
    std::set<std::string> got;
    for (const auto& w : s.words()) got.insert(a.format(w));
    bool contains_ref = std::includes(got.begin(), got.end(), ref.begin(), ref.end());
    if (s.certified() && !contains_ref) {
      fail(o, label + ": certified set misses factors of the prefix");
      continue;
    }
    if (s.certified() && wl::is_primitive(m) && got != ref) fail(o, label + ": differs from the prefix factors");
    if (!s.certified() && !std::includes(ref.begin(), ref.end(), got.begin(), got.end()))
      fail(o, label + ": scanned set has words outside the fixed point");
  }
  return o;
}

Outcome parse_count_agreement(std::uint64_t seed, std::size_t cases) {
  Outcome o{"parse-count agreement"};
  Rng rng(seed);
  while (o.cases < cases) {
    std::size_t k = pick(rng, 2, 3);
    auto a = wl::Alphabet::letters(letters_of(k));
    std::vector<wl::Word> X;
    std::size_t want = pick(rng, 1, 5);
    for (int tries = 0; tries < 40 && X.size() < want; ++tries) {
      auto cand = X;
      cand.push_back(random_word(rng, k, pick(rng, 1, 4)));
      std::sort(cand.begin(), cand.end());
      if (std::adjacent_find(cand.begin(), cand.end()) == cand.end() && wl::is_bifix_code(cand)) X = cand;
    }
    if (X.empty()) continue;
    wl::CodeSet code(a, X);
    auto w = random_word(rng, k, pick(rng, 0, 10));
    ++o.cases;
    std::vector<std::string> xs;
    for (const auto& x : X) xs.push_back(a.format(x));
    auto ps = wl::parses(code, w);
    std::size_t n1 = ps.size(), n2 = wl::parse_count_by_suffixes(X, w), n3 = wl::parse_count_by_prefixes(X, w);
    std::size_t n4 = oracle::parse_count(xs, a.format(w));
    bool recon = std::all_of(ps.begin(), ps.end(),
                             [&](const wl::Parse& p) { return wl::concat(wl::concat(p.v, p.x), p.u) == w; });
    if (!(n1 == n2 && n2 == n3 && n3 == n4 && recon))
      fail(o, "w=" + a.format(w) + " counts " + std::to_string(n1) + "/" + std::to_string(n2) + "/" +
                  std::to_string(n3) + " oracle " + std::to_string(n4));
  }
  return o;
}

Outcome return_conjugation(std::uint64_t seed, std::size_t cases) {
  Outcome o{"return conjugation"};
  Rng rng(seed);
  std::vector<Fixture> fx;
  for (const char* name : {"fibonacci", "tribonacci", "tame-tree", "golden-three-morphic", "golden-three-iet"}) {
    std::size_t depth = std::string(name) == "golden-three-iet" ? 30 : 40;
    fx.push_back({name, wl::preset(name).generate(depth), oracle_prefix(name, 20000)});
  }
  while (o.cases < cases) {
    const auto& f = fx[pick(rng, 0, fx.size() - 1)];
    const auto& words = f.set.words_of_length(pick(rng, 1, 4));
    const auto& w = words[pick(rng, 0, words.size() - 1)];
    const auto& a = f.set.alphabet();
    ++o.cases;
    std::string label = f.name + " w=" + a.format(w);
    auto rd = wl::return_words(f.set, w);
    if (!rd.complete) {
      fail(o, label + ": returns not certified");
      continue;
    }
    auto cj = wl::left_right_conjugation(rd);
    bool ok = cj.holds && cj.pairs.size() == rd.first_returns.size();
    for (const auto& [x, xl] : cj.pairs) ok = ok && wl::concat(w, x) == wl::concat(xl, w);
    std::set<std::string> got;
    for (const auto& x : rd.first_returns) got.insert(a.format(x));
    if (got != oracle::first_returns(f.prefix, a.format(w))) ok = false;
    if (!ok) fail(o, label);
  }
  return o;
}

namespace {

// Random action on n points, one permutation per letter.
std::vector<wl::Permutation> random_action(Rng& rng, std::size_t k, std::size_t n) {
  std::vector<wl::Permutation> acts;
  for (std::size_t c = 0; c < k; ++c) {
    wl::Permutation p(n);
    for (std::size_t i = 0; i < n; ++i) p[i] = i;
    std::shuffle(p.begin(), p.end(), rng);
    acts.push_back(p);
  }
  return acts;
}

bool transitive(const std::vector<wl::Permutation>& acts, std::size_t n) {
  std::vector<char> seen(n, 0);
  std::vector<std::size_t> stack{0};
  seen[0] = 1;
  while (!stack.empty()) {
    auto p = stack.back();
    stack.pop_back();
    for (const auto& a : acts)
      for (auto q : {a[p], static_cast<std::size_t>(std::find(a.begin(), a.end(), p) - a.begin())})
        if (!seen[q]) {
          seen[q] = 1;
          stack.push_back(q);
        }
  }
  return std::all_of(seen.begin(), seen.end(), [](char c) { return c != 0; });
}

// Schreier generators of the stabilizer of point 0.
std::vector<wl::SignedWord> schreier_generators(const std::vector<wl::Permutation>& acts, std::size_t n) {
  std::vector<std::optional<wl::SignedWord>> path(n);
  path[0] = wl::SignedWord{};
  std::vector<std::size_t> queue{0};
  for (std::size_t h = 0; h < queue.size(); ++h) {
    auto p = queue[h];
    for (std::size_t c = 0; c < acts.size(); ++c)
      for (bool inv : {false, true}) {
        std::size_t q = inv ? static_cast<std::size_t>(std::find(acts[c].begin(), acts[c].end(), p) - acts[c].begin())
                            : acts[c][p];
        if (path[q]) continue;
        auto w = *path[p];
        w.push_back({static_cast<wl::Letter>(c), inv});
        path[q] = w;
        queue.push_back(q);
      }
  }
  std::vector<wl::SignedWord> gens;
  for (std::size_t p = 0; p < n; ++p)
    for (std::size_t c = 0; c < acts.size(); ++c) {
      auto w = *path[p];
      w.push_back({static_cast<wl::Letter>(c), false});
      auto g = wl::reduce(wl::multiply(w, wl::inverse(*path[acts[c][p]])));
      if (!g.empty()) gens.push_back(g);
    }
  return gens;
}

}  // namespace

Outcome saturation(std::uint64_t seed, std::size_t cases) {
  Outcome o{"saturation"};
  Rng rng(seed);
  std::vector<Fixture> fx{{"fibonacci", wl::preset("fibonacci").generate(48), ""},
                          {"tribonacci", wl::preset("tribonacci").generate(40), ""}};
  while (o.cases < cases) {
    const auto& f = fx[pick(rng, 0, 1)];
    const auto& s = f.set;
    const auto& a = s.alphabet();
    wl::CodeSet X;
    std::string label;
    if (pick(rng, 0, 3) == 0) {
      std::size_t n = pick(rng, 1, 4);
      X = wl::CodeSet(a, s.words_of_length(n));
      label = f.name + " S∩A^" + std::to_string(n);
    } else {
      std::size_t n = pick(rng, 1, 4);
      auto acts = random_action(rng, a.size(), n);
      try {
        X = wl::group_code_intersection(wl::group_automaton(acts, 0), s);
      } catch (const wl::Error& e) {
        if (e.kind() == wl::ErrorKind::insufficient_depth) continue;  // redraw
        throw;
      }
      label = f.name + " group code on " + std::to_string(n) + " points";
    }
    ++o.cases;
    auto v = wl::saturation_check(X, s);
    if (!v.passed) fail(o, label + ": witness " + a.show(*v.witness));
  }
  return o;
}

Outcome fold_idempotence(std::uint64_t seed, std::size_t cases) {
  Outcome o{"fold idempotence"};
  Rng rng(seed);
  while (o.cases < cases) {
    std::size_t k = pick(rng, 2, 3);
    std::vector<wl::SignedWord> X;
    std::size_t count = pick(rng, 1, 4);
    for (std::size_t i = 0; i < count; ++i) {
      wl::SignedWord w;
      std::size_t len = pick(rng, 1, 5);
      for (std::size_t j = 0; j < len; ++j) w.push_back({static_cast<wl::Letter>(pick(rng, 0, k - 1)), pick(rng, 0, 1) == 1});
      w = wl::reduce(w);
      if (!w.empty()) X.push_back(w);
    }
    if (X.empty()) continue;
    ++o.cases;
    auto g = wl::fold(X, k);

    auto doubled = X;
    doubled.insert(doubled.end(), X.begin(), X.end());
    auto mixed = X;
    std::shuffle(mixed.begin(), mixed.end(), rng);
    mixed.push_back(wl::multiply(X[pick(rng, 0, X.size() - 1)], X[pick(rng, 0, X.size() - 1)]));
    mixed.push_back(wl::inverse(X[pick(rng, 0, X.size() - 1)]));

    // generators read back from the graph through a spanning tree
    std::vector<std::optional<wl::SignedWord>> path(g.vertex_count());
    path[0] = wl::SignedWord{};
    std::vector<std::size_t> queue{0};
    std::set<std::size_t> tree_edges;
    for (std::size_t h = 0; h < queue.size(); ++h) {
      auto v = queue[h];
      for (std::size_t e = 0; e < g.edges().size(); ++e) {
        const auto& ed = g.edges()[e];
        if (ed.from == v && !path[ed.to]) {
          auto w = *path[v];
          w.push_back({ed.letter, false});
          path[ed.to] = w;
          queue.push_back(ed.to);
          tree_edges.insert(e);
        } else if (ed.to == v && !path[ed.from]) {
          auto w = *path[v];
          w.push_back({ed.letter, true});
          path[ed.from] = w;
          queue.push_back(ed.from);
          tree_edges.insert(e);
        }
      }
    }
    std::vector<wl::SignedWord> back;
    for (std::size_t e = 0; e < g.edges().size(); ++e) {
      if (tree_edges.count(e)) continue;
      const auto& ed = g.edges()[e];
      auto w = *path[ed.from];
      w.push_back({ed.letter, false});
      back.push_back(wl::reduce(wl::multiply(w, wl::inverse(*path[ed.to]))));
    }

    bool members = std::all_of(X.begin(), X.end(), [&](const auto& x) { return g.contains(x); });
    bool ok = members && wl::fold(doubled, k) == g && wl::fold(mixed, k) == g && wl::fold(back, k) == g &&
              back.size() == g.rank();
    if (!ok) fail(o, "case " + std::to_string(o.cases) + " with " + std::to_string(X.size()) + " generators");
  }
  return o;
}

Outcome nielsen_schreier(std::uint64_t seed, std::size_t cases) {
  Outcome o{"Nielsen-Schreier"};
  Rng rng(seed);
  while (o.cases < cases) {
    std::size_t k = pick(rng, 2, 3);
    std::size_t n = pick(rng, 1, 7);
    auto acts = random_action(rng, k, n);
    if (!transitive(acts, n)) continue;
    ++o.cases;
    auto g = wl::fold(schreier_generators(acts, n), k);
    auto ri = wl::rank_and_index(g);
    bool ok = ri.index && *ri.index == n && ri.rank == n * (k - 1) + 1 && g.is_complete();
    // membership agrees with the action on random words
    for (int t = 0; t < 20 && ok; ++t) {
      wl::SignedWord w;
      std::size_t p = 0;
      for (std::size_t j = pick(rng, 0, 8); j > 0; --j) {
        wl::Letter c = static_cast<wl::Letter>(pick(rng, 0, k - 1));
        bool inv = pick(rng, 0, 1) == 1;
        w.push_back({c, inv});
        p = inv ? static_cast<std::size_t>(std::find(acts[c].begin(), acts[c].end(), p) - acts[c].begin()) : acts[c][p];
      }
      ok = g.contains(w) == (p == 0);
    }
    if (!ok)
      fail(o, "k=" + std::to_string(k) + " n=" + std::to_string(n) + " rank " + std::to_string(ri.rank) + " index " +
                  (ri.index ? std::to_string(*ri.index) : "infinite"));
  }
  return o;
}

}  // namespace props
