#include <random>

#include "doctest.h"
#include "helpers.hpp"
#include "../support/oracles.hpp"
#include "wordlab/automaton.hpp"
#include "wordlab/code.hpp"
#include "wordlab/decoding.hpp"
#include "wordlab/error.hpp"
#include "wordlab/free_group.hpp"
#include "wordlab/presets.hpp"

using namespace wordlab;
using testing_util::set_of;
using testing_util::strs;

namespace {

std::vector<Word> parse_words(const Alphabet& a, const std::string& list) { return a.parse_list(list); }

}  // namespace

TEST_CASE("prefix, suffix and bifix codes") {
  auto a = Alphabet::letters("abc");
  CHECK(is_prefix_code(parse_words(a, "a,ba,bb")));
  CHECK_FALSE(is_suffix_code(parse_words(a, "a,ba,bb")));
  CHECK(is_bifix_code(parse_words(a, "ab,acb,acc")));
  CHECK_FALSE(is_bifix_code(parse_words(a, "a,ab")));
  CHECK(is_code(parse_words(a, "a,ab")));
  CHECK_FALSE(is_code(parse_words(a, "a,ab,b")));
  CHECK_FALSE(is_code(parse_words(a, "ab,abc,cab,c")));
}

TEST_CASE("Sardinas-Patterson agrees with bounded enumeration") {
  std::mt19937_64 rng(7);
  auto a = Alphabet::letters("ab");
  for (int t = 0; t < 300; ++t) {
    std::vector<Word> X;
    std::vector<std::string> xs;
    std::size_t n = 1 + rng() % 4;
    for (std::size_t i = 0; i < n; ++i) {
      Word w(1 + rng() % 3);
      for (auto& c : w) c = static_cast<Letter>(rng() % 2);
      if (std::find(X.begin(), X.end(), w) != X.end()) continue;
      X.push_back(w);
      xs.push_back(a.format(w));
    }
    // a pair of factorizations of a word of length <= 12 suffices for these sizes
    CHECK(is_code(X) == oracle::is_code(xs, 12));
  }
}

TEST_CASE("factorizations and star membership") {
  auto a = Alphabet::letters("ab");
  auto X = parse_words(a, "a,ab,bb");
  auto f = factorize(X, a.parse("abba"));
  REQUIRE(f);
  CHECK(*f == std::vector<std::size_t>{0, 2, 0});
  Word rebuilt;
  for (auto i : *f) rebuilt = concat(rebuilt, X[i]);
  CHECK(rebuilt == a.parse("abba"));
  CHECK(in_star(X, {}));
  CHECK_FALSE(in_star(X, a.parse("ba")));
}

TEST_CASE("parses of a word") {
  auto a = Alphabet::letters("ab");
  CodeSet X(a, parse_words(a, "aa,ab,ba,bb"));
  // every word has d_X = 2 for the uniform code of length 2
  for (const char* w : {"a", "ab", "aba", "abab", "babba"}) CHECK(parse_count(X, a.parse(w)) == 2);
  CHECK(parse_count(X, {}) == 1);
  auto ps = parses(X, a.parse("aba"));
  CHECK(ps.size() == 2);
  CHECK_THROWS_AS(parses(CodeSet(a, parse_words(a, "a,ab")), a.parse("ab")), Error);
}

TEST_CASE("S-maximal bifix codes and degrees in tree sets") {
  auto s = preset("tribonacci").generate(24);
  for (std::size_t n = 1; n <= 4; ++n) {
    CodeSet X(s.alphabet(), s.words_of_length(n));
    CHECK(is_s_maximal_bifix(X.words(), s));
    CHECK(s_degree(X, s) == n);
    // a basis of a subgroup of index n
    auto g = fold(X.words(), 3);
    auto ri = rank_and_index(g);
    CHECK(ri.index == n);
    CHECK(ri.rank == X.size());
  }
  auto a = s.alphabet();
  auto notmax = parse_words(a, "ab,ac");
  CHECK_FALSE(is_s_maximal_bifix(notmax, s));
  CHECK_FALSE(is_s_maximal_prefix(notmax, s));
  CHECK(is_s_maximal_prefix(parse_words(a, "a,b,c"), s));
}

TEST_CASE("kernel and internal factors") {
  auto s = preset("fibonacci").generate(40);
  const auto& a = s.alphabet();
  CodeSet Z(a, parse_words(a, "a,baab,bab"));
  CHECK(s_degree(Z, s) == 2);
  CHECK(strs(a, kernel(Z, s).words()) == set_of("a"));
  auto inner = internal_factors(Z, s);
  CHECK(std::find(inner.begin(), inner.end(), Word{}) != inner.end());
}

TEST_CASE("degree of a composition, Fibonacci") {
  auto s = preset("fibonacci").generate(40);
  const auto& a = s.alphabet();
  CodeSet X(a, parse_words(a, "aa,abaaba,abab,baab,baba"));
  CodeSet Z(a, parse_words(a, "a,baab,bab"));
  auto r = degree_multiplicativity(s, X, Z, Alphabet::letters("uvw"));
  CHECK(*r.fact("Y") == "{uu,uvu,uw,v,wu}");
  CHECK(*r.fact("d_X") == "4");
  CHECK(*r.fact("d_Z") == "2");
  CHECK(*r.fact("d_Y") == "2");
  CHECK(*r.fact("K(Z)") == "{a}");
  CHECK(*r.fact("K(Y)") == "{v}");
  CHECK(*r.fact("K(X)") == "{aa,baab}");
  CHECK(r.passed());
}

TEST_CASE("degree of a composition, periodic") {
  auto s = preset("ab-periodic").generate(20);
  const auto& a = s.alphabet();
  CodeSet X(a, parse_words(a, "abab,ba"));
  CodeSet Z(a, parse_words(a, "ab,ba"));
  auto r = degree_multiplicativity(s, X, Z);
  CHECK(*r.fact("d_X") == "3");
  CHECK(*r.fact("d_Z") == "2");
  const auto* div = r.find("d_Z divides d_X");
  REQUIRE(div);
  CHECK_FALSE(div->passed);
  CHECK(div->detail == "2 does not divide 3");
  CHECK_FALSE(r.passed());
  CHECK_THROWS_AS(degree_multiplicativity(s, CodeSet(a, parse_words(a, "aba")), Z), Error);
}

TEST_CASE("composition and decomposition of codes") {
  auto a = Alphabet::letters("ab");
  auto f = Morphism::parse("u->a; v->baab; w->bab", a);
  auto Y = CodeSet(f.source(), f.source().parse_list("uu,uvu,uw,v,wu"));
  auto X = compose_codes(Y, f);
  CHECK(strs(a, X.words()) == set_of("aa abaaba abab baab baba"));
  auto d = decompose_over(X, CodeSet(a, parse_words(a, "a,baab,bab")));
  REQUIRE(d.possible);
  CHECK(d.Y.size() == 5);
  CHECK(compose_codes(d.Y, d.f) == X);
  auto bad = decompose_over(CodeSet(a, parse_words(a, "ab")), CodeSet(a, parse_words(a, "a,baab,bab")));
  CHECK_FALSE(bad.possible);
}

TEST_CASE("maximality transfers through composition") {
  auto s = preset("fibonacci").generate(40);
  const auto& a = s.alphabet();
  auto f = Morphism::parse("u->a; v->baab; w->bab", a);
  auto Y = CodeSet(f.source(), f.source().parse_list("uu,uvu,uw,v,wu"));
  CHECK(maximality_transfer_check(Y, f, s).passed());
}

TEST_CASE("inverse image of a factor set") {
  auto s = preset("fibonacci").generate(20);
  auto f = Morphism::parse("u->a; v->baab; w->bab", s.alphabet());
  auto t = inverse_image(s, f);
  CHECK(t.depth() == 5);
  CHECK(t.certified());
  for (const auto& w : t.words()) CHECK(s.contains(f.apply(w)));
}

TEST_CASE("minimal automaton of a prefix code star") {
  auto a = Alphabet::letters("ab");
  auto m = minimal_automaton_of_star(CodeSet(a, parse_words(a, "aa,ab,ba,bb")));
  CHECK(m.state_count() == 2);
  CHECK(m.is_group_automaton());
  CHECK(m.accepts(a.parse("abba")));
  CHECK_FALSE(m.accepts(a.parse("aba")));

  auto p = minimal_automaton_of_star(CodeSet(a, parse_words(a, "a,ba,bb")));
  CHECK(p.state_count() == 2);
  CHECK(p.is_simple());
  CHECK(p.to_dot(a).find("digraph") != std::string::npos);
}

TEST_CASE("group automata") {
  std::vector<Permutation> acts{{1, 0, 2}, {2, 1, 0}};
  auto g = group_automaton(acts, 0);
  CHECK(g.automaton.state_count() == 3);
  CHECK(g.automaton.is_group_automaton());
  CHECK(group_elements(acts).size() == 6);
  auto reg = regular_representation(acts);
  CHECK(reg.automaton.state_count() == 6);
  CHECK(compose_perm({1, 0, 2}, {2, 1, 0}) == Permutation{1, 2, 0});
  auto cyc = length_mod_action(2, 3);
  CHECK(perm_of_word(cyc, {0, 1, 1}) == Permutation{0, 1, 2});
}

TEST_CASE("group code of S3 on Fibonacci") {
  auto s = preset("fibonacci").generate(60);
  const auto& a = s.alphabet();
  std::vector<Permutation> acts{{1, 0, 2}, {2, 1, 0}};
  auto X = group_code_intersection(regular_representation(acts), s);
  CHECK(X.size() == 7);
  auto g = fold(X.words(), 2);
  auto ri = rank_and_index(g);
  CHECK(g.vertex_count() == 6);
  CHECK(g.is_complete());
  CHECK(ri.index == 6);
  CHECK(ri.rank == X.size());
  CHECK(s_degree(X, s) == 6);

  // suffixes of ababa are proper prefixes of X with distinct images
  auto w = a.parse("ababa");
  std::set<Permutation> images;
  for (std::size_t i = 0; i <= w.size(); ++i) {
    auto suffix = slice(w, i, w.size() - i);
    bool proper_prefix = std::any_of(X.words().begin(), X.words().end(),
                                     [&](const Word& x) { return x.size() > suffix.size() && is_prefix(suffix, x); });
    CHECK(proper_prefix);
    images.insert(perm_of_word(acts, suffix));
  }
  CHECK(images.size() == 6);
}

TEST_CASE("group code needs enough depth") {
  auto s = preset("fibonacci").generate(3);
  std::vector<Permutation> acts{{1, 0, 2}, {2, 1, 0}};
  CHECK_THROWS_AS(group_code_intersection(regular_representation(acts), s), Error);
}
