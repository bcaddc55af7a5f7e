#include "doctest.h"
#include "helpers.hpp"
#include "../support/oracles.hpp"
#include "wordlab/error.hpp"
#include "wordlab/extension.hpp"
#include "wordlab/morphism.hpp"
#include "wordlab/presets.hpp"

using namespace wordlab;
using testing_util::level;
using testing_util::strs;

namespace {

oracle::Rules rules_of(const Morphism& m) {
  oracle::Rules r;
  for (std::size_t c = 0; c < m.source().size(); ++c)
    r[m.source().symbol(static_cast<Letter>(c))[0]] = m.target().format(m.image(static_cast<Letter>(c)));
  return r;
}

}  // namespace

TEST_CASE("morphism parsing, application and composition") {
  auto f = Morphism::parse("a->ab; b->a");
  const auto& a = f.source();
  CHECK(f.is_endomorphism());
  CHECK(a.format(f.apply(a.parse("aba"))) == "abaab");
  CHECK(f.to_string() == "a->ab; b->a");
  auto ff = compose(f, f);
  CHECK(a.format(ff.image(0)) == "aba");
  CHECK(a.format(ff.image(1)) == "ab");
  CHECK(Morphism::identity(a).apply(a.parse("ab")) == a.parse("ab"));
  CHECK_THROWS_AS(Morphism::parse("a->; b->a"), Error);
  CHECK_THROWS_AS(Morphism::parse("a->ab; a->b"), Error);
}

TEST_CASE("primitivity") {
  CHECK(is_primitive(Morphism::parse("a->ab; b->a")));
  CHECK(is_primitive(Morphism::parse("a->ab; b->ac; c->a")));
  CHECK_FALSE(is_primitive(Morphism::parse("a->ab; b->bb")));
  auto v = is_primitive(Morphism::parse("a->ab; b->ac; c->a"), 10);
  CHECK(v.primitive);
  CHECK(v.exponent == 3);
}

TEST_CASE("fixed points") {
  auto spec = make_fixed_point(Morphism::parse("a->ab; b->a"), 0);
  CHECK(spec.morphism.source().format(fixed_point_prefix(spec, 13)) == "abaababaabaab");
  CHECK_THROWS_AS(make_fixed_point(Morphism::parse("a->ba; b->a"), 0), Error);
  CHECK_THROWS_AS(make_fixed_point(Morphism::parse("a->a; b->ab"), 0), Error);
}

TEST_CASE("two-letter factors by closure") {
  auto spec = make_fixed_point(Morphism::parse("a->ab; b->ac; c->a"), 0);
  CHECK(strs(spec.morphism.source(), fixed_point_two_factors(spec)) == testing_util::set_of("aa ab ac ba ca"));
}

TEST_CASE("certified morphic factor sets equal prefix factors") {
  for (const char* name : {"fibonacci", "tribonacci", "tame-tree", "tame-non-tree", "golden-three-morphic"}) {
    const auto& p = preset(name);
    auto s = p.generate(12);
    CHECK(s.certified());
    auto x = oracle::fixed_point(rules_of(p.fixed_point->morphism),
                                 p.alphabet.symbol(p.fixed_point->seed)[0], 50000);
    for (std::size_t n = 0; n <= 12; ++n) CHECK_MESSAGE(level(s, n) == oracle::factors(x, n), name << " n=" << n);
  }
}

TEST_CASE("prefix scanning agrees on primitive inputs but is not certified") {
  auto spec = make_fixed_point(Morphism::parse("a->ab; b->ac; c->a"), 0);
  auto scan = factor_set_by_prefix_scan(spec, 10);
  auto exact = factor_set_of_fixed_point(spec, 10);
  CHECK_FALSE(scan.certified());
  CHECK(scan.same_words(exact));
}

TEST_CASE("non-primitive fixed points") {
  // every letter grows: certified by the cover
  auto growing = make_fixed_point(Morphism::parse("a->aab; b->bb"), 0);
  auto s = factor_set_of_fixed_point(growing, 6);
  CHECK(s.certified());
  auto x = oracle::fixed_point({{'a', "aab"}, {'b', "bb"}}, 'a', 5000);
  for (std::size_t n = 0; n <= 6; ++n) CHECK(level(s, n) == oracle::factors(x, n));

  // b is bounded: falls back to scanning
  auto bounded = make_fixed_point(Morphism::parse("a->ab; b->b"), 0);
  auto t = factor_set_of_fixed_point(bounded, 5);
  CHECK_FALSE(t.certified());
  CHECK(level(t, 3) == testing_util::set_of("abb bbb"));
}

TEST_CASE("primitive fixed points are recurrent") {
  for (const char* name : {"fibonacci", "tribonacci", "tame-tree"}) {
    auto s = preset(name).generate(16);
    CHECK(is_recurrent_desk(s, 3).passed);
  }
}

TEST_CASE("periodic sets") {
  auto a = Alphabet::letters("ab");
  auto s = periodic_factor_set(a, a.parse("ab"), 6);
  CHECK(s.certified());
  for (std::size_t n = 1; n <= 6; ++n) CHECK(complexity(s, n) == 2);
  auto t = periodic_factor_set(Alphabet::letters("abc"), Alphabet::letters("abc").parse("aab"), 5);
  CHECK(complexity(t, 4) == 3);
}

TEST_CASE("episturmian morphisms") {
  auto a = Alphabet::letters("abc");
  auto psi = episturmian_morphism(0, a);
  CHECK(psi.to_string() == "a->a; b->ab; c->ac");
  // psi_a psi_b psi_c composed periodically gives the Tribonacci language
  auto m = compose(compose(psi, episturmian_morphism(1, a)), episturmian_morphism(2, a));
  auto cube = compose(m, compose(m, m));
  auto s = factor_set_of_fixed_point(make_fixed_point(cube, 0), 8);
  for (std::size_t n = 0; n <= 8; ++n) CHECK(complexity(s, n) == 2 * n + 1);
}

TEST_CASE("preset registry") {
  CHECK(presets().size() >= 9);
  CHECK_THROWS_AS(preset("none"), Error);
  for (const auto& p : presets()) {
    auto s = p.generate(6);
    CHECK(s.alphabet() == p.alphabet);
    if (p.tree) CHECK_MESSAGE(is_tree_set(s, 4).passed, p.name);
  }
}
