#include "doctest.h"
#include "helpers.hpp"
#include "wordlab/error.hpp"
#include "wordlab/free_group.hpp"
#include "wordlab/presets.hpp"
#include "wordlab/sadic.hpp"
#include "wordlab/tame.hpp"

using namespace wordlab;

TEST_CASE("extraction on the tame tree fixture") {
  const auto& p = preset("tame-tree");
  auto seq = sadic_extract(cover_source(*p.fixed_point), p.alphabet, 4);
  REQUIRE(seq.morphisms.size() == 4);
  REQUIRE(seq.provenance.size() == 4);
  for (std::size_t n = 0; n < 4; ++n) {
    const auto& m = seq.morphisms[n];
    CHECK(m.to_string() == "a->ca; b->cba; c->ccba");
    CHECK(is_basis(m.images(), 3));
    CHECK(seq.provenance[n].basis);
    auto t = tame_decompose(m.images(), p.alphabet);
    CHECK(t.verdict == TameVerdict::tame);
    CHECK(t.replay_verified);
  }
  CHECK(seq.provenance[0].base.size() == 1);
  CHECK(seq.provenance[1].base.size() == 3);

  auto fixture = p.generate(8);
  for (std::size_t n = 1; n < 4; ++n) {
    auto rep = sadic_replay(seq, n, 8);
    CHECK(rep.set.same_words(fixture));
    CHECK(rep.stable_from <= 1);
  }
}

TEST_CASE("extraction on Fibonacci") {
  const auto& p = preset("fibonacci");
  auto seq = sadic_extract(cover_source(*p.fixed_point), p.alphabet, 3);
  CHECK(seq.morphisms[0].to_string() == "a->a; b->ba");
  CHECK(seq.morphisms[1].to_string() == "a->ba; b->bba");
  auto fixture = p.generate(10);
  CHECK(sadic_replay(seq, 2, 10).set.same_words(fixture));
}

TEST_CASE("extraction from an interval exchange") {
  const auto& p = preset("golden-three-iet");
  auto gen = [&](std::size_t d) { return p.generate(d); };
  auto seq = sadic_extract(cover_source(gen), p.alphabet, 2);
  CHECK(seq.morphisms.size() == 2);
  for (const auto& m : seq.morphisms) CHECK(is_basis(m.images(), 3));
  CHECK(sadic_replay(seq, 1, 6).set.same_words(p.generate(6)));
}

TEST_CASE("extraction needs as many returns as letters") {
  const auto& p = preset("ab-periodic");
  auto gen = [&](std::size_t d) { return p.generate(d); };
  CHECK_THROWS_AS(sadic_extract(cover_source(gen), p.alphabet, 1), Error);
}

TEST_CASE("periodic sequences and primitivity") {
  auto a = Alphabet::letters("abc");
  auto f = Morphism::parse("a->ac; b->bac; c->cbac");
  auto seq = periodic_sequence({f}, 5);
  CHECK(seq.morphisms.size() == 5);
  auto pr = primitivity_of_sequence(seq, 0, 5);
  CHECK(pr.found);
  CHECK(pr.s >= 1);

  auto id = Morphism::identity(a);
  auto stuck = periodic_sequence({id}, 6);
  CHECK_FALSE(primitivity_of_sequence(stuck, 0, 6).found);

  // replay of a constant sequence is the fixed point language
  auto rep = sadic_replay(seq, 4, 6);
  CHECK(rep.set.same_words(preset("tame-tree").generate(6)));
}
