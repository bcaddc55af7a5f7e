#include "doctest.h"
#include "helpers.hpp"
#include "../support/oracles.hpp"
#include "wordlab/error.hpp"
#include "wordlab/iet.hpp"
#include "wordlab/presets.hpp"

using namespace wordlab;
using testing_util::level;
using testing_util::set_of;

namespace {
const QuadraticNumber alpha = QuadraticNumber::parse("3/2-1/2*sqrt(5)");
}

TEST_CASE("quadratic numbers") {
  auto phi = QuadraticNumber::parse("1/2+1/2*sqrt(5)");
  CHECK(phi * phi == phi + 1);
  CHECK(alpha + phi == 2);
  CHECK(alpha > 0);
  CHECK(alpha < Rational(2, 5));
  CHECK(alpha > Rational(3, 8));
  CHECK(QuadraticNumber::parse("sqrt(5)") > QuadraticNumber(Rational(2236, 1000)));
  CHECK(QuadraticNumber::parse("sqrt(5)") < QuadraticNumber(Rational(2237, 1000)));
  CHECK((alpha - alpha).sign() == 0);
  CHECK(QuadraticNumber::parse("-3/4").is_rational());
  CHECK(std::abs(alpha.to_double() - 0.3819660112501051) < 1e-12);
  CHECK_THROWS_AS(QuadraticNumber::parse("sqrt(5)+sqrt(2)"), Error);
  CHECK_THROWS_AS(QuadraticNumber::parse("1/2*sqrt(5)", 3), Error);
  CHECK_THROWS_AS(QuadraticNumber::parse("1/0"), Error);
  CHECK_THROWS_AS(QuadraticNumber(1, 1, 5) + QuadraticNumber(1, 1, 3), Error);
}

TEST_CASE("interval exchange construction") {
  const auto& t = *preset("golden-three-iet").iet;
  CHECK(t.size() == 3);
  auto a = t.alphabet().letter("a"), b = t.alphabet().letter("b"), c = t.alphabet().letter("c");
  CHECK(t.top(a).lo == 0);
  CHECK(t.top(c).hi == 1);
  // bottom order b, c, a
  CHECK(t.bottom(b).lo == 0);
  CHECK(t.bottom(a).hi == 1);
  CHECK(t.translation(a) == t.bottom(a).lo - t.top(a).lo);
  CHECK(t.separation_points().size() == 2);
  for (Letter x : {a, b, c}) CHECK(t.apply_inverse(t.apply(t.top(x).lo)) == t.top(x).lo);
  CHECK_THROWS_AS(IntervalExchange::parse("d=5; a=1/2; b=1/4; order=b,a"), Error);
  CHECK_THROWS_AS(IntervalExchange::parse("d=5; a=3/2; b=-1/2; order=b,a"), Error);
  CHECK_THROWS_AS(t.letter_at(QuadraticNumber(1)), Error);
}

TEST_CASE("rotation coding is the Fibonacci word") {
  auto t = IntervalExchange::rotation(alpha, true);
  auto y = natural_coding(t, alpha, 200);
  auto x = oracle::fixed_point({{'a', "ab"}, {'b', "a"}}, 'a', 200);
  CHECK(t.alphabet().format(y) == x);
}

TEST_CASE("three-interval coding prefix") {
  const auto& t = *preset("golden-three-iet").iet;
  auto y = natural_coding(t, alpha, 21);
  CHECK(t.alphabet().format(y) == "baccbaccbbacbbacbbacc");
  auto g = oracle::fixed_point({{'a', "baccb"}, {'b', "bacc"}, {'c', "bacb"}}, 'b', 2000);
  CHECK(t.alphabet().format(natural_coding(t, alpha, 2000)) == g);
}

TEST_CASE("three-interval factors to depth 5") {
  auto s = factor_set(*preset("golden-three-iet").iet, 5);
  CHECK(s.certified());
  CHECK(level(s, 1) == set_of("a b c"));
  CHECK(level(s, 2) == set_of("ac ba bb cb cc"));
  CHECK(level(s, 3) == set_of("acb acc bac bba cba cbb ccb"));
  CHECK(level(s, 4) == set_of("acbb accb bacb bacc bbac cbac cbba ccba ccbb"));
  CHECK(level(s, 5) == set_of("acbba accba accbb bacbb baccb bbacb bbacc cbacc cbbac ccbac ccbba"));
}

TEST_CASE("word intervals partition the unit interval") {
  const auto& t = *preset("golden-three-iet").iet;
  auto s = factor_set(t, 6);
  for (std::size_t n = 1; n <= 6; ++n) {
    QuadraticNumber total = 0;
    for (const auto& w : s.words_of_length(n)) {
      auto iv = word_interval(t, w);
      CHECK_FALSE(iv.empty());
      total = total + iv.length();
    }
    CHECK(total == 1);
  }
  CHECK(word_interval(t, t.alphabet().parse("aa")).empty());
}

TEST_CASE("rotation factor set is Sturmian") {
  auto s = factor_set(IntervalExchange::rotation(alpha, true), 7);
  CHECK(complexity(s, 7) == 8);
  CHECK(s.same_words(preset("fibonacci").generate(7)));
  auto u = factor_set(IntervalExchange::rotation(alpha, false), 4);
  CHECK_FALSE(u.certified());
}

TEST_CASE("regularity evidence") {
  const auto& t = *preset("golden-three-iet").iet;
  CHECK(regularity_evidence(t, 200).no_collision());
  // rational lengths: a separation point orbit comes back
  auto r = IntervalExchange::parse("a=1/3; b=1/3; c=1/3; order=c,b,a");
  auto ev = regularity_evidence(r, 50);
  CHECK_FALSE(ev.no_collision());
}
