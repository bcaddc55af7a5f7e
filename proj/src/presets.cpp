#include "wordlab/presets.hpp"

#include "wordlab/error.hpp"

namespace wordlab {

const char* to_string(PresetKind k) noexcept {
  switch (k) {
    case PresetKind::morphic: return "morphic";
    case PresetKind::iet: return "iet";
    case PresetKind::periodic: return "periodic";
    case PresetKind::finite: return "finite";
  }
  return "?";
}

FactorSet Preset::generate(std::size_t depth) const {
  switch (kind) {
    case PresetKind::morphic: return factor_set_of_fixed_point(*fixed_point, depth);
    case PresetKind::iet: return factor_set(*iet, depth);
    case PresetKind::periodic: return periodic_factor_set(alphabet, period, depth);
    case PresetKind::finite: return FactorSet::finite(alphabet, words);
  }
  throw Error(ErrorKind::internal, "unknown preset kind");
}

namespace {

Preset morphic(std::string name, std::string description, std::string_view rules, std::string_view seed,
               bool tree) {
  Preset p;
  p.name = std::move(name);
  p.description = std::move(description);
  p.kind = PresetKind::morphic;
  auto m = Morphism::parse(rules);
  p.alphabet = m.source();
  p.fixed_point = make_fixed_point(m, m.source().letter(seed));
  p.tree = tree;
  return p;
}

std::vector<Preset> build() {
  std::vector<Preset> out;
  out.push_back(morphic("fibonacci", "fixed point of a->ab, b->a", "a->ab; b->a", "a", true));
  out.push_back(morphic("tribonacci", "fixed point of a->ab, b->ac, c->a", "a->ab; b->ac; c->a", "a", true));
  out.push_back(morphic("tame-tree", "fixed point of a->ac, b->bac, c->cbac", "a->ac; b->bac; c->cbac", "a", true));
  out.push_back(
      morphic("tame-non-tree", "fixed point of a->ac, b->bac, c->cb", "a->ac; b->bac; c->cb", "a", false));
  out.push_back(morphic("golden-three-morphic", "fixed point of a->baccb, b->bacc, c->bacb from b",
                        "a->baccb; b->bacc; c->bacb", "b", true));
  {
    Preset p;
    p.name = "golden-three-iet";
    p.description = "3-interval exchange, lengths (-2+sqrt5, (3-sqrt5)/2, (3-sqrt5)/2), bottom order b,c,a";
    p.kind = PresetKind::iet;
    p.iet = IntervalExchange::parse("d=5; a=-2+1*sqrt(5); b=3/2-1/2*sqrt(5); c=3/2-1/2*sqrt(5); order=b,c,a; minimal");
    p.alphabet = p.iet->alphabet();
    p.tree = true;
    out.push_back(std::move(p));
  }
  {
    Preset p;
    p.name = "golden-rotation";
    p.description = "rotation by (3-sqrt5)/2 as a 2-interval exchange";
    p.kind = PresetKind::iet;
    p.iet = IntervalExchange::rotation(QuadraticNumber::parse("3/2-1/2*sqrt(5)"), true);
    p.alphabet = p.iet->alphabet();
    p.tree = true;
    out.push_back(std::move(p));
  }
  {
    Preset p;
    p.name = "ab-periodic";
    p.description = "factors of (ab)^*";
    p.kind = PresetKind::periodic;
    p.alphabet = Alphabet::letters("ab");
    p.period = p.alphabet.parse("ab");
    out.push_back(std::move(p));
  }
  {
    Preset p;
    p.name = "bifix-basis-factors";
    p.description = "factors of {ab, acb, acc}";
    p.kind = PresetKind::finite;
    p.alphabet = Alphabet::letters("abc");
    p.words = p.alphabet.parse_list("ab,acb,acc");
    out.push_back(std::move(p));
  }
  return out;
}

}  // namespace

const std::vector<Preset>& presets() {
  static const std::vector<Preset> all = build();
  return all;
}

const Preset& preset(std::string_view name) {
  for (const auto& p : presets())
    if (p.name == name) return p;
  throw Error(ErrorKind::not_found, "unknown preset '" + std::string(name) + "'");
}

}  // namespace wordlab
