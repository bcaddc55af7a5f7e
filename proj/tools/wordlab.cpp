// wordlab command line front end. Every command prints one JSON document
// (or DOT / text when asked) and exits 0 when all of its checks pass, 1 when
// some check fails, 2 on bad input and 3 on internal errors.

#include <CLI11.hpp>

#include <iostream>
#include <sstream>

#include "json_io.hpp"
#include "wordlab/decoding.hpp"
#include "wordlab/error.hpp"
#include "wordlab/presets.hpp"

namespace wl = wordlab;
using wl::cli::ordered_json;

namespace {

struct Source {
  std::string preset;
  std::string morphism;
  std::string seed;
  std::string iet;
  std::string period;
  std::string words;
  std::string alphabet;
  std::size_t depth = 12;
};

struct Output {
  std::string format = "json";
};

void add_source_options(CLI::App* app, Source& s, bool with_depth = true) {
  app->add_option("--preset", s.preset, "named set (see `wordlab presets`)");
  app->add_option("--morphism", s.morphism, "fixed point of a morphism, e.g. \"a->ab; b->a\"");
  app->add_option("--seed", s.seed, "letter the fixed point starts with (default: first letter)");
  app->add_option("--iet", s.iet, "interval exchange, e.g. \"d=5; a=...; b=...; order=b,a; minimal\"");
  app->add_option("--period", s.period, "factors of period^*");
  app->add_option("--words", s.words, "factors of a finite list of words");
  app->add_option("--alphabet", s.alphabet, "letters for --period / --words (default: as they occur)");
  if (with_depth) app->add_option("--depth", s.depth, "truncation depth")->check(CLI::PositiveNumber);
}

wl::Alphabet alphabet_for(const std::string& explicit_letters, const std::string& text) {
  if (!explicit_letters.empty()) return wl::Alphabet::letters(explicit_letters);
  std::string seen;
  for (char c : text)
    if (std::isalnum(static_cast<unsigned char>(c)) && seen.find(c) == std::string::npos) seen += c;
  std::sort(seen.begin(), seen.end());
  if (seen.empty()) throw wl::Error(wl::ErrorKind::parse, "cannot infer an alphabet from '" + text + "'");
  return wl::Alphabet::letters(seen);
}

int source_count(const Source& s) {
  return !s.preset.empty() + !s.morphism.empty() + !s.iet.empty() + !s.period.empty() + !s.words.empty();
}

std::optional<wl::FixedPointSpec> fixed_point_of(const Source& s) {
  if (!s.preset.empty()) return wl::preset(s.preset).fixed_point;
  if (!s.morphism.empty()) {
    auto m = wl::Morphism::parse(s.morphism);
    wl::Letter seed = s.seed.empty() ? wl::Letter{0} : m.source().letter(s.seed);
    return wl::make_fixed_point(m, seed);
  }
  return std::nullopt;
}

std::function<wl::FactorSet(std::size_t)> generator_of(const Source& s) {
  if (source_count(s) != 1)
    throw wl::Error(wl::ErrorKind::parse, "give exactly one of --preset, --morphism, --iet, --period, --words");
  if (!s.preset.empty()) {
    const auto& p = wl::preset(s.preset);
    return [&p](std::size_t d) { return p.generate(d); };
  }
  if (!s.morphism.empty()) {
    auto fp = *fixed_point_of(s);
    return [fp](std::size_t d) { return wl::factor_set_of_fixed_point(fp, d); };
  }
  if (!s.iet.empty()) {
    auto t = wl::IntervalExchange::parse(s.iet);
    return [t](std::size_t d) { return wl::factor_set(t, d); };
  }
  if (!s.period.empty()) {
    auto a = alphabet_for(s.alphabet, s.period);
    auto w = a.parse(s.period);
    return [a, w](std::size_t d) { return wl::periodic_factor_set(a, w, d); };
  }
  auto a = alphabet_for(s.alphabet, s.words);
  auto ws = a.parse_list(s.words);
  return [a, ws](std::size_t) { return wl::FactorSet::finite(a, ws); };
}

wl::FactorSet load(const Source& s) { return generator_of(s)(s.depth); }

std::optional<wl::IntervalExchange> iet_of(const Source& s) {
  if (!s.preset.empty()) return wl::preset(s.preset).iet;
  if (!s.iet.empty()) return wl::IntervalExchange::parse(s.iet);
  return std::nullopt;
}

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : text) {
    if (c == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

std::string trim(const std::string& s) {
  auto b = s.find_first_not_of(" \t");
  if (b == std::string::npos) return "";
  auto e = s.find_last_not_of(" \t");
  return s.substr(b, e - b + 1);
}

// "a:(1 2); b:(1 3)" with points 1..n; n is the largest point named unless
// `points` is larger.
std::vector<wl::Permutation> parse_actions(const wl::Alphabet& a, const std::string& text, std::size_t points) {
  std::vector<std::vector<std::vector<std::size_t>>> cycles(a.size());
  std::vector<char> given(a.size(), 0);
  std::size_t n = points;
  for (const auto& rule : split(text, ';')) {
    auto r = trim(rule);
    if (r.empty()) continue;
    auto colon = r.find(':');
    if (colon == std::string::npos) throw wl::Error(wl::ErrorKind::parse, "expected 'letter:(cycles)' in '" + r + "'");
    auto c = a.letter(trim(r.substr(0, colon)));
    given[c] = 1;
    std::string rest = r.substr(colon + 1);
    std::size_t pos = 0;
    while ((pos = rest.find('(', pos)) != std::string::npos) {
      auto close = rest.find(')', pos);
      if (close == std::string::npos) throw wl::Error(wl::ErrorKind::parse, "unbalanced cycle in '" + r + "'");
      std::istringstream in(rest.substr(pos + 1, close - pos - 1));
      std::vector<std::size_t> cyc;
      long p;
      while (in >> p) {
        if (p < 1) throw wl::Error(wl::ErrorKind::parse, "points are numbered from 1");
        cyc.push_back(static_cast<std::size_t>(p - 1));
        n = std::max(n, static_cast<std::size_t>(p));
      }
      cycles[c].push_back(cyc);
      pos = close + 1;
    }
  }
  for (std::size_t c = 0; c < a.size(); ++c)
    if (!given[c]) throw wl::Error(wl::ErrorKind::parse, "no action for letter '" + a.symbol(static_cast<wl::Letter>(c)) + "'");
  std::vector<wl::Permutation> out;
  for (const auto& cs : cycles) {
    wl::Permutation p(n);
    for (std::size_t i = 0; i < n; ++i) p[i] = i;
    for (const auto& cyc : cs)
      for (std::size_t i = 0; i < cyc.size(); ++i) p[cyc[i]] = cyc[(i + 1) % cyc.size()];
    out.push_back(p);
  }
  return out;
}

wl::SadicSequence parse_sequence(const std::string& text, std::size_t length) {
  std::vector<wl::Morphism> period;
  for (const auto& part : split(text, '|')) {
    auto t = trim(part);
    if (t.empty()) throw wl::Error(wl::ErrorKind::parse, "empty morphism in sequence");
    if (period.empty())
      period.push_back(wl::Morphism::parse(t));
    else
      period.push_back(wl::Morphism::parse(t, period.front().source()));
  }
  return wl::periodic_sequence(period, std::max(length, period.size()));
}

std::string render_text(const ordered_json& j, int indent = 0) {
  std::string pad(static_cast<std::size_t>(indent), ' ');
  std::string out;
  if (j.is_object()) {
    for (auto it = j.begin(); it != j.end(); ++it) {
      if (it->is_primitive() || (it->is_array() && std::all_of(it->begin(), it->end(),
                                                               [](const auto& e) { return e.is_primitive(); })))
        out += pad + it.key() + ": " + render_text(*it, 0) + "\n";
      else
        out += pad + it.key() + ":\n" + render_text(*it, indent + 2);
    }
    return out;
  }
  if (j.is_array()) {
    bool flat = std::all_of(j.begin(), j.end(), [](const auto& e) { return e.is_primitive(); });
    if (flat) {
      for (std::size_t i = 0; i < j.size(); ++i) out += (i ? " " : "") + render_text(j[i], 0);
      return out;
    }
    for (const auto& e : j) {
      bool leaf = e.is_primitive() ||
                  (e.is_array() && std::all_of(e.begin(), e.end(), [](const auto& x) { return x.is_primitive(); }));
      out += leaf ? pad + "- " + render_text(e, 0) + "\n" : pad + "-\n" + render_text(e, indent + 2);
    }
    return out;
  }
  if (j.is_string()) return j.get<std::string>();
  return j.dump();
}

struct Run {
  std::string command;
  ordered_json result = ordered_json::object();
  ordered_json checks = ordered_json::array();
  std::string dot;  // set by commands that have a graph

  void check(const std::string& name, bool passed, const std::string& detail = "") {
    checks.push_back({{"name", name}, {"passed", passed}, {"detail", detail}});
  }
  void add_report(const wl::Report& r) {
    for (const auto& c : r.checks) check(c.name, c.passed, c.detail);
    result["title"] = r.title;
    result["facts"] = wl::cli::report_facts_json(r);
  }
  bool passed() const {
    return std::all_of(checks.begin(), checks.end(), [](const auto& c) { return c["passed"].template get<bool>(); });
  }
};

int emit(const Run& run, const Output& out) {
  bool ok = run.passed();
  if (out.format == "dot") {
    if (run.dot.empty()) throw wl::Error(wl::ErrorKind::invalid_argument, "no graph output for '" + run.command + "'");
    std::cout << run.dot;
  } else {
    ordered_json doc{{"command", run.command}, {"ok", ok}, {"result", run.result}, {"checks", run.checks}};
    if (out.format == "text")
      std::cout << render_text(doc);
    else
      std::cout << doc.dump(2) << "\n";
  }
  return ok ? 0 : 1;
}

ordered_json word_list(const wl::Alphabet& a, const std::vector<wl::Word>& ws) { return wl::cli::words_json(a, ws); }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"wordlab: factor sets, return words, bifix codes and free-group certificates"};
  app.require_subcommand(1);
  app.fallthrough();
  Output out;
  app.add_option("--format", out.format, "json | text | dot")->check(CLI::IsMember({"json", "text", "dot"}));

  std::function<Run()> action;
  auto bind = [&](CLI::App* sub, std::function<Run()> f) {
    sub->callback([&action, f] { action = f; });
  };

  // presets
  auto* presets_cmd = app.add_subcommand("presets", "list the named sets");
  bind(presets_cmd, [] {
    Run r{"presets"};
    r.result["presets"] = ordered_json::array();
    for (const auto& p : wl::presets())
      r.result["presets"].push_back({{"name", p.name},
                                     {"kind", wl::to_string(p.kind)},
                                     {"alphabet", p.alphabet.symbols()},
                                     {"tree", p.tree},
                                     {"description", p.description}});
    return r;
  });

  // generate
  Source gen_src;
  std::size_t gen_prefix = 0;
  std::string gen_point;
  auto* gen = app.add_subcommand("generate", "truncated factor set, fixed point prefix or natural coding");
  add_source_options(gen, gen_src);
  gen->add_option("--prefix", gen_prefix, "emit this many letters of the fixed point / natural coding instead");
  gen->add_option("--point", gen_point, "starting point of the natural coding (default 0)");
  bind(gen, [&] {
    Run r{"generate"};
    if (gen_prefix > 0) {
      if (source_count(gen_src) != 1) throw wl::Error(wl::ErrorKind::parse, "give exactly one source");
      if (auto t = iet_of(gen_src)) {
        auto z = gen_point.empty() ? wl::QuadraticNumber(0) : wl::QuadraticNumber::parse(gen_point);
        r.result["kind"] = "natural-coding";
        r.result["point"] = z.to_string();
        r.result["word"] = t->alphabet().format(wl::natural_coding(*t, z, gen_prefix));
      } else if (auto fp = fixed_point_of(gen_src)) {
        r.result["kind"] = "fixed-point";
        r.result["word"] = fp->morphism.source().format(wl::fixed_point_prefix(*fp, gen_prefix));
      } else {
        throw wl::Error(wl::ErrorKind::invalid_argument, "--prefix needs a morphic or IET source");
      }
      r.result["length"] = gen_prefix;
      return r;
    }
    r.result["set"] = wl::cli::factor_set_json(load(gen_src));
    return r;
  });

  // analyze
  Source an_src;
  std::string an_checks, an_word;
  std::optional<std::size_t> an_up_to, an_rec_up_to;
  auto* an = app.add_subcommand("analyze", "complexity, extensions and the tree / recurrence conditions");
  add_source_options(an, an_src);
  an->add_option("--check", an_checks, "comma list of tree, acyclic, recurrence, uniform, complexity");
  an->add_option("--word", an_word, "report the extensions and extension graph of this word");
  an->add_option("--up-to", an_up_to, "bound for the tree / acyclic checks (default depth-2)");
  an->add_option("--recurrence-up-to", an_rec_up_to, "bound for the recurrence checks (default 1)");
  bind(an, [&] {
    Run r{"analyze"};
    auto s = load(an_src);
    const auto& a = s.alphabet();
    r.result["set"] = wl::cli::factor_set_json(s, false);
    if (!an_word.empty() || an->count("--word")) {
      auto w = a.parse(an_word);
      auto e = wl::extensions(s, w);
      auto g = wl::extension_graph(s, w);
      r.result["extensions"] = wl::cli::extension_json(a, e);
      r.result["speciality"] = wl::to_string(wl::is_special(s, w));
      r.result["graph"] = wl::cli::graph_json(a, g);
      r.dot = g.to_dot(a, "G");
    }
    std::size_t tree_bound = an_up_to.value_or(s.depth() >= 2 ? s.depth() - 2 : 0);
    std::size_t rec_bound = an_rec_up_to.value_or(1);
    for (const auto& raw : split(an_checks, ',')) {
      auto c = trim(raw);
      if (c.empty()) continue;
      if (c == "tree") {
        auto v = wl::is_tree_set(s, tree_bound);
        r.result["tree"] = wl::cli::tree_verdict_json(a, v);
        r.check("tree", v.passed, v.passed ? "" : "G(" + a.show(*v.witness) + ") " + wl::to_string(v.failure));
      } else if (c == "acyclic") {
        auto v = wl::is_acyclic_set(s, tree_bound);
        r.result["acyclic"] = wl::cli::tree_verdict_json(a, v);
        r.check("acyclic", v.passed, v.passed ? "" : "G(" + a.show(*v.witness) + ") has a cycle");
      } else if (c == "recurrence") {
        auto v = wl::is_recurrent_desk(s, rec_bound);
        r.result["recurrence"] = wl::cli::recurrence_json(a, v);
        r.check("recurrence", v.passed,
                v.passed ? "" : a.show(v.witness->first) + " and " + a.show(v.witness->second) + " never co-occur");
      } else if (c == "uniform") {
        auto v = wl::uniform_recurrence_check(s, rec_bound);
        r.result["uniform"] = wl::cli::uniform_json(a, v);
        r.check("uniform", v.passed, v.passed ? "" : a.show(*v.witness) + ": " + v.reason);
      } else if (c == "complexity") {
        std::size_t k = s.letters().size();
        bool ok = true;
        std::string detail;
        for (std::size_t n = 0; n <= s.depth() && ok; ++n) {
          auto p = wl::complexity(s, n);
          if (k == 0 || p != (k - 1) * n + 1) {
            ok = false;
            detail = "p_" + std::to_string(n) + " = " + std::to_string(p);
          }
        }
        r.check("complexity", ok, ok ? "p_n = " + std::to_string(k ? k - 1 : 0) + "n+1" : detail);
      } else {
        throw wl::Error(wl::ErrorKind::parse, "unknown check '" + c + "'");
      }
    }
    return r;
  });

  // returns
  Source rt_src;
  std::string rt_word;
  bool rt_derived = false;
  auto* rt = app.add_subcommand("returns", "return words, first returns and derived sets");
  add_source_options(rt, rt_src);
  rt->add_option("--word", rt_word, "base word")->required();
  rt->add_flag("--derived", rt_derived, "also compute the derived set");
  bind(rt, [&] {
    Run r{"returns"};
    auto s = load(rt_src);
    const auto& a = s.alphabet();
    auto w = a.parse(rt_word);
    auto rd = wl::return_words(s, w);
    r.result["returns"] = wl::cli::returns_json(a, rd);
    r.check("returns certified", rd.complete,
            rd.complete ? "" : "no certificate at depth " + std::to_string(s.depth()));
    if (rd.complete) {
      auto cj = wl::left_right_conjugation(rd);
      r.check("w R = R' w", cj.holds);
    }
    if (rt_derived && rd.complete) {
      auto d = wl::derived_set(s, w);
      r.result["derived"] = {{"coding", wl::cli::morphism_json(d.coding)},
                             {"set", wl::cli::factor_set_json(d.set)}};
    }
    return r;
  });

  // code
  auto* code = app.add_subcommand("code", "bifix codes, degrees, composition and group codes");
  code->require_subcommand(1);

  Source cc_src;
  std::string cc_code;
  auto* cc = code->add_subcommand("check", "prefix / suffix / bifix / code, and S-maximality with a source");
  add_source_options(cc, cc_src);
  cc->add_option("--code", cc_code, "comma list of words")->required();
  bind(cc, [&] {
    Run r{"code check"};
    bool with_source = source_count(cc_src) > 0;
    auto s = with_source ? std::optional<wl::FactorSet>(load(cc_src)) : std::nullopt;
    auto a = s ? s->alphabet() : alphabet_for(cc_src.alphabet, cc_code);
    auto X = wl::CodeSet::parse(a, cc_code);
    r.result["code"] = X.format();
    r.result["prefix"] = wl::is_prefix_code(X.words());
    r.result["suffix"] = wl::is_suffix_code(X.words());
    r.result["bifix"] = wl::is_bifix_code(X.words());
    r.result["code_property"] = wl::is_code(X.words());
    if (s) {
      r.result["s_maximal_prefix"] = wl::is_s_maximal_prefix(X.words(), *s);
      r.result["s_maximal_suffix"] = wl::is_s_maximal_suffix(X.words(), *s);
      if (wl::is_bifix_code(X.words())) r.result["s_maximal_bifix"] = wl::is_s_maximal_bifix(X.words(), *s);
    }
    return r;
  });

  Source cd_src;
  std::string cd_code, cd_word;
  auto* cd = code->add_subcommand("degree", "S-degree, kernel and internal factors");
  add_source_options(cd, cd_src);
  cd->add_option("--code", cd_code, "comma list of words")->required();
  cd->add_option("--word", cd_word, "also list the parses of this word");
  bind(cd, [&] {
    Run r{"code degree"};
    auto s = load(cd_src);
    const auto& a = s.alphabet();
    auto X = wl::CodeSet::parse(a, cd_code);
    r.result["code"] = X.format();
    r.result["degree"] = wl::s_degree(X, s);
    r.result["kernel"] = wl::kernel(X, s).format();
    r.result["internal_factors"] = word_list(a, wl::internal_factors(X, s));
    if (cd->count("--word")) {
      auto w = a.parse(cd_word);
      ordered_json ps = ordered_json::array();
      for (const auto& p : wl::parses(X, w)) ps.push_back({a.format(p.v), a.format(p.x), a.format(p.u)});
      r.result["parses"] = ps;
      std::size_t n1 = ps.size(), n2 = wl::parse_count_by_suffixes(X.words(), w),
                  n3 = wl::parse_count_by_prefixes(X.words(), w);
      r.check("parse counts agree", n1 == n2 && n2 == n3,
              std::to_string(n1) + "/" + std::to_string(n2) + "/" + std::to_string(n3));
    }
    return r;
  });

  std::string co_code, co_coding, co_alphabet;
  auto* co = code->add_subcommand("compose", "X = f(Y)");
  co->add_option("--code", co_code, "Y, over the source letters of the coding")->required();
  co->add_option("--coding", co_coding, "f, e.g. \"u->a; v->baab; w->bab\"")->required();
  co->add_option("--alphabet", co_alphabet, "target letters of f (default: as they occur)");
  bind(co, [&] {
    Run r{"code compose"};
    // the target letters are read from the right-hand sides
    std::string rhs;
    for (const auto& rule : split(co_coding, ';')) {
      auto arrow = rule.find("->");
      if (arrow != std::string::npos) rhs += rule.substr(arrow + 2);
    }
    auto target = alphabet_for(co_alphabet, rhs);
    auto f = wl::Morphism::parse(co_coding, target);
    auto Y = wl::CodeSet::parse(f.source(), co_code);
    auto X = wl::compose_codes(Y, f);
    r.result["coding"] = wl::cli::morphism_json(f);
    r.result["Y"] = Y.format();
    r.result["X"] = X.format();
    return r;
  });

  std::string dc_code, dc_over, dc_letters, dc_alphabet;
  auto* dc = code->add_subcommand("decompose", "find Y and f with X = f(Y), f coding Z");
  dc->add_option("--code", dc_code, "X")->required();
  dc->add_option("--over", dc_over, "Z")->required();
  dc->add_option("--letters", dc_letters, "letters for Z, one per word in sorted order (default z0, z1, ...)");
  dc->add_option("--alphabet", dc_alphabet, "letters of X and Z");
  bind(dc, [&] {
    Run r{"code decompose"};
    auto a = alphabet_for(dc_alphabet, dc_code + "," + dc_over);
    auto X = wl::CodeSet::parse(a, dc_code);
    auto Z = wl::CodeSet::parse(a, dc_over);
    std::optional<wl::Alphabet> letters;
    if (!dc_letters.empty()) letters = wl::Alphabet::letters(dc_letters);
    auto d = wl::decompose_over(X, Z, letters);
    r.result["possible"] = d.possible;
    if (d.possible) {
      r.result["Y"] = d.Y.format();
      r.result["coding"] = wl::cli::morphism_json(d.f);
    } else {
      r.result["reason"] = d.reason;
    }
    r.check("decomposition", d.possible, d.reason);
    return r;
  });

  std::string ca_code, ca_alphabet;
  auto* ca = code->add_subcommand("automaton", "minimal automaton of X* for a prefix code X");
  ca->add_option("--code", ca_code, "X")->required();
  ca->add_option("--alphabet", ca_alphabet, "letters");
  bind(ca, [&] {
    Run r{"code automaton"};
    auto a = alphabet_for(ca_alphabet, ca_code);
    auto X = wl::CodeSet::parse(a, ca_code);
    auto m = wl::minimal_automaton_of_star(X);
    r.result["automaton"] = wl::cli::automaton_json(a, m);
    r.dot = m.to_dot(a, "A");
    return r;
  });

  Source cg_src;
  std::string cg_action;
  std::size_t cg_points = 0, cg_cyclic = 0, cg_base = 0;
  bool cg_regular = false;
  auto* cg = code->add_subcommand("groupcode", "X = Z ∩ S for the group code Z of a permutation action");
  add_source_options(cg, cg_src);
  cg->add_option("--action", cg_action, "per-letter permutations in cycle notation, e.g. \"a:(1 2); b:(1 3)\"");
  cg->add_option("--points", cg_points, "number of points acted on (default: largest named)");
  cg->add_option("--cyclic", cg_cyclic, "every letter acts as +1 on Z/n");
  cg->add_option("--base", cg_base, "base point, numbered from 1 (default 1)");
  cg->add_flag("--regular", cg_regular, "use the regular representation of the generated group");
  bind(cg, [&] {
    Run r{"code groupcode"};
    auto s = load(cg_src);
    const auto& a = s.alphabet();
    std::vector<wl::Permutation> acts;
    if (cg_cyclic > 0)
      acts = wl::length_mod_action(a.size(), cg_cyclic);
    else if (!cg_action.empty())
      acts = parse_actions(a, cg_action, cg_points);
    else
      throw wl::Error(wl::ErrorKind::parse, "give --action or --cyclic");
    std::size_t base = cg_base > 0 ? cg_base - 1 : 0;
    auto g = cg_regular ? wl::regular_representation(acts) : wl::group_automaton(acts, base);
    auto X = wl::group_code_intersection(g, s);
    auto folded = wl::fold(X.words(), a.size());
    r.result["states"] = g.automaton.state_count();
    r.result["code"] = X.format();
    r.result["folded"] = wl::cli::folded_json(a, folded);
    r.dot = folded.to_dot(a, "H");
    r.check("folded index equals automaton size",
            folded.index() && *folded.index() == g.automaton.state_count(),
            folded.index() ? std::to_string(*folded.index()) : "infinite");
    return r;
  });

  // fg
  auto* fg = app.add_subcommand("fg", "free group: folding, index, bases, tame decompositions");
  fg->require_subcommand(1);
  std::string fg_words, fg_alphabet, fg_element;
  auto fg_opts = [&](CLI::App* c, const char* opt) {
    c->add_option(opt, fg_words, "comma list of (signed) words, e.g. \"ab,c^-1b\"")->required();
    c->add_option("--alphabet", fg_alphabet, "letters (default: as they occur)");
  };
  auto fg_load = [&] {
    auto a = alphabet_for(fg_alphabet, fg_words);
    return std::make_pair(a, wl::parse_signed_list(a, fg_words));
  };
  auto* ff = fg->add_subcommand("fold", "folded graph of the generated subgroup");
  fg_opts(ff, "--words");
  ff->add_option("--element", fg_element, "also test membership of this element");
  bind(ff, [&] {
    Run r{"fg fold"};
    auto [a, X] = fg_load();
    auto g = wl::fold(X, a.size());
    r.result["folded"] = wl::cli::folded_json(a, g);
    if (!fg_element.empty()) r.result["member"] = g.contains(wl::parse_signed(a, fg_element));
    r.dot = g.to_dot(a, "H");
    return r;
  });
  auto* fi = fg->add_subcommand("index", "rank and index of the generated subgroup");
  fg_opts(fi, "--words");
  bind(fi, [&] {
    Run r{"fg index"};
    auto [a, X] = fg_load();
    auto ri = wl::rank_and_index(wl::fold(X, a.size()));
    r.result["rank"] = ri.rank;
    if (ri.index)
      r.result["index"] = *ri.index;
    else
      r.result["index"] = "infinite";
    if (ri.index) {
      std::size_t expected = *ri.index * (a.size() - 1) + 1;
      r.check("Schreier rank formula", ri.rank == expected,
              std::to_string(ri.rank) + " vs " + std::to_string(expected));
    }
    return r;
  });
  auto* fb = fg->add_subcommand("basis", "is the set a basis of the free group");
  fg_opts(fb, "--words");
  bind(fb, [&] {
    Run r{"fg basis"};
    auto [a, X] = fg_load();
    bool b = wl::is_basis(X, a.size());
    r.result["basis"] = b;
    r.check("basis", b);
    return r;
  });
  auto* ft = fg->add_subcommand("tame", "greedy decomposition of a positive basis into elementary automorphisms");
  fg_opts(ft, "--basis");
  bind(ft, [&] {
    Run r{"fg tame"};
    auto [a, X] = fg_load();
    std::vector<wl::Word> pos;
    for (const auto& x : X) pos.push_back(wl::to_positive(x));
    auto t = wl::tame_decompose(pos, a);
    r.result = wl::cli::tame_json(a, t);
    r.check("tame", t.verdict == wl::TameVerdict::tame, wl::to_string(t.verdict));
    if (t.verdict == wl::TameVerdict::tame) r.check("replay", t.replay_verified);
    return r;
  });

  // decode
  Source de_src;
  std::string de_coding;
  std::size_t de_depth = 0;
  auto* de = app.add_subcommand("decode", "maximal bifix decoding f^-1(S)");
  add_source_options(de, de_src);
  de->add_option("--coding", de_coding, "f, e.g. \"x->aa; y->ab\"")->required();
  de->add_option("--out-depth", de_depth, "decoded depth (default: as deep as the source allows)");
  bind(de, [&] {
    Run r{"decode"};
    auto s = load(de_src);
    auto f = wl::Morphism::parse(de_coding, s.alphabet());
    auto t = wl::max_bifix_decode({s, f, de_depth});
    r.result["coding"] = wl::cli::morphism_json(f);
    r.result["set"] = wl::cli::factor_set_json(t);
    return r;
  });

  // verify
  auto* vf = app.add_subcommand("verify", "theorem harnesses");
  vf->require_subcommand(1);

  Source vt_src;
  std::string vt_coding;
  std::optional<std::size_t> vt_tree, vt_rec, vt_cx;
  auto* vt = vf->add_subcommand("tree-closure", "decoded set of a tree set is a uniformly recurrent tree set");
  add_source_options(vt, vt_src);
  vt->add_option("--coding", vt_coding, "f")->required();
  vt->add_option("--tree-up-to", vt_tree);
  vt->add_option("--recurrence-up-to", vt_rec);
  vt->add_option("--complexity-up-to", vt_cx);
  bind(vt, [&] {
    Run r{"verify tree-closure"};
    auto s = load(vt_src);
    auto f = wl::Morphism::parse(vt_coding, s.alphabet());
    r.add_report(wl::verify_main_theorem({s, f, 0}, {vt_tree, vt_rec, vt_cx}));
    return r;
  });

  Source vd_src;
  std::string vd_code, vd_over, vd_letters;
  auto* vd = vf->add_subcommand("degree-mult", "d_X(S) = d_Y(T) d_Z(S)");
  add_source_options(vd, vd_src);
  vd->add_option("--code", vd_code, "X")->required();
  vd->add_option("--over", vd_over, "Z")->required();
  vd->add_option("--letters", vd_letters, "letters for Z");
  bind(vd, [&] {
    Run r{"verify degree-mult"};
    auto s = load(vd_src);
    auto X = wl::CodeSet::parse(s.alphabet(), vd_code);
    auto Z = wl::CodeSet::parse(s.alphabet(), vd_over);
    std::optional<wl::Alphabet> letters;
    if (!vd_letters.empty()) letters = wl::Alphabet::letters(vd_letters);
    r.add_report(wl::degree_multiplicativity(s, X, Z, letters));
    return r;
  });

  Source vg_src;
  std::string vg_action, vg_samples;
  std::size_t vg_points = 0, vg_cyclic = 0;
  auto* vg = vf->add_subcommand("group-morphism", "phi(S) = G and phi(Gamma(w) + 1) = G");
  add_source_options(vg, vg_src);
  vg->add_option("--action", vg_action, "per-letter permutations in cycle notation");
  vg->add_option("--points", vg_points);
  vg->add_option("--cyclic", vg_cyclic, "every letter acts as +1 on Z/n");
  vg->add_option("--sample", vg_samples, "comma list of words w");
  bind(vg, [&] {
    Run r{"verify group-morphism"};
    auto s = load(vg_src);
    const auto& a = s.alphabet();
    std::vector<wl::Permutation> acts;
    if (vg_cyclic > 0)
      acts = wl::length_mod_action(a.size(), vg_cyclic);
    else if (!vg_action.empty())
      acts = parse_actions(a, vg_action, vg_points);
    else
      throw wl::Error(wl::ErrorKind::parse, "give --action or --cyclic");
    r.add_report(wl::verify_group_morphism_props(s, acts, vg_samples.empty() ? std::vector<wl::Word>{}
                                                                              : a.parse_list(vg_samples)));
    return r;
  });

  Source vm_src;
  std::string vm_code, vm_coding;
  auto* vm = vf->add_subcommand("maximality-transfer", "maximality of X = f(Y) against Y and Z");
  add_source_options(vm, vm_src);
  vm->add_option("--code", vm_code, "Y, over the source letters of f")->required();
  vm->add_option("--coding", vm_coding, "f")->required();
  bind(vm, [&] {
    Run r{"verify maximality-transfer"};
    auto s = load(vm_src);
    auto f = wl::Morphism::parse(vm_coding, s.alphabet());
    auto Y = wl::CodeSet::parse(f.source(), vm_code);
    r.add_report(wl::maximality_transfer_check(Y, f, s));
    return r;
  });

  Source vs_src;
  std::string vs_code;
  auto* vs = vf->add_subcommand("saturation", "X^* ∩ S = <X> ∩ S");
  add_source_options(vs, vs_src);
  vs->add_option("--code", vs_code, "X")->required();
  bind(vs, [&] {
    Run r{"verify saturation"};
    auto s = load(vs_src);
    auto X = wl::CodeSet::parse(s.alphabet(), vs_code);
    auto v = wl::saturation_check(X, s);
    r.result["checked"] = v.checked;
    r.check("saturation", v.passed, v.witness ? "witness " + s.alphabet().show(*v.witness) : "");
    return r;
  });

  Source vr_src;
  std::size_t vr_iterations = 1000;
  auto* vr = vf->add_subcommand("regularity", "orbits of the separation points of an interval exchange");
  add_source_options(vr, vr_src, false);
  vr->add_option("--iterations", vr_iterations);
  bind(vr, [&] {
    Run r{"verify regularity"};
    auto t = iet_of(vr_src);
    if (!t) throw wl::Error(wl::ErrorKind::invalid_argument, "regularity needs an interval exchange source");
    auto ev = wl::regularity_evidence(*t, vr_iterations);
    r.result["iterations"] = ev.iterations;
    r.result["separation_points"] = ordered_json::array();
    for (const auto& p : t->separation_points()) r.result["separation_points"].push_back(p.to_string());
    std::string detail;
    if (ev.collision)
      detail = "T^" + std::to_string(ev.collision->step_a) + "(point " + std::to_string(ev.collision->point_a) +
               ") = T^" + std::to_string(ev.collision->step_b) + "(point " + std::to_string(ev.collision->point_b) +
               ") = " + ev.collision->value.to_string();
    r.check("no orbit collision", ev.no_collision(), detail);
    return r;
  });

  // sadic
  auto* sa = app.add_subcommand("sadic", "S-adic representations from return words");
  sa->require_subcommand(1);

  Source se_src;
  std::size_t se_steps = 4;
  std::string se_seeds;
  auto* se = sa->add_subcommand("extract", "elementary S-adic representation of a tree set");
  add_source_options(se, se_src, false);
  se->add_option("--steps", se_steps)->check(CLI::PositiveNumber);
  se->add_option("--seeds", se_seeds, "comma list of seed letters, cycled (default: first letter)");
  auto extract = [&](const Source& src, std::size_t steps, const std::string& seeds) {
    if (source_count(src) != 1) throw wl::Error(wl::ErrorKind::parse, "give exactly one source");
    wl::CoverSource cover;
    wl::Alphabet a;
    if (auto fp = fixed_point_of(src)) {
      cover = wl::cover_source(*fp);
      a = fp->morphism.source();
    } else {
      auto gen = generator_of(src);
      cover = wl::cover_source(gen);
      a = gen(1).alphabet();
    }
    wl::SadicOptions opt;
    for (const auto& sd : split(seeds, ','))
      if (!trim(sd).empty()) opt.seeds.push_back(a.letter(trim(sd)));
    return wl::sadic_extract(cover, a, steps, opt);
  };
  bind(se, [&] {
    Run r{"sadic extract"};
    auto seq = extract(se_src, se_steps, se_seeds);
    r.result = wl::cli::sadic_json(seq);
    for (std::size_t n = 0; n < seq.provenance.size(); ++n) {
      const auto& p = seq.provenance[n];
      r.check("sigma_" + std::to_string(n) + " basis", p.basis);
      r.check("sigma_" + std::to_string(n) + " tame", p.decomposition.verdict == wl::TameVerdict::tame &&
                                                          p.decomposition.replay_verified,
              wl::to_string(p.decomposition.verdict));
    }
    return r;
  });

  Source sr_src;
  std::size_t sr_steps = 4, sr_n = 0, sr_length = 0;
  std::string sr_sequence;
  bool sr_n_given = false;
  auto* sr = sa->add_subcommand("replay", "Fac(sigma_0...sigma_n(A^*)) truncated");
  add_source_options(sr, sr_src);
  sr->add_option("--sequence", sr_sequence, "periodic sequence \"m0 | m1 | ...\" instead of extraction");
  sr->add_option("--length", sr_length, "number of terms of the periodic sequence");
  sr->add_option("--steps", sr_steps, "extraction steps when a source is given")->check(CLI::PositiveNumber);
  sr->add_option("--n", sr_n, "index of the last morphism used (default: last)");
  bind(sr, [&] {
    Run r{"sadic replay"};
    sr_n_given = sr->count("--n") > 0;
    wl::SadicSequence seq;
    bool have_source = source_count(sr_src) > 0;
    if (!sr_sequence.empty())
      seq = parse_sequence(sr_sequence, sr_length);
    else if (have_source)
      seq = extract(sr_src, sr_steps, "");
    else
      throw wl::Error(wl::ErrorKind::parse, "give --sequence or a source to extract from");
    std::size_t n = sr_n_given ? sr_n : seq.morphisms.size() - 1;
    auto rep = wl::sadic_replay(seq, n, sr_src.depth);
    r.result["n"] = n;
    r.result["stable_from"] = rep.stable_from;
    r.result["set"] = wl::cli::factor_set_json(rep.set);
    if (have_source) {
      auto s = load(sr_src);
      r.check("replay equals source", rep.set.same_words(s));
    }
    return r;
  });

  std::string sp_sequence;
  std::size_t sp_length = 0, sp_r = 0, sp_horizon = 12;
  auto* sp = sa->add_subcommand("primitivity", "least s with every letter in every sigma_r...sigma_{s-1}(a)");
  sp->add_option("--sequence", sp_sequence, "periodic sequence \"m0 | m1 | ...\"")->required();
  sp->add_option("--length", sp_length);
  sp->add_option("--r", sp_r);
  sp->add_option("--horizon", sp_horizon);
  bind(sp, [&] {
    Run r{"sadic primitivity"};
    auto seq = parse_sequence(sp_sequence, std::max(sp_length, sp_horizon));
    auto v = wl::primitivity_of_sequence(seq, sp_r, sp_horizon);
    r.result["r"] = sp_r;
    r.result["horizon"] = sp_horizon;
    if (v.found) r.result["s"] = v.s;
    r.check("primitive at r", v.found, v.found ? "s = " + std::to_string(v.s) : "not within horizon");
    return r;
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 2;
  }

  auto fail = [&](const std::string& kind, const std::string& message, int code) {
    if (out.format == "json") {
      ordered_json doc{{"command", "error"}, {"ok", false}, {"error", {{"kind", kind}, {"message", message}}}};
      std::cout << doc.dump(2) << "\n";
    }
    std::cerr << "wordlab: " << message << "\n";
    return code;
  };
  try {
    if (!action) return 2;
    return emit(action(), out);
  } catch (const wl::Error& e) {
    return fail(wl::to_string(e.kind()), e.what(), e.kind() == wl::ErrorKind::internal ? 3 : 2);
  } catch (const std::exception& e) {
    return fail("internal", e.what(), 3);
  }
}
