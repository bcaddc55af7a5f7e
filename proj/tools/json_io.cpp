#include "json_io.hpp"

namespace wordlab::cli {

ordered_json words_json(const Alphabet& a, const std::vector<Word>& ws) {
  ordered_json out = ordered_json::array();
  for (const auto& w : ws) out.push_back(a.format(w));
  return out;
}

ordered_json morphism_json(const Morphism& m) {
  ordered_json images = ordered_json::object();
  for (std::size_t c = 0; c < m.source().size(); ++c)
    images[m.source().symbol(static_cast<Letter>(c))] = m.target().format(m.image(static_cast<Letter>(c)));
  return {{"text", m.to_string()}, {"images", images}};
}

ordered_json factor_set_json(const FactorSet& s, bool list_words) {
  ordered_json out;
  out["alphabet"] = s.alphabet().symbols();
  out["depth"] = s.depth();
  out["completeness"] = to_string(s.completeness());
  out["provenance"] = to_string(s.provenance());
  out["exhaustive"] = s.exhaustive();
  ordered_json counts = ordered_json::array();
  for (std::size_t n = 0; n <= s.depth(); ++n) counts.push_back(s.words_of_length(n).size());
  out["counts"] = counts;
  if (list_words) {
    ordered_json by_length = ordered_json::array();
    for (std::size_t n = 0; n <= s.depth(); ++n) by_length.push_back(words_json(s.alphabet(), s.words_of_length(n)));
    out["words"] = by_length;
  }
  return out;
}

namespace {
ordered_json letters_json(const Alphabet& a, const std::vector<Letter>& ls) {
  ordered_json out = ordered_json::array();
  for (Letter c : ls) out.push_back(a.symbol(c));
  return out;
}
}  // namespace

ordered_json extension_json(const Alphabet& a, const ExtensionRecord& e) {
  ordered_json pairs = ordered_json::array();
  for (auto [l, r] : e.pairs) pairs.push_back({a.symbol(l), a.symbol(r)});
  return {{"word", a.format(e.word)},
          {"left", letters_json(a, e.left)},
          {"right", letters_json(a, e.right)},
          {"pairs", pairs},
          {"l", e.l()},
          {"r", e.r()},
          {"e", e.e()}};
}

ordered_json graph_json(const Alphabet& a, const ExtensionGraph& g) {
  ordered_json edges = ordered_json::array();
  for (auto [l, r] : g.edges) edges.push_back({a.format(g.left[l]), a.format(g.right[r])});
  return {{"left", words_json(a, g.left)},
          {"right", words_json(a, g.right)},
          {"edges", edges},
          {"connected", g.is_connected()},
          {"acyclic", g.is_acyclic()},
          {"tree", g.is_tree()}};
}

ordered_json tree_verdict_json(const Alphabet& a, const TreeVerdict& v) {
  ordered_json out{{"passed", v.passed}, {"up_to", v.up_to}};
  if (v.witness) {
    out["witness"] = a.format(*v.witness);
    out["failure"] = to_string(v.failure);
  }
  return out;
}

ordered_json recurrence_json(const Alphabet& a, const RecurrenceVerdict& v) {
  ordered_json out{{"passed", v.passed}, {"up_to", v.up_to}, {"search_bound", v.search_bound},
                   {"definitive", v.definitive}};
  if (v.witness) out["witness"] = {a.format(v.witness->first), a.format(v.witness->second)};
  return out;
}

ordered_json uniform_json(const Alphabet& a, const UniformRecurrenceVerdict& v) {
  ordered_json out{{"passed", v.passed}, {"up_to", v.up_to}, {"max_certificate", v.max_certificate}};
  if (v.witness) {
    out["witness"] = a.format(*v.witness);
    out["reason"] = v.reason;
  }
  return out;
}

ordered_json returns_json(const Alphabet& a, const ReturnData& rd) {
  return {{"word", a.format(rd.base)},
          {"complete", rd.complete},
          {"certificate_length", rd.certificate_length},
          {"first_returns", words_json(a, rd.first_returns)},
          {"first_returns_left", words_json(a, rd.first_returns_left)},
          {"max_return_length", rd.max_return_length}};
}

ordered_json folded_json(const Alphabet& a, const FoldedGraph& g) {
  ordered_json edges = ordered_json::array();
  for (const auto& e : g.edges()) edges.push_back({e.from, a.symbol(e.letter), e.to});
  auto ri = rank_and_index(g);
  ordered_json out{{"vertices", g.vertex_count()}, {"edges", edges}, {"rank", ri.rank},
                   {"complete", g.is_complete()}};
  if (ri.index)
    out["index"] = *ri.index;
  else
    out["index"] = "infinite";
  out["rose"] = g.is_rose();
  return out;
}

ordered_json automaton_json(const Alphabet& a, const DeterministicAutomaton& m) {
  ordered_json edges = ordered_json::array();
  for (std::size_t p = 0; p < m.state_count(); ++p)
    for (std::size_t c = 0; c < m.alphabet_size(); ++c) {
      auto q = m.next(p, static_cast<Letter>(c));
      if (q != DeterministicAutomaton::none) edges.push_back({p, a.symbol(static_cast<Letter>(c)), q});
    }
  return {{"states", m.state_count()},
          {"initial", m.initial()},
          {"terminals", m.terminals()},
          {"transitions", edges},
          {"simple", m.is_simple()},
          {"group", m.is_group_automaton()}};
}

ordered_json step_json(const Alphabet& a, const TameStep& s) {
  ordered_json out{{"kind", to_string(s.kind)}};
  if (s.kind == StepKind::permutation) {
    ordered_json map = ordered_json::object();
    for (std::size_t i = 0; i < s.map.size(); ++i) map[a.symbol(static_cast<Letter>(i))] = a.symbol(s.map[i]);
    out["map"] = map;
  } else {
    out["a"] = a.symbol(s.a);
    out["b"] = a.symbol(s.b);
  }
  return out;
}

ordered_json tame_json(const Alphabet& a, const TameResult& t) {
  ordered_json steps = ordered_json::array();
  for (const auto& s : t.steps) steps.push_back(step_json(a, s));
  ordered_json out{{"verdict", to_string(t.verdict)}, {"steps", steps}, {"replay_verified", t.replay_verified}};
  if (!t.assignment.empty()) out["assignment"] = words_json(a, t.assignment);
  if (!t.stuck.empty()) out["stuck"] = words_json(a, t.stuck);
  return out;
}

ordered_json report_checks_json(const Report& r) {
  ordered_json out = ordered_json::array();
  for (const auto& c : r.checks) out.push_back({{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
  return out;
}

ordered_json report_facts_json(const Report& r) {
  ordered_json out = ordered_json::object();
  for (const auto& [k, v] : r.facts) out[k] = v;
  return out;
}

ordered_json sadic_json(const SadicSequence& seq) {
  ordered_json steps = ordered_json::array();
  for (std::size_t n = 0; n < seq.morphisms.size(); ++n) {
    ordered_json s{{"n", n}, {"morphism", morphism_json(seq.morphisms[n])}};
    if (n < seq.provenance.size()) {
      const auto& p = seq.provenance[n];
      s["seed"] = seq.alphabet.symbol(p.seed);
      s["base_length"] = p.base.size();
      s["base"] = seq.alphabet.format(p.base);
      s["return_lengths"] = [&] {
        ordered_json l = ordered_json::array();
        for (const auto& r : p.returns) l.push_back(r.size());
        return l;
      }();
      s["source_depth"] = p.source_depth;
      s["certificate"] = p.certificate;
      s["basis"] = p.basis;
      s["decomposition"] = tame_json(seq.alphabet, p.decomposition);
    }
    steps.push_back(s);
  }
  return {{"alphabet", seq.alphabet.symbols()}, {"steps", steps}};
}

}  // namespace wordlab::cli
