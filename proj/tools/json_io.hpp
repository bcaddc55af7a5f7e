#pragma once

#include <json.hpp>

#include "wordlab/automaton.hpp"
#include "wordlab/code.hpp"
#include "wordlab/extension.hpp"
#include "wordlab/free_group.hpp"
#include "wordlab/iet.hpp"
#include "wordlab/morphism.hpp"
#include "wordlab/report.hpp"
#include "wordlab/returns.hpp"
#include "wordlab/sadic.hpp"
#include "wordlab/tame.hpp"

namespace wordlab::cli {

using nlohmann::ordered_json;

ordered_json words_json(const Alphabet& a, const std::vector<Word>& ws);
ordered_json morphism_json(const Morphism& m);
ordered_json factor_set_json(const FactorSet& s, bool list_words = true);
ordered_json extension_json(const Alphabet& a, const ExtensionRecord& e);
ordered_json graph_json(const Alphabet& a, const ExtensionGraph& g);
ordered_json tree_verdict_json(const Alphabet& a, const TreeVerdict& v);
ordered_json recurrence_json(const Alphabet& a, const RecurrenceVerdict& v);
ordered_json uniform_json(const Alphabet& a, const UniformRecurrenceVerdict& v);
ordered_json returns_json(const Alphabet& a, const ReturnData& rd);
ordered_json folded_json(const Alphabet& a, const FoldedGraph& g);
ordered_json automaton_json(const Alphabet& a, const DeterministicAutomaton& m);
ordered_json tame_json(const Alphabet& a, const TameResult& t);
ordered_json step_json(const Alphabet& a, const TameStep& s);
ordered_json report_checks_json(const Report& r);
ordered_json report_facts_json(const Report& r);
ordered_json sadic_json(const SadicSequence& seq);

}  // namespace wordlab::cli
