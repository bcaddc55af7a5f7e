#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "wordlab/factor_set.hpp"

namespace wordlab {

struct ExtensionRecord {
  Word word;
  std::vector<Letter> left;
  std::vector<Letter> right;
  std::vector<std::pair<Letter, Letter>> pairs;

  std::size_t l() const noexcept { return left.size(); }
  std::size_t r() const noexcept { return right.size(); }
  std::size_t e() const noexcept { return pairs.size(); }
};

enum class Speciality { none, left_special, right_special, bispecial };
const char* to_string(Speciality s) noexcept;

// L(w), R(w), E(w) by membership queries. Needs |w| + 2 <= depth
// (or an exhaustive set).
ExtensionRecord extensions(const FactorSet& s, const Word& w);
Speciality is_special(const FactorSet& s, const Word& w);

/// Bipartite graph; left and right vertex sets are disjoint copies even when
/// they carry the same labels.
class ExtensionGraph {
 public:
  std::vector<Word> left;
  std::vector<Word> right;
  std::vector<std::pair<std::size_t, std::size_t>> edges;  // (left index, right index)

  std::size_t vertex_count() const noexcept { return left.size() + right.size(); }
  std::size_t component_count() const;
  bool is_connected() const;  // false on the empty graph
  bool is_acyclic() const;
  bool is_tree() const { return is_connected() && is_acyclic(); }

  std::string to_dot(const Alphabet& alphabet, const std::string& name = "G") const;
};

ExtensionGraph extension_graph(const FactorSet& s, const Word& w);

// G_{U,V}(w). With `check_codes` the maximality preconditions on U and V are
// verified and not_maximal_code is thrown on failure.
ExtensionGraph generalized_extension_graph(const FactorSet& s, const Word& w, const std::vector<Word>& U,
                                           const std::vector<Word>& V, bool check_codes = true);

enum class GraphFailure { none, disconnected, cycle };
const char* to_string(GraphFailure f) noexcept;

struct TreeVerdict {
  bool passed = true;
  std::size_t up_to = 0;
  std::optional<Word> witness;
  GraphFailure failure = GraphFailure::none;
};

// Every G(w), |w| <= up_to, is a tree. Needs up_to + 2 <= depth.
TreeVerdict is_tree_set(const FactorSet& s, std::size_t up_to);
TreeVerdict is_acyclic_set(const FactorSet& s, std::size_t up_to);

struct RecurrenceVerdict {
  bool passed = true;
  std::size_t up_to = 0;
  std::size_t search_bound = 0;  // max |uvw| examined
  std::optional<std::pair<Word, Word>> witness;
  // a failure is a proof of non-recurrence only for exhaustive sets
  bool definitive = false;
};

RecurrenceVerdict is_recurrent_desk(const FactorSet& s, std::size_t up_to);

}  // namespace wordlab
