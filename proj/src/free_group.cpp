#include "wordlab/free_group.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <set>
#include <sstream>

#include "union_find.hpp"
#include "wordlab/error.hpp"

namespace wordlab {

SignedWord to_signed(const Word& w) {
  SignedWord r;
  r.reserve(w.size());
  for (Letter c : w) r.push_back({c, false});
  return r;
}

SignedWord inverse(const SignedWord& w) {
  SignedWord r(w.rbegin(), w.rend());
  for (auto& s : r) s.inverse = !s.inverse;
  return r;
}

SignedWord reduce(const SignedWord& w) {
  SignedWord r;
  r.reserve(w.size());
  for (const auto& s : w) {
    if (!r.empty() && r.back().letter == s.letter && r.back().inverse != s.inverse)
      r.pop_back();
    else
      r.push_back(s);
  }
  return r;
}

SignedWord multiply(const SignedWord& u, const SignedWord& v) {
  SignedWord r = u;
  r.insert(r.end(), v.begin(), v.end());
  return reduce(r);
}

bool is_positive(const SignedWord& w) {
  return std::none_of(w.begin(), w.end(), [](const SignedLetter& s) { return s.inverse; });
}

Word to_positive(const SignedWord& w) {
  if (!is_positive(w)) throw Error(ErrorKind::invalid_argument, "word has inverse letters");
  Word r;
  for (const auto& s : w) r.push_back(s.letter);
  return r;
}

namespace {

class SignedParser {
 public:
  SignedParser(const Alphabet& a, std::string_view t) : alphabet_(a), text_(t) {}

  SignedWord parse_all() {
    auto w = sequence();
    skip();
    if (pos_ != text_.size()) fail("unexpected ')'");
    return w;
  }

 private:
  [[noreturn]] void fail(const std::string& why) {
    throw Error(ErrorKind::parse, why + " in '" + std::string(text_) + "' at offset " + std::to_string(pos_));
  }
  void skip() {
    while (pos_ < text_.size() && (text_[pos_] == ' ' || text_[pos_] == '.' || text_[pos_] == '\t')) ++pos_;
  }
  SignedWord sequence() {
    SignedWord w;
    while (true) {
      skip();
      if (pos_ >= text_.size() || text_[pos_] == ')') return w;
      auto a = atom();
      auto e = exponent();
      if (e < 0) {
        a = inverse(a);
        e = -e;
      }
      for (long i = 0; i < e; ++i) w.insert(w.end(), a.begin(), a.end());
    }
  }
  SignedWord atom() {
    if (text_[pos_] == '(') {
      ++pos_;
      auto w = sequence();
      if (pos_ >= text_.size() || text_[pos_] != ')') fail("missing ')'");
      ++pos_;
      return w;
    }
    std::size_t best_len = 0;
    Letter best = 0;
    for (std::size_t k = 0; k < alphabet_.size(); ++k) {
      const auto& s = alphabet_.symbols()[k];
      if (s.size() > best_len && text_.compare(pos_, s.size(), s) == 0) {
        best_len = s.size();
        best = static_cast<Letter>(k);
      }
    }
    if (best_len == 0) fail("unknown letter");
    pos_ += best_len;
    return SignedWord{{best, false}};
  }
  long exponent() {
    skip();
    if (pos_ >= text_.size() || text_[pos_] != '^') return 1;
    ++pos_;
    bool neg = false;
    if (pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+')) {
      neg = text_[pos_] == '-';
      ++pos_;
    }
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected exponent");
    long e = std::stol(std::string(text_.substr(start, pos_ - start)));
    return neg ? -e : e;
  }

  const Alphabet& alphabet_;
  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

SignedWord parse_signed(const Alphabet& alphabet, std::string_view text) {
  auto t = text;
  while (!t.empty() && t.front() == ' ') t.remove_prefix(1);
  while (!t.empty() && t.back() == ' ') t.remove_suffix(1);
  if (t.empty() || t == "1" || t == "eps") return {};
  return SignedParser(alphabet, t).parse_all();
}

std::vector<SignedWord> parse_signed_list(const Alphabet& alphabet, std::string_view text) {
  std::vector<SignedWord> out;
  if (text.find_first_not_of(" \t") == std::string_view::npos) return out;
  std::size_t start = 0;
  while (true) {
    auto end = text.find(',', start);
    out.push_back(parse_signed(alphabet, text.substr(start, end == std::string_view::npos ? end : end - start)));
    if (end == std::string_view::npos) break;
    start = end + 1;
  }
  return out;
}

std::string format_signed(const Alphabet& alphabet, const SignedWord& w) {
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (!alphabet.single_char() && i > 0) out += '.';
    out += alphabet.symbol(w[i].letter);
    if (w[i].inverse) out += "^-1";
  }
  return out;
}

SignedWord apply_signed(const Morphism& m, const SignedWord& w) {
  SignedWord r;
  for (const auto& s : w) {
    auto img = to_signed(m.image(s.letter));
    if (s.inverse) img = inverse(img);
    r.insert(r.end(), img.begin(), img.end());
  }
  return reduce(r);
}

namespace {
constexpr std::size_t kNone = static_cast<std::size_t>(-1);
}

FoldedGraph FoldedGraph::fold(std::size_t alphabet_size, const std::vector<SignedWord>& generators) {
  std::vector<Edge> raw;
  std::size_t n = 1;
  for (const auto& g : generators) {
    auto r = reduce(g);
    std::size_t cur = 0;
    for (std::size_t i = 0; i < r.size(); ++i) {
      if (r[i].letter >= alphabet_size) throw Error(ErrorKind::alphabet_mismatch, "letter outside alphabet");
      std::size_t target = i + 1 == r.size() ? 0 : n++;
      if (!r[i].inverse)
        raw.push_back({cur, r[i].letter, target});
      else
        raw.push_back({target, r[i].letter, cur});
      cur = target;
    }
  }
  detail::UnionFind uf(n);
  bool changed = true;
  while (changed) {
    changed = false;
    std::map<std::pair<std::size_t, Letter>, std::size_t> outs, ins;
    for (const auto& e : raw) {
      auto u = uf.find(e.from), v = uf.find(e.to);
      auto [it, fresh] = outs.emplace(std::make_pair(u, e.letter), v);
      if (!fresh && uf.find(it->second) != v) {
        uf.unite(it->second, v);
        changed = true;
      }
      auto [jt, fresh2] = ins.emplace(std::make_pair(uf.find(v), e.letter), uf.find(u));
      if (!fresh2 && uf.find(jt->second) != uf.find(u)) {
        uf.unite(jt->second, u);
        changed = true;
      }
    }
  }
  std::set<Edge> merged;
  for (const auto& e : raw) merged.insert({uf.find(e.from), e.letter, uf.find(e.to)});
  // prune hanging trees away from the base
  const auto base = uf.find(0);
  std::vector<Edge> edges(merged.begin(), merged.end());
  while (true) {
    std::map<std::size_t, std::size_t> degree;
    for (const auto& e : edges) {
      ++degree[e.from];
      ++degree[e.to];
    }
    std::set<std::size_t> drop;
    for (auto [v, d] : degree)
      if (d == 1 && v != base) drop.insert(v);
    if (drop.empty()) break;
    std::vector<Edge> kept;
    for (const auto& e : edges)
      if (!drop.count(e.from) && !drop.count(e.to)) kept.push_back(e);
    edges = std::move(kept);
  }
  // canonical numbering by BFS from the base: outgoing letters, then incoming
  std::map<std::pair<std::size_t, Letter>, std::size_t> outs, ins;
  for (const auto& e : edges) {
    outs[{e.from, e.letter}] = e.to;
    ins[{e.to, e.letter}] = e.from;
  }
  std::map<std::size_t, std::size_t> id{{base, 0}};
  std::vector<std::size_t> order{base};
  for (std::size_t i = 0; i < order.size(); ++i) {
    auto v = order[i];
    for (std::size_t pass = 0; pass < 2; ++pass)
      for (std::size_t a = 0; a < alphabet_size; ++a) {
        auto& table = pass == 0 ? outs : ins;
        auto it = table.find({v, static_cast<Letter>(a)});
        if (it == table.end() || id.count(it->second)) continue;
        id[it->second] = order.size();
        order.push_back(it->second);
      }
  }
  FoldedGraph g;
  g.k_ = alphabet_size;
  g.vertices_ = order.size();
  for (const auto& e : edges) g.edges_.push_back({id.at(e.from), e.letter, id.at(e.to)});
  std::sort(g.edges_.begin(), g.edges_.end());
  g.out_.assign(g.vertices_ * g.k_, kNone);
  g.in_.assign(g.vertices_ * g.k_, kNone);
  for (const auto& e : g.edges_) {
    g.out_[e.from * g.k_ + e.letter] = e.to;
    g.in_[e.to * g.k_ + e.letter] = e.from;
  }
  return g;
}

std::optional<std::size_t> FoldedGraph::out(std::size_t v, Letter a) const {
  auto t = out_.at(v * k_ + a);
  if (t == kNone) return std::nullopt;
  return t;
}

std::optional<std::size_t> FoldedGraph::in(std::size_t v, Letter a) const {
  auto t = in_.at(v * k_ + a);
  if (t == kNone) return std::nullopt;
  return t;
}

bool FoldedGraph::contains(const SignedWord& g) const {
  std::size_t v = 0;
  for (const auto& s : reduce(g)) {
    if (s.letter >= k_) return false;
    auto next = s.inverse ? in(v, s.letter) : out(v, s.letter);
    if (!next) return false;
    v = *next;
  }
  return v == 0;
}

bool FoldedGraph::is_complete() const {
  return std::none_of(out_.begin(), out_.end(), [](std::size_t t) { return t == kNone; }) &&
         std::none_of(in_.begin(), in_.end(), [](std::size_t t) { return t == kNone; });
}

std::optional<std::size_t> FoldedGraph::index() const {
  if (!is_complete()) return std::nullopt;
  return vertices_;
}

std::string FoldedGraph::canonical_form() const {
  std::ostringstream out;
  out << "V" << vertices_ << ":";
  for (const auto& e : edges_) out << e.from << "-" << static_cast<int>(e.letter) << "-" << e.to << ";";
  return out.str();
}

std::string FoldedGraph::to_dot(const Alphabet& alphabet, const std::string& name) const {
  std::ostringstream out;
  out << "digraph \"" << name << "\" {\n";
  for (std::size_t v = 0; v < vertices_; ++v)
    out << "  " << v << " [shape=" << (v == 0 ? "doublecircle" : "circle") << "];\n";
  for (const auto& e : edges_)
    out << "  " << e.from << " -> " << e.to << " [label=\"" << alphabet.symbol(e.letter) << "\"];\n";
  out << "}\n";
  return out.str();
}

FoldedGraph fold(const std::vector<SignedWord>& X, std::size_t alphabet_size) {
  return FoldedGraph::fold(alphabet_size, X);
}

FoldedGraph fold(const std::vector<Word>& X, std::size_t alphabet_size) {
  std::vector<SignedWord> s;
  for (const auto& w : X) s.push_back(to_signed(w));
  return FoldedGraph::fold(alphabet_size, s);
}

RankIndex rank_and_index(const FoldedGraph& g) { return RankIndex{g.rank(), g.index()}; }

bool is_basis(const std::vector<SignedWord>& X, std::size_t alphabet_size) {
  if (X.size() != alphabet_size) return false;
  return fold(X, alphabet_size).is_rose();
}

bool is_basis(const std::vector<Word>& X, std::size_t alphabet_size) {
  if (X.size() != alphabet_size) return false;
  return fold(X, alphabet_size).is_rose();
}

SaturationVerdict saturation_check(const CodeSet& X, const FactorSet& s) {
  if (!is_bifix_code(X.words())) throw Error(ErrorKind::not_bifix, "saturation check needs a bifix code");
  if (!(X.alphabet() == s.alphabet())) throw Error(ErrorKind::alphabet_mismatch, "code and set alphabets differ");
  for (const auto& x : X.words())
    if (!s.contains(x)) throw Error(ErrorKind::not_a_member, "code word outside the set");
  if (!s.exhaustive() && s.depth() < X.max_length())
    throw Error(ErrorKind::insufficient_depth, "set shallower than the longest code word");
  auto g = fold(X.words(), s.alphabet().size());
  SaturationVerdict v;
  for (const auto& w : s.words()) {
    ++v.checked;
    if (in_star(X.words(), w) != g.contains(w)) {
      v.passed = false;
      v.witness = w;
      return v;
    }
  }
  return v;
}

}  // namespace wordlab
