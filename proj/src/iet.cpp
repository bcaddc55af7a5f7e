#include "wordlab/iet.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "wordlab/error.hpp"

namespace wordlab {

SemiInterval intersect(const SemiInterval& x, const SemiInterval& y) {
  return SemiInterval{max(x.lo, y.lo), min(x.hi, y.hi)};
}

IntervalExchange::IntervalExchange(Alphabet alphabet, std::vector<QuadraticNumber> lengths,
                                   std::vector<Letter> bottom_order, bool assume_minimal)
    : alphabet_(std::move(alphabet)),
      lengths_(std::move(lengths)),
      bottom_(std::move(bottom_order)),
      minimal_(assume_minimal) {
  const auto s = alphabet_.size();
  if (lengths_.size() != s) throw Error(ErrorKind::invalid_argument, "one length per letter required");
  std::vector<Letter> check = bottom_;
  std::sort(check.begin(), check.end());
  bool valid = check.size() == s;
  for (std::size_t i = 0; valid && i < s; ++i) valid = check[i] == i;
  if (!valid) throw Error(ErrorKind::invalid_argument, "bottom order must list every letter once");
  QuadraticNumber total;
  for (std::size_t i = 0; i < s; ++i) {
    if (lengths_[i].sign() <= 0)
      throw Error(ErrorKind::non_positive_length, "length of '" + alphabet_.symbol(static_cast<Letter>(i)) + "'");
    total = total + lengths_[i];
  }
  if (total != QuadraticNumber(1))
    throw Error(ErrorKind::lengths_not_normalized, "lengths sum to " + total.to_string());

  top_.resize(s);
  bottom_int_.resize(s);
  shift_.resize(s);
  QuadraticNumber x;
  for (std::size_t i = 0; i < s; ++i) {
    top_[i] = SemiInterval{x, x + lengths_[i]};
    x = top_[i].hi;
  }
  QuadraticNumber y;
  for (Letter a : bottom_) {
    bottom_int_[a] = SemiInterval{y, y + lengths_[a]};
    y = bottom_int_[a].hi;
  }
  for (std::size_t i = 0; i < s; ++i) shift_[i] = bottom_int_[i].hi - top_[i].hi;
}

IntervalExchange IntervalExchange::rotation(const QuadraticNumber& alpha, bool assume_minimal) {
  if (!(QuadraticNumber(0) < alpha && alpha < QuadraticNumber(1)))
    throw Error(ErrorKind::invalid_argument, "rotation angle must lie in (0,1)");
  return IntervalExchange(Alphabet::letters("ab"), {QuadraticNumber(1) - alpha, alpha}, {1, 0}, assume_minimal);
}

IntervalExchange IntervalExchange::parse(std::string_view text) {
  long d = 0;
  bool minimal = false;
  std::vector<std::string> symbols;
  std::vector<std::string> values;
  std::vector<std::string> order;
  std::size_t start = 0;
  auto trim = [](std::string s) {
    auto b = s.find_first_not_of(" \t\n");
    auto e = s.find_last_not_of(" \t\n");
    return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
  };
  while (start <= text.size()) {
    auto end = text.find(';', start);
    if (end == std::string_view::npos) end = text.size();
    auto item = trim(std::string(text.substr(start, end - start)));
    start = end + 1;
    if (item.empty()) continue;
    if (item == "minimal") {
      minimal = true;
      continue;
    }
    auto eq = item.find('=');
    if (eq == std::string::npos) throw Error(ErrorKind::parse, "expected key=value, got '" + item + "'");
    auto key = trim(item.substr(0, eq));
    auto value = trim(item.substr(eq + 1));
    if (key == "d") {
      try {
        d = std::stol(value);
      } catch (const std::exception&) {
        throw Error(ErrorKind::parse, "bad radicand '" + value + "'");
      }
    } else if (key == "order") {
      std::stringstream ss(value);
      std::string tok;
      while (std::getline(ss, tok, ',')) order.push_back(trim(tok));
    } else {
      symbols.push_back(key);
      values.push_back(value);
    }
  }
  if (symbols.empty()) throw Error(ErrorKind::parse, "no interval lengths given");
  Alphabet alphabet(symbols);
  std::vector<QuadraticNumber> lengths;
  for (const auto& v : values) lengths.push_back(QuadraticNumber::parse(v, d));
  std::vector<Letter> bottom;
  if (order.empty()) throw Error(ErrorKind::parse, "missing order=...");
  for (const auto& o : order) bottom.push_back(alphabet.letter(o));
  return IntervalExchange(alphabet, std::move(lengths), std::move(bottom), minimal);
}

Letter IntervalExchange::letter_at(const QuadraticNumber& z) const {
  for (std::size_t i = 0; i < top_.size(); ++i)
    if (top_[i].contains(z)) return static_cast<Letter>(i);
  throw Error(ErrorKind::out_of_domain, z.to_string() + " is outside [0,1)");
}

QuadraticNumber IntervalExchange::apply(const QuadraticNumber& z) const { return z + shift_[letter_at(z)]; }

QuadraticNumber IntervalExchange::apply_inverse(const QuadraticNumber& z) const {
  for (std::size_t i = 0; i < bottom_int_.size(); ++i)
    if (bottom_int_[i].contains(z)) return z - shift_[i];
  throw Error(ErrorKind::out_of_domain, z.to_string() + " is outside [0,1)");
}

std::vector<QuadraticNumber> IntervalExchange::separation_points() const {
  std::vector<QuadraticNumber> out;
  for (std::size_t i = 0; i + 1 < top_.size(); ++i) out.push_back(top_[i].hi);
  return out;
}

std::string IntervalExchange::to_string() const {
  std::ostringstream out;
  long d = 1;
  for (const auto& l : lengths_)
    if (!l.is_rational()) d = l.radicand();
  out << "d=" << d;
  for (std::size_t i = 0; i < lengths_.size(); ++i)
    out << "; " << alphabet_.symbol(static_cast<Letter>(i)) << "=" << lengths_[i].to_string();
  out << "; order=";
  for (std::size_t i = 0; i < bottom_.size(); ++i) out << (i ? "," : "") << alphabet_.symbol(bottom_[i]);
  if (minimal_) out << "; minimal";
  return out.str();
}

Word natural_coding(const IntervalExchange& t, const QuadraticNumber& z, std::size_t m) {
  Word w;
  w.reserve(m);
  auto x = z;
  for (std::size_t n = 0; n < m; ++n) {
    Letter a = t.letter_at(x);
    w.push_back(a);
    x = x + t.translation(a);
  }
  if (m == 0) t.letter_at(z);  // domain check
  return w;
}

namespace {

SemiInterval extend_left(const IntervalExchange& t, Letter a, const SemiInterval& iw) {
  SemiInterval moved{iw.lo - t.translation(a), iw.hi - t.translation(a)};
  return intersect(t.top(a), moved);
}

}  // namespace

SemiInterval word_interval(const IntervalExchange& t, const Word& w) {
  if (w.empty()) return SemiInterval{QuadraticNumber(0), QuadraticNumber(1)};
  for (Letter c : w)
    if (c >= t.size()) throw Error(ErrorKind::alphabet_mismatch, "letter outside the exchange alphabet");
  SemiInterval iw = t.top(w.back());
  for (std::size_t i = w.size() - 1; i-- > 0;) {
    iw = extend_left(t, w[i], iw);
    if (iw.empty()) return iw;
  }
  return iw;
}

FactorSet factor_set(const IntervalExchange& t, std::size_t depth) {
  std::vector<Word> members;
  std::vector<std::pair<Word, SemiInterval>> level;
  for (std::size_t i = 0; i < t.size(); ++i) level.emplace_back(Word{static_cast<Letter>(i)}, t.top(static_cast<Letter>(i)));
  for (std::size_t n = 1; n <= depth; ++n) {
    std::vector<std::pair<Word, SemiInterval>> next;
    for (auto& [w, iw] : level) {
      members.push_back(w);
      if (n == depth) continue;
      for (std::size_t a = 0; a < t.size(); ++a) {
        auto ia = extend_left(t, static_cast<Letter>(a), iw);
        if (ia.empty()) continue;
        next.emplace_back(concat(Word{static_cast<Letter>(a)}, w), ia);
      }
    }
    level = std::move(next);
  }
  return FactorSet::from_members(t.alphabet(), std::move(members), depth,
                                 t.minimal_asserted() ? Completeness::certified : Completeness::possibly_incomplete,
                                 Provenance::iet);
}

RegularityEvidence regularity_evidence(const IntervalExchange& t, std::size_t n_iterations) {
  if (n_iterations < 1) throw Error(ErrorKind::invalid_argument, "need at least one iteration");
  RegularityEvidence ev;
  ev.iterations = n_iterations;
  auto points = t.separation_points();
  std::map<QuadraticNumber, std::pair<std::size_t, std::size_t>> seen;
  // round-robin so the earliest collision (by step) is the one reported
  std::vector<QuadraticNumber> cur = points;
  for (std::size_t step = 0; step <= n_iterations; ++step) {
    for (std::size_t i = 0; i < cur.size(); ++i) {
      auto [it, fresh] = seen.emplace(cur[i], std::make_pair(i, step));
      if (!fresh) {
        ev.collision = OrbitCollision{it->second.first, it->second.second, i, step, cur[i]};
        return ev;
      }
      cur[i] = t.apply(cur[i]);
    }
  }
  return ev;
}

}  // namespace wordlab
