#pragma once

// Brute-force reference computations on plain strings. Nothing here calls
// into the library, so the tests compare two independent computations.

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <functional>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace oracle {

using Rules = std::map<char, std::string>;

// Iterates the substitution from `seed` until at least n letters exist.
inline std::string fixed_point(const Rules& f, char seed, std::size_t n) {
  std::string x(1, seed);
  while (x.size() < n) {
    std::string y;
    for (char c : x) y += f.at(c);
    if (y.size() == x.size()) break;
    x = std::move(y);
  }
  return x.substr(0, std::min(n, x.size()));
}

inline std::set<std::string> factors(const std::string& x, std::size_t len) {
  std::set<std::string> out;
  if (len > x.size()) return out;
  for (std::size_t i = 0; i + len <= x.size(); ++i) out.insert(x.substr(i, len));
  return out;
}

inline std::set<std::string> factors_upto(const std::string& x, std::size_t depth) {
  std::set<std::string> out{""};
  for (std::size_t n = 1; n <= depth; ++n) {
    auto f = factors(x, n);
    out.insert(f.begin(), f.end());
  }
  return out;
}

// First (right) returns to w read off occurrences in x.
inline std::set<std::string> first_returns(const std::string& x, const std::string& w) {
  std::vector<std::size_t> occ;
  for (std::size_t p = x.find(w); p != std::string::npos; p = x.find(w, p + 1)) occ.push_back(p);
  std::set<std::string> out;
  for (std::size_t i = 0; i + 1 < occ.size(); ++i) out.insert(x.substr(occ[i] + w.size(), occ[i + 1] - occ[i]));
  return out;
}

struct Ext {
  std::set<char> left, right;
  std::set<std::pair<char, char>> pairs;
};

inline Ext extensions(const std::string& x, const std::string& w) {
  Ext e;
  for (std::size_t p = x.find(w); p != std::string::npos; p = x.find(w, p + 1)) {
    bool l = p > 0, r = p + w.size() < x.size();
    if (l) e.left.insert(x[p - 1]);
    if (r) e.right.insert(x[p + w.size()]);
    if (l && r) e.pairs.insert({x[p - 1], x[p + w.size()]});
  }
  return e;
}

inline bool in_star(const std::vector<std::string>& X, const std::string& w) {
  std::vector<char> ok(w.size() + 1, 0);
  ok[0] = 1;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (!ok[i]) continue;
    for (const auto& x : X)
      if (!x.empty() && w.compare(i, x.size(), x) == 0) ok[i + x.size()] = 1;
  }
  return ok[w.size()] != 0;
}

inline bool has_suffix_in(const std::vector<std::string>& X, const std::string& v) {
  for (const auto& x : X)
    if (x.size() <= v.size() && v.compare(v.size() - x.size(), x.size(), x) == 0) return true;
  return false;
}

inline bool has_prefix_in(const std::vector<std::string>& X, const std::string& u) {
  for (const auto& x : X)
    if (x.size() <= u.size() && u.compare(0, x.size(), x) == 0) return true;
  return false;
}

// Triples (v, x, u) with w = vxu, v without suffix in X, x in X^*, u
// without prefix in X.
inline std::size_t parse_count(const std::vector<std::string>& X, const std::string& w) {
  std::size_t n = 0;
  for (std::size_t i = 0; i <= w.size(); ++i)
    for (std::size_t j = i; j <= w.size(); ++j) {
      auto v = w.substr(0, i), x = w.substr(i, j - i), u = w.substr(j);
      if (!has_suffix_in(X, v) && in_star(X, x) && !has_prefix_in(X, u)) ++n;
    }
  return n;
}

// Looks for two different factorizations of one word of length <= bound.
inline bool is_code(const std::vector<std::string>& X, std::size_t bound) {
  std::set<std::string> seen(X.begin(), X.end());
  if (seen.size() != X.size() || seen.count("")) return false;
  std::map<std::string, std::vector<std::size_t>> first;
  std::function<bool(const std::string&, std::vector<std::size_t>&)> walk = [&](const std::string& w,
                                                                               std::vector<std::size_t>& idx) {
    if (!idx.empty()) {
      auto it = first.find(w);
      if (it != first.end() && it->second != idx) return false;
      first.emplace(w, idx);
    }
    for (std::size_t i = 0; i < X.size(); ++i) {
      if (w.size() + X[i].size() > bound) continue;
      idx.push_back(i);
      bool ok = walk(w + X[i], idx);
      idx.pop_back();
      if (!ok) return false;
    }
    return true;
  };
  std::vector<std::size_t> idx;
  return walk("", idx);
}

inline std::string apply(const Rules& f, const std::string& w) {
  std::string out;
  for (char c : w) out += f.at(c);
  return out;
}

// Free reduction on words whose upper case letters stand for inverses.
inline std::string free_reduce(const std::string& w) {
  std::string out;
  for (char c : w) {
    if (!out.empty() && out.back() != c && std::tolower(out.back()) == std::tolower(c))
      out.pop_back();
    else
      out.push_back(c);
  }
  return out;
}

}  // namespace oracle
