#pragma once

// Relations between finite ordinals: the target categories of the graph
// evaluation, their composition and tensor, classification into the
// subcategories of (order-preserving) functions, the two lexicographic
// enumerations, and the decomposition of a relation into a coordinated
// triple of functions.

#include <algorithm>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "relmon/terms.hpp"  // GraphCat

namespace relmon {

using Pair = std::pair<int, int>;

// R subset n x m, stored sorted left-lexicographically without duplicates.
struct Relation {
  int src = 0;
  int tgt = 0;
  std::vector<Pair> pairs;

  bool operator==(const Relation& o) const {
    return src == o.src && tgt == o.tgt && pairs == o.pairs;
  }
  bool operator!=(const Relation& o) const { return !(*this == o); }
};

struct BadRelationError : std::runtime_error {
  explicit BadRelationError(const std::string& msg) : std::runtime_error(msg) {}
};

struct ArityMismatchError : std::runtime_error {
  ArityMismatchError(int lhs_tgt, int rhs_src)
      : std::runtime_error("relation composition mismatch: first ends at " +
                           std::to_string(lhs_tgt) + " but second starts at " +
                           std::to_string(rhs_src)) {}
};

struct MalformedTripleError : std::runtime_error {
  explicit MalformedTripleError(const std::string& msg) : std::runtime_error(msg) {}
};

// Normalizes to the canonical storage order and checks ranges.
inline Relation make_relation(int src, int tgt, std::vector<Pair> pairs) {
  if (src < 0 || tgt < 0) throw BadRelationError("negative arity");
  for (const Pair& p : pairs) {
    if (p.first < 0 || p.first >= src || p.second < 0 || p.second >= tgt)
      throw BadRelationError("pair (" + std::to_string(p.first) + ", " +
                             std::to_string(p.second) + ") out of range for " +
                             std::to_string(src) + " x " + std::to_string(tgt));
  }
  std::sort(pairs.begin(), pairs.end());
  pairs.erase(std::unique(pairs.begin(), pairs.end()), pairs.end());
  return Relation{src, tgt, std::move(pairs)};
}

inline Relation identity_rel(int n) {
  std::vector<Pair> ps;
  ps.reserve(n);
  for (int i = 0; i < n; ++i) ps.emplace_back(i, i);
  return Relation{n, n, std::move(ps)};
}

inline bool contains(const Relation& r, int i, int j) {
  return std::binary_search(r.pairs.begin(), r.pairs.end(), Pair{i, j});
}

// Diagrammatic order: compose(R, S) chains R first, then S.
inline Relation compose(const Relation& r, const Relation& s) {
  if (r.tgt != s.src) throw ArityMismatchError(r.tgt, s.src);
  std::vector<std::vector<int>> succ(s.src);
  for (const Pair& p : s.pairs) succ[p.first].push_back(p.second);
  std::vector<Pair> out;
  for (const Pair& p : r.pairs)
    for (int k : succ[p.second]) out.emplace_back(p.first, k);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return Relation{r.src, s.tgt, std::move(out)};
}

inline Relation tensor(const Relation& r, const Relation& s) {
  std::vector<Pair> out = r.pairs;
  out.reserve(r.pairs.size() + s.pairs.size());
  for (const Pair& p : s.pairs) out.emplace_back(p.first + r.src, p.second + r.tgt);
  return Relation{r.src + s.src, r.tgt + s.tgt, std::move(out)};
}

inline Relation converse(const Relation& r) {
  std::vector<Pair> out;
  out.reserve(r.pairs.size());
  for (const Pair& p : r.pairs) out.emplace_back(p.second, p.first);
  std::sort(out.begin(), out.end());
  return Relation{r.tgt, r.src, std::move(out)};
}

//// classification //////////////////////////////////////////////////////////

struct RelationClass {
  bool is_function = false;
  bool is_order_preserving_function = false;
  bool is_bijection = false;
  bool is_converse_of_order_preserving_function = false;
};

namespace detail {

// Totality plus single-valuedness; an empty source is vacuously total.
inline bool function_flags(const Relation& r, bool& order_preserving, bool& injective) {
  std::vector<int> image(r.src, -1);
  for (const Pair& p : r.pairs) {
    if (image[p.first] != -1) return false;  // two values at one argument
    image[p.first] = p.second;
  }
  for (int i = 0; i < r.src; ++i)
    if (image[i] == -1) return false;  // undefined argument
  order_preserving = true;
  for (int i = 0; i + 1 < r.src; ++i)
    if (image[i] > image[i + 1]) order_preserving = false;
  std::vector<char> hit(r.tgt, 0);
  injective = true;
  for (int i = 0; i < r.src; ++i) {
    if (hit[image[i]]) injective = false;
    hit[image[i]] = 1;
  }
  return true;
}

}  // namespace detail

inline RelationClass classify(const Relation& r) {
  RelationClass c;
  bool mono = false, inj = false;
  if (detail::function_flags(r, mono, inj)) {
    c.is_function = true;
    c.is_order_preserving_function = mono;
    c.is_bijection = inj && r.src == r.tgt;
  }
  Relation conv = converse(r);
  bool cmono = false, cinj = false;
  if (detail::function_flags(conv, cmono, cinj))
    c.is_converse_of_order_preserving_function = cmono;
  return c;
}

inline bool member_of(const Relation& r, GraphCat cat) {
  switch (cat) {
    case GraphCat::Rel: return true;
    case GraphCat::Fun: return classify(r).is_function;
    case GraphCat::Delta: return classify(r).is_order_preserving_function;
    case GraphCat::DeltaOp: return classify(r).is_converse_of_order_preserving_function;
  }
  return false;
}

//// lexicographic enumerations //////////////////////////////////////////////

// Pairs ordered with the first coordinate dominant; the canonical storage
// order, so this is a copy.
inline std::vector<Pair> left_lex_enum(const Relation& r) { return r.pairs; }

// Pairs ordered with the second coordinate dominant.
inline std::vector<Pair> right_lex_enum(const Relation& r) {
  std::vector<Pair> out = r.pairs;
  std::sort(out.begin(), out.end(), [](const Pair& a, const Pair& b) {
    return a.second != b.second ? a.second < b.second : a.first < b.first;
  });
  return out;
}

//// decomposition ///////////////////////////////////////////////////////////

// nu and mu read a relation's pairs off in the two lexicographic orders; beta
// translates between the orders. Every relation factors uniquely through such
// a triple as mu after beta after the converse of nu.
struct CoordinatedTriple {
  int k = 0;
  int n = 0;
  int m = 0;
  std::vector<int> nu;    // length k, values < n
  std::vector<int> mu;    // length k, values < m
  std::vector<int> beta;  // permutation of {0..k-1}

  bool operator==(const CoordinatedTriple& o) const {
    return k == o.k && n == o.n && m == o.m && nu == o.nu && mu == o.mu &&
           beta == o.beta;
  }
  bool operator!=(const CoordinatedTriple& o) const { return !(*this == o); }
};

inline CoordinatedTriple decompose(const Relation& r) {
  std::vector<Pair> l = left_lex_enum(r);
  std::vector<Pair> rr = right_lex_enum(r);
  int k = static_cast<int>(l.size());
  CoordinatedTriple t;
  t.k = k;
  t.n = r.src;
  t.m = r.tgt;
  t.nu.reserve(k);
  t.mu.reserve(k);
  t.beta.reserve(k);
  for (const Pair& p : l) t.nu.push_back(p.first);
  for (const Pair& p : rr) t.mu.push_back(p.second);
  for (const Pair& p : l) {
    auto it = std::find(rr.begin(), rr.end(), p);
    t.beta.push_back(static_cast<int>(it - rr.begin()));
  }
  return t;
}

namespace detail {

inline void check_triple_fields(const CoordinatedTriple& t) {
  if (t.k < 0 || t.n < 0 || t.m < 0) throw MalformedTripleError("negative arity");
  if (static_cast<int>(t.nu.size()) != t.k || static_cast<int>(t.mu.size()) != t.k ||
      static_cast<int>(t.beta.size()) != t.k)
    throw MalformedTripleError("component length differs from k");
  for (int v : t.nu)
    if (v < 0 || v >= t.n) throw MalformedTripleError("nu value out of range");
  for (int v : t.mu)
    if (v < 0 || v >= t.m) throw MalformedTripleError("mu value out of range");
  std::vector<char> seen(t.k, 0);
  for (int v : t.beta) {
    if (v < 0 || v >= t.k || seen[v]) throw MalformedTripleError("beta is not a permutation");
    seen[v] = 1;
  }
}

}  // namespace detail

inline Relation recompose(const CoordinatedTriple& t) {
  detail::check_triple_fields(t);
  std::vector<Pair> out;
  out.reserve(t.k);
  for (int z = 0; z < t.k; ++z) out.emplace_back(t.nu[z], t.mu[t.beta[z]]);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return Relation{t.n, t.m, std::move(out)};
}

// The defining condition: listing the triple's pairs in the order carried by
// nu must be strictly increasing left-lexicographically, and in the order
// carried by mu strictly increasing right-lexicographically.
inline bool is_coordinated(const CoordinatedTriple& t) {
  detail::check_triple_fields(t);
  std::vector<int> beta_inv(t.k);
  for (int z = 0; z < t.k; ++z) beta_inv[t.beta[z]] = z;
  auto lt_l = [](const Pair& a, const Pair& b) { return a < b; };
  auto lt_r = [](const Pair& a, const Pair& b) {
    return a.second != b.second ? a.second < b.second : a.first < b.first;
  };
  for (int u = 0; u + 1 < t.k; ++u) {
    Pair lu{t.nu[u], t.mu[t.beta[u]]};
    Pair lv{t.nu[u + 1], t.mu[t.beta[u + 1]]};
    if (!lt_l(lu, lv)) return false;
    Pair ru{t.nu[beta_inv[u]], t.mu[u]};
    Pair rv{t.nu[beta_inv[u + 1]], t.mu[u + 1]};
    if (!lt_r(ru, rv)) return false;
  }
  return true;
}

//// display /////////////////////////////////////////////////////////////////

inline std::string show(const Relation& r) {
  std::string s = "{";
  for (std::size_t i = 0; i < r.pairs.size(); ++i) {
    if (i) s += ", ";
    s += "(" + std::to_string(r.pairs[i].first) + ", " +
         std::to_string(r.pairs[i].second) + ")";
  }
  s += "} : " + std::to_string(r.src) + " -> " + std::to_string(r.tgt);
  return s;
}

}  // namespace relmon
