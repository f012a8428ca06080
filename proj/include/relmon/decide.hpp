#pragma once

// The equality decision procedure (compare graphs within a hom-set), object
// diversification predicates, generator scope analysis, and the
// arrow-existence deciders for the doubly strong functor-family theories.

#include <algorithm>
#include <cctype>
#include <iterator>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "relmon/graph_functor.hpp"
#include "relmon/relation.hpp"
#include "relmon/terms.hpp"
#include "relmon/typing.hpp"

namespace relmon {

//// equality ////////////////////////////////////////////////////////////////

struct Verdict {
  enum class Kind { Equal, NotEqual, TypeMismatch } kind;
  // NotEqual: a pair present in exactly one graph, and which side has it
  std::optional<Pair> witness;
  bool witness_in_lhs = false;
  std::string detail;
};

// Equality of canonical arrows: the graphs decide, by the faithfulness of
// the evaluation for every theory in the table. Source and target must agree
// syntactically first; this is equality within a hom-set.
inline Verdict equal(const ArrPtr& f, const ArrPtr& g, Theory th) {
  TypedArrow tf = infer_type(f, th);
  TypedArrow tg = infer_type(g, th);
  if (!obj_eq(tf.src, tg.src) || !obj_eq(tf.tgt, tg.tgt)) {
    std::string d = "types differ: " + show(tf.src) + " -> " + show(tf.tgt) +
                    " versus " + show(tg.src) + " -> " + show(tg.tgt);
    return {Verdict::Kind::TypeMismatch, std::nullopt, false, d};
  }
  Relation rf = graph(f, th);
  Relation rg = graph(g, th);
  if (rf == rg) return {Verdict::Kind::Equal, std::nullopt, false, ""};
  // the least pair in the symmetric difference, in the left-lex order
  std::vector<Pair> diff;
  std::set_symmetric_difference(rf.pairs.begin(), rf.pairs.end(), rg.pairs.begin(),
                                rg.pairs.end(), std::back_inserter(diff));
  Pair w = diff.front();
  bool in_lhs = contains(rf, w.first, w.second);
  std::string d = "pair (" + std::to_string(w.first) + ", " + std::to_string(w.second) +
                  ") is in the " + (in_lhs ? "first" : "second") + " graph only";
  return {Verdict::Kind::NotEqual, w, in_lhs, d};
}

//// diversification /////////////////////////////////////////////////////////

namespace detail {

// Counts occurrences of each generator name. Functor symbols and letters
// share one namespace of printed names: letters are lowercase, symbols are
// uppercase, so they never collide.
inline void generator_counts(const ObjPtr& o, std::map<std::string, int>& counts) {
  switch (o->kind) {
    case ObjKind::Unit:
      return;
    case ObjKind::Letter:
      ++counts[o->letter];
      return;
    case ObjKind::Tensor:
      generator_counts(o->left, counts);
      generator_counts(o->right, counts);
      return;
    case ObjKind::App:
      ++counts[show(o->sym)];
      generator_counts(o->arg, counts);
      return;
  }
}

}  // namespace detail

// Every generator, letter or functor symbol, occurs at most once.
inline bool is_diversified(const ObjPtr& a) {
  std::map<std::string, int> counts;
  detail::generator_counts(a, counts);
  for (const auto& [name, n] : counts)
    if (n > 1) return false;
  return true;
}

// Every letter occurs at most once; functor symbols may repeat.
inline bool is_letter_diversified(const ObjPtr& a) {
  std::map<std::string, int> counts;
  detail::generator_counts(a, counts);
  for (const auto& [name, n] : counts)
    if (n > 1 && !name.empty() && std::islower(static_cast<unsigned char>(name[0])))
      return false;
  return true;
}

//// scopes //////////////////////////////////////////////////////////////////

struct OccurrenceScope {
  FunctorSym sym;
  int occurrence = 0;  // left-to-right index among occurrences of this symbol
  std::set<std::string> scope;  // generators inside the argument
};

struct ScopeReport {
  std::set<std::string> generators;        // all generators of the object
  std::vector<OccurrenceScope> functor_scopes;  // in left-to-right order
};

inline std::set<std::string> generator_set(const ObjPtr& o) {
  std::map<std::string, int> counts;
  detail::generator_counts(o, counts);
  std::set<std::string> out;
  for (const auto& [name, n] : counts) out.insert(name);
  return out;
}

inline ScopeReport scopes(const ObjPtr& a) {
  ScopeReport rep;
  rep.generators = generator_set(a);
  std::map<std::string, int> seen;
  auto walk = [&](auto&& self, const ObjPtr& o) -> void {
    switch (o->kind) {
      case ObjKind::Unit:
      case ObjKind::Letter:
        return;
      case ObjKind::Tensor:
        self(self, o->left);
        self(self, o->right);
        return;
      case ObjKind::App: {
        OccurrenceScope s;
        s.sym = o->sym;
        s.occurrence = seen[show(o->sym)]++;
        s.scope = generator_set(o->arg);
        rep.functor_scopes.push_back(std::move(s));
        self(self, o->arg);
        return;
      }
    }
  };
  walk(walk, a);
  return rep;
}

//// arrow existence /////////////////////////////////////////////////////////

struct NotDiversifiedError : std::runtime_error {
  explicit NotDiversifiedError(const std::string& side)
      : std::runtime_error("object " + side + " is not diversified as required") {}
};

// Existence of an arrow A -> B in the free symmetric theory of doubly strong
// functors: generators must coincide and every functor's scope may only grow.
inline bool arrow_exists_lc(const ObjPtr& a, const ObjPtr& b) {
  validate_object(a, Theory::Lc);
  validate_object(b, Theory::Lc);
  if (!is_diversified(a)) throw NotDiversifiedError("A");
  if (!is_diversified(b)) throw NotDiversifiedError("B");
  ScopeReport ra = scopes(a);
  ScopeReport rb = scopes(b);
  if (ra.generators != rb.generators) return false;
  for (const OccurrenceScope& occ : ra.functor_scopes) {
    const OccurrenceScope* match = nullptr;
    for (const OccurrenceScope& o : rb.functor_scopes)
      if (o.sym == occ.sym) match = &o;
    if (!match) return false;
    if (!std::includes(match->scope.begin(), match->scope.end(), occ.scope.begin(),
                       occ.scope.end()))
      return false;
  }
  return true;
}

// The variant with a multiplication on every functor: A need only be letter
// diversified, and nested occurrences of a functor may collapse, so its own
// name is allowed in the union of scopes.
inline bool arrow_exists_lcmu(const ObjPtr& a, const ObjPtr& b) {
  validate_object(a, Theory::Lcmu);
  validate_object(b, Theory::Lcmu);
  if (!is_letter_diversified(a)) throw NotDiversifiedError("A");
  if (!is_diversified(b)) throw NotDiversifiedError("B");
  ScopeReport ra = scopes(a);
  ScopeReport rb = scopes(b);
  if (ra.generators != rb.generators) return false;
  for (const OccurrenceScope& occb : rb.functor_scopes) {
    std::set<std::string> a_union;
    for (const OccurrenceScope& occa : ra.functor_scopes)
      if (occa.sym == occb.sym) a_union.insert(occa.scope.begin(), occa.scope.end());
    std::set<std::string> allowed = occb.scope;
    allowed.insert(show(occb.sym));
    if (!std::includes(allowed.begin(), allowed.end(), a_union.begin(), a_union.end()))
      return false;
  }
  return true;
}

}  // namespace relmon
