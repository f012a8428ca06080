#pragma once

// Bounded bidirectional search over the equational schemas of a theory.
// The search works on arrow terms exactly as given, one schema application
// at a time, and returns a replayable sequence of rewrite steps when the
// two inputs meet. Exhaustion is not a disproof; the graph decision
// procedure is the authority on equality.

#include <deque>
#include <optional>
#include <unordered_map>
#include <vector>

#include "relmon/schemas.hpp"
#include "relmon/terms.hpp"
#include "relmon/typing.hpp"

namespace relmon {

struct RewriteStep {
  std::string schema;
  std::vector<int> pos;  // child indices from the root, 0 = u, 1 = v
  bool reversed;         // true when the schema was applied right to left
};

enum class OracleOutcome { Equivalent, Distinct, Exhausted };

struct OracleResult {
  OracleOutcome outcome;
  std::vector<RewriteStep> path;  // from the first term to the second
  long visited = 0;
};

struct OracleBudget {
  long max_visited = 50000;
  int size_slack = 8;  // admissible size is 2 * max(|f|, |g|) + size_slack
};

namespace detail {

struct ArrKey {
  ArrPtr t;
};

struct ArrKeyHash {
  std::size_t operator()(const ArrKey& k) const { return k.t->hash; }
};

struct ArrKeyEq {
  bool operator()(const ArrKey& a, const ArrKey& b) const {
    return arr_eq(a.t, b.t);
  }
};

inline void collect_arrow_vars(const PArrPtr& p, std::array<bool, 4>& seen) {
  switch (p->kind) {
    case PArrKind::Var:
      seen[p->var] = true;
      return;
    case PArrKind::Comp:
    case PArrKind::Tens:
      collect_arrow_vars(p->u, seen);
      collect_arrow_vars(p->v, seen);
      return;
    case PArrKind::FApp:
      collect_arrow_vars(p->u, seen);
      return;
    case PArrKind::Const:
      return;
  }
}

// a direction is invertible when it loses no arrow metavariable
inline bool direction_invertible(const Schema& s, bool reversed) {
  std::array<bool, 4> from{}, to{};
  collect_arrow_vars(reversed ? s.rhs : s.lhs, from);
  collect_arrow_vars(reversed ? s.lhs : s.rhs, to);
  for (int i = 0; i < 4; ++i)
    if (from[i] && !to[i]) return false;
  return true;
}

inline ArrPtr replace_at(const ArrPtr& t, const std::vector<int>& pos,
                         std::size_t depth, const ArrPtr& sub) {
  if (depth == pos.size()) return sub;
  if (pos[depth] == 0) {
    ArrPtr inner = replace_at(t->u, pos, depth + 1, sub);
    if (t->kind == ArrKind::FApp) return fapp(t->sym, inner);
    if (t->kind == ArrKind::Comp) return comp(inner, t->v);
    return tens(inner, t->v);
  }
  ArrPtr inner = replace_at(t->v, pos, depth + 1, sub);
  if (t->kind == ArrKind::Comp) return comp(t->u, inner);
  return tens(t->u, inner);
}

inline const ArrPtr* subterm_at(const ArrPtr& t, const std::vector<int>& pos) {
  const ArrPtr* cur = &t;
  for (int step : pos) {
    switch ((*cur)->kind) {
      case ArrKind::Comp:
      case ArrKind::Tens:
        if (step != 0 && step != 1) return nullptr;
        cur = step == 0 ? &(*cur)->u : &(*cur)->v;
        break;
      case ArrKind::FApp:
        if (step != 0) return nullptr;
        cur = &(*cur)->u;
        break;
      default:
        return nullptr;
    }
  }
  return cur;
}

inline std::optional<ArrPtr> apply_schema_at(const ArrPtr& root,
                                             const std::vector<int>& pos,
                                             const Schema& s, bool reversed,
                                             Theory th) {
  const ArrPtr* at = subterm_at(root, pos);
  if (!at) return std::nullopt;
  Binding b;
  b.th = th;
  const PArrPtr& from = reversed ? s.rhs : s.lhs;
  const PArrPtr& to = reversed ? s.lhs : s.rhs;
  if (!match_arr(from, *at, b)) return std::nullopt;
  if (!apply_hints(s, b)) return std::nullopt;
  ArrPtr built = subst_arr(to, b);
  if (!built) return std::nullopt;
  return replace_at(root, pos, 0, built);
}

inline void positions_preorder(const ArrPtr& t, std::vector<int>& cur,
                               std::vector<std::vector<int>>& out) {
  out.push_back(cur);
  switch (t->kind) {
    case ArrKind::Comp:
    case ArrKind::Tens:
      cur.push_back(0);
      positions_preorder(t->u, cur, out);
      cur.back() = 1;
      positions_preorder(t->v, cur, out);
      cur.pop_back();
      return;
    case ArrKind::FApp:
      cur.push_back(0);
      positions_preorder(t->u, cur, out);
      cur.pop_back();
      return;
    default:
      return;
  }
}

}  // namespace detail

struct Neighbor {
  ArrPtr term;
  RewriteStep step;
};

inline std::vector<Neighbor> neighbors(const ArrPtr& t, Theory th,
                                       bool invertible_only = false) {
  std::vector<Neighbor> out;
  std::vector<std::vector<int>> positions;
  std::vector<int> cur;
  detail::positions_preorder(t, cur, positions);
  for (const Schema* s : axiom_set(th)) {
    for (const std::vector<int>& pos : positions) {
      for (bool reversed : {false, true}) {
        if (invertible_only && !detail::direction_invertible(*s, reversed))
          continue;
        auto next = detail::apply_schema_at(t, pos, *s, reversed, th);
        if (next) out.push_back({*next, {s->name, pos, reversed}});
      }
    }
  }
  return out;
}

inline std::optional<ArrPtr> apply_step(const ArrPtr& t, const RewriteStep& step,
                                        Theory th) {
  for (const Schema* s : axiom_set(th))
    if (s->name == step.schema)
      return detail::apply_schema_at(t, step.pos, *s, step.reversed, th);
  return std::nullopt;
}

inline OracleResult equivalent_bounded(const ArrPtr& f, const ArrPtr& g,
                                       Theory th, OracleBudget budget = {}) {
  TypedArrow tf = infer_type(f, th);
  TypedArrow tg = infer_type(g, th);
  if (!obj_eq(tf.src, tg.src) || !obj_eq(tf.tgt, tg.tgt))
    return {OracleOutcome::Distinct, {}, 0};
  if (arr_eq(f, g)) return {OracleOutcome::Equivalent, {}, 0};

  int size_cap = 2 * std::max(f->size, g->size) + budget.size_slack;

  struct Entry {
    ArrPtr parent;  // null for the roots
    RewriteStep step;
  };
  using Map =
      std::unordered_map<detail::ArrKey, Entry, detail::ArrKeyHash, detail::ArrKeyEq>;
  Map seen[2];
  std::deque<ArrPtr> frontier[2];
  seen[0].emplace(detail::ArrKey{f}, Entry{});
  seen[1].emplace(detail::ArrKey{g}, Entry{});
  frontier[0].push_back(f);
  frontier[1].push_back(g);
  long visited = 2;

  ArrPtr meet;
  int meet_side = -1;

  while (meet_side < 0 && !frontier[0].empty() && !frontier[1].empty() &&
         visited < budget.max_visited) {
    int side = frontier[0].size() <= frontier[1].size() ? 0 : 1;
    std::size_t layer = frontier[side].size();
    for (std::size_t i = 0;
         i < layer && meet_side < 0 && visited < budget.max_visited; ++i) {
      ArrPtr t = frontier[side].front();
      frontier[side].pop_front();
      // the backward side keeps every step invertible so the combined
      // path can be replayed from the first term
      for (Neighbor& nb : neighbors(t, th, side == 1)) {
        if (nb.term->size > size_cap) continue;
        detail::ArrKey key{nb.term};
        if (seen[side].count(key)) continue;
        seen[side].emplace(key, Entry{t, nb.step});
        frontier[side].push_back(nb.term);
        ++visited;
        if (seen[1 - side].count(key)) {
          meet = nb.term;
          meet_side = side;
          break;
        }
        if (visited >= budget.max_visited) break;
      }
    }
  }

  if (meet_side < 0) return {OracleOutcome::Exhausted, {}, visited};

  auto chain = [&](int side) {
    std::vector<RewriteStep> steps;
    ArrPtr cur = meet;
    while (true) {
      const Entry& e = seen[side].at(detail::ArrKey{cur});
      if (!e.parent) break;
      steps.push_back(e.step);
      cur = e.parent;
    }
    std::reverse(steps.begin(), steps.end());
    return steps;  // root -> meet
  };

  std::vector<RewriteStep> path = chain(0);
  std::vector<RewriteStep> back = chain(1);  // g -> meet
  for (auto it = back.rbegin(); it != back.rend(); ++it) {
    RewriteStep flipped = *it;
    flipped.reversed = !flipped.reversed;
    path.push_back(std::move(flipped));
  }
  return {OracleOutcome::Equivalent, std::move(path), visited};
}

}  // namespace relmon
