#pragma once

// Instantiation sweep over the equation schemas of a theory: every schema
// is grounded at a deterministic pool of small objects (and, for the
// naturality schemas, a pool of generator arrows), and both sides must
// evaluate to the same graph. A failure here means an equation claims more
// than the evaluation validates.

#include <algorithm>
#include <array>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <unordered_map>
#include <vector>

#include "relmon/graph_functor.hpp"
#include "relmon/schemas.hpp"
#include "relmon/terms.hpp"
#include "relmon/typing.hpp"

namespace relmon {

// All objects over I, p, q, r with at most max_nodes formula nodes whose
// measure stays within max_measure, in show() order.
inline std::vector<ObjPtr> object_pool(Theory th, int max_measure, int max_nodes = 4) {
  std::vector<std::vector<ObjPtr>> by_nodes(static_cast<std::size_t>(max_nodes) + 1);
  by_nodes[1] = {unit(), letter("p"), letter("q"), letter("r")};
  std::vector<FunctorSym> syms;
  if (theory_info(th).functor_family)
    syms = {efun(1), efun(2)};
  else
    syms = {theory_functor(th)};
  for (int n = 2; n <= max_nodes; ++n) {
    for (const ObjPtr& x : by_nodes[static_cast<std::size_t>(n) - 1])
      for (const FunctorSym& sym : syms)
        by_nodes[static_cast<std::size_t>(n)].push_back(app(sym, x));
    for (int k = 1; k < n - 1; ++k)
      for (const ObjPtr& x : by_nodes[static_cast<std::size_t>(k)])
        for (const ObjPtr& y : by_nodes[static_cast<std::size_t>(n - 1 - k)])
          by_nodes[static_cast<std::size_t>(n)].push_back(tensor(x, y));
  }
  std::vector<ObjPtr> pool;
  for (const auto& level : by_nodes)
    for (const ObjPtr& o : level)
      if (measure(o, th) <= max_measure) pool.push_back(o);
  std::sort(pool.begin(), pool.end(),
            [](const ObjPtr& a, const ObjPtr& b) { return obj_cmp(a, b) < 0; });
  return pool;
}

// Well-typed generator arrows over a slice of the object pool, used to
// ground the arrow metavariables of the naturality schemas.
inline std::vector<ArrPtr> generator_pool(Theory th, const std::vector<ObjPtr>& objs,
                                          std::size_t max_objs = 12) {
  const TheoryInfo& info = theory_info(th);
  std::optional<int> fx = info.functor_family ? std::optional<int>(1) : std::nullopt;
  std::vector<ArrPtr> pool;
  auto emit = [&](const ArrPtr& f) {
    try {
      infer_type(f, th);
      pool.push_back(f);
    } catch (const std::runtime_error&) {
    }
  };
  std::size_t limit = objs.size() < max_objs ? objs.size() : max_objs;
  for (std::size_t i = 0; i < limit; ++i) {
    const ObjPtr& x = objs[i];
    emit(lunit(x));
    emit(lunit_inv(x));
    if (info.has_eta) emit(eta(x));
    if (info.has_mu) emit(mu(x, fx));
    if (info.has_eps) emit(eps(x));
    if (info.has_delta) emit(delta(x));
    if (info.cartesian) emit(diag(x));
    if (info.cartesian) emit(bang(x));
    if (info.cocartesian) emit(codiag(x));
    if (info.cocartesian) emit(cobang(x));
  }
  std::size_t pair_limit = limit < 5 ? limit : 5;
  for (std::size_t i = 0; i < pair_limit; ++i)
    for (std::size_t j = 0; j < pair_limit; ++j) {
      if (info.braided) emit(braid(objs[i], objs[j]));
      if (info.psiL) emit(psiL(objs[i], objs[j], fx));
      if (info.psiR) emit(psiR(objs[i], objs[j], fx));
      if (info.psi_primitive || info.psi_derived) emit(psi(objs[i], objs[j]));
    }
  return pool;
}

struct SchemaSweep {
  std::string schema;
  long instances = 0;
  long failures = 0;
  std::vector<std::string> failing;  // first few offending instances
};

namespace detail {

inline void collect_obj_vars(const PObjPtr& p, std::set<int>& ovars) {
  if (!p) return;
  switch (p->kind) {
    case PObjKind::Var: ovars.insert(p->var); return;
    case PObjKind::Tensor:
      collect_obj_vars(p->left, ovars);
      collect_obj_vars(p->right, ovars);
      return;
    case PObjKind::App: collect_obj_vars(p->arg, ovars); return;
    case PObjKind::Unit: return;
  }
}

inline void collect_vars(const PArrPtr& p, std::set<int>& ovars, std::set<int>& avars) {
  if (!p) return;
  switch (p->kind) {
    case PArrKind::Var: avars.insert(p->var); return;
    case PArrKind::Const:
      collect_obj_vars(p->p1, ovars);
      collect_obj_vars(p->p2, ovars);
      collect_obj_vars(p->p3, ovars);
      return;
    case PArrKind::Comp:
    case PArrKind::Tens:
      collect_vars(p->u, ovars, avars);
      collect_vars(p->v, ovars, avars);
      return;
    case PArrKind::FApp: collect_vars(p->u, ovars, avars); return;
  }
}

// the variable sitting on the source boundary of a pattern, when that
// boundary is a bare variable
inline int boundary_src_var(const PArrPtr& p) {
  if (p->kind == PArrKind::Var) return p->var;
  if (p->kind == PArrKind::Comp) return boundary_src_var(p->v);
  return -1;
}

inline int boundary_tgt_var(const PArrPtr& p) {
  if (p->kind == PArrKind::Var) return p->var;
  if (p->kind == PArrKind::Comp) return boundary_tgt_var(p->u);
  return -1;
}

// composition constraints between bare variables: (a, b) records that slot a
// is applied directly after slot b somewhere in the pattern
inline void collect_chains(const PArrPtr& p, std::set<std::pair<int, int>>& out) {
  if (!p) return;
  if (p->kind == PArrKind::Comp) {
    int a = boundary_src_var(p->u);
    int b = boundary_tgt_var(p->v);
    if (a >= 0 && b >= 0 && a != b) out.emplace(a, b);
  }
  if (p->kind == PArrKind::Comp || p->kind == PArrKind::Tens) {
    collect_chains(p->u, out);
    collect_chains(p->v, out);
  }
  if (p->kind == PArrKind::FApp) collect_chains(p->u, out);
}

}  // namespace detail

// Ground one schema over the pools and compare graphs of both sides.
inline SchemaSweep sweep_schema(const Schema& s, Theory th, const std::vector<ObjPtr>& objs,
                                const std::vector<ArrPtr>& arrs, long max_instances = 2000) {
  SchemaSweep out;
  out.schema = s.name;
  std::set<int> ovars, avars;
  detail::collect_vars(s.lhs, ovars, avars);
  detail::collect_vars(s.rhs, ovars, avars);

  std::vector<int> aslot(avars.begin(), avars.end());
  long acomb = 1;
  for (std::size_t i = 0; i < aslot.size(); ++i) acomb *= static_cast<long>(arrs.size());
  if (aslot.empty()) acomb = 1;

  const TheoryInfo& info = theory_info(th);

  // schemas with several free arrow slots span a huge product, most of it
  // ill typed; cap the raw attempts so a sparse schema cannot stall a sweep
  long attempts = 0;
  const long attempt_cap = 200 * max_instances;

  // walking a big product in sequence would leave the high slots parked on
  // the first arrow for the whole budget, so sample the indices instead
  const bool sampled = acomb > attempt_cap;
  std::mt19937_64 mix(12021);
  const long trials = sampled ? attempt_cap : acomb;

  // blind samples almost never satisfy two composition constraints at once,
  // so slots composed after another slot are drawn from the arrows that
  // leave its target instead of from the whole pool
  std::map<int, int> chain_dep;  // slot -> the slot it composes after
  std::vector<int> order = aslot;
  std::vector<TypedArrow> typed;
  std::unordered_map<std::string, std::vector<std::size_t>> by_src;
  if (sampled) {
    std::set<std::pair<int, int>> chains;
    detail::collect_chains(s.lhs, chains);
    detail::collect_chains(s.rhs, chains);
    for (const auto& [a, b] : chains) chain_dep.emplace(a, b);
    std::vector<int> placed;
    std::set<int> done;
    while (placed.size() < aslot.size()) {
      bool progress = false;
      for (int slot : aslot) {
        if (done.count(slot)) continue;
        auto it = chain_dep.find(slot);
        if (it == chain_dep.end() || done.count(it->second)) {
          placed.push_back(slot);
          done.insert(slot);
          progress = true;
        }
      }
      if (!progress) {  // cyclic constraints: sample the rest freely
        for (int slot : aslot)
          if (!done.count(slot)) {
            placed.push_back(slot);
            done.insert(slot);
            chain_dep.erase(slot);
          }
      }
    }
    order = placed;
    if (!chain_dep.empty()) {
      typed.reserve(arrs.size());
      for (const ArrPtr& a : arrs) typed.push_back(infer_type(a, th));
      for (std::size_t i = 0; i < typed.size(); ++i)
        by_src[show(typed[i].src)].push_back(i);
    }
  }

  for (long ti = 0; ti < trials; ++ti) {
    Binding base;
    base.th = th;
    if (info.functor_family) base.fam = 1;
    if (sampled && !chain_dep.empty()) {
      std::array<std::size_t, 4> pick{};
      bool dead = false;
      for (int slot : order) {
        auto it = chain_dep.find(slot);
        if (it == chain_dep.end()) {
          pick[static_cast<std::size_t>(slot)] = mix() % arrs.size();
        } else {
          std::size_t prev = pick[static_cast<std::size_t>(it->second)];
          auto cand = by_src.find(show(typed[prev].tgt));
          if (cand == by_src.end()) {
            dead = true;
            break;
          }
          pick[static_cast<std::size_t>(slot)] =
              cand->second[mix() % cand->second.size()];
        }
        base.arrs[static_cast<std::size_t>(slot)] =
            arrs[pick[static_cast<std::size_t>(slot)]];
      }
      if (dead) {
        if (++attempts > attempt_cap) return out;
        continue;
      }
    } else {
      long ai = sampled
                    ? static_cast<long>(mix() % static_cast<unsigned long long>(acomb))
                    : ti;
      long rem = ai;
      for (int slot : aslot) {
        base.arrs[static_cast<std::size_t>(slot)] = arrs[static_cast<std::size_t>(rem) %
                                                         arrs.size()];
        rem /= static_cast<long>(arrs.size());
      }
    }
    if (!aslot.empty() && !apply_hints(s, base)) continue;

    // object variables the hints did not settle
    std::vector<int> oslot;
    for (int v : ovars)
      if (!base.objs[static_cast<std::size_t>(v)]) oslot.push_back(v);
    long ocomb = 1;
    for (std::size_t i = 0; i < oslot.size(); ++i) ocomb *= static_cast<long>(objs.size());
    if (oslot.empty()) ocomb = 1;

    long percomb = max_instances / acomb + 1;
    long step = ocomb > percomb ? ocomb / percomb : 1;
    for (long oj = 0; oj < ocomb; oj += step) {
      Binding b = base;
      long orem = oj;
      for (int slot : oslot) {
        b.objs[static_cast<std::size_t>(slot)] = objs[static_cast<std::size_t>(orem) %
                                                      objs.size()];
        orem /= static_cast<long>(objs.size());
      }
      if (++attempts > attempt_cap) return out;
      ArrPtr lhs = subst_arr(s.lhs, b);
      ArrPtr rhs = subst_arr(s.rhs, b);
      Relation gl, gr;
      try {
        infer_type(lhs, th);
        infer_type(rhs, th);
        gl = graph(lhs, th);
        gr = graph(rhs, th);
      } catch (const std::runtime_error&) {
        continue;  // instance outside the schema's typing side conditions
      }
      ++out.instances;
      if (!(gl == gr)) {
        ++out.failures;
        if (out.failing.size() < 4)
          out.failing.push_back(show(lhs) + "  vs  " + show(rhs));
      }
      if (out.instances >= max_instances) return out;
    }
  }
  return out;
}

inline std::vector<SchemaSweep> axiom_soundness_sweep(Theory th, int max_measure = 3,
                                                      long max_instances = 2000) {
  std::vector<ObjPtr> objs = object_pool(th, max_measure);
  std::vector<ArrPtr> arrs = generator_pool(th, objs);
  std::vector<SchemaSweep> out;
  for (const Schema* s : axiom_set(th))
    out.push_back(sweep_schema(*s, th, objs, arrs, max_instances));
  return out;
}

}  // namespace relmon
