#pragma once

// Exhaustive enumeration of arrow terms out of a source object, bounded by
// the number of arrow-forming operations (constants, compositions, tensors,
// functor applications). Objects inside constants do not count toward the
// weight, so id{T(p)} has weight 1 and mu{p} . eta{T(p)} has weight 3.
//
// The target of cobang is not determined by its source, so those targets
// range over the subobjects of the requested source and target.

#include <algorithm>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "relmon/terms.hpp"
#include "relmon/typing.hpp"

namespace relmon {

inline int arrow_weight(const ArrPtr& t) {
  switch (t->kind) {
    case ArrKind::Comp:
    case ArrKind::Tens:
      return 1 + arrow_weight(t->u) + arrow_weight(t->v);
    case ArrKind::FApp:
      return 1 + arrow_weight(t->u);
    default:
      return 1;
  }
}

namespace detail {

class Enumerator {
 public:
  Enumerator(Theory th, const ObjPtr& src, const ObjPtr& tgt) : th_(th) {
    collect_subobjects(src);
    collect_subobjects(tgt);
  }

  const std::vector<TypedArrow>& from(const ObjPtr& x, int weight) {
    auto key = std::make_pair(show(x), weight);
    auto it = memo_.find(key);
    if (it != memo_.end()) return it->second;
    std::vector<TypedArrow> out;
    if (weight == 1) {
      constants(x, out);
    } else {
      composites(x, weight, out);
    }
    std::sort(out.begin(), out.end(),
              [](const TypedArrow& a, const TypedArrow& b) {
                return arr_cmp(a.term, b.term) < 0;
              });
    return memo_.emplace(std::move(key), std::move(out)).first->second;
  }

 private:
  Theory th_;
  std::map<std::pair<std::string, int>, std::vector<TypedArrow>> memo_;
  std::vector<ObjPtr> pool_;  // candidate targets for cobang

  void collect_subobjects(const ObjPtr& o) {
    for (const ObjPtr& seen : pool_)
      if (obj_eq(seen, o)) return;
    pool_.push_back(o);
    if (o->kind == ObjKind::Tensor) {
      collect_subobjects(o->left);
      collect_subobjects(o->right);
    } else if (o->kind == ObjKind::App) {
      collect_subobjects(o->arg);
    }
  }

  void emit(std::vector<TypedArrow>& out, ArrPtr term) {
    try {
      out.push_back(infer_type(term, th_));
    } catch (const std::runtime_error&) {
      // shape matched but the theory rejects the constant
    }
  }

  bool under_functor(const ObjPtr& o) const {
    return o->kind == ObjKind::App &&
           o->sym.name == std::string(1, theory_info(th_).functor);
  }

  void constants(const ObjPtr& x, std::vector<TypedArrow>& out) {
    const TheoryInfo& info = theory_info(th_);
    emit(out, id(x));
    emit(out, lunit_inv(x));
    emit(out, runit_inv(x));
    if (x->kind == ObjKind::Tensor) {
      const ObjPtr& a = x->left;
      const ObjPtr& b = x->right;
      if (a->kind == ObjKind::Tensor) emit(out, assoc(a->left, a->right, b));
      if (b->kind == ObjKind::Tensor) emit(out, assoc_inv(a, b->left, b->right));
      if (a->kind == ObjKind::Unit) emit(out, lunit(b));
      if (b->kind == ObjKind::Unit) emit(out, runit(a));
      if (info.braided) emit(out, braid(a, b));
      if (info.psiL && under_functor(a)) emit(out, psiL(a->arg, b, a->sym.index));
      if (info.psiR && under_functor(b)) emit(out, psiR(a, b->arg, b->sym.index));
      if ((info.psi_primitive || info.psi_derived) && under_functor(a) &&
          under_functor(b) && a->sym == b->sym)
        emit(out, psi(a->arg, b->arg));
      if (info.cocartesian && obj_eq(a, b)) emit(out, codiag(a));
    }
    if (x->kind == ObjKind::Unit) {
      if (info.psi_primitive || info.has_eta) emit(out, psi0());
      if (info.cocartesian)
        for (const ObjPtr& b : pool_) emit(out, cobang(b));
    }
    if (info.has_eta) emit(out, eta(x));
    if (under_functor(x)) {
      if (info.has_mu && under_functor(x->arg) && x->sym == x->arg->sym)
        emit(out, mu(x->arg->arg, x->sym.index));
      if (info.has_eps) emit(out, eps(x->arg));
      if (info.has_delta) emit(out, delta(x->arg));
    }
    if (info.cartesian) {
      emit(out, diag(x));
      emit(out, bang(x));
    }
  }

  void composites(const ObjPtr& x, int weight, std::vector<TypedArrow>& out) {
    if (x->kind == ObjKind::Tensor) {
      for (int wl = 1; wl <= weight - 2; ++wl) {
        for (const TypedArrow& f : from(x->left, wl))
          for (const TypedArrow& g : from(x->right, weight - 1 - wl))
            out.push_back({tens(f.term, g.term), x, tensor(f.tgt, g.tgt)});
      }
    }
    if (x->kind == ObjKind::App &&
        x->sym.name == std::string(1, theory_info(th_).functor)) {
      for (const TypedArrow& f : from(x->arg, weight - 1))
        out.push_back({fapp(x->sym, f.term), x, app(x->sym, f.tgt)});
    }
    for (int wf = 1; wf <= weight - 2; ++wf) {
      // group the first legs by target to walk each hom set once
      for (const TypedArrow& f : from(x, wf))
        for (const TypedArrow& g : from(f.tgt, weight - 1 - wf))
          out.push_back({comp(g.term, f.term), x, g.tgt});
    }
  }
};

}  // namespace detail

inline std::vector<ArrPtr> enumerate_arrows(const ObjPtr& src, const ObjPtr& tgt,
                                            Theory th, int max_weight) {
  detail::Enumerator en(th, src, tgt);
  std::vector<ArrPtr> out;
  for (int w = 1; w <= max_weight; ++w)
    for (const TypedArrow& f : en.from(src, w))
      if (obj_eq(f.tgt, tgt)) out.push_back(f.term);
  return out;
}

inline bool arrow_exists_enumerated(const ObjPtr& src, const ObjPtr& tgt,
                                    Theory th, int max_weight) {
  detail::Enumerator en(th, src, tgt);
  for (int w = 1; w <= max_weight; ++w)
    for (const TypedArrow& f : en.from(src, w))
      if (obj_eq(f.tgt, tgt)) return true;
  return false;
}

}  // namespace relmon
