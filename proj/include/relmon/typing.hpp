#pragma once

// Validation and typing of terms against a theory: which functor symbols an
// object may use, how objects are measured, the source and target of every
// arrow term, and the expansion of derived constants.

#include <string>
#include <vector>

#include "relmon/terms.hpp"

namespace relmon {

//// objects /////////////////////////////////////////////////////////////////

// Checks that every functor symbol in the object belongs to the theory:
// the distinguished symbol for single-functor theories, or an indexed family
// member E1, E2, ... where the theory has a family.
inline void validate_object(const ObjPtr& o, Theory th) {
  const TheoryInfo& info = theory_info(th);
  switch (o->kind) {
    case ObjKind::Unit:
    case ObjKind::Letter:
      return;
    case ObjKind::Tensor:
      validate_object(o->left, th);
      validate_object(o->right, th);
      return;
    case ObjKind::App: {
      bool ok;
      if (info.functor_family) {
        ok = o->sym.name == std::string(1, info.functor) && o->sym.index &&
             *o->sym.index >= 1;
      } else {
        ok = o->sym.name == std::string(1, info.functor) && !o->sym.index;
      }
      if (!ok) throw ForeignFunctorError(o->sym, th);
      validate_object(o->arg, th);
      return;
    }
  }
}

// One counted occurrence inside an object: a functor application always, a
// letter when the theory counts letters.
struct CountedPos {
  ObjPtr node;      // the App or Letter subformula
  bool is_functor;  // otherwise a letter
};

// Counted occurrences in left to right order, as the object is written. A
// functor application precedes its argument's occurrences. The unit is never
// counted.
inline std::vector<CountedPos> counted_positions(const ObjPtr& o, Theory th) {
  std::vector<CountedPos> out;
  bool letters = theory_info(th).letters_counted;
  auto walk = [&](auto&& self, const ObjPtr& t) -> void {
    switch (t->kind) {
      case ObjKind::Unit:
        return;
      case ObjKind::Letter:
        if (letters) out.push_back({t, false});
        return;
      case ObjKind::Tensor:
        self(self, t->left);
        self(self, t->right);
        return;
      case ObjKind::App:
        out.push_back({t, true});
        self(self, t->arg);
        return;
    }
  };
  walk(walk, o);
  return out;
}

// The finite ordinal an object denotes: the number of counted occurrences.
inline int measure(const ObjPtr& o, Theory th) {
  bool letters = theory_info(th).letters_counted;
  auto walk = [&](auto&& self, const ObjPtr& t) -> int {
    switch (t->kind) {
      case ObjKind::Unit: return 0;
      case ObjKind::Letter: return letters ? 1 : 0;
      case ObjKind::Tensor: return self(self, t->left) + self(self, t->right);
      case ObjKind::App: return 1 + self(self, t->arg);
    }
    return 0;
  };
  return walk(walk, o);
}

//// arrows //////////////////////////////////////////////////////////////////

struct TypedArrow {
  ArrPtr term;
  ObjPtr src;
  ObjPtr tgt;
};

namespace detail {

// Resolves the functor symbol a constant acts with: the distinguished functor
// in single-functor theories (no index may be written), the indexed family
// member in family theories (an index must be written).
inline FunctorSym constant_functor(const Arr& f, Theory th) {
  const TheoryInfo& info = theory_info(th);
  std::string token = constant_token(f.kind);
  if (info.functor_family) {
    if (!f.idx)
      throw IllTypedError("constant " + token + " needs a family index in theory " +
                          theory_name(th) + ", as in " + token + "1{...}");
    return efun(*f.idx);
  }
  if (f.idx)
    throw IllTypedError("constant " + token + " takes no family index in theory " +
                        theory_name(th));
  return theory_functor(th);
}

inline void require(bool ok, ArrKind k, Theory th) {
  if (!ok) throw IllegalConstantError(constant_token(k), th);
}

}  // namespace detail

// Source and target of an arrow term, with all embedded objects validated and
// every constant checked against the theory's signature. Composition demands
// syntactic agreement of the middle objects.
inline TypedArrow infer_type(const ArrPtr& f, Theory th) {
  const TheoryInfo& info = theory_info(th);
  auto go = [&](auto&& self, const ArrPtr& t) -> TypedArrow {
    switch (t->kind) {
      case ArrKind::Comp: {
        TypedArrow g = self(self, t->u);
        TypedArrow h = self(self, t->v);
        if (!obj_eq(h.tgt, g.src))
          throw IllTypedError("composition mismatch: " + show(t->v) + " ends at " +
                              show(h.tgt) + " but " + show(t->u) + " starts at " +
                              show(g.src));
        return {t, h.src, g.tgt};
      }
      case ArrKind::Tens: {
        TypedArrow g = self(self, t->u);
        TypedArrow h = self(self, t->v);
        return {t, tensor(g.src, h.src), tensor(g.tgt, h.tgt)};
      }
      case ArrKind::FApp: {
        ObjPtr probe = app(t->sym, unit());
        validate_object(probe, th);  // rejects symbols foreign to the theory
        TypedArrow g = self(self, t->u);
        return {t, app(t->sym, g.src), app(t->sym, g.tgt)};
      }
      default:
        break;
    }
    // constants
    for (const ObjPtr* o : {&t->o1, &t->o2, &t->o3})
      if (*o) validate_object(*o, th);
    const ObjPtr& A = t->o1;
    const ObjPtr& B = t->o2;
    const ObjPtr& C = t->o3;
    switch (t->kind) {
      case ArrKind::Id:
        detail::require(!t->idx, t->kind, th);
        return {t, A, A};
      case ArrKind::Assoc:
        detail::require(!t->idx, t->kind, th);
        return {t, tensor(tensor(A, B), C), tensor(A, tensor(B, C))};
      case ArrKind::AssocInv:
        detail::require(!t->idx, t->kind, th);
        return {t, tensor(A, tensor(B, C)), tensor(tensor(A, B), C)};
      case ArrKind::Lunit:
        detail::require(!t->idx, t->kind, th);
        return {t, tensor(unit(), A), A};
      case ArrKind::LunitInv:
        detail::require(!t->idx, t->kind, th);
        return {t, A, tensor(unit(), A)};
      case ArrKind::Runit:
        detail::require(!t->idx, t->kind, th);
        return {t, tensor(A, unit()), A};
      case ArrKind::RunitInv:
        detail::require(!t->idx, t->kind, th);
        return {t, A, tensor(A, unit())};
      case ArrKind::Braid:
        detail::require(info.braided && !t->idx, t->kind, th);
        return {t, tensor(A, B), tensor(B, A)};
      case ArrKind::PsiL: {
        detail::require(info.psiL, t->kind, th);
        FunctorSym s = detail::constant_functor(*t, th);
        return {t, tensor(app(s, A), B), app(s, tensor(A, B))};
      }
      case ArrKind::PsiR: {
        detail::require(info.psiR, t->kind, th);
        FunctorSym s = detail::constant_functor(*t, th);
        return {t, tensor(A, app(s, B)), app(s, tensor(A, B))};
      }
      case ArrKind::Psi: {
        detail::require(info.psi_primitive || info.psi_derived, t->kind, th);
        FunctorSym s = detail::constant_functor(*t, th);
        return {t, tensor(app(s, A), app(s, B)), app(s, tensor(A, B))};
      }
      case ArrKind::Psi0: {
        detail::require(info.psi_primitive || info.has_eta, t->kind, th);
        detail::require(!t->idx, t->kind, th);
        return {t, unit(), app(theory_functor(th), unit())};
      }
      case ArrKind::Eta: {
        detail::require(info.has_eta && !t->idx, t->kind, th);
        return {t, A, app(theory_functor(th), A)};
      }
      case ArrKind::Mu: {
        detail::require(info.has_mu, t->kind, th);
        FunctorSym s = detail::constant_functor(*t, th);
        return {t, app(s, app(s, A)), app(s, A)};
      }
      case ArrKind::Eps: {
        detail::require(info.has_eps && !t->idx, t->kind, th);
        return {t, app(theory_functor(th), A), A};
      }
      case ArrKind::Delta: {
        detail::require(info.has_delta && !t->idx, t->kind, th);
        FunctorSym s = theory_functor(th);
        return {t, app(s, A), app(s, app(s, A))};
      }
      case ArrKind::Diag:
        detail::require(info.cartesian && !t->idx, t->kind, th);
        return {t, A, tensor(A, A)};
      case ArrKind::Bang:
        detail::require(info.cartesian && !t->idx, t->kind, th);
        return {t, A, unit()};
      case ArrKind::Codiag:
        detail::require(info.cocartesian && !t->idx, t->kind, th);
        return {t, tensor(A, A), A};
      case ArrKind::Cobang:
        detail::require(info.cocartesian && !t->idx, t->kind, th);
        return {t, unit(), A};
      default:
        throw IllTypedError("unreachable arrow kind");
    }
  };
  return go(go, f);
}

// Rewrites derived constants to their defining terms. In the monad theories
// that carry both strengths, psi routes through the right strength, the lifted
// left strength, and the multiplication; psi0 is the unit at I. Theories where
// psi and psi0 are primitive keep them.
inline ArrPtr expand_derived(const ArrPtr& f, Theory th) {
  const TheoryInfo& info = theory_info(th);
  auto go = [&](auto&& self, const ArrPtr& t) -> ArrPtr {
    switch (t->kind) {
      case ArrKind::Comp: {
        ArrPtr u = self(self, t->u);
        ArrPtr v = self(self, t->v);
        return (u == t->u && v == t->v) ? t : comp(u, v);
      }
      case ArrKind::Tens: {
        ArrPtr u = self(self, t->u);
        ArrPtr v = self(self, t->v);
        return (u == t->u && v == t->v) ? t : tens(u, v);
      }
      case ArrKind::FApp: {
        ArrPtr u = self(self, t->u);
        return u == t->u ? t : fapp(t->sym, u);
      }
      case ArrKind::Psi: {
        if (!info.psi_derived) return t;
        FunctorSym s = theory_functor(th);
        const ObjPtr& A = t->o1;
        const ObjPtr& B = t->o2;
        return comp(mu(tensor(A, B)),
                    comp(fapp(s, psiL(A, B)), psiR(app(s, A), B)));
      }
      case ArrKind::Psi0:
        if (info.has_eta) return eta(unit());
        return t;
      default:
        return t;
    }
  };
  return go(go, f);
}

}  // namespace relmon
