#pragma once

// Equational schemas over arrow terms, with metavariables for objects,
// arrows, and the endofunctor family index. Each theory selects the schemas
// whose constants it admits; the selected set is the equational presentation
// that the bounded rewrite search explores.

#include <algorithm>
#include <array>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "relmon/terms.hpp"
#include "relmon/typing.hpp"

namespace relmon {

//// pattern trees

struct PObj;
using PObjPtr = std::shared_ptr<const PObj>;

enum class PObjKind { Unit, Tensor, App, Var };

struct PObj {
  PObjKind kind;
  PObjPtr left, right;  // Tensor
  PObjPtr arg;          // App, always under the theory functor
  int var = -1;         // Var
};

struct PArr;
using PArrPtr = std::shared_ptr<const PArr>;

enum class PArrKind { Const, Comp, Tens, FApp, Var };

struct PArr {
  PArrKind kind;
  ArrKind ckind = ArrKind::Id;  // Const
  PObjPtr p1, p2, p3;
  PArrPtr u, v;  // Comp (u after v), Tens; FApp uses u
  int var = -1;  // Var
};

namespace pat {

inline PObjPtr pov(int id) {
  auto p = std::make_shared<PObj>();
  p->kind = PObjKind::Var;
  p->var = id;
  return p;
}

inline PObjPtr punit() {
  auto p = std::make_shared<PObj>();
  p->kind = PObjKind::Unit;
  return p;
}

inline PObjPtr pten(PObjPtr a, PObjPtr b) {
  auto p = std::make_shared<PObj>();
  p->kind = PObjKind::Tensor;
  p->left = std::move(a);
  p->right = std::move(b);
  return p;
}

inline PObjPtr papp(PObjPtr a) {
  auto p = std::make_shared<PObj>();
  p->kind = PObjKind::App;
  p->arg = std::move(a);
  return p;
}

inline PArrPtr pav(int id) {
  auto p = std::make_shared<PArr>();
  p->kind = PArrKind::Var;
  p->var = id;
  return p;
}

inline PArrPtr pconst(ArrKind k, PObjPtr a = nullptr, PObjPtr b = nullptr,
                      PObjPtr c = nullptr) {
  auto p = std::make_shared<PArr>();
  p->kind = PArrKind::Const;
  p->ckind = k;
  p->p1 = std::move(a);
  p->p2 = std::move(b);
  p->p3 = std::move(c);
  return p;
}

inline PArrPtr pcomp(PArrPtr after, PArrPtr first) {
  auto p = std::make_shared<PArr>();
  p->kind = PArrKind::Comp;
  p->u = std::move(after);
  p->v = std::move(first);
  return p;
}

inline PArrPtr ptens(PArrPtr f, PArrPtr g) {
  auto p = std::make_shared<PArr>();
  p->kind = PArrKind::Tens;
  p->u = std::move(f);
  p->v = std::move(g);
  return p;
}

inline PArrPtr pfa(PArrPtr f) {
  auto p = std::make_shared<PArr>();
  p->kind = PArrKind::FApp;
  p->u = std::move(f);
  return p;
}

}  // namespace pat

//// bindings and matching

struct Binding {
  Theory th = Theory::LLS;
  std::array<ObjPtr, 8> objs{};
  std::array<ArrPtr, 4> arrs{};
  std::optional<int> fam;  // family index, bound once per match
};

namespace detail {

// which constants carry the endofunctor (and hence its family index)
inline bool functor_constant(ArrKind k) {
  switch (k) {
    case ArrKind::PsiL:
    case ArrKind::PsiR:
    case ArrKind::Psi:
    case ArrKind::Psi0:
    case ArrKind::Eta:
    case ArrKind::Mu:
    case ArrKind::Eps:
    case ArrKind::Delta:
      return true;
    default:
      return false;
  }
}

inline bool bind_fam(Binding& b, std::optional<int> idx) {
  const TheoryInfo& info = theory_info(b.th);
  if (info.functor_family) {
    if (!idx) return false;
    if (b.fam && *b.fam != *idx) return false;
    b.fam = idx;
    return true;
  }
  return !idx;
}

inline std::optional<int> fam_index(const Binding& b) {
  return theory_info(b.th).functor_family ? b.fam : std::nullopt;
}

}  // namespace detail

inline bool match_obj(const PObjPtr& p, const ObjPtr& o, Binding& b) {
  switch (p->kind) {
    case PObjKind::Var:
      if (b.objs[p->var]) return obj_eq(b.objs[p->var], o);
      b.objs[p->var] = o;
      return true;
    case PObjKind::Unit:
      return o->kind == ObjKind::Unit;
    case PObjKind::Tensor:
      return o->kind == ObjKind::Tensor && match_obj(p->left, o->left, b) &&
             match_obj(p->right, o->right, b);
    case PObjKind::App: {
      if (o->kind != ObjKind::App) return false;
      const TheoryInfo& info = theory_info(b.th);
      if (o->sym.name != std::string(1, info.functor)) return false;
      if (!detail::bind_fam(b, o->sym.index)) return false;
      return match_obj(p->arg, o->arg, b);
    }
  }
  return false;
}

inline bool match_arr(const PArrPtr& p, const ArrPtr& t, Binding& b) {
  switch (p->kind) {
    case PArrKind::Var:
      if (b.arrs[p->var]) return arr_eq(b.arrs[p->var], t);
      b.arrs[p->var] = t;
      return true;
    case PArrKind::Const: {
      if (t->kind != p->ckind) return false;
      if (detail::functor_constant(p->ckind)) {
        if (!detail::bind_fam(b, t->idx)) return false;
      } else if (t->idx) {
        return false;
      }
      for (auto [pp, oo] : {std::make_pair(&p->p1, &t->o1),
                            std::make_pair(&p->p2, &t->o2),
                            std::make_pair(&p->p3, &t->o3)}) {
        if (*pp && !(*oo && match_obj(*pp, *oo, b))) return false;
      }
      return true;
    }
    case PArrKind::Comp:
      return t->kind == ArrKind::Comp && match_arr(p->u, t->u, b) &&
             match_arr(p->v, t->v, b);
    case PArrKind::Tens:
      return t->kind == ArrKind::Tens && match_arr(p->u, t->u, b) &&
             match_arr(p->v, t->v, b);
    case PArrKind::FApp: {
      if (t->kind != ArrKind::FApp) return false;
      const TheoryInfo& info = theory_info(b.th);
      if (t->sym.name != std::string(1, info.functor)) return false;
      if (!detail::bind_fam(b, t->sym.index)) return false;
      return match_arr(p->u, t->u, b);
    }
  }
  return false;
}

//// instantiation; a null result means some metavariable is unbound

inline ObjPtr subst_obj(const PObjPtr& p, const Binding& b) {
  switch (p->kind) {
    case PObjKind::Var:
      return b.objs[p->var];
    case PObjKind::Unit:
      return unit();
    case PObjKind::Tensor: {
      ObjPtr l = subst_obj(p->left, b);
      ObjPtr r = subst_obj(p->right, b);
      return (l && r) ? tensor(std::move(l), std::move(r)) : nullptr;
    }
    case PObjKind::App: {
      ObjPtr a = subst_obj(p->arg, b);
      if (!a) return nullptr;
      FunctorSym s{std::string(1, theory_info(b.th).functor),
                   detail::fam_index(b)};
      return app(s, std::move(a));
    }
  }
  return nullptr;
}

inline ArrPtr subst_arr(const PArrPtr& p, const Binding& b) {
  switch (p->kind) {
    case PArrKind::Var:
      return b.arrs[p->var];
    case PArrKind::Const: {
      ObjPtr o1, o2, o3;
      for (auto [pp, oo] : {std::make_pair(&p->p1, &o1),
                            std::make_pair(&p->p2, &o2),
                            std::make_pair(&p->p3, &o3)}) {
        if (*pp) {
          *oo = subst_obj(*pp, b);
          if (!*oo) return nullptr;
        }
      }
      std::optional<int> idx;
      if (detail::functor_constant(p->ckind)) idx = detail::fam_index(b);
      return detail::make_const(p->ckind, std::move(o1), std::move(o2),
                                std::move(o3), idx);
    }
    case PArrKind::Comp: {
      ArrPtr u = subst_arr(p->u, b);
      ArrPtr v = subst_arr(p->v, b);
      return (u && v) ? comp(std::move(u), std::move(v)) : nullptr;
    }
    case PArrKind::Tens: {
      ArrPtr u = subst_arr(p->u, b);
      ArrPtr v = subst_arr(p->v, b);
      return (u && v) ? tens(std::move(u), std::move(v)) : nullptr;
    }
    case PArrKind::FApp: {
      ArrPtr u = subst_arr(p->u, b);
      if (!u) return nullptr;
      FunctorSym s{std::string(1, theory_info(b.th).functor),
                   detail::fam_index(b)};
      return fapp(s, std::move(u));
    }
  }
  return nullptr;
}

//// schemas

// After a match, a hint types a bound arrow metavariable and matches the
// declared patterns against its source and target. This settles the object
// metavariables that only the other side of the equation mentions.
struct TypeHint {
  int arr;
  PObjPtr src, tgt;
};

struct Schema {
  std::string name;
  PArrPtr lhs, rhs;
  std::vector<TypeHint> hints;
  bool (*gate)(const TheoryInfo&);
};

inline bool apply_hints(const Schema& s, Binding& b) {
  for (const TypeHint& h : s.hints) {
    if (!b.arrs[h.arr]) continue;
    TypedArrow ty;
    try {
      ty = infer_type(b.arrs[h.arr], b.th);
    } catch (const std::runtime_error&) {
      return false;
    }
    if (h.src && !match_obj(h.src, ty.src, b)) return false;
    if (h.tgt && !match_obj(h.tgt, ty.tgt, b)) return false;
  }
  return true;
}

namespace detail {

inline PArrPtr pmid4(PObjPtr A, PObjPtr B, PObjPtr C, PObjPtr D) {
  // middle four interchange (A # B) # (C # D) -> (A # C) # (B # D)
  using namespace pat;
  PArrPtr step1 = pconst(ArrKind::Assoc, A, B, pten(C, D));
  PArrPtr step2 = ptens(pconst(ArrKind::Id, A), pconst(ArrKind::AssocInv, B, C, D));
  PArrPtr step3 = ptens(pconst(ArrKind::Id, A),
                        ptens(pconst(ArrKind::Braid, B, C), pconst(ArrKind::Id, D)));
  PArrPtr step4 = ptens(pconst(ArrKind::Id, A), pconst(ArrKind::Assoc, C, B, D));
  PArrPtr step5 = pconst(ArrKind::AssocInv, A, C, pten(B, D));
  return pcomp(step5, pcomp(step4, pcomp(step3, pcomp(step2, step1))));
}

inline std::vector<Schema> build_schemas() {
  using namespace pat;
  std::vector<Schema> out;

  PObjPtr A = pov(0), B = pov(1), C = pov(2), D = pov(3);
  PObjPtr A2 = pov(4), B2 = pov(5), C2 = pov(6);
  PArrPtr u = pav(0), v = pav(1), w = pav(2), x = pav(3);

  auto any = [](const TheoryInfo&) { return true; };
  auto add = [&out](std::string name, PArrPtr lhs, PArrPtr rhs,
                    std::vector<TypeHint> hints, bool (*gate)(const TheoryInfo&)) {
    out.push_back({std::move(name), std::move(lhs), std::move(rhs),
                   std::move(hints), gate});
  };

  auto pid = [](PObjPtr o) { return pconst(ArrKind::Id, std::move(o)); };
  auto pa = [](PObjPtr a, PObjPtr b, PObjPtr c) {
    return pconst(ArrKind::Assoc, std::move(a), std::move(b), std::move(c));
  };
  auto pai = [](PObjPtr a, PObjPtr b, PObjPtr c) {
    return pconst(ArrKind::AssocInv, std::move(a), std::move(b), std::move(c));
  };
  auto pl = [](PObjPtr o) { return pconst(ArrKind::Lunit, std::move(o)); };
  auto pli = [](PObjPtr o) { return pconst(ArrKind::LunitInv, std::move(o)); };
  auto pr = [](PObjPtr o) { return pconst(ArrKind::Runit, std::move(o)); };
  auto pri = [](PObjPtr o) { return pconst(ArrKind::RunitInv, std::move(o)); };
  auto pc = [](PObjPtr a, PObjPtr b) {
    return pconst(ArrKind::Braid, std::move(a), std::move(b));
  };
  auto ppl = [](PObjPtr a, PObjPtr b) {
    return pconst(ArrKind::PsiL, std::move(a), std::move(b));
  };
  auto ppr = [](PObjPtr a, PObjPtr b) {
    return pconst(ArrKind::PsiR, std::move(a), std::move(b));
  };
  auto pp = [](PObjPtr a, PObjPtr b) {
    return pconst(ArrKind::Psi, std::move(a), std::move(b));
  };
  auto pp0 = []() { return pconst(ArrKind::Psi0); };
  auto pe = [](PObjPtr o) { return pconst(ArrKind::Eta, std::move(o)); };
  auto pm = [](PObjPtr o) { return pconst(ArrKind::Mu, std::move(o)); };
  auto pex = [](PObjPtr o) { return pconst(ArrKind::Eps, std::move(o)); };
  auto pd = [](PObjPtr o) { return pconst(ArrKind::Delta, std::move(o)); };
  auto pdg = [](PObjPtr o) { return pconst(ArrKind::Diag, std::move(o)); };
  auto pbg = [](PObjPtr o) { return pconst(ArrKind::Bang, std::move(o)); };
  auto pcd = [](PObjPtr o) { return pconst(ArrKind::Codiag, std::move(o)); };
  auto pcb = [](PObjPtr o) { return pconst(ArrKind::Cobang, std::move(o)); };

  // category and bifunctor laws
  add("cat-id-left", pcomp(pid(B), u), u, {{0, A, B}}, any);
  add("cat-id-right", pcomp(u, pid(A)), u, {{0, A, B}}, any);
  add("cat-assoc", pcomp(pcomp(w, v), u), pcomp(w, pcomp(v, u)), {}, any);
  add("tens-comp", ptens(pcomp(v, u), pcomp(x, w)),
      pcomp(ptens(v, x), ptens(u, w)), {}, any);
  add("tens-id", ptens(pid(A), pid(B)), pid(pten(A, B)), {}, any);
  add("fun-comp", pfa(pcomp(v, u)), pcomp(pfa(v), pfa(u)), {}, any);
  add("fun-id", pfa(pid(A)), pid(papp(A)), {}, any);

  // monoidal isomorphisms
  add("assoc-iso-right", pcomp(pa(A, B, C), pai(A, B, C)),
      pid(pten(A, pten(B, C))), {}, any);
  add("assoc-iso-left", pcomp(pai(A, B, C), pa(A, B, C)),
      pid(pten(pten(A, B), C)), {}, any);
  add("lunit-iso-right", pcomp(pl(A), pli(A)), pid(A), {}, any);
  add("lunit-iso-left", pcomp(pli(A), pl(A)), pid(pten(punit(), A)), {}, any);
  add("runit-iso-right", pcomp(pr(A), pri(A)), pid(A), {}, any);
  add("runit-iso-left", pcomp(pri(A), pr(A)), pid(pten(A, punit())), {}, any);
  add("pentagon", pcomp(pa(A, B, pten(C, D)), pa(pten(A, B), C, D)),
      pcomp(ptens(pid(A), pa(B, C, D)),
            pcomp(pa(A, pten(B, C), D), ptens(pa(A, B, C), pid(D)))),
      {}, any);
  add("triangle", pcomp(ptens(pid(A), pl(B)), pa(A, punit(), B)),
      ptens(pr(A), pid(B)), {}, any);

  // naturality of the monoidal isomorphisms
  add("nat-assoc", pcomp(pa(A2, B2, C2), ptens(ptens(u, v), w)),
      pcomp(ptens(u, ptens(v, w)), pa(A, B, C)),
      {{0, A, A2}, {1, B, B2}, {2, C, C2}}, any);
  add("nat-assoc-inv", pcomp(pai(A2, B2, C2), ptens(u, ptens(v, w))),
      pcomp(ptens(ptens(u, v), w), pai(A, B, C)),
      {{0, A, A2}, {1, B, B2}, {2, C, C2}}, any);
  add("nat-lunit", pcomp(pl(B), ptens(pid(punit()), u)), pcomp(u, pl(A)),
      {{0, A, B}}, any);
  add("nat-lunit-inv", pcomp(pli(B), u), pcomp(ptens(pid(punit()), u), pli(A)),
      {{0, A, B}}, any);
  add("nat-runit", pcomp(pr(B), ptens(u, pid(punit()))), pcomp(u, pr(A)),
      {{0, A, B}}, any);
  add("nat-runit-inv", pcomp(pri(B), u), pcomp(ptens(u, pid(punit())), pri(A)),
      {{0, A, B}}, any);

  // braiding
  auto braided = [](const TheoryInfo& i) { return i.braided; };
  add("braid-braid", pcomp(pc(B, A), pc(A, B)), pid(pten(A, B)), {}, braided);
  add("hexagon", pcomp(pa(B, C, A), pcomp(pc(A, pten(B, C)), pa(A, B, C))),
      pcomp(ptens(pid(B), pc(A, C)), pcomp(pa(B, A, C), ptens(pc(A, B), pid(C)))),
      {}, braided);
  add("nat-braid", pcomp(pc(A2, B2), ptens(u, v)), pcomp(ptens(v, u), pc(A, B)),
      {{0, A, A2}, {1, B, B2}}, braided);

  // left strength
  auto has_psiL = [](const TheoryInfo& i) { return i.psiL; };
  add("psiL-assoc", pcomp(pfa(pa(A, B, C)), pcomp(ppl(pten(A, B), C), ptens(ppl(A, B), pid(C)))),
      pcomp(ppl(A, pten(B, C)), pa(papp(A), B, C)), {}, has_psiL);
  add("psiL-runit", pcomp(pfa(pr(A)), ppl(A, punit())), pr(papp(A)), {}, has_psiL);
  add("nat-psiL", pcomp(ppl(A2, B2), ptens(pfa(u), v)),
      pcomp(pfa(ptens(u, v)), ppl(A, B)), {{0, A, A2}, {1, B, B2}}, has_psiL);

  // right strength
  auto has_psiR = [](const TheoryInfo& i) { return i.psiR; };
  add("psiR-assoc", pcomp(pfa(pa(A, B, C)), ppr(pten(A, B), C)),
      pcomp(ppr(A, pten(B, C)), pcomp(ptens(pid(A), ppr(B, C)), pa(A, B, papp(C)))),
      {}, has_psiR);
  add("psiR-lunit", pcomp(pfa(pl(A)), ppr(punit(), A)), pl(papp(A)), {}, has_psiR);
  add("nat-psiR", pcomp(ppr(A2, B2), ptens(u, pfa(v))),
      pcomp(pfa(ptens(u, v)), ppr(A, B)), {{0, A, A2}, {1, B, B2}}, has_psiR);

  // the two strengths against each other
  auto both_str = [](const TheoryInfo& i) { return i.psiL && i.psiR; };
  add("strength-assoc",
      pcomp(pfa(pa(A, B, C)), pcomp(ppl(pten(A, B), C), ptens(ppr(A, B), pid(C)))),
      pcomp(ppr(A, pten(B, C)), pcomp(ptens(pid(A), ppl(B, C)), pa(A, papp(B), C))),
      {}, both_str);
  add("strength-braid", pcomp(pfa(pc(A, B)), ppl(A, B)),
      pcomp(ppr(B, A), pc(papp(A), B)),
      {}, [](const TheoryInfo& i) { return i.psiL && i.psiR && i.braided; });
  add("strength-mu",
      pcomp(pm(pten(A, B)), pcomp(pfa(ppl(A, B)), ppr(papp(A), B))),
      pcomp(pm(pten(A, B)), pcomp(pfa(ppr(A, B)), ppl(A, papp(B)))),
      {}, [](const TheoryInfo& i) { return i.psiL && i.psiR && i.has_mu; });

  // strengths against the monad structure
  add("psiL-eta", pcomp(ppl(A, B), ptens(pe(A), pid(B))), pe(pten(A, B)), {},
      [](const TheoryInfo& i) { return i.psiL && i.has_eta; });
  add("psiL-mu", pcomp(ppl(A, B), ptens(pm(A), pid(B))),
      pcomp(pm(pten(A, B)), pcomp(pfa(ppl(A, B)), ppl(papp(A), B))), {},
      [](const TheoryInfo& i) { return i.psiL && i.has_mu; });
  add("psiR-eta", pcomp(ppr(A, B), ptens(pid(A), pe(B))), pe(pten(A, B)), {},
      [](const TheoryInfo& i) { return i.psiR && i.has_eta; });
  add("psiR-mu", pcomp(ppr(A, B), ptens(pid(A), pm(B))),
      pcomp(pm(pten(A, B)), pcomp(pfa(ppr(A, B)), ppr(A, papp(B)))), {},
      [](const TheoryInfo& i) { return i.psiR && i.has_mu && i.has_eta; });

  // strengths against the comonad structure
  auto psiL_co = [](const TheoryInfo& i) { return i.psiL && i.has_eps; };
  add("psiL-eps", pcomp(pex(pten(A, B)), ppl(A, B)), ptens(pex(A), pid(B)), {},
      psiL_co);
  add("psiL-delta", pcomp(pd(pten(A, B)), ppl(A, B)),
      pcomp(pfa(ppl(A, B)), pcomp(ppl(papp(A), B), ptens(pd(A), pid(B)))), {},
      psiL_co);

  // monad and comonad laws
  auto monad = [](const TheoryInfo& i) { return i.has_eta && i.has_mu; };
  add("monad-unit-left", pcomp(pm(A), pe(papp(A))), pid(papp(A)), {}, monad);
  add("monad-unit-right", pcomp(pm(A), pfa(pe(A))), pid(papp(A)), {}, monad);
  add("monad-assoc", pcomp(pm(A), pm(papp(A))), pcomp(pm(A), pfa(pm(A))), {},
      [](const TheoryInfo& i) { return i.has_mu; });
  add("nat-eta", pcomp(pe(B), u), pcomp(pfa(u), pe(A)), {{0, A, B}},
      [](const TheoryInfo& i) { return i.has_eta; });
  add("nat-mu", pcomp(pm(B), pfa(pfa(u))), pcomp(pfa(u), pm(A)), {{0, A, B}},
      [](const TheoryInfo& i) { return i.has_mu; });

  auto comonad = [](const TheoryInfo& i) { return i.has_eps && i.has_delta; };
  add("comonad-counit-left", pcomp(pex(papp(A)), pd(A)), pid(papp(A)), {},
      comonad);
  add("comonad-counit-right", pcomp(pfa(pex(A)), pd(A)), pid(papp(A)), {},
      comonad);
  add("comonad-assoc", pcomp(pd(papp(A)), pd(A)), pcomp(pfa(pd(A)), pd(A)), {},
      [](const TheoryInfo& i) { return i.has_delta; });
  add("nat-eps", pcomp(u, pex(A)), pcomp(pex(B), pfa(u)), {{0, A, B}},
      [](const TheoryInfo& i) { return i.has_eps; });
  add("nat-delta", pcomp(pd(B), pfa(u)), pcomp(pfa(pfa(u)), pd(A)), {{0, A, B}},
      [](const TheoryInfo& i) { return i.has_delta; });

  // the monoidal transformation on pairs, primitive or derived
  auto has_psi = [](const TheoryInfo& i) { return i.psi_primitive || i.psi_derived; };
  add("psi-assoc",
      pcomp(pfa(pa(A, B, C)), pcomp(pp(pten(A, B), C), ptens(pp(A, B), pid(papp(C))))),
      pcomp(pp(A, pten(B, C)), pcomp(ptens(pid(papp(A)), pp(B, C)), pa(papp(A), papp(B), papp(C)))),
      {}, has_psi);
  add("nat-psi", pcomp(pp(A2, B2), ptens(pfa(u), pfa(v))),
      pcomp(pfa(ptens(u, v)), pp(A, B)), {{0, A, A2}, {1, B, B2}}, has_psi);
  add("psi-braid", pcomp(pfa(pc(A, B)), pp(A, B)),
      pcomp(pp(B, A), pc(papp(A), papp(B))), {},
      [](const TheoryInfo& i) { return (i.psi_primitive || i.psi_derived) && i.braided; });

  auto psi_and_unit = [](const TheoryInfo& i) {
    return (i.psi_primitive || i.psi_derived) && (i.psi_primitive || i.has_eta);
  };
  add("psi-unit-left", pcomp(pfa(pl(A)), pcomp(pp(punit(), A), ptens(pp0(), pid(papp(A))))),
      pl(papp(A)), {}, psi_and_unit);
  add("psi-unit-right", pcomp(pfa(pr(A)), pcomp(pp(A, punit()), ptens(pid(papp(A)), pp0()))),
      pr(papp(A)), {}, psi_and_unit);

  add("psi-eta", pcomp(pp(A, B), ptens(pe(A), pe(B))), pe(pten(A, B)), {},
      [](const TheoryInfo& i) { return i.psi_derived && i.has_eta; });
  add("psi-mu", pcomp(pp(A, B), ptens(pm(A), pm(B))),
      pcomp(pm(pten(A, B)), pcomp(pfa(pp(A, B)), pp(papp(A), papp(B)))), {},
      [](const TheoryInfo& i) { return i.psi_derived && i.has_mu && i.has_eta; });

  auto psi_co = [](const TheoryInfo& i) {
    return (i.psi_primitive || i.psi_derived) && i.has_eps;
  };
  add("psi-eps", pcomp(pex(pten(A, B)), pp(A, B)), ptens(pex(A), pex(B)), {},
      psi_co);
  add("psi-delta", pcomp(pd(pten(A, B)), pp(A, B)),
      pcomp(pfa(pp(A, B)), pcomp(pp(papp(A), papp(B)), ptens(pd(A), pd(B)))), {},
      psi_co);
  add("psi0-eps", pcomp(pex(punit()), pp0()), pid(punit()), {}, psi_co);
  add("psi0-delta", pcomp(pd(punit()), pp0()), pcomp(pfa(pp0()), pp0()), {},
      psi_co);

  // definitions of the derived transformations
  add("psi-expand", pp(A, B),
      pcomp(pm(pten(A, B)), pcomp(pfa(ppl(A, B)), ppr(papp(A), B))), {},
      [](const TheoryInfo& i) { return i.psi_derived && i.has_mu; });
  add("psi0-expand", pp0(), pe(punit()), {},
      [](const TheoryInfo& i) { return i.has_eta; });

  // cartesian structure
  auto cart = [](const TheoryInfo& i) { return i.cartesian; };
  add("nat-diag", pcomp(pdg(B), u), pcomp(ptens(u, u), pdg(A)), {{0, A, B}},
      cart);
  add("diag-coassoc", pcomp(pa(A, A, A), pcomp(ptens(pdg(A), pid(A)), pdg(A))),
      pcomp(ptens(pid(A), pdg(A)), pdg(A)), {}, cart);
  add("diag-counit-left", pcomp(pl(A), pcomp(ptens(pbg(A), pid(A)), pdg(A))),
      pid(A), {}, cart);
  add("diag-counit-right", pcomp(pr(A), pcomp(ptens(pid(A), pbg(A)), pdg(A))),
      pid(A), {}, cart);
  add("diag-cocomm", pcomp(pc(A, A), pdg(A)), pdg(A), {}, cart);
  add("diag-tensor", pdg(pten(A, B)),
      pcomp(pmid4(A, A, B, B), ptens(pdg(A), pdg(B))), {}, cart);
  add("bang-tensor", pbg(pten(A, B)), pcomp(pl(punit()), ptens(pbg(A), pbg(B))),
      {}, cart);
  add("diag-unit", pdg(punit()), pli(punit()), {}, cart);
  add("bang-unit", pbg(punit()), pid(punit()), {}, cart);
  add("terminal-unique", u, pbg(A), {{0, A, punit()}}, cart);
  add("psi-diag", pfa(pdg(A)), pcomp(pp(A, A), pdg(papp(A))), {},
      [](const TheoryInfo& i) { return i.cartesian && (i.psi_primitive || i.psi_derived); });

  // cocartesian structure
  auto cocart = [](const TheoryInfo& i) { return i.cocartesian; };
  add("nat-codiag", pcomp(u, pcd(A)), pcomp(pcd(B), ptens(u, u)), {{0, A, B}},
      cocart);
  add("codiag-assoc", pcomp(pcd(A), pcomp(ptens(pcd(A), pid(A)), pai(A, A, A))),
      pcomp(pcd(A), ptens(pid(A), pcd(A))), {}, cocart);
  add("codiag-unit-left", pcomp(pcd(A), pcomp(ptens(pcb(A), pid(A)), pli(A))),
      pid(A), {}, cocart);
  add("codiag-unit-right", pcomp(pcd(A), pcomp(ptens(pid(A), pcb(A)), pri(A))),
      pid(A), {}, cocart);
  add("codiag-comm", pcomp(pcd(A), pc(A, A)), pcd(A), {}, cocart);
  add("codiag-tensor", pcd(pten(A, B)),
      pcomp(ptens(pcd(A), pcd(B)), pmid4(A, B, A, B)), {}, cocart);
  add("cobang-tensor", pcb(pten(A, B)), pcomp(ptens(pcb(A), pcb(B)), pli(punit())),
      {}, cocart);
  add("codiag-unit", pcd(punit()), pl(punit()), {}, cocart);
  add("cobang-unit", pcb(punit()), pid(punit()), {}, cocart);
  add("initial-unique", u, pcb(B), {{0, punit(), B}}, cocart);

  // the coproduct route to the monoidal transformation
  {
    PArrPtr in1 = pcomp(ptens(pid(A), pcb(B)), pri(A));
    PArrPtr in2 = pcomp(ptens(pcb(A), pid(B)), pli(B));
    add("psi-def-coproduct", pp(A, B),
        pcomp(pcd(papp(pten(A, B))), ptens(pfa(in1), pfa(in2))), {},
        [](const TheoryInfo& i) {
          return i.cocartesian && (i.psi_primitive || i.psi_derived);
        });
  }
  add("psi0-def-coproduct", pp0(), pcb(papp(punit())), {},
      [](const TheoryInfo& i) {
        return i.cocartesian && (i.psi_primitive || i.has_eta);
      });

  return out;
}

}  // namespace detail

inline const std::vector<Schema>& all_schemas() {
  static const std::vector<Schema> schemas = detail::build_schemas();
  return schemas;
}

inline const std::vector<const Schema*>& axiom_set(Theory th) {
  static const auto sets = [] {
    std::array<std::vector<const Schema*>, theory_count> all;
    for (std::size_t i = 0; i < theory_count; ++i) {
      const TheoryInfo& info = theory_info(static_cast<Theory>(i));
      for (const Schema& s : all_schemas())
        if (s.gate(info)) all[i].push_back(&s);
      std::sort(all[i].begin(), all[i].end(),
                [](const Schema* a, const Schema* b) { return a->name < b->name; });
    }
    return all;
  }();
  return sets[static_cast<std::size_t>(th)];
}

}  // namespace relmon
