#pragma once

// Staged factorization of arrow terms. A term is developed into a list of
// factors, each a single constant acting at a whisker path, and adjacent
// factors are reordered by naturality, interchange, and the theory's
// permutation equations until the stage classes ascend along the list.
// The stages per theory:
//
//   LLS, LRS, LS, LcS   structural | eta and mu
//   CS                  diag/bang (non-tensor index) | structural and mu | eta
//   DS                  monad part | codiag/cobang with letter index
//   LLSco, McSco        eps/delta | structural
//   MSco                eps | delta | structural without psi0 | psi0 tail
//   CSco                diag/bang (non-tensor index) | eps/delta | structural
//   DSco                eps/delta | cocartesian structural
//   Lc                  structural
//   Lcmu                structural | mu
//
// The MSco psi0 tail may also contain unitor factors acting on letter-free
// objects: an arrow such as L[l'{I}] . psi0 has no form with psi0 factors
// strictly last, because nothing except psi0 introduces L over the unit and
// nothing structural removes it again. CSco places diag/bang before eps and
// delta for the analogous reason: (eps{p} * id{L(p)}) . diag{L(p)} has no
// form with the diagonal after the counit.
//
// Derived constants are expanded before developing: psi and psi0 in the
// theories where they abbreviate a strength composite, and the coproduct
// definitions of psi and psi0 in DSco. In cartesian and cocartesian
// theories diag, bang, codiag and cobang are split until their index is
// atomic (a letter for codiag/cobang, a letter or functor application for
// diag/bang); the codiag split over a functor application routes through
// the strengths and the multiplication.

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "relmon/terms.hpp"
#include "relmon/typing.hpp"

namespace relmon {

struct NormalizationBudgetExceeded : std::runtime_error {
  explicit NormalizationBudgetExceeded(int budget)
      : std::runtime_error("normalization exceeded its step budget of " +
                           std::to_string(budget)) {}
};

inline constexpr int default_normalize_budget = 20000;

//// factors /////////////////////////////////////////////////////////////////

// One step into an object: left or right of a tensor, or through a functor.
enum class Dir : unsigned char { L, R, F };

// A constant acting at a whisker path. The object parameters of the head
// are recovered from the source object threaded through the factor list,
// except for cobang, whose target is free and carried explicitly.
struct Factor {
  std::vector<Dir> path;
  ArrKind kind;
  std::optional<int> idx;
  ObjPtr cobang_tgt;
};

namespace detail {

inline std::vector<Dir> path_cat(const std::vector<Dir>& p,
                                 std::initializer_list<Dir> mid,
                                 const std::vector<Dir>& tail, std::size_t tail_from) {
  std::vector<Dir> out = p;
  out.insert(out.end(), mid.begin(), mid.end());
  out.insert(out.end(), tail.begin() + static_cast<std::ptrdiff_t>(tail_from), tail.end());
  return out;
}

inline Factor at(std::vector<Dir> path, ArrKind kind,
                 std::optional<int> idx = std::nullopt, ObjPtr cobang_tgt = nullptr) {
  return Factor{std::move(path), kind, idx, std::move(cobang_tgt)};
}

inline Factor moved(const Factor& f, std::vector<Dir> path) {
  return Factor{std::move(path), f.kind, f.idx, f.cobang_tgt};
}

struct FactorMisfit : std::logic_error {
  FactorMisfit(const Factor& f, const ObjPtr& local)
      : std::logic_error(std::string("factor ") + constant_token(f.kind) +
                         " does not fit source " + show(local)) {}
};

inline const ObjPtr& obj_at(const ObjPtr& o, const std::vector<Dir>& path, std::size_t i) {
  if (i == path.size()) return o;
  switch (path[i]) {
    case Dir::L:
      if (o->kind != ObjKind::Tensor) throw std::logic_error("path runs off " + show(o));
      return obj_at(o->left, path, i + 1);
    case Dir::R:
      if (o->kind != ObjKind::Tensor) throw std::logic_error("path runs off " + show(o));
      return obj_at(o->right, path, i + 1);
    case Dir::F:
      if (o->kind != ObjKind::App) throw std::logic_error("path runs off " + show(o));
      return obj_at(o->arg, path, i + 1);
  }
  throw std::logic_error("bad direction");
}

inline ObjPtr obj_replace(const ObjPtr& o, const std::vector<Dir>& path, std::size_t i,
                          const ObjPtr& sub) {
  if (i == path.size()) return sub;
  switch (path[i]) {
    case Dir::L: return tensor(obj_replace(o->left, path, i + 1, sub), o->right);
    case Dir::R: return tensor(o->left, obj_replace(o->right, path, i + 1, sub));
    case Dir::F: return app(o->sym, obj_replace(o->arg, path, i + 1, sub));
  }
  throw std::logic_error("bad direction");
}

struct Head {
  ArrPtr arrow;
  ObjPtr tgt;
};

// Build the head constant against its local source and compute its local
// target. The shape checks catch engine bugs, not user input.
inline Head make_head(const Factor& f, const ObjPtr& o, Theory th) {
  auto need_tensor = [&]() -> const ObjPtr& {
    if (o->kind != ObjKind::Tensor) throw FactorMisfit(f, o);
    return o;
  };
  auto need_app = [&](const ObjPtr& x) -> const ObjPtr& {
    if (x->kind != ObjKind::App) throw FactorMisfit(f, o);
    return x;
  };
  switch (f.kind) {
    case ArrKind::Id:
      return {id(o), o};
    case ArrKind::Assoc: {
      need_tensor();
      if (o->left->kind != ObjKind::Tensor) throw FactorMisfit(f, o);
      const ObjPtr &a = o->left->left, &b = o->left->right, &c = o->right;
      return {assoc(a, b, c), tensor(a, tensor(b, c))};
    }
    case ArrKind::AssocInv: {
      need_tensor();
      if (o->right->kind != ObjKind::Tensor) throw FactorMisfit(f, o);
      const ObjPtr &a = o->left, &b = o->right->left, &c = o->right->right;
      return {assoc_inv(a, b, c), tensor(tensor(a, b), c)};
    }
    case ArrKind::Lunit: {
      need_tensor();
      if (o->left->kind != ObjKind::Unit) throw FactorMisfit(f, o);
      return {lunit(o->right), o->right};
    }
    case ArrKind::LunitInv:
      return {lunit_inv(o), tensor(unit(), o)};
    case ArrKind::Runit: {
      need_tensor();
      if (o->right->kind != ObjKind::Unit) throw FactorMisfit(f, o);
      return {runit(o->left), o->left};
    }
    case ArrKind::RunitInv:
      return {runit_inv(o), tensor(o, unit())};
    case ArrKind::Braid: {
      need_tensor();
      return {braid(o->left, o->right), tensor(o->right, o->left)};
    }
    case ArrKind::PsiL: {
      need_tensor();
      const ObjPtr& ta = need_app(o->left);
      return {psiL(ta->arg, o->right, f.idx), app(ta->sym, tensor(ta->arg, o->right))};
    }
    case ArrKind::PsiR: {
      need_tensor();
      const ObjPtr& tb = need_app(o->right);
      return {psiR(o->left, tb->arg, f.idx), app(tb->sym, tensor(o->left, tb->arg))};
    }
    case ArrKind::Psi: {
      need_tensor();
      const ObjPtr& ta = need_app(o->left);
      const ObjPtr& tb = need_app(o->right);
      if (!(ta->sym == tb->sym)) throw FactorMisfit(f, o);
      return {psi(ta->arg, tb->arg), app(ta->sym, tensor(ta->arg, tb->arg))};
    }
    case ArrKind::Psi0: {
      if (o->kind != ObjKind::Unit) throw FactorMisfit(f, o);
      return {psi0(), app(theory_functor(th), unit())};
    }
    case ArrKind::Eta:
      return {eta(o), app(theory_functor(th), o)};
    case ArrKind::Mu: {
      const ObjPtr& outer = need_app(o);
      const ObjPtr& inner = need_app(outer->arg);
      if (!(outer->sym == inner->sym)) throw FactorMisfit(f, o);
      return {mu(inner->arg, f.idx), app(outer->sym, inner->arg)};
    }
    case ArrKind::Eps: {
      const ObjPtr& la = need_app(o);
      return {eps(la->arg), la->arg};
    }
    case ArrKind::Delta: {
      const ObjPtr& la = need_app(o);
      return {delta(la->arg), app(la->sym, app(la->sym, la->arg))};
    }
    case ArrKind::Diag:
      return {diag(o), tensor(o, o)};
    case ArrKind::Bang:
      return {bang(o), unit()};
    case ArrKind::Codiag: {
      need_tensor();
      if (!obj_eq(o->left, o->right)) throw FactorMisfit(f, o);
      return {codiag(o->left), o->left};
    }
    case ArrKind::Cobang: {
      if (o->kind != ObjKind::Unit || !f.cobang_tgt) throw FactorMisfit(f, o);
      return {cobang(f.cobang_tgt), f.cobang_tgt};
    }
    default:
      throw std::logic_error("combinator stored as factor head");
  }
}

}  // namespace detail

// Whisker a factor against a global source: the factor as an arrow from
// that source, together with the global target.
struct RealizedFactor {
  ArrPtr arrow;
  ObjPtr tgt;
};

inline RealizedFactor realize_factor(const Factor& f, const ObjPtr& src, Theory th) {
  auto go = [&](auto&& self, const ObjPtr& o, std::size_t i) -> RealizedFactor {
    if (i == f.path.size()) {
      detail::Head h = detail::make_head(f, o, th);
      return {h.arrow, h.tgt};
    }
    switch (f.path[i]) {
      case Dir::L: {
        if (o->kind != ObjKind::Tensor) throw detail::FactorMisfit(f, o);
        RealizedFactor in = self(self, o->left, i + 1);
        return {tens(in.arrow, id(o->right)), tensor(in.tgt, o->right)};
      }
      case Dir::R: {
        if (o->kind != ObjKind::Tensor) throw detail::FactorMisfit(f, o);
        RealizedFactor in = self(self, o->right, i + 1);
        return {tens(id(o->left), in.arrow), tensor(o->left, in.tgt)};
      }
      case Dir::F: {
        if (o->kind != ObjKind::App) throw detail::FactorMisfit(f, o);
        RealizedFactor in = self(self, o->arg, i + 1);
        return {fapp(o->sym, in.arrow), app(o->sym, in.tgt)};
      }
    }
    throw std::logic_error("bad direction");
  };
  return go(go, src, 0);
}

// Flatten a term into factors in application order. Identities vanish.
inline std::vector<Factor> develop(const ArrPtr& t) {
  std::vector<Factor> out;
  std::vector<Dir> prefix;
  auto go = [&](auto&& self, const ArrPtr& f) -> void {
    switch (f->kind) {
      case ArrKind::Comp:
        self(self, f->v);
        self(self, f->u);
        return;
      case ArrKind::Tens:
        prefix.push_back(Dir::L);
        self(self, f->u);
        prefix.back() = Dir::R;
        self(self, f->v);
        prefix.pop_back();
        return;
      case ArrKind::FApp:
        prefix.push_back(Dir::F);
        self(self, f->u);
        prefix.pop_back();
        return;
      case ArrKind::Id:
        return;
      default:
        out.push_back(Factor{prefix, f->kind, f->idx,
                             f->kind == ArrKind::Cobang ? f->o1 : nullptr});
        return;
    }
  };
  go(go, t);
  return out;
}

inline ArrPtr recompose(const std::vector<Factor>& fs, const ObjPtr& src, Theory th) {
  ArrPtr acc = nullptr;
  ObjPtr o = src;
  for (const Factor& f : fs) {
    RealizedFactor r = realize_factor(f, o, th);
    acc = acc ? comp(r.arrow, acc) : r.arrow;
    o = r.tgt;
  }
  return acc ? acc : id(src);
}

//// stage classes ///////////////////////////////////////////////////////////

inline int stage_count(Theory th) {
  switch (th) {
    case Theory::CS: case Theory::CSco: return 3;
    case Theory::MSco: return 4;
    case Theory::Lc: return 1;
    default: return 2;
  }
}

inline int stage_class(Theory th, ArrKind k) {
  switch (th) {
    case Theory::LLS: case Theory::LRS: case Theory::LS: case Theory::LcS:
      return (k == ArrKind::Eta || k == ArrKind::Mu) ? 1 : 0;
    case Theory::CS:
      if (k == ArrKind::Diag || k == ArrKind::Bang) return 0;
      return k == ArrKind::Eta ? 2 : 1;
    case Theory::DS:
      return (k == ArrKind::Codiag || k == ArrKind::Cobang) ? 1 : 0;
    case Theory::LLSco: case Theory::McSco:
      return (k == ArrKind::Eps || k == ArrKind::Delta) ? 0 : 1;
    case Theory::MSco:
      if (k == ArrKind::Eps) return 0;
      if (k == ArrKind::Delta) return 1;
      return k == ArrKind::Psi0 ? 3 : 2;
    case Theory::CSco:
      if (k == ArrKind::Diag || k == ArrKind::Bang) return 0;
      return (k == ArrKind::Eps || k == ArrKind::Delta) ? 1 : 2;
    case Theory::DSco:
      return (k == ArrKind::Eps || k == ArrKind::Delta) ? 0 : 1;
    case Theory::Lc:
      return 0;
    case Theory::Lcmu:
      return k == ArrKind::Mu ? 1 : 0;
  }
  return 0;
}

inline const char* stage_descriptor(Theory th, int stage) {
  switch (th) {
    case Theory::LLS: case Theory::LRS: case Theory::LS: case Theory::LcS:
      return stage == 0 ? "structural factors" : "eta and mu factors";
    case Theory::CS:
      if (stage == 0) return "diag and bang factors with atomic index";
      return stage == 1 ? "structural and mu factors" : "eta factors";
    case Theory::DS:
      return stage == 0 ? "monad factors" : "codiag and cobang factors with letter index";
    case Theory::LLSco: case Theory::McSco:
      return stage == 0 ? "eps and delta factors" : "structural factors";
    case Theory::MSco:
      switch (stage) {
        case 0: return "eps factors";
        case 1: return "delta factors";
        case 2: return "structural factors without psi0";
        default: return "psi0 factors and letter-free unitors";
      }
    case Theory::CSco:
      if (stage == 0) return "diag and bang factors with atomic index";
      return stage == 1 ? "eps and delta factors" : "structural factors";
    case Theory::DSco:
      return stage == 0 ? "eps and delta factors" : "cocartesian structural factors";
    case Theory::Lc:
      return "structural factors";
    case Theory::Lcmu:
      return stage == 0 ? "structural factors" : "mu factors";
  }
  return "";
}

//// derived-constant expansion and atomization //////////////////////////////

namespace detail {

// In DSco psi and psi0 are primitive for typing but abbreviations for the
// staged form: psi routes through the injections and the codiagonal, psi0
// is the arrow from the initial object.
inline ArrPtr expand_cocartesian_psi(const ArrPtr& t, Theory th) {
  FunctorSym s = theory_functor(th);
  auto go = [&](auto&& self, const ArrPtr& f) -> ArrPtr {
    switch (f->kind) {
      case ArrKind::Comp: return comp(self(self, f->u), self(self, f->v));
      case ArrKind::Tens: return tens(self(self, f->u), self(self, f->v));
      case ArrKind::FApp: return fapp(f->sym, self(self, f->u));
      case ArrKind::Psi: {
        const ObjPtr &a = f->o1, &b = f->o2;
        ArrPtr inj1 = comp(tens(id(a), cobang(b)), runit_inv(a));
        ArrPtr inj2 = comp(tens(cobang(a), id(b)), lunit_inv(b));
        return comp(codiag(app(s, tensor(a, b))), tens(fapp(s, inj1), fapp(s, inj2)));
      }
      case ArrKind::Psi0:
        return cobang(app(s, unit()));
      default:
        return f;
    }
  };
  return go(go, t);
}

// Middle-four interchange (A # B) # (C # D) -> (A # C) # (B # D) as factors
// at a path: swaps the two middle components.
inline void push_mid4(std::vector<Factor>& out, const std::vector<Dir>& p) {
  out.push_back(at(p, ArrKind::Assoc));
  out.push_back(at(path_cat(p, {Dir::R}, {}, 0), ArrKind::AssocInv));
  out.push_back(at(path_cat(p, {Dir::R, Dir::L}, {}, 0), ArrKind::Braid));
  out.push_back(at(path_cat(p, {Dir::R}, {}, 0), ArrKind::Assoc));
  out.push_back(at(p, ArrKind::AssocInv));
}

// Split diag/bang/codiag/cobang until the head index is atomic. Appends
// replacement factors (which may themselves need splitting) or the factor
// unchanged; returns false when nothing had to change.
inline bool atomize_factor(const Factor& f, const ObjPtr& local, Theory th,
                           std::vector<Factor>& out) {
  const TheoryInfo& info = theory_info(th);
  const std::vector<Dir>& p = f.path;
  if (info.cartesian && f.kind == ArrKind::Diag) {
    if (local->kind == ObjKind::Tensor) {
      out.push_back(at(path_cat(p, {Dir::L}, {}, 0), ArrKind::Diag));
      out.push_back(at(path_cat(p, {Dir::R}, {}, 0), ArrKind::Diag));
      push_mid4(out, p);
      return true;
    }
    if (local->kind == ObjKind::Unit) {
      out.push_back(at(p, ArrKind::LunitInv));
      return true;
    }
  }
  if (info.cartesian && f.kind == ArrKind::Bang) {
    if (local->kind == ObjKind::Tensor) {
      out.push_back(at(path_cat(p, {Dir::L}, {}, 0), ArrKind::Bang));
      out.push_back(at(path_cat(p, {Dir::R}, {}, 0), ArrKind::Bang));
      out.push_back(at(p, ArrKind::Lunit));
      return true;
    }
    if (local->kind == ObjKind::Unit) return true;  // bang at I is the identity
  }
  if (th == Theory::DS && f.kind == ArrKind::Codiag) {
    const ObjPtr& a = local->left;  // local is A # A, checked by make_head later
    if (a->kind == ObjKind::Tensor) {
      push_mid4(out, p);
      out.push_back(at(path_cat(p, {Dir::L}, {}, 0), ArrKind::Codiag));
      out.push_back(at(path_cat(p, {Dir::R}, {}, 0), ArrKind::Codiag));
      return true;
    }
    if (a->kind == ObjKind::Unit) {
      out.push_back(at(p, ArrKind::Lunit));
      return true;
    }
    if (a->kind == ObjKind::App) {
      // T(X) # T(X) -> T(T(X) # X) -> TT(X # X) -> T(X # X) -> T(X)
      out.push_back(at(p, ArrKind::PsiR));
      out.push_back(at(path_cat(p, {Dir::F}, {}, 0), ArrKind::PsiL));
      out.push_back(at(p, ArrKind::Mu));
      out.push_back(at(path_cat(p, {Dir::F}, {}, 0), ArrKind::Codiag));
      return true;
    }
  }
  if (th == Theory::DS && f.kind == ArrKind::Cobang) {
    const ObjPtr& b = f.cobang_tgt;
    if (b->kind == ObjKind::Tensor) {
      out.push_back(at(p, ArrKind::LunitInv));
      out.push_back(at(path_cat(p, {Dir::L}, {}, 0), ArrKind::Cobang, std::nullopt, b->left));
      out.push_back(at(path_cat(p, {Dir::R}, {}, 0), ArrKind::Cobang, std::nullopt, b->right));
      return true;
    }
    if (b->kind == ObjKind::Unit) return true;
    if (b->kind == ObjKind::App) {
      out.push_back(at(p, ArrKind::Eta));
      out.push_back(at(path_cat(p, {Dir::F}, {}, 0), ArrKind::Cobang, std::nullopt, b->arg));
      return true;
    }
  }
  out.push_back(f);
  return false;
}

inline std::vector<Factor> atomize_pass(const std::vector<Factor>& fs, const ObjPtr& src,
                                        Theory th) {
  std::vector<Factor> out;
  ObjPtr o = src;
  for (const Factor& f : fs) {
    std::vector<Factor> piece;
    std::vector<Factor> queue{f};
    // split repeatedly; a replacement factor may need a further split
    while (!queue.empty()) {
      Factor cur = queue.front();
      queue.erase(queue.begin());
      std::vector<Factor> expanded;
      // thread the piece collected so far to find cur's local source
      ObjPtr threaded = o;
      for (const Factor& done : piece) threaded = realize_factor(done, threaded, th).tgt;
      ObjPtr local_src = obj_at(threaded, cur.path, 0);
      if (atomize_factor(cur, local_src, th, expanded)) {
        queue.insert(queue.begin(), expanded.begin(), expanded.end());
      } else {
        piece.push_back(cur);
      }
    }
    for (const Factor& done : piece) {
      o = realize_factor(done, o, th).tgt;
      out.push_back(done);
    }
  }
  return out;
}

//// the swap engine /////////////////////////////////////////////////////////

enum class ResolveKind { Swap, Replace, Tolerate };

struct Resolution {
  ResolveKind kind;
  std::vector<Factor> repl;
};

inline Resolution swap_them() { return {ResolveKind::Swap, {}}; }
inline Resolution replace_with(std::vector<Factor> fs) {
  return {ResolveKind::Replace, std::move(fs)};
}

struct NoSwapRule : std::logic_error {
  NoSwapRule(const Factor& e, const Factor& l)
      : std::logic_error(std::string("no swap rule for ") + constant_token(e.kind) +
                         " before " + constant_token(l.kind)) {}
};

// Paths diverge when at some index one goes left and the other right, or
// one enters a functor the other does not (impossible on a shared object,
// kept for completeness).
inline bool paths_disjoint(const std::vector<Dir>& p, const std::vector<Dir>& q) {
  std::size_t n = p.size() < q.size() ? p.size() : q.size();
  for (std::size_t i = 0; i < n; ++i)
    if (p[i] != q[i]) return true;
  return false;
}

inline bool path_prefix(const std::vector<Dir>& p, const std::vector<Dir>& q) {
  if (p.size() > q.size()) return false;
  for (std::size_t i = 0; i < p.size(); ++i)
    if (p[i] != q[i]) return false;
  return true;
}

// rest = q with prefix p removed
inline std::vector<Dir> path_rest(const std::vector<Dir>& p, const std::vector<Dir>& q) {
  return std::vector<Dir>(q.begin() + static_cast<std::ptrdiff_t>(p.size()), q.end());
}

inline bool rest_starts(const std::vector<Dir>& rest, std::initializer_list<Dir> pre) {
  if (rest.size() < pre.size()) return false;
  std::size_t i = 0;
  for (Dir d : pre)
    if (rest[i++] != d) return false;
  return true;
}

// The earlier factor e sits at or inside the acting zone of the later,
// lower-class factor l: move l first using l's naturality, or contract the
// pair by one of the theory's permutation equations.
inline Resolution resolve_inside_later(const Factor& e, const Factor& l) {
  std::vector<Dir> rest = path_rest(l.path, e.path);
  const std::vector<Dir>& q = l.path;
  switch (l.kind) {
    case ArrKind::Diag:
      return replace_with({l, moved(e, path_cat(q, {Dir::L}, rest, 0)),
                           moved(e, path_cat(q, {Dir::R}, rest, 0))});
    case ArrKind::Bang:
      return replace_with({l});
    case ArrKind::Eps:
      if (rest_starts(rest, {Dir::F}))
        return replace_with({l, moved(e, path_cat(q, {}, rest, 1))});
      if (rest.empty()) {
        switch (e.kind) {
          case ArrKind::Delta: return replace_with({});
          case ArrKind::Psi0: return replace_with({});
          case ArrKind::Psi:
            return replace_with({at(path_cat(q, {Dir::L}, {}, 0), ArrKind::Eps),
                                 at(path_cat(q, {Dir::R}, {}, 0), ArrKind::Eps)});
          case ArrKind::PsiL:
            return replace_with({at(path_cat(q, {Dir::L}, {}, 0), ArrKind::Eps)});
          case ArrKind::Lunit:
            // the unitor merely uncovers the object eps acts on
            return replace_with({moved(l, path_cat(q, {Dir::R}, {}, 0)), e});
          case ArrKind::Runit:
            return replace_with({moved(l, path_cat(q, {Dir::L}, {}, 0)), e});
          default: break;
        }
      }
      throw NoSwapRule(e, l);
    case ArrKind::Delta:
      if (rest_starts(rest, {Dir::F}))
        return replace_with({l, moved(e, path_cat(q, {Dir::F, Dir::F}, rest, 1))});
      if (rest.empty()) {
        switch (e.kind) {
          case ArrKind::Psi:
            return replace_with({at(path_cat(q, {Dir::L}, {}, 0), ArrKind::Delta),
                                 at(path_cat(q, {Dir::R}, {}, 0), ArrKind::Delta),
                                 at(q, ArrKind::Psi),
                                 at(path_cat(q, {Dir::F}, {}, 0), ArrKind::Psi)});
          case ArrKind::Psi0:
            return replace_with({at(q, ArrKind::Psi0),
                                 at(path_cat(q, {Dir::F}, {}, 0), ArrKind::Psi0)});
          case ArrKind::PsiL:
            return replace_with({at(path_cat(q, {Dir::L}, {}, 0), ArrKind::Delta),
                                 at(q, ArrKind::PsiL, e.idx),
                                 at(path_cat(q, {Dir::F}, {}, 0), ArrKind::PsiL, e.idx)});
          case ArrKind::Lunit:
            // the unitor merely uncovers the object delta acts on
            return replace_with({moved(l, path_cat(q, {Dir::R}, {}, 0)), e});
          case ArrKind::Runit:
            return replace_with({moved(l, path_cat(q, {Dir::L}, {}, 0)), e});
          default: break;
        }
      }
      throw NoSwapRule(e, l);
    case ArrKind::Mu:
      if (rest_starts(rest, {Dir::F, Dir::F}))
        return replace_with({l, moved(e, path_cat(q, {Dir::F}, rest, 2))});
      if (e.kind == ArrKind::Eta && (rest.empty() || rest == std::vector<Dir>{Dir::F}))
        return replace_with({});
      throw NoSwapRule(e, l);
    case ArrKind::Eta:
      return replace_with({l, moved(e, path_cat(q, {Dir::F}, rest, 0))});
    case ArrKind::PsiL:
      if (rest_starts(rest, {Dir::L, Dir::F}))
        return replace_with({l, moved(e, path_cat(q, {Dir::F, Dir::L}, rest, 2))});
      if (rest_starts(rest, {Dir::R}))
        return replace_with({l, moved(e, path_cat(q, {Dir::F, Dir::R}, rest, 1))});
      if (rest == std::vector<Dir>{Dir::L}) {
        if (e.kind == ArrKind::Eta) return replace_with({at(q, ArrKind::Eta)});
        if (e.kind == ArrKind::Mu)
          return replace_with({at(q, ArrKind::PsiL, l.idx),
                               at(path_cat(q, {Dir::F}, {}, 0), ArrKind::PsiL, l.idx),
                               at(q, ArrKind::Mu, e.idx)});
      }
      throw NoSwapRule(e, l);
    case ArrKind::PsiR:
      if (rest_starts(rest, {Dir::R, Dir::F}))
        return replace_with({l, moved(e, path_cat(q, {Dir::F, Dir::R}, rest, 2))});
      if (rest_starts(rest, {Dir::L}))
        return replace_with({l, moved(e, path_cat(q, {Dir::F, Dir::L}, rest, 1))});
      if (rest == std::vector<Dir>{Dir::R}) {
        if (e.kind == ArrKind::Eta) return replace_with({at(q, ArrKind::Eta)});
        if (e.kind == ArrKind::Mu)
          return replace_with({at(q, ArrKind::PsiR, l.idx),
                               at(path_cat(q, {Dir::F}, {}, 0), ArrKind::PsiR, l.idx),
                               at(q, ArrKind::Mu, e.idx)});
      }
      throw NoSwapRule(e, l);
    case ArrKind::Psi:
      if (rest_starts(rest, {Dir::L, Dir::F}))
        return replace_with({l, moved(e, path_cat(q, {Dir::F, Dir::L}, rest, 2))});
      if (rest_starts(rest, {Dir::R, Dir::F}))
        return replace_with({l, moved(e, path_cat(q, {Dir::F, Dir::R}, rest, 2))});
      if (rest == std::vector<Dir>{Dir::L} && e.kind == ArrKind::Psi0)
        return replace_with({at(q, ArrKind::Lunit),
                             at(path_cat(q, {Dir::F}, {}, 0), ArrKind::LunitInv)});
      if (rest == std::vector<Dir>{Dir::R} && e.kind == ArrKind::Psi0)
        return replace_with({at(q, ArrKind::Runit),
                             at(path_cat(q, {Dir::F}, {}, 0), ArrKind::RunitInv)});
      throw NoSwapRule(e, l);
    case ArrKind::Lunit:
      if (rest_starts(rest, {Dir::R}))
        return replace_with({l, moved(e, path_cat(q, {}, rest, 1))});
      throw NoSwapRule(e, l);
    case ArrKind::Runit:
      if (rest_starts(rest, {Dir::L}))
        return replace_with({l, moved(e, path_cat(q, {}, rest, 1))});
      throw NoSwapRule(e, l);
    case ArrKind::LunitInv:
      return replace_with({l, moved(e, path_cat(q, {Dir::R}, rest, 0))});
    case ArrKind::RunitInv:
      return replace_with({l, moved(e, path_cat(q, {Dir::L}, rest, 0))});
    case ArrKind::Assoc:
      if (rest_starts(rest, {Dir::L, Dir::L}))
        return replace_with({l, moved(e, path_cat(q, {Dir::L}, rest, 2))});
      if (rest_starts(rest, {Dir::L, Dir::R}))
        return replace_with({l, moved(e, path_cat(q, {Dir::R, Dir::L}, rest, 2))});
      if (rest_starts(rest, {Dir::R}))
        return replace_with({l, moved(e, path_cat(q, {Dir::R, Dir::R}, rest, 1))});
      throw NoSwapRule(e, l);
    case ArrKind::AssocInv:
      if (rest_starts(rest, {Dir::L}))
        return replace_with({l, moved(e, path_cat(q, {Dir::L, Dir::L}, rest, 1))});
      if (rest_starts(rest, {Dir::R, Dir::L}))
        return replace_with({l, moved(e, path_cat(q, {Dir::L, Dir::R}, rest, 2))});
      if (rest_starts(rest, {Dir::R, Dir::R}))
        return replace_with({l, moved(e, path_cat(q, {Dir::R}, rest, 2))});
      throw NoSwapRule(e, l);
    case ArrKind::Braid:
      if (rest_starts(rest, {Dir::L}))
        return replace_with({l, moved(e, path_cat(q, {Dir::R}, rest, 1))});
      if (rest_starts(rest, {Dir::R}))
        return replace_with({l, moved(e, path_cat(q, {Dir::L}, rest, 1))});
      throw NoSwapRule(e, l);
    default:
      throw NoSwapRule(e, l);
  }
}

// The later, lower-class factor l sits strictly inside the target zone of
// the earlier factor e: move l back through e by e's naturality read in
// reverse, duplicating through codiag and vanishing into cobang.
inline Resolution resolve_inside_earlier(const Factor& e, const Factor& l, Theory th) {
  std::vector<Dir> rest = path_rest(e.path, l.path);
  const std::vector<Dir>& p = e.path;
  switch (e.kind) {
    case ArrKind::Eta:
      if (rest_starts(rest, {Dir::F}))
        return replace_with({moved(l, path_cat(p, {}, rest, 1)), e});
      throw NoSwapRule(e, l);
    case ArrKind::Mu:
      if (rest_starts(rest, {Dir::F}))
        return replace_with({moved(l, path_cat(p, {Dir::F, Dir::F}, rest, 1)), e});
      throw NoSwapRule(e, l);
    case ArrKind::Eps:
      return replace_with({moved(l, path_cat(p, {Dir::F}, rest, 0)), e});
    case ArrKind::Delta:
      if (rest_starts(rest, {Dir::F, Dir::F}))
        return replace_with({moved(l, path_cat(p, {Dir::F}, rest, 2)), e});
      if (rest == std::vector<Dir>{Dir::F}) {
        if (l.kind == ArrKind::Eps) return replace_with({});
        if (l.kind == ArrKind::Bang)
          // L[bang{LA}] . delta{A} = L[bang{A}]: the counit law under the
          // terminal object's uniqueness
          return replace_with({at(path_cat(p, {Dir::F}, {}, 0), ArrKind::Bang)});
        if (l.kind == ArrKind::Diag)
          // L[diag{LA}] splits through psi before crossing delta
          return replace_with({e, at(p, ArrKind::Diag), at(p, ArrKind::Psi)});
      }
      throw NoSwapRule(e, l);
    case ArrKind::Psi:
      if (rest_starts(rest, {Dir::F, Dir::L}))
        return replace_with({moved(l, path_cat(p, {Dir::L, Dir::F}, rest, 2)), e});
      if (rest_starts(rest, {Dir::F, Dir::R}))
        return replace_with({moved(l, path_cat(p, {Dir::R, Dir::F}, rest, 2)), e});
      throw NoSwapRule(e, l);
    case ArrKind::PsiL:
      if (rest_starts(rest, {Dir::F, Dir::L}))
        return replace_with({moved(l, path_cat(p, {Dir::L, Dir::F}, rest, 2)), e});
      if (rest_starts(rest, {Dir::F, Dir::R}))
        return replace_with({moved(l, path_cat(p, {Dir::R}, rest, 2)), e});
      throw NoSwapRule(e, l);
    case ArrKind::PsiR:
      if (rest_starts(rest, {Dir::F, Dir::L}))
        return replace_with({moved(l, path_cat(p, {Dir::L}, rest, 2)), e});
      if (rest_starts(rest, {Dir::F, Dir::R}))
        return replace_with({moved(l, path_cat(p, {Dir::R, Dir::F}, rest, 2)), e});
      throw NoSwapRule(e, l);
    case ArrKind::Psi0:
      return {ResolveKind::Tolerate, {}};
    case ArrKind::Codiag:
      return replace_with({moved(l, path_cat(p, {Dir::L}, rest, 0)),
                           moved(l, path_cat(p, {Dir::R}, rest, 0)), e});
    case ArrKind::Cobang: {
      // absorb l into the target of the bang
      RealizedFactor r = realize_factor(moved(l, rest), e.cobang_tgt, th);
      return replace_with({at(p, ArrKind::Cobang, std::nullopt, r.tgt)});
    }
    case ArrKind::Lunit:
      return replace_with({moved(l, path_cat(p, {Dir::R}, rest, 0)), e});
    case ArrKind::Runit:
      return replace_with({moved(l, path_cat(p, {Dir::L}, rest, 0)), e});
    case ArrKind::LunitInv:
      if (rest_starts(rest, {Dir::R}))
        return replace_with({moved(l, path_cat(p, {}, rest, 1)), e});
      throw NoSwapRule(e, l);
    case ArrKind::RunitInv:
      if (rest_starts(rest, {Dir::L}))
        return replace_with({moved(l, path_cat(p, {}, rest, 1)), e});
      throw NoSwapRule(e, l);
    case ArrKind::Assoc:
      if (rest_starts(rest, {Dir::L}))
        return replace_with({moved(l, path_cat(p, {Dir::L, Dir::L}, rest, 1)), e});
      if (rest_starts(rest, {Dir::R, Dir::L}))
        return replace_with({moved(l, path_cat(p, {Dir::L, Dir::R}, rest, 2)), e});
      if (rest_starts(rest, {Dir::R, Dir::R}))
        return replace_with({moved(l, path_cat(p, {Dir::R}, rest, 2)), e});
      throw NoSwapRule(e, l);
    case ArrKind::AssocInv:
      if (rest_starts(rest, {Dir::L, Dir::L}))
        return replace_with({moved(l, path_cat(p, {Dir::L}, rest, 2)), e});
      if (rest_starts(rest, {Dir::L, Dir::R}))
        return replace_with({moved(l, path_cat(p, {Dir::R, Dir::L}, rest, 2)), e});
      if (rest_starts(rest, {Dir::R}))
        return replace_with({moved(l, path_cat(p, {Dir::R, Dir::R}, rest, 1)), e});
      throw NoSwapRule(e, l);
    case ArrKind::Braid:
      if (rest_starts(rest, {Dir::L}))
        return replace_with({moved(l, path_cat(p, {Dir::R}, rest, 1)), e});
      if (rest_starts(rest, {Dir::R}))
        return replace_with({moved(l, path_cat(p, {Dir::L}, rest, 1)), e});
      throw NoSwapRule(e, l);
    default:
      throw NoSwapRule(e, l);
  }
}

inline Resolution resolve_pair(const Factor& e, const Factor& l, Theory th) {
  if (paths_disjoint(e.path, l.path)) return swap_them();
  // codiag duplicates and cobang absorbs anything acting in their zone,
  // including a factor at the same path, so they win the equal-path case
  if ((e.kind == ArrKind::Codiag || e.kind == ArrKind::Cobang) &&
      path_prefix(e.path, l.path))
    return resolve_inside_earlier(e, l, th);
  if (path_prefix(l.path, e.path)) return resolve_inside_later(e, l);
  return resolve_inside_earlier(e, l, th);
}

inline std::vector<Factor> sort_factors(std::vector<Factor> fs, const ObjPtr& src,
                                        Theory th, int budget) {
  int steps = 0;
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i + 1 < fs.size(); ++i) {
      if (stage_class(th, fs[i].kind) <= stage_class(th, fs[i + 1].kind)) continue;
      Resolution r = resolve_pair(fs[i], fs[i + 1], th);
      if (r.kind == ResolveKind::Tolerate) continue;
      if (++steps > budget) throw NormalizationBudgetExceeded(budget);
      if (r.kind == ResolveKind::Swap) {
        std::swap(fs[i], fs[i + 1]);
      } else {
        fs.erase(fs.begin() + static_cast<std::ptrdiff_t>(i),
                 fs.begin() + static_cast<std::ptrdiff_t>(i) + 2);
        fs.insert(fs.begin() + static_cast<std::ptrdiff_t>(i), r.repl.begin(), r.repl.end());
        fs = atomize_pass(fs, src, th);
      }
      changed = true;
      break;  // rebuild the thread and rescan
    }
  }
  return fs;
}

}  // namespace detail

//// the factorization ///////////////////////////////////////////////////////

struct Stage {
  ArrPtr term;
  std::string descriptor;
};

struct Factorization {
  Theory th;
  ObjPtr src;
  ObjPtr tgt;
  std::vector<Stage> stages;  // application order, always stage_count(th) long

  // identity stages contribute nothing, so they are not replayed
  ArrPtr composite() const {
    ArrPtr acc = nullptr;
    for (const Stage& s : stages) {
      if (s.term->kind == ArrKind::Id) continue;
      acc = acc ? comp(s.term, acc) : s.term;
    }
    return acc ? acc : id(src);
  }
};

inline Factorization normalize(const ArrPtr& f, Theory th,
                               int budget = default_normalize_budget) {
  TypedArrow ty = infer_type(f, th);
  ArrPtr t = expand_derived(f, th);
  if (th == Theory::DSco) t = detail::expand_cocartesian_psi(t, th);
  std::vector<Factor> fs = develop(t);
  fs = detail::atomize_pass(fs, ty.src, th);
  fs = detail::sort_factors(std::move(fs), ty.src, th, budget);

  // split at the running maximum of the class so a tolerated factor stays
  // in the stage of the factor it could not cross
  int nstages = stage_count(th);
  std::vector<std::vector<Factor>> runs(static_cast<std::size_t>(nstages));
  int envelope = 0;
  for (const Factor& fac : fs) {
    int c = stage_class(th, fac.kind);
    if (c > envelope) envelope = c;
    runs[static_cast<std::size_t>(envelope)].push_back(fac);
  }

  Factorization out;
  out.th = th;
  out.src = ty.src;
  out.tgt = ty.tgt;
  ObjPtr o = ty.src;
  for (int s = 0; s < nstages; ++s) {
    ArrPtr term = recompose(runs[static_cast<std::size_t>(s)], o, th);
    for (const Factor& fac : runs[static_cast<std::size_t>(s)])
      o = realize_factor(fac, o, th).tgt;
    out.stages.push_back(Stage{term, stage_descriptor(th, s)});
  }
  return out;
}

// Syntactic check that a stage contains only what its descriptor allows.
// The MSco tail accepts psi0 plus unitors over letter-free objects; the
// cartesian and cocartesian first/last stages check their index shapes.
inline bool stage_respects_descriptor(const ArrPtr& stage_term, const ObjPtr& stage_src,
                                      Theory th, int stage) {
  std::vector<Factor> fs = develop(stage_term);
  ObjPtr o = stage_src;
  for (const Factor& fac : fs) {
    ObjPtr local = detail::obj_at(o, fac.path, 0);
    int c = stage_class(th, fac.kind);
    bool ok;
    if (th == Theory::MSco && stage == 3) {
      auto letter_free = [](auto&& self, const ObjPtr& x) -> bool {
        switch (x->kind) {
          case ObjKind::Letter: return false;
          case ObjKind::Tensor: return self(self, x->left) && self(self, x->right);
          case ObjKind::App: return self(self, x->arg);
          default: return true;
        }
      };
      bool unitor = fac.kind == ArrKind::Lunit || fac.kind == ArrKind::LunitInv ||
                    fac.kind == ArrKind::Runit || fac.kind == ArrKind::RunitInv ||
                    fac.kind == ArrKind::Assoc || fac.kind == ArrKind::AssocInv;
      ok = fac.kind == ArrKind::Psi0 || (unitor && letter_free(letter_free, local));
    } else {
      ok = c == stage;
      if (ok && (fac.kind == ArrKind::Diag || fac.kind == ArrKind::Bang))
        ok = local->kind == ObjKind::Letter || local->kind == ObjKind::App;
      if (ok && fac.kind == ArrKind::Codiag && th == Theory::DS)
        ok = local->kind == ObjKind::Tensor && local->left->kind == ObjKind::Letter;
      if (ok && fac.kind == ArrKind::Cobang && th == Theory::DS)
        ok = fac.cobang_tgt && fac.cobang_tgt->kind == ObjKind::Letter;
    }
    if (!ok) return false;
    o = realize_factor(fac, o, th).tgt;
  }
  return true;
}

}  // namespace relmon
