#pragma once

// Object and arrow syntax for freely generated monoidal theories with a
// monad or comonad functor, together with the theory table that says which
// constants each theory admits and how its objects are measured.

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace relmon {

//// theories ////////////////////////////////////////////////////////////////

enum class Theory {
  LLS,    // monad with a left strength
  LRS,    // monad with a right strength
  LS,     // monad with both strengths
  LcS,    // symmetric monoidal version of LS
  CS,     // LcS over a cartesian base (diag, bang)
  DS,     // LcS over a cocartesian base (codiag, cobang)
  LLSco,  // comonad with a left strength
  MSco,   // monoidal comonad (psi, psi0 primitive)
  McSco,  // symmetric monoidal comonad
  CSco,   // McSco over a cartesian base
  DSco,   // McSco over a cocartesian base
  Lc,     // symmetric base with a family of doubly strong functors E1, E2, ...
  Lcmu,   // Lc with a multiplication mu_i on every E_i
};

inline constexpr std::size_t theory_count = 13;

// Target category of the graph evaluation, as subcategories of relations
// between finite ordinals.
enum class GraphCat {
  Delta,    // order-preserving total functions
  DeltaOp,  // converses of order-preserving total functions
  Fun,      // total functions
  Rel,      // all relations
};

struct TheoryInfo {
  Theory th;
  const char* name;
  char functor;          // 'T', 'L', or 'E' for the indexed family
  bool functor_family;   // functor symbols carry a positive index
  bool has_eta;
  bool has_mu;           // in Lcmu the constant is indexed per family member
  bool has_eps;
  bool has_delta;
  bool braided;          // admits the symmetry c
  bool cartesian;        // admits diag and bang
  bool cocartesian;      // admits codiag and cobang
  bool psiL;             // left strength is primitive
  bool psiR;             // right strength is primitive
  bool psi_primitive;    // psi and psi0 are primitive (comonad side)
  bool psi_derived;      // psi is accepted and expands through the strengths
  bool letters_counted;  // measure counts letters as well as functor symbols
  GraphCat target;
};

inline const TheoryInfo& theory_info(Theory th) {
  static const TheoryInfo table[] = {
    // th            name     F   fam    eta    mu     eps    delta  braid  cart   cocart psiL   psiR   psiP   psiD   lett   target
    {Theory::LLS,   "LLS",   'T', false, true,  true,  false, false, false, false, false, true,  false, false, false, false, GraphCat::Delta},
    {Theory::LRS,   "LRS",   'T', false, true,  true,  false, false, false, false, false, false, true,  false, false, false, GraphCat::Fun},
    {Theory::LS,    "LS",    'T', false, true,  true,  false, false, false, false, false, true,  true,  false, true,  false, GraphCat::Fun},
    {Theory::LcS,   "LcS",   'T', false, true,  true,  false, false, true,  false, false, true,  true,  false, true,  true,  GraphCat::Fun},
    {Theory::CS,    "CS",    'T', false, true,  true,  false, false, true,  true,  false, true,  true,  false, true,  true,  GraphCat::Rel},
    {Theory::DS,    "DS",    'T', false, true,  true,  false, false, true,  false, true,  true,  true,  false, true,  true,  GraphCat::Fun},
    {Theory::LLSco, "LLSco", 'L', false, false, false, true,  true,  false, false, false, true,  false, false, false, false, GraphCat::DeltaOp},
    {Theory::MSco,  "MSco",  'L', false, false, false, true,  true,  false, false, false, false, false, true,  false, false, GraphCat::Rel},
    {Theory::McSco, "McSco", 'L', false, false, false, true,  true,  true,  false, false, false, false, true,  false, true,  GraphCat::Rel},
    {Theory::CSco,  "CSco",  'L', false, false, false, true,  true,  true,  true,  false, false, false, true,  false, true,  GraphCat::Rel},
    {Theory::DSco,  "DSco",  'L', false, false, false, true,  true,  true,  false, true,  false, false, true,  false, true,  GraphCat::Rel},
    {Theory::Lc,    "Lc",    'E', true,  false, false, false, false, true,  false, false, true,  true,  false, false, true,  GraphCat::Rel},
    {Theory::Lcmu,  "Lcmu",  'E', true,  false, true,  false, false, true,  false, false, true,  true,  false, false, true,  GraphCat::Rel},
  };
  return table[static_cast<int>(th)];
}

inline const char* theory_name(Theory th) { return theory_info(th).name; }

inline std::optional<Theory> parse_theory(const std::string& s) {
  for (int i = 0; i <= static_cast<int>(Theory::Lcmu); ++i) {
    Theory th = static_cast<Theory>(i);
    if (s == theory_info(th).name) return th;
  }
  return std::nullopt;
}

inline const char* graph_cat_name(GraphCat c) {
  switch (c) {
    case GraphCat::Delta: return "Delta";
    case GraphCat::DeltaOp: return "DeltaOp";
    case GraphCat::Fun: return "Fun";
    case GraphCat::Rel: return "Rel";
  }
  return "?";
}

//// functor symbols /////////////////////////////////////////////////////////

struct FunctorSym {
  std::string name;          // "T", "L", or "E" in the indexed family
  std::optional<int> index;  // present only for family members, >= 1

  bool operator==(const FunctorSym& o) const {
    return name == o.name && index == o.index;
  }
  bool operator!=(const FunctorSym& o) const { return !(*this == o); }
};

inline std::string show(const FunctorSym& s) {
  return s.index ? s.name + std::to_string(*s.index) : s.name;
}

inline FunctorSym tfun() { return {"T", std::nullopt}; }
inline FunctorSym lfun() { return {"L", std::nullopt}; }
inline FunctorSym efun(int i) { return {"E", i}; }

// The distinguished functor of a single-functor theory.
inline FunctorSym theory_functor(Theory th) {
  return {std::string(1, theory_info(th).functor), std::nullopt};
}

//// objects /////////////////////////////////////////////////////////////////

struct Obj;
using ObjPtr = std::shared_ptr<const Obj>;

enum class ObjKind { Unit, Letter, Tensor, App };

struct Obj {
  ObjKind kind;
  std::string letter;  // Letter
  ObjPtr left, right;  // Tensor
  FunctorSym sym;      // App
  ObjPtr arg;          // App
  std::size_t hash = 0;
  int size = 1;  // node count, functor applications and letters and units
};

namespace detail {
inline std::size_t hash_mix(std::size_t seed, std::size_t v) {
  return seed ^ (v + 0x9e3779b97f4a7c15ull + (seed << 6) + (seed >> 2));
}
inline std::size_t hash_str(const std::string& s) {
  return std::hash<std::string>{}(s);
}
}  // namespace detail

inline ObjPtr unit() {
  static const ObjPtr i = [] {
    auto o = std::make_shared<Obj>();
    o->kind = ObjKind::Unit;
    o->hash = 0x1111;
    o->size = 1;
    return o;
  }();
  return i;
}

inline ObjPtr letter(const std::string& name) {
  auto o = std::make_shared<Obj>();
  o->kind = ObjKind::Letter;
  o->letter = name;
  o->hash = detail::hash_mix(0x2222, detail::hash_str(name));
  o->size = 1;
  return o;
}

inline ObjPtr tensor(ObjPtr a, ObjPtr b) {
  auto o = std::make_shared<Obj>();
  o->kind = ObjKind::Tensor;
  o->left = std::move(a);
  o->right = std::move(b);
  o->hash = detail::hash_mix(detail::hash_mix(0x3333, o->left->hash), o->right->hash);
  o->size = 1 + o->left->size + o->right->size;
  return o;
}

inline ObjPtr app(const FunctorSym& s, ObjPtr a) {
  auto o = std::make_shared<Obj>();
  o->kind = ObjKind::App;
  o->sym = s;
  o->arg = std::move(a);
  std::size_t h = detail::hash_mix(0x4444, detail::hash_str(s.name));
  if (s.index) h = detail::hash_mix(h, static_cast<std::size_t>(*s.index));
  o->hash = detail::hash_mix(h, o->arg->hash);
  o->size = 1 + o->arg->size;
  return o;
}

inline bool obj_eq(const ObjPtr& a, const ObjPtr& b) {
  if (a.get() == b.get()) return true;
  if (a->hash != b->hash || a->kind != b->kind || a->size != b->size) return false;
  switch (a->kind) {
    case ObjKind::Unit: return true;
    case ObjKind::Letter: return a->letter == b->letter;
    case ObjKind::Tensor:
      return obj_eq(a->left, b->left) && obj_eq(a->right, b->right);
    case ObjKind::App:
      return a->sym == b->sym && obj_eq(a->arg, b->arg);
  }
  return false;
}

// Total order on objects, by size then structure; used wherever output must
// come in a reproducible order.
inline int obj_cmp(const ObjPtr& a, const ObjPtr& b) {
  if (a.get() == b.get()) return 0;
  if (a->size != b->size) return a->size < b->size ? -1 : 1;
  if (a->kind != b->kind) return a->kind < b->kind ? -1 : 1;
  switch (a->kind) {
    case ObjKind::Unit: return 0;
    case ObjKind::Letter: return a->letter.compare(b->letter);
    case ObjKind::Tensor: {
      int c = obj_cmp(a->left, b->left);
      return c != 0 ? c : obj_cmp(a->right, b->right);
    }
    case ObjKind::App: {
      int c = show(a->sym).compare(show(b->sym));
      return c != 0 ? c : obj_cmp(a->arg, b->arg);
    }
  }
  return 0;
}

// Canonical object syntax: tensor is left associative, functor application
// uses parentheses, the unit prints as I.
inline std::string show(const ObjPtr& o) {
  // level 0 admits a bare tensor, level 1 requires an atom
  auto go = [](auto&& self, const ObjPtr& t, int level) -> std::string {
    switch (t->kind) {
      case ObjKind::Unit: return "I";
      case ObjKind::Letter: return t->letter;
      case ObjKind::Tensor: {
        std::string s = self(self, t->left, 0) + " * " + self(self, t->right, 1);
        return level > 0 ? "(" + s + ")" : s;
      }
      case ObjKind::App:
        return show(t->sym) + "(" + self(self, t->arg, 0) + ")";
    }
    return "?";
  };
  return go(go, o, 0);
}

//// arrows //////////////////////////////////////////////////////////////////

struct Arr;
using ArrPtr = std::shared_ptr<const Arr>;

enum class ArrKind {
  // constants
  Id,
  Assoc, AssocInv,
  Lunit, LunitInv,
  Runit, RunitInv,
  Braid,
  PsiL, PsiR, Psi, Psi0,
  Eta, Mu,
  Eps, Delta,
  Diag, Bang,
  Codiag, Cobang,
  // combinators
  Comp,  // u after v
  Tens,
  FApp,
};

struct Arr {
  ArrKind kind;
  ObjPtr o1, o2, o3;        // object parameters of constants
  std::optional<int> idx;   // family index on psiL/psiR/mu, when written
  FunctorSym sym;           // FApp
  ArrPtr u, v;              // Comp, Tens (u then v as written), FApp uses u
  std::size_t hash = 0;
  int size = 1;             // constructor node count
};

inline int constant_arity(ArrKind k) {
  switch (k) {
    case ArrKind::Psi0: return 0;
    case ArrKind::Id:
    case ArrKind::Lunit: case ArrKind::LunitInv:
    case ArrKind::Runit: case ArrKind::RunitInv:
    case ArrKind::Eta: case ArrKind::Mu:
    case ArrKind::Eps: case ArrKind::Delta:
    case ArrKind::Diag: case ArrKind::Bang:
    case ArrKind::Codiag: case ArrKind::Cobang:
      return 1;
    case ArrKind::Braid:
    case ArrKind::PsiL: case ArrKind::PsiR: case ArrKind::Psi:
      return 2;
    case ArrKind::Assoc: case ArrKind::AssocInv:
      return 3;
    default: return -1;  // combinators
  }
}

inline bool is_constant(ArrKind k) { return constant_arity(k) >= 0; }

inline const char* constant_token(ArrKind k) {
  switch (k) {
    case ArrKind::Id: return "id";
    case ArrKind::Assoc: return "a";
    case ArrKind::AssocInv: return "a'";
    case ArrKind::Lunit: return "l";
    case ArrKind::LunitInv: return "l'";
    case ArrKind::Runit: return "r";
    case ArrKind::RunitInv: return "r'";
    case ArrKind::Braid: return "c";
    case ArrKind::PsiL: return "psiL";
    case ArrKind::PsiR: return "psiR";
    case ArrKind::Psi: return "psi";
    case ArrKind::Psi0: return "psi0";
    case ArrKind::Eta: return "eta";
    case ArrKind::Mu: return "mu";
    case ArrKind::Eps: return "eps";
    case ArrKind::Delta: return "delta";
    case ArrKind::Diag: return "diag";
    case ArrKind::Bang: return "bang";
    case ArrKind::Codiag: return "codiag";
    case ArrKind::Cobang: return "cobang";
    default: return "?";
  }
}

namespace detail {
inline ArrPtr make_const(ArrKind k, ObjPtr a = nullptr, ObjPtr b = nullptr,
                         ObjPtr c = nullptr, std::optional<int> idx = std::nullopt) {
  auto t = std::make_shared<Arr>();
  t->kind = k;
  t->o1 = std::move(a);
  t->o2 = std::move(b);
  t->o3 = std::move(c);
  t->idx = idx;
  std::size_t h = hash_mix(0x5555, static_cast<std::size_t>(k));
  int sz = 1;
  for (const ObjPtr* o : {&t->o1, &t->o2, &t->o3}) {
    if (*o) {
      h = hash_mix(h, (*o)->hash);
      sz += (*o)->size;
    }
  }
  if (idx) h = hash_mix(h, static_cast<std::size_t>(*idx) + 77);
  t->hash = h;
  t->size = sz;
  return t;
}
}  // namespace detail

inline ArrPtr id(ObjPtr a) { return detail::make_const(ArrKind::Id, std::move(a)); }
inline ArrPtr assoc(ObjPtr a, ObjPtr b, ObjPtr c) {
  return detail::make_const(ArrKind::Assoc, std::move(a), std::move(b), std::move(c));
}
inline ArrPtr assoc_inv(ObjPtr a, ObjPtr b, ObjPtr c) {
  return detail::make_const(ArrKind::AssocInv, std::move(a), std::move(b), std::move(c));
}
inline ArrPtr lunit(ObjPtr a) { return detail::make_const(ArrKind::Lunit, std::move(a)); }
inline ArrPtr lunit_inv(ObjPtr a) { return detail::make_const(ArrKind::LunitInv, std::move(a)); }
inline ArrPtr runit(ObjPtr a) { return detail::make_const(ArrKind::Runit, std::move(a)); }
inline ArrPtr runit_inv(ObjPtr a) { return detail::make_const(ArrKind::RunitInv, std::move(a)); }
inline ArrPtr braid(ObjPtr a, ObjPtr b) {
  return detail::make_const(ArrKind::Braid, std::move(a), std::move(b));
}
inline ArrPtr psiL(ObjPtr a, ObjPtr b, std::optional<int> idx = std::nullopt) {
  return detail::make_const(ArrKind::PsiL, std::move(a), std::move(b), nullptr, idx);
}
inline ArrPtr psiR(ObjPtr a, ObjPtr b, std::optional<int> idx = std::nullopt) {
  return detail::make_const(ArrKind::PsiR, std::move(a), std::move(b), nullptr, idx);
}
inline ArrPtr psi(ObjPtr a, ObjPtr b) {
  return detail::make_const(ArrKind::Psi, std::move(a), std::move(b));
}
inline ArrPtr psi0() { return detail::make_const(ArrKind::Psi0); }
inline ArrPtr eta(ObjPtr a) { return detail::make_const(ArrKind::Eta, std::move(a)); }
inline ArrPtr mu(ObjPtr a, std::optional<int> idx = std::nullopt) {
  return detail::make_const(ArrKind::Mu, std::move(a), nullptr, nullptr, idx);
}
inline ArrPtr eps(ObjPtr a) { return detail::make_const(ArrKind::Eps, std::move(a)); }
inline ArrPtr delta(ObjPtr a) { return detail::make_const(ArrKind::Delta, std::move(a)); }
inline ArrPtr diag(ObjPtr a) { return detail::make_const(ArrKind::Diag, std::move(a)); }
inline ArrPtr bang(ObjPtr a) { return detail::make_const(ArrKind::Bang, std::move(a)); }
inline ArrPtr codiag(ObjPtr a) { return detail::make_const(ArrKind::Codiag, std::move(a)); }
inline ArrPtr cobang(ObjPtr a) { return detail::make_const(ArrKind::Cobang, std::move(a)); }

inline ArrPtr comp(ArrPtr after, ArrPtr first) {
  auto t = std::make_shared<Arr>();
  t->kind = ArrKind::Comp;
  t->u = std::move(after);
  t->v = std::move(first);
  t->hash = detail::hash_mix(detail::hash_mix(0x6666, t->u->hash), t->v->hash);
  t->size = 1 + t->u->size + t->v->size;
  return t;
}

inline ArrPtr tens(ArrPtr f, ArrPtr g) {
  auto t = std::make_shared<Arr>();
  t->kind = ArrKind::Tens;
  t->u = std::move(f);
  t->v = std::move(g);
  t->hash = detail::hash_mix(detail::hash_mix(0x7777, t->u->hash), t->v->hash);
  t->size = 1 + t->u->size + t->v->size;
  return t;
}

inline ArrPtr fapp(const FunctorSym& s, ArrPtr f) {
  auto t = std::make_shared<Arr>();
  t->kind = ArrKind::FApp;
  t->sym = s;
  t->u = std::move(f);
  std::size_t h = detail::hash_mix(0x8888, detail::hash_str(s.name));
  if (s.index) h = detail::hash_mix(h, static_cast<std::size_t>(*s.index));
  t->hash = detail::hash_mix(h, t->u->hash);
  t->size = 1 + t->u->size;
  return t;
}

inline bool arr_eq(const ArrPtr& a, const ArrPtr& b) {
  if (a.get() == b.get()) return true;
  if (a->hash != b->hash || a->kind != b->kind || a->size != b->size) return false;
  if (is_constant(a->kind)) {
    if (a->idx != b->idx) return false;
    for (auto pair : {std::make_pair(&a->o1, &b->o1), std::make_pair(&a->o2, &b->o2),
                      std::make_pair(&a->o3, &b->o3)}) {
      const ObjPtr& x = *pair.first;
      const ObjPtr& y = *pair.second;
      if (static_cast<bool>(x) != static_cast<bool>(y)) return false;
      if (x && !obj_eq(x, y)) return false;
    }
    return true;
  }
  if (a->kind == ArrKind::FApp) {
    return a->sym == b->sym && arr_eq(a->u, b->u);
  }
  return arr_eq(a->u, b->u) && arr_eq(a->v, b->v);
}

inline int arr_cmp(const ArrPtr& a, const ArrPtr& b) {
  if (a.get() == b.get()) return 0;
  if (a->size != b->size) return a->size < b->size ? -1 : 1;
  if (a->kind != b->kind) return a->kind < b->kind ? -1 : 1;
  if (is_constant(a->kind)) {
    if (a->idx != b->idx) {
      if (!a->idx) return -1;
      if (!b->idx) return 1;
      return *a->idx < *b->idx ? -1 : 1;
    }
    for (auto pair : {std::make_pair(&a->o1, &b->o1), std::make_pair(&a->o2, &b->o2),
                      std::make_pair(&a->o3, &b->o3)}) {
      const ObjPtr& x = *pair.first;
      const ObjPtr& y = *pair.second;
      if (!x && !y) continue;
      int c = obj_cmp(x, y);
      if (c != 0) return c;
    }
    return 0;
  }
  if (a->kind == ArrKind::FApp) {
    int c = show(a->sym).compare(show(b->sym));
    return c != 0 ? c : arr_cmp(a->u, b->u);
  }
  int c = arr_cmp(a->u, b->u);
  return c != 0 ? c : arr_cmp(a->v, b->v);
}

// Canonical arrow syntax: composition g . f binds loosest and associates to
// the left, tensor f * g sits in the middle, constants and F[f] are atoms.
inline std::string show(const ArrPtr& t) {
  auto go = [](auto&& self, const ArrPtr& f, int level) -> std::string {
    switch (f->kind) {
      case ArrKind::Comp: {
        std::string s = self(self, f->u, 0) + " . " + self(self, f->v, 1);
        return level > 0 ? "(" + s + ")" : s;
      }
      case ArrKind::Tens: {
        std::string s = self(self, f->u, 1) + " * " + self(self, f->v, 2);
        return level > 1 ? "(" + s + ")" : s;
      }
      case ArrKind::FApp:
        return show(f->sym) + "[" + self(self, f->u, 0) + "]";
      default: {
        std::string s = constant_token(f->kind);
        if (f->idx) s += std::to_string(*f->idx);
        if (constant_arity(f->kind) > 0) {
          s += "{" + show(f->o1);
          if (f->o2) s += ", " + show(f->o2);
          if (f->o3) s += ", " + show(f->o3);
          s += "}";
        }
        return s;
      }
    }
  };
  return go(go, t, 0);
}

//// errors //////////////////////////////////////////////////////////////////

// A functor symbol that the theory does not provide.
struct ForeignFunctorError : std::runtime_error {
  ForeignFunctorError(const FunctorSym& s, Theory th)
      : std::runtime_error("functor symbol " + show(s) + " is not available in theory " +
                           theory_name(th)) {}
};

// A constant that the theory does not provide.
struct IllegalConstantError : std::runtime_error {
  IllegalConstantError(const std::string& what_constant, Theory th)
      : std::runtime_error("constant " + what_constant + " is not available in theory " +
                           theory_name(th)) {}
};

// A term that fails to type, for example a composition whose middle objects
// disagree.
struct IllTypedError : std::runtime_error {
  explicit IllTypedError(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace relmon
