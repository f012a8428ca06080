#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <set>
#include <string>

#include "relmon/graph_functor.hpp"
#include "relmon/schemas.hpp"
#include "relmon/soundness.hpp"
#include "relmon/terms.hpp"

using namespace relmon;

namespace {

bool set_has(Theory th, const std::string& name) {
  for (const Schema* s : axiom_set(th))
    if (s->name == name) return true;
  return false;
}

}  // namespace

TEST_CASE("axiom sets are nonempty, sorted, and gated", "[schemas]") {
  for (int i = 0; i < static_cast<int>(theory_count); ++i) {
    Theory th = static_cast<Theory>(i);
    const std::vector<const Schema*>& set = axiom_set(th);
    REQUIRE_FALSE(set.empty());
    REQUIRE(std::is_sorted(set.begin(), set.end(),
                           [](const Schema* a, const Schema* b) {
                             return a->name < b->name;
                           }));
    for (const Schema* s : set) REQUIRE(s->gate(theory_info(th)));
  }
}

TEST_CASE("gating follows the theory table", "[schemas]") {
  // the common core is everywhere
  for (int i = 0; i < static_cast<int>(theory_count); ++i) {
    Theory th = static_cast<Theory>(i);
    REQUIRE(set_has(th, "cat-assoc"));
    REQUIRE(set_has(th, "pentagon"));
    REQUIRE(set_has(th, "nat-lunit"));
  }
  // strengths
  REQUIRE(set_has(Theory::LLS, "psiL-mu"));
  REQUIRE_FALSE(set_has(Theory::LLS, "psiR-mu"));
  REQUIRE_FALSE(set_has(Theory::LLS, "nat-psiR"));
  REQUIRE(set_has(Theory::LRS, "psiR-mu"));
  REQUIRE_FALSE(set_has(Theory::LRS, "nat-psiL"));
  REQUIRE(set_has(Theory::LS, "strength-mu"));
  REQUIRE_FALSE(set_has(Theory::LS, "strength-braid"));
  REQUIRE(set_has(Theory::LcS, "strength-braid"));
  // the multiplication-only family keeps the interchange but not the
  // unit-dependent right strength law
  REQUIRE(set_has(Theory::Lcmu, "strength-mu"));
  REQUIRE(set_has(Theory::Lcmu, "psiL-mu"));
  REQUIRE_FALSE(set_has(Theory::Lcmu, "psiR-mu"));
  REQUIRE_FALSE(set_has(Theory::Lc, "psiL-mu"));
  // braiding
  REQUIRE_FALSE(set_has(Theory::LS, "nat-braid"));
  REQUIRE(set_has(Theory::McSco, "nat-braid"));
  // monad against comonad
  REQUIRE(set_has(Theory::LLS, "monad-assoc"));
  REQUIRE_FALSE(set_has(Theory::LLS, "comonad-assoc"));
  REQUIRE(set_has(Theory::MSco, "comonad-assoc"));
  REQUIRE_FALSE(set_has(Theory::MSco, "monad-assoc"));
  // psi laws
  REQUIRE(set_has(Theory::MSco, "psi-eps"));
  REQUIRE(set_has(Theory::MSco, "psi0-delta"));
  REQUIRE(set_has(Theory::CS, "psi-diag"));
  REQUIRE_FALSE(set_has(Theory::CSco, "psi-eta"));
  REQUIRE(set_has(Theory::LS, "psi-expand"));
  REQUIRE_FALSE(set_has(Theory::MSco, "psi-expand"));
  // cartesian against cocartesian
  REQUIRE(set_has(Theory::CS, "diag-cocomm"));
  REQUIRE(set_has(Theory::CS, "terminal-unique"));
  REQUIRE_FALSE(set_has(Theory::CS, "codiag-comm"));
  REQUIRE(set_has(Theory::DS, "codiag-comm"));
  REQUIRE(set_has(Theory::DS, "initial-unique"));
  REQUIRE_FALSE(set_has(Theory::DS, "diag-cocomm"));
  REQUIRE(set_has(Theory::DSco, "psi-def-coproduct"));
  REQUIRE(set_has(Theory::DSco, "psi0-def-coproduct"));
  REQUIRE_FALSE(set_has(Theory::CSco, "psi-def-coproduct"));
  // comonad strengths
  REQUIRE(set_has(Theory::LLSco, "psiL-eps"));
  REQUIRE(set_has(Theory::LLSco, "psiL-delta"));
  REQUIRE_FALSE(set_has(Theory::LLS, "psiL-eps"));
}

TEST_CASE("matching and substitution invert each other", "[schemas]") {
  ObjPtr p = letter("p");
  ObjPtr q = letter("q");

  // ground instance of the left unit triangle for psi0
  const Schema* s = nullptr;
  for (const Schema* c : axiom_set(Theory::MSco))
    if (c->name == "psi0-eps") s = c;
  REQUIRE(s != nullptr);

  Binding b;
  b.th = Theory::MSco;
  ArrPtr lhs = subst_arr(s->lhs, b);
  REQUIRE(show(lhs) == "eps{I} . psi0");
  Binding back;
  back.th = Theory::MSco;
  REQUIRE(match_arr(s->lhs, lhs, back));

  // a schema with object variables
  for (const Schema* c : axiom_set(Theory::LLS))
    if (c->name == "psiL-eta") s = c;
  Binding b2;
  b2.th = Theory::LLS;
  b2.objs[0] = p;
  b2.objs[1] = q;
  ArrPtr lhs2 = subst_arr(s->lhs, b2);
  ArrPtr rhs2 = subst_arr(s->rhs, b2);
  REQUIRE(show(lhs2) == "psiL{p, q} . eta{p} * id{q}");
  REQUIRE(show(rhs2) == "eta{p * q}");
  Binding b3;
  b3.th = Theory::LLS;
  REQUIRE(match_arr(s->lhs, lhs2, b3));
  REQUIRE(obj_eq(b3.objs[0], p));
  REQUIRE(obj_eq(b3.objs[1], q));

  // matching fails on a structural mismatch
  Binding b4;
  b4.th = Theory::LLS;
  REQUIRE_FALSE(match_arr(s->lhs, rhs2, b4));
}

TEST_CASE("family indices must agree across a match", "[schemas]") {
  ObjPtr p = letter("p");
  const Schema* s = nullptr;
  for (const Schema* c : axiom_set(Theory::Lcmu))
    if (c->name == "monad-assoc") s = c;
  REQUIRE(s != nullptr);

  Binding b;
  b.th = Theory::Lcmu;
  b.objs[0] = p;
  b.fam = 2;
  ArrPtr lhs = subst_arr(s->lhs, b);
  REQUIRE(show(lhs) == "mu2{p} . mu2{E2(p)}");

  // an instance mixing family members does not match
  ArrPtr mixed = comp(mu(p, 1), mu(app(efun(1), p), 2));
  Binding b2;
  b2.th = Theory::Lcmu;
  REQUIRE_FALSE(match_arr(s->lhs, mixed, b2));
  Binding b3;
  b3.th = Theory::Lcmu;
  REQUIRE(match_arr(s->lhs, comp(mu(p, 1), mu(app(efun(1), p), 1)), b3));
  REQUIRE(b3.fam == 1);
}

TEST_CASE("every instantiated schema is graph sound at small measure",
          "[schemas][property]") {
  for (int i = 0; i < static_cast<int>(theory_count); ++i) {
    Theory th = static_cast<Theory>(i);
    std::vector<ObjPtr> objs = object_pool(th, 2, 3);
    std::vector<ArrPtr> arrs = generator_pool(th, objs, 8);
    for (const Schema* s : axiom_set(th)) {
      SchemaSweep sweep = sweep_schema(*s, th, objs, arrs, 60);
      CAPTURE(theory_name(th), s->name);
      if (sweep.failures > 0) { CAPTURE(sweep.failing[0]); }
      REQUIRE(sweep.failures == 0);
      REQUIRE(sweep.instances > 0);
    }
  }
}

TEST_CASE("object and generator pools honor the measure bound", "[schemas]") {
  std::vector<ObjPtr> objs = object_pool(Theory::LcS, 2);
  REQUIRE_FALSE(objs.empty());
  for (const ObjPtr& o : objs) {
    REQUIRE(measure(o, Theory::LcS) <= 2);
    REQUIRE_NOTHROW(validate_object(o, Theory::LcS));
  }
  // sorted by the object order
  REQUIRE(std::is_sorted(objs.begin(), objs.end(),
                         [](const ObjPtr& a, const ObjPtr& b) {
                           return obj_cmp(a, b) < 0;
                         }));
  std::vector<ArrPtr> arrs = generator_pool(Theory::LcS, objs);
  REQUIRE_FALSE(arrs.empty());
  for (const ArrPtr& f : arrs) REQUIRE_NOTHROW(infer_type(f, Theory::LcS));
}
