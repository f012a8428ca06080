#include <catch2/catch_amalgamated.hpp>

#include <vector>

#include "relmon/parser.hpp"
#include "relmon/terms.hpp"
#include "relmon/typing.hpp"

using namespace relmon;

namespace {
const ObjPtr P = letter("p");
const ObjPtr Q = letter("q");
}  // namespace

TEST_CASE("object parsing", "[parser]") {
  REQUIRE(obj_eq(parse_object("I"), unit()));
  REQUIRE(obj_eq(parse_object("p"), P));
  REQUIRE(obj_eq(parse_object("p * q"), tensor(P, Q)));
  // tensor associates to the left
  REQUIRE(obj_eq(parse_object("p * q * I"), tensor(tensor(P, Q), unit())));
  REQUIRE(obj_eq(parse_object("p * (q * I)"), tensor(P, tensor(Q, unit()))));
  REQUIRE(obj_eq(parse_object("T(p * q)"), app(tfun(), tensor(P, Q))));
  REQUIRE(obj_eq(parse_object("L(L(p))"), app(lfun(), app(lfun(), P))));
  REQUIRE(obj_eq(parse_object("E1(p) * E12(q)"),
                 tensor(app(efun(1), P), app(efun(12), Q))));
  // letters may carry trailing alphanumerics
  REQUIRE(obj_eq(parse_object("ab2"), letter("ab2")));
  REQUIRE(obj_eq(parse_object("  p *\tq "), tensor(P, Q)));
}

TEST_CASE("object parse errors carry a position", "[parser]") {
  REQUIRE_THROWS_AS(parse_object(""), ParseError);
  REQUIRE_THROWS_AS(parse_object("p *"), ParseError);
  REQUIRE_THROWS_AS(parse_object("(p"), ParseError);
  REQUIRE_THROWS_AS(parse_object("p q"), ParseError);
  REQUIRE_THROWS_AS(parse_object("T()"), ParseError);
  // an index of zero parses as syntax but no theory accepts the symbol
  REQUIRE_THROWS_AS(validate_object(parse_object("E0(p)"), Theory::Lc),
                    ForeignFunctorError);
  try {
    parse_object("p * * q");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    REQUIRE(e.line == 1);
    REQUIRE(e.col == 5);
  }
}

TEST_CASE("arrow parsing", "[parser]") {
  REQUIRE(arr_eq(parse_arrow("id{p}"), id(P)));
  REQUIRE(arr_eq(parse_arrow("a{p, q, I}"), assoc(P, Q, unit())));
  REQUIRE(arr_eq(parse_arrow("a'{p, q, I}"), assoc_inv(P, Q, unit())));
  REQUIRE(arr_eq(parse_arrow("l{p}"), lunit(P)));
  REQUIRE(arr_eq(parse_arrow("l'{p}"), lunit_inv(P)));
  REQUIRE(arr_eq(parse_arrow("r{p}"), runit(P)));
  REQUIRE(arr_eq(parse_arrow("r'{p}"), runit_inv(P)));
  REQUIRE(arr_eq(parse_arrow("c{p, q}"), braid(P, Q)));
  REQUIRE(arr_eq(parse_arrow("psiL{p, q}"), psiL(P, Q)));
  REQUIRE(arr_eq(parse_arrow("psiR{p, q}"), psiR(P, Q)));
  REQUIRE(arr_eq(parse_arrow("psi{p, q}"), psi(P, Q)));
  REQUIRE(arr_eq(parse_arrow("psi0"), psi0()));
  REQUIRE(arr_eq(parse_arrow("eta{p}"), eta(P)));
  REQUIRE(arr_eq(parse_arrow("mu{p}"), mu(P)));
  REQUIRE(arr_eq(parse_arrow("eps{p}"), eps(P)));
  REQUIRE(arr_eq(parse_arrow("delta{p}"), delta(P)));
  REQUIRE(arr_eq(parse_arrow("diag{p}"), diag(P)));
  REQUIRE(arr_eq(parse_arrow("bang{p}"), bang(P)));
  REQUIRE(arr_eq(parse_arrow("codiag{p}"), codiag(P)));
  REQUIRE(arr_eq(parse_arrow("cobang{p}"), cobang(P)));
  // family indices sit between the token and the brace
  REQUIRE(arr_eq(parse_arrow("mu2{p}"), mu(P, 2)));
  REQUIRE(arr_eq(parse_arrow("psiL1{p, q}"), psiL(P, Q, 1)));
  REQUIRE(arr_eq(parse_arrow("psiR3{p, q}"), psiR(P, Q, 3)));
}

TEST_CASE("arrow combinator parsing and precedence", "[parser]") {
  // composition associates to the left and reads right to left
  ArrPtr f = parse_arrow("mu{p} . T[eta{p}] . eta{p}");
  REQUIRE(arr_eq(f, comp(comp(mu(P), fapp(tfun(), eta(P))), eta(P))));
  // tensor binds tighter than composition
  ArrPtr g = parse_arrow("eta{p} * id{q} . l{p * q}");
  REQUIRE(arr_eq(g, comp(tens(eta(P), id(Q)), lunit(tensor(P, Q)))));
  // application binds tighter than tensor
  ArrPtr h = parse_arrow("L[eps{p}] * delta{q}");
  REQUIRE(arr_eq(h, tens(fapp(lfun(), eps(P)), delta(Q))));
  REQUIRE(arr_eq(parse_arrow("E2[id{p}]"), fapp(efun(2), id(P))));
  REQUIRE(arr_eq(parse_arrow("(eta{p})"), eta(P)));
  ArrPtr nested = parse_arrow("T[T[eta{p}] . eta{T(p)}]");
  REQUIRE(arr_eq(nested, fapp(tfun(), comp(fapp(tfun(), eta(P)), eta(app(tfun(), P))))));
}

TEST_CASE("arrow parse errors", "[parser]") {
  REQUIRE_THROWS_AS(parse_arrow(""), ParseError);
  REQUIRE_THROWS_AS(parse_arrow("eta"), ParseError);       // missing parameters
  REQUIRE_THROWS_AS(parse_arrow("eta{p"), ParseError);     // unclosed brace
  REQUIRE_THROWS_AS(parse_arrow("eta{p} ."), ParseError);  // dangling composition
  REQUIRE_THROWS_AS(parse_arrow("c{p}"), ParseError);      // wrong arity
  REQUIRE_THROWS_AS(parse_arrow("a{p, q}"), ParseError);   // wrong arity
  REQUIRE_THROWS_AS(parse_arrow("T[eta{p}"), ParseError);  // unclosed bracket
  REQUIRE_THROWS_AS(parse_arrow("id{p} id{p}"), ParseError);
  REQUIRE_THROWS_AS(parse_arrow("frob{p}"), ParseError);   // unknown token
  REQUIRE_THROWS_AS(parse_arrow("psi0{p}"), ParseError);   // psi0 takes no objects
}

TEST_CASE("printing then parsing is the identity on arrows", "[parser][property]") {
  ObjPtr tp = app(tfun(), P);
  ObjPtr lp = app(lfun(), P);
  std::vector<ArrPtr> terms = {
      id(unit()),
      psi0(),
      assoc(P, Q, tensor(P, Q)),
      comp(mu(tensor(P, Q)), comp(fapp(tfun(), psiL(P, Q)), psiR(tp, Q))),
      comp(tens(eta(P), id(Q)), lunit(tensor(P, Q))),
      tens(tens(id(P), id(Q)), id(P)),
      tens(id(P), tens(id(Q), id(P))),
      comp(comp(lunit(P), tens(psi0(), id(P))), lunit_inv(P)),
      fapp(efun(3), comp(psiL(P, Q, 3), tens(mu(P, 3), id(Q)))),
      comp(delta(lp), comp(eps(app(lfun(), lp)), delta(lp))),
      tens(diag(P), bang(Q)),
      tens(codiag(P), cobang(Q)),
      comp(braid(P, Q), braid(Q, P)),
      fapp(lfun(), fapp(lfun(), eps(P))),
      psi(tensor(P, Q), unit()),
  };
  for (const ArrPtr& t : terms) {
    CAPTURE(show(t));
    ArrPtr back = parse_arrow(show(t));
    REQUIRE(arr_eq(back, t));
    // printing is stable across one round trip
    REQUIRE(show(back) == show(t));
  }
}

TEST_CASE("printing then parsing is the identity on objects", "[parser][property]") {
  std::vector<ObjPtr> objs = {
      unit(),
      P,
      tensor(P, Q),
      tensor(tensor(P, Q), P),
      tensor(P, tensor(Q, P)),
      app(tfun(), tensor(unit(), P)),
      tensor(app(efun(1), P), app(efun(2), tensor(P, unit()))),
      app(lfun(), app(lfun(), tensor(P, Q))),
  };
  for (const ObjPtr& o : objs) {
    CAPTURE(show(o));
    REQUIRE(obj_eq(parse_object(show(o)), o));
  }
}
