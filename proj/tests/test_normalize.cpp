#include <catch2/catch_amalgamated.hpp>

#include "relmon/decide.hpp"
#include "relmon/normalize.hpp"
#include "relmon/terms.hpp"
#include "relmon/typing.hpp"

using namespace relmon;

namespace {

const ObjPtr P = letter("p");
const ObjPtr Q = letter("q");

// Thread the stage sources through a factorization and check every stage
// against its descriptor. Returns the final object for a target check.
void check_stages(const Factorization& fz) {
  REQUIRE(fz.stages.size() == static_cast<std::size_t>(stage_count(fz.th)));
  ObjPtr o = fz.src;
  for (int i = 0; i < stage_count(fz.th); ++i) {
    const Stage& s = fz.stages[static_cast<std::size_t>(i)];
    CAPTURE(theory_name(fz.th), i, show(s.term));
    REQUIRE(s.descriptor == stage_descriptor(fz.th, i));
    REQUIRE(stage_respects_descriptor(s.term, o, fz.th, i));
    TypedArrow ty = infer_type(s.term, fz.th);
    REQUIRE(obj_eq(ty.src, o));
    o = ty.tgt;
  }
  REQUIRE(obj_eq(o, fz.tgt));
}

void check_round_trip(const ArrPtr& t, Theory th) {
  Factorization fz = normalize(t, th);
  check_stages(fz);
  Verdict v = equal(fz.composite(), t, th);
  CAPTURE(theory_name(th), show(t), v.detail);
  REQUIRE(v.kind == Verdict::Kind::Equal);
}

}  // namespace

TEST_CASE("stage counts and descriptors per theory", "[normalize]") {
  REQUIRE(stage_count(Theory::LLS) == 2);
  REQUIRE(stage_count(Theory::CS) == 3);
  REQUIRE(stage_count(Theory::DS) == 2);
  REQUIRE(stage_count(Theory::MSco) == 4);
  REQUIRE(stage_count(Theory::CSco) == 3);
  REQUIRE(stage_count(Theory::Lc) == 1);
  REQUIRE(stage_count(Theory::Lcmu) == 2);

  REQUIRE(std::string(stage_descriptor(Theory::LLS, 0)) == "structural factors");
  REQUIRE(std::string(stage_descriptor(Theory::LLS, 1)) == "eta and mu factors");
  REQUIRE(std::string(stage_descriptor(Theory::CS, 0)) ==
          "diag and bang factors with atomic index");
  REQUIRE(std::string(stage_descriptor(Theory::CS, 2)) == "eta factors");
  REQUIRE(std::string(stage_descriptor(Theory::DS, 0)) == "monad factors");
  REQUIRE(std::string(stage_descriptor(Theory::DS, 1)) ==
          "codiag and cobang factors with letter index");
  REQUIRE(std::string(stage_descriptor(Theory::MSco, 3)) ==
          "psi0 factors and letter-free unitors");
  REQUIRE(std::string(stage_descriptor(Theory::CSco, 0)) ==
          "diag and bang factors with atomic index");
  REQUIRE(std::string(stage_descriptor(Theory::CSco, 1)) == "eps and delta factors");
  REQUIRE(std::string(stage_descriptor(Theory::DSco, 1)) ==
          "cocartesian structural factors");
  REQUIRE(std::string(stage_descriptor(Theory::Lcmu, 1)) == "mu factors");
}

TEST_CASE("eta slides out of a strength composite", "[normalize]") {
  // psiL{p, q} . eta{p} * id{q} rewrites to the single factor eta{p * q}
  ArrPtr t = comp(psiL(P, Q), tens(eta(P), id(Q)));
  Factorization fz = normalize(t, Theory::LLS);
  REQUIRE(obj_eq(fz.src, tensor(P, Q)));
  REQUIRE(obj_eq(fz.tgt, app(tfun(), tensor(P, Q))));
  REQUIRE(arr_eq(fz.stages[0].term, id(tensor(P, Q))));
  REQUIRE(show(fz.stages[1].term) == "eta{p * q}");
  check_stages(fz);
  REQUIRE(equal(fz.composite(), t, Theory::LLS).kind == Verdict::Kind::Equal);
}

TEST_CASE("identity normalizes to identity stages", "[normalize]") {
  Factorization fz = normalize(id(tensor(P, Q)), Theory::CS);
  REQUIRE(fz.stages.size() == 3);
  for (const Stage& s : fz.stages) REQUIRE(arr_eq(s.term, id(tensor(P, Q))));
  REQUIRE(arr_eq(fz.composite(), id(tensor(P, Q))));
  check_stages(fz);
}

TEST_CASE("diagonal of a tensor splits to atomic diagonals", "[normalize]") {
  Factorization fz = normalize(diag(tensor(P, Q)), Theory::CS);
  check_stages(fz);
  REQUIRE(equal(fz.composite(), diag(tensor(P, Q)), Theory::CS).kind ==
          Verdict::Kind::Equal);
  // the first stage holds the two letter diagonals, nothing structural
  std::vector<Factor> head = develop(fz.stages[0].term);
  REQUIRE(head.size() == 2);
  for (const Factor& f : head) REQUIRE(f.kind == ArrKind::Diag);
}

TEST_CASE("eta crosses a functor image of bang", "[normalize]") {
  // T[bang{p}] . eta{p} equals eta{I} . bang{p} by naturality; the staged
  // form puts the bang first and the eta last
  ArrPtr t = comp(fapp(tfun(), bang(P)), eta(P));
  Factorization fz = normalize(t, Theory::CS);
  REQUIRE(arr_eq(fz.stages[0].term, bang(P)));
  REQUIRE(arr_eq(fz.stages[2].term, eta(unit())));
  check_stages(fz);
  REQUIRE(equal(fz.composite(), t, Theory::CS).kind == Verdict::Kind::Equal);
}

TEST_CASE("codiagonal over a functor application routes through the monad",
          "[normalize]") {
  Factorization fz = normalize(codiag(app(tfun(), P)), Theory::DS);
  check_stages(fz);
  REQUIRE(equal(fz.composite(), codiag(app(tfun(), P)), Theory::DS).kind ==
          Verdict::Kind::Equal);
  // stage one is the strength-multiplication route, stage two the letter
  // codiagonal under the functor
  REQUIRE(show(fz.stages[0].term) == "mu{p * p} . (T[psiL{p, p}] . psiR{T(p), p})");
  REQUIRE(arr_eq(fz.stages[1].term, fapp(tfun(), codiag(P))));
}

TEST_CASE("cobang splits along its target", "[normalize]") {
  Factorization fz = normalize(cobang(tensor(app(tfun(), P), Q)), Theory::DS);
  check_stages(fz);
  REQUIRE(equal(fz.composite(), cobang(tensor(app(tfun(), P), Q)), Theory::DS).kind ==
          Verdict::Kind::Equal);
}

TEST_CASE("counit absorbs a left strength", "[normalize]") {
  // eps{p * q} . psiL{p, q} contracts to eps{p} * id{q}
  ArrPtr t = comp(eps(tensor(P, Q)), psiL(P, Q));
  Factorization fz = normalize(t, Theory::LLSco);
  REQUIRE(arr_eq(fz.stages[0].term, tens(eps(P), id(Q))));
  REQUIRE(arr_eq(fz.stages[1].term, id(tensor(P, Q))));
  check_stages(fz);
  REQUIRE(equal(fz.composite(), t, Theory::LLSco).kind == Verdict::Kind::Equal);
}

TEST_CASE("comultiplication crosses psi by the permutation law", "[normalize]") {
  // delta{p * q} . psi{p, q} restages as psi factors after both deltas
  ArrPtr t = comp(delta(tensor(P, Q)), psi(P, Q));
  Factorization fz = normalize(t, Theory::McSco);
  check_stages(fz);
  REQUIRE(equal(fz.composite(), t, Theory::McSco).kind == Verdict::Kind::Equal);
  std::vector<Factor> head = develop(fz.stages[0].term);
  for (const Factor& f : head) REQUIRE(f.kind == ArrKind::Delta);
  std::vector<Factor> tail = develop(fz.stages[1].term);
  REQUIRE(tail.size() == 2);
  for (const Factor& f : tail) REQUIRE(f.kind == ArrKind::Psi);
}

TEST_CASE("counit annihilates psi0", "[normalize]") {
  ArrPtr t = comp(eps(unit()), psi0());
  Factorization fz = normalize(t, Theory::MSco);
  for (const Stage& s : fz.stages) REQUIRE(arr_eq(s.term, id(unit())));
  REQUIRE(equal(fz.composite(), t, Theory::MSco).kind == Verdict::Kind::Equal);
}

TEST_CASE("letter-free unitor rides in the psi0 tail", "[normalize]") {
  // L[l'{I}] . psi0 has no staging with psi0 strictly last; the unitor over
  // a letter-free object is tolerated inside the final stage
  ArrPtr t = comp(fapp(lfun(), lunit_inv(unit())), psi0());
  Factorization fz = normalize(t, Theory::MSco);
  check_stages(fz);
  REQUIRE(equal(fz.composite(), t, Theory::MSco).kind == Verdict::Kind::Equal);
  for (int i = 0; i < 3; ++i)
    REQUIRE(arr_eq(fz.stages[static_cast<std::size_t>(i)].term, id(unit())));
  std::vector<Factor> tail = develop(fz.stages[3].term);
  REQUIRE(tail.size() == 2);
  REQUIRE(tail[0].kind == ArrKind::Psi0);
  REQUIRE(tail[1].kind == ArrKind::LunitInv);
}

TEST_CASE("diagonal stays ahead of the counit", "[normalize]") {
  // (eps{p} * id{L(p)}) . diag{L(p)} keeps the diagonal in the first stage;
  // there is no staging with the diagonal after the counit
  ObjPtr lp = app(lfun(), P);
  ArrPtr t = comp(tens(eps(P), id(lp)), diag(lp));
  Factorization fz = normalize(t, Theory::CSco);
  REQUIRE(arr_eq(fz.stages[0].term, diag(lp)));
  REQUIRE(arr_eq(fz.stages[1].term, tens(eps(P), id(lp))));
  check_stages(fz);
  REQUIRE(equal(fz.composite(), t, Theory::CSco).kind == Verdict::Kind::Equal);
}

TEST_CASE("coproduct expansion of psi restages in DSco", "[normalize]") {
  Factorization fz = normalize(psi(P, Q), Theory::DSco);
  check_stages(fz);
  REQUIRE(equal(fz.composite(), psi(P, Q), Theory::DSco).kind == Verdict::Kind::Equal);
  REQUIRE(arr_eq(fz.stages[0].term, id(tensor(app(lfun(), P), app(lfun(), Q)))));
}

TEST_CASE("multiplication moves past a strength in Lcmu", "[normalize]") {
  ArrPtr t = comp(psiL(P, Q, 1), tens(mu(P, 1), id(Q)));
  Factorization fz = normalize(t, Theory::Lcmu);
  check_stages(fz);
  REQUIRE(equal(fz.composite(), t, Theory::Lcmu).kind == Verdict::Kind::Equal);
  REQUIRE(arr_eq(fz.stages[1].term, mu(tensor(P, Q), 1)));
}

TEST_CASE("round trips across the theory table", "[normalize][property]") {
  ObjPtr tp = app(tfun(), P);
  ObjPtr lp = app(lfun(), P);
  check_round_trip(comp(mu(P), fapp(tfun(), eta(P))), Theory::LLS);
  check_round_trip(comp(psiR(P, Q), tens(id(P), eta(Q))), Theory::LRS);
  check_round_trip(psi(P, Q), Theory::LS);
  check_round_trip(psi0(), Theory::LS);
  check_round_trip(comp(fapp(tfun(), braid(P, Q)), psiL(P, Q)), Theory::LcS);
  check_round_trip(comp(tens(bang(tp), id(tp)), diag(tp)), Theory::CS);
  check_round_trip(comp(mu(P), eta(tp)), Theory::DS);
  check_round_trip(comp(fapp(lfun(), runit(P)), psiL(P, unit())), Theory::LLSco);
  check_round_trip(comp(eps(tensor(P, Q)), psi(P, Q)), Theory::McSco);
  check_round_trip(comp(fapp(lfun(), eps(P)), delta(P)), Theory::MSco);
  check_round_trip(comp(tens(eps(P), eps(P)), diag(lp)), Theory::CSco);
  check_round_trip(comp(codiag(lp), tens(id(lp), fapp(lfun(), id(P)))), Theory::DSco);
  check_round_trip(comp(assoc(P, Q, P), tens(braid(Q, P), id(P))), Theory::Lc);
  check_round_trip(comp(mu(tensor(P, Q), 1), fapp(efun(1), psiL(P, Q, 1))),
                   Theory::Lcmu);
}

TEST_CASE("descriptor check rejects misplaced factors", "[normalize]") {
  REQUIRE(stage_respects_descriptor(eta(P), P, Theory::LLS, 1));
  REQUIRE_FALSE(stage_respects_descriptor(eta(P), P, Theory::LLS, 0));
  REQUIRE(stage_respects_descriptor(diag(P), P, Theory::CS, 0));
  REQUIRE_FALSE(stage_respects_descriptor(diag(tensor(P, Q)), tensor(P, Q),
                                          Theory::CS, 0));
  REQUIRE(stage_respects_descriptor(fapp(tfun(), codiag(P)),
                                    app(tfun(), tensor(P, P)), Theory::DS, 1));
  REQUIRE_FALSE(stage_respects_descriptor(codiag(app(tfun(), P)),
                                          tensor(app(tfun(), P), app(tfun(), P)),
                                          Theory::DS, 1));
  // the psi0 tail admits unitors only over letter-free objects
  REQUIRE(stage_respects_descriptor(lunit(app(lfun(), unit())),
                                    tensor(unit(), app(lfun(), unit())),
                                    Theory::MSco, 3));
  REQUIRE_FALSE(stage_respects_descriptor(lunit(P), tensor(unit(), P),
                                          Theory::MSco, 3));
}

TEST_CASE("budget exhaustion raises", "[normalize]") {
  ArrPtr t = comp(psiL(P, Q), tens(eta(P), id(Q)));
  REQUIRE_THROWS_AS(normalize(t, Theory::LLS, 0), NormalizationBudgetExceeded);
  REQUIRE_THROWS_WITH(normalize(t, Theory::LLS, 0),
                      Catch::Matchers::ContainsSubstring("step budget"));
}
