// Evaluate a few canonical arrows to relations and decide equality by
// comparing the results. Build and run: ./demo_graphs

#include <cstdio>

#include "relmon/relmon.hpp"

using namespace relmon;

namespace {

void report(const char* title, const ArrPtr& f, Theory th) {
  TypedArrow t = infer_type(f, th);
  Relation g = graph(f, th);
  std::printf("%s\n  %s : %s -> %s\n  graph %s\n\n", title, show(f).c_str(),
              show(t.src).c_str(), show(t.tgt).c_str(), show(g).c_str());
}

void decide(const char* title, const ArrPtr& f, const ArrPtr& g, Theory th) {
  Verdict v = equal(f, g, th);
  std::printf("%s\n  %s\n  %s\n  -> %s", title, show(f).c_str(), show(g).c_str(),
              v.kind == Verdict::Kind::Equal      ? "equal"
              : v.kind == Verdict::Kind::NotEqual ? "not equal"
                                                  : "type mismatch");
  if (v.witness)
    std::printf(" (pair (%d,%d) only in the %s graph)", v.witness->first,
                v.witness->second, v.witness_in_lhs ? "left" : "right");
  std::printf("\n\n");
}

}  // namespace

int main() {
  ObjPtr p = letter("p"), q = letter("q");
  ObjPtr pq = tensor(p, q);
  ObjPtr tp = app(tfun(), p), tq = app(tfun(), q);

  report("unit followed by multiplication collapses",
         comp(mu(p), eta(app(tfun(), p))), Theory::LLS);

  report("left strength then right strength, flattened",
         comp(mu(pq), comp(fapp(tfun(), psiR(p, q)), psiL(p, tq))), Theory::LS);

  report("braiding under the functor", comp(fapp(tfun(), braid(p, q)), psiL(p, q)),
         Theory::LcS);

  decide("the two strength orders agree after flattening",
         comp(mu(pq), comp(fapp(tfun(), psiR(p, q)), psiL(p, tq))),
         comp(mu(pq), comp(fapp(tfun(), psiL(p, q)), psiR(tp, q))), Theory::LS);

  decide("applying the functor to a discard is not the same as discarding",
         fapp(tfun(), bang(p)), comp(eta(unit()), bang(tp)), Theory::CS);

  ObjPtr lp = app(lfun(), p);
  decide("the diagonal is cocommutative", comp(braid(lp, lp), diag(lp)), diag(lp),
         Theory::CSco);
  return 0;
}
