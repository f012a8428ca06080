// Re-derive a graph-level equality inside the equational theory: the bounded
// oracle searches for a rewrite path between the two terms and prints it.
// Build and run: ./demo_oracle

#include <cstdio>

#include "relmon/relmon.hpp"

using namespace relmon;

namespace {

void probe(const char* title, const ArrPtr& f, const ArrPtr& g, Theory th) {
  std::printf("%s\n  %s\n  %s\n", title, show(f).c_str(), show(g).c_str());
  OracleResult r = equivalent_bounded(f, g, th);
  switch (r.outcome) {
    case OracleOutcome::Equivalent:
      std::printf("  equivalent in %zu steps (%ld terms visited)\n",
                  r.path.size(), r.visited);
      for (const RewriteStep& s : r.path) {
        std::string at;
        for (int c : s.pos) at += std::to_string(c) + ".";
        if (!at.empty()) at.pop_back();
        std::printf("    %s%s at [%s]\n", s.schema.c_str(),
                    s.reversed ? " (reversed)" : "", at.c_str());
      }
      break;
    case OracleOutcome::Distinct:
      std::printf("  distinct: the graphs already differ (%ld terms visited)\n",
                  r.visited);
      break;
    case OracleOutcome::Exhausted:
      std::printf("  exhausted the budget after %ld terms\n", r.visited);
      break;
  }
  std::printf("\n");
}

}  // namespace

int main() {
  ObjPtr p = letter("p"), q = letter("q");
  ObjPtr pq = tensor(p, q);
  ObjPtr tp = app(tfun(), p), tq = app(tfun(), q);

  probe("unit absorbed by multiplication", comp(mu(p), eta(app(tfun(), p))), id(tp),
        Theory::LLS);

  probe("strength orders after flattening",
        comp(mu(pq), comp(fapp(tfun(), psiR(p, q)), psiL(p, tq))),
        comp(mu(pq), comp(fapp(tfun(), psiL(p, q)), psiR(tp, q))), Theory::LS);

  // the graphs of this pair differ, so no derivation exists and the search
  // can only exhaust its budget: refutation is the graph evaluator's job
  probe("a discard against a rebuilt discard", fapp(tfun(), bang(p)),
        comp(eta(unit()), bang(tp)), Theory::CS);
  return 0;
}
