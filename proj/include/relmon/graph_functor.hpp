#pragma once

// Evaluation of arrow terms to relations between finite ordinals. Each
// constant has one clause, phrased against the measure of its object
// parameters; letters contribute strands exactly when the theory counts
// them. Derived constants are expanded before evaluation.

#include "relmon/relation.hpp"
#include "relmon/terms.hpp"
#include "relmon/typing.hpp"

namespace relmon {

namespace detail {

inline Relation graph_rec(const ArrPtr& f, Theory th) {
  auto m = [th](const ObjPtr& o) { return measure(o, th); };
  switch (f->kind) {
    case ArrKind::Comp:
      return compose(graph_rec(f->v, th), graph_rec(f->u, th));
    case ArrKind::Tens:
      return tensor(graph_rec(f->u, th), graph_rec(f->v, th));
    case ArrKind::FApp: {
      Relation inner = graph_rec(f->u, th);
      std::vector<Pair> ps;
      ps.reserve(inner.pairs.size() + 1);
      ps.emplace_back(0, 0);
      for (const Pair& p : inner.pairs) ps.emplace_back(p.first + 1, p.second + 1);
      return Relation{inner.src + 1, inner.tgt + 1, std::move(ps)};
    }
    case ArrKind::Id:
      return identity_rel(m(f->o1));
    case ArrKind::Assoc:
    case ArrKind::AssocInv:
      return identity_rel(m(f->o1) + m(f->o2) + m(f->o3));
    case ArrKind::Lunit:
    case ArrKind::LunitInv:
    case ArrKind::Runit:
    case ArrKind::RunitInv:
      return identity_rel(m(f->o1));
    case ArrKind::Braid: {
      int ma = m(f->o1), mb = m(f->o2);
      std::vector<Pair> ps;
      ps.reserve(ma + mb);
      for (int i = 0; i < ma; ++i) ps.emplace_back(i, mb + i);
      for (int j = 0; j < mb; ++j) ps.emplace_back(ma + j, j);
      std::sort(ps.begin(), ps.end());
      return Relation{ma + mb, ma + mb, std::move(ps)};
    }
    case ArrKind::PsiL:
      return identity_rel(1 + m(f->o1) + m(f->o2));
    case ArrKind::PsiR: {
      // the functor occurrence jumps over A to the front
      int ma = m(f->o1), mb = m(f->o2);
      int n = ma + 1 + mb;
      std::vector<Pair> ps;
      ps.reserve(n);
      for (int i = 0; i < ma; ++i) ps.emplace_back(i, i + 1);
      ps.emplace_back(ma, 0);
      for (int j = ma + 1; j < n; ++j) ps.emplace_back(j, j);
      std::sort(ps.begin(), ps.end());
      return Relation{n, n, std::move(ps)};
    }
    case ArrKind::Psi: {
      // primitive clause: the two outer functor occurrences merge
      int ma = m(f->o1), mb = m(f->o2);
      std::vector<Pair> ps;
      ps.emplace_back(0, 0);
      ps.emplace_back(ma + 1, 0);
      for (int i = 1; i <= ma; ++i) ps.emplace_back(i, i);
      for (int j = ma + 2; j <= ma + mb + 1; ++j) ps.emplace_back(j, j - 1);
      std::sort(ps.begin(), ps.end());
      return Relation{ma + mb + 2, ma + mb + 1, std::move(ps)};
    }
    case ArrKind::Psi0:
      return Relation{0, 1, {}};
    case ArrKind::Eta: {
      int ma = m(f->o1);
      std::vector<Pair> ps;
      ps.reserve(ma);
      for (int i = 0; i < ma; ++i) ps.emplace_back(i, i + 1);
      return Relation{ma, ma + 1, std::move(ps)};
    }
    case ArrKind::Mu: {
      int ma = m(f->o1);
      std::vector<Pair> ps;
      ps.reserve(ma + 2);
      ps.emplace_back(0, 0);
      ps.emplace_back(1, 0);
      for (int i = 2; i <= ma + 1; ++i) ps.emplace_back(i, i - 1);
      return Relation{ma + 2, ma + 1, std::move(ps)};
    }
    case ArrKind::Eps: {
      int ma = m(f->o1);
      std::vector<Pair> ps;
      ps.reserve(ma);
      for (int i = 0; i < ma; ++i) ps.emplace_back(i + 1, i);
      return Relation{ma + 1, ma, std::move(ps)};
    }
    case ArrKind::Delta: {
      int ma = m(f->o1);
      std::vector<Pair> ps;
      ps.reserve(ma + 2);
      ps.emplace_back(0, 0);
      ps.emplace_back(0, 1);
      for (int i = 1; i <= ma; ++i) ps.emplace_back(i, i + 1);
      return Relation{ma + 1, ma + 2, std::move(ps)};
    }
    case ArrKind::Diag: {
      int ma = m(f->o1);
      std::vector<Pair> ps;
      ps.reserve(2 * ma);
      for (int i = 0; i < ma; ++i) {
        ps.emplace_back(i, i);
        ps.emplace_back(i, i + ma);
      }
      std::sort(ps.begin(), ps.end());
      return Relation{ma, 2 * ma, std::move(ps)};
    }
    case ArrKind::Bang:
      return Relation{m(f->o1), 0, {}};
    case ArrKind::Codiag: {
      int ma = m(f->o1);
      std::vector<Pair> ps;
      ps.reserve(2 * ma);
      for (int i = 0; i < ma; ++i) {
        ps.emplace_back(i, i);
        ps.emplace_back(i + ma, i);
      }
      std::sort(ps.begin(), ps.end());
      return Relation{2 * ma, ma, std::move(ps)};
    }
    case ArrKind::Cobang:
      return Relation{0, m(f->o1), {}};
  }
  return Relation{};
}

}  // namespace detail

inline Relation graph(const ArrPtr& f, Theory th) {
  ArrPtr expanded = expand_derived(f, th);
  infer_type(expanded, th);
  return detail::graph_rec(expanded, th);
}

struct MembershipReport {
  Relation rel;
  GraphCat target;
  bool in_target = false;
  RelationClass flags;
};

inline MembershipReport graph_membership_report(const ArrPtr& f, Theory th) {
  MembershipReport rep;
  rep.rel = graph(f, th);
  rep.target = theory_info(th).target;
  rep.flags = classify(rep.rel);
  rep.in_target = member_of(rep.rel, rep.target);
  return rep;
}

}  // namespace relmon
