#pragma once

// Text front end. Eight subcommands wrap the decision procedures; records
// go to standard output as JSON with sorted keys so identical inputs give
// byte-identical output. Exit codes: 0 success or a positive answer, 1 a
// definite negative answer, 2 an input or type error, 3 a budget ran out.

#include <algorithm>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "relmon/decide.hpp"
#include "relmon/enumerate.hpp"
#include "relmon/graph_functor.hpp"
#include "relmon/normalize.hpp"
#include "relmon/oracle.hpp"
#include "relmon/parser.hpp"
#include "relmon/relation.hpp"
#include "relmon/soundness.hpp"
#include "relmon/terms.hpp"
#include "relmon/typing.hpp"

namespace relmon {

namespace detail {

inline nlohmann::json relation_record(const Relation& r) {
  nlohmann::json pairs = nlohmann::json::array();
  for (const Pair& p : r.pairs) pairs.push_back({p.first, p.second});
  return {{"src", r.src}, {"tgt", r.tgt}, {"pairs", pairs}};
}

inline Relation relation_from_record(const std::string& text) {
  nlohmann::json j = nlohmann::json::parse(text);
  std::vector<Pair> pairs;
  for (const auto& e : j.at("pairs")) {
    if (!e.is_array() || e.size() != 2)
      throw BadRelationError("each pair must be a two-element array");
    pairs.emplace_back(e.at(0).get<int>(), e.at(1).get<int>());
  }
  return make_relation(j.at("src").get<int>(), j.at("tgt").get<int>(), std::move(pairs));
}

inline void print_dot(const Relation& r, std::ostream& out) {
  out << "digraph relation {\n  rankdir = TB;\n";
  out << "  { rank = same;";
  for (int i = 0; i < r.src; ++i) out << " s" << i << " [label=\"" << i << "\"];";
  out << " }\n";
  out << "  { rank = same;";
  for (int j = 0; j < r.tgt; ++j) out << " t" << j << " [label=\"" << j << "\"];";
  out << " }\n";
  for (const Pair& p : r.pairs) out << "  s" << p.first << " -> t" << p.second << ";\n";
  out << "}\n";
}

inline Theory theory_or_throw(const std::string& name) {
  std::optional<Theory> th = parse_theory(name);
  if (!th) throw std::runtime_error("unknown theory: " + name);
  return *th;
}

inline void print_scope_report(const char* label, const ScopeReport& rep,
                               std::ostream& out) {
  out << label << " generators:";
  for (const std::string& g : rep.generators) out << " " << g;
  out << "\n";
  for (const OccurrenceScope& occ : rep.functor_scopes) {
    out << label << " scope of " << show(occ.sym) << " occurrence " << occ.occurrence
        << ":";
    for (const std::string& g : occ.scope) out << " " << g;
    out << "\n";
  }
}

inline std::string show_step(const RewriteStep& s) {
  std::string out = s.schema;
  out += " @ [";
  for (std::size_t i = 0; i < s.pos.size(); ++i) {
    if (i) out += " ";
    out += std::to_string(s.pos[i]);
  }
  out += "]";
  if (s.reversed) out += " reversed";
  return out;
}

}  // namespace detail

// Runs one invocation. args holds the arguments after the program name in
// their natural order.
inline int cli_main(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"decision procedures for strong monad and monoidal comonad theories",
               "relmon"};
  app.require_subcommand(1);

  std::string theory_name, term_a, term_b, obj_a, obj_b, lemma, rel_text;
  bool dot = false;
  long budget = 0;
  int max_measure = 3, max_size = 6;

  CLI::App* cmd_graph = app.add_subcommand("graph", "evaluate a term to its relation");
  cmd_graph->add_option("--theory", theory_name)->required();
  cmd_graph->add_flag("--dot", dot, "also print a two-row diagram");
  cmd_graph->add_option("term", term_a)->required();

  CLI::App* cmd_eq = app.add_subcommand("eq", "decide equality of two terms");
  cmd_eq->add_option("--theory", theory_name)->required();
  cmd_eq->add_option("lhs", term_a)->required();
  cmd_eq->add_option("rhs", term_b)->required();

  CLI::App* cmd_exists = app.add_subcommand("exists", "decide arrow existence");
  cmd_exists->add_option("--lemma", lemma)->required()->check(CLI::IsMember({"lc", "lcmu"}));
  cmd_exists->add_option("src", obj_a)->required();
  cmd_exists->add_option("tgt", obj_b)->required();

  CLI::App* cmd_dec = app.add_subcommand("decompose", "factor a relation into a triple");
  cmd_dec->add_option("--rel", rel_text)->required();

  CLI::App* cmd_oracle = app.add_subcommand("oracle", "bounded equational search");
  cmd_oracle->add_option("--theory", theory_name)->required();
  cmd_oracle->add_option("--budget", budget, "visited-state bound");
  cmd_oracle->add_option("lhs", term_a)->required();
  cmd_oracle->add_option("rhs", term_b)->required();

  CLI::App* cmd_norm = app.add_subcommand("normalize", "stage factorization");
  cmd_norm->add_option("--theory", theory_name)->required();
  cmd_norm->add_option("term", term_a)->required();

  CLI::App* cmd_ax = app.add_subcommand("axioms-check", "equation soundness sweep");
  cmd_ax->add_option("--theory", theory_name)->required();
  cmd_ax->add_option("--max-measure", max_measure);

  CLI::App* cmd_enum = app.add_subcommand("enumerate", "list terms in a hom-set");
  cmd_enum->add_option("--theory", theory_name)->required();
  cmd_enum->add_option("--src", obj_a)->required();
  cmd_enum->add_option("--tgt", obj_b)->required();
  cmd_enum->add_option("--max-size", max_size);

  try {
    std::reverse(args.begin(), args.end());
    app.parse(args);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << nlohmann::json{{"error", e.what()}, {"kind", "usage"}}.dump() << "\n";
    return 2;
  }

  try {
    if (cmd_graph->parsed()) {
      Theory th = detail::theory_or_throw(theory_name);
      MembershipReport rep = graph_membership_report(parse_arrow(term_a), th);
      nlohmann::json j = detail::relation_record(rep.rel);
      j["target"] = graph_cat_name(rep.target);
      j["member"] = rep.in_target;
      out << j.dump() << "\n";
      if (dot) detail::print_dot(rep.rel, out);
      return 0;
    }
    if (cmd_eq->parsed()) {
      Theory th = detail::theory_or_throw(theory_name);
      Verdict v = equal(parse_arrow(term_a), parse_arrow(term_b), th);
      switch (v.kind) {
        case Verdict::Kind::Equal:
          out << "equal\n";
          return 0;
        case Verdict::Kind::NotEqual:
          out << "not equal: " << v.detail << "\n";
          return 1;
        case Verdict::Kind::TypeMismatch:
          err << nlohmann::json{{"error", v.detail}, {"kind", "type"}}.dump() << "\n";
          return 2;
      }
    }
    if (cmd_exists->parsed()) {
      ObjPtr a = parse_object(obj_a);
      ObjPtr b = parse_object(obj_b);
      bool yes = lemma == "lc" ? arrow_exists_lc(a, b) : arrow_exists_lcmu(a, b);
      out << (yes ? "true" : "false") << "\n";
      detail::print_scope_report("A", scopes(a), out);
      detail::print_scope_report("B", scopes(b), out);
      return yes ? 0 : 1;
    }
    if (cmd_dec->parsed()) {
      Relation r = detail::relation_from_record(rel_text);
      CoordinatedTriple t = decompose(r);
      bool ok = recompose(t) == r && is_coordinated(t);
      nlohmann::json j{{"k", t.k}, {"n", t.n},       {"m", t.m},
                       {"nu", t.nu}, {"mu", t.mu},   {"beta", t.beta},
                       {"check", ok ? "ok" : "mismatch"}};
      out << j.dump() << "\n";
      return ok ? 0 : 1;
    }
    if (cmd_oracle->parsed()) {
      Theory th = detail::theory_or_throw(theory_name);
      OracleBudget b;
      if (budget > 0) b.max_visited = budget;
      OracleResult res = equivalent_bounded(parse_arrow(term_a), parse_arrow(term_b), th, b);
      switch (res.outcome) {
        case OracleOutcome::Equivalent:
          out << "Equivalent\n";
          for (const RewriteStep& s : res.path) out << "  " << detail::show_step(s) << "\n";
          return 0;
        case OracleOutcome::Distinct:
          out << "Distinct\n";
          return 1;
        case OracleOutcome::Exhausted:
          out << "Unknown\n";
          return 3;
      }
    }
    if (cmd_norm->parsed()) {
      Theory th = detail::theory_or_throw(theory_name);
      Factorization f = normalize(parse_arrow(term_a), th);
      for (std::size_t i = 0; i < f.stages.size(); ++i)
        out << "stage " << i + 1 << " (" << f.stages[i].descriptor
            << "): " << show(f.stages[i].term) << "\n";
      return 0;
    }
    if (cmd_ax->parsed()) {
      Theory th = detail::theory_or_throw(theory_name);
      bool all_ok = true;
      for (const SchemaSweep& s : axiom_soundness_sweep(th, max_measure)) {
        if (s.failures == 0) {
          out << s.schema << ": pass (" << s.instances << " instances)\n";
        } else {
          all_ok = false;
          out << s.schema << ": FAIL (" << s.failures << " of " << s.instances << ")\n";
          for (const std::string& c : s.failing) out << "  " << c << "\n";
        }
      }
      return all_ok ? 0 : 1;
    }
    if (cmd_enum->parsed()) {
      Theory th = detail::theory_or_throw(theory_name);
      std::vector<ArrPtr> found =
          enumerate_arrows(parse_object(obj_a), parse_object(obj_b), th, max_size);
      for (const ArrPtr& t : found) out << show(t) << "\n";
      return 0;
    }
  } catch (const NormalizationBudgetExceeded& e) {
    err << nlohmann::json{{"error", e.what()}, {"kind", "budget"}}.dump() << "\n";
    return 3;
  } catch (const ParseError& e) {
    err << nlohmann::json{{"error", e.what()}, {"kind", "parse"}}.dump() << "\n";
    return 2;
  } catch (const nlohmann::json::exception& e) {
    err << nlohmann::json{{"error", e.what()}, {"kind", "parse"}}.dump() << "\n";
    return 2;
  } catch (const std::runtime_error& e) {
    err << nlohmann::json{{"error", e.what()}, {"kind", "input"}}.dump() << "\n";
    return 2;
  }
  return 2;
}

}  // namespace relmon
