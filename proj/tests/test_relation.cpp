#include <catch2/catch_amalgamated.hpp>

#include <vector>

#include "relmon/relation.hpp"

using namespace relmon;

TEST_CASE("make_relation normalizes and validates", "[relation]") {
  Relation r = make_relation(2, 3, {{1, 2}, {0, 1}, {1, 2}, {0, 0}});
  REQUIRE(r.pairs == std::vector<Pair>{{0, 0}, {0, 1}, {1, 2}});
  REQUIRE_THROWS_AS(make_relation(-1, 2, {}), BadRelationError);
  REQUIRE_THROWS_AS(make_relation(2, 2, {{2, 0}}), BadRelationError);
  REQUIRE_THROWS_AS(make_relation(2, 2, {{0, -1}}), BadRelationError);
  REQUIRE_NOTHROW(make_relation(0, 0, {}));
}

TEST_CASE("composition and tensor", "[relation]") {
  Relation r = make_relation(2, 2, {{0, 0}, {0, 1}, {1, 0}});
  Relation s = make_relation(2, 2, {{0, 1}, {1, 1}});
  // compose runs left to right: first r, then s
  REQUIRE(compose(r, s) == make_relation(2, 2, {{0, 1}, {1, 1}}));
  REQUIRE(compose(identity_rel(2), r) == r);
  REQUIRE(compose(r, identity_rel(2)) == r);
  REQUIRE_THROWS_AS(compose(make_relation(1, 3, {}), r), ArityMismatchError);

  Relation t = tensor(r, s);
  REQUIRE(t.src == 4);
  REQUIRE(t.tgt == 4);
  REQUIRE(t == make_relation(4, 4, {{0, 0}, {0, 1}, {1, 0}, {2, 3}, {3, 3}}));

  // tensor distributes over composition
  Relation lhs = compose(tensor(r, s), tensor(s, r));
  Relation rhs = tensor(compose(r, s), compose(s, r));
  REQUIRE(lhs == rhs);
}

TEST_CASE("converse", "[relation]") {
  Relation r = make_relation(2, 3, {{0, 2}, {1, 0}});
  REQUIRE(converse(r) == make_relation(3, 2, {{0, 1}, {2, 0}}));
  REQUIRE(converse(converse(r)) == r);
}

TEST_CASE("classification into the target categories", "[relation]") {
  // order preserving function
  Relation f = make_relation(3, 2, {{0, 0}, {1, 0}, {2, 1}});
  RelationClass c = classify(f);
  REQUIRE(c.is_function);
  REQUIRE(c.is_order_preserving_function);
  REQUIRE_FALSE(c.is_bijection);
  REQUIRE(member_of(f, GraphCat::Delta));
  REQUIRE(member_of(f, GraphCat::Fun));
  REQUIRE(member_of(f, GraphCat::Rel));
  REQUIRE_FALSE(member_of(f, GraphCat::DeltaOp));

  // function that is not order preserving
  Relation g = make_relation(2, 2, {{0, 1}, {1, 0}});
  c = classify(g);
  REQUIRE(c.is_function);
  REQUIRE_FALSE(c.is_order_preserving_function);
  REQUIRE(c.is_bijection);
  REQUIRE(member_of(g, GraphCat::Fun));
  REQUIRE_FALSE(member_of(g, GraphCat::Delta));

  // converse of an order preserving function
  Relation h = converse(f);
  c = classify(h);
  REQUIRE_FALSE(c.is_function);
  REQUIRE(c.is_converse_of_order_preserving_function);
  REQUIRE(member_of(h, GraphCat::DeltaOp));
  REQUIRE_FALSE(member_of(h, GraphCat::Fun));

  // neither: partial
  Relation part = make_relation(2, 2, {{0, 0}});
  REQUIRE_FALSE(classify(part).is_function);
  REQUIRE(member_of(part, GraphCat::Rel));
  REQUIRE_FALSE(member_of(part, GraphCat::Fun));

  // the empty relation from 0 is everything at once
  Relation empty0 = make_relation(0, 3, {});
  REQUIRE(member_of(empty0, GraphCat::Delta));
  REQUIRE(member_of(empty0, GraphCat::Fun));

  // identities are bijections both ways
  c = classify(identity_rel(3));
  REQUIRE(c.is_bijection);
  REQUIRE(c.is_order_preserving_function);
  REQUIRE(c.is_converse_of_order_preserving_function);
}

TEST_CASE("lexicographic enumerations", "[relation]") {
  Relation r = make_relation(3, 3, {{0, 2}, {1, 0}, {1, 2}, {2, 1}});
  REQUIRE(left_lex_enum(r) == std::vector<Pair>{{0, 2}, {1, 0}, {1, 2}, {2, 1}});
  REQUIRE(right_lex_enum(r) == std::vector<Pair>{{1, 0}, {2, 1}, {0, 2}, {1, 2}});
}

TEST_CASE("decomposition of the worked example", "[relation]") {
  Relation r = make_relation(2, 2, {{0, 0}, {0, 1}, {1, 0}});
  CoordinatedTriple t = decompose(r);
  REQUIRE(t.k == 3);
  REQUIRE(t.n == 2);
  REQUIRE(t.m == 2);
  REQUIRE(t.nu == std::vector<int>{0, 0, 1});
  REQUIRE(t.mu == std::vector<int>{0, 0, 1});
  REQUIRE(t.beta == std::vector<int>{0, 2, 1});
  REQUIRE(recompose(t) == r);
  REQUIRE(is_coordinated(t));
}

TEST_CASE("decomposition of fixed cases", "[relation]") {
  struct Case {
    int n, m;
    std::vector<Pair> pairs;
    std::vector<int> nu, mu, beta;
  };
  // expected triples computed by hand from the two enumeration orders
  std::vector<Case> cases = {
      {3, 3, {{0, 2}, {1, 0}, {1, 2}, {2, 1}}, {0, 1, 1, 2}, {0, 1, 2, 2}, {2, 0, 3, 1}},
      {1, 3, {{0, 0}, {0, 1}, {0, 2}}, {0, 0, 0}, {0, 1, 2}, {0, 1, 2}},
      {4, 2, {{0, 1}, {2, 0}, {3, 0}, {3, 1}}, {0, 2, 3, 3}, {0, 0, 1, 1}, {2, 0, 1, 3}},
  };
  for (const Case& c : cases) {
    Relation r = make_relation(c.n, c.m, c.pairs);
    CoordinatedTriple t = decompose(r);
    CAPTURE(c.n, c.m);
    REQUIRE(t.nu == c.nu);
    REQUIRE(t.mu == c.mu);
    REQUIRE(t.beta == c.beta);
    REQUIRE(recompose(t) == r);
    REQUIRE(is_coordinated(t));
  }
}

TEST_CASE("decompose then recompose is the identity on all small relations",
          "[relation][property]") {
  for (int n = 0; n <= 3; ++n) {
    for (int m = 0; m <= 3; ++m) {
      int cells = n * m;
      for (unsigned mask = 0; mask < (1u << cells); ++mask) {
        std::vector<Pair> pairs;
        for (int c = 0; c < cells; ++c)
          if (mask & (1u << c)) pairs.emplace_back(c / m, c % m);
        Relation r = make_relation(n, m, std::move(pairs));
        CoordinatedTriple t = decompose(r);
        REQUIRE(recompose(t) == r);
        REQUIRE(is_coordinated(t));
      }
    }
  }
}

TEST_CASE("nu is monotone and mu is monotone in every decomposition",
          "[relation][property]") {
  // the two reading orders force both functions to be order preserving
  Relation r = make_relation(4, 4, {{0, 3}, {1, 1}, {1, 2}, {3, 0}, {3, 3}});
  CoordinatedTriple t = decompose(r);
  for (std::size_t i = 0; i + 1 < t.nu.size(); ++i) REQUIRE(t.nu[i] <= t.nu[i + 1]);
  for (std::size_t i = 0; i + 1 < t.mu.size(); ++i) REQUIRE(t.mu[i] <= t.mu[i + 1]);
}

TEST_CASE("recompose validates its input", "[relation]") {
  CoordinatedTriple t;
  t.k = 2;
  t.n = 2;
  t.m = 2;
  t.nu = {0, 1};
  t.mu = {0, 1};
  t.beta = {0, 0};  // not a permutation
  REQUIRE_THROWS_AS(recompose(t), MalformedTripleError);
  t.beta = {0, 1, 0};  // wrong length
  REQUIRE_THROWS_AS(recompose(t), MalformedTripleError);
  t.beta = {0, 1};
  t.nu = {0, 5};  // out of range
  REQUIRE_THROWS_AS(recompose(t), MalformedTripleError);
  t.nu = {0, 1};
  REQUIRE_NOTHROW(recompose(t));
}

TEST_CASE("coordination detects non canonical triples", "[relation]") {
  // swapping two equal nu entries yields the same relation from a triple
  // that is not the one decompose produces
  CoordinatedTriple t;
  t.k = 2;
  t.n = 1;
  t.m = 2;
  t.nu = {0, 0};
  t.mu = {0, 1};
  t.beta = {1, 0};  // crosses where the reading orders would not
  REQUIRE_FALSE(is_coordinated(t));
  t.beta = {0, 1};
  REQUIRE(is_coordinated(t));
}

TEST_CASE("show prints pairs in storage order with the arities", "[relation]") {
  Relation r = make_relation(2, 2, {{1, 0}, {0, 0}, {0, 1}});
  REQUIRE(show(r) == "{(0, 0), (0, 1), (1, 0)} : 2 -> 2");
  REQUIRE(show(make_relation(0, 1, {})) == "{} : 0 -> 1");
}
