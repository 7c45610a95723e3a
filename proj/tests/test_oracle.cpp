#include <doctest.h>

#include "artin/error.hpp"
#include "artin/oracle.hpp"

using namespace artin;
using namespace artin::oracle;

namespace {

Presentation garside_counterexample() { return parse_presentation("gens 2\nrel 1 1 = 2 2\n"); }

}  // namespace

TEST_SUITE("oracle") {

TEST_CASE("presentation format") {
  Presentation p = parse_presentation("# x^2 = y^2\ngens 2\nrel 1 1 = 2 2\n");
  CHECK(p.generators == 2);
  REQUIRE(p.relations.size() == 1);
  CHECK(p.relations[0].first == Word{1, 1});
  CHECK(parse_presentation(serialize_presentation(p)).relations == p.relations);

  CHECK_THROWS_AS(parse_presentation("gens 2\nrel 1 = 2 2\n"), InvalidArgument);
  CHECK_THROWS_AS(parse_presentation("gens 2\nrel 1 3 = 2 2\n"), InvalidArgument);
  CHECK_THROWS_AS(parse_presentation("rel 1 = 2\n"), ParseError);
  CHECK_THROWS_AS(parse_presentation("gens 2\nrel 1 -1 = 2 2\n"), ParseError);
}

TEST_CASE("artin presentation") {
  Presentation a2 = artin_presentation(builtin("A", 2));
  CHECK(a2.generators == 2);
  REQUIRE(a2.relations.size() == 1);
  CHECK(a2.relations[0].first.size() == 3);
  // Infinite labels contribute no relation.
  Presentation tri = artin_presentation(parse_matrix("rank 3\nm 1 2 3\nm 2 3 4\nm 1 3 inf\n"));
  CHECK(tri.relations.size() == 2);
}

TEST_CASE("class_of") {
  Presentation a2 = artin_presentation(builtin("A", 2));
  WordClass c = class_of(a2, {1, 2, 1});
  CHECK(c.members == std::vector<Word>{{1, 2, 1}, {2, 1, 2}});
  CHECK(c.representative == Word{1, 2, 1});

  WordClass g = class_of(garside_counterexample(), {1, 1});
  CHECK(g.members == std::vector<Word>{{1, 1}, {2, 2}});

  Presentation a3 = artin_presentation(builtin("A", 3));
  WordClass d = class_of(a3, {2, 3, 1, 2, 3, 1});
  CHECK(std::binary_search(d.members.begin(), d.members.end(), Word{1, 2, 1, 3, 2, 1}));
  // Delta of A3 has as many reduced words as there are maximal chains: 16.
  CHECK(d.members.size() == 16);
}

TEST_CASE("class_of is constant on classes and preserves length") {
  Presentation b2 = artin_presentation(builtin("B", 2));
  WordClass c = class_of(b2, {1, 2, 1, 2, 1});
  for (const Word& w : c.members) {
    CHECK(w.size() == 5);
    CHECK(class_of(b2, w).members == c.members);
  }
}

TEST_CASE("budgets raise instead of answering") {
  Presentation a3 = artin_presentation(builtin("A", 3));
  Budget tiny;
  tiny.max_class_size = 3;
  CHECK_THROWS_AS(class_of(a3, {1, 2, 1, 3, 2, 1}, tiny), DomainError);
  Budget shortw;
  shortw.max_length = 4;
  CHECK_THROWS_AS(class_of(a3, {1, 2, 1, 3, 2}, shortw), DomainError);
}

TEST_CASE("equality and division") {
  Presentation g = garside_counterexample();
  CHECK(equals_oracle(g, {1, 1}, {2, 2}));
  CHECK_FALSE(equals_oracle(g, {1}, {2}));

  Presentation a3 = artin_presentation(builtin("A", 3));
  CHECK(divides_left_oracle(a3, {1}, {2, 3, 1, 2, 3, 1}));
  CHECK(divides_left_oracle(a3, {3}, {2, 3, 1, 2, 3, 1}));
  Presentation a2 = artin_presentation(builtin("A", 2));
  CHECK_FALSE(divides_left_oracle(a2, {2}, {1, 1}));
  CHECK(divides_left_oracle(a2, {}, {1, 1}));
  CHECK_FALSE(divides_left_oracle(a2, {1, 1, 1}, {1, 1}));
}

TEST_CASE("square-freeness") {
  Presentation a3 = artin_presentation(builtin("A", 3));
  CHECK(square_free_oracle(a3, {1, 2, 1, 3, 2, 1}));
  CHECK_FALSE(square_free_oracle(a3, {1, 1}));
  CHECK(square_free_oracle(artin_presentation(builtin("A", 2)), {1, 2, 1}));
  // The square in s2 s1 s2 s1 = s1 s2 s1 s1 only shows up after a braid move.
  CHECK_FALSE(square_free_oracle(artin_presentation(builtin("A", 2)), {2, 1, 2, 1}));
}

TEST_CASE("enumerate_classes") {
  Presentation a2 = artin_presentation(builtin("A", 2));
  CHECK(enumerate_classes(a2, 2).size() == 4);
  auto three = enumerate_classes(a2, 3);
  CHECK(three.size() == 7);
  std::size_t merged = 0;
  for (const auto& c : three) merged += c.size() > 1;
  CHECK(merged == 1);
  auto g = enumerate_classes(garside_counterexample(), 2);
  CHECK(g.size() == 3);
  CHECK(g.front() == std::vector<Word>{{1, 1}, {2, 2}});
}

TEST_CASE("delta oracle") {
  auto d = delta_oracle(builtin("B", 2), {1, 2});
  REQUIRE(d.has_value());
  CHECK(d->size() == 4);
  CHECK(delta_oracle(builtin("A", 3), {1, 3})->size() == 2);
  CHECK(delta_oracle(builtin("A", 3), {1, 2, 3})->size() == 6);
}

TEST_CASE("palindromic decompositions") {
  CoxeterMatrix a3 = builtin("A", 3);
  auto decs = all_pal_decompositions(a3, {1, 2, 1, 3, 2, 1});
  CHECK(std::find(decs.begin(), decs.end(), WordDecomposition{{3, 2}, {1, 3}}) != decs.end());
  CHECK(std::find(decs.begin(), decs.end(), WordDecomposition{{1, 2}, {1, 3}}) != decs.end());
  CHECK(std::find(decs.begin(), decs.end(), WordDecomposition{{}, {1, 2, 3}}) != decs.end());

  auto sq = all_pal_decompositions(builtin("A", 2), {1, 1});
  CHECK(sq == std::vector<WordDecomposition>{{{1}, {}}});

  // Braid group on 6 strands.
  CoxeterMatrix a5 = builtin("A", 5);
  Word x = {3, 5, 1, 2, 1, 5, 3};
  auto remark = all_pal_decompositions(a5, x);
  auto has = [&](const Word& y, GeneratorSet i) {
    for (const auto& d : remark) {
      if (d.subset == i && equals_oracle(artin_presentation(a5), d.y, y)) return true;
    }
    return false;
  };
  CHECK(has({3, 5}, {1, 2}));
  CHECK(has({5, 1}, {2, 3}));
}

TEST_CASE("coxeter group order") {
  CHECK(coxeter_group_order(builtin("A", 2), 100) == 6);
  CHECK(coxeter_group_order(builtin("B", 3), 100) == 48);
  CHECK(todd_coxeter_order(builtin("A", 3), 10000) == 24);
  CHECK(todd_coxeter_order(builtin("H3"), 100000) == 120);
  CHECK(todd_coxeter_order(builtin("I2", 5), 1000) == 10);
  CHECK_THROWS_AS(coxeter_group_order(builtin("A", 4), 50), DomainError);
}

}  // TEST_SUITE
