#include <doctest.h>

#include <algorithm>
#include <array>
#include <random>

#include "mmalign/core.hpp"
#include "mmalign/dsl.hpp"
#include "mmalign/errors.hpp"
#include "oracle.hpp"

using namespace mmalign;

namespace {

const StepSet mes_steps = StepSet::explicit_steps({{1, 1}, {1, 2}, {2, 1}});

}  // namespace

TEST_CASE("explicit step sets are validated, sorted and deduplicated") {
  const auto s = StepSet::explicit_steps({{2, 1}, {1, 1}, {1, 2}, {2, 1}});
  CHECK(s.dimension() == 2);
  CHECK(s.explicit_list() == std::vector<StepVector>{{1, 1}, {1, 2}, {2, 1}});
  CHECK(validate_step_set(s) == mes_steps);

  CHECK_THROWS_AS(StepSet::explicit_steps({{1, 1}, {0, 0}}), ZeroStepError);
  CHECK_THROWS_AS(StepSet::explicit_steps({{1, 1}, {1, 2, 3}}), DimensionMismatch);
  CHECK_THROWS_AS(StepSet::product({BaseSet::finite({0, 1}), BaseSet::finite({0, 1})}), ZeroStepError);
  CHECK_THROWS_AS(StepSet::box(0, 2, 2), ZeroStepError);
  CHECK_THROWS_AS(StepSet::box(3, 2, 2), DomainError);
  CHECK_THROWS_AS(StepSet::unit_cube(0), DomainError);
}

TEST_CASE("empty step set is legal") {
  const auto s = StepSet::explicit_steps(2, {});
  CHECK(s.is_finite());
  CHECK(s.size() == 0);
  CHECK(s.materialize({3, 3}).empty());
}

TEST_CASE("unit cube canonicalizes to its seven members") {
  const auto c = validate_step_set(StepSet::unit_cube(3));
  REQUIRE(c.family() == StepSet::Family::explicit_list);
  const std::vector<StepVector> expected = {{0, 0, 1}, {0, 1, 0}, {0, 1, 1}, {1, 0, 0},
                                            {1, 0, 1}, {1, 1, 0}, {1, 1, 1}};
  CHECK(c.explicit_list() == expected);
}

TEST_CASE("materialize clips families to the box") {
  CHECK(StepSet::all_positive(2).materialize({1, 1}) == std::vector<StepVector>{{0, 1}, {1, 0}, {1, 1}});
  const auto cube = StepSet::box(1, 2, 3).materialize({10, 10, 10});
  CHECK(cube.size() == 8);
  for (const auto& v : cube) {
    for (auto x : v) CHECK((x == 1 || x == 2));
  }
  CHECK(mes_steps.materialize({1, 1}) == std::vector<StepVector>{{1, 1}});
  CHECK(StepSet::half_open().materialize({1, 1}) == std::vector<StepVector>{{1, 0}, {1, 1}});
  CHECK_THROWS_AS(StepSet::all_positive(2).members(), InfiniteStepSet);
}

TEST_CASE("materialize is monotone in the box and complete for large boxes") {
  std::mt19937_64 rng(11);
  const std::vector<StepSet> families = {StepSet::unit_cube(2), StepSet::all_positive(2), StepSet::half_open(),
                                         StepSet::box(1, 3, 2),
                                         StepSet::product({BaseSet::odd(), BaseSet::at_least(2)})};
  for (int trial = 0; trial < 60; ++trial) {
    const auto& s = families[trial % families.size()];
    const auto a = oracle::random_lengths(rng, 2, 5);
    auto b = a.values();
    for (auto& x : b) x += rng() % 3;
    const auto small = s.materialize(a);
    const auto large = s.materialize(LengthTuple(b));
    CHECK(std::includes(large.begin(), large.end(), small.begin(), small.end()));
    CHECK(small == oracle::steps_in_box(s, a));
  }
  for (int trial = 0; trial < 40; ++trial) {
    const auto s = oracle::random_explicit(rng, 3, 8, 3);
    CHECK(s.materialize({3, 3, 3}) == s.explicit_list());
  }
}

TEST_CASE("is_alignment") {
  const auto unit3 = StepSet::unit_cube(3);
  CHECK(is_alignment(AlignmentMatrix::from_rows({{1, 0, 0}, {1, 1, 0}, {1, 1, 1}}), unit3, {1, 2, 3}));
  CHECK(is_alignment(AlignmentMatrix::from_rows({{1, 0, 0, 0}, {1, 0, 1, 0}, {1, 1, 0, 1}}), unit3, {1, 2, 3}));
  CHECK(is_alignment(AlignmentMatrix::from_rows({{0, 0, 1}, {1, 1, 0}, {1, 1, 1}}), unit3, {1, 2, 3}));

  // many-to-many versions: alignments only for a superset of their columns
  const std::vector<AlignmentMatrix> wide = {AlignmentMatrix::from_rows({{1, 0}, {2, 0}, {2, 1}}),
                                             AlignmentMatrix::from_rows({{0, 1}, {2, 0}, {2, 1}}),
                                             AlignmentMatrix::from_rows({{0, 0, 1}, {0, 2, 0}, {1, 1, 1}})};
  const auto superset = StepSet::explicit_steps({{1, 2, 2}, {0, 0, 1}, {0, 2, 2}, {1, 0, 1}, {0, 2, 1}});
  for (const auto& m : wide) {
    CHECK(is_alignment(m, superset, {1, 2, 3}));
    CHECK_FALSE(is_alignment(m, unit3, {1, 2, 3}));
  }
  CHECK(is_alignment(AlignmentMatrix(2, 0, {}), mes_steps, {0, 0}));
  CHECK_FALSE(is_alignment(AlignmentMatrix(2, 0, {}), mes_steps, {1, 0}));
  // row sums wrong
  CHECK_FALSE(is_alignment(AlignmentMatrix::from_rows({{1, 1}, {1, 1}}), mes_steps, {2, 3}));
  CHECK_THROWS_AS(is_alignment(AlignmentMatrix::from_rows({{1}, {1}}), mes_steps, {1, 1, 1}), DimensionMismatch);
}

TEST_CASE("matrix rendering and columns") {
  const auto m = AlignmentMatrix::from_columns(2, {{1, 2}, {2, 1}});
  CHECK(m.to_string() == "[[1,2],[2,1]]");
  CHECK(m.column(0) == StepVector{1, 2});
  CHECK(m.row_sum(0) == 3);
  CHECK(AlignmentMatrix(2, 0, {}).to_string() == "[[],[]]");
}

TEST_CASE("permute_coordinates") {
  const std::array<std::size_t, 2> swap{1, 0};
  CHECK(permute_coordinates(StepSet::explicit_steps({{1, 2}}), swap) == StepSet::explicit_steps({{2, 1}}));
  CHECK(permute_coordinates(StepSet::explicit_steps({{1, 0}, {1, 1}}), swap) ==
        StepSet::explicit_steps({{0, 1}, {1, 1}}));
  const std::array<std::size_t, 3> rot{2, 0, 1};
  CHECK(permute_coordinates(StepSet::unit_cube(3), rot) == StepSet::unit_cube(3));
  CHECK(permute_coordinates(permute_coordinates(StepSet::half_open(), swap), swap) == StepSet::half_open());
  CHECK(permute_coordinates(LengthTuple{4, 5}, swap) == LengthTuple{5, 4});
}

TEST_CASE("permutations: involution and composition") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 50; ++trial) {
    const auto s = oracle::random_explicit(rng, 3, 8, 2);
    std::array<std::size_t, 3> p{0, 1, 2}, q{0, 1, 2};
    std::shuffle(p.begin(), p.end(), rng);
    std::shuffle(q.begin(), q.end(), rng);
    // transpositions are involutions
    std::array<std::size_t, 3> t{0, 1, 2};
    std::swap(t[rng() % 3], t[rng() % 3]);
    CHECK(permute_coordinates(permute_coordinates(s, t), t) == s);
    // applying p then q equals applying the composed permutation r[i] = p[q[i]]
    std::array<std::size_t, 3> r{};
    for (std::size_t i = 0; i < 3; ++i) r[i] = p[q[i]];
    CHECK(permute_coordinates(permute_coordinates(s, p), q) == permute_coordinates(s, r));
  }
}

TEST_CASE("DSL parses every form") {
  CHECK(parse_step_set("{(1,1),(1,2),(2,1)}") == mes_steps);
  CHECK(parse_step_set(" { ( 2 , 1 ) , (1,1) ,(1, 2)} ") == mes_steps);
  CHECK(parse_step_set("unit(3)") == StepSet::unit_cube(3));
  CHECK(parse_step_set("box(1..2,3)") == StepSet::box(1, 2, 3));
  CHECK(parse_step_set("natpos(2)") == StepSet::all_positive(2));
  CHECK(parse_step_set("halfopen2") == StepSet::half_open());
  CHECK(parse_step_set("prod([1,2],nat)") == StepSet::product({BaseSet::finite({1, 2}), BaseSet::nat()}));
  CHECK(parse_step_set("prod(ge(2),odd)") == StepSet::product({BaseSet::at_least(2), BaseSet::odd()}));
  CHECK(parse_step_set("{}", 2) == StepSet::explicit_steps(2, {}));
  CHECK(parse_lengths("4,5") == LengthTuple{4, 5});
  CHECK(parse_lengths(" 1, 2 ,3") == LengthTuple{1, 2, 3});
}

TEST_CASE("DSL errors name the token") {
  CHECK_THROWS_AS(parse_step_set("{}"), ParseError);
  CHECK_THROWS_AS(parse_step_set("box(1..2"), ParseError);
  CHECK_THROWS_AS(parse_step_set("unit(2)", 3), DimensionMismatch);
  CHECK_THROWS_AS(parse_step_set("{(0,0)}"), ZeroStepError);
  CHECK_THROWS_AS(parse_lengths("4,x"), ParseError);
  try {
    parse_step_set("cube(3)");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.token() == "cube");
  }
}

TEST_CASE("DSL round-trips through to_string") {
  std::mt19937_64 rng(17);
  std::vector<StepSet> sets = {StepSet::unit_cube(4),
                               StepSet::box(2, 5, 3),
                               StepSet::all_positive(3),
                               StepSet::half_open(),
                               StepSet::product({BaseSet::finite({1, 2}), BaseSet::finite({1, 2})}),
                               StepSet::product({BaseSet::natpos(), BaseSet::odd(), BaseSet::at_least(3)}),
                               StepSet::explicit_steps(3, {})};
  for (int i = 0; i < 40; ++i) sets.push_back(oracle::random_explicit(rng, 1 + i % 3, 8, 4));
  for (const auto& s : sets) {
    const auto text = s.to_string();
    CHECK(parse_step_set(text, s.dimension()) == s);
  }
}
