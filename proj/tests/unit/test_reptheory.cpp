#include <doctest.h>

#include "ceswb/chords.hpp"
#include "ceswb/error.hpp"
#include "ceswb/reptheory.hpp"
#include "oracle.hpp"

using namespace ceswb;

namespace {
IntervalRep X(int n, int i, int j) { return IntervalRep::make(n, i, j); }
}  // namespace

TEST_CASE("dimension vectors") {
  CHECK(dim_vector(X(4, 0, 1)) == IntVector{1, 0, 0, 0});
  CHECK(dim_vector(X(4, 1, 3)) == IntVector{0, 1, 1, 0});
  for (int n = 1; n <= 6; ++n) CHECK(dim_vector(X(n, 0, n)) == IntVector(n, 1));
  CHECK_THROWS_AS(IntervalRep::make(3, 2, 2), PreconditionError);
  CHECK_THROWS_AS(IntervalRep::make(3, 0, 4), PreconditionError);
}

TEST_CASE("rep_from_dim") {
  CHECK(rep_from_dim({0, 1, 1, 1}) == X(4, 1, 4));
  CHECK(rep_from_dim({1}) == X(1, 0, 1));
  CHECK_THROWS_AS(rep_from_dim({1, 0, 1}), PreconditionError);
  CHECK_THROWS_AS(rep_from_dim({0, 0}), PreconditionError);
  CHECK_THROWS_AS(rep_from_dim({0, 2}), PreconditionError);
  for (int n = 1; n <= 6; ++n)
    for (const auto& v : all_interval_reps(n)) CHECK(rep_from_dim(dim_vector(v)) == v);
}

TEST_CASE("AR translate") {
  CHECK(tau(X(4, 1, 3)) == X(4, 0, 2));
  CHECK_FALSE(tau(X(4, 0, 3)).has_value());
  for (int n = 1; n <= 6; ++n) {
    std::optional<IntervalRep> v = X(n, n - 1, n);
    int steps = 0;
    while (v) {
      v = tau(*v);
      ++steps;
    }
    CHECK(steps == n);
  }
}

TEST_CASE("Hom examples") {
  CHECK(hom_dim(X(2, 0, 1), X(2, 0, 2)) == 1);
  CHECK(hom_dim(X(2, 0, 2), X(2, 0, 1)) == 0);
  CHECK(hom_dim(X(3, 0, 1), std::optional<IntervalRep>{}) == 0);
  for (int n = 1; n <= 6; ++n)
    for (const auto& v : all_interval_reps(n)) {
      CHECK(hom_dim(v, v) == 1);
      CHECK(hom_dim_by_solver(v, v) == 1);
    }
  CHECK_THROWS_AS(hom_dim(X(2, 0, 1), X(3, 0, 1)), PreconditionError);
}

TEST_CASE("solver, interval rule and GF(2) count agree for n <= 6") {
  for (int n = 1; n <= 6; ++n)
    for (const auto& v : all_interval_reps(n))
      for (const auto& w : all_interval_reps(n)) {
        const int solver = hom_dim_by_solver(v, w);
        REQUIRE(solver == hom_dim(v, w));
        REQUIRE(solver == oracle::hom_gf2(n, {v.i, v.j}, {w.i, w.j}));
      }
}

TEST_CASE("Euler form identity for n <= 6") {
  for (int n = 1; n <= 6; ++n)
    for (const auto& v : all_interval_reps(n))
      for (const auto& w : all_interval_reps(n)) {
        REQUIRE(hom_dim(v, w) - ext1_dim(v, w) == euler_form(dim_vector(v), dim_vector(w)));
        REQUIRE(ext1_dim(v, w) == oracle::ext_gf2(n, {v.i, v.j}, {w.i, w.j}));
      }
}

TEST_CASE("Ext examples") {
  CHECK(ext1_dim(X(2, 1, 2), X(2, 0, 1)) == 1);
  for (int n = 1; n <= 5; ++n)
    for (const auto& w : all_interval_reps(n)) {
      for (int b = 1; b <= n; ++b) CHECK(ext1_dim(X(n, 0, b), w) == 0);
      CHECK(ext1_dim(w, w) == 0);
    }
}

TEST_CASE("exceptional pairs by chord geometry") {
  const int n = 4;
  CHECK(is_exceptional_pair(X(n, 1, 2), X(n, 1, 4)));
  CHECK_FALSE(is_exceptional_pair(X(n, 1, 4), X(n, 1, 2)));
  CHECK(is_exceptional_pair(X(n, 2, 4), X(n, 0, 2)));
  CHECK_FALSE(is_exceptional_pair(X(n, 0, 2), X(n, 2, 4)));
  CHECK(is_exceptional_pair(X(3, 0, 1), X(3, 2, 3)));
  CHECK(is_exceptional_pair(X(3, 2, 3), X(3, 0, 1)));
  CHECK_FALSE(is_exceptional_pair(X(3, 0, 2), X(3, 1, 3)));
  CHECK_FALSE(is_exceptional_pair(X(3, 1, 3), X(3, 0, 2)));

  for (int m = 1; m <= 6; ++m)
    for (const auto& v : all_interval_reps(m))
      for (const auto& w : all_interval_reps(m)) {
        if (v == w) continue;
        const Chord cv{v.i, v.j}, cw{w.i, w.j};
        const int orders = is_exceptional_pair(v, w) + is_exceptional_pair(w, v);
        if (chords_cross(cv, cw)) CHECK(orders == 0);
        else if (cv.shares_endpoint(cw)) CHECK(orders == 1);
        else CHECK(orders == 2);
        CHECK(is_exceptional_pair(v, w) == oracle::exceptional_pair(m, {v.i, v.j}, {w.i, w.j}));
      }
}

TEST_CASE("exceptional sequences") {
  const ExceptionalSequence s{X(4, 1, 3), X(4, 2, 3), X(4, 1, 4), X(4, 0, 1)};
  CHECK(is_exceptional_sequence(s));
  CHECK_FALSE(is_exceptional_sequence({X(4, 0, 1), X(4, 1, 4), X(4, 2, 3), X(4, 1, 3)}));
  CHECK(is_exceptional_sequence({X(3, 1, 2)}));
  CHECK_FALSE(is_exceptional_sequence({X(3, 1, 2), X(3, 1, 2)}));
  CHECK(to_string(s) == "(X(1,3), X(2,3), X(1,4), X(0,1))");
}

TEST_CASE("CES counts by brute force over ordered tuples") {
  const std::uint64_t expected[] = {0, 1, 3, 16};
  for (int n = 1; n <= 3; ++n) CHECK(oracle::count_ces_brute_force(n) == expected[n]);
}
