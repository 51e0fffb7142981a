#include <doctest.h>

#include <random>
#include <set>

#include "ceswb/error.hpp"
#include "ceswb/exchange.hpp"
#include "oracle.hpp"

using namespace ceswb;

namespace {

CMatrix cm(std::vector<IntVector> rows) { return CMatrix{std::move(rows)}; }

oracle::Matrix to_oracle(const CMatrix& c) {
  oracle::Matrix m;
  for (const auto& r : c.rows) m.emplace_back(r.begin(), r.end());
  return m;
}

}  // namespace

TEST_CASE("linear quiver and framing") {
  CHECK(linear_quiver_matrix(1).rows() == std::vector<IntVector>{{0}});
  CHECK(linear_quiver_matrix(2).rows() == std::vector<IntVector>{{0, -1}, {1, 0}});
  CHECK(linear_quiver_matrix(3).rows() == std::vector<IntVector>{{0, -1, 0}, {1, 0, -1}, {0, 1, 0}});
  CHECK(framed_matrix(2).rows() == std::vector<IntVector>{{0, -1, 1, 0}, {1, 0, 0, 1}});
  CHECK(framed_matrix(1).rows() == std::vector<IntVector>{{0, 1}});
  for (int n = 1; n <= 6; ++n) {
    const CMatrix c = c_matrix_of(framed_matrix(n));
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) CHECK(c.rows[i][j] == (i == j ? 1 : 0));
  }
  CHECK_THROWS_AS(linear_quiver_matrix(0), PreconditionError);
  CHECK_THROWS_AS(framed_matrix(0), PreconditionError);
}

TEST_CASE("worked 3x4 mutation") {
  const auto b = ExchangeMatrix::from_rows(3, {{0, 2, 0, 0}, {-2, 0, 1, 0}, {0, -1, 0, -1}});
  const auto expected = ExchangeMatrix::from_rows(3, {{0, -2, 2, 0}, {2, 0, -1, 0}, {-2, 1, 0, -1}});
  CHECK(mutate(b, 1) == expected);
  CHECK(mutate(expected, 1) == b);
}

TEST_CASE("mutation errors and overflow") {
  CHECK_THROWS_AS(mutate(framed_matrix(2), 2), PreconditionError);
  CHECK_THROWS_AS(mutate(framed_matrix(2), -1), PreconditionError);
  const std::int64_t big = std::int64_t{1} << 62;
  const auto b = ExchangeMatrix::from_rows(3, {{0, big, 0}, {-big, 0, big}, {0, -big, 0}});
  CHECK_THROWS_AS(mutate(b, 1), OverflowError);
  CHECK_THROWS_AS(c_matrix_of(linear_quiver_matrix(2)), PreconditionError);
}

TEST_CASE("mutation agrees with quiver mutation and is an involution on random seeds") {
  std::mt19937 rng(20140611);
  int checked = 0;
  for (int n = 1; n <= 6; ++n) {
    ExchangeMatrix b = framed_matrix(n);
    oracle::Matrix q = oracle::framed_quiver(n);
    for (int step = 0; step < 2000; ++step) {
      const int k = std::uniform_int_distribution<int>(0, n - 1)(rng);
      const ExchangeMatrix next = mutate(b, k);
      REQUIRE(mutate(next, k) == b);
      q = oracle::mutate_quiver(q, n, k);
      b = next;
      ++checked;
    }
    CHECK(to_oracle(c_matrix_of(b)) == oracle::cmatrix_of_quiver(q, n));
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < 2 * n; ++j) CHECK(b.at(i, j) == q[i][j] - q[j][i]);
  }
  CHECK(checked >= 10000);
}

TEST_CASE("mutation at 1 of framed A2") {
  CHECK(c_matrix_of(mutate(framed_matrix(2), 0)) == cm({{-1, 0}, {1, 1}}));
}

TEST_CASE("section 4 c-matrices") {
  const auto b1 = mutate(framed_matrix(3), 0);
  CHECK(c_matrix_of(b1) == cm({{-1, 0, 0}, {1, 1, 0}, {0, 0, 1}}));
  CHECK(c_matrix_of(mutate(b1, 2)) == cm({{-1, 0, 0}, {1, 1, 0}, {0, 0, -1}}));
}

TEST_CASE("canonical c-matrix") {
  CHECK(canonical_cmatrix(cm({{0, 1}, {1, 0}})) == cm({{0, 1}, {1, 0}}));
  CHECK(canonical_cmatrix(cm({{1, 0}, {0, 1}})) == canonical_cmatrix(cm({{0, 1}, {1, 0}})));
  const CMatrix c = cm({{0, 1, 1}, {-1, 0, 0}, {0, 0, -1}});
  CHECK(canonical_cmatrix(canonical_cmatrix(c)) == canonical_cmatrix(c));
}

TEST_CASE("A1 and A2 c-matrices") {
  CHECK(enumerate_cmatrices(1, 6) == std::vector<CMatrix>{cm({{-1}}), cm({{1}})});
  const auto a2 = enumerate_cmatrices(2, 6);
  std::set<CMatrix> expected{
      canonical_cmatrix(cm({{1, 0}, {0, 1}})),   canonical_cmatrix(cm({{-1, 0}, {1, 1}})),
      canonical_cmatrix(cm({{0, 1}, {-1, -1}})), canonical_cmatrix(cm({{-1, 0}, {0, -1}})),
      canonical_cmatrix(cm({{1, 0}, {0, -1}})),
  };
  CHECK(std::set<CMatrix>(a2.begin(), a2.end()) == expected);
  CHECK(a2.size() == 5);
}

TEST_CASE("BFS c-matrices agree with the labelled-seed oracle") {
  for (int n = 1; n <= 4; ++n) {
    std::set<oracle::Matrix> mine;
    for (const auto& c : enumerate_cmatrices(n, 6)) mine.insert(to_oracle(c));
    CHECK(mine == oracle::cmatrices_by_bfs(n));
  }
  const std::size_t catalan[] = {1, 1, 2, 5, 14, 42, 132, 429};
  for (int n = 1; n <= 5; ++n) CHECK(enumerate_cmatrices(n, 6).size() == catalan[n + 1]);
}

TEST_CASE("parallel BFS reproduces the sequential result") {
  for (int n = 2; n <= 5; ++n) {
    const auto one = explore_exchange_graph(n, 6, 1);
    const auto many = explore_exchange_graph(n, 6, 4);
    CHECK(one.cmatrices == many.cmatrices);
    REQUIRE(one.seeds.size() == many.seeds.size());
    for (std::size_t s = 0; s < one.seeds.size(); ++s) {
      CHECK(one.seeds[s].matrix == many.seeds[s].matrix);
      CHECK(one.seeds[s].history == many.seeds[s].history);
    }
  }
}

TEST_CASE("seed histories reproduce the stored seeds") {
  for (const auto& s : explore_exchange_graph(4, 6).seeds) {
    CHECK(canonical_seed_form(mutate_sequence(framed_matrix(4), s.history)) == canonical_seed_form(s.matrix));
  }
}

TEST_CASE("canonical seed form is invariant under relabelling") {
  const auto b = mutate_sequence(framed_matrix(3), std::vector<int>{0, 2, 1});
  // Swap mutable indices 0 and 2 by hand.
  const int perm[] = {2, 1, 0};
  ExchangeMatrix p(3, 6);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 6; ++j) p.at(perm[i], j < 3 ? perm[j] : j) = b.at(i, j);
  CHECK(canonical_seed_form(p) == canonical_seed_form(b));
}

TEST_CASE("bound handling") {
  CHECK_THROWS_AS(enumerate_cmatrices(7, 6), BoundExceededError);
  CHECK_THROWS_AS(explore_exchange_graph(3, 2), BoundExceededError);
}

TEST_CASE("sign coherence of every enumerated c-vector") {
  for (int n = 1; n <= 5; ++n)
    for (const auto& c : enumerate_cmatrices(n, 6)) CHECK(has_interval_rows(c));
  CHECK_FALSE(has_interval_rows(cm({{1, -1}, {0, 1}})));
  CHECK_FALSE(has_interval_rows(cm({{1, 0, 1}, {0, 1, 0}, {0, 0, 1}})));
  CHECK_THROWS_AS(row_sign(IntVector{0, 0}), PreconditionError);
}

TEST_CASE("green and red vertices") {
  CHECK(green_vertices(framed_matrix(3)) == std::vector<int>{0, 1, 2});
  const auto b = mutate(framed_matrix(2), 0);
  CHECK(red_vertices(b) == std::vector<int>{0});
  CHECK(green_vertices(b) == std::vector<int>{1});
}

TEST_CASE("reddening sequences") {
  CHECK(is_reddening(std::vector<int>{1, 0}, 2));
  CHECK(is_reddening(std::vector<int>{0, 1, 0}, 2));
  CHECK_FALSE(is_reddening(std::vector<int>{0, 1}, 2));
  CHECK(c_matrix_of(mutate_sequence(framed_matrix(2), std::vector<int>{1, 0})) == cm({{-1, 0}, {0, -1}}));
  CHECK(canonical_cmatrix(c_matrix_of(mutate_sequence(framed_matrix(2), std::vector<int>{0, 1, 0}))) ==
        canonical_cmatrix(cm({{-1, 0}, {0, -1}})));
  CHECK(canonical_cmatrix(c_matrix_of(mutate_sequence(framed_matrix(2), std::vector<int>{0, 1}))) ==
        canonical_cmatrix(cm({{0, 1}, {-1, -1}})));
  CHECK_THROWS_AS(is_reddening(std::vector<int>{2}, 2), PreconditionError);
}

TEST_CASE("all-red seeds end at -I") {
  for (int n = 1; n <= 4; ++n) {
    CMatrix neg;
    for (int i = 0; i < n; ++i) {
      IntVector r(n, 0);
      r[i] = -1;
      neg.rows.push_back(r);
    }
    int found = 0;
    for (const auto& s : explore_exchange_graph(n, 6).seeds) {
      if (static_cast<int>(red_vertices(s.matrix).size()) != n) continue;
      ++found;
      CHECK(canonical_cmatrix(c_matrix_of(s.matrix)) == canonical_cmatrix(neg));
    }
    CHECK(found >= 1);
  }
}

TEST_CASE("mutation-class shape") {
  for (int n = 1; n <= 6; ++n) CHECK(check_mutation_class_shape(linear_quiver_matrix(n)));
  for (int n = 1; n <= 5; ++n)
    for (const auto& s : explore_exchange_graph(n, 6).seeds) CHECK(check_mutation_class_shape(s.matrix));
  // Oriented 4-cycle 0 -> 1 -> 2 -> 3 -> 0.
  const auto cycle4 = ExchangeMatrix::from_rows(4, {{0, 1, 0, -1}, {-1, 0, 1, 0}, {0, -1, 0, 1}, {1, 0, -1, 0}});
  CHECK_FALSE(check_mutation_class_shape(cycle4));
  // Non-oriented triangle.
  const auto acyclic3 = ExchangeMatrix::from_rows(3, {{0, 1, 1}, {-1, 0, 1}, {-1, -1, 0}});
  CHECK_FALSE(check_mutation_class_shape(acyclic3));
  // Double arrow.
  CHECK_FALSE(check_mutation_class_shape(ExchangeMatrix::from_rows(2, {{0, 2}, {-2, 0}})));
  // Star with three arms.
  const auto star = ExchangeMatrix::from_rows(4, {{0, 1, 1, 1}, {-1, 0, 0, 0}, {-1, 0, 0, 0}, {-1, 0, 0, 0}});
  CHECK_FALSE(check_mutation_class_shape(star));
}
