#include <doctest.h>

#include <map>
#include <set>

#include "ceswb/cmatdiag.hpp"
#include "ceswb/error.hpp"

using namespace ceswb;

namespace {

OrientedDiagram od(int n_points, std::vector<OrientedChord> cs) { return OrientedDiagram{n_points, std::move(cs)}; }

}  // namespace

TEST_CASE("c-matrix to oriented diagram and back") {
  const CMatrix c{{{-1, 0, 0}, {1, 1, 0}, {0, 0, 1}}};
  const auto d = diagram_of_cmatrix(c);
  CHECK(d == od(4, {{1, 0}, {0, 2}, {2, 3}}));
  CHECK(cmatrix_of_diagram(d) == c);
  CHECK_THROWS_AS(diagram_of_cmatrix(CMatrix{{{1, -1}, {0, 1}}}), PreconditionError);
  CHECK_THROWS_AS(diagram_of_cmatrix(CMatrix{{{1, 0, 1}, {0, 1, 0}, {0, 0, 1}}}), PreconditionError);
}

TEST_CASE("worked A3 sequence through the diagram rule") {
  ExchangeMatrix b = framed_matrix(3);
  auto d = diagram_of_cmatrix(c_matrix_of(b));
  CHECK(d == od(4, {{0, 1}, {1, 2}, {2, 3}}));

  auto step1 = mutate_diagram_traced(d, b, 0);
  CHECK(step1.result == od(4, {{1, 0}, {0, 2}, {2, 3}}));
  REQUIRE(step1.rewrites.size() == 1);
  CHECK(step1.rewrites[0].row == 1);
  CHECK(step1.rewrites[0].which == RewriteCase::c);
  b = mutate(b, 0);
  CHECK(step1.result == diagram_of_cmatrix(c_matrix_of(b)));
  // Chord 3 is not affected by mu_1.
  CHECK(step1.result.chords[2] == d.chords[2]);

  auto step2 = mutate_diagram_traced(step1.result, b, 2);
  CHECK(step2.rewrites.empty());
  CHECK(step2.result == od(4, {{1, 0}, {0, 2}, {3, 2}}));
  b = mutate(b, 2);
  CHECK(step2.result == diagram_of_cmatrix(c_matrix_of(b)));
  CHECK(cmatrix_of_diagram(step2.result) == CMatrix{{{-1, 0, 0}, {1, 1, 0}, {0, 0, -1}}});
  // Chords 1 and 2 are not affected by mu_3.
  CHECK(step2.result.chords[0] == step1.result.chords[0]);
  CHECK(step2.result.chords[1] == step1.result.chords[1]);

  CHECK_THROWS_AS(mutate_diagram(d, b, 0), PreconditionError);
  CHECK_THROWS_AS(mutate_diagram(d, framed_matrix(3), 3), PreconditionError);
}

TEST_CASE("diagram mutation commutes with matrix mutation on every seed, n <= 4") {
  std::set<char> cases;
  for (int n = 1; n <= 4; ++n)
    for (const auto& s : explore_exchange_graph(n, 6).seeds) {
      const auto d = diagram_of_cmatrix(c_matrix_of(s.matrix));
      for (int k = 0; k < n; ++k) {
        const auto traced = mutate_diagram_traced(d, s.matrix, k);
        REQUIRE(traced.result == diagram_of_cmatrix(c_matrix_of(mutate(s.matrix, k))));
        for (const auto& r : traced.rewrites) cases.insert(to_char(r.which));
      }
    }
  CHECK(cases == std::set<char>{'a', 'b', 'c', 'd'});
}

TEST_CASE("linked rows share a marked point") {
  for (int n = 2; n <= 5; ++n)
    for (const auto& s : explore_exchange_graph(n, 6).seeds) {
      const auto d = diagram_of_cmatrix(c_matrix_of(s.matrix));
      for (int k = 0; k < n; ++k)
        for (int j = 0; j < n; ++j)
          if (s.matrix.at(k, j) != 0) CHECK(d.chords[k].chord().shares_endpoint(d.chords[j].chord()));
    }
}

TEST_CASE("weak separation") {
  // Point 0 with neighbours 1, 2, 3: in, out, in is not contiguous.
  const auto bad = od(4, {{1, 0}, {0, 2}, {3, 0}});
  CHECK_FALSE(is_weakly_separated(bad, 0));
  const auto good = od(4, {{1, 0}, {2, 0}, {0, 3}});
  CHECK(is_weakly_separated(good, 0));
  CHECK(in_neighbors(good, 0) == std::vector<int>{1, 2});
  CHECK(out_neighbors(good, 0) == std::vector<int>{3});
}

TEST_CASE("shared-endpoint admissibility table") {
  // Shared left end: shorter negative and longer positive only.
  CHECK(pair_admissible({1, 0}, {0, 2}));
  CHECK_FALSE(pair_admissible({0, 1}, {0, 2}));
  CHECK_FALSE(pair_admissible({1, 0}, {2, 0}));
  CHECK_FALSE(pair_admissible({0, 1}, {2, 0}));
  // Shared right end: shorter positive and longer negative only.
  CHECK(pair_admissible({1, 2}, {2, 0}));
  CHECK_FALSE(pair_admissible({1, 2}, {0, 2}));
  CHECK_FALSE(pair_admissible({2, 1}, {2, 0}));
  CHECK_FALSE(pair_admissible({2, 1}, {0, 2}));
  // Middle point: forbidden exactly when the left chord is negative and the right chord positive.
  CHECK(pair_admissible({0, 1}, {1, 2}));
  CHECK(pair_admissible({0, 1}, {2, 1}));
  CHECK(pair_admissible({1, 0}, {2, 1}));
  CHECK_FALSE(pair_admissible({1, 0}, {1, 2}));
  // Disjoint chords are unconstrained.
  CHECK(pair_admissible({1, 0}, {2, 3}));
  CHECK_THROWS_AS(pair_admissible({0, 2}, {1, 3}), PreconditionError);
  CHECK_THROWS_AS(pair_admissible({0, 2}, {2, 0}), PreconditionError);
}

TEST_CASE("classification equals the BFS c-matrices") {
  for (int n = 1; n <= 5; ++n) {
    std::set<std::vector<OrientedChord>> bfs;
    for (const auto& c : enumerate_cmatrices(n, 6)) bfs.insert(diagram_of_cmatrix(c).sorted_chords());
    const auto pred = enumerate_cmatrix_diagrams(n, 6);
    CHECK(std::set<std::vector<OrientedChord>>(pred.begin(), pred.end()) == bfs);
    if (n == 2) CHECK(pred.size() == 5);
  }
  CHECK_THROWS_AS(is_cmatrix_diagram(od(4, {{0, 1}})), PreconditionError);
}

TEST_CASE("three A3 spanning diagrams carry no c-matrix") {
  const auto un = unreachable_diagrams(3, 6);
  CHECK(un.size() == 3);
  // Both end stars and the zigzag through c(0,3); each uses the long chord.
  CHECK(un == std::vector<ChordDiagram>{ChordDiagram(4, {{0, 1}, {0, 2}, {0, 3}}),
                                        ChordDiagram(4, {{0, 1}, {0, 3}, {2, 3}}),
                                        ChordDiagram(4, {{0, 3}, {1, 3}, {2, 3}})});
  for (const auto& d : un) CHECK(d.find({0, 3}) >= 0);
}

TEST_CASE("witness CES puts negatives first with vanishing same-sign Hom") {
  for (int n = 1; n <= 4; ++n)
    for (const auto& c : enumerate_cmatrices(n, 6)) {
      const auto w = st_witness(c);
      REQUIRE(is_exceptional_sequence(w));
      std::map<IntervalRep, bool> positive;
      const auto d = diagram_of_cmatrix(c);
      for (const auto& oc : d.chords) positive[IntervalRep{n, oc.chord().a, oc.chord().b}] = oc.positive();
      bool seen_pos = false;
      for (const auto& v : w) {
        REQUIRE(positive.count(v));
        if (positive[v]) seen_pos = true;
        else CHECK_FALSE(seen_pos);
      }
      for (const auto& u : w)
        for (const auto& v : w)
          if (!(u == v) && positive[u] == positive[v]) CHECK(hom_dim(u, v) == 0);
    }
  const CMatrix identity{{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}};
  CHECK(st_witness(identity) ==
        ExceptionalSequence{IntervalRep{3, 2, 3}, IntervalRep{3, 1, 2}, IntervalRep{3, 0, 1}});
  CHECK_THROWS_AS(st_witness(od(4, {{0, 1}, {0, 2}, {0, 3}})), PreconditionError);
}
