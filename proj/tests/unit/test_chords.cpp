#include <doctest.h>

#include <set>

#include "ceswb/chords.hpp"
#include "ceswb/error.hpp"
#include "oracle.hpp"

using namespace ceswb;

namespace {

IntervalRep X(int n, int i, int j) { return IntervalRep::make(n, i, j); }

std::vector<std::pair<int, int>> pairs(const ChordDiagram& d) {
  std::vector<std::pair<int, int>> out;
  for (const auto& c : d.chords()) out.emplace_back(c.a, c.b);
  return out;
}

}  // namespace

TEST_CASE("crossing") {
  CHECK(chords_cross({0, 2}, {1, 3}));
  CHECK(chords_cross({1, 3}, {0, 2}));
  CHECK_FALSE(chords_cross({0, 1}, {1, 2}));
  CHECK_FALSE(chords_cross({0, 1}, {2, 3}));
  CHECK_FALSE(chords_cross({0, 3}, {1, 2}));
}

TEST_CASE("angular rank") {
  CHECK(angular_rank(1, 2, 5) == 1);
  CHECK(angular_rank(1, 0, 5) == 4);
  CHECK(angular_rank(0, 4, 5) == 4);
  CHECK_THROWS_AS(angular_rank(2, 2, 5), PreconditionError);
}

TEST_CASE("diagram validation") {
  CHECK_THROWS_AS(ChordDiagram(4, {{0, 2}, {1, 3}}), PreconditionError);
  CHECK_THROWS_AS(ChordDiagram(4, {{0, 1}, {1, 2}, {0, 2}}), PreconditionError);
  CHECK_THROWS_AS(ChordDiagram(4, {{0, 1}, {0, 1}}), PreconditionError);
  CHECK_THROWS_AS(ChordDiagram(3, {{0, 3}}), PreconditionError);
  CHECK_THROWS_AS(Chord::make(1, 1), PreconditionError);
  const ChordDiagram d(4, {{2, 1}, {0, 3}});
  CHECK(d.chord(0) == Chord{0, 3});
  CHECK(d.find(Chord{1, 2}) == 1);
  CHECK(d.find(Chord{0, 1}) == -1);
  CHECK_FALSE(d.is_spanning());
}

TEST_CASE("chords at a point sweep counterclockwise-most first") {
  const ChordDiagram d(5, {{0, 1}, {1, 3}, {1, 4}, {2, 3}});
  const auto at1 = chords_at_point(d, 1);
  REQUIRE(at1.size() == 3);
  CHECK(d.chord(at1[0]) == Chord{0, 1});
  CHECK(d.chord(at1[1]) == Chord{1, 4});
  CHECK(d.chord(at1[2]) == Chord{1, 3});
}

TEST_CASE("spanning diagram counts match brute force") {
  const std::size_t expected[] = {0, 1, 3, 12, 55, 273, 1428};
  for (int n = 1; n <= 6; ++n) {
    const auto ds = enumerate_diagrams(n, n, 6);
    CHECK(ds.size() == expected[n]);
    CHECK(enumerate_noncrossing_forests(n, n) == ds);
    if (n <= 5) {
      std::set<std::vector<std::pair<int, int>>> mine;
      for (const auto& d : ds) mine.insert(pairs(d));
      CHECK(mine == oracle::spanning_diagrams_brute_force(n));
    }
  }
  CHECK_THROWS_AS(enumerate_diagrams(7, 7, 6), BoundExceededError);
  CHECK_THROWS_AS(enumerate_diagrams(3, 4, 6), PreconditionError);
}

TEST_CASE("forests with fewer chords") {
  CHECK(enumerate_diagrams(2, 1, 6).size() == 3);
  CHECK(enumerate_diagrams(3, 1, 6).size() == 6);
  CHECK(enumerate_diagrams(3, 2, 6).size() == 14);
}

TEST_CASE("good labelling, Araya map and sequence round trips") {
  const ExceptionalSequence s{X(4, 1, 3), X(4, 2, 3), X(4, 1, 4), X(4, 0, 1)};
  const LabeledDiagram ld = seq_to_labeled(s);
  CHECK(is_good_labeling(ld));
  CHECK(ld.labels[ld.diagram.find({1, 3})] == 4);
  CHECK(ld.labels[ld.diagram.find({0, 1})] == 1);
  CHECK(labeled_to_seq(ld) == s);
  CHECK(collection_of_diagram(araya_map(s)) == std::vector<IntervalRep>{X(4, 0, 1), X(4, 1, 3), X(4, 1, 4), X(4, 2, 3)});
  CHECK_THROWS_AS(seq_to_labeled({X(4, 0, 1), X(4, 1, 4), X(4, 2, 3), X(4, 1, 3)}), PreconditionError);
  CHECK_THROWS_AS(araya_map({X(3, 0, 2), X(3, 1, 3)}), PreconditionError);
  LabeledDiagram bad = ld;
  std::swap(bad.labels[0], bad.labels[1]);
  CHECK_THROWS_AS(labeled_to_seq(bad), PreconditionError);
  CHECK_THROWS_AS(validate_labels({ld.diagram, {1, 1, 2, 3}}), PreconditionError);
}

TEST_CASE("good-labelled diagrams are exactly the exceptional sequences") {
  const std::uint64_t cayley[] = {0, 1, 3, 16, 125, 1296, 16807};
  for (int n = 1; n <= 6; ++n) {
    std::uint64_t total = 0;
    for (const auto& d : enumerate_diagrams(n, n, 6)) {
      for (const auto& ld : good_labelings(d)) {
        ++total;
        if (n <= 4) {
          const auto s = labeled_to_seq(ld);
          REQUIRE(is_exceptional_sequence(s));
          REQUIRE(seq_to_labeled(s) == ld);
        }
      }
    }
    CHECK(total == cayley[n]);
  }
  for (int n = 1; n <= 3; ++n) {
    std::uint64_t total = 0;
    for (const auto& d : enumerate_diagrams(n, n, 6)) total += good_labelings(d).size();
    CHECK(total == oracle::count_ces_brute_force(n));
  }
}

TEST_CASE("path diagram has one good labelling") {
  for (int n = 1; n <= 6; ++n) {
    std::vector<Chord> path;
    for (int p = 0; p < n; ++p) path.push_back({p, p + 1});
    const auto labels = good_labelings(ChordDiagram(n + 1, path));
    REQUIRE(labels.size() == 1);
    const auto s = labeled_to_seq(labels.front());
    CHECK(s.front() == X(n, n - 1, n));
    CHECK(s.back() == X(n, 0, 1));
  }
}

TEST_CASE("Pruefer decoding") {
  const std::vector<int> seq{3, 3};
  auto edges = prufer_decode(seq, 4);
  CHECK(edges.size() == 3);
  int total = 0;
  for_each_labeled_tree(5, [&](const auto&) { ++total; });
  CHECK(total == 125);
  CHECK_THROWS_AS(prufer_decode(std::vector<int>{0}, 4), PreconditionError);
}
