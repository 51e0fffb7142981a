#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <span>
#include <utility>
#include <vector>

#include "ceswb/reptheory.hpp"

namespace ceswb {

/// Chord between marked points a < b of a disk.
struct Chord {
  int a = 0;
  int b = 0;

  /// Normalizes the endpoint order; throws PreconditionError when x == y.
  static Chord make(int x, int y);

  bool has_endpoint(int p) const { return a == p || b == p; }
  int other(int p) const { return p == a ? b : a; }
  bool shares_endpoint(const Chord& o) const { return has_endpoint(o.a) || has_endpoint(o.b); }

  friend bool operator==(const Chord&, const Chord&) = default;
  friend auto operator<=>(const Chord&, const Chord&) = default;
};

/// Directed chord; positive when it runs from the lower to the higher endpoint.
struct OrientedChord {
  int tail = 0;
  int head = 0;

  Chord chord() const { return Chord::make(tail, head); }
  bool positive() const { return tail < head; }
  OrientedChord reversed() const { return {head, tail}; }

  friend bool operator==(const OrientedChord&, const OrientedChord&) = default;
  friend auto operator<=>(const OrientedChord&, const OrientedChord&) = default;
};

/// Noncrossing forest on marked points 0..n_points-1, chords kept sorted.
class ChordDiagram {
 public:
  ChordDiagram() = default;
  /// Throws PreconditionError if chords repeat, cross, leave the disk or close a cycle.
  ChordDiagram(int n_points, std::vector<Chord> chords);

  int n_points() const { return n_points_; }
  int size() const { return static_cast<int>(chords_.size()); }
  const std::vector<Chord>& chords() const { return chords_; }
  const Chord& chord(int idx) const { return chords_[idx]; }
  /// Index of `c` in chords(), or -1.
  int find(const Chord& c) const;
  bool is_spanning() const { return size() == n_points_ - 1; }

  friend bool operator==(const ChordDiagram&, const ChordDiagram&) = default;
  friend auto operator<=>(const ChordDiagram&, const ChordDiagram&) = default;

 private:
  int n_points_ = 0;
  std::vector<Chord> chords_;
};

/// Diagram with a bijective labelling chords -> [k]; labels[idx] belongs to chord(idx).
struct LabeledDiagram {
  ChordDiagram diagram;
  std::vector<int> labels;

  friend bool operator==(const LabeledDiagram&, const LabeledDiagram&) = default;
  friend auto operator<=>(const LabeledDiagram&, const LabeledDiagram&) = default;
};

/// Throws PreconditionError unless labels form a bijection onto [1, k].
void validate_labels(const LabeledDiagram& d);

/// Endpoints strictly interleave.
bool chords_cross(const Chord& x, const Chord& y);

/// (e - p) mod n_points; a chord {p,e} is clockwise from {p,e'} at p iff its rank is smaller.
int angular_rank(int p, int e, int n_points);

/// Indices of the chords at p ordered counterclockwise-most first (decreasing angular rank).
std::vector<int> chords_at_point(const ChordDiagram& d, int p);

/// Labels increase as the chords at every marked point are swept clockwise.
bool is_good_labeling(const LabeledDiagram& d);

/// X_{i,j} -> c(i,j) on n+1 points. Throws PreconditionError if the image is not a diagram.
ChordDiagram araya_map(const std::vector<IntervalRep>& collection);
/// Inverse of araya_map.
std::vector<IntervalRep> collection_of_diagram(const ChordDiagram& d);

/// Position l (1-based) of a length-k sequence becomes the chord labelled k+1-l.
LabeledDiagram seq_to_labeled(const ExceptionalSequence& seq);
/// Chord labelled l goes to position k+1-l. Throws PreconditionError for a bad labelling.
ExceptionalSequence labeled_to_seq(const LabeledDiagram& d);

/// Decodes a Pruefer sequence over vertices 0..vertices-1 into tree edges.
std::vector<std::pair<int, int>> prufer_decode(std::span<const int> seq, int vertices);
/// Calls fn on the edge list of every labelled tree on `vertices` vertices.
void for_each_labeled_tree(int vertices, const std::function<void(const std::vector<std::pair<int, int>>&)>& fn);

/// All noncrossing forests with k chords on n+1 points, sorted. k = n enumerates
/// spanning trees by Pruefer sequence; smaller k by direct backtracking.
std::vector<ChordDiagram> enumerate_diagrams(int n, int k, int bound);
std::vector<ChordDiagram> enumerate_diagrams(int n, int k);
/// Backtracking enumeration for any k; the independent count for k = n.
std::vector<ChordDiagram> enumerate_noncrossing_forests(int n, int k);

/// Every good labelling of `d`, in lexicographic order of the label vectors.
std::vector<LabeledDiagram> good_labelings(const ChordDiagram& d);

}  // namespace ceswb
