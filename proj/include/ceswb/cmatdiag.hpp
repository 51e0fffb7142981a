#pragma once

#include <optional>
#include <vector>

#include "ceswb/chords.hpp"
#include "ceswb/exchange.hpp"
#include "ceswb/reptheory.hpp"

namespace ceswb {

/// Oriented chord diagram whose chord at index l is tied to c-matrix row l.
struct OrientedDiagram {
  int n_points = 0;
  std::vector<OrientedChord> chords;

  int size() const { return static_cast<int>(chords.size()); }
  /// Underlying unoriented diagram; throws PreconditionError if it is not a diagram.
  ChordDiagram underlying() const;
  /// Same chords as a set, row labels forgotten.
  std::vector<OrientedChord> sorted_chords() const;

  friend bool operator==(const OrientedDiagram&, const OrientedDiagram&) = default;
  friend auto operator<=>(const OrientedDiagram&, const OrientedDiagram&) = default;
};

/// Row +dim X_{i,j} becomes i -> j, row -dim X_{i,j} becomes j -> i.
OrientedDiagram diagram_of_cmatrix(const CMatrix& c);
/// Inverse of diagram_of_cmatrix.
CMatrix cmatrix_of_diagram(const OrientedDiagram& d);

/// Which endpoints of chord j and the mutating chord k coincide, in interval
/// terms (a: both left ends, b: both right ends, c: k's right is j's left,
/// d: k's left is j's right).
enum class RewriteCase { a, b, c, d };
char to_char(RewriteCase c);

struct ChordRewrite {
  int row = 0;
  RewriteCase which = RewriteCase::a;
  OrientedChord before;
  OrientedChord after;
};

struct DiagramMutation {
  OrientedDiagram result;
  std::vector<ChordRewrite> rewrites;  // step i), one per affected chord
};

/// Mutation of the oriented diagram of B's c-matrix at row k: every chord j with
/// b_kj != 0 and sgn(b_kj) != sgn(c_k) is rewritten to represent c_j + c_k,
/// then chord k is reversed. Throws PreconditionError unless d matches B.
DiagramMutation mutate_diagram_traced(const OrientedDiagram& d, const ExchangeMatrix& b, int k);
OrientedDiagram mutate_diagram(const OrientedDiagram& d, const ExchangeMatrix& b, int k);

std::vector<int> in_neighbors(const OrientedDiagram& d, int p);
std::vector<int> out_neighbors(const OrientedDiagram& d, int p);

/// The incoming neighbours of p form a contiguous block of its naturally ordered neighbours.
bool is_weakly_separated(const OrientedDiagram& d, int p);

/// False exactly for the forbidden two-chord configurations sharing an endpoint.
bool pair_admissible(const OrientedChord& x, const OrientedChord& y);

/// Weakly separated everywhere and every chord pair admissible.
bool is_cmatrix_diagram(const OrientedDiagram& d);

/// Every orientation of every spanning diagram on n+1 points accepted by
/// is_cmatrix_diagram, chords sorted, the list sorted.
std::vector<std::vector<OrientedChord>> enumerate_cmatrix_diagrams(int n, int bound);

/// Spanning diagrams on n+1 points admitting no accepted orientation.
std::vector<ChordDiagram> unreachable_diagrams(int n, int bound);

/// Exceptional sequence on the rows' modules with every negative row before
/// every positive one, built from a good labelling that gives the positive
/// chords the smallest labels.
ExceptionalSequence st_witness(const CMatrix& c);
ExceptionalSequence st_witness(const OrientedDiagram& d);

}  // namespace ceswb
