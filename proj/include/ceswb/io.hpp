#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "ceswb/chords.hpp"
#include "ceswb/cmatdiag.hpp"
#include "ceswb/exchange.hpp"
#include "ceswb/ncpart.hpp"
#include "ceswb/posets.hpp"
#include "ceswb/reptheory.hpp"

namespace ceswb::io {

using Json = nlohmann::ordered_json;

// {"n_mutable": n, "n_total": m, "entries": [[...], ...]}
Json to_json(const ExchangeMatrix& b);
ExchangeMatrix matrix_from_json(const Json& j);

// A c-matrix travels as an n x n matrix document.
Json to_json(const CMatrix& c);
/// Accepts an n x n c-matrix or an n x 2n framed exchange matrix (whose frozen block is taken).
CMatrix cmatrix_from_json(const Json& j);

// {"i": i, "j": j}
Json to_json(const IntervalRep& v);
IntervalRep rep_from_json(const Json& j, int n);
Json to_json(const ExceptionalSequence& seq);
/// An array of reps on A_n.
ExceptionalSequence sequence_from_json(const Json& j, int n);

/// Chords emit in sorted order; "label" is added when labels are given.
Json to_json(const ChordDiagram& d, const std::vector<int>* labels = nullptr);
Json to_json(const LabeledDiagram& d);
/// Chords emit in row order with "dir" set to "ab" (a -> b) or "ba".
Json to_json(const OrientedDiagram& d);

/// Any diagram document; labels and orientation are returned when every chord carries them.
struct DiagramDocument {
  ChordDiagram diagram;
  std::optional<std::vector<int>> labels;
  std::optional<OrientedDiagram> oriented;
};
DiagramDocument diagram_from_json(const Json& j);

/// Sorted 1-based block lists, e.g. [[1],[2,4,5],[3]].
Json to_json(const NCPartition& p);
NCPartition partition_from_json(const Json& j);
Json to_json(const NCChain& chain);
NCChain chain_from_json(const Json& j);

// {"size": k, "covers": [[lower, upper], ...]} over 0-based elements.
Json to_json(const FinitePoset& p);
FinitePoset poset_from_json(const Json& j);

std::string format_matrix(const ExchangeMatrix& b);
std::string format_cmatrix(const CMatrix& c);
std::string format_chord(const OrientedChord& c);
std::string format_diagram(const OrientedDiagram& d);

/// Marked point p sits at angle 90 - 360 p / n_points degrees.
std::string diagram_to_dot(const ChordDiagram& d, const std::vector<int>* labels = nullptr);
std::string diagram_to_dot(const OrientedDiagram& d);
/// Hasse diagram with edges drawn from lower to upper element.
std::string hasse_to_dot(const DiagramPoset& p);

}  // namespace ceswb::io
