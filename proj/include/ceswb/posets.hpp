#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "ceswb/chords.hpp"
#include "ceswb/exchange.hpp"
#include "ceswb/reptheory.hpp"

namespace ceswb {

/// Finite poset on elements 0..size-1 stored by its Hasse diagram.
class FinitePoset {
 public:
  FinitePoset() = default;
  /// Builds from arbitrary strict relations (lower, upper); the Hasse covers are
  /// the transitive reduction. Throws PreconditionError on a cycle.
  static FinitePoset from_relations(int size, const std::vector<std::pair<int, int>>& relations);

  int size() const { return size_; }
  /// Cover pairs (lower, upper), sorted.
  const std::vector<std::pair<int, int>>& covers() const { return covers_; }
  bool less(int x, int y) const { return below_[y] >> x & 1u; }
  std::vector<int> upper_covers(int x) const;
  std::vector<int> lower_covers(int x) const;
  /// Bitmask of elements strictly below x.
  std::uint64_t strictly_below(int x) const { return below_[x]; }

  friend bool operator==(const FinitePoset&, const FinitePoset&) = default;

 private:
  int size_ = 0;
  std::vector<std::pair<int, int>> covers_;
  std::vector<std::uint64_t> below_;
};

/// Poset of a diagram: element idx is chord(idx).
struct DiagramPoset {
  ChordDiagram diagram;
  FinitePoset poset;
};

/// At each marked point the chords, swept clockwise, form a chain with the
/// clockwise-most chord on top.
DiagramPoset poset_of_diagram(const ChordDiagram& d);

/// Exact count by dynamic programming over down-sets (size <= 24).
std::uint64_t count_linear_extensions(const FinitePoset& p);

/// Every linear extension as f[element] in [1, size], in lexicographic order.
std::vector<std::vector<int>> linear_extensions(const FinitePoset& p);

/// The CESs formed from a CEC, one per linear extension of its diagram poset.
std::vector<ExceptionalSequence> ces_set_of_collection(const std::vector<IntervalRep>& collection);

/// Permutation of [1, n] stored as images: sigma[l-1] = sigma(l).
using Permutation = std::vector<int>;

/// Standard cycle notation, smallest element first in each cycle; "()" for the identity.
std::string cycle_notation(const Permutation& sigma);
/// Parses cycle notation such as "(324)" or "(12)(43)" over [1, n] (single-digit
/// entries may be juxtaposed; commas or spaces separate larger ones).
Permutation parse_cycle_notation(const std::string& text, int n);
Permutation inverse(const Permutation& sigma);

/// For each linear extension f of the poset of C's row diagram, the permutation
/// sigma = (l -> f(c_l))^{-1}; (V_sigma(n), ..., V_sigma(1)) is a CES.
std::vector<Permutation> permutations_of_cmatrix(const CMatrix& c);
/// (V_sigma(n), ..., V_sigma(1)) for the row modules V_l of C.
ExceptionalSequence sequence_of_permutation(const CMatrix& c, const Permutation& sigma);

/// At most two upper and two lower covers per element, acyclic and connected Hasse graph.
bool satisfies_poset_conditions(const FinitePoset& p);

/// Spanning diagram whose poset is isomorphic to p, built by removing a maximal
/// element and either gluing two realized components or attaching a new chord
/// beside the element it covers. Throws PreconditionError if p fails the conditions.
ChordDiagram realize_poset(const FinitePoset& p);

/// Canonical sorted cover list over all relabellings (size <= 9).
std::vector<std::pair<int, int>> canonical_form(const FinitePoset& p);
bool posets_isomorphic(const FinitePoset& x, const FinitePoset& y);

}  // namespace ceswb
