#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <vector>

#include "ceswb/chords.hpp"

namespace ceswb {

/// Set partition of [1, size], stored as element -> block id with blocks
/// numbered by their minimum elements in increasing order.
class NCPartition {
 public:
  NCPartition() = default;
  static NCPartition singletons(int size);
  /// Blocks given with 1-based elements; throws PreconditionError unless they partition [1, size].
  static NCPartition from_blocks(int size, const std::vector<std::vector<int>>& blocks);

  int size() const { return static_cast<int>(block_of_.size()); }
  int num_blocks() const;
  /// Block id of a 1-based element.
  int block(int element) const { return block_of_[element - 1]; }
  /// Sorted blocks of 1-based elements, ordered by minimum.
  std::vector<std::vector<int>> blocks() const;
  /// Merges the blocks holding the 1-based elements x and y (which must differ).
  NCPartition merged(int x, int y) const;

  friend bool operator==(const NCPartition&, const NCPartition&) = default;
  friend auto operator<=>(const NCPartition&, const NCPartition&) = default;

 private:
  explicit NCPartition(std::vector<int> raw);
  std::vector<int> block_of_;
};

/// No a < b < c < d with a, c in one block and b, d in another.
bool is_noncrossing(const NCPartition& p);

/// pi_0 = singletons < pi_1 < ... with each step merging two blocks.
using NCChain = std::vector<NCPartition>;

/// Starts at singletons, every step merges exactly two blocks, every member noncrossing.
bool is_saturated_nc_chain(const NCChain& chain);

/// Merges, in label order, the blocks containing i+1 and j+1 for each chord c(i, j).
/// Throws PreconditionError for a labelling that is not good.
NCChain chain_of_labeled_diagram(const LabeledDiagram& d);

/// Inverse of chain_of_labeled_diagram: the merge of blocks B1, B2 yields the chord
/// joining the last element of each block's run in the cyclic order of B1 u B2,
/// shifted down by one. Throws PreconditionError for an invalid chain.
LabeledDiagram labeled_diagram_of_chain(const NCChain& chain);

/// Every saturated chain of length k from the singletons of [1, n+1], in lexicographic order.
std::vector<NCChain> enumerate_nc_chains(int n, int k, int bound);

/// Maximal chains of NC(n+1), counted by memoized recursion over the lattice.
std::uint64_t count_maximal_nc_chains(int n, int bound);

/// Labelled trees on n+1 vertices bucketed by their number of leaves.
std::map<int, std::uint64_t> tree_leaf_distribution(int n, int bound);

/// For each r, the total number of linear extensions of P_d over spanning
/// diagrams d with exactly r indices i in [0, n] such that c(i, i+1 mod n+1) is in d.
std::map<int, std::uint64_t> diagram_leaf_distribution(int n, int bound);

}  // namespace ceswb
