#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <vector>

namespace ceswb {

using IntVector = std::vector<std::int64_t>;

/// Integer exchange matrix with `n_mutable` rows and `n_total` columns.
///
/// Columns [0, n_mutable) form the mutable block, which is skew-symmetric for
/// every matrix produced by this module. Columns [n_mutable, n_total) are frozen.
class ExchangeMatrix {
 public:
  ExchangeMatrix() = default;
  ExchangeMatrix(int n_mutable, int n_total);
  /// Builds from explicit rows; throws PreconditionError on ragged input or n_total < n_mutable.
  static ExchangeMatrix from_rows(int n_mutable, const std::vector<IntVector>& rows);

  int n_mutable() const { return n_mutable_; }
  int n_total() const { return n_total_; }

  std::int64_t at(int i, int j) const { return entries_[index(i, j)]; }
  std::int64_t& at(int i, int j) { return entries_[index(i, j)]; }

  IntVector row(int i) const;
  std::vector<IntVector> rows() const;
  std::span<const std::int64_t> data() const { return entries_; }

  bool is_framed_shape() const { return n_total_ == 2 * n_mutable_; }
  bool mutable_block_skew_symmetric() const;

  friend bool operator==(const ExchangeMatrix&, const ExchangeMatrix&) = default;
  friend auto operator<=>(const ExchangeMatrix&, const ExchangeMatrix&) = default;

 private:
  std::size_t index(int i, int j) const {
    return static_cast<std::size_t>(i) * static_cast<std::size_t>(n_total_) + static_cast<std::size_t>(j);
  }

  int n_mutable_ = 0;
  int n_total_ = 0;
  std::vector<std::int64_t> entries_;
};

/// Rows of a c-matrix; row i is the c-vector of mutable vertex i.
struct CMatrix {
  std::vector<IntVector> rows;

  int size() const { return static_cast<int>(rows.size()); }

  friend bool operator==(const CMatrix&, const CMatrix&) = default;
  friend auto operator<=>(const CMatrix&, const CMatrix&) = default;
};

enum class Sign { positive, negative };

/// Sign of a sign-coherent nonzero vector; throws PreconditionError otherwise.
Sign row_sign(std::span<const std::int64_t> row);
bool is_sign_coherent(std::span<const std::int64_t> row);
/// True when every row is sign-coherent and |row| is a contiguous 0/1 vector.
bool has_interval_rows(const CMatrix& c);

struct Seed {
  ExchangeMatrix matrix;
  std::vector<int> history;  // 0-based mutation indices applied to the framed matrix
};

/// Exchange matrix of the linearly-ordered A_n quiver with arrows (i+1) -> i.
ExchangeMatrix linear_quiver_matrix(int n);
/// linear_quiver_matrix(n) with an identity frozen block appended.
ExchangeMatrix framed_matrix(int n);

/// Matrix mutation at mutable index k (0-based). Overflow is reported, not wrapped.
ExchangeMatrix mutate(const ExchangeMatrix& b, int k);
ExchangeMatrix mutate_sequence(const ExchangeMatrix& b, std::span<const int> ks);

CMatrix c_matrix_of(const ExchangeMatrix& b);
/// Rows sorted lexicographically; the identity of a c-matrix up to row order.
CMatrix canonical_cmatrix(CMatrix c);

/// Representative of `b` under simultaneous permutation of mutable rows and
/// columns (frozen columns fixed): the lexicographically smallest image over
/// all n_mutable! permutations.
ExchangeMatrix canonical_seed_form(const ExchangeMatrix& b);

struct ExchangeGraph {
  int n = 0;
  std::vector<Seed> seeds;        // one per frozen-isomorphism class, BFS order
  std::vector<CMatrix> cmatrices; // canonical c-matrices, sorted, unique
};

/// Breadth-first closure of framed_matrix(n) under every mutation, vertices
/// mutated in increasing index. `jobs` > 1 fans each BFS level out across
/// threads; the result is identical for every job count.
ExchangeGraph explore_exchange_graph(int n, int bound, int jobs = 1);
ExchangeGraph explore_exchange_graph(int n);

std::vector<CMatrix> enumerate_cmatrices(int n, int bound);
std::vector<CMatrix> enumerate_cmatrices(int n);

/// Mutable indices whose c-vector has no negative entry.
std::vector<int> green_vertices(const ExchangeMatrix& b);
std::vector<int> red_vertices(const ExchangeMatrix& b);
bool is_reddening(std::span<const int> seq, int n);

/// Structural test for quivers mutation-equivalent to linear A_n: chordless
/// cycles are oriented triangles, at most four neighbours, the three- and
/// four-neighbour triangle conditions, and at most one arrow between vertices.
bool check_mutation_class_shape(const ExchangeMatrix& b);

}  // namespace ceswb
