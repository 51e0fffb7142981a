#pragma once

#include <compare>
#include <optional>
#include <string>
#include <vector>

#include "ceswb/exchange.hpp"

namespace ceswb {

/// Indecomposable X_{i,j} of the linear A_n quiver, supported on vertices i+1..j.
struct IntervalRep {
  int n = 0;
  int i = 0;
  int j = 0;

  /// Validating constructor; throws PreconditionError unless 0 <= i < j <= n.
  static IntervalRep make(int n, int i, int j);

  friend bool operator==(const IntervalRep&, const IntervalRep&) = default;
  friend auto operator<=>(const IntervalRep&, const IntervalRep&) = default;
};

using ExceptionalSequence = std::vector<IntervalRep>;

/// "X(i,j)"
std::string to_string(const IntervalRep& v);
std::string to_string(const ExceptionalSequence& seq);

IntVector dim_vector(const IntervalRep& v);
/// Inverse of dim_vector. Throws PreconditionError for a zero, non-0/1 or gapped vector.
IntervalRep rep_from_dim(const IntVector& v);

/// Auslander-Reiten translate: X_{i-1,j-1}, or nullopt (the zero object) when i = 0.
std::optional<IntervalRep> tau(const IntervalRep& v);

/// dim Hom(V, W) from the interval rule: 1 iff a <= c < b <= d for V = X_{a,b}, W = X_{c,d}.
int hom_dim(const IntervalRep& v, const IntervalRep& w);
int hom_dim(const IntervalRep& v, const std::optional<IntervalRep>& w);

/// dim Hom(V, W) by solving the morphism commutativity constraints over the
/// rationals. Independent of the interval rule above.
int hom_dim_by_solver(const IntervalRep& v, const IntervalRep& w);

/// dim Ext^1(V, W) = dim Hom(W, tau V).
int ext1_dim(const IntervalRep& v, const IntervalRep& w);

/// Euler form sum_i v_i w_i - sum_{arrows s->t} v_s w_t of the linear orientation.
std::int64_t euler_form(const IntVector& v, const IntVector& w);

/// (V, W) is exceptional iff Hom(W, V) = 0 and Ext^1(W, V) = 0.
bool is_exceptional_pair(const IntervalRep& v, const IntervalRep& w);
bool is_exceptional_sequence(const ExceptionalSequence& seq);

/// All X_{i,j} of A_n ordered by (i, j).
std::vector<IntervalRep> all_interval_reps(int n);

}  // namespace ceswb
