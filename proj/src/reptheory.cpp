#include "ceswb/reptheory.hpp"

#include <boost/rational.hpp>

#include <sstream>

#include "ceswb/error.hpp"

namespace ceswb {

namespace {

using Rational = boost::rational<long long>;
using RationalMatrix = std::vector<std::vector<Rational>>;

// A representation of the linear quiver n -> n-1 -> ... -> 1 given by vertex
// dimensions and the matrix of each arrow (v+1) -> v, indexed by v (0-based).
struct LinearRep {
  std::vector<int> dims;
  std::vector<RationalMatrix> arrow;  // arrow[v] : dims[v+1] columns -> dims[v] rows
};

LinearRep as_linear_rep(const IntervalRep& x) {
  LinearRep r;
  r.dims.resize(x.n);
  for (int v = 0; v < x.n; ++v) r.dims[v] = (x.i <= v && v < x.j) ? 1 : 0;
  r.arrow.resize(x.n > 0 ? x.n - 1 : 0);
  for (int v = 0; v + 1 < x.n; ++v) {
    r.arrow[v].assign(r.dims[v], std::vector<Rational>(r.dims[v + 1], Rational(1)));
  }
  return r;
}

int rank_of(RationalMatrix m) {
  int rank = 0;
  const int rows = static_cast<int>(m.size());
  const int cols = rows == 0 ? 0 : static_cast<int>(m.front().size());
  for (int c = 0; c < cols && rank < rows; ++c) {
    int pivot = -1;
    for (int r = rank; r < rows; ++r) {
      if (m[r][c] != Rational(0)) {
        pivot = r;
        break;
      }
    }
    if (pivot < 0) continue;
    std::swap(m[pivot], m[rank]);
    for (int r = 0; r < rows; ++r) {
      if (r == rank || m[r][c] == Rational(0)) continue;
      const Rational f = m[r][c] / m[rank][c];
      for (int cc = c; cc < cols; ++cc) m[r][cc] -= f * m[rank][cc];
    }
    ++rank;
  }
  return rank;
}

// Dimension of the space of morphisms V -> W: families theta_v with
// theta_t * phi_a = rho_a * theta_s for every arrow a : s -> t.
int morphism_space_dim(const LinearRep& v, const LinearRep& w) {
  const int n = static_cast<int>(v.dims.size());
  std::vector<int> offset(n + 1, 0);
  for (int x = 0; x < n; ++x) offset[x + 1] = offset[x] + w.dims[x] * v.dims[x];
  const int unknowns = offset[n];
  auto var = [&](int vertex, int r, int c) { return offset[vertex] + r * v.dims[vertex] + c; };

  RationalMatrix eqs;
  for (int t = 0; t + 1 < n; ++t) {
    const int s = t + 1;
    for (int r = 0; r < w.dims[t]; ++r) {
      for (int c = 0; c < v.dims[s]; ++c) {
        std::vector<Rational> row(unknowns, Rational(0));
        for (int m = 0; m < v.dims[t]; ++m) row[var(t, r, m)] += v.arrow[t][m][c];
        for (int m = 0; m < w.dims[s]; ++m) row[var(s, m, c)] -= w.arrow[t][r][m];
        eqs.push_back(std::move(row));
      }
    }
  }
  return unknowns - rank_of(std::move(eqs));
}

void require_same_rank(const IntervalRep& v, const IntervalRep& w) {
  if (v.n != w.n) throw PreconditionError("representations of different quivers A_" +
                                          std::to_string(v.n) + " and A_" + std::to_string(w.n));
}

}  // namespace

IntervalRep IntervalRep::make(int n, int i, int j) {
  if (!(0 <= i && i < j && j <= n)) {
    throw PreconditionError("X(" + std::to_string(i) + "," + std::to_string(j) +
                            ") is not an interval module of A_" + std::to_string(n));
  }
  return IntervalRep{n, i, j};
}

std::string to_string(const IntervalRep& v) {
  return "X(" + std::to_string(v.i) + "," + std::to_string(v.j) + ")";
}

std::string to_string(const ExceptionalSequence& seq) {
  std::ostringstream os;
  os << '(';
  for (std::size_t a = 0; a < seq.size(); ++a) os << (a ? ", " : "") << to_string(seq[a]);
  os << ')';
  return os.str();
}

IntVector dim_vector(const IntervalRep& v) {
  IntVector d(v.n, 0);
  for (int x = v.i; x < v.j; ++x) d[x] = 1;
  return d;
}

IntervalRep rep_from_dim(const IntVector& v) {
  const int n = static_cast<int>(v.size());
  int first = -1, last = -1;
  for (int x = 0; x < n; ++x) {
    if (v[x] == 0) continue;
    if (v[x] != 1) throw PreconditionError("dimension vector entries must be 0 or 1");
    if (first < 0) first = x;
    if (last >= 0 && last != x - 1) throw PreconditionError("dimension vector support has a gap");
    last = x;
  }
  if (first < 0) throw PreconditionError("zero dimension vector");
  return IntervalRep{n, first, last + 1};
}

std::optional<IntervalRep> tau(const IntervalRep& v) {
  if (v.i == 0) return std::nullopt;
  return IntervalRep{v.n, v.i - 1, v.j - 1};
}

int hom_dim(const IntervalRep& v, const IntervalRep& w) {
  require_same_rank(v, w);
  return (v.i <= w.i && w.i < v.j && v.j <= w.j) ? 1 : 0;
}

int hom_dim(const IntervalRep& v, const std::optional<IntervalRep>& w) {
  return w ? hom_dim(v, *w) : 0;
}

int hom_dim_by_solver(const IntervalRep& v, const IntervalRep& w) {
  require_same_rank(v, w);
  return morphism_space_dim(as_linear_rep(v), as_linear_rep(w));
}

int ext1_dim(const IntervalRep& v, const IntervalRep& w) {
  require_same_rank(v, w);
  return hom_dim(w, tau(v));
}

std::int64_t euler_form(const IntVector& v, const IntVector& w) {
  if (v.size() != w.size()) throw PreconditionError("dimension vectors of different length");
  std::int64_t s = 0;
  for (std::size_t x = 0; x < v.size(); ++x) s = checked::add(s, checked::mul(v[x], w[x]));
  for (std::size_t t = 0; t + 1 < v.size(); ++t) s = checked::add(s, -checked::mul(v[t + 1], w[t]));
  return s;
}

bool is_exceptional_pair(const IntervalRep& v, const IntervalRep& w) {
  return hom_dim(w, v) == 0 && ext1_dim(w, v) == 0;
}

bool is_exceptional_sequence(const ExceptionalSequence& seq) {
  for (std::size_t a = 0; a < seq.size(); ++a) {
    for (std::size_t b = a + 1; b < seq.size(); ++b) {
      if (seq[a].n != seq[b].n || !is_exceptional_pair(seq[a], seq[b])) return false;
    }
  }
  return true;
}

std::vector<IntervalRep> all_interval_reps(int n) {
  std::vector<IntervalRep> out;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j <= n; ++j) out.push_back(IntervalRep{n, i, j});
  return out;
}

}  // namespace ceswb
