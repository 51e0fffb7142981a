#include "ceswb/exchange.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <string>
#include <thread>

#include "ceswb/error.hpp"

namespace ceswb {

ExchangeMatrix::ExchangeMatrix(int n_mutable, int n_total)
    : n_mutable_(n_mutable), n_total_(n_total) {
  if (n_mutable < 0 || n_total < n_mutable) {
    throw PreconditionError("exchange matrix needs 0 <= n_mutable <= n_total");
  }
  entries_.assign(static_cast<std::size_t>(n_mutable) * static_cast<std::size_t>(n_total), 0);
}

ExchangeMatrix ExchangeMatrix::from_rows(int n_mutable, const std::vector<IntVector>& rows) {
  if (static_cast<int>(rows.size()) != n_mutable) {
    throw PreconditionError("expected " + std::to_string(n_mutable) + " rows, got " +
                            std::to_string(rows.size()));
  }
  const int m = rows.empty() ? n_mutable : static_cast<int>(rows.front().size());
  ExchangeMatrix b(n_mutable, m);
  for (int i = 0; i < n_mutable; ++i) {
    if (static_cast<int>(rows[i].size()) != m) throw PreconditionError("ragged matrix rows");
    for (int j = 0; j < m; ++j) b.at(i, j) = rows[i][j];
  }
  return b;
}

IntVector ExchangeMatrix::row(int i) const {
  auto first = entries_.begin() + static_cast<std::ptrdiff_t>(index(i, 0));
  return IntVector(first, first + n_total_);
}

std::vector<IntVector> ExchangeMatrix::rows() const {
  std::vector<IntVector> out;
  out.reserve(n_mutable_);
  for (int i = 0; i < n_mutable_; ++i) out.push_back(row(i));
  return out;
}

bool ExchangeMatrix::mutable_block_skew_symmetric() const {
  for (int i = 0; i < n_mutable_; ++i) {
    for (int j = i; j < n_mutable_; ++j) {
      if (at(i, j) != -at(j, i)) return false;
    }
  }
  return true;
}

bool is_sign_coherent(std::span<const std::int64_t> row) {
  bool pos = false, neg = false;
  for (auto v : row) {
    pos |= v > 0;
    neg |= v < 0;
  }
  return pos != neg;
}

Sign row_sign(std::span<const std::int64_t> row) {
  if (!is_sign_coherent(row)) throw PreconditionError("c-vector is zero or not sign-coherent");
  return std::any_of(row.begin(), row.end(), [](auto v) { return v > 0; }) ? Sign::positive
                                                                            : Sign::negative;
}

bool has_interval_rows(const CMatrix& c) {
  for (const auto& r : c.rows) {
    if (!is_sign_coherent(r)) return false;
    int first = -1, last = -1;
    for (int i = 0; i < static_cast<int>(r.size()); ++i) {
      if (r[i] == 0) continue;
      if (r[i] != 1 && r[i] != -1) return false;
      if (first < 0) first = i;
      if (last >= 0 && last != i - 1) return false;
      last = i;
    }
  }
  return true;
}

ExchangeMatrix linear_quiver_matrix(int n) {
  if (n < 1) throw PreconditionError("linear quiver needs n >= 1");
  ExchangeMatrix b(n, n);
  for (int i = 1; i < n; ++i) {
    b.at(i - 1, i) = -1;
    b.at(i, i - 1) = 1;
  }
  return b;
}

ExchangeMatrix framed_matrix(int n) {
  ExchangeMatrix q = linear_quiver_matrix(n);
  ExchangeMatrix b(n, 2 * n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) b.at(i, j) = q.at(i, j);
    b.at(i, n + i) = 1;
  }
  return b;
}

ExchangeMatrix mutate(const ExchangeMatrix& b, int k) {
  if (k < 0 || k >= b.n_mutable()) {
    throw PreconditionError("mutation index " + std::to_string(k) + " outside [0, " +
                            std::to_string(b.n_mutable()) + ")");
  }
  ExchangeMatrix out(b.n_mutable(), b.n_total());
  for (int i = 0; i < b.n_mutable(); ++i) {
    for (int j = 0; j < b.n_total(); ++j) {
      if (i == k || j == k) {
        out.at(i, j) = checked::neg(b.at(i, j));
        continue;
      }
      const std::int64_t bik = b.at(i, k), bkj = b.at(k, j);
      std::int64_t num = checked::add(checked::mul(checked::abs(bik), bkj),
                                      checked::mul(bik, checked::abs(bkj)));
      out.at(i, j) = checked::add(b.at(i, j), num / 2);
    }
  }
  return out;
}

ExchangeMatrix mutate_sequence(const ExchangeMatrix& b, std::span<const int> ks) {
  ExchangeMatrix cur = b;
  for (int k : ks) cur = mutate(cur, k);
  return cur;
}

CMatrix c_matrix_of(const ExchangeMatrix& b) {
  if (!b.is_framed_shape()) {
    throw PreconditionError("c-matrix needs a framed n x 2n matrix, got " +
                            std::to_string(b.n_mutable()) + " x " + std::to_string(b.n_total()));
  }
  const int n = b.n_mutable();
  CMatrix c;
  c.rows.reserve(n);
  for (int i = 0; i < n; ++i) {
    IntVector r(n);
    for (int j = 0; j < n; ++j) r[j] = b.at(i, n + j);
    c.rows.push_back(std::move(r));
  }
  return c;
}

CMatrix canonical_cmatrix(CMatrix c) {
  std::sort(c.rows.begin(), c.rows.end());
  return c;
}

ExchangeMatrix canonical_seed_form(const ExchangeMatrix& b) {
  const int n = b.n_mutable();
  const int m = b.n_total();
  if (n > 8) throw BoundExceededError("canonical seed form is exhaustive and limited to n <= 8");
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  ExchangeMatrix best = b;
  ExchangeMatrix cand(n, m);
  do {
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) cand.at(i, j) = b.at(perm[i], perm[j]);
      for (int j = n; j < m; ++j) cand.at(i, j) = b.at(perm[i], j);
    }
    if (cand < best) best = cand;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

namespace {

struct Candidate {
  ExchangeMatrix matrix;
  ExchangeMatrix key;
};

template <typename Fn>
void parallel_for(std::size_t count, int jobs, Fn&& fn) {
  if (jobs <= 1 || count < 2) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  const std::size_t workers = std::min<std::size_t>(static_cast<std::size_t>(jobs), count);
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (std::size_t w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      for (std::size_t i = w; i < count; i += workers) fn(i);
    });
  }
  for (auto& t : pool) t.join();
}

}  // namespace

ExchangeGraph explore_exchange_graph(int n, int bound, int jobs) {
  if (n < 1) throw PreconditionError("exchange graph needs n >= 1");
  require_within_bound(n, bound, "exchange graph search");

  ExchangeGraph g;
  g.n = n;
  std::set<ExchangeMatrix> seen;
  Seed root{framed_matrix(n), {}};
  seen.insert(canonical_seed_form(root.matrix));
  g.seeds.push_back(root);

  std::size_t level_begin = 0;
  while (level_begin < g.seeds.size()) {
    const std::size_t level_end = g.seeds.size();
    const std::size_t count = (level_end - level_begin) * static_cast<std::size_t>(n);
    std::vector<Candidate> cands(count);
    parallel_for(count, jobs, [&](std::size_t idx) {
      const Seed& s = g.seeds[level_begin + idx / n];
      ExchangeMatrix m = mutate(s.matrix, static_cast<int>(idx % n));
      cands[idx].key = canonical_seed_form(m);
      cands[idx].matrix = std::move(m);
    });
    for (std::size_t idx = 0; idx < count; ++idx) {
      if (!seen.insert(cands[idx].key).second) continue;
      Seed child{std::move(cands[idx].matrix), g.seeds[level_begin + idx / n].history};
      child.history.push_back(static_cast<int>(idx % n));
      g.seeds.push_back(std::move(child));
    }
    level_begin = level_end;
  }

  std::set<CMatrix> cms;
  for (const auto& s : g.seeds) cms.insert(canonical_cmatrix(c_matrix_of(s.matrix)));
  g.cmatrices.assign(cms.begin(), cms.end());
  return g;
}

ExchangeGraph explore_exchange_graph(int n) { return explore_exchange_graph(n, search_bound()); }

std::vector<CMatrix> enumerate_cmatrices(int n, int bound) {
  return explore_exchange_graph(n, bound).cmatrices;
}

std::vector<CMatrix> enumerate_cmatrices(int n) { return enumerate_cmatrices(n, search_bound()); }

std::vector<int> green_vertices(const ExchangeMatrix& b) {
  CMatrix c = c_matrix_of(b);
  std::vector<int> out;
  for (int i = 0; i < c.size(); ++i) {
    const auto& r = c.rows[i];
    if (std::none_of(r.begin(), r.end(), [](auto v) { return v < 0; })) out.push_back(i);
  }
  return out;
}

std::vector<int> red_vertices(const ExchangeMatrix& b) {
  std::vector<int> green = green_vertices(b);
  std::vector<int> out;
  for (int i = 0; i < b.n_mutable(); ++i) {
    if (!std::binary_search(green.begin(), green.end(), i)) out.push_back(i);
  }
  return out;
}

bool is_reddening(std::span<const int> seq, int n) {
  ExchangeMatrix b = mutate_sequence(framed_matrix(n), seq);
  return green_vertices(b).empty();
}

namespace {

// b_ij > 0 means arrows i -> j.
bool oriented_triangle(const ExchangeMatrix& b, int x, int y, int z) {
  return (b.at(x, y) > 0 && b.at(y, z) > 0 && b.at(z, x) > 0) ||
         (b.at(x, y) < 0 && b.at(y, z) < 0 && b.at(z, x) < 0);
}

bool any_triangle(const ExchangeMatrix& b, int x, int y, int z) {
  return b.at(x, y) != 0 && b.at(y, z) != 0 && b.at(z, x) != 0;
}

// Extends an induced path whose first vertex is the smallest of the cycle being
// sought; true once the path closes into a chordless cycle of length >= 4.
bool has_long_chordless_cycle(const std::vector<std::vector<int>>& adj,
                              const std::vector<std::vector<bool>>& edge, std::vector<int>& path,
                              std::vector<bool>& on_path) {
  const int start = path.front();
  for (int next : adj[path.back()]) {
    if (next <= start || on_path[next]) continue;
    bool chord = false;
    for (std::size_t p = 1; p + 1 < path.size() && !chord; ++p) chord = edge[next][path[p]];
    if (chord) continue;
    if (path.size() >= 2 && edge[next][start]) {
      if (path.size() + 1 >= 4) return true;
      continue;
    }
    path.push_back(next);
    on_path[next] = true;
    if (has_long_chordless_cycle(adj, edge, path, on_path)) return true;
    on_path[next] = false;
    path.pop_back();
  }
  return false;
}

}  // namespace

bool check_mutation_class_shape(const ExchangeMatrix& b) {
  const int n = b.n_mutable();
  if (!b.mutable_block_skew_symmetric()) return false;
  std::vector<std::vector<int>> adj(n);
  std::vector<std::vector<bool>> edge(n, std::vector<bool>(n, false));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      if (b.at(i, j) > 1 || b.at(i, j) < -1) return false;
      if (b.at(i, j) != 0) {
        adj[i].push_back(j);
        edge[i][j] = true;
      }
    }
  }

  // Every triangle must be oriented.
  for (int x = 0; x < n; ++x)
    for (int y = x + 1; y < n; ++y)
      for (int z = y + 1; z < n; ++z)
        if (any_triangle(b, x, y, z) && !oriented_triangle(b, x, y, z)) return false;

  // No chordless cycle of length >= 4.
  for (int s = 0; s < n; ++s) {
    std::vector<int> path{s};
    std::vector<bool> on_path(n, false);
    on_path[s] = true;
    if (has_long_chordless_cycle(adj, edge, path, on_path)) return false;
  }

  for (int v = 0; v < n; ++v) {
    const auto& nb = adj[v];
    const int deg = static_cast<int>(nb.size());
    if (deg > 4) return false;
    if (deg == 4) {
      // The four arrows split into two pairs, each pair spanning an oriented 3-cycle with v.
      const int a = nb[0];
      bool ok = false;
      for (int t = 1; t < 4 && !ok; ++t) {
        std::vector<int> rest;
        for (int u = 1; u < 4; ++u)
          if (u != t) rest.push_back(nb[u]);
        ok = oriented_triangle(b, v, a, nb[t]) && oriented_triangle(b, v, rest[0], rest[1]);
      }
      if (!ok) return false;
    } else if (deg == 3) {
      bool ok = false;
      for (int t = 0; t < 3 && !ok; ++t) {
        const int third = nb[t];
        const int p = nb[(t + 1) % 3], q = nb[(t + 2) % 3];
        ok = oriented_triangle(b, v, p, q) && !edge[third][p] && !edge[third][q];
      }
      if (!ok) return false;
    }
  }
  return true;
}

}  // namespace ceswb
