#include "ceswb/chords.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <string>

#include "ceswb/error.hpp"

namespace ceswb {

namespace {

int find_root(std::vector<int>& parent, int x) {
  while (parent[x] != x) {
    parent[x] = parent[parent[x]];
    x = parent[x];
  }
  return x;
}

std::string chord_name(const Chord& c) {
  return "c(" + std::to_string(c.a) + "," + std::to_string(c.b) + ")";
}

}  // namespace

Chord Chord::make(int x, int y) {
  if (x == y) throw PreconditionError("chord endpoints must differ");
  return x < y ? Chord{x, y} : Chord{y, x};
}

ChordDiagram::ChordDiagram(int n_points, std::vector<Chord> chords)
    : n_points_(n_points), chords_(std::move(chords)) {
  if (n_points < 2) throw PreconditionError("a chord diagram needs at least two marked points");
  for (auto& c : chords_) {
    c = Chord::make(c.a, c.b);
    if (c.a < 0 || c.b >= n_points) {
      throw PreconditionError(chord_name(c) + " leaves the disk with " + std::to_string(n_points) +
                              " marked points");
    }
  }
  std::sort(chords_.begin(), chords_.end());
  if (std::adjacent_find(chords_.begin(), chords_.end()) != chords_.end()) {
    throw PreconditionError("repeated chord");
  }
  for (std::size_t x = 0; x < chords_.size(); ++x) {
    for (std::size_t y = x + 1; y < chords_.size(); ++y) {
      if (chords_cross(chords_[x], chords_[y])) {
        throw PreconditionError(chord_name(chords_[x]) + " crosses " + chord_name(chords_[y]));
      }
    }
  }
  std::vector<int> parent(n_points);
  std::iota(parent.begin(), parent.end(), 0);
  for (const auto& c : chords_) {
    int ra = find_root(parent, c.a), rb = find_root(parent, c.b);
    if (ra == rb) throw PreconditionError("chords contain a cycle through " + chord_name(c));
    parent[ra] = rb;
  }
}

int ChordDiagram::find(const Chord& c) const {
  auto it = std::lower_bound(chords_.begin(), chords_.end(), c);
  return (it != chords_.end() && *it == c) ? static_cast<int>(it - chords_.begin()) : -1;
}

void validate_labels(const LabeledDiagram& d) {
  const int k = d.diagram.size();
  if (static_cast<int>(d.labels.size()) != k) throw PreconditionError("one label per chord required");
  std::vector<bool> used(k + 1, false);
  for (int l : d.labels) {
    if (l < 1 || l > k || used[l]) throw PreconditionError("labels must be a bijection onto [1, k]");
    used[l] = true;
  }
}

bool chords_cross(const Chord& x, const Chord& y) {
  return (x.a < y.a && y.a < x.b && x.b < y.b) || (y.a < x.a && x.a < y.b && y.b < x.b);
}

int angular_rank(int p, int e, int n_points) {
  if (p == e) throw PreconditionError("angular rank needs distinct points");
  return ((e - p) % n_points + n_points) % n_points;
}

std::vector<int> chords_at_point(const ChordDiagram& d, int p) {
  std::vector<int> idx;
  for (int c = 0; c < d.size(); ++c)
    if (d.chord(c).has_endpoint(p)) idx.push_back(c);
  std::sort(idx.begin(), idx.end(), [&](int x, int y) {
    return angular_rank(p, d.chord(x).other(p), d.n_points()) >
           angular_rank(p, d.chord(y).other(p), d.n_points());
  });
  return idx;
}

bool is_good_labeling(const LabeledDiagram& d) {
  validate_labels(d);
  for (int p = 0; p < d.diagram.n_points(); ++p) {
    auto at = chords_at_point(d.diagram, p);
    for (std::size_t x = 1; x < at.size(); ++x) {
      if (d.labels[at[x - 1]] >= d.labels[at[x]]) return false;
    }
  }
  return true;
}

ChordDiagram araya_map(const std::vector<IntervalRep>& collection) {
  if (collection.empty()) throw PreconditionError("empty collection");
  const int n = collection.front().n;
  std::vector<Chord> chords;
  for (const auto& x : collection) {
    if (x.n != n) throw PreconditionError("collection mixes quivers of different rank");
    chords.push_back(Chord::make(x.i, x.j));
  }
  return ChordDiagram(n + 1, std::move(chords));
}

std::vector<IntervalRep> collection_of_diagram(const ChordDiagram& d) {
  std::vector<IntervalRep> out;
  for (const auto& c : d.chords()) out.push_back(IntervalRep{d.n_points() - 1, c.a, c.b});
  return out;
}

LabeledDiagram seq_to_labeled(const ExceptionalSequence& seq) {
  if (!is_exceptional_sequence(seq)) throw PreconditionError("not an exceptional sequence");
  const int k = static_cast<int>(seq.size());
  ChordDiagram d = araya_map(seq);
  LabeledDiagram out{d, std::vector<int>(k, 0)};
  for (int pos = 0; pos < k; ++pos) {
    out.labels[d.find(Chord::make(seq[pos].i, seq[pos].j))] = k - pos;
  }
  return out;
}

ExceptionalSequence labeled_to_seq(const LabeledDiagram& d) {
  if (!is_good_labeling(d)) throw PreconditionError("chord labelling is not good");
  const int k = d.diagram.size();
  const int n = d.diagram.n_points() - 1;
  ExceptionalSequence seq(k);
  for (int c = 0; c < k; ++c) {
    const Chord& ch = d.diagram.chord(c);
    seq[k - d.labels[c]] = IntervalRep{n, ch.a, ch.b};
  }
  return seq;
}

std::vector<std::pair<int, int>> prufer_decode(std::span<const int> seq, int vertices) {
  if (vertices < 2 || static_cast<int>(seq.size()) != vertices - 2) {
    throw PreconditionError("Pruefer sequence length must be vertices - 2");
  }
  std::vector<int> degree(vertices, 1);
  for (int v : seq) {
    if (v < 0 || v >= vertices) throw PreconditionError("Pruefer entry out of range");
    ++degree[v];
  }
  std::vector<std::pair<int, int>> edges;
  edges.reserve(vertices - 1);
  for (int v : seq) {
    int leaf = 0;
    while (degree[leaf] != 1) ++leaf;
    edges.emplace_back(leaf, v);
    --degree[leaf];
    --degree[v];
  }
  int u = -1;
  for (int x = 0; x < vertices; ++x) {
    if (degree[x] == 1) {
      if (u < 0) {
        u = x;
      } else {
        edges.emplace_back(u, x);
        break;
      }
    }
  }
  return edges;
}

void for_each_labeled_tree(int vertices,
                           const std::function<void(const std::vector<std::pair<int, int>>&)>& fn) {
  if (vertices < 2) throw PreconditionError("trees need at least two vertices");
  std::vector<int> seq(vertices - 2, 0);
  while (true) {
    fn(prufer_decode(seq, vertices));
    int pos = static_cast<int>(seq.size()) - 1;
    while (pos >= 0 && seq[pos] == vertices - 1) seq[pos--] = 0;
    if (pos < 0) break;
    ++seq[pos];
  }
}

std::vector<ChordDiagram> enumerate_diagrams(int n, int k, int bound) {
  if (n < 1 || k < 1 || k > n) throw PreconditionError("diagrams need 1 <= k <= n");
  require_within_bound(n, bound, "diagram enumeration");
  if (k < n) return enumerate_noncrossing_forests(n, k);

  std::vector<ChordDiagram> out;
  for_each_labeled_tree(n + 1, [&](const std::vector<std::pair<int, int>>& edges) {
    std::vector<Chord> chords;
    for (auto [u, v] : edges) chords.push_back(Chord::make(u, v));
    for (std::size_t x = 0; x < chords.size(); ++x)
      for (std::size_t y = x + 1; y < chords.size(); ++y)
        if (chords_cross(chords[x], chords[y])) return;
    out.emplace_back(n + 1, std::move(chords));
  });
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<ChordDiagram> enumerate_diagrams(int n, int k) {
  return enumerate_diagrams(n, k, search_bound());
}

std::vector<ChordDiagram> enumerate_noncrossing_forests(int n, int k) {
  std::vector<Chord> all;
  for (int a = 0; a <= n; ++a)
    for (int b = a + 1; b <= n; ++b) all.push_back({a, b});

  std::vector<ChordDiagram> out;
  std::vector<Chord> chosen;
  std::vector<int> parent(n + 1);

  std::function<void(std::size_t)> rec = [&](std::size_t from) {
    if (static_cast<int>(chosen.size()) == k) {
      out.emplace_back(n + 1, chosen);
      return;
    }
    for (std::size_t c = from; c < all.size(); ++c) {
      if (static_cast<int>(all.size() - c) < k - static_cast<int>(chosen.size())) break;
      const Chord& ch = all[c];
      if (std::any_of(chosen.begin(), chosen.end(), [&](const Chord& o) { return chords_cross(o, ch); }))
        continue;
      std::iota(parent.begin(), parent.end(), 0);
      for (const auto& o : chosen) parent[find_root(parent, o.a)] = find_root(parent, o.b);
      if (find_root(parent, ch.a) == find_root(parent, ch.b)) continue;
      chosen.push_back(ch);
      rec(c + 1);
      chosen.pop_back();
    }
  };
  rec(0);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<LabeledDiagram> good_labelings(const ChordDiagram& d) {
  // Label 1, 2, ... in turn; a chord may take the next label once every chord
  // counterclockwise from it at both endpoints is already labelled.
  const int k = d.size();
  std::vector<std::vector<int>> at(d.n_points());
  for (int p = 0; p < d.n_points(); ++p) at[p] = chords_at_point(d, p);

  std::vector<int> labels(k, 0);
  std::vector<LabeledDiagram> out;
  auto ready = [&](int c) {
    for (int p : {d.chord(c).a, d.chord(c).b}) {
      for (int other : at[p]) {
        if (other == c) break;
        if (labels[other] == 0) return false;
      }
    }
    return true;
  };
  std::function<void(int)> rec = [&](int next) {
    if (next > k) {
      out.push_back({d, labels});
      return;
    }
    for (int c = 0; c < k; ++c) {
      if (labels[c] != 0 || !ready(c)) continue;
      labels[c] = next;
      rec(next + 1);
      labels[c] = 0;
    }
  };
  rec(1);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace ceswb
