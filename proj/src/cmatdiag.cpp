#include "ceswb/cmatdiag.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "ceswb/error.hpp"

namespace ceswb {

ChordDiagram OrientedDiagram::underlying() const {
  std::vector<Chord> cs;
  cs.reserve(chords.size());
  for (const auto& c : chords) cs.push_back(c.chord());
  return ChordDiagram(n_points, std::move(cs));
}

std::vector<OrientedChord> OrientedDiagram::sorted_chords() const {
  std::vector<OrientedChord> out = chords;
  std::sort(out.begin(), out.end(), [](const OrientedChord& x, const OrientedChord& y) {
    return std::pair(x.chord(), x.tail) < std::pair(y.chord(), y.tail);
  });
  return out;
}

OrientedDiagram diagram_of_cmatrix(const CMatrix& c) {
  const int n = c.size();
  OrientedDiagram d{n + 1, {}};
  for (const auto& row : c.rows) {
    if (static_cast<int>(row.size()) != n) throw PreconditionError("c-matrix must be square");
    const Sign s = row_sign(row);
    IntVector mag(row.size());
    std::transform(row.begin(), row.end(), mag.begin(), [](auto v) { return v < 0 ? -v : v; });
    const IntervalRep x = rep_from_dim(mag);
    d.chords.push_back(s == Sign::positive ? OrientedChord{x.i, x.j} : OrientedChord{x.j, x.i});
  }
  return d;
}

CMatrix cmatrix_of_diagram(const OrientedDiagram& d) {
  const int n = d.n_points - 1;
  CMatrix c;
  for (const auto& oc : d.chords) {
    const Chord ch = oc.chord();
    if (ch.a < 0 || ch.b > n) throw PreconditionError("chord leaves the disk");
    IntVector row = dim_vector(IntervalRep{n, ch.a, ch.b});
    if (!oc.positive())
      for (auto& v : row) v = -v;
    c.rows.push_back(std::move(row));
  }
  return c;
}

char to_char(RewriteCase c) {
  switch (c) {
    case RewriteCase::a: return 'a';
    case RewriteCase::b: return 'b';
    case RewriteCase::c: return 'c';
    case RewriteCase::d: return 'd';
  }
  return '?';
}

DiagramMutation mutate_diagram_traced(const OrientedDiagram& d, const ExchangeMatrix& b, int k) {
  if (k < 0 || k >= b.n_mutable()) throw PreconditionError("mutation index out of range");
  if (!(d == diagram_of_cmatrix(c_matrix_of(b)))) {
    throw PreconditionError("oriented diagram does not match the exchange matrix's c-matrix");
  }
  const OrientedChord ck = d.chords[k];
  const Chord kk = ck.chord();
  const int sign_k = ck.positive() ? 1 : -1;

  DiagramMutation out{d, {}};
  for (int j = 0; j < d.size(); ++j) {
    if (j == k) continue;
    const std::int64_t bkj = b.at(k, j);
    if (bkj == 0 || (bkj > 0 ? 1 : -1) == sign_k) continue;
    // c_j + c_k telescopes into a single chord through the shared endpoint.
    const OrientedChord cj = d.chords[j];
    OrientedChord next;
    if (cj.head == ck.tail) {
      next = {cj.tail, ck.head};
    } else if (ck.head == cj.tail) {
      next = {ck.tail, cj.head};
    } else {
      throw PreconditionError("chords " + std::to_string(k + 1) + " and " + std::to_string(j + 1) +
                              " do not compose head to tail");
    }
    const Chord jj = cj.chord();
    RewriteCase which;
    if (kk.a == jj.a) which = RewriteCase::a;
    else if (kk.b == jj.b) which = RewriteCase::b;
    else if (kk.b == jj.a) which = RewriteCase::c;
    else which = RewriteCase::d;
    out.result.chords[j] = next;
    out.rewrites.push_back({j, which, cj, next});
  }
  out.result.chords[k] = ck.reversed();
  return out;
}

OrientedDiagram mutate_diagram(const OrientedDiagram& d, const ExchangeMatrix& b, int k) {
  return mutate_diagram_traced(d, b, k).result;
}

std::vector<int> in_neighbors(const OrientedDiagram& d, int p) {
  std::vector<int> out;
  for (const auto& c : d.chords)
    if (c.head == p) out.push_back(c.tail);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<int> out_neighbors(const OrientedDiagram& d, int p) {
  std::vector<int> out;
  for (const auto& c : d.chords)
    if (c.tail == p) out.push_back(c.head);
  std::sort(out.begin(), out.end());
  return out;
}

bool is_weakly_separated(const OrientedDiagram& d, int p) {
  std::vector<std::pair<int, bool>> nb;  // (neighbour, incoming)
  for (const auto& c : d.chords) {
    if (c.head == p) nb.emplace_back(c.tail, true);
    if (c.tail == p) nb.emplace_back(c.head, false);
  }
  std::sort(nb.begin(), nb.end());
  int runs = 0;
  for (std::size_t x = 0; x < nb.size(); ++x) {
    if (nb[x].second && (x == 0 || !nb[x - 1].second)) ++runs;
  }
  return runs <= 1;
}

bool pair_admissible(const OrientedChord& x, const OrientedChord& y) {
  const Chord cx = x.chord(), cy = y.chord();
  if (cx == cy) throw PreconditionError("pair_admissible needs two distinct chords");
  if (chords_cross(cx, cy)) throw PreconditionError("pair_admissible needs noncrossing chords");
  if (!cx.shares_endpoint(cy)) return true;

  if (cx.a == cy.a) {
    const OrientedChord& shorter = cx.b < cy.b ? x : y;
    const OrientedChord& longer = cx.b < cy.b ? y : x;
    return !shorter.positive() && longer.positive();
  }
  if (cx.b == cy.b) {
    const OrientedChord& shorter = cx.a > cy.a ? x : y;
    const OrientedChord& longer = cx.a > cy.a ? y : x;
    return shorter.positive() && !longer.positive();
  }
  // Shared point is the right end of one chord and the left end of the other.
  const OrientedChord& left = cx.b == cy.a ? x : y;
  const OrientedChord& right = cx.b == cy.a ? y : x;
  return !(!left.positive() && right.positive());
}

bool is_cmatrix_diagram(const OrientedDiagram& d) {
  if (d.size() != d.n_points - 1) {
    throw PreconditionError("classification needs a spanning diagram (n chords on n+1 points)");
  }
  (void)d.underlying();
  for (int p = 0; p < d.n_points; ++p)
    if (!is_weakly_separated(d, p)) return false;
  for (int x = 0; x < d.size(); ++x)
    for (int y = x + 1; y < d.size(); ++y)
      if (!pair_admissible(d.chords[x], d.chords[y])) return false;
  return true;
}

std::vector<std::vector<OrientedChord>> enumerate_cmatrix_diagrams(int n, int bound) {
  std::set<std::vector<OrientedChord>> found;
  for (const auto& diag : enumerate_diagrams(n, n, bound)) {
    const int k = diag.size();
    for (unsigned mask = 0; mask < (1u << k); ++mask) {
      OrientedDiagram od{diag.n_points(), {}};
      for (int c = 0; c < k; ++c) {
        const Chord& ch = diag.chord(c);
        od.chords.push_back((mask >> c) & 1u ? OrientedChord{ch.b, ch.a} : OrientedChord{ch.a, ch.b});
      }
      if (is_cmatrix_diagram(od)) found.insert(od.sorted_chords());
    }
  }
  return {found.begin(), found.end()};
}

std::vector<ChordDiagram> unreachable_diagrams(int n, int bound) {
  std::set<ChordDiagram> reachable;
  for (const auto& chords : enumerate_cmatrix_diagrams(n, bound)) {
    reachable.insert(OrientedDiagram{n + 1, chords}.underlying());
  }
  std::vector<ChordDiagram> out;
  for (const auto& diag : enumerate_diagrams(n, n, bound))
    if (!reachable.count(diag)) out.push_back(diag);
  return out;
}

ExceptionalSequence st_witness(const OrientedDiagram& d) {
  if (!is_cmatrix_diagram(d)) throw PreconditionError("diagram is not the diagram of a c-matrix");
  const ChordDiagram under = d.underlying();
  const int k = under.size();
  std::vector<bool> positive(k);
  for (const auto& oc : d.chords) positive[under.find(oc.chord())] = oc.positive();

  std::vector<std::vector<int>> at(under.n_points());
  for (int p = 0; p < under.n_points(); ++p) at[p] = chords_at_point(under, p);

  std::vector<int> labels(k, 0);
  // A chord is ready once every chord counterclockwise from it at both of its
  // endpoints has been labelled.
  auto ready = [&](int c) {
    for (int p : {under.chord(c).a, under.chord(c).b}) {
      for (int other : at[p]) {
        if (other == c) break;
        if (labels[other] == 0) return false;
      }
    }
    return true;
  };
  auto tail_head = [&](int c) {
    const Chord& ch = under.chord(c);
    return positive[c] ? std::pair(ch.a, ch.b) : std::pair(ch.b, ch.a);
  };

  int next = 1;
  for (bool phase_positive : {true, false}) {
    while (true) {
      int pick = -1;
      bool remaining = false;
      for (int c = 0; c < k; ++c) {
        if (labels[c] != 0 || positive[c] != phase_positive) continue;
        remaining = true;
        if (!ready(c)) continue;
        if (pick < 0 || tail_head(c) < tail_head(pick)) pick = c;
      }
      if (!remaining) break;
      if (pick < 0) throw PreconditionError("no positives-first good labelling exists");
      labels[pick] = next++;
    }
  }
  return labeled_to_seq(LabeledDiagram{under, labels});
}

ExceptionalSequence st_witness(const CMatrix& c) { return st_witness(diagram_of_cmatrix(c)); }

}  // namespace ceswb
