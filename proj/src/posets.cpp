#include "ceswb/posets.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <map>
#include <numeric>
#include <sstream>
#include <unordered_map>

#include "ceswb/cmatdiag.hpp"
#include "ceswb/error.hpp"

namespace ceswb {

FinitePoset FinitePoset::from_relations(int size, const std::vector<std::pair<int, int>>& relations) {
  if (size < 0 || size > 64) throw PreconditionError("poset size must lie in [0, 64]");
  FinitePoset p;
  p.size_ = size;
  p.below_.assign(size, 0);
  for (auto [lo, hi] : relations) {
    if (lo < 0 || hi < 0 || lo >= size || hi >= size) throw PreconditionError("relation out of range");
    if (lo == hi) throw PreconditionError("a strict relation cannot relate an element to itself");
    p.below_[hi] |= std::uint64_t{1} << lo;
  }
  bool changed = true;
  while (changed) {
    changed = false;
    for (int y = 0; y < size; ++y) {
      std::uint64_t acc = p.below_[y];
      for (int x = 0; x < size; ++x)
        if (p.below_[y] >> x & 1u) acc |= p.below_[x];
      if (acc != p.below_[y]) {
        p.below_[y] = acc;
        changed = true;
      }
    }
  }
  for (int x = 0; x < size; ++x)
    if (p.below_[x] >> x & 1u) throw PreconditionError("relations contain a cycle");
  for (int y = 0; y < size; ++y) {
    for (int x = 0; x < size; ++x) {
      if (!(p.below_[y] >> x & 1u)) continue;
      bool between = false;
      for (int z = 0; z < size && !between; ++z)
        between = (p.below_[y] >> z & 1u) && (p.below_[z] >> x & 1u);
      if (!between) p.covers_.emplace_back(x, y);
    }
  }
  std::sort(p.covers_.begin(), p.covers_.end());
  return p;
}

std::vector<int> FinitePoset::upper_covers(int x) const {
  std::vector<int> out;
  for (auto [lo, hi] : covers_)
    if (lo == x) out.push_back(hi);
  return out;
}

std::vector<int> FinitePoset::lower_covers(int x) const {
  std::vector<int> out;
  for (auto [lo, hi] : covers_)
    if (hi == x) out.push_back(lo);
  return out;
}

DiagramPoset poset_of_diagram(const ChordDiagram& d) {
  std::vector<std::pair<int, int>> rel;
  for (int p = 0; p < d.n_points(); ++p) {
    auto at = chords_at_point(d, p);
    for (std::size_t x = 1; x < at.size(); ++x) rel.emplace_back(at[x - 1], at[x]);
  }
  return {d, FinitePoset::from_relations(d.size(), rel)};
}

std::uint64_t count_linear_extensions(const FinitePoset& p) {
  if (p.size() > 24) throw BoundExceededError("linear extension counting is limited to 24 elements");
  const int k = p.size();
  const std::uint64_t full = k == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << k) - 1;
  std::unordered_map<std::uint64_t, std::uint64_t> layer{{0, 1}};
  for (int step = 0; step < k; ++step) {
    std::unordered_map<std::uint64_t, std::uint64_t> next;
    for (auto [mask, ways] : layer) {
      for (int x = 0; x < k; ++x) {
        if (mask >> x & 1u) continue;
        if ((p.strictly_below(x) & ~mask) != 0) continue;
        next[mask | (std::uint64_t{1} << x)] = checked::add(
            static_cast<std::int64_t>(next[mask | (std::uint64_t{1} << x)]), static_cast<std::int64_t>(ways));
      }
    }
    layer = std::move(next);
  }
  auto it = layer.find(full);
  return it == layer.end() ? 0 : it->second;
}

std::vector<std::vector<int>> linear_extensions(const FinitePoset& p) {
  const int k = p.size();
  std::vector<std::vector<int>> out;
  std::vector<int> f(k, 0);
  std::uint64_t placed = 0;
  std::function<void(int)> rec = [&](int label) {
    if (label > k) {
      out.push_back(f);
      return;
    }
    for (int x = 0; x < k; ++x) {
      if (placed >> x & 1u) continue;
      if ((p.strictly_below(x) & ~placed) != 0) continue;
      f[x] = label;
      placed |= std::uint64_t{1} << x;
      rec(label + 1);
      placed &= ~(std::uint64_t{1} << x);
      f[x] = 0;
    }
  };
  rec(1);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<ExceptionalSequence> ces_set_of_collection(const std::vector<IntervalRep>& collection) {
  ChordDiagram d = araya_map(collection);
  if (!d.is_spanning()) throw PreconditionError("collection is not complete");
  DiagramPoset dp = poset_of_diagram(d);
  std::vector<ExceptionalSequence> out;
  for (const auto& f : linear_extensions(dp.poset)) out.push_back(labeled_to_seq(LabeledDiagram{d, f}));
  return out;
}

std::string cycle_notation(const Permutation& sigma) {
  const int n = static_cast<int>(sigma.size());
  std::vector<bool> seen(n, false);
  std::ostringstream os;
  const bool wide = n >= 10;
  for (int start = 1; start <= n; ++start) {
    if (seen[start - 1] || sigma[start - 1] == start) continue;
    os << '(';
    int x = start;
    bool first = true;
    while (!seen[x - 1]) {
      seen[x - 1] = true;
      if (!first && wide) os << ' ';
      os << x;
      first = false;
      x = sigma[x - 1];
    }
    os << ')';
  }
  std::string s = os.str();
  return s.empty() ? "()" : s;
}

Permutation parse_cycle_notation(const std::string& text, int n) {
  Permutation sigma(n);
  std::iota(sigma.begin(), sigma.end(), 1);
  std::vector<bool> used(n + 1, false);
  std::size_t pos = 0;
  auto fail = [&](const std::string& why) {
    throw PreconditionError("bad cycle notation '" + text + "': " + why);
  };
  while (pos < text.size()) {
    if (std::isspace(static_cast<unsigned char>(text[pos]))) {
      ++pos;
      continue;
    }
    if (text[pos] != '(') fail("expected '('");
    const std::size_t close = text.find(')', pos);
    if (close == std::string::npos) fail("unbalanced parentheses");
    const std::string body = text.substr(pos + 1, close - pos - 1);
    std::vector<int> cyc;
    const bool separated = body.find_first_of(", ") != std::string::npos;
    if (separated) {
      std::string tok;
      std::istringstream is(body);
      while (std::getline(is, tok, body.find(',') != std::string::npos ? ',' : ' ')) {
        tok.erase(std::remove_if(tok.begin(), tok.end(), [](unsigned char ch) { return std::isspace(ch); }),
                  tok.end());
        if (!tok.empty()) cyc.push_back(std::stoi(tok));
      }
    } else {
      for (char ch : body) {
        if (!std::isdigit(static_cast<unsigned char>(ch))) fail("unexpected character");
        cyc.push_back(ch - '0');
      }
    }
    for (int v : cyc) {
      if (v < 1 || v > n || used[v]) fail("entry out of range or repeated");
      used[v] = true;
    }
    for (std::size_t a = 0; a < cyc.size(); ++a) sigma[cyc[a] - 1] = cyc[(a + 1) % cyc.size()];
    pos = close + 1;
  }
  return sigma;
}

Permutation inverse(const Permutation& sigma) {
  Permutation inv(sigma.size());
  for (std::size_t l = 0; l < sigma.size(); ++l) inv[sigma[l] - 1] = static_cast<int>(l) + 1;
  return inv;
}

std::vector<Permutation> permutations_of_cmatrix(const CMatrix& c) {
  const OrientedDiagram od = diagram_of_cmatrix(c);
  if (!is_cmatrix_diagram(od)) throw PreconditionError("matrix fails the c-matrix classification");
  const ChordDiagram d = od.underlying();
  const DiagramPoset dp = poset_of_diagram(d);
  const int n = c.size();
  std::vector<int> element(n);
  for (int l = 0; l < n; ++l) element[l] = d.find(od.chords[l].chord());
  std::vector<Permutation> out;
  for (const auto& f : linear_extensions(dp.poset)) {
    Permutation varsigma(n);
    for (int l = 0; l < n; ++l) varsigma[l] = f[element[l]];
    out.push_back(inverse(varsigma));
  }
  return out;
}

ExceptionalSequence sequence_of_permutation(const CMatrix& c, const Permutation& sigma) {
  const OrientedDiagram od = diagram_of_cmatrix(c);
  const int n = c.size();
  ExceptionalSequence seq;
  for (int pos = n; pos >= 1; --pos) {
    const Chord ch = od.chords[sigma[pos - 1] - 1].chord();
    seq.push_back(IntervalRep{n, ch.a, ch.b});
  }
  return seq;
}

namespace {

int hasse_components(const FinitePoset& p) {
  std::vector<int> parent(p.size());
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> root = [&](int x) { return parent[x] == x ? x : parent[x] = root(parent[x]); };
  int comps = p.size();
  for (auto [lo, hi] : p.covers()) {
    int a = root(lo), b = root(hi);
    if (a != b) {
      parent[a] = b;
      --comps;
    }
  }
  return comps;
}

struct Realization {
  int n_points = 0;
  std::map<int, Chord> chord;  // poset element -> chord
};

void rotate(Realization& r, int shift) {
  for (auto& [x, c] : r.chord) {
    c = Chord::make((c.a + shift) % r.n_points, (c.b + shift) % r.n_points);
  }
}

// Inserts a new marked point immediately after q; it becomes q + 1.
void insert_point_after(Realization& r, int q) {
  auto bump = [q](int e) { return e > q ? e + 1 : e; };
  for (auto& [x, c] : r.chord) c = Chord::make(bump(c.a), bump(c.b));
  ++r.n_points;
}

// Endpoint of y's chord at which y is the clockwise-most chord.
int top_endpoint(const Realization& r, int y) {
  const Chord cy = r.chord.at(y);
  for (int q : {cy.b, cy.a}) {
    const int rank_y = angular_rank(q, cy.other(q), r.n_points);
    bool top = true;
    for (const auto& [x, c] : r.chord) {
      if (x == y || !c.has_endpoint(q)) continue;
      if (angular_rank(q, c.other(q), r.n_points) < rank_y) top = false;
    }
    if (top) return q;
  }
  throw PreconditionError("element has two upper covers inside the realized part");
}

Realization realize(const FinitePoset& p, std::vector<int> elems) {
  std::sort(elems.begin(), elems.end());
  auto in_set = [&](int x) { return std::binary_search(elems.begin(), elems.end(), x); };
  if (elems.size() == 1) return Realization{2, {{elems[0], Chord{0, 1}}}};

  int top = -1;
  for (int x : elems) {
    auto ups = p.upper_covers(x);
    if (std::none_of(ups.begin(), ups.end(), in_set)) {
      top = x;
      break;
    }
  }
  std::vector<int> lower;
  for (int y : p.lower_covers(top))
    if (in_set(y)) lower.push_back(y);

  std::vector<int> rest;
  for (int x : elems)
    if (x != top) rest.push_back(x);

  // Components of the remaining Hasse graph.
  std::map<int, int> comp;
  int ncomp = 0;
  for (int s : rest) {
    if (comp.count(s)) continue;
    std::vector<int> stack{s};
    comp[s] = ncomp;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (auto [lo, hi] : p.covers()) {
        int w = lo == v ? hi : hi == v ? lo : -1;
        if (w < 0 || w == top || !in_set(w) || comp.count(w)) continue;
        comp[w] = ncomp;
        stack.push_back(w);
      }
    }
    ++ncomp;
  }

  if (ncomp == 1 && lower.size() == 1) {
    Realization r = realize(p, rest);
    const int q = top_endpoint(r, lower[0]);
    insert_point_after(r, q);
    r.chord[top] = Chord{q, q + 1};
    return r;
  }
  if (ncomp == 2 && lower.size() == 2) {
    std::vector<int> part[2];
    for (int x : rest) part[comp[x]].push_back(x);
    const int y1 = comp[lower[0]] == 0 ? lower[0] : lower[1];
    const int y2 = comp[lower[0]] == 0 ? lower[1] : lower[0];
    Realization r1 = realize(p, part[0]);
    Realization r2 = realize(p, part[1]);
    const int last1 = r1.n_points - 1;
    rotate(r1, last1 - top_endpoint(r1, y1) + r1.n_points);
    rotate(r2, r2.n_points - 1 - top_endpoint(r2, y2) + r2.n_points);
    Realization out{r1.n_points + r2.n_points, r1.chord};
    for (const auto& [x, c] : r2.chord) out.chord[x] = Chord{c.a + r1.n_points, c.b + r1.n_points};
    out.chord[top] = Chord{last1, out.n_points - 1};
    return out;
  }
  throw PreconditionError("poset violates the realizability conditions");
}

}  // namespace

bool satisfies_poset_conditions(const FinitePoset& p) {
  if (p.size() == 0) return false;
  for (int x = 0; x < p.size(); ++x) {
    if (p.upper_covers(x).size() > 2 || p.lower_covers(x).size() > 2) return false;
  }
  const int comps = hasse_components(p);
  const bool acyclic = static_cast<int>(p.covers().size()) == p.size() - comps;
  return acyclic && comps == 1;
}

ChordDiagram realize_poset(const FinitePoset& p) {
  if (!satisfies_poset_conditions(p)) throw PreconditionError("poset violates the realizability conditions");
  std::vector<int> all(p.size());
  std::iota(all.begin(), all.end(), 0);
  Realization r = realize(p, all);
  std::vector<Chord> chords;
  for (const auto& [x, c] : r.chord) chords.push_back(c);
  return ChordDiagram(r.n_points, std::move(chords));
}

std::vector<std::pair<int, int>> canonical_form(const FinitePoset& p) {
  if (p.size() > 9) throw BoundExceededError("poset canonical form is exhaustive and limited to 9 elements");
  std::vector<int> perm(p.size());
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<std::pair<int, int>> best;
  bool have = false;
  do {
    std::vector<std::pair<int, int>> img;
    for (auto [lo, hi] : p.covers()) img.emplace_back(perm[lo], perm[hi]);
    std::sort(img.begin(), img.end());
    if (!have || img < best) {
      best = std::move(img);
      have = true;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

bool posets_isomorphic(const FinitePoset& x, const FinitePoset& y) {
  return x.size() == y.size() && x.covers().size() == y.covers().size() &&
         canonical_form(x) == canonical_form(y);
}

}  // namespace ceswb
