#include "ceswb/ncpart.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

#include "ceswb/error.hpp"
#include "ceswb/posets.hpp"

namespace ceswb {

NCPartition::NCPartition(std::vector<int> raw) {
  std::map<int, int> relabel;
  block_of_.reserve(raw.size());
  for (int id : raw) {
    auto [it, fresh] = relabel.emplace(id, static_cast<int>(relabel.size()));
    block_of_.push_back(it->second);
  }
}

NCPartition NCPartition::singletons(int size) {
  if (size < 1) throw PreconditionError("partition ground set must be nonempty");
  std::vector<int> raw(size);
  for (int x = 0; x < size; ++x) raw[x] = x;
  return NCPartition(std::move(raw));
}

NCPartition NCPartition::from_blocks(int size, const std::vector<std::vector<int>>& blocks) {
  if (size < 1) throw PreconditionError("partition ground set must be nonempty");
  std::vector<int> raw(size, -1);
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    if (blocks[b].empty()) throw PreconditionError("partition blocks must be nonempty");
    for (int e : blocks[b]) {
      if (e < 1 || e > size || raw[e - 1] != -1) throw PreconditionError("blocks must partition [1, size]");
      raw[e - 1] = static_cast<int>(b);
    }
  }
  if (std::count(raw.begin(), raw.end(), -1) != 0) throw PreconditionError("blocks must cover [1, size]");
  return NCPartition(std::move(raw));
}

int NCPartition::num_blocks() const {
  return block_of_.empty() ? 0 : *std::max_element(block_of_.begin(), block_of_.end()) + 1;
}

std::vector<std::vector<int>> NCPartition::blocks() const {
  std::vector<std::vector<int>> out(num_blocks());
  for (int e = 1; e <= size(); ++e) out[block(e)].push_back(e);
  return out;
}

NCPartition NCPartition::merged(int x, int y) const {
  if (x < 1 || y < 1 || x > size() || y > size()) throw PreconditionError("element out of range");
  const int bx = block(x), by = block(y);
  if (bx == by) throw PreconditionError("elements already share a block");
  std::vector<int> raw = block_of_;
  for (int& id : raw)
    if (id == by) id = bx;
  return NCPartition(std::move(raw));
}

bool is_noncrossing(const NCPartition& p) {
  const int m = p.size();
  for (int a = 1; a <= m; ++a)
    for (int b = a + 1; b <= m; ++b) {
      if (p.block(a) == p.block(b)) continue;
      for (int c = b + 1; c <= m; ++c) {
        if (p.block(c) != p.block(a)) continue;
        for (int d = c + 1; d <= m; ++d)
          if (p.block(d) == p.block(b)) return false;
      }
    }
  return true;
}

bool is_saturated_nc_chain(const NCChain& chain) {
  if (chain.empty() || chain.front() != NCPartition::singletons(chain.front().size())) return false;
  for (std::size_t s = 0; s < chain.size(); ++s) {
    if (!is_noncrossing(chain[s])) return false;
    if (s == 0) continue;
    const NCPartition& prev = chain[s - 1];
    const NCPartition& next = chain[s];
    if (next.size() != prev.size() || next.num_blocks() != prev.num_blocks() - 1) return false;
    // Coarsening check: every block of prev lies inside a block of next.
    for (int e = 2; e <= prev.size(); ++e)
      for (int f = 1; f < e; ++f)
        if (prev.block(e) == prev.block(f) && next.block(e) != next.block(f)) return false;
  }
  return true;
}

NCChain chain_of_labeled_diagram(const LabeledDiagram& d) {
  if (!is_good_labeling(d)) throw PreconditionError("chord labelling is not good");
  const int k = d.diagram.size();
  std::vector<int> by_label(k);
  for (int c = 0; c < k; ++c) by_label[d.labels[c] - 1] = c;
  NCChain chain{NCPartition::singletons(d.diagram.n_points())};
  for (int c : by_label) {
    const Chord& ch = d.diagram.chord(c);
    chain.push_back(chain.back().merged(ch.a + 1, ch.b + 1));
    if (!is_noncrossing(chain.back())) throw std::logic_error("good labelling produced a crossing partition");
  }
  return chain;
}

LabeledDiagram labeled_diagram_of_chain(const NCChain& chain) {
  if (!is_saturated_nc_chain(chain)) throw PreconditionError("not a saturated chain of noncrossing partitions");
  const int m = chain.front().size();
  std::vector<std::pair<Chord, int>> labelled;
  for (std::size_t s = 1; s < chain.size(); ++s) {
    const NCPartition& prev = chain[s - 1];
    const NCPartition& next = chain[s];
    int b1 = -1, b2 = -1;
    for (int e = 1; e <= m && b2 < 0; ++e)
      for (int f = 1; f < e; ++f)
        if (prev.block(e) != prev.block(f) && next.block(e) == next.block(f)) {
          b1 = prev.block(f);
          b2 = prev.block(e);
          break;
        }
    std::vector<int> uni;
    for (int e = 1; e <= m; ++e)
      if (prev.block(e) == b1 || prev.block(e) == b2) uni.push_back(e);
    int end1 = -1, end2 = -1;
    for (std::size_t x = 0; x < uni.size(); ++x) {
      const int e = uni[x], succ = uni[(x + 1) % uni.size()];
      if (prev.block(e) == b1 && prev.block(succ) == b2) end1 = e;
      if (prev.block(e) == b2 && prev.block(succ) == b1) end2 = e;
    }
    labelled.emplace_back(Chord::make(end1 - 1, end2 - 1), static_cast<int>(s));
  }
  std::vector<Chord> chords;
  for (const auto& [c, l] : labelled) chords.push_back(c);
  LabeledDiagram out{ChordDiagram(m, std::move(chords)), {}};
  out.labels.assign(out.diagram.size(), 0);
  for (const auto& [c, l] : labelled) out.labels[out.diagram.find(c)] = l;
  return out;
}

namespace {

std::vector<NCPartition> noncrossing_covers(const NCPartition& p) {
  std::vector<NCPartition> out;
  const auto blocks = p.blocks();
  for (std::size_t x = 0; x < blocks.size(); ++x)
    for (std::size_t y = x + 1; y < blocks.size(); ++y) {
      NCPartition q = p.merged(blocks[x].front(), blocks[y].front());
      if (is_noncrossing(q)) out.push_back(std::move(q));
    }
  return out;
}

}  // namespace

std::vector<NCChain> enumerate_nc_chains(int n, int k, int bound) {
  if (n < 1 || k < 0 || k > n) throw PreconditionError("chains need 0 <= k <= n");
  require_within_bound(n, bound, "noncrossing chain enumeration");
  std::vector<NCChain> out;
  NCChain chain{NCPartition::singletons(n + 1)};
  std::function<void()> rec = [&] {
    if (static_cast<int>(chain.size()) == k + 1) {
      out.push_back(chain);
      return;
    }
    for (auto& q : noncrossing_covers(chain.back())) {
      chain.push_back(std::move(q));
      rec();
      chain.pop_back();
    }
  };
  rec();
  std::sort(out.begin(), out.end());
  return out;
}

std::uint64_t count_maximal_nc_chains(int n, int bound) {
  if (n < 1) throw PreconditionError("n must be positive");
  require_within_bound(n, bound, "noncrossing chain counting");
  std::map<NCPartition, std::uint64_t> memo;
  std::function<std::uint64_t(const NCPartition&)> count = [&](const NCPartition& p) -> std::uint64_t {
    if (p.num_blocks() == 1) return 1;
    if (auto it = memo.find(p); it != memo.end()) return it->second;
    std::uint64_t total = 0;
    for (const auto& q : noncrossing_covers(p)) total += count(q);
    memo.emplace(p, total);
    return total;
  };
  return count(NCPartition::singletons(n + 1));
}

std::map<int, std::uint64_t> tree_leaf_distribution(int n, int bound) {
  if (n < 1) throw PreconditionError("n must be positive");
  require_within_bound(n, bound, "tree enumeration");
  std::map<int, std::uint64_t> out;
  for_each_labeled_tree(n + 1, [&](const std::vector<std::pair<int, int>>& edges) {
    std::vector<int> degree(n + 1, 0);
    for (auto [u, v] : edges) {
      ++degree[u];
      ++degree[v];
    }
    ++out[static_cast<int>(std::count(degree.begin(), degree.end(), 1))];
  });
  return out;
}

std::map<int, std::uint64_t> diagram_leaf_distribution(int n, int bound) {
  std::map<int, std::uint64_t> out;
  for (const auto& d : enumerate_diagrams(n, n, bound)) {
    int r = 0;
    for (int i = 0; i <= n; ++i)
      if (d.find(Chord::make(i, (i + 1) % (n + 1))) >= 0) ++r;
    out[r] += count_linear_extensions(poset_of_diagram(d).poset);
  }
  return out;
}

}  // namespace ceswb
