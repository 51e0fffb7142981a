#include "ceswb/verify.hpp"

#include <algorithm>
#include <exception>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <sstream>

#include "ceswb/cmatdiag.hpp"
#include "ceswb/error.hpp"
#include "ceswb/ncpart.hpp"
#include "ceswb/posets.hpp"

namespace ceswb {

namespace {

std::uint64_t cayley(int n) {
  std::uint64_t v = 1;
  for (int e = 0; e < n - 1; ++e) v *= static_cast<std::uint64_t>(n + 1);
  return v;
}

std::uint64_t catalan(int m) {
  std::uint64_t c = 1;
  for (int i = 0; i < m; ++i) c = c * 2 * (2 * i + 1) / (i + 2);
  return c;
}

CMatrix negative_identity(int n) {
  CMatrix c;
  for (int i = 0; i < n; ++i) {
    IntVector row(n, 0);
    row[i] = -1;
    c.rows.push_back(row);
  }
  return canonical_cmatrix(c);
}

struct Context {
  const VerifyOptions& opts;
  std::optional<ExchangeGraph> graph_;
  const ExchangeGraph& graph() {
    if (!graph_) graph_ = explore_exchange_graph(opts.n, opts.bound, opts.jobs);
    return *graph_;
  }
};

using Gate = std::function<std::string(Context&, bool corrupt)>;  // empty string = pass

std::string commuting_square(Context& ctx, bool corrupt) {
  std::size_t checked = 0;
  for (const auto& seed : ctx.graph().seeds) {
    const OrientedDiagram d = diagram_of_cmatrix(c_matrix_of(seed.matrix));
    for (int k = 0; k < ctx.opts.n; ++k) {
      OrientedDiagram expected = diagram_of_cmatrix(c_matrix_of(mutate(seed.matrix, k)));
      if (corrupt && checked == 0) expected.chords[0] = expected.chords[0].reversed();
      if (mutate_diagram(d, seed.matrix, k) != expected) {
        std::ostringstream os;
        os << "mismatch at seed with history size " << seed.history.size() << ", k=" << k + 1;
        return os.str();
      }
      ++checked;
    }
  }
  return {};
}

std::string classification(Context& ctx, bool corrupt) {
  std::set<std::vector<OrientedChord>> from_bfs;
  for (const auto& c : ctx.graph().cmatrices) from_bfs.insert(diagram_of_cmatrix(c).sorted_chords());
  const auto predicate = enumerate_cmatrix_diagrams(ctx.opts.n, ctx.opts.bound);
  std::set<std::vector<OrientedChord>> from_pred(predicate.begin(), predicate.end());
  if (corrupt) from_pred.erase(from_pred.begin());
  if (from_bfs != from_pred) {
    return "BFS gives " + std::to_string(from_bfs.size()) + " diagrams, predicate gives " +
           std::to_string(from_pred.size());
  }
  if (from_bfs.size() != catalan(ctx.opts.n + 1)) return "c-matrix count is not a Catalan number";
  return {};
}

std::string chi_bijection(Context& ctx, bool corrupt) {
  for (const auto& d : enumerate_diagrams(ctx.opts.n, ctx.opts.n, ctx.opts.bound)) {
    const FinitePoset p = poset_of_diagram(d).poset;
    const auto ext = linear_extensions(p);
    std::uint64_t expected = count_linear_extensions(p) + (corrupt ? 1 : 0);
    if (ext.size() != expected) return "extension enumeration disagrees with the downset count";
    std::vector<std::vector<int>> good;
    for (const auto& ld : good_labelings(d)) good.push_back(ld.labels);
    if (good != ext) return "good labellings differ from linear extensions";
    const auto seqs = ces_set_of_collection(collection_of_diagram(d));
    if (seqs.size() != ext.size()) return "CES set size differs from extension count";
    std::set<ExceptionalSequence> distinct(seqs.begin(), seqs.end());
    if (distinct.size() != seqs.size()) return "repeated CES";
    for (const auto& s : seqs) {
      if (!is_exceptional_sequence(s)) return "non-exceptional member " + to_string(s);
      if (araya_map(s) != d) return "member lies over a different collection";
    }
  }
  return {};
}

std::string cayley_identity(Context& ctx, bool corrupt) {
  const int n = ctx.opts.n;
  std::uint64_t by_ext = 0, by_labels = 0;
  for (const auto& d : enumerate_diagrams(n, n, ctx.opts.bound)) {
    by_ext += count_linear_extensions(poset_of_diagram(d).poset);
    by_labels += good_labelings(d).size();
  }
  const std::uint64_t chains = count_maximal_nc_chains(n, ctx.opts.bound);
  const std::uint64_t expected = cayley(n) + (corrupt ? 1 : 0);
  if (by_ext != expected || by_labels != expected || chains != expected) {
    std::ostringstream os;
    os << "extensions " << by_ext << ", labelled diagrams " << by_labels << ", chains " << chains << ", expected "
       << expected;
    return os.str();
  }
  return {};
}

std::string nc_roundtrip(Context& ctx, bool corrupt) {
  const int n = ctx.opts.n;
  for (int k = 1; k <= n; ++k) {
    std::set<NCChain> images;
    for (const auto& d : enumerate_diagrams(n, k, ctx.opts.bound)) {
      for (const auto& ld : good_labelings(d)) {
        const NCChain ch = chain_of_labeled_diagram(ld);
        if (!is_saturated_nc_chain(ch)) return "f produced an invalid chain";
        if (labeled_diagram_of_chain(ch) != ld) return "g o f differs from the identity at k=" + std::to_string(k);
        images.insert(ch);
      }
    }
    auto chains = enumerate_nc_chains(n, k, ctx.opts.bound);
    if (corrupt && k == n) chains.pop_back();
    for (const auto& ch : chains)
      if (chain_of_labeled_diagram(labeled_diagram_of_chain(ch)) != ch)
        return "f o g differs from the identity at k=" + std::to_string(k);
    if (std::set<NCChain>(chains.begin(), chains.end()) != images)
      return "f is not onto the chains of length " + std::to_string(k);
  }
  return {};
}

std::string tree_distribution(Context& ctx, bool corrupt) {
  auto trees = tree_leaf_distribution(ctx.opts.n, ctx.opts.bound);
  const auto diagrams = diagram_leaf_distribution(ctx.opts.n, ctx.opts.bound);
  if (corrupt) trees.begin()->second += 1;
  if (trees != diagrams) {
    std::ostringstream os;
    for (auto [r, c] : trees) os << " T(" << r << ")=" << c << " vs " << (diagrams.count(r) ? diagrams.at(r) : 0);
    return "leaf distributions differ:" + os.str();
  }
  return {};
}

std::string shared_endpoint(Context& ctx, bool corrupt) {
  for (const auto& seed : ctx.graph().seeds) {
    const OrientedDiagram d = diagram_of_cmatrix(c_matrix_of(seed.matrix));
    for (int k = 0; k < ctx.opts.n; ++k)
      for (int j = 0; j < ctx.opts.n; ++j) {
        const bool linked = seed.matrix.at(k, j) != 0 || (corrupt && k != j);
        if (linked && !d.chords[k].chord().shares_endpoint(d.chords[j].chord()))
          return "rows " + std::to_string(k + 1) + " and " + std::to_string(j + 1) + " are linked but disjoint";
      }
  }
  return {};
}

std::string sign_coherence(Context& ctx, bool corrupt) {
  const auto& g = ctx.graph();
  for (const auto& seed : g.seeds) {
    CMatrix c = c_matrix_of(seed.matrix);
    if (corrupt) c.rows[0][0] = 2;
    if (!has_interval_rows(c)) return "a c-vector is not +/- an interval dimension vector";
    if (!check_mutation_class_shape(seed.matrix)) return "a seed fails the mutation-class shape test";
  }
  return {};
}

std::string reddening(Context& ctx, bool corrupt) {
  const int n = ctx.opts.n;
  CMatrix target = negative_identity(n);
  if (corrupt) target.rows[0][0] = 1;
  std::size_t all_red = 0;
  for (const auto& seed : ctx.graph().seeds) {
    if (static_cast<int>(red_vertices(seed.matrix).size()) != n) continue;
    ++all_red;
    if (canonical_cmatrix(c_matrix_of(seed.matrix)) != target) return "an all-red seed has C != -I";
  }
  if (all_red != 1) return "expected exactly one all-red seed class, found " + std::to_string(all_red);
  const std::vector<int> s1{1, 0}, s2{0, 1, 0}, s3{0, 1};
  if (!is_reddening(s1, 2) || !is_reddening(s2, 2) || is_reddening(s3, 2)) return "A2 reddening fixtures fail";
  return {};
}

std::string witness(Context& ctx, bool corrupt) {
  for (const auto& c : ctx.graph().cmatrices) {
    ExceptionalSequence w = st_witness(c);
    if (corrupt) std::reverse(w.begin(), w.end());
    if (!is_exceptional_sequence(w)) return "witness is not exceptional";
    std::map<IntervalRep, bool> positive;
    for (const auto& row : c.rows) positive[rep_from_dim([&] {
      IntVector m(row);
      for (auto& v : m) v = v < 0 ? -v : v;
      return m;
    }())] = row_sign(row) == Sign::positive;
    bool seen_positive = false;
    for (const auto& v : w) {
      if (!positive.count(v)) return "witness uses a module outside the c-matrix";
      if (positive[v]) seen_positive = true;
      else if (seen_positive) return "a negative row follows a positive row";
    }
    for (const auto& v : w)
      for (const auto& u : w)
        if (!(u == v) && positive[u] == positive[v] && hom_dim(u, v) != 0) return "same-sign Hom does not vanish";
  }
  return {};
}

std::string realization(Context& ctx, bool corrupt) {
  for (const auto& d : enumerate_diagrams(ctx.opts.n, ctx.opts.n, ctx.opts.bound)) {
    const FinitePoset p = poset_of_diagram(d).poset;
    if (!satisfies_poset_conditions(p)) return "a diagram poset fails the recognition conditions";
    if (p.size() > 9) continue;
    FinitePoset q = poset_of_diagram(realize_poset(p)).poset;
    if (corrupt) q = FinitePoset::from_relations(q.size(), {});
    if (!posets_isomorphic(p, q)) return "realization is not isomorphic to the source poset";
  }
  return {};
}

const std::vector<std::pair<std::string, Gate>>& gates() {
  static const std::vector<std::pair<std::string, Gate>> all{
      {"commuting-square", commuting_square}, {"classification", classification},
      {"chi-bijection", chi_bijection},       {"cayley", cayley_identity},
      {"nc-roundtrip", nc_roundtrip},         {"tree-distribution", tree_distribution},
      {"shared-endpoint", shared_endpoint},   {"sign-coherence", sign_coherence},
      {"reddening", reddening},               {"st-witness", witness},
      {"poset-realization", realization},
  };
  return all;
}

}  // namespace

const std::vector<std::string>& gate_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& [name, g] : gates()) out.push_back(name);
    return out;
  }();
  return names;
}

std::vector<GateResult> run_verification(const VerifyOptions& opts) {
  if (opts.n < 1) throw PreconditionError("n must be positive");
  require_within_bound(opts.n, opts.bound, "verification");
  if (!opts.corrupt_gate.empty() &&
      std::find(gate_names().begin(), gate_names().end(), opts.corrupt_gate) == gate_names().end())
    throw PreconditionError("unknown gate '" + opts.corrupt_gate + "'");
  Context ctx{opts, std::nullopt};
  std::vector<GateResult> out;
  for (const auto& [name, gate] : gates()) {
    GateResult r{name, false, {}};
    try {
      r.detail = gate(ctx, name == opts.corrupt_gate);
      r.passed = r.detail.empty();
    } catch (const std::exception& e) {
      r.detail = std::string("exception: ") + e.what();
    }
    out.push_back(std::move(r));
  }
  return out;
}

}  // namespace ceswb
