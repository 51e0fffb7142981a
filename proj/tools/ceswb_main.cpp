// Command-line front end. Vertex indices are 1-based here and 0-based in the library.
#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "ceswb/chords.hpp"
#include "ceswb/cmatdiag.hpp"
#include "ceswb/error.hpp"
#include "ceswb/exchange.hpp"
#include "ceswb/io.hpp"
#include "ceswb/ncpart.hpp"
#include "ceswb/posets.hpp"
#include "ceswb/reptheory.hpp"
#include "ceswb/verify.hpp"

namespace {

using ceswb::io::Json;

struct Config {
  int n = 0;
  std::string seq;
  std::string input;
  std::string output;
  std::string format = "text";
  bool count_only = false;
  int jobs = 1;
  int bound = 0;
  std::string what;
  int k = -1;
  bool realize = false;
  std::string inject_fault;
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::vector<int> parse_seq(const std::string& text, int n) {
  std::vector<int> out;
  if (text.empty()) return out;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(tok, &used);
    } catch (const std::exception&) {
      throw UsageError("bad mutation index '" + tok + "'");
    }
    if (used != tok.size()) throw UsageError("bad mutation index '" + tok + "'");
    if (v < 1 || v > n) throw UsageError("mutation index " + tok + " outside [1, " + std::to_string(n) + "]");
    out.push_back(v - 1);
  }
  return out;
}

Json read_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw UsageError(path + ": " + e.what());
  }
}

void require_n(const Config& cfg) {
  if (cfg.n < 1) throw UsageError("--n must be at least 1");
}

std::string seq_text(const ceswb::ExceptionalSequence& s) { return ceswb::to_string(s); }

// ---------------------------------------------------------------- mutate

std::string cmd_mutate(const Config& cfg) {
  require_n(cfg);
  const auto ks = parse_seq(cfg.seq, cfg.n);
  ceswb::ExchangeMatrix b = ceswb::framed_matrix(cfg.n);
  ceswb::OrientedDiagram d = ceswb::diagram_of_cmatrix(ceswb::c_matrix_of(b));

  std::ostringstream text;
  Json steps = Json::array();
  auto state_text = [&](const ceswb::ExchangeMatrix& m, const ceswb::OrientedDiagram& od) {
    text << "B =\n" << ceswb::io::format_matrix(m) << "C =\n" << ceswb::io::format_cmatrix(ceswb::c_matrix_of(m))
         << "diagram = " << ceswb::io::format_diagram(od) << "\n";
  };
  text << "initial (framed A_" << cfg.n << ")\n";
  state_text(b, d);

  for (std::size_t s = 0; s < ks.size(); ++s) {
    const int k = ks[s];
    const auto traced = ceswb::mutate_diagram_traced(d, b, k);
    b = ceswb::mutate(b, k);
    d = traced.result;
    if (d != ceswb::diagram_of_cmatrix(ceswb::c_matrix_of(b)))
      throw std::logic_error("diagram mutation disagrees with the mutated c-matrix");

    std::vector<bool> touched(cfg.n, false);
    touched[k] = true;
    Json rewrites = Json::array();
    text << "\nstep " << s + 1 << ": mu_" << k + 1 << "\n";
    for (const auto& r : traced.rewrites) {
      touched[r.row] = true;
      text << "  i) row " << r.row + 1 << " case " << ceswb::to_char(r.which) << ": "
           << ceswb::io::format_chord(r.before) << " => " << ceswb::io::format_chord(r.after) << "\n";
      rewrites.push_back(Json{{"row", r.row + 1},
                              {"case", std::string(1, ceswb::to_char(r.which))},
                              {"before", ceswb::io::format_chord(r.before)},
                              {"after", ceswb::io::format_chord(r.after)}});
    }
    if (traced.rewrites.empty()) text << "  i) no chord rewritten\n";
    text << "  ii) row " << k + 1 << " reversed: " << ceswb::io::format_chord(traced.result.chords[k].reversed())
         << " => " << ceswb::io::format_chord(traced.result.chords[k]) << "\n";
    Json unaffected = Json::array();
    for (int j = 0; j < cfg.n; ++j)
      if (!touched[j]) unaffected.push_back(j + 1);
    if (!unaffected.empty()) text << "  unaffected rows: " << unaffected.dump() << "\n";
    state_text(b, d);
    steps.push_back(Json{{"k", k + 1},
                         {"branch_i", !traced.rewrites.empty()},
                         {"branch_ii", true},
                         {"rewrites", rewrites},
                         {"unaffected", unaffected},
                         {"matrix", ceswb::io::to_json(b)},
                         {"cmatrix", ceswb::io::to_json(ceswb::c_matrix_of(b))},
                         {"diagram", ceswb::io::to_json(d)}});
  }

  if (cfg.format == "dot") return ceswb::io::diagram_to_dot(d);
  if (cfg.format == "json") {
    Json seq = Json::array();
    for (int k : ks) seq.push_back(k + 1);
    return Json{{"n", cfg.n},
                {"seq", seq},
                {"steps", steps},
                {"matrix", ceswb::io::to_json(b)},
                {"cmatrix", ceswb::io::to_json(ceswb::c_matrix_of(b))},
                {"diagram", ceswb::io::to_json(d)}}
               .dump(2) +
           "\n";
  }
  return text.str();
}

// ---------------------------------------------------------------- enum

std::string cmd_enum(const Config& cfg) {
  require_n(cfg);
  Json items = Json::array();
  std::vector<std::string> lines;
  std::uint64_t count = 0;
  const bool listing = !cfg.count_only;

  if (cfg.what == "ces") {
    for (const auto& d : ceswb::enumerate_diagrams(cfg.n, cfg.n, cfg.bound)) {
      if (!listing) {
        count += ceswb::count_linear_extensions(ceswb::poset_of_diagram(d).poset);
        continue;
      }
      for (const auto& ld : ceswb::good_labelings(d)) {
        const auto s = ceswb::labeled_to_seq(ld);
        items.push_back(ceswb::io::to_json(s));
        lines.push_back(seq_text(s));
        ++count;
      }
    }
  } else if (cfg.what == "cmatrices") {
    for (const auto& c : ceswb::explore_exchange_graph(cfg.n, cfg.bound, cfg.jobs).cmatrices) {
      ++count;
      if (!listing) continue;
      items.push_back(ceswb::io::to_json(c));
      lines.push_back(ceswb::io::format_cmatrix(c));
    }
  } else if (cfg.what == "diagrams") {
    const int k = cfg.k < 0 ? cfg.n : cfg.k;
    for (const auto& d : ceswb::enumerate_diagrams(cfg.n, k, cfg.bound)) {
      ++count;
      if (!listing) continue;
      items.push_back(ceswb::io::to_json(d));
      lines.push_back(ceswb::io::to_json(d).dump());
    }
  } else if (cfg.what == "ncchains") {
    if (!listing) {
      count = ceswb::count_maximal_nc_chains(cfg.n, cfg.bound);
    } else {
      for (const auto& ch : ceswb::enumerate_nc_chains(cfg.n, cfg.n, cfg.bound)) {
        ++count;
        items.push_back(ceswb::io::to_json(ch));
        lines.push_back(ceswb::io::to_json(ch).dump());
      }
    }
  } else {
    throw UsageError("enum expects one of: ces, cmatrices, diagrams, ncchains");
  }

  if (cfg.format == "json") {
    Json out{{"what", cfg.what}, {"n", cfg.n}, {"count", count}};
    if (listing) out["items"] = items;
    return out.dump(2) + "\n";
  }
  if (cfg.format == "dot") throw UsageError("enum does not emit DOT");
  std::ostringstream os;
  if (listing)
    for (const auto& l : lines) os << l << "\n";
  if (listing) os << "count: ";
  os << count << "\n";
  return os.str();
}

// ---------------------------------------------------------------- classify / perms

ceswb::CMatrix matrix_input(const Config& cfg) {
  if (!cfg.input.empty()) return ceswb::io::cmatrix_from_json(read_json(cfg.input));
  require_n(cfg);
  return ceswb::c_matrix_of(ceswb::mutate_sequence(ceswb::framed_matrix(cfg.n), parse_seq(cfg.seq, cfg.n)));
}

std::string classification_failure(const ceswb::CMatrix& c) {
  for (const auto& row : c.rows)
    if (static_cast<int>(row.size()) != c.size()) return "matrix is not square";
  if (!ceswb::has_interval_rows(c)) return "a row is not plus or minus the dimension vector of an interval module";
  ceswb::OrientedDiagram od;
  try {
    od = ceswb::diagram_of_cmatrix(c);
    (void)od.underlying();
  } catch (const ceswb::PreconditionError& e) {
    return std::string("rows do not form a chord diagram: ") + e.what();
  }
  if (!ceswb::is_cmatrix_diagram(od)) return "oriented diagram fails weak separation or a shared-endpoint rule";
  return {};
}

std::string cmd_classify(const Config& cfg) {
  const ceswb::CMatrix c = matrix_input(cfg);
  const std::string why = classification_failure(c);
  Json out{{"is_cmatrix", why.empty()}, {"cmatrix", ceswb::io::to_json(c)}};
  if (why.empty()) {
    const auto od = ceswb::diagram_of_cmatrix(c);
    out["diagram"] = ceswb::io::to_json(od);
    out["witness_ces"] = ceswb::io::to_json(ceswb::st_witness(c));
    if (cfg.format == "dot") return ceswb::io::diagram_to_dot(od);
  } else {
    out["reason"] = why;
  }
  if (cfg.format == "json") return out.dump(2) + "\n";
  std::ostringstream os;
  os << "is_cmatrix: " << (why.empty() ? "true" : "false") << "\n";
  if (why.empty()) {
    os << "diagram: " << ceswb::io::format_diagram(ceswb::diagram_of_cmatrix(c)) << "\n";
    os << "witness: " << seq_text(ceswb::st_witness(c)) << "\n";
  } else {
    os << "reason: " << why << "\n";
  }
  return os.str();
}

std::string cmd_perms(const Config& cfg) {
  const ceswb::CMatrix c = matrix_input(cfg);
  const std::string why = classification_failure(c);
  if (!why.empty()) throw ceswb::PreconditionError("not a c-matrix: " + why);
  Json items = Json::array();
  std::ostringstream os;
  for (const auto& sigma : ceswb::permutations_of_cmatrix(c)) {
    const auto s = ceswb::sequence_of_permutation(c, sigma);
    items.push_back(Json{{"sigma", sigma}, {"cycles", ceswb::cycle_notation(sigma)}, {"ces", ceswb::io::to_json(s)}});
    os << ceswb::cycle_notation(sigma) << "  " << seq_text(s) << "\n";
  }
  if (cfg.format == "json") return Json{{"cmatrix", ceswb::io::to_json(c)}, {"permutations", items}}.dump(2) + "\n";
  return os.str();
}

// ---------------------------------------------------------------- poset

std::string cmd_poset(const Config& cfg) {
  if (cfg.input.empty()) throw UsageError("poset needs --input (a diagram, or a poset with --realize)");
  const Json j = read_json(cfg.input);
  if (cfg.realize) {
    const auto p = ceswb::io::poset_from_json(j);
    const auto d = ceswb::realize_poset(p);
    if (cfg.format == "dot") return ceswb::io::diagram_to_dot(d);
    return ceswb::io::to_json(d).dump(2) + "\n";
  }
  const auto doc = ceswb::io::diagram_from_json(j);
  const auto dp = ceswb::poset_of_diagram(doc.diagram);
  if (cfg.format == "dot") return ceswb::io::hasse_to_dot(dp);
  const auto ext = ceswb::linear_extensions(dp.poset);
  Json elements = Json::array();
  for (const auto& c : doc.diagram.chords()) elements.push_back(Json{{"a", c.a}, {"b", c.b}});
  Json out{{"elements", elements},
           {"poset", ceswb::io::to_json(dp.poset)},
           {"linear_extension_count", ceswb::count_linear_extensions(dp.poset)},
           {"linear_extensions", ext},
           {"satisfies_conditions", ceswb::satisfies_poset_conditions(dp.poset)}};
  if (cfg.format == "json") return out.dump(2) + "\n";
  std::ostringstream os;
  for (auto [lo, hi] : dp.poset.covers()) {
    const auto &a = doc.diagram.chord(lo), &b = doc.diagram.chord(hi);
    os << "c(" << a.a << "," << a.b << ") < c(" << b.a << "," << b.b << ")\n";
  }
  os << "linear extensions: " << ceswb::count_linear_extensions(dp.poset) << "\n";
  return os.str();
}

// ---------------------------------------------------------------- ncchains / trees

std::string cmd_ncchains(const Config& cfg) {
  if (!cfg.input.empty()) {
    const Json j = read_json(cfg.input);
    if (j.is_array()) {
      const auto ld = ceswb::labeled_diagram_of_chain(ceswb::io::chain_from_json(j));
      if (cfg.format == "dot") return ceswb::io::diagram_to_dot(ld.diagram, &ld.labels);
      return ceswb::io::to_json(ld).dump(2) + "\n";
    }
    const auto doc = ceswb::io::diagram_from_json(j);
    if (!doc.labels) throw UsageError("diagram input needs a label on every chord");
    const auto chain = ceswb::chain_of_labeled_diagram({doc.diagram, *doc.labels});
    return ceswb::io::to_json(chain).dump(cfg.format == "json" ? 2 : -1) + "\n";
  }
  require_n(cfg);
  const int k = cfg.k < 0 ? cfg.n : cfg.k;
  if (cfg.count_only) {
    const std::uint64_t count = k == cfg.n ? ceswb::count_maximal_nc_chains(cfg.n, cfg.bound)
                                           : ceswb::enumerate_nc_chains(cfg.n, k, cfg.bound).size();
    return cfg.format == "json" ? Json{{"count", count}}.dump() + "\n" : std::to_string(count) + "\n";
  }
  const auto chains = ceswb::enumerate_nc_chains(cfg.n, k, cfg.bound);
  Json items = Json::array();
  for (const auto& ch : chains) items.push_back(ceswb::io::to_json(ch));
  if (cfg.format == "json") return Json{{"n", cfg.n}, {"k", k}, {"count", chains.size()}, {"chains", items}}.dump(2) + "\n";
  std::ostringstream os;
  for (const auto& ch : items) os << ch.dump() << "\n";
  os << "count: " << chains.size() << "\n";
  return os.str();
}

std::string cmd_trees(const Config& cfg) {
  require_n(cfg);
  const auto trees = ceswb::tree_leaf_distribution(cfg.n, cfg.bound);
  const auto diagrams = ceswb::diagram_leaf_distribution(cfg.n, cfg.bound);
  if (cfg.format == "json") {
    Json t = Json::object(), d = Json::object();
    for (auto [r, c] : trees) t[std::to_string(r)] = c;
    for (auto [r, c] : diagrams) d[std::to_string(r)] = c;
    return Json{{"n", cfg.n}, {"trees", t}, {"diagrams", d}, {"equal", trees == diagrams}}.dump(2) + "\n";
  }
  std::ostringstream os;
  os << "leaves  trees  diagram-extensions\n";
  for (auto [r, c] : trees) os << r << "  " << c << "  " << (diagrams.count(r) ? diagrams.at(r) : 0) << "\n";
  os << (trees == diagrams ? "identity holds\n" : "identity FAILS\n");
  return os.str();
}

// ---------------------------------------------------------------- verify

int cmd_verify(const Config& cfg, std::string& out) {
  require_n(cfg);
  ceswb::VerifyOptions opts{cfg.n, cfg.bound, cfg.jobs, cfg.inject_fault};
  const auto results = ceswb::run_verification(opts);
  bool ok = true;
  Json items = Json::array();
  std::ostringstream os;
  for (const auto& r : results) {
    ok = ok && r.passed;
    items.push_back(Json{{"gate", r.name}, {"passed", r.passed}, {"detail", r.detail}});
    os << (r.passed ? "PASS " : "FAIL ") << r.name << (r.detail.empty() ? "" : ": " + r.detail) << "\n";
  }
  out = cfg.format == "json" ? Json{{"n", cfg.n}, {"passed", ok}, {"gates", items}}.dump(2) + "\n" : os.str();
  return ok ? 0 : 1;
}

void emit(const Config& cfg, const std::string& text) {
  if (cfg.output.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(cfg.output);
  if (!f) throw UsageError("cannot write " + cfg.output);
  f << text;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exceptional sequences of the linear A_n quiver: mutation, c-matrices, chord diagrams, posets.\n"
               "Vertex and row indices on this command line are 1-based."};
  app.require_subcommand(1);
  Config cfg;
  cfg.bound = 0;

  auto common = [&](CLI::App* sub) {
    sub->add_option("--n", cfg.n, "Rank n of A_n");
    sub->add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"json", "dot", "text"}));
    sub->add_option("--output", cfg.output, "Write output to this file");
    sub->add_option("--bound", cfg.bound, "Largest n accepted by exhaustive searches (default: CESWB_BOUND or 6)")
        ->check(CLI::Range(1, 64));
    sub->add_option("--jobs", cfg.jobs, "Worker threads for exchange-graph search")->check(CLI::PositiveNumber);
  };

  auto* mutate = app.add_subcommand("mutate", "Mutate the framed A_n quiver along --seq and trace the oriented diagram");
  common(mutate);
  mutate->add_option("--seq", cfg.seq, "Comma-separated 1-based mutation indices, applied left to right");

  auto* enumerate = app.add_subcommand("enum", "Enumerate ces, cmatrices, diagrams or ncchains");
  common(enumerate);
  enumerate->add_option("what", cfg.what, "ces | cmatrices | diagrams | ncchains")->required();
  enumerate->add_flag("--count-only", cfg.count_only, "Print only the cardinality");
  enumerate->add_option("--k", cfg.k, "Chord count for diagrams (default n)");

  auto* classify = app.add_subcommand("classify", "Decide whether a matrix is a c-matrix; emit its diagram and a witness CES");
  common(classify);
  classify->add_option("--input", cfg.input, "c-matrix (n x n) or framed exchange matrix JSON");
  classify->add_option("--seq", cfg.seq, "Without --input: classify the c-matrix reached by this sequence");

  auto* poset = app.add_subcommand("poset", "Poset of a diagram, or --realize a poset as a diagram");
  common(poset);
  poset->add_option("--input", cfg.input, "Diagram JSON (or poset JSON with --realize)");
  poset->add_flag("--realize", cfg.realize, "Input is a poset; output a spanning diagram realizing it");

  auto* perms = app.add_subcommand("perms", "Row permutations of a c-matrix giving CESs");
  common(perms);
  perms->add_option("--input", cfg.input, "c-matrix (n x n) or framed exchange matrix JSON");
  perms->add_option("--seq", cfg.seq, "Without --input: use the c-matrix reached by this sequence");

  auto* ncchains = app.add_subcommand("ncchains", "Chains of noncrossing partitions and the diagram bijection");
  common(ncchains);
  ncchains->add_option("--k", cfg.k, "Chain length (default n)");
  ncchains->add_flag("--count-only", cfg.count_only, "Print only the number of chains");
  ncchains->add_option("--input", cfg.input, "Labelled diagram JSON (maps to a chain) or chain JSON (maps to a diagram)");

  auto* trees = app.add_subcommand("trees", "Labelled trees by leaf count against the diagram side");
  common(trees);

  auto* verify = app.add_subcommand("verify", "Run every cross-check gate at rank n");
  common(verify);
  verify->add_option("--inject-fault", cfg.inject_fault, "Perturb the reference data of the named gate");

  CLI11_PARSE(app, argc, argv);
  try {
    if (cfg.bound == 0) cfg.bound = ceswb::search_bound();
    std::string out;
    int code = 0;
    if (*mutate) out = cmd_mutate(cfg);
    else if (*enumerate) out = cmd_enum(cfg);
    else if (*classify) out = cmd_classify(cfg);
    else if (*poset) out = cmd_poset(cfg);
    else if (*perms) out = cmd_perms(cfg);
    else if (*ncchains) out = cmd_ncchains(cfg);
    else if (*trees) out = cmd_trees(cfg);
    else if (*verify) code = cmd_verify(cfg, out);
    emit(cfg, out);
    return code;
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const ceswb::BoundExceededError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const ceswb::PreconditionError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 4;
  }
}
