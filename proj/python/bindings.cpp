#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "ceswb/chords.hpp"
#include "ceswb/cmatdiag.hpp"
#include "ceswb/error.hpp"
#include "ceswb/exchange.hpp"
#include "ceswb/ncpart.hpp"
#include "ceswb/posets.hpp"
#include "ceswb/reptheory.hpp"
#include "ceswb/verify.hpp"

namespace py = pybind11;
using namespace ceswb;

namespace {

using Rows = std::vector<IntVector>;
using Interval = std::pair<int, int>;

// Python callers use 1-based mutation indices, matching the command line.
std::vector<int> zero_based(const std::vector<int>& seq, int n) {
  std::vector<int> out;
  for (int k : seq) {
    if (k < 1 || k > n) throw PreconditionError("mutation index " + std::to_string(k) + " outside [1, " +
                                                std::to_string(n) + "]");
    out.push_back(k - 1);
  }
  return out;
}

CMatrix as_cmatrix(const Rows& rows) {
  for (const auto& r : rows)
    if (r.size() != rows.size()) throw PreconditionError("c-matrix must be square");
  return CMatrix{rows};
}

std::vector<std::tuple<int, int>> oriented(const OrientedDiagram& d) {
  std::vector<std::tuple<int, int>> out;
  for (const auto& c : d.chords) out.emplace_back(c.tail, c.head);
  return out;
}

std::vector<Interval> intervals(const ExceptionalSequence& s) {
  std::vector<Interval> out;
  for (const auto& v : s) out.emplace_back(v.i, v.j);
  return out;
}

int bound_or_default(int bound) { return bound > 0 ? bound : search_bound(); }

py::dict mutate_path(int n, const std::vector<int>& seq) {
  const ExchangeMatrix b = mutate_sequence(framed_matrix(n), zero_based(seq, n));
  const CMatrix c = c_matrix_of(b);
  py::dict out;
  out["matrix"] = b.rows();
  out["cmatrix"] = c.rows;
  out["diagram"] = oriented(diagram_of_cmatrix(c));
  return out;
}

bool classify(const Rows& rows) {
  const CMatrix c = as_cmatrix(rows);
  if (!has_interval_rows(c)) return false;
  try {
    const auto d = diagram_of_cmatrix(c);
    (void)d.underlying();
    return is_cmatrix_diagram(d);
  } catch (const PreconditionError&) {
    return false;
  }
}

std::vector<std::pair<std::string, std::vector<Interval>>> permutations(const Rows& rows) {
  const CMatrix c = as_cmatrix(rows);
  std::vector<std::pair<std::string, std::vector<Interval>>> out;
  for (const auto& sigma : permutations_of_cmatrix(c))
    out.emplace_back(cycle_notation(sigma), intervals(sequence_of_permutation(c, sigma)));
  return out;
}

std::uint64_t count_ces(int n, int bound) {
  std::uint64_t total = 0;
  for (const auto& d : enumerate_diagrams(n, n, bound_or_default(bound)))
    total += count_linear_extensions(poset_of_diagram(d).poset);
  return total;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exceptional sequences, c-matrices and chord diagrams for the linear A_n quiver";

  py::register_exception<PreconditionError>(m, "PreconditionError", PyExc_ValueError);
  py::register_exception<BoundExceededError>(m, "BoundExceededError", PyExc_RuntimeError);
  py::register_exception<OverflowError>(m, "MatrixOverflowError", PyExc_OverflowError);

  m.def("framed_matrix", [](int n) { return framed_matrix(n).rows(); }, py::arg("n"));
  m.def(
      "mutate",
      [](const Rows& rows, int n_mutable, int k) {
        const auto b = ExchangeMatrix::from_rows(n_mutable, rows);
        return mutate(b, zero_based({k}, n_mutable).front()).rows();
      },
      py::arg("matrix"), py::arg("n_mutable"), py::arg("k"));
  m.def("mutate_path", &mutate_path, py::arg("n"), py::arg("seq"),
        "Mutate the framed matrix along seq; returns matrix, cmatrix and oriented diagram.");
  m.def(
      "cmatrices",
      [](int n, int bound, int jobs) {
        std::vector<Rows> out;
        for (const auto& c : explore_exchange_graph(n, bound_or_default(bound), jobs).cmatrices) out.push_back(c.rows);
        return out;
      },
      py::arg("n"), py::arg("bound") = 0, py::arg("jobs") = 1);
  m.def("is_cmatrix", &classify, py::arg("cmatrix"));
  m.def("permutations", &permutations, py::arg("cmatrix"),
        "Pairs (cycle notation, exceptional sequence) for each permutation of the c-matrix.");
  m.def("count_ces", &count_ces, py::arg("n"), py::arg("bound") = 0);
  m.def(
      "hom_dim",
      [](int n, Interval v, Interval w) {
        return hom_dim(IntervalRep::make(n, v.first, v.second), IntervalRep::make(n, w.first, w.second));
      },
      py::arg("n"), py::arg("v"), py::arg("w"));
  m.def(
      "ext_dim",
      [](int n, Interval v, Interval w) {
        return ext1_dim(IntervalRep::make(n, v.first, v.second), IntervalRep::make(n, w.first, w.second));
      },
      py::arg("n"), py::arg("v"), py::arg("w"));
  m.def(
      "is_exceptional_sequence",
      [](int n, const std::vector<Interval>& seq) {
        ExceptionalSequence s;
        for (auto [i, j] : seq) s.push_back(IntervalRep::make(n, i, j));
        return is_exceptional_sequence(s);
      },
      py::arg("n"), py::arg("seq"));
  m.def(
      "count_maximal_nc_chains", [](int n, int bound) { return count_maximal_nc_chains(n, bound_or_default(bound)); },
      py::arg("n"), py::arg("bound") = 0);
  m.def(
      "tree_leaf_distribution", [](int n, int bound) { return tree_leaf_distribution(n, bound_or_default(bound)); },
      py::arg("n"), py::arg("bound") = 0);
  m.def(
      "verify",
      [](int n, int bound, int jobs) {
        std::vector<std::tuple<std::string, bool, std::string>> out;
        for (const auto& g : run_verification({n, bound_or_default(bound), jobs, ""}))
          out.emplace_back(g.name, g.passed, g.detail);
        return out;
      },
      py::arg("n"), py::arg("bound") = 0, py::arg("jobs") = 1);
}
