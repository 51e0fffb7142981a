#include "ceswb/io.hpp"

#include <cmath>
#include <cstdio>
#include <numbers>
#include <sstream>

#include "ceswb/error.hpp"

namespace ceswb::io {

namespace {

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw PreconditionError(std::string("missing JSON field '") + key + "'");
  return j.at(key);
}

int int_field(const Json& j, const char* key) {
  const Json& v = field(j, key);
  if (!v.is_number_integer()) throw PreconditionError(std::string("field '") + key + "' must be an integer");
  return v.get<int>();
}

std::vector<IntVector> rows_from(const Json& entries) {
  if (!entries.is_array()) throw PreconditionError("'entries' must be an array of rows");
  std::vector<IntVector> rows;
  for (const auto& r : entries) {
    if (!r.is_array()) throw PreconditionError("matrix rows must be arrays");
    IntVector row;
    for (const auto& v : r) {
      if (!v.is_number_integer()) throw PreconditionError("matrix entries must be integers");
      row.push_back(v.get<std::int64_t>());
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

std::string point_pos(int p, int n_points) {
  const double angle = (90.0 - 360.0 * p / n_points) * std::numbers::pi / 180.0;
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.4f,%.4f!", 2.0 * std::cos(angle), 2.0 * std::sin(angle));
  return buf;
}

std::string dot_points(int n_points) {
  std::ostringstream os;
  os << "  layout=neato;\n  node [shape=circle, width=0.3, fixedsize=true];\n";
  for (int p = 0; p < n_points; ++p) os << "  p" << p << " [label=\"" << p << "\", pos=\"" << point_pos(p, n_points) << "\"];\n";
  return os.str();
}

}  // namespace

Json to_json(const ExchangeMatrix& b) {
  Json entries = Json::array();
  for (const auto& r : b.rows()) entries.push_back(r);
  return Json{{"n_mutable", b.n_mutable()}, {"n_total", b.n_total()}, {"entries", entries}};
}

ExchangeMatrix matrix_from_json(const Json& j) {
  const int n = int_field(j, "n_mutable");
  const int m = int_field(j, "n_total");
  auto rows = rows_from(field(j, "entries"));
  if (static_cast<int>(rows.size()) != n) throw PreconditionError("'entries' must have n_mutable rows");
  for (const auto& r : rows)
    if (static_cast<int>(r.size()) != m) throw PreconditionError("every row must have n_total entries");
  return ExchangeMatrix::from_rows(n, rows);
}

Json to_json(const CMatrix& c) {
  return to_json(ExchangeMatrix::from_rows(c.size(), c.rows));
}

CMatrix cmatrix_from_json(const Json& j) {
  const ExchangeMatrix b = matrix_from_json(j);
  if (b.n_total() == b.n_mutable()) return CMatrix{b.rows()};
  if (b.is_framed_shape()) return c_matrix_of(b);
  throw PreconditionError("expected an n x n c-matrix or an n x 2n framed exchange matrix");
}

Json to_json(const IntervalRep& v) { return Json{{"i", v.i}, {"j", v.j}}; }

IntervalRep rep_from_json(const Json& j, int n) {
  return IntervalRep::make(n, int_field(j, "i"), int_field(j, "j"));
}

Json to_json(const ExceptionalSequence& seq) {
  Json out = Json::array();
  for (const auto& v : seq) out.push_back(to_json(v));
  return out;
}

ExceptionalSequence sequence_from_json(const Json& j, int n) {
  if (!j.is_array()) throw PreconditionError("a sequence must be a JSON array");
  ExceptionalSequence seq;
  for (const auto& v : j) seq.push_back(rep_from_json(v, n));
  return seq;
}

Json to_json(const ChordDiagram& d, const std::vector<int>* labels) {
  Json chords = Json::array();
  for (int c = 0; c < d.size(); ++c) {
    Json item{{"a", d.chord(c).a}, {"b", d.chord(c).b}};
    if (labels) item["label"] = labels->at(c);
    chords.push_back(std::move(item));
  }
  return Json{{"n_points", d.n_points()}, {"chords", chords}};
}

Json to_json(const LabeledDiagram& d) { return to_json(d.diagram, &d.labels); }

Json to_json(const OrientedDiagram& d) {
  Json chords = Json::array();
  for (const auto& oc : d.chords) {
    const Chord c = oc.chord();
    chords.push_back(Json{{"a", c.a}, {"b", c.b}, {"dir", oc.positive() ? "ab" : "ba"}});
  }
  return Json{{"n_points", d.n_points}, {"chords", chords}};
}

DiagramDocument diagram_from_json(const Json& j) {
  const int n_points = int_field(j, "n_points");
  const Json& items = field(j, "chords");
  if (!items.is_array()) throw PreconditionError("'chords' must be an array");
  std::vector<Chord> chords;
  std::vector<int> labels;
  OrientedDiagram od{n_points, {}};
  bool all_labelled = true, all_oriented = true;
  for (const auto& item : items) {
    const Chord c = Chord::make(int_field(item, "a"), int_field(item, "b"));
    chords.push_back(c);
    if (item.contains("label")) labels.push_back(int_field(item, "label"));
    else all_labelled = false;
    if (item.contains("dir")) {
      const auto dir = item.at("dir").get<std::string>();
      if (dir != "ab" && dir != "ba") throw PreconditionError("'dir' must be \"ab\" or \"ba\"");
      od.chords.push_back(dir == "ab" ? OrientedChord{c.a, c.b} : OrientedChord{c.b, c.a});
    } else {
      all_oriented = false;
    }
  }
  DiagramDocument doc{ChordDiagram(n_points, chords), std::nullopt, std::nullopt};
  if (all_labelled && !chords.empty()) {
    std::vector<int> aligned(chords.size());
    for (std::size_t x = 0; x < chords.size(); ++x) aligned[doc.diagram.find(chords[x])] = labels[x];
    LabeledDiagram ld{doc.diagram, aligned};
    validate_labels(ld);
    doc.labels = std::move(aligned);
  }
  if (all_oriented && !chords.empty()) doc.oriented = std::move(od);
  return doc;
}

Json to_json(const NCPartition& p) { return Json(p.blocks()); }

NCPartition partition_from_json(const Json& j) {
  if (!j.is_array()) throw PreconditionError("a partition must be an array of blocks");
  std::vector<std::vector<int>> blocks;
  int size = 0;
  for (const auto& b : j) {
    if (!b.is_array()) throw PreconditionError("a block must be an array");
    blocks.push_back(b.get<std::vector<int>>());
    size += static_cast<int>(blocks.back().size());
  }
  return NCPartition::from_blocks(size, blocks);
}

Json to_json(const NCChain& chain) {
  Json out = Json::array();
  for (const auto& p : chain) out.push_back(to_json(p));
  return out;
}

NCChain chain_from_json(const Json& j) {
  if (!j.is_array()) throw PreconditionError("a chain must be an array of partitions");
  NCChain chain;
  for (const auto& p : j) chain.push_back(partition_from_json(p));
  return chain;
}

Json to_json(const FinitePoset& p) {
  Json covers = Json::array();
  for (auto [lo, hi] : p.covers()) covers.push_back(Json::array({lo, hi}));
  return Json{{"size", p.size()}, {"covers", covers}};
}

FinitePoset poset_from_json(const Json& j) {
  const int size = int_field(j, "size");
  std::vector<std::pair<int, int>> rel;
  for (const auto& c : field(j, "covers")) {
    if (!c.is_array() || c.size() != 2) throw PreconditionError("a cover must be a [lower, upper] pair");
    rel.emplace_back(c[0].get<int>(), c[1].get<int>());
  }
  return FinitePoset::from_relations(size, rel);
}

std::string format_matrix(const ExchangeMatrix& b) {
  std::ostringstream os;
  for (int i = 0; i < b.n_mutable(); ++i) {
    os << "  [";
    for (int j = 0; j < b.n_total(); ++j) {
      if (j == b.n_mutable() && j > 0) os << " |";
      char buf[32];
      std::snprintf(buf, sizeof buf, "%3lld", static_cast<long long>(b.at(i, j)));
      os << buf;
    }
    os << " ]\n";
  }
  return os.str();
}

std::string format_cmatrix(const CMatrix& c) {
  std::ostringstream os;
  for (const auto& row : c.rows) {
    os << "  (";
    for (std::size_t x = 0; x < row.size(); ++x) os << (x ? "," : "") << row[x];
    os << ")\n";
  }
  return os.str();
}

std::string format_chord(const OrientedChord& c) {
  return std::to_string(c.tail) + "->" + std::to_string(c.head);
}

std::string format_diagram(const OrientedDiagram& d) {
  std::string s = "{";
  for (std::size_t x = 0; x < d.chords.size(); ++x) s += (x ? ", " : "") + format_chord(d.chords[x]);
  return s + "}";
}

std::string diagram_to_dot(const ChordDiagram& d, const std::vector<int>* labels) {
  std::ostringstream os;
  os << "graph diagram {\n" << dot_points(d.n_points());
  for (int c = 0; c < d.size(); ++c) {
    os << "  p" << d.chord(c).a << " -- p" << d.chord(c).b;
    if (labels) os << " [label=\"" << labels->at(c) << "\"]";
    os << ";\n";
  }
  os << "}\n";
  return os.str();
}

std::string diagram_to_dot(const OrientedDiagram& d) {
  std::ostringstream os;
  os << "digraph diagram {\n" << dot_points(d.n_points);
  for (std::size_t l = 0; l < d.chords.size(); ++l)
    os << "  p" << d.chords[l].tail << " -> p" << d.chords[l].head << " [label=\"" << l + 1 << "\"];\n";
  os << "}\n";
  return os.str();
}

std::string hasse_to_dot(const DiagramPoset& p) {
  std::ostringstream os;
  os << "digraph hasse {\n  rankdir=BT;\n";
  for (int x = 0; x < p.poset.size(); ++x) {
    const Chord& c = p.diagram.chord(x);
    os << "  e" << x << " [label=\"c(" << c.a << "," << c.b << ")\"];\n";
  }
  for (auto [lo, hi] : p.poset.covers()) os << "  e" << lo << " -> e" << hi << ";\n";
  os << "}\n";
  return os.str();
}

}  // namespace ceswb::io
