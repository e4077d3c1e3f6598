#include "markov/io.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace markov {

ParseError::ParseError(std::size_t line, std::size_t column, const std::string& message)
    : std::runtime_error("line " + std::to_string(line) + ", column " + std::to_string(column) +
                         ": " + message),
      line_(line),
      column_(column) {}

GraphDocument make_document(const Triple& seed, const Classification& cls,
                            const ExplorationGraph& g) {
  GraphDocument doc;
  doc.seed = seed;
  doc.graph_class = cls.graph_class;
  doc.k = cls.k;
  doc.bases = cls.bases.bases;
  doc.vertices = g.vertices;
  doc.edges = g.edges;
  for (std::size_t v = 0; v < g.loop_counts.size(); ++v) {
    if (g.loop_counts[v] > 0) doc.loops.emplace_back(v, g.loop_counts[v]);
  }
  doc.norm_bound = g.norm_bound;
  doc.closed = g.closed;
  return doc;
}

GraphDocument make_document(const Triple& seed, const BigInt& norm_bound) {
  return make_document(seed, classify(seed), explore(seed, norm_bound));
}

void validate(const GraphDocument& doc) {
  const std::size_t n = doc.vertices.size();
  for (std::size_t e = 0; e < doc.edges.size(); ++e) {
    const auto& [i, j] = doc.edges[e];
    if (i >= n || j >= n) {
      throw std::invalid_argument("edge " + std::to_string(e) + " refers to a vertex out of range");
    }
    if (i >= j) throw std::invalid_argument("edge " + std::to_string(e) + " is not ordered i < j");
    if (e > 0 && doc.edges[e - 1] >= doc.edges[e]) {
      throw std::invalid_argument("edges are not strictly ascending at " + std::to_string(e));
    }
  }
  for (std::size_t l = 0; l < doc.loops.size(); ++l) {
    const auto& [v, count] = doc.loops[l];
    if (v >= n) throw std::invalid_argument("loop entry refers to a vertex out of range");
    if (count < 1 || count > 3) throw std::invalid_argument("loop count must be 1..3");
    if (l > 0 && doc.loops[l - 1].first >= v) {
      throw std::invalid_argument("loop entries are not strictly ascending");
    }
  }
  if (!std::is_sorted(doc.bases.begin(), doc.bases.end()) ||
      std::adjacent_find(doc.bases.begin(), doc.bases.end()) != doc.bases.end()) {
    throw std::invalid_argument("bases are not strictly ascending");
  }
  for (const Triple& b : doc.bases) {
    if (std::find(doc.vertices.begin(), doc.vertices.end(), b) == doc.vertices.end()) {
      throw std::invalid_argument("base " + b.to_string() + " is not a vertex");
    }
  }
  std::vector<Triple> sorted = doc.vertices;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw std::invalid_argument("duplicate vertex");
  }
}

std::string render_census(const CensusReport& report) {
  std::ostringstream out;
  out << "census entry-bound " << report.entry_bound << "\n";
  out << "seeds " << report.seed_total << "\n";
  out << "components " << report.components.size() << "\n";
  out << "classes-present " << report.classes_present() << "\n";
  for (int id = 1; id <= 9; ++id) {
    out << "class " << id << " components " << report.components_per_class[id] << " seeds "
        << report.seeds_per_class[id] << "\n";
  }
  std::map<StructuralSignature, int> signatures;
  for (const CensusComponent& c : report.components) {
    signatures.emplace(c.signature, class_id(c.graph_class));
  }
  for (const auto& [sig, id] : signatures) {
    out << "signature " << sig.to_string() << " -> class " << id << "\n";
  }
  out << "circuit-iff-class-3 " << (report.circuit_iff_zero_square ? "yes" : "no") << "\n";
  out << "signature-bijection " << (report.signature_bijection ? "yes" : "no") << "\n";
  for (const CensusDisagreement& d : report.disagreements) {
    out << "disagreement " << d.seed.to_string() << " classify " << d.decision_class
        << " structural " << d.structural_class << " " << d.detail << "\n";
  }
  out << (report.ok() ? "status ok" : "status FAILED") << "\n";
  return out.str();
}

}  // namespace markov
