#include "markov/census.hpp"

#include <algorithm>
#include <stdexcept>

namespace markov {

std::size_t CensusReport::classes_present() const {
  return static_cast<std::size_t>(std::count_if(components_per_class.begin() + 1,
                                                components_per_class.end(),
                                                [](std::size_t c) { return c > 0; }));
}

CensusReport census(long entry_bound) {
  if (entry_bound < 0) throw std::invalid_argument("census: entry bound must be non-negative");

  CensusReport report;
  report.entry_bound = entry_bound;

  // Permuted seeds canonicalize to the same Triple, so each distinct triple
  // is classified once and counted with its multiplicity.
  std::map<Triple, std::size_t> multiplicity;
  for (long a = -entry_bound; a <= entry_bound; ++a) {
    for (long b = -entry_bound; b <= entry_bound; ++b) {
      for (long c = -entry_bound; c <= entry_bound; ++c) {
        ++multiplicity[Triple(a, b, c)];
        ++report.seed_total;
      }
    }
  }

  std::map<std::vector<Triple>, CensusComponent> by_bases;
  for (const auto& [seed, count] : multiplicity) {
    const Classification decided = classify(seed);
    StructuralSignature sig;
    int structural = 0;
    try {
      sig = structural_signature(seed);
      structural = class_id(class_of_signature(sig));
    } catch (const std::logic_error& e) {
      report.disagreements.push_back({seed, class_id(decided.graph_class), 0, e.what()});
      continue;
    }
    if (structural != class_id(decided.graph_class)) {
      report.disagreements.push_back(
          {seed, class_id(decided.graph_class), structural, sig.to_string()});
      continue;
    }

    auto [it, inserted] = by_bases.try_emplace(decided.bases.bases);
    CensusComponent& comp = it->second;
    if (inserted) {
      comp.bases = decided.bases.bases;
      comp.graph_class = decided.graph_class;
      comp.signature = sig;
    } else if (comp.signature != sig || comp.graph_class != decided.graph_class) {
      report.disagreements.push_back({seed, class_id(decided.graph_class), structural,
                                      "component of " + comp.bases.front().to_string() +
                                          " seen with signature " + comp.signature.to_string()});
    }
    comp.seed_count += count;
  }

  std::map<StructuralSignature, GraphClass> class_by_sig;
  std::map<GraphClass, StructuralSignature> sig_by_class;
  for (auto& [key, comp] : by_bases) {
    const int id = class_id(comp.graph_class);
    ++report.components_per_class[id];
    report.seeds_per_class[id] += comp.seed_count;
    if (comp.signature.has_circuit != (comp.graph_class == GraphClass::zero_square)) {
      report.circuit_iff_zero_square = false;
    }
    auto [s, s_new] = class_by_sig.emplace(comp.signature, comp.graph_class);
    auto [c, c_new] = sig_by_class.emplace(comp.graph_class, comp.signature);
    if ((!s_new && s->second != comp.graph_class) || (!c_new && c->second != comp.signature)) {
      report.signature_bijection = false;
    }
    report.components.push_back(std::move(comp));
  }
  return report;
}

}  // namespace markov
