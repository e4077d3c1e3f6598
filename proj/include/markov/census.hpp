#ifndef MARKOV_CENSUS_HPP
#define MARKOV_CENSUS_HPP

#include "markov/classifier.hpp"
#include "markov/explorer.hpp"

#include <array>
#include <cstddef>
#include <map>
#include <vector>

namespace markov {

/// One component met during a census, keyed by its sorted base set.
struct CensusComponent {
  std::vector<Triple> bases;
  GraphClass graph_class;
  StructuralSignature signature;
  std::size_t seed_count = 0;
};

/// A seed on which the descent classifier and the structural classifier
/// disagree (or the structural one failed to match any signature).
struct CensusDisagreement {
  Triple seed;
  int decision_class = 0;
  int structural_class = 0;  // 0 when no signature matched
  std::string detail;
};

struct CensusReport {
  long entry_bound = 0;
  std::size_t seed_total = 0;  // ordered seeds, (2M+1)^3
  std::vector<CensusComponent> components;  // ascending by base set
  std::array<std::size_t, 10> components_per_class{};  // index = class id
  std::array<std::size_t, 10> seeds_per_class{};
  std::vector<CensusDisagreement> disagreements;
  bool circuit_iff_zero_square = true;
  bool signature_bijection = true;

  std::size_t classes_present() const;
  bool ok() const {
    return disagreements.empty() && circuit_iff_zero_square && signature_bijection;
  }
};

/// Classifies every ordered seed with all |entries| <= entry_bound both ways
/// and groups them by component. Throws std::invalid_argument for a
/// negative bound.
CensusReport census(long entry_bound);

}  // namespace markov

#endif  // MARKOV_CENSUS_HPP
