#ifndef MARKOV_CLASSIFIER_HPP
#define MARKOV_CLASSIFIER_HPP

#include "markov/descent.hpp"
#include "markov/triple.hpp"

#include <string_view>

namespace markov {

/// The nine isomorphism classes of jump graphs, numbered 1..9 and named by
/// the shape of their base(s). In the comments a, b are distinct non-zero.
enum class GraphClass : int {
  origin = 1,         // (0,0,0), a single vertex
  zero_pair = 2,      // (0,0,a) and (0,0,-a), two vertices
  zero_square = 3,    // (0,a,b): four bases on a circuit
  zero_twin = 4,      // (0,a,a), (0,a,-a), (0,-a,-a): a path of three bases
  all_equal = 5,      // (a,a,a), the Markov graph shape
  twin = 6,           // (a,a,b)
  twin_loop = 7,      // (a,a,b) with 2b = 3a^2
  distinct_loop = 8,  // (n,2m,3nm)
  regular_tree = 9,   // (a,b,c): 3-regular tree
};

constexpr int class_id(GraphClass c) { return static_cast<int>(c); }

/// Throws std::out_of_range unless 1 <= id <= 9.
GraphClass class_from_id(int id);

std::string_view describe(GraphClass c);

/// Reads the class off the shape of a base. Throws std::invalid_argument
/// when `base` is not a base.
GraphClass classify_base(const Triple& base);

struct Classification {
  GraphClass graph_class;
  BaseSet bases;
  BigInt k;
  DescentTrace trace;
};

/// Descends to a base, enumerates the base set and classifies it. Throws
/// std::logic_error if two bases of the component disagree.
Classification classify(const Triple& seed);

}  // namespace markov

#endif  // MARKOV_CLASSIFIER_HPP
