// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any
// failure. All arithmetic is exact, so every comparison is exact equality.

#include "markov/census.hpp"
#include "markov/classifier.hpp"
#include "markov/explorer.hpp"
#include "markov/io.hpp"
#include "markov/properties.hpp"

#include <array>
#include <chrono>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <string>

using namespace markov;

namespace {

struct Check {
  std::ostringstream log;
  bool ok = true;

  void expect(bool condition, const std::string& what) {
    if (!condition) {
      ok = false;
      log << "    failed: " << what << "\n";
    }
  }
};

int failures = 0;

void criterion(int id, const std::string& title, double limit_seconds,
               const std::function<void(Check&)>& body) {
  Check c;
  const auto start = std::chrono::steady_clock::now();
  try {
    body(c);
  } catch (const std::exception& e) {
    c.expect(false, std::string("exception: ") + e.what());
  }
  const double seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (limit_seconds > 0) {
    std::ostringstream lim;
    lim << "runtime " << seconds << " s within " << limit_seconds << " s";
    c.expect(seconds < limit_seconds, lim.str());
  }
  std::cout << (c.ok ? "PASS" : "FAIL") << "  criterion " << id << ": " << title << " ("
            << seconds << " s)\n"
            << c.log.str();
  if (!c.ok) ++failures;
}

void property_suite(Check& c, Property p) {
  PropertyConfig cfg;  // 10000 samples, range [-1e6, 1e6], 20-jump walks
  const PropertyResult r = check_property(p, cfg);
  c.expect(r.checked == 10000, std::string(name(p)) + " checked " + std::to_string(r.checked));
  c.expect(r.passed(), std::string(name(p)) + " counterexample " + r.counterexample.value_or(""));
}

const std::vector<std::pair<Triple, int>> kExemplars{
    {Triple(0, 0, 0), 1}, {Triple(0, 0, 5), 2}, {Triple(0, 1, 3), 3},
    {Triple(0, 2, 2), 4}, {Triple(1, 1, 1), 5}, {Triple(1, 2, 4), 6},
    {Triple(2, 2, 6), 7}, {Triple(1, 2, 3), 8}, {Triple(-12, 1, 3), 9}};

}  // namespace

int main() {
  criterion(1, "exemplar classifications", 1.0, [](Check& c) {
    for (const auto& [seed, id] : kExemplars) {
      const int got = class_id(classify(seed).graph_class);
      c.expect(got == id, seed.to_string() + " -> class " + std::to_string(got));
    }
    c.expect(classify(Triple(1, 2, 4)).bases.bases == std::vector<Triple>{Triple(1, 2, 2)},
             "(1,2,4) has base (1,2,2)");
  });

  criterion(2, "k-invariant values and conservation", 5.0, [](Check& c) {
    c.expect(k_invariant(Triple(-12, 1, 3)) == 262, "k(-12,1,3) = 262");
    c.expect(k_invariant(Triple(0, 0, 9)) == 81, "k(0,0,9) = 81");
    c.expect(k_invariant(Triple(-1, 4, 4)) == 81, "k(-1,4,4) = 81");
    const auto axis = classify(Triple(0, 0, 9));
    const auto twin = classify(Triple(-1, 4, 4));
    for (const Triple& b : axis.bases.bases) {
      c.expect(!twin.bases.contains(b), "base sets of (0,0,9) and (-1,4,4) are disjoint");
    }
    c.expect(axis.graph_class == GraphClass::zero_pair, "(0,0,9) is class 2");
    c.expect(twin.graph_class == GraphClass::twin, "(-1,4,4) is class 6");
    property_suite(c, Property::k_invariant);
  });

  criterion(3, "smaller-entry jumps overshoot the largest, 10000 random triples", 2.0,
            [](Check& c) { property_suite(c, Property::growth); });

  criterion(4, "two-sign flip neighbour correspondence, 10000 random triples", 2.0,
            [](Check& c) { property_suite(c, Property::sign_flip); });

  criterion(5, "census agreement for |entries| <= 6", 60.0, [](Check& c) {
    const CensusReport r = census(6);
    c.expect(r.seed_total == 2197, "2197 seeds, got " + std::to_string(r.seed_total));
    c.expect(r.disagreements.empty(),
             std::to_string(r.disagreements.size()) + " classifier disagreements" +
                 (r.disagreements.empty() ? "" : ", first " + r.disagreements[0].seed.to_string()));
    std::set<StructuralSignature> signatures;
    for (const CensusComponent& comp : r.components) signatures.insert(comp.signature);
    c.expect(signatures.size() == 9, std::to_string(signatures.size()) + " distinct signatures");
    c.expect(r.classes_present() == 9, std::to_string(r.classes_present()) + " classes present");
    c.expect(r.signature_bijection, "signature -> class is a bijection");
    c.expect(r.circuit_iff_zero_square, "circuit found iff class 3");
    // frozen from tests/oracle/census_oracle.py
    const std::array<std::size_t, 10> components{0, 1, 6, 15, 6, 12, 120, 2, 9, 186};
    const std::array<std::size_t, 10> seeds{0, 1, 36, 384, 84, 24, 432, 6, 54, 1176};
    c.expect(r.components_per_class == components, "per-class component counts match the oracle");
    c.expect(r.seeds_per_class == seeds, "per-class seed counts match the oracle");
  });

  criterion(6, "Markov graph sanity", 0, [](Check& c) {
    const ExplorationGraph g = explore(Triple(1, 1, 1), BigInt(600));
    for (const Triple& t : {Triple(1, 1, 1), Triple(1, 1, 2), Triple(1, 2, 5), Triple(1, 5, 13),
                            Triple(2, 5, 29)}) {
      c.expect(g.find(t).has_value(), t.to_string() + " explored");
    }
    c.expect(exact_degree(g, *g.find(Triple(1, 1, 1))) == 1, "(1,1,1) has degree 1");
    c.expect(exact_degree(g, *g.find(Triple(1, 1, 2))) == 2, "(1,1,2) has degree 2");
    for (const Triple& t : g.vertices) c.expect(k_invariant(t) == 0, "k = 0 at " + t.to_string());
  });

  criterion(7, "degree signatures per class", 0, [](Check& c) {
    struct Family {
      int id;
      std::size_t deg1, deg2;
      std::function<Triple(long)> base;
      std::vector<long> params;
    };
    const std::vector<Family> families{
        {4, 0, 4, [](long a) { return Triple(0, a, a); }, {1, 2, 3, -1, -2, -3}},
        {6, 0, 2, [](long a) { return Triple(a, 2 * a, 2 * a); }, {1, 2, 3, -1, -2, -3}},
        {7, 1, 0, [](long a) { return Triple(2 * a, 2 * a, 6 * a * a); }, {1, 2, 3, -1, -2, -3}},
        // (n, 2m, 3nm) with m = 1, n != 2
        {8, 0, 1, [](long a) { return Triple(a, 2, 3 * a); }, {1, 3, 5, -1, -2, -3}},
        {9, 0, 0, [](long a) { return Triple(-12 * a, a, 3 * a); }, {1, 2, 3, 4, 5, 6}},
    };
    for (const Family& f : families) {
      for (long a : f.params) {
        const Triple seed = f.base(a);
        const int id = class_id(classify(seed).graph_class);
        if (id != f.id) {
          c.expect(false, seed.to_string() + " expected class " + std::to_string(f.id) +
                              ", got " + std::to_string(id));
          continue;
        }
        const StructuralSignature sig = structural_signature(seed);
        c.expect(sig.deg1_count == f.deg1 && sig.deg2_count == f.deg2,
                 "class " + std::to_string(f.id) + " " + seed.to_string() + " " + sig.to_string());
      }
    }
  });

  criterion(8, "serialization round trips", 0, [](Check& c) {
    for (const auto& [seed, id] : kExemplars) {
      const GraphDocument doc = make_document(seed, BigInt(200));
      const std::string text = render_structured(doc);
      c.expect(text == render_structured(doc), "structured determinism " + seed.to_string());
      c.expect(render_structured(parse_structured(text)) == text,
               "structured round trip " + seed.to_string());
      for (DotOptions o : {DotOptions{false, false}, DotOptions{true, true}}) {
        const std::string dot = render_dot(doc, o);
        c.expect(dot == render_dot(doc, o), "DOT determinism " + seed.to_string());
        c.expect(parse_dot(dot) == doc, "DOT parse " + seed.to_string());
        c.expect(render_dot(parse_dot(dot), o) == dot, "DOT round trip " + seed.to_string());
      }
    }
    // eight jumps down the fastest Markov branch
    Triple deep(1, 1, 1);
    for (int i = 0; i < 8; ++i) deep = jump(deep, Position::first);
    const GraphDocument doc = make_document(Triple(1, 1, 1), norm(deep));
    BigInt largest = 0;
    for (const Triple& t : doc.vertices) largest = std::max(largest, BigInt(abs(t[2])));
    c.expect(largest > BigInt("1000000000000000000000000000000"), "entries exceed 10^30");
    c.expect(parse_structured(render_structured(doc)) == doc, "deep structured round trip");
    c.expect(parse_dot(render_dot(doc)) == doc, "deep DOT round trip");
  });

  std::cout << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " criteria failed")
            << "\n";
  return failures == 0 ? 0 : 1;
}
