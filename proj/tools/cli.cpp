#include "cli.hpp"

#include "markov/census.hpp"
#include "markov/classifier.hpp"
#include "markov/explorer.hpp"
#include "markov/io.hpp"
#include "markov/properties.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <ostream>
#include <sstream>

namespace markov::cli {

namespace {

class UsageError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

Triple parse_triple(const std::vector<std::string>& raw) {
  if (raw.size() != 3) throw UsageError("expected exactly three integers");
  std::array<BigInt, 3> e;
  for (std::size_t i = 0; i < 3; ++i) {
    auto v = parse_bigint(raw[i]);
    if (!v) throw UsageError("not an integer: '" + raw[i] + "'");
    e[i] = *v;
  }
  return Triple(e[0], e[1], e[2]);
}

BigInt parse_bound(const std::string& raw, const char* what) {
  auto v = parse_bigint(raw);
  if (!v || *v < 0) throw UsageError(std::string(what) + " must be a non-negative integer");
  return *v;
}

// Largest norm within two jumps of the base set, and at least the seed's.
BigInt default_norm_bound(const Triple& seed) {
  BigInt bound = norm(seed);
  for (const Triple& t : two_hop_neighborhood(enumerate_bases(seed))) {
    bound = std::max(bound, BigInt(norm(t)));
  }
  return bound;
}

std::string join(const std::vector<Triple>& ts, std::string_view sep) {
  std::string s;
  for (std::size_t i = 0; i < ts.size(); ++i) {
    if (i > 0) s += sep;
    s += ts[i].to_string();
  }
  return s;
}

void print_classification(const Classification& c, std::ostream& out) {
  out << "seed " << c.trace.seed().to_string() << "\n";
  out << "class " << class_id(c.graph_class) << " (" << describe(c.graph_class) << ")\n";
  out << "k " << to_string(c.k) << "\n";
  out << "norm " << to_string(c.bases.norm) << "\n";
  out << "bases " << join(c.bases.bases, " ") << "\n";
  out << "descent " << join(c.trace.path, " -> ") << "\n";
}

void print_exploration(const GraphDocument& doc, std::ostream& out) {
  out << "seed " << doc.seed.to_string() << "\n";
  out << "class " << class_id(doc.graph_class) << "\n";
  out << "k " << to_string(doc.k) << "\n";
  out << "norm-bound " << to_string(doc.norm_bound) << "\n";
  out << "closed " << (doc.closed ? "yes" : "no") << "\n";
  out << "vertices " << doc.vertices.size() << "\n";
  std::vector<int> loops(doc.vertices.size(), 0);
  for (const auto& [v, c] : doc.loops) loops[v] = c;
  for (std::size_t v = 0; v < doc.vertices.size(); ++v) {
    const Triple& t = doc.vertices[v];
    out << "  " << v << " " << t.to_string() << " norm " << to_string(norm(t)) << " degree "
        << neighbors(t).vertices.size() << " loops " << loops[v];
    if (std::binary_search(doc.bases.begin(), doc.bases.end(), t)) out << " base";
    if (norm(t) > doc.norm_bound) out << " frontier";
    out << "\n";
  }
  out << "edges " << doc.edges.size() << "\n";
  for (const auto& [i, j] : doc.edges) out << "  " << i << " " << j << "\n";
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Vieta-jump graphs of integer triples: classification, bases, exploration",
               "markov-graph"};
  app.require_subcommand(1);

  std::vector<std::string> triple_args;
  std::string norm_bound_arg;
  std::string format = "text";
  long entry_bound = 0;
  bool color_bases = false;
  bool include_loops = false;
  std::vector<std::string> property_names;
  PropertyConfig pcfg;

  auto add_triple = [&](CLI::App* sub) {
    sub->add_option("triple", triple_args, "the seed triple a b c, in any order")
        ->expected(3)
        ->required();
  };

  auto* classify_cmd = app.add_subcommand("classify", "class id, base set, k and descent trace");
  add_triple(classify_cmd);
  auto* bases_cmd = app.add_subcommand("bases", "the minimum-norm vertices of the component");
  add_triple(bases_cmd);
  auto* k_cmd = app.add_subcommand("k", "the invariant a^2+b^2+c^2-3abc");
  add_triple(k_cmd);

  auto* explore_cmd = app.add_subcommand("explore", "bounded breadth-first exploration");
  add_triple(explore_cmd);
  explore_cmd->add_option("--norm-bound", norm_bound_arg,
                          "expand vertices up to this norm (default: two jumps past the bases)");
  explore_cmd->add_option("--format", format, "text or structured")
      ->check(CLI::IsMember({"text", "structured"}));

  auto* dot_cmd = app.add_subcommand("dot", "exploration rendered as an undirected DOT graph");
  add_triple(dot_cmd);
  dot_cmd->add_option("--norm-bound", norm_bound_arg,
                      "expand vertices up to this norm (default: two jumps past the bases)");
  dot_cmd->add_flag("--color-bases", color_bases, "fill base vertices green");
  dot_cmd->add_flag("--include-loops", include_loops, "draw loops as self-edges");

  auto* census_cmd = app.add_subcommand("census", "classify every seed with |entries| <= M");
  census_cmd->add_option("--entry-bound", entry_bound, "M")->required()->check(CLI::NonNegativeNumber);

  auto* verify_cmd = app.add_subcommand("verify", "randomized property checks");
  verify_cmd->add_option("--property", property_names,
                         "lemma1, lemma2, k-invariant, neighbor-symmetry, signature-agreement "
                         "(repeatable; default all)");
  verify_cmd->add_option("--samples", pcfg.samples, "samples per property")->capture_default_str();
  verify_cmd->add_option("--seed", pcfg.seed, "random seed")->capture_default_str();
  verify_cmd->add_option("--range", pcfg.range, "entries drawn from [-M, M]")
      ->capture_default_str()
      ->check(CLI::Range(2L, 1'000'000'000'000L));

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  try {
    if (*classify_cmd) {
      print_classification(classify(parse_triple(triple_args)), out);
    } else if (*bases_cmd) {
      const BaseSet bases = enumerate_bases(parse_triple(triple_args));
      out << "norm " << to_string(bases.norm) << "\n";
      for (const Triple& b : bases.bases) out << b.to_string() << "\n";
    } else if (*k_cmd) {
      out << to_string(k_invariant(parse_triple(triple_args))) << "\n";
    } else if (*explore_cmd || *dot_cmd) {
      const Triple seed = parse_triple(triple_args);
      const BigInt bound = norm_bound_arg.empty() ? default_norm_bound(seed)
                                                  : parse_bound(norm_bound_arg, "--norm-bound");
      if (bound < norm(seed)) {
        throw UsageError("--norm-bound " + to_string(bound) + " is below the seed norm " +
                         to_string(norm(seed)));
      }
      const GraphDocument doc = make_document(seed, bound);
      if (*dot_cmd) {
        out << render_dot(doc, DotOptions{color_bases, include_loops});
      } else if (format == "structured") {
        out << render_structured(doc);
      } else {
        print_exploration(doc, out);
      }
    } else if (*census_cmd) {
      const CensusReport report = census(entry_bound);
      out << render_census(report);
      return report.ok() ? kExitOk : kExitFailure;
    } else if (*verify_cmd) {
      std::vector<Property> props;
      for (const std::string& n : property_names) {
        auto p = property_from_name(n);
        if (!p) throw UsageError("unknown property '" + n + "'");
        props.push_back(*p);
      }
      if (props.empty()) props = all_properties();
      bool all_passed = true;
      for (Property p : props) {
        const PropertyResult r = check_property(p, pcfg);
        out << name(p) << " " << (r.passed() ? "pass" : "FAIL") << " checked " << r.checked;
        if (!r.passed()) out << " counterexample " << *r.counterexample;
        out << "\n";
        all_passed = all_passed && r.passed();
      }
      return all_passed ? kExitOk : kExitFailure;
    }
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitFailure;
  }
  return kExitOk;
}

}  // namespace markov::cli
