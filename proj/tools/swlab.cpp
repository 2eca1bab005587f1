// swlab: Serre weight combinatorics for GL_2 over F_{p^f}.
//
//   swlab graph    --p 7 --f 1 --mu "4,0" --radius 2 [--format json|dot]
//   swlab weights  --p 7 --f 1 --w s --mu "4,0"
//   swlab envelope --p 7 --f 1 --mu "4,0"
//   swlab d0       --p 7 --f 1 --w s --mu "4,0" [--format json|dot]
//   swlab verify   [--p 5,7] [--f 1,2] [--radius 2] [--seed 1] [--cases 10000] [--format json]
//
// Exit status: 0 success, 1 a model check failed, 2 bad input or unmet precondition.

#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "swlab/d0.hpp"
#include "swlab/envelope.hpp"
#include "swlab/extension_graph.hpp"
#include "swlab/report.hpp"
#include "swlab/verify.hpp"
#include "swlab/weight_sets.hpp"

namespace {

constexpr int kOk = 0;
constexpr int kModelFailure = 1;
constexpr int kInputError = 2;

struct Options {
  swlab::Int p = 7;
  int f = 1;
  std::string mu;
  std::string w;
  int radius = 2;
  std::string format = "json";
  std::vector<swlab::Int> p_list{5, 7};
  std::vector<int> f_list{1, 2};
  std::uint64_t seed = 1;
  std::size_t cases = 10000;
};

void print(const nlohmann::ordered_json& j) { std::cout << j.dump(2) << '\n'; }

void require_format(const Options& o, std::initializer_list<const char*> allowed) {
  for (const char* a : allowed) {
    if (o.format == a) return;
  }
  throw swlab::Error(swlab::ErrorKind::InvalidArgument, "format '" + o.format + "' is not available here");
}

int run_graph(const Options& o) {
  require_format(o, {"json", "dot"});
  const swlab::Params params(o.p, o.f);
  const swlab::Weight mu = swlab::parse_weight(o.mu, o.f);
  const auto g = swlab::enumerate_graph(params, mu, o.radius);
  if (o.format == "dot") {
    std::cout << swlab::graph_dot(params, mu, g);
  } else {
    print(swlab::graph_json(params, mu, o.radius, g));
  }
  return kOk;
}

swlab::TameParam tame_param(const Options& o) {
  const swlab::Params params(o.p, o.f);
  swlab::TameParam t(params, swlab::parse_weyl(o.w, o.f), swlab::parse_weight(o.mu, o.f));
  if (!swlab::is_one_generic(t)) {
    throw swlab::Error(swlab::ErrorKind::PreconditionViolation, "not 1-generic: mu=" + o.mu);
  }
  return t;
}

int run_weights(const Options& o) {
  require_format(o, {"json"});
  print(swlab::weights_json(tame_param(o)));
  return kOk;
}

int run_envelope(const Options& o) {
  require_format(o, {"json"});
  const swlab::Params params(o.p, o.f);
  const swlab::Weight mu = swlab::parse_weight(o.mu, o.f);
  print(swlab::envelope_json(params, mu, swlab::graded_pieces(params, mu)));
  return kOk;
}

int run_d0(const Options& o) {
  require_format(o, {"json", "dot"});
  const auto rep = swlab::d0_full(tame_param(o));
  if (o.format == "dot") {
    std::cout << swlab::d0_dot(rep);
  } else {
    print(swlab::d0_json(rep));
  }
  const bool ok = rep.multiplicity_free && swlab::radical_disjointness_check(rep) && swlab::upperbound_consistency(rep);
  return ok ? kOk : kModelFailure;
}

int run_verify(const Options& o) {
  require_format(o, {"json", "table"});
  swlab::SuiteConfig cfg;
  cfg.p_list = o.p_list;
  cfg.f_list = o.f_list;
  cfg.radius = o.radius;
  cfg.seed = o.seed;
  cfg.cases = o.cases;
  for (swlab::Int p : cfg.p_list) {
    for (int f : cfg.f_list) static_cast<void>(swlab::Params(p, f));
  }
  const auto outcomes = swlab::run_suite(cfg);
  if (o.format == "json") {
    print(swlab::suite_json(outcomes));
  } else {
    std::cout << swlab::suite_table(outcomes);
  }
  return swlab::all_passed(outcomes) ? kOk : kModelFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Serre weight combinatorics for GL_2(F_q)"};
  app.require_subcommand(1);
  Options o;

  auto add_field = [&](CLI::App* cmd) {
    cmd->add_option("--p", o.p, "residue characteristic (prime >= 5)")->required();
    cmd->add_option("--f", o.f, "residue degree")->required();
  };

  auto* graph = app.add_subcommand("graph", "extension graph of a weight");
  add_field(graph);
  graph->add_option("--mu", o.mu, "weight, e.g. \"4,0\" or \"3,1;2,0\"")->required();
  graph->add_option("--radius", o.radius, "coefficient box radius");
  graph->add_option("--format", o.format, "json or dot");

  auto* weights = app.add_subcommand("weights", "predicted weights of a tame parameter");
  add_field(weights);
  weights->add_option("--w", o.w, "Weyl element over {e,s}")->required();
  weights->add_option("--mu", o.mu, "weight")->required();
  weights->add_option("--format", o.format, "json");

  auto* envelope = app.add_subcommand("envelope", "graded constituents of the projective envelope");
  add_field(envelope);
  envelope->add_option("--mu", o.mu, "weight")->required();
  envelope->add_option("--format", o.format, "json");

  auto* d0 = app.add_subcommand("d0", "constituents of D_0 for a tame parameter");
  add_field(d0);
  d0->add_option("--w", o.w, "Weyl element over {e,s}")->required();
  d0->add_option("--mu", o.mu, "weight")->required();
  d0->add_option("--format", o.format, "json or dot");

  auto* verify = app.add_subcommand("verify", "run the property sweeps");
  verify->add_option("--p", o.p_list, "primes, comma separated")->delimiter(',');
  verify->add_option("--f", o.f_list, "degrees, comma separated")->delimiter(',');
  verify->add_option("--radius", o.radius, "coefficient box radius for injectivity");
  verify->add_option("--seed", o.seed, "seed for sampled checks");
  verify->add_option("--cases", o.cases, "sample count for sampled checks");
  verify->add_option("--format", o.format, "table or json");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kInputError;
  }

  try {
    if (*graph) return run_graph(o);
    if (*weights) return run_weights(o);
    if (*envelope) return run_envelope(o);
    if (*d0) return run_d0(o);
    if (!verify->count("--format")) o.format = "table";
    return run_verify(o);
  } catch (const swlab::Error& e) {
    std::cerr << "swlab: " << swlab::to_string(e.kind()) << ": " << e.what() << '\n';
    return swlab::is_input_error(e.kind()) ? kInputError : kModelFailure;
  } catch (const std::exception& e) {
    std::cerr << "swlab: " << e.what() << '\n';
    return kModelFailure;
  }
}
