#pragma once

// Exhaustive and seeded property sweeps over small (p, f). Each check returns
// one outcome per configuration; a failure carries the first counterexample
// in enumeration order, so results do not depend on the worker count.

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "swlab/lattice.hpp"
#include "swlab/parallel.hpp"
#include "swlab/weight_sets.hpp"

namespace swlab {

struct SuiteConfig {
  std::vector<Int> p_list{5, 7};
  std::vector<int> f_list{1, 2};
  int radius = 2;             // coefficient box for injectivity
  std::size_t cases = 10000;  // budget for sampled checks
  std::uint64_t seed = 1;
  Exec exec = Exec::Parallel;
};

struct SuiteOutcome {
  std::string check;
  Int p = 0;
  int f = 0;
  bool passed = true;
  std::size_t cases = 0;
  std::string counterexample;
};

using CheckFn = std::function<SuiteOutcome(const Params&, const SuiteConfig&)>;

struct CheckSpec {
  std::string name;
  CheckFn run;
  int max_f = 16;  // skipped above this degree
};

// Sweep domains, in lexicographic order of the pairing vector.
// mu = (r_0,0;...;r_{f-1},0) with every r_i in [2, p-2].
std::vector<Weight> deep_weights(const Params& params);
// All (w, mu) with mu from deep_weights passing is_one_generic, w-major order.
std::vector<TameParam> generic_params(const Params& params);
// The subset whose recentred presentations are all 1-deep and 1-generic.
std::vector<TameParam> strictly_generic_params(const Params& params);

SuiteOutcome check_injectivity(const Params& params, const SuiteConfig& cfg);
SuiteOutcome check_hypercube_size(const Params& params, const SuiteConfig& cfg);
SuiteOutcome check_dimension_identity(const Params& params, const SuiteConfig& cfg);
SuiteOutcome check_graded_multiplicity(const Params& params, const SuiteConfig& cfg);
SuiteOutcome check_label_injectivity(const Params& params, const SuiteConfig& cfg);
SuiteOutcome check_submodule_lattice(const Params& params, const SuiteConfig& cfg);
SuiteOutcome check_filtration_closure(const Params& params, const SuiteConfig& cfg);
SuiteOutcome check_hom_span(const Params& params, const SuiteConfig& cfg);
SuiteOutcome check_herzig_bijection(const Params& params, const SuiteConfig& cfg);
SuiteOutcome check_pdot_action(const Params& params, const SuiteConfig& cfg);
SuiteOutcome check_symmetry(const Params& params, const SuiteConfig& cfg);
// D0 over every input accepted by is_one_generic.
SuiteOutcome check_d0_multiplicity(const Params& params, const SuiteConfig& cfg);
// D0 over strictly_generic_params only.
SuiteOutcome check_d0_multiplicity_strict(const Params& params, const SuiteConfig& cfg);
SuiteOutcome check_presentation_independence(const Params& params, const SuiteConfig& cfg);
SuiteOutcome check_central_twist(const Params& params, const SuiteConfig& cfg);
// The p = 7, f = 1 fixtures; reports zero cases at other (p, f).
SuiteOutcome check_classical(const Params& params, const SuiteConfig& cfg);

const std::vector<CheckSpec>& suite_checks();

// Every check at every configuration, ordered by check then (p, f).
std::vector<SuiteOutcome> run_suite(const SuiteConfig& cfg);

bool all_passed(const std::vector<SuiteOutcome>& outcomes);

}  // namespace swlab
