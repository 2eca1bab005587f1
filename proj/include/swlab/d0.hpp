#pragma once

// Label-level model of D_0^vee(rho): one block R_lambda / sum V_J per predicted
// weight, with constituents sigma_J for J disjoint from S_{w_sigma}.

#include <cstdint>
#include <vector>

#include "swlab/envelope.hpp"
#include "swlab/parallel.hpp"
#include "swlab/weight_sets.hpp"

namespace swlab {

struct D0Constituent {
  JSet J;
  SerreWeightClass cls;
  int layer = 0;       // |J|, the radical layer in D_0^vee
  int dual_layer = 0;  // f - |J|, the socle layer in D_0
};

struct D0SigmaReport {
  std::uint32_t label = 0;
  SerreWeightClass sigma;
  Weight lambda;
  WeylElement w_sigma;
  std::vector<D0Constituent> constituents;  // sorted by J
  SerreWeightClass cosocle;
};

struct D0Report {
  TameParam param;
  std::vector<D0SigmaReport> blocks;  // sorted by hypercube label
  std::vector<SerreWeightClass> all_constituents;  // sorted multiset
  bool multiplicity_free = true;
};

// The block for the predicted weight at a hypercube label. Throws
// PresentationError when the recentred lambda - eta is not 1-deep.
D0SigmaReport d0_sigma(const TameParam& t, std::uint32_t label);

// Builds the report from blocks without judging multiplicities.
D0Report assemble_d0(const TameParam& t, std::vector<D0SigmaReport> blocks);

// All 2^f blocks; throws MultiplicityViolation if a class repeats.
D0Report d0_full(const TameParam& t, Exec exec = Exec::Parallel);

// No constituent in layer >= 1 is a block cosocle.
bool radical_disjointness_check(const D0Report& rep);
// Each block contains its own cosocle exactly once and no other cosocle.
bool upperbound_consistency(const D0Report& rep);

// The constituent classes of a block recomputed through the presentation at
// another label, using t_lambda'(x) = t_mu(w_J'^{-1} x + point'). Sorted.
std::vector<SerreWeightClass> block_via_presentation(const TameParam& t, std::uint32_t label,
                                                     std::uint32_t via);

}  // namespace swlab
