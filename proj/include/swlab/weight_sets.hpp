#pragma once

// Tame inertial parameters (w, mu) and their predicted Serre weights, which
// form the hypercube t_mu({s omega_J : J subset S_e}) in the extension graph.

#include <cstdint>
#include <vector>

#include "swlab/lattice.hpp"

namespace swlab {

// The Deligne-Lusztig parameter (w, mu) of R_w(mu). mu - eta is 1-deep in C_0.
class TameParam {
 public:
  TameParam(Params params, WeylElement w, Weight mu);

  const Params& params() const { return params_; }
  const WeylElement& w() const { return w_; }
  const Weight& mu() const { return mu_; }

 private:
  Params params_;
  WeylElement w_;
  Weight mu_;
};

// True iff every pairing of mu lies in [2, p-2], i.e. mu - eta is 1-deep in C_0.
bool mu_minus_eta_one_deep(const Params& params, const Weight& mu);

struct SignedSet {
  std::vector<int> signs;  // sign_i omega^(i) in S_w
  auto operator<=>(const SignedSet&) const = default;
};

SignedSet s_w(const WeylElement& w);

// 2 <= a_i - b_i <= p-2 and the pairing vector is neither all 2 nor all p-2.
bool is_one_generic(const TameParam& t);

// sum_{i in J} sign_i omega^(i) for an f-bit label J.
LambdaWElement hypercube_point(const WeylElement& w, std::uint32_t label);

std::vector<SerreWeightClass> w_question(const TameParam& t);
std::vector<SerreWeightClass> jh_dl_reduction(const TameParam& t);

struct Presentation {
  std::uint32_t label = 0;
  SerreWeightClass sigma;
  Weight lambda;
  WeylElement w_sigma;
};

// One entry per hypercube label, in label order.
std::vector<Presentation> presentations(const TameParam& t);

// Every recentred presentation (w_sigma, lambda) has lambda - eta 1-deep and
// passes is_one_generic. This is the defining property of 1-genericity.
bool is_one_generic_all_presentations(const TameParam& t);

// Hypercube classes for an arbitrary pair, sorted; throws if a corner leaves
// the restricted range or two corners collide.
std::vector<SerreWeightClass> hypercube_classes(const Params& params, const WeylElement& w, const Weight& mu);

}  // namespace swlab
