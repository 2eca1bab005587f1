#pragma once

// Label-level model of the generic projective envelope R_mu of F(mu - eta):
// constituents sigma_J for J a subset of S = {+-omega^(i)}, graded by the
// tensor multifiltration indexed by {0,1,2}^f, and the submodules V_J.

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "swlab/lattice.hpp"

namespace swlab {

// J subset S: bit i of plus is +omega^(i), bit i of minus is -omega^(i).
struct JSet {
  std::uint32_t plus = 0;
  std::uint32_t minus = 0;

  int size() const;
  bool contains(const JSet& other) const {
    return (other.plus & ~plus) == 0 && (other.minus & ~minus) == 0;
  }
  JSet operator|(const JSet& o) const { return {plus | o.plus, minus | o.minus}; }
  JSet operator&(const JSet& o) const { return {plus & o.plus, minus & o.minus}; }
  bool empty() const { return plus == 0 && minus == 0; }

  auto operator<=>(const JSet&) const = default;
};

// omega_J = sum of the members of J.
LambdaWElement omega_of(int f, const JSet& J);
std::string format_jset(const JSet& J);
// All 4^f subsets of S, ordered by (plus, minus).
std::vector<JSet> all_jsets(int f);

struct MultiIndex {
  std::vector<int> k;

  int norm() const;
  bool leq(const MultiIndex& o) const;
  auto operator<=>(const MultiIndex&) const = default;
};

std::string format_index(const MultiIndex& k);
// Component (i+1 mod f) counts the members of J among {+omega^(i), -omega^(i)}.
MultiIndex k_of(int f, const JSet& J);
std::vector<MultiIndex> all_indices(int f);

SerreWeightClass sigma_label(const Params& params, const Weight& mu, const JSet& J);

struct Constituent {
  JSet J;
  SerreWeightClass cls;
  Int dim = 0;
};

struct GradedReport {
  std::map<MultiIndex, std::vector<Constituent>> by_index;
  std::map<MultiIndex, Int> dims;
  Int total_dim = 0;
  SerreWeightClass cosocle;  // the label J = {}
  SerreWeightClass socle;    // the label J = S
};

// Throws PreconditionViolation unless mu - eta is 1-deep.
void require_envelope_depth(const Params& params, const Weight& mu);

GradedReport graded_pieces(const Params& params, const Weight& mu);

// Dimensions of the graded pieces of the one-coordinate factor R_{mu_i}.
struct FactorDims {
  Int cosocle = 0;
  Int middle = 0;
  Int socle = 0;
  Int fil1_weyl_module = 0;  // dim V(t_{(p,-p)} w_0 . (mu_i - omega_0))
};

FactorDims factor_dims(const Params& params, const Weight& mu, int i);

// Filtration index calculus on {0,1,2}^f.
MultiIndex fil_meet(const MultiIndex& k1, const MultiIndex& k2);
std::vector<MultiIndex> minimal_elements(std::vector<MultiIndex> set);
std::vector<MultiIndex> fil_index_intersect(const std::vector<MultiIndex>& I1, const std::vector<MultiIndex>& I2);

// Upward closures as bitsets over the 3^f indices (index -> base-3 code).
std::size_t index_code(const MultiIndex& k);
MultiIndex index_from_code(int f, std::size_t code);
std::vector<bool> upward_closure(int f, const std::vector<MultiIndex>& generators);

// Classes of lambda - eta + (1,0)^(i) and lambda - eta + (0,1)^(i).
std::pair<SerreWeightClass, SerreWeightClass> tensor_translate(const Params& params,
                                                               const SerreWeightClass& c, int i);

struct ExtensionWitness {
  JSet J;
  JSet Jp;
  MultiIndex k;
  MultiIndex kp;
  std::vector<Constituent> lower;  // labels of W_k
  std::vector<Constituent> upper;  // labels of W_k'
  SerreWeightClass sigma_J;
  SerreWeightClass sigma_Jp;
  bool adjacent = false;
  std::optional<int> ext1;  // set when both images are generic
};

ExtensionWitness extension_witness(const Params& params, const Weight& mu, const JSet& J, const JSet& Jp);

struct VbarLayers {
  JSet J;
  SerreWeightClass sigma;
  std::vector<Constituent> layer1;
};

VbarLayers vbar_layers(const Params& params, const Weight& mu, const JSet& J);

struct SubmoduleLabel {
  JSet J;
  std::vector<JSet> jh;  // J' containing J, sorted
  std::map<JSet, MultiIndex> layer_of;
};

SubmoduleLabel v_submodule(const Params& params, const Weight& mu, const JSet& J);

// V_{J1} is contained in V_{J2} iff J2 is a subset of J1.
bool submodule_leq(const JSet& J1, const JSet& J2);

// Covering relations J -> J' with J' = J plus one element.
std::vector<std::pair<JSet, JSet>> lattice_edges(int f);

struct HomDim {
  Int count = 0;
  std::vector<JSet> labels;
};

HomDim hom_dim(const Params& params, const Weight& mu, const SerreWeightClass& sigma);

}  // namespace swlab
