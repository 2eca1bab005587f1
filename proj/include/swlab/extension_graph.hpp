#pragma once

// The extension graph: points of Lambda_W labelled by Serre weights through
// t_mu(omega_J + nu) = w~_J . (mu + nu + omega_J - eta).

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "swlab/lattice.hpp"
#include "swlab/parallel.hpp"

namespace swlab {

// omega_J + nu with J the parity support and nu in the root lattice.
struct EDecomposition {
  std::uint32_t J = 0;
  LambdaWElement nu;
};

struct OmegaElement {
  std::uint32_t J = 0;
  ExtAffineElement element;  // w_J t_{-pi^{-1} omega_J}
};

EDecomposition decompose(const LambdaWElement& w);

// Sections into X*(T): omega^(i) -> (1,0)^(i); roots alpha^(i) = 2 omega^(i) -> (1,-1)^(i).
Weight embed_fundamental(int f, std::uint32_t J);
Weight embed_root(const LambdaWElement& nu);

// Searches the 2^f Weyl elements for the unique w with w t_{-pi^{-1} omega_J} in Omega.
OmegaElement omega_element(const Params& params, std::uint32_t J);

Weight t_mu_raw(const Params& params, const Weight& mu, const LambdaWElement& w);
bool in_graph(const Params& params, const Weight& mu, const LambdaWElement& w);
SerreWeightClass t_mu(const Params& params, const Weight& mu, const LambdaWElement& w);

bool adjacent(const LambdaWElement& w1, const LambdaWElement& w2);

// 1 iff adjacent; requires both graph images to be generic after adding eta.
int ext1_dim(const Params& params, const Weight& mu, const LambdaWElement& w1, const LambdaWElement& w2);
bool ext1_applicable(const Params& params, const Weight& mu, const LambdaWElement& w1, const LambdaWElement& w2);

// t_lambda(w') == t_mu(w_J^{-1}(w') + w0pt) where lambda - eta = t'_mu(w0pt).
bool recenter_check(const Params& params, const Weight& mu, const LambdaWElement& w0pt,
                    const LambdaWElement& wprime);

struct GraphVertex {
  LambdaWElement coeffs;
  SerreWeightClass cls;
  auto operator<=>(const GraphVertex&) const = default;
};

struct GraphReport {
  std::vector<GraphVertex> vertices;               // sorted by coefficients
  std::vector<std::pair<std::size_t, std::size_t>> edges;  // i < j, sorted
};

// Enumerates graph points with coefficients in [-radius, radius]^f.
GraphReport enumerate_graph(const Params& params, const Weight& mu, int radius,
                            Exec exec = Exec::Parallel);

// "c0,c1,..." for a point of Lambda_W.
std::string format_point(const LambdaWElement& w);

// All points of the box [-radius, radius]^f in lexicographic order.
std::vector<LambdaWElement> coefficient_box(int f, int radius);

}  // namespace swlab
