#include "swlab/d0.hpp"

#include <algorithm>
#include <set>

#include "swlab/extension_graph.hpp"

namespace swlab {

namespace {

void require_one_generic(const TameParam& t) {
  if (!is_one_generic(t)) {
    throw Error(ErrorKind::PreconditionViolation, "not 1-generic: mu=" + format_weight(t.mu()));
  }
}

// Labels J with J disjoint from S_w: +omega^(i) only where w flips, -omega^(i) only where it does not.
std::vector<JSet> allowed_labels(const WeylElement& w) {
  const int f = w.size();
  const std::uint32_t full = (1u << f) - 1u;
  std::vector<JSet> out;
  for (const JSet& J : all_jsets(f)) {
    if ((J.plus & ~w.flags() & full) == 0 && (J.minus & w.flags()) == 0) out.push_back(J);
  }
  return out;
}

WeylElement recentring_weyl(const Params& params, const LambdaWElement& point) {
  return omega_element(params, decompose(point).J).element.weyl;
}

D0SigmaReport block_from(const TameParam& t, const Presentation& pres) {
  const Params& params = t.params();
  const int f = params.f();
  if (!mu_minus_eta_one_deep(params, pres.lambda)) {
    throw Error(ErrorKind::PresentationError, "presentation at label " + std::to_string(pres.label) +
                                                  " has lambda=" + format_weight(pres.lambda) +
                                                  " with lambda - eta not 1-deep (w=" + format_weyl(t.w()) +
                                                  " mu=" + format_weight(t.mu()) + ")");
  }
  D0SigmaReport block;
  block.label = pres.label;
  block.sigma = pres.sigma;
  block.lambda = pres.lambda;
  block.w_sigma = pres.w_sigma;
  for (const JSet& J : allowed_labels(pres.w_sigma)) {
    const int layer = J.size();
    block.constituents.push_back({J, sigma_label(params, pres.lambda, J), layer, f - layer});
  }
  block.cosocle = block.constituents.front().cls;
  if (block.cosocle != block.sigma) {
    throw Error(ErrorKind::Internal, "block cosocle differs from its predicted weight at label " +
                                         std::to_string(pres.label));
  }
  return block;
}

}  // namespace

D0SigmaReport d0_sigma(const TameParam& t, std::uint32_t label) {
  require_one_generic(t);
  if (label >= (1u << t.params().f())) throw Error(ErrorKind::InvalidArgument, "hypercube label out of range");
  return block_from(t, presentations(t).at(label));
}

D0Report assemble_d0(const TameParam& t, std::vector<D0SigmaReport> blocks) {
  std::sort(blocks.begin(), blocks.end(),
            [](const D0SigmaReport& a, const D0SigmaReport& b) { return a.label < b.label; });
  D0Report rep{t, std::move(blocks), {}, true};
  for (const auto& block : rep.blocks) {
    for (const auto& c : block.constituents) rep.all_constituents.push_back(c.cls);
  }
  std::sort(rep.all_constituents.begin(), rep.all_constituents.end());
  rep.multiplicity_free =
      std::adjacent_find(rep.all_constituents.begin(), rep.all_constituents.end()) == rep.all_constituents.end();
  return rep;
}

D0Report d0_full(const TameParam& t, Exec exec) {
  require_one_generic(t);
  const auto pres = presentations(t);
  std::vector<D0SigmaReport> blocks(pres.size());
  for_each_index(pres.size(), [&](std::size_t i) { blocks[i] = block_from(t, pres[i]); }, exec);
  D0Report rep = assemble_d0(t, std::move(blocks));
  if (!rep.multiplicity_free) {
    const auto it = std::adjacent_find(rep.all_constituents.begin(), rep.all_constituents.end());
    throw Error(ErrorKind::MultiplicityViolation, "constituent " + format_class(*it) + " repeats for w=" +
                                                      format_weyl(t.w()) + " mu=" + format_weight(t.mu()));
  }
  return rep;
}

bool radical_disjointness_check(const D0Report& rep) {
  std::set<SerreWeightClass> cosocles;
  for (const auto& block : rep.blocks) cosocles.insert(block.cosocle);
  for (const auto& block : rep.blocks) {
    for (const auto& c : block.constituents) {
      if (c.layer >= 1 && cosocles.count(c.cls)) return false;
    }
  }
  return true;
}

bool upperbound_consistency(const D0Report& rep) {
  std::set<SerreWeightClass> cosocles;
  for (const auto& block : rep.blocks) cosocles.insert(block.cosocle);
  for (const auto& block : rep.blocks) {
    for (const auto& s : cosocles) {
      const auto hits = std::count_if(block.constituents.begin(), block.constituents.end(),
                                      [&](const D0Constituent& c) { return c.cls == s; });
      if (hits != (s == block.cosocle ? 1 : 0)) return false;
    }
  }
  return true;
}

std::vector<SerreWeightClass> block_via_presentation(const TameParam& t, std::uint32_t label, std::uint32_t via) {
  const Params& params = t.params();
  const auto pres = presentations(t);
  const Presentation& target = pres.at(label);
  const Presentation& other = pres.at(via);
  const LambdaWElement point = hypercube_point(t.w(), label);
  const LambdaWElement other_point = hypercube_point(t.w(), via);
  const WeylElement w_target = recentring_weyl(params, point);
  const WeylElement w_other = recentring_weyl(params, other_point);

  std::vector<SerreWeightClass> out;
  for (const JSet& J : allowed_labels(target.w_sigma)) {
    // the mu-graph point of sigma_J in the block, then its coordinates around other.lambda
    const LambdaWElement in_mu = point + w_target.inverse().act(omega_of(params.f(), J));
    const LambdaWElement local = w_other.act(in_mu - other_point);
    out.push_back(t_mu(params, other.lambda, local));
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace swlab
