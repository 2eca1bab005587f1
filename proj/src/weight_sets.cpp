#include "swlab/weight_sets.hpp"

#include <algorithm>
#include <optional>

#include "swlab/extension_graph.hpp"

namespace swlab {

bool mu_minus_eta_one_deep(const Params& params, const Weight& mu) {
  for (Int r : pairings(mu)) {
    if (r < 2 || r > params.p() - 2) return false;
  }
  return true;
}

TameParam::TameParam(Params params, WeylElement w, Weight mu)
    : params_(std::move(params)), w_(w), mu_(std::move(mu)) {
  if (w_.size() != params_.f() || mu_.size() != params_.f()) {
    throw Error(ErrorKind::InvalidArgument, "tame parameter: dimension mismatch");
  }
  if (!mu_minus_eta_one_deep(params_, mu_)) {
    throw Error(ErrorKind::PreconditionViolation, "mu - eta is not 1-deep: mu=" + format_weight(mu_));
  }
}

SignedSet s_w(const WeylElement& w) {
  SignedSet s;
  s.signs.resize(static_cast<std::size_t>(w.size()));
  for (int i = 0; i < w.size(); ++i) s.signs[static_cast<std::size_t>(i)] = w.flag(i) ? -1 : 1;
  return s;
}

bool is_one_generic(const TameParam& t) {
  const Int p = t.params().p();
  const auto r = pairings(t.mu());
  for (Int x : r) {
    if (x < 2 || x > p - 2) return false;
  }
  const bool all_two = std::all_of(r.begin(), r.end(), [](Int x) { return x == 2; });
  const bool all_top = std::all_of(r.begin(), r.end(), [p](Int x) { return x == p - 2; });
  return !all_two && !all_top;
}

LambdaWElement hypercube_point(const WeylElement& w, std::uint32_t label) {
  LambdaWElement out = LambdaWElement::zero(w.size());
  for (int i = 0; i < w.size(); ++i) {
    if ((label >> i) & 1u) out[i] = w.flag(i) ? -1 : 1;
  }
  return out;
}

std::vector<SerreWeightClass> hypercube_classes(const Params& params, const WeylElement& w, const Weight& mu) {
  std::vector<SerreWeightClass> out;
  const std::uint32_t n = 1u << params.f();
  out.reserve(n);
  for (std::uint32_t label = 0; label < n; ++label) out.push_back(t_mu(params, mu, hypercube_point(w, label)));
  std::sort(out.begin(), out.end());
  if (std::adjacent_find(out.begin(), out.end()) != out.end()) {
    throw Error(ErrorKind::CardinalityError, "hypercube labels collide for mu=" + format_weight(mu));
  }
  return out;
}

std::vector<SerreWeightClass> w_question(const TameParam& t) {
  return hypercube_classes(t.params(), t.w(), t.mu());
}

std::vector<SerreWeightClass> jh_dl_reduction(const TameParam& t) {
  std::vector<SerreWeightClass> out;
  for (const auto& c : w_question(t)) out.push_back(herzig_reflect_inverse(t.params(), c));
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Presentation> presentations(const TameParam& t) {
  const Params& params = t.params();
  const int f = params.f();
  const auto target = w_question(t);
  std::vector<Presentation> out;
  for (std::uint32_t label = 0; label < (1u << f); ++label) {
    const LambdaWElement point = hypercube_point(t.w(), label);
    Presentation pres;
    pres.label = label;
    pres.sigma = t_mu(params, t.mu(), point);
    pres.lambda = t_mu_raw(params, t.mu(), point) + Weight::eta(f);

    std::optional<WeylElement> found;
    int hits = 0;
    for (std::uint32_t flags = 0; flags < (1u << f); ++flags) {
      const WeylElement candidate(f, flags);
      try {
        if (hypercube_classes(params, candidate, pres.lambda) == target) {
          ++hits;
          found = candidate;
        }
      } catch (const Error&) {
        // candidate corner left the graph: not a presentation
      }
    }
    if (hits != 1) {
      throw Error(ErrorKind::PresentationError, "recentring at label " + std::to_string(label) + " found " +
                                                    std::to_string(hits) + " Weyl elements");
    }
    pres.w_sigma = *found;
    out.push_back(std::move(pres));
  }
  return out;
}

bool is_one_generic_all_presentations(const TameParam& t) {
  if (!is_one_generic(t)) return false;
  for (const auto& pres : presentations(t)) {
    if (!mu_minus_eta_one_deep(t.params(), pres.lambda)) return false;
    if (!is_one_generic(TameParam(t.params(), pres.w_sigma, pres.lambda))) return false;
  }
  return true;
}

}  // namespace swlab
