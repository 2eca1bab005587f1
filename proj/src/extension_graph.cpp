#include "swlab/extension_graph.hpp"

#include <algorithm>
#include <map>
#include <optional>

namespace swlab {

EDecomposition decompose(const LambdaWElement& w) {
  EDecomposition out{0, w};
  for (int i = 0; i < w.size(); ++i) {
    if (w[i] % 2 != 0) {
      out.J |= 1u << i;
      out.nu[i] -= 1;
    }
  }
  return out;
}

Weight embed_fundamental(int f, std::uint32_t J) { return Weight::fundamental(f, J); }

Weight embed_root(const LambdaWElement& nu) {
  Weight w = Weight::zero(nu.size());
  for (int i = 0; i < nu.size(); ++i) {
    if (nu[i] % 2 != 0) {
      throw Error(ErrorKind::InvalidArgument, "root lattice element must have even coefficients");
    }
    w[i] = {nu[i] / 2, -nu[i] / 2};
  }
  return w;
}

OmegaElement omega_element(const Params& params, std::uint32_t J) {
  const int f = params.f();
  const Weight shift = -frobenius_inverse(embed_fundamental(f, J));
  std::optional<ExtAffineElement> found;
  int hits = 0;
  for (std::uint32_t flags = 0; flags < (1u << f); ++flags) {
    auto candidate = ExtAffineElement::from_right_translation(WeylElement(f, flags), shift);
    if (stabilizes_base_alcove(candidate)) {
      ++hits;
      found = candidate;
    }
  }
  if (hits != 1) {
    throw Error(ErrorKind::Internal, "alcove stabiliser search found " + std::to_string(hits) +
                                         " candidates for J=" + std::to_string(J));
  }
  return {J, *found};
}

Weight t_mu_raw(const Params& params, const Weight& mu, const LambdaWElement& w) {
  const int f = params.f();
  if (mu.size() != f || w.size() != f) {
    throw Error(ErrorKind::InvalidArgument, "t_mu: dimension mismatch");
  }
  const EDecomposition dec = decompose(w);
  const Weight x = mu + embed_root(dec.nu) + embed_fundamental(f, dec.J) - Weight::eta(f);
  return p_dot(params, omega_element(params, dec.J).element, x);
}

namespace {

bool raw_in_graph(const Params& params, const Weight& raw) {
  for (Int r : pairings(raw)) {
    if (r + 1 < 0 || r + 1 >= params.p()) return false;
  }
  return true;
}

}  // namespace

bool in_graph(const Params& params, const Weight& mu, const LambdaWElement& w) {
  return raw_in_graph(params, t_mu_raw(params, mu, w));
}

SerreWeightClass t_mu(const Params& params, const Weight& mu, const LambdaWElement& w) {
  const Weight raw = t_mu_raw(params, mu, w);
  if (!raw_in_graph(params, raw)) {
    throw Error(ErrorKind::PreconditionViolation,
                "point lies outside the extension graph of mu=" + format_weight(mu));
  }
  return serre_class(params, raw);
}

bool adjacent(const LambdaWElement& w1, const LambdaWElement& w2) {
  if (w1.size() != w2.size()) return false;
  int nonzero = 0;
  for (int i = 0; i < w1.size(); ++i) {
    const Int d = w1[i] - w2[i];
    if (d == 0) continue;
    if (d != 1 && d != -1) return false;
    ++nonzero;
  }
  return nonzero == 1;
}

bool ext1_applicable(const Params& params, const Weight& mu, const LambdaWElement& w1,
                     const LambdaWElement& w2) {
  const int f = params.f();
  for (const auto* w : {&w1, &w2}) {
    const Weight raw = t_mu_raw(params, mu, *w);
    if (!raw_in_graph(params, raw)) return false;
    if (!is_generic_char(params, raw + Weight::eta(f))) return false;
  }
  return true;
}

int ext1_dim(const Params& params, const Weight& mu, const LambdaWElement& w1, const LambdaWElement& w2) {
  if (!ext1_applicable(params, mu, w1, w2)) {
    throw Error(ErrorKind::PreconditionViolation, "ext1_dim needs two graph points with generic images");
  }
  return adjacent(w1, w2) ? 1 : 0;
}

bool recenter_check(const Params& params, const Weight& mu, const LambdaWElement& w0pt,
                    const LambdaWElement& wprime) {
  const int f = params.f();
  const Weight base = t_mu_raw(params, mu, w0pt);
  if (!raw_in_graph(params, base)) {
    throw Error(ErrorKind::PreconditionViolation, "recenter_check: base point outside the graph");
  }
  const Weight lambda = base + Weight::eta(f);
  const Weight lhs = t_mu_raw(params, lambda, wprime);
  if (!raw_in_graph(params, lhs)) {
    throw Error(ErrorKind::PreconditionViolation, "recenter_check: w' outside the graph of lambda");
  }
  const WeylElement wJ = omega_element(params, decompose(w0pt).J).element.weyl;
  const Weight rhs = t_mu_raw(params, mu, wJ.inverse().act(wprime) + w0pt);
  return quotient_class(params, lhs) == quotient_class(params, rhs);
}

std::string format_point(const LambdaWElement& w) {
  std::string s;
  for (int i = 0; i < w.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(w[i]);
  }
  return s;
}

std::vector<LambdaWElement> coefficient_box(int f, int radius) {
  std::vector<LambdaWElement> out;
  const Int side = 2 * static_cast<Int>(radius) + 1;
  Int total = 1;
  for (int i = 0; i < f; ++i) total *= side;
  out.reserve(static_cast<std::size_t>(total));
  for (Int idx = 0; idx < total; ++idx) {
    LambdaWElement w = LambdaWElement::zero(f);
    Int rest = idx;
    for (int i = f - 1; i >= 0; --i) {
      w[i] = rest % side - radius;
      rest /= side;
    }
    out.push_back(std::move(w));
  }
  return out;
}

GraphReport enumerate_graph(const Params& params, const Weight& mu, int radius, Exec exec) {
  if (radius < 0) throw Error(ErrorKind::InvalidArgument, "radius must be non-negative");
  if (mu.size() != params.f()) throw Error(ErrorKind::InvalidArgument, "mu has the wrong number of coordinates");
  for (Int r : pairings(mu - Weight::eta(params.f()))) {
    if (r < 0) throw Error(ErrorKind::PreconditionViolation, "mu - eta must be dominant");
  }

  const auto box = coefficient_box(params.f(), radius);
  std::vector<std::optional<SerreWeightClass>> labels(box.size());
  for_each_index(
      box.size(),
      [&](std::size_t i) {
        const Weight raw = t_mu_raw(params, mu, box[i]);
        if (raw_in_graph(params, raw) && is_restricted(params, raw)) labels[i] = serre_class(params, raw);
      },
      exec);

  GraphReport report;
  for (std::size_t i = 0; i < box.size(); ++i) {
    if (labels[i]) report.vertices.push_back({box[i], *labels[i]});
  }
  std::map<LambdaWElement, std::size_t> index;
  for (std::size_t i = 0; i < report.vertices.size(); ++i) index.emplace(report.vertices[i].coeffs, i);
  for (std::size_t i = 0; i < report.vertices.size(); ++i) {
    for (int j = 0; j < params.f(); ++j) {
      auto it = index.find(report.vertices[i].coeffs + LambdaWElement::basis(params.f(), j));
      if (it != index.end()) report.edges.emplace_back(std::min(i, it->second), std::max(i, it->second));
    }
  }
  std::sort(report.edges.begin(), report.edges.end());
  return report;
}

}  // namespace swlab
