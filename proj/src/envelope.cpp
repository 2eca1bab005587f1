#include "swlab/envelope.hpp"

#include <algorithm>
#include <bit>
#include <set>
#include <sstream>

#include "swlab/extension_graph.hpp"
#include "swlab/weight_sets.hpp"

namespace swlab {

int JSet::size() const { return std::popcount(plus) + std::popcount(minus); }

LambdaWElement omega_of(int f, const JSet& J) {
  LambdaWElement w = LambdaWElement::zero(f);
  for (int i = 0; i < f; ++i) w[i] = static_cast<Int>((J.plus >> i) & 1u) - static_cast<Int>((J.minus >> i) & 1u);
  return w;
}

std::string format_jset(const JSet& J) {
  std::ostringstream out;
  out << '{';
  bool first = true;
  for (int i = 0; i < 32; ++i) {
    for (int sign = 0; sign < 2; ++sign) {
      const std::uint32_t mask = sign == 0 ? J.plus : J.minus;
      if ((mask >> i) & 1u) {
        if (!first) out << ',';
        out << (sign == 0 ? '+' : '-') << i;
        first = false;
      }
    }
  }
  out << '}';
  return out.str();
}

std::vector<JSet> all_jsets(int f) {
  std::vector<JSet> out;
  const std::uint32_t n = 1u << f;
  out.reserve(static_cast<std::size_t>(n) * n);
  for (std::uint32_t plus = 0; plus < n; ++plus) {
    for (std::uint32_t minus = 0; minus < n; ++minus) out.push_back({plus, minus});
  }
  return out;
}

int MultiIndex::norm() const {
  int s = 0;
  for (int x : k) s += x;
  return s;
}

bool MultiIndex::leq(const MultiIndex& o) const {
  for (std::size_t i = 0; i < k.size(); ++i) {
    if (k[i] > o.k[i]) return false;
  }
  return true;
}

std::string format_index(const MultiIndex& k) {
  std::string s = "(";
  for (std::size_t i = 0; i < k.k.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(k.k[i]);
  }
  return s + ")";
}

MultiIndex k_of(int f, const JSet& J) {
  MultiIndex k{std::vector<int>(static_cast<std::size_t>(f), 0)};
  for (int i = 0; i < f; ++i) {
    k.k[static_cast<std::size_t>((i + 1) % f)] =
        static_cast<int>((J.plus >> i) & 1u) + static_cast<int>((J.minus >> i) & 1u);
  }
  return k;
}

std::vector<MultiIndex> all_indices(int f) {
  std::size_t n = 1;
  for (int i = 0; i < f; ++i) n *= 3;
  std::vector<MultiIndex> out;
  out.reserve(n);
  for (std::size_t code = 0; code < n; ++code) out.push_back(index_from_code(f, code));
  return out;
}

SerreWeightClass sigma_label(const Params& params, const Weight& mu, const JSet& J) {
  return t_mu(params, mu, omega_of(params.f(), J));
}

void require_envelope_depth(const Params& params, const Weight& mu) {
  if (mu.size() != params.f()) throw Error(ErrorKind::InvalidArgument, "mu has the wrong number of coordinates");
  if (!mu_minus_eta_one_deep(params, mu)) {
    throw Error(ErrorKind::PreconditionViolation, "mu - eta must be 1-deep (pairings in [2, p-2]): mu=" +
                                                      format_weight(mu));
  }
}

GradedReport graded_pieces(const Params& params, const Weight& mu) {
  require_envelope_depth(params, mu);
  const int f = params.f();
  GradedReport report;
  for (const JSet& J : all_jsets(f)) {
    const SerreWeightClass cls = sigma_label(params, mu, J);
    const Int dim = dim_serre(cls);
    const MultiIndex k = k_of(f, J);
    report.by_index[k].push_back({J, cls, dim});
    report.dims[k] += dim;
    report.total_dim += dim;
  }
  for (const auto& [k, labels] : report.by_index) {
    std::set<SerreWeightClass> seen;
    for (const auto& c : labels) {
      if (!seen.insert(c.cls).second) {
        throw Error(ErrorKind::MultiplicityError,
                    "graded piece " + format_index(k) + " repeats " + format_class(c.cls));
      }
    }
  }
  const std::uint32_t full = (1u << f) - 1u;
  report.cosocle = sigma_label(params, mu, JSet{0, 0});
  report.socle = sigma_label(params, mu, JSet{full, full});
  return report;
}

FactorDims factor_dims(const Params& params, const Weight& mu, int i) {
  const Params single(params.p(), 1);
  const Pair coord = mu[i];
  const Weight base(std::vector<Pair>{{coord.a - 1, coord.b}});  // mu_i - omega_0
  const WeylElement w0 = WeylElement::longest(1);
  const Weight reflected =
      p_dot(single, ExtAffineElement::from_right_translation(w0, Weight(std::vector<Pair>{{-1, 0}})), base);
  // The translation (p,-p) is t_{(1,-1)} once the p-dot scaling is applied.
  const Weight weyl_highest = p_dot(single, ExtAffineElement{Weight(std::vector<Pair>{{1, -1}}), w0}, base);

  FactorDims dims;
  dims.cosocle = pairing(base, 0) + 1;
  dims.socle = dims.cosocle;
  dims.middle = 2 * (pairing(reflected, 0) + 1);
  dims.fil1_weyl_module = pairing(weyl_highest, 0) + 1;
  return dims;
}

MultiIndex fil_meet(const MultiIndex& k1, const MultiIndex& k2) {
  MultiIndex out = k1;
  for (std::size_t i = 0; i < out.k.size(); ++i) out.k[i] = std::max(k1.k[i], k2.k[i]);
  return out;
}

std::vector<MultiIndex> minimal_elements(std::vector<MultiIndex> set) {
  std::sort(set.begin(), set.end());
  set.erase(std::unique(set.begin(), set.end()), set.end());
  std::vector<MultiIndex> out;
  for (const auto& k : set) {
    const bool dominated = std::any_of(set.begin(), set.end(), [&](const MultiIndex& o) {
      return o != k && o.leq(k);
    });
    if (!dominated) out.push_back(k);
  }
  return out;
}

std::vector<MultiIndex> fil_index_intersect(const std::vector<MultiIndex>& I1, const std::vector<MultiIndex>& I2) {
  std::vector<MultiIndex> meets;
  meets.reserve(I1.size() * I2.size());
  for (const auto& a : I1) {
    for (const auto& b : I2) meets.push_back(fil_meet(a, b));
  }
  return minimal_elements(std::move(meets));
}

std::size_t index_code(const MultiIndex& k) {
  std::size_t code = 0;
  for (std::size_t i = k.k.size(); i-- > 0;) code = code * 3 + static_cast<std::size_t>(k.k[i]);
  return code;
}

MultiIndex index_from_code(int f, std::size_t code) {
  MultiIndex k{std::vector<int>(static_cast<std::size_t>(f), 0)};
  for (int i = 0; i < f; ++i) {
    k.k[static_cast<std::size_t>(i)] = static_cast<int>(code % 3);
    code /= 3;
  }
  return k;
}

std::vector<bool> upward_closure(int f, const std::vector<MultiIndex>& generators) {
  const auto indices = all_indices(f);
  std::vector<bool> out(indices.size(), false);
  for (std::size_t c = 0; c < indices.size(); ++c) {
    out[c] = std::any_of(generators.begin(), generators.end(),
                         [&](const MultiIndex& g) { return g.leq(indices[c]); });
  }
  return out;
}

std::pair<SerreWeightClass, SerreWeightClass> tensor_translate(const Params& params, const SerreWeightClass& c,
                                                               int i) {
  if (i < 0 || i >= params.f()) throw Error(ErrorKind::InvalidArgument, "coordinate index out of range");
  const Weight base = lift(params, c);
  Weight up = base;
  up[i].a += 1;
  Weight down = base;
  down[i].b += 1;
  return {serre_class(params, up), serre_class(params, down)};
}

ExtensionWitness extension_witness(const Params& params, const Weight& mu, const JSet& J, const JSet& Jp) {
  require_envelope_depth(params, mu);
  if (!Jp.contains(J) || Jp.size() != J.size() + 1) {
    throw Error(ErrorKind::PreconditionViolation,
                "extension witness needs J' = J plus one element: " + format_jset(J) + " vs " + format_jset(Jp));
  }
  const int f = params.f();
  const GradedReport graded = graded_pieces(params, mu);
  ExtensionWitness w;
  w.J = J;
  w.Jp = Jp;
  w.k = k_of(f, J);
  w.kp = k_of(f, Jp);
  w.lower = graded.by_index.at(w.k);
  w.upper = graded.by_index.at(w.kp);
  w.sigma_J = sigma_label(params, mu, J);
  w.sigma_Jp = sigma_label(params, mu, Jp);
  const LambdaWElement a = omega_of(f, J);
  const LambdaWElement b = omega_of(f, Jp);
  w.adjacent = adjacent(a, b);
  if (!w.adjacent) {
    throw Error(ErrorKind::Internal, "labels differing by one element are not adjacent");
  }
  if (ext1_applicable(params, mu, a, b)) w.ext1 = ext1_dim(params, mu, a, b);
  return w;
}

VbarLayers vbar_layers(const Params& params, const Weight& mu, const JSet& J) {
  require_envelope_depth(params, mu);
  const int f = params.f();
  VbarLayers out;
  out.J = J;
  out.sigma = sigma_label(params, mu, J);
  std::set<SerreWeightClass> seen;
  for (int i = 0; i < f; ++i) {
    for (const JSet add : {JSet{1u << i, 0}, JSet{0, 1u << i}}) {
      if (J.contains(add)) continue;
      const JSet Jp = J | add;
      const SerreWeightClass cls = sigma_label(params, mu, Jp);
      if (!seen.insert(cls).second) {
        throw Error(ErrorKind::MultiplicityError, "second layer of Vbar_J repeats " + format_class(cls));
      }
      out.layer1.push_back({Jp, cls, dim_serre(cls)});
    }
  }
  std::sort(out.layer1.begin(), out.layer1.end(),
            [](const Constituent& x, const Constituent& y) { return x.J < y.J; });
  return out;
}

SubmoduleLabel v_submodule(const Params& params, const Weight& mu, const JSet& J) {
  require_envelope_depth(params, mu);
  const int f = params.f();
  SubmoduleLabel out;
  out.J = J;
  for (const JSet& Jp : all_jsets(f)) {
    if (Jp.contains(J)) {
      out.jh.push_back(Jp);
      out.layer_of.emplace(Jp, k_of(f, Jp));
    }
  }
  return out;
}

bool submodule_leq(const JSet& J1, const JSet& J2) { return J1.contains(J2); }

std::vector<std::pair<JSet, JSet>> lattice_edges(int f) {
  std::vector<std::pair<JSet, JSet>> out;
  for (const JSet& J : all_jsets(f)) {
    for (int i = 0; i < f; ++i) {
      for (const JSet add : {JSet{1u << i, 0}, JSet{0, 1u << i}}) {
        if (!J.contains(add)) out.emplace_back(J, J | add);
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

HomDim hom_dim(const Params& params, const Weight& mu, const SerreWeightClass& sigma) {
  require_envelope_depth(params, mu);
  HomDim out;
  for (const JSet& J : all_jsets(params.f())) {
    if (sigma_label(params, mu, J) == sigma) {
      ++out.count;
      out.labels.push_back(J);
    }
  }
  return out;
}

}  // namespace swlab
