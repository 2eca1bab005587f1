#include "swlab/verify.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <random>
#include <set>

#include "swlab/d0.hpp"
#include "swlab/envelope.hpp"
#include "swlab/extension_graph.hpp"

namespace swlab {

namespace {

using Check = std::function<std::optional<std::string>(std::size_t)>;

constexpr std::size_t kExhaustiveLimit = 1000000;

SuiteOutcome sweep(const std::string& name, const Params& params, std::size_t n, const Check& check, Exec exec) {
  const Check guarded = [&](std::size_t i) -> std::optional<std::string> {
    try {
      return check(i);
    } catch (const Error& e) {
      return std::string(to_string(e.kind())) + ": " + e.what();
    }
  };
  SuiteOutcome out{name, params.p(), params.f(), true, n, {}};
  if (auto failure = first_failure(n, guarded, exec)) {
    out.passed = false;
    out.counterexample = failure->message;
  }
  return out;
}

std::string describe(const TameParam& t) { return "w=" + format_weyl(t.w()) + " mu=" + format_weight(t.mu()); }

Int int_pow(Int base, int e) {
  Int r = 1;
  for (int i = 0; i < e; ++i) r *= base;
  return r;
}

std::vector<std::vector<MultiIndex>> all_antichains(int f) {
  const auto indices = all_indices(f);
  const std::size_t n = indices.size();
  std::vector<std::vector<MultiIndex>> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    std::vector<MultiIndex> set;
    for (std::size_t i = 0; i < n; ++i) {
      if ((mask >> i) & 1u) set.push_back(indices[i]);
    }
    std::sort(set.begin(), set.end());
    if (minimal_elements(set) == set) out.push_back(std::move(set));
  }
  return out;
}

std::string format_indices(const std::vector<MultiIndex>& set) {
  std::string s = "{";
  for (std::size_t i = 0; i < set.size(); ++i) {
    if (i) s += ' ';
    s += format_index(set[i]);
  }
  return s + "}";
}

std::optional<std::string> closure_identity(int f, const std::vector<MultiIndex>& a, const std::vector<MultiIndex>& b) {
  const auto meet = fil_index_intersect(a, b);
  if (minimal_elements(meet) != meet) return "result " + format_indices(meet) + " is not an antichain";
  const auto ca = upward_closure(f, a);
  const auto cb = upward_closure(f, b);
  const auto cm = upward_closure(f, meet);
  for (std::size_t i = 0; i < cm.size(); ++i) {
    if (cm[i] != (ca[i] && cb[i])) {
      return "closure mismatch for " + format_indices(a) + " and " + format_indices(b) + " at " +
             format_index(index_from_code(f, i));
    }
  }
  return std::nullopt;
}

std::optional<std::string> d0_case(const TameParam& t) {
  const D0Report rep = d0_full(t, Exec::Serial);
  const std::size_t expected = std::size_t{1} << (2 * t.params().f());
  if (rep.all_constituents.size() != expected) {
    return describe(t) + ": " + std::to_string(rep.all_constituents.size()) + " constituents";
  }
  if (!radical_disjointness_check(rep)) return describe(t) + ": radical meets a block cosocle";
  if (!upperbound_consistency(rep)) return describe(t) + ": Hom bound fails";
  std::vector<SerreWeightClass> cosocles;
  for (const auto& b : rep.blocks) cosocles.push_back(b.cosocle);
  std::sort(cosocles.begin(), cosocles.end());
  if (cosocles != w_question(t)) return describe(t) + ": block cosocles differ from the predicted weights";
  return std::nullopt;
}

}  // namespace

std::vector<Weight> deep_weights(const Params& params) {
  const int f = params.f();
  const Int span = params.p() - 3;
  std::vector<Weight> out;
  const Int total = int_pow(span, f);
  for (Int idx = 0; idx < total; ++idx) {
    Weight mu = Weight::zero(f);
    Int rest = idx;
    for (int i = f - 1; i >= 0; --i) {
      mu[i] = {2 + rest % span, 0};
      rest /= span;
    }
    out.push_back(std::move(mu));
  }
  return out;
}

std::vector<TameParam> generic_params(const Params& params) {
  const int f = params.f();
  std::vector<TameParam> out;
  const auto mus = deep_weights(params);
  for (std::uint32_t flags = 0; flags < (1u << f); ++flags) {
    for (const auto& mu : mus) {
      TameParam t(params, WeylElement(f, flags), mu);
      if (is_one_generic(t)) out.push_back(std::move(t));
    }
  }
  return out;
}

std::vector<TameParam> strictly_generic_params(const Params& params) {
  std::vector<TameParam> out;
  for (auto& t : generic_params(params)) {
    if (is_one_generic_all_presentations(t)) out.push_back(std::move(t));
  }
  return out;
}

SuiteOutcome check_injectivity(const Params& params, const SuiteConfig& cfg) {
  const auto mus = deep_weights(params);
  const auto box = coefficient_box(params.f(), cfg.radius);
  const auto cube = coefficient_box(params.f(), 1);
  return sweep("injectivity", params, mus.size(), [&](std::size_t i) -> std::optional<std::string> {
    const Weight& mu = mus[i];
    for (const auto& pt : cube) {
      if (!in_graph(params, mu, pt)) {
        return "mu=" + format_weight(mu) + ": label point (" + format_point(pt) + ") leaves the graph";
      }
      t_mu(params, mu, pt);
    }
    std::map<QuotientClass, LambdaWElement> seen;
    for (const auto& pt : box) {
      if (!in_graph(params, mu, pt)) continue;
      const auto [it, fresh] = seen.emplace(quotient_class(params, t_mu_raw(params, mu, pt)), pt);
      if (!fresh) {
        return "mu=" + format_weight(mu) + ": points (" + format_point(it->second) + ") and (" + format_point(pt) +
               ") share a class";
      }
    }
    return std::nullopt;
  }, cfg.exec);
}

SuiteOutcome check_hypercube_size(const Params& params, const SuiteConfig& cfg) {
  const auto ts = generic_params(params);
  const std::size_t expected = std::size_t{1} << params.f();
  return sweep("hypercube_size", params, ts.size(), [&](std::size_t i) -> std::optional<std::string> {
    const auto wq = w_question(ts[i]);
    if (wq.size() != expected) return describe(ts[i]) + ": |W?| = " + std::to_string(wq.size());
    return std::nullopt;
  }, cfg.exec);
}

SuiteOutcome check_dimension_identity(const Params& params, const SuiteConfig& cfg) {
  const auto mus = deep_weights(params);
  const Int p = params.p();
  return sweep("dimension_identity", params, mus.size(), [&](std::size_t i) -> std::optional<std::string> {
    const Weight& mu = mus[i];
    const GradedReport graded = graded_pieces(params, mu);
    Int summed = 0;
    for (const JSet& J : all_jsets(params.f())) summed += dim_serre(sigma_label(params, mu, J));
    const Int expected = int_pow(2 * p, params.f());
    if (summed != expected || graded.total_dim != expected) {
      return "mu=" + format_weight(mu) + ": total dimension " + std::to_string(summed);
    }
    for (int c = 0; c < params.f(); ++c) {
      const FactorDims d = factor_dims(params, mu, c);
      const Int m = pairing(mu, c);
      if (d.cosocle + d.middle + d.socle != 2 * p) {
        return "mu=" + format_weight(mu) + ": factor " + std::to_string(c) + " has dimension " +
               std::to_string(d.cosocle + d.middle + d.socle);
      }
      if (d.fil1_weyl_module != 2 * p - m || d.middle + d.socle != d.fil1_weyl_module) {
        return "mu=" + format_weight(mu) + ": Fil^1 of factor " + std::to_string(c) + " has dimension " +
               std::to_string(d.fil1_weyl_module);
      }
    }
    return std::nullopt;
  }, cfg.exec);
}

SuiteOutcome check_graded_multiplicity(const Params& params, const SuiteConfig& cfg) {
  const auto mus = deep_weights(params);
  const int f = params.f();
  return sweep("graded_multiplicity", params, mus.size(), [&](std::size_t i) -> std::optional<std::string> {
    const Weight& mu = mus[i];
    const GradedReport graded = graded_pieces(params, mu);
    for (const auto& [k, labels] : graded.by_index) {
      std::size_t ones = 0;
      for (int x : k.k) ones += x == 1;
      if (labels.size() != (std::size_t{1} << ones)) {
        return "mu=" + format_weight(mu) + ": W_" + format_index(k) + " has " + std::to_string(labels.size()) +
               " labels";
      }
      std::set<SerreWeightClass> successors;
      std::size_t count = 0;
      for (int c = 0; c < f; ++c) {
        if (k.k[static_cast<std::size_t>(c)] == 2) continue;
        MultiIndex next = k;
        ++next.k[static_cast<std::size_t>(c)];
        for (const auto& label : graded.by_index.at(next)) {
          successors.insert(label.cls);
          ++count;
        }
      }
      if (successors.size() != count) {
        return "mu=" + format_weight(mu) + ": successors of " + format_index(k) + " repeat a class";
      }
    }
    for (const JSet& J : all_jsets(f)) vbar_layers(params, mu, J);
    return std::nullopt;
  }, cfg.exec);
}

SuiteOutcome check_label_injectivity(const Params& params, const SuiteConfig& cfg) {
  const auto mus = deep_weights(params);
  const int f = params.f();
  const auto labels = all_jsets(f);
  return sweep("label_injectivity", params, mus.size(), [&](std::size_t i) -> std::optional<std::string> {
    std::vector<SerreWeightClass> classes;
    for (const JSet& J : labels) classes.push_back(sigma_label(params, mus[i], J));
    for (std::size_t a = 0; a < labels.size(); ++a) {
      for (std::size_t b = 0; b < labels.size(); ++b) {
        const bool same_class = classes[a] == classes[b];
        const bool same_point = omega_of(f, labels[a]) == omega_of(f, labels[b]);
        if (same_class != same_point) {
          return "mu=" + format_weight(mus[i]) + ": labels " + format_jset(labels[a]) + " and " +
                 format_jset(labels[b]);
        }
      }
    }
    return std::nullopt;
  }, cfg.exec);
}

SuiteOutcome check_submodule_lattice(const Params& params, const SuiteConfig& cfg) {
  const Weight mu = deep_weights(params).front();
  const auto labels = all_jsets(params.f());
  std::vector<SubmoduleLabel> subs;
  for (const JSet& J : labels) subs.push_back(v_submodule(params, mu, J));
  return sweep("submodule_lattice", params, labels.size(), [&](std::size_t a) -> std::optional<std::string> {
    const SubmoduleLabel& big = subs[a];
    if (big.jh.front() != labels[a]) return "V_" + format_jset(labels[a]) + " misses its generator";
    for (const JSet& Jp : big.jh) {
      if (big.layer_of.at(Jp) != k_of(params.f(), Jp)) return "layer of " + format_jset(Jp) + " is wrong";
    }
    for (std::size_t b = 0; b < labels.size(); ++b) {
      const SubmoduleLabel& small = subs[b];
      const bool contained = std::includes(big.jh.begin(), big.jh.end(), small.jh.begin(), small.jh.end());
      if (submodule_leq(labels[b], labels[a]) != contained) {
        return "V_" + format_jset(labels[b]) + " vs V_" + format_jset(labels[a]) + " disagree with label order";
      }
    }
    std::vector<JSet> next;
    for (const JSet& Jp : big.jh) {
      if (Jp.size() == labels[a].size() + 1) next.push_back(Jp);
    }
    std::vector<JSet> layer;
    for (const auto& c : vbar_layers(params, mu, labels[a]).layer1) layer.push_back(c.J);
    if (layer != next) return "second layer of Vbar_" + format_jset(labels[a]) + " differs from V_J";
    return std::nullopt;
  }, cfg.exec);
}

SuiteOutcome check_filtration_closure(const Params& params, const SuiteConfig& cfg) {
  const int f = params.f();
  if (f <= 2) {
    const auto antichains = all_antichains(f);
    const std::size_t n = antichains.size();
    return sweep("filtration_closure", params, n * n, [&](std::size_t i) {
      return closure_identity(f, antichains[i / n], antichains[i % n]);
    }, cfg.exec);
  }
  const auto indices = all_indices(f);
  std::vector<std::pair<std::vector<MultiIndex>, std::vector<MultiIndex>>> samples;
  std::mt19937_64 rng(cfg.seed);
  std::bernoulli_distribution pick(0.2);
  auto draw = [&] {
    std::vector<MultiIndex> set;
    for (const auto& k : indices) {
      if (pick(rng)) set.push_back(k);
    }
    return minimal_elements(std::move(set));
  };
  for (std::size_t s = 0; s < cfg.cases; ++s) {
    auto a = draw();
    auto b = draw();
    samples.emplace_back(std::move(a), std::move(b));
  }
  return sweep("filtration_closure", params, samples.size(), [&](std::size_t i) {
    return closure_identity(f, samples[i].first, samples[i].second);
  }, cfg.exec);
}

SuiteOutcome check_hom_span(const Params& params, const SuiteConfig& cfg) {
  const auto mus = deep_weights(params);
  const int f = params.f();
  const auto labels = all_jsets(f);
  return sweep("hom_span", params, mus.size(), [&](std::size_t i) -> std::optional<std::string> {
    const Weight& mu = mus[i];
    const SerreWeightClass base = serre_class(params, mu - Weight::eta(f));
    if (hom_dim(params, mu, base).count != (Int{1} << f)) {
      return "mu=" + format_weight(mu) + ": Hom from the cosocle class has the wrong dimension";
    }
    std::map<SerreWeightClass, Int> counted;
    for (const JSet& J : labels) counted.emplace(sigma_label(params, mu, J), 0);
    Int total = 0;
    for (auto& [cls, count] : counted) {
      const HomDim h = hom_dim(params, mu, cls);
      const LambdaWElement point = omega_of(f, h.labels.front());
      const auto same_point = std::count_if(labels.begin(), labels.end(),
                                            [&](const JSet& J) { return omega_of(f, J) == point; });
      if (h.count != same_point) return "mu=" + format_weight(mu) + ": Hom count for " + format_class(cls);
      total += h.count;
    }
    if (total != int_pow(4, f)) return "mu=" + format_weight(mu) + ": Hom counts sum to " + std::to_string(total);
    return std::nullopt;
  }, cfg.exec);
}

SuiteOutcome check_herzig_bijection(const Params& params, const SuiteConfig& cfg) {
  const int f = params.f();
  const Int side = params.p() - 1;
  const Int modulus = params.modulus();
  const Int domain = int_pow(side, f) * modulus;
  auto class_at = [&](Int idx) {
    SerreWeightClass c{std::vector<Int>(static_cast<std::size_t>(f)), idx % modulus};
    Int rest = idx / modulus;
    for (int i = 0; i < f; ++i) {
      c.r[static_cast<std::size_t>(i)] = rest % side;
      rest /= side;
    }
    return c;
  };
  std::vector<Int> points;
  if (domain <= static_cast<Int>(kExhaustiveLimit)) {
    for (Int i = 0; i < domain; ++i) points.push_back(i);
  } else {
    std::mt19937_64 rng(cfg.seed);
    std::uniform_int_distribution<Int> dist(0, domain - 1);
    for (std::size_t s = 0; s < cfg.cases; ++s) points.push_back(dist(rng));
  }
  std::vector<SerreWeightClass> images(points.size());
  auto out = sweep("herzig_bijection", params, points.size(), [&](std::size_t i) -> std::optional<std::string> {
    const SerreWeightClass c = class_at(points[i]);
    const SerreWeightClass image = herzig_reflect(params, c);
    images[i] = image;
    if (herzig_reflect_inverse(params, image) != c) return format_class(c) + " does not round-trip";
    if (herzig_reflect(params, herzig_reflect_inverse(params, c)) != c) {
      return format_class(c) + " does not round-trip through the inverse";
    }
    return std::nullopt;
  }, cfg.exec);
  if (out.passed && domain <= static_cast<Int>(kExhaustiveLimit)) {
    std::sort(images.begin(), images.end());
    if (std::adjacent_find(images.begin(), images.end()) != images.end()) {
      out.passed = false;
      out.counterexample = "two regular classes share an image";
    }
  }
  return out;
}

SuiteOutcome check_pdot_action(const Params& params, const SuiteConfig& cfg) {
  const int f = params.f();
  struct Triple {
    ExtAffineElement g;
    ExtAffineElement h;
    Weight w;
  };
  std::mt19937_64 rng(cfg.seed);
  std::uniform_int_distribution<Int> shift(-3, 3);
  std::uniform_int_distribution<Int> coord(-50, 50);
  std::uniform_int_distribution<std::uint32_t> flags(0, (1u << f) - 1u);
  auto element = [&] {
    Weight t = Weight::zero(f);
    for (int i = 0; i < f; ++i) t[i] = {shift(rng), shift(rng)};
    return ExtAffineElement{t, WeylElement(f, flags(rng))};
  };
  std::vector<Triple> samples;
  for (std::size_t s = 0; s < cfg.cases; ++s) {
    Triple tr{element(), element(), Weight::zero(f)};
    for (int i = 0; i < f; ++i) tr.w[i] = {coord(rng), coord(rng)};
    samples.push_back(std::move(tr));
  }
  return sweep("pdot_action", params, samples.size(), [&](std::size_t i) -> std::optional<std::string> {
    const auto& [g, h, w] = samples[i];
    if (p_dot(params, g * h, w) != p_dot(params, g, p_dot(params, h, w))) {
      return "composition fails at w=" + format_weight(w);
    }
    if (p_dot(params, g.inverse(), p_dot(params, g, w)) != w) return "inverse fails at w=" + format_weight(w);
    if (p_dot(params, ExtAffineElement::identity(f), w) != w) return "identity moves w=" + format_weight(w);
    return std::nullopt;
  }, cfg.exec);
}

SuiteOutcome check_symmetry(const Params& params, const SuiteConfig& cfg) {
  const auto ts = generic_params(params);
  const auto box = coefficient_box(params.f(), 1);
  const std::uint32_t corners = 1u << params.f();
  return sweep("symmetry", params, ts.size(), [&](std::size_t i) -> std::optional<std::string> {
    const TameParam& t = ts[i];
    for (std::uint32_t label = 0; label < corners; ++label) {
      const LambdaWElement base = hypercube_point(t.w(), label);
      for (const auto& wp : box) {
        bool holds = false;
        try {
          holds = recenter_check(params, t.mu(), base, wp);
        } catch (const Error& e) {
          if (e.kind() == ErrorKind::PreconditionViolation) continue;
          throw;
        }
        if (!holds) {
          return describe(t) + ": recentring at (" + format_point(base) + ") fails for (" + format_point(wp) + ")";
        }
      }
    }
    return std::nullopt;
  }, cfg.exec);
}

SuiteOutcome check_d0_multiplicity(const Params& params, const SuiteConfig& cfg) {
  const auto ts = generic_params(params);
  return sweep("d0_multiplicity_one", params, ts.size(), [&](std::size_t i) { return d0_case(ts[i]); },
               cfg.exec);
}

SuiteOutcome check_d0_multiplicity_strict(const Params& params, const SuiteConfig& cfg) {
  const auto ts = strictly_generic_params(params);
  return sweep("d0_multiplicity_one_strict", params, ts.size(), [&](std::size_t i) { return d0_case(ts[i]); },
               cfg.exec);
}

SuiteOutcome check_presentation_independence(const Params& params, const SuiteConfig& cfg) {
  const auto ts = strictly_generic_params(params);
  const std::uint32_t corners = 1u << params.f();
  return sweep("presentation_independence", params, ts.size(), [&](std::size_t i) -> std::optional<std::string> {
    const D0Report rep = d0_full(ts[i], Exec::Serial);
    for (const auto& block : rep.blocks) {
      std::vector<SerreWeightClass> direct;
      for (const auto& c : block.constituents) direct.push_back(c.cls);
      std::sort(direct.begin(), direct.end());
      for (std::uint32_t via = 0; via < corners; ++via) {
        if (block_via_presentation(ts[i], block.label, via) != direct) {
          return describe(ts[i]) + ": block " + std::to_string(block.label) + " changes through presentation " +
                 std::to_string(via);
        }
      }
    }
    return std::nullopt;
  }, cfg.exec);
}

SuiteOutcome check_central_twist(const Params& params, const SuiteConfig& cfg) {
  const auto ts = strictly_generic_params(params);
  const Int modulus = params.modulus();
  return sweep("central_twist", params, ts.size(), [&](std::size_t i) -> std::optional<std::string> {
    const TameParam& t = ts[i];
    const TameParam shifted(params, t.w(), t.mu() + Weight::central(params.f(), 0));
    const D0Report a = d0_full(t, Exec::Serial);
    const D0Report b = d0_full(shifted, Exec::Serial);
    if (a.multiplicity_free != b.multiplicity_free) return describe(t) + ": twist changes multiplicity";
    std::optional<Int> delta;
    for (std::size_t k = 0; k < a.blocks.size(); ++k) {
      const auto& ca = a.blocks[k].constituents;
      const auto& cb = b.blocks[k].constituents;
      if (ca.size() != cb.size()) return describe(t) + ": twist changes block sizes";
      for (std::size_t j = 0; j < ca.size(); ++j) {
        if (ca[j].cls.r != cb[j].cls.r) return describe(t) + ": twist changes an r-vector";
        const Int step = ((cb[j].cls.d - ca[j].cls.d) % modulus + modulus) % modulus;
        if (delta && *delta != step) return describe(t) + ": twist acts non-uniformly on d";
        delta = step;
      }
    }
    return std::nullopt;
  }, cfg.exec);
}

SuiteOutcome check_classical(const Params& params, const SuiteConfig& cfg) {
  const Int p = params.p();
  const auto mus = deep_weights(params);
  return sweep("classical_f1", params, mus.size(), [&](std::size_t i) -> std::optional<std::string> {
    const Weight& mu = mus[i];
    const Int r = pairing(mu, 0) - 1;
    const auto norm = [&](Int d) { return ((d % params.modulus()) + params.modulus()) % params.modulus(); };
    // Sym^r with Sym^{p-3-r} det^{r+1} (principal series) or Sym^{p-1-r} det^r (irreducible)
    std::vector<SerreWeightClass> principal{{{r}, 0}, {{p - 3 - r}, norm(r + 1)}};
    std::vector<SerreWeightClass> irreducible{{{r}, 0}, {{p - 1 - r}, norm(r)}};
    std::sort(principal.begin(), principal.end());
    std::sort(irreducible.begin(), irreducible.end());
    const TameParam te(params, WeylElement::identity(1), mu);
    const TameParam ts(params, WeylElement::longest(1), mu);
    if (!is_one_generic(te)) return std::nullopt;
    if (w_question(te) != principal) return "mu=" + format_weight(mu) + ": w=e weights differ from Sym pairs";
    if (w_question(ts) != irreducible) return "mu=" + format_weight(mu) + ": w=s weights differ from Sym pairs";
    for (const TameParam* t : {&te, &ts}) {
      const D0Report rep = d0_full(*t, Exec::Serial);
      for (const auto& b : rep.blocks) {
        if (b.constituents.size() != 2) return describe(*t) + ": block length " + std::to_string(b.constituents.size());
      }
      if (rep.all_constituents.size() != 4) return describe(*t) + ": total length is not 4";
    }
    return std::nullopt;
  }, cfg.exec);
}

const std::vector<CheckSpec>& suite_checks() {
  static const std::vector<CheckSpec> checks{
      {"injectivity", check_injectivity},
      {"hypercube_size", check_hypercube_size},
      {"dimension_identity", check_dimension_identity},
      {"graded_multiplicity", check_graded_multiplicity},
      {"label_injectivity", check_label_injectivity},
      {"submodule_lattice", check_submodule_lattice},
      {"filtration_closure", check_filtration_closure},
      {"hom_span", check_hom_span},
      {"herzig_bijection", check_herzig_bijection},
      {"pdot_action", check_pdot_action},
      {"symmetry", check_symmetry},
      {"d0_multiplicity_one", check_d0_multiplicity},
      {"d0_multiplicity_one_strict", check_d0_multiplicity_strict},
      {"presentation_independence", check_presentation_independence, 2},
      {"central_twist", check_central_twist},
      {"classical_f1", check_classical, 1},
  };
  return checks;
}

std::vector<SuiteOutcome> run_suite(const SuiteConfig& cfg) {
  std::vector<Params> configs;
  for (Int p : cfg.p_list) {
    for (int f : cfg.f_list) configs.emplace_back(p, f);
  }
  std::sort(configs.begin(), configs.end(), [](const Params& a, const Params& b) {
    return std::pair(a.p(), a.f()) < std::pair(b.p(), b.f());
  });
  configs.erase(std::unique(configs.begin(), configs.end()), configs.end());

  std::vector<SuiteOutcome> out;
  for (const auto& check : suite_checks()) {
    for (const auto& params : configs) {
      if (params.f() > check.max_f) continue;
      try {
        out.push_back(check.run(params, cfg));
      } catch (const Error& e) {
        // the sweep domain itself could not be built
        out.push_back({check.name, params.p(), params.f(), false, 0, std::string(to_string(e.kind())) + ": " + e.what()});
      }
    }
  }
  return out;
}

bool all_passed(const std::vector<SuiteOutcome>& outcomes) {
  return std::all_of(outcomes.begin(), outcomes.end(), [](const SuiteOutcome& o) { return o.passed; });
}

}  // namespace swlab
