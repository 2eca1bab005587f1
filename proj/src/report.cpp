#include "swlab/report.hpp"

#include <iomanip>
#include <sstream>

namespace swlab {

using nlohmann::ordered_json;

namespace {

std::vector<int> bits(std::uint32_t mask) {
  std::vector<int> out;
  for (int i = 0; i < 32; ++i) {
    if ((mask >> i) & 1u) out.push_back(i);
  }
  return out;
}

std::string class_text(const SerreWeightClass& c) {
  std::string s = "r=(";
  for (std::size_t i = 0; i < c.r.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(c.r[i]);
  }
  return s + ") d=" + std::to_string(c.d);
}

ordered_json param_json(const TameParam& t) {
  return {{"p", t.params().p()}, {"f", t.params().f()}, {"w", format_weyl(t.w())}, {"mu", format_weight(t.mu())}};
}

}  // namespace

ordered_json class_json(const SerreWeightClass& c) { return {{"r", c.r}, {"d", c.d}}; }

ordered_json jset_json(const JSet& J) { return {{"plus", bits(J.plus)}, {"minus", bits(J.minus)}}; }

ordered_json graph_json(const Params& params, const Weight& mu, int radius, const GraphReport& g) {
  ordered_json vertices = ordered_json::array();
  for (const auto& v : g.vertices) vertices.push_back({{"coeffs", v.coeffs.coeffs}, {"r", v.cls.r}, {"d", v.cls.d}});
  ordered_json edges = ordered_json::array();
  for (const auto& [a, b] : g.edges) edges.push_back({a, b});
  return {{"p", params.p()},        {"f", params.f()},  {"mu", format_weight(mu)},
          {"radius", radius},       {"vertices", vertices}, {"edges", edges}};
}

std::string graph_dot(const Params& params, const Weight& mu, const GraphReport& g) {
  std::ostringstream out;
  out << "graph extension_graph {\n";
  out << "  label=\"p=" << params.p() << " f=" << params.f() << " mu=" << format_weight(mu) << "\";\n";
  for (std::size_t i = 0; i < g.vertices.size(); ++i) {
    out << "  v" << i << " [label=\"(" << format_point(g.vertices[i].coeffs) << ")\\n"
        << class_text(g.vertices[i].cls) << "\"];\n";
  }
  for (const auto& [a, b] : g.edges) out << "  v" << a << " -- v" << b << ";\n";
  out << "}\n";
  return out.str();
}

ordered_json weights_json(const TameParam& t) {
  ordered_json wq = ordered_json::array();
  for (const auto& c : w_question(t)) wq.push_back(class_json(c));
  ordered_json jh = ordered_json::array();
  for (const auto& c : jh_dl_reduction(t)) jh.push_back(class_json(c));
  ordered_json pres = ordered_json::array();
  for (const auto& pr : presentations(t)) {
    pres.push_back({{"label", bits(pr.label)},
                    {"sigma", class_json(pr.sigma)},
                    {"lambda", format_weight(pr.lambda)},
                    {"w_sigma", format_weyl(pr.w_sigma)}});
  }
  return {{"param", param_json(t)},
          {"one_generic", is_one_generic(t)},
          {"w_question", wq},
          {"jh_dl", jh},
          {"presentations", pres}};
}

ordered_json envelope_json(const Params& params, const Weight& mu, const GradedReport& g) {
  ordered_json graded = ordered_json::array();
  for (const auto& [k, labels] : g.by_index) {
    ordered_json items = ordered_json::array();
    for (const auto& c : labels) {
      ordered_json item = jset_json(c.J);
      item["r"] = c.cls.r;
      item["d"] = c.cls.d;
      item["dim"] = c.dim;
      items.push_back(item);
    }
    graded.push_back({{"k", k.k}, {"dim", g.dims.at(k)}, {"labels", items}});
  }
  ordered_json edges = ordered_json::array();
  for (const auto& [a, b] : lattice_edges(params.f())) edges.push_back({jset_json(a), jset_json(b)});
  return {{"p", params.p()},
          {"f", params.f()},
          {"mu", format_weight(mu)},
          {"assumptions", {"mu_minus_eta_1_deep", "V_J_exact"}},
          {"graded", graded},
          {"total_dim", g.total_dim},
          {"cosocle", class_json(g.cosocle)},
          {"socle", class_json(g.socle)},
          {"lattice_edges", edges}};
}

ordered_json d0_json(const D0Report& rep) {
  ordered_json blocks = ordered_json::array();
  for (const auto& b : rep.blocks) {
    ordered_json cons = ordered_json::array();
    for (const auto& c : b.constituents) {
      ordered_json item = jset_json(c.J);
      item["r"] = c.cls.r;
      item["d"] = c.cls.d;
      item["layer"] = c.layer;
      item["dual_layer"] = c.dual_layer;
      cons.push_back(item);
    }
    blocks.push_back({{"label", bits(b.label)},
                      {"sigma", class_json(b.sigma)},
                      {"lambda", format_weight(b.lambda)},
                      {"w_sigma", format_weyl(b.w_sigma)},
                      {"constituents", cons}});
  }
  return {{"param", param_json(rep.param)},
          {"assumptions", {"V_J_exact"}},
          {"blocks", blocks},
          {"constituent_count", rep.all_constituents.size()},
          {"multiplicity_free", rep.multiplicity_free},
          {"checks",
           {{"radical_disjoint", radical_disjointness_check(rep)},
            {"upperbound_consistent", upperbound_consistency(rep)}}}};
}

std::string d0_dot(const D0Report& rep) {
  std::ostringstream out;
  out << "digraph d0 {\n  rankdir=TB;\n";
  out << "  label=\"w=" << format_weyl(rep.param.w()) << " mu=" << format_weight(rep.param.mu()) << "\";\n";
  for (std::size_t bi = 0; bi < rep.blocks.size(); ++bi) {
    const auto& b = rep.blocks[bi];
    out << "  subgraph cluster_" << bi << " {\n";
    out << "    label=\"" << class_text(b.sigma) << "\";\n";
    for (std::size_t ci = 0; ci < b.constituents.size(); ++ci) {
      const auto& c = b.constituents[ci];
      out << "    b" << bi << "_" << ci << " [label=\"" << format_jset(c.J) << "\\n" << class_text(c.cls)
          << "\\nlayer " << c.layer << "\"];\n";
    }
    for (std::size_t x = 0; x < b.constituents.size(); ++x) {
      for (std::size_t y = 0; y < b.constituents.size(); ++y) {
        const auto& lo = b.constituents[x];
        const auto& hi = b.constituents[y];
        if (hi.J.contains(lo.J) && hi.layer == lo.layer + 1) {
          out << "    b" << bi << "_" << x << " -> b" << bi << "_" << y << ";\n";
        }
      }
    }
    out << "  }\n";
  }
  out << "}\n";
  return out.str();
}

ordered_json suite_json(const std::vector<SuiteOutcome>& outcomes) {
  ordered_json rows = ordered_json::array();
  for (const auto& o : outcomes) {
    ordered_json row{{"check", o.check}, {"p", o.p}, {"f", o.f}, {"passed", o.passed}, {"cases", o.cases}};
    if (!o.passed) row["counterexample"] = o.counterexample;
    rows.push_back(row);
  }
  bool ok = true;
  for (const auto& o : outcomes) ok = ok && o.passed;
  return {{"outcomes", rows}, {"all_passed", ok}};
}

std::string suite_table(const std::vector<SuiteOutcome>& outcomes) {
  std::ostringstream out;
  out << std::left << std::setw(28) << "check" << std::setw(5) << "p" << std::setw(4) << "f" << std::setw(10)
      << "cases" << "result\n";
  for (const auto& o : outcomes) {
    out << std::left << std::setw(28) << o.check << std::setw(5) << o.p << std::setw(4) << o.f << std::setw(10)
        << o.cases << (o.passed ? "pass" : "FAIL");
    if (!o.passed) out << "  " << o.counterexample;
    out << '\n';
  }
  return out.str();
}

}  // namespace swlab
