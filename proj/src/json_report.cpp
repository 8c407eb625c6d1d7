#include "s1m/json_report.hpp"

#include "s1m/textio.hpp"

namespace s1m {

using nlohmann::json;

json to_json(const Rational& r) { return {{"num", r.num()}, {"den", r.den()}}; }

json to_json(const ValidationReport& report) {
  json violations = json::array();
  for (const Violation& v : report.violations) {
    violations.push_back({{"condition", std::string(to_string(v.condition))}, {"message", v.message}});
  }
  return {{"ok", report.ok()}, {"violations", violations}};
}

namespace {

json graph_json(const CycleGraph& graph) {
  json cycles = json::array();
  for (const CycleWord& word : graph_canonical(graph)) {
    json labels = json::array();
    for (EdgeLabel l : word.labels) labels.push_back(std::string(to_string(l)));
    cycles.push_back(labels);
  }
  return cycles;
}

json pairs_json(const std::vector<SeifertPair>& pairs) {
  json out = json::array();
  for (const SeifertPair& p : pairs) out.push_back({p.m, p.n});
  return out;
}

}  // namespace

json to_json(const OrbitInvariants& inv) {
  return {{"text", serialize(inv)},
          {"b", inv.b},
          {"eps", std::string(1, to_char(inv.eps))},
          {"g", inv.g},
          {"f", inv.f},
          {"s", inv.s},
          {"t", inv.t},
          {"pairs", pairs_json(inv.pairs)},
          {"graph", graph_json(inv.graph)}};
}

json to_json(const CanonicalForm& form) {
  json graph = json::array();
  for (const CycleWord& word : form.graph_canon) {
    json labels = json::array();
    for (EdgeLabel l : word.labels) labels.push_back(std::string(to_string(l)));
    graph.push_back(labels);
  }
  return {{"b", form.b},
          {"eps", std::string(1, to_char(form.eps))},
          {"g", form.g},
          {"f", form.f},
          {"s", form.s},
          {"t", form.t},
          {"pairs", pairs_json(form.pairs)},
          {"graph_canon", graph}};
}

json to_json(const DerivedCounts& c) {
  return {{"f0_minus_f", c.f0_minus_f}, {"s0_minus_s", c.s0_minus_s}, {"s_p", c.s_p},
          {"k", c.k},                   {"r_p", c.r_p},               {"v_f", c.v_f},
          {"v_s", c.v_s},               {"boundary_circles", c.boundary_circles}};
}

json to_json(const CappingReport& report) {
  json pairings = json::array();
  for (const RpPairing& p : report.rp_pairings) {
    pairings.push_back({{"cycle", p.cycle}, {"positions", {p.first, p.second}}});
  }
  json circles = json::array();
  for (const NewCircle& c : report.new_circles) {
    circles.push_back({{"kind", std::string(to_string(c.kind))},
                       {"cycle", c.cycle},
                       {"origin", c.origin == NewCircle::Origin::smoothing ? "smoothing" : "rp_sewing"}});
  }
  return {{"input", to_json(report.input)},
          {"output", to_json(report.output)},
          {"chi_before", report.chi_before},
          {"chi_after", report.chi_after},
          {"rp_pairings", pairings},
          {"new_circles", circles},
          {"notes", report.notes},
          {"verified", verify_capping(report)}};
}

json to_json(const FormalityResult& result) {
  json generators = json::array();
  for (const ModuleGenerator& g : result.generators) {
    generators.push_back({{"degree", g.degree}, {"expression", g.expression}});
  }
  return {{"formal", result.formal},
          {"reason", result.reason},
          {"generators", generators},
          {"degree_counts", result.formal ? json(result.degree_counts()) : json::array()}};
}

json to_json(const EulerNumber& euler) {
  switch (euler.kind) {
    case EulerNumber::Kind::rational:
      return {{"kind", "rational"}, {"value", to_json(euler.value)}, {"reason", euler.reason}};
    case EulerNumber::Kind::zero:
      return {{"kind", "zero"}, {"value", to_json(Rational(0))}, {"reason", euler.reason}};
    case EulerNumber::Kind::undefined:
      break;
  }
  return {{"kind", "undefined"}, {"value", nullptr}, {"reason", euler.reason}};
}

json series_json(const PoincareSeries& series, std::size_t upto) {
  return {{"numerator", series.numerator()},
          {"denominator", series.denominator()},
          {"expansion", series.expand(upto)}};
}

json betti_json(const std::vector<std::int64_t>& values, std::size_t from) {
  return {{"from", from}, {"betti", values}};
}

std::string emit_json(const json& value) { return value.dump(); }

}  // namespace s1m
