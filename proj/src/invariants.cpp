#include "s1m/invariants.hpp"

#include <algorithm>
#include <numeric>

namespace s1m {

char to_char(Orientability eps) { return eps == Orientability::orientable ? 'o' : 'n'; }

std::string_view to_string(Condition condition) {
  switch (condition) {
    case Condition::structure: return "structure";
    case Condition::principal_euler: return "(1)";
    case Condition::seifert_pairs: return "(2)";
    case Condition::corner_graph: return "(3)";
    case Condition::parity: return "parity";
    case Condition::nonorientable_genus: return "nonorientable-genus";
  }
  return "?";
}

bool ValidationReport::has(Condition c) const {
  return std::any_of(violations.begin(), violations.end(),
                     [c](const Violation& v) { return v.condition == c; });
}

namespace {

std::string summarize(const ValidationReport& report) {
  std::string out = "invalid orbit invariants";
  for (const auto& v : report.violations) {
    out += "; ";
    out += to_string(v.condition);
    out += ": ";
    out += v.message;
  }
  return out;
}

std::string pair_text(const SeifertPair& p) {
  return "(" + std::to_string(p.m) + "," + std::to_string(p.n) + ")";
}

bool has_order_two_pair(const OrbitInvariants& inv) {
  return std::any_of(inv.pairs.begin(), inv.pairs.end(), [](const SeifertPair& p) { return p.m == 2; });
}

}  // namespace

InvalidDatum::InvalidDatum(ValidationReport report)
    : std::invalid_argument(summarize(report)), report_(std::move(report)) {}

ValidationReport validate(const OrbitInvariants& inv) {
  ValidationReport report;
  auto add = [&report](Condition c, std::string msg) { report.violations.push_back({c, std::move(msg)}); };

  if (inv.g < 0 || inv.f < 0 || inv.s < 0 || inv.t < 0) {
    add(Condition::structure, "g, f, s and t must be nonnegative");
  }

  const bool nonorientable = inv.eps == Orientability::nonorientable;
  const bool has_structure = inv.f + inv.s + inv.t > 0 || !inv.graph.empty();
  if (has_structure && inv.b != 0) {
    add(Condition::principal_euler, "b must be 0 when f+s+t > 0 or the corner graph is nonempty");
  } else if (!has_structure && nonorientable) {
    if (inv.b != 0 && inv.b != 1) {
      add(Condition::principal_euler, "b must lie in Z_2 = {0,1} for a nonorientable closed datum");
    } else if (inv.b != 0 && has_order_two_pair(inv)) {
      add(Condition::principal_euler, "b must be 0 for nonorientable closed data with some m_i = 2");
    }
  }

  for (const SeifertPair& p : inv.pairs) {
    if (p.m < 2 || p.n < 1) {
      add(Condition::seifert_pairs, "pair " + pair_text(p) + " needs m >= 2 and n >= 1");
      continue;
    }
    if (std::gcd(p.m, p.n) != 1) {
      add(Condition::seifert_pairs, "pair " + pair_text(p) + " is not coprime");
    }
    if (nonorientable) {
      if (2 * p.n > p.m) add(Condition::seifert_pairs, "pair " + pair_text(p) + " needs 0 < n <= m/2");
    } else if (p.n >= p.m) {
      add(Condition::seifert_pairs, "pair " + pair_text(p) + " needs 0 < n < m");
    }
  }

  for (const GraphViolation& gv : validate_graph(inv.graph).violations) {
    add(Condition::corner_graph,
        "cycle " + std::to_string(gv.cycle) + " position " + std::to_string(gv.position) + ": " + gv.message);
  }
  for (std::size_t c = 0; c < inv.graph.cycles.size(); ++c) {
    if (count_label(inv.graph.cycles[c], EdgeLabel::RP) % 2 != 0) {
      add(Condition::parity, "cycle " + std::to_string(c) + " has an odd number of RP edges");
    }
  }

  if (nonorientable && inv.g < 1) {
    add(Condition::nonorientable_genus, "a nonorientable orbit surface has genus at least 1");
  }
  return report;
}

OrbitInvariants normalize(const OrbitInvariants& inv) {
  OrbitInvariants out = inv;
  if (out.eps == Orientability::nonorientable) {
    for (SeifertPair& p : out.pairs) {
      if (p.n > 0 && p.n < p.m) p.n = std::min(p.n, p.m - p.n);
    }
    if (out.closed_free()) {
      out.b = ((out.b % 2) + 2) % 2;
      if (has_order_two_pair(out)) out.b = 0;
    }
  }
  ValidationReport report = validate(out);
  if (!report.ok()) throw InvalidDatum(std::move(report));
  return out;
}

DerivedCounts derived_counts(const OrbitInvariants& inv) {
  DerivedCounts out;
  out.f0_minus_f = static_cast<std::int64_t>(count_label(inv.graph, EdgeLabel::F));
  out.s0_minus_s = static_cast<std::int64_t>(count_label(inv.graph, EdgeLabel::SE));
  out.s_p = static_cast<std::int64_t>(count_label(inv.graph, EdgeLabel::SP));
  out.k = static_cast<std::int64_t>(count_label(inv.graph, EdgeLabel::K));
  out.r_p = static_cast<std::int64_t>(count_label(inv.graph, EdgeLabel::RP));
  for (const Cycle& cycle : inv.graph.cycles) {
    const std::size_t n = cycle.size();
    for (std::size_t i = 0; i < n; ++i) {
      const EdgeLabel a = cycle[i];
      const EdgeLabel b = cycle[(i + 1) % n];
      if (a == EdgeLabel::F || b == EdgeLabel::F) ++out.v_f;
      if (a == EdgeLabel::SE || b == EdgeLabel::SE) ++out.v_s;
    }
    out.rp_per_cycle.push_back(static_cast<std::int64_t>(count_label(cycle, EdgeLabel::RP)));
  }
  out.boundary_circles = inv.f + inv.s + inv.t + static_cast<std::int64_t>(inv.graph.cycles.size());
  return out;
}

bool parity_identities_hold(const DerivedCounts& c) {
  const bool chains = c.v_f == 2 * c.f0_minus_f && c.v_f == 2 * c.s_p + c.r_p && c.v_s == 2 * c.s0_minus_s &&
                      c.v_s == 2 * c.k + c.r_p;
  const bool even = c.v_f % 2 == 0 && c.v_s % 2 == 0 && c.r_p % 2 == 0 &&
                    std::all_of(c.rp_per_cycle.begin(), c.rp_per_cycle.end(),
                                [](std::int64_t n) { return n % 2 == 0; });
  return chains && even;
}

std::size_t CanonicalForm::hash() const {
  std::size_t h = 0xcbf29ce484222325ULL;
  auto mix = [&h](std::uint64_t v) {
    h ^= v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  };
  mix(static_cast<std::uint64_t>(b));
  mix(static_cast<std::uint64_t>(eps));
  mix(static_cast<std::uint64_t>(g));
  mix(static_cast<std::uint64_t>(f));
  mix(static_cast<std::uint64_t>(s));
  mix(static_cast<std::uint64_t>(t));
  for (const auto& p : pairs) {
    mix(static_cast<std::uint64_t>(p.m));
    mix(static_cast<std::uint64_t>(p.n));
  }
  for (const auto& word : graph_canon) {
    mix(0xffULL);
    for (EdgeLabel l : word.labels) mix(static_cast<std::uint64_t>(l));
  }
  return h;
}

CanonicalForm canonical_form(const OrbitInvariants& inv) {
  const OrbitInvariants norm = normalize(inv);
  CanonicalForm form;
  form.b = norm.b;
  form.eps = norm.eps;
  form.g = norm.g;
  form.f = norm.f;
  form.s = norm.s;
  form.t = norm.t;
  form.pairs = norm.pairs;
  std::sort(form.pairs.begin(), form.pairs.end());
  form.graph_canon = graph_canonical(norm.graph);
  return form;
}

bool equivalent(const OrbitInvariants& a, const OrbitInvariants& b) {
  return canonical_form(a) == canonical_form(b);
}

std::string_view to_string(Surface2d surface) {
  switch (surface) {
    case Surface2d::disk: return "Disk";
    case Surface2d::cylinder: return "Cylinder";
    case Surface2d::mobius_band: return "Mobius band";
    case Surface2d::sphere: return "Sphere";
    case Surface2d::projective_plane: return "Projective plane";
    case Surface2d::torus: return "Torus";
    case Surface2d::klein_bottle: return "Klein bottle";
  }
  return "?";
}

std::optional<Surface2d> classify_2d(std::int64_t boundary, std::int64_t f, std::int64_t s) {
  struct Row {
    std::int64_t boundary, f, s;
    Surface2d surface;
  };
  // (boundary circles of M, fixed points, special exceptional orbits)
  static constexpr Row kTable[] = {
      {1, 1, 0, Surface2d::disk},   {2, 0, 0, Surface2d::cylinder},         {1, 0, 1, Surface2d::mobius_band},
      {0, 2, 0, Surface2d::sphere}, {0, 1, 1, Surface2d::projective_plane}, {0, 0, 0, Surface2d::torus},
      {0, 0, 2, Surface2d::klein_bottle},
  };
  for (const Row& row : kTable) {
    if (row.boundary == boundary && row.f == f && row.s == s) return row.surface;
  }
  return std::nullopt;
}

}  // namespace s1m
