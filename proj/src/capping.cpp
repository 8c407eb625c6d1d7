#include "s1m/capping.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

namespace s1m {

std::int64_t orbit_euler_characteristic(const OrbitInvariants& inv) {
  const std::int64_t boundary = inv.f + inv.s + inv.t + static_cast<std::int64_t>(inv.graph.cycles.size());
  if (inv.eps == Orientability::orientable) return 2 - 2 * inv.g - boundary;
  return 2 - inv.g - boundary;
}

namespace {

class DisjointSets {
 public:
  explicit DisjointSets(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }

  std::size_t find(std::size_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }

  void unite(std::size_t a, std::size_t b) { parent_[find(a)] = find(b); }

 private:
  std::vector<std::size_t> parent_;
};

struct CycleOutcome {
  std::vector<RpPairing> pairings;
  std::vector<NewCircle> circles;
};

// Corner j sits between edge j and edge j+1; edge j runs from corner j-1 to
// corner j. Each corner of a valid cycle touches exactly one interior edge,
// which fixes its type.
CycleOutcome cap_cycle(const CycleWord& word, std::size_t index) {
  const auto& edges = word.labels;
  const std::size_t n = edges.size();
  auto corner_before = [n](std::size_t e) { return (e + n - 1) % n; };
  auto corner_after = [](std::size_t e) { return e; };

  std::vector<EdgeLabel> corner_type(n);
  for (std::size_t j = 0; j < n; ++j) {
    corner_type[j] = is_interior(edges[j]) ? edges[j] : edges[(j + 1) % n];
  }

  CycleOutcome out;
  DisjointSets sets(n);
  std::vector<bool> sewn(n, false);

  std::vector<std::size_t> rp_edges;
  for (std::size_t e = 0; e < n; ++e) {
    if (edges[e] == EdgeLabel::RP) {
      rp_edges.push_back(e);
    } else {
      // SP -> F and K -> SE: the edge keeps joining its two corners.
      sets.unite(corner_before(e), corner_after(e));
    }
  }
  if (rp_edges.size() % 2 != 0) throw std::logic_error("cap_off: odd RP count in a validated cycle");

  for (std::size_t k = 0; k + 1 < rp_edges.size(); k += 2) {
    const std::size_t a = rp_edges[k];
    const std::size_t b = rp_edges[k + 1];
    out.pairings.push_back({index, a, b});
    auto corner_of_type = [&](std::size_t e, EdgeLabel type) {
      return corner_type[corner_before(e)] == type ? corner_before(e) : corner_after(e);
    };
    const std::size_t fa = corner_of_type(a, EdgeLabel::F), fb = corner_of_type(b, EdgeLabel::F);
    const std::size_t sa = corner_of_type(a, EdgeLabel::SE), sb = corner_of_type(b, EdgeLabel::SE);
    sets.unite(fa, fb);
    sets.unite(sa, sb);
    sewn[fa] = sewn[fb] = sewn[sa] = sewn[sb] = true;
  }

  // One circle per component, listed in order of first corner.
  std::map<std::size_t, std::size_t> root_to_circle;
  for (std::size_t j = 0; j < n; ++j) {
    const std::size_t root = sets.find(j);
    auto [it, inserted] = root_to_circle.try_emplace(root, out.circles.size());
    if (inserted) out.circles.push_back({corner_type[j], index, NewCircle::Origin::smoothing});
    if (sewn[j]) out.circles[it->second].origin = NewCircle::Origin::rp_sewing;
  }
  return out;
}

}  // namespace

CappingReport cap_off(const OrbitInvariants& inv) {
  ValidationReport report = validate(inv);
  if (!report.ok()) throw InvalidDatum(std::move(report));
  if (inv.closed()) throw std::invalid_argument("cap_off: datum is closed, nothing to cap");

  CappingReport rep;
  rep.input = inv;
  rep.chi_before = orbit_euler_characteristic(inv);

  std::int64_t f_out = inv.f;
  std::int64_t s_out = inv.s;
  const std::vector<CycleWord> words = graph_canonical(inv.graph);
  for (std::size_t c = 0; c < words.size(); ++c) {
    CycleOutcome outcome = cap_cycle(words[c], c);
    for (const NewCircle& circle : outcome.circles) {
      (circle.kind == EdgeLabel::F ? f_out : s_out) += 1;
    }
    rep.rp_pairings.insert(rep.rp_pairings.end(), outcome.pairings.begin(), outcome.pairings.end());
    rep.new_circles.insert(rep.new_circles.end(), outcome.circles.begin(), outcome.circles.end());
  }

  const auto r_p = static_cast<std::int64_t>(count_label(inv.graph, EdgeLabel::RP));
  rep.chi_after = rep.chi_before + inv.t - r_p / 2;

  OrbitInvariants out;
  out.b = 0;
  out.f = f_out;
  out.s = s_out;
  out.t = 0;
  out.pairs = inv.pairs;

  const std::int64_t boundary = f_out + s_out;
  const std::int64_t twice_genus = 2 - rep.chi_after - boundary;
  if (inv.eps == Orientability::orientable && twice_genus >= 0 && twice_genus % 2 == 0) {
    out.eps = Orientability::orientable;
    out.g = twice_genus / 2;
  } else {
    // Nonorientable genus counts crosscaps: chi = 2 - g - B.
    out.eps = Orientability::nonorientable;
    out.g = 2 - rep.chi_after - boundary;
    if (out.g < 1) throw std::logic_error("cap_off: Euler characteristic admits no orbit surface");
    if (inv.eps == Orientability::orientable) {
      for (SeifertPair& p : out.pairs) p.n = std::min(p.n, p.m - p.n);
      rep.notes.push_back("orientable genus equation has no solution; output surface is nonorientable");
    }
  }
  rep.output = out;

  if (inv.t > 0) {
    rep.notes.push_back("filled " + std::to_string(inv.t) + " torus boundaries with solid tori");
  }
  for (const NewCircle& circle : rep.new_circles) {
    rep.notes.push_back("cycle " + std::to_string(circle.cycle) + " closed into a " +
                        std::string(to_string(circle.kind)) + " circle by " +
                        (circle.origin == NewCircle::Origin::smoothing ? "smoothing corners" : "RP sewing"));
  }
  if (!rep.rp_pairings.empty()) {
    rep.notes.push_back(
        "RP edges paired consecutively in canonical order; other pairings may give non-diffeomorphic fillings");
  }
  rep.notes.push_back("b = 0 already holds for bounded input; the principal-orbit twist is not needed");

  ValidationReport check = validate(rep.output);
  if (!check.ok() || !rep.output.closed()) {
    throw std::logic_error("cap_off: produced an invalid closed datum");
  }
  return rep;
}

bool verify_capping(const CappingReport& rep) {
  const OrbitInvariants& out = rep.output;
  if (!validate(out).ok() || out.t != 0 || !out.graph.empty() || out.b != 0) return false;
  const auto r_p = static_cast<std::int64_t>(count_label(rep.input.graph, EdgeLabel::RP));
  if (r_p % 2 != 0) return false;
  if (orbit_euler_characteristic(rep.input) != rep.chi_before) return false;
  if (rep.chi_after != rep.chi_before + rep.input.t - r_p / 2) return false;
  return orbit_euler_characteristic(out) == rep.chi_after;
}

}  // namespace s1m
