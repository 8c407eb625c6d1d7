// Acceptance suite: one PASS/FAIL line per criterion. Exit status is the
// number of failed criteria.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <numeric>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "s1m/capping.hpp"
#include "s1m/cohomology.hpp"
#include "s1m/enumerate.hpp"
#include "s1m/textio.hpp"
#include "support.hpp"

using namespace s1m;

namespace {

// Pinned limits.
constexpr double kBettiSeconds = 1.0;
constexpr std::size_t kBettiDegree = 20;
constexpr std::int64_t kIdentityMaxF = 10;
constexpr std::int64_t kEulerMaxM = 1000;
constexpr std::size_t kParityMaxLen = 8;
constexpr int kPerturbations = 10000;
constexpr int kRingCases = 1000;
constexpr std::size_t kRoundTrips = 10000;
constexpr int kFuzzInputs = 100000;

struct Outcome {
  bool pass = true;
  std::string detail;
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

OrbitInvariants closed(Orientability eps, std::int64_t g, std::int64_t f, std::int64_t s) {
  OrbitInvariants inv;
  inv.eps = eps;
  inv.g = g;
  inv.f = f;
  inv.s = s;
  return inv;
}

PoincareSeries ratio(std::vector<std::int64_t> num, std::vector<std::int64_t> den) {
  std::vector<Rational> n(num.begin(), num.end()), d(den.begin(), den.end());
  return PoincareSeries(Polynomial(n), Polynomial(d));
}

// --- 1 ----------------------------------------------------------------------
Outcome betti_formula() {
  const auto start = Clock::now();
  std::size_t checked = 0, bad = 0;
  for (auto eps : {Orientability::orientable, Orientability::nonorientable}) {
    for (std::int64_t g = eps == Orientability::orientable ? 0 : 1; g <= 5; ++g) {
      for (std::int64_t f = 0; f <= 5; ++f) {
        for (std::int64_t s = 0; s <= 5; ++s) {
          if (f + s == 0) continue;
          const OrbitInvariants inv = closed(eps, g, f, s);
          const std::vector<std::int64_t> got = equivariant_poincare(inv).expand(kBettiDegree);
          const std::int64_t b1 = (eps == Orientability::orientable ? 2 * g : g) + f + s - 1;
          for (std::size_t k = 0; k <= kBettiDegree; ++k) {
            const std::int64_t want = k == 0 ? 1 : (k == 1 ? b1 : f);
            if (got[k] != want) ++bad;
          }
          ++checked;
        }
      }
    }
  }
  const double secs = seconds_since(start);
  std::ostringstream os;
  os << checked << " data through degree " << kBettiDegree << ", " << bad << " mismatches, " << secs << " s (limit "
     << kBettiSeconds << " s)";
  return {bad == 0 && secs < kBettiSeconds, os.str()};
}

// --- 2 ----------------------------------------------------------------------
Outcome series_identities() {
  std::size_t bad = 0;
  const PoincareSeries tail = ratio({0, 0, 1, 1}, {1, 0, -1});  // (x^2 + x^3)/(1 - x^2)
  for (std::int64_t f = 1; f <= kIdentityMaxF; ++f) {
    const PoincareSeries fold = PoincareSeries::polynomial({f});
    const PoincareSeries lhs_a = PoincareSeries::polynomial({1, f - 1}) + fold * tail;
    const PoincareSeries rhs_a = ratio({1, f - 1, f - 1, 1}, {1, 0, -1});
    const PoincareSeries lhs_b = PoincareSeries::polynomial({1, f}) + fold * tail;
    const PoincareSeries rhs_b = ratio({1, f, f - 1}, {1, 0, -1});
    if (!(lhs_a == rhs_a)) ++bad;
    if (!(lhs_b == rhs_b)) ++bad;
    if (!(equivariant_poincare(closed(Orientability::orientable, 0, f, 0)) == rhs_a)) ++bad;
    if (!(equivariant_poincare(closed(Orientability::orientable, 0, f, 1)) == rhs_b)) ++bad;
    if (!(equivariant_poincare(closed(Orientability::nonorientable, 1, f, 0)) == rhs_b)) ++bad;
  }
  return {bad == 0, "f = 1.." + std::to_string(kIdentityMaxF) + ", " + std::to_string(bad) + " unequal pairs"};
}

// --- 3 ----------------------------------------------------------------------
Outcome formality_consistency() {
  std::size_t formal_checked = 0, nonformal_checked = 0, bad = 0;
  struct Family {
    Orientability eps;
    std::int64_t g, s;
  };
  for (const Family fam : {Family{Orientability::orientable, 0, 0}, Family{Orientability::orientable, 0, 1},
                           Family{Orientability::nonorientable, 1, 0}}) {
    for (std::int64_t f = 1; f <= 5; ++f) {
      const OrbitInvariants inv = closed(fam.eps, fam.g, f, fam.s);
      const FormalityResult r = is_formal(inv);
      std::vector<Rational> num(4);
      for (const ModuleGenerator& gen : r.generators) num[static_cast<std::size_t>(gen.degree)] += 1;
      const PoincareSeries generated(Polynomial(num), Polynomial{1, 0, -1});
      if (!r.formal || !(generated == equivariant_poincare(inv)) || !(free_module_series(r) == generated)) ++bad;
      ++formal_checked;
    }
  }
  for (auto eps : {Orientability::orientable, Orientability::nonorientable}) {
    for (std::int64_t g = eps == Orientability::orientable ? 0 : 1; g <= 3; ++g) {
      for (std::int64_t s = 0; s <= 3; ++s) {
        for (std::int64_t f = 1; f <= 5; ++f) {
          const OrbitInvariants inv = closed(eps, g, f, s);
          const bool monotone = betti(inv, 1) <= betti(inv, 3);
          if (is_formal(inv).formal != monotone) ++bad;
          if (!is_formal(inv).formal) ++nonformal_checked;
        }
      }
    }
  }
  std::ostringstream os;
  os << formal_checked << " formal data, " << nonformal_checked << " non-formal data, " << bad << " disagreements";
  return {bad == 0 && nonformal_checked > 0, os.str()};
}

// --- 4 ----------------------------------------------------------------------
Outcome euler_oracle() {
  std::size_t pairs = 0, bad = 0;
  std::vector<std::int64_t> brute;
  for (std::int64_t m = 2; m <= kEulerMaxM; ++m) {
    brute.assign(static_cast<std::size_t>(m), 0);
    for (std::int64_t l = 1; l < m; ++l) {
      for (std::int64_t n = 1; n < m; ++n) {
        if (l * n % m == 1) brute[static_cast<std::size_t>(n)] = l;
      }
    }
    for (std::int64_t n = 1; n < m; ++n) {
      if (std::gcd(m, n) != 1) continue;
      ++pairs;
      if (modular_inverse(n, m) != brute[static_cast<std::size_t>(n)]) ++bad;
    }
  }
  if (modular_inverse(2, 3) != 2 || modular_inverse(3, 5) != 2) ++bad;
  OrbitInvariants inv;
  inv.b = 1;
  inv.pairs = {{3, 2}, {5, 3}};
  const EulerNumber e = euler_number(inv);
  if (e.kind != EulerNumber::Kind::rational || !(e.value == Rational(31, 15))) ++bad;
  std::ostringstream os;
  os << pairs << " coprime pairs with m <= " << kEulerMaxM << ", " << bad << " mismatches, e = " << e.value;
  return {bad == 0, os.str()};
}

// --- 5 ----------------------------------------------------------------------
struct Tally {
  std::int64_t F = 0, SE = 0, SP = 0, K = 0, RP = 0, vf = 0, vs = 0;
  bool even_rp = true;
};

Tally tally(const CycleGraph& g) {
  Tally t;
  for (const Cycle& c : g.cycles) {
    std::int64_t rp = 0;
    for (std::size_t i = 0; i < c.size(); ++i) {
      switch (c[i]) {
        case EdgeLabel::F: ++t.F; break;
        case EdgeLabel::SE: ++t.SE; break;
        case EdgeLabel::SP: ++t.SP; break;
        case EdgeLabel::K: ++t.K; break;
        case EdgeLabel::RP: ++t.RP; ++rp; break;
      }
      const EdgeLabel a = c[i], b = c[(i + 1) % c.size()];
      if (a == EdgeLabel::F || b == EdgeLabel::F) ++t.vf;
      if (a == EdgeLabel::SE || b == EdgeLabel::SE) ++t.vs;
    }
    if (rp % 2 != 0) t.even_rp = false;
  }
  return t;
}

bool parity_ok(const CycleGraph& g) {
  const Tally t = tally(g);
  OrbitInvariants inv;
  inv.graph = g;
  const DerivedCounts d = derived_counts(inv);
  return t.vf == 2 * t.F && t.vf == 2 * t.SP + t.RP && t.vs == 2 * t.SE && t.vs == 2 * t.K + t.RP && t.even_rp &&
         d.v_f == t.vf && d.v_s == t.vs && d.r_p == t.RP && parity_identities_hold(d);
}

Outcome parity_suite() {
  std::size_t words = 0, accepted = 0, bad = 0;
  std::vector<Cycle> valid;
  for (std::size_t len = 1; len <= kParityMaxLen; ++len) {
    std::size_t total = 1;
    for (std::size_t i = 0; i < len; ++i) total *= 5;
    Cycle c(len);
    for (std::size_t code = 0; code < total; ++code) {
      std::size_t rest = code;
      for (std::size_t i = 0; i < len; ++i) {
        c[i] = kAllLabels[rest % 5];
        rest /= 5;
      }
      ++words;
      const CycleGraph g{{c}};
      if (!validate_graph(g).ok()) continue;
      ++accepted;
      if (len <= 6) valid.push_back(c);
      if (!parity_ok(g)) ++bad;
    }
  }
  std::size_t graphs = 0;
  for (std::size_t i = 0; i < valid.size(); ++i) {
    for (std::size_t j = i; j < valid.size(); ++j) {
      const CycleGraph g{{valid[i], valid[j]}};
      ++graphs;
      if (!validate_graph(g).ok() || !parity_ok(g)) ++bad;
    }
  }
  std::ostringstream os;
  os << words << " words up to length " << kParityMaxLen << ", " << accepted << " accepted, " << graphs
     << " two-cycle graphs, " << bad << " failures";
  return {bad == 0 && accepted > 0, os.str()};
}

// --- 6 ----------------------------------------------------------------------
OrbitInvariants perturb(OrbitInvariants inv, std::mt19937& rng) {
  std::shuffle(inv.pairs.begin(), inv.pairs.end(), rng);
  std::shuffle(inv.graph.cycles.begin(), inv.graph.cycles.end(), rng);
  for (Cycle& c : inv.graph.cycles) {
    std::rotate(c.begin(), c.begin() + static_cast<std::ptrdiff_t>(rng() % c.size()), c.end());
    if (rng() % 2) std::reverse(c.begin(), c.end());
  }
  if (inv.eps == Orientability::nonorientable) {
    for (SeifertPair& p : inv.pairs) {
      if (rng() % 2) p.n = p.m - p.n;
    }
    if (inv.closed_free()) inv.b += 2 * static_cast<std::int64_t>(rng() % 5) - 4;
  }
  return inv;
}

Outcome canonical_stability(const std::vector<OrbitInvariants>& census) {
  std::mt19937 rng(2024);
  std::size_t bad = 0;
  for (int i = 0; i < kPerturbations; ++i) {
    const OrbitInvariants& inv = census[rng() % census.size()];
    const OrbitInvariants moved = perturb(inv, rng);
    try {
      if (!(canonical_form(moved) == canonical_form(inv)) || !equivalent(moved, inv)) ++bad;
    } catch (const std::exception&) {
      ++bad;
    }
  }
  return {bad == 0, std::to_string(kPerturbations) + " perturbations of a " + std::to_string(census.size()) +
                        "-datum census, " + std::to_string(bad) + " mismatches"};
}

// --- 7 ----------------------------------------------------------------------
Outcome capping_soundness() {
  EnumerationBounds b;
  b.max_g = 2;
  b.max_f = 1;
  b.max_s = 1;
  b.max_t = 2;
  b.max_r = 1;
  b.max_m = 3;
  b.max_cycles = 2;
  b.max_cycle_len = 6;
  std::size_t capped = 0, bad = 0;
  enumerate(b, [&](const OrbitInvariants& inv) {
    if (inv.closed()) return;
    ++capped;
    try {
      const CappingReport r = cap_off(inv);
      const std::int64_t r_p = static_cast<std::int64_t>(count_label(inv.graph, EdgeLabel::RP));
      const bool ok = verify_capping(r) && validate(r.output).ok() && r.output.closed() && r.output.b == 0 &&
                      r.chi_after == r.chi_before + inv.t - r_p / 2 &&
                      orbit_euler_characteristic(r.output) == r.chi_after;
      if (!ok) ++bad;
    } catch (const std::exception&) {
      ++bad;
    }
  });
  return {bad == 0 && capped > 0,
          std::to_string(capped) + " bounded data capped, " + std::to_string(bad) + " failures"};
}

// --- 8 ----------------------------------------------------------------------
Outcome ring_axioms() {
  std::mt19937 rng(77);
  std::vector<CohomContext> contexts;
  for (auto eps : {Orientability::orientable, Orientability::nonorientable}) {
    for (std::int64_t g = eps == Orientability::orientable ? 0 : 1; g <= 2; ++g) {
      for (std::int64_t f = 1; f <= 4; ++f) {
        for (std::int64_t s = 0; s <= 2; ++s) contexts.push_back(CohomContext::from(closed(eps, g, f, s)));
      }
    }
  }
  std::size_t bad = 0;
  for (int i = 0; i < kRingCases; ++i) {
    const CohomContext& ctx = contexts[rng() % contexts.size()];
    const CohomElement a = testing::random_element(ctx, rng, 4);
    const CohomElement b = testing::random_element(ctx, rng, 4);
    const CohomElement c = testing::random_element(ctx, rng, 4);
    const Rational lambda(static_cast<std::int64_t>(rng() % 7) - 3, 1 + static_cast<std::int64_t>(rng() % 4));
    try {
      if (!(cup(a + b * lambda, c) == cup(a, c) + cup(b, c) * lambda)) ++bad;
      if (!(cup(c, a + b * lambda) == cup(c, a) + cup(c, b) * lambda)) ++bad;
      if (!(cup(cup(a, b), c) == cup(a, cup(b, c)))) ++bad;
      const auto da = degree_decompose(a);
      const auto db = degree_decompose(b);
      if (da.count(1) && db.count(1) && !cup(da.at(1), db.at(1)).is_zero()) ++bad;
      const std::size_t j = rng() % 4, k = rng() % 4;
      if (!(module_action(j, module_action(k, a)) == module_action(j + k, a))) ++bad;
      CohomElement u_power = CohomElement::one(ctx);
      for (std::size_t n = 0; n < j; ++n) u_power = cup(u_power, pi_star_u(ctx));
      if (!(module_action(j, a) == cup(u_power, a))) ++bad;
    } catch (const std::exception&) {
      ++bad;
    }
  }
  return {bad == 0, std::to_string(kRingCases) + " random triples over " + std::to_string(contexts.size()) +
                        " manifolds, " + std::to_string(bad) + " failures"};
}

// --- 9 ----------------------------------------------------------------------
OrbitInvariants sorted_parts(OrbitInvariants inv) {
  std::sort(inv.pairs.begin(), inv.pairs.end());
  std::vector<CycleWord> words = graph_canonical(inv.graph);
  inv.graph.cycles.clear();
  for (const CycleWord& w : words) inv.graph.cycles.push_back(w.labels);
  return inv;
}

Outcome round_trip(const std::vector<OrbitInvariants>& census) {
  std::size_t trips = 0, bad = 0;
  for (const OrbitInvariants& inv : census) {
    if (trips == kRoundTrips) break;
    ++trips;
    const std::string text = serialize(inv);
    const ParseResult r = parse(text);
    if (!r.ok() || !(*r.value == sorted_parts(inv)) || serialize(*r.value) != text) ++bad;
  }

  std::mt19937 rng(99);
  const std::string alphabet = "{}();,=<>[]bgfstonGFSEPKR0123456789- ";
  std::size_t fuzz_bad = 0;
  for (int i = 0; i < kFuzzInputs; ++i) {
    std::string text;
    if (i % 2 == 0) {
      text = serialize(census[rng() % census.size()]);
      const int edits = 1 + static_cast<int>(rng() % 4);
      for (int e = 0; e < edits && !text.empty(); ++e) {
        const std::size_t pos = rng() % text.size();
        switch (rng() % 3) {
          case 0: text[pos] = alphabet[rng() % alphabet.size()]; break;
          case 1: text.erase(pos, 1); break;
          default: text.insert(pos, 1, static_cast<char>(rng() % 256)); break;
        }
      }
    } else {
      text.resize(rng() % 64);
      for (char& c : text) c = rng() % 3 == 0 ? static_cast<char>(rng() % 256) : alphabet[rng() % alphabet.size()];
    }
    try {
      const ParseResult r = parse(text);
      if (!r.ok() && r.diagnostics.empty()) ++fuzz_bad;
      for (const Diagnostic& d : r.diagnostics) {
        if (d.span.start > d.span.end || d.span.end > text.size()) ++fuzz_bad;
      }
    } catch (...) {
      ++fuzz_bad;
    }
  }
  std::ostringstream os;
  os << trips << " round trips (" << bad << " failures), " << kFuzzInputs << " fuzz inputs (" << fuzz_bad
     << " failures)";
  return {trips == kRoundTrips && bad == 0 && fuzz_bad == 0, os.str()};
}

std::vector<OrbitInvariants> census() {
  EnumerationBounds b;
  b.max_g = 2;
  b.max_f = 2;
  b.max_s = 1;
  b.max_t = 1;
  b.max_r = 2;
  b.max_m = 5;
  b.max_cycles = 2;
  b.max_cycle_len = 4;
  b.b_min = -2;
  b.b_max = 2;
  return enumerate_all(b);
}

}  // namespace

int main() {
  const std::vector<OrbitInvariants> data = census();
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria = {
      {"Betti formula agreement", betti_formula},
      {"series identities for the formal families", series_identities},
      {"formality and free-module consistency", formality_consistency},
      {"Euler number oracle", euler_oracle},
      {"parity suite", parity_suite},
      {"canonical-form stability", [&] { return canonical_stability(data); }},
      {"capping soundness", capping_soundness},
      {"ring axioms", ring_axioms},
      {"round trip and parser fuzzing", [&] { return round_trip(data); }},
  };
  int failed = 0;
  int index = 0;
  for (const auto& [name, run] : criteria) {
    ++index;
    Outcome out;
    const auto start = Clock::now();
    try {
      out = run();
    } catch (const std::exception& e) {
      out = {false, std::string("exception: ") + e.what()};
    }
    if (!out.pass) ++failed;
    std::printf("criterion %d %s: %s (%s; %.2f s)\n", index, out.pass ? "PASS" : "FAIL", name, out.detail.c_str(),
                seconds_since(start));
  }
  return failed;
}
