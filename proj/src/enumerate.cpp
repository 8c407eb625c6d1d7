#include "s1m/enumerate.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <set>
#include <stdexcept>
#include <unordered_set>

namespace s1m {

namespace {

std::int64_t parse_int(std::string_view text, std::string_view key) {
  std::int64_t value = 0;
  const auto* first = text.data();
  const auto* last = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last || text.empty()) {
    throw std::invalid_argument("bound '" + std::string(key) + "' needs an integer, got '" + std::string(text) + "'");
  }
  return value;
}

// All multisets of size <= max_size drawn (nondecreasing) from `items`.
template <typename T>
void multisets(const std::vector<T>& items, std::size_t max_size, std::size_t start, std::vector<T>& current,
               const std::function<void(const std::vector<T>&)>& visit) {
  visit(current);
  if (current.size() == max_size) return;
  for (std::size_t i = start; i < items.size(); ++i) {
    current.push_back(items[i]);
    multisets(items, max_size, i, current, visit);
    current.pop_back();
  }
}

std::vector<SeifertPair> pair_choices(Orientability eps, std::int64_t max_m) {
  std::vector<SeifertPair> out;
  for (std::int64_t m = 2; m <= max_m; ++m) {
    for (std::int64_t n = 1; n < m; ++n) {
      if (std::gcd(m, n) != 1) continue;
      if (eps == Orientability::nonorientable && 2 * n > m) continue;
      out.push_back({m, n});
    }
  }
  return out;
}

}  // namespace

void apply_bound(EnumerationBounds& bounds, std::string_view setting) {
  const auto eq = setting.find('=');
  if (eq == std::string_view::npos) throw std::invalid_argument("bound '" + std::string(setting) + "' is not key=value");
  const std::string_view key = setting.substr(0, eq);
  const std::string_view value = setting.substr(eq + 1);

  if (key == "b") {
    bounds.b_min = bounds.b_max = parse_int(value, key);
    return;
  }
  if (key == "b_range") {
    const auto dots = value.find("..");
    if (dots == std::string_view::npos) throw std::invalid_argument("b_range needs the form lo..hi");
    bounds.b_min = parse_int(value.substr(0, dots), key);
    bounds.b_max = parse_int(value.substr(dots + 2), key);
    if (bounds.b_min > bounds.b_max) throw std::invalid_argument("b_range is empty");
    return;
  }
  if (key == "b_min" || key == "b_max") {
    (key == "b_min" ? bounds.b_min : bounds.b_max) = parse_int(value, key);
    return;
  }

  std::int64_t* target = nullptr;
  if (key == "max_g") target = &bounds.max_g;
  else if (key == "max_f") target = &bounds.max_f;
  else if (key == "max_s") target = &bounds.max_s;
  else if (key == "max_t") target = &bounds.max_t;
  else if (key == "max_r") target = &bounds.max_r;
  else if (key == "max_m") target = &bounds.max_m;
  else if (key == "max_cycles") target = &bounds.max_cycles;
  else if (key == "max_cycle_len") target = &bounds.max_cycle_len;
  if (target == nullptr) throw std::invalid_argument("unknown bound '" + std::string(key) + "'");
  const std::int64_t v = parse_int(value, key);
  if (v < 0) throw std::invalid_argument("bound '" + std::string(key) + "' must be nonnegative");
  *target = v;
}

std::vector<CycleWord> valid_cycle_words(std::size_t max_len) {
  std::set<CycleWord> words;
  for (std::size_t len = 2; len <= max_len; len += 2) {
    // Alternate interior (F/SE) and boundary (SP/K/RP) labels; the first edge
    // can be taken interior up to rotation.
    const std::size_t half = len / 2;
    std::size_t combos = 1;
    for (std::size_t i = 0; i < half; ++i) combos *= 2 * 3;
    Cycle cycle(len);
    for (std::size_t code = 0; code < combos; ++code) {
      std::size_t rest = code;
      for (std::size_t i = 0; i < half; ++i) {
        cycle[2 * i] = rest % 2 == 0 ? EdgeLabel::F : EdgeLabel::SE;
        rest /= 2;
        const std::size_t b = rest % 3;
        rest /= 3;
        cycle[2 * i + 1] = b == 0 ? EdgeLabel::SP : (b == 1 ? EdgeLabel::K : EdgeLabel::RP);
      }
      if (validate_graph(CycleGraph{{cycle}}).ok()) words.insert(canonicalize_cycle(cycle));
    }
  }
  return {words.begin(), words.end()};
}

void enumerate(const EnumerationBounds& bounds, const std::function<void(const OrbitInvariants&)>& emit) {
  const std::vector<CycleWord> words =
      valid_cycle_words(static_cast<std::size_t>(std::max<std::int64_t>(0, bounds.max_cycle_len)));
  std::vector<std::vector<CycleWord>> graphs;
  {
    std::vector<CycleWord> current;
    multisets<CycleWord>(words, static_cast<std::size_t>(bounds.max_cycles), 0, current,
                         [&graphs](const std::vector<CycleWord>& g) { graphs.push_back(g); });
  }

  std::unordered_set<CanonicalForm> seen;
  for (Orientability eps : {Orientability::orientable, Orientability::nonorientable}) {
    const std::int64_t g_lo = eps == Orientability::orientable ? 0 : 1;
    const std::int64_t g_hi = eps == Orientability::orientable ? bounds.max_g : std::max<std::int64_t>(1, bounds.max_g);
    const std::vector<SeifertPair> choices = pair_choices(eps, bounds.max_m);
    std::vector<std::vector<SeifertPair>> pair_sets;
    {
      std::vector<SeifertPair> current;
      multisets<SeifertPair>(choices, static_cast<std::size_t>(bounds.max_r), 0, current,
                             [&pair_sets](const std::vector<SeifertPair>& p) { pair_sets.push_back(p); });
    }

    for (std::int64_t g = g_lo; g <= g_hi; ++g) {
      for (std::int64_t f = 0; f <= bounds.max_f; ++f) {
        for (std::int64_t s = 0; s <= bounds.max_s; ++s) {
          for (std::int64_t t = 0; t <= bounds.max_t; ++t) {
            for (const auto& pairs : pair_sets) {
              for (const auto& graph : graphs) {
                OrbitInvariants inv;
                inv.eps = eps;
                inv.g = g;
                inv.f = f;
                inv.s = s;
                inv.t = t;
                inv.pairs = pairs;
                for (const CycleWord& w : graph) inv.graph.cycles.push_back(w.labels);
                for (std::int64_t b = bounds.b_min; b <= bounds.b_max; ++b) {
                  inv.b = b;
                  if (!validate(inv).ok()) continue;
                  if (seen.insert(canonical_form(inv)).second) emit(inv);
                }
              }
            }
          }
        }
      }
    }
  }
}

std::vector<OrbitInvariants> enumerate_all(const EnumerationBounds& bounds) {
  std::vector<OrbitInvariants> out;
  enumerate(bounds, [&out](const OrbitInvariants& inv) { out.push_back(inv); });
  return out;
}

}  // namespace s1m
