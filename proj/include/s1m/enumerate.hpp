#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "s1m/invariants.hpp"

namespace s1m {

/// Finite search box for the census enumerator. Nonorientable surfaces
/// always include genus 1, even when max_g is 0.
struct EnumerationBounds {
  std::int64_t max_g = 0;
  std::int64_t max_f = 0;
  std::int64_t max_s = 0;
  std::int64_t max_t = 0;
  std::int64_t max_r = 0;  // number of Seifert pairs
  std::int64_t max_m = 0;  // largest isotropy order
  std::int64_t max_cycles = 0;
  std::int64_t max_cycle_len = 0;
  std::int64_t b_min = 0;
  std::int64_t b_max = 0;
};

/// Applies "key=value" settings (keys are the field names, plus "b" for a
/// single value and "b_range=lo..hi"). Throws std::invalid_argument on an
/// unknown key, a malformed value or negative bounds.
void apply_bound(EnumerationBounds& bounds, std::string_view setting);

/// Every valid canonical cycle word with 2 <= length <= max_len, sorted.
std::vector<CycleWord> valid_cycle_words(std::size_t max_len);

/// Calls `emit` once per valid datum inside the bounds, one representative
/// per canonical form, in a fixed order.
void enumerate(const EnumerationBounds& bounds, const std::function<void(const OrbitInvariants&)>& emit);

std::vector<OrbitInvariants> enumerate_all(const EnumerationBounds& bounds);

}  // namespace s1m
