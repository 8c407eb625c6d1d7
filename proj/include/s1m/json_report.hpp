#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "json.hpp"
#include "s1m/capping.hpp"
#include "s1m/cohomology.hpp"
#include "s1m/invariants.hpp"

namespace s1m {

// Stable JSON field names for every structured result. These are part of the
// public output format; see README.md for the schema.

nlohmann::json to_json(const Rational& r);                 // {"num","den"}
nlohmann::json to_json(const ValidationReport& report);    // {"ok","violations":[{"condition","message"}]}
nlohmann::json to_json(const OrbitInvariants& inv);
nlohmann::json to_json(const CanonicalForm& form);
nlohmann::json to_json(const DerivedCounts& counts);
nlohmann::json to_json(const CappingReport& report);
nlohmann::json to_json(const FormalityResult& result);
nlohmann::json to_json(const EulerNumber& euler);

/// {"numerator":[...],"denominator":[...],"expansion":[b0..b_upto]}
nlohmann::json series_json(const PoincareSeries& series, std::size_t upto);

/// {"betti":[...],"from":k0}
nlohmann::json betti_json(const std::vector<std::int64_t>& values, std::size_t from);

/// Compact single-line rendering.
std::string emit_json(const nlohmann::json& value);

}  // namespace s1m
