#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "s1m/invariants.hpp"

namespace s1m {

/// Half-open byte range [start, end) into the parsed text.
struct SourceSpan {
  std::size_t start = 0;
  std::size_t end = 0;
};

struct Diagnostic {
  SourceSpan span;
  std::string message;
};

struct ParseResult {
  std::optional<OrbitInvariants> value;
  std::vector<Diagnostic> diagnostics;

  bool ok() const { return value.has_value(); }
};

/// Parses the invariant notation
///
///   {b=INT;(o|n,g=NAT,f=NAT,s=NAT[,t=NAT])[;(m,n),(m,n),...][;G=[<E,E,...>,...]]}
///
/// with E one of F, SE, SP, K, RP; an omitted t reads as 0. Whitespace is ignored. Only the grammar
/// and nonnegativity are enforced; classification conditions are left to
/// validate(). On error the parser resynchronizes at ';' and ')' so that a
/// single run can report several problems.
ParseResult parse(std::string_view text);

/// Canonical rendering: pairs sorted, cycles as sorted canonical words, and
/// the pair and graph segments omitted when empty.
std::string serialize(const OrbitInvariants& inv);

/// One-line "offset a-b: message" rendering of each diagnostic, followed by
/// the source line and a caret marker.
std::string format_diagnostics(std::string_view text, const std::vector<Diagnostic>& diagnostics);

}  // namespace s1m
