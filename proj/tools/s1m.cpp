// s1m: command-line front end for circle-action classification data.
//
// Every command reads invariant text from a positional argument, "@path",
// an existing file path, or "-" for one datum per line on stdin.
// Exit status: 0 success, 1 invalid input, 2 usage error.

#include <cstdint>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "s1m/capping.hpp"
#include "s1m/cohomology.hpp"
#include "s1m/enumerate.hpp"
#include "s1m/json_report.hpp"
#include "s1m/textio.hpp"

namespace {

using nlohmann::json;

constexpr int kOk = 0;
constexpr int kInvalid = 1;
constexpr int kUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_stream(std::istream& in) {
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

// Resolves one input argument to the list of datum texts it names.
std::vector<std::string> load_inputs(const std::string& arg) {
  std::vector<std::string> out;
  auto split_lines = [&out](const std::string& content) {
    std::istringstream lines(content);
    std::string line;
    while (std::getline(lines, line)) {
      line = trim(line);
      if (!line.empty() && line[0] != '#') out.push_back(line);
    }
  };
  if (arg == "-") {
    split_lines(read_stream(std::cin));
    return out;
  }
  std::string path;
  if (!arg.empty() && arg[0] == '@') path = arg.substr(1);
  else if (!arg.empty() && arg[0] != '{') path = arg;
  if (path.empty()) {
    out.push_back(arg);
    return out;
  }
  std::ifstream file(path);
  if (!file) throw UsageError("cannot read input file '" + path + "'");
  split_lines(read_stream(file));
  if (out.empty()) throw UsageError("input file '" + path + "' holds no datum");
  return out;
}

std::string load_single(const std::string& arg) {
  const std::vector<std::string> inputs = load_inputs(arg);
  if (inputs.size() != 1) throw UsageError("expected exactly one datum in '" + arg + "'");
  return inputs.front();
}

void report_validation(const std::string& text, const s1m::ValidationReport& report) {
  std::cerr << text << ": invalid\n";
  for (const s1m::Violation& v : report.violations) {
    std::cerr << "  condition " << s1m::to_string(v.condition) << ": " << v.message << "\n";
  }
}

// Parses and validates; reports problems on stderr and returns nullopt.
std::optional<s1m::OrbitInvariants> load_valid(const std::string& text) {
  s1m::ParseResult parsed = s1m::parse(text);
  if (!parsed.ok()) {
    std::cerr << s1m::format_diagnostics(text, parsed.diagnostics);
    return std::nullopt;
  }
  s1m::ValidationReport report = s1m::validate(*parsed.value);
  if (!report.ok()) {
    report_validation(text, report);
    return std::nullopt;
  }
  return s1m::normalize(*parsed.value);
}

// Runs `body` on every datum named by `arg`; the exit status is 1 if any
// datum failed to load.
int for_each_datum(const std::string& arg, const std::function<void(const s1m::OrbitInvariants&)>& body) {
  int status = kOk;
  for (const std::string& text : load_inputs(arg)) {
    std::optional<s1m::OrbitInvariants> inv = load_valid(text);
    if (!inv) {
      status = kInvalid;
      continue;
    }
    try {
      body(*inv);
    } catch (const std::invalid_argument& e) {
      std::cerr << text << ": " << e.what() << "\n";
      status = kInvalid;
    }
  }
  return status;
}

std::string join(const std::vector<std::int64_t>& values) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out += ' ';
    out += std::to_string(values[i]);
  }
  return out;
}

void print(bool as_json, const json& j, const std::string& text) {
  if (as_json) std::cout << s1m::emit_json(j) << "\n";
  else std::cout << text << "\n";
}

int cmd_validate(const std::string& arg, bool as_json) {
  int status = kOk;
  for (const std::string& text : load_inputs(arg)) {
    s1m::ParseResult parsed = s1m::parse(text);
    if (!parsed.ok()) {
      std::cerr << s1m::format_diagnostics(text, parsed.diagnostics);
      status = kInvalid;
      continue;
    }
    s1m::ValidationReport report = s1m::validate(*parsed.value);
    if (as_json) std::cout << s1m::emit_json(s1m::to_json(report)) << "\n";
    if (report.ok()) {
      if (!as_json) std::cout << "valid\n";
    } else {
      report_validation(text, report);
      status = kInvalid;
    }
  }
  return status;
}

int cmd_canon(const std::string& arg, bool as_json) {
  return for_each_datum(arg, [as_json](const s1m::OrbitInvariants& inv) {
    print(as_json, s1m::to_json(s1m::canonical_form(inv)), s1m::serialize(inv));
  });
}

int cmd_equiv(const std::string& lhs, const std::string& rhs, bool as_json) {
  const std::string a_text = load_single(lhs);
  const std::string b_text = load_single(rhs);
  std::optional<s1m::OrbitInvariants> a = load_valid(a_text);
  std::optional<s1m::OrbitInvariants> b = load_valid(b_text);
  if (!a || !b) return kInvalid;
  const bool same = s1m::equivalent(*a, *b);
  print(as_json, {{"equivalent", same}}, same ? "equivalent" : "not equivalent");
  return kOk;
}

std::string capping_text(const s1m::CappingReport& rep) {
  std::ostringstream os;
  os << s1m::serialize(rep.output) << "\n";
  os << "chi: " << rep.chi_before << " -> " << rep.chi_after << "\n";
  for (const s1m::RpPairing& p : rep.rp_pairings) {
    os << "rp pairing: cycle " << p.cycle << " edges " << p.first << "," << p.second << "\n";
  }
  for (const std::string& note : rep.notes) os << "note: " << note << "\n";
  os << "verified: " << (s1m::verify_capping(rep) ? "yes" : "no");
  return os.str();
}

int cmd_cap(const std::string& arg, bool as_json) {
  return for_each_datum(arg, [as_json](const s1m::OrbitInvariants& inv) {
    const s1m::CappingReport rep = s1m::cap_off(inv);
    print(as_json, s1m::to_json(rep), capping_text(rep));
  });
}

int cmd_betti(const std::string& arg, std::optional<std::size_t> degree, std::size_t from, std::size_t upto,
              bool as_json) {
  if (!degree && from > upto) throw UsageError("--from must not exceed --upto");
  return for_each_datum(arg, [&](const s1m::OrbitInvariants& inv) {
    const std::size_t lo = degree ? *degree : from;
    const std::size_t hi = degree ? *degree : upto;
    const std::vector<std::int64_t> all = s1m::betti_numbers(inv, hi);
    const std::vector<std::int64_t> values(all.begin() + static_cast<std::ptrdiff_t>(lo), all.end());
    print(as_json, s1m::betti_json(values, lo), join(values));
  });
}

int cmd_poincare(const std::string& arg, std::size_t upto, bool as_json) {
  return for_each_datum(arg, [&](const s1m::OrbitInvariants& inv) {
    const s1m::PoincareSeries series = s1m::equivariant_poincare(inv);
    print(as_json, s1m::series_json(series, upto), series.to_string() + "\n" + s1m::expansion_string(series, upto));
  });
}

int cmd_formal(const std::string& arg, bool as_json) {
  return for_each_datum(arg, [as_json](const s1m::OrbitInvariants& inv) {
    const s1m::FormalityResult result = s1m::is_formal(inv);
    std::ostringstream os;
    os << (result.formal ? "formal" : "not formal") << ": " << result.reason;
    for (const s1m::ModuleGenerator& g : result.generators) os << "\n  deg " << g.degree << "  " << g.expression;
    print(as_json, s1m::to_json(result), os.str());
  });
}

int cmd_euler(const std::string& arg, bool as_json) {
  return for_each_datum(arg, [as_json](const s1m::OrbitInvariants& inv) {
    const s1m::EulerNumber e = s1m::euler_number(inv);
    std::string text;
    switch (e.kind) {
      case s1m::EulerNumber::Kind::rational: text = e.value.to_string(); break;
      case s1m::EulerNumber::Kind::zero: text = "0"; break;
      case s1m::EulerNumber::Kind::undefined: text = "undefined: " + e.reason; break;
    }
    print(as_json, s1m::to_json(e), text);
  });
}

int cmd_enumerate(const std::vector<std::string>& settings, bool as_json) {
  s1m::EnumerationBounds bounds;
  for (const std::string& s : settings) {
    std::istringstream parts(s);
    std::string item;
    while (std::getline(parts, item, ',')) {
      item = trim(item);
      if (item.empty()) continue;
      try {
        s1m::apply_bound(bounds, item);
      } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
      }
    }
  }
  s1m::enumerate(bounds, [as_json](const s1m::OrbitInvariants& inv) {
    if (as_json) std::cout << s1m::emit_json(s1m::to_json(inv)) << "\n";
    else std::cout << s1m::serialize(inv) << "\n";
  });
  return kOk;
}

int cmd_classify2d(std::int64_t boundary, std::int64_t f, std::int64_t s, bool as_json) {
  const std::optional<s1m::Surface2d> surface = s1m::classify_2d(boundary, f, s);
  if (!surface) {
    std::cerr << "no surface with boundary=" << boundary << ", f=" << f << ", s=" << s << "\n";
    return kInvalid;
  }
  print(as_json, {{"surface", std::string(s1m::to_string(*surface))}}, std::string(s1m::to_string(*surface)));
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Classification data of compact 3-manifolds with circle actions"};
  app.require_subcommand(1);
  bool as_json = false;
  app.add_flag("--json", as_json, "Emit JSON")->configurable(false);

  std::string input, input_b;
  std::optional<std::size_t> degree;
  std::size_t from = 0;
  std::size_t upto = 10;
  std::vector<std::string> bounds;
  std::int64_t boundary = 0, fixed = 0, special = 0;

  auto add_input = [&](CLI::App* cmd) {
    cmd->add_option("input", input, "Datum text, @file, file path, or - for stdin")->required();
    cmd->add_flag("--json", as_json, "Emit JSON");
    return cmd;
  };

  auto* validate = add_input(app.add_subcommand("validate", "Check every classification condition"));
  auto* canon = add_input(app.add_subcommand("canon", "Print the canonical form"));
  auto* equiv = app.add_subcommand("equiv", "Decide equivariant diffeomorphism");
  equiv->add_option("a", input, "First datum")->required();
  equiv->add_option("b", input_b, "Second datum")->required();
  equiv->add_flag("--json", as_json, "Emit JSON");
  auto* cap = add_input(app.add_subcommand("cap", "Cap off every boundary component"));
  auto* betti = add_input(app.add_subcommand("betti", "Equivariant Betti numbers"));
  betti->add_option("--degree,-k", degree, "Single degree");
  betti->add_option("--from", from, "First degree of the range");
  betti->add_option("--upto", upto, "Last degree of the range")->capture_default_str();
  auto* poincare = add_input(app.add_subcommand("poincare", "Equivariant Poincare series"));
  poincare->add_option("--upto", upto, "Truncation degree of the expansion")->capture_default_str();
  auto* formal = add_input(app.add_subcommand("formal", "Equivariant formality and module generators"));
  auto* euler = add_input(app.add_subcommand("euler", "Orbifold Euler number"));
  auto* enumerate = app.add_subcommand("enumerate", "Stream every valid datum within bounds");
  enumerate->add_option("--bounds", bounds, "key=value settings, comma or space separated");
  enumerate->add_flag("--json", as_json, "Emit JSON");
  auto* classify = app.add_subcommand("classify2d", "Name the surface with the given counts");
  classify->add_option("boundary", boundary)->required();
  classify->add_option("f", fixed)->required();
  classify->add_option("s", special)->required();
  classify->add_flag("--json", as_json, "Emit JSON");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*validate) return cmd_validate(input, as_json);
    if (*canon) return cmd_canon(input, as_json);
    if (*equiv) return cmd_equiv(input, input_b, as_json);
    if (*cap) return cmd_cap(input, as_json);
    if (*betti) return cmd_betti(input, degree, from, upto, as_json);
    if (*poincare) return cmd_poincare(input, upto, as_json);
    if (*formal) return cmd_formal(input, as_json);
    if (*euler) return cmd_euler(input, as_json);
    if (*enumerate) return cmd_enumerate(bounds, as_json);
    if (*classify) return cmd_classify2d(boundary, fixed, special, as_json);
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInvalid;
  }
  return kUsage;
}
