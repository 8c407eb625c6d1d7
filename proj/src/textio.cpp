#include "s1m/textio.hpp"

#include <algorithm>
#include <cctype>
#include <limits>
#include <sstream>

namespace s1m {

namespace {

enum class Tok {
  lbrace,
  rbrace,
  lparen,
  rparen,
  lbracket,
  rbracket,
  langle,
  rangle,
  semi,
  comma,
  equals,
  integer,
  ident,
  invalid,
  end
};

struct Token {
  Tok kind = Tok::end;
  SourceSpan span;
  std::string_view text;
  std::int64_t value = 0;
  bool overflow = false;
};

std::string describe(const Token& tok) {
  switch (tok.kind) {
    case Tok::end: return "end of input";
    case Tok::integer: return "integer '" + std::string(tok.text) + "'";
    case Tok::ident: return "'" + std::string(tok.text) + "'";
    case Tok::invalid: return "invalid character '" + std::string(tok.text) + "'";
    default: return "'" + std::string(tok.text) + "'";
  }
}

std::vector<Token> lex(std::string_view text) {
  std::vector<Token> out;
  std::size_t i = 0;
  const std::size_t n = text.size();
  while (i < n) {
    const auto c = static_cast<unsigned char>(text[i]);
    if (std::isspace(c)) {
      ++i;
      continue;
    }
    Token tok;
    tok.span.start = i;
    if (std::isdigit(c) || (c == '-' && i + 1 < n && std::isdigit(static_cast<unsigned char>(text[i + 1])))) {
      const bool negative = c == '-';
      std::size_t j = negative ? i + 1 : i;
      std::int64_t value = 0;
      for (; j < n && std::isdigit(static_cast<unsigned char>(text[j])); ++j) {
        const int digit = text[j] - '0';
        if (value > (std::numeric_limits<std::int64_t>::max() - digit) / 10) tok.overflow = true;
        if (!tok.overflow) value = value * 10 + digit;
      }
      tok.kind = Tok::integer;
      tok.value = negative ? -value : value;
      i = j;
    } else if (std::isalpha(c)) {
      std::size_t j = i;
      while (j < n && std::isalpha(static_cast<unsigned char>(text[j]))) ++j;
      tok.kind = Tok::ident;
      i = j;
    } else {
      switch (c) {
        case '{': tok.kind = Tok::lbrace; break;
        case '}': tok.kind = Tok::rbrace; break;
        case '(': tok.kind = Tok::lparen; break;
        case ')': tok.kind = Tok::rparen; break;
        case '[': tok.kind = Tok::lbracket; break;
        case ']': tok.kind = Tok::rbracket; break;
        case '<': tok.kind = Tok::langle; break;
        case '>': tok.kind = Tok::rangle; break;
        case ';': tok.kind = Tok::semi; break;
        case ',': tok.kind = Tok::comma; break;
        case '=': tok.kind = Tok::equals; break;
        default: tok.kind = Tok::invalid; break;
      }
      ++i;
    }
    tok.span.end = i;
    tok.text = text.substr(tok.span.start, tok.span.end - tok.span.start);
    out.push_back(tok);
  }
  Token eof;
  eof.kind = Tok::end;
  eof.span = {n, n};
  out.push_back(eof);
  return out;
}

constexpr std::size_t kMaxDiagnostics = 32;

class Parser {
 public:
  explicit Parser(std::string_view text) : tokens_(lex(text)) {}

  ParseResult run() {
    OrbitInvariants inv;
    parse_manifold(inv);
    ParseResult result;
    if (diagnostics_.empty()) result.value = std::move(inv);
    result.diagnostics = std::move(diagnostics_);
    return result;
  }

 private:
  // Thrown to abandon the current section; caught at a resync point.
  struct SectionError {};

  const Token& peek() const { return tokens_[pos_]; }
  const Token& advance() {
    const Token& tok = tokens_[pos_];
    if (tok.kind != Tok::end) ++pos_;
    return tok;
  }
  bool at(Tok kind) const { return peek().kind == kind; }
  bool at_ident(std::string_view word) const { return at(Tok::ident) && peek().text == word; }

  void error(const SourceSpan& span, std::string message) {
    if (diagnostics_.size() < kMaxDiagnostics) diagnostics_.push_back({span, std::move(message)});
  }

  [[noreturn]] void fail(std::string expected) {
    error(peek().span, "expected " + expected + ", found " + describe(peek()));
    throw SectionError{};
  }

  void expect(Tok kind, std::string_view what) {
    if (!at(kind)) fail("'" + std::string(what) + "'");
    advance();
  }

  void expect_word(std::string_view word) {
    if (!at_ident(word)) fail("'" + std::string(word) + "'");
    advance();
  }

  std::int64_t integer(bool natural) {
    if (!at(Tok::integer)) fail(natural ? "nonnegative integer" : "integer");
    const Token& tok = advance();
    if (tok.overflow) {
      error(tok.span, "integer out of range");
      throw SectionError{};
    }
    if (natural && tok.value < 0) {
      error(tok.span, "expected nonnegative integer, found " + describe(tok));
      throw SectionError{};
    }
    return tok.value;
  }

  // Skips to the next token of one of the given kinds (not consumed) or end.
  void sync(std::initializer_list<Tok> stops) {
    while (!at(Tok::end) && std::find(stops.begin(), stops.end(), peek().kind) == stops.end()) advance();
  }

  void parse_manifold(OrbitInvariants& inv) {
    try {
      expect(Tok::lbrace, "{");
    } catch (const SectionError&) {
      return;
    }

    try {
      expect_word("b");
      expect(Tok::equals, "=");
      inv.b = integer(false);
    } catch (const SectionError&) {
      sync({Tok::semi, Tok::rbrace});
    }

    try {
      expect(Tok::semi, ";");
      parse_tuple(inv);
    } catch (const SectionError&) {
      sync({Tok::rparen, Tok::semi, Tok::rbrace});
      if (at(Tok::rparen)) advance();
    }

    bool seen_pairs = false;
    bool seen_graph = false;
    while (at(Tok::semi)) {
      advance();
      try {
        if (at(Tok::lparen) && !seen_pairs && !seen_graph) {
          seen_pairs = true;
          parse_pairs(inv);
        } else if (at_ident("G") && !seen_graph) {
          seen_graph = true;
          parse_graph(inv);
        } else {
          fail(seen_graph ? "'}'" : (seen_pairs ? "'G'" : "Seifert pair list or 'G'"));
        }
      } catch (const SectionError&) {
        sync({Tok::semi, Tok::rbrace});
      }
    }

    try {
      expect(Tok::rbrace, "}");
      if (!at(Tok::end)) fail("end of input");
    } catch (const SectionError&) {
    }
  }

  void parse_tuple(OrbitInvariants& inv) {
    expect(Tok::lparen, "(");
    if (at_ident("o")) {
      inv.eps = Orientability::orientable;
    } else if (at_ident("n")) {
      inv.eps = Orientability::nonorientable;
    } else {
      fail("orientability 'o' or 'n'");
    }
    advance();
    const std::initializer_list<std::pair<const char*, std::int64_t*>> fields = {
        {"g", &inv.g}, {"f", &inv.f}, {"s", &inv.s}, {"t", &inv.t}};
    for (auto [name, field] : fields) {
      if (field == &inv.t && at(Tok::rparen)) break;  // closed-case shorthand
      expect(Tok::comma, ",");
      expect_word(name);
      expect(Tok::equals, "=");
      *field = integer(true);
    }
    expect(Tok::rparen, ")");
  }

  void parse_pairs(OrbitInvariants& inv) {
    do {
      if (!inv.pairs.empty()) advance();  // ','
      expect(Tok::lparen, "(");
      SeifertPair pair;
      pair.m = integer(true);
      expect(Tok::comma, ",");
      pair.n = integer(true);
      expect(Tok::rparen, ")");
      inv.pairs.push_back(pair);
    } while (at(Tok::comma));
  }

  void parse_graph(OrbitInvariants& inv) {
    expect_word("G");
    expect(Tok::equals, "=");
    expect(Tok::lbracket, "[");
    do {
      if (!inv.graph.cycles.empty()) advance();  // ','
      expect(Tok::langle, "<");
      Cycle cycle;
      do {
        if (!cycle.empty()) advance();  // ','
        if (!at(Tok::ident)) fail("edge label F, SE, SP, K or RP");
        const auto label = label_from_string(peek().text);
        if (!label) fail("edge label F, SE, SP, K or RP");
        advance();
        cycle.push_back(*label);
      } while (at(Tok::comma));
      expect(Tok::rangle, ">");
      inv.graph.cycles.push_back(std::move(cycle));
    } while (at(Tok::comma));
    expect(Tok::rbracket, "]");
  }

  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
  std::vector<Diagnostic> diagnostics_;
};

}  // namespace

ParseResult parse(std::string_view text) { return Parser(text).run(); }

std::string serialize(const OrbitInvariants& inv) {
  std::ostringstream os;
  os << "{b=" << inv.b << ";(" << to_char(inv.eps) << ",g=" << inv.g << ",f=" << inv.f << ",s=" << inv.s
     << ",t=" << inv.t << ")";
  if (!inv.pairs.empty()) {
    std::vector<SeifertPair> pairs = inv.pairs;
    std::sort(pairs.begin(), pairs.end());
    os << ";";
    for (std::size_t i = 0; i < pairs.size(); ++i) {
      os << (i ? "," : "") << "(" << pairs[i].m << "," << pairs[i].n << ")";
    }
  }
  if (!inv.graph.empty()) {
    os << ";G=[";
    const std::vector<CycleWord> words = graph_canonical(inv.graph);
    for (std::size_t i = 0; i < words.size(); ++i) os << (i ? "," : "") << to_string(words[i].labels);
    os << "]";
  }
  os << "}";
  return os.str();
}

std::string format_diagnostics(std::string_view text, const std::vector<Diagnostic>& diagnostics) {
  std::ostringstream os;
  for (const Diagnostic& d : diagnostics) {
    os << "offset " << d.span.start << "-" << d.span.end << ": " << d.message << "\n";
    // Show the line holding the span start with a caret underneath.
    const std::size_t start = std::min(d.span.start, text.size());
    const std::size_t line_begin = text.rfind('\n', start == 0 ? 0 : start - 1);
    const std::size_t from = (line_begin == std::string_view::npos || start == 0) ? 0 : line_begin + 1;
    std::size_t to = text.find('\n', start);
    if (to == std::string_view::npos) to = text.size();
    os << "  " << text.substr(from, to - from) << "\n";
    const std::size_t width = std::max<std::size_t>(1, std::min(d.span.end, to) - std::min(start, to));
    os << "  " << std::string(start - from, ' ') << std::string(width, '^') << "\n";
  }
  return os.str();
}

}  // namespace s1m
