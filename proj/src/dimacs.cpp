#include "resmin/dimacs.hpp"

#include <cctype>
#include <charconv>
#include <sstream>

namespace resmin {
namespace {

struct TokenScanner {
  std::string_view text;
  size_t pos = 0;
  int line = 1;

  void skip_space() {
    while (pos < text.size()) {
      char c = text[pos];
      if (c == '\n') {
        ++line;
        ++pos;
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        ++pos;
      } else {
        break;
      }
    }
  }

  void skip_line() {
    while (pos < text.size() && text[pos] != '\n') ++pos;
  }

  // Next whitespace-delimited token, skipping comment lines.
  std::optional<std::string_view> next_token(bool skip_comments = true) {
    for (;;) {
      skip_space();
      if (pos >= text.size()) return std::nullopt;
      if (skip_comments && text[pos] == 'c' &&
          (pos + 1 >= text.size() ||
           std::isspace(static_cast<unsigned char>(text[pos + 1])))) {
        skip_line();
        continue;
      }
      size_t start = pos;
      while (pos < text.size() &&
             !std::isspace(static_cast<unsigned char>(text[pos]))) {
        ++pos;
      }
      return text.substr(start, pos - start);
    }
  }

  int64_t parse_int(std::string_view tok) const {
    int64_t value = 0;
    auto [ptr, ec] =
        std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (ec != std::errc() || ptr != tok.data() + tok.size()) {
      throw DimacsParseError(line, "expected integer, got '" + std::string(tok) + "'");
    }
    return value;
  }
};

}  // namespace

DimacsFile parse_dimacs_file(std::string_view text) {
  TokenScanner sc{text};

  auto tok = sc.next_token();
  if (!tok || *tok != "p") {
    throw DimacsParseError(sc.line, "missing 'p cnf' header");
  }
  auto fmt = sc.next_token();
  if (!fmt || *fmt != "cnf") {
    throw DimacsParseError(sc.line, "header format must be 'cnf'");
  }
  auto vtok = sc.next_token();
  auto ctok = sc.next_token();
  if (!vtok || !ctok) throw DimacsParseError(sc.line, "truncated header");
  int64_t header_vars = sc.parse_int(*vtok);
  int64_t header_clauses = sc.parse_int(*ctok);
  if (header_vars < 0 || header_clauses < 0) {
    throw DimacsParseError(sc.line, "negative counts in header");
  }

  DimacsFile out;
  std::vector<Clause> clauses;
  std::vector<int32_t> pending;
  bool in_clause = false;
  for (;;) {
    auto t = sc.next_token();
    if (!t) break;
    int64_t v = sc.parse_int(*t);
    if (v == 0) {
      auto clause = Clause::from_dimacs(pending);
      if (clause) {
        clauses.push_back(*clause);
        out.ordered_clauses.push_back(std::move(clause));
      } else {
        out.ordered_clauses.push_back(std::nullopt);  // tautology dropped
      }
      pending.clear();
      in_clause = false;
    } else {
      if (v > INT32_MAX || v < -static_cast<int64_t>(INT32_MAX)) {
        throw DimacsParseError(sc.line, "literal out of range");
      }
      pending.push_back(static_cast<int32_t>(v));
      in_clause = true;
    }
  }
  if (in_clause) {
    throw DimacsParseError(sc.line, "unterminated clause at end of input");
  }
  out.formula = Formula::from_clauses(std::move(clauses),
                                      static_cast<uint32_t>(header_vars));
  return out;
}

Formula parse_dimacs(std::string_view text) {
  return parse_dimacs_file(text).formula;
}

std::string to_dimacs(const Formula& f) {
  std::ostringstream os;
  os << "p cnf " << f.num_variables() << ' ' << f.size() << '\n';
  for (const Clause& c : f.clauses()) {
    for (Literal l : c.literals()) os << l.to_dimacs() << ' ';
    os << "0\n";
  }
  return os.str();
}

}  // namespace resmin
