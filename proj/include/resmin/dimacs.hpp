#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "resmin/cnf.hpp"

namespace resmin {

struct DimacsParseError : std::runtime_error {
  DimacsParseError(int line, const std::string& what)
      : std::runtime_error("dimacs parse error at line " + std::to_string(line) +
                           ": " + what),
        line(line) {}
  int line;
};

// Parse result that also keeps the file's clause order. Certificate formats
// (LRAT) number the original clauses by position, so position matters even
// though the Formula itself is canonical. Tautological clauses keep their
// slot but hold no clause.
struct DimacsFile {
  Formula formula;
  std::vector<std::optional<Clause>> ordered_clauses;
};

DimacsFile parse_dimacs_file(std::string_view text);

// Canonical formula only.
Formula parse_dimacs(std::string_view text);

// Header plus clauses in canonical order, one per line.
std::string to_dimacs(const Formula& f);

}  // namespace resmin
