#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "resmin/cnf.hpp"

namespace resmin {

// One proof line: either an axiom or the resolvent of two earlier steps.
struct ProofStep {
  Clause clause;
  std::optional<std::pair<uint32_t, uint32_t>> premises;

  static ProofStep axiom(Clause c) { return {std::move(c), std::nullopt}; }
  static ProofStep resolvent(Clause c, uint32_t left, uint32_t right) {
    return {std::move(c), std::make_pair(left, right)};
  }
  bool is_axiom() const { return !premises.has_value(); }
};

struct Proof {
  std::vector<ProofStep> steps;
  size_t length() const { return steps.size(); }

  // Set of clauses that are not axioms of the given formula.
  std::vector<Clause> derived_clauses(const Formula& f) const;
};

enum class ProofDefect {
  axiom_not_in_formula,
  bad_resolvent,
  premise_out_of_order,
  missing_empty_clause,
};

std::string_view to_string(ProofDefect d);

struct Verdict {
  bool valid;
  ProofDefect defect = ProofDefect::missing_empty_clause;
  size_t step = 0;  // first failing step (0-based)

  static Verdict ok() { return {true}; }
  static Verdict bad(ProofDefect d, size_t step) { return {false, d, step}; }
  explicit operator bool() const { return valid; }
};

// Checks every structural requirement: premises precede their step and
// resolve to the stated clause, axiom steps belong to the formula, and the
// last clause is empty. Redundant (unused or repeated) steps are accepted.
Verdict verify_proof(const Formula& formula, const Proof& proof);

// Drops steps that the final empty clause does not depend on, reindexing
// premises. The proof must contain an empty clause.
Proof trim_proof(const Proof& proof);

struct ProofParseError : std::runtime_error {
  ProofParseError(int line, const std::string& what)
      : std::runtime_error("proof parse error at line " + std::to_string(line) +
                           ": " + what),
        line(line) {}
  int line;
};

// Text format, one step per line:
//   <id> <lit> ... <lit> 0 <premise_id> <premise_id> 0
// Ids are 1-based and ascending; axiom lines carry an empty premise list.
std::string format_proof(const Proof& proof);
Proof parse_proof(std::string_view text);

}  // namespace resmin
