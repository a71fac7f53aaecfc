#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace resmin {

// A literal packed so that integer order equals canonical order:
// variable ascending, negative polarity before positive on the same variable.
class Literal {
 public:
  Literal() = default;

  static Literal make(uint32_t variable, bool positive) {
    Literal l;
    l.code_ = (variable << 1) | (positive ? 1u : 0u);
    return l;
  }

  // value must be a nonzero DIMACS literal.
  static Literal from_dimacs(int32_t value) {
    return make(static_cast<uint32_t>(value < 0 ? -value : value), value > 0);
  }

  uint32_t variable() const { return code_ >> 1; }
  bool positive() const { return (code_ & 1u) != 0; }
  Literal negated() const {
    Literal l;
    l.code_ = code_ ^ 1u;
    return l;
  }
  int32_t to_dimacs() const {
    int32_t v = static_cast<int32_t>(variable());
    return positive() ? v : -v;
  }
  uint32_t code() const { return code_; }

  friend auto operator<=>(const Literal&, const Literal&) = default;

 private:
  uint32_t code_ = 0;
};

// A clause is a canonically sorted, duplicate-free set of literals.
// Tautologies (x and -x together) are not representable; the factory
// returns nothing for them. The default-constructed clause is empty (bottom).
class Clause {
 public:
  Clause() = default;

  static std::optional<Clause> make(std::vector<Literal> literals);

  // Convenience for DIMACS-style integers; returns nothing on tautology.
  static std::optional<Clause> from_dimacs(const std::vector<int32_t>& values);

  const std::vector<Literal>& literals() const { return lits_; }
  size_t size() const { return lits_.size(); }
  bool empty() const { return lits_.empty(); }
  bool contains(Literal l) const;
  uint32_t max_variable() const { return lits_.empty() ? 0 : lits_.back().variable(); }

  std::vector<int32_t> to_dimacs() const;
  std::string to_string() const;

  friend auto operator<=>(const Clause&, const Clause&) = default;

 private:
  std::vector<Literal> lits_;
};

struct ClauseHash {
  size_t operator()(const Clause& c) const;
};

// Resolution: defined only when the clauses clash on exactly one variable.
// Zero clashes means the pair is not resolvable; two or more clashes would
// produce a tautology. Both cases return nothing.
std::optional<Clause> resolve(const Clause& a, const Clause& b);

// True iff a's literal set is a subset of b's.
bool subsumes(const Clause& a, const Clause& b);

// Subset-minimal clauses of the input: every clause that has no strict
// subset in the set. Input duplicates are merged; output is in canonical
// clause order.
std::vector<Clause> frontier(std::vector<Clause> clauses);

// A set of clauses in canonical order plus the variable count.
// Variable indices are never renumbered, so gaps are allowed.
class Formula {
 public:
  Formula() = default;

  // Deduplicates and sorts. num_variables ends up as
  // max(min_num_variables, largest index used).
  static Formula from_clauses(std::vector<Clause> clauses,
                              uint32_t min_num_variables = 0);

  const std::vector<Clause>& clauses() const { return clauses_; }
  uint32_t num_variables() const { return num_variables_; }
  size_t size() const { return clauses_.size(); }
  bool contains(const Clause& c) const;

 private:
  std::vector<Clause> clauses_;
  uint32_t num_variables_ = 0;
};

}  // namespace resmin
