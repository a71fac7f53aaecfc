#include "resmin/cnf.hpp"

#include <algorithm>
#include <sstream>

namespace resmin {

std::optional<Clause> Clause::make(std::vector<Literal> literals) {
  std::sort(literals.begin(), literals.end());
  literals.erase(std::unique(literals.begin(), literals.end()), literals.end());
  for (size_t i = 1; i < literals.size(); ++i) {
    if (literals[i].variable() == literals[i - 1].variable()) {
      return std::nullopt;  // both polarities present
    }
  }
  Clause c;
  c.lits_ = std::move(literals);
  return c;
}

std::optional<Clause> Clause::from_dimacs(const std::vector<int32_t>& values) {
  std::vector<Literal> lits;
  lits.reserve(values.size());
  for (int32_t v : values) lits.push_back(Literal::from_dimacs(v));
  return make(std::move(lits));
}

bool Clause::contains(Literal l) const {
  return std::binary_search(lits_.begin(), lits_.end(), l);
}

std::vector<int32_t> Clause::to_dimacs() const {
  std::vector<int32_t> out;
  out.reserve(lits_.size());
  for (Literal l : lits_) out.push_back(l.to_dimacs());
  return out;
}

std::string Clause::to_string() const {
  std::ostringstream os;
  os << '{';
  for (size_t i = 0; i < lits_.size(); ++i) {
    if (i) os << ' ';
    os << lits_[i].to_dimacs();
  }
  os << '}';
  return os.str();
}

size_t ClauseHash::operator()(const Clause& c) const {
  // FNV-1a over literal codes.
  uint64_t h = 1469598103934665603ull;
  for (Literal l : c.literals()) {
    h ^= l.code();
    h *= 1099511628211ull;
  }
  return static_cast<size_t>(h);
}

std::optional<Clause> resolve(const Clause& a, const Clause& b) {
  const auto& la = a.literals();
  const auto& lb = b.literals();
  // One merge pass: count clashing variables and build the union without
  // the clashing pair.
  uint32_t clash_var = 0;
  int clashes = 0;
  size_t i = 0, j = 0;
  while (i < la.size() && j < lb.size()) {
    uint32_t va = la[i].variable(), vb = lb[j].variable();
    if (va == vb) {
      if (la[i] != lb[j]) {
        ++clashes;
        if (clashes > 1) return std::nullopt;
        clash_var = va;
      }
      ++i;
      ++j;
    } else if (va < vb) {
      ++i;
    } else {
      ++j;
    }
  }
  if (clashes != 1) return std::nullopt;

  std::vector<Literal> out;
  out.reserve(la.size() + lb.size() - 2);
  i = 0;
  j = 0;
  while (i < la.size() || j < lb.size()) {
    Literal next;
    if (j == lb.size() || (i < la.size() && la[i] <= lb[j])) {
      next = la[i];
      if (i < la.size() && j < lb.size() && la[i] == lb[j]) ++j;
      ++i;
    } else {
      next = lb[j];
      ++j;
    }
    if (next.variable() == clash_var) continue;
    out.push_back(next);
  }
  Clause c;
  // Merged sorted sequences with the single clashing variable removed:
  // already canonical and tautology-free.
  c = *Clause::make(std::move(out));
  return c;
}

bool subsumes(const Clause& a, const Clause& b) {
  if (a.size() > b.size()) return false;
  return std::includes(b.literals().begin(), b.literals().end(),
                       a.literals().begin(), a.literals().end());
}

std::vector<Clause> frontier(std::vector<Clause> clauses) {
  std::sort(clauses.begin(), clauses.end());
  clauses.erase(std::unique(clauses.begin(), clauses.end()), clauses.end());
  // Check against shorter clauses only; equal clauses never exclude each
  // other because containment must be strict.
  std::vector<const Clause*> by_size;
  by_size.reserve(clauses.size());
  for (const Clause& c : clauses) by_size.push_back(&c);
  std::stable_sort(by_size.begin(), by_size.end(),
                   [](const Clause* a, const Clause* b) { return a->size() < b->size(); });
  std::vector<Clause> out;
  for (const Clause& c : clauses) {
    bool minimal = true;
    for (const Clause* s : by_size) {
      if (s->size() >= c.size()) break;
      if (subsumes(*s, c)) {
        minimal = false;
        break;
      }
    }
    if (minimal) out.push_back(c);
  }
  return out;
}

Formula Formula::from_clauses(std::vector<Clause> clauses, uint32_t min_num_variables) {
  std::sort(clauses.begin(), clauses.end());
  clauses.erase(std::unique(clauses.begin(), clauses.end()), clauses.end());
  Formula f;
  f.num_variables_ = min_num_variables;
  for (const Clause& c : clauses) {
    f.num_variables_ = std::max(f.num_variables_, c.max_variable());
  }
  f.clauses_ = std::move(clauses);
  return f;
}

bool Formula::contains(const Clause& c) const {
  return std::binary_search(clauses_.begin(), clauses_.end(), c);
}

}  // namespace resmin
