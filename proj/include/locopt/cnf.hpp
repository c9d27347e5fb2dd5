#pragma once

// CNF formulas as clause multisets, truth assignments, and the (NAE-)satisfied
// clause counts with their single-flip deltas.

#include <algorithm>
#include <compare>
#include <initializer_list>
#include <utility>
#include <vector>

#include "locopt/error.hpp"
#include "locopt/graph.hpp"

namespace locopt {

using Variable = int;

struct Literal {
  Variable var = 0;
  bool negated = false;

  static Literal pos(Variable v) { return {v, false}; }
  static Literal neg(Variable v) { return {v, true}; }
  Literal operator~() const { return {var, !negated}; }

  friend auto operator<=>(const Literal&, const Literal&) = default;
};

// Nonempty disjunction in which no variable occurs twice.
class Clause {
 public:
  Clause() = default;
  Clause(std::initializer_list<Literal> lits) : Clause(std::vector<Literal>(lits)) {}
  explicit Clause(std::vector<Literal> lits) : lits_(std::move(lits)) {
    require(!lits_.empty(), "empty clause");
    for (std::size_t i = 0; i < lits_.size(); ++i)
      for (std::size_t j = i + 1; j < lits_.size(); ++j)
        if (lits_[i].var == lits_[j].var) throw InvalidArgument("variable repeated within a clause");
  }

  std::size_t size() const { return lits_.size(); }
  const std::vector<Literal>& literals() const { return lits_; }
  auto begin() const { return lits_.begin(); }
  auto end() const { return lits_.end(); }
  bool is_positive() const {
    return std::none_of(lits_.begin(), lits_.end(), [](const Literal& l) { return l.negated; });
  }
  bool mentions(Variable v) const {
    return std::any_of(lits_.begin(), lits_.end(), [&](const Literal& l) { return l.var == v; });
  }

  friend auto operator<=>(const Clause&, const Clause&) = default;

 private:
  std::vector<Literal> lits_;
};

// Total truth assignment over variables [0, n).
class Assignment {
 public:
  Assignment() = default;
  explicit Assignment(std::vector<bool> values) : values_(std::move(values)) {}
  Assignment(std::initializer_list<bool> values) : values_(values) {}
  static Assignment constant(int n, bool value) {
    return Assignment(std::vector<bool>(static_cast<std::size_t>(n), value));
  }
  // Bit i of `bits` is the value of variable i.
  static Assignment from_bits(int n, std::uint64_t bits) {
    std::vector<bool> v(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) v[static_cast<std::size_t>(i)] = (bits >> i) & 1U;
    return Assignment(std::move(v));
  }

  int size() const { return static_cast<int>(values_.size()); }
  bool operator[](Variable x) const { return values_[static_cast<std::size_t>(x)]; }
  bool eval(const Literal& l) const { return (*this)[l.var] != l.negated; }
  const std::vector<bool>& values() const { return values_; }
  void set(Variable x, bool value) { values_[static_cast<std::size_t>(x)] = value; }

  friend auto operator<=>(const Assignment&, const Assignment&) = default;

 private:
  std::vector<bool> values_;
};

inline Assignment flip(const Assignment& a, Variable x) {
  require(x >= 0 && x < a.size(), "variable out of range");
  Assignment b = a;
  b.set(x, !a[x]);
  return b;
}

inline Assignment complement(const Assignment& a) {
  std::vector<bool> v = a.values();
  v.flip();
  return Assignment(std::move(v));
}

// Ordered clause list; repetition encodes multiplicity. Keeps a per-variable
// occurrence index (clause positions, ascending, one entry per clause).
class CnfFormula {
 public:
  CnfFormula() = default;
  CnfFormula(int num_vars, std::vector<Clause> clauses)
      : num_vars_(num_vars), clauses_(std::move(clauses)), occ_(static_cast<std::size_t>(num_vars)) {
    require(num_vars >= 0, "negative variable count");
    for (std::size_t i = 0; i < clauses_.size(); ++i) {
      require(clauses_[i].size() > 0, "empty clause");
      for (const Literal& l : clauses_[i]) {
        if (l.var < 0 || l.var >= num_vars_) throw InvalidArgument("literal out of range");
        occ_[static_cast<std::size_t>(l.var)].push_back(i);
      }
    }
  }
  CnfFormula(int num_vars, std::initializer_list<Clause> clauses)
      : CnfFormula(num_vars, std::vector<Clause>(clauses)) {}

  // Expands each (clause, t) run into t copies.
  static CnfFormula from_runs(int num_vars, const std::vector<std::pair<Clause, Count>>& runs) {
    std::vector<Clause> clauses;
    for (const auto& [c, t] : runs) {
      require(t >= 0, "negative clause multiplicity");
      clauses.insert(clauses.end(), static_cast<std::size_t>(t), c);
    }
    return CnfFormula(num_vars, std::move(clauses));
  }

  int num_vars() const { return num_vars_; }
  std::size_t num_clauses() const { return clauses_.size(); }
  const std::vector<Clause>& clauses() const { return clauses_; }
  const Clause& clause(std::size_t i) const { return clauses_[i]; }
  const std::vector<std::size_t>& occurrences(Variable x) const {
    return occ_[static_cast<std::size_t>(x)];
  }
  bool is_positive() const {
    return std::all_of(clauses_.begin(), clauses_.end(), [](const Clause& c) { return c.is_positive(); });
  }

  friend bool operator==(const CnfFormula& a, const CnfFormula& b) {
    return a.num_vars_ == b.num_vars_ && a.clauses_ == b.clauses_;
  }

 private:
  int num_vars_ = 0;
  std::vector<Clause> clauses_;
  std::vector<std::vector<std::size_t>> occ_;
};

namespace detail {

inline void check_assignment(const CnfFormula& f, const Assignment& a) {
  if (a.size() != f.num_vars()) throw InvalidArgument("assignment size does not match formula");
}

inline int true_literals(const Clause& c, const Assignment& a) {
  int t = 0;
  for (const Literal& l : c) t += a.eval(l) ? 1 : 0;
  return t;
}

inline bool nae_satisfied(int true_count, std::size_t size) {
  return true_count > 0 && static_cast<std::size_t>(true_count) < size;
}

}  // namespace detail

inline Count count_satisfied(const CnfFormula& f, const Assignment& a) {
  detail::check_assignment(f, a);
  Count n = 0;
  for (const Clause& c : f.clauses()) n += detail::true_literals(c, a) > 0 ? 1 : 0;
  return n;
}

// A clause is NAE-satisfied when it has both a true and a false literal.
inline Count count_nae_satisfied(const CnfFormula& f, const Assignment& a) {
  detail::check_assignment(f, a);
  Count n = 0;
  for (const Clause& c : f.clauses()) n += detail::nae_satisfied(detail::true_literals(c, a), c.size()) ? 1 : 0;
  return n;
}

// count_satisfied(f, flip(a, x)) - count_satisfied(f, a), touching only the
// clauses that contain x.
inline Count sat_delta(const CnfFormula& f, const Assignment& a, Variable x) {
  detail::check_assignment(f, a);
  require(x >= 0 && x < f.num_vars(), "variable out of range");
  Count d = 0;
  for (std::size_t ci : f.occurrences(x)) {
    const Clause& c = f.clause(ci);
    int t = 0;
    bool lit_true = false;
    for (const Literal& l : c) {
      bool v = a.eval(l);
      t += v ? 1 : 0;
      if (l.var == x) lit_true = v;
    }
    if (lit_true && t == 1) --d;
    if (!lit_true && t == 0) ++d;
  }
  return d;
}

inline Count nae_delta(const CnfFormula& f, const Assignment& a, Variable x) {
  detail::check_assignment(f, a);
  require(x >= 0 && x < f.num_vars(), "variable out of range");
  Count d = 0;
  for (std::size_t ci : f.occurrences(x)) {
    const Clause& c = f.clause(ci);
    int t = 0;
    bool lit_true = false;
    for (const Literal& l : c) {
      bool v = a.eval(l);
      t += v ? 1 : 0;
      if (l.var == x) lit_true = v;
    }
    int after = lit_true ? t - 1 : t + 1;
    d += static_cast<int>(detail::nae_satisfied(after, c.size())) -
         static_cast<int>(detail::nae_satisfied(t, c.size()));
  }
  return d;
}

}  // namespace locopt
