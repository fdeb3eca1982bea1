// Shared fixtures and independent oracles for the test suites. The oracles
// deliberately re-implement enumeration, relabeling and word evaluation from
// scratch so that they stay independent of the library paths they check.
#pragma once

#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <vector>

#include "semiforge/builders.hpp"
#include "semiforge/inclusion.hpp"
#include "semiforge/semigroup.hpp"

namespace tsupport {

inline semiforge::FiniteSemigroup from_rows(
    const std::vector<std::vector<int>>& rows) {
  std::vector<int> flat;
  for (const auto& r : rows) flat.insert(flat.end(), r.begin(), r.end());
  return semiforge::FiniteSemigroup(static_cast<int>(rows.size()),
                                    std::move(flat));
}

inline semiforge::FiniteSemigroup meet2() { return from_rows({{0, 0}, {0, 1}}); }
inline semiforge::FiniteSemigroup null2() { return from_rows({{0, 0}, {0, 0}}); }

// Right-zero {1, 2} with an adjoined zero below it.
inline semiforge::FiniteSemigroup chain3() {
  return from_rows({{0, 0, 0}, {0, 1, 2}, {0, 1, 2}});
}

// Antichain {1, 2} over a bottom 0 (a = 1, b = 2, ab = 0).
inline semiforge::FiniteSemigroup bowtie3() {
  return from_rows({{0, 0, 0}, {0, 1, 0}, {0, 0, 2}});
}

// Order-4 left group: left-zero 2 x Z2.
inline semiforge::FiniteSemigroup left_group4() {
  return semiforge::direct_product(semiforge::left_zero(2),
                                   semiforge::cyclic_group(2));
}

// Completely 0-simple on 5 elements (trivial group, 2x2 sandwich with one
// zero entry): idempotents 0..3 with 3 * 2 = 4 not idempotent.
inline semiforge::FiniteSemigroup zero_simple5() {
  return from_rows({{0, 0, 0, 0, 0},
                    {0, 1, 2, 1, 2},
                    {0, 1, 2, 0, 0},
                    {0, 3, 4, 3, 4},
                    {0, 3, 4, 0, 0}});
}

inline semiforge::FiniteSemigroup klein4() {
  return from_rows({{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}});
}

// Every associative table of order n by plain odometer search (n <= 3).
inline std::vector<std::vector<int>> oracle_all_associative(int n) {
  std::vector<std::vector<int>> out;
  std::vector<int> t(static_cast<std::size_t>(n) * n, 0);
  while (true) {
    bool assoc = true;
    for (int a = 0; a < n && assoc; ++a) {
      for (int b = 0; b < n && assoc; ++b) {
        for (int c = 0; c < n && assoc; ++c) {
          assoc = t[t[a * n + b] * n + c] == t[a * n + t[b * n + c]];
        }
      }
    }
    if (assoc) out.push_back(t);
    int pos = static_cast<int>(t.size()) - 1;
    while (pos >= 0 && t[pos] == n - 1) t[pos--] = 0;
    if (pos < 0) break;
    ++t[pos];
  }
  return out;
}

// Minimal relabeling of a table, computed with its own permutation loop.
inline std::vector<int> oracle_min_relabel(int n, const std::vector<int>& t) {
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  std::vector<int> best = t, candidate(t.size());
  do {
    for (int a = 0; a < n; ++a) {
      for (int b = 0; b < n; ++b) {
        candidate[p[a] * n + p[b]] = p[t[a * n + b]];
      }
    }
    if (candidate < best) best = candidate;
  } while (std::next_permutation(p.begin(), p.end()));
  return best;
}

inline std::vector<int> oracle_transpose(int n, const std::vector<int>& t) {
  std::vector<int> out(t.size());
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) out[a * n + b] = t[b * n + a];
  }
  return out;
}

// Distinct classes of order-n semigroups, keyed by minimal relabeling
// (optionally of the table or its transpose).
inline std::set<std::vector<int>> oracle_classes(int n, bool anti) {
  std::set<std::vector<int>> keys;
  for (const auto& t : oracle_all_associative(n)) {
    std::vector<int> key = oracle_min_relabel(n, t);
    if (anti) {
      std::vector<int> other = oracle_min_relabel(n, oracle_transpose(n, t));
      if (other < key) key = other;
    }
    keys.insert(key);
  }
  return keys;
}

// Word value by expanding exponents into repeated letters.
inline int oracle_eval(const semiforge::FiniteSemigroup& s,
                       const semiforge::Word& w,
                       const std::map<char, int>& assignment) {
  std::vector<char> letters;
  for (const auto& f : w.factors) {
    for (int i = 0; i < f.exponent; ++i) letters.push_back(f.variable);
  }
  int acc = -1;
  for (char c : letters) {
    int v = assignment.at(c);
    acc = acc < 0 ? v : s.product(acc, v);
  }
  return acc;
}

inline bool oracle_member(const semiforge::FiniteSemigroup& s,
                          const semiforge::InclusionClassExpr& expr) {
  int n = s.order();
  std::vector<int> vals(expr.variables.size(), 0);
  while (true) {
    std::map<char, int> assignment;
    for (std::size_t i = 0; i < vals.size(); ++i) {
      assignment[expr.variables[i]] = vals[i];
    }
    for (const auto& inc : expr.inclusions) {
      std::set<int> targets;
      for (const auto& w : inc.rhs) targets.insert(oracle_eval(s, w, assignment));
      for (const auto& w : inc.lhs) {
        if (!targets.count(oracle_eval(s, w, assignment))) return false;
      }
    }
    int pos = static_cast<int>(vals.size()) - 1;
    while (pos >= 0 && vals[pos] == n - 1) vals[pos--] = 0;
    if (pos < 0) break;
    ++vals[pos];
  }
  return true;
}

inline std::vector<int> random_table(std::mt19937& rng, int n) {
  std::uniform_int_distribution<int> dist(0, n - 1);
  std::vector<int> t(static_cast<std::size_t>(n) * n);
  for (int& v : t) v = dist(rng);
  return t;
}

}  // namespace tsupport
