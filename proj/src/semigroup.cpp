#include "semiforge/semigroup.hpp"

#include <algorithm>
#include <numeric>

namespace semiforge {

FiniteSemigroup::FiniteSemigroup(int order, std::vector<int> table)
    : order_(order), table_(std::move(table)) {
  if (order <= 0) {
    throw BadEntryError(0, 0, -1);
  }
  if (table_.size() != static_cast<std::size_t>(order) * order) {
    throw Error("table must be " + std::to_string(order) + "x"
                + std::to_string(order));
  }
  for (int a = 0; a < order_; ++a) {
    for (int b = 0; b < order_; ++b) {
      int v = table_[a * order_ + b];
      if (v < 0 || v >= order_) {
        throw BadEntryError(a, b, v);
      }
    }
  }
  for (int a = 0; a < order_; ++a) {
    for (int b = 0; b < order_; ++b) {
      int ab = table_[a * order_ + b];
      for (int c = 0; c < order_; ++c) {
        if (table_[ab * order_ + c] != table_[a * order_ + table_[b * order_ + c]]) {
          throw NotAssociativeError(a, b, c);
        }
      }
    }
  }
}

bool is_associative_naive(int n, std::span<const int> table) {
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      int ab = table[a * n + b];
      for (int c = 0; c < n; ++c) {
        if (table[ab * n + c] != table[a * n + table[b * n + c]]) {
          return false;
        }
      }
    }
  }
  return true;
}

bool is_associative_light(int n, std::span<const int> table,
                          std::span<const int> generator_hint) {
  std::vector<int> gens(generator_hint.begin(), generator_hint.end());
  if (gens.empty()) {
    gens.resize(n);
    std::iota(gens.begin(), gens.end(), 0);
  } else {
    // Close the hint under products; elements outside the closure join the
    // generating set so that it always generates the whole table.
    std::vector<char> reached(n, 0);
    for (int g : gens) reached[g] = 1;
    bool grew = true;
    while (grew) {
      grew = false;
      for (int a = 0; a < n; ++a) {
        if (!reached[a]) continue;
        for (int b = 0; b < n; ++b) {
          if (!reached[b]) continue;
          int ab = table[a * n + b];
          if (!reached[ab]) {
            reached[ab] = 1;
            grew = true;
          }
        }
      }
    }
    for (int e = 0; e < n; ++e) {
      if (!reached[e]) gens.push_back(e);
    }
  }
  // (xa)y = x(ay) for every generator a proves associativity: the set of
  // middle elements satisfying the law is closed under products.
  for (int a : gens) {
    for (int x = 0; x < n; ++x) {
      int xa = table[x * n + a];
      for (int y = 0; y < n; ++y) {
        if (table[xa * n + y] != table[x * n + table[a * n + y]]) {
          return false;
        }
      }
    }
  }
  return true;
}

int power(const FiniteSemigroup& s, int a, long long k) {
  int acc = -1;
  int base = a;
  while (k > 0) {
    if (k & 1) {
      acc = acc < 0 ? base : s.product(acc, base);
    }
    k >>= 1;
    if (k > 0) base = s.product(base, base);
  }
  return acc;
}

std::vector<int> idempotents(const FiniteSemigroup& s) {
  std::vector<int> out;
  for (int e = 0; e < s.order(); ++e) {
    if (s.product(e, e) == e) out.push_back(e);
  }
  return out;
}

bool is_union_of_groups(const FiniteSemigroup& s) {
  int n = s.order();
  for (int x = 0; x < n; ++x) {
    int xx = s.product(x, x);
    bool left = false, right = false;
    for (int t = 0; t < n && !(left && right); ++t) {
      if (s.product(xx, t) == x) left = true;
      if (s.product(t, xx) == x) right = true;
    }
    if (!left || !right) return false;
  }
  return true;
}

namespace {

// Smallest i < j with x^i = x^j; x lies in a subgroup iff i = 1, in which
// case the period is j - 1 and x^{period} is the idempotent of the subgroup.
int orbit_period(const FiniteSemigroup& s, int x) {
  std::vector<int> seen_at(s.order(), -1);
  int cur = x;
  for (int k = 1;; ++k) {
    if (seen_at[cur] >= 0) {
      if (seen_at[cur] != 1) throw NotInSubgroupError(x);
      return k - 1;
    }
    seen_at[cur] = k;
    cur = s.product(cur, x);
  }
}

}  // namespace

int local_identity(const FiniteSemigroup& s, int x) {
  return power(s, x, orbit_period(s, x));
}

int group_inverse(const FiniteSemigroup& s, int x) {
  int c = orbit_period(s, x);
  return c == 1 ? x : power(s, x, c - 1);
}

std::vector<int> subset_product(const FiniteSemigroup& s,
                                std::span<const int> a,
                                std::span<const int> b) {
  std::vector<char> hit(s.order(), 0);
  for (int x : a) {
    for (int y : b) hit[s.product(x, y)] = 1;
  }
  std::vector<int> out;
  for (int e = 0; e < s.order(); ++e) {
    if (hit[e]) out.push_back(e);
  }
  return out;
}

FiniteSemigroup direct_product(const FiniteSemigroup& s,
                               const FiniteSemigroup& t) {
  int n = s.order(), m = t.order();
  std::vector<int> table(static_cast<std::size_t>(n) * m * n * m);
  int nm = n * m;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < m; ++j) {
      for (int k = 0; k < n; ++k) {
        for (int l = 0; l < m; ++l) {
          table[(i * m + j) * nm + (k * m + l)] =
              s.product(i, k) * m + t.product(j, l);
        }
      }
    }
  }
  return FiniteSemigroup(nm, std::move(table));
}

FiniteSemigroup transpose(const FiniteSemigroup& s) {
  int n = s.order();
  std::vector<int> table(static_cast<std::size_t>(n) * n);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) table[a * n + b] = s.product(b, a);
  }
  return FiniteSemigroup(n, std::move(table));
}

bool is_group(const FiniteSemigroup& s) {
  int n = s.order();
  for (int a = 0; a < n; ++a) {
    std::vector<char> row(n, 0), col(n, 0);
    for (int b = 0; b < n; ++b) {
      row[s.product(a, b)] = 1;
      col[s.product(b, a)] = 1;
    }
    for (int v = 0; v < n; ++v) {
      if (!row[v] || !col[v]) return false;
    }
  }
  for (int e = 0; e < n; ++e) {
    bool identity = true;
    for (int a = 0; a < n; ++a) {
      if (s.product(e, a) != a || s.product(a, e) != a) {
        identity = false;
        break;
      }
    }
    if (identity) return true;
  }
  return false;
}

}  // namespace semiforge
