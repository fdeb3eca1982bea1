#include "semiforge/structure.hpp"

#include <algorithm>
#include <numeric>
#include <utility>

namespace semiforge {

namespace {

// Union-find keeping the smallest element of each class as its root.
class UnionFind {
 public:
  explicit UnionFind(int n) : parent_(n) {
    std::iota(parent_.begin(), parent_.end(), 0);
  }

  int find(int x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }

  bool merge(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (b < a) std::swap(a, b);
    parent_[b] = a;
    return true;
  }

 private:
  std::vector<int> parent_;
};

int theta(const FiniteSemigroup& s, int x, int y) {
  return s.product(s.product(x, y), x);
}

bool is_two_element_group(const FiniteSemigroup& s) {
  return s.order() == 2 && is_group(s);
}

// Nontrivial group component admitted by the reading.
bool accepted_group(const FiniteSemigroup& s, G2Reading g2) {
  if (g2 == G2Reading::order_two) return is_two_element_group(s);
  return s.order() >= 2 && is_boolean_group(s);
}

bool non_maximal(const SemilatticeDecomposition& d, int alpha) {
  for (int beta = 0; beta < d.y_order; ++beta) {
    if (beta != alpha && d.y_below(alpha, beta)) return true;
  }
  return false;
}

}  // namespace

std::vector<std::vector<int>> least_semilattice_congruence(
    const FiniteSemigroup& s) {
  int n = s.order();
  UnionFind uf(n);
  std::vector<std::pair<int, int>> pending;
  auto merge = [&](int a, int b) {
    if (uf.merge(a, b)) pending.emplace_back(a, b);
  };
  for (int x = 0; x < n; ++x) merge(x, s.product(x, x));
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) merge(s.product(x, y), s.product(y, x));
  }
  // Close under translations: a ~ b forces ac ~ bc and ca ~ cb.
  while (!pending.empty()) {
    auto [a, b] = pending.back();
    pending.pop_back();
    for (int c = 0; c < n; ++c) {
      merge(s.product(a, c), s.product(b, c));
      merge(s.product(c, a), s.product(c, b));
    }
  }
  std::vector<std::vector<int>> blocks;
  std::vector<int> block_of(n, -1);
  for (int x = 0; x < n; ++x) {
    int root = uf.find(x);
    if (block_of[root] < 0) {
      block_of[root] = static_cast<int>(blocks.size());
      blocks.emplace_back();
    }
    blocks[block_of[root]].push_back(x);
  }
  return blocks;
}

SemilatticeDecomposition decompose(const FiniteSemigroup& s) {
  SemilatticeDecomposition d;
  d.components = least_semilattice_congruence(s);
  d.y_order = static_cast<int>(d.components.size());
  d.component_of.assign(s.order(), -1);
  for (int alpha = 0; alpha < d.y_order; ++alpha) {
    for (int x : d.components[alpha]) d.component_of[x] = alpha;
  }
  d.y_table.assign(static_cast<std::size_t>(d.y_order) * d.y_order, 0);
  for (int alpha = 0; alpha < d.y_order; ++alpha) {
    for (int beta = 0; beta < d.y_order; ++beta) {
      int product = s.product(d.components[alpha][0], d.components[beta][0]);
      d.y_table[alpha * d.y_order + beta] = d.component_of[product];
    }
  }
  return d;
}

bool is_chain(const SemilatticeDecomposition& d) {
  for (int a = 0; a < d.y_order; ++a) {
    for (int b = 0; b < d.y_order; ++b) {
      int ab = d.y_product(a, b);
      if (ab != a && ab != b) return false;
    }
  }
  return true;
}

FiniteSemigroup subsemigroup(const FiniteSemigroup& s,
                             std::span<const int> subset) {
  std::vector<int> elems(subset.begin(), subset.end());
  std::sort(elems.begin(), elems.end());
  elems.erase(std::unique(elems.begin(), elems.end()), elems.end());
  std::vector<int> local(s.order(), -1);
  for (std::size_t i = 0; i < elems.size(); ++i) {
    local[elems[i]] = static_cast<int>(i);
  }
  int m = static_cast<int>(elems.size());
  std::vector<int> table(static_cast<std::size_t>(m) * m);
  for (int a = 0; a < m; ++a) {
    for (int b = 0; b < m; ++b) {
      int p = s.product(elems[a], elems[b]);
      if (local[p] < 0) {
        throw NotASubsemigroupError("subset not closed: " + std::to_string(elems[a])
                                    + " * " + std::to_string(elems[b]) + " = "
                                    + std::to_string(p));
      }
      table[a * m + b] = local[p];
    }
  }
  return FiniteSemigroup(m, std::move(table));
}

bool is_left_zero(const FiniteSemigroup& s) {
  for (int a = 0; a < s.order(); ++a) {
    for (int b = 0; b < s.order(); ++b) {
      if (s.product(a, b) != a) return false;
    }
  }
  return true;
}

bool is_right_zero(const FiniteSemigroup& s) {
  for (int a = 0; a < s.order(); ++a) {
    for (int b = 0; b < s.order(); ++b) {
      if (s.product(a, b) != b) return false;
    }
  }
  return true;
}

bool is_band(const FiniteSemigroup& s) {
  for (int a = 0; a < s.order(); ++a) {
    if (s.product(a, a) != a) return false;
  }
  return true;
}

bool is_rectangular_band(const FiniteSemigroup& s) {
  if (!is_band(s)) return false;
  for (int a = 0; a < s.order(); ++a) {
    for (int b = 0; b < s.order(); ++b) {
      if (s.product(s.product(a, b), a) != a) return false;
    }
  }
  return true;
}

bool is_semilattice(const FiniteSemigroup& s) {
  if (!is_band(s)) return false;
  for (int a = 0; a < s.order(); ++a) {
    for (int b = 0; b < a; ++b) {
      if (s.product(a, b) != s.product(b, a)) return false;
    }
  }
  return true;
}

bool is_simple(const FiniteSemigroup& s) {
  int n = s.order();
  for (int a = 0; a < n; ++a) {
    std::vector<char> ideal(n, 0);
    ideal[a] = 1;
    for (int x = 0; x < n; ++x) {
      ideal[s.product(a, x)] = 1;
      ideal[s.product(x, a)] = 1;
      for (int y = 0; y < n; ++y) ideal[s.product(s.product(x, a), y)] = 1;
    }
    if (std::find(ideal.begin(), ideal.end(), 0) != ideal.end()) return false;
  }
  return true;
}

bool is_completely_simple(const FiniteSemigroup& s) {
  return is_union_of_groups(s) && is_simple(s);
}

ComponentClass classify_component(const FiniteSemigroup& s,
                                  std::span<const int> subset) {
  FiniteSemigroup sub = subsemigroup(s, subset);
  if (sub.order() == 1) return {ComponentKind::rectangular_band, 0};
  if (is_left_zero(sub)) return {ComponentKind::left_zero, 0};
  if (is_right_zero(sub)) return {ComponentKind::right_zero, 0};
  if (is_rectangular_band(sub)) return {ComponentKind::rectangular_band, 0};
  if (is_group(sub)) {
    if (sub.order() == 2) return {ComponentKind::group_of_order_two, 0};
    return {ComponentKind::group, sub.order()};
  }
  if (is_completely_simple(sub)) {
    if (idempotent_product_closed(sub)) {
      return {ComponentKind::rectangular_group, 0};
    }
    return {ComponentKind::completely_simple, 0};
  }
  return {ComponentKind::other, 0};
}

std::string to_string(const ComponentClass& c) {
  switch (c.kind) {
    case ComponentKind::left_zero: return "LeftZero";
    case ComponentKind::right_zero: return "RightZero";
    case ComponentKind::rectangular_band: return "RectangularBand";
    case ComponentKind::group_of_order_two: return "GroupOfOrderTwo";
    case ComponentKind::group:
      return "Group(" + std::to_string(c.group_order) + ")";
    case ComponentKind::rectangular_group: return "RectangularGroup";
    case ComponentKind::completely_simple: return "CompletelySimple";
    case ComponentKind::other: return "Other";
  }
  return "Other";
}

bool is_boolean_group(const FiniteSemigroup& s) {
  int n = s.order();
  int e = -1;
  for (int x = 0; x < n && e < 0; ++x) {
    bool identity = true;
    for (int a = 0; a < n && identity; ++a) {
      identity = s.product(x, a) == a && s.product(a, x) == a;
    }
    if (identity) e = x;
  }
  if (e < 0) return false;
  for (int x = 0; x < n; ++x) {
    if (s.product(x, x) != e) return false;
  }
  return true;
}

bool idempotent_product_closed(const FiniteSemigroup& s) {
  std::vector<int> es = idempotents(s);
  for (int e : es) {
    for (int f : es) {
      int p = s.product(e, f);
      if (s.product(p, p) != p) return false;
    }
  }
  return true;
}

SquareComponents square_components(const FiniteSemigroup& s) {
  std::vector<int> all(s.order());
  std::iota(all.begin(), all.end(), 0);
  std::vector<int> sq = subset_product(s, all, all);
  FiniteSemigroup square = subsemigroup(s, sq);
  SemilatticeDecomposition sd = decompose(square);
  std::vector<int> local(s.order(), -1);
  for (std::size_t i = 0; i < sq.size(); ++i) local[sq[i]] = static_cast<int>(i);
  std::vector<int> comp(s.order());
  for (int x = 0; x < s.order(); ++x) {
    comp[x] = sd.component_of[local[s.product(x, x)]];
  }
  return {std::move(sq), std::move(square), std::move(sd), std::move(comp)};
}

CheckResult check_theorem1_structure(const FiniteSemigroup& s, G2Reading mode) {
  CheckResult r;
  SemilatticeDecomposition d = decompose(s);
  if (!is_chain(d)) r.fail("Y is not a chain");
  for (int alpha = 0; alpha < d.y_order; ++alpha) {
    FiniteSemigroup sub = subsemigroup(s, d.components[alpha]);
    bool rb = is_rectangular_band(sub);
    bool g2 = accepted_group(sub, mode);
    if (!rb && !g2) {
      r.fail("component " + std::to_string(alpha) + " not in RB or G2");
    }
    if (g2 && non_maximal(d, alpha)) {
      r.fail("non-maximal component " + std::to_string(alpha)
             + " is a group of order two");
    }
  }
  for (int alpha = 0; alpha < d.y_order; ++alpha) {
    for (int beta = 0; beta < d.y_order; ++beta) {
      if (alpha == beta || !d.y_below(alpha, beta)) continue;
      for (int x : d.components[alpha]) {
        for (int y : d.components[beta]) {
          if (s.product(x, y) != x || s.product(y, x) != x) {
            r.fail("absorption xy = yx = x fails for x=" + std::to_string(x)
                   + ", y=" + std::to_string(y));
            return r;
          }
        }
      }
    }
  }
  return r;
}

CheckResult check_theorem4_structure(const FiniteSemigroup& s, G2Reading mode) {
  CheckResult r;
  SemilatticeDecomposition d = decompose(s);
  for (int alpha = 0; alpha < d.y_order; ++alpha) {
    FiniteSemigroup sub = subsemigroup(s, d.components[alpha]);
    if (!is_right_zero(sub) && !accepted_group(sub, mode)) {
      r.fail("component " + std::to_string(alpha) + " not in R0 or G2");
    }
  }
  return r;
}

CheckResult check_theorem5_structure(const FiniteSemigroup& s, G2Reading mode) {
  CheckResult r;
  SemilatticeDecomposition d = decompose(s);
  for (int alpha = 0; alpha < d.y_order; ++alpha) {
    FiniteSemigroup sub = subsemigroup(s, d.components[alpha]);
    if (!is_rectangular_band(sub) && !accepted_group(sub, mode)) {
      r.fail("component " + std::to_string(alpha) + " not in RB or G2");
    }
  }
  return r;
}

CheckResult check_theorem2_structure(const FiniteSemigroup& s, G2Reading mode) {
  CheckResult r;
  SquareComponents sq = square_components(s);
  const SemilatticeDecomposition& y = sq.square_decomp;
  int k = y.y_order;
  const std::vector<int>& comp = sq.component_of;

  // S must be a semilattice Y of the S_alpha.
  for (int x = 0; x < s.order(); ++x) {
    for (int z = 0; z < s.order(); ++z) {
      if (comp[s.product(x, z)] != y.y_product(comp[x], comp[z])) {
        r.fail("S_alpha S_beta not contained in S_alphabeta at x="
               + std::to_string(x) + ", y=" + std::to_string(z));
        return r;
      }
    }
  }

  std::vector<std::vector<int>> sa(k);
  for (int x = 0; x < s.order(); ++x) sa[comp[x]].push_back(x);

  std::vector<std::vector<int>> sq_a(k);   // (S_alpha)^2 as global subsets
  std::vector<std::vector<char>> in_sq(k, std::vector<char>(s.order(), 0));
  std::vector<char> rz(k, 0), g2(k, 0);
  std::vector<int> ident(k, -1);  // identity element when (S_alpha)^2 in G2
  for (int a = 0; a < k; ++a) {
    sq_a[a] = subset_product(s, sa[a], sa[a]);
    for (int e : sq_a[a]) in_sq[a][e] = 1;
    FiniteSemigroup sub = subsemigroup(s, sq_a[a]);
    rz[a] = is_right_zero(sub);
    g2[a] = accepted_group(sub, mode);
    if (g2[a]) {
      for (int e : sq_a[a]) {
        if (s.product(e, e) == e) ident[a] = e;
      }
    }
    // (1)
    if (!rz[a] && !g2[a]) {
      r.fail("(1): (S_" + std::to_string(a) + ")^2 not in R0 or G2");
    }
    // (2)
    if (g2[a] && non_maximal(y, a)) {
      r.fail("(2): non-maximal (S_" + std::to_string(a) + ")^2 in G2");
    }
    // (3). The premise (S_alpha)^2 in G2 is implicit in the theorem: the
    // proof derives x = 1 by cancellation inside the group, and the converse
    // only invokes (3) in the G2 case. A right-zero (S_alpha)^2 may sit
    // under a strictly larger S_alpha (inflations do exactly that).
    if (g2[a] && sa[a].size() != sq_a[a].size()) {
      r.fail("(3): S_" + std::to_string(a)
             + " - (S_alpha)^2 nonempty but (S_alpha)^2 a group of order two");
    }
  }

  // (4): theta_x restricted to S_beta maps into (S_alphabeta)^2 and is a
  // homomorphism.
  for (int x = 0; x < s.order() && r.ok; ++x) {
    int a = comp[x];
    for (int yy = 0; yy < s.order() && r.ok; ++yy) {
      int ab = y.y_product(a, comp[yy]);
      if (!in_sq[ab][theta(s, x, yy)]) {
        r.fail("(4): theta_" + std::to_string(x) + "(" + std::to_string(yy)
               + ") outside (S_alphabeta)^2");
      }
    }
    for (int b = 0; b < k && r.ok; ++b) {
      for (int yy : sa[b]) {
        for (int z : sa[b]) {
          if (theta(s, x, s.product(yy, z))
              != s.product(theta(s, x, yy), theta(s, x, z))) {
            r.fail("(4): theta_" + std::to_string(x)
                   + " not a homomorphism on S_" + std::to_string(b));
          }
        }
      }
    }
  }

  // (4.1)
  for (int a = 0; a < k && r.ok; ++a) {
    if (!g2[a]) continue;
    for (int z : sa[a]) {
      int base = theta(s, ident[a], z);
      for (int g : sq_a[a]) {
        if (theta(s, g, z) != base) {
          r.fail("(4.1): theta_g != theta_1 on S_" + std::to_string(a));
        }
      }
      for (int x : sa[a]) {
        if (theta(s, x, z) != base) {
          r.fail("(4.1): theta_x != theta_1 on S_" + std::to_string(a));
        }
        for (int yy : sa[a]) {
          if (theta(s, x, theta(s, yy, z)) != base) {
            r.fail("(4.1): theta_x theta_y != theta_1 on S_"
                   + std::to_string(a));
          }
        }
      }
    }
  }

  // (4.2)
  for (int x = 0; x < s.order() && r.ok; ++x) {
    for (int yy = 0; yy < s.order() && r.ok; ++yy) {
      int ab = y.y_product(comp[x], comp[yy]);
      int w = s.product(theta(s, x, yy), theta(s, yy, x));
      for (int c = 0; c < k && r.ok; ++c) {
        if (!rz[y.y_product(ab, c)]) continue;
        for (int z : sa[c]) {
          if (theta(s, w, z) != theta(s, yy, theta(s, x, z))) {
            r.fail("(4.2): theta_{(theta_x y)(theta_y x)} != theta_y theta_x");
            break;
          }
        }
      }
    }
  }

  // (4.3)
  for (int x = 0; x < s.order() && r.ok; ++x) {
    for (int yy = 0; yy < s.order(); ++yy) {
      if (s.product(x, yy) != s.product(theta(s, x, yy), theta(s, yy, x))) {
        r.fail("(4.3): xy != (theta_x y)(theta_y x) at x=" + std::to_string(x)
               + ", y=" + std::to_string(yy));
        break;
      }
    }
  }
  return r;
}

CheckResult check_corollary3_structure(const FiniteSemigroup& s,
                                        G2Reading mode) {
  CheckResult r;
  SemilatticeDecomposition d = decompose(s);
  int k = d.y_order;
  std::vector<char> rz(k, 0), g2(k, 0);
  std::vector<int> ident(k, -1);
  for (int a = 0; a < k; ++a) {
    FiniteSemigroup sub = subsemigroup(s, d.components[a]);
    rz[a] = is_right_zero(sub);
    g2[a] = accepted_group(sub, mode);
    if (g2[a]) {
      for (int e : d.components[a]) {
        if (s.product(e, e) == e) ident[a] = e;
      }
    }
    if (!rz[a] && !g2[a]) {
      r.fail("(1.1): S_" + std::to_string(a) + " not in R0 or G2");
    }
    if (g2[a] && non_maximal(d, a)) {
      r.fail("(1.2): non-maximal S_" + std::to_string(a) + " in G2");
    }
  }
  if (!r.ok) return r;

  // (1.3)(a)
  for (int x = 0; x < s.order() && r.ok; ++x) {
    int a = d.component_of[x];
    for (int yy = 0; yy < s.order() && r.ok; ++yy) {
      int ab = d.y_product(a, d.component_of[yy]);
      if (d.component_of[theta(s, x, yy)] != ab) {
        r.fail("(1.3a): theta_" + std::to_string(x) + " leaves S_alphabeta");
      }
    }
    for (int b = 0; b < k && r.ok; ++b) {
      for (int yy : d.components[b]) {
        for (int z : d.components[b]) {
          if (theta(s, x, s.product(yy, z))
              != s.product(theta(s, x, yy), theta(s, x, z))) {
            r.fail("(1.3a): theta_" + std::to_string(x)
                   + " not a homomorphism on S_" + std::to_string(b));
          }
        }
      }
    }
  }

  // (1.3)(b)
  for (int x = 0; x < s.order() && r.ok; ++x) {
    for (int yy = 0; yy < s.order() && r.ok; ++yy) {
      int ab = d.y_product(d.component_of[x], d.component_of[yy]);
      int w = s.product(theta(s, x, yy), theta(s, yy, x));
      for (int c = 0; c < k && r.ok; ++c) {
        if (!rz[d.y_product(ab, c)]) continue;
        for (int z : d.components[c]) {
          if (theta(s, w, z) != theta(s, yy, theta(s, x, z))) {
            r.fail("(1.3b): theta_{(theta_x y)(theta_y x)} != theta_y theta_x");
            break;
          }
        }
      }
    }
  }

  // (1.3)(c)
  for (int a = 0; a < k && r.ok; ++a) {
    if (!g2[a]) continue;
    for (int z : d.components[a]) {
      int base = theta(s, ident[a], z);
      for (int x : d.components[a]) {
        if (theta(s, x, z) != base) {
          r.fail("(1.3c): theta_x != theta_1 on S_" + std::to_string(a));
        }
        for (int yy : d.components[a]) {
          if (theta(s, x, theta(s, yy, z)) != base) {
            r.fail("(1.3c): theta_x theta_y != theta_1 on S_"
                   + std::to_string(a));
          }
        }
      }
    }
  }
  return r;
}

}  // namespace semiforge
