#include "semiforge/rees.hpp"

#include <algorithm>
#include <map>

#include "semiforge/structure.hpp"

namespace semiforge {

namespace {

void validate_spec(const ReesSpec& spec) {
  if (!is_group(spec.group)) {
    throw NotAGroupError("Rees spec group table is not a group");
  }
  if (spec.i_size < 1 || spec.l_size < 1) {
    throw Error("Rees index sets must be nonempty");
  }
  if (spec.sandwich.size()
      != static_cast<std::size_t>(spec.i_size) * spec.l_size) {
    throw Error("sandwich matrix must be l_size x i_size");
  }
  for (int v : spec.sandwich) {
    if (v < 0 || v >= spec.group.order()) {
      throw BadEntryError(0, 0, v);
    }
  }
}

int group_identity(const FiniteSemigroup& g) {
  for (int e = 0; e < g.order(); ++e) {
    if (g.product(e, e) == e) return e;
  }
  return -1;
}

void verify_certificate(const FiniteSemigroup& from, const FiniteSemigroup& to,
                        const Permutation& phi, const char* what) {
  std::vector<char> used(to.order(), 0);
  if (from.order() != to.order()) throw Error(std::string(what) + ": size mismatch");
  for (int v : phi) {
    if (v < 0 || v >= to.order() || used[v]) {
      throw Error(std::string(what) + ": certificate not a bijection");
    }
    used[v] = 1;
  }
  for (int a = 0; a < from.order(); ++a) {
    for (int b = 0; b < from.order(); ++b) {
      if (phi[from.product(a, b)] != to.product(phi[a], phi[b])) {
        throw Error(std::string(what) + ": certificate not a homomorphism");
      }
    }
  }
}

// Right and left principal-ideal masks used to compare Green's classes.
std::vector<long long> ideal_keys(const FiniteSemigroup& s, bool right) {
  int n = s.order();
  if (n > 63) throw OrderTooLargeError("Green's classes support order <= 63");
  std::vector<long long> keys(n);
  for (int a = 0; a < n; ++a) {
    long long mask = 1LL << a;
    for (int x = 0; x < n; ++x) {
      mask |= 1LL << (right ? s.product(a, x) : s.product(x, a));
    }
    keys[a] = mask;
  }
  return keys;
}

std::vector<std::vector<int>> classes_by_key(const std::vector<long long>& keys) {
  std::map<long long, int> index;
  std::vector<std::vector<int>> classes;
  for (int a = 0; a < static_cast<int>(keys.size()); ++a) {
    auto [it, fresh] = index.try_emplace(keys[a], static_cast<int>(classes.size()));
    if (fresh) classes.emplace_back();
    classes[it->second].push_back(a);
  }
  return classes;
}

}  // namespace

FiniteSemigroup build_rees(const ReesSpec& spec) {
  validate_spec(spec);
  int gi = spec.group.order();
  int is = spec.i_size, ls = spec.l_size;
  int n = is * gi * ls;
  auto index = [&](int i, int g, int l) { return (i * gi + g) * ls + l; };
  std::vector<int> table(static_cast<std::size_t>(n) * n);
  for (int i = 0; i < is; ++i) {
    for (int a = 0; a < gi; ++a) {
      for (int mu = 0; mu < ls; ++mu) {
        for (int j = 0; j < is; ++j) {
          for (int b = 0; b < gi; ++b) {
            for (int l = 0; l < ls; ++l) {
              int g = spec.group.product(spec.group.product(a, spec.p(mu, j)), b);
              table[index(i, a, mu) * n + index(j, b, l)] = index(i, g, l);
            }
          }
        }
      }
    }
  }
  return FiniteSemigroup(n, std::move(table));
}

NormalizedRees normalize_sandwich(const ReesSpec& spec) {
  validate_spec(spec);
  const FiniteSemigroup& g = spec.group;
  int is = spec.i_size, ls = spec.l_size, gi = g.order();
  int e = group_identity(g);
  // Twist (i, a, l) -> (i, u_i^{-1} a v_l^{-1}, l) with u_0 = e; the new
  // sandwich p'(l, j) = v_l p(l, j) u_j has identity first row and column.
  std::vector<int> u(is), v(ls);
  for (int l = 0; l < ls; ++l) v[l] = group_inverse(g, spec.p(l, 0));
  for (int j = 0; j < is; ++j) {
    u[j] = g.product(group_inverse(g, spec.p(0, j)), spec.p(0, 0));
  }
  ReesSpec out{g, is, ls, std::vector<int>(spec.sandwich.size())};
  for (int l = 0; l < ls; ++l) {
    for (int j = 0; j < is; ++j) {
      out.sandwich[l * is + j] = g.product(g.product(v[l], spec.p(l, j)), u[j]);
    }
  }
  for (int l = 0; l < ls; ++l) {
    if (out.p(l, 0) != e) throw Error("normalization failed on first column");
  }
  for (int j = 0; j < is; ++j) {
    if (out.p(0, j) != e) throw Error("normalization failed on first row");
  }
  int n = is * gi * ls;
  Permutation iso(n);
  for (int i = 0; i < is; ++i) {
    for (int a = 0; a < gi; ++a) {
      for (int l = 0; l < ls; ++l) {
        int twisted = g.product(g.product(group_inverse(g, u[i]), a),
                                group_inverse(g, v[l]));
        iso[(i * gi + a) * ls + l] = (i * gi + twisted) * ls + l;
      }
    }
  }
  verify_certificate(build_rees(spec), build_rees(out), iso, "normalize_sandwich");
  return {std::move(out), std::move(iso)};
}

std::vector<std::vector<int>> green_r_classes(const FiniteSemigroup& s) {
  return classes_by_key(ideal_keys(s, true));
}

std::vector<std::vector<int>> green_l_classes(const FiniteSemigroup& s) {
  return classes_by_key(ideal_keys(s, false));
}

Coordinatization coordinatize(const FiniteSemigroup& s) {
  if (!is_completely_simple(s)) {
    throw NotCompletelySimpleError("semigroup is not completely simple");
  }
  std::vector<int> es = idempotents(s);
  int e = es[0];
  auto r_keys = ideal_keys(s, true);
  auto l_keys = ideal_keys(s, false);
  // Idempotents of e's L-class meet every R-class exactly once and are the
  // row representatives; dually for the column representatives.
  std::vector<int> rows, cols;
  for (int f : es) {
    if (l_keys[f] == l_keys[e]) rows.push_back(f);
    if (r_keys[f] == r_keys[e]) cols.push_back(f);
  }
  std::vector<int> carrier;  // eSe, the maximal subgroup at e
  {
    std::vector<char> hit(s.order(), 0);
    for (int x = 0; x < s.order(); ++x) {
      hit[s.product(s.product(e, x), e)] = 1;
    }
    for (int x = 0; x < s.order(); ++x) {
      if (hit[x]) carrier.push_back(x);
    }
  }
  FiniteSemigroup group = subsemigroup(s, carrier);
  if (!is_group(group)) {
    throw NotCompletelySimpleError("eSe is not a group");
  }
  std::vector<int> local(s.order(), -1);
  for (std::size_t i = 0; i < carrier.size(); ++i) {
    local[carrier[i]] = static_cast<int>(i);
  }
  int is = static_cast<int>(rows.size());
  int ls = static_cast<int>(cols.size());
  ReesSpec spec{group, is, ls, std::vector<int>(static_cast<std::size_t>(is) * ls)};
  for (int l = 0; l < ls; ++l) {
    for (int j = 0; j < is; ++j) {
      int p = s.product(cols[l], rows[j]);
      if (local[p] < 0) {
        throw NotCompletelySimpleError("sandwich entry escapes eSe");
      }
      spec.sandwich[l * is + j] = local[p];
    }
  }
  int gi = group.order();
  if (is * gi * ls != s.order()) {
    throw NotCompletelySimpleError("coordinate counts do not tile S");
  }
  Permutation iso(s.order());
  for (int i = 0; i < is; ++i) {
    for (int a = 0; a < gi; ++a) {
      for (int l = 0; l < ls; ++l) {
        iso[(i * gi + a) * ls + l] =
            s.product(s.product(rows[i], carrier[a]), cols[l]);
      }
    }
  }
  verify_certificate(build_rees(spec), s, iso, "coordinatize");
  return {std::move(spec), std::move(iso)};
}

}  // namespace semiforge
