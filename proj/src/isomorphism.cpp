#include "semiforge/isomorphism.hpp"

#include <algorithm>
#include <mutex>
#include <numeric>

namespace semiforge {

namespace {

// Extends phi one element at a time, checking every product both of whose
// factors already have images. anti swaps the factor order on the right.
bool extend_map(const FiniteSemigroup& s, const FiniteSemigroup& t,
                Permutation& phi, std::vector<char>& used, int next,
                bool anti) {
  int n = s.order();
  if (next == n) return true;
  for (int image = 0; image < n; ++image) {
    if (used[image]) continue;
    phi[next] = image;
    used[image] = 1;
    bool ok = true;
    for (int a = 0; a <= next && ok; ++a) {
      for (int b = 0; b <= next && ok; ++b) {
        int ab = s.product(a, b);
        if (ab > next) continue;
        int lhs = phi[ab];
        int rhs = anti ? t.product(phi[b], phi[a]) : t.product(phi[a], phi[b]);
        if (lhs != rhs) ok = false;
      }
    }
    if (ok && extend_map(s, t, phi, used, next + 1, anti)) return true;
    used[image] = 0;
  }
  phi[next] = -1;
  return false;
}

std::optional<Permutation> find_map(const FiniteSemigroup& s,
                                    const FiniteSemigroup& t, bool anti) {
  if (s.order() != t.order()) return std::nullopt;
  Permutation phi(s.order(), -1);
  std::vector<char> used(s.order(), 0);
  if (extend_map(s, t, phi, used, 0, anti)) return phi;
  return std::nullopt;
}

void relabel_into(const FiniteSemigroup& s, const Permutation& p,
                  std::vector<int>& out) {
  int n = s.order();
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      out[p[a] * n + p[b]] = p[s.product(a, b)];
    }
  }
}

constexpr int kCanonicalMaxOrder = 8;

// All permutations of [0, n) in one flat buffer, n entries each, built once
// per order.
const std::vector<int>& all_permutations_flat(int n) {
  static std::vector<int> tables[kCanonicalMaxOrder + 1];
  static std::once_flag flags[kCanonicalMaxOrder + 1];
  std::call_once(flags[n], [n] {
    Permutation p(n);
    std::iota(p.begin(), p.end(), 0);
    std::vector<int> out;
    do {
      out.insert(out.end(), p.begin(), p.end());
    } while (std::next_permutation(p.begin(), p.end()));
    tables[n] = std::move(out);
  });
  return tables[n];
}

}  // namespace

std::optional<Permutation> are_isomorphic(const FiniteSemigroup& s,
                                          const FiniteSemigroup& t) {
  return find_map(s, t, false);
}

std::optional<Permutation> are_anti_isomorphic(const FiniteSemigroup& s,
                                               const FiniteSemigroup& t) {
  return find_map(s, t, true);
}

std::vector<int> canonical_form_serial(const FiniteSemigroup& s) {
  int n = s.order();
  if (n > kCanonicalMaxOrder) {
    throw OrderTooLargeError("canonical form supports order <= "
                             + std::to_string(kCanonicalMaxOrder));
  }
  Permutation p(n);
  std::iota(p.begin(), p.end(), 0);
  std::vector<int> best = s.table();
  std::vector<int> candidate(best.size());
  while (std::next_permutation(p.begin(), p.end())) {
    relabel_into(s, p, candidate);
    if (candidate < best) best.swap(candidate);
  }
  return best;
}

std::vector<int> canonical_form(const FiniteSemigroup& s) {
  int n = s.order();
  if (n > kCanonicalMaxOrder) {
    throw OrderTooLargeError("canonical form supports order <= "
                             + std::to_string(kCanonicalMaxOrder));
  }
  if (n <= 4) return canonical_form_serial(s);
  const std::vector<int>& perms = all_permutations_flat(n);
  std::size_t count = perms.size() / n;
  std::vector<int> best = s.table();
#pragma omp parallel
  {
    std::vector<int> local_best = s.table();
    std::vector<int> candidate(local_best.size());
    Permutation p(n);
#pragma omp for schedule(static) nowait
    for (std::size_t i = 0; i < count; ++i) {
      std::copy_n(perms.begin() + i * n, n, p.begin());
      relabel_into(s, p, candidate);
      if (candidate < local_best) local_best.swap(candidate);
    }
#pragma omp critical(semiforge_canonical_min)
    {
      if (local_best < best) best.swap(local_best);
    }
  }
  return best;
}

}  // namespace semiforge
