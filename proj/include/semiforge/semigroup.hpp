// Cayley-table representation of finite semigroups and element arithmetic.
#pragma once

#include <span>
#include <vector>

#include "semiforge/errors.hpp"

namespace semiforge {

/// A finite semigroup given by its order-n Cayley table.
///
/// Elements are the dense indices 0..n-1; the row index is the left factor,
/// so table[a*n + b] is the product ab. Construction validates closure and
/// associativity, so a live FiniteSemigroup always satisfies both. Values are
/// immutable after construction and safe for unlimited concurrent readers.
class FiniteSemigroup {
 public:
  /// Validates and adopts the table. Throws BadEntryError for an entry
  /// outside [0, n) and NotAssociativeError (with a witness triple) when
  /// (ab)c != a(bc) for some a, b, c.
  FiniteSemigroup(int order, std::vector<int> table);

  int order() const noexcept { return order_; }

  int product(int a, int b) const { return table_[a * order_ + b]; }

  const std::vector<int>& table() const noexcept { return table_; }

  bool operator==(const FiniteSemigroup&) const = default;

 private:
  int order_;
  std::vector<int> table_;
};

/// Checks all n^3 triples directly.
bool is_associative_naive(int n, std::span<const int> table);

/// Light's associativity test: the middle-element law (xa)y = x(ay) is
/// verified for every a in a generating set. The hint may be any element
/// subset; it is closed under products and padded with unreachable elements,
/// so the verdict never depends on it. Defaults to the full element set.
bool is_associative_light(int n, std::span<const int> table,
                          std::span<const int> generator_hint = {});

/// a^k for k >= 1, by repeated squaring.
int power(const FiniteSemigroup& s, int a, long long k);

/// All e with e^2 = e, ascending.
std::vector<int> idempotents(const FiniteSemigroup& s);

/// True iff every x satisfies x in x^2 S and x in S x^2 (x lies in a
/// subgroup; the semigroup is completely regular).
bool is_union_of_groups(const FiniteSemigroup& s);

/// The unique idempotent power of x, acting as identity on the maximal
/// subgroup containing x. Throws NotInSubgroupError when x = x^{k+1} has no
/// solution, i.e. the orbit of x does not return to x.
int local_identity(const FiniteSemigroup& s, int x);

/// The inverse of x within its subgroup: x * inv = inv * x = local identity.
int group_inverse(const FiniteSemigroup& s, int x);

/// {ab : a in A, b in B}, ascending and deduplicated.
std::vector<int> subset_product(const FiniteSemigroup& s,
                                std::span<const int> a,
                                std::span<const int> b);

/// Componentwise product on n*m elements; (i, j) maps to index i*m + j.
FiniteSemigroup direct_product(const FiniteSemigroup& s,
                               const FiniteSemigroup& t);

/// The dual semigroup (table transposed).
FiniteSemigroup transpose(const FiniteSemigroup& s);

/// True iff the table is a group: a Latin square with a two-sided identity.
bool is_group(const FiniteSemigroup& s);

}  // namespace semiforge
