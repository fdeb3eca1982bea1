// Isomorphism search and canonical forms for small Cayley tables.
#pragma once

#include <optional>
#include <vector>

#include "semiforge/semigroup.hpp"

namespace semiforge {

/// A bijection on [0, n), used as an isomorphism certificate.
using Permutation = std::vector<int>;

/// A bijection phi with phi(ab) = phi(a)phi(b), or nullopt. Backtracking
/// over images in ascending order, so the certificate is deterministic.
std::optional<Permutation> are_isomorphic(const FiniteSemigroup& s,
                                          const FiniteSemigroup& t);

/// A bijection phi with phi(ab) = phi(b)phi(a), or nullopt.
std::optional<Permutation> are_anti_isomorphic(const FiniteSemigroup& s,
                                               const FiniteSemigroup& t);

/// Lexicographically minimal table over all n! relabelings. Equal for
/// isomorphic inputs and idempotent. Plain minimization over a precomputed
/// permutation list; throws OrderTooLargeError beyond order 8.
std::vector<int> canonical_form(const FiniteSemigroup& s);

/// Serial reference for canonical_form; identical output.
std::vector<int> canonical_form_serial(const FiniteSemigroup& s);

}  // namespace semiforge
