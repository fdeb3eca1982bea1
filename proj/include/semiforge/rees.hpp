// Rees matrix semigroups: construction from (G, I, Lambda, P), sandwich
// normalization, and coordinatization of completely simple semigroups.
#pragma once

#include <vector>

#include "semiforge/isomorphism.hpp"
#include "semiforge/semigroup.hpp"

namespace semiforge {

/// Group table, index set sizes and the Lambda x I sandwich matrix of group
/// element indices, p[mu * i_size + j].
struct ReesSpec {
  FiniteSemigroup group;
  int i_size = 1;
  int l_size = 1;
  std::vector<int> sandwich;

  int p(int mu, int j) const { return sandwich[mu * i_size + j]; }
};

/// The semigroup on I x G x Lambda with product
/// (i, a, mu)(j, b, lambda) = (i, a p(mu, j) b, lambda); element (i, g, l)
/// has index (i * |G| + g) * |Lambda| + l. Throws NotAGroupError when the
/// group table is not a Latin square with identity.
FiniteSemigroup build_rees(const ReesSpec& spec);

struct NormalizedRees {
  ReesSpec spec;    // first row and column of the sandwich are the identity
  Permutation iso;  // build_rees(input) -> build_rees(spec), verified
};

/// Twists the group coordinate so the sandwich is normalized; the witnessing
/// isomorphism is re-verified on every call. Idempotent.
NormalizedRees normalize_sandwich(const ReesSpec& spec);

struct Coordinatization {
  ReesSpec spec;
  Permutation iso;  // build_rees(spec) -> S, verified bijective homomorphism
};

/// Rees coordinates for a completely simple S: G = eSe for the smallest
/// idempotent e, index sets the idempotents of e's L- and R-classes, and
/// sandwich entries evaluated in S. The certificate phi(i, g, lambda) =
/// i g lambda is verified to be a bijective homomorphism before returning.
/// Throws NotCompletelySimpleError otherwise.
Coordinatization coordinatize(const FiniteSemigroup& s);

/// Partitions by aS^1 = bS^1, classes ordered by smallest element.
std::vector<std::vector<int>> green_r_classes(const FiniteSemigroup& s);

/// Partitions by S^1 a = S^1 b.
std::vector<std::vector<int>> green_l_classes(const FiniteSemigroup& s);

}  // namespace semiforge
