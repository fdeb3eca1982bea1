// Least semilattice congruence, component classification and the structural
// predicates paired with the inclusion classes.
#pragma once

#include <span>
#include <string>
#include <vector>

#include "semiforge/semigroup.hpp"

namespace semiforge {

/// Partition of S into components S_alpha plus the induced semilattice Y.
/// Components are ordered by smallest element; y_table is the Cayley table
/// of the quotient, always idempotent and commutative, and the partition is
/// the finest one whose quotient is a semilattice.
struct SemilatticeDecomposition {
  std::vector<int> component_of;            // element -> component id
  std::vector<std::vector<int>> components; // ascending element lists
  std::vector<int> y_table;                 // y_order x y_order
  int y_order = 0;

  int y_product(int a, int b) const { return y_table[a * y_order + b]; }
  /// alpha <= beta in Y, i.e. alpha * beta = alpha.
  bool y_below(int a, int b) const { return y_product(a, b) == a; }
};

/// Classes of the congruence generated by {(x, x^2)} and {(xy, yx)}, closed
/// under left and right translation; blocks ordered by smallest element.
std::vector<std::vector<int>> least_semilattice_congruence(
    const FiniteSemigroup& s);

SemilatticeDecomposition decompose(const FiniteSemigroup& s);

/// True iff Y is totally ordered.
bool is_chain(const SemilatticeDecomposition& d);

/// Most-specific kind first; one-element components report rectangular_band.
enum class ComponentKind {
  left_zero,
  right_zero,
  rectangular_band,
  group_of_order_two,
  group,
  rectangular_group,
  completely_simple,
  other,
};

struct ComponentClass {
  ComponentKind kind = ComponentKind::other;
  int group_order = 0;  // set for kind == group
  bool operator==(const ComponentClass&) const = default;
};

std::string to_string(const ComponentClass& c);

/// Extracts the relabeled standalone table of a subsemigroup.
/// Throws NotASubsemigroupError when the subset is not closed.
FiniteSemigroup subsemigroup(const FiniteSemigroup& s,
                             std::span<const int> subset);

ComponentClass classify_component(const FiniteSemigroup& s,
                                  std::span<const int> subset);

// Whole-table predicates used by the classifiers and the theorem checks.
bool is_left_zero(const FiniteSemigroup& s);
bool is_right_zero(const FiniteSemigroup& s);
bool is_band(const FiniteSemigroup& s);
bool is_rectangular_band(const FiniteSemigroup& s);
bool is_semilattice(const FiniteSemigroup& s);
/// S^1 a S^1 = S for every a.
bool is_simple(const FiniteSemigroup& s);
/// Simple and a union of groups.
bool is_completely_simple(const FiniteSemigroup& s);

/// True iff E_S is closed under products.
bool idempotent_product_closed(const FiniteSemigroup& s);

/// A group of exponent at most two (all squares the identity). Contains the
/// trivial group, the group of order two, the Klein four-group, ...
bool is_boolean_group(const FiniteSemigroup& s);

/// Which group components the structural checks accept alongside the
/// rectangular-band/right-zero kinds.
///
/// order_two is the literal reading. It is refuted at order 4: the Klein
/// four-group satisfies all five identity classes (xyx = y in any boolean
/// group) but is no semilattice of rectangular bands and order-two groups.
/// boolean_group accepts any elementary abelian 2-group and makes the
/// equivalences hold on every semigroup the enumerator can reach.
enum class G2Reading { order_two, boolean_group };

struct CheckResult {
  bool ok = true;
  std::vector<std::string> failures;

  explicit operator bool() const { return ok; }
  void fail(std::string message) {
    ok = false;
    failures.push_back(std::move(message));
  }
};

/// S^2, its decomposition as a standalone semigroup, and the component
/// assignment x -> alpha with x^2 in the alpha-component of S^2.
struct SquareComponents {
  std::vector<int> square_elements;          // sorted global elements of S^2
  FiniteSemigroup square;                    // standalone relabeled S^2
  SemilatticeDecomposition square_decomp;    // decomposition of `square`
  std::vector<int> component_of;             // per element of S
};

SquareComponents square_components(const FiniteSemigroup& s);

/// Chain of components in RB or G2, lower component absorbing (xy = yx = x
/// across levels), and every non-maximal nontrivial group component
/// forbidden.
CheckResult check_theorem1_structure(const FiniteSemigroup& s,
                                     G2Reading g2 = G2Reading::order_two);

/// Conditions (1)-(3) over the square components plus the canonical
/// theta_x(y) = xyx satisfying (4) and (4.1)-(4.3).
CheckResult check_theorem2_structure(const FiniteSemigroup& s,
                                     G2Reading g2 = G2Reading::order_two);

/// Conditions (1.1), (1.2) on decompose(S) plus the canonical theta
/// satisfying (1.3)(a)-(c).
CheckResult check_corollary3_structure(const FiniteSemigroup& s,
                                       G2Reading g2 = G2Reading::order_two);

/// Every component right-zero (any size, trivial included) or a group
/// accepted by the reading.
CheckResult check_theorem4_structure(const FiniteSemigroup& s,
                                     G2Reading g2 = G2Reading::order_two);

/// Every component a rectangular band or a group accepted by the reading.
CheckResult check_theorem5_structure(const FiniteSemigroup& s,
                                     G2Reading g2 = G2Reading::order_two);

}  // namespace semiforge
