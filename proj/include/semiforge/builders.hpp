// Constructors for semigroups guaranteed to land in the named inclusion
// classes: absorption chains, strong semilattices, and theta products.
#pragma once

#include <map>
#include <span>
#include <string_view>
#include <vector>

#include "semiforge/semigroup.hpp"

namespace semiforge {

FiniteSemigroup trivial_semigroup();
FiniteSemigroup left_zero(int k);
FiniteSemigroup right_zero(int k);
/// I x Lambda with (i, l)(j, m) = (i, m); index (i, l) -> i * cols + l.
FiniteSemigroup rectangular_band(int rows, int cols);
FiniteSemigroup cyclic_group(int k);

struct ComponentSpec {
  enum class Kind { trivial, rectangular_band, left_zero, right_zero, g2 };
  Kind kind = Kind::trivial;
  int rows = 1;
  int cols = 1;

  int size() const;
  FiniteSemigroup build() const;
};

/// Chain spec list syntax: `trivial | rb:PxQ | rz:K | lz:K | g2`, separated
/// by ';'. Throws ParseError.
std::vector<ComponentSpec> parse_chain_spec(std::string_view text);

/// Chain of components, bottom first, cross-level products absorbed by the
/// lower element (xy = yx = x). A group-of-order-two entry is only accepted
/// on top (NontrivialG2BelowTopError otherwise; EmptySpecError for an empty
/// list). The output is validated and checked against the THM1 class.
FiniteSemigroup build_chain(std::span<const ComponentSpec> specs);

/// Semilattice y, one component table per element of y, and a homomorphism
/// phi_{beta->alpha}: S_beta -> S_alpha (local indices) for every comparable
/// pair alpha < beta. phi_{alpha->alpha} is implicitly the identity.
struct StrongSemilatticeData {
  FiniteSemigroup y;
  std::vector<FiniteSemigroup> components;
  std::map<std::pair<int, int>, std::vector<int>> homs;  // (beta, alpha)
};

/// Product x * y = phi_{alpha->alphabeta}(x) * phi_{beta->alphabeta}(y)
/// inside the target component; elements are the components concatenated in
/// y's order. Validates each hom (NotAHomomorphismError), coverage and
/// transitivity (IncompatibleHomsError); when every component is a
/// rectangular band or group of order two the output is checked against the
/// THM5 class.
FiniteSemigroup build_strong_semilattice(const StrongSemilatticeData& data);

/// Semilattice y, component tables, and one global map theta[x]: S -> S per
/// element. elements[alpha] lists the global ids of component alpha; when
/// empty, components are numbered consecutively in y's order.
struct ThetaData {
  FiniteSemigroup y;
  std::vector<FiniteSemigroup> components;
  std::vector<std::vector<int>> theta;
  std::vector<std::vector<int>> elements;
};

/// Product x * y = (theta_x y)(theta_y x) evaluated in the component of
/// alphabeta. The theta family is validated first (ThetaConditionViolatedError
/// naming (a), (b) or (c) with a witness); the result is validated and
/// checked against the THM2 class.
FiniteSemigroup build_theta_product(const ThetaData& data);

/// The canonical gluing data of S: its decomposition, component tables, and
/// theta_x(y) = xyx. For members of the COR3 class, build_theta_product of
/// this data reproduces S exactly.
ThetaData extract_theta_data(const FiniteSemigroup& s);

}  // namespace semiforge
