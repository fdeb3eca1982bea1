#include "doctest.h"

#include "semiforge/builders.hpp"
#include "semiforge/inclusion.hpp"
#include "semiforge/structure.hpp"
#include "test_support.hpp"

using namespace semiforge;

TEST_CASE("basic semigroups") {
  FiniteSemigroup rb = rectangular_band(2, 2);
  CHECK(idempotents(rb).size() == 4);
  for (int x = 0; x < 4; ++x) {
    for (int y = 0; y < 4; ++y) {
      CHECK(rb.product(rb.product(x, y), x) == x);
    }
  }
  CHECK(cyclic_group(2).table() == std::vector<int>{0, 1, 1, 0});
  CHECK(member_of_class(right_zero(3), predefined_classes().at("THM4")).member);
}

TEST_CASE("parse_chain_spec") {
  std::vector<ComponentSpec> specs = parse_chain_spec("trivial;rz:2");
  REQUIRE(specs.size() == 2);
  CHECK(specs[0].kind == ComponentSpec::Kind::trivial);
  CHECK(specs[1].kind == ComponentSpec::Kind::right_zero);
  CHECK(specs[1].rows == 2);

  specs = parse_chain_spec("rb:2x3; lz:4 ;g2");
  REQUIRE(specs.size() == 3);
  CHECK(specs[0].size() == 6);
  CHECK(specs[1].size() == 4);
  CHECK(specs[2].kind == ComponentSpec::Kind::g2);

  CHECK_THROWS_AS(parse_chain_spec("rz:0"), ParseError);
  CHECK_THROWS_AS(parse_chain_spec("rb:2"), ParseError);
  CHECK_THROWS_AS(parse_chain_spec("frob"), ParseError);
}

TEST_CASE("build_chain") {
  std::vector<ComponentSpec> golden = parse_chain_spec("trivial;rz:2");
  CHECK(build_chain(golden).table() == tsupport::chain3().table());

  std::vector<ComponentSpec> single = parse_chain_spec("g2");
  CHECK(build_chain(single).table() == cyclic_group(2).table());

  std::vector<ComponentSpec> bad = parse_chain_spec("g2;rz:2");
  CHECK_THROWS_AS(build_chain(bad), NontrivialG2BelowTopError);
  CHECK_THROWS_AS(build_chain(std::vector<ComponentSpec>{}), EmptySpecError);
}

TEST_CASE("chains land in THM1") {
  const auto& thm1 = predefined_classes().at("THM1");
  std::vector<std::string> grids = {
      "trivial", "rz:3", "lz:2;g2", "rb:2x2;rz:2", "trivial;lz:2;rb:1x3",
      "rb:2x2;trivial;g2", "lz:2;rz:2;lz:2", "trivial;rb:2x3",
  };
  for (const auto& grid : grids) {
    FiniteSemigroup s = build_chain(parse_chain_spec(grid));
    CHECK(member_of_class(s, thm1).member);
    CHECK(check_theorem1_structure(s).ok);
  }
}

TEST_CASE("build_strong_semilattice") {
  // Constant hom onto the trivial bottom reproduces the absorption chain.
  StrongSemilatticeData chain{tsupport::meet2(),
                              {trivial_semigroup(), right_zero(2)},
                              {{{1, 0}, {0, 0}}}};
  CHECK(build_strong_semilattice(chain).table() == tsupport::chain3().table());

  StrongSemilatticeData adjoin{tsupport::meet2(),
                               {trivial_semigroup(), cyclic_group(2)},
                               {{{1, 0}, {0, 0}}}};
  FiniteSemigroup z2zero = build_strong_semilattice(adjoin);
  CHECK(z2zero.order() == 3);
  CHECK(member_of_class(z2zero, predefined_classes().at("THM5")).member);
  CHECK(tsupport::oracle_member(z2zero, predefined_classes().at("THM5")));

  StrongSemilatticeData bowtie{
      tsupport::bowtie3(),
      {trivial_semigroup(), trivial_semigroup(), trivial_semigroup()},
      {{{1, 0}, {0}}, {{2, 0}, {0}}}};
  FiniteSemigroup three = build_strong_semilattice(bowtie);
  CHECK(three.table() == tsupport::bowtie3().table());
}

TEST_CASE("strong semilattice validation errors") {
  // theta: [1, 0] is not a homomorphism Z2 -> Z2.
  StrongSemilatticeData bad_hom{tsupport::meet2(),
                                {cyclic_group(2), cyclic_group(2)},
                                {{{1, 0}, {1, 0}}}};
  CHECK_THROWS_AS(build_strong_semilattice(bad_hom), NotAHomomorphismError);

  StrongSemilatticeData missing{tsupport::meet2(),
                                {trivial_semigroup(), right_zero(2)},
                                {}};
  CHECK_THROWS_AS(build_strong_semilattice(missing), IncompatibleHomsError);

  // 3-chain whose direct hom disagrees with the composition through the
  // middle component.
  FiniteSemigroup chain_y = tsupport::from_rows({{0, 0, 0}, {0, 1, 1}, {0, 1, 2}});
  StrongSemilatticeData inconsistent{
      chain_y,
      {cyclic_group(2), trivial_semigroup(), cyclic_group(2)},
      {{{1, 0}, {0}}, {{2, 1}, {0, 0}}, {{2, 0}, {0, 1}}}};
  CHECK_THROWS_AS(build_strong_semilattice(inconsistent), IncompatibleHomsError);
}

TEST_CASE("build_theta_product rebuilds extracted data") {
  for (const auto& s : {right_zero(2), cyclic_group(2), tsupport::meet2(),
                        tsupport::chain3()}) {
    FiniteSemigroup rebuilt = build_theta_product(extract_theta_data(s));
    CHECK(rebuilt.table() == s.table());
  }
}

TEST_CASE("theta condition violations are reported") {
  // Single G2 component; theta_0 is the identity but theta_1 is constant,
  // breaking theta_x = theta_1 on S_alpha.
  ThetaData data{FiniteSemigroup(1, {0}),
                 {cyclic_group(2)},
                 {{0, 1}, {0, 0}},
                 {}};
  try {
    build_theta_product(data);
    FAIL("expected ThetaConditionViolatedError");
  } catch (const ThetaConditionViolatedError& e) {
    CHECK(e.condition == 'c');
  }

  // theta_1 maps S_0 into the wrong component.
  ThetaData off{tsupport::meet2(),
                {trivial_semigroup(), trivial_semigroup()},
                {{0, 0}, {1, 1}},
                {}};
  try {
    build_theta_product(off);
    FAIL("expected ThetaConditionViolatedError");
  } catch (const ThetaConditionViolatedError& e) {
    CHECK(e.condition == 'a');
  }
}
