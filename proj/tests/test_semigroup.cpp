#include "doctest.h"

#include "semiforge/builders.hpp"
#include "semiforge/semigroup.hpp"
#include "test_support.hpp"

using namespace semiforge;

TEST_CASE("table validation") {
  CHECK_NOTHROW(cyclic_group(2));
  CHECK_THROWS_AS(tsupport::from_rows({{0, 2}, {0, 0}}), BadEntryError);
  try {
    tsupport::from_rows({{0, 1}, {0, 0}});
    FAIL("expected NotAssociativeError");
  } catch (const NotAssociativeError& e) {
    // The reported triple must actually witness the failure.
    std::vector<int> t = {0, 1, 0, 0};
    int ab = t[e.a * 2 + e.b];
    int bc = t[e.b * 2 + e.c];
    CHECK(t[ab * 2 + e.c] != t[e.a * 2 + bc]);
  }
}

TEST_CASE("associativity checks") {
  std::vector<int> lz = {0, 0, 1, 1};
  std::vector<int> rz = {0, 1, 0, 1};
  std::vector<int> bad = {0, 1, 0, 0};
  CHECK(is_associative_naive(2, lz));
  CHECK(is_associative_naive(2, rz));
  CHECK_FALSE(is_associative_naive(2, bad));
  CHECK(is_associative_light(2, lz));
  CHECK(is_associative_light(2, rz));
  CHECK_FALSE(is_associative_light(2, bad));

  std::vector<int> z2 = {0, 1, 1, 0};
  CHECK(is_associative_light(2, z2));
  // Hints never change the verdict, generating or not.
  std::vector<int> gen = {1};
  std::vector<int> nongen = {0};
  CHECK(is_associative_light(2, z2, gen));
  CHECK(is_associative_light(2, z2, nongen));
  CHECK_FALSE(is_associative_light(2, bad, gen));
  CHECK_FALSE(is_associative_light(2, bad, nongen));
}

TEST_CASE("power") {
  FiniteSemigroup z2 = cyclic_group(2);
  CHECK(power(z2, 1, 3) == 1);
  CHECK(power(z2, 1, 2) == 0);
  CHECK(power(z2, 1, 65536) == 0);
  CHECK(power(right_zero(2), 1, 5) == 1);
  FiniteSemigroup z6 = cyclic_group(6);
  CHECK(power(z6, 2, 4) == 2);
}

TEST_CASE("idempotents and union of groups") {
  CHECK(idempotents(rectangular_band(2, 2)).size() == 4);
  CHECK(idempotents(cyclic_group(2)) == std::vector<int>{0});
  CHECK(idempotents(tsupport::null2()) == std::vector<int>{0});

  CHECK(is_union_of_groups(cyclic_group(2)));
  CHECK_FALSE(is_union_of_groups(tsupport::null2()));
  CHECK(is_union_of_groups(rectangular_band(2, 2)));
}

TEST_CASE("local identity and inverse") {
  FiniteSemigroup z2 = cyclic_group(2);
  CHECK(local_identity(z2, 1) == 0);
  CHECK(local_identity(tsupport::meet2(), 1) == 1);
  CHECK_THROWS_AS(local_identity(tsupport::null2(), 1), NotInSubgroupError);

  CHECK(group_inverse(z2, 1) == 1);
  CHECK(group_inverse(tsupport::meet2(), 1) == 1);
  CHECK_THROWS_AS(group_inverse(tsupport::null2(), 1), NotInSubgroupError);

  FiniteSemigroup z6 = cyclic_group(6);
  CHECK(local_identity(z6, 2) == 0);
  CHECK(group_inverse(z6, 2) == 4);

  // Well-definedness over a corpus: x 1_x = 1_x x = x and x x^-1 = 1_x.
  for (const auto& s : {cyclic_group(4), tsupport::left_group4(),
                        tsupport::chain3(), rectangular_band(2, 3)}) {
    for (int x = 0; x < s.order(); ++x) {
      if (!is_union_of_groups(s)) break;
      int e = local_identity(s, x);
      CHECK(s.product(x, e) == x);
      CHECK(s.product(e, x) == x);
      CHECK(s.product(e, e) == e);
      int inv = group_inverse(s, x);
      CHECK(s.product(x, inv) == e);
      CHECK(s.product(inv, x) == e);
    }
  }
}

TEST_CASE("union of groups iff every local identity defined") {
  auto all_defined = [](const FiniteSemigroup& s) {
    for (int x = 0; x < s.order(); ++x) {
      try {
        local_identity(s, x);
      } catch (const NotInSubgroupError&) {
        return false;
      }
    }
    return true;
  };
  for (const auto& t : tsupport::oracle_all_associative(3)) {
    FiniteSemigroup s(3, t);
    CHECK(is_union_of_groups(s) == all_defined(s));
  }
}

TEST_CASE("subset product") {
  std::vector<int> all = {0, 1};
  std::vector<int> one = {1};
  CHECK(subset_product(left_zero(2), all, all) == std::vector<int>{0, 1});
  CHECK(subset_product(tsupport::null2(), all, all) == std::vector<int>{0});
  CHECK(subset_product(cyclic_group(2), one, one) == std::vector<int>{0});
}

TEST_CASE("direct product") {
  FiniteSemigroup lg = tsupport::left_group4();
  CHECK(lg.order() == 4);
  FiniteSemigroup trivial = trivial_semigroup();
  FiniteSemigroup s = tsupport::chain3();
  FiniteSemigroup ts = direct_product(trivial, s);
  CHECK(ts.table() == s.table());
}

TEST_CASE("transpose and is_group") {
  CHECK(transpose(left_zero(2)).table() == right_zero(2).table());
  CHECK(is_group(cyclic_group(2)));
  CHECK(is_group(cyclic_group(4)));
  CHECK(is_group(tsupport::klein4()));
  CHECK_FALSE(is_group(tsupport::meet2()));
  CHECK_FALSE(is_group(right_zero(2)));
}

TEST_CASE("random triples on constructed semigroups associate") {
  std::mt19937 rng(7);
  for (const auto& s : {tsupport::left_group4(), rectangular_band(3, 2),
                        tsupport::zero_simple5(), cyclic_group(5)}) {
    std::uniform_int_distribution<int> dist(0, s.order() - 1);
    for (int i = 0; i < 200; ++i) {
      int a = dist(rng), b = dist(rng), c = dist(rng);
      CHECK(s.product(s.product(a, b), c) == s.product(a, s.product(b, c)));
    }
  }
}
