#include "doctest.h"

#include "json.hpp"
#include "semiforge/reports.hpp"
#include "semiforge/table_io.hpp"
#include "test_support.hpp"

using namespace semiforge;

TEST_CASE("text table parsing") {
  FiniteSemigroup s = parse_table("# a right-zero with zero\n3\n0 0 0\n0 1 2\n0 1 2\n");
  CHECK(s.table() == tsupport::chain3().table());
  CHECK(parse_table(format_table_text(s)).table() == s.table());

  CHECK_THROWS_AS(parse_table("2\n0 1\n0\n"), ParseError);
  CHECK_THROWS_AS(parse_table(""), ParseError);
  CHECK_THROWS_AS(parse_table("2\n0 2\n0 0\n"), BadEntryError);
  CHECK_THROWS_AS(parse_table("2\n0 1\n0 0\n"), NotAssociativeError);
  CHECK_THROWS_AS(parse_table("x\n"), ParseError);
}

TEST_CASE("json table parsing") {
  FiniteSemigroup s = parse_table(R"({"order": 2, "table": [[0, 1], [1, 0]]})");
  CHECK(s.table() == cyclic_group(2).table());
  CHECK(parse_table(format_table_json(s)).table() == s.table());
  CHECK_THROWS_AS(parse_table(R"({"order": 3, "table": [[0]]})"), ParseError);
  CHECK_THROWS_AS(parse_table("{nope"), ParseError);
}

TEST_CASE("rees spec file") {
  ReesSpec spec = parse_rees_spec("# trivial group\n1\n0\n2 2\n0 0\n0 0\n");
  CHECK(build_rees(spec).table() == rectangular_band(2, 2).table());
  CHECK_THROWS_AS(parse_rees_spec("1\n0\n2 2\n0 0\n"), ParseError);
}

TEST_CASE("strong and theta spec json") {
  StrongSemilatticeData strong = parse_strong_data_json(R"({
    "y": [[0, 0], [0, 1]],
    "components": [[[0]], [[0, 1], [1, 0]]],
    "homs": [{"from": 1, "to": 0, "map": [0, 0]}]
  })");
  FiniteSemigroup s = build_strong_semilattice(strong);
  CHECK(s.order() == 3);

  ThetaData theta = parse_theta_data_json(R"({
    "y": [[0]],
    "components": [[[0, 1], [1, 0]]],
    "theta": [[0, 1], [0, 1]]
  })");
  CHECK(build_theta_product(theta).table() == cyclic_group(2).table());
}

TEST_CASE("decomposition report renders the same content in both formats") {
  DecompositionReport rep = make_decomposition_report(tsupport::chain3());
  CHECK(rep.kinds == std::vector<std::string>{"RectangularBand", "RightZero"});
  CHECK(rep.chain);
  CHECK(rep.thm1);
  CHECK(rep.thm5);

  nlohmann::json j = nlohmann::json::parse(to_json_string(rep));
  CHECK(j["order"] == rep.order);
  CHECK(j["chain"] == rep.chain);
  CHECK(j["kinds"].size() == rep.kinds.size());
  CHECK(j["theorems"]["t1"] == rep.thm1);
  CHECK(j["theorems"]["t5"] == rep.thm5);

  std::string text = to_text(rep);
  CHECK(text.find("chain: true") != std::string::npos);
  CHECK(text.find("RightZero") != std::string::npos);
  CHECK(text.find("thm1=true") != std::string::npos);
}

TEST_CASE("verification report renders the same content in both formats") {
  VerificationReport rep = verify_theorem(TheoremId::t5, 2);
  nlohmann::json j = nlohmann::json::parse(to_json_string(rep));
  CHECK(j["theorem"] == "t5");
  CHECK(j["max_order"] == 2);
  CHECK(j["scanned"] == rep.total_scanned());
  CHECK(j["mismatches"].empty());
  REQUIRE(j["per_order"].size() == rep.per_order.size());
  for (std::size_t i = 0; i < rep.per_order.size(); ++i) {
    CHECK(j["per_order"][i]["total"] == rep.per_order[i].total);
    CHECK(j["per_order"][i]["in_class"] == rep.per_order[i].in_class);
    CHECK(j["per_order"][i]["structure_pass"] == rep.per_order[i].structure_pass);
  }
  std::string text = to_text(rep);
  CHECK(text.find("theorem: t5") != std::string::npos);
  CHECK(text.find("scanned: " + std::to_string(rep.total_scanned()))
        != std::string::npos);
  CHECK(text.find("mismatches: 0") != std::string::npos);
}
