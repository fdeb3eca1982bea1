#include "semiforge/reports.hpp"

#include <sstream>

#include "json.hpp"

namespace semiforge {

namespace {

using nlohmann::json;

json table_to_rows(const std::vector<int>& table, int n) {
  json rows = json::array();
  for (int r = 0; r < n; ++r) {
    json row = json::array();
    for (int c = 0; c < n; ++c) row.push_back(table[r * n + c]);
    rows.push_back(std::move(row));
  }
  return rows;
}

void print_table(std::ostringstream& out, const std::vector<int>& table, int n,
                 const char* indent) {
  for (int r = 0; r < n; ++r) {
    out << indent;
    for (int c = 0; c < n; ++c) {
      if (c) out << ' ';
      out << table[r * n + c];
    }
    out << '\n';
  }
}

int table_order(const std::vector<int>& table) {
  int n = 0;
  while (n * n < static_cast<int>(table.size())) ++n;
  return n;
}

}  // namespace

DecompositionReport make_decomposition_report(const FiniteSemigroup& s) {
  DecompositionReport rep;
  rep.order = s.order();
  SemilatticeDecomposition d = decompose(s);
  rep.components = d.components;
  for (const auto& block : d.components) {
    rep.kinds.push_back(to_string(classify_component(s, block)));
  }
  rep.y_table = d.y_table;
  rep.y_order = d.y_order;
  rep.chain = is_chain(d);
  rep.thm1 = check_theorem1_structure(s).ok;
  rep.thm2 = check_theorem2_structure(s).ok;
  rep.cor3 = check_corollary3_structure(s).ok;
  rep.thm4 = check_theorem4_structure(s).ok;
  rep.thm5 = check_theorem5_structure(s).ok;
  return rep;
}

std::string to_text(const DecompositionReport& rep) {
  std::ostringstream out;
  out << "order: " << rep.order << '\n';
  out << "components: " << rep.components.size() << '\n';
  for (std::size_t i = 0; i < rep.components.size(); ++i) {
    out << "  " << i << " (" << rep.kinds[i] << "): {";
    for (std::size_t j = 0; j < rep.components[i].size(); ++j) {
      if (j) out << ", ";
      out << rep.components[i][j];
    }
    out << "}\n";
  }
  out << "y_table:\n";
  print_table(out, rep.y_table, rep.y_order, "  ");
  out << "chain: " << (rep.chain ? "true" : "false") << '\n';
  out << "structure: thm1=" << (rep.thm1 ? "true" : "false")
      << " thm2=" << (rep.thm2 ? "true" : "false")
      << " cor3=" << (rep.cor3 ? "true" : "false")
      << " thm4=" << (rep.thm4 ? "true" : "false")
      << " thm5=" << (rep.thm5 ? "true" : "false") << '\n';
  return out.str();
}

std::string to_json_string(const DecompositionReport& rep) {
  json j;
  j["order"] = rep.order;
  j["components"] = rep.components;
  j["kinds"] = rep.kinds;
  j["y_table"] = table_to_rows(rep.y_table, rep.y_order);
  j["chain"] = rep.chain;
  j["theorems"] = {{"t1", rep.thm1},
                   {"t2", rep.thm2},
                   {"c3", rep.cor3},
                   {"t4", rep.thm4},
                   {"t5", rep.thm5}};
  return j.dump(2);
}

std::string to_text(const VerificationReport& rep) {
  std::ostringstream out;
  out << "theorem: " << to_string(rep.theorem) << '\n';
  out << "max_order: " << rep.max_order << '\n';
  out << "g2_reading: "
      << (rep.g2 == G2Reading::order_two ? "order-two" : "boolean-group")
      << '\n';
  for (const auto& tally : rep.per_order) {
    out << "order " << tally.order << ": total=" << tally.total
        << " in_class=" << tally.in_class
        << " structure_pass=" << tally.structure_pass << '\n';
  }
  out << "scanned: " << rep.total_scanned() << '\n';
  out << "mismatches: " << rep.mismatches.size() << '\n';
  for (const auto& m : rep.mismatches) {
    out << "  order " << m.order << ": " << m.failed_side << '\n';
    print_table(out, m.table, table_order(m.table), "    ");
  }
  return out.str();
}

std::string to_json_string(const VerificationReport& rep) {
  json j;
  j["theorem"] = to_string(rep.theorem);
  j["max_order"] = rep.max_order;
  j["g2_reading"] =
      rep.g2 == G2Reading::order_two ? "order-two" : "boolean-group";
  j["per_order"] = json::array();
  for (const auto& tally : rep.per_order) {
    j["per_order"].push_back({{"order", tally.order},
                              {"total", tally.total},
                              {"in_class", tally.in_class},
                              {"structure_pass", tally.structure_pass}});
  }
  j["scanned"] = rep.total_scanned();
  j["mismatches"] = json::array();
  for (const auto& m : rep.mismatches) {
    j["mismatches"].push_back(
        {{"order", m.order},
         {"table", table_to_rows(m.table, table_order(m.table))},
         {"failed_side", m.failed_side}});
  }
  return j.dump(2);
}

std::string to_text(const NoteReport& rep) {
  std::ostringstream out;
  out << "note_after_theorem1 max_order: " << rep.max_order << '\n';
  out << "members_scanned: " << rep.members_scanned << '\n';
  out << "violations: " << rep.violations.size() << '\n';
  for (const auto& v : rep.violations) {
    out << "  order " << v.order << ": " << v.detail << '\n';
    print_table(out, v.table, table_order(v.table), "    ");
  }
  return out.str();
}

std::string to_json_string(const NoteReport& rep) {
  json j;
  j["max_order"] = rep.max_order;
  j["members_scanned"] = rep.members_scanned;
  j["violations"] = json::array();
  for (const auto& v : rep.violations) {
    j["violations"].push_back(
        {{"order", v.order},
         {"table", table_to_rows(v.table, table_order(v.table))},
         {"detail", v.detail}});
  }
  return j.dump(2);
}

}  // namespace semiforge
