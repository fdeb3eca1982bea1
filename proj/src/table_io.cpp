#include "semiforge/table_io.hpp"

#include <sstream>

#include "json.hpp"

namespace semiforge {

namespace {

using nlohmann::json;

// Strips '#' comments and returns the whitespace-separated numeric tokens.
std::vector<long long> numeric_tokens(std::string_view text) {
  std::string cleaned;
  cleaned.reserve(text.size());
  bool comment = false;
  for (char c : text) {
    if (c == '#') comment = true;
    if (c == '\n') comment = false;
    cleaned.push_back(comment ? ' ' : c);
  }
  std::istringstream in(cleaned);
  std::vector<long long> tokens;
  long long v;
  while (in >> v) tokens.push_back(v);
  if (!in.eof()) {
    throw ParseError(static_cast<std::size_t>(in.tellg()),
                     "expected an integer");
  }
  return tokens;
}

std::vector<int> flatten_rows(const json& rows, const char* what) {
  if (!rows.is_array()) throw ParseError(0, std::string(what) + " must be an array");
  std::vector<int> table;
  for (const auto& row : rows) {
    if (!row.is_array()) {
      throw ParseError(0, std::string(what) + " rows must be arrays");
    }
    for (const auto& v : row) table.push_back(v.get<int>());
  }
  return table;
}

FiniteSemigroup semigroup_from_rows(const json& rows, const char* what) {
  std::vector<int> table = flatten_rows(rows, what);
  int n = static_cast<int>(rows.size());
  if (static_cast<int>(table.size()) != n * n) {
    throw ParseError(0, std::string(what) + " must be square");
  }
  return FiniteSemigroup(n, std::move(table));
}

json parse_json(std::string_view text) {
  json j = json::parse(text, nullptr, false);
  if (j.is_discarded()) throw ParseError(0, "malformed JSON");
  return j;
}

}  // namespace

FiniteSemigroup parse_table_text(std::string_view text) {
  std::vector<long long> tokens = numeric_tokens(text);
  if (tokens.empty()) throw ParseError(0, "empty table file");
  long long n = tokens[0];
  if (n < 1 || n > 1024) throw ParseError(0, "bad table order");
  if (static_cast<long long>(tokens.size()) != 1 + n * n) {
    throw ParseError(0, "expected " + std::to_string(n * n)
                     + " entries after the order line");
  }
  std::vector<int> table(tokens.begin() + 1, tokens.end());
  return FiniteSemigroup(static_cast<int>(n), std::move(table));
}

FiniteSemigroup parse_table_json(std::string_view text) {
  json j = parse_json(text);
  if (!j.contains("order") || !j.contains("table")) {
    throw ParseError(0, "expected keys \"order\" and \"table\"");
  }
  FiniteSemigroup s = semigroup_from_rows(j["table"], "table");
  if (j["order"].get<int>() != s.order()) {
    throw ParseError(0, "\"order\" does not match the table");
  }
  return s;
}

FiniteSemigroup parse_table(std::string_view text) {
  for (char c : text) {
    if (c == ' ' || c == '\t' || c == '\n' || c == '\r') continue;
    if (c == '{') return parse_table_json(text);
    break;
  }
  return parse_table_text(text);
}

std::string format_table_text(const FiniteSemigroup& s) {
  std::ostringstream out;
  int n = s.order();
  out << n << '\n';
  for (int r = 0; r < n; ++r) {
    for (int c = 0; c < n; ++c) {
      if (c) out << ' ';
      out << s.product(r, c);
    }
    out << '\n';
  }
  return out.str();
}

std::string format_table_json(const FiniteSemigroup& s) {
  json rows = json::array();
  int n = s.order();
  for (int r = 0; r < n; ++r) {
    json row = json::array();
    for (int c = 0; c < n; ++c) row.push_back(s.product(r, c));
    rows.push_back(std::move(row));
  }
  json j;
  j["order"] = n;
  j["table"] = rows;
  return j.dump(2);
}

ReesSpec parse_rees_spec(std::string_view text) {
  std::vector<long long> tokens = numeric_tokens(text);
  std::size_t at = 0;
  auto next = [&](const char* what) {
    if (at >= tokens.size()) {
      throw ParseError(at, std::string("expected ") + what);
    }
    return tokens[at++];
  };
  long long g = next("group order");
  if (g < 1 || g > 64) throw ParseError(0, "bad group order");
  std::vector<int> gt;
  for (long long i = 0; i < g * g; ++i) gt.push_back(static_cast<int>(next("group entry")));
  FiniteSemigroup group(static_cast<int>(g), std::move(gt));
  int is = static_cast<int>(next("i_size"));
  int ls = static_cast<int>(next("l_size"));
  if (is < 1 || ls < 1) throw ParseError(at, "index sets must be nonempty");
  std::vector<int> sandwich;
  for (int i = 0; i < is * ls; ++i) {
    sandwich.push_back(static_cast<int>(next("sandwich entry")));
  }
  if (at != tokens.size()) throw ParseError(at, "trailing tokens");
  return ReesSpec{std::move(group), is, ls, std::move(sandwich)};
}

StrongSemilatticeData parse_strong_data_json(std::string_view text) {
  json j = parse_json(text);
  StrongSemilatticeData data{semigroup_from_rows(j.at("y"), "y"), {}, {}};
  for (const auto& rows : j.at("components")) {
    data.components.push_back(semigroup_from_rows(rows, "component"));
  }
  if (j.contains("homs")) {
    for (const auto& h : j.at("homs")) {
      int from = h.at("from").get<int>();
      int to = h.at("to").get<int>();
      data.homs[{from, to}] = h.at("map").get<std::vector<int>>();
    }
  }
  return data;
}

ThetaData parse_theta_data_json(std::string_view text) {
  json j = parse_json(text);
  ThetaData data{semigroup_from_rows(j.at("y"), "y"), {}, {}, {}};
  for (const auto& rows : j.at("components")) {
    data.components.push_back(semigroup_from_rows(rows, "component"));
  }
  data.theta = j.at("theta").get<std::vector<std::vector<int>>>();
  if (j.contains("elements")) {
    data.elements = j.at("elements").get<std::vector<std::vector<int>>>();
  }
  return data;
}

}  // namespace semiforge
