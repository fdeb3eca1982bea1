// Command-line front end: membership checking, decomposition, enumeration,
// theorem verification and the builders, over the table file formats.
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "semiforge/builders.hpp"
#include "semiforge/enumerate.hpp"
#include "semiforge/inclusion.hpp"
#include "semiforge/reports.hpp"
#include "semiforge/table_io.hpp"

using namespace semiforge;

namespace {

constexpr int kExitUsage = 2;
constexpr int kExitInvalid = 3;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct InvalidInputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot read file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

FiniteSemigroup load_table(const std::string& path) {
  std::string text = read_file(path);
  try {
    return parse_table(text);
  } catch (const Error& e) {
    throw InvalidInputError(path + ": " + e.what());
  }
}

InclusionClassExpr resolve_class(const std::string& name_or_expr) {
  std::string upper = name_or_expr;
  std::transform(upper.begin(), upper.end(), upper.begin(),
                 [](unsigned char c) { return std::toupper(c); });
  const auto& classes = predefined_classes();
  auto it = classes.find(upper);
  if (it != classes.end()) return it->second;
  try {
    return parse_inclusion_class(name_or_expr);
  } catch (const ParseError& e) {
    throw UsageError(std::string("bad class expression: ") + e.what());
  }
}

int envelope_from_env() {
  const char* value = std::getenv("SEMIFORGE_MAX_ORDER");
  if (!value) return kDefaultEnvelope;
  int parsed = std::atoi(value);
  if (parsed < 1) return kDefaultEnvelope;
  return std::min(parsed, kHardEnvelope);
}

int cmd_check(const std::string& table_path, const std::string& class_name) {
  FiniteSemigroup s = load_table(table_path);
  InclusionClassExpr expr = resolve_class(class_name);
  MembershipReport report = member_of_class(s, expr);
  if (report.member) {
    std::cout << "member of [" << format_inclusion_class(expr) << "]\n";
    return 0;
  }
  const MembershipWitness& w = *report.witness;
  std::cout << "not a member of [" << format_inclusion_class(expr) << "]\n";
  std::cout << "witness: inclusion " << w.inclusion_index << ", assignment";
  for (const auto& [var, elem] : w.assignment) {
    std::cout << ' ' << var << '=' << elem;
  }
  std::cout << ", word " << format_word(w.offending) << '\n';
  return 1;
}

int cmd_decompose(const std::string& table_path, const std::string& format) {
  FiniteSemigroup s = load_table(table_path);
  DecompositionReport rep = make_decomposition_report(s);
  std::cout << (format == "json" ? to_json_string(rep) + "\n" : to_text(rep));
  return 0;
}

int cmd_enumerate(int order, const std::string& mode,
                  const std::string& class_filter) {
  EnumerationRequest req;
  req.order = order;
  req.envelope = envelope_from_env();
  req.mode = mode == "iso-anti" ? EnumMode::up_to_iso_anti : EnumMode::up_to_iso;
  if (!class_filter.empty()) req.filter = resolve_class(class_filter);
  if (order < 1 || order > req.envelope) {
    throw UsageError("--order must be between 1 and "
                     + std::to_string(req.envelope));
  }
  std::vector<FiniteSemigroup> out = enumerate_semigroups(req);
  for (const auto& s : out) {
    std::cout << format_table_text(s) << '\n';
  }
  std::cout << "# count: " << out.size() << '\n';
  return 0;
}

int cmd_verify(const std::string& theorem, int max_order,
               const std::string& format, bool with_note,
               const std::string& g2_name) {
  auto id = theorem_from_name(theorem);
  if (!id) throw UsageError("unknown theorem: " + theorem);
  int envelope = envelope_from_env();
  if (max_order < 1 || max_order > envelope) {
    throw UsageError("--max-order must be between 1 and "
                     + std::to_string(envelope));
  }
  G2Reading g2 = g2_name == "boolean" ? G2Reading::boolean_group
                                      : G2Reading::order_two;
  VerificationReport rep = verify_theorem(*id, max_order, envelope, true, g2);
  std::cout << (format == "json" ? to_json_string(rep) + "\n" : to_text(rep));
  bool clean = rep.passed();
  if (with_note && *id == TheoremId::t1) {
    NoteReport note = verify_note_after_theorem1(max_order, envelope, g2);
    std::cout << (format == "json" ? to_json_string(note) + "\n" : to_text(note));
    clean = clean && note.violations.empty();
  }
  return clean ? 0 : 1;
}

int cmd_build(const std::string& kind, const std::string& spec_arg) {
  try {
    FiniteSemigroup result = [&]() {
      if (kind == "rees") {
        return build_rees(parse_rees_spec(read_file(spec_arg)));
      }
      if (kind == "chain") {
        // Inline spec list, or a path to a file holding one.
        std::string text = spec_arg;
        std::ifstream probe(spec_arg);
        if (probe) text = read_file(spec_arg);
        return build_chain(parse_chain_spec(text));
      }
      if (kind == "strong") {
        return build_strong_semilattice(parse_strong_data_json(read_file(spec_arg)));
      }
      return build_theta_product(parse_theta_data_json(read_file(spec_arg)));
    }();
    std::cout << format_table_text(result);
    return 0;
  } catch (const UsageError&) {
    throw;
  } catch (const Error& e) {
    throw InvalidInputError(e.what());
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"semiforge — finite semigroup structure toolkit"};
  app.require_subcommand(1);
  app.footer("Tables are 0-based Cayley tables; the row index is the left factor.\n"
             "SEMIFORGE_MAX_ORDER overrides the enumeration envelope (default 5).");

  std::string table_path, class_name, format = "text", mode = "iso";
  std::string theorem, build_kind, spec_arg, g2_name = "order-two";
  int order = 0, max_order = 4;
  bool with_note = false;

  CLI::App* check = app.add_subcommand("check", "test membership in an inclusion class");
  check->add_option("table", table_path, "table file (text or JSON)")->required();
  check->add_option("--class", class_name,
                    "THM1|THM2|COR3|THM4|THM5 or an inclusion expression")
      ->required();

  CLI::App* decompose = app.add_subcommand(
      "decompose", "semilattice decomposition, component kinds and theorem flags");
  decompose->add_option("table", table_path, "table file")->required();
  decompose->add_option("--format", format, "text|json")
      ->check(CLI::IsMember({"text", "json"}));

  CLI::App* enumerate = app.add_subcommand(
      "enumerate", "stream canonical tables of all semigroups of one order");
  enumerate->add_option("--order", order, "order to enumerate")->required();
  enumerate->add_option("--mode", mode, "iso|iso-anti")
      ->check(CLI::IsMember({"iso", "iso-anti"}));
  enumerate->add_option("--class", class_name, "keep members of this class only");

  CLI::App* verify = app.add_subcommand(
      "verify", "machine-verify a theorem over the enumerated universe");
  verify->add_option("--theorem", theorem, "t1|t2|c3|t4|t5")->required();
  verify->add_option("--max-order", max_order, "verify orders 1..n (default 4)");
  verify->add_option("--format", format, "text|json")
      ->check(CLI::IsMember({"text", "json"}));
  verify->add_flag("--note", with_note,
                   "with t1, also check the chain-of-rectangular-bands note");
  verify->add_option("--g2", g2_name,
                     "group components accepted by the structural side: "
                     "order-two (literal; refuted by the Klein four-group) "
                     "or boolean (exponent-2 groups; verifies cleanly)")
      ->check(CLI::IsMember({"order-two", "boolean"}));

  CLI::App* build = app.add_subcommand("build", "construct a semigroup from a spec");
  build->add_option("kind", build_kind, "rees|chain|strong|theta")
      ->required()
      ->check(CLI::IsMember({"rees", "chain", "strong", "theta"}));
  build->add_option("spec", spec_arg, "spec file (chain also accepts an inline list)")
      ->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << '\n';
    return kExitUsage;
  }

  try {
    if (check->parsed()) return cmd_check(table_path, class_name);
    if (decompose->parsed()) return cmd_decompose(table_path, format);
    if (enumerate->parsed()) return cmd_enumerate(order, mode, class_name);
    if (verify->parsed()) {
      return cmd_verify(theorem, max_order, format, with_note, g2_name);
    }
    if (build->parsed()) return cmd_build(build_kind, spec_arg);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const InvalidInputError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInvalid;
  } catch (const OrderTooLargeError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInvalid;
  }
  return kExitUsage;
}
