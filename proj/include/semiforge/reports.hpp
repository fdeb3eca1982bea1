// Report assembly and the text/JSON renderings shared by the CLI.
#pragma once

#include <string>
#include <vector>

#include "semiforge/enumerate.hpp"
#include "semiforge/structure.hpp"

namespace semiforge {

struct DecompositionReport {
  int order = 0;
  std::vector<std::vector<int>> components;
  std::vector<std::string> kinds;
  std::vector<int> y_table;
  int y_order = 0;
  bool chain = false;
  // Per-theorem structural flags.
  bool thm1 = false, thm2 = false, cor3 = false, thm4 = false, thm5 = false;
};

DecompositionReport make_decomposition_report(const FiniteSemigroup& s);

std::string to_text(const DecompositionReport& rep);
std::string to_json_string(const DecompositionReport& rep);

std::string to_text(const VerificationReport& rep);
std::string to_json_string(const VerificationReport& rep);

std::string to_text(const NoteReport& rep);
std::string to_json_string(const NoteReport& rep);

}  // namespace semiforge
