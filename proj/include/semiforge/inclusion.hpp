// Inclusion-class expressions [W1 in T1; ...; Wk in Tk]: parsing, canonical
// formatting, word evaluation and membership testing over a finite semigroup.
#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "semiforge/semigroup.hpp"

namespace semiforge {

/// One factor of a semigroup word: a lowercase variable with exponent >= 1.
struct WordFactor {
  char variable;
  int exponent;
  auto operator<=>(const WordFactor&) const = default;
};

/// A nonempty product of factors, e.g. x y^2 x.
struct Word {
  std::vector<WordFactor> factors;
  auto operator<=>(const Word&) const = default;
};

/// One inclusion W ⊆ T between nonempty word sets, stored sorted and
/// deduplicated. An identity w = t is the singleton inclusion {w} ⊆ {t}.
struct Inclusion {
  std::vector<Word> lhs;
  std::vector<Word> rhs;
  bool operator==(const Inclusion&) const = default;
};

struct InclusionClassExpr {
  std::vector<Inclusion> inclusions;
  std::vector<char> variables;  // ascending, every letter used by any word
  bool operator==(const InclusionClassExpr&) const = default;
};

struct MembershipWitness {
  int inclusion_index;
  std::vector<std::pair<char, int>> assignment;  // variable -> element
  Word offending;                                // the lhs word that escaped
};

struct MembershipReport {
  bool member;
  std::optional<MembershipWitness> witness;  // present iff member is false
};

/// Maximum exponent accepted by the parser.
inline constexpr int kMaxExponent = 1 << 16;

/// Grammar: expr := inclusion (';' inclusion)*;
///          inclusion := wordset ('in' | '⊆' | '<=') wordset | word '=' word;
///          wordset := word | '{' word (',' word)* '}';
///          word := (letter ('^' int)?)+ with optional whitespace between
/// factors. The standalone letter run "in" is always the operator. Word sets
/// are sorted and deduplicated. Throws ParseError with a byte position.
InclusionClassExpr parse_inclusion_class(std::string_view text);

/// Canonical text: factors are space-separated iff some exponent exceeds 1,
/// singleton sets drop their braces, and an inclusion that is singleton on
/// both sides prints as w = t. parse(format(e)) == e.
std::string format_inclusion_class(const InclusionClassExpr& expr);

std::string format_word(const Word& word);

/// Left-to-right fold of the table over the expanded factors.
/// Throws UnboundVariableError when a variable has no assignment.
int eval_word(const FiniteSemigroup& s, const Word& word,
              const std::map<char, int>& assignment);

/// Member iff every assignment of the expression's variables satisfies every
/// inclusion (each lhs value equals some rhs value). Assignments scan in
/// lexicographic order (variable name, then element index) and the first
/// counterexample is reported. OpenMP over the assignment space; the witness
/// is the least failing assignment regardless of thread interleaving.
MembershipReport member_of_class(const FiniteSemigroup& s,
                                 const InclusionClassExpr& expr);

/// Serial reference for member_of_class; identical verdict and witness.
MembershipReport member_of_class_serial(const FiniteSemigroup& s,
                                        const InclusionClassExpr& expr);

/// The five named classes THM1, THM2, COR3, THM4, THM5.
const std::map<std::string, InclusionClassExpr>& predefined_classes();

}  // namespace semiforge
