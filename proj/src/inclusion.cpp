#include "semiforge/inclusion.hpp"

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <limits>

namespace semiforge {

namespace {

enum class Tok { run, number, in, equals, lbrace, rbrace, comma, semi, caret, end };

struct Token {
  Tok kind;
  std::size_t pos;
  std::string text;  // for run
  long long value = 0;  // for number
};

class Lexer {
 public:
  explicit Lexer(std::string_view text) : text_(text) { advance(); }

  const Token& peek() const { return current_; }

  Token take() {
    Token t = current_;
    advance();
    return t;
  }

 private:
  void advance() {
    while (pos_ < text_.size() && (text_[pos_] == ' ' || text_[pos_] == '\t'
                                   || text_[pos_] == '\n' || text_[pos_] == '\r')) {
      ++pos_;
    }
    std::size_t start = pos_;
    if (pos_ >= text_.size()) {
      current_ = {Tok::end, start, "", 0};
      return;
    }
    char c = text_[pos_];
    if (c >= 'a' && c <= 'z') {
      while (pos_ < text_.size() && text_[pos_] >= 'a' && text_[pos_] <= 'z') ++pos_;
      std::string run(text_.substr(start, pos_ - start));
      current_ = {run == "in" ? Tok::in : Tok::run, start, run, 0};
      return;
    }
    if (c >= '0' && c <= '9') {
      long long v = 0;
      while (pos_ < text_.size() && text_[pos_] >= '0' && text_[pos_] <= '9') {
        v = v * 10 + (text_[pos_] - '0');
        if (v > kMaxExponent) throw ParseError(start, "exponent too large");
        ++pos_;
      }
      current_ = {Tok::number, start, "", v};
      return;
    }
    if (text_.compare(pos_, 3, "\xe2\x8a\x86") == 0) {  // ⊆
      pos_ += 3;
      current_ = {Tok::in, start, "", 0};
      return;
    }
    if (text_.compare(pos_, 2, "<=") == 0) {
      pos_ += 2;
      current_ = {Tok::in, start, "", 0};
      return;
    }
    ++pos_;
    switch (c) {
      case '=': current_ = {Tok::equals, start, "", 0}; return;
      case '{': current_ = {Tok::lbrace, start, "", 0}; return;
      case '}': current_ = {Tok::rbrace, start, "", 0}; return;
      case ',': current_ = {Tok::comma, start, "", 0}; return;
      case ';': current_ = {Tok::semi, start, "", 0}; return;
      case '^': current_ = {Tok::caret, start, "", 0}; return;
      default: throw ParseError(start, std::string("stray token '") + c + "'");
    }
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  Token current_;
};

class Parser {
 public:
  explicit Parser(std::string_view text) : lex_(text) {}

  InclusionClassExpr parse() {
    InclusionClassExpr expr;
    expr.inclusions.push_back(parse_inclusion());
    while (lex_.peek().kind == Tok::semi) {
      lex_.take();
      expr.inclusions.push_back(parse_inclusion());
    }
    if (lex_.peek().kind != Tok::end) {
      throw ParseError(lex_.peek().pos, "expected ';' or end of input");
    }
    std::vector<char> vars;
    for (const auto& inc : expr.inclusions) {
      for (const auto* side : {&inc.lhs, &inc.rhs}) {
        for (const auto& w : *side) {
          for (const auto& f : w.factors) vars.push_back(f.variable);
        }
      }
    }
    std::sort(vars.begin(), vars.end());
    vars.erase(std::unique(vars.begin(), vars.end()), vars.end());
    expr.variables = std::move(vars);
    return expr;
  }

 private:
  Inclusion parse_inclusion() {
    std::vector<Word> lhs = parse_wordset();
    Tok op = lex_.peek().kind;
    if (op != Tok::in && op != Tok::equals) {
      throw ParseError(lex_.peek().pos, "expected 'in', '⊆', '<=' or '='");
    }
    lex_.take();
    std::vector<Word> rhs = parse_wordset();
    normalize(lhs);
    normalize(rhs);
    return Inclusion{std::move(lhs), std::move(rhs)};
  }

  std::vector<Word> parse_wordset() {
    std::vector<Word> words;
    if (lex_.peek().kind == Tok::lbrace) {
      std::size_t open = lex_.take().pos;
      if (lex_.peek().kind == Tok::rbrace) {
        throw ParseError(open, "empty word set");
      }
      words.push_back(parse_word());
      while (lex_.peek().kind == Tok::comma) {
        lex_.take();
        words.push_back(parse_word());
      }
      if (lex_.peek().kind != Tok::rbrace) {
        throw ParseError(lex_.peek().pos, "expected '}' or ','");
      }
      lex_.take();
    } else {
      words.push_back(parse_word());
    }
    return words;
  }

  Word parse_word() {
    Word word;
    if (lex_.peek().kind != Tok::run) {
      throw ParseError(lex_.peek().pos, "expected a word");
    }
    while (true) {
      if (lex_.peek().kind == Tok::run) {
        Token t = lex_.take();
        for (char c : t.text) word.factors.push_back({c, 1});
      } else if (lex_.peek().kind == Tok::caret) {
        Token caret = lex_.take();
        if (word.factors.empty() || word.factors.back().exponent != 1) {
          throw ParseError(caret.pos, "unexpected '^'");
        }
        if (lex_.peek().kind != Tok::number) {
          throw ParseError(lex_.peek().pos, "expected an exponent");
        }
        Token num = lex_.take();
        if (num.value < 1) throw ParseError(num.pos, "bad exponent");
        word.factors.back().exponent = static_cast<int>(num.value);
      } else {
        break;
      }
    }
    return word;
  }

  static void normalize(std::vector<Word>& words) {
    std::sort(words.begin(), words.end());
    words.erase(std::unique(words.begin(), words.end()), words.end());
  }

  Lexer lex_;
};

std::string format_wordset(const std::vector<Word>& words) {
  if (words.size() == 1) return format_word(words[0]);
  std::string out = "{";
  for (std::size_t i = 0; i < words.size(); ++i) {
    if (i) out += ", ";
    out += format_word(words[i]);
  }
  out += "}";
  return out;
}

// --- membership evaluation ---------------------------------------------

struct CompiledFactor {
  int var;        // index into the sorted variable list
  int power_row;  // index into power tables, or -1 when exponent is 1
};

struct CompiledWord {
  std::vector<CompiledFactor> factors;
};

struct CompiledExpr {
  int var_count = 0;
  std::vector<std::vector<CompiledWord>> lhs;  // per inclusion
  std::vector<std::vector<CompiledWord>> rhs;
  std::vector<std::vector<int>> powers;  // powers[row][element]
};

CompiledExpr compile(const FiniteSemigroup& s, const InclusionClassExpr& expr) {
  CompiledExpr ce;
  ce.var_count = static_cast<int>(expr.variables.size());
  std::vector<int> exponents;  // distinct exponents >= 2
  auto var_index = [&](char v) {
    auto it = std::lower_bound(expr.variables.begin(), expr.variables.end(), v);
    return static_cast<int>(it - expr.variables.begin());
  };
  auto compile_word = [&](const Word& w) {
    CompiledWord cw;
    for (const auto& f : w.factors) {
      int row = -1;
      if (f.exponent >= 2) {
        auto it = std::find(exponents.begin(), exponents.end(), f.exponent);
        if (it == exponents.end()) {
          exponents.push_back(f.exponent);
          row = static_cast<int>(exponents.size()) - 1;
        } else {
          row = static_cast<int>(it - exponents.begin());
        }
      }
      cw.factors.push_back({var_index(f.variable), row});
    }
    return cw;
  };
  for (const auto& inc : expr.inclusions) {
    auto& l = ce.lhs.emplace_back();
    auto& r = ce.rhs.emplace_back();
    for (const auto& w : inc.lhs) l.push_back(compile_word(w));
    for (const auto& w : inc.rhs) r.push_back(compile_word(w));
  }
  for (int k : exponents) {
    auto& row = ce.powers.emplace_back(s.order());
    for (int e = 0; e < s.order(); ++e) row[e] = power(s, e, k);
  }
  return ce;
}

int eval_compiled(const FiniteSemigroup& s, const CompiledExpr& ce,
                  const CompiledWord& w, const int* vals) {
  int acc = -1;
  for (const auto& f : w.factors) {
    int base = vals[f.var];
    int fv = f.power_row < 0 ? base : ce.powers[f.power_row][base];
    acc = acc < 0 ? fv : s.product(acc, fv);
  }
  return acc;
}

// First violated (inclusion, lhs word) under the assignment, if any.
std::optional<std::pair<int, int>> check_assignment(const FiniteSemigroup& s,
                                                    const CompiledExpr& ce,
                                                    const int* vals) {
  for (std::size_t i = 0; i < ce.lhs.size(); ++i) {
    const auto& rhs = ce.rhs[i];
    for (std::size_t wi = 0; wi < ce.lhs[i].size(); ++wi) {
      int v = eval_compiled(s, ce, ce.lhs[i][wi], vals);
      bool hit = false;
      for (std::size_t j = 0; j < rhs.size() && !hit; ++j) {
        hit = eval_compiled(s, ce, rhs[j], vals) == v;
      }
      if (!hit) return std::make_pair(static_cast<int>(i), static_cast<int>(wi));
    }
  }
  return std::nullopt;
}

long long assignment_count(int n, int vars) {
  long long total = 1;
  for (int i = 0; i < vars; ++i) {
    if (total > std::numeric_limits<long long>::max() / n) {
      throw OrderTooLargeError("assignment space too large");
    }
    total *= n;
  }
  return total;
}

void decode_assignment(long long index, int n, int vars, int* vals) {
  for (int j = vars - 1; j >= 0; --j) {
    vals[j] = static_cast<int>(index % n);
    index /= n;
  }
}

MembershipReport report_at(const FiniteSemigroup& s,
                           const InclusionClassExpr& expr,
                           const CompiledExpr& ce, long long index) {
  int vals[32];
  decode_assignment(index, s.order(), ce.var_count, vals);
  auto hit = check_assignment(s, ce, vals);
  MembershipWitness w;
  w.inclusion_index = hit->first;
  for (int j = 0; j < ce.var_count; ++j) {
    w.assignment.emplace_back(expr.variables[j], vals[j]);
  }
  w.offending = expr.inclusions[hit->first].lhs[hit->second];
  return {false, std::move(w)};
}

}  // namespace

InclusionClassExpr parse_inclusion_class(std::string_view text) {
  return Parser(text).parse();
}

std::string format_word(const Word& word) {
  bool spaced = std::any_of(word.factors.begin(), word.factors.end(),
                            [](const WordFactor& f) { return f.exponent > 1; });
  std::string out;
  for (std::size_t i = 0; i < word.factors.size(); ++i) {
    if (i && spaced) out += ' ';
    out += word.factors[i].variable;
    if (word.factors[i].exponent > 1) {
      out += '^';
      out += std::to_string(word.factors[i].exponent);
    }
  }
  return out;
}

std::string format_inclusion_class(const InclusionClassExpr& expr) {
  std::string out;
  for (std::size_t i = 0; i < expr.inclusions.size(); ++i) {
    if (i) out += "; ";
    const Inclusion& inc = expr.inclusions[i];
    if (inc.lhs.size() == 1 && inc.rhs.size() == 1) {
      out += format_word(inc.lhs[0]) + " = " + format_word(inc.rhs[0]);
    } else {
      out += format_wordset(inc.lhs) + " in " + format_wordset(inc.rhs);
    }
  }
  return out;
}

int eval_word(const FiniteSemigroup& s, const Word& word,
              const std::map<char, int>& assignment) {
  int acc = -1;
  for (const auto& f : word.factors) {
    auto it = assignment.find(f.variable);
    if (it == assignment.end()) throw UnboundVariableError(f.variable);
    int fv = power(s, it->second, f.exponent);
    acc = acc < 0 ? fv : s.product(acc, fv);
  }
  return acc;
}

MembershipReport member_of_class_serial(const FiniteSemigroup& s,
                                        const InclusionClassExpr& expr) {
  CompiledExpr ce = compile(s, expr);
  long long total = assignment_count(s.order(), ce.var_count);
  int vals[32];
  for (long long index = 0; index < total; ++index) {
    decode_assignment(index, s.order(), ce.var_count, vals);
    if (check_assignment(s, ce, vals)) return report_at(s, expr, ce, index);
  }
  return {true, std::nullopt};
}

MembershipReport member_of_class(const FiniteSemigroup& s,
                                 const InclusionClassExpr& expr) {
  CompiledExpr ce = compile(s, expr);
  long long total = assignment_count(s.order(), ce.var_count);
  if (total < 4096) {
    return member_of_class_serial(s, expr);
  }
  std::atomic<long long> best(std::numeric_limits<long long>::max());
#pragma omp parallel for schedule(static)
  for (long long index = 0; index < total; ++index) {
    if (index >= best.load(std::memory_order_relaxed)) continue;
    int vals[32];
    decode_assignment(index, s.order(), ce.var_count, vals);
    if (check_assignment(s, ce, vals)) {
      long long seen = best.load(std::memory_order_relaxed);
      while (index < seen
             && !best.compare_exchange_weak(seen, index,
                                            std::memory_order_relaxed)) {
      }
    }
  }
  long long least = best.load();
  if (least == std::numeric_limits<long long>::max()) {
    return {true, std::nullopt};
  }
  return report_at(s, expr, ce, least);
}

const std::map<std::string, InclusionClassExpr>& predefined_classes() {
  static const std::map<std::string, InclusionClassExpr> classes = {
      {"THM1", parse_inclusion_class("xyx in {x, y}")},
      {"THM2", parse_inclusion_class("xyx in {y, yx}")},
      {"COR3", parse_inclusion_class("xyx in {y, yx}; x = x^3")},
      {"THM4", parse_inclusion_class("xyx in {yx, y^2 x^2 y}; x = x^3")},
      {"THM5", parse_inclusion_class("xyx in {x y^2 x, y^2 x^2 y}; x = x^3")},
  };
  return classes;
}

}  // namespace semiforge
