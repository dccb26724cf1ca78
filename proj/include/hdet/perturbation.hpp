#pragma once

// User-supplied perturbation h(x) on [-1,1].
//
// Grammar (whitespace is ignored):
//   expr    := term (('+' | '-') term)*
//   term    := unary (('*' | '/') unary)*
//   unary   := ('-' | '+') unary | power
//   power   := primary ('^' unary)?          right-associative
//   primary := number | 'x' | 'pi' | 'e' | func '(' expr ')' | '(' expr ')'
//   func    := exp | log | sqrt | cosh | sinh
//   number  := digits ['.' digits] [('e'|'E') ['+'|'-'] digits]
//
// Precedence is ^ > unary minus > * / > + -, so -x^2 is -(x^2). The exponent
// of ^ must be a rational constant (built from numbers with + - * / and
// integer ^); it is folded at parse time. Numeric literals are kept as text
// and rounded only at evaluation, so "0.999" means exactly 999/1000.

#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

#include "hdet/bigreal.hpp"
#include "hdet/rational.hpp"

namespace hdet {

struct Expr {
  enum class Kind { number, variable, pi, euler, neg, add, sub, mul, div, pow, call };
  enum class Func { exp, log, sqrt, cosh, sinh };

  Kind kind;
  std::string literal;       // number
  mpq_class exponent;        // pow
  Func func = Func::exp;     // call
  std::vector<std::shared_ptr<const Expr>> args;

  /// Prefix form used in tests and diagnostics, e.g. "exp(mul(0.5, x))".
  std::string to_prefix() const;
  /// Infix form that re-parses to a structurally identical tree.
  std::string to_infix() const;

  friend bool operator==(const Expr& a, const Expr& b);
};

using ExprPtr = std::shared_ptr<const Expr>;

/// Minimum of h over the validation sample and where it was attained. The
/// check is sampling-based, not a proof of positivity.
struct PositivityCertificate {
  std::string min_value;  // decimal string
  std::string argmin;     // decimal string
  unsigned sample_count = 0;
};

class PerturbationFn {
 public:
  PerturbationFn(std::string source, ExprPtr ast);

  const std::string& source() const noexcept { return source_; }
  const Expr& ast() const noexcept { return *ast_; }
  const std::optional<PositivityCertificate>& certificate() const noexcept { return certificate_; }
  bool validated() const noexcept { return certificate_.has_value(); }

  /// h(x); throws DomainError on e.g. log of a nonpositive subexpression.
  BigReal operator()(const BigReal& x, Precision p) const;
  BigReal log_value(const BigReal& x, Precision p) const { return log((*this)(x, p)); }

  /// True when h is identically 1 (the unperturbed case).
  bool is_identity() const;

  /// Expansion into a rational-coefficient polynomial, when h is one.
  std::optional<exact::Polynomial> rational_polynomial() const;

  // Built-in families, constructed without the parser.
  static PerturbationFn one();
  static PerturbationFn constant(const mpq_class& c);
  /// exp(t x)
  static PerturbationFn exp_linear(const mpq_class& t);
  /// exp(t T_2(x)) = exp(t (2x^2 - 1))
  static PerturbationFn exp_t2(const mpq_class& t);
  /// 1 + c x^2
  static PerturbationFn one_plus_cx2(const mpq_class& c);

 private:
  friend PerturbationFn validate_positive(const PerturbationFn&, unsigned, Precision);

  std::string source_;
  ExprPtr ast_;
  std::optional<PositivityCertificate> certificate_;
};

/// Parses h. Throws ParseError with a byte offset.
PerturbationFn parse_h(std::string_view source);

inline constexpr unsigned kDefaultPositivitySamples = 257;

/// Evaluates h at `samples` Chebyshev points plus x = -1 and x = 1 and
/// returns a copy carrying the certificate. Throws PositivityError when the
/// minimum is <= 0 or any evaluation fails.
PerturbationFn validate_positive(const PerturbationFn& h, unsigned samples, Precision p);

}  // namespace hdet
