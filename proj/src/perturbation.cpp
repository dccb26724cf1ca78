#include "hdet/perturbation.hpp"

#include <cctype>
#include <utility>

#include "hdet/jacobi.hpp"

namespace hdet {

namespace {

using Kind = Expr::Kind;
using Func = Expr::Func;

ExprPtr make(Kind kind, std::vector<ExprPtr> args = {}) {
  auto e = std::make_shared<Expr>();
  e->kind = kind;
  e->args = std::move(args);
  return e;
}

ExprPtr make_number(std::string literal) {
  auto e = std::make_shared<Expr>();
  e->kind = Kind::number;
  e->literal = std::move(literal);
  return e;
}

ExprPtr make_pow(ExprPtr base, mpq_class exponent) {
  auto e = std::make_shared<Expr>();
  e->kind = Kind::pow;
  e->args = {std::move(base)};
  e->exponent = std::move(exponent);
  return e;
}

ExprPtr make_call(Func f, ExprPtr arg) {
  auto e = std::make_shared<Expr>();
  e->kind = Kind::call;
  e->func = f;
  e->args = {std::move(arg)};
  return e;
}

const char* func_name(Func f) {
  switch (f) {
    case Func::exp: return "exp";
    case Func::log: return "log";
    case Func::sqrt: return "sqrt";
    case Func::cosh: return "cosh";
    case Func::sinh: return "sinh";
  }
  return "?";
}

std::optional<Func> func_from_name(std::string_view name) {
  if (name == "exp") return Func::exp;
  if (name == "log") return Func::log;
  if (name == "sqrt") return Func::sqrt;
  if (name == "cosh") return Func::cosh;
  if (name == "sinh") return Func::sinh;
  return std::nullopt;
}

std::string rational_literal(const mpq_class& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

struct Token {
  enum class Type { number, ident, op, end } type;
  std::string text;
  std::size_t offset;
};

class Parser {
 public:
  explicit Parser(std::string_view src) : src_(src) { advance(); }

  ExprPtr parse() {
    ExprPtr e = expr();
    if (tok_.type != Token::Type::end) {
      throw ParseError(ParseError::Kind::syntax, tok_.offset, "unexpected '" + tok_.text + "'",
                       "operator or end of input");
    }
    return e;
  }

 private:
  void advance() {
    while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
    const std::size_t start = pos_;
    if (pos_ >= src_.size()) {
      tok_ = {Token::Type::end, "end of input", start};
      return;
    }
    const char c = src_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
      std::size_t p = pos_;
      while (p < src_.size() && std::isdigit(static_cast<unsigned char>(src_[p]))) ++p;
      if (p < src_.size() && src_[p] == '.') {
        ++p;
        while (p < src_.size() && std::isdigit(static_cast<unsigned char>(src_[p]))) ++p;
      }
      if (p < src_.size() && (src_[p] == 'e' || src_[p] == 'E')) {
        std::size_t q = p + 1;
        if (q < src_.size() && (src_[q] == '+' || src_[q] == '-')) ++q;
        if (q < src_.size() && std::isdigit(static_cast<unsigned char>(src_[q]))) {
          while (q < src_.size() && std::isdigit(static_cast<unsigned char>(src_[q]))) ++q;
          p = q;
        }
      }
      std::string text(src_.substr(pos_, p - pos_));
      if (text == ".") throw ParseError(ParseError::Kind::syntax, start, "lone '.'", "number");
      pos_ = p;
      tok_ = {Token::Type::number, std::move(text), start};
      return;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t p = pos_;
      while (p < src_.size() && (std::isalnum(static_cast<unsigned char>(src_[p])) || src_[p] == '_')) ++p;
      tok_ = {Token::Type::ident, std::string(src_.substr(pos_, p - pos_)), start};
      pos_ = p;
      return;
    }
    if (std::string_view("+-*/^(),").find(c) != std::string_view::npos) {
      tok_ = {Token::Type::op, std::string(1, c), start};
      ++pos_;
      return;
    }
    throw ParseError(ParseError::Kind::syntax, start, std::string("unexpected character '") + c + "'");
  }

  bool is_op(char c) const { return tok_.type == Token::Type::op && tok_.text[0] == c; }

  void expect(char c) {
    if (!is_op(c)) {
      throw ParseError(ParseError::Kind::syntax, tok_.offset, "unexpected " + describe(tok_),
                       std::string("\"") + c + "\"");
    }
    advance();
  }

  static std::string describe(const Token& t) {
    return t.type == Token::Type::end ? std::string("end of input") : "'" + t.text + "'";
  }

  ExprPtr expr() {
    ExprPtr lhs = term();
    while (is_op('+') || is_op('-')) {
      Kind k = is_op('+') ? Kind::add : Kind::sub;
      advance();
      lhs = make(k, {lhs, term()});
    }
    return lhs;
  }

  ExprPtr term() {
    ExprPtr lhs = unary();
    while (is_op('*') || is_op('/')) {
      Kind k = is_op('*') ? Kind::mul : Kind::div;
      advance();
      lhs = make(k, {lhs, unary()});
    }
    return lhs;
  }

  ExprPtr unary() {
    if (is_op('-')) {
      advance();
      return make(Kind::neg, {unary()});
    }
    if (is_op('+')) {
      advance();
      return unary();
    }
    return power();
  }

  ExprPtr power() {
    ExprPtr base = primary();
    if (!is_op('^')) return base;
    const std::size_t at = tok_.offset;
    advance();
    const std::size_t exp_offset = tok_.offset;
    ExprPtr exponent = unary();
    auto value = fold_rational(*exponent);
    if (!value) {
      throw ParseError(ParseError::Kind::syntax, exp_offset,
                       "exponent of '^' at offset " + std::to_string(at) + " is not a rational constant",
                       "rational constant exponent");
    }
    return make_pow(std::move(base), std::move(*value));
  }

  ExprPtr primary() {
    const Token t = tok_;
    switch (t.type) {
      case Token::Type::number: {
        advance();
        return make_number(t.text);
      }
      case Token::Type::ident: {
        advance();
        if (t.text == "x") return make(Kind::variable);
        if (t.text == "pi") return make(Kind::pi);
        if (t.text == "e") return make(Kind::euler);
        auto f = func_from_name(t.text);
        if (!f) {
          throw ParseError(ParseError::Kind::unknown_identifier, t.offset, "'" + t.text + "'",
                           "x, pi, e, exp, log, sqrt, cosh or sinh");
        }
        expect('(');
        std::vector<ExprPtr> args;
        if (!is_op(')')) {
          args.push_back(expr());
          while (is_op(',')) {
            advance();
            args.push_back(expr());
          }
        }
        const std::size_t close = tok_.offset;
        expect(')');
        if (args.size() != 1) {
          throw ParseError(ParseError::Kind::arity, t.offset,
                           t.text + " takes 1 argument, got " + std::to_string(args.size()) +
                               " (closing parenthesis at offset " + std::to_string(close) + ")");
        }
        return make_call(*f, std::move(args.front()));
      }
      case Token::Type::op: {
        if (t.text == "(") {
          advance();
          ExprPtr inner = expr();
          expect(')');
          return inner;
        }
        break;
      }
      case Token::Type::end:
        break;
    }
    throw ParseError(ParseError::Kind::syntax, t.offset, "unexpected " + describe(t),
                     "number, x, function or \"(\"");
  }

  // Value of a constant subtree built from numbers, + - * / and integer ^.
  static std::optional<mpq_class> fold_rational(const Expr& e) {
    switch (e.kind) {
      case Kind::number:
        return parse_rational(e.literal);
      case Kind::neg: {
        auto v = fold_rational(*e.args[0]);
        if (!v) return std::nullopt;
        return mpq_class(-*v);
      }
      case Kind::add:
      case Kind::sub:
      case Kind::mul:
      case Kind::div: {
        auto a = fold_rational(*e.args[0]);
        auto b = fold_rational(*e.args[1]);
        if (!a || !b) return std::nullopt;
        mpq_class r;
        if (e.kind == Kind::add) r = *a + *b;
        if (e.kind == Kind::sub) r = *a - *b;
        if (e.kind == Kind::mul) r = *a * *b;
        if (e.kind == Kind::div) {
          if (*b == 0) return std::nullopt;
          r = *a / *b;
        }
        r.canonicalize();
        return r;
      }
      case Kind::pow: {
        auto base = fold_rational(*e.args[0]);
        if (!base || e.exponent.get_den() != 1 || !e.exponent.get_num().fits_slong_p()) return std::nullopt;
        long k = e.exponent.get_num().get_si();
        if (*base == 0 && k < 0) return std::nullopt;
        mpz_class num, den;
        const unsigned long ak = static_cast<unsigned long>(k < 0 ? -k : k);
        mpz_pow_ui(num.get_mpz_t(), base->get_num_mpz_t(), ak);
        mpz_pow_ui(den.get_mpz_t(), base->get_den_mpz_t(), ak);
        mpq_class r = k < 0 ? mpq_class(den, num) : mpq_class(num, den);
        r.canonicalize();
        return r;
      }
      default:
        return std::nullopt;
    }
  }

  std::string_view src_;
  std::size_t pos_ = 0;
  Token tok_{Token::Type::end, "", 0};
};

BigReal evaluate(const Expr& e, const BigReal& x, Precision p) {
  switch (e.kind) {
    case Kind::number: return BigReal::parse(e.literal, p);
    case Kind::variable: return BigReal::rounded(x, p);
    case Kind::pi: return BigReal::pi(p);
    case Kind::euler: return exp(BigReal(1L, p));
    case Kind::neg: return -evaluate(*e.args[0], x, p);
    case Kind::add: return evaluate(*e.args[0], x, p) + evaluate(*e.args[1], x, p);
    case Kind::sub: return evaluate(*e.args[0], x, p) - evaluate(*e.args[1], x, p);
    case Kind::mul: return evaluate(*e.args[0], x, p) * evaluate(*e.args[1], x, p);
    case Kind::div: return evaluate(*e.args[0], x, p) / evaluate(*e.args[1], x, p);
    case Kind::pow: {
      BigReal base = evaluate(*e.args[0], x, p);
      if (e.exponent.get_den() == 1 && e.exponent.get_num().fits_slong_p()) {
        return pow(base, e.exponent.get_num().get_si());
      }
      return pow(base, BigReal(e.exponent, p));
    }
    case Kind::call: {
      BigReal a = evaluate(*e.args[0], x, p);
      switch (e.func) {
        case Func::exp: return exp(a);
        case Func::log: return log(a);
        case Func::sqrt: return sqrt(a);
        case Func::cosh: return cosh(a);
        case Func::sinh: return sinh(a);
      }
    }
  }
  throw DomainError("malformed expression");
}

std::optional<exact::Polynomial> to_polynomial(const Expr& e) {
  using exact::Polynomial;
  const auto add = [](Polynomial a, const Polynomial& b, int sign) {
    if (a.size() < b.size()) a.resize(b.size(), mpq_class(0));
    for (std::size_t i = 0; i < b.size(); ++i) a[i] += sign * b[i];
    return a;
  };
  switch (e.kind) {
    case Kind::number: return Polynomial{parse_rational(e.literal)};
    case Kind::variable: return Polynomial{mpq_class(0), mpq_class(1)};
    case Kind::neg: {
      auto a = to_polynomial(*e.args[0]);
      if (!a) return std::nullopt;
      for (auto& c : *a) c = -c;
      return a;
    }
    case Kind::add:
    case Kind::sub: {
      auto a = to_polynomial(*e.args[0]);
      auto b = to_polynomial(*e.args[1]);
      if (!a || !b) return std::nullopt;
      return add(std::move(*a), *b, e.kind == Kind::add ? 1 : -1);
    }
    case Kind::mul: {
      auto a = to_polynomial(*e.args[0]);
      auto b = to_polynomial(*e.args[1]);
      if (!a || !b) return std::nullopt;
      return exact::multiply(*a, *b);
    }
    case Kind::div: {
      auto a = to_polynomial(*e.args[0]);
      auto b = to_polynomial(*e.args[1]);
      if (!a || !b) return std::nullopt;
      for (std::size_t i = 1; i < b->size(); ++i) {
        if ((*b)[i] != 0) return std::nullopt;
      }
      if (b->empty() || (*b)[0] == 0) return std::nullopt;
      for (auto& c : *a) c /= (*b)[0];
      return a;
    }
    case Kind::pow: {
      if (e.exponent.get_den() != 1 || e.exponent < 0 || e.exponent > 64) return std::nullopt;
      auto base = to_polynomial(*e.args[0]);
      if (!base) return std::nullopt;
      Polynomial r{mpq_class(1)};
      for (long i = 0; i < e.exponent.get_num().get_si(); ++i) r = exact::multiply(r, *base);
      return r;
    }
    default:
      return std::nullopt;
  }
}

PerturbationFn builtin(ExprPtr ast) {
  std::string src = ast->to_infix();
  return PerturbationFn(std::move(src), std::move(ast));
}

ExprPtr rational_node(const mpq_class& q) {
  ExprPtr magnitude = make_number(mpz_class(abs(q.get_num())).get_str());
  if (q.get_den() != 1) magnitude = make(Kind::div, {magnitude, make_number(q.get_den().get_str())});
  return q < 0 ? make(Kind::neg, {magnitude}) : magnitude;
}

}  // namespace

bool operator==(const Expr& a, const Expr& b) {
  if (a.kind != b.kind || a.args.size() != b.args.size()) return false;
  if (a.kind == Kind::number && a.literal != b.literal) return false;
  if (a.kind == Kind::pow && a.exponent != b.exponent) return false;
  if (a.kind == Kind::call && a.func != b.func) return false;
  for (std::size_t i = 0; i < a.args.size(); ++i) {
    if (!(*a.args[i] == *b.args[i])) return false;
  }
  return true;
}

std::string Expr::to_prefix() const {
  switch (kind) {
    case Kind::number: return literal;
    case Kind::variable: return "x";
    case Kind::pi: return "pi";
    case Kind::euler: return "e";
    case Kind::neg: return "neg(" + args[0]->to_prefix() + ")";
    case Kind::add: return "add(" + args[0]->to_prefix() + ", " + args[1]->to_prefix() + ")";
    case Kind::sub: return "sub(" + args[0]->to_prefix() + ", " + args[1]->to_prefix() + ")";
    case Kind::mul: return "mul(" + args[0]->to_prefix() + ", " + args[1]->to_prefix() + ")";
    case Kind::div: return "div(" + args[0]->to_prefix() + ", " + args[1]->to_prefix() + ")";
    case Kind::pow: return "pow(" + args[0]->to_prefix() + ", " + rational_literal(exponent) + ")";
    case Kind::call: return std::string(func_name(func)) + "(" + args[0]->to_prefix() + ")";
  }
  return "?";
}

std::string Expr::to_infix() const {
  switch (kind) {
    case Kind::number: return literal;
    case Kind::variable: return "x";
    case Kind::pi: return "pi";
    case Kind::euler: return "e";
    case Kind::neg: return "(-" + args[0]->to_infix() + ")";
    case Kind::add: return "(" + args[0]->to_infix() + " + " + args[1]->to_infix() + ")";
    case Kind::sub: return "(" + args[0]->to_infix() + " - " + args[1]->to_infix() + ")";
    case Kind::mul: return "(" + args[0]->to_infix() + " * " + args[1]->to_infix() + ")";
    case Kind::div: return "(" + args[0]->to_infix() + " / " + args[1]->to_infix() + ")";
    case Kind::pow: return "(" + args[0]->to_infix() + " ^ (" + rational_literal(exponent) + "))";
    case Kind::call: return std::string(func_name(func)) + "(" + args[0]->to_infix() + ")";
  }
  return "?";
}

PerturbationFn::PerturbationFn(std::string source, ExprPtr ast)
    : source_(std::move(source)), ast_(std::move(ast)) {}

BigReal PerturbationFn::operator()(const BigReal& x, Precision p) const { return evaluate(*ast_, x, p); }

bool PerturbationFn::is_identity() const {
  auto poly = rational_polynomial();
  if (!poly || poly->empty() || (*poly)[0] != 1) return false;
  for (std::size_t i = 1; i < poly->size(); ++i) {
    if ((*poly)[i] != 0) return false;
  }
  return true;
}

std::optional<exact::Polynomial> PerturbationFn::rational_polynomial() const {
  auto poly = to_polynomial(*ast_);
  if (!poly) return std::nullopt;
  while (poly->size() > 1 && poly->back() == 0) poly->pop_back();
  return poly;
}

PerturbationFn PerturbationFn::one() { return builtin(make_number("1")); }

PerturbationFn PerturbationFn::constant(const mpq_class& c) { return builtin(rational_node(c)); }

PerturbationFn PerturbationFn::exp_linear(const mpq_class& t) {
  return builtin(make_call(Func::exp, make(Kind::mul, {rational_node(t), make(Kind::variable)})));
}

PerturbationFn PerturbationFn::exp_t2(const mpq_class& t) {
  ExprPtr t2 = make(Kind::sub, {make(Kind::mul, {make_number("2"), make_pow(make(Kind::variable), 2)}),
                                make_number("1")});
  return builtin(make_call(Func::exp, make(Kind::mul, {rational_node(t), t2})));
}

PerturbationFn PerturbationFn::one_plus_cx2(const mpq_class& c) {
  return builtin(make(Kind::add, {make_number("1"),
                                  make(Kind::mul, {rational_node(c), make_pow(make(Kind::variable), 2)})}));
}

PerturbationFn parse_h(std::string_view source) {
  return PerturbationFn(std::string(source), Parser(source).parse());
}

PerturbationFn validate_positive(const PerturbationFn& h, unsigned samples, Precision p) {
  if (samples == 0) throw DomainError("validate_positive: samples must be positive");
  std::vector<BigReal> points;
  points.reserve(samples + 2);
  points.emplace_back(-1L, p);
  const BigReal pi = BigReal::pi(p);
  for (unsigned j = 0; j < samples; ++j) {
    points.push_back(cos(pi * static_cast<long>(2 * j + 1) / static_cast<long>(2 * samples)));
  }
  points.emplace_back(1L, p);

  std::optional<BigReal> min_value;
  const BigReal* argmin = nullptr;
  for (const BigReal& x : points) {
    BigReal v(p);
    try {
      v = h(x, p);
    } catch (const DomainError& err) {
      throw PositivityError(std::string("evaluation failed: ") + err.what(), x.to_string(20));
    }
    if (v.sign() <= 0) throw PositivityError("h is not strictly positive: h = " + v.to_string(20), x.to_string(20));
    if (!min_value || v < *min_value) {
      min_value = v;
      argmin = &x;
    }
  }
  PerturbationFn out = h;
  out.certificate_ = PositivityCertificate{min_value->to_string(30), argmin->to_string(30),
                                           static_cast<unsigned>(points.size())};
  return out;
}

}  // namespace hdet
