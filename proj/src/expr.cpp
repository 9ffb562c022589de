#include "sio/expr.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <sstream>

#include "sio/errors.hpp"

namespace sio {

using namespace expr_node;

Expr Expr::S() { return Expr(std::make_shared<Node>(GenS{})); }
Expr Expr::scalar(Complex c) { return Expr(std::make_shared<Node>(GenScalar{c})); }
Expr Expr::compact() { return Expr(std::make_shared<Node>(GenCompact{})); }
Expr Expr::mul(PCSymbol sym, std::string name) {
  return Expr(std::make_shared<Node>(GenMul{std::move(sym), std::move(name)}));
}
Expr Expr::scale(Complex c, Expr e) {
  return Expr(std::make_shared<Node>(Scale{c, {std::move(e)}}));
}
Expr Expr::sum(std::vector<Expr> terms) {
  if (terms.size() == 1) return terms[0];
  return Expr(std::make_shared<Node>(Sum{std::move(terms)}));
}
Expr Expr::product(std::vector<Expr> factors) {
  if (factors.size() == 1) return factors[0];
  return Expr(std::make_shared<Node>(Product{std::move(factors)}));
}

namespace {

void collect_sizes(const Expr& e, std::vector<int>& out) {
  std::visit(
      [&](const auto& n) {
        using T = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<T, GenMul>)
          out.push_back(n.sym.size());
        else if constexpr (std::is_same_v<T, Sum>)
          for (const auto& t : n.terms) collect_sizes(t, out);
        else if constexpr (std::is_same_v<T, Product>)
          for (const auto& f : n.factors) collect_sizes(f, out);
        else if constexpr (std::is_same_v<T, Scale>)
          collect_sizes(n.child[0], out);
      },
      e.node());
}

void collect_jumps(const Expr& e, std::vector<double>& out) {
  std::visit(
      [&](const auto& n) {
        using T = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<T, GenMul>) {
          for (double u : n.sym.jump_params()) out.push_back(u);
        } else if constexpr (std::is_same_v<T, Sum>) {
          for (const auto& t : n.terms) collect_jumps(t, out);
        } else if constexpr (std::is_same_v<T, Product>) {
          for (const auto& f : n.factors) collect_jumps(f, out);
        } else if constexpr (std::is_same_v<T, Scale>) {
          collect_jumps(n.child[0], out);
        }
      },
      e.node());
}

}  // namespace

int Expr::size() const {
  std::vector<int> sizes;
  collect_sizes(*this, sizes);
  if (sizes.empty()) return 1;
  for (int s : sizes)
    if (s != sizes[0])
      throw Error(Error::Code::invalid_argument, "expression: mixed symbol sizes");
  return sizes[0];
}

std::vector<double> Expr::jump_point_set() const {
  std::vector<double> out;
  collect_jumps(*this, out);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end(),
                        [](double a, double b) { return std::abs(a - b) < 1e-9; }),
            out.end());
  return out;
}

bool equals(const Expr& a, const Expr& b) {
  if (a.node().index() != b.node().index()) return false;
  return std::visit(
      [&](const auto& na) -> bool {
        using T = std::decay_t<decltype(na)>;
        const auto& nb = std::get<T>(b.node());
        if constexpr (std::is_same_v<T, GenS> || std::is_same_v<T, GenCompact>) {
          return true;
        } else if constexpr (std::is_same_v<T, GenScalar>) {
          return na.c == nb.c;
        } else if constexpr (std::is_same_v<T, GenMul>) {
          if (na.name != nb.name || na.sym.size() != nb.sym.size()) return false;
          if (na.sym.jumps().size() != nb.sym.jumps().size()) return false;
          for (size_t i = 0; i < na.sym.jumps().size(); ++i) {
            const auto& ja = na.sym.jumps()[i];
            const auto& jb = nb.sym.jumps()[i];
            if (std::abs(ja.u - jb.u) > 1e-12 || max_abs_diff(ja.left, jb.left) > 0.0 ||
                max_abs_diff(ja.right, jb.right) > 0.0)
              return false;
          }
          return true;
        } else if constexpr (std::is_same_v<T, Sum>) {
          if (na.terms.size() != nb.terms.size()) return false;
          for (size_t i = 0; i < na.terms.size(); ++i)
            if (!equals(na.terms[i], nb.terms[i])) return false;
          return true;
        } else if constexpr (std::is_same_v<T, Product>) {
          if (na.factors.size() != nb.factors.size()) return false;
          for (size_t i = 0; i < na.factors.size(); ++i)
            if (!equals(na.factors[i], nb.factors[i])) return false;
          return true;
        } else if constexpr (std::is_same_v<T, Scale>) {
          return na.c == nb.c && equals(na.child[0], nb.child[0]);
        }
      },
      a.node());
}

// ---------------------------------------------------------------------------
// parser

namespace {

struct Token {
  enum class Kind { number, name, plus, minus, star, lparen, rparen, end } kind;
  double value = 0.0;
  bool imaginary = false;
  std::string text;
  size_t pos = 0;
};

class Lexer {
 public:
  explicit Lexer(const std::string& s) : s_(s) {}

  Token next() {
    while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
    const size_t start = i_;
    if (i_ >= s_.size()) return {Token::Kind::end, 0.0, false, "", start};
    const char c = s_[i_];
    if (c == '+') return ++i_, Token{Token::Kind::plus, 0.0, false, "+", start};
    if (c == '-') return ++i_, Token{Token::Kind::minus, 0.0, false, "-", start};
    if (c == '*') return ++i_, Token{Token::Kind::star, 0.0, false, "*", start};
    if (c == '(') return ++i_, Token{Token::Kind::lparen, 0.0, false, "(", start};
    if (c == ')') return ++i_, Token{Token::Kind::rparen, 0.0, false, ")", start};
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
      size_t end = i_;
      char* out = nullptr;
      const double v = std::strtod(s_.c_str() + i_, &out);
      end = static_cast<size_t>(out - s_.c_str());
      if (end == i_) throw ParseError(start, "bad number");
      i_ = end;
      bool imag = false;
      if (i_ < s_.size() && s_[i_] == 'i' &&
          (i_ + 1 >= s_.size() || !std::isalnum(static_cast<unsigned char>(s_[i_ + 1])))) {
        imag = true;
        ++i_;
      }
      return {Token::Kind::number, v, imag, s_.substr(start, i_ - start), start};
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      size_t end = i_;
      while (end < s_.size() &&
             (std::isalnum(static_cast<unsigned char>(s_[end])) || s_[end] == '_'))
        ++end;
      std::string name = s_.substr(i_, end - i_);
      i_ = end;
      return {Token::Kind::name, 0.0, false, std::move(name), start};
    }
    throw ParseError(start, std::string("unexpected character '") + c + "'");
  }

 private:
  const std::string& s_;
  size_t i_ = 0;
};

struct Parsed {
  Expr expr;
  bool literal;   // pure scalar arithmetic so far
  Complex value;  // meaningful when literal
};

class Parser {
 public:
  Parser(const std::string& text, const std::map<std::string, PCSymbol>& bindings)
      : lex_(text), bindings_(bindings) {
    advance();
  }

  Expr parse() {
    Parsed p = expression();
    if (tok_.kind != Token::Kind::end) throw ParseError(tok_.pos, "trailing input");
    Expr e = p.literal ? Expr::scalar(p.value) : p.expr;
    e.size();  // validates consistent symbol sizes
    return e;
  }

 private:
  void advance() { tok_ = lex_.next(); }

  Parsed expression() {
    std::vector<Parsed> terms;
    std::vector<int> signs;
    terms.push_back(term());
    signs.push_back(+1);
    while (tok_.kind == Token::Kind::plus || tok_.kind == Token::Kind::minus) {
      const int sign = tok_.kind == Token::Kind::plus ? +1 : -1;
      advance();
      terms.push_back(term());
      signs.push_back(sign);
    }
    if (terms.size() == 1 && signs[0] == +1) return terms[0];
    bool all_literal = true;
    for (const auto& t : terms) all_literal = all_literal && t.literal;
    if (all_literal) {
      Complex acc = 0.0;
      for (size_t i = 0; i < terms.size(); ++i) acc += double(signs[i]) * terms[i].value;
      return {Expr::scalar(acc), true, acc};
    }
    std::vector<Expr> parts;
    parts.reserve(terms.size());
    for (size_t i = 0; i < terms.size(); ++i) {
      if (terms[i].literal) {
        parts.push_back(Expr::scalar(double(signs[i]) * terms[i].value));
      } else if (signs[i] < 0) {
        parts.push_back(Expr::scale(-1.0, terms[i].expr));
      } else {
        parts.push_back(terms[i].expr);
      }
    }
    return {Expr::sum(std::move(parts)), false, 0.0};
  }

  Parsed term() {
    std::vector<Parsed> factors;
    factors.push_back(factor());
    while (tok_.kind == Token::Kind::star) {
      advance();
      factors.push_back(factor());
    }
    if (factors.size() == 1) return factors[0];
    Complex coeff = 1.0;
    bool have_coeff = false;
    std::vector<Expr> rest;
    for (auto& f : factors) {
      if (f.literal) {
        coeff *= f.value;
        have_coeff = true;
      } else {
        rest.push_back(std::move(f.expr));
      }
    }
    if (rest.empty()) return {Expr::scalar(coeff), true, coeff};
    Expr body = rest.size() == 1 ? std::move(rest[0]) : Expr::product(std::move(rest));
    if (have_coeff) return {Expr::scale(coeff, std::move(body)), false, 0.0};
    return {std::move(body), false, 0.0};
  }

  Parsed factor() {
    if (tok_.kind == Token::Kind::minus) {
      advance();
      Parsed inner = factor();
      if (inner.literal) return {Expr::scalar(-inner.value), true, -inner.value};
      return {Expr::scale(-1.0, inner.expr), false, 0.0};
    }
    if (tok_.kind == Token::Kind::number) {
      const Complex v = tok_.imaginary ? Complex(0.0, tok_.value) : Complex(tok_.value, 0.0);
      advance();
      return {Expr::scalar(v), true, v};
    }
    if (tok_.kind == Token::Kind::lparen) {
      advance();
      Parsed inner = expression();
      if (tok_.kind != Token::Kind::rparen) throw ParseError(tok_.pos, "expected ')'");
      advance();
      return inner;
    }
    if (tok_.kind == Token::Kind::name) {
      const std::string name = tok_.text;
      const size_t pos = tok_.pos;
      advance();
      if (name == "i") return {Expr::scalar(Complex(0.0, 1.0)), true, Complex(0.0, 1.0)};
      if (name == "S") return {Expr::S(), false, 0.0};
      if (name == "I") return {Expr::I(), false, 0.0};
      if (name == "K") return {Expr::compact(), false, 0.0};
      if (name == "P") return {Expr::P(), false, 0.0};
      if (name == "Q") return {Expr::Q(), false, 0.0};
      auto it = bindings_.find(name);
      if (it == bindings_.end()) throw ParseError(pos, "unbound name '" + name + "'");
      return {Expr::mul(it->second, name), false, 0.0};
    }
    throw ParseError(tok_.pos, "expected a factor");
  }

  Lexer lex_;
  Token tok_;
  const std::map<std::string, PCSymbol>& bindings_;
};

std::string format_complex(Complex c) {
  char buf[80];
  if (c.imag() == 0.0) {
    std::snprintf(buf, sizeof buf, "%.17g", c.real());
    return buf;
  }
  if (c.real() == 0.0) {
    std::snprintf(buf, sizeof buf, "%.17gi", c.imag());
    return buf;
  }
  std::snprintf(buf, sizeof buf, "(%.17g %c %.17gi)", c.real(), c.imag() < 0 ? '-' : '+',
                std::abs(c.imag()));
  return buf;
}

void print(const Expr& e, std::ostringstream& out, bool parenthesize_sum) {
  std::visit(
      [&](const auto& n) {
        using T = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<T, GenS>) {
          out << "S";
        } else if constexpr (std::is_same_v<T, GenScalar>) {
          if (n.c == Complex(1.0)) {
            out << "I";
          } else {
            out << format_complex(n.c);
          }
        } else if constexpr (std::is_same_v<T, GenCompact>) {
          out << "K";
        } else if constexpr (std::is_same_v<T, GenMul>) {
          out << (n.name.empty() ? "a" : n.name);
        } else if constexpr (std::is_same_v<T, Sum>) {
          if (parenthesize_sum) out << "(";
          for (size_t i = 0; i < n.terms.size(); ++i) {
            if (i) out << " + ";
            print(n.terms[i], out, true);
          }
          if (parenthesize_sum) out << ")";
        } else if constexpr (std::is_same_v<T, Product>) {
          for (size_t i = 0; i < n.factors.size(); ++i) {
            if (i) out << "*";
            // nested products and scales inside a product keep their grouping
            const bool wrap = std::holds_alternative<Scale>(n.factors[i].node()) ||
                              std::holds_alternative<Product>(n.factors[i].node());
            if (wrap) out << "(";
            print(n.factors[i], out, true);
            if (wrap) out << ")";
          }
        } else if constexpr (std::is_same_v<T, Scale>) {
          out << format_complex(n.c) << "*";
          // a Scale or Product child must keep its own grouping on reparse
          const bool wrap = std::holds_alternative<Scale>(n.child[0].node()) ||
                            std::holds_alternative<Product>(n.child[0].node());
          if (wrap) out << "(";
          print(n.child[0], out, true);
          if (wrap) out << ")";
        }
      },
      e.node());
}

}  // namespace

Expr parse_expr(const std::string& text, const std::map<std::string, PCSymbol>& bindings) {
  if (text.empty()) throw ParseError(0, "empty expression");
  return Parser(text, bindings).parse();
}

std::string to_string(const Expr& e) {
  std::ostringstream out;
  print(e, out, false);
  return out.str();
}

}  // namespace sio
