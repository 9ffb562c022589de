// Expression trees over the operator generators: S (Cauchy singular integral
// operator), aI (multiplication by a PC symbol), complex scalars, and a
// compact placeholder K, combined by sums, ordered products, and scalar
// multiples. P and Q are sugar for (I+S)/2 and (I-S)/2 and expand at
// construction.
#pragma once

#include <map>
#include <memory>
#include <string>
#include <variant>
#include <vector>

#include "sio/symbol.hpp"

namespace sio {

class Expr;

namespace expr_node {
struct GenS {};
struct GenScalar {
  Complex c;
};
struct GenCompact {};
struct GenMul {
  PCSymbol sym;
  std::string name;
};
struct Sum {
  std::vector<Expr> terms;
};
struct Product {
  std::vector<Expr> factors;  // ordered
};
struct Scale {
  Complex c;
  std::vector<Expr> child;  // exactly one element
};
using Node = std::variant<GenS, GenScalar, GenCompact, GenMul, Sum, Product, Scale>;
}  // namespace expr_node

class Expr {
 public:
  Expr() : Expr(scalar(0.0)) {}

  static Expr S();
  static Expr I() { return scalar(1.0); }
  static Expr scalar(Complex c);
  static Expr compact();
  static Expr mul(PCSymbol sym, std::string name = "a");
  static Expr P() { return scale(0.5, I() + S()); }
  static Expr Q() { return scale(0.5, I() + scale(-1.0, S())); }
  static Expr scale(Complex c, Expr e);
  static Expr sum(std::vector<Expr> terms);
  static Expr product(std::vector<Expr> factors);

  friend Expr operator+(const Expr& a, const Expr& b) { return sum({a, b}); }
  friend Expr operator*(const Expr& a, const Expr& b) { return product({a, b}); }

  const expr_node::Node& node() const { return *node_; }

  // Common matrix size of all GenMul leaves (1 when there are none).
  int size() const;
  // Union of jump parameters over all GenMul leaves, sorted, deduplicated.
  std::vector<double> jump_point_set() const;

 private:
  explicit Expr(std::shared_ptr<const expr_node::Node> n) : node_(std::move(n)) {}
  std::shared_ptr<const expr_node::Node> node_;
};

// Structural equality (symbols compared by jump structure and sampled values).
bool equals(const Expr& a, const Expr& b);

// Grammar: expr := term (('+'|'-') term)* ; term := factor ('*' factor)* ;
// factor := '-' factor | literal | name | '(' expr ')'. Reserved names:
// S, I, P, Q, K, i. Literal terms fold into complex scalars; a literal
// coefficient times non-literal factors becomes Scale.
Expr parse_expr(const std::string& text, const std::map<std::string, PCSymbol>& bindings);

// Prints a form that parses back to a structurally identical tree.
std::string to_string(const Expr& e);

}  // namespace sio
