#include "razzaboni/expr.hpp"

#include <cctype>
#include <cmath>
#include <cstdlib>
#include <memory>

namespace razzaboni {

namespace {

struct Node {
  virtual ~Node() = default;
  virtual double eval(double u) const = 0;
};
using NodePtr = std::shared_ptr<const Node>;

struct Const : Node {
  double c;
  explicit Const(double v) : c(v) {}
  double eval(double) const override { return c; }
};

struct Var : Node {
  double eval(double u) const override { return u; }
};

struct Binary : Node {
  char op;
  NodePtr l, r;
  Binary(char o, NodePtr a, NodePtr b) : op(o), l(std::move(a)), r(std::move(b)) {}
  double eval(double u) const override {
    const double a = l->eval(u), b = r->eval(u);
    switch (op) {
      case '+': return a + b;
      case '-': return a - b;
      case '*': return a * b;
      default: return a / b;
    }
  }
};

struct Neg : Node {
  NodePtr x;
  explicit Neg(NodePtr n) : x(std::move(n)) {}
  double eval(double u) const override { return -x->eval(u); }
};

struct Call : Node {
  double (*fn)(double);
  NodePtr x;
  Call(double (*f)(double), NodePtr n) : fn(f), x(std::move(n)) {}
  double eval(double u) const override { return fn(x->eval(u)); }
};

class Parser {
 public:
  explicit Parser(const std::string& s) : s_(s) {}

  NodePtr parse() {
    NodePtr e = expr();
    skip_ws();
    if (pos_ != s_.size()) {
      throw ParseError("unexpected character '" + std::string(1, s_[pos_]) +
                       "' at position " + std::to_string(pos_));
    }
    return e;
  }

 private:
  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool eat(char c) {
    skip_ws();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  NodePtr expr() {
    NodePtr e = term();
    for (;;) {
      if (eat('+')) {
        e = std::make_shared<Binary>('+', e, term());
      } else if (eat('-')) {
        e = std::make_shared<Binary>('-', e, term());
      } else {
        return e;
      }
    }
  }

  NodePtr term() {
    NodePtr e = factor();
    for (;;) {
      if (eat('*')) {
        e = std::make_shared<Binary>('*', e, factor());
      } else if (eat('/')) {
        e = std::make_shared<Binary>('/', e, factor());
      } else {
        return e;
      }
    }
  }

  NodePtr factor() {
    if (eat('-')) return std::make_shared<Neg>(factor());
    if (eat('+')) return factor();
    return primary();
  }

  NodePtr primary() {
    skip_ws();
    if (pos_ >= s_.size()) throw ParseError("unexpected end of expression");
    const char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      NodePtr e = expr();
      if (!eat(')')) throw ParseError("missing ')'");
      return e;
    }
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
      char* end = nullptr;
      const double v = std::strtod(s_.c_str() + pos_, &end);
      if (end == s_.c_str() + pos_) throw ParseError("bad number");
      pos_ = static_cast<size_t>(end - s_.c_str());
      return std::make_shared<Const>(v);
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      size_t start = pos_;
      while (pos_ < s_.size() &&
             std::isalpha(static_cast<unsigned char>(s_[pos_]))) {
        ++pos_;
      }
      const std::string name = s_.substr(start, pos_ - start);
      if (name == "u") return std::make_shared<Var>();
      if (name == "pi") return std::make_shared<Const>(M_PI);
      double (*fn)(double) = nullptr;
      if (name == "sin") fn = std::sin;
      else if (name == "cos") fn = std::cos;
      else if (name == "cosh") fn = std::cosh;
      else if (name == "exp") fn = std::exp;
      if (fn == nullptr) throw ParseError("unknown identifier '" + name + "'");
      if (!eat('(')) throw ParseError("expected '(' after " + name);
      NodePtr arg = expr();
      if (!eat(')')) throw ParseError("missing ')' after " + name + " argument");
      return std::make_shared<Call>(fn, arg);
    }
    throw ParseError("unexpected character '" + std::string(1, c) + "' at position " +
                     std::to_string(pos_));
  }

  const std::string& s_;
  size_t pos_ = 0;
};

}  // namespace

ScalarFn parse_profile(const std::string& text) {
  NodePtr root = Parser(text).parse();
  return [root](double u) { return root->eval(u); };
}

double eval_profile(const std::string& text, double u) {
  return parse_profile(text)(u);
}

}  // namespace razzaboni
