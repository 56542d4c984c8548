#include "qhopf/parser.hpp"

#include <cctype>
#include <json.hpp>

#include "qhopf/error.hpp"

namespace qhopf::cli {

namespace {

struct Token {
  enum Kind { Int, Name, Punct, End } kind = End;
  std::string text;
  int line = 1;
  int col = 1;
};

std::vector<Token> lex(const std::string& s) {
  std::vector<Token> out;
  int line = 1, col = 1;
  std::size_t i = 0;
  auto adv = [&](std::size_t n) {
    for (std::size_t k = 0; k < n; ++k) {
      if (s[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
      ++i;
    }
  };
  while (i < s.size()) {
    char c = s[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      adv(1);
      continue;
    }
    Token t;
    t.line = line;
    t.col = col;
    std::size_t j = i;
    if (std::isdigit(static_cast<unsigned char>(c))) {
      while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
      t.kind = Token::Int;
    } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      while (j < s.size() && (std::isalnum(static_cast<unsigned char>(s[j])) || s[j] == '_')) ++j;
      t.kind = Token::Name;
    } else if (std::string("+-*/^()[],").find(c) != std::string::npos) {
      j = i + 1;
      t.kind = Token::Punct;
    } else {
      throw SyntaxError(line, col, std::string("unexpected character '") + c + "'");
    }
    t.text = s.substr(i, j - i);
    adv(j - i);
    out.push_back(t);
  }
  Token end;
  end.line = line;
  end.col = col;
  out.push_back(end);
  return out;
}

class Parser {
 public:
  explicit Parser(std::vector<Token> t) : t_(std::move(t)) {}

  ExprPtr run() {
    ExprPtr e = expr();
    if (peek().kind != Token::End) error("unexpected '" + peek().text + "'");
    return e;
  }

 private:
  const Token& peek() const { return t_[pos_]; }
  bool is(const char* p) const { return peek().kind == Token::Punct && peek().text == p; }
  [[noreturn]] void error(const std::string& msg) const { throw SyntaxError(peek().line, peek().col, msg); }
  void expect(const char* p) {
    if (!is(p)) error(std::string("expected '") + p + "'" + (peek().kind == Token::End ? " before end of input" : ""));
    ++pos_;
  }

  std::shared_ptr<Expr> node(Expr::Kind k, const Token& at) {
    auto e = std::make_shared<Expr>();
    e->kind = k;
    e->line = at.line;
    e->col = at.col;
    return e;
  }

  ExprPtr expr() {
    ExprPtr l = term();
    while (is("+") || is("-")) {
      Token op = peek();
      ++pos_;
      auto n = node(op.text == "+" ? Expr::Add : Expr::Sub, op);
      n->args = {l, term()};
      l = n;
    }
    return l;
  }

  ExprPtr term() {
    ExprPtr l = unary();
    while (is("*") || is("/")) {
      Token op = peek();
      ++pos_;
      auto n = node(op.text == "*" ? Expr::Mul : Expr::Div, op);
      n->args = {l, unary()};
      l = n;
    }
    return l;
  }

  ExprPtr unary() {
    if (is("-")) {
      Token op = peek();
      ++pos_;
      auto n = node(Expr::Neg, op);
      n->args = {unary()};
      return n;
    }
    return power();
  }

  int integer() {
    bool neg = false;
    if (is("-")) {
      neg = true;
      ++pos_;
    }
    if (peek().kind != Token::Int) error("expected an integer");
    long v = std::stol(peek().text);
    ++pos_;
    return static_cast<int>(neg ? -v : v);
  }

  ExprPtr power() {
    ExprPtr b = primary();
    if (is("^")) {
      Token op = peek();
      ++pos_;
      auto n = node(Expr::Pow, op);
      n->args = {b};
      n->exp = integer();
      return n;
    }
    return b;
  }

  ExprPtr primary() {
    const Token& t = peek();
    if (t.kind == Token::Int) {
      auto n = node(Expr::Num, t);
      n->num = mpz_class(t.text);
      ++pos_;
      return n;
    }
    if (is("(")) {
      ++pos_;
      ExprPtr e = expr();
      expect(")");
      return e;
    }
    if (t.kind != Token::Name) error(t.kind == Token::End ? "unexpected end of input" : "unexpected '" + t.text + "'");
    Token name = t;
    ++pos_;
    if (is("[")) {
      ++pos_;
      auto n = node(Expr::Index, name);
      n->name = name.text;
      n->idx.push_back(integer());
      while (is(",")) {
        ++pos_;
        n->idx.push_back(integer());
      }
      expect("]");
      return n;
    }
    if (is("(")) {
      ++pos_;
      auto n = node(Expr::Call, name);
      n->name = name.text;
      n->args.push_back(expr());
      while (is(",")) {
        ++pos_;
        n->args.push_back(expr());
      }
      expect(")");
      return n;
    }
    auto n = node(Expr::Sym, name);
    n->name = name.text;
    return n;
  }

  std::vector<Token> t_;
  std::size_t pos_ = 0;
};

[[noreturn]] void unknown(const Expr& e, const std::string& what) {
  fail(ErrorKind::UnknownSymbol, "line " + std::to_string(e.line) + ", col " + std::to_string(e.col) + ": " + what);
}

Value scalar(const Element& e) {
  Value v;
  v.kind = Value::Scalar;
  v.e = e;
  return v;
}

Value matrix(const MatForm& m) {
  Value v;
  v.kind = Value::Matrix;
  v.m = m;
  return v;
}

Value block(const EMat& b) {
  Value v;
  v.kind = Value::Block;
  v.b = b;
  return v;
}

EMat to_block(const MatForm& m) {
  EMat b = EMat::zero(m.alg, 2, 2);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) b(i, j) = m(i, j);
  return b;
}

RadialFn coefficient_of(const Expr& at, const Value& v) {
  if (v.kind != Value::Scalar || !(v.e.is_zero() || v.e.is_coefficient()))
    fail(ErrorKind::NotInvertible, "line " + std::to_string(at.line) + ", col " + std::to_string(at.col) +
                                       ": expected a coefficient");
  return v.e.is_zero() ? RadialFn() : v.e.coefficient();
}

Value add(const Expr& at, const Value& a, const Value& b, bool sub) {
  if (a.kind != b.kind) fail(ErrorKind::WrongDegree, "line " + std::to_string(at.line) + ", col " + std::to_string(at.col) + ": shape mismatch");
  switch (a.kind) {
    case Value::Scalar: return scalar(sub ? a.e - b.e : a.e + b.e);
    case Value::Matrix: return matrix(sub ? a.m - b.m : a.m + b.m);
    default: {
      if (a.b.rows != b.b.rows || a.b.cols != b.b.cols) fail(ErrorKind::WrongDegree, "block shape mismatch");
      EMat r = a.b;
      for (std::size_t i = 0; i < r.e.size(); ++i) r.e[i] = sub ? r.e[i] - b.b.e[i] : r.e[i] + b.b.e[i];
      return block(r);
    }
  }
}

Value mul(const Value& a, const Value& b) {
  if (a.kind == Value::Scalar && b.kind == Value::Scalar) return scalar(a.e * b.e);
  if (a.kind == Value::Scalar && b.kind == Value::Matrix) return matrix(a.e * b.m);
  if (a.kind == Value::Matrix && b.kind == Value::Scalar) return matrix(a.m * b.e);
  if (a.kind == Value::Matrix && b.kind == Value::Matrix) return matrix(a.m * b.m);
  if (a.kind == Value::Scalar) {
    EMat r = b.b;
    for (auto& x : r.e) x = a.e * x;
    return block(r);
  }
  if (b.kind == Value::Scalar) {
    EMat r = a.kind == Value::Matrix ? to_block(a.m) : a.b;
    for (auto& x : r.e) x = x * b.e;
    return block(r);
  }
  return block((a.kind == Value::Matrix ? to_block(a.m) : a.b) * (b.kind == Value::Matrix ? to_block(b.m) : b.b));
}

Value neg(const Value& v) {
  switch (v.kind) {
    case Value::Scalar: return scalar(-v.e);
    case Value::Matrix: return matrix(-v.m);
    default: {
      EMat r = v.b;
      for (auto& x : r.e) x = -x;
      return block(r);
    }
  }
}

Value unit_like(const Value& v, const AlgebraPtr& a) {
  if (v.kind == Value::Scalar) return scalar(a->one());
  if (v.kind == Value::Matrix) return matrix(MatForm::identity(a));
  return block(EMat::identity(a, v.b.rows));
}

Value map_entries(const Value& v, Element (*f)(const Element&)) {
  switch (v.kind) {
    case Value::Scalar: return scalar(f(v.e));
    case Value::Matrix: {
      MatForm r = v.m;
      for (auto& row : r.e)
        for (auto& x : row) x = f(x);
      return matrix(r);
    }
    default: {
      EMat r = v.b;
      for (auto& x : r.e) x = f(x);
      return block(r);
    }
  }
}

int index_in(const Expr& e, int v, int lo, int hi) {
  if (v < lo || v > hi)
    unknown(e, e.name + " index " + std::to_string(v) + " outside " + std::to_string(lo) + ".." + std::to_string(hi));
  return v;
}

Value eval(const Expr& e, const AlgebraPtr& a);

RadialFn rho_squared(const Expr& e, const AlgebraPtr& a) {
  if (e.args.size() != 1) unknown(e, e.name + " takes one argument");
  RadialFn r = coefficient_of(e, eval(*e.args[0], a));
  return r * r;
}

Value eval_sym(const Expr& e, const AlgebraPtr& a) {
  const std::string& n = e.name;
  if (n == "q") return scalar(a->coeff(RadialFn::q()));
  if (n == "p") return scalar(a->coeff(RadialFn::p()));
  if (n == "U") return scalar(a->coeff(RadialFn::u()));
  if (n == "Uinv") return scalar(a->coeff(RadialFn::u(-1)));
  if (n == "absx") return scalar(a->coeff(RadialFn::sqrt_u()));
  if (n == "rho") return scalar(a->coeff(RadialFn::rho()));
  if (n == "sqrt2") return scalar(a->coeff(RadialFn::sqrt2()));
  if (n == "s") return scalar(a->coeff(RadialFn::s(0)));
  if (n == "Lam") return scalar(a->lam(1));
  if (n == "theta") return scalar(forms::theta(a));
  if (n == "box") return scalar(gauge::box(a));
  if (n == "T") return matrix(sun::T(a));
  if (n == "Tbar") return matrix(sun::Tbar(a));
  if (n == "omega") return matrix(sun::omega(a));
  if (n == "x") return matrix(MatForm::gens(a, letter::kX));
  if (n == "xi") return matrix(MatForm::gens(a, letter::kXi));
  if (n == "I") return matrix(MatForm::identity(a));
  if (n == "Dhat") return matrix(gauge::dhat(a));
  unknown(e, "unknown symbol '" + n + "'");
}

Value eval_index(const Expr& e, const AlgebraPtr& a) {
  const std::string& n = e.name;
  const auto& i = e.idx;
  auto need = [&](std::size_t k) {
    if (i.size() != k) unknown(e, n + " takes " + std::to_string(k) + " indices");
  };
  if (n == "x" || n == "xi" || n == "pd") {
    need(2);
    int r = index_in(e, i[0], 1, 2), c = index_in(e, i[1], 1, 2);
    if (n == "x") return scalar(a->x(r, c));
    if (n == "xi") return scalar(a->xi(r, c));
    return scalar(a->pd(r, c));
  }
  if (n == "y") {
    need(3);
    return scalar(a->y(i[0], index_in(e, i[1], 1, 2), index_in(e, i[2], 1, 2)));
  }
  if (n == "rho") {
    need(1);
    return scalar(a->rho2(i[0]));
  }
  if (n == "s") {
    need(1);
    return scalar(a->coeff(RadialFn::s(i[0])));
  }
  unknown(e, "unknown indexed symbol '" + n + "'");
}

Value eval_call(const Expr& e, const AlgebraPtr& a) {
  const std::string& n = e.name;
  auto arg = [&](std::size_t k) { return eval(*e.args[k], a); };
  auto need = [&](std::size_t k) {
    if (e.args.size() != k) unknown(e, n + " takes " + std::to_string(k) + " argument(s)");
  };
  if (n == "nf") {
    need(1);
    return arg(0);
  }
  if (n == "d") {
    need(1);
    return map_entries(arg(0), [](const Element& x) { return forms::d(x); });
  }
  if (n == "hodge") {
    need(1);
    return map_entries(arg(0), [](const Element& x) { return forms::hodge2(x); });
  }
  if (n == "star") {
    need(1);
    Value v = arg(0);
    if (v.kind == Value::Scalar) return scalar(a->star(v.e));
    if (v.kind == Value::Matrix) return matrix(v.m.dagger());
    return block(v.b.dagger());
  }
  if (n == "bar") {
    need(1);
    Value v = arg(0);
    if (v.kind != Value::Matrix) unknown(e, "bar needs a 2x2 matrix");
    return matrix(v.m.bar());
  }
  if (n == "tr") {
    need(1);
    Value v = arg(0);
    if (v.kind == Value::Scalar) return v;
    if (v.kind == Value::Matrix) return scalar(v.m(0, 0) + v.m(1, 1));
    Element s = a->zero();
    for (int k = 0; k < std::min(v.b.rows, v.b.cols); ++k) s += v.b(k, k);
    return scalar(s);
  }
  if (n == "act") {
    need(2);
    Value op = arg(0), f = arg(1);
    if (op.kind == Value::Scalar && f.kind == Value::Scalar) return scalar(a->act(op.e, f.e));
    if (op.kind == Value::Matrix && f.kind == Value::Scalar) {
      MatForm r = op.m;
      for (auto& row : r.e)
        for (auto& x : row) x = a->act(x, f.e);
      return matrix(r);
    }
    unknown(e, "act needs an operator (or operator matrix) and a scalar");
  }
  if (n == "A") return matrix(gauge::instanton_A(a, rho_squared(e, a)).A);
  if (n == "Ahat") return matrix(gauge::singular_gauge(a, rho_squared(e, a)).A);
  if (n == "F") return matrix(gauge::instanton_F_closed(a, rho_squared(e, a)));
  if (n == "Aanti") return matrix(gauge::antiinstanton_A(a, rho_squared(e, a)).A);
  if (n == "Fanti") return matrix(gauge::antiinstanton_F_closed(a, rho_squared(e, a)));
  if (n == "phi") return scalar(gauge::phi(a, rho_squared(e, a)));
  if (n == "fs") {
    need(1);
    Value v = arg(0);
    if (v.kind != Value::Matrix) unknown(e, "fs needs a 2x2 matrix");
    return matrix(gauge::field_strength(v.m));
  }
  if (n == "P") {
    RadialFn r2 = rho_squared(e, a);
    if (r2 != RadialFn::p()) unknown(e, "P is built for the coefficient rho (argument must be rho)");
    return block(gauge::projector_module(a).P);
  }
  unknown(e, "unknown function '" + n + "'");
}

Value eval(const Expr& e, const AlgebraPtr& a) {
  switch (e.kind) {
    case Expr::Num: return scalar(a->coeff(RadialFn(QRat(e.num))));
    case Expr::Sym: return eval_sym(e, a);
    case Expr::Index: return eval_index(e, a);
    case Expr::Call: return eval_call(e, a);
    case Expr::Neg: return neg(eval(*e.args[0], a));
    case Expr::Add: return add(e, eval(*e.args[0], a), eval(*e.args[1], a), false);
    case Expr::Sub: return add(e, eval(*e.args[0], a), eval(*e.args[1], a), true);
    case Expr::Mul: return mul(eval(*e.args[0], a), eval(*e.args[1], a));
    case Expr::Div: {
      RadialFn c = coefficient_of(*e.args[1], eval(*e.args[1], a));
      return mul(eval(*e.args[0], a), scalar(a->coeff(c.inv())));
    }
    case Expr::Pow: {
      Value b = eval(*e.args[0], a);
      if (e.exp < 0) {
        if (b.kind == Value::Scalar && b.e.has_lambda() && b.e.size() == 1 && b.e.terms().begin()->first.L.empty() &&
            b.e.terms().begin()->first.D.empty() && b.e.terms().begin()->second.is_one())
          return scalar(a->lam(b.e.terms().begin()->first.lam * e.exp));
        return scalar(a->coeff(coefficient_of(*e.args[0], b).pow(e.exp)));
      }
      if (b.kind == Value::Scalar && b.e.is_coefficient()) return scalar(a->coeff(b.e.coefficient().pow(e.exp)));
      Value r = unit_like(b, a);
      for (int k = 0; k < e.exp; ++k) r = mul(r, b);
      return r;
    }
  }
  return scalar(a->zero());
}

void collect_copy(const Expr& e, int& m) {
  if (e.kind == Expr::Index && !e.idx.empty() && (e.name == "y" || e.name == "rho")) m = std::max(m, e.idx[0]);
  for (const auto& c : e.args) collect_copy(*c, m);
}

}  // namespace

ExprPtr parse(const std::string& text) { return Parser(lex(text)).run(); }

std::string print(const Expr& e) {
  auto bin = [&](const char* op) { return "(" + print(*e.args[0]) + " " + op + " " + print(*e.args[1]) + ")"; };
  switch (e.kind) {
    case Expr::Num: return e.num.get_str();
    case Expr::Sym: return e.name;
    case Expr::Index: {
      std::string s = e.name + "[";
      for (std::size_t i = 0; i < e.idx.size(); ++i) s += (i ? "," : "") + std::to_string(e.idx[i]);
      return s + "]";
    }
    case Expr::Call: {
      std::string s = e.name + "(";
      for (std::size_t i = 0; i < e.args.size(); ++i) s += (i ? ", " : "") + print(*e.args[i]);
      return s + ")";
    }
    case Expr::Neg: return "(-" + print(*e.args[0]) + ")";
    case Expr::Add: return bin("+");
    case Expr::Sub: return bin("-");
    case Expr::Mul: return bin("*");
    case Expr::Div: return bin("/");
    case Expr::Pow: return "(" + print(*e.args[0]) + "^" + std::to_string(e.exp) + ")";
  }
  return "";
}

int max_copy(const Expr& e) {
  int m = 0;
  collect_copy(e, m);
  return m;
}

std::string Value::str() const {
  if (kind == Scalar) return e.str();
  nlohmann::json j = nlohmann::json::array();
  int r = kind == Matrix ? 2 : b.rows, c = kind == Matrix ? 2 : b.cols;
  for (int i = 0; i < r; ++i) {
    nlohmann::json row = nlohmann::json::array();
    for (int k = 0; k < c; ++k) row.push_back(kind == Matrix ? m(i, k).str() : b(i, k).str());
    j.push_back(row);
  }
  return j.dump();
}

bool Value::is_zero() const {
  if (kind == Scalar) return e.is_zero();
  if (kind == Matrix) return m.is_zero();
  for (const auto& x : b.e)
    if (!x.is_zero()) return false;
  return true;
}

Value evaluate(const Expr& e, const AlgebraPtr& a) { return eval(e, a); }

AlgebraPtr algebra_for(const Expr& e, AlgebraConfig base) {
  int m = max_copy(e);
  if (m > 0) {
    base.level = Level::Braided;
    base.copies = std::max(base.copies, m);
  }
  return Algebra::create(base);
}

mpq_class eval_rational(const Value& v, const mpq_class& q, const std::optional<mpq_class>& u,
                        const std::optional<mpq_class>& p) {
  if (v.kind != Value::Scalar) fail(ErrorKind::NotSpecializable, "matrix value");
  if (v.e.is_zero()) return 0;
  if (!v.e.is_coefficient()) fail(ErrorKind::NotSpecializable, "free noncommutative word remains: " + v.e.str());
  const RadialFn f = v.e.coefficient();
  if (!u && f.sigma() != f) fail(ErrorKind::NotSpecializable, "value depends on U; give --u");
  if (!p) {
    for (const auto& [rs, c] : f.terms()) {
      bool dep = c.depends_on_p();
      for (int id : rs) dep = dep || id == rad::kRho || rad::is_S(id);
      if (dep) fail(ErrorKind::NotSpecializable, "value depends on p; give --p");
    }
  }
  return f.specialize(q, u.value_or(1), p.value_or(1));
}

mpq_class parse_rational(const std::string& s) {
  mpq_class r;
  if (s.empty() || r.set_str(s, 10) != 0) fail(ErrorKind::ConfigError, "not a rational number: '" + s + "'");
  if (r.get_den() == 0) fail(ErrorKind::ConfigError, "zero denominator in '" + s + "'");
  r.canonicalize();
  return r;
}

}  // namespace qhopf::cli
