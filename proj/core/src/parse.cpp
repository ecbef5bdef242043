#include "betti/parse.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace betti {

namespace {

struct Lexer {
  const std::string& s;
  std::size_t pos = 0;
  int line;
  int col_offset;

  Lexer(const std::string& s, int line, int col_offset)
      : s(s), line(line), col_offset(col_offset) {}

  [[noreturn]] void fail(const std::string& msg) const {
    throw parse_error(msg, line, col_offset + static_cast<int>(pos) + 1);
  }

  void skip_ws() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  }
  bool eof() {
    skip_ws();
    return pos >= s.size();
  }
  char peek() {
    skip_ws();
    return pos < s.size() ? s[pos] : '\0';
  }
  bool accept(char c) {
    if (peek() == c) {
      ++pos;
      return true;
    }
    return false;
  }
  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }

  mpz_class integer() {
    skip_ws();
    std::size_t start = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (pos == start) fail("expected a number");
    return mpz_class(s.substr(start, pos - start));
  }

  std::string ident() {
    skip_ws();
    std::size_t start = pos;
    while (pos < s.size() &&
           (std::isalnum(static_cast<unsigned char>(s[pos])) || s[pos] == '_'))
      ++pos;
    if (pos == start) fail("expected an identifier");
    return s.substr(start, pos - start);
  }
};

class ExprParser {
 public:
  ExprParser(Lexer& lex, const std::vector<std::string>& vars) : lex_(lex), vars_(vars) {}

  QPolynomial parse() {
    QPolynomial p = expr();
    if (!lex_.eof()) lex_.fail("trailing input");
    return p;
  }

 private:
  QPolynomial expr() {
    QPolynomial acc = lex_.accept('-') ? -term() : term();
    while (true) {
      if (lex_.accept('+'))
        acc = acc + term();
      else if (lex_.accept('-'))
        acc = acc - term();
      else
        return acc;
    }
  }

  QPolynomial term() {
    QPolynomial acc = factor();
    while (lex_.accept('*')) acc = acc * factor();
    return acc;
  }

  QPolynomial factor() {
    QPolynomial base = atom();
    if (lex_.accept('^')) {
      mpz_class e = lex_.integer();
      if (e < 0 || e > 1000) lex_.fail("exponent out of range");
      QPolynomial acc = QPolynomial::constant(Rationals{}, nvars(), 1);
      for (mpz_class i = 0; i < e; ++i) acc = acc * base;
      return acc;
    }
    return base;
  }

  QPolynomial atom() {
    char c = lex_.peek();
    if (c == '(') {
      lex_.expect('(');
      QPolynomial p = expr();
      lex_.expect(')');
      return p;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      mpz_class num = lex_.integer();
      mpq_class q(num);
      if (lex_.accept('/')) {
        mpz_class den = lex_.integer();
        if (den == 0) lex_.fail("zero denominator");
        q = mpq_class(num, den);
        q.canonicalize();
      }
      return QPolynomial::constant(Rationals{}, nvars(), q);
    }
    std::string name = lex_.ident();
    auto it = std::find(vars_.begin(), vars_.end(), name);
    if (it == vars_.end()) lex_.fail("unknown variable '" + name + "'");
    int idx = static_cast<int>(it - vars_.begin());
    return QPolynomial::monomial(Rationals{}, Monomial::variable(nvars(), idx), 1);
  }

  int nvars() const { return static_cast<int>(vars_.size()); }

  Lexer& lex_;
  const std::vector<std::string>& vars_;
};

std::vector<std::string> split_top_level(const std::string& s) {
  std::vector<std::string> out;
  int depth = 0;
  std::string cur;
  for (char c : s) {
    if (c == '(') ++depth;
    if (c == ')') --depth;
    if (c == ',' && depth == 0) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

std::string trim(const std::string& s) {
  std::size_t a = s.find_first_not_of(" \t\r");
  if (a == std::string::npos) return "";
  std::size_t b = s.find_last_not_of(" \t\r");
  return s.substr(a, b - a + 1);
}

}  // namespace

QPolynomial parse_polynomial(const std::string& expr,
                             const std::vector<std::string>& var_names, int line,
                             int col_offset) {
  Lexer lex(expr, line, col_offset);
  return ExprParser(lex, var_names).parse();
}

Problem parse_problem(const std::string& text) {
  Problem prob;
  std::istringstream in(text);
  std::string raw;
  int lineno = 0;
  std::vector<QPolynomial> gens;
  bool saw_ideal = false;

  while (std::getline(in, raw)) {
    ++lineno;
    std::string ln = trim(raw);
    if (ln.empty() || ln[0] == '#') continue;
    std::size_t colon = ln.find(':');
    if (colon == std::string::npos) throw parse_error("expected 'key: value'", lineno, 1);
    std::string key = trim(ln.substr(0, colon));
    std::string value = trim(ln.substr(colon + 1));
    int voff = static_cast<int>(raw.find(':')) + 1;

    if (key == "ring") {
      for (const auto& piece : split_top_level(value)) {
        std::string name = trim(piece);
        if (name.empty()) throw parse_error("empty variable name", lineno, voff);
        if (std::find(prob.var_names.begin(), prob.var_names.end(), name) !=
            prob.var_names.end())
          throw parse_error("duplicate variable '" + name + "'", lineno, voff);
        prob.var_names.push_back(name);
      }
    } else if (key == "field") {
      if (value == "rational") {
        prob.field = CoeffField::rationals();
      } else if (value.rfind("fp:", 0) == 0) {
        prob.field = CoeffField::prime(std::stoull(value.substr(3)));
      } else {
        throw parse_error("unknown field '" + value + "'", lineno, voff);
      }
    } else if (key == "ideal") {
      if (prob.var_names.empty())
        throw parse_error("ring must be declared before the ideal", lineno, 1);
      saw_ideal = true;
      for (const auto& piece : split_top_level(value)) {
        QPolynomial g = parse_polynomial(piece, prob.var_names, lineno, voff);
        if (g.is_zero()) throw parse_error("zero generator", lineno, voff);
        if (!g.is_homogeneous())
          throw parse_error("inhomogeneous generator: " + trim(piece), lineno, voff);
        gens.push_back(std::move(g));
      }
    } else if (key == "h") {
      if (prob.var_names.empty())
        throw parse_error("ring must be declared before h", lineno, 1);
      QPolynomial h = parse_polynomial(value, prob.var_names, lineno, voff);
      if (h.degree() != 1 || !h.is_homogeneous())
        throw parse_error("h must be a linear form", lineno, voff);
      prob.hyperplane = std::move(h);
    } else {
      throw parse_error("unknown key '" + key + "'", lineno, 1);
    }
  }

  if (prob.var_names.empty()) throw parse_error("missing ring declaration", lineno, 1);
  if (!saw_ideal || gens.empty()) throw parse_error("missing ideal", lineno, 1);
  prob.ideal = QIdeal(Rationals{}, static_cast<int>(prob.var_names.size()),
                      std::move(gens));
  return prob;
}

FpPolynomial to_prime_field(const QPolynomial& f, const PrimeField& field) {
  std::vector<FpPolynomial::Term> terms;
  for (const auto& t : f.terms()) terms.push_back({t.m, field.from_rational(t.c)});
  return FpPolynomial::from_terms(field, f.nvars(), std::move(terms), f.order());
}

FpIdeal to_prime_field(const QIdeal& I, const PrimeField& field) {
  std::vector<FpPolynomial> gens;
  for (const auto& g : I.generators()) {
    FpPolynomial h = to_prime_field(g, field);
    if (h.is_zero()) throw std::domain_error("generator vanishes mod p");
    gens.push_back(std::move(h));
  }
  return FpIdeal(field, I.nvars(), std::move(gens));
}

}  // namespace betti
