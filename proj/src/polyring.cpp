#include "ghom/polyring.hpp"

#include <algorithm>
#include <cctype>
#include <set>

#include "ghom/errors.hpp"

namespace ghom {

PolyRing::PolyRing(CoefficientField field, std::vector<std::string> vars,
                   std::vector<int> weights, MonomialOrder order)
    : field_(std::move(field)),
      vars_(std::move(vars)),
      weights_(std::move(weights)),
      order_(order) {
  if (vars_.empty()) throw InputError("ring needs at least one variable");
  if (weights_.size() != vars_.size())
    throw InputError("weight count does not match variable count");
  std::set<std::string> seen;
  for (const auto& v : vars_) {
    if (v.empty() || !std::isalpha(static_cast<unsigned char>(v[0])))
      throw InputError("bad variable name '" + v + "'");
    if (!seen.insert(v).second) throw InputError("duplicate variable '" + v + "'");
  }
  for (int w : weights_)
    if (w <= 0) throw InputError("weights must be positive integers");
}

std::optional<int> PolyRing::var_index(std::string_view name) const {
  for (int i = 0; i < nvars(); ++i)
    if (vars_[i] == name) return i;
  return std::nullopt;
}

Polynomial PolyRing::constant(const Coeff& c) const {
  if (c.is_zero()) return Polynomial();
  return Polynomial({Term{c, Monomial::unit(nvars())}});
}

Polynomial PolyRing::variable(int i) const {
  return Polynomial({Term{field_.one(), Monomial::variable(nvars(), i)}});
}

Polynomial PolyRing::monomial(const Monomial& m, const Coeff& c) const {
  if (c.is_zero()) return Polynomial();
  return Polynomial({Term{c, m}});
}

Polynomial PolyRing::add(const Polynomial& f, const Polynomial& g) const {
  std::vector<Term> out;
  out.reserve(f.nterms() + g.nterms());
  int i = 0, j = 0;
  while (i < f.nterms() && j < g.nterms()) {
    int c = compare(f.term(i).m, g.term(j).m);
    if (c > 0) {
      out.push_back(f.term(i++));
    } else if (c < 0) {
      out.push_back(g.term(j++));
    } else {
      Coeff s = field_.add(f.term(i).c, g.term(j).c);
      if (!s.is_zero()) out.push_back(Term{s, f.term(i).m});
      ++i;
      ++j;
    }
  }
  for (; i < f.nterms(); ++i) out.push_back(f.term(i));
  for (; j < g.nterms(); ++j) out.push_back(g.term(j));
  return Polynomial(std::move(out));
}

Polynomial PolyRing::neg(const Polynomial& f) const {
  std::vector<Term> out;
  out.reserve(f.nterms());
  for (const Term& t : f.terms()) out.push_back(Term{field_.neg(t.c), t.m});
  return Polynomial(std::move(out));
}

Polynomial PolyRing::sub(const Polynomial& f, const Polynomial& g) const {
  return add(f, neg(g));
}

Polynomial PolyRing::scale(const Coeff& c, const Polynomial& f) const {
  if (c.is_zero()) return Polynomial();
  std::vector<Term> out;
  out.reserve(f.nterms());
  for (const Term& t : f.terms()) {
    Coeff p = field_.mul(c, t.c);
    if (!p.is_zero()) out.push_back(Term{p, t.m});
  }
  return Polynomial(std::move(out));
}

Polynomial PolyRing::term_mul(const Coeff& c, const Monomial& m,
                              const Polynomial& f) const {
  if (c.is_zero()) return Polynomial();
  std::vector<Term> out;
  out.reserve(f.nterms());
  for (const Term& t : f.terms()) {
    Coeff p = field_.mul(c, t.c);
    if (!p.is_zero()) out.push_back(Term{p, t.m * m});
  }
  return Polynomial(std::move(out));
}

Polynomial PolyRing::mul(const Polynomial& f, const Polynomial& g) const {
  Polynomial acc;
  for (const Term& t : f.terms()) acc = add(acc, term_mul(t.c, t.m, g));
  return acc;
}

Polynomial PolyRing::pow(const Polynomial& f, int e) const {
  if (e < 0) throw InputError("negative exponent");
  Polynomial r = one();
  for (int i = 0; i < e; ++i) r = mul(r, f);
  return r;
}

bool PolyRing::equal(const Polynomial& f, const Polynomial& g) const {
  if (f.nterms() != g.nterms()) return false;
  for (int i = 0; i < f.nterms(); ++i)
    if (!(f.term(i).c == g.term(i).c) || f.term(i).m != g.term(i).m) return false;
  return true;
}

std::optional<long long> PolyRing::homogeneous_degree(const Polynomial& f) const {
  if (f.is_zero()) return std::nullopt;
  long long d = degree(f.term(0).m);
  for (const Term& t : f.terms())
    if (degree(t.m) != d) return std::nullopt;
  return d;
}

std::string PolyRing::to_string(const Monomial& m) const {
  std::string s;
  for (int i = 0; i < nvars(); ++i) {
    if (m.exp(i) == 0) continue;
    if (!s.empty()) s += "*";
    s += vars_[i];
    if (m.exp(i) > 1) s += "^" + std::to_string(m.exp(i));
  }
  return s.empty() ? "1" : s;
}

std::string PolyRing::to_string(const Polynomial& f) const {
  if (f.is_zero()) return "0";
  std::string s;
  bool first = true;
  for (const Term& t : f.terms()) {
    mpq_class v = t.c.raw();
    bool negative = sgn(v) < 0;
    mpq_class av = abs(v);
    std::string cs = av.get_str();
    std::string ms = to_string(t.m);
    std::string piece;
    if (ms == "1") {
      piece = cs;
    } else if (cs == "1") {
      piece = ms;
    } else {
      piece = cs + "*" + ms;
    }
    if (first) {
      s += negative ? "-" + piece : piece;
      first = false;
    } else {
      s += negative ? " - " + piece : " + " + piece;
    }
  }
  return s;
}

namespace {

struct Parser {
  const PolyRing& ring;
  std::string_view text;
  size_t pos = 0;

  void skip_ws() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  }
  bool eof() {
    skip_ws();
    return pos >= text.size();
  }
  char peek() {
    skip_ws();
    return pos < text.size() ? text[pos] : '\0';
  }
  bool accept(char c) {
    if (peek() == c) {
      ++pos;
      return true;
    }
    return false;
  }
  [[noreturn]] void fail(const std::string& msg) {
    throw InputError("polynomial parse error at offset " + std::to_string(pos) +
                     " in '" + std::string(text) + "': " + msg);
  }

  mpz_class integer() {
    skip_ws();
    size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos == start) fail("expected integer");
    return mpz_class(std::string(text.substr(start, pos - start)), 10);
  }

  std::string name() {
    skip_ws();
    size_t start = pos;
    while (pos < text.size() &&
           (std::isalnum(static_cast<unsigned char>(text[pos])) || text[pos] == '_'))
      ++pos;
    if (pos == start) fail("expected name");
    return std::string(text.substr(start, pos - start));
  }

  int exponent() {
    skip_ws();
    mpz_class e = integer();
    if (e < 0 || e > 1000) fail("exponent out of range");
    return static_cast<int>(e.get_si());
  }

  Polynomial base() {
    char c = peek();
    if (c == '(') {
      ++pos;
      Polynomial f = expr();
      if (!accept(')')) fail("expected ')'");
      return f;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      mpz_class num = integer();
      if (peek() == '/') {
        ++pos;
        mpz_class den = integer();
        if (sgn(den) == 0) fail("zero denominator");
        return ring.constant(ring.field().from_mpq(mpq_class(num, den)));
      }
      return ring.constant(ring.field().from_mpq(mpq_class(num)));
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      std::string v = name();
      auto idx = ring.var_index(v);
      if (!idx) fail("unknown variable '" + v + "'");
      return ring.variable(*idx);
    }
    fail("unexpected character");
  }

  Polynomial factor() {
    if (accept('-')) return ring.neg(factor());
    Polynomial f = base();
    if (accept('^')) f = ring.pow(f, exponent());
    return f;
  }

  Polynomial term() {
    Polynomial f = factor();
    while (peek() == '*') {
      ++pos;
      f = ring.mul(f, factor());
    }
    return f;
  }

  Polynomial expr() {
    Polynomial f = accept('-') ? ring.neg(term()) : term();
    for (;;) {
      char c = peek();
      if (c == '+') {
        ++pos;
        f = ring.add(f, term());
      } else if (c == '-') {
        ++pos;
        f = ring.sub(f, term());
      } else {
        break;
      }
    }
    return f;
  }
};

}  // namespace

Polynomial PolyRing::parse(std::string_view text) const {
  Parser p{*this, text};
  if (p.eof()) throw InputError("empty polynomial");
  Polynomial f = p.expr();
  if (!p.eof()) p.fail("trailing input");
  return f;
}

}  // namespace ghom
