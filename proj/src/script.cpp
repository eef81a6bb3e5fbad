#include "ghom/script.hpp"

#include <cctype>
#include <set>
#include <sstream>

#include "ghom/errors.hpp"

namespace ghom {

namespace {

struct Lexer {
  const std::string& text;
  size_t pos = 0;
  int line = 1, col = 1;

  explicit Lexer(const std::string& t) : text(t) {}

  [[noreturn]] void fail(const std::string& msg) const {
    throw InputError("parse error at " + std::to_string(line) + ":" +
                     std::to_string(col) + ": " + msg);
  }

  bool eof() const { return pos >= text.size(); }
  char peek() const { return eof() ? '\0' : text[pos]; }

  char get() {
    char c = text[pos++];
    if (c == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
    return c;
  }

  void skip_ws() {
    while (!eof()) {
      char c = peek();
      if (c == '#') {
        while (!eof() && peek() != '\n') get();
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        get();
      } else {
        break;
      }
    }
  }

  SourcePos here() const { return SourcePos{line, col}; }

  bool at_ident() const {
    return std::isalpha(static_cast<unsigned char>(peek())) || peek() == '_';
  }

  std::string ident() {
    skip_ws();
    if (!at_ident()) fail("expected an identifier");
    std::string s;
    while (!eof() && (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_'))
      s += get();
    return s;
  }

  int integer() {
    skip_ws();
    std::string s;
    if (peek() == '-') s += get();
    if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected an integer");
    while (!eof() && std::isdigit(static_cast<unsigned char>(peek()))) s += get();
    return std::stoi(s);
  }

  void expect(char c) {
    skip_ws();
    if (peek() != c) fail(std::string("expected '") + c + "'");
    get();
  }

  bool accept(char c) {
    skip_ws();
    if (peek() == c) {
      get();
      return true;
    }
    return false;
  }

  bool accept_word(const std::string& w) {
    skip_ws();
    size_t save_pos = pos;
    int save_line = line, save_col = col;
    if (!at_ident()) return false;
    std::string s = ident();
    if (s == w) return true;
    pos = save_pos;
    line = save_line;
    col = save_col;
    return false;
  }

  // Raw text until a delimiter at parenthesis depth 0; trimmed.
  std::string raw_until(const std::string& delims) {
    skip_ws();
    std::string s;
    int depth = 0;
    while (!eof()) {
      char c = peek();
      if (depth == 0 && delims.find(c) != std::string::npos) break;
      if (c == '(') ++depth;
      if (c == ')') {
        if (depth == 0) break;
        --depth;
      }
      if (c == ';') fail("unterminated expression");
      s += get();
    }
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.pop_back();
    if (s.empty()) fail("expected an expression");
    return s;
  }

  std::vector<int> int_list_parenthesized() {
    expect('(');
    std::vector<int> out;
    if (accept(')')) return out;
    out.push_back(integer());
    while (accept(',')) out.push_back(integer());
    expect(')');
    return out;
  }
};

}  // namespace

Script parse_script(const std::string& text) {
  Lexer lx(text);
  Script script;
  std::set<std::string> known_rings, known_modules;
  for (;;) {
    lx.skip_ws();
    if (lx.eof()) break;
    Statement st;
    st.pos = lx.here();
    size_t start = lx.pos;
    std::string head = lx.ident();
    if (head == "ring") {
      st.kind = Statement::Kind::Ring;
      RingDeclStmt& r = st.ring;
      r.name = lx.ident();
      if (known_rings.count(r.name) || known_modules.count(r.name))
        lx.fail("name '" + r.name + "' already declared");
      lx.expect('=');
      r.field = lx.ident();
      if (r.field != "QQ" &&
          !(r.field.size() > 1 && r.field[0] == 'F' &&
            r.field.find_first_not_of("0123456789", 1) == std::string::npos))
        lx.fail("field must be QQ or F<p>");
      lx.expect('[');
      for (;;) {
        r.vars.push_back(lx.ident());
        r.weights.push_back(lx.accept(':') ? lx.integer() : 1);
        if (!lx.accept(',')) break;
      }
      lx.expect(']');
      if (lx.accept('/')) {
        lx.expect('(');
        for (;;) {
          r.ideal.push_back(lx.raw_until(",)"));
          if (!lx.accept(',')) break;
        }
        lx.expect(')');
      }
      lx.expect(';');
      known_rings.insert(r.name);
    } else if (head == "module") {
      st.kind = Statement::Kind::Module;
      ModuleDeclStmt& m = st.module;
      m.name = lx.ident();
      if (known_rings.count(m.name) || known_modules.count(m.name))
        lx.fail("name '" + m.name + "' already declared");
      lx.expect('=');
      std::string form = lx.ident();
      if (form == "free") {
        m.free_form = true;
        m.ring = lx.ident();
        if (!known_rings.count(m.ring)) lx.fail("unknown ring '" + m.ring + "'");
        m.free_twists = lx.int_list_parenthesized();
      } else if (form == "coker") {
        m.ring = lx.ident();
        if (!known_rings.count(m.ring)) lx.fail("unknown ring '" + m.ring + "'");
        lx.expect('[');
        for (;;) {
          lx.expect('[');
          std::vector<std::string> row;
          for (;;) {
            row.push_back(lx.raw_until(",]"));
            if (!lx.accept(',')) break;
          }
          lx.expect(']');
          m.rows.push_back(std::move(row));
          if (!lx.accept(',')) break;
        }
        lx.expect(']');
        if (lx.accept_word("twists")) {
          for (;;) {
            if (lx.accept_word("source")) {
              if (m.source_twists) lx.fail("duplicate source twists");
              m.source_twists = lx.int_list_parenthesized();
            } else if (lx.accept_word("target")) {
              if (m.target_twists) lx.fail("duplicate target twists");
              m.target_twists = lx.int_list_parenthesized();
            } else {
              break;
            }
          }
          if (!m.source_twists && !m.target_twists)
            lx.fail("expected 'source' or 'target' after 'twists'");
        }
      } else {
        lx.fail("expected 'coker' or 'free'");
      }
      lx.expect(';');
      known_modules.insert(m.name);
    } else if (head == "compute") {
      st.kind = Statement::Kind::Compute;
      ComputeStmt& c = st.compute;
      c.op = lx.ident();
      for (;;) {
        lx.skip_ws();
        if (lx.peek() == ';') break;
        if (lx.peek() == '(') {
          if (c.poly) lx.fail("only one polynomial argument allowed");
          lx.expect('(');
          c.poly = lx.raw_until(")");
          lx.expect(')');
          continue;
        }
        if (lx.at_ident()) {
          std::string a = lx.ident();
          if (!known_rings.count(a) && !known_modules.count(a))
            lx.fail("unknown name '" + a + "'");
          c.args.push_back(std::move(a));
        } else if (std::isdigit(static_cast<unsigned char>(lx.peek())) ||
                   lx.peek() == '-') {
          c.args.push_back(std::to_string(lx.integer()));
        } else {
          lx.fail("unexpected character in compute statement");
        }
      }
      lx.expect(';');
    } else if (head == "verify") {
      st.kind = Statement::Kind::Verify;
      st.verify.suite = lx.ident();
      lx.expect(';');
    } else {
      lx.fail("unknown statement '" + head + "'");
    }
    st.text = text.substr(start, lx.pos - start);
    // Normalize internal newlines for report echoing.
    for (char& ch : st.text)
      if (ch == '\n' || ch == '\t') ch = ' ';
    script.statements.push_back(std::move(st));
  }
  return script;
}

namespace {

CoefficientField field_from_name(const std::string& name) {
  if (name == "QQ") return CoefficientField::rationals();
  return CoefficientField::prime_field(std::stol(name.substr(1)));
}

FPModule build_module(const ModuleDeclStmt& m, const RingPtr& ring) {
  const PolyRing& S = ring->S();
  if (m.free_form)
    return FPModule::free_module(ring, GradedFreeModule(m.free_twists));
  const int nrows = static_cast<int>(m.rows.size());
  const int ncols = static_cast<int>(m.rows[0].size());
  for (const auto& row : m.rows)
    if (static_cast<int>(row.size()) != ncols)
      throw InputError("module '" + m.name + "': ragged matrix rows");
  std::vector<std::vector<Polynomial>> entries(nrows);
  for (int i = 0; i < nrows; ++i)
    for (int j = 0; j < ncols; ++j) entries[i].push_back(S.parse(m.rows[i][j]));

  std::vector<int> target = m.target_twists.value_or(std::vector<int>(nrows, 0));
  if (static_cast<int>(target.size()) != nrows)
    throw InputError("module '" + m.name + "': target twists do not match row count");
  std::vector<int> source;
  if (m.source_twists) {
    source = *m.source_twists;
    if (static_cast<int>(source.size()) != ncols)
      throw InputError("module '" + m.name + "': source twists do not match column count");
  } else {
    for (int j = 0; j < ncols; ++j) {
      std::optional<int> tw;
      for (int i = 0; i < nrows; ++i) {
        if (entries[i][j].is_zero()) continue;
        auto d = S.homogeneous_degree(entries[i][j]);
        if (!d)
          throw InputError("module '" + m.name + "': entry (" + std::to_string(i) +
                           "," + std::to_string(j) + ") is inhomogeneous");
        int cand = static_cast<int>(*d) + target[i];
        if (tw && *tw != cand)
          throw InputError("module '" + m.name + "': column " + std::to_string(j) +
                           " has inconsistent entry degrees; give explicit twists");
        tw = cand;
      }
      if (!tw)
        throw InputError("module '" + m.name + "': zero column " + std::to_string(j) +
                         " needs explicit source twists");
      source.push_back(*tw);
    }
  }
  HomogeneousMatrix pres(GradedFreeModule(source), GradedFreeModule(target), entries);
  pres.validate(S);
  return FPModule(ring, std::move(pres));
}

}  // namespace

Environment build_environment(const Script& script, const MonomialOrder& order) {
  Environment env;
  for (const Statement& st : script.statements) {
    if (st.kind == Statement::Kind::Ring) {
      const RingDeclStmt& r = st.ring;
      PolyRing S(field_from_name(r.field), r.vars, r.weights, order);
      std::vector<Polynomial> ideal;
      for (const std::string& t : r.ideal) {
        Polynomial f = S.parse(t);
        if (!S.homogeneous_degree(f))
          throw InputError("ring '" + r.name + "': inhomogeneous generator '" + t + "'");
        ideal.push_back(std::move(f));
      }
      env.rings.emplace(r.name, GradedRing::make(std::move(S), std::move(ideal)));
    } else if (st.kind == Statement::Kind::Module) {
      const ModuleDeclStmt& m = st.module;
      env.modules.emplace(m.name, build_module(m, env.rings.at(m.ring)));
      env.ring_of_module.emplace(m.name, m.ring);
    }
  }
  return env;
}

std::string module_to_dsl(const std::string& ring_name, const FPModule& M) {
  const PolyRing& S = M.S();
  std::ostringstream os;
  const HomogeneousMatrix& u = M.presentation();
  if (u.cols() == 0) {
    os << "free " << ring_name << " (";
    for (int i = 0; i < u.rows(); ++i) os << (i ? "," : "") << u.target().twists[i];
    os << ")";
    return os.str();
  }
  os << "coker " << ring_name << " [";
  for (int i = 0; i < u.rows(); ++i) {
    os << (i ? ",[" : "[");
    for (int j = 0; j < u.cols(); ++j)
      os << (j ? ", " : "") << S.to_string(u.entry(i, j));
    os << "]";
  }
  os << "] twists target (";
  for (int i = 0; i < u.rows(); ++i) os << (i ? "," : "") << u.target().twists[i];
  os << ") source (";
  for (int j = 0; j < u.cols(); ++j) os << (j ? "," : "") << u.source().twists[j];
  os << ")";
  return os.str();
}

}  // namespace ghom
