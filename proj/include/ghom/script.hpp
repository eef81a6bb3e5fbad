#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ghom/fpmodule.hpp"

namespace ghom {

// Line-oriented input language, `;`-terminated statements, `#` comments:
//   ring R = QQ[x,y:2]/(x^2);          field QQ or F<p>; weights default 1
//   module M = coker R [[x,y],[0,x]] twists target (0,0) source (1,1);
//   module F = free R (0,-1);
//   compute gdim M;                     compute regular M (x + y);
//   verify prop5;
// Twists may be omitted when inferable from entry degrees (targets then 0).

struct SourcePos {
  int line = 1;
  int col = 1;
};

struct RingDeclStmt {
  std::string name;
  std::string field;  // "QQ" or "F<p>"
  std::vector<std::string> vars;
  std::vector<int> weights;
  std::vector<std::string> ideal;  // polynomial texts
};

struct ModuleDeclStmt {
  std::string name;
  std::string ring;
  bool free_form = false;
  std::vector<int> free_twists;
  std::vector<std::vector<std::string>> rows;  // row-major entry texts
  std::optional<std::vector<int>> source_twists;
  std::optional<std::vector<int>> target_twists;
};

struct ComputeStmt {
  std::string op;
  std::vector<std::string> args;    // names and integer literals, in order
  std::optional<std::string> poly;  // parenthesized polynomial argument
};

struct VerifyStmt {
  std::string suite;
};

struct Statement {
  enum class Kind { Ring, Module, Compute, Verify };
  Kind kind = Kind::Compute;
  SourcePos pos;
  std::string text;  // normalized statement text, echoed in reports
  RingDeclStmt ring;
  ModuleDeclStmt module;
  ComputeStmt compute;
  VerifyStmt verify;
};

struct Script {
  std::vector<Statement> statements;
};

// Syntax and use-before-declaration checks; InputError messages carry
// line:col positions.
Script parse_script(const std::string& text);

// Declarations materialized in order; polynomials are parsed and twist
// inference happens here.  InputError on inhomogeneous data or bad shapes.
struct Environment {
  std::map<std::string, RingPtr> rings;
  std::map<std::string, FPModule> modules;
  std::map<std::string, std::string> ring_of_module;
};
Environment build_environment(const Script& script, const MonomialOrder& order);

// `coker R [[...]] twists target (...) source (...)` or `free R (...)`;
// re-parses to an identical presentation.
std::string module_to_dsl(const std::string& ring_name, const FPModule& M);

}  // namespace ghom
