#pragma once

#include <string>
#include <vector>

#include "ghom/field.hpp"
#include "ghom/order.hpp"

namespace ghom {

// One checked statement inside a suite run.
struct SuiteAssertion {
  std::string tag;       // stable label, e.g. "Thm18c", "Prop5", "ABF"
  std::string instance;  // which generated instance was tested
  bool pass = false;
  std::string details;   // computed values, for the report
};

// Outcome of a whole suite: deterministic for fixed (name, seed, field,
// order).  Failures carry a standalone counterexample script.
struct SuiteResult {
  std::string suite;
  unsigned long long seed = 0;
  std::vector<SuiteAssertion> assertions;
  std::vector<std::string> counterexamples;
  bool ok() const {
    for (const auto& a : assertions)
      if (!a.pass) return false;
    return true;
  }
};

//  prop8     exact invariants of the cokernels of variable columns
//  thm17e    gdim of the residue field on three fixed rings
//  abf       gdim + depth = depth of the ring, both sides independent
//  cor21     gdim equals projective dimension over a polynomial ring
//  prop5     sigma kernel/cokernel match ext of the transpose
//  thm18     the three gdim inequalities along short exact sequences
//  thm40     level-k torsionless equals the ext grade profile
//  cor24     pushforward preserves gdim zero
//  cor32     gdim is stable under quotient by a regular variable
//  cor43     duals over a reduced fixture are reflexive
//  exercise  ext vanishing below grade minus gdim
SuiteResult run_suite(const std::string& name, unsigned long long seed,
                      const CoefficientField& field, const MonomialOrder& order);
std::vector<std::string> suite_names();

}  // namespace ghom
