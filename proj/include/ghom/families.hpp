#pragma once

#include <random>
#include <string>
#include <vector>

#include "ghom/field.hpp"
#include "ghom/polyring.hpp"

namespace ghom {

// Deterministic instance scripts for the verification suites.  Each instance
// is a standalone script declaring a ring `R` and one or more modules.
struct FamilyInstance {
  std::string description;
  std::string script;
  std::vector<std::string> module_names;
};

//  prop8        fixed: R^{k+1}/R(x1..x_{k+1}) over QQ[x1,x2,x3], k = 0,1,2
//  hypersurface fixed: QQ[x,y]/(x^2) with R/(x) and the residue field
//  reduced      seeded modules over QQ[x,y]/(xy)
//  gorenstein   seeded modules cycling QQ[x,y], QQ[x,y]/(x^2), QQ[x,y]/(x^2-y^2)
//  regular3     seeded modules over QQ[x,y,z]
//  mixed        seeded modules cycling four small rings (incl. non-Gorenstein)
//  xonly        seeded modules over QQ[x,y] with entries in x alone
std::vector<FamilyInstance> generate_family(const std::string& name, int count,
                                            unsigned long long seed,
                                            const CoefficientField& field);
std::vector<std::string> family_names();

// Random homogeneous polynomial of the given weighted degree with small
// coefficients (possibly zero).  Draws directly from the engine so the
// sequence is identical across platforms.
Polynomial random_homogeneous(const PolyRing& S, int degree, std::mt19937_64& rng);

// All monomials of the given weighted degree.
std::vector<Monomial> monomials_of_weighted_degree(const PolyRing& S, int degree);

}  // namespace ghom
