#include "ghom/families.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include "ghom/errors.hpp"

namespace ghom {

namespace {

struct Fixture {
  std::vector<std::string> vars;
  std::string ideal;  // rendered inside "/(...)"; empty for a polynomial ring
  std::string label;  // human-readable ring tag used in descriptions
};

std::string field_token(const CoefficientField& field) {
  std::string d = field.describe();
  if (d == "QQ") return "QQ";
  // "Fp:7" -> "F7"
  return "F" + d.substr(d.find(':') + 1);
}

std::string ring_decl(const CoefficientField& field, const Fixture& fx) {
  std::ostringstream out;
  out << "ring R = " << field_token(field) << "[";
  for (std::size_t i = 0; i < fx.vars.size(); ++i) {
    if (i) out << ",";
    out << fx.vars[i];
  }
  out << "]";
  if (!fx.ideal.empty()) out << "/(" << fx.ideal << ")";
  out << ";\n";
  return out.str();
}

PolyRing ambient_of(const CoefficientField& field, const Fixture& fx) {
  return PolyRing(field, fx.vars, std::vector<int>(fx.vars.size(), 1));
}

// Coefficient in {-2,...,2} drawn with raw modular arithmetic so the stream
// of values is identical on every platform.
Coeff small_coeff(const CoefficientField& field, std::mt19937_64& rng) {
  long c = static_cast<long>(rng() % 5) - 2;
  return field.from_int(c);
}

Polynomial power_of_first_variable(const PolyRing& S, int degree,
                                   std::mt19937_64& rng) {
  std::vector<int> exps(static_cast<std::size_t>(S.nvars()), 0);
  exps[0] = degree;
  Coeff c = small_coeff(S.field(), rng);
  if (c.is_zero()) c = S.field().one();
  return S.monomial(Monomial(std::move(exps)), c);
}

// Emits a random finitely presented module over the declared ring R as one
// DSL statement.  Twists are always written explicitly so the text stays
// valid even when a column comes out zero after random draws.
std::string random_module_dsl(const PolyRing& S, std::mt19937_64& rng,
                              const std::string& name, bool first_var_only) {
  int rows = 1 + static_cast<int>(rng() % 3);
  std::vector<int> target(rows);
  for (int& t : target) t = static_cast<int>(rng() % 3);
  int min_target = *std::min_element(target.begin(), target.end());
  int low = static_cast<int>(
      std::min_element(target.begin(), target.end()) - target.begin());

  int cols = 1 + static_cast<int>(rng() % 2);
  std::vector<int> source(cols);
  std::vector<std::vector<Polynomial>> entries(
      rows, std::vector<Polynomial>(cols, S.zero()));
  for (int j = 0; j < cols; ++j) {
    source[j] = min_target + 1 + static_cast<int>(rng() % 2);
    bool nonzero = false;
    for (int i = 0; i < rows; ++i) {
      int d = source[j] - target[i];
      if (d < 0) continue;
      Polynomial p = first_var_only ? power_of_first_variable(S, d, rng)
                                    : random_homogeneous(S, d, rng);
      if (first_var_only && (rng() % 3 == 0)) p = S.zero();
      entries[i][j] = p;
      nonzero = nonzero || !p.is_zero();
    }
    if (!nonzero) {
      int d = source[j] - target[low];
      // The last enumerated monomial concentrates the degree on the first
      // variable, which keeps first_var_only instances honest.
      auto monos = monomials_of_weighted_degree(S, d);
      entries[low][j] = S.monomial(monos.back(), S.field().one());
    }
  }

  std::ostringstream out;
  out << "module " << name << " = coker R [";
  for (int i = 0; i < rows; ++i) {
    if (i) out << ",";
    out << "[";
    for (int j = 0; j < cols; ++j) {
      if (j) out << ",";
      out << S.to_string(entries[i][j]);
    }
    out << "]";
  }
  out << "] twists target (";
  for (int i = 0; i < rows; ++i) {
    if (i) out << ",";
    out << target[i];
  }
  out << ") source (";
  for (int j = 0; j < cols; ++j) {
    if (j) out << ",";
    out << source[j];
  }
  out << ");\n";
  return out.str();
}

std::vector<FamilyInstance> seeded_family(
    const CoefficientField& field, const std::vector<Fixture>& fixtures,
    const std::string& tag, int count, unsigned long long seed,
    bool first_var_only) {
  std::vector<FamilyInstance> out;
  std::mt19937_64 rng(seed);
  for (int n = 0; n < count; ++n) {
    const Fixture& fx = fixtures[static_cast<std::size_t>(n) % fixtures.size()];
    PolyRing S = ambient_of(field, fx);
    FamilyInstance inst;
    inst.description = tag + " #" + std::to_string(n) + " over " + fx.label;
    inst.script = ring_decl(field, fx) + random_module_dsl(S, rng, "M", first_var_only);
    inst.module_names = {"M"};
    out.push_back(std::move(inst));
  }
  return out;
}

}  // namespace

std::vector<Monomial> monomials_of_weighted_degree(const PolyRing& S,
                                                   int degree) {
  std::vector<Monomial> out;
  if (degree < 0) return out;
  int n = S.nvars();
  std::vector<int> exps(static_cast<std::size_t>(n), 0);
  // Enumerate exponent vectors in lexicographic order of the exponents.
  std::function<void(int, int)> rec = [&](int i, int rem) {
    int w = S.weights()[static_cast<std::size_t>(i)];
    if (i == n - 1) {
      if (rem % w == 0) {
        exps[static_cast<std::size_t>(i)] = rem / w;
        out.push_back(Monomial(exps));
        exps[static_cast<std::size_t>(i)] = 0;
      }
      return;
    }
    for (int e = 0; e * w <= rem; ++e) {
      exps[static_cast<std::size_t>(i)] = e;
      rec(i + 1, rem - e * w);
    }
    exps[static_cast<std::size_t>(i)] = 0;
  };
  rec(0, degree);
  return out;
}

Polynomial random_homogeneous(const PolyRing& S, int degree,
                              std::mt19937_64& rng) {
  Polynomial p = S.zero();
  for (const Monomial& m : monomials_of_weighted_degree(S, degree)) {
    Coeff c = small_coeff(S.field(), rng);
    if (!c.is_zero()) p = S.add(p, S.monomial(m, c));
  }
  return p;
}

std::vector<std::string> family_names() {
  return {"prop8",   "hypersurface", "reduced", "gorenstein",
          "regular3", "mixed",       "xonly"};
}

std::vector<FamilyInstance> generate_family(const std::string& name, int count,
                                            unsigned long long seed,
                                            const CoefficientField& field) {
  if (count < 1) throw InputError("family count must be at least 1");

  const Fixture poly2{{"x", "y"}, "", "QQ[x,y]"};
  const Fixture poly3{{"x", "y", "z"}, "", "QQ[x,y,z]"};
  const Fixture hyper{{"x", "y"}, "x^2", "QQ[x,y]/(x^2)"};
  const Fixture cone{{"x", "y"}, "x^2 - y^2", "QQ[x,y]/(x^2-y^2)"};
  const Fixture fat{{"x", "y"}, "x^2, x*y", "QQ[x,y]/(x^2,xy)"};
  const Fixture cross{{"x", "y"}, "x*y", "QQ[x,y]/(xy)"};

  if (name == "prop8") {
    // One instance per size k: the cokernel of a single column of variables
    // over a polynomial ring in three variables.
    std::vector<FamilyInstance> out;
    Fixture fx{{"x1", "x2", "x3"}, "", "QQ[x1,x2,x3]"};
    for (int k = 0; k < count && k < 3; ++k) {
      FamilyInstance inst;
      inst.description = "prop8 k=" + std::to_string(k) + " over " + fx.label;
      std::ostringstream body;
      body << "module M = coker R [";
      for (int i = 0; i <= k; ++i) {
        if (i) body << ",";
        body << "[x" << (i + 1) << "]";
      }
      body << "];\n";
      inst.script = ring_decl(field, fx) + body.str();
      inst.module_names = {"M"};
      out.push_back(std::move(inst));
    }
    return out;
  }

  if (name == "hypersurface") {
    // Two fixed modules over the ring with one defining equation x^2:
    // the cyclic module cut out by x and the residue field.
    std::vector<FamilyInstance> out;
    {
      FamilyInstance inst;
      inst.description = "hypersurface cyclic module over " + hyper.label;
      inst.script = ring_decl(field, hyper) + "module M = coker R [[x]];\n";
      inst.module_names = {"M"};
      out.push_back(std::move(inst));
    }
    if (count >= 2) {
      FamilyInstance inst;
      inst.description = "hypersurface residue field over " + hyper.label;
      inst.script = ring_decl(field, hyper) + "module M = coker R [[x,y]];\n";
      inst.module_names = {"M"};
      out.push_back(std::move(inst));
    }
    return out;
  }

  if (name == "reduced")
    return seeded_family(field, {cross}, "reduced", count, seed, false);
  if (name == "gorenstein")
    return seeded_family(field, {poly2, hyper, cone}, "gorenstein", count, seed,
                         false);
  if (name == "regular3")
    return seeded_family(field, {poly3}, "regular3", count, seed, false);
  if (name == "mixed")
    return seeded_family(field, {poly2, hyper, fat, cross}, "mixed", count,
                         seed, false);
  if (name == "xonly")
    return seeded_family(field, {poly2}, "xonly", count, seed, true);

  throw InputError("unknown family '" + name + "'");
}

}  // namespace ghom
