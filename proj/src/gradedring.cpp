#include "ghom/gradedring.hpp"

#include "ghom/errors.hpp"

namespace ghom {

int monomial_quotient_dim(int nvars, const std::vector<Monomial>& lead_monomials) {
  for (const Monomial& m : lead_monomials)
    if (m.is_unit()) return -1;  // quotient is the zero ring
  int best = 0;
  for (unsigned mask = 0; mask < (1u << nvars); ++mask) {
    bool ok = true;
    for (const Monomial& m : lead_monomials) {
      bool inside = true;
      for (int i = 0; i < nvars && inside; ++i)
        if (m.exp(i) > 0 && !(mask & (1u << i))) inside = false;
      if (inside) {
        ok = false;
        break;
      }
    }
    if (ok) best = std::max(best, __builtin_popcount(mask));
  }
  return best;
}

GradedRing::GradedRing(PolyRing ambient, std::vector<Polynomial> ideal_gens)
    : S_(std::move(ambient)),
      ideal_(std::move(ideal_gens)),
      ideal_gb_(buchberger_ideal(S_, ideal_)) {
  for (const Polynomial& f : ideal_) {
    if (f.is_zero()) throw InputError("zero ideal generator");
    auto d = S_.homogeneous_degree(f);
    if (!d) throw InputError("inhomogeneous ideal generator: " + S_.to_string(f));
    if (*d <= 0) throw InputError("ideal generator is a unit: " + S_.to_string(f));
  }
  std::vector<Monomial> leads;
  for (const Vec& g : ideal_gb_.gens) leads.push_back(g[0].lead().m);
  dim_ = monomial_quotient_dim(S_.nvars(), leads);
  if (dim_ < 0) throw InputError("ideal contains a unit: quotient ring is zero");
}

std::string GradedRing::describe() const {
  std::string s = S_.field().describe() + "[";
  for (int i = 0; i < S_.nvars(); ++i) {
    if (i) s += ",";
    s += S_.vars()[i];
    if (S_.weights()[i] != 1) s += ":" + std::to_string(S_.weights()[i]);
  }
  s += "]";
  if (!ideal_.empty()) {
    s += "/(";
    for (size_t i = 0; i < ideal_.size(); ++i) {
      if (i) s += ", ";
      s += S_.to_string(ideal_[i]);
    }
    s += ")";
  }
  return s;
}

bool GradedRing::same_ring(const GradedRing& other) const {
  if (this == &other) return true;
  if (!S_.same_structure(other.S_)) return false;
  if (ideal_gb_.gens.size() != other.ideal_gb_.gens.size()) return false;
  for (size_t i = 0; i < ideal_gb_.gens.size(); ++i)
    if (!S_.equal(ideal_gb_.gens[i][0], other.ideal_gb_.gens[i][0])) return false;
  return true;
}

}  // namespace ghom
