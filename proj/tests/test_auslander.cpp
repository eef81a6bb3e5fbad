#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ghom/auslander.hpp"
#include "ghom/errors.hpp"
#include "ghom/homext.hpp"
#include "ghom/script.hpp"
#include "support/oracle.hpp"

using namespace ghom;

namespace {

Environment env_of(const std::string& text) {
  return build_environment(parse_script(text), MonomialOrder{});
}

const FPModule& mod(const Environment& e, const std::string& name) {
  return e.modules.at(name);
}

const std::map<int, long long> POINT{{0, 1}, {1, -2}, {2, 1}};  // residue field

}  // namespace

TEST_CASE("transpose swaps generators and relations of the residue field") {
  auto e = env_of("ring R = QQ[x,y];\n module K = coker R [[x, y]];\n");
  const FPModule& K = mod(e, "K");
  FPModule tr = auslander_transpose(K);
  CHECK(tr.cover().twists == std::vector<int>{-1, -1});
  CHECK(tr.presentation().cols() == 1);
  CHECK(hilbert_series(tr).to_string() == "(2*t^-1 - 1)/(1-t)(1-t)");
  // Transposing twice returns to the original minimal presentation.
  CHECK(same_presentation(minimalize(auslander_transpose(tr)), minimalize(K)));
}

TEST_CASE("duals of free modules flip the twists") {
  auto e = env_of("ring R = QQ[x,y];\n module F = free R (0,-1);\n");
  Subquotient d = dual_with_embedding(mod(e, "F"));
  FPModule dm = minimalize(d.module);
  CHECK(dm.cover().twists == std::vector<int>{0, 1});
  CHECK(dm.presentation().cols() == 0);
  CHECK(hilbert_series(dm).numerator == std::map<int, long long>{{0, 1}, {1, 1}});
}

TEST_CASE("the residue field has no dual and is its own sigma kernel") {
  auto e = env_of("ring R = QQ[x,y];\n module K = coker R [[x, y]];\n");
  SigmaAnalysis a = sigma_analysis(mod(e, "K"));
  CHECK(is_zero_module(a.dual));
  CHECK(is_zero_module(a.double_dual));
  CHECK_FALSE(a.torsionless);
  CHECK_FALSE(a.reflexive);
  CHECK(hilbert_series(a.kernel_mod).numerator == POINT);
  CHECK(is_zero_module(a.cokernel_mod));
  // Both routes to the kernel and cokernel agree.
  CHECK(hilbert_series(a.kernel_ext) == hilbert_series(a.kernel_mod));
  CHECK(hilbert_series(a.cokernel_ext) == hilbert_series(a.cokernel_mod));
}

TEST_CASE("a cyclic torsion module over a domain is not torsionless") {
  auto e = env_of("ring C = QQ[x,y,z];\n module M = coker C [[x]];\n");
  SigmaAnalysis a = sigma_analysis(mod(e, "M"));
  CHECK(is_zero_module(a.dual));
  CHECK_FALSE(a.torsionless);
  CHECK(hilbert_series(a.kernel_mod).numerator ==
        std::map<int, long long>{{0, 1}, {1, -1}});
  TorsionlessReport t = is_k_torsionless(mod(e, "M"), 1);
  CHECK_FALSE(t.ok);
  CHECK(t.first_failure == 1);
  REQUIRE(t.witness.has_value());
  CHECK(t.witness->numerator == std::map<int, long long>{{0, 1}, {1, -1}});
}

TEST_CASE("the maximal ideal is torsionless but not reflexive") {
  auto e = env_of(
      "ring R = QQ[x,y];\n"
      "module m = coker R [[y],[-x]] twists target (1,1) source (2);\n");
  const FPModule& m = mod(e, "m");
  SigmaAnalysis a = sigma_analysis(m);
  CHECK(a.torsionless);
  CHECK_FALSE(a.reflexive);
  CHECK(is_zero_module(a.kernel_mod));
  // m** = R, so the cokernel of sigma is the residue field.
  CHECK(hilbert_series(a.double_dual).numerator == std::map<int, long long>{{0, 1}});
  CHECK(hilbert_series(a.cokernel_mod).numerator == POINT);
  CHECK(minimalize(a.dual).cover().twists == std::vector<int>{0});

  CHECK(is_k_torsionless(m, 1).ok);
  TorsionlessReport t2 = is_k_torsionless(m, 2);
  CHECK_FALSE(t2.ok);
  CHECK(t2.first_failure == 2);
  CHECK(is_k_torsionless(m, 0).ok);  // vacuous
}

TEST_CASE("pushforward of the maximal ideal recovers its free hull") {
  auto e = env_of(
      "ring R = QQ[x,y];\n"
      "module m = coker R [[y],[-x]] twists target (1,1) source (2);\n");
  Pushforward p = universal_pushforward(mod(e, "m"));
  CHECK(p.target.cover().twists == std::vector<int>{0});
  CHECK(p.injective);
  CHECK(p.dual_exact);
  CHECK(hilbert_series(minimalize(p.N)).numerator == POINT);
  // The three Hilbert series are additive across 0 -> m -> P -> N -> 0.
  CHECK(hilbert_series(p.M).plus(hilbert_series(p.N)) ==
        hilbert_series(p.target));
}

TEST_CASE("pushforward of a torsion module cannot embed") {
  auto e = env_of("ring R = QQ[x,y];\n module K = coker R [[x, y]];\n");
  Pushforward p = universal_pushforward(mod(e, "K"));
  CHECK_FALSE(p.injective);
  CHECK(p.target.cover().rank() == 0);  // the dual vanishes
}

TEST_CASE("six-term sequence of the Koszul presentation is exact") {
  auto e = env_of(
      "ring R = QQ[x,y];\n"
      "module A = free R (2);\n"
      "module B = free R (1,1);\n"
      "module m = coker R [[y],[-x]] twists target (1,1) source (2);\n");
  const FPModule& A = mod(e, "A");
  const FPModule& B = mod(e, "B");
  const FPModule& m = mod(e, "m");
  const PolyRing& S = A.S();
  ModuleMap inj(A, B, m.presentation());
  ModuleMap surj(B, m, HomogeneousMatrix::identity(S, B.cover()));
  ShortExactSequence ses{inj, surj};
  ses.validate();

  SixTerm six = six_term(ses);
  CHECK(six.all_exact());
  for (bool ok : six.exact) CHECK(ok);
  CHECK(hilbert_series(six.dual_cokernel).numerator ==
        std::map<int, long long>{{-2, 1}, {-1, -2}, {0, 1}});
  CHECK(hilbert_series(minimalize(six.dual_right)).numerator ==
        std::map<int, long long>{{0, 1}});  // m* = R
  CHECK(is_zero_module(minimalize(six.tr_mid)));  // transpose of a free module
}

TEST_CASE("syzygy embeddings succeed exactly up to the torsionless level") {
  auto e = env_of(
      "ring R = QQ[x,y];\n"
      "module K = coker R [[x, y]];\n"
      "module m = coker R [[y],[-x]] twists target (1,1) source (2);\n");
  SyzygyEmbedding ok1 = syzygy_embedding(mod(e, "m"), 1);
  CHECK(ok1.ok);
  CHECK(ok1.steps_completed == 1);
  CHECK(ok1.failed_at == -1);
  REQUIRE(ok1.chain.size() == 1);
  CHECK(ok1.chain[0].injective);

  SyzygyEmbedding no2 = syzygy_embedding(mod(e, "m"), 2);
  CHECK_FALSE(no2.ok);
  CHECK(no2.steps_completed == 1);
  CHECK(no2.failed_at == 2);
  REQUIRE(no2.obstruction.has_value());
  CHECK(no2.obstruction->numerator == POINT);

  SyzygyEmbedding no1 = syzygy_embedding(mod(e, "K"), 1);
  CHECK_FALSE(no1.ok);
  CHECK(no1.steps_completed == 0);
  CHECK(no1.failed_at == 1);
  REQUIRE(no1.obstruction.has_value());
  CHECK(no1.obstruction->numerator == POINT);
}

TEST_CASE("ext of the residue field is Koszul dual") {
  auto e = env_of(
      "ring R = QQ[x,y];\n"
      "module K = coker R [[x, y]];\n"
      "module m = coker R [[y],[-x]] twists target (1,1) source (2);\n");
  const FPModule& K = mod(e, "K");
  const auto& R = K.ring();
  FPModule RM = FPModule::ring_module(R);

  CHECK(hilbert_series(ext_module(0, K, RM)).is_zero());
  CHECK(hilbert_series(ext_module(1, K, RM)).is_zero());
  HilbertSeries e2 = hilbert_series(ext_module(2, K, RM));
  CHECK(e2.numerator == std::map<int, long long>{{-2, 1}, {-1, -2}, {0, 1}});
  CHECK(hilbert_series(ext_module(3, K, RM)).is_zero());
  // The first syzygy shifts ext degree by one.
  CHECK(hilbert_series(ext_module(1, mod(e, "m"), RM)) == e2);

  auto range = ext_range(K, RM, 3);
  REQUIRE(range.size() == 4);
  for (int i = 0; i <= 3; ++i)
    CHECK(hilbert_series(range[i]) == hilbert_series(ext_module(i, K, RM)));
}

TEST_CASE("hom modules of small pairs") {
  auto e = env_of(
      "ring R = QQ[x,y];\n"
      "module K = coker R [[x, y]];\n"
      "module N = coker R [[x, y],[0, x]] twists target (0,0) source (1,1);\n");
  const FPModule& K = mod(e, "K");
  const auto& R = K.ring();
  FPModule RM = FPModule::ring_module(R);
  // Hom(k, k) = k.
  HilbertSeries hk = hilbert_series(hom_module(K, K));
  CHECK(hk.total_dimension() == 1);
  CHECK(hk.dimension_at(0) == 1);
  // Hom(R, M) = M.
  CHECK(hilbert_series(hom_module(RM, mod(e, "N"))) ==
        hilbert_series(mod(e, "N")));
  // A torsion module has no maps to R.
  CHECK(is_zero_module(hom_module(mod(e, "N"), RM)));
}

TEST_CASE("ext embeddings land in the hom cover") {
  auto e = env_of("ring H = QQ[x,y]/(x^2);\n module k = coker H [[x, y]];\n");
  const FPModule& k = mod(e, "k");
  FPModule RM = FPModule::ring_module(k.ring());
  Subquotient s = ext_with_embedding(1, k, RM);
  CHECK(s.gens.cols() == s.module.cover().rank());
  s.gens.validate(k.S());
  CHECK_FALSE(is_zero_module(s.module));
}

TEST_CASE("ext dimensions agree with the dense Hom complex") {
  auto e = env_of(
      "ring B = QQ[x,y]/(x^2, x*y);\n"
      "module kb = coker B [[x, y]];\n"
      "module NB = coker B [[y^2]] twists target (0) source (2);\n"
      "ring C = QQ[x,y,z];\n"
      "module NC = coker C [[x, y],[0, x]] twists target (0,0) source (1,1);\n");
  const FPModule& kb = mod(e, "kb");
  FPModule RB = FPModule::ring_module(kb.ring());
  const FPModule& NC = mod(e, "NC");
  FPModule RC = FPModule::ring_module(NC.ring());

  for (int i = 0; i <= 3; ++i) {
    HilbertSeries hi = hilbert_series(ext_module(i, kb, RB));
    HilbertSeries hn = hilbert_series(ext_module(i, kb, mod(e, "NB")));
    HilbertSeries hc = hilbert_series(ext_module(i, NC, RC));
    for (int d = -4; d <= 6; ++d) {
      INFO("i=" << i << " d=" << d);
      CHECK(hi.dimension_at(d) == oracle::ext_dimension(kb, RB, i, d));
      CHECK(hn.dimension_at(d) == oracle::ext_dimension(kb, mod(e, "NB"), i, d));
      CHECK(hc.dimension_at(d) == oracle::ext_dimension(NC, RC, i, d));
    }
  }
}
