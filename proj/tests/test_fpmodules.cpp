#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ghom/errors.hpp"
#include "ghom/fpmodule.hpp"
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

std::map<int, long long> num(std::initializer_list<std::pair<const int, long long>> xs) {
  return std::map<int, long long>(xs);
}

}  // namespace

TEST_CASE("Hilbert series of the basic modules over two variables") {
  auto e = env_of(
      "ring R = QQ[x,y];\n"
      "module K = coker R [[x, y]];\n"
      "module m = coker R [[y],[-x]] twists target (1,1) source (2);\n");
  const auto& R = e.rings.at("R");

  HilbertSeries hr = hilbert_series(FPModule::ring_module(R));
  CHECK(hr.numerator == num({{0, 1}}));
  for (int d = 0; d <= 5; ++d) CHECK(hr.dimension_at(d) == d + 1);
  CHECK(hr.dimension_at(-1) == 0);
  CHECK_FALSE(hr.total_dimension().has_value());

  HilbertSeries hk = hilbert_series(mod(e, "K"));
  CHECK(hk.numerator == num({{0, 1}, {1, -2}, {2, 1}}));
  CHECK(hk.to_string() == "(1 - 2*t + t^2)/(1-t)(1-t)");
  CHECK(hk.dimension_at(0) == 1);
  CHECK(hk.dimension_at(1) == 0);
  CHECK(hk.total_dimension() == 1);

  HilbertSeries hm = hilbert_series(mod(e, "m"));
  CHECK(hm.numerator == num({{1, 2}, {2, -1}}));
  for (int d = 1; d <= 5; ++d) CHECK(hm.dimension_at(d) == d + 1);
  CHECK(hm.dimension_at(0) == 0);

  HilbertSeries hz = hilbert_series(FPModule::zero_module(R));
  CHECK(hz.is_zero());
  CHECK(hz.to_string() == "(0)/(1-t)(1-t)");
  CHECK(hz.total_dimension() == 0);
}

TEST_CASE("Hilbert series arithmetic: shift and sum") {
  auto e = env_of(
      "ring R = QQ[x,y];\n"
      "module K = coker R [[x, y]];\n");
  const FPModule& K = mod(e, "K");
  HilbertSeries h = hilbert_series(K);
  CHECK(h.shifted(3).numerator == num({{3, 1}, {4, -2}, {5, 1}}));
  CHECK(h.shifted(3).dimension_at(3) == 1);
  CHECK(h.plus(h).dimension_at(0) == 2);
  CHECK(hilbert_series(K.shifted(-2)) == h.shifted(-2));
  CHECK(hilbert_series(direct_sum(K, K)) == h.plus(h));
  CHECK(h.shifted(-2).to_string() == "(t^-2 - 2*t^-1 + 1)/(1-t)(1-t)");
}

TEST_CASE("Hilbert series over quotient and weighted rings") {
  auto e = env_of(
      "ring H = QQ[x,y]/(x^2);\n"
      "module R = free H (0);\n"
      "module k = coker H [[x, y]];\n");
  HilbertSeries hr = hilbert_series(mod(e, "R"));
  CHECK(hr.numerator == num({{0, 1}, {2, -1}}));
  CHECK(hr.dimension_at(0) == 1);
  for (int d = 1; d <= 5; ++d) CHECK(hr.dimension_at(d) == 2);
  CHECK(hilbert_series(mod(e, "k")).total_dimension() == 1);

  auto w = env_of("ring W = QQ[x,y:2];\n module F = free W (0);\n");
  HilbertSeries hw = hilbert_series(mod(w, "F"));
  CHECK(hw.weights == std::vector<int>{1, 2});
  CHECK(hw.to_string() == "(1)/(1-t)(1-t^2)");
  long long expect[] = {1, 1, 2, 2, 3, 3};
  for (int d = 0; d <= 5; ++d) CHECK(hw.dimension_at(d) == expect[d]);
}

TEST_CASE("degreewise dimensions agree with dense elimination") {
  auto e = env_of(
      "ring A = QQ[x,y];\n"
      "module MA = coker A [[x, y]];\n"
      "ring B = QQ[x,y]/(x^2, x*y);\n"
      "module MB = coker B [[x^2 + y^2]] twists target (0) source (2);\n"
      "ring C = QQ[x,y,z];\n"
      "module MC = coker C [[x, y],[0, x]] twists target (0,0) source (1,1);\n");
  for (const char* name : {"MA", "MB", "MC"}) {
    const FPModule& M = mod(e, name);
    HilbertSeries h = hilbert_series(M);
    for (int d = -2; d <= 6; ++d) {
      INFO(name << " degree " << d);
      CHECK(h.dimension_at(d) == oracle::module_dimension(M, d));
    }
  }
}

TEST_CASE("minimal presentations prune units and keep the Hilbert series") {
  auto e = env_of(
      "ring R = QQ[x,y];\n"
      "module N = coker R [[1, x],[0, y]] twists target (0,0) source (0,1);\n"
      "module P = coker R [[x, y],[0, x]] twists target (0,0) source (1,1);\n");
  const FPModule& N = mod(e, "N");
  FPModule Nmin = minimalize(N);
  CHECK(Nmin.cover().rank() == 1);
  CHECK(hilbert_series(Nmin) == hilbert_series(N));
  for (int i = 0; i < Nmin.presentation().rows(); ++i)
    for (int j = 0; j < Nmin.presentation().cols(); ++j) {
      const Polynomial& p = Nmin.presentation().entry(i, j);
      if (!p.is_zero()) CHECK(N.S().homogeneous_degree(p).value() > 0);
    }
  // An already canonical presentation is a fixed point.
  const FPModule& P = mod(e, "P");
  CHECK(same_presentation(minimalize(P), P));
  CHECK(same_presentation(minimalize(minimalize(N)), Nmin));
}

TEST_CASE("zero detection and Krull dimension") {
  auto e = env_of(
      "ring R = QQ[x,y];\n"
      "module Z = coker R [[1]] twists target (0) source (0);\n"
      "module K = coker R [[x, y]];\n"
      "ring C = QQ[x,y,z];\n"
      "module L = coker C [[x]];\n");
  CHECK(is_zero_module(mod(e, "Z")));
  CHECK_FALSE(is_zero_module(mod(e, "K")));
  CHECK(is_zero_module(FPModule::zero_module(e.rings.at("R"))));
  CHECK_FALSE(krull_dim_module(mod(e, "Z")).has_value());
  CHECK(krull_dim_module(mod(e, "K")) == 0);
  CHECK(krull_dim_module(FPModule::ring_module(e.rings.at("R"))) == 2);
  CHECK(krull_dim_module(mod(e, "L")) == 2);
}

TEST_CASE("Betti tables of Koszul quotients") {
  auto e = env_of(
      "ring R = QQ[x,y];\n"
      "module K = coker R [[x, y]];\n"
      "ring C = QQ[x,y,z];\n"
      "module k3 = coker C [[x, y, z]];\n");
  BettiTable b2 = betti(mod(e, "K"));
  REQUIRE(b2.entries.size() == 4);  // padded to ambient dim + 1 once terminated
  CHECK(b2.terminated);
  CHECK(b2.pd() == 2);
  CHECK(b2.entries[0] == std::map<int, int>{{0, 1}});
  CHECK(b2.entries[1] == std::map<int, int>{{1, 2}});
  CHECK(b2.entries[2] == std::map<int, int>{{2, 1}});
  CHECK(b2.entries[3].empty());

  BettiTable b3 = betti(mod(e, "k3"));
  CHECK(b3.pd() == 3);
  int total = 0;
  for (const auto& step : b3.entries)
    for (const auto& [twist, count] : step) total += count;
  CHECK(total == 8);  // 1 + 3 + 3 + 1

  BettiTable partial = betti(mod(e, "K"), 1);
  CHECK_FALSE(partial.terminated);
  CHECK_FALSE(partial.pd().has_value());
  CHECK(!partial.to_string().empty());
}

TEST_CASE("resolutions are complexes and exact degree by degree") {
  auto e = env_of(
      "ring H = QQ[x,y]/(x^2);\n"
      "module k = coker H [[x, y]];\n");
  const FPModule& k = mod(e, "k");
  const auto& ring = k.ring();
  const PolyRing& S = k.S();
  Resolution res = resolve(k, 4, true);
  REQUIRE(res.length() == 4);
  CHECK_FALSE(res.terminated);  // the residue field never resolves finitely here
  for (int j = 0; j + 1 < res.length(); ++j) {
    HomogeneousMatrix prod = matrix_compose(S, res.maps[j], res.maps[j + 1]);
    for (int i = 0; i < prod.rows(); ++i)
      for (int c = 0; c < prod.cols(); ++c)
        CHECK(ring->is_zero_in_ring(prod.entry(i, c)));
    for (int d = 0; d <= 6; ++d)
      CHECK(oracle::induced_rank(ring, res.maps[j + 1], d) ==
            oracle::induced_kernel_dim(ring, res.maps[j], d));
  }
}

TEST_CASE("syzygy modules read off a resolution") {
  auto e = env_of(
      "ring R = QQ[x,y];\n"
      "module K = coker R [[x, y]];\n");
  const FPModule& K = mod(e, "K");
  Resolution res = resolve(K, 3, true);
  CHECK(res.terminated);
  CHECK(res.length() == 2);
  CHECK(res.F(0).twists == std::vector<int>{0});
  CHECK(res.F(1).twists == std::vector<int>{1, 1});
  CHECK(res.F(2).twists == std::vector<int>{2});
  CHECK(same_presentation(res.syzygy_module(0), K));
  // First syzygy of the residue field is the irrelevant ideal.
  HilbertSeries h1 = hilbert_series(res.syzygy_module(1));
  CHECK(h1.numerator == std::map<int, long long>{{1, 2}, {2, -1}});
  // Second syzygy is free of rank one; beyond the termination point: error.
  CHECK(hilbert_series(res.syzygy_module(2)).numerator ==
        std::map<int, long long>{{2, 1}});
  CHECK_THROWS_AS(res.syzygy_module(3), InputError);
}

TEST_CASE("quotient by a ring element moves to the smaller ring") {
  auto e = env_of("ring R = QQ[x,y];\n module M = free R (0);\n");
  const FPModule& M = mod(e, "M");
  const PolyRing& S = M.S();
  FPModule Q = quotient_by_element(M, S.parse("x"));
  CHECK(Q.ring()->is_zero_in_ring(S.parse("x")));
  CHECK_FALSE(Q.ring()->is_zero_in_ring(S.parse("y")));
  CHECK(hilbert_series(Q).numerator == std::map<int, long long>{{0, 1}, {1, -1}});
  CHECK_THROWS_AS(quotient_by_element(M, S.parse("2")), InputError);
  CHECK_THROWS_AS(quotient_by_element(M, S.parse("x + y^2")), InputError);
  FPModule Q2 = quotient_by_element(Q, S.parse("y"));
  CHECK(hilbert_series(Q2).total_dimension() == 1);
}

TEST_CASE("column pruning drops redundant generators") {
  auto e = env_of("ring R = QQ[x,y];\n module M = free R (0);\n");
  const PolyRing& S = mod(e, "M").S();
  GradedFreeModule tgt({0});
  HomogeneousMatrix cols(GradedFreeModule({1, 2}), tgt,
                         {{S.parse("x"), S.parse("x^2")}});
  HomogeneousMatrix kept = prune_columns(S, {}, cols);
  CHECK(kept.cols() == 1);
  CHECK(S.to_string(kept.entry(0, 0)) == "x");
  // With y^2 modulo (x*y) nothing collapses: both survive.
  HomogeneousMatrix cols2(GradedFreeModule({1, 2}), tgt,
                          {{S.parse("y"), S.parse("x^2")}});
  CHECK(prune_columns(S, {S.parse("x*y")}, cols2).cols() == 2);
}

TEST_CASE("matrix construction validates homogeneity") {
  auto e = env_of("ring R = QQ[x,y];\n module M = free R (0);\n");
  const PolyRing& S = mod(e, "M").S();
  GradedFreeModule src({1}), tgt({0});
  CHECK_THROWS_AS(
      HomogeneousMatrix(src, tgt, {{S.parse("x^2")}}).validate(S),
      InputError);
  CHECK_NOTHROW(HomogeneousMatrix(src, tgt, {{S.parse("x + 2*y")}}).validate(S));
  CHECK_NOTHROW(HomogeneousMatrix::zero(src, tgt).validate(S));
  HomogeneousMatrix id = HomogeneousMatrix::identity(S, src);
  CHECK(id.entry(0, 0).nterms() == 1);
  CHECK_THROWS_AS(
      HomogeneousMatrix::from_columns(src, tgt, {Vec{S.parse("x"), S.parse("y")}}),
      InputError);
}

TEST_CASE("declared twists must match entry degrees") {
  CHECK_THROWS_AS(
      env_of("ring R = QQ[x,y];\n"
             "module M = coker R [[x]] twists target (0) source (3);\n"),
      InputError);
  // Twist inference fills in consistent values.
  auto e = env_of("ring R = QQ[x,y];\n module M = coker R [[x^2]];\n");
  CHECK(mod(e, "M").presentation().source().twists == std::vector<int>{2});
  CHECK(mod(e, "M").cover().twists == std::vector<int>{0});
}
