#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "iqpv/periodicity.hpp"
#include "iqpv/sampling.hpp"

using namespace iqpv;

namespace {
Rng rng(777);
}

TEST_CASE("extend context carries a valid Clifford family with one imaginary generator") {
  for (SymmetryClass cls : {SymmetryClass::D, SymmetryClass::DIII, SymmetryClass::AII}) {
    GeneratorSet g = build_generators(cls, 2 * min_bands(cls));
    DoubledContext ctx = DoubledContext::extend(g);
    std::vector<Matrix> ops = ctx.J;
    ops.push_back(ctx.I);
    ops.push_back(ctx.K);
    std::vector<int> reality(ops.size(), +1);
    reality.back() = -1;  // K is imaginary
    VerifyReport rep = verify_clifford_family(*ctx.big_space, ops, reality);
    INFO("class ", class_name(cls));
    CHECK(rep.max_residual() < 1e-12);
    // L = i I K is an involution commuting with the bracket structure pieces used
    Eigen::Index d = ctx.big_space->dim();
    CHECK((ctx.L * ctx.L - Matrix::Identity(d, d)).norm() < 1e-12);
    CHECK((ctx.w_basis.adjoint() * ctx.w_basis -
           Matrix::Identity(d / 2, d / 2)).norm() < 1e-12);
  }
}

TEST_CASE("reduce after double is the identity (extension contexts)") {
  for (SymmetryClass cls : {SymmetryClass::D, SymmetryClass::DIII, SymmetryClass::AII}) {
    GeneratorSet g = build_generators(cls, 2 * min_bands(cls));
    DoubledContext ctx = DoubledContext::extend(g);
    for (int trial = 0; trial < 8; ++trial) {
      Subspace a = random_member(g, rng);
      REQUIRE(membership(a, g).in_cs(1e-10));
      Subspace big = double_11(a, ctx);
      // the doubled space satisfies the two extra pseudo-symmetries as well
      std::vector<Matrix> all = ctx.J;
      all.push_back(ctx.I);
      all.push_back(ctx.K);
      CHECK(membership(big, all).pseudo_sym < 1e-10);
      Subspace back = reduce_11(big, ctx);
      CHECK(back.distance(a) < 1e-9);
    }
  }
}

TEST_CASE("double after reduce is the identity (extension contexts)") {
  for (SymmetryClass cls : {SymmetryClass::D, SymmetryClass::DIII, SymmetryClass::AII}) {
    GeneratorSet g = build_generators(cls, min_bands(cls));
    DoubledContext ctx = DoubledContext::extend(g);
    for (int trial = 0; trial < 8; ++trial) {
      Subspace big = random_big_member(ctx, rng);
      Subspace a = reduce_11(big, ctx);
      CHECK(small_membership(a, ctx).ok(1e-9));
      CHECK(double_11(a, ctx).distance(big) < 1e-9);
    }
  }
}

TEST_CASE("intrinsic halving for the doubled classes") {
  for (SymmetryClass cls : {SymmetryClass::C, SymmetryClass::CI, SymmetryClass::AI,
                            SymmetryClass::BDI}) {
    GeneratorSet g = build_generators(cls, min_bands(cls));
    DoubledContext ctx = DoubledContext::from_big(g);
    INFO("class ", class_name(cls));
    // members of C_s automatically satisfy the K = iJ1J2J3 pseudo-symmetry
    for (int trial = 0; trial < 5; ++trial) {
      Subspace big = random_member(g, rng);
      REQUIRE(membership(big, g).in_cs(1e-10));
      CHECK((big.frame().adjoint() * ctx.K * big.frame()).norm() < 1e-10);
      Subspace a = reduce_s4(big, ctx);
      CHECK(small_membership(a, ctx).ok(1e-9));
      CHECK(double_s4(a, ctx).distance(big) < 1e-9);
    }
  }
}

TEST_CASE("four-subspace decomposition dimensions always sum to the ambient dimension") {
  for (SymmetryClass cls : {SymmetryClass::D, SymmetryClass::AII}) {
    GeneratorSet g = build_generators(cls, min_bands(cls));
    DoubledContext ctx = DoubledContext::extend(g);
    for (int trial = 0; trial < 5; ++trial) {
      Subspace big = random_big_member(ctx, rng);
      auto dims = four_subspace_dims(big, ctx);
      CHECK(dims[0] + dims[1] + dims[2] + dims[3] == ctx.big_space->dim());
      CHECK(dims[0] + dims[1] == big.dim());
    }
  }
}

TEST_CASE("reduction respects the CAR-perp correspondence") {
  GeneratorSet g = build_generators(SymmetryClass::DIII, 2);
  DoubledContext ctx = DoubledContext::extend(g);
  for (int trial = 0; trial < 5; ++trial) {
    Subspace a = random_member(g, rng, /*lagrangian=*/true);
    REQUIRE(membership(a, g).in_rs(1e-10));
    Subspace big = double_11(a, ctx);
    Subspace big_perp = double_11(a.annihilator(), ctx);
    CHECK(big.annihilator().distance(big_perp) < 1e-9);
  }
}
