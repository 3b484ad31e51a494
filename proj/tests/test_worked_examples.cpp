#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "iqpv/worked_examples.hpp"

using namespace iqpv;

TEST_CASE("chain bundle matches its closed-form fibers at every grid point") {
  for (double alpha : {0.0, 0.6}) {
    ExampleBundle ex = build_d_to_diii(32, alpha);
    INFO("alpha = ", alpha);
    REQUIRE(ex.bundle.space.size() == 32);
    for (int i = 0; i < ex.bundle.space.size(); ++i) {
      Subspace cf(ex.bundle.gens.space, ex.closed_form[i]);
      CHECK(ex.bundle.fibers[i].distance(cf) < 1e-10);
    }
    CHECK(check_bundle(ex.bundle).ok(1e-10));
  }
}

TEST_CASE("chain fibers: pseudo-symmetries everywhere, K relation at the seed only") {
  ExampleBundle ex = build_d_to_diii(16, 0.3);
  for (const Subspace& f : ex.bundle.fibers)
    CHECK(membership(f, ex.bundle.gens).in_cs(1e-10));
  // fibers away from tau-fixed momenta pair up via A(-k) = A(k)^perp instead of
  // being individually Lagrangian, and the extra K relation only survives at
  // the tau-fixed momenta
  int i0 = 8;  // theta_j = -pi + 2 pi j / 16
  REQUIRE(ex.bundle.space.points[i0](0) == 0.0);
  const Matrix& f0 = ex.bundle.fibers[i0].frame();
  CHECK((f0.adjoint() * ex.K * f0).norm() < 1e-12);
  const Matrix& fpi = ex.bundle.fibers[0].frame();  // k = -pi
  CHECK((fpi.adjoint() * ex.K * fpi).norm() < 1e-12);
  const Matrix& fgen = ex.bundle.fibers[4].frame();  // k = -pi/2: generic point
  CHECK((fgen.adjoint() * ex.K * fgen).norm() > 0.5);
  for (int i = 0; i < 16; ++i) {
    int j = ex.bundle.space.tau[i];
    CHECK(ex.bundle.fibers[i].annihilator().distance(ex.bundle.fibers[j]) < 1e-10);
  }
}

TEST_CASE("chain spin sectors are pure at alpha = 0 and mixed otherwise") {
  ExampleBundle ex = build_d_to_diii(16, 0.0);
  auto up = kitaev_spin_sector(ex, true);
  auto dn = kitaev_spin_sector(ex, false);
  REQUIRE(up.size() == 16);
  for (int i = 0; i < 16; ++i) {
    double k = ex.bundle.space.points[i](0);
    CHECK(std::abs(up[i].v) == doctest::Approx(std::abs(std::cos(k / 2))).epsilon(1e-12));
    CHECK(std::abs(up[i].u) == doctest::Approx(std::abs(std::sin(k / 2))).epsilon(1e-12));
    CHECK(std::abs(dn[i].v) == doctest::Approx(std::abs(std::cos(k / 2))).epsilon(1e-12));
  }
  ExampleBundle mixed = build_d_to_diii(16, 0.4);
  CHECK_THROWS_AS(kitaev_spin_sector(mixed, true), std::invalid_argument);
}

TEST_CASE("QSH bundle matches its closed-form fibers away from the poles") {
  ExampleBundle ex = build_diii_to_aii(16);
  for (int i = 2; i < ex.bundle.space.size(); ++i) {
    Subspace cf = Subspace::from_columns(ex.bundle.gens.space, ex.closed_form[i]);
    REQUIRE(cf.dim() == 4);
    CHECK(ex.bundle.fibers[i].distance(cf) < 1e-10);
  }
  CHECK(check_bundle(ex.bundle).ok(1e-9));
}

TEST_CASE("QSH pole fibers are the K eigenspaces, independent of the suppressed momentum") {
  ExampleBundle ex = build_diii_to_aii(16);
  auto sp = ex.bundle.gens.space;
  Subspace eplus = eigenspace(sp, ex.K, cplx(0, 1));
  Subspace eminus = eigenspace(sp, ex.K, cplx(0, -1));
  CHECK(ex.bundle.fibers[0].distance(eplus) < 1e-12);
  CHECK(ex.bundle.fibers[1].distance(eminus) < 1e-12);
}

TEST_CASE("closed-form columns at the poles lie in the K eigenspaces for every k1") {
  ExampleBundle ex = build_diii_to_aii(8);
  auto sp = ex.bundle.gens.space;
  Subspace eplus = eigenspace(sp, ex.K, cplx(0, 1));
  Subspace eminus = eigenspace(sp, ex.K, cplx(0, -1));
  for (double k1 : {-2.7, -0.4, 1.1, 2.9}) {
    for (int spin = 0; spin < 2; ++spin) {
      Vector v = qsh_valence_vector(-M_PI / 2, k1, spin == 0);
      CHECK(eplus.contains(v, 1e-10));
      Vector w = qsh_valence_vector(M_PI / 2, k1, spin == 0);
      CHECK(eminus.contains(w, 1e-10));
    }
  }
}

TEST_CASE("QSH per-spin valence lines live in fixed creator planes") {
  ExampleBundle ex = build_diii_to_aii(8);
  auto sp = ex.bundle.gens.space;
  Subspace up_plane = qsh_spin_sector_plane(sp, true);
  Subspace dn_plane = qsh_spin_sector_plane(sp, false);
  auto up = qsh_spin_valence_frames(ex, true);
  auto dn = qsh_spin_valence_frames(ex, false);
  for (int i = 0; i < ex.bundle.space.size(); ++i) {
    CHECK(up_plane.contains(up[i].col(0), 1e-10));
    CHECK(dn_plane.contains(dn[i].col(0), 1e-10));
    // each valence line is contained in the corresponding fiber
    CHECK((ex.bundle.fibers[i].projector() * up[i].col(0) - up[i].col(0)).norm() < 1e-9);
    CHECK((ex.bundle.fibers[i].projector() * dn[i].col(0) - dn[i].col(0)).norm() < 1e-9);
  }
}

TEST_CASE("QSH valence vectors are smooth across the closed-form parametrization") {
  // refinement halves the largest neighbor distance (continuity of the family)
  for (bool spin_up : {true, false}) {
    double step8 = 0, step16 = 0;
    for (int res : {8, 16}) {
      ExampleBundle ex = build_diii_to_aii(res);
      double worst = 0;
      for (auto [i, j] : ex.bundle.space.edges) {
        double d = (ex.bundle.fibers[i].projector() - ex.bundle.fibers[j].projector()).norm();
        worst = std::max(worst, d);
      }
      (res == 8 ? step8 : step16) = worst;
    }
    double ratio = step16 / step8;
    CHECK(ratio > 0.3);
    CHECK(ratio < 0.7);
  }
}
