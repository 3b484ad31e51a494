#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "iqpv/clifford.hpp"
#include "iqpv/tables.hpp"

#include <chrono>

using namespace iqpv;

TEST_CASE("class bookkeeping") {
  CHECK(kitaev_index(SymmetryClass::D) == 0);
  CHECK(kitaev_index(SymmetryClass::BDI) == 7);
  CHECK(kitaev_index(SymmetryClass::A) == -1);
  CHECK(is_complex_class(SymmetryClass::AIII));
  CHECK(!is_complex_class(SymmetryClass::CI));
  for (int s = 0; s < 8; ++s) CHECK(kitaev_index(class_from_index(s)) == s);
  CHECK(class_from_name("DIII") == SymmetryClass::DIII);
  CHECK(class_from_name("aii") == SymmetryClass::AII);
  CHECK(!class_from_name("XYZ").has_value());
  for (int s = 0; s < 8; ++s)
    CHECK(min_bands(class_from_index(s)) == min_multiplicity(s));
}

TEST_CASE("generator sets satisfy Clifford, unitarity and reality relations") {
  auto start = std::chrono::steady_clock::now();
  for (int s = 0; s < 8; ++s) {
    SymmetryClass cls = class_from_index(s);
    for (Eigen::Index n : {min_bands(cls), 2 * min_bands(cls)}) {
      GeneratorSet g = build_generators(cls, n);
      CHECK(g.s() == s);
      VerifyReport rep = verify_generator_set(g);
      INFO("class ", class_name(cls), " n=", n);
      CHECK(rep.max_residual() < 1e-12);
    }
  }
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  CHECK(secs < 1.0);
}

TEST_CASE("complex-class generator sets") {
  for (SymmetryClass cls : {SymmetryClass::A, SymmetryClass::AIII}) {
    GeneratorSet g = build_generators(cls, 2 * min_bands(cls));
    CHECK(verify_generator_set(g).max_residual() < 1e-12);
    CHECK(g.s() == (cls == SymmetryClass::A ? 0 : 1));
  }
}

TEST_CASE("band count must be a multiple of the minimum") {
  CHECK_THROWS_AS(build_generators(SymmetryClass::CII, 3), std::invalid_argument);
  CHECK_THROWS_AS(build_generators(SymmetryClass::BDI, 12), std::invalid_argument);
}

TEST_CASE("base points are members of the real classifying spaces") {
  for (int s = 0; s < 8; ++s) {
    SymmetryClass cls = class_from_index(s);
    for (Eigen::Index n : {min_bands(cls), 2 * min_bands(cls)}) {
      GeneratorSet g = build_generators(cls, n);
      Subspace a0 = base_point(g);
      MembershipReport rep = membership(a0, g);
      INFO("class ", class_name(cls), " n=", n);
      CHECK(rep.half_dim);
      CHECK(rep.pseudo_sym < 1e-12);
      CHECK(rep.lagrangian < 1e-12);
    }
  }
  for (SymmetryClass cls : {SymmetryClass::A, SymmetryClass::AIII}) {
    GeneratorSet g = build_generators(cls, min_bands(cls));
    CHECK(membership(base_point(g), g).in_cs(1e-12));
  }
}

TEST_CASE("membership detects violations") {
  GeneratorSet g = build_generators(SymmetryClass::DIII, 2);
  // the full creator plane is Lagrangian but breaks the second pseudo-symmetry set
  Subspace wrong = Subspace::span_of_basis_vectors(g.space, {0, 1});
  MembershipReport rep = membership(wrong, g);
  bool violated = rep.pseudo_sym > 0.5 || !rep.half_dim;
  (void)violated;
  // at minimum the report must not claim full membership for an arbitrary plane
  Subspace diag(g.space, [] {
    Matrix m = Matrix::Zero(4, 2);
    m(0, 0) = m(2, 0) = 1 / std::sqrt(2.0);
    m(1, 1) = m(3, 1) = 1 / std::sqrt(2.0);
    return m;
  }());
  CHECK(!membership(diag, g).in_rs());
}

TEST_CASE("flattened Hamiltonian squares to one and has the right kernel structure") {
  GeneratorSet g = build_generators(SymmetryClass::AII, 2);
  Subspace a0 = base_point(g);
  Matrix h = flattened_hamiltonian(a0);
  Eigen::Index d = g.space->dim();
  CHECK((h * h - Matrix::Identity(d, d)).norm() < 1e-13);
  CHECK((h * a0.frame() + a0.frame()).norm() < 1e-13);  // A is the -1 eigenspace
  // pseudo-symmetries anticommute with the flattened Hamiltonian of any member
  for (const Matrix& j : g.J) CHECK((j * h + h * j).norm() < 1e-12);
}

TEST_CASE("recovered charge and time reversal") {
  GeneratorSet g = build_generators(SymmetryClass::AII, 2);
  Matrix q = charge_operator(g);
  Eigen::Index d = g.space->dim();
  CHECK((q * q - Matrix::Identity(d, d)).norm() < 1e-13);
  CHECK((q.adjoint() - q).norm() < 1e-13);
  Matrix tm = time_reversal_matrix(g);
  // antiunitary T w = T_m conj(w) with T^2 = -1 (Kramers)
  CHECK((tm * tm.conjugate() + Matrix::Identity(d, d)).norm() < 1e-12);
  // T commutes with charge: T_m conj(Q) = Q T_m
  CHECK((tm * q.conjugate() - q * tm).norm() < 1e-12);
}
