#include "iqpv/worked_examples.hpp"

#include <unsupported/Eigen/KroneckerProduct>

namespace iqpv {

namespace {

const cplx im{0.0, 1.0};

Matrix pauli(int k) {
  Matrix m(2, 2);
  switch (k) {
    case 0: m << 1, 0, 0, 1; break;
    case 1: m << 0, 1, 1, 0; break;
    case 2: m << 0, -im, im, 0; break;
    default: m << 1, 0, 0, -1; break;
  }
  return m;
}

Matrix kron(const Matrix& a, const Matrix& b) {
  return Eigen::kroneckerProduct(a, b).eval();
}

Matrix rotation(const Matrix& kj, double angle) {
  return std::cos(angle) * Matrix::Identity(kj.rows(), kj.cols()) + std::sin(angle) * kj;
}

// ---- QSH closed forms.  Bands (spin, ph): annihilator index 2*spin+ph,
// creators offset by 4.  spin: 0 = up, 1 = down; ph: 0 = p, 1 = h.

Vector a_tilde(double k0, double k1, int spin, double eps) {
  Vector v = Vector::Zero(8);
  double c1 = std::cos(k1 / 2), s1 = std::sin(k1 / 2);
  double c0 = std::cos(k0 / 2), s0 = std::sin(k0 / 2);
  v(2 * spin + 0) = c1 * c0 - im * eps * s1 * s0;            // c_{sigma,p}
  v(2 * (1 - spin) + 1) = im * eps * s1 * c0 - c1 * s0;      // c_{-sigma,h}
  return v;
}

Vector b_tilde(double k0, double k1, int spin, double eps) {
  Vector v = Vector::Zero(8);
  double c1 = std::cos(k1 / 2), s1 = std::sin(k1 / 2);
  double c0 = std::cos(k0 / 2), s0 = std::sin(k0 / 2);
  v(2 * spin + 1) = c1 * c0 + im * eps * s1 * s0;            // c_{sigma,h}
  v(2 * (1 - spin) + 0) = -im * eps * s1 * c0 - c1 * s0;     // c_{-sigma,p}
  return v;
}

// creator part of the fiber: dagger of b_tilde at reflected chain momentum.
// Only k1 flips; the polar rotation by k0 acts the same way on both blocks.
Vector b_dagger_minus_k(double k0, double k1, int spin, double eps) {
  Vector b = b_tilde(k0, -k1, spin, eps);
  Vector v = Vector::Zero(8);
  v.tail(4) = b.head(4).conjugate();
  return v;
}

Matrix qsh_frame(double k0, double k1) {
  Matrix f(8, 4);
  f.col(0) = a_tilde(k0, k1, 0, +1);
  f.col(1) = a_tilde(k0, k1, 1, -1);
  f.col(2) = b_dagger_minus_k(k0, k1, 1, -1);
  f.col(3) = b_dagger_minus_k(k0, k1, 0, +1);
  return f;
}

double qsh_k0(const MomentumSpace& sm, int idx) {
  return M_PI * (suspension_t(sm, idx) - 0.5);
}

}  // namespace

ExampleBundle build_d_to_diii(int res, double alpha) {
  ExampleBundle ex;
  GeneratorSet gens = build_generators(SymmetryClass::DIII, 2);
  ex.I = gens.J[0];
  Matrix m = std::cos(alpha) * pauli(1) + std::sin(alpha) * pauli(3);
  ex.K = im * kron(pauli(1), m);
  Subspace a = Subspace::span_of_basis_vectors(gens.space, {2, 3});
  Matrix kj = ex.K * j_of(a);
  ex.bundle.space = make_sphere(0, 1, res);
  ex.bundle.gens = gens;
  ex.bundle.label = "kitaev-diii";
  for (int j = 0; j < ex.bundle.space.size(); ++j) {
    double k = ex.bundle.space.points[j](0);
    ex.bundle.fibers.push_back(a.map_by(rotation(kj, k / 2)));
    Matrix cf(4, 2);
    cf.setZero();
    for (int spin = 0; spin < 2; ++spin) {
      cf(2 + spin, spin) = std::cos(k / 2);
      for (int rho = 0; rho < 2; ++rho) cf(rho, spin) -= std::sin(k / 2) * m(rho, spin);
    }
    ex.closed_form.push_back(cf);
  }
  return ex;
}

ExampleBundle build_diii_to_aii(int res) {
  ExampleBundle ex;
  GeneratorSet gens = build_generators(SymmetryClass::AII, 4);
  ex.I = gens.J[1];
  ex.K = im * kron(Matrix::Identity(2, 2), kron(pauli(1), pauli(1)));
  MomentumSpace circle = make_sphere(0, 1, res);
  std::vector<Subspace> base;
  for (int i = 0; i < circle.size(); ++i) {
    double k1 = circle.points[i](0);
    base.push_back(Subspace::from_columns(gens.space, qsh_frame(0.0, k1)));
  }
  ex.bundle.space = suspension(circle, res / 2, true);
  ex.bundle.space.label = "S^{0,2}";
  ex.bundle.gens = gens;
  ex.bundle.label = "qsh";
  ex.bundle.fibers.resize(ex.bundle.space.size());
  Subspace eplus = eigenspace(gens.space, ex.K, im);
  Subspace eminus = eigenspace(gens.space, ex.K, -im);
  ex.bundle.fibers[0] = eplus;    // t = 0, k0 = -pi/2
  ex.bundle.fibers[1] = eminus;   // t = 1, k0 = +pi/2
  const int nt = res;
  for (int j = 1; j < nt; ++j)
    for (int i = 0; i < circle.size(); ++i) {
      int idx = 2 + (j - 1) * circle.size() + i;
      double k0 = qsh_k0(ex.bundle.space, idx);
      Matrix kj = ex.K * j_of(base[i]);
      ex.bundle.fibers[idx] = base[i].map_by(rotation(kj, k0 / 2));
    }
  for (int idx = 0; idx < ex.bundle.space.size(); ++idx) {
    double k0 = qsh_k0(ex.bundle.space, idx);
    double k1 = ex.bundle.space.points[idx](0);
    ex.closed_form.push_back(qsh_frame(k0, k1));
  }
  return ex;
}

std::vector<UvPair> kitaev_spin_sector(const ExampleBundle& ex, bool spin_up) {
  std::vector<UvPair> out;
  for (const Matrix& cf : ex.closed_form) {
    if (cf.rows() != 4) throw std::invalid_argument("not a chain example bundle");
    int col = spin_up ? 0 : 1;
    UvPair p;
    p.v = cf(2 + (spin_up ? 0 : 1), col);          // creator of same spin
    p.u = cf(spin_up ? 1 : 0, col);                // annihilator of opposite spin
    // the sector decomposition only holds when the other components vanish
    if (std::abs(cf(spin_up ? 0 : 1, col)) > 1e-12)
      throw std::invalid_argument("spin sectors are mixed (alpha != 0)");
    out.push_back(p);
  }
  return out;
}

Vector qsh_valence_vector(double k0, double k1, bool spin_up) {
  Vector v = spin_up ? b_dagger_minus_k(k0, k1, 0, +1) : b_dagger_minus_k(k0, k1, 1, -1);
  return v / v.norm();
}

std::vector<Matrix> qsh_spin_valence_frames(const ExampleBundle& ex, bool spin_up) {
  std::vector<Matrix> out;
  for (int idx = 0; idx < ex.bundle.space.size(); ++idx) {
    double k0 = qsh_k0(ex.bundle.space, idx);
    double k1 = ex.bundle.space.points[idx](0);
    out.push_back(qsh_valence_vector(k0, k1, spin_up));
  }
  return out;
}

Subspace qsh_spin_sector_plane(const SpacePtr& sp, bool spin_up) {
  if (spin_up) return Subspace::span_of_basis_vectors(sp, {5, 6});
  return Subspace::span_of_basis_vectors(sp, {7, 4});
}

}  // namespace iqpv
