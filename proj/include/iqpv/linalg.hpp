#pragma once
// Nambu-space linear algebra: CAR bracket, particle-hole conjugation gamma,
// orthonormal-frame subspaces, the two orthogonality notions, CAR transpose.

#include <Eigen/Dense>
#include <complex>
#include <memory>
#include <stdexcept>
#include <vector>

namespace iqpv {

using cplx = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;

// Default tolerance for subspace equality (projector Frobenius distance).
// Overridable through the BOTTFORGE_TOL environment variable.
double default_tol();

// Field operator space C^{2n} with ordered basis (c_1..c_n, c^+_1..c^+_n)
// in the standard case.  The bracket matrix S defines {w,w'} = w^T S w';
// it must satisfy S = S^T and S conj(S) = Id so that gamma(w) = S conj(w)
// is an antilinear involution.
struct NambuSpace {
  Eigen::Index bands = 0;       // n; dim = 2n
  Matrix bracket;               // S, (2n)x(2n)

  Eigen::Index dim() const { return 2 * bands; }

  // standard layout: S = [[0,I],[I,0]]
  static std::shared_ptr<const NambuSpace> standard(Eigen::Index n);
  // doubled layout C^2 (x) W: S = kron(I2, S_W)
  static std::shared_ptr<const NambuSpace> doubled(const std::shared_ptr<const NambuSpace>& w);
  // arbitrary bracket (validated)
  static std::shared_ptr<const NambuSpace> with_bracket(Matrix S);
};

using SpacePtr = std::shared_ptr<const NambuSpace>;

cplx car_bracket(const NambuSpace& sp, const Vector& w, const Vector& wp);
Vector gamma(const NambuSpace& sp, const Vector& w);

// CAR transpose: {X^Tc w, w'} = {w, X w'}  =>  X^Tc = S X^T S^{-1}, S^{-1} = conj(S).
Matrix car_transpose(const NambuSpace& sp, const Matrix& x);
// tau(g) = (g^{-1})^Tc for invertible (here: unitary) g.
Matrix tau_car(const NambuSpace& sp, const Matrix& g);

// QR-orthonormalization of a full-column-rank matrix.
Matrix orthonormalize(const Matrix& cols);

// Subspace of a NambuSpace held as an orthonormal frame.
class Subspace {
 public:
  Subspace() = default;
  Subspace(SpacePtr sp, Matrix frame_cols);       // orthonormalizes, full rank required

  static Subspace from_columns(SpacePtr sp, const Matrix& cols);  // rank-revealing
  static Subspace span_of_basis_vectors(SpacePtr sp, const std::vector<Eigen::Index>& idx);

  const SpacePtr& space() const { return sp_; }
  const Matrix& frame() const { return frame_; }
  Eigen::Index dim() const { return frame_.cols(); }
  Eigen::Index ambient_dim() const { return frame_.rows(); }

  Matrix projector() const { return frame_ * frame_.adjoint(); }
  double distance(const Subspace& o) const;       // Frobenius distance of projectors
  bool same_as(const Subspace& o, double tol = default_tol()) const;
  bool contains(const Vector& w, double tol = default_tol()) const;

  Subspace complement() const;                    // Hermitian complement L^c
  Subspace annihilator() const;                   // CAR annihilator L^perp = gamma(L^c)
  Subspace map_by(const Matrix& g) const;         // g.L, re-orthonormalized

  // ||F^T S F||: zero iff the subspace is isotropic for the bracket.
  double lagrangian_residual() const;

 private:
  SpacePtr sp_;
  Matrix frame_;
};

// A cap B via the nullspace of (Id-P_A) + (Id-P_B); eigenvalue gap threshold 1e-8.
Subspace intersect(const Subspace& a, const Subspace& b, double gap = 1e-8);

// Eigenspace of a normal operator for a given eigenvalue.
Subspace eigenspace(SpacePtr sp, const Matrix& op, cplx eigenvalue, double gap = 1e-8);

// Modified CAR structure used to turn an imaginary generator K into a real one:
// u0 = (Id - I K)/sqrt(2); {w,w'}~ = {u0 w, u0 w'}.
struct ModifiedCar {
  Matrix u0;
  Matrix bracket;   // u0^T S u0
  SpacePtr space;   // same dimension, modified bracket
};
ModifiedCar modified_car(const NambuSpace& sp, const Matrix& I, const Matrix& K);

double spectral_norm(const Matrix& m);

}  // namespace iqpv
