#include "iqpv/linalg.hpp"

#include <cstdlib>
#include <unsupported/Eigen/KroneckerProduct>

namespace iqpv {

double default_tol() {
  static const double tol = [] {
    if (const char* env = std::getenv("BOTTFORGE_TOL")) {
      double v = std::atof(env);
      if (v > 0) return v;
    }
    return 1e-9;
  }();
  return tol;
}

double spectral_norm(const Matrix& m) {
  if (m.size() == 0) return 0.0;
  return m.jacobiSvd().singularValues()(0);
}

static void check_bracket(const Matrix& s) {
  if (s.rows() != s.cols()) throw std::invalid_argument("bracket must be square");
  if ((s - s.transpose()).norm() > 1e-9)
    throw std::invalid_argument("bracket must be symmetric");
  Matrix id = Matrix::Identity(s.rows(), s.cols());
  if ((s * s.conjugate() - id).norm() > 1e-9)
    throw std::invalid_argument("bracket must satisfy S conj(S) = Id");
}

std::shared_ptr<const NambuSpace> NambuSpace::standard(Eigen::Index n) {
  auto sp = std::make_shared<NambuSpace>();
  sp->bands = n;
  sp->bracket = Matrix::Zero(2 * n, 2 * n);
  sp->bracket.block(0, n, n, n) = Matrix::Identity(n, n);
  sp->bracket.block(n, 0, n, n) = Matrix::Identity(n, n);
  return sp;
}

std::shared_ptr<const NambuSpace> NambuSpace::doubled(const SpacePtr& w) {
  auto sp = std::make_shared<NambuSpace>();
  sp->bands = 2 * w->bands;
  sp->bracket = Eigen::kroneckerProduct(Matrix::Identity(2, 2), w->bracket);
  return sp;
}

std::shared_ptr<const NambuSpace> NambuSpace::with_bracket(Matrix s) {
  check_bracket(s);
  if (s.rows() % 2 != 0) throw std::invalid_argument("dimension must be even");
  auto sp = std::make_shared<NambuSpace>();
  sp->bands = s.rows() / 2;
  sp->bracket = std::move(s);
  return sp;
}

cplx car_bracket(const NambuSpace& sp, const Vector& w, const Vector& wp) {
  return (w.transpose() * sp.bracket * wp)(0);
}

Vector gamma(const NambuSpace& sp, const Vector& w) { return sp.bracket * w.conjugate(); }

Matrix car_transpose(const NambuSpace& sp, const Matrix& x) {
  return sp.bracket * x.transpose() * sp.bracket.conjugate();
}

Matrix tau_car(const NambuSpace& sp, const Matrix& g) {
  return car_transpose(sp, g.inverse());
}

Matrix orthonormalize(const Matrix& cols) {
  if (cols.cols() == 0) return cols;
  // keep already-orthonormal frames untouched (serialization round trips)
  Matrix g = cols.adjoint() * cols;
  if ((g - Matrix::Identity(cols.cols(), cols.cols())).norm() < 1e-13) return cols;
  Eigen::HouseholderQR<Matrix> qr(cols);
  Matrix q = qr.householderQ() * Matrix::Identity(cols.rows(), cols.cols());
  // guard against silent rank loss
  Matrix r = q.adjoint() * cols;
  for (Eigen::Index i = 0; i < r.cols(); ++i)
    if (std::abs(r(i, i)) < 1e-10)
      throw std::invalid_argument("orthonormalize: rank-deficient frame");
  return q;
}

Subspace::Subspace(SpacePtr sp, Matrix frame_cols) : sp_(std::move(sp)) {
  if (frame_cols.rows() != sp_->dim())
    throw std::invalid_argument("frame has wrong ambient dimension");
  frame_ = orthonormalize(frame_cols);
}

Subspace Subspace::from_columns(SpacePtr sp, const Matrix& cols) {
  Eigen::ColPivHouseholderQR<Matrix> qr(cols);
  qr.setThreshold(1e-10);
  Eigen::Index r = qr.rank();
  Matrix q = qr.householderQ() * Matrix::Identity(cols.rows(), r);
  Subspace out;
  out.sp_ = std::move(sp);
  out.frame_ = q;
  return out;
}

Subspace Subspace::span_of_basis_vectors(SpacePtr sp, const std::vector<Eigen::Index>& idx) {
  Matrix f = Matrix::Zero(sp->dim(), static_cast<Eigen::Index>(idx.size()));
  for (size_t j = 0; j < idx.size(); ++j) f(idx[j], static_cast<Eigen::Index>(j)) = 1.0;
  return Subspace(std::move(sp), f);
}

double Subspace::distance(const Subspace& o) const {
  return (projector() - o.projector()).norm();
}

bool Subspace::same_as(const Subspace& o, double tol) const {
  return dim() == o.dim() && distance(o) < tol;
}

bool Subspace::contains(const Vector& w, double tol) const {
  double nw = w.norm();
  if (nw == 0) return true;
  return (projector() * w - w).norm() / nw < tol;
}

Subspace Subspace::complement() const {
  Eigen::Index d = sp_->dim(), r = frame_.cols();
  Eigen::HouseholderQR<Matrix> qr(frame_);
  Matrix qfull = qr.householderQ() * Matrix::Identity(d, d);
  Subspace out;
  out.sp_ = sp_;
  out.frame_ = qfull.rightCols(d - r);
  return out;
}

Subspace Subspace::annihilator() const {
  Subspace c = complement();
  Subspace out;
  out.sp_ = sp_;
  out.frame_ = orthonormalize(sp_->bracket * c.frame_.conjugate());
  return out;
}

Subspace Subspace::map_by(const Matrix& g) const {
  Subspace out;
  out.sp_ = sp_;
  out.frame_ = orthonormalize(g * frame_);
  return out;
}

double Subspace::lagrangian_residual() const {
  return (frame_.transpose() * sp_->bracket * frame_).norm();
}

Subspace intersect(const Subspace& a, const Subspace& b, double gap) {
  Eigen::Index d = a.ambient_dim();
  Matrix id = Matrix::Identity(d, d);
  Matrix m = (id - a.projector()) + (id - b.projector());
  Eigen::SelfAdjointEigenSolver<Matrix> es(m);
  Eigen::Index r = 0;
  while (r < d && es.eigenvalues()(r) < gap) ++r;
  Subspace out = Subspace::from_columns(a.space(), es.eigenvectors().leftCols(r));
  return out;
}

Subspace eigenspace(SpacePtr sp, const Matrix& op, cplx eigenvalue, double gap) {
  Matrix shifted = op - eigenvalue * Matrix::Identity(op.rows(), op.cols());
  Eigen::SelfAdjointEigenSolver<Matrix> es(shifted.adjoint() * shifted);
  Eigen::Index r = 0;
  // eigenvalues of shifted^+ shifted carry absolute error ~ eps * ||op||^2, so
  // the squared-gap cut is taken at gap itself rather than gap^2
  while (r < op.rows() && es.eigenvalues()(r) < gap) ++r;
  if (r == 0) throw std::invalid_argument("eigenspace: eigenvalue not present");
  return Subspace::from_columns(std::move(sp), es.eigenvectors().leftCols(r));
}

ModifiedCar modified_car(const NambuSpace& sp, const Matrix& I, const Matrix& K) {
  ModifiedCar out;
  Eigen::Index d = sp.dim();
  out.u0 = (Matrix::Identity(d, d) - I * K) / std::sqrt(2.0);
  out.bracket = out.u0.transpose() * sp.bracket * out.u0;
  out.space = NambuSpace::with_bracket(out.bracket);
  return out;
}

}  // namespace iqpv
