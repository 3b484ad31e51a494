#include "iqpv/periodicity.hpp"

#include <unsupported/Eigen/KroneckerProduct>

namespace iqpv {

namespace {
const cplx im{0.0, 1.0};

Matrix kron(const Matrix& a, const Matrix& b) {
  return Eigen::kroneckerProduct(a, b).eval();
}

void finish_small_side(DoubledContext& ctx) {
  ctx.L = im * ctx.I * ctx.K;
  Eigen::Index d = ctx.big_space->dim();
  if ((ctx.L * ctx.L - Matrix::Identity(d, d)).norm() > 1e-10)
    throw std::invalid_argument("iIK is not an involution; bad I/K pair");
}
}  // namespace

DoubledContext DoubledContext::extend(const GeneratorSet& small) {
  DoubledContext ctx;
  Eigen::Index d = small.space->dim();
  ctx.big_space = NambuSpace::doubled(small.space);
  Matrix s1(2, 2), i_blk(2, 2), k_blk(2, 2);
  s1 << 0, 1, 1, 0;
  i_blk << 0, 1, -1, 0;
  k_blk << im, 0, 0, -im;
  Matrix id = Matrix::Identity(d, d);
  for (const Matrix& j : small.J) ctx.J.push_back(kron(s1, j));
  ctx.I = kron(i_blk, id);
  ctx.K = kron(k_blk, id);
  ctx.w_basis = Matrix::Zero(2 * d, d);
  ctx.w_basis.topRows(d) = id;
  ctx.small_space = small.space;
  ctx.small_pseudo = small.J;
  ctx.small_cls = small.cls;
  int s = kitaev_index(small.cls);
  ctx.big_cls = s >= 0 ? class_from_index(s + 2) : small.cls;
  finish_small_side(ctx);
  return ctx;
}

DoubledContext DoubledContext::from_big(const GeneratorSet& big) {
  if (kitaev_index(big.cls) < 4)
    throw std::invalid_argument("intrinsic reduction needs a class with s >= 4");
  DoubledContext ctx;
  ctx.big_space = big.space;
  ctx.big_cls = big.cls;
  ctx.small_cls = class_from_index(kitaev_index(big.cls) - 2);
  ctx.K = im * big.J[0] * big.J[1] * big.J[2];
  ctx.I = big.J[3];
  finish_small_side(ctx);
  Subspace wplus = eigenspace(big.space, ctx.K, im);
  ctx.w_basis = wplus.frame();
  Matrix sw = ctx.w_basis.transpose() * big.space->bracket * ctx.w_basis;
  ctx.small_space = NambuSpace::with_bracket(sw);
  const Matrix& w = ctx.w_basis;
  ctx.small_true.push_back(w.adjoint() * big.J[0] * w);
  ctx.small_true.push_back(w.adjoint() * big.J[1] * w);
  for (int l = 4; l < big.s(); ++l)
    ctx.small_pseudo.push_back(w.adjoint() * ctx.L * big.J[l] * w);
  return ctx;
}

DoubledContext DoubledContext::from_operators(SpacePtr space, std::vector<Matrix> J,
                                              Matrix I, Matrix K) {
  DoubledContext ctx;
  ctx.big_space = std::move(space);
  ctx.J = std::move(J);
  ctx.I = std::move(I);
  ctx.K = std::move(K);
  finish_small_side(ctx);
  Subspace wplus = eigenspace(ctx.big_space, ctx.K, im);
  ctx.w_basis = wplus.frame();
  Matrix sw = ctx.w_basis.transpose() * ctx.big_space->bracket * ctx.w_basis;
  ctx.small_space = NambuSpace::with_bracket(sw);
  for (const Matrix& j : ctx.J)
    ctx.small_pseudo.push_back(ctx.w_basis.adjoint() * ctx.L * j * ctx.w_basis);
  return ctx;
}

Subspace double_subspace(const Subspace& a, const DoubledContext& ctx) {
  if (a.space() != ctx.small_space && a.ambient_dim() != ctx.small_space->dim())
    throw std::invalid_argument("subspace does not live on the halved space");
  Matrix emb = ctx.w_basis * a.frame();
  Matrix emb_c = ctx.w_basis * a.complement().frame();
  Eigen::Index d = ctx.big_space->dim();
  Matrix cols(d, a.ambient_dim());
  cols.leftCols(a.dim()) = emb + ctx.L * emb;
  cols.rightCols(a.ambient_dim() - a.dim()) = emb_c - ctx.L * emb_c;
  return Subspace(ctx.big_space, cols);
}

Subspace reduce_subspace(const Subspace& A, const DoubledContext& ctx) {
  Subspace eplus = eigenspace(ctx.big_space, ctx.L, 1.0);
  Subspace cap = intersect(A, eplus);
  if (2 * cap.dim() != A.dim())
    throw std::invalid_argument("A cap E_{+1}(L) does not have half the dimension of A");
  return Subspace(ctx.small_space, ctx.w_basis.adjoint() * cap.frame());
}

std::array<Eigen::Index, 4> four_subspace_dims(const Subspace& A, const DoubledContext& ctx) {
  Subspace eplus = eigenspace(ctx.big_space, ctx.L, 1.0);
  Subspace eminus = eigenspace(ctx.big_space, ctx.L, -1.0);
  Subspace ac = A.complement();
  return {intersect(A, eplus).dim(), intersect(A, eminus).dim(),
          intersect(ac, eplus).dim(), intersect(ac, eminus).dim()};
}

SmallMembershipReport small_membership(const Subspace& a, const DoubledContext& ctx) {
  SmallMembershipReport rep;
  rep.half_dim = (2 * a.dim() == a.ambient_dim());
  Matrix p = a.projector();
  Matrix q = Matrix::Identity(p.rows(), p.cols()) - p;
  for (const Matrix& j : ctx.small_true)
    rep.true_sym = std::max(rep.true_sym, (q * j * p).norm());
  for (const Matrix& j : ctx.small_pseudo)
    rep.pseudo_sym = std::max(rep.pseudo_sym, (a.frame().adjoint() * j * a.frame()).norm());
  rep.lagrangian = a.lagrangian_residual();
  return rep;
}

}  // namespace iqpv
