#include "iqpv/bott.hpp"

namespace iqpv {

namespace {
const cplx im{0.0, 1.0};
}

BottContext BottContext::momentum(const DoubledContext& ctx) {
  BottContext b;
  b.kind = SuspensionKind::Momentum;
  b.space = ctx.big_space;
  b.gens = ctx.J;
  b.gens.push_back(ctx.I);
  b.K = ctx.K;
  b.e_plus = eigenspace(b.space, b.K, im);
  b.e_minus = eigenspace(b.space, b.K, -im);
  return b;
}

BottContext BottContext::position(const GeneratorSet& g) {
  if (g.s() < 1) throw std::invalid_argument("position-type family needs a generator");
  BottContext b;
  b.kind = SuspensionKind::Position;
  b.space = g.space;
  b.gens.assign(g.J.begin(), g.J.end() - 1);
  b.K = g.J.back();
  b.e_plus = eigenspace(b.space, b.K, im);
  b.e_minus = eigenspace(b.space, b.K, -im);
  return b;
}

Matrix j_of(const Subspace& a) {
  Eigen::Index d = a.ambient_dim();
  return im * (2.0 * a.projector() - Matrix::Identity(d, d));
}

Matrix geodesic_rotation(const Subspace& a, const BottContext& ctx, double t) {
  Eigen::Index d = a.ambient_dim();
  Matrix kj = ctx.K * j_of(a);
  if ((kj * kj + Matrix::Identity(d, d)).norm() > 1e-8)
    throw std::invalid_argument("K J(A) does not square to -Id; A violates the K relation");
  double th = t * M_PI / 2.0;
  return std::cos(th) * Matrix::Identity(d, d) + std::sin(th) * kj;
}

Subspace beta(const Subspace& a, const BottContext& ctx, double t) {
  double res = (a.frame().adjoint() * ctx.K * a.frame()).norm();
  if (res > 1e-8)
    throw std::invalid_argument("beta: input does not satisfy the K pseudo-symmetry");
  return ctx.e_plus.map_by(geodesic_rotation(a, ctx, t));
}

Subspace squaring_projection_on_geodesic(const Subspace& a, const BottContext& ctx,
                                         double t) {
  if (ctx.kind != SuspensionKind::Momentum)
    throw std::invalid_argument("squaring projection needs a momentum-type family");
  int s = static_cast<int>(ctx.gens.size()) - 1;
  if (((s % 8) + 8) % 8 != 2 && ((s % 8) + 8) % 8 != 6)
    throw std::invalid_argument("squaring projection defined for s = 2, 6 (mod 8)");
  if (a.lagrangian_residual() > 1e-8)
    throw std::invalid_argument("squaring projection needs a Lagrangian input");
  Matrix sigma = geodesic_rotation(a, ctx, t);
  Matrix u = tau_car(*ctx.space, sigma).inverse() * sigma;
  return ctx.e_plus.map_by(u);
}

SampledBundle suspend(const SampledBundle& b, const BottContext& ctx, int t_half_res) {
  bool momentum = ctx.kind == SuspensionKind::Momentum;
  SampledBundle out;
  out.space = suspension(b.space, t_half_res, momentum);
  out.gens.space = ctx.space;
  out.gens.J = ctx.gens;
  int out_s = static_cast<int>(ctx.gens.size());
  out.gens.cls = is_complex_class(b.gens.cls) ? b.gens.cls : class_from_index(out_s);
  out.label = b.label + (momentum ? "+suspend_k" : "+suspend_x");
  out.fibers.resize(out.space.size());
  out.fibers[0] = ctx.e_plus;
  out.fibers[1] = ctx.e_minus;
  const int n = b.space.size();
  const int nt = 2 * t_half_res;
  for (int j = 1; j < nt; ++j)
    for (int i = 0; i < n; ++i)
      out.fibers[2 + (j - 1) * n + i] = beta(b.fibers[i], ctx, double(j) / nt);
  return out;
}

SampledBundle suspend_bundle_momentum(const SampledBundle& b, int t_half_res) {
  DoubledContext dctx = DoubledContext::extend(b.gens);
  BottContext bctx = BottContext::momentum(dctx);
  SampledBundle doubled;
  doubled.space = b.space;
  doubled.gens.space = dctx.big_space;
  doubled.gens.cls = dctx.big_cls;
  doubled.gens.J = dctx.J;
  doubled.gens.J.push_back(dctx.I);
  doubled.gens.J.push_back(dctx.K);
  doubled.label = b.label + "+double";
  for (const Subspace& f : b.fibers) doubled.fibers.push_back(double_subspace(f, dctx));
  return suspend(doubled, bctx, t_half_res);
}

SampledBundle suspend_bundle_position(const SampledBundle& b, int t_half_res) {
  BottContext bctx = BottContext::position(b.gens);
  return suspend(b, bctx, t_half_res);
}

}  // namespace iqpv
