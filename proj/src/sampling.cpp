#include "iqpv/sampling.hpp"

#include <unsupported/Eigen/MatrixFunctions>

namespace iqpv {

Matrix random_commutant_unitary(const NambuSpace& sp, const std::vector<Matrix>& ops,
                                bool car_real, Rng& rng, double scale) {
  Eigen::Index d = sp.dim();
  std::normal_distribution<double> gauss(0.0, 1.0);
  Matrix x(d, d);
  for (Eigen::Index i = 0; i < d; ++i)
    for (Eigen::Index j = 0; j < d; ++j) x(i, j) = cplx(gauss(rng), gauss(rng));
  x = 0.5 * (x - x.adjoint()).eval();
  // conjugation by a unitary generator is an involutive superoperator; the
  // averages below are commuting projections onto its fixed space
  for (const Matrix& j : ops) x = 0.5 * (x + j * x * j.inverse()).eval();
  if (car_real) x = 0.5 * (x - sp.bracket * x.transpose() * sp.bracket.conjugate()).eval();
  x *= scale / std::max(1.0, x.norm());
  return x.exp();
}

Subspace random_member(const GeneratorSet& g, Rng& rng, bool lagrangian) {
  Subspace a0 = base_point(g);
  Matrix u = random_commutant_unitary(*g.space, g.J, lagrangian, rng, 2.0);
  return a0.map_by(u);
}

Subspace random_big_member(const DoubledContext& ctx, Rng& rng, bool lagrangian) {
  // seed: doubled image of the small base point (only defined for built sets)
  GeneratorSet built = build_generators(ctx.small_cls, ctx.small_space->bands);
  Subspace a0 = double_subspace(base_point(built), ctx);
  std::vector<Matrix> all = ctx.J;
  all.push_back(ctx.I);
  all.push_back(ctx.K);
  Matrix u = random_commutant_unitary(*ctx.big_space, all, lagrangian, rng, 2.0);
  return a0.map_by(u);
}

}  // namespace iqpv
