#pragma once
// The diagonal (geodesic) one-parameter family beta_t and suspension of
// sampled bundles, in momentum-type and position-type variants.

#include "iqpv/periodicity.hpp"
#include "iqpv/spaces.hpp"

namespace iqpv {

enum class SuspensionKind { Momentum, Position };

struct BottContext {
  SuspensionKind kind = SuspensionKind::Momentum;
  SpacePtr space;
  std::vector<Matrix> gens;   // pseudo-symmetries preserved along the family
  Matrix K;                   // the generator being traded for the parameter
  Subspace e_plus, e_minus;   // E_{+i}(K), E_{-i}(K): endpoints beta_0, beta_1

  // Momentum-type: K imaginary, from a doubling context (gens = J_1..J_s, I).
  static BottContext momentum(const DoubledContext& ctx);
  // Position-type: K real, the last generator of a class-s set (s >= 1).
  static BottContext position(const GeneratorSet& g);
};

// J(A) = i(Pi_A - Pi_{A^c}).
Matrix j_of(const Subspace& a);

// Rotation implementing the family: exp((t pi/2) K J(A)) in closed form,
// using (K J(A))^2 = -Id on members.
Matrix geodesic_rotation(const Subspace& a, const BottContext& ctx, double t);

// beta_t(A) = geodesic_rotation(A,t) . E_{+i}(K).  Checks that A satisfies the
// K pseudo-symmetry first.
Subspace beta(const Subspace& a, const BottContext& ctx, double t);

// Left inverse of the square of the diagonal map, defined on geodesic points:
// p(beta_t(A)) = tau_car(sigma)^{-1} . beta_t(A) with sigma = geodesic_rotation(A,t),
// satisfying p(beta_t(A)) = beta_{2t}(A).  Requires a momentum context whose
// input class index s+2 has s in {2,6} mod 8 (unitary-symmetry classes).
Subspace squaring_projection_on_geodesic(const Subspace& a, const BottContext& ctx,
                                         double t);

// Suspend a sampled bundle: fibers must already live in ctx's ambient space and
// satisfy its preconditions.  Momentum-type: bundle over S~M with fibers
// beta_t(A_k) and poles E_{+-i}(K); position-type: bundle over SM.
SampledBundle suspend(const SampledBundle& b, const BottContext& ctx, int t_half_res);

// Convenience pipeline for a class-s bundle in the standard layout: doubles the
// fibers through the (1,1) map and suspends momentum-type; output class s+1.
SampledBundle suspend_bundle_momentum(const SampledBundle& b, int t_half_res);
// Position-type pipeline: trades the last generator; output class s-1.
SampledBundle suspend_bundle_position(const SampledBundle& b, int t_half_res);

}  // namespace iqpv
