#pragma once
// Two built-in reference models: the 1d time-reversal-invariant superconductor
// generated from a point, and the 2d quantum spin Hall insulator generated
// from it in turn.

#include "iqpv/bott.hpp"

namespace iqpv {

struct ExampleBundle {
  SampledBundle bundle;
  Matrix I, K;                       // the operator pair driving the family
  std::vector<Matrix> closed_form;   // frames from the analytic formulas, per point
};

// Class DIII chain over a circle: ambient C^4, basis (c_up, c_dn, c+_up, c+_dn),
// seed A = span{c+_up, c+_dn}, fibers exp((k/2) K J(A)).A.  alpha deforms K
// within the allowed family (alpha = 0: pure in-plane pairing).
ExampleBundle build_d_to_diii(int res, double alpha = 0.0);

// Class AII insulator over the 2-sphere (suspension grid (k1, t), polar angle
// k0 = pi(t-1/2)): ambient C^8, bands (spin x ph).
ExampleBundle build_diii_to_aii(int res);

// Per-spin (u,v) pair of the chain's spin sector at each momentum:
// quasi-particle u c_{-sigma} + v c+_{sigma} (alpha = 0 sectors only).
struct UvPair { cplx u, v; };
std::vector<UvPair> kitaev_spin_sector(const ExampleBundle& ex, bool spin_up);

// One-dimensional frames of the per-spin valence line bundles of the QSH
// model (closed form), for Chern-number evaluation.
std::vector<Matrix> qsh_spin_valence_frames(const ExampleBundle& ex, bool spin_up);
// Analytic valence vector at angles (k0, k1); used by refinement oracles.
Vector qsh_valence_vector(double k0, double k1, bool spin_up);

// Fixed 2-planes of creators containing the respective spin valence sectors.
Subspace qsh_spin_sector_plane(const SpacePtr& sp, bool spin_up);

}  // namespace iqpv
