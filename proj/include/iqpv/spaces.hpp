#pragma once
// Sampled momentum spaces with an exact index-level involution, and bundles of
// subspaces over them.

#include "iqpv/clifford.hpp"

#include <string>

namespace iqpv {

// A finite sample of a sphere S^{dx,dk} (dimension dx+dk; the involution
// negates the dk momentum-like directions, fixing an S^{dx}).  Points are
// stored in angular coordinates; tau is exact on indices.
struct MomentumSpace {
  int dx = 0, dk = 0;
  std::string label;
  std::vector<Eigen::VectorXd> points;     // angular coordinates
  std::vector<int> tau;                    // involution on indices
  std::vector<int> fixed;                  // tau-fixed indices
  int base = 0;                            // distinguished tau-fixed base point
  std::vector<std::pair<int, int>> edges;  // neighbor pairs
  std::vector<std::vector<int>> faces;     // oriented 2-cells (closed 2-D samples)

  int size() const { return static_cast<int>(points.size()); }
  bool is_fixed(int i) const { return tau[i] == i; }
};

// Supported: dx+dk <= 2.  res = angular resolution (even) of each circle factor.
MomentumSpace make_sphere(int dx, int dk, int res);

// Suspension of a sampled space: points (k, t), t on a grid of 2*half_res+1
// values in [0,1] with poles deduplicated.  Momentum-type sends (k,t) to
// (tau k, 1-t) and swaps the poles; position-type sends (k,t) to (tau k, t).
MomentumSpace suspension(const MomentumSpace& m, int half_res, bool momentum_type);

// t-coordinate of a suspension point (last angular coordinate); poles are 0, 1.
double suspension_t(const MomentumSpace& sm, int idx);

struct SampledBundle {
  MomentumSpace space;
  GeneratorSet gens;               // pseudo-symmetries every fiber must satisfy
  std::vector<Subspace> fibers;    // one per point, in the fixed ambient W
  std::string label;
};

struct BundleReport {
  double membership = 0;        // worst pseudo-symmetry residual over fibers
  double equivariance = 0;      // worst distance fiber(tau k) vs fiber(k)^perp
  double fixed_lagrangian = 0;  // worst Lagrangian residual at tau-fixed points
  double max_neighbor_distance = 0;
  bool ok(double tol = default_tol(), double continuity = 0.9) const {
    return membership < tol && equivariance < tol && fixed_lagrangian < tol &&
           max_neighbor_distance < continuity;
  }
};
BundleReport check_bundle(const SampledBundle& b);

}  // namespace iqpv
