#pragma once
// Numeric topological invariants: winding number, lattice Chern number,
// Kane-Mele Pfaffian zero locus, and the 1d Z2 index of a single-band
// superconductor.

#include "iqpv/spaces.hpp"
#include "iqpv/worked_examples.hpp"

namespace iqpv {

// Pfaffian of a complex skew-symmetric matrix (even dimension), by
// Parlett-Reid tridiagonalization with pivoting.
cplx pfaffian(Matrix a);

// Winding number of a closed loop of nonzero complex numbers (e.g. dets of a
// unitary family); throws if consecutive phases jump by ~pi or a value is ~0.
int winding_number(const std::vector<cplx>& loop);
int winding_number(const std::vector<Matrix>& unitary_loop);

struct ChernResult {
  double total = 0;        // sum of plaquette field strengths / 2 pi
  int value = 0;           // nearest integer
  double integrality = 0;  // |total - value|
};
// Lattice field strength over the oriented 2-cells of the space; frames give
// the sub-bundle (one matrix of orthonormal columns per point).
ChernResult chern_number(const MomentumSpace& space, const std::vector<Matrix>& frames);

// Valence-block frames A cap E_{+1}(Q) per point, Q = i J_2 J_1 of the
// bundle's generator set.
std::vector<Matrix> valence_frames(const SampledBundle& b);

struct KaneMeleResult {
  std::vector<cplx> pfaffian_values;
  std::vector<int> zero_points;   // indices with |Pf| below threshold
  int parity = 0;                 // tau-orbits of connected zero components, mod 2
                                  // (= half-zone zero count for generic point zeros;
                                  // pole-only components are structural and ignored)
  bool nontrivial() const { return parity == 1; }
};
// Sewing matrix m_ij(k) = <u_i(k), T u_j(k)> on the valence block; relative
// zero threshold 1e-3.
KaneMeleResult kane_mele_zero_locus(const SampledBundle& b);

// Winding of det q(k) over a circle sample, where q(k) is the off-diagonal
// block of the flattened Hamiltonian in the eigenbasis of the chiral operator
// i J_{gen_idx+1}.  Gauge invariant (projector-based).
int chiral_winding(const SampledBundle& b, int gen_idx = 0);

struct ClassD1dResult {
  std::array<cplx, 2> z_fixed;       // v/u at the two tau-fixed momenta (inf -> huge)
  std::array<bool, 2> infinite_type;
  bool nontrivial = false;
};
// uv[i] = quasi-particle amplitudes (u, v) at point i of a circle sample.
ClassD1dResult class_d_1d_invariant(const std::vector<UvPair>& uv,
                                    const MomentumSpace& circle);
// Single-band bundle version: (u, v) read off the 2x1 fiber frames.
ClassD1dResult class_d_1d_invariant(const SampledBundle& b);

}  // namespace iqpv
