#pragma once
// Doubling and reduction between class s on W and class s+2 on C^2 (x) W,
// including the intrinsic reduction available for s >= 4.

#include "iqpv/clifford.hpp"

namespace iqpv {

// Context tying a "big" space with distinguished operators I (real, I^2=-1) and
// K (imaginary, K^2=-1, IK=-KI) to the halved space W = E_{+i}(K).
struct DoubledContext {
  SpacePtr big_space;
  std::vector<Matrix> J;        // pseudo-symmetries surviving on the big space
  Matrix I, K;                  // the two extra Clifford generators
  Matrix L;                     // i I K; involution whose eigenspaces split members
  Matrix w_basis;               // dim x (dim/2) orthonormal basis of E_{+i}(K)
  SpacePtr small_space;         // W with the restricted bracket
  std::vector<Matrix> small_true;    // restricted genuine symmetries (j a = a)
  std::vector<Matrix> small_pseudo;  // restricted pseudo-symmetries (j a = a^c)
  SymmetryClass big_cls = SymmetryClass::D;
  SymmetryClass small_cls = SymmetryClass::D;

  // Build C^2 (x) W from a class-s set: J_l = sigma1 (x) j_l, I = [[0,1],[-1,0]] (x) Id,
  // K = diag(i,-i) (x) Id.  Members of the big C_{s+2} reduce to members of C_s.
  static DoubledContext extend(const GeneratorSet& small);

  // Intrinsic halving for a class-s set with s >= 4: K = i J1 J2 J3, I = J4.
  static DoubledContext from_big(const GeneratorSet& big);

  // Ad-hoc context from explicit I and K on a given space (used by the worked
  // examples, whose I and K are not in the tensor-product layout).
  static DoubledContext from_operators(SpacePtr space, std::vector<Matrix> J,
                                       Matrix I, Matrix K);
};

// a (in small_space coordinates) -> A = {w + Lw : w in a} + {w' - Lw' : w' in a^c}.
Subspace double_subspace(const Subspace& a, const DoubledContext& ctx);
// A -> projection of A cap E_{+1}(L) onto W, in small_space coordinates.
Subspace reduce_subspace(const Subspace& A, const DoubledContext& ctx);

// Contract-level aliases: the (1,1) move on an extend() context and the
// intrinsic move on a from_big() context.
inline Subspace double_11(const Subspace& a, const DoubledContext& c) { return double_subspace(a, c); }
inline Subspace reduce_11(const Subspace& A, const DoubledContext& c) { return reduce_subspace(A, c); }
inline Subspace double_s4(const Subspace& a, const DoubledContext& c) { return double_subspace(a, c); }
inline Subspace reduce_s4(const Subspace& A, const DoubledContext& c) { return reduce_subspace(A, c); }

// The four-subspace decomposition of a member A: dimensions of
// A cap E_{+1}(L), A cap E_{-1}(L), A^c cap E_{+1}(L), A^c cap E_{-1}(L).
std::array<Eigen::Index, 4> four_subspace_dims(const Subspace& A, const DoubledContext& ctx);

// Membership on the small side: genuine symmetries preserve a, pseudo-symmetries
// map a to its complement.
struct SmallMembershipReport {
  double true_sym = 0;     // max ||(Id - P_a) j P_a|| over genuine symmetries
  double pseudo_sym = 0;
  double lagrangian = 0;
  bool half_dim = false;
  bool ok(double tol = default_tol()) const {
    return half_dim && true_sym < tol && pseudo_sym < tol;
  }
};
SmallMembershipReport small_membership(const Subspace& a, const DoubledContext& ctx);

}  // namespace iqpv
