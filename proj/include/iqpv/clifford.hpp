#pragma once
// Pseudo-symmetry generator sets for the ten symmetry classes, membership in
// the associated classifying spaces, and the flattened Hamiltonian.

#include "iqpv/linalg.hpp"

#include <optional>
#include <string>

namespace iqpv {

enum class SymmetryClass { D, DIII, AII, CII, C, CI, AI, BDI, A, AIII };

// Index s in the eightfold sequence; -1 for the complex classes.
int kitaev_index(SymmetryClass c);
bool is_complex_class(SymmetryClass c);
SymmetryClass class_from_index(int s);
std::string class_name(SymmetryClass c);
std::optional<SymmetryClass> class_from_name(const std::string& name);

// Minimal band multiplicity for which the generator set exists.
Eigen::Index min_bands(SymmetryClass c);

struct GeneratorSet {
  SpacePtr space;
  SymmetryClass cls = SymmetryClass::D;
  std::vector<Matrix> J;          // pseudo-symmetries J_1..J_s
  // For doubled classes (s>=4) the first `true_syms` restricted operators on the
  // halved space are genuine symmetries rather than pseudo-symmetries; tracked
  // by the periodicity layer, not here.
  int s() const { return static_cast<int>(J.size()); }
};

// n = number of bands; throws if n is not a multiple of min_bands(cls).
GeneratorSet build_generators(SymmetryClass cls, Eigen::Index n);

struct VerifyReport {
  double clifford = 0;    // max spectral norm of J_l J_m + J_m J_l + 2 delta_lm
  double unitarity = 0;   // max ||J^+ J - Id||
  double car_real = 0;    // max ||J^T S J - S||  (all class generators are real)
  double max_residual() const { return std::max({clifford, unitarity, car_real}); }
  bool ok(double tol = 1e-12) const { return max_residual() < tol; }
};
VerifyReport verify_generator_set(const GeneratorSet& g);
// Same checks for an arbitrary operator list with given reality signs
// (+1 bracket-preserving, -1 bracket-reversing).
VerifyReport verify_clifford_family(const NambuSpace& sp, const std::vector<Matrix>& ops,
                                    const std::vector<int>& reality);

struct MembershipReport {
  double pseudo_sym = 0;     // max ||F^+ J F|| over generators
  double lagrangian = 0;     // ||F^T S F||
  bool half_dim = false;     // dim A == bands
  bool in_cs(double tol = default_tol()) const { return half_dim && pseudo_sym < tol; }
  bool in_rs(double tol = default_tol()) const { return in_cs(tol) && lagrangian < tol; }
};
MembershipReport membership(const Subspace& a, const GeneratorSet& g);
MembershipReport membership(const Subspace& a, const std::vector<Matrix>& pseudo_syms);

// H = -Pi_A + Pi_{A^c} = Id - 2 Pi_A.
Matrix flattened_hamiltonian(const Subspace& a);

// Operators recoverable from a generator set in the standard layout:
// charge Q = i J_2 J_1 (needs s >= 2), time reversal T = gamma J_1 (antiunitary,
// returned as the matrix of its linear part: T w = T_m conj(w); needs s >= 1).
Matrix charge_operator(const GeneratorSet& g);
Matrix time_reversal_matrix(const GeneratorSet& g);

// Reference base point A_0 in R_s(n) for the built generator sets.
Subspace base_point(const GeneratorSet& g);

}  // namespace iqpv
