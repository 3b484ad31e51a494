#pragma once
// Closed-form classification data: the periodic table over spheres, the
// classifying spaces, minimal multiplicities, stability bounds, and the list
// of potentially unstable low-multiplicity cases.

#include "iqpv/clifford.hpp"

#include <limits>

namespace iqpv {

struct GroupLabel {
  enum Kind { Zero, Z, Z2, Finite } kind = Zero;
  long count = 0;  // for Finite: number of elements (a set, not a group)
  std::string str() const;
  bool operator==(const GroupLabel& o) const {
    return kind == o.kind && (kind != Finite || count == o.count);
  }
};

// Minimal band multiplicity m_s of the real sequence; m_{s+8} = 16 m_s.
long min_multiplicity(int s);

// Homotopy classes [S^{dx,dk}, fibers] in the stable regime.  For dx=dk=0 the
// answer is a finite set depending on n; pass n to resolve it (classes A, AII,
// AI), otherwise n is ignored.
GroupLabel periodic_table_entry(SymmetryClass cls, int dx, int dk, Eigen::Index n = -1);

struct SpacePair {
  std::string c_space;  // complex classifying space at band count n
  std::string r_space;  // real subspace of bracket-compatible members
};
SpacePair classifying_space(SymmetryClass cls, Eigen::Index n);

struct StabilityBounds {
  int d1 = 0;              // bijective range: dx+dk < d1
  std::string d1_case;
  int d2 = -1;             // equivariant enhancement: dx < d2 (-1: not applicable)
  std::string d2_case;
};
// p,q: optional splitting refinement where the classifying space splits into
// Grassmannian components; defaults to the balanced split.
StabilityBounds stability_bounds(SymmetryClass cls, Eigen::Index n, int p = -1, int q = -1);

// Bounds under addition of q trivial valence/conduction pairs: the induced map
// is bijective iff dim M < dim_strict and dim M^{Z2} < fixed_strict.
struct BandAdditionBounds {
  int dim_strict = 0;
  int fixed_strict = std::numeric_limits<int>::max();
};
BandAdditionBounds band_addition_bounds(SymmetryClass cls, int q);

struct UnstableCase {
  SymmetryClass cls;
  int dx, dk;
  char param;              // 'r' (multiplicity) or 'q' (valence pairs)
  int max_bad;             // bounds fail for param <= max_bad
  std::string stable_entry, actual_entry;  // annotations for dx=0, param=1 cells
};
// All (dx,dk), dx < dk <= 3 cells where the stability bounds fail for small
// parameter values; derived from the bounds, not transcribed.
std::vector<UnstableCase> unstable_cases();

std::string render_periodic_table();
std::string render_unstable_table();

}  // namespace iqpv
