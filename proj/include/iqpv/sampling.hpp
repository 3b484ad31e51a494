#pragma once
// Random members of the classifying spaces, obtained by moving a verified
// base point with unitaries from the commutant of the generator set.

#include "iqpv/periodicity.hpp"

#include <random>

namespace iqpv {

using Rng = std::mt19937_64;

// exp(X) with X anti-Hermitian, projected onto the commutant of the given
// operators; with car_real also onto the bracket-preserving Lie algebra.
Matrix random_commutant_unitary(const NambuSpace& sp, const std::vector<Matrix>& ops,
                                bool car_real, Rng& rng, double scale = 1.0);

// Random member of C_s(n) (or R_s(n) with lagrangian = true) for a built set.
Subspace random_member(const GeneratorSet& g, Rng& rng, bool lagrangian = false);

// Random member of the big space of a doubling context: pseudo-symmetric under
// J_1..J_s, I, K (image of C_s under the doubling map, moved by a commutant
// unitary of the full family).
Subspace random_big_member(const DoubledContext& ctx, Rng& rng, bool lagrangian = false);

}  // namespace iqpv
