// Acceptance gate: one pass/fail line per criterion, nonzero exit on failure.

#include "iqpv/invariants.hpp"
#include "iqpv/sampling.hpp"
#include "iqpv/tables.hpp"

#include <chrono>
#include <cstdio>
#include <fstream>
#include <sstream>

using namespace iqpv;

namespace {

Rng rng(20260823);

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return "<missing golden file>";
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

// U(1) field strength of the analytic valence line over a rectangular
// (polar, azimuthal) grid; shares nothing with chern_number's sphere sample
int lattice_chern_oracle(bool spin_up, int n) {
  auto v = [&](int i, int j) {
    double k0 = -M_PI / 2 + M_PI * i / n;
    double k1 = -M_PI + 2 * M_PI * (j % n) / n;
    return qsh_valence_vector(k0, k1, spin_up);
  };
  double sum = 0;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const int ci[4] = {i, i, i + 1, i + 1};
      const int cj[4] = {j, j + 1, j + 1, j};
      cplx hol = 1.0;
      for (int e = 0; e < 4; ++e) {
        cplx link = v(ci[e], cj[e]).dot(v(ci[(e + 1) % 4], cj[(e + 1) % 4]));
        hol *= link / std::abs(link);
      }
      sum += std::arg(hol);
    }
  return static_cast<int>(std::lround(sum / (2 * M_PI)));
}

bool criterion_generator_sets() {
  for (int s = 0; s < 8; ++s) {
    SymmetryClass cls = class_from_index(s);
    for (long n : {min_multiplicity(s), 2 * min_multiplicity(s)}) {
      auto t0 = std::chrono::steady_clock::now();
      GeneratorSet g = build_generators(cls, n);
      VerifyReport rep = verify_generator_set(g);
      double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
      if (rep.max_residual() >= 1e-12 || secs >= 1.0) return false;
    }
  }
  return true;
}

bool criterion_diagonal_map() {
  for (SymmetryClass cls : {SymmetryClass::D, SymmetryClass::DIII, SymmetryClass::AII}) {
    GeneratorSet g = build_generators(cls, min_bands(cls));
    DoubledContext dctx = DoubledContext::extend(g);
    BottContext ctx = BottContext::momentum(dctx);
    for (int trial = 0; trial < 50; ++trial) {
      Subspace a = random_big_member(dctx, rng, /*lagrangian=*/true);
      if (beta(a, ctx, 0.0).distance(ctx.e_plus) >= 1e-10) return false;
      if (beta(a, ctx, 1.0).distance(ctx.e_minus) >= 1e-10) return false;
      if (beta(a, ctx, 0.5).distance(a) >= 1e-10) return false;
      Subspace ap = a.annihilator();
      for (double t : {0.1, 0.3, 0.5})
        if (beta(a, ctx, t).annihilator().distance(beta(ap, ctx, 1.0 - t)) >= 1e-10)
          return false;
    }
  }
  return true;
}

bool criterion_periodicity() {
  for (SymmetryClass cls : {SymmetryClass::D, SymmetryClass::DIII, SymmetryClass::AII}) {
    GeneratorSet g = build_generators(cls, min_bands(cls));
    DoubledContext ctx = DoubledContext::extend(g);
    for (int trial = 0; trial < 9; ++trial) {
      Subspace a = random_member(g, rng);
      if (reduce_11(double_11(a, ctx), ctx).distance(a) >= 1e-9) return false;
      Subspace big = random_big_member(ctx, rng);
      if (double_11(reduce_11(big, ctx), ctx).distance(big) >= 1e-9) return false;
      auto dims = four_subspace_dims(big, ctx);
      if (dims[0] + dims[1] + dims[2] + dims[3] != ctx.big_space->dim()) return false;
    }
  }
  return true;
}

bool criterion_chain_example() {
  for (double alpha : {0.0, 0.6}) {
    ExampleBundle ex = build_d_to_diii(32, alpha);
    for (int i = 0; i < ex.bundle.space.size(); ++i) {
      Subspace cf(ex.bundle.gens.space, ex.closed_form[i]);
      if (ex.bundle.fibers[i].distance(cf) >= 1e-10) return false;
    }
    if (!check_bundle(ex.bundle).ok(1e-10)) return false;
  }
  ExampleBundle ex = build_d_to_diii(32, 0.0);
  for (bool up : {true, false}) {
    ClassD1dResult r = class_d_1d_invariant(kitaev_spin_sector(ex, up), ex.bundle.space);
    if (!r.nontrivial) return false;
  }
  return true;
}

bool criterion_qsh_example() {
  const int res = 32;
  ExampleBundle ex = build_diii_to_aii(res);
  KaneMeleResult km = kane_mele_zero_locus(ex.bundle);
  if (km.parity != 1) return false;
  double cell = 2 * M_PI / res;
  int interior = 0;
  for (int i : km.zero_points) {
    if (i < 2) continue;  // structural pole zeros
    if (std::abs(std::abs(ex.bundle.space.points[i](0)) - M_PI / 2) > cell / 2 + 1e-12)
      return false;  // a zero off the two expected columns
    ++interior;
  }
  if (interior != 2 * (res - 1)) return false;  // a column row is missing
  ChernResult up = chern_number(ex.bundle.space, qsh_spin_valence_frames(ex, true));
  ChernResult dn = chern_number(ex.bundle.space, qsh_spin_valence_frames(ex, false));
  if (std::abs(up.value) != 1 || up.value != -dn.value) return false;
  if (up.integrality > 1e-6 || dn.integrality > 1e-6) return false;
  return lattice_chern_oracle(true, 64) == up.value &&
         lattice_chern_oracle(false, 64) == dn.value;
}

bool criterion_squaring() {
  GeneratorSet g = build_generators(SymmetryClass::AII, min_bands(SymmetryClass::AII));
  DoubledContext dctx = DoubledContext::extend(g);
  BottContext ctx = BottContext::momentum(dctx);
  for (int trial = 0; trial < 20; ++trial) {
    Subspace a = random_big_member(dctx, rng, /*lagrangian=*/true);
    for (double t : {0.0, 0.1, 0.25, 0.4, 0.5})
      if (squaring_projection_on_geodesic(a, ctx, t).distance(beta(a, ctx, 2 * t)) >= 1e-10)
        return false;
  }
  return true;
}

bool criterion_position_type() {
  for (SymmetryClass cls : {SymmetryClass::DIII, SymmetryClass::AII, SymmetryClass::CII}) {
    GeneratorSet g = build_generators(cls, min_bands(cls));
    BottContext ctx = BottContext::position(g);
    for (int trial = 0; trial < 7; ++trial) {
      Subspace a = random_member(g, rng, /*lagrangian=*/true);
      for (double t : {0.15, 0.5, 0.85})
        if (beta(a, ctx, t).annihilator().distance(beta(a.annihilator(), ctx, t)) >= 1e-10)
          return false;
    }
  }
  return true;
}

bool criterion_tables() {
  if (render_periodic_table() != slurp(std::string(IQPV_DATA_DIR) + "/golden/periodic_table.txt"))
    return false;
  if (render_unstable_table() != slurp(std::string(IQPV_DATA_DIR) + "/golden/unstable_table.txt"))
    return false;
  struct Row { SymmetryClass cls; long n; int d1; int d2; };
  const Row rows[] = {
      {SymmetryClass::D, 1, 3, 1},     {SymmetryClass::DIII, 2, 4, 4},
      {SymmetryClass::AII, 2, 1, 3},   {SymmetryClass::CII, 4, 4, 6},
      {SymmetryClass::C, 4, 3, 3},     {SymmetryClass::CI, 4, 2, 1},
      {SymmetryClass::AI, 4, 3, 1},    {SymmetryClass::BDI, 8, 2, 0},
      {SymmetryClass::A, 4, 5, -1},    {SymmetryClass::AIII, 2, 4, -1}};
  for (const Row& r : rows) {
    StabilityBounds b = stability_bounds(r.cls, r.n);
    if (b.d1 != r.d1 || b.d2 != r.d2) return false;
  }
  for (int dx = 0; dx <= 12; ++dx)
    for (int dk = 0; dk + dx <= 12; ++dk) {
      if (dx + dk < 1) continue;
      for (int s = 0; s < 8; ++s) {
        GroupLabel here = periodic_table_entry(class_from_index(s), dx, dk);
        if (!(periodic_table_entry(class_from_index((s + 1) % 8), dx, dk + 1) == here))
          return false;
        if (!(periodic_table_entry(class_from_index((s + 7) % 8), dx + 1, dk) == here))
          return false;
      }
    }
  return !unstable_cases().empty();
}

bool criterion_robustness() {
  // refinement 16 -> 32 leaves every integer invariant unchanged
  ExampleBundle q16 = build_diii_to_aii(16);
  ExampleBundle q32 = build_diii_to_aii(32);
  if (kane_mele_zero_locus(q16.bundle).parity != kane_mele_zero_locus(q32.bundle).parity)
    return false;
  int up16 = chern_number(q16.bundle.space, qsh_spin_valence_frames(q16, true)).value;
  int up32 = chern_number(q32.bundle.space, qsh_spin_valence_frames(q32, true)).value;
  if (up16 != up32) return false;
  if (chiral_winding(build_d_to_diii(16, 0.0).bundle) !=
      chiral_winding(build_d_to_diii(32, 0.0).bundle))
    return false;
  // random per-fiber gauge transformations
  std::vector<Matrix> frames = qsh_spin_valence_frames(q16, true);
  std::uniform_real_distribution<double> ph(-M_PI, M_PI);
  for (Matrix& f : frames) f *= std::exp(cplx(0, ph(rng)));
  return chern_number(q16.bundle.space, frames).value == up16;
}

}  // namespace

int main() {
  auto t0 = std::chrono::steady_clock::now();
  struct Criterion {
    const char* name;
    bool (*fn)();
  };
  const Criterion list[] = {
      {"generator sets verify at n = m_s and 2 m_s", criterion_generator_sets},
      {"diagonal map endpoints, midpoint, equivariance", criterion_diagonal_map},
      {"(1,1) doubling and reduction are mutually inverse", criterion_periodicity},
      {"chain example matches its closed form", criterion_chain_example},
      {"QSH example: Kane-Mele locus and per-spin Chern", criterion_qsh_example},
      {"squaring projection halves the geodesic parameter", criterion_squaring},
      {"position-type family commutes with the CAR perp", criterion_position_type},
      {"classification tables and shift rules", criterion_tables},
      {"gauge and refinement robustness", criterion_robustness},
  };
  int failed = 0, idx = 0;
  for (const Criterion& c : list) {
    bool ok = false;
    try {
      ok = c.fn();
    } catch (const std::exception& e) {
      std::printf("criterion %d: exception: %s\n", idx + 1, e.what());
    }
    std::printf("criterion %d (%s): %s\n", ++idx, c.name, ok ? "pass" : "FAIL");
    if (!ok) ++failed;
  }
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  bool in_time = secs < 300.0;
  std::printf("runtime: %.1f s (%s)\n", secs, in_time ? "within budget" : "OVER BUDGET");
  std::printf("%d/%d criteria passed\n", static_cast<int>(std::size(list)) - failed,
              static_cast<int>(std::size(list)));
  return (failed == 0 && in_time) ? 0 : 1;
}
