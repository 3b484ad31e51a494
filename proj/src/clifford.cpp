#include "iqpv/clifford.hpp"

#include <unsupported/Eigen/KroneckerProduct>

#include <cctype>

namespace iqpv {

namespace {

const cplx im{0.0, 1.0};

Matrix pauli(int k) {
  Matrix m(2, 2);
  switch (k) {
    case 0: m << 1, 0, 0, 1; break;
    case 1: m << 0, 1, 1, 0; break;
    case 2: m << 0, -im, im, 0; break;
    default: m << 1, 0, 0, -1; break;
  }
  return m;
}

Matrix kron(const Matrix& a, const Matrix& b) {
  return Eigen::kroneckerProduct(a, b).eval();
}

Matrix ident(Eigen::Index n) { return Matrix::Identity(n, n); }

// i*sigma2 = [[0,1],[-1,0]], the real quaternion unit used for time reversal.
Matrix isigma2() {
  Matrix m(2, 2);
  m << 0, 1, -1, 0;
  return m;
}

// Linear part of time reversal on band space (annihilator block): i sigma2 (x) Id.
Matrix t_band(Eigen::Index n) {
  if (n % 2 != 0) throw std::invalid_argument("time reversal needs an even band count");
  return kron(isigma2(), ident(n / 2));
}

Matrix charge_matrix(Eigen::Index n) {
  Matrix q = Matrix::Zero(2 * n, 2 * n);
  q.topLeftCorner(n, n) = -ident(n);
  q.bottomRightCorner(n, n) = ident(n);
  return q;
}

Matrix blockdiag(const Matrix& a, const Matrix& b) {
  Matrix m = Matrix::Zero(a.rows() + b.rows(), a.cols() + b.cols());
  m.topLeftCorner(a.rows(), a.cols()) = a;
  m.bottomRightCorner(b.rows(), b.cols()) = b;
  return m;
}

// J = gamma T, as a linear operator: S * conj(T_m), with T_m = diag(t, conj(t)).
Matrix time_reversal_gen(const NambuSpace& sp) {
  Matrix t = t_band(sp.bands);
  Matrix tm = blockdiag(t, t.conjugate());
  return sp.bracket * tm.conjugate();
}

// J = i Q gamma C with antilinear particle-hole twist C w = C_m conj(w),
// C_m = [[0, s_tw^T], [s_tw, 0]] swapping annihilators and creators.
Matrix twisted_ph_gen(const NambuSpace& sp, const Matrix& s_tw) {
  Eigen::Index n = sp.bands;
  Matrix cm = Matrix::Zero(2 * n, 2 * n);
  cm.topRightCorner(n, n) = s_tw.transpose();
  cm.bottomLeftCorner(n, n) = s_tw;
  Matrix gc = sp.bracket * cm.conjugate();
  return im * charge_matrix(n) * gc;
}

// Spin rotation generator j_l = diag(i sigma_l, conj(i sigma_l)) (x) Id on bands.
Matrix spin_gen(Eigen::Index n, int l) {
  Matrix u = kron(im * pauli(l), ident(n / 2));
  return blockdiag(u, u.conjugate());
}

// Small-side generator list for the doubled classes s >= 4 on n0 bands.
std::vector<Matrix> small_side_gens(SymmetryClass cls, const NambuSpace& w0) {
  std::vector<Matrix> j;
  j.push_back(spin_gen(w0.bands, 1));
  j.push_back(spin_gen(w0.bands, 2));
  int s = kitaev_index(cls);
  if (s >= 5) j.push_back(time_reversal_gen(w0));
  if (s >= 6) j.push_back(im * charge_matrix(w0.bands) * j[2]);
  if (s >= 7) {
    Matrix s_tw = kron(ident(2), kron(pauli(1), ident(w0.bands / 4)));
    j.push_back(twisted_ph_gen(w0, s_tw));
  }
  return j;
}

}  // namespace

int kitaev_index(SymmetryClass c) {
  switch (c) {
    case SymmetryClass::D: return 0;
    case SymmetryClass::DIII: return 1;
    case SymmetryClass::AII: return 2;
    case SymmetryClass::CII: return 3;
    case SymmetryClass::C: return 4;
    case SymmetryClass::CI: return 5;
    case SymmetryClass::AI: return 6;
    case SymmetryClass::BDI: return 7;
    default: return -1;
  }
}

bool is_complex_class(SymmetryClass c) {
  return c == SymmetryClass::A || c == SymmetryClass::AIII;
}

SymmetryClass class_from_index(int s) {
  static const SymmetryClass seq[8] = {
      SymmetryClass::D,  SymmetryClass::DIII, SymmetryClass::AII, SymmetryClass::CII,
      SymmetryClass::C,  SymmetryClass::CI,   SymmetryClass::AI,  SymmetryClass::BDI};
  return seq[((s % 8) + 8) % 8];
}

std::string class_name(SymmetryClass c) {
  switch (c) {
    case SymmetryClass::D: return "D";
    case SymmetryClass::DIII: return "DIII";
    case SymmetryClass::AII: return "AII";
    case SymmetryClass::CII: return "CII";
    case SymmetryClass::C: return "C";
    case SymmetryClass::CI: return "CI";
    case SymmetryClass::AI: return "AI";
    case SymmetryClass::BDI: return "BDI";
    case SymmetryClass::A: return "A";
    default: return "AIII";
  }
}

std::optional<SymmetryClass> class_from_name(const std::string& name) {
  auto upper = [](std::string s) {
    for (char& ch : s) ch = static_cast<char>(std::toupper(static_cast<unsigned char>(ch)));
    return s;
  };
  for (SymmetryClass c : {SymmetryClass::D, SymmetryClass::DIII, SymmetryClass::AII,
                          SymmetryClass::CII, SymmetryClass::C, SymmetryClass::CI,
                          SymmetryClass::AI, SymmetryClass::BDI, SymmetryClass::A,
                          SymmetryClass::AIII})
    if (class_name(c) == upper(name)) return c;
  return std::nullopt;
}

Eigen::Index min_bands(SymmetryClass c) {
  switch (c) {
    case SymmetryClass::D: return 1;
    case SymmetryClass::DIII: return 2;
    case SymmetryClass::AII: return 2;
    case SymmetryClass::CII: return 4;
    case SymmetryClass::C: return 4;
    case SymmetryClass::CI: return 4;
    case SymmetryClass::AI: return 4;
    case SymmetryClass::BDI: return 8;
    case SymmetryClass::A: return 1;
    default: return 2;  // AIII
  }
}

GeneratorSet build_generators(SymmetryClass cls, Eigen::Index n) {
  if (n <= 0 || n % min_bands(cls) != 0)
    throw std::invalid_argument("band count " + std::to_string(n) +
                                " is not a multiple of " + std::to_string(min_bands(cls)) +
                                " for class " + class_name(cls));
  GeneratorSet g;
  g.cls = cls;
  int s = kitaev_index(cls);
  if (cls == SymmetryClass::A || cls == SymmetryClass::D) {
    g.space = NambuSpace::standard(n);
    return g;
  }
  if (cls == SymmetryClass::AIII) {
    g.space = NambuSpace::standard(n);
    Matrix s_tw = kron(pauli(1), ident(n / 2));
    g.J.push_back(twisted_ph_gen(*g.space, s_tw));
    return g;
  }
  if (s >= 1 && s <= 3) {
    g.space = NambuSpace::standard(n);
    g.J.push_back(time_reversal_gen(*g.space));
    if (s >= 2) g.J.push_back(im * charge_matrix(n) * g.J[0]);
    if (s >= 3) {
      Matrix s_tw = kron(ident(2), kron(pauli(1), ident(n / 4)));
      g.J.push_back(twisted_ph_gen(*g.space, s_tw));
    }
    return g;
  }
  // s >= 4: double a small side carrying a quaternionic (spin rotation) action.
  auto w0 = NambuSpace::standard(n / 2);
  std::vector<Matrix> j = small_side_gens(cls, *w0);
  g.space = NambuSpace::doubled(w0);
  Matrix id_w = ident(w0->dim());
  g.J.push_back(kron(pauli(3), j[0]));
  g.J.push_back(kron(pauli(3), j[1]));
  g.J.push_back(kron(pauli(3), Matrix(j[1] * j[0])));
  g.J.push_back(kron(isigma2(), id_w));
  for (size_t m = 2; m < j.size(); ++m) g.J.push_back(kron(pauli(1), j[m]));
  return g;
}

VerifyReport verify_clifford_family(const NambuSpace& sp, const std::vector<Matrix>& ops,
                                    const std::vector<int>& reality) {
  VerifyReport rep;
  Eigen::Index d = sp.dim();
  Matrix id = Matrix::Identity(d, d);
  for (size_t l = 0; l < ops.size(); ++l) {
    rep.unitarity = std::max(rep.unitarity, spectral_norm(ops[l].adjoint() * ops[l] - id));
    double sgn = reality[l] > 0 ? 1.0 : -1.0;
    rep.car_real = std::max(
        rep.car_real,
        spectral_norm(ops[l].transpose() * sp.bracket * ops[l] - sgn * sp.bracket));
    for (size_t m = 0; m <= l; ++m) {
      Matrix anti = ops[l] * ops[m] + ops[m] * ops[l];
      if (l == m) anti += 2.0 * id;
      rep.clifford = std::max(rep.clifford, spectral_norm(anti));
    }
  }
  return rep;
}

VerifyReport verify_generator_set(const GeneratorSet& g) {
  std::vector<int> reality(g.J.size(), +1);
  return verify_clifford_family(*g.space, g.J, reality);
}

MembershipReport membership(const Subspace& a, const std::vector<Matrix>& pseudo_syms) {
  MembershipReport rep;
  rep.half_dim = (2 * a.dim() == a.ambient_dim());
  for (const Matrix& j : pseudo_syms)
    rep.pseudo_sym = std::max(rep.pseudo_sym, (a.frame().adjoint() * j * a.frame()).norm());
  rep.lagrangian = a.lagrangian_residual();
  return rep;
}

MembershipReport membership(const Subspace& a, const GeneratorSet& g) {
  return membership(a, g.J);
}

Matrix flattened_hamiltonian(const Subspace& a) {
  return Matrix::Identity(a.ambient_dim(), a.ambient_dim()) - 2.0 * a.projector();
}

Matrix charge_operator(const GeneratorSet& g) {
  if (g.s() < 2) throw std::invalid_argument("charge operator needs two generators");
  return im * g.J[1] * g.J[0];
}

Matrix time_reversal_matrix(const GeneratorSet& g) {
  if (g.s() < 1) throw std::invalid_argument("time reversal needs a generator");
  return g.space->bracket * g.J[0].conjugate();
}

namespace {

// Vacuum-type seed: span of all annihilators.
Matrix vacuum_cols(Eigen::Index n) {
  Matrix f = Matrix::Zero(2 * n, n);
  f.topRows(n) = ident(n);
  return f;
}

// Half-filled seed for twist classes: conduction annihilators + valence creators.
// Band layout (..., cv, ...): cv is the second-to-last tensor factor of size 2.
Matrix half_filled_cols(Eigen::Index n, Eigen::Index rep) {
  Matrix f = Matrix::Zero(2 * n, n);
  Eigen::Index col = 0;
  for (Eigen::Index b = 0; b < n; ++b) {
    bool valence = (b / rep) % 2 == 1;
    f(valence ? n + b : b, col++) = 1.0;
  }
  return f;
}

}  // namespace

Subspace base_point(const GeneratorSet& g) {
  Eigen::Index n = g.space->bands;
  int s = kitaev_index(g.cls);
  if (g.cls == SymmetryClass::AIII) return Subspace(g.space, half_filled_cols(n, n / 2));
  if (g.cls == SymmetryClass::CII) return Subspace(g.space, half_filled_cols(n, n / 4));
  if (s < 4) return Subspace(g.space, vacuum_cols(n));  // D, DIII, AII, A
  // doubled classes: image of the small seed under the (1,1)-type map
  Eigen::Index n0 = n / 2;
  Matrix small = (g.cls == SymmetryClass::BDI) ? half_filled_cols(n0, n0 / 4)
                                               : vacuum_cols(n0);
  auto w0 = NambuSpace::standard(n0);
  Subspace a(w0, small);
  Matrix ac = a.complement().frame();
  Matrix cols(g.space->dim(), 2 * n0);
  cols.setZero();
  cols.block(0, 0, 2 * n0, n0) = a.frame();
  cols.block(2 * n0, 0, 2 * n0, n0) = a.frame();
  cols.block(0, n0, 2 * n0, n0) = ac;
  cols.block(2 * n0, n0, 2 * n0, n0) = -ac;
  return Subspace(g.space, cols);
}

}  // namespace iqpv
