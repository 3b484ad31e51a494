#include "iqpv/invariants.hpp"

#include <cmath>

namespace iqpv {

cplx pfaffian(Matrix a) {
  Eigen::Index n = a.rows();
  if (n != a.cols() || n % 2 != 0) throw std::invalid_argument("pfaffian: even square matrix required");
  if ((a + a.transpose()).norm() > 1e-9 * std::max(1.0, a.norm()))
    throw std::invalid_argument("pfaffian: matrix is not skew-symmetric");
  if (n == 0) return 1.0;
  cplx pf = 1.0;
  for (Eigen::Index k = 0; k + 1 < n; k += 2) {
    Eigen::Index piv = k + 1;
    for (Eigen::Index j = k + 2; j < n; ++j)
      if (std::abs(a(j, k)) > std::abs(a(piv, k))) piv = j;
    if (std::abs(a(piv, k)) < 1e-14 * std::max(1.0, a.norm())) return 0.0;
    if (piv != k + 1) {
      a.row(piv).swap(a.row(k + 1));
      a.col(piv).swap(a.col(k + 1));
      pf = -pf;
    }
    pf *= a(k, k + 1);
    for (Eigen::Index j = k + 2; j < n; ++j) {
      cplx mu = a(j, k) / a(k + 1, k);
      a.row(j) -= mu * a.row(k + 1);
      a.col(j) -= mu * a.col(k + 1);
    }
  }
  return pf;
}

int winding_number(const std::vector<cplx>& loop) {
  double total = 0;
  const size_t n = loop.size();
  if (n < 3) throw std::invalid_argument("winding: loop too short");
  for (size_t j = 0; j < n; ++j) {
    cplx a = loop[j], b = loop[(j + 1) % n];
    if (std::abs(a) < 1e-12 || std::abs(b) < 1e-12)
      throw std::invalid_argument("winding: loop passes through zero");
    double d = std::arg(b / a);
    if (std::abs(d) > M_PI * (1.0 - 1e-9))
      throw std::invalid_argument("winding: phase jump of pi between neighbors");
    total += d;
  }
  double w = total / (2 * M_PI);
  int value = static_cast<int>(std::lround(w));
  if (std::abs(w - value) > 1e-6)
    throw std::invalid_argument("winding: total phase is not a multiple of 2 pi");
  return value;
}

int winding_number(const std::vector<Matrix>& unitary_loop) {
  std::vector<cplx> dets;
  dets.reserve(unitary_loop.size());
  for (const Matrix& u : unitary_loop) dets.push_back(u.determinant());
  return winding_number(dets);
}

ChernResult chern_number(const MomentumSpace& space, const std::vector<Matrix>& frames) {
  if (space.faces.empty())
    throw std::invalid_argument("chern: space carries no 2-cells");
  ChernResult res;
  double sum = 0;
  for (const auto& face : space.faces) {
    cplx hol = 1.0;
    for (size_t v = 0; v < face.size(); ++v) {
      int i = face[v], j = face[(v + 1) % face.size()];
      cplx link = (frames[i].adjoint() * frames[j]).determinant();
      if (std::abs(link) < 0.1)
        throw std::invalid_argument("chern: near-singular link overlap; refine the grid");
      hol *= link / std::abs(link);
    }
    sum += std::arg(hol);
  }
  res.total = sum / (2 * M_PI);
  res.value = static_cast<int>(std::lround(res.total));
  res.integrality = std::abs(res.total - res.value);
  return res;
}

std::vector<Matrix> valence_frames(const SampledBundle& b) {
  Matrix q = charge_operator(b.gens);
  Subspace v = eigenspace(b.gens.space, q, 1.0);
  std::vector<Matrix> out;
  Eigen::Index expect = -1;
  for (const Subspace& f : b.fibers) {
    Subspace vh = intersect(f, v);
    if (expect < 0) expect = vh.dim();
    if (vh.dim() != expect)
      throw std::invalid_argument("valence block dimension is not constant over the sample");
    out.push_back(vh.frame());
  }
  return out;
}

KaneMeleResult kane_mele_zero_locus(const SampledBundle& b) {
  KaneMeleResult res;
  Matrix tm = time_reversal_matrix(b.gens);
  std::vector<Matrix> val = valence_frames(b);
  double maxabs = 0;
  for (const Matrix& u : val) {
    Matrix m = u.adjoint() * tm * u.conjugate();
    if ((m + m.transpose()).norm() > 1e-8)
      throw std::invalid_argument("kane-mele: sewing matrix is not skew; wrong symmetry data");
    cplx pf = pfaffian(m);
    res.pfaffian_values.push_back(pf);
    maxabs = std::max(maxabs, std::abs(pf));
  }
  double threshold = 1e-3 * maxabs;
  std::vector<char> zero(b.space.size(), 0);
  for (int i = 0; i < b.space.size(); ++i)
    if (std::abs(res.pfaffian_values[i]) < threshold) {
      res.zero_points.push_back(i);
      zero[i] = 1;
    }
  // zeros come in tau-orbits (a generic zero pairs with its mirror image; a
  // tau-symmetric zero curve forms a single orbit); each orbit meets half the
  // zone once, so the half-zone count is the orbit count.  Suspension poles are
  // degeneration points where the sewing matrix vanishes identically for every
  // bundle, so a component made of poles alone carries no information.
  auto degenerate = [&](int i) {
    if (b.space.dx + b.space.dk != 2) return false;
    double t = suspension_t(b.space, i);
    return t == 0.0 || t == 1.0;
  };
  std::vector<int> comp(b.space.size(), -1);
  int ncomp = 0;
  for (int seed : res.zero_points) {
    if (comp[seed] >= 0) continue;
    std::vector<int> stack{seed};
    comp[seed] = ncomp;
    while (!stack.empty()) {
      int i = stack.back();
      stack.pop_back();
      for (auto [a, c] : b.space.edges) {
        int j = a == i ? c : (c == i ? a : -1);
        if (j >= 0 && zero[j] && comp[j] < 0) {
          comp[j] = ncomp;
          stack.push_back(j);
        }
      }
    }
    ++ncomp;
  }
  std::vector<char> essential(ncomp, 0);
  for (int i : res.zero_points)
    if (!degenerate(i)) essential[comp[i]] = 1;
  std::vector<char> orbit_seen(ncomp, 0);
  int orbits = 0;
  for (int i : res.zero_points) {
    if (orbit_seen[comp[i]] || !essential[comp[i]]) continue;
    orbit_seen[comp[i]] = 1;
    int mirror = comp[b.space.tau[i]];
    if (mirror >= 0) orbit_seen[mirror] = 1;
    ++orbits;
  }
  res.parity = orbits % 2;
  return res;
}

int chiral_winding(const SampledBundle& b, int gen_idx) {
  if (b.space.dx + b.space.dk != 1)
    throw std::invalid_argument("chiral winding: one-dimensional sample required");
  if (gen_idx < 0 || gen_idx >= static_cast<int>(b.gens.J.size()))
    throw std::invalid_argument("chiral winding: generator index out of range");
  Matrix g = cplx(0, 1) * b.gens.J[gen_idx];
  Matrix up = eigenspace(b.gens.space, g, 1.0).frame();
  Matrix um = eigenspace(b.gens.space, g, -1.0).frame();
  int n = b.space.size();
  std::vector<std::vector<int>> adj(n);
  for (auto [a, c] : b.space.edges) {
    adj[a].push_back(c);
    adj[c].push_back(a);
  }
  Matrix id = Matrix::Identity(b.gens.space->dim(), b.gens.space->dim());
  std::vector<cplx> dets;
  int cur = 0, prev = -1;
  for (int step = 0; step < n; ++step) {
    if (adj[cur].size() != 2)
      throw std::invalid_argument("chiral winding: sample is not a single cycle");
    Matrix h = id - 2.0 * b.fibers[cur].projector();
    Matrix q = um.adjoint() * h * up;  // H swaps the chiral eigenblocks
    if ((q * q.adjoint() - Matrix::Identity(q.rows(), q.rows())).norm() > 1e-6)
      throw std::invalid_argument("chiral winding: fiber breaks the chiral symmetry");
    dets.push_back(q.determinant());
    int nxt = adj[cur][0] == prev ? adj[cur][1] : adj[cur][0];
    prev = cur;
    cur = nxt;
  }
  if (cur != 0)
    throw std::invalid_argument("chiral winding: sample is not a single cycle");
  return winding_number(dets);
}

ClassD1dResult class_d_1d_invariant(const std::vector<UvPair>& uv,
                                    const MomentumSpace& circle) {
  if (circle.fixed.size() != 2)
    throw std::invalid_argument("class D 1d: need a circle with two fixed momenta");
  ClassD1dResult res;
  for (int f = 0; f < 2; ++f) {
    const UvPair& p = uv[circle.fixed[f]];
    double au = std::abs(p.u), av = std::abs(p.v);
    if (std::min(au, av) > 0.1 * std::max(au, av))
      throw std::invalid_argument("class D 1d: fixed-point fiber is not of pure type");
    res.infinite_type[f] = au < av;
    res.z_fixed[f] = res.infinite_type[f] ? cplx(1e300, 0) : p.v / p.u;
  }
  res.nontrivial = res.infinite_type[0] != res.infinite_type[1];
  return res;
}

ClassD1dResult class_d_1d_invariant(const SampledBundle& b) {
  if (b.gens.space->bands != 1)
    throw std::invalid_argument("class D 1d: single-band bundle required");
  std::vector<UvPair> uv;
  for (const Subspace& f : b.fibers)
    uv.push_back({f.frame()(0, 0), f.frame()(1, 0)});
  return class_d_1d_invariant(uv, b.space);
}

}  // namespace iqpv
