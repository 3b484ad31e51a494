#include "iqpv/spaces.hpp"

#include <cmath>

namespace iqpv {

namespace {

MomentumSpace make_circle(bool momentum_like, int res) {
  if (res < 4 || res % 2 != 0)
    throw std::invalid_argument("circle resolution must be even and >= 4");
  MomentumSpace m;
  m.dx = momentum_like ? 0 : 1;
  m.dk = momentum_like ? 1 : 0;
  m.label = momentum_like ? "S^{0,1}" : "S^{1,0}";
  for (int j = 0; j < res; ++j) {
    Eigen::VectorXd p(1);
    p(0) = -M_PI + 2.0 * M_PI * j / res;
    m.points.push_back(p);
    m.tau.push_back(momentum_like ? (res - j) % res : j);
    m.edges.emplace_back(j, (j + 1) % res);
  }
  for (int j = 0; j < res; ++j)
    if (m.tau[j] == j) m.fixed.push_back(j);
  m.base = 0;
  return m;
}

MomentumSpace make_point_pair() {
  MomentumSpace m;
  m.label = "S^{0,0}";
  for (int j = 0; j < 2; ++j) {
    Eigen::VectorXd p(1);
    p(0) = j == 0 ? 1.0 : -1.0;
    m.points.push_back(p);
    m.tau.push_back(j);
    m.fixed.push_back(j);
  }
  m.base = 0;
  return m;
}

}  // namespace

MomentumSpace suspension(const MomentumSpace& m, int half_res, bool momentum_type) {
  if (half_res < 2) throw std::invalid_argument("suspension needs half_res >= 2");
  const int nt = 2 * half_res;      // t_j = j/nt, j = 0..nt
  const int n = m.size();
  MomentumSpace s;
  s.dx = m.dx + (momentum_type ? 0 : 1);
  s.dk = m.dk + (momentum_type ? 1 : 0);
  s.label = (momentum_type ? "susp_k(" : "susp_x(") + m.label + ")";
  auto coords = [&](int i, double t) {
    Eigen::VectorXd p(m.points[i].size() + 1);
    p.head(m.points[i].size()) = m.points[i];
    p(p.size() - 1) = t;
    return p;
  };
  // index 0: pole t=0, index 1: pole t=1, then (i, j) for interior j = 1..nt-1
  s.points.push_back(coords(m.base, 0.0));
  s.points.push_back(coords(m.base, 1.0));
  auto idx = [&](int i, int j) { return 2 + (j - 1) * n + i; };
  for (int j = 1; j < nt; ++j)
    for (int i = 0; i < n; ++i) s.points.push_back(coords(i, double(j) / nt));
  s.tau.resize(s.size());
  s.tau[0] = momentum_type ? 1 : 0;
  s.tau[1] = momentum_type ? 0 : 1;
  for (int j = 1; j < nt; ++j)
    for (int i = 0; i < n; ++i)
      s.tau[idx(i, j)] = idx(m.tau[i], momentum_type ? nt - j : j);
  for (int i = 0; i < s.size(); ++i)
    if (s.tau[i] == i) s.fixed.push_back(i);
  s.base = idx(m.base, half_res);
  for (int i = 0; i < n; ++i) {
    s.edges.emplace_back(0, idx(i, 1));
    s.edges.emplace_back(idx(i, nt - 1), 1);
    for (int j = 1; j < nt - 1; ++j) s.edges.emplace_back(idx(i, j), idx(i, j + 1));
  }
  for (auto [a, b] : m.edges)
    for (int j = 1; j < nt; ++j) s.edges.emplace_back(idx(a, j), idx(b, j));
  // 2-cells when the input is a circle (indices in ring order)
  if (!m.edges.empty() && m.faces.empty()) {
    for (int i = 0; i < n; ++i) {
      int ip = (i + 1) % n;
      s.faces.push_back({0, idx(ip, 1), idx(i, 1)});
      s.faces.push_back({1, idx(i, nt - 1), idx(ip, nt - 1)});
      for (int j = 1; j < nt - 1; ++j)
        s.faces.push_back({idx(i, j), idx(ip, j), idx(ip, j + 1), idx(i, j + 1)});
    }
  }
  return s;
}

double suspension_t(const MomentumSpace& sm, int idx) {
  return sm.points[idx](sm.points[idx].size() - 1);
}

MomentumSpace make_sphere(int dx, int dk, int res) {
  if (dx < 0 || dk < 0 || dx + dk > 2)
    throw std::invalid_argument("make_sphere supports dx+dk <= 2");
  if (dx == 0 && dk == 0) return make_point_pair();
  if (dx + dk == 1) return make_circle(dk == 1, res);
  MomentumSpace out;
  if (dk == 2) out = suspension(make_circle(true, res), res / 2, true);
  else if (dk == 1) out = suspension(make_circle(true, res), res / 2, false);
  else out = suspension(make_circle(false, res), res / 2, false);
  out.label = "S^{" + std::to_string(dx) + "," + std::to_string(dk) + "}";
  return out;
}

BundleReport check_bundle(const SampledBundle& b) {
  BundleReport rep;
  const int n = b.space.size();
  for (int i = 0; i < n; ++i) {
    MembershipReport m = membership(b.fibers[i], b.gens);
    rep.membership = std::max(rep.membership, m.pseudo_sym);
    if (!m.half_dim) rep.membership = std::max(rep.membership, 1.0);
  }
  for (int i = 0; i < n; ++i) {
    int j = b.space.tau[i];
    rep.equivariance =
        std::max(rep.equivariance, b.fibers[j].distance(b.fibers[i].annihilator()));
  }
  for (int i : b.space.fixed)
    rep.fixed_lagrangian =
        std::max(rep.fixed_lagrangian, b.fibers[i].lagrangian_residual());
  for (auto [a, c] : b.space.edges)
    rep.max_neighbor_distance =
        std::max(rep.max_neighbor_distance, b.fibers[a].distance(b.fibers[c]));
  return rep;
}

}  // namespace iqpv
