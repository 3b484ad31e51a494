#include "iqpv/tables.hpp"

#include <limits>
#include <map>
#include <sstream>

namespace iqpv {

std::string GroupLabel::str() const {
  switch (kind) {
    case Zero: return "0";
    case Z: return "Z";
    case Z2: return "Z2";
    default: return "Z_" + std::to_string(count);
  }
}

long min_multiplicity(int s) {
  static const long base[8] = {1, 2, 2, 4, 4, 4, 4, 8};
  if (s < 0) throw std::invalid_argument("min_multiplicity: s >= 0 required");
  long m = base[s % 8];
  for (int k = 0; k < s / 8; ++k) m *= 16;
  return m;
}

GroupLabel periodic_table_entry(SymmetryClass cls, int dx, int dk, Eigen::Index n) {
  if (dx < 0 || dk < 0) throw std::invalid_argument("dx, dk >= 0 required");
  int d = dk - dx;
  if (is_complex_class(cls)) {
    bool chiral = cls == SymmetryClass::AIII;
    if (dx == 0 && dk == 0 && cls == SymmetryClass::A && n > 0)
      return {GroupLabel::Finite, 2 * n + 1};
    bool z = chiral ? (((d % 2) + 2) % 2 == 1) : (((d % 2) + 2) % 2 == 0);
    return z ? GroupLabel{GroupLabel::Z, 0} : GroupLabel{GroupLabel::Zero, 0};
  }
  int s = kitaev_index(cls);
  if (dx == 0 && dk == 0 && n > 0) {
    if (cls == SymmetryClass::AII) return {GroupLabel::Finite, n / 2 + 1};
    if (cls == SymmetryClass::AI) return {GroupLabel::Finite, n / 4 + 1};
  }
  // pi_0 of the real sequence at shifted index (seed column dk-dx = 0)
  static const GroupLabel seed[8] = {
      {GroupLabel::Z2, 0}, {GroupLabel::Zero, 0}, {GroupLabel::Z, 0},  {GroupLabel::Zero, 0},
      {GroupLabel::Zero, 0}, {GroupLabel::Zero, 0}, {GroupLabel::Z, 0}, {GroupLabel::Z2, 0}};
  return seed[(((s - d) % 8) + 8) % 8];
}

SpacePair classifying_space(SymmetryClass cls, Eigen::Index n) {
  auto N = std::to_string(n);
  auto N2 = std::to_string(2 * n);
  if (cls == SymmetryClass::A)
    return {"U_" + N2 + " / (U_p x U_q), p+q=" + N2, "-"};
  if (cls == SymmetryClass::AIII)
    return {"(U_" + N + " x U_" + N + ") / U_" + N, "-"};
  int s = kitaev_index(cls);
  if (n % min_multiplicity(s) != 0)
    throw std::invalid_argument("band count incompatible with class");
  auto u_grass = [](Eigen::Index m) {
    auto M = std::to_string(m);
    return "U_" + M + " / (U_p x U_q), p+q=" + M;
  };
  auto u_pair = [](Eigen::Index m) {
    auto M = std::to_string(m);
    return "(U_" + M + " x U_" + M + ") / U_" + M;
  };
  switch (s) {
    case 0: return {u_grass(2 * n), "O_" + std::to_string(2 * n) + " / U_" + std::to_string(n)};
    case 1: return {u_pair(n), "U_" + std::to_string(n) + " / Sp_" + std::to_string(n)};
    case 2: return {u_grass(n), "Sp_" + std::to_string(n) + " / (Sp_2p x Sp_2q), p+q=" + std::to_string(n / 2)};
    case 3: return {u_pair(n / 2), "(Sp_" + std::to_string(n / 2) + " x Sp_" + std::to_string(n / 2) + ") / Sp_" + std::to_string(n / 2)};
    case 4: return {u_grass(n / 2), "Sp_" + std::to_string(n / 2) + " / U_" + std::to_string(n / 4)};
    case 5: return {u_pair(n / 4), "U_" + std::to_string(n / 4) + " / O_" + std::to_string(n / 4)};
    case 6: return {u_grass(n / 4), "O_" + std::to_string(n / 4) + " / (O_p x O_q), p+q=" + std::to_string(n / 4)};
    default: return {u_pair(n / 8), "(O_" + std::to_string(n / 8) + " x O_" + std::to_string(n / 8) + ") / O_" + std::to_string(n / 8)};
  }
}

namespace {

// d1(r): bijectivity bound on dx+dk; d2(r): the equivariant bound on dx.
// Balanced splits are used where the space has Grassmannian components.
void bounds_by_r(SymmetryClass cls, long r, int p, int q, StabilityBounds& b) {
  auto bal = [&](long total) {
    if (p < 0 || q < 0) { p = static_cast<int>(total / 2); q = static_cast<int>(total - p); }
  };
  switch (cls) {
    case SymmetryClass::D:
      b = {int(2 * r + 1), "(iv)", int(2 * r - 1), "(ii)"};
      break;
    case SymmetryClass::DIII:
      b = {int(4 * r), "(i)", int(4 * r), "(ii)"};
      break;
    case SymmetryClass::AII:
      bal(r);
      b = {std::min(4 * p + 1, 4 * q + 1), "(iv)", std::min(4 * p + 3, 4 * q + 3), "(iv)"};
      break;
    case SymmetryClass::CII:
      b = {int(4 * r), "(i)", int(4 * r + 2), "(i)"};
      break;
    case SymmetryClass::C:
      b = {int(2 * r + 1), "(iv)", int(2 * r + 1), "(iii)"};
      break;
    case SymmetryClass::CI:
      b = {int(2 * r), "(i)", int(r), "(iii)"};
      break;
    case SymmetryClass::AI:
      bal(2 * r);
      b = {std::min(2 * p + 1, 2 * q + 1), "(iv)", std::min(p, q), "(iv)"};
      break;
    default:  // BDI
      b = {int(2 * r), "(i)", int(r - 1), "(i)"};
      break;
  }
}

}  // namespace

StabilityBounds stability_bounds(SymmetryClass cls, Eigen::Index n, int p, int q) {
  StabilityBounds b;
  if (cls == SymmetryClass::A) {
    if (p < 0 || q < 0) { p = static_cast<int>(n / 2); q = static_cast<int>(n - p); }
    b = {std::min(2 * p + 1, 2 * q + 1), "(iv)", -1, "-"};
    return b;
  }
  if (cls == SymmetryClass::AIII) {
    // C_1(n) is a copy of U_n
    b = {static_cast<int>(2 * n), "(i)", -1, "-"};
    return b;
  }
  int s = kitaev_index(cls);
  if (n % min_multiplicity(s) != 0)
    throw std::invalid_argument("band count incompatible with class");
  bounds_by_r(cls, n / min_multiplicity(s), p, q, b);
  return b;
}

BandAdditionBounds band_addition_bounds(SymmetryClass cls, int q) {
  BandAdditionBounds b;
  switch (cls) {
    case SymmetryClass::A: b.dim_strict = 2 * q + 1; break;
    case SymmetryClass::AI: b.dim_strict = 2 * q + 1; b.fixed_strict = q; break;
    case SymmetryClass::AII: b.dim_strict = 4 * q + 3; break;
    default:
      throw std::invalid_argument("band-addition bounds apply to classes A, AI, AII");
  }
  return b;
}

std::vector<UnstableCase> unstable_cases() {
  const std::vector<std::pair<int, int>> cells = {{0, 1}, {0, 2}, {0, 3},
                                                  {1, 2}, {1, 3}, {2, 3}};
  const std::vector<SymmetryClass> order = {
      SymmetryClass::A,  SymmetryClass::AIII, SymmetryClass::D,  SymmetryClass::DIII,
      SymmetryClass::AII, SymmetryClass::CII, SymmetryClass::C,  SymmetryClass::CI,
      SymmetryClass::AI, SymmetryClass::BDI};
  // published corrections for the dx=0, minimal-parameter cells:
  // stable-table prediction vs actual set of phases
  std::map<std::pair<std::string, int>, std::pair<std::string, std::string>> notes = {
      {{"A", 3}, {"0", "Z"}},    {{"AIII", 2}, {"0", "0"}}, {{"AIII", 3}, {"Z", "0"}},
      {{"D", 3}, {"0", "0"}},    {{"C", 3}, {"0", "Z2"}},   {{"CI", 2}, {"0", "0"}},
      {{"CI", 3}, {"Z", "0"}},   {{"AI", 3}, {"0", "0"}},   {{"BDI", 1}, {"Z", "Z"}},
      {{"BDI", 2}, {"0", "0"}},  {{"BDI", 3}, {"0", "0"}}};
  std::vector<UnstableCase> out;
  for (SymmetryClass cls : order) {
    bool q_based = cls == SymmetryClass::A || cls == SymmetryClass::AI ||
                   cls == SymmetryClass::AII;
    for (auto [dx, dk] : cells) {
      auto unstable = [&](int v) {
        if (q_based) {
          BandAdditionBounds b = band_addition_bounds(cls, v);
          return dx + dk >= b.dim_strict ||
                 (b.fixed_strict != std::numeric_limits<int>::max() && dx >= b.fixed_strict);
        }
        StabilityBounds b;
        if (is_complex_class(cls)) b = stability_bounds(cls, v);  // AIII: n = r
        else bounds_by_r(cls, v, -1, -1, b);
        return dx + dk >= b.d1 || (b.d2 >= 0 && dx >= b.d2);
      };
      int max_bad = 0;
      for (int v = 1; v <= 50; ++v)
        if (unstable(v)) max_bad = v;
      if (max_bad == 0) continue;
      UnstableCase c{cls, dx, dk, q_based ? 'q' : 'r', max_bad, "", ""};
      auto it = notes.find({class_name(cls), dk});
      if (dx == 0 && it != notes.end()) {
        c.stable_entry = it->second.first;
        c.actual_entry = it->second.second;
      }
      out.push_back(c);
    }
  }
  return out;
}

namespace {
std::string pad(const std::string& s, size_t w) {
  std::string t = s;
  while (t.size() < w) t += ' ';
  return t;
}
}  // namespace

std::string render_periodic_table() {
  const std::vector<SymmetryClass> order = {
      SymmetryClass::A,  SymmetryClass::AIII, SymmetryClass::D,  SymmetryClass::DIII,
      SymmetryClass::AII, SymmetryClass::CII, SymmetryClass::C,  SymmetryClass::CI,
      SymmetryClass::AI, SymmetryClass::BDI};
  std::ostringstream os;
  os << "Stable homotopy classes [S^{dx,dk} -> fibers], d = dk - dx (mod 8)\n";
  os << pad("class", 6);
  for (int d = 0; d < 4; ++d) os << pad("d=" + std::to_string(d), 5);
  os << "\n";
  for (SymmetryClass cls : order) {
    os << pad(class_name(cls), 6);
    for (int d = 0; d < 4; ++d) os << pad(periodic_table_entry(cls, 0, d).str(), 5);
    os << "\n";
  }
  os << "(d = 0 with dx = dk = 0 counts components: A -> Z_{2n+1}, "
        "AII -> Z_{n/2+1}, AI -> Z_{n/4+1})\n";
  return os.str();
}

std::string render_unstable_table() {
  std::ostringstream os;
  os << "Cells (dx,dk) where the stability bounds fail at small parameter\n";
  os << pad("class", 6) << pad("dx", 4) << pad("dk", 4) << pad("range", 8)
     << "note\n";
  for (const UnstableCase& c : unstable_cases()) {
    std::string range = std::string(1, c.param) +
                        (c.max_bad == 1 ? "=1" : "<=" + std::to_string(c.max_bad));
    std::string note;
    if (!c.stable_entry.empty())
      note = "table " + c.stable_entry + " -> actual " + c.actual_entry;
    os << pad(class_name(c.cls), 6) << pad(std::to_string(c.dx), 4)
       << pad(std::to_string(c.dk), 4) << pad(range, 8) << note << "\n";
  }
  return os.str();
}

}  // namespace iqpv
