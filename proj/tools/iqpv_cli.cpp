// Command-line front end: bundle verification, suspension, invariants, and the
// closed-form classification tables.

#include "iqpv/invariants.hpp"
#include "iqpv/io.hpp"
#include "iqpv/tables.hpp"
#include "iqpv/worked_examples.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>

using namespace iqpv;

namespace {

SampledBundle read_bundle_raw(const std::string& path) {
  std::ifstream is(path);
  if (!is) throw std::runtime_error("cannot read " + path);
  Json j = Json::parse(is);
  return bundle_from_json(j);
}

int cmd_verify(const std::string& path) {
  SampledBundle b = read_bundle_raw(path);
  BundleReport rep = check_bundle(b);
  std::printf("bundle:            %s (class %s, n=%ld, %d points on %s)\n",
              b.label.c_str(), class_name(b.gens.cls).c_str(),
              static_cast<long>(b.gens.space->bands), b.space.size(),
              b.space.label.c_str());
  std::printf("membership:        %.3e\n", rep.membership);
  std::printf("equivariance:      %.3e\n", rep.equivariance);
  std::printf("fixed-point:       %.3e\n", rep.fixed_lagrangian);
  std::printf("neighbor distance: %.3e\n", rep.max_neighbor_distance);
  std::printf("verdict:           %s\n", rep.ok() ? "OK" : "FAIL");
  return rep.ok() ? 0 : 1;
}

int cmd_suspend(const std::string& path, const std::string& kind,
                const std::string& out, int t_res) {
  SampledBundle b = load_bundle(path);
  SampledBundle s = kind == "momentum" ? suspend_bundle_momentum(b, t_res)
                                       : suspend_bundle_position(b, t_res);
  save_bundle(out, s);
  BundleReport rep = check_bundle(s);
  std::printf("wrote %s: class %s over %s, %d points, membership %.3e\n",
              out.c_str(), class_name(s.gens.cls).c_str(), s.space.label.c_str(),
              s.space.size(), rep.membership);
  return rep.ok() ? 0 : 1;
}

int cmd_invariant(const std::string& path, const std::string& kind) {
  SampledBundle b = load_bundle(path);
  if (kind == "chern") {
    ChernResult r = chern_number(b.space, valence_frames(b));
    std::printf("chern = %d  (field-strength sum %.6f, integrality %.2e)\n",
                r.value, r.total, r.integrality);
  } else if (kind == "winding") {
    std::printf("winding = %d\n", chiral_winding(b));
  } else if (kind == "kane-mele") {
    KaneMeleResult r = kane_mele_zero_locus(b);
    std::printf("kane-mele parity = %d  (%s)\n", r.parity,
                r.nontrivial() ? "nontrivial" : "trivial");
    for (int i : r.zero_points) {
      std::printf("  Pf zero at point %d (", i);
      for (Eigen::Index c = 0; c < b.space.points[i].size(); ++c)
        std::printf("%s%.4f", c ? ", " : "", b.space.points[i](c));
      std::printf(")\n");
    }
  } else {  // class-d
    ClassD1dResult r = class_d_1d_invariant(b);
    std::printf("class-d z2 = %d  (%s; fixed-point types %s/%s)\n",
                r.nontrivial ? 1 : 0, r.nontrivial ? "nontrivial" : "trivial",
                r.infinite_type[0] ? "inf" : "0", r.infinite_type[1] ? "inf" : "0");
  }
  return 0;
}

int cmd_table(const std::string& format) {
  const std::vector<SymmetryClass> order = {
      SymmetryClass::A,  SymmetryClass::AIII, SymmetryClass::D,  SymmetryClass::DIII,
      SymmetryClass::AII, SymmetryClass::CII, SymmetryClass::C,  SymmetryClass::CI,
      SymmetryClass::AI, SymmetryClass::BDI};
  if (format == "txt") {
    std::cout << render_periodic_table();
    return 0;
  }
  if (format == "csv") {
    std::cout << "class,d=0,d=1,d=2,d=3\n";
    for (SymmetryClass cls : order) {
      std::cout << class_name(cls);
      for (int d = 0; d < 4; ++d) std::cout << "," << periodic_table_entry(cls, 0, d).str();
      std::cout << "\n";
    }
    return 0;
  }
  Json j = Json::array();
  for (SymmetryClass cls : order) {
    Json row;
    row["class"] = class_name(cls);
    Json ent = Json::array();
    for (int d = 0; d < 4; ++d) ent.push_back(periodic_table_entry(cls, 0, d).str());
    row["entries"] = ent;
    j.push_back(row);
  }
  std::cout << j.dump(1) << "\n";
  return 0;
}

int cmd_bounds(const std::string& cls_name, long n, int p, int q) {
  auto cls = class_from_name(cls_name);
  if (!cls) throw std::runtime_error("unknown symmetry class: " + cls_name);
  StabilityBounds b = stability_bounds(*cls, n, p, q);
  SpacePair sp = classifying_space(*cls, n);
  std::printf("class %s, n=%ld\n", cls_name.c_str(), n);
  std::printf("  spaces: C: %s   R: %s\n", sp.c_space.c_str(), sp.r_space.c_str());
  std::printf("  bijective for dx+dk < %d  %s\n", b.d1, b.d1_case.c_str());
  if (b.d2 >= 0)
    std::printf("  equivariant enhancement for dx < %d  %s\n", b.d2, b.d2_case.c_str());
  bool any = false;
  for (const UnstableCase& c : unstable_cases()) {
    if (c.cls != *cls) continue;
    if (!any) std::printf("  unstable cells (dx,dk):\n");
    any = true;
    std::printf("    (%d,%d) for %c <= %d", c.dx, c.dk, c.param, c.max_bad);
    if (!c.stable_entry.empty())
      std::printf("  [table %s -> actual %s]", c.stable_entry.c_str(),
                  c.actual_entry.c_str());
    std::printf("\n");
  }
  if (!any) std::printf("  no unstable low-parameter cells\n");
  return 0;
}

int cmd_example(const std::string& which, int res, double alpha,
                const std::string& out) {
  ExampleBundle ex = which == "kitaev-diii" ? build_d_to_diii(res, alpha)
                                            : build_diii_to_aii(res);
  save_bundle(out, ex.bundle);
  BundleReport rep = check_bundle(ex.bundle);
  std::printf("wrote %s: %s, %d points, membership %.3e\n", out.c_str(),
              ex.bundle.label.c_str(), ex.bundle.space.size(), rep.membership);
  return rep.ok() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"free-fermion ground-state bundles: verification, suspension, invariants"};
  app.require_subcommand(1);

  std::string bundle_path, out_path, kind, format = "txt", cls_name, which;
  int t_res = 8, res = 16, p = -1, q = -1;
  long n = 0;
  double alpha = 0.0;

  auto* verify = app.add_subcommand("verify", "check a stored bundle");
  verify->add_option("bundle", bundle_path)->required();

  auto* susp = app.add_subcommand("suspend", "apply the diagonal map to a bundle");
  susp->add_option("bundle", bundle_path)->required();
  susp->add_option("--kind", kind)->required()
      ->check(CLI::IsMember({"momentum", "position"}));
  susp->add_option("--out", out_path)->required();
  susp->add_option("--t-res", t_res, "half resolution of the new parameter circle");

  auto* inv = app.add_subcommand("invariant", "evaluate a topological invariant");
  inv->add_option("bundle", bundle_path)->required();
  inv->add_option("--kind", kind)->required()
      ->check(CLI::IsMember({"chern", "winding", "kane-mele", "class-d"}));

  auto* tab = app.add_subcommand("table", "print the stable classification table");
  tab->add_option("--format", format)->check(CLI::IsMember({"txt", "csv", "json"}));

  auto* bounds = app.add_subcommand("bounds", "stability bounds for a class");
  bounds->add_option("--class", cls_name)->required();
  bounds->add_option("--n", n)->required();
  bounds->add_option("--p", p);
  bounds->add_option("--q", q);

  auto* ex = app.add_subcommand("example", "generate a reference bundle");
  ex->add_option("which", which)->required()
      ->check(CLI::IsMember({"kitaev-diii", "qsh"}));
  ex->add_option("--res", res);
  ex->add_option("--alpha", alpha, "pairing-plane angle (kitaev-diii only)");
  ex->add_option("--out", out_path)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (*verify) return cmd_verify(bundle_path);
    if (*susp) return cmd_suspend(bundle_path, kind, out_path, t_res);
    if (*inv) return cmd_invariant(bundle_path, kind);
    if (*tab) return cmd_table(format);
    if (*bounds) return cmd_bounds(cls_name, n, p, q);
    return cmd_example(which, res, alpha, out_path);
  } catch (const Json::exception& e) {
    std::cerr << "error: invalid bundle file: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
