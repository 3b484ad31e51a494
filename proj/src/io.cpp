#include "iqpv/io.hpp"

#include <fstream>

namespace iqpv {

Json matrix_to_json(const Matrix& m) {
  Json j;
  j["rows"] = m.rows();
  j["cols"] = m.cols();
  Json data = Json::array();
  for (Eigen::Index c = 0; c < m.cols(); ++c)
    for (Eigen::Index r = 0; r < m.rows(); ++r)
      data.push_back(Json::array({m(r, c).real(), m(r, c).imag()}));
  j["data"] = data;
  return j;
}

Matrix matrix_from_json(const Json& j) {
  Eigen::Index rows = j.at("rows"), cols = j.at("cols");
  const Json& data = j.at("data");
  if (static_cast<Eigen::Index>(data.size()) != rows * cols)
    throw std::runtime_error("matrix data has wrong length");
  Matrix m(rows, cols);
  Eigen::Index k = 0;
  for (Eigen::Index c = 0; c < cols; ++c)
    for (Eigen::Index r = 0; r < rows; ++r, ++k)
      m(r, c) = cplx(data[k][0].get<double>(), data[k][1].get<double>());
  return m;
}

Json bundle_to_json(const SampledBundle& b) {
  Json j;
  j["schema_version"] = 1;
  j["label"] = b.label;
  j["class"] = class_name(b.gens.cls);
  j["n"] = b.gens.space->bands;
  j["bracket"] = matrix_to_json(b.gens.space->bracket);
  Json gens = Json::array();
  for (const Matrix& g : b.gens.J) gens.push_back(matrix_to_json(g));
  j["generators"] = gens;
  Json sp;
  sp["label"] = b.space.label;
  sp["dx"] = b.space.dx;
  sp["dk"] = b.space.dk;
  Json pts = Json::array();
  for (const auto& p : b.space.points) {
    Json q = Json::array();
    for (Eigen::Index i = 0; i < p.size(); ++i) q.push_back(p(i));
    pts.push_back(q);
  }
  sp["points"] = pts;
  sp["tau"] = b.space.tau;
  sp["base"] = b.space.base;
  Json edges = Json::array();
  for (auto [a, c] : b.space.edges) edges.push_back(Json::array({a, c}));
  sp["edges"] = edges;
  sp["faces"] = b.space.faces;
  j["space"] = sp;
  Json frames = Json::array();
  for (const Subspace& f : b.fibers) frames.push_back(matrix_to_json(f.frame()));
  j["frames"] = frames;
  return j;
}

SampledBundle bundle_from_json(const Json& j) {
  if (j.at("schema_version").get<int>() != 1)
    throw std::runtime_error("unsupported schema version");
  SampledBundle b;
  b.label = j.value("label", "");
  auto cls = class_from_name(j.at("class").get<std::string>());
  if (!cls) throw std::runtime_error("unknown symmetry class");
  b.gens.cls = *cls;
  b.gens.space = NambuSpace::with_bracket(matrix_from_json(j.at("bracket")));
  if (b.gens.space->bands != j.at("n").get<Eigen::Index>())
    throw std::runtime_error("band count does not match bracket size");
  for (const Json& g : j.at("generators")) b.gens.J.push_back(matrix_from_json(g));
  const Json& sp = j.at("space");
  b.space.label = sp.at("label");
  b.space.dx = sp.at("dx");
  b.space.dk = sp.at("dk");
  for (const Json& p : sp.at("points")) {
    Eigen::VectorXd v(p.size());
    for (size_t i = 0; i < p.size(); ++i) v(static_cast<Eigen::Index>(i)) = p[i];
    b.space.points.push_back(v);
  }
  b.space.tau = sp.at("tau").get<std::vector<int>>();
  b.space.base = sp.at("base");
  for (const Json& e : sp.at("edges")) b.space.edges.emplace_back(e[0], e[1]);
  b.space.faces = sp.at("faces").get<std::vector<std::vector<int>>>();
  for (int i = 0; i < b.space.size(); ++i)
    if (b.space.tau[i] == i) b.space.fixed.push_back(i);
  for (const Json& f : j.at("frames"))
    b.fibers.emplace_back(b.gens.space, matrix_from_json(f));
  if (static_cast<int>(b.fibers.size()) != b.space.size())
    throw std::runtime_error("frame count does not match point count");
  return b;
}

void save_bundle(const std::string& path, const SampledBundle& b) {
  std::ofstream os(path);
  if (!os) throw std::runtime_error("cannot write " + path);
  os << bundle_to_json(b).dump(1) << "\n";
}

SampledBundle load_bundle(const std::string& path) {
  std::ifstream is(path);
  if (!is) throw std::runtime_error("cannot read " + path);
  Json j = Json::parse(is);
  SampledBundle b = bundle_from_json(j);
  BundleReport rep = check_bundle(b);
  if (!rep.ok())
    throw std::runtime_error("bundle validation failed: membership " +
                             std::to_string(rep.membership) + ", equivariance " +
                             std::to_string(rep.equivariance) + ", fixed-point " +
                             std::to_string(rep.fixed_lagrangian) + ", continuity " +
                             std::to_string(rep.max_neighbor_distance));
  return b;
}

}  // namespace iqpv
