#include "omstretch/serialization.hpp"

#include <cstdio>
#include <fstream>
#include <ostream>

#include "omstretch/errors.hpp"

namespace omstretch {

namespace {

Json document() {
  Json j = Json::object();
  j["schema_version"] = kSchemaVersion;
  return j;
}

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw ParseError(std::string("missing field '") + key + "'");
  return j.at(key);
}

int int_field(const Json& j, const char* key) {
  const Json& v = field(j, key);
  if (!v.is_number_integer()) throw ParseError(std::string("field '") + key + "' must be an integer");
  return v.get<int>();
}

std::string format_double(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

}  // namespace

Json to_json(ElementSet s) {
  Json out = Json::array();
  for (int e : s.elements()) out.push_back(e);
  return out;
}

Json to_json(const SignedSet& s) { return Json{{"pos", to_json(s.pos)}, {"neg", to_json(s.neg)}}; }

Json to_json(const OrientedMatroid& m) {
  Json j = document();
  j["n"] = m.n();
  j["d"] = m.d();
  j["acyclic"] = m.acyclic();
  j["uniform"] = m.uniform();
  Json circuits = Json::array();
  for (const Circuit& c : m.circuits()) circuits.push_back(to_json(c.signs()));
  j["circuits"] = std::move(circuits);
  return j;
}

Json to_json(const PointConfiguration& config) {
  Json j = document();
  j["d"] = config.d();
  Json points = Json::array();
  for (int i = 1; i <= config.n(); ++i) {
    Json p = Json::array();
    for (int k = 0; k < config.d(); ++k) p.push_back(config.point(i)(k));
    points.push_back(std::move(p));
  }
  j["points"] = std::move(points);
  return j;
}

Json to_json(const CircuitGraph& g) {
  Json j = document();
  Json vertices = Json::array();
  for (const SignedCircuitVertex& v : g.vertices()) {
    Json entry = to_json(v.circuit.signs());
    entry["sign"] = to_int(v.orientation);
    entry["antipode"] = g.antipode(static_cast<int>(vertices.size()));
    vertices.push_back(std::move(entry));
  }
  Json edges = Json::array();
  for (const auto& [a, b] : g.edges()) edges.push_back(Json::array({a, b}));
  Json cycles = Json::array();
  for (const Cycle& c : g.cycles()) {
    cycles.push_back(Json{{"support", to_json(c.support)}, {"vertices", c.vertices}, {"edge_ids", c.edge_ids}});
  }
  j["vertices"] = std::move(vertices);
  j["edges"] = std::move(edges);
  j["cycles"] = std::move(cycles);
  return j;
}

Json to_json(const EmbeddedSphere& s) {
  Json j = document();
  j["matroid"] = to_json(s.matroid());
  j["graph"] = to_json(s.graph());
  Json positions = Json::array();
  for (const FacePoint& p : s.positions()) {
    Json row = Json::array();
    for (Eigen::Index k = 0; k < p.coords().size(); ++k) row.push_back(p.coords()(k));
    positions.push_back(std::move(row));
  }
  j["positions"] = std::move(positions);
  return j;
}

Json to_json(const SphereReport& report) {
  Json j = document();
  j["ok"] = report.ok();
  j["expected_dimension"] = report.expected_dimension;
  j["euler_characteristic"] = report.euler_characteristic;
  j["expected_euler_characteristic"] = report.expected_euler_characteristic;
  j["connected"] = report.connected;
  j["even_degrees"] = report.even_degrees;
  j["antipodal"] = report.antipodal;
  j["cycles_partition_edges"] = report.cycles_partition_edges;
  j["failures"] = report.failures;
  return j;
}

Json to_json(const MatroidPoset& poset) {
  Json j = document();
  Json elements = Json::array();
  for (const OrientedMatroid& m : poset.elements()) {
    Json circuits = Json::array();
    for (const Circuit& c : m.circuits()) circuits.push_back(to_json(c.signs()));
    elements.push_back(Json{{"uniform", m.uniform()}, {"circuits", std::move(circuits)}});
  }
  Json hasse = Json::array();
  for (const auto& [a, b] : poset.hasse_edges()) hasse.push_back(Json::array({a, b}));
  j["elements"] = std::move(elements);
  j["hasse"] = std::move(hasse);
  j["maximal"] = poset.maximal_elements();
  return j;
}

Json to_json(const SimplicialComplex& complex) {
  Json j = document();
  j["dimension"] = complex.dimension();
  j["f_vector"] = complex.f_vector();
  j["euler_characteristic"] = complex.euler_characteristic();
  j["betti_gf2"] = gf2_betti(complex);
  return j;
}

Json to_json(const CellStructureReport& report) {
  Json j = document();
  j["face_vector"] = Json::array({report.vertices, report.edges, report.faces});
  j["euler_characteristic"] = report.euler_characteristic;
  j["squares"] = report.squares;
  j["triangles"] = report.triangles;
  j["bijection"] = report.bijection;
  Json matches = Json::array();
  for (const auto& [circuit, face] : report.matches) matches.push_back(Json{{"circuit", circuit}, {"face", face}});
  j["matches"] = std::move(matches);
  return j;
}

ElementSet element_set_from_json(const Json& j) {
  if (!j.is_array()) throw ParseError("element set must be an array of labels");
  ElementSet s;
  for (const Json& e : j) {
    if (!e.is_number_integer()) throw ParseError("element labels must be integers");
    const int label = e.get<int>();
    if (label < 1 || label > kMaxElements) throw ParseError("element label out of range: " + e.dump());
    s.insert(label);
  }
  return s;
}

OrientedMatroid matroid_from_json(const Json& j) {
  const int n = int_field(j, "n");
  const int d = int_field(j, "d");
  const Json& list = field(j, "circuits");
  if (!list.is_array()) throw ParseError("'circuits' must be an array");
  std::vector<Circuit> circuits;
  for (const Json& c : list) {
    circuits.emplace_back(element_set_from_json(field(c, "pos")), element_set_from_json(field(c, "neg")));
  }
  return OrientedMatroid(GroundSet::make(n, d), std::move(circuits));
}

PointConfiguration config_from_json(const Json& j) {
  const int d = int_field(j, "d");
  const Json& list = field(j, "points");
  if (!list.is_array()) throw ParseError("'points' must be an array");
  std::vector<std::vector<double>> points;
  for (const Json& p : list) {
    if (!p.is_array()) throw ParseError("each point must be an array of coordinates");
    std::vector<double> coords;
    for (const Json& x : p) {
      if (!x.is_number()) throw ParseError("coordinates must be numbers");
      coords.push_back(x.get<double>());
    }
    points.push_back(std::move(coords));
  }
  return PointConfiguration(d, points);
}

SimplicialComplex complex_from_json(const Json& j) {
  const Json& list = field(j, "simplices");
  if (!list.is_array()) throw ParseError("'simplices' must be an array");
  std::vector<std::vector<int>> simplices;
  for (const Json& s : list) {
    if (!s.is_array() || s.empty()) throw ParseError("each simplex must be a nonempty array of vertex ids");
    std::vector<int> vertices;
    for (const Json& v : s) {
      if (!v.is_number_integer()) throw ParseError("vertex ids must be integers");
      vertices.push_back(v.get<int>());
    }
    simplices.push_back(std::move(vertices));
  }
  return SimplicialComplex::from_simplices(simplices);
}

Json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path.string());
  try {
    return Json::parse(in);
  } catch (const Json::exception& e) {
    throw ParseError(path.string() + ": " + e.what());
  }
}

void write_json_file(const std::filesystem::path& path, const Json& j) {
  std::ofstream out(path);
  if (!out) throw ArgumentError("cannot write " + path.string());
  out << j.dump(2) << '\n';
}

void write_trace_csv(std::ostream& out, const FlowTrace& trace) {
  out << "t,curv_max,curv_mean,vel_max\n";
  for (const FlowSample& s : trace.samples) {
    out << format_double(s.t) << ',' << format_double(s.curv_max) << ',' << format_double(s.curv_mean) << ','
        << format_double(s.vel_max) << '\n';
  }
}

}  // namespace omstretch
