#include "klr/json_io.hpp"

#include <fstream>
#include <sstream>

namespace klr {

using nlohmann::json;

Quiver quiver_from_json(const json& j) {
  std::vector<std::string> vertices = j.at("vertices").get<std::vector<std::string>>();
  std::vector<std::pair<std::string, std::string>> arrows;
  for (const auto& a : j.at("arrows")) {
    if (!a.is_array() || a.size() != 2) throw Error("quiver arrows must be [source, sink] pairs");
    arrows.emplace_back(a[0].get<std::string>(), a[1].get<std::string>());
  }
  return Quiver(std::move(vertices), arrows);
}

Quiver load_quiver(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open quiver file: " + path);
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw Error("quiver file " + path + " is not valid JSON: " + e.what());
  }
  return quiver_from_json(j);
}

json quiver_to_json(const Quiver& q) {
  json arrows = json::array();
  for (const auto& [s, t] : q.arrows()) arrows.push_back(json::array({q.name(s), q.name(t)}));
  return json{{"vertices", q.vertex_names()}, {"arrows", arrows}};
}

json laurent_to_json(const LaurentPoly& p) {
  json j = json::object();
  for (const auto& [d, c] : p.terms()) j[std::to_string(d)] = to_int64(c);
  return j;
}

LaurentPoly laurent_from_json(const json& j) {
  LaurentPoly p;
  for (auto it = j.begin(); it != j.end(); ++it)
    p.add_term(std::stoi(it.key()), Int(it.value().get<long long>()));
  return p;
}

json series_to_json(const TruncatedSeries& s) {
  json coeffs = json::object();
  for (int d = s.lowest(); d <= s.bound(); ++d)
    if (s.coeff(d) != 0) coeffs[std::to_string(d)] = to_int64(s.coeff(d));
  return json{{"lowest", s.lowest()}, {"bound", s.bound()}, {"coeffs", coeffs}};
}

json weight_to_json(const Weight& w) { return json(w); }

Weight weight_from_json(const json& j) { return j.get<Weight>(); }

json character_to_json(const Quiver& q, const Character& ch) {
  json j = json::object();
  for (const auto& [w, p] : ch) j[word_str(q, w)] = laurent_to_json(p);
  return j;
}

json rat_to_json(const Rat& r) {
  if (denominator(r) == 1) return json(numerator(r).str());
  return json(numerator(r).str() + "/" + denominator(r).str());
}

Rat rat_from_json(const json& j) {
  std::string s = j.get<std::string>();
  auto slash = s.find('/');
  if (slash == std::string::npos) return Rat(Int(s));
  return Rat(Int(s.substr(0, slash)), Int(s.substr(slash + 1)));
}

static json matrix_to_json(const MatQ& m) {
  json rows = json::array();
  for (int r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (int c = 0; c < m.cols(); ++c) row.push_back(rat_to_json(m(r, c)));
    rows.push_back(std::move(row));
  }
  return rows;
}

static MatQ matrix_from_json(const json& j, int dim) {
  MatQ m(dim, dim);
  for (int r = 0; r < dim; ++r)
    for (int c = 0; c < dim; ++c) m(r, c) = rat_from_json(j.at(static_cast<size_t>(r)).at(static_cast<size_t>(c)));
  return m;
}

json module_to_json(const GradedModule& m) {
  json basis = json::array();
  for (const auto& b : m.basis()) basis.push_back(json::array({b.word, b.degree}));
  json z = json::array(), tau = json::array();
  int n = static_cast<int>(height(m.beta()));
  for (int j = 0; j < n; ++j) z.push_back(matrix_to_json(m.z(j)));
  for (int j = 0; j + 1 < n; ++j) tau.push_back(matrix_to_json(m.tau(j)));
  return json{{"beta", m.beta()}, {"basis", basis}, {"z", z}, {"tau", tau}};
}

GradedModule module_from_json(const json& j) {
  Weight beta = j.at("beta").get<Weight>();
  std::vector<GradedModule::BasisVec> basis;
  for (const auto& b : j.at("basis")) basis.push_back({b.at(0).get<int>(), b.at(1).get<int>()});
  int dim = static_cast<int>(basis.size());
  int n = static_cast<int>(height(beta));
  std::vector<MatQ> z, tau;
  for (int k = 0; k < n; ++k) z.push_back(matrix_from_json(j.at("z").at(static_cast<size_t>(k)), dim));
  for (int k = 0; k + 1 < n; ++k)
    tau.push_back(matrix_from_json(j.at("tau").at(static_cast<size_t>(k)), dim));
  return GradedModule(std::move(beta), std::move(basis), std::move(z), std::move(tau));
}

json table_to_json(const Quiver& q, const SimplesTable& t) {
  json entries = json::array();
  for (const auto& e : t.entries) {
    entries.push_back(json{{"label", e.label},
                           {"character", character_to_json(q, e.character)},
                           {"eps", e.eps},
                           {"eps_star", e.eps_star},
                           {"provenance", e.provenance},
                           {"module", module_to_json(e.module)}});
  }
  return json{{"beta", t.beta}, {"entries", entries}};
}

SimplesTable table_from_json(const Quiver& q, const json& j) {
  SimplesTable t;
  t.beta = j.at("beta").get<Weight>();
  for (const auto& je : j.at("entries")) {
    SimpleEntry e;
    e.label = je.at("label").get<std::string>();
    e.module = module_from_json(je.at("module"));
    e.eps = je.at("eps").get<std::vector<int>>();
    e.eps_star = je.at("eps_star").get<std::vector<int>>();
    e.provenance = je.at("provenance").get<std::string>();
    e.character = e.module.character(q);
    t.entries.push_back(std::move(e));
  }
  return t;
}

json crystal_element_to_json(const CrystalModel& m, const CrystalElement& b) {
  json eps = json::array(), epsStar = json::array();
  for (int i = 0; i < m.quiver().size(); ++i) {
    eps.push_back(m.eps(i, b));
    epsStar.push_back(m.eps_star(i, b));
  }
  std::vector<std::string> str;
  for (int l : b.string) str.push_back(m.quiver().name(l));
  return json{{"coords", b.coords},
              {"weight", m.weight_beta(b)},
              {"eps", eps},
              {"eps_star", epsStar},
              {"string", str}};
}

json crystal_graph_to_json(const CrystalModel& m, const CrystalTable& t) {
  json nodes = json::array(), edges = json::array();
  std::map<std::vector<int>, int> ids;
  for (int h = 0; h <= t.height_cap(); ++h)
    for (const Weight& w : t.weights_of_height(h))
      for (const CrystalElement& b : t.at(w)) {
        ids[b.coords] = static_cast<int>(nodes.size());
        nodes.push_back(crystal_element_to_json(m, b));
      }
  for (int h = 0; h < t.height_cap(); ++h)
    for (const Weight& w : t.weights_of_height(h))
      for (const CrystalElement& b : t.at(w)) {
        for (int i = 0; i < m.quiver().size(); ++i) {
          CrystalElement c = m.apply_f(i, b);
          auto it = ids.find(c.coords);
          if (it == ids.end()) continue;
          edges.push_back(json{{"from", ids.at(b.coords)}, {"to", it->second}, {"i", m.quiver().name(i)}});
        }
      }
  return json{{"height_cap", t.height_cap()}, {"nodes", nodes}, {"edges", edges}};
}

std::string crystal_graph_to_dot(const CrystalModel& m, const CrystalTable& t) {
  json g = crystal_graph_to_json(m, t);
  std::ostringstream os;
  os << "digraph crystal {\n  rankdir=TB;\n";
  int id = 0;
  for (const auto& node : g.at("nodes")) {
    os << "  n" << id << " [label=\"";
    const auto& coords = node.at("coords");
    os << "(";
    for (size_t k = 0; k < coords.size(); ++k) {
      if (k) os << ",";
      os << coords[k].get<int>();
    }
    os << ")\"];\n";
    ++id;
  }
  for (const auto& e : g.at("edges"))
    os << "  n" << e.at("from").get<int>() << " -> n" << e.at("to").get<int>() << " [label=\""
       << e.at("i").get<std::string>() << "\"];\n";
  os << "}\n";
  return os.str();
}

void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error("cannot write file: " + path);
  out << content;
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot read file: " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

}  // namespace klr
