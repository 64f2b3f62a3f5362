#include "modop/graph_json.hpp"

#include <fstream>
#include <sstream>

namespace modop {

namespace {

[[noreturn]] void schema(const std::string& where, const std::string& what) {
  throw JsonError(where + ": " + what);
}

const Json& field(const Json& j, const char* key, const std::string& where) {
  if (!j.is_object()) schema(where, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) schema(where, std::string("missing \"") + key + "\"");
  return *it;
}

int as_int(const Json& j, const std::string& where) {
  if (!j.is_number_integer()) schema(where, "expected an integer");
  return j.get<int>();
}

std::vector<int> int_array(const Json& j, const std::string& where) {
  if (!j.is_array()) schema(where, "expected an array");
  std::vector<int> out;
  for (std::size_t i = 0; i < j.size(); ++i) {
    out.push_back(as_int(j[i], where + "[" + std::to_string(i) + "]"));
  }
  return out;
}

Label as_label(const Json& j, const std::string& where) {
  if (j.is_number_integer()) return j.get<Label>();
  if (j.is_string()) {
    const auto s = j.get<std::string>();
    try {
      std::size_t used = 0;
      const long v = std::stol(s, &used);
      if (used == s.size()) return static_cast<Label>(v);
    } catch (const std::exception&) {
    }
  }
  schema(where, "labels must be integers or integer strings");
}

Rational as_rational(const Json& j, const std::string& where) {
  try {
    if (j.is_number_integer()) return Rational(j.get<long>());
    if (j.is_string()) return parse_rational(j.get<std::string>());
  } catch (const std::invalid_argument& e) {
    schema(where, e.what());
  }
  schema(where, "expected an exact rational \"p/q\"");
}

void require_valid(const ValidationReport& r, const std::string& where) {
  if (!r.ok()) schema(where, r.issues.front());
}

}  // namespace

Json parse_json(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw JsonError("malformed JSON at byte " + std::to_string(e.byte) + ": " + e.what(),
                    e.byte);
  }
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw JsonError("cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  try {
    return parse_json(ss.str());
  } catch (const JsonError& e) {
    throw JsonError(path + ": " + e.what(), e.byte);
  }
}

Json to_json(const Graph& g) {
  Json j;
  j["half_edges"] = g.num_half_edges();
  j["vertices"] = g.num_vertices;
  j["attach"] = g.attach;
  j["sigma"] = g.sigma;
  return j;
}

Json to_json(const RibbonGraph& rg) {
  Json j = to_json(rg.graph);
  if (rg.has_rotation()) j["rotation"] = rg.rho();
  if (rg.has_tail_labels()) {
    Json tails = Json::object();
    for (HalfEdge h = 0; h < rg.num_half_edges(); ++h) {
      if (rg.graph.is_tail(h)) tails[std::to_string(h)] = std::to_string(rg.tail_labels[h]);
    }
    j["tails"] = tails;
  }
  return j;
}

Json decorated_to_json(const RibbonGraph& rg) {
  Json j = to_json(rg);
  Json decorations = Json::array();
  for (Vertex v = 0; v < rg.num_vertices(); ++v) decorations.push_back(vertex_cycle_at(rg, v));
  j["decorations"] = decorations;
  return j;
}

Json to_json(const OrientedGraph& og) {
  Json j = to_json(og.graph);
  std::vector<Vertex> order;
  for (HalfEdge s : og.starts) order.push_back(og.graph.graph.attach[s]);
  j["vertex_order"] = order;
  j["starts"] = og.starts;
  if (!og.face_labels.empty()) j["face_labels"] = og.face_labels;
  return j;
}

Json to_json(const GradedVector& v) {
  Json out = Json::array();
  for (const auto& [code, t] : v.terms()) {
    Json term;
    term["gen"] = to_json(t.generator);
    term["coeff"] = to_string(t.coeff);
    term["degree"] = t.degree;
    out.push_back(term);
  }
  return out;
}

Json to_json(const SurfaceType& t) {
  Json comps = Json::array();
  for (const auto& c : t.components) {
    Json jc;
    jc["genus"] = c.genus;
    jc["cycles"] = c.cycles;
    comps.push_back(jc);
  }
  Json j;
  j["components"] = comps;
  return j;
}

Json to_json(const FrobeniusAlgebra& a) {
  Json j;
  j["dim"] = a.dim;
  Json mult = Json::array();
  for (int i = 0; i < a.dim; ++i) {
    Json row = Json::array();
    for (int k = 0; k < a.dim; ++k) {
      Json cell = Json::array();
      for (int l = 0; l < a.dim; ++l) cell.push_back(to_string(a.m(i, k, l)));
      row.push_back(cell);
    }
    mult.push_back(row);
  }
  j["mult"] = mult;
  Json trace = Json::array();
  for (const auto& t : a.trace) trace.push_back(to_string(t));
  j["trace"] = trace;
  return j;
}

Json to_json(const HomologyProfile& p) {
  Json j;
  j["degrees"] = p.degrees;
  Json dims = Json::object(), ranks = Json::object(), betti = Json::object();
  for (int k : p.degrees) {
    dims[std::to_string(k)] = p.dims.at(k);
    ranks[std::to_string(k)] = p.ranks.count(k) ? p.ranks.at(k) : 0;
    betti[std::to_string(k)] = p.betti.at(k);
  }
  j["dims"] = dims;
  j["ranks"] = ranks;
  j["betti"] = betti;
  j["euler_from_dims"] = p.euler_from_dims.get_str();
  j["euler_from_betti"] = p.euler_from_betti.get_str();
  return j;
}

Json to_json(const SparseRationalMatrix& m) {
  Json j;
  j["rows"] = m.rows();
  j["cols"] = m.cols();
  Json entries = Json::array();
  for (const auto& t : m.triplets()) {
    entries.push_back(Json::array({t.row, t.col, to_string(t.value)}));
  }
  j["entries"] = entries;
  return j;
}

Json to_json(const RibbonComplex& c) {
  Json j;
  Json type;
  type["g"] = c.type.genus;
  type["n"] = c.type.boundaries;
  type["legs"] = c.type.legs;
  type["mode"] = c.type.mode == CycleMode::Labeled ? "labeled" : "unlabeled";
  j["type"] = type;
  Json degrees = Json::object();
  for (const auto& [k, gens] : c.basis) {
    Json list = Json::array();
    for (const auto& g : gens) {
      Json jg = to_json(g.representative);
      jg["code"] = to_hex(g.code);
      jg["automorphisms"] = g.automorphism_order;
      list.push_back(jg);
    }
    degrees[std::to_string(k)] = list;
  }
  j["degrees"] = degrees;
  Json boundaries = Json::array();
  for (const auto& [k, d] : c.chain.boundaries) {
    Json jb = to_json(d);
    jb["degree"] = k;
    boundaries.push_back(jb);
  }
  j["boundaries"] = boundaries;
  j["killed_classes"] = c.killed_classes;
  j["orbifold_euler"] = to_string(c.orbifold_euler);
  return j;
}

Graph graph_from_json(const Json& j) {
  Graph g;
  const int h = as_int(field(j, "half_edges", "graph"), "graph.half_edges");
  g.num_vertices = as_int(field(j, "vertices", "graph"), "graph.vertices");
  g.attach = int_array(field(j, "attach", "graph"), "graph.attach");
  g.sigma = int_array(field(j, "sigma", "graph"), "graph.sigma");
  if (h < 0 || g.num_vertices < 0) schema("graph", "negative size");
  if (static_cast<int>(g.attach.size()) != h || static_cast<int>(g.sigma.size()) != h) {
    schema("graph", "attach and sigma need one entry per half-edge");
  }
  require_valid(validate(g), "graph");
  return g;
}

RibbonGraph ribbon_from_json(const Json& j) {
  RibbonGraph rg;
  rg.graph = graph_from_json(j);
  const int n = rg.num_half_edges();
  if (j.contains("rotation")) {
    rg.rotation = int_array(j["rotation"], "graph.rotation");
  } else if (j.contains("decorations")) {
    const Json& dec = j["decorations"];
    if (!dec.is_array() || static_cast<int>(dec.size()) != rg.num_vertices()) {
      schema("graph.decorations", "expected one cyclic order per vertex");
    }
    std::vector<HalfEdge> rot(n, -1);
    for (std::size_t v = 0; v < dec.size(); ++v) {
      const std::string where = "graph.decorations[" + std::to_string(v) + "]";
      const auto cyc = int_array(dec[v], where);
      for (std::size_t i = 0; i < cyc.size(); ++i) {
        const HalfEdge x = cyc[i];
        if (x < 0 || x >= n || rot[x] != -1) schema(where, "bad or repeated half-edge");
        if (rg.graph.attach[x] != static_cast<Vertex>(v)) {
          schema(where, "half-edge " + std::to_string(x) + " is not at this vertex");
        }
        rot[x] = cyc[(i + 1) % cyc.size()];
      }
    }
    rg.rotation = rot;
  }
  if (j.contains("tails")) {
    const Json& tails = j["tails"];
    if (!tails.is_object()) schema("graph.tails", "expected an object");
    rg.tail_labels.assign(n, kNoLabel);
    for (const auto& [key, value] : tails.items()) {
      const std::string where = "graph.tails." + key;
      const HalfEdge h = as_label(Json(key), where);
      if (h < 0 || h >= n || !rg.graph.is_tail(h)) schema(where, "not a tail");
      rg.tail_labels[h] = as_label(value, where);
      if (rg.tail_labels[h] == kNoLabel) schema(where, "label -1 is reserved");
    }
    for (HalfEdge h = 0; h < n; ++h) {
      if (rg.graph.is_tail(h) && rg.tail_labels[h] == kNoLabel) {
        schema("graph.tails", "tail " + std::to_string(h) + " has no label");
      }
    }
    if (rg.tail_labels.empty() || std::all_of(rg.tail_labels.begin(), rg.tail_labels.end(),
                                              [](Label l) { return l == kNoLabel; })) {
      rg.tail_labels.clear();
    }
  }
  require_valid(validate(rg), "graph");
  return rg;
}

OrientedGraph generator_from_json(const Json& j) {
  OrientedGraph og;
  og.graph = ribbon_from_json(j);
  if (!og.graph.has_rotation()) schema("generator", "needs a rotation or decorations");
  if (j.contains("starts")) {
    og.starts = int_array(j["starts"], "generator.starts");
  } else {
    const auto order = int_array(field(j, "vertex_order", "generator"),
                                 "generator.vertex_order");
    const auto defaults = default_starts(og.graph);
    for (Vertex v : order) {
      if (v < 0 || v >= og.graph.num_vertices()) {
        schema("generator.vertex_order", "vertex out of range");
      }
      og.starts.push_back(defaults[v]);
    }
  }
  try {
    check_starts(og.graph, og.starts);
  } catch (const std::invalid_argument& e) {
    schema("generator", e.what());
  }
  if (j.contains("face_labels")) {
    og.face_labels = int_array(j["face_labels"], "generator.face_labels");
    if (static_cast<int>(og.face_labels.size()) != og.graph.num_half_edges()) {
      schema("generator.face_labels", "one entry per half-edge");
    }
  }
  return og;
}

GradedVector vector_from_json(const Json& j) {
  if (!j.is_array()) schema("vector", "expected an array of terms");
  GradedVector v;
  for (std::size_t i = 0; i < j.size(); ++i) {
    const std::string where = "vector[" + std::to_string(i) + "]";
    const OrientedGraph g = generator_from_json(field(j[i], "gen", where));
    const Rational c = as_rational(field(j[i], "coeff", where), where + ".coeff");
    try {
      v.add(g, c);
    } catch (const std::invalid_argument& e) {
      schema(where, e.what());
    }
  }
  return v;
}

SurfaceType surface_from_json(const Json& j) {
  SurfaceType t;
  const Json& comps = field(j, "components", "surface");
  if (!comps.is_array()) schema("surface.components", "expected an array");
  for (std::size_t i = 0; i < comps.size(); ++i) {
    const std::string where = "surface.components[" + std::to_string(i) + "]";
    SurfaceComponent c;
    c.genus = as_int(field(comps[i], "genus", where), where + ".genus");
    if (c.genus < 0) schema(where, "negative genus");
    const Json& cycles = field(comps[i], "cycles", where);
    if (!cycles.is_array() || cycles.empty()) schema(where, "needs at least one cycle");
    for (std::size_t k = 0; k < cycles.size(); ++k) {
      const std::string cw = where + ".cycles[" + std::to_string(k) + "]";
      if (!cycles[k].is_array()) schema(cw, "expected an array");
      std::vector<Label> cyc;
      for (const auto& l : cycles[k]) cyc.push_back(as_label(l, cw));
      c.cycles.push_back(cyc);
    }
    t.components.push_back(c);
  }
  return normalize_surface(t);
}

FrobeniusAlgebra algebra_from_json(const Json& j) {
  FrobeniusAlgebra a;
  a.dim = as_int(field(j, "dim", "algebra"), "algebra.dim");
  if (a.dim < 1) schema("algebra.dim", "must be positive");
  const Json& mult = field(j, "mult", "algebra");
  const Json& trace = field(j, "trace", "algebra");
  const auto d = static_cast<std::size_t>(a.dim);
  if (!mult.is_array() || mult.size() != d) schema("algebra.mult", "expected dim rows");
  for (std::size_t i = 0; i < d; ++i) {
    if (!mult[i].is_array() || mult[i].size() != d) {
      schema("algebra.mult[" + std::to_string(i) + "]", "expected dim entries");
    }
    for (std::size_t k = 0; k < d; ++k) {
      const std::string where =
          "algebra.mult[" + std::to_string(i) + "][" + std::to_string(k) + "]";
      if (!mult[i][k].is_array() || mult[i][k].size() != d) {
        schema(where, "expected dim coefficients");
      }
      for (std::size_t l = 0; l < d; ++l) {
        a.mult.push_back(as_rational(mult[i][k][l], where));
      }
    }
  }
  if (!trace.is_array() || trace.size() != d) schema("algebra.trace", "expected dim entries");
  for (std::size_t i = 0; i < d; ++i) {
    a.trace.push_back(as_rational(trace[i], "algebra.trace[" + std::to_string(i) + "]"));
  }
  return a;
}

}  // namespace modop
