#pragma once

// JSON forms of the library's objects.
//
// Graph:      {"half_edges": k, "vertices": m, "attach": [...], "sigma": [...],
//              "rotation": [...] (optional), "tails": {"h": "label"} (optional)}
// Decorated:  Graph plus "decorations": [[half-edges of v in cyclic order], ...]
// Generator:  Graph plus "vertex_order": [v, ...] and optional "starts"
// Vector:     [{"gen": Generator, "coeff": "p/q"}, ...]
// Surface:    {"components": [{"genus": g, "cycles": [[labels], ...]}]}
// Algebra:    {"dim": d, "mult": [[["p/q", ...]]], "trace": ["p/q", ...]}

#include <stdexcept>
#include <string>

#include <json.hpp>

#include "modop/ainf.hpp"
#include "modop/frobenius.hpp"
#include "modop/homology.hpp"
#include "modop/ribbon_complex.hpp"
#include "modop/surface_type.hpp"

namespace modop {

using Json = nlohmann::ordered_json;

// Syntax errors carry the byte offset, schema errors the JSON path.
class JsonError : public std::runtime_error {
 public:
  JsonError(const std::string& what, std::size_t byte = 0)
      : std::runtime_error(what), byte(byte) {}
  std::size_t byte;
};

Json parse_json(const std::string& text);
Json read_json_file(const std::string& path);

Json to_json(const Graph& g);
Json to_json(const RibbonGraph& rg);
Json decorated_to_json(const RibbonGraph& rg);
Json to_json(const OrientedGraph& og);
Json to_json(const GradedVector& v);
Json to_json(const SurfaceType& t);
Json to_json(const FrobeniusAlgebra& a);
Json to_json(const HomologyProfile& p);
Json to_json(const SparseRationalMatrix& m);
Json to_json(const RibbonComplex& c);

Graph graph_from_json(const Json& j);
// Rotation from "rotation" or, failing that, from "decorations".
RibbonGraph ribbon_from_json(const Json& j);
OrientedGraph generator_from_json(const Json& j);
GradedVector vector_from_json(const Json& j);
SurfaceType surface_from_json(const Json& j);
FrobeniusAlgebra algebra_from_json(const Json& j);

}  // namespace modop
