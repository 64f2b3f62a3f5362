// Command-line front end: ribbon graph complexes, A-infinity generators,
// open TFT evaluation and operad axiom checks.
//
// Exit codes: 0 ok, 1 a check failed, 2 usage error or unreadable input.

#include <CLI11.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "modop/ainf.hpp"
#include "modop/enumeration_oracle.hpp"
#include "modop/euler_oracle.hpp"
#include "modop/frobenius.hpp"
#include "modop/graph_json.hpp"
#include "modop/operad.hpp"
#include "modop/ribbon_complex.hpp"
#include "modop/surface_type.hpp"

using namespace modop;

namespace {

constexpr int kExitCheck = 1;
constexpr int kExitUsage = 2;

// Raised for a failed check after the report has been printed.
struct CheckFailed {};

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

enum class Format { Json, Table, Csv };

std::string cell(const Json& v) {
  if (v.is_string()) return v.get<std::string>();
  return v.dump();
}

bool is_table(const Json& v) {
  return v.is_array() && !v.empty() && v.front().is_object();
}

void print_table(std::ostream& out, const Json& rows) {
  std::vector<std::string> cols;
  for (const auto& [k, v] : rows.front().items()) cols.push_back(k);
  std::vector<std::size_t> width(cols.size());
  for (std::size_t c = 0; c < cols.size(); ++c) width[c] = cols[c].size();
  for (const auto& r : rows) {
    for (std::size_t c = 0; c < cols.size(); ++c) {
      width[c] = std::max(width[c], cell(r.value(cols[c], Json())).size());
    }
  }
  auto line = [&](auto get) {
    for (std::size_t c = 0; c < cols.size(); ++c) {
      out << (c ? "  " : "") << std::left << std::setw(static_cast<int>(width[c])) << get(c);
    }
    out << "\n";
  };
  line([&](std::size_t c) { return cols[c]; });
  line([&](std::size_t c) { return std::string(width[c], '-'); });
  for (const auto& r : rows) line([&](std::size_t c) { return cell(r.value(cols[c], Json())); });
}

void print_csv(std::ostream& out, const Json& rows) {
  std::vector<std::string> cols;
  for (const auto& [k, v] : rows.front().items()) cols.push_back(k);
  auto quote = [](const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string q = "\"";
    for (char ch : s) q += ch == '"' ? std::string("\"\"") : std::string(1, ch);
    return q + "\"";
  };
  for (std::size_t c = 0; c < cols.size(); ++c) out << (c ? "," : "") << quote(cols[c]);
  out << "\n";
  for (const auto& r : rows) {
    for (std::size_t c = 0; c < cols.size(); ++c) {
      out << (c ? "," : "") << quote(cell(r.value(cols[c], Json())));
    }
    out << "\n";
  }
}

// json: the document. table: scalars as "key: value", arrays of objects as
// aligned tables. csv: the first array of objects, or key,value pairs.
void emit(const Json& doc, Format f) {
  if (f == Format::Json) {
    std::cout << doc.dump(2) << "\n";
    return;
  }
  if (f == Format::Csv) {
    for (const auto& [k, v] : doc.items()) {
      if (is_table(v)) {
        print_csv(std::cout, v);
        return;
      }
    }
    std::cout << "key,value\n";
    for (const auto& [k, v] : doc.items()) std::cout << k << "," << cell(v) << "\n";
    return;
  }
  for (const auto& [k, v] : doc.items()) {
    if (is_table(v)) continue;
    std::cout << k << ": " << cell(v) << "\n";
  }
  for (const auto& [k, v] : doc.items()) {
    if (!is_table(v)) continue;
    std::cout << "\n" << k << "\n";
    print_table(std::cout, v);
  }
}

// --- surface types and the cache ------------------------------------------

struct TypeArgs {
  int g = 0;
  int n = 1;
  std::vector<Label> legs;
  bool unlabeled = false;
  int cap = kDefaultEdgeCap;

  ComplexType type() const {
    return ComplexType{g, n, legs, unlabeled ? CycleMode::Unlabeled : CycleMode::Labeled};
  }
  std::string key() const {
    std::string s = "g" + std::to_string(g) + "_n" + std::to_string(n) + "_legs";
    for (Label l : legs) s += "-" + std::to_string(l);
    return s + (unlabeled ? "_unlabeled" : "_labeled") + "_cap" + std::to_string(cap);
  }
};

void add_type_options(CLI::App* cmd, TypeArgs& t) {
  cmd->add_option("--g", t.g, "genus")->required()->check(CLI::NonNegativeNumber);
  cmd->add_option("--n", t.n, "boundary cycles")->required()->check(CLI::PositiveNumber);
  cmd->add_option("--legs", t.legs, "leg labels, comma separated")->delimiter(',');
  cmd->add_flag("--unlabeled", t.unlabeled, "boundary cycles carry no labels");
  cmd->add_option("--cap", t.cap, "largest number of edges to enumerate")
      ->check(CLI::PositiveNumber);
}

// Results keyed by command and parameters under $MODOP_CACHE_DIR, if set.
std::optional<Json> cache_read(const std::string& key) {
  const char* dir = std::getenv("MODOP_CACHE_DIR");
  if (!dir || !*dir) return std::nullopt;
  const auto path = std::filesystem::path(dir) / (key + ".json");
  if (!std::filesystem::exists(path)) return std::nullopt;
  try {
    return read_json_file(path.string());
  } catch (const JsonError&) {
    return std::nullopt;  // a damaged entry is recomputed
  }
}

void cache_write(const std::string& key, const Json& value) {
  const char* dir = std::getenv("MODOP_CACHE_DIR");
  if (!dir || !*dir) return;
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  std::ofstream out(std::filesystem::path(dir) / (key + ".json"));
  if (out) out << value.dump() << "\n";
}

// --- ribbon enumerate -------------------------------------------------------

int cmd_ribbon_enumerate(const TypeArgs& a, bool oracle, Format f) {
  const ComplexType t = a.type();
  if (oracle && is_stable(t)) {
    const int e = max_edges(t);
    if (2 * e + static_cast<int>(t.legs.size()) > kOracleMaxHalfEdges) {
      throw UsageError("--oracle: " + std::to_string(e) + " edges with " +
                       std::to_string(t.legs.size()) + " legs exceed the oracle cap of " +
                       std::to_string(kOracleMaxHalfEdges) + " half-edges");
    }
  }
  const auto classes = enumerate_classes(t, a.cap);
  Json doc;
  doc["type"] = describe(t);
  std::map<int, std::array<int, 3>> per_degree;  // classes, killed, basis
  for (int k = 0; k <= top_degree(t); ++k) per_degree[k] = {0, 0, 0};
  std::map<int, long> per_edges;
  Json rows = Json::array();
  for (const auto& c : classes) {
    auto& d = per_degree[c.degree];
    ++d[0];
    ++d[c.killed ? 1 : 2];
    ++per_edges[c.edges];
    rows.push_back({{"degree", c.degree},
                    {"edges", c.edges},
                    {"automorphisms", c.automorphism_order},
                    {"killed", c.killed},
                    {"code", to_hex(c.code)}});
  }
  Json graded = Json::array();
  for (const auto& [k, d] : per_degree) {
    graded.push_back({{"degree", k}, {"classes", d[0]}, {"killed", d[1]}, {"basis", d[2]}});
  }
  doc["total_classes"] = classes.size();
  doc["by_degree"] = graded;
  bool agree = true;
  if (oracle) {
    Json cmp = Json::array();
    for (int e = min_edges(t); e <= max_edges(t); ++e) {
      const Integer want = oracle_enumerate(t, e);
      const long have = per_edges.count(e) ? per_edges.at(e) : 0;
      const bool ok = Integer(have) == want;
      agree = agree && ok;
      cmp.push_back({{"edges", e}, {"classes", have}, {"oracle", want.get_str()}, {"agree", ok}});
    }
    doc["oracle_agrees"] = agree;
    doc["oracle"] = cmp;
  }
  doc["classes"] = rows;
  emit(doc, f);
  if (!agree) throw CheckFailed{};
  return 0;
}

// --- homology and euler -----------------------------------------------------

int cmd_homology(const TypeArgs& a, bool dense, Format f) {
  const ComplexType t = a.type();
  const std::string key = "homology_" + a.key() + (dense ? "_dense" : "_sparse");
  Json doc;
  if (auto cached = cache_read(key)) {
    doc = *cached;
  } else {
    const HomologyProfile p =
        moduli_homology(t, a.cap, dense ? RankMethod::Dense : RankMethod::Sparse);
    doc["type"] = describe(t);
    doc["euler_from_dims"] = p.euler_from_dims.get_str();
    doc["euler_from_betti"] = p.euler_from_betti.get_str();
    Json rows = Json::array();
    for (int k : p.degrees) {
      rows.push_back({{"degree", k},
                      {"dim", p.dims.at(k)},
                      {"rank", p.ranks.count(k) ? p.ranks.at(k) : 0},
                      {"betti", p.betti.at(k)}});
    }
    doc["degrees"] = rows;
    cache_write(key, doc);
  }
  emit(doc, f);
  return 0;
}

int cmd_euler(const TypeArgs& a, bool orbifold, Format f) {
  const ComplexType t = a.type();
  Json doc;
  doc["type"] = describe(t);
  if (!orbifold) {
    const std::string key = "euler_" + a.key();
    if (auto cached = cache_read(key)) {
      emit(*cached, f);
      return 0;
    }
    Integer chi = 0;
    for (const auto& [k, gens] : enumerate_generators(t, a.cap)) {
      chi += (k % 2 == 0 ? 1 : -1) * static_cast<long>(gens.size());
    }
    doc["euler"] = chi.get_str();
    cache_write(key, doc);
    emit(doc, f);
    return 0;
  }
  const std::string key = "orbifold_" + a.key();
  if (auto cached = cache_read(key)) {
    doc = *cached;
  } else {
    doc["orbifold_euler"] = to_string(orbifold_euler(t, a.cap));
    if (t.legs.empty()) {
      Rational want = harer_zagier_euler(t.genus, t.boundaries);
      if (t.mode == CycleMode::Unlabeled) {
        for (int k = 2; k <= t.boundaries; ++k) want /= k;
      }
      doc["oracle"] = to_string(want);
      doc["oracle_agrees"] = to_string(want) == doc["orbifold_euler"].get<std::string>();
    } else {
      doc["oracle"] = "none (no closed form with legs)";
    }
    cache_write(key, doc);
  }
  emit(doc, f);
  if (doc.contains("oracle_agrees") && !doc["oracle_agrees"].get<bool>()) throw CheckFailed{};
  return 0;
}

// --- ainf -------------------------------------------------------------------

// "corolla:1,2,3" or a path to a generator or vector JSON file.
GradedVector load_vector(const std::string& source) {
  const std::string prefix = "corolla:";
  if (source.rfind(prefix, 0) == 0) {
    std::vector<Label> labels;
    std::stringstream ss(source.substr(prefix.size()));
    std::string item;
    while (std::getline(ss, item, ',')) {
      try {
        labels.push_back(std::stoi(item));
      } catch (const std::exception&) {
        throw UsageError("bad corolla label '" + item + "'");
      }
    }
    return GradedVector{ainf_corolla(labels)};
  }
  const Json j = read_json_file(source);
  if (j.is_array()) return vector_from_json(j);
  return GradedVector{generator_from_json(j)};
}

void emit_vector(const GradedVector& v, Format f) {
  if (f == Format::Json) {
    std::cout << to_json(v).dump(2) << "\n";
    return;
  }
  Json doc;
  doc["terms"] = v.size();
  Json rows = Json::array();
  for (const auto& [code, t] : v.terms()) {
    rows.push_back({{"coeff", to_string(t.coeff)},
                    {"degree", t.degree},
                    {"generator", describe(t.generator)}});
  }
  if (!rows.empty()) doc["vector"] = rows;
  emit(doc, f);
}

int cmd_ainf_check(int max_tails, int random, unsigned seed, Format f) {
  const auto sq = verify_d_squared(max_tails, split_sign, random, seed);
  const auto audit = degree_audit(max_tails);
  Json doc;
  doc["d_squared"] = sq.ok ? "ok" : "FAILED";
  doc["generators"] = sq.generators;
  if (!sq.ok) doc["d_squared_witness"] = sq.witness;
  doc["degree_audit"] = audit.ok ? "ok" : "FAILED";
  if (!audit.ok) doc["degree_witness"] = audit.witness;
  emit(doc, f);
  if (!sq.ok || !audit.ok) throw CheckFailed{};
  return 0;
}

// --- tft --------------------------------------------------------------------

FrobeniusAlgebra load_algebra(const std::string& path, const std::string& builtin) {
  if (!builtin.empty()) {
    if (builtin == "ground") return ground_field();
    if (builtin == "m2") return matrix_algebra_2();
    if (builtin == "z2") return group_algebra_z2();
    throw UsageError("unknown builtin algebra '" + builtin + "' (ground, m2, z2)");
  }
  if (path.empty()) throw UsageError("give --algebra FILE or --builtin NAME");
  return algebra_from_json(read_json_file(path));
}

int cmd_tft_validate(const FrobeniusAlgebra& a, Format f) {
  const auto rep = validate_frobenius(a);
  Json doc;
  doc["dim"] = a.dim;
  doc["valid"] = rep.ok;
  Json rows = Json::array();
  for (const auto& v : rep.violations) rows.push_back({{"violation", v}});
  if (!rows.empty()) doc["violations"] = rows;
  emit(doc, f);
  if (!rep.ok) throw CheckFailed{};
  return 0;
}

int cmd_tft_eval(const FrobeniusAlgebra& a, const std::string& graph_path,
                 const std::string& insert_path, Format f) {
  const auto rep = validate_frobenius(a);
  if (!rep.ok) throw UsageError("algebra is not Frobenius: " + rep.violations.front());
  const RibbonGraph d = ribbon_from_json(read_json_file(graph_path));
  Json doc;
  doc["surface_type"] = describe(surface_type(d));
  if (!insert_path.empty()) {
    const Json j = read_json_file(insert_path);
    if (!j.is_object()) throw JsonError("insertions: expected an object label -> vector");
    std::map<Label, std::vector<Rational>> ins;
    for (const auto& [k, v] : j.items()) {
      std::vector<Rational> vec;
      if (!v.is_array()) throw JsonError("insertions." + k + ": expected an array");
      for (const auto& x : v) {
        try {
          vec.push_back(parse_rational(x.is_string() ? x.get<std::string>() : x.dump()));
        } catch (const std::invalid_argument& e) {
          throw JsonError("insertions." + k + ": " + e.what());
        }
      }
      ins[std::stoi(k)] = vec;
    }
    doc["value"] = to_string(evaluate_surface(a, d, ins));
  } else {
    const EndElement v = evaluate_surface(a, d);
    if (v.labels.empty()) {
      doc["value"] = to_string(v.data.front());
    } else {
      doc["labels"] = v.labels;
      Json data = Json::array();
      for (const auto& x : v.data) data.push_back(to_string(x));
      doc["functional"] = data;
    }
  }
  emit(doc, f);
  return 0;
}

// --- operad-check -----------------------------------------------------------

int cmd_operad_check(const std::string& which, int bound, int edges, Format f) {
  AxiomReport rep;
  if (which == "assoc") {
    rep = check_cyclic_axioms(AssocOperad{}, bound);
  } else if (which == "comm") {
    rep = check_cyclic_axioms(CommutativeOperad{}, bound);
  } else if (which == "mod-assoc") {
    rep = check_modular_axioms(ModAssocOperad{}, bound, edges);
  } else {
    rep = check_same_operations(ModAssocOperad{}, SurfaceSurgeryOperad{}, bound, edges);
  }
  Json doc;
  doc["operad"] = which;
  doc["bound"] = bound;
  if (which == "mod-assoc" || which == "surface-types") doc["edges"] = edges;
  doc["checks"] = rep.checks;
  doc["result"] = rep.ok ? "pass" : "FAIL";
  if (!rep.ok) {
    doc["axiom"] = rep.axiom;
    doc["witness"] = rep.witness;
  }
  emit(doc, f);
  if (!rep.ok) throw CheckFailed{};
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"modop: ribbon graph complexes, modular operads and open TFTs"};
  app.require_subcommand(1);
  std::string format_name = "table";
  app.add_option("--format", format_name, "output format")
      ->check(CLI::IsMember({"json", "table", "csv"}));
  app.fallthrough();

  std::function<int(Format)> run;

  // ribbon enumerate
  auto* ribbon = app.add_subcommand("ribbon", "ribbon graph generators")->require_subcommand(1);
  auto* enumerate = ribbon->add_subcommand("enumerate", "classes of a surface type by degree");
  TypeArgs enum_args;
  bool with_oracle = false;
  add_type_options(enumerate, enum_args);
  enumerate->add_flag("--oracle", with_oracle, "compare counts with the brute-force oracle");
  enumerate->callback([&] {
    run = [&](Format f) { return cmd_ribbon_enumerate(enum_args, with_oracle, f); };
  });

  // homology
  auto* homology = app.add_subcommand("homology", "Betti numbers of the ribbon graph complex");
  TypeArgs hom_args;
  bool dense = false;
  add_type_options(homology, hom_args);
  homology->add_flag("--dense", dense, "use dense elimination for ranks");
  homology->callback([&] { run = [&](Format f) { return cmd_homology(hom_args, dense, f); }; });

  // euler
  auto* euler = app.add_subcommand("euler", "Euler characteristic of the complex");
  TypeArgs eu_args;
  bool orbifold = false;
  add_type_options(euler, eu_args);
  euler->add_flag("--orbifold", orbifold, "sum (-1)^deg / |Aut| over all classes");
  euler->callback([&] { run = [&](Format f) { return cmd_euler(eu_args, orbifold, f); }; });

  // ainf
  auto* ainf = app.add_subcommand("ainf", "A-infinity generators")->require_subcommand(1);
  auto* ainf_d = ainf->add_subcommand("d", "differential of a generator or vector");
  int corolla_k = 0;
  std::string input;
  auto* corolla_opt = ainf_d->add_option("--corolla", corolla_k, "corolla on labels 1..K")
                          ->check(CLI::Range(3, 16));
  auto* input_opt = ainf_d->add_option("--input", input, "generator or vector JSON file");
  corolla_opt->excludes(input_opt);
  ainf_d->callback([&] {
    run = [&](Format f) {
      GradedVector v;
      if (corolla_k) {
        std::vector<Label> labels;
        for (int k = 1; k <= corolla_k; ++k) labels.push_back(k);
        v = GradedVector{ainf_corolla(labels)};
      } else if (!input.empty()) {
        v = load_vector(input);
      } else {
        throw UsageError("give --corolla K or --input FILE");
      }
      emit_vector(ainf_differential(v), f);
      return 0;
    };
  });
  auto* ainf_compose_cmd = ainf->add_subcommand("compose", "graft tail i of x to tail j of y");
  std::string x_source, y_source;
  Label i_label = 0, j_label = 0;
  ainf_compose_cmd->add_option("--x", x_source, "FILE or corolla:1,2,3")->required();
  ainf_compose_cmd->add_option("--i", i_label, "tail of x")->required();
  ainf_compose_cmd->add_option("--y", y_source, "FILE or corolla:4,5,6")->required();
  ainf_compose_cmd->add_option("--j", j_label, "tail of y")->required();
  ainf_compose_cmd->callback([&] {
    run = [&](Format f) {
      emit_vector(ainf_compose(load_vector(x_source), i_label, load_vector(y_source), j_label), f);
      return 0;
    };
  });
  auto* ainf_check = ainf->add_subcommand("check", "d^2 = 0 and degree audit");
  int max_tails = 8, random = 100;
  unsigned seed = 1;
  ainf_check->add_option("--max-tails", max_tails, "largest corolla")->check(CLI::Range(3, 10));
  ainf_check->add_option("--random", random, "random composites")->check(CLI::NonNegativeNumber);
  ainf_check->add_option("--seed", seed, "random seed");
  ainf_check->callback(
      [&] { run = [&](Format f) { return cmd_ainf_check(max_tails, random, seed, f); }; });

  // tft
  auto* tft = app.add_subcommand("tft", "open topological field theories")->require_subcommand(1);
  std::string algebra_path, builtin, graph_path, insert_path;
  auto* tft_validate = tft->add_subcommand("validate", "check the Frobenius axioms");
  auto* tft_eval = tft->add_subcommand("eval", "evaluate a decorated graph");
  for (auto* sub : {tft_validate, tft_eval}) {
    sub->add_option("--algebra", algebra_path, "algebra JSON file");
    sub->add_option("--builtin", builtin, "ground, m2 or z2");
  }
  tft_eval->add_option("--graph", graph_path, "graph JSON with rotation or decorations")
      ->required();
  tft_eval->add_option("--insert", insert_path, "JSON object: label -> vector");
  tft_validate->callback([&] {
    run = [&](Format f) { return cmd_tft_validate(load_algebra(algebra_path, builtin), f); };
  });
  tft_eval->callback([&] {
    run = [&](Format f) {
      return cmd_tft_eval(load_algebra(algebra_path, builtin), graph_path, insert_path, f);
    };
  });

  // operad-check
  auto* check = app.add_subcommand("operad-check", "exhaustive operad axiom checks");
  std::string which;
  int bound = 5, edges = 3;
  check->add_option("which", which, "assoc, comm, mod-assoc or surface-types")
      ->required()
      ->check(CLI::IsMember({"assoc", "comm", "mod-assoc", "surface-types"}));
  check->add_option("--bound", bound, "largest label count")->check(CLI::Range(1, 8));
  check->add_option("--edges", edges, "largest complexity (modular checks)")
      ->check(CLI::Range(0, 6));
  check->callback([&] { run = [&](Format f) { return cmd_operad_check(which, bound, edges, f); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }
  const Format f = format_name == "json" ? Format::Json
                   : format_name == "csv" ? Format::Csv
                                          : Format::Table;
  try {
    return run(f);
  } catch (const CheckFailed&) {
    return kExitCheck;
  } catch (const DSquaredError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitCheck;
  } catch (const JsonError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::length_error& e) {
    std::cerr << "error: " << e.what() << " (raise --cap to allow it)\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitCheck;
  }
}
