#include "fsn/io.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

namespace fsn::io {

using exactq::Matrix;
using exactq::Rational;
using exactq::Vector;

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw InputError("cannot open " + path);
  }
  std::stringstream buf;
  buf << in.rdbuf();
  try {
    return parse_json_text(buf.str());
  } catch (const InputError& e) {
    throw InputError(path + ": " + e.what());
  }
}

Json parse_json_text(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw InputError(std::string("malformed JSON: ") + e.what());
  }
}

namespace {

void expect_object(const Json& j, const std::string& where,
                   std::initializer_list<const char*> allowed,
                   std::initializer_list<const char*> required) {
  if (!j.is_object()) {
    throw InputError(where + ": expected a JSON object");
  }
  std::set<std::string> ok(allowed.begin(), allowed.end());
  for (const auto& [key, value] : j.items()) {
    if (ok.count(key) == 0) {
      throw InputError(where + ": unknown key \"" + key + "\"");
    }
  }
  for (const char* key : required) {
    if (!j.contains(key)) {
      throw InputError(where + ": missing key \"" + std::string(key) + "\"");
    }
  }
}

const Json& array_at(const Json& j, const char* key, const std::string& where) {
  const Json& a = j.at(key);
  if (!a.is_array()) {
    throw InputError(where + "." + key + ": expected an array");
  }
  return a;
}

std::string string_at(const Json& j, const char* key, const std::string& where) {
  const Json& s = j.at(key);
  if (!s.is_string()) {
    throw InputError(where + "." + key + ": expected a string");
  }
  return s.get<std::string>();
}

std::size_t count_of(const Json& j, const std::string& where) {
  if (!j.is_number_unsigned() && !(j.is_number_integer() && j.get<long long>() >= 0)) {
    throw InputError(where + ": expected a nonnegative integer");
  }
  return j.get<std::size_t>();
}

Rational rational_of(const Json& j, const std::string& where) {
  if (!j.is_string()) {
    throw InputError(where + ": rationals are written as strings, e.g. \"3/2\"");
  }
  try {
    return exactq::parse_rational(j.get<std::string>());
  } catch (const InputError& e) {
    throw InputError(where + ": " + e.what());
  }
}

Vector vector_of(const Json& j, const std::string& where) {
  if (!j.is_array()) {
    throw InputError(where + ": expected an array of rationals");
  }
  Vector v;
  for (std::size_t i = 0; i < j.size(); ++i) {
    v.push_back(rational_of(j[i], where + "[" + std::to_string(i) + "]"));
  }
  return v;
}

// `[]` has no column count of its own; empty_cols supplies it.
Matrix matrix_of(const Json& j, const std::string& where, std::size_t empty_cols) {
  if (!j.is_array()) {
    throw InputError(where + ": expected an array of rows");
  }
  if (j.empty()) {
    return Matrix::zero(0, empty_cols);
  }
  std::vector<Vector> rows;
  for (std::size_t i = 0; i < j.size(); ++i) {
    rows.push_back(vector_of(j[i], where + "[" + std::to_string(i) + "]"));
    if (rows.back().size() != rows.front().size()) {
      throw InputError(where + ": rows have different lengths");
    }
  }
  return Matrix::from_rows(rows, rows.front().size());
}

std::vector<std::string> words_of(const Json& j, const std::string& where) {
  if (!j.is_array()) {
    throw InputError(where + ": expected an array of generator names");
  }
  std::vector<std::string> out;
  for (const auto& s : j) {
    if (!s.is_string()) {
      throw InputError(where + ": generator names are strings");
    }
    out.push_back(s.get<std::string>());
  }
  return out;
}

}  // namespace

fincat::PresentedCategory parse_category(const Json& j) {
  expect_object(j, "category", {"objects", "generators", "relations"}, {"objects"});
  fincat::PresentedCategory cat;
  const Json& objs = array_at(j, "objects", "category");
  for (std::size_t i = 0; i < objs.size(); ++i) {
    const std::string w = "objects[" + std::to_string(i) + "]";
    expect_object(objs[i], w, {"name", "dim"}, {"name", "dim"});
    cat.objects.push_back({string_at(objs[i], "name", w), count_of(objs[i].at("dim"), w + ".dim")});
  }
  if (j.contains("generators")) {
    const Json& gens = array_at(j, "generators", "category");
    for (std::size_t i = 0; i < gens.size(); ++i) {
      const std::string w = "generators[" + std::to_string(i) + "]";
      expect_object(gens[i], w, {"name", "src", "dst", "matrix"}, {"name", "src", "dst", "matrix"});
      fincat::GeneratorArrow g;
      g.name = string_at(gens[i], "name", w);
      g.src = string_at(gens[i], "src", w);
      g.dst = string_at(gens[i], "dst", w);
      auto src = cat.find_object(g.src);
      g.matrix = matrix_of(gens[i].at("matrix"), w + ".matrix", src ? cat.objects[*src].dim : 0);
      cat.generators.push_back(std::move(g));
    }
  }
  if (j.contains("relations")) {
    const Json& rels = array_at(j, "relations", "category");
    for (std::size_t i = 0; i < rels.size(); ++i) {
      const std::string w = "relations[" + std::to_string(i) + "]";
      expect_object(rels[i], w, {"lhs", "rhs"}, {"lhs", "rhs"});
      cat.relations.push_back(
          {words_of(rels[i].at("lhs"), w + ".lhs"), words_of(rels[i].at("rhs"), w + ".rhs")});
    }
  }
  return cat;
}

seminorm::GeneratingFamily parse_family(const Json& j) {
  expect_object(j, "family", {"entries"}, {"entries"});
  seminorm::GeneratingFamily fam;
  const Json& es = array_at(j, "entries", "family");
  for (std::size_t i = 0; i < es.size(); ++i) {
    const std::string w = "entries[" + std::to_string(i) + "]";
    expect_object(es[i], w, {"object", "vector", "weight"}, {"object", "vector", "weight"});
    fam.entries.push_back({string_at(es[i], "object", w), vector_of(es[i].at("vector"), w + ".vector"),
                           rational_of(es[i].at("weight"), w + ".weight")});
  }
  return fam;
}

seminorm::Element parse_element(const Json& j) {
  expect_object(j, "element", {"object", "vector"}, {"object", "vector"});
  return {string_at(j, "object", "element"), vector_of(j.at("vector"), "element.vector")};
}

homology::SimplicialComplex parse_complex(const Json& j) {
  expect_object(j, "complex", {"vertices", "simplices"}, {"vertices", "simplices"});
  const std::size_t n = count_of(j.at("vertices"), "complex.vertices");
  std::vector<homology::Simplex> simplices;
  const Json& ss = array_at(j, "simplices", "complex");
  for (std::size_t i = 0; i < ss.size(); ++i) {
    const std::string w = "simplices[" + std::to_string(i) + "]";
    if (!ss[i].is_array()) {
      throw InputError(w + ": expected an array of vertex indices");
    }
    homology::Simplex s;
    for (const auto& v : ss[i]) {
      s.push_back(count_of(v, w));
    }
    simplices.push_back(std::move(s));
  }
  try {
    return homology::SimplicialComplex::make(n, std::move(simplices));
  } catch (const std::invalid_argument& e) {
    throw InputError(std::string("complex: ") + e.what());
  }
}

homology::HomologyClass parse_chain(const Json& j, const homology::SimplicialComplex& k) {
  expect_object(j, "chain", {"degree", "coefficients"}, {"degree", "coefficients"});
  homology::HomologyClass c;
  c.degree = count_of(j.at("degree"), "chain.degree");
  c.cycle = exactq::zero_vector(k.count(c.degree));
  const Json& co = j.at("coefficients");
  if (!co.is_object()) {
    throw InputError("chain.coefficients: expected an object keyed by simplices");
  }
  for (const auto& [key, value] : co.items()) {
    const std::string w = "chain.coefficients[" + key + "]";
    Json parsed;
    try {
      parsed = Json::parse(key);
    } catch (const Json::parse_error&) {
      throw InputError(w + ": keys look like \"[0,1]\"");
    }
    if (!parsed.is_array() || parsed.size() != c.degree + 1) {
      throw InputError(w + ": expected a simplex with " + std::to_string(c.degree + 1) +
                       " vertices");
    }
    homology::Simplex s;
    for (const auto& v : parsed) {
      s.push_back(count_of(v, w));
    }
    std::sort(s.begin(), s.end());
    auto idx = k.index_of(s);
    if (!idx) {
      throw InputError(w + ": not a simplex of the complex");
    }
    if (s != parsed.get<homology::Simplex>()) {
      throw InputError(w + ": write simplices with increasing vertices");
    }
    c.cycle[*idx] = rational_of(value, w);
  }
  return c;
}

counterexample::Sequence parse_sequence(const Json& j) {
  expect_object(j, "sequence", {"prefix", "tail", "slope", "intercept"}, {});
  counterexample::Sequence s;
  if (j.contains("prefix")) {
    s.prefix = vector_of(j.at("prefix"), "sequence.prefix");
  }
  const bool constant = j.contains("tail");
  const bool affine = j.contains("slope") || j.contains("intercept");
  if (constant == affine) {
    throw InputError("sequence: give either \"tail\" or \"slope\" and \"intercept\"");
  }
  if (constant) {
    s.intercept = rational_of(j.at("tail"), "sequence.tail");
  } else {
    if (!j.contains("slope") || !j.contains("intercept")) {
      throw InputError("sequence: \"slope\" and \"intercept\" go together");
    }
    s.slope = rational_of(j.at("slope"), "sequence.slope");
    s.intercept = rational_of(j.at("intercept"), "sequence.intercept");
  }
  return s;
}

// ---------------------------------------------------------------------------

Json to_json(const Rational& q) { return exactq::to_string(q); }

Json to_json(const Vector& v) {
  Json a = Json::array();
  for (const auto& x : v) {
    a.push_back(to_json(x));
  }
  return a;
}

Json to_json(const Matrix& m) {
  Json a = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    a.push_back(to_json(m.row(i)));
  }
  return a;
}

Json to_json(const seminorm::Extended& e) { return e.to_string(); }

Json to_json(const exactq::Subspace& s) {
  Json a = Json::array();
  for (const auto& b : s.basis_vectors()) {
    a.push_back(to_json(b));
  }
  return a;
}

Json to_json(const fincat::PresentedCategory& cat) {
  Json j;
  j["objects"] = Json::array();
  for (const auto& o : cat.objects) {
    j["objects"].push_back({{"name", o.name}, {"dim", o.dim}});
  }
  j["generators"] = Json::array();
  for (const auto& g : cat.generators) {
    j["generators"].push_back(
        {{"name", g.name}, {"src", g.src}, {"dst", g.dst}, {"matrix", to_json(g.matrix)}});
  }
  j["relations"] = Json::array();
  for (const auto& r : cat.relations) {
    j["relations"].push_back({{"lhs", r.lhs}, {"rhs", r.rhs}});
  }
  return j;
}

Json to_json(const fincat::ValidationReport& r) {
  Json j;
  j["valid"] = r.ok();
  j["issues"] = Json::array();
  for (const auto& i : r.issues) {
    j["issues"].push_back(
        {{"kind", fincat::to_string(i.kind)}, {"location", i.location}, {"message", i.message}});
  }
  return j;
}

Json to_json(const seminorm::GeneratedEvaluation& e) {
  Json j;
  j["depth"] = e.value.depth;
  j["value"] = to_json(e.value.upper_bound);
  j["exact"] = e.value.exact;
  j["columns"] = e.columns;
  j["witness"] = Json::array();
  for (const auto& t : e.witness) {
    j["witness"].push_back(
        {{"coefficient", to_json(t.coefficient)}, {"word", t.word}, {"entry", t.entry}});
  }
  return j;
}

Json to_json(const locus::Locus& l) {
  return {{"object", l.object},
          {"dim", l.space.dim()},
          {"ambient_dim", l.space.ambient_dim()},
          {"basis", to_json(l.space)},
          {"status", locus::to_string(l.status)}};
}

Json to_json(const locus::LocusBounds& l) {
  return {{"object", l.object},
          {"exact", l.exact()},
          {"inner", to_json(l.inner)},
          {"outer", to_json(l.outer)}};
}

Json to_json(const locus::VanishingCertificate& c) {
  return {{"object", c.object},
          {"word", c.witness_word},
          {"eigenvalue", to_json(c.eigenvalue)},
          {"eigenvector", to_json(c.eigenvector)}};
}

Json to_json(const locus::UniversalLocus& u) {
  Json j;
  j["loci"] = Json::array();
  for (const auto& l : u.loci) {
    j["loci"].push_back(to_json(l));
  }
  j["certificates"] = Json::array();
  for (const auto& c : u.certificates) {
    j["certificates"].push_back(to_json(c));
  }
  j["quotient_stabilized"] = u.quotient_stabilized;
  j["quotient_stabilized_at"] =
      u.quotient_stabilized_at ? Json(*u.quotient_stabilized_at) : Json(nullptr);
  j["quotient_morphisms"] = u.quotient_morphisms;
  return j;
}

Json to_json(const locus::CarryVerdict& v) {
  Json j;
  j["verdict"] = locus::to_string(v.kind);
  j["reason"] = v.reason;
  if (v.kind == locus::CarryVerdict::Kind::violated) {
    j["object"] = v.object;
    j["witness"] = to_json(v.witness);
  }
  j["undetermined_objects"] = v.undetermined_objects;
  return j;
}

Json to_json(const diagonal::DiagonalReport& r) {
  Json j;
  j["m"] = r.m;
  j["prefix_length"] = r.prefix_length;
  j["depth"] = r.depth;
  j["exact"] = r.exact;
  j["v"] = to_json(r.v);
  Json vm = Json::array();
  for (const auto& x : r.vm_values) {
    vm.push_back(to_json(x));
  }
  j["vm_values"] = vm;
  j["vm_values_are"] = r.exact ? "exact" : "upper-bound-only";
  j["q_values"] = to_json(r.q_values);
  j["Q"] = to_json(r.Q);
  j["samples"] = Json::array();
  for (const auto& s : r.samples) {
    j["samples"].push_back({{"object", s.object},
                            {"alpha", to_json(s.alpha)},
                            {"lhs", to_json(s.lhs)},
                            {"rhs", to_json(s.rhs)},
                            {"holds", s.holds}});
  }
  return j;
}

Json to_json(const counterexample::Sequence& s) {
  return {{"prefix", to_json(s.prefix)},
          {"slope", to_json(s.slope)},
          {"intercept", to_json(s.intercept)}};
}

Json to_json(const counterexample::GapReport& r) {
  Json j;
  j["v"] = to_json(r.v);
  j["w"] = to_json(r.w);
  j["lower_bound_w"] = to_json(r.lower_bound_w);
  j["lower_bound_attained"] = r.lower_bound_attained;
  j["lower_bound_certified"] = r.lower_bound_certified;
  j["all_rows_hold"] = r.all_rows_hold;
  j["rows"] = Json::array();
  for (const auto& row : r.rows) {
    j["rows"].push_back({{"m", row.m},
                         {"v", to_json(row.v)},
                         {"w", to_json(row.w)},
                         {"d", row.d.get_str()},
                         {"upper_bound", to_json(row.upper_bound)},
                         {"bound", to_json(row.bound)},
                         {"holds", row.holds}});
  }
  return j;
}

}  // namespace fsn::io
