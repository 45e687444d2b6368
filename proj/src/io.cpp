#include "dmt/io.hpp"

#include <fstream>
#include <sstream>

#include "dmt/error.hpp"

namespace dmt::io {

namespace {

template <typename F>
auto parsing(const char* what, F&& f) {
  try {
    return f();
  } catch (const Json::exception& e) {
    throw ParseError(std::string("malformed ") + what + ": " + e.what());
  }
}

std::vector<Vertex> vertices_from_json(const Json& j) {
  if (!j.is_array()) throw ParseError("vertex list must be an array, got " + j.dump());
  std::vector<Vertex> out;
  for (const auto& v : j) {
    if (!v.is_number_integer()) throw ParseError("vertex must be an integer, got " + v.dump());
    out.push_back(v.get<Vertex>());
  }
  return out;
}

Integer integer_from_json(const Json& j) {
  if (j.is_number_integer()) return Integer(std::to_string(j.get<long long>()));
  if (j.is_string()) {
    Integer v;
    if (v.set_str(j.get<std::string>(), 10) != 0) {
      throw ParseError("bad integer string " + j.dump());
    }
    return v;
  }
  throw ParseError("matrix entry must be an integer, got " + j.dump());
}

Json integer_to_json(const Integer& v) {
  if (v.fits_slong_p()) return Json(v.get_si());
  return Json(v.get_str());
}

}  // namespace

Json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open " + path.string());
  std::stringstream buffer;
  buffer << in.rdbuf();
  try {
    return Json::parse(buffer.str());
  } catch (const Json::parse_error& e) {
    throw ParseError(path.string() + ": " + e.what());
  }
}

void write_text_file(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot write " + path.string());
  out << text;
  if (!out) throw IoError("write failed for " + path.string());
}

SimplicialComplex complex_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("facets") || !j["facets"].is_array()) {
    throw ParseError("complex JSON needs a \"facets\" array");
  }
  std::vector<std::vector<Vertex>> facets;
  for (const auto& f : j["facets"]) facets.push_back(vertices_from_json(f));
  return build_complex(facets);
}

Json complex_to_json(const SimplicialComplex& complex) {
  Json facets = Json::array();
  for (const auto& f : complex.facets()) facets.push_back(f.vertices());
  return Json{{"facets", facets}};
}

DiscreteVectorField field_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("pairs") || !j["pairs"].is_array()) {
    throw ParseError("matching JSON needs a \"pairs\" array");
  }
  std::vector<VectorPair> pairs;
  for (const auto& p : j["pairs"]) {
    if (!p.is_array() || p.size() != 2) throw ParseError("each pair must be [alpha, beta]");
    pairs.push_back({Simplex(vertices_from_json(p[0])), Simplex(vertices_from_json(p[1]))});
  }
  return DiscreteVectorField(std::move(pairs));
}

Json field_to_json(const DiscreteVectorField& field) {
  Json pairs = Json::array();
  for (const auto& p : field.pairs()) {
    pairs.push_back(Json::array({p.face.vertices(), p.coface.vertices()}));
  }
  return Json{{"pairs", pairs}};
}

IntegerMatrix matrix_from_json(const Json& j) {
  return parsing("matrix", [&] {
    if (!j.is_object()) throw ParseError("matrix JSON must be an object");
    auto rows = j.at("rows").get<std::vector<std::string>>();
    auto cols = j.at("cols").get<std::vector<std::string>>();
    const auto& entries = j.at("entries");
    if (!entries.is_array() || entries.size() != rows.size()) {
      throw ParseError("matrix needs " + std::to_string(rows.size()) + " entry rows");
    }
    std::vector<Integer> flat;
    flat.reserve(rows.size() * cols.size());
    for (const auto& row : entries) {
      if (!row.is_array() || row.size() != cols.size()) {
        throw ParseError("matrix row must have " + std::to_string(cols.size()) + " entries");
      }
      for (const auto& v : row) flat.push_back(integer_from_json(v));
    }
    try {
      return IntegerMatrix(std::move(rows), std::move(cols), std::move(flat));
    } catch (const DomainError& e) {
      throw ParseError(e.what());
    }
  });
}

Json matrix_to_json(const IntegerMatrix& m) {
  Json entries = Json::array();
  for (std::size_t i = 0; i < m.num_rows(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.num_cols(); ++j) row.push_back(integer_to_json(m.at(i, j)));
    entries.push_back(std::move(row));
  }
  return Json{{"rows", m.row_labels()}, {"cols", m.col_labels()}, {"entries", entries}};
}

Json homology_to_json(int q, const HomologyGroup& h) {
  Json torsion = Json::array();
  for (const auto& t : h.torsion) torsion.push_back(integer_to_json(t));
  return Json{{"q", q}, {"betti", h.betti}, {"torsion", torsion}};
}

HomologyGroup homology_from_json(const Json& j) {
  return parsing("homology", [&] {
    HomologyGroup h;
    h.betti = j.at("betti").get<std::size_t>();
    for (const auto& t : j.at("torsion")) h.torsion.push_back(integer_from_json(t));
    return h;
  });
}

Json trajectory_to_json(const Trajectory& t) {
  Json cells = Json::array();
  for (const auto& s : t.cells) cells.push_back(s.vertices());
  return Json{{"cells", cells}, {"weight", t.weight}, {"text", t.to_string()}};
}

SimplexPairSpec simplex_pair_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("sigma0") || !j.contains("tau0")) {
    throw ParseError("pair JSON needs \"sigma0\" and \"tau0\"");
  }
  return {Simplex(vertices_from_json(j["sigma0"])), Simplex(vertices_from_json(j["tau0"]))};
}

Json simplex_pair_to_json(const SimplexPairSpec& spec) {
  return Json{{"sigma0", spec.sigma0.vertices()}, {"tau0", spec.tau0.vertices()}};
}

LabelPairSpec label_pair_from_json(const Json& j) {
  return parsing("pivot", [&] {
    return LabelPairSpec{j.at("row0").get<std::string>(), j.at("col0").get<std::string>()};
  });
}

Json label_pair_to_json(const LabelPairSpec& spec) {
  return Json{{"row0", spec.row0}, {"col0", spec.col0}};
}

}  // namespace dmt::io
