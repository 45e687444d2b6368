#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "json.hpp"

#include "dmt/cancel.hpp"
#include "dmt/complex.hpp"
#include "dmt/homology.hpp"
#include "dmt/matrix.hpp"
#include "dmt/vector_field.hpp"

namespace dmt::io {

using Json = nlohmann::json;

/// Reads and parses a JSON file. Throws IoError / ParseError.
Json read_json_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, const std::string& text);

/// {"facets": [[0,1,2], ...]}
SimplicialComplex complex_from_json(const Json& j);
Json complex_to_json(const SimplicialComplex& complex);

/// {"pairs": [[[1],[0,1]], ...]}, each pair (alpha-vertices, beta-vertices).
DiscreteVectorField field_from_json(const Json& j);
Json field_to_json(const DiscreteVectorField& field);

/// {"rows": [...], "cols": [...], "entries": [[...], ...]}. Entries beyond 64 bits
/// are written as decimal strings; both forms are accepted on input.
IntegerMatrix matrix_from_json(const Json& j);
Json matrix_to_json(const IntegerMatrix& m);

/// {"q": 1, "betti": 0, "torsion": [3]}
Json homology_to_json(int q, const HomologyGroup& h);
HomologyGroup homology_from_json(const Json& j);

Json trajectory_to_json(const Trajectory& t);

/// Simplex pair spec {"sigma0": [...], "tau0": [...]}.
struct SimplexPairSpec {
  Simplex sigma0;
  Simplex tau0;
};
SimplexPairSpec simplex_pair_from_json(const Json& j);
Json simplex_pair_to_json(const SimplexPairSpec& spec);

/// Fixture-mode pivot spec {"row0": "sigma_3", "col0": "eta_8"}.
struct LabelPairSpec {
  std::string row0;
  std::string col0;
};
LabelPairSpec label_pair_from_json(const Json& j);
Json label_pair_to_json(const LabelPairSpec& spec);

}  // namespace dmt::io
