#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "dmt/complex.hpp"
#include "dmt/integer.hpp"
#include "dmt/matrix.hpp"
#include "dmt/vector_field.hpp"

namespace dmt {

/// Diagonal of the Smith normal form: non-negative invariant factors in a
/// divisibility chain, zeros last, min(rows, cols) entries.
struct SmithForm {
  std::vector<Integer> diagonal;
  std::size_t rank = 0;
};

SmithForm smith_normal_form(const IntegerMatrix& m);

/// Z^betti plus Z/t for each torsion coefficient t (each divides the next).
struct HomologyGroup {
  std::size_t betti = 0;
  std::vector<Integer> torsion;

  std::string to_string() const;
  friend bool operator==(const HomologyGroup&, const HomologyGroup&) = default;
};

/// ker(current) / im(next), where `current` is the matrix of d_q and `next` of
/// d_{q+1}. Throws ChainLawError if the shapes do not compose or d_q d_{q+1} != 0.
HomologyGroup homology_of_pair(const IntegerMatrix& next, const IntegerMatrix& current);

HomologyGroup simplicial_homology(const SimplicialComplex& complex, int q);

/// Homology of the Morse complex; equal to simplicial_homology for gradient fields.
HomologyGroup morse_homology(const Matching& matching, int q);

}  // namespace dmt
