#pragma once

#include <optional>
#include <string>
#include <vector>

#include "dmt/matrix.hpp"
#include "dmt/vector_field.hpp"

namespace dmt {

/// Column assembly strategy. `serial` is the reference kernel; `parallel`
/// distributes columns over OpenMP threads and must produce identical output.
enum class Execution { serial, parallel };

/// Morse boundary matrix for dimension q: rows are the critical (q-1)-cells,
/// columns the critical q-cells, entry (alpha, beta) the weighted sum of
/// V-trajectories beta -> alpha. Throws PreconditionError for non-gradient fields.
IntegerMatrix morse_boundary_matrix(const Matching& matching, int q,
                                    Execution exec = Execution::parallel);

/// Co-Morse coboundary matrix for dimension q (rows critical q-cells, columns
/// critical (q-1)-cells) from co-trajectory sums. Equals the transpose of the
/// boundary matrix.
IntegerMatrix morse_coboundary_matrix(const Matching& matching, int q,
                                      Execution exec = Execution::parallel);

/// Critical cells and matrices for q = 0 .. dim+1; index q of `boundary` and
/// `coboundary` holds the dimension-q maps. Fixture mode fills the fields directly.
struct MorseComplexData {
  std::vector<std::vector<std::string>> critical;
  std::vector<IntegerMatrix> boundary;
  std::vector<IntegerMatrix> coboundary;

  int top() const { return static_cast<int>(boundary.size()) - 1; }
  friend bool operator==(const MorseComplexData&, const MorseComplexData&) = default;
};

MorseComplexData morse_complex(const Matching& matching, Execution exec = Execution::parallel);

struct ChainLawFailure {
  int q;
  bool coboundary;  ///< false: boundary[q-1]*boundary[q]; true: coboundary[q]*coboundary[q-1]
  IntegerMatrix product;
};

/// Checks d_{q-1} d_q = 0 and delta_q delta_{q-1} = 0 for every q. Empty means ok.
std::vector<ChainLawFailure> verify_chain_law(const MorseComplexData& data);
std::vector<ChainLawFailure> verify_chain_law(const Matching& matching);

}  // namespace dmt
