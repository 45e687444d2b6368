#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "dmt/integer.hpp"
#include "dmt/matrix.hpp"
#include "dmt/morse.hpp"
#include "dmt/vector_field.hpp"

namespace dmt {

/// A critical k-simplex and critical (k-1)-simplex joined by exactly one
/// V-trajectory. `weight` is that trajectory's weight, i.e. the pivot entry a00.
struct CancellablePair {
  Simplex sigma0;
  Simplex tau0;
  Trajectory trajectory;
  int weight = 1;

  int k() const { return sigma0.dim(); }
  friend bool operator==(const CancellablePair&, const CancellablePair&) = default;
};

/// Builds the pair after checking both cells are critical and exactly one
/// trajectory joins them. Throws NotCancellable naming the trajectory count.
CancellablePair make_cancellable_pair(const Matching& matching, const Simplex& sigma0,
                                      const Simplex& tau0);

/// Every cancellable pair in dimensions (k, k-1), ordered by sigma0 then tau0.
/// Uniqueness is decided by exact path counts, never by weight sums.
std::vector<CancellablePair> find_cancellable_pairs(const Matching& matching, int k);

/// Reverses the pair's trajectory: arrows (alpha_i, beta_i) along it are replaced
/// by (alpha_{i+1}, beta_i). Throws InvalidPair if the pair is stale for this field.
DiscreteVectorField cancel_pair(const Matching& matching, const CancellablePair& pair);

/// Elementary operation recorded while updating a matrix after a cancellation.
struct MatrixOperation {
  enum class Kind { add_row_multiple, add_col_multiple, delete_row, delete_col };
  Kind kind;
  std::string target;  ///< row/column that changes or is deleted
  std::string source;  ///< pivot row/column added (add_* only)
  Integer factor = 0;  ///< target += factor * source (add_* only)
};

struct RowOpTrace {
  std::vector<MatrixOperation> ops;
  /// Applies the operations to `input` in order.
  IntegerMatrix replay(const IntegerMatrix& input) const;
  std::string to_string() const;
};

struct MatrixUpdate {
  IntegerMatrix matrix;
  RowOpTrace trace;
};

/// Boundary matrix update in the cancelled dimension. `row0` labels tau0 and `col0`
/// labels sigma0; the pivot entry a00 must be +-1. Entries become
/// a_ij - a00 * a_0j * a_i0, then the pivot row and column are dropped.
/// The trace holds the equivalent row operations R_i -= a_i0 * a00 * R_0.
MatrixUpdate update_boundary_k(const IntegerMatrix& boundary, const std::string& row0,
                               const std::string& col0);

/// Dimension k+1: sigma0 leaves the codomain, so its row is dropped.
IntegerMatrix update_boundary_kplus1(const IntegerMatrix& boundary, const std::string& sigma0);

/// Dimension k-1: restriction to the remaining critical cells drops tau0's column.
IntegerMatrix update_boundary_kminus1(const IntegerMatrix& boundary, const std::string& tau0);

/// Coboundary analog in the cancelled dimension: rows are k-cells (`row_sigma0`),
/// columns (k-1)-cells (`col_tau0`). The trace uses column operations.
MatrixUpdate update_coboundary_k(const IntegerMatrix& coboundary, const std::string& row_sigma0,
                                 const std::string& col_tau0);

/// delta_{k+1} restricted to the remaining k-cells: drops sigma0's column.
IntegerMatrix update_coboundary_kplus1(const IntegerMatrix& coboundary, const std::string& sigma0);

/// delta_{k-1}: tau0 leaves the codomain, so its row is dropped.
IntegerMatrix update_coboundary_kminus1(const IntegerMatrix& coboundary, const std::string& tau0);

/// All six updates applied to a Morse complex for a cancellation of
/// (sigma0, tau0) in dimensions (k, k-1). Other dimensions are untouched.
MorseComplexData fast_cancel(const MorseComplexData& data, const std::string& sigma0,
                             const std::string& tau0, int k);

struct SimultaneousCheck {
  bool cancellable = true;
  /// reachability[i][j]: some trajectory joins sigma_i to tau_j.
  std::vector<std::vector<bool>> reachability;
  /// Non-identity permutation admissible in `reachability` (when not cancellable).
  std::vector<std::size_t> witness;
};

/// Sufficient condition for reversing all trajectories at once: no non-identity
/// permutation pi has a trajectory sigma_i -> tau_pi(i) for every i.
/// Throws InvalidPair if some pair is not individually reachable.
SimultaneousCheck simultaneous_cancellable(const Matching& matching,
                                           const std::vector<CancellablePair>& pairs);

enum class CancelMode {
  sequential,  ///< cancel one pair at a time, revalidating against the current field
  one_shot,    ///< reverse every trajectory of the original field at once
};

/// Cancels the pairs in order. Throws SequencingError when a pair is no longer
/// cancellable mid-sequence (sequential) or the reversals collide (one_shot).
DiscreteVectorField cancel_many(const Matching& matching, const std::vector<CancellablePair>& pairs,
                                CancelMode mode = CancelMode::sequential);

}  // namespace dmt
