#pragma once

#include <cstddef>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "dmt/complex.hpp"

namespace dmt {

/// One arrow (alpha, beta) of a discrete vector field; alpha is a facet of beta.
struct VectorPair {
  Simplex face;
  Simplex coface;
  friend auto operator<=>(const VectorPair&, const VectorPair&) = default;
  friend bool operator==(const VectorPair&, const VectorPair&) = default;
};

/// Set of arrows, kept in canonical order. Not checked against any complex;
/// see validate_dvf and Matching.
class DiscreteVectorField {
 public:
  DiscreteVectorField() = default;
  explicit DiscreteVectorField(std::vector<VectorPair> pairs);

  void add(Simplex face, Simplex coface);
  bool contains(const VectorPair& pair) const;
  const std::vector<VectorPair>& pairs() const { return pairs_; }
  std::size_t size() const { return pairs_.size(); }
  bool empty() const { return pairs_.empty(); }

  friend bool operator==(const DiscreteVectorField&, const DiscreteVectorField&) = default;

 private:
  std::vector<VectorPair> pairs_;
};

struct Violation {
  enum class Kind { not_a_facet, matched_twice };
  Kind kind;
  VectorPair pair;
  /// The simplex matched more than once (matched_twice only).
  std::optional<Simplex> simplex;
  std::string message;
};

struct ValidationReport {
  std::vector<Violation> violations;
  bool ok() const { return violations.empty(); }
};

/// Checks the arrow rules: alpha is a codimension-one face of beta, and no simplex
/// occurs in two arrows. Every violation is reported. Throws UnknownSimplex if
/// an arrow names a simplex that is not in the complex.
ValidationReport validate_dvf(const SimplicialComplex& complex, const DiscreteVectorField& field);

enum class TrajectoryKind {
  to_cell,         ///< q-simplex to q-simplex
  to_face,         ///< q-simplex to (q-1)-simplex
  co_to_cell,      ///< co-trajectory, q-simplex to q-simplex
  co_to_coface,    ///< co-trajectory, q-simplex to (q+1)-simplex
};

/// Alternating sequence of simplices. For V-trajectories: beta0, alpha1, beta1, ...
/// For co-trajectories: beta0, tau1, beta1, ...
struct Trajectory {
  std::vector<Simplex> cells;
  TrajectoryKind kind = TrajectoryKind::to_face;
  int weight = 1;

  std::string to_string() const;
  friend bool operator==(const Trajectory&, const Trajectory&) = default;
};

/// Weight of a trajectory evaluated straight from incidence numbers: the product
/// of -<beta_{i-1},alpha_i><beta_i,alpha_i> over matched steps, times the final
/// incidence when the trajectory ends on a face (dually for co-trajectories).
int trajectory_weight(const std::vector<Simplex>& cells, TrajectoryKind kind);

/// A discrete vector field bound to a complex through index tables. Construction
/// validates the field (InvalidField on violations) and runs the acyclicity check.
/// The complex must outlive the Matching.
class Matching {
 public:
  static constexpr std::size_t none = std::numeric_limits<std::size_t>::max();

  Matching(const SimplicialComplex& complex, DiscreteVectorField field);

  const SimplicialComplex& complex() const { return *complex_; }
  const DiscreteVectorField& field() const { return field_; }

  /// Index of the (q+1)-simplex matched to q-simplex i, or `none`.
  std::size_t up(int q, std::size_t i) const;
  /// Index of the (q-1)-simplex matched to q-simplex i, or `none`.
  std::size_t down(int q, std::size_t i) const;
  bool is_critical(int q, std::size_t i) const { return up(q, i) == none && down(q, i) == none; }

  std::vector<std::size_t> critical_indices(int q) const;

  bool is_gradient() const { return !closed_.has_value(); }
  /// A nontrivial closed V-trajectory, present iff the field is not gradient.
  const std::optional<Trajectory>& closed_trajectory() const { return closed_; }

 private:
  void find_closed_trajectory();

  const SimplicialComplex* complex_;
  DiscreteVectorField field_;
  std::vector<std::vector<std::size_t>> up_;
  std::vector<std::vector<std::size_t>> down_;
  std::optional<Trajectory> closed_;
};

struct GradientCheck {
  bool gradient = true;
  std::optional<Trajectory> witness;
};

/// True iff no nontrivial closed V-trajectory exists; otherwise one closed
/// trajectory is returned as witness. Requires a valid field (InvalidField otherwise).
GradientCheck is_gradient(const SimplicialComplex& complex, const DiscreteVectorField& field);

/// Unpaired q-simplices in canonical order.
std::vector<Simplex> critical_simplices(const Matching& matching, int q);
std::vector<Simplex> critical_simplices(const SimplicialComplex& complex,
                                        const DiscreteVectorField& field, int q);

/// Labels of the critical q-simplices, in canonical order.
std::vector<std::string> critical_labels(const Matching& matching, int q);

}  // namespace dmt
