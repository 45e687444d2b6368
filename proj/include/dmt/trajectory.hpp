#pragma once

#include <cstddef>
#include <vector>

#include "dmt/integer.hpp"
#include "dmt/vector_field.hpp"

namespace dmt {

/// Sum of weights and number of the trajectories between two simplices.
/// |weight_sum| <= path_count and the two have equal parity.
struct TrajectoryAggregate {
  Integer weight_sum = 0;
  Integer path_count = 0;
  friend bool operator==(const TrajectoryAggregate&, const TrajectoryAggregate&) = default;
};

/// Aggregates from one source to every simplex on a level, computed by a single
/// pass over the acyclic trajectory digraph.
///
/// For V-trajectories from a critical q-simplex the level holds the q- and
/// (q-1)-simplices: face steps beta -> alpha carry <beta,alpha> (except into
/// beta's partner) and matched steps alpha >-> beta carry -<beta,alpha>. The
/// product of step weights along a path is the trajectory weight.
///
/// For co-trajectories from a critical (q-1)-simplex the same level is walked
/// upwards through coface lists.
class LevelSums {
 public:
  LevelSums(int q, std::size_t lower_count, std::size_t upper_count)
      : q_(q), lower_(lower_count), upper_(upper_count) {}

  int level() const { return q_; }
  /// Aggregate to the (q-1)-simplex with the given index.
  const TrajectoryAggregate& lower(std::size_t i) const { return lower_[i]; }
  /// Aggregate to the q-simplex with the given index.
  const TrajectoryAggregate& upper(std::size_t i) const { return upper_[i]; }

  TrajectoryAggregate& lower(std::size_t i) { return lower_[i]; }
  TrajectoryAggregate& upper(std::size_t i) { return upper_[i]; }

 private:
  int q_;
  std::vector<TrajectoryAggregate> lower_;
  std::vector<TrajectoryAggregate> upper_;
};

/// All V-trajectories leaving the critical q-simplex `source`.
/// Throws PreconditionError if the field is not gradient or the source is matched.
LevelSums trajectory_sums(const Matching& matching, int q, std::size_t source);

/// All co-V-trajectories leaving the critical (q-1)-simplex `source`, walking
/// level q. Independent of trajectory_sums; the two agree by reversal.
LevelSums cotrajectory_sums(const Matching& matching, int q, std::size_t source);

/// Aggregate over V-trajectories from critical q-simplex `beta` to `target`,
/// which is either a (q-1)-simplex or a q-simplex.
TrajectoryAggregate trajectory_aggregate(const Matching& matching, const Simplex& beta,
                                         const Simplex& target);

/// Aggregate over co-V-trajectories from critical (q-1)-simplex `tau` to `target`,
/// which is either a q-simplex or a (q-1)-simplex.
TrajectoryAggregate cotrajectory_aggregate(const Matching& matching, const Simplex& tau,
                                           const Simplex& target);

inline constexpr std::size_t kDefaultTrajectoryLimit = 1'000'000;

/// Lists every V-trajectory from critical `beta` to `target` in depth-first order.
/// Throws TrajectoryOverflow once more than `limit` exist.
std::vector<Trajectory> enumerate_trajectories(const Matching& matching, const Simplex& beta,
                                               const Simplex& target,
                                               std::size_t limit = kDefaultTrajectoryLimit);

}  // namespace dmt
