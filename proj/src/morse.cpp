#include "dmt/morse.hpp"

#include "dmt/error.hpp"
#include "dmt/trajectory.hpp"

namespace dmt {

namespace {

bool in_trajectory_range(const Matching& m, int q) { return q >= 1 && q <= m.complex().dim(); }

// Checked up front: exceptions must not escape an OpenMP region.
void require_gradient(const Matching& m) {
  if (!m.is_gradient()) {
    throw PreconditionError("vector field is not gradient: closed trajectory " +
                            m.closed_trajectory()->to_string());
  }
}

}  // namespace

IntegerMatrix morse_boundary_matrix(const Matching& matching, int q, Execution exec) {
  require_gradient(matching);
  IntegerMatrix out(critical_labels(matching, q - 1), critical_labels(matching, q));
  if (!in_trajectory_range(matching, q) || out.empty()) return out;

  const auto rows = matching.critical_indices(q - 1);
  const auto cols = matching.critical_indices(q);
  const auto n = static_cast<long>(cols.size());
  auto column = [&](long j) {
    const LevelSums sums = trajectory_sums(matching, q, cols[j]);
    for (std::size_t i = 0; i < rows.size(); ++i) out.at(i, j) = sums.lower(rows[i]).weight_sum;
  };
  if (exec == Execution::parallel) {
#pragma omp parallel for schedule(dynamic)
    for (long j = 0; j < n; ++j) column(j);
  } else {
    for (long j = 0; j < n; ++j) column(j);
  }
  return out;
}

IntegerMatrix morse_coboundary_matrix(const Matching& matching, int q, Execution exec) {
  require_gradient(matching);
  IntegerMatrix out(critical_labels(matching, q), critical_labels(matching, q - 1));
  if (!in_trajectory_range(matching, q) || out.empty()) return out;

  const auto rows = matching.critical_indices(q);
  const auto cols = matching.critical_indices(q - 1);
  const auto n = static_cast<long>(cols.size());
  auto column = [&](long j) {
    const LevelSums sums = cotrajectory_sums(matching, q, cols[j]);
    for (std::size_t i = 0; i < rows.size(); ++i) out.at(i, j) = sums.upper(rows[i]).weight_sum;
  };
  if (exec == Execution::parallel) {
#pragma omp parallel for schedule(dynamic)
    for (long j = 0; j < n; ++j) column(j);
  } else {
    for (long j = 0; j < n; ++j) column(j);
  }
  return out;
}

MorseComplexData morse_complex(const Matching& matching, Execution exec) {
  MorseComplexData data;
  const int top = matching.complex().dim() + 1;
  for (int q = 0; q <= top; ++q) {
    data.critical.push_back(critical_labels(matching, q));
    data.boundary.push_back(morse_boundary_matrix(matching, q, exec));
    data.coboundary.push_back(morse_coboundary_matrix(matching, q, exec));
  }
  return data;
}

std::vector<ChainLawFailure> verify_chain_law(const MorseComplexData& data) {
  std::vector<ChainLawFailure> failures;
  for (int q = 1; q <= data.top(); ++q) {
    auto dd = multiply(data.boundary[q - 1], data.boundary[q]);
    if (!dd.is_zero()) failures.push_back({q, false, std::move(dd)});
    if (static_cast<std::size_t>(q) < data.coboundary.size()) {
      auto cc = multiply(data.coboundary[q], data.coboundary[q - 1]);
      if (!cc.is_zero()) failures.push_back({q, true, std::move(cc)});
    }
  }
  return failures;
}

std::vector<ChainLawFailure> verify_chain_law(const Matching& matching) {
  return verify_chain_law(morse_complex(matching));
}

}  // namespace dmt
