#include "dmt/cancel.hpp"

#include <algorithm>
#include <optional>
#include <sstream>

#include "dmt/error.hpp"
#include "dmt/trajectory.hpp"

namespace dmt {

CancellablePair make_cancellable_pair(const Matching& matching, const Simplex& sigma0,
                                      const Simplex& tau0) {
  const auto& c = matching.complex();
  const int k = sigma0.dim();
  if (tau0.dim() != k - 1) {
    throw NotCancellable(tau0.label() + " is not one dimension below " + sigma0.label());
  }
  if (!matching.is_critical(k, c.index_of(sigma0)) ||
      !matching.is_critical(k - 1, c.index_of(tau0))) {
    throw NotCancellable("(" + sigma0.label() + ", " + tau0.label() + ") are not both critical");
  }
  const auto agg = trajectory_aggregate(matching, sigma0, tau0);
  if (agg.path_count != 1) {
    throw NotCancellable(sigma0.label() + " -> " + tau0.label() + " has " +
                         agg.path_count.get_str() + " trajectories, need exactly 1");
  }
  auto trajectories = enumerate_trajectories(matching, sigma0, tau0, 1);
  CancellablePair pair{sigma0, tau0, std::move(trajectories.front()), 0};
  pair.weight = pair.trajectory.weight;
  return pair;
}

std::vector<CancellablePair> find_cancellable_pairs(const Matching& matching, int k) {
  std::vector<CancellablePair> out;
  const auto& c = matching.complex();
  if (k < 1 || k > c.dim()) return out;
  const auto lower = matching.critical_indices(k - 1);
  for (std::size_t s : matching.critical_indices(k)) {
    const auto sums = trajectory_sums(matching, k, s);
    for (std::size_t t : lower) {
      if (sums.lower(t).path_count != 1) continue;
      const Simplex& sigma = c.simplex(k, s);
      const Simplex& tau = c.simplex(k - 1, t);
      auto trajectories = enumerate_trajectories(matching, sigma, tau, 1);
      CancellablePair pair{sigma, tau, std::move(trajectories.front()), 0};
      pair.weight = pair.trajectory.weight;
      out.push_back(std::move(pair));
    }
  }
  return out;
}

namespace {

DiscreteVectorField reverse_along(DiscreteVectorField field, const Trajectory& path) {
  const auto& cells = path.cells;
  std::vector<VectorPair> pairs = field.pairs();
  // cells = beta0, alpha1, beta1, ..., alpha_r, beta_r, alpha_{r+1}
  for (std::size_t i = 2; i + 1 < cells.size(); i += 2) {
    VectorPair old{cells[i - 1], cells[i]};
    auto it = std::find(pairs.begin(), pairs.end(), old);
    if (it == pairs.end()) {
      throw InvalidPair("arrow (" + old.face.label() + ", " + old.coface.label() +
                        ") along the trajectory is not in the field");
    }
    pairs.erase(it);
  }
  for (std::size_t i = 0; i + 1 < cells.size(); i += 2) pairs.push_back({cells[i + 1], cells[i]});
  return DiscreteVectorField(std::move(pairs));
}

}  // namespace

DiscreteVectorField cancel_pair(const Matching& matching, const CancellablePair& pair) {
  CancellablePair current;
  try {
    current = make_cancellable_pair(matching, pair.sigma0, pair.tau0);
  } catch (const NotCancellable& e) {
    throw InvalidPair(std::string("stale pair: ") + e.what());
  }
  if (current.trajectory != pair.trajectory) {
    throw InvalidPair("stale pair: the unique trajectory is now " + current.trajectory.to_string());
  }
  return reverse_along(matching.field(), current.trajectory);
}

IntegerMatrix RowOpTrace::replay(const IntegerMatrix& input) const {
  IntegerMatrix m = input;
  for (const auto& op : ops) {
    switch (op.kind) {
      case MatrixOperation::Kind::add_row_multiple: {
        const auto t = m.row_index(op.target), s = m.row_index(op.source);
        for (std::size_t j = 0; j < m.num_cols(); ++j) m.at(t, j) += op.factor * m.at(s, j);
        break;
      }
      case MatrixOperation::Kind::add_col_multiple: {
        const auto t = m.col_index(op.target), s = m.col_index(op.source);
        for (std::size_t i = 0; i < m.num_rows(); ++i) m.at(i, t) += op.factor * m.at(i, s);
        break;
      }
      case MatrixOperation::Kind::delete_row:
        m = m.without_row(m.row_index(op.target));
        break;
      case MatrixOperation::Kind::delete_col:
        m = m.without_col(m.col_index(op.target));
        break;
    }
  }
  return m;
}

std::string RowOpTrace::to_string() const {
  std::ostringstream out;
  for (const auto& op : ops) {
    switch (op.kind) {
      case MatrixOperation::Kind::add_row_multiple:
        out << "R[" << op.target << "] += " << op.factor.get_str() << " * R[" << op.source << "]\n";
        break;
      case MatrixOperation::Kind::add_col_multiple:
        out << "C[" << op.target << "] += " << op.factor.get_str() << " * C[" << op.source << "]\n";
        break;
      case MatrixOperation::Kind::delete_row:
        out << "delete row " << op.target << "\n";
        break;
      case MatrixOperation::Kind::delete_col:
        out << "delete column " << op.target << "\n";
        break;
    }
  }
  return out.str();
}

namespace {

// m(x, y) - a00 * m(x, c0) * m(r0, y) on every entry off the pivot row/column.
IntegerMatrix eliminate_pivot(const IntegerMatrix& m, std::size_t r0, std::size_t c0) {
  const Integer& a00 = m.at(r0, c0);
  if (abs(a00) != 1) {
    throw NotCancellable("pivot (" + m.row_labels()[r0] + ", " + m.col_labels()[c0] + ") is " +
                         a00.get_str() + ", expected +1 or -1");
  }
  IntegerMatrix out = m.without_row(r0).without_col(c0);
  for (std::size_t i = 0, x = 0; i < m.num_rows(); ++i) {
    if (i == r0) continue;
    const Integer scale = a00 * m.at(i, c0);
    if (scale != 0) {
      for (std::size_t j = 0, y = 0; j < m.num_cols(); ++j) {
        if (j == c0) continue;
        out.at(x, y++) -= scale * m.at(r0, j);
      }
    }
    ++x;
  }
  return out;
}

}  // namespace

MatrixUpdate update_boundary_k(const IntegerMatrix& boundary, const std::string& row0,
                               const std::string& col0) {
  const std::size_t r0 = boundary.row_index(row0);
  const std::size_t c0 = boundary.col_index(col0);
  MatrixUpdate result{eliminate_pivot(boundary, r0, c0), {}};
  const Integer& a00 = boundary.at(r0, c0);
  for (std::size_t i = 0; i < boundary.num_rows(); ++i) {
    if (i == r0 || boundary.at(i, c0) == 0) continue;
    result.trace.ops.push_back({MatrixOperation::Kind::add_row_multiple, boundary.row_labels()[i],
                                row0, -boundary.at(i, c0) * a00});
  }
  result.trace.ops.push_back({MatrixOperation::Kind::delete_row, row0, {}, 0});
  result.trace.ops.push_back({MatrixOperation::Kind::delete_col, col0, {}, 0});
  return result;
}

IntegerMatrix update_boundary_kplus1(const IntegerMatrix& boundary, const std::string& sigma0) {
  return boundary.without_row(boundary.row_index(sigma0));
}

IntegerMatrix update_boundary_kminus1(const IntegerMatrix& boundary, const std::string& tau0) {
  return boundary.without_col(boundary.col_index(tau0));
}

MatrixUpdate update_coboundary_k(const IntegerMatrix& coboundary, const std::string& row_sigma0,
                                 const std::string& col_tau0) {
  const std::size_t r0 = coboundary.row_index(row_sigma0);
  const std::size_t c0 = coboundary.col_index(col_tau0);
  MatrixUpdate result{eliminate_pivot(coboundary, r0, c0), {}};
  const Integer& a00 = coboundary.at(r0, c0);
  for (std::size_t j = 0; j < coboundary.num_cols(); ++j) {
    if (j == c0 || coboundary.at(r0, j) == 0) continue;
    result.trace.ops.push_back({MatrixOperation::Kind::add_col_multiple,
                                coboundary.col_labels()[j], col_tau0,
                                -coboundary.at(r0, j) * a00});
  }
  result.trace.ops.push_back({MatrixOperation::Kind::delete_row, row_sigma0, {}, 0});
  result.trace.ops.push_back({MatrixOperation::Kind::delete_col, col_tau0, {}, 0});
  return result;
}

IntegerMatrix update_coboundary_kplus1(const IntegerMatrix& coboundary, const std::string& sigma0) {
  return coboundary.without_col(coboundary.col_index(sigma0));
}

IntegerMatrix update_coboundary_kminus1(const IntegerMatrix& coboundary, const std::string& tau0) {
  return coboundary.without_row(coboundary.row_index(tau0));
}

MorseComplexData fast_cancel(const MorseComplexData& data, const std::string& sigma0,
                             const std::string& tau0, int k) {
  if (k < 1 || k >= data.top()) {
    throw DomainError("cancellation dimension " + std::to_string(k) + " out of range");
  }
  MorseComplexData out = data;
  auto drop = [](std::vector<std::string>& cells, const std::string& label) {
    auto it = std::find(cells.begin(), cells.end(), label);
    if (it == cells.end()) throw UnknownLabel("no critical cell labeled '" + label + "'");
    cells.erase(it);
  };
  drop(out.critical[k], sigma0);
  drop(out.critical[k - 1], tau0);
  out.boundary[k] = update_boundary_k(data.boundary[k], tau0, sigma0).matrix;
  out.boundary[k + 1] = update_boundary_kplus1(data.boundary[k + 1], sigma0);
  out.boundary[k - 1] = update_boundary_kminus1(data.boundary[k - 1], tau0);
  out.coboundary[k] = update_coboundary_k(data.coboundary[k], sigma0, tau0).matrix;
  out.coboundary[k + 1] = update_coboundary_kplus1(data.coboundary[k + 1], sigma0);
  out.coboundary[k - 1] = update_coboundary_kminus1(data.coboundary[k - 1], tau0);
  return out;
}

SimultaneousCheck simultaneous_cancellable(const Matching& matching,
                                           const std::vector<CancellablePair>& pairs) {
  const auto& c = matching.complex();
  const std::size_t t = pairs.size();
  SimultaneousCheck check;
  check.reachability.assign(t, std::vector<bool>(t, false));
  for (std::size_t i = 0; i < t; ++i) {
    const int k = pairs[i].k();
    const auto sums = trajectory_sums(matching, k, c.index_of(pairs[i].sigma0));
    for (std::size_t j = 0; j < t; ++j) {
      if (pairs[j].tau0.dim() != k - 1) continue;
      check.reachability[i][j] = sums.lower(c.index_of(pairs[j].tau0)).path_count > 0;
    }
    if (!check.reachability[i][i]) {
      throw InvalidPair("no trajectory from " + pairs[i].sigma0.label() + " to " +
                        pairs[i].tau0.label());
    }
  }

  // The diagonal is full, so a non-identity admissible permutation exists iff the
  // off-diagonal reachability digraph has a cycle; rotating along it gives one.
  std::vector<int> state(t, 0);
  std::vector<std::size_t> stack;
  std::vector<std::size_t> cycle;
  auto dfs = [&](auto&& self, std::size_t i) -> bool {
    state[i] = 1;
    stack.push_back(i);
    for (std::size_t j = 0; j < t; ++j) {
      if (j == i || !check.reachability[i][j]) continue;
      if (state[j] == 1) {
        cycle.assign(std::find(stack.begin(), stack.end(), j), stack.end());
        return true;
      }
      if (state[j] == 0 && self(self, j)) return true;
    }
    stack.pop_back();
    state[i] = 2;
    return false;
  };
  for (std::size_t i = 0; i < t && cycle.empty(); ++i) {
    if (state[i] == 0) dfs(dfs, i);
  }
  if (!cycle.empty()) {
    check.cancellable = false;
    check.witness.resize(t);
    for (std::size_t i = 0; i < t; ++i) check.witness[i] = i;
    for (std::size_t s = 0; s < cycle.size(); ++s) {
      check.witness[cycle[s]] = cycle[(s + 1) % cycle.size()];
    }
  }
  return check;
}

DiscreteVectorField cancel_many(const Matching& matching, const std::vector<CancellablePair>& pairs,
                                CancelMode mode) {
  const auto& c = matching.complex();
  if (mode == CancelMode::one_shot) {
    if (!simultaneous_cancellable(matching, pairs).cancellable) {
      throw PreconditionError("pairs do not satisfy the simultaneous cancellation condition");
    }
    DiscreteVectorField field = matching.field();
    for (std::size_t i = 0; i < pairs.size(); ++i) {
      try {
        const auto current = make_cancellable_pair(matching, pairs[i].sigma0, pairs[i].tau0);
        field = reverse_along(std::move(field), current.trajectory);
      } catch (const Error& e) {
        throw SequencingError("pair " + std::to_string(i) + " (" + pairs[i].sigma0.label() +
                              ", " + pairs[i].tau0.label() + "): " + e.what());
      }
    }
    std::optional<Matching> result;
    try {
      result.emplace(c, field);
    } catch (const InvalidField& e) {
      throw SequencingError(std::string("simultaneous reversal collides: ") + e.what());
    }
    if (!result->is_gradient()) {
      throw SequencingError("simultaneous reversal produced the closed trajectory " +
                            result->closed_trajectory()->to_string());
    }
    return field;
  }

  DiscreteVectorField field = matching.field();
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    Matching current(c, field);
    CancellablePair pair;
    try {
      pair = make_cancellable_pair(current, pairs[i].sigma0, pairs[i].tau0);
    } catch (const NotCancellable& e) {
      throw SequencingError("pair " + std::to_string(i) + " (" + pairs[i].sigma0.label() + ", " +
                            pairs[i].tau0.label() + ") is no longer cancellable: " + e.what());
    }
    field = cancel_pair(current, pair);
  }
  return field;
}

}  // namespace dmt
