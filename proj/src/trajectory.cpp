#include "dmt/trajectory.hpp"

#include <utility>

#include "dmt/error.hpp"

namespace dmt {

namespace {

struct Edge {
  std::size_t node;
  int weight;
};

// Node ids on level q: [0, lower) are (q-1)-simplices, [lower, lower + upper) are q-simplices.
struct Level {
  const Matching& m;
  int q;
  std::size_t lower;
  std::size_t upper;

  Level(const Matching& matching, int level)
      : m(matching),
        q(level),
        lower(matching.complex().count(level - 1)),
        upper(matching.complex().count(level)) {}

  bool is_upper(std::size_t node) const { return node >= lower; }
  std::size_t cell(std::size_t node) const { return is_upper(node) ? node - lower : node; }
  std::size_t upper_node(std::size_t i) const { return lower + i; }
};

void require_gradient(const Matching& m) {
  if (!m.is_gradient()) {
    throw PreconditionError("vector field is not gradient: closed trajectory " +
                            m.closed_trajectory()->to_string());
  }
}

// Face step from a q-simplex (skipping its partner), or matched step from a (q-1)-simplex.
template <typename Visit>
void forward_edges(const Level& L, std::size_t node, Visit&& visit) {
  const auto& c = L.m.complex();
  if (L.is_upper(node)) {
    const std::size_t b = L.cell(node);
    const std::size_t partner = L.m.down(L.q, b);
    const auto& faces = c.faces(L.q, b);
    for (std::size_t pos = 0; pos < faces.size(); ++pos) {
      if (faces[pos] == partner) continue;
      visit(Edge{faces[pos], pos % 2 == 0 ? 1 : -1});
    }
  } else {
    const std::size_t a = node;
    const std::size_t b = L.m.up(L.q - 1, a);
    if (b == Matching::none) return;
    const auto& faces = c.faces(L.q, b);
    for (std::size_t pos = 0; pos < faces.size(); ++pos) {
      if (faces[pos] == a) {
        visit(Edge{L.upper_node(b), pos % 2 == 0 ? -1 : 1});
        return;
      }
    }
  }
}

// Coface step from a (q-1)-simplex (skipping cofaces it is matched to), or
// matched step down from a q-simplex.
template <typename Visit>
void backward_edges(const Level& L, std::size_t node, Visit&& visit) {
  const auto& c = L.m.complex();
  if (!L.is_upper(node)) {
    const std::size_t a = node;
    for (const auto& [coface, pos] : c.cofaces(L.q - 1, a)) {
      if (L.m.down(L.q, coface) == a) continue;
      visit(Edge{L.upper_node(coface), pos % 2 == 0 ? 1 : -1});
    }
  } else {
    const std::size_t t = L.cell(node);
    const std::size_t a = L.m.down(L.q, t);
    if (a == Matching::none) return;
    for (const auto& [coface, pos] : c.cofaces(L.q - 1, a)) {
      if (coface == t) {
        visit(Edge{a, pos % 2 == 0 ? -1 : 1});
        return;
      }
    }
  }
}

// Reverse postorder of the nodes reachable from `source`; a topological order
// because the digraph is acyclic.
template <typename Edges>
std::vector<std::size_t> topological_order(std::size_t node_count, std::size_t source,
                                           Edges&& edges) {
  std::vector<unsigned char> seen(node_count, 0);
  std::vector<std::size_t> post;
  std::vector<std::pair<std::size_t, std::vector<std::size_t>>> stack;
  auto push = [&](std::size_t n) {
    seen[n] = 1;
    std::vector<std::size_t> next;
    edges(n, [&](Edge e) { next.push_back(e.node); });
    stack.emplace_back(n, std::move(next));
  };
  push(source);
  while (!stack.empty()) {
    auto& [n, next] = stack.back();
    if (next.empty()) {
      post.push_back(n);
      stack.pop_back();
      continue;
    }
    const std::size_t child = next.back();
    next.pop_back();
    if (!seen[child]) push(child);
  }
  return {post.rbegin(), post.rend()};
}

template <typename Edges>
LevelSums propagate(const Level& L, std::size_t source, Edges&& edges) {
  const std::size_t n = L.lower + L.upper;
  std::vector<TrajectoryAggregate> value(n);
  value[source] = {1, 1};
  for (std::size_t node : topological_order(n, source, edges)) {
    const TrajectoryAggregate& here = value[node];
    if (here.path_count == 0) continue;
    edges(node, [&](Edge e) {
      auto& there = value[e.node];
      if (e.weight > 0) there.weight_sum += here.weight_sum;
      else there.weight_sum -= here.weight_sum;
      there.path_count += here.path_count;
    });
  }
  LevelSums sums(L.q, L.lower, L.upper);
  for (std::size_t i = 0; i < L.lower; ++i) sums.lower(i) = std::move(value[i]);
  for (std::size_t i = 0; i < L.upper; ++i) sums.upper(i) = std::move(value[L.upper_node(i)]);
  return sums;
}

void require_level(const Matching& m, int q) {
  if (q < 1 || q > m.complex().dim()) {
    throw DomainError("trajectory level " + std::to_string(q) + " outside [1, " +
                      std::to_string(m.complex().dim()) + "]");
  }
}

}  // namespace

LevelSums trajectory_sums(const Matching& matching, int q, std::size_t source) {
  require_gradient(matching);
  require_level(matching, q);
  if (!matching.is_critical(q, source)) {
    throw PreconditionError("trajectory source " + matching.complex().simplex(q, source).label() +
                            " is not critical");
  }
  Level L(matching, q);
  return propagate(L, L.upper_node(source),
                   [&L](std::size_t node, auto&& visit) { forward_edges(L, node, visit); });
}

LevelSums cotrajectory_sums(const Matching& matching, int q, std::size_t source) {
  require_gradient(matching);
  require_level(matching, q);
  if (!matching.is_critical(q - 1, source)) {
    throw PreconditionError("co-trajectory source " +
                            matching.complex().simplex(q - 1, source).label() +
                            " is not critical");
  }
  Level L(matching, q);
  return propagate(L, source,
                   [&L](std::size_t node, auto&& visit) { backward_edges(L, node, visit); });
}

TrajectoryAggregate trajectory_aggregate(const Matching& matching, const Simplex& beta,
                                         const Simplex& target) {
  const auto& c = matching.complex();
  const int q = beta.dim();
  const std::size_t b = c.index_of(beta);
  const std::size_t t = c.index_of(target);
  if (target.dim() != q && target.dim() != q - 1) {
    throw DomainError("trajectory target " + target.label() + " has wrong dimension");
  }
  auto sums = trajectory_sums(matching, q, b);
  return target.dim() == q ? sums.upper(t) : sums.lower(t);
}

TrajectoryAggregate cotrajectory_aggregate(const Matching& matching, const Simplex& tau,
                                           const Simplex& target) {
  const auto& c = matching.complex();
  const int q = tau.dim() + 1;
  const std::size_t a = c.index_of(tau);
  const std::size_t t = c.index_of(target);
  if (target.dim() != q && target.dim() != q - 1) {
    throw DomainError("co-trajectory target " + target.label() + " has wrong dimension");
  }
  auto sums = cotrajectory_sums(matching, q, a);
  return target.dim() == q ? sums.upper(t) : sums.lower(t);
}

std::vector<Trajectory> enumerate_trajectories(const Matching& matching, const Simplex& beta,
                                               const Simplex& target, std::size_t limit) {
  require_gradient(matching);
  const auto& c = matching.complex();
  const int q = beta.dim();
  require_level(matching, q);
  const std::size_t b = c.index_of(beta);
  if (!matching.is_critical(q, b)) {
    throw PreconditionError("trajectory source " + beta.label() + " is not critical");
  }
  if (target.dim() != q && target.dim() != q - 1) {
    throw DomainError("trajectory target " + target.label() + " has wrong dimension");
  }
  Level L(matching, q);
  const std::size_t goal =
      target.dim() == q ? L.upper_node(c.index_of(target)) : c.index_of(target);
  const TrajectoryKind kind = target.dim() == q ? TrajectoryKind::to_cell : TrajectoryKind::to_face;

  std::vector<Trajectory> out;
  std::vector<std::size_t> path{L.upper_node(b)};
  auto emit = [&] {
    if (out.size() == limit) {
      throw TrajectoryOverflow("more than " + std::to_string(limit) + " trajectories from " +
                               beta.label() + " to " + target.label());
    }
    Trajectory t;
    t.kind = kind;
    for (std::size_t node : path) {
      t.cells.push_back(c.simplex(L.is_upper(node) ? q : q - 1, L.cell(node)));
    }
    t.weight = trajectory_weight(t.cells, kind);
    out.push_back(std::move(t));
  };
  auto walk = [&](auto&& self) -> void {
    const std::size_t node = path.back();
    if (node == goal) emit();
    forward_edges(L, node, [&](Edge e) {
      path.push_back(e.node);
      self(self);
      path.pop_back();
    });
  };
  walk(walk);
  return out;
}

}  // namespace dmt
