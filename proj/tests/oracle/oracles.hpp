#pragma once

// Brute-force reference computations used as test oracles. Nothing here calls
// into the trajectory, Morse, cancellation or SNF code of the library.

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <queue>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "dmt/complex.hpp"
#include "dmt/matrix.hpp"
#include "dmt/vector_field.hpp"

namespace oracle {

using Cell = std::vector<int>;
using Big = mpz_class;

inline std::string fixture(const std::string& name) { return std::string(DMT_FIXTURE_DIR) + "/" + name; }

/// Every nonempty vertex subset of every facet, grouped by dimension.
inline std::vector<std::set<Cell>> closure_by_subsets(const std::vector<Cell>& facets) {
  std::vector<std::set<Cell>> levels;
  for (auto f : facets) {
    std::sort(f.begin(), f.end());
    const std::uint32_t n = static_cast<std::uint32_t>(f.size());
    for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
      Cell s;
      for (std::uint32_t b = 0; b < n; ++b) {
        if (mask & (1u << b)) s.push_back(f[b]);
      }
      if (levels.size() < s.size()) levels.resize(s.size());
      levels[s.size() - 1].insert(s);
    }
  }
  return levels;
}

/// (-1)^pos where pos is the position in sigma of the one vertex tau lacks.
inline int sign_by_position(const Cell& sigma, const Cell& tau) {
  if (sigma.size() != tau.size() + 1) return 0;
  if (!std::includes(sigma.begin(), sigma.end(), tau.begin(), tau.end())) return 0;
  Cell missing;
  std::set_difference(sigma.begin(), sigma.end(), tau.begin(), tau.end(), std::back_inserter(missing));
  const auto pos = std::find(sigma.begin(), sigma.end(), missing.front()) - sigma.begin();
  return pos % 2 == 0 ? 1 : -1;
}

inline std::vector<std::string> labels_of(const std::set<Cell>& cells) {
  std::vector<std::string> out;
  for (const auto& c : cells) out.push_back(dmt::Simplex(c).label());
  return out;
}

/// Boundary matrix from the definition, over all (q-1, q) simplex pairs.
inline dmt::IntegerMatrix boundary_by_definition(const std::vector<std::set<Cell>>& levels, int q) {
  const std::set<Cell> empty;
  const auto& lower = q - 1 >= 0 && q - 1 < static_cast<int>(levels.size()) ? levels[q - 1] : empty;
  const auto& upper = q >= 0 && q < static_cast<int>(levels.size()) ? levels[q] : empty;
  dmt::IntegerMatrix m(labels_of(lower), labels_of(upper));
  if (q < 1) return m;
  std::size_t i = 0;
  for (const auto& a : lower) {
    std::size_t j = 0;
    for (const auto& b : upper) m.at(i, j++) = sign_by_position(b, a);
    ++i;
  }
  return m;
}

/// Vector field as plain maps (face -> coface, coface -> face).
struct Arrows {
  std::map<Cell, Cell> up;
  std::map<Cell, Cell> down;

  explicit Arrows(const dmt::DiscreteVectorField& field) {
    for (const auto& p : field.pairs()) {
      up[p.face.vertices()] = p.coface.vertices();
      down[p.coface.vertices()] = p.face.vertices();
    }
  }
  bool matched(const Cell& c) const { return up.count(c) || down.count(c); }
};

inline Cell drop(const Cell& c, std::size_t i) {
  Cell f = c;
  f.erase(f.begin() + static_cast<long>(i));
  return f;
}

struct BrutePath {
  std::vector<Cell> cells;
  int weight;
};

/// Depth-first listing of every V-trajectory from `beta` ending at `target`
/// (a face-dimension or same-dimension cell). Weights use the closed formula,
/// evaluated per step from sign_by_position. Throws past `limit` paths.
inline std::vector<BrutePath> all_trajectories(const Arrows& v, const Cell& beta, const Cell& target,
                                               std::size_t limit = 200000) {
  std::vector<BrutePath> out;
  std::vector<Cell> path{beta};
  auto weight_of = [](const std::vector<Cell>& p) {
    int w = 1;
    // p = b0, a1, b1, a2, b2, ... ; matched steps contribute -<b_{i-1},a_i><b_i,a_i>.
    for (std::size_t i = 1; i + 1 < p.size(); i += 2) {
      w *= -sign_by_position(p[i - 1], p[i]) * sign_by_position(p[i + 1], p[i]);
    }
    if (p.size() % 2 == 0) w *= sign_by_position(p[p.size() - 2], p.back());
    return w;
  };
  auto walk = [&](auto&& self, const Cell& b) -> void {
    if (path.size() > 4096) throw std::runtime_error("trajectory too long; field not acyclic?");
    const auto partner = v.down.find(b);
    for (std::size_t i = 0; i < b.size(); ++i) {
      const Cell a = drop(b, i);
      if (a.empty()) continue;
      if (partner != v.down.end() && partner->second == a) continue;
      path.push_back(a);
      if (a == target) {
        out.push_back({path, weight_of(path)});
        if (out.size() > limit) throw std::runtime_error("too many trajectories");
      }
      const auto next = v.up.find(a);
      if (next != v.up.end()) {
        path.push_back(next->second);
        if (next->second == target) {
          out.push_back({path, weight_of(path)});
          if (out.size() > limit) throw std::runtime_error("too many trajectories");
        }
        self(self, next->second);
        path.pop_back();
      }
      path.pop_back();
    }
  };
  walk(walk, beta);
  return out;
}

inline long weight_sum(const std::vector<BrutePath>& paths) {
  long s = 0;
  for (const auto& p : paths) s += p.weight;
  return s;
}

/// Critical q-cells of the field, in lexicographic order.
inline std::vector<Cell> critical_cells(const dmt::SimplicialComplex& k, const Arrows& v, int q) {
  std::vector<Cell> out;
  for (const auto& s : k.simplices(q)) {
    if (!v.matched(s.vertices())) out.push_back(s.vertices());
  }
  return out;
}

inline std::vector<std::string> labels_of(const std::vector<Cell>& cells) {
  std::vector<std::string> out;
  for (const auto& c : cells) out.push_back(dmt::Simplex(c).label());
  return out;
}

/// Morse boundary matrix by listing every trajectory explicitly.
inline dmt::IntegerMatrix morse_boundary_by_enumeration(const dmt::SimplicialComplex& k,
                                                        const dmt::DiscreteVectorField& field, int q) {
  const Arrows v(field);
  const auto rows = critical_cells(k, v, q - 1);
  const auto cols = critical_cells(k, v, q);
  dmt::IntegerMatrix m(labels_of(rows), labels_of(cols));
  if (q < 1) return m;
  for (std::size_t j = 0; j < cols.size(); ++j) {
    for (std::size_t i = 0; i < rows.size(); ++i) {
      m.at(i, j) = weight_sum(all_trajectories(v, cols[j], rows[i]));
    }
  }
  return m;
}

/// Acyclicity by Kahn's algorithm on the Hasse diagram with matched edges reversed.
inline bool acyclic_by_kahn(const dmt::SimplicialComplex& k, const dmt::DiscreteVectorField& field) {
  const Arrows v(field);
  std::map<Cell, std::vector<Cell>> out_edges;
  std::map<Cell, int> indegree;
  for (int q = 0; q <= k.dim(); ++q) {
    for (const auto& s : k.simplices(q)) indegree[s.vertices()];
  }
  for (int q = 1; q <= k.dim(); ++q) {
    for (const auto& s : k.simplices(q)) {
      const Cell& b = s.vertices();
      for (std::size_t i = 0; i < b.size(); ++i) {
        const Cell a = drop(b, i);
        const auto it = v.up.find(a);
        if (it != v.up.end() && it->second == b) {
          out_edges[a].push_back(b);
          ++indegree[b];
        } else {
          out_edges[b].push_back(a);
          ++indegree[a];
        }
      }
    }
  }
  std::queue<Cell> ready;
  for (const auto& [c, d] : indegree) {
    if (d == 0) ready.push(c);
  }
  std::size_t seen = 0;
  while (!ready.empty()) {
    const Cell c = ready.front();
    ready.pop();
    ++seen;
    for (const auto& n : out_edges[c]) {
      if (--indegree[n] == 0) ready.push(n);
    }
  }
  return seen == indegree.size();
}

/// Determinant by cofactor expansion along the first row.
inline Big determinant(const std::vector<std::vector<Big>>& a) {
  const std::size_t n = a.size();
  if (n == 0) return 1;
  if (n == 1) return a[0][0];
  Big det = 0;
  for (std::size_t c = 0; c < n; ++c) {
    if (a[0][c] == 0) continue;
    std::vector<std::vector<Big>> minor;
    for (std::size_t r = 1; r < n; ++r) {
      std::vector<Big> row;
      for (std::size_t k = 0; k < n; ++k) {
        if (k != c) row.push_back(a[r][k]);
      }
      minor.push_back(std::move(row));
    }
    const Big term = a[0][c] * determinant(minor);
    det += c % 2 == 0 ? term : Big(-term);
  }
  return det;
}

inline void choose(std::size_t n, std::size_t k, std::size_t start, std::vector<std::size_t>& cur,
                   std::vector<std::vector<std::size_t>>& out) {
  if (cur.size() == k) {
    out.push_back(cur);
    return;
  }
  for (std::size_t i = start; i < n; ++i) {
    cur.push_back(i);
    choose(n, k, i + 1, cur, out);
    cur.pop_back();
  }
}

inline std::vector<std::vector<std::size_t>> subsets(std::size_t n, std::size_t k) {
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> cur;
  choose(n, k, 0, cur, out);
  return out;
}

/// Invariant factors d_k / d_{k-1}, d_k the gcd of all k-by-k minors. Zeros fill
/// the tail up to min(rows, cols). Exponential: small matrices only.
inline std::vector<Big> invariant_factors_by_minors(const dmt::IntegerMatrix& m) {
  const std::size_t r = m.num_rows();
  const std::size_t c = m.num_cols();
  const std::size_t n = std::min(r, c);
  std::vector<Big> out;
  Big prev = 1;
  for (std::size_t k = 1; k <= n; ++k) {
    Big g = 0;
    for (const auto& rows : subsets(r, k)) {
      for (const auto& cols : subsets(c, k)) {
        std::vector<std::vector<Big>> sub(k, std::vector<Big>(k));
        for (std::size_t i = 0; i < k; ++i) {
          for (std::size_t j = 0; j < k; ++j) sub[i][j] = m.at(rows[i], cols[j]);
        }
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), Big(determinant(sub)).get_mpz_t());
      }
    }
    if (g == 0) {
      out.resize(n, 0);
      return out;
    }
    out.push_back(Big(g / prev));
    prev = g;
  }
  return out;
}

/// Rank over the rationals by fraction-free (Bareiss) elimination.
inline std::size_t rank_over_rationals(const dmt::IntegerMatrix& m) {
  std::vector<std::vector<Big>> a(m.num_rows(), std::vector<Big>(m.num_cols()));
  for (std::size_t i = 0; i < m.num_rows(); ++i) {
    for (std::size_t j = 0; j < m.num_cols(); ++j) a[i][j] = m.at(i, j);
  }
  std::size_t rank = 0;
  Big prev = 1;
  for (std::size_t col = 0; col < m.num_cols() && rank < a.size(); ++col) {
    std::size_t pivot = rank;
    while (pivot < a.size() && a[pivot][col] == 0) ++pivot;
    if (pivot == a.size()) continue;
    std::swap(a[pivot], a[rank]);
    for (std::size_t i = rank + 1; i < a.size(); ++i) {
      for (std::size_t j = col + 1; j < m.num_cols(); ++j) {
        a[i][j] = (a[rank][col] * a[i][j] - a[i][col] * a[rank][j]) / prev;
      }
      a[i][col] = 0;
    }
    prev = a[rank][col];
    ++rank;
  }
  return rank;
}

/// True iff some non-identity permutation pi has reach[i][pi(i)] for all i.
inline bool nonidentity_permutation_exists(const std::vector<std::vector<bool>>& reach) {
  std::vector<std::size_t> pi(reach.size());
  std::iota(pi.begin(), pi.end(), 0);
  while (std::next_permutation(pi.begin(), pi.end())) {
    bool ok = true;
    for (std::size_t i = 0; i < pi.size() && ok; ++i) ok = reach[i][pi[i]];
    if (ok) return true;
  }
  return false;
}

/// Number of k-element sets of pairwise disjoint edges of K_n, by subset enumeration.
inline std::size_t count_disjoint_edge_sets(int n, std::size_t k) {
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) edges.emplace_back(i, j);
  }
  std::size_t count = 0;
  for (const auto& s : subsets(edges.size(), k)) {
    std::set<int> used;
    bool disjoint = true;
    for (std::size_t e : s) {
      disjoint = disjoint && used.insert(edges[e].first).second && used.insert(edges[e].second).second;
    }
    if (disjoint) ++count;
  }
  return count;
}

}  // namespace oracle
