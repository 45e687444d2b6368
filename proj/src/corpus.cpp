#include "dmt/corpus.hpp"

#include <algorithm>
#include <limits>
#include <set>
#include <tuple>

#include "dmt/error.hpp"

namespace dmt {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

constexpr std::size_t none = std::numeric_limits<std::size_t>::max();

}  // namespace

std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t n) {
  if (n == 0) throw DomainError("uniform_below(0)");
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                              std::numeric_limits<std::uint64_t>::max() % n;
  std::uint64_t x;
  do {
    x = rng();
  } while (x >= limit);
  return x % n;
}

SimplicialComplex random_pure_complex(std::mt19937_64& rng, int max_dim, int max_vertices) {
  if (max_dim < 1 || max_vertices < max_dim + 2) {
    throw DomainError("corpus needs max_dim >= 1 and max_vertices >= max_dim + 2");
  }
  const int d = 1 + static_cast<int>(uniform_below(rng, static_cast<std::uint64_t>(max_dim)));
  const int n = d + 2 + static_cast<int>(uniform_below(rng, static_cast<std::uint64_t>(max_vertices - d - 1)));
  const int facets = 1 + static_cast<int>(uniform_below(rng, static_cast<std::uint64_t>(2 * n)));

  std::vector<std::vector<Vertex>> out;
  std::vector<Vertex> pool(n);
  for (int f = 0; f < facets; ++f) {
    for (int v = 0; v < n; ++v) pool[v] = v;
    // Partial Fisher-Yates for a (d+1)-subset.
    for (int i = 0; i <= d; ++i) {
      const auto j = i + static_cast<int>(uniform_below(rng, static_cast<std::uint64_t>(n - i)));
      std::swap(pool[i], pool[j]);
    }
    out.emplace_back(pool.begin(), pool.begin() + d + 1);
  }
  return build_complex(out);
}

DiscreteVectorField greedy_gradient_field(const SimplicialComplex& complex, std::mt19937_64& rng,
                                          unsigned accept_percent) {
  const int d = complex.dim();
  std::vector<std::vector<std::size_t>> up(d + 1), down(d + 1);
  for (int q = 0; q <= d; ++q) {
    up[q].assign(complex.count(q), none);
    down[q].assign(complex.count(q), none);
  }

  // (q, coface index, face position) for every codimension-one incidence.
  std::vector<std::tuple<int, std::size_t, std::size_t>> candidates;
  for (int q = 1; q <= d; ++q) {
    for (std::size_t b = 0; b < complex.count(q); ++b) {
      for (std::size_t pos = 0; pos <= static_cast<std::size_t>(q); ++pos) {
        candidates.emplace_back(q, b, pos);
      }
    }
  }
  for (std::size_t i = candidates.size(); i > 1; --i) {
    std::swap(candidates[i - 1], candidates[uniform_below(rng, i)]);
  }

  // Does q-simplex `start` reach itself in the matched digraph of level q?
  auto closes_cycle = [&](int q, std::size_t start) {
    std::vector<unsigned char> seen(complex.count(q), 0);
    std::vector<std::size_t> stack{start};
    while (!stack.empty()) {
      const std::size_t x = stack.back();
      stack.pop_back();
      for (std::size_t f : complex.faces(q, x)) {
        if (f == down[q][x]) continue;
        const std::size_t y = up[q - 1][f];
        if (y == none) continue;
        if (y == start) return true;
        if (!seen[y]) {
          seen[y] = 1;
          stack.push_back(y);
        }
      }
    }
    return false;
  };

  DiscreteVectorField field;
  for (const auto& [q, b, pos] : candidates) {
    const std::size_t a = complex.face_index(q, b, pos);
    if (up[q][b] != none || down[q][b] != none || up[q - 1][a] != none || down[q - 1][a] != none) {
      continue;
    }
    if (uniform_below(rng, 100) >= accept_percent) continue;
    up[q - 1][a] = b;
    down[q][b] = a;
    if (closes_cycle(q, b)) {
      up[q - 1][a] = none;
      down[q][b] = none;
      continue;
    }
    field.add(complex.simplex(q - 1, a), complex.simplex(q, b));
  }
  return field;
}

CorpusInstance generate_instance(const CorpusParams& params, std::size_t id) {
  std::mt19937_64 rng(splitmix64(params.seed ^ splitmix64(static_cast<std::uint64_t>(id) + 1)));
  CorpusInstance inst;
  inst.id = id;
  inst.complex = random_pure_complex(rng, params.max_dim, params.max_vertices);
  const auto accept = 50 + static_cast<unsigned>(uniform_below(rng, 51));
  inst.field = greedy_gradient_field(inst.complex, rng, accept);
  return inst;
}

std::vector<CorpusInstance> generate_corpus(const CorpusParams& params) {
  std::vector<CorpusInstance> out;
  out.reserve(params.count);
  for (std::size_t i = 0; i < params.count; ++i) out.push_back(generate_instance(params, i));
  return out;
}

}  // namespace dmt
