#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <vector>

#include "dmt/complex.hpp"
#include "dmt/vector_field.hpp"

namespace dmt {

struct CorpusParams {
  std::size_t count = 200;
  int max_dim = 3;
  int max_vertices = 12;
  std::uint64_t seed = 1;
};

struct CorpusInstance {
  std::size_t id = 0;
  SimplicialComplex complex;
  DiscreteVectorField field;
};

/// Uniform draw from [0, n) by rejection; depends only on the engine's output
/// sequence, so corpora are reproducible across standard libraries.
std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t n);

/// Random pure complex: dimension in [1, max_dim], at most max_vertices vertices.
SimplicialComplex random_pure_complex(std::mt19937_64& rng, int max_dim, int max_vertices);

/// Greedy acyclic matching: arrows are tried in random order and kept when both
/// ends are free and no closed trajectory appears. `accept_percent` thins the
/// candidate stream so that critical cells remain.
DiscreteVectorField greedy_gradient_field(const SimplicialComplex& complex, std::mt19937_64& rng,
                                          unsigned accept_percent = 100);

/// Instance i depends only on (seed, i).
CorpusInstance generate_instance(const CorpusParams& params, std::size_t id);
std::vector<CorpusInstance> generate_corpus(const CorpusParams& params);

}  // namespace dmt
