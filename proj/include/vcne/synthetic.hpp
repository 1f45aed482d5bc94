#pragma once
#include <cstdint>
#include <vector>

#include "vcne/eval/classifier.hpp"
#include "vcne/eval/vertex_classification.hpp"
#include "vcne/graph.hpp"

namespace vcne {

struct SbmSpec {
  std::vector<std::size_t> block_sizes;
  double p_in = 0.1;
  double p_out = 0.01;
  std::uint64_t seed = 1;
};

struct SbmGraph {
  Graph graph;  // undirected (both directions), vertices numbered block by block
  std::vector<std::uint32_t> block_of;
};

/// Stochastic block model; pairs are visited with geometric skips, so cost is O(|V| + |E|).
SbmGraph generate_sbm(const SbmSpec& spec);

/// One-hot block membership.
eval::LabelMatrix block_labels(const std::vector<std::uint32_t>& block_of, std::size_t blocks);

/// Standard-normal noise features.
eval::Matrix noise_features(std::size_t rows, std::size_t cols, std::uint64_t seed);

/// Seeded random split of [0, n) with the given train / validation fractions (rest is test).
eval::VertexSplits random_vertex_splits(std::size_t n, double train_fraction, double validation_fraction,
                                        std::uint64_t seed);

}  // namespace vcne
