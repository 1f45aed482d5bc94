#pragma once
#include <cstddef>
#include <cstdint>

#include "vcne/graph.hpp"

namespace vcne {

struct SamplerConfig {
  double negative_ratio = 1.0;  // negatives per vertex = round(ratio * d_i)
  std::uint64_t seed = 1;
  bool exclude_true_neighbors = true;
  std::size_t max_rejections = 100;  // per slot, then any j != i is accepted
  bool degree_biased = false;        // draw j with probability ~ d_j^0.75 instead of uniformly
  int threads = 0;
};

struct SamplerStats {
  std::size_t negatives = 0;
  std::size_t rejections = 0;
  std::size_t fallbacks = 0;  // slots that exhausted max_rejections
  std::size_t saturated = 0;  // vertices adjacent to all others, left without negatives
};

std::size_t negatives_for_degree(std::size_t degree, double ratio) noexcept;

/**
 * Random graph of negative edges j -> i (weight -1) for every vertex i with
 * d_i > 0. With exclusion on, a vertex adjacent to every other vertex has no
 * candidate and gets none; otherwise a slot that keeps hitting neighbours
 * falls back to any j != i after max_rejections retries. Each vertex draws from its own RNG stream keyed by
 * (seed, iteration, i), so the result does not depend on threading or on how
 * g is partitioned. The output is partitioned like g.
 */
Graph sample_negative_graph(const Graph& g, const SamplerConfig& cfg, std::uint64_t iteration,
                            SamplerStats* stats = nullptr);

}  // namespace vcne
