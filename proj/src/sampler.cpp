#include "vcne/sampler.hpp"

#include <omp.h>

#include <algorithm>
#include <cmath>
#include <random>
#include <vector>

#include "vcne/error.hpp"
#include "vcne/hash.hpp"

namespace vcne {

std::size_t negatives_for_degree(std::size_t degree, double ratio) noexcept {
  return static_cast<std::size_t>(std::llround(ratio * static_cast<double>(degree)));
}

Graph sample_negative_graph(const Graph& g, const SamplerConfig& cfg, std::uint64_t iteration,
                            SamplerStats* stats) {
  const std::size_t n = g.num_vertices();
  if (n < 2) throw ValidationError("negative sampling needs at least 2 vertices, graph has " + std::to_string(n));
  if (!(cfg.negative_ratio > 0.0)) throw ValidationError("negative ratio must be > 0");

  auto degrees = g.degrees();
  std::vector<std::size_t> offsets(n + 1, 0);
  std::size_t saturated = 0;
  for (std::size_t i = 0; i < n; ++i) {
    std::size_t count = degrees[i] > 0 ? negatives_for_degree(degrees[i], cfg.negative_ratio) : 0;
    // adjacent to every other vertex: there is no non-neighbour to draw
    if (cfg.exclude_true_neighbors && degrees[i] == n - 1 && count > 0) {
      count = 0;
      ++saturated;
    }
    offsets[i + 1] = offsets[i] + count;
  }

  std::vector<double> cdf;
  if (cfg.degree_biased) {
    cdf.resize(n);
    double acc = 0.0;
    for (std::size_t j = 0; j < n; ++j) cdf[j] = acc += std::pow(static_cast<double>(degrees[j]), 0.75);
    if (acc <= 0.0) cdf.clear();
  }

  std::vector<Edge> edges(offsets[n]);
  std::size_t rejections = 0, fallbacks = 0;
  const auto ni = static_cast<std::int64_t>(n);
  const int threads = cfg.threads > 0 ? cfg.threads : omp_get_max_threads();
#pragma omp parallel for schedule(dynamic, 256) num_threads(threads) reduction(+ : rejections, fallbacks)
  for (std::int64_t ii = 0; ii < ni; ++ii) {
    const auto i = static_cast<VertexId>(ii);
    const std::size_t count = offsets[i + 1] - offsets[i];
    if (count == 0) continue;
    std::mt19937_64 rng(stream_seed(cfg.seed, iteration, i));
    std::uniform_int_distribution<std::size_t> other(0, n - 2);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    auto draw_uniform = [&] {
      auto j = static_cast<VertexId>(other(rng));
      return j >= i ? j + 1 : j;  // uniform over V \ {i}
    };
    auto draw = [&]() -> VertexId {
      if (cdf.empty()) return draw_uniform();
      double r = unit(rng) * cdf.back();
      auto it = std::upper_bound(cdf.begin(), cdf.end(), r);
      return static_cast<VertexId>(std::min<std::size_t>(static_cast<std::size_t>(it - cdf.begin()), n - 1));
    };
    auto nbrs = g.neighbors(i);
    for (std::size_t s = 0; s < count; ++s) {
      VertexId j = 0;
      bool accepted = false;
      for (std::size_t attempt = 0; attempt <= cfg.max_rejections; ++attempt) {
        j = draw();
        bool bad = j == i || (cfg.exclude_true_neighbors && std::binary_search(nbrs.begin(), nbrs.end(), j));
        if (!bad) {
          accepted = true;
          break;
        }
        ++rejections;
      }
      if (!accepted) {
        j = draw_uniform();
        ++fallbacks;
      }
      edges[offsets[i] + s] = Edge{j, i, -1.0};
    }
  }
  if (stats) *stats = {edges.size(), rejections, fallbacks, saturated};
  return Graph(n, std::move(edges), g.num_partitions(), g.strategy());
}

}  // namespace vcne
