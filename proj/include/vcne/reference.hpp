#pragma once
#include <vector>

#include "vcne/embedding_table.hpp"
#include "vcne/graph.hpp"
#include "vcne/trainer.hpp"

// Straight-line single-threaded versions of the parallel kernels. They walk
// g.edges() in storage order with no partition accumulators, and exist to
// cross-check the engine in tests and as the baseline in benchmarks.
namespace vcne::reference {

/// Merged gradient per vertex (num_vertices x dim) and message counts.
struct Gradient {
  EmbeddingTable sum;
  std::vector<std::size_t> received;
};

Gradient gradient(const Graph& augmented, const EmbeddingTable& e, TrainMode mode = TrainMode::vcne);

double objective(const Graph& augmented, const EmbeddingTable& e);

EmbeddingTable step(const Graph& augmented, const EmbeddingTable& e, double eta, TrainMode mode = TrainMode::vcne);

/// Same seed discipline as vcne::train; ignores partitions and threads.
EmbeddingTable train(const Graph& g, const TrainConfig& cfg, const IterationObserver& observer = {});

}  // namespace vcne::reference
