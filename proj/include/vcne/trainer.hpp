#pragma once
#include <cstddef>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <span>
#include <string_view>
#include <vector>

#include "vcne/embedding_table.hpp"
#include "vcne/engine.hpp"
#include "vcne/graph.hpp"
#include "vcne/sampler.hpp"

namespace vcne {

enum class TrainMode { vcne, line1 };

std::string_view to_string(TrainMode m);
TrainMode parse_train_mode(std::string_view name);

struct TrainConfig {
  std::size_t dim = 100;
  double learning_rate = 0.01;
  std::size_t iterations = 100;
  double negative_ratio = 1.0;
  std::uint64_t seed = 1;
  std::size_t partitions = 1;
  int threads = 0;
  TrainMode mode = TrainMode::vcne;
  PartitionStrategy strategy = PartitionStrategy::hash_edge;
  bool exclude_true_neighbors = true;
  std::size_t max_rejections = 100;
  bool degree_biased = false;
  /// Scale positive-edge messages into i by 1/w_i, w_i = sum of i's positive in-weights.
  bool weight_normalized = false;
  bool track_objective = true;

  SamplerConfig sampler() const;
  void validate() const;
};

/// One line of the training report. Objectives of different iterations are
/// measured on different augmented graphs and are not directly comparable.
struct IterationRecord {
  std::size_t iteration = 0;
  double objective = 0.0;
  double t_sample_ms = 0.0;
  double t_union_ms = 0.0;
  double t_step_ms = 0.0;
  double t_norm_ms = 0.0;
  double t_total_ms = 0.0;  // includes objective evaluation
};

struct TrainReport {
  std::vector<IterationRecord> iterations;

  /// `iter objective t_sample_ms t_union_ms t_step_ms t_norm_ms`, tab-separated.
  void write_tsv(std::ostream& out) const;
};

struct TrainResult {
  EmbeddingTable embeddings;
  TrainReport report;
};

class TrainError : public Error {
 public:
  TrainError(std::size_t iteration, const std::string& what)
      : Error("iteration " + std::to_string(iteration) + ": " + what), iteration_(iteration) {}
  std::size_t iteration() const noexcept { return iteration_; }

 private:
  std::size_t iteration_;
};

/// Rows drawn uniformly in [-0.5/d, 0.5/d] from a stream keyed by (seed, row), then unit-normalized.
EmbeddingTable init_embeddings(std::size_t num_vertices, const TrainConfig& cfg);

/// sendMessage payload: w * u_source.
void edge_gradient(double w, std::span<const double> u_source, std::span<double> out) noexcept;
std::vector<double> edge_gradient(double w, std::span<const double> u_source);

inline constexpr double kSigmoidClamp = 30.0;
double sigmoid(double x) noexcept;

/// LINE-1st message for i <- j: |w| * s * sigmoid(-s * u_i.u_j) * u_j, s = sign(w).
void line1_gradient(double w, std::span<const double> u_target, std::span<const double> u_source,
                    std::span<double> out) noexcept;

inline constexpr double kDegenerateNorm = 1e-12;

/// normalize(u + eta * m); u unchanged if the sum nearly cancels.
void vertex_update(std::span<const double> u, std::span<const double> m, double eta, std::span<double> out) noexcept;
std::vector<double> vertex_update(std::span<const double> u, std::span<const double> m, double eta);

/// Sum over directed edges j -> i of w * u_i.u_j (line1: |w| log sigmoid(s u_i.u_j)).
double objective(BspEngine& engine, const Graph& augmented, const EmbeddingTable& e,
                 TrainMode mode = TrainMode::vcne);
double objective(const Graph& augmented, const EmbeddingTable& e, TrainMode mode = TrainMode::vcne);

/// One gradient-ascent superstep over a fixed augmented graph.
EmbeddingTable gradient_step(BspEngine& engine, const Graph& augmented, const EmbeddingTable& e, double eta,
                             TrainMode mode = TrainMode::vcne, bool normalize = true,
                             std::span<const double> inv_in_weight = {});

/// 1 / (sum of positive in-edge weights) per vertex, 0 where there are none.
std::vector<double> inverse_in_weights(const Graph& g);

using IterationObserver = std::function<void(std::size_t iteration, const EmbeddingTable&)>;

/**
 * Per iteration: sample the negative graph, union it with g, run one
 * gradient superstep with unit-norm projection, and record the objective.
 */
TrainResult train(const Graph& g, const TrainConfig& cfg, const IterationObserver& observer = {});

}  // namespace vcne
