#pragma once
#include <omp.h>

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "vcne/embedding_table.hpp"
#include "vcne/error.hpp"
#include "vcne/graph.hpp"

namespace vcne {

/// mergeMessage for gradient propagation: componentwise sum, identity = zero.
struct VectorSum {
  void operator()(std::span<double> acc, std::span<const double> msg) const noexcept {
    for (std::size_t k = 0; k < acc.size(); ++k) acc[k] += msg[k];
  }
};

/**
 * Partition-local fold target. Holds at most one running message per target
 * vertex no matter how many in-edges the partition contains; the slot is
 * created (at the merge identity) on the first message for that target.
 */
class PartialAccumulator {
 public:
  void reset(std::size_t num_vertices, std::size_t width);

  template <class Merge>
  void fold(VertexId target, std::span<const double> msg, const Merge& merge) {
    std::uint32_t& slot = slot_of_[target];
    if (slot == npos) {
      slot = static_cast<std::uint32_t>(targets_.size());
      targets_.push_back(target);
      sums_.resize(sums_.size() + width_, 0.0);
      counts_.push_back(0);
    }
    merge(std::span<double>(sums_.data() + std::size_t{slot} * width_, width_), msg);
    ++counts_[slot];
  }

  std::size_t size() const noexcept { return targets_.size(); }
  std::size_t width() const noexcept { return width_; }
  std::span<const VertexId> targets() const noexcept { return targets_; }

  std::optional<std::size_t> find(VertexId target) const noexcept {
    if (target >= slot_of_.size() || slot_of_[target] == npos) return std::nullopt;
    return slot_of_[target];
  }
  std::span<const double> sum(std::size_t slot) const noexcept {
    return {sums_.data() + slot * width_, width_};
  }
  std::uint32_t count(std::size_t slot) const noexcept { return counts_[slot]; }

 private:
  static constexpr std::uint32_t npos = ~std::uint32_t{0};
  std::size_t width_ = 0;
  std::vector<std::uint32_t> slot_of_;
  std::vector<VertexId> targets_;
  std::vector<double> sums_;
  std::vector<std::uint32_t> counts_;
};

/// Per-vertex result of the merge phase.
struct MergedMessages {
  std::size_t width = 0;
  std::vector<double> values;         // num_vertices x width
  std::vector<std::uint32_t> counts;  // messages received per vertex

  std::span<const double> at(VertexId v) const noexcept { return {values.data() + std::size_t{v} * width, width}; }
  bool received(VertexId v) const noexcept { return counts[v] > 0; }
};

/// Instrumentation of the last superstep.
struct SuperstepStats {
  std::size_t messages = 0;
  std::size_t accumulator_entries = 0;  // summed over partitions
  /// Accumulator entries that existed for each vertex (one per partition that touched it).
  std::vector<std::uint32_t> entries_per_vertex;
  std::size_t peak_entries_per_vertex = 0;
};

/// A send produced a non-finite component.
class SuperstepError : public Error {
 public:
  SuperstepError(const Edge& e, std::size_t partition)
      : Error("non-finite message on edge " + std::to_string(e.src) + "->" + std::to_string(e.dst) +
              " (partition " + std::to_string(partition) + ")"),
        edge_(e),
        partition_(partition) {}
  const Edge& edge() const noexcept { return edge_; }
  std::size_t partition() const noexcept { return partition_; }

 private:
  Edge edge_;
  std::size_t partition_;
};

inline int resolve_threads(int threads) noexcept { return threads > 0 ? threads : omp_get_max_threads(); }

/**
 * Folds partition partials into one message per vertex. Partials are visited
 * in ascending partition index for every vertex, so the floating-point result
 * depends only on the partition count, never on scheduling.
 */
template <class Merge = VectorSum>
MergedMessages reduce_deterministic(std::span<const PartialAccumulator> partials, std::size_t num_vertices,
                                    std::size_t width, const Merge& merge = {}, int threads = 0,
                                    SuperstepStats* stats = nullptr) {
  MergedMessages out;
  out.width = width;
  out.values.assign(num_vertices * width, 0.0);
  out.counts.assign(num_vertices, 0);
  if (stats) stats->entries_per_vertex.assign(num_vertices, 0);
  const auto n = static_cast<std::int64_t>(num_vertices);
#pragma omp parallel for schedule(static) num_threads(resolve_threads(threads))
  for (std::int64_t iv = 0; iv < n; ++iv) {
    const auto v = static_cast<VertexId>(iv);
    std::span<double> acc(out.values.data() + std::size_t{v} * width, width);
    std::uint32_t entries = 0;
    for (const PartialAccumulator& part : partials) {
      auto slot = part.find(v);
      if (!slot) continue;
      merge(acc, part.sum(*slot));
      out.counts[v] += part.count(*slot);
      ++entries;
    }
    if (stats) stats->entries_per_vertex[v] = entries;
  }
  if (stats) {
    stats->peak_entries_per_vertex = 0;
    for (auto e : stats->entries_per_vertex)
      stats->peak_entries_per_vertex = std::max<std::size_t>(stats->peak_entries_per_vertex, e);
  }
  return out;
}

struct EngineOptions {
  int threads = 0;  // 0: OpenMP default
};

/**
 * Bulk-synchronous executor of the sendMessage -> mergeMessage -> vertexProgram
 * contract. One OpenMP task per edge block runs sends and folds them straight
 * into that block's accumulator; a barrier separates the phases.
 *
 * send(edge, src_state, dst_state, out) writes the message for edge.dst.
 * merge(acc, msg) folds msg into acc (commutative, associative, identity 0).
 * apply(v, old_state, merged, new_state) runs once per vertex with >= 1 message.
 */
class BspEngine {
 public:
  explicit BspEngine(EngineOptions opts = {}) : opts_(opts) {}

  int threads() const noexcept { return resolve_threads(opts_.threads); }
  const SuperstepStats& stats() const noexcept { return stats_; }

  template <class Send, class Merge = VectorSum>
  MergedMessages gather(const Graph& g, const EmbeddingTable& state, std::size_t width, Send&& send,
                        const Merge& merge = {}) {
    if (state.rows() != g.num_vertices())
      throw ValidationError("state has " + std::to_string(state.rows()) + " rows for " +
                            std::to_string(g.num_vertices()) + " vertices");
    const std::size_t parts = g.num_partitions();
    partials_.resize(parts);
    std::vector<std::optional<Edge>> failed(parts);
    const auto np = static_cast<std::int64_t>(parts);
#pragma omp parallel for schedule(dynamic, 1) num_threads(threads())
    for (std::int64_t ip = 0; ip < np; ++ip) {
      const auto p = static_cast<std::size_t>(ip);
      PartialAccumulator& acc = partials_[p];
      acc.reset(g.num_vertices(), width);
      std::vector<double> msg(width);
      for (const Edge& e : g.block(p)) {
        send(e, state.row(e.src), state.row(e.dst), std::span<double>(msg));
        if (!all_finite(msg)) {
          failed[p] = e;
          break;
        }
        acc.fold(e.dst, msg, merge);
      }
    }
    for (std::size_t p = 0; p < parts; ++p)
      if (failed[p]) throw SuperstepError(*failed[p], p);

    stats_ = {};
    stats_.messages = g.num_edges();
    for (const auto& part : partials_) stats_.accumulator_entries += part.size();
    return reduce_deterministic(std::span<const PartialAccumulator>(partials_), g.num_vertices(), width, merge,
                                opts_.threads, &stats_);
  }

  template <class Send, class Apply, class Merge = VectorSum>
  EmbeddingTable superstep(const Graph& g, const EmbeddingTable& state, Send&& send, Apply&& apply,
                           const Merge& merge = {}) {
    MergedMessages merged = gather(g, state, state.dim(), std::forward<Send>(send), merge);
    EmbeddingTable next = state;
    const auto n = static_cast<std::int64_t>(state.rows());
#pragma omp parallel for schedule(static) num_threads(threads())
    for (std::int64_t iv = 0; iv < n; ++iv) {
      const auto v = static_cast<VertexId>(iv);
      if (merged.received(v)) apply(v, state.row(v), merged.at(v), next.row(v));
    }
    return next;
  }

 private:
  EngineOptions opts_;
  std::vector<PartialAccumulator> partials_;
  SuperstepStats stats_;
};

}  // namespace vcne
