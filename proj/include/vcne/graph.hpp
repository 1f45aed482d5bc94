#pragma once
#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

namespace vcne {

using VertexId = std::uint32_t;
using ExternalId = std::uint64_t;

/// Directed weighted edge src -> dst. Undirected graphs store both directions.
struct Edge {
  VertexId src = 0;
  VertexId dst = 0;
  double weight = 1.0;

  friend bool operator==(const Edge&, const Edge&) = default;
};

enum class PartitionStrategy { hash_src, hash_edge };

std::string_view to_string(PartitionStrategy s);
PartitionStrategy parse_partition_strategy(std::string_view name);

/// Block index of an edge; a pure function of (src, dst, p).
std::size_t partition_of(const Edge& e, std::size_t partitions, PartitionStrategy strategy) noexcept;

/**
 * Immutable weighted directed edge multiset over dense vertex ids, split into
 * disjoint edge blocks. Degrees and the undirected adjacency are derived on
 * first use and shared between copies; concurrent readers are safe.
 */
class Graph {
 public:
  Graph();
  explicit Graph(std::size_t num_vertices, std::vector<Edge> edges = {}, std::size_t partitions = 1,
                 PartitionStrategy strategy = PartitionStrategy::hash_edge);

  std::size_t num_vertices() const noexcept { return num_vertices_; }
  std::size_t num_edges() const noexcept { return edges_.size(); }
  bool empty() const noexcept { return edges_.empty(); }

  /// All edges, grouped by block (block 0 first).
  std::span<const Edge> edges() const noexcept { return edges_; }
  std::size_t num_partitions() const noexcept { return block_offsets_.size() - 1; }
  std::span<const Edge> block(std::size_t p) const;
  PartitionStrategy strategy() const noexcept { return strategy_; }

  /// Number of distinct neighbours in the undirected view.
  std::size_t degree(VertexId v) const;
  std::span<const std::uint32_t> degrees() const;
  /// Sorted distinct neighbours in the undirected view.
  std::span<const VertexId> neighbors(VertexId v) const;
  bool adjacent(VertexId u, VertexId v) const;
  /// Distinct unordered vertex pairs joined by at least one edge.
  std::size_t num_undirected_edges() const;

 private:
  struct Derived;
  const Derived& derived() const;
  void check_vertex(VertexId v) const;

  std::size_t num_vertices_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::size_t> block_offsets_;
  PartitionStrategy strategy_ = PartitionStrategy::hash_edge;
  std::shared_ptr<Derived> derived_;
};

Graph partition_edges(const Graph& g, std::size_t partitions, PartitionStrategy strategy);

/// Edge-multiset concatenation (g's edges, then h's); keeps g's partitioning.
Graph graph_union(const Graph& g, const Graph& h);

/// Bijection between sparse external ids and dense VertexIds (first-seen order).
class RemapTable {
 public:
  static RemapTable identity(std::size_t n);

  VertexId intern(ExternalId id);
  std::optional<VertexId> find(ExternalId id) const;
  ExternalId external(VertexId v) const { return to_external_.at(v); }
  std::size_t size() const noexcept { return to_external_.size(); }
  std::span<const ExternalId> externals() const noexcept { return to_external_; }

  /// Two-column text, `external_id dense_id`, dense order.
  void write(std::ostream& out) const;
  void write(const std::filesystem::path& path) const;
  static RemapTable read(std::istream& in, const std::string& source = "<stream>");

 private:
  std::unordered_map<ExternalId, VertexId> to_dense_;
  std::vector<ExternalId> to_external_;
};

struct LoadedGraph {
  Graph graph;
  RemapTable remap;
  std::size_t skipped_self_loops = 0;
  std::size_t duplicate_edges = 0;
};

/// Whitespace-separated `src dst [weight]` lines, `#` comments.
LoadedGraph parse_edge_list(std::istream& in, bool undirected, const std::string& source = "<stream>");
LoadedGraph load_edge_list(const std::filesystem::path& path, bool undirected = true);

/// Writes each undirected pair once (or every edge when !undirected) with external ids.
void write_edge_list(const std::filesystem::path& path, const Graph& g, const RemapTable& remap,
                     bool undirected = true);

}  // namespace vcne
