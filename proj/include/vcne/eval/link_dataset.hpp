#pragma once
#include <cstdint>
#include <filesystem>
#include <span>
#include <vector>

#include "vcne/graph.hpp"

namespace vcne::eval {

struct LabeledPair {
  VertexId u = 0;
  VertexId v = 0;
  int label = 0;

  friend bool operator==(const LabeledPair&, const LabeledPair&) = default;
};

/// Held-out link-prediction splits plus the core graph that remains for training.
struct LinkDataset {
  Graph core_graph;
  std::vector<LabeledPair> train;
  std::vector<LabeledPair> validation;
  std::vector<LabeledPair> test;
};

/**
 * Removes round(fraction * |E|) true edges per split (three disjoint splits)
 * and pairs each split with as many sampled non-edges of g. An edge is never
 * removed if that would leave an endpoint isolated in the core graph. g is
 * read as undirected.
 */
LinkDataset make_link_dataset(const Graph& g, double holdout_fraction, std::uint64_t seed);

std::vector<int> labels_of(std::span<const LabeledPair> pairs);

/// `src dst label` per line with external ids.
void write_pairs(const std::filesystem::path& path, std::span<const LabeledPair> pairs, const RemapTable& remap);
/// Reads a split file, mapping external ids through remap (unknown id -> ValidationError).
std::vector<LabeledPair> read_pairs(const std::filesystem::path& path, const RemapTable& remap);

}  // namespace vcne::eval
