#pragma once
#include <filesystem>
#include <vector>

#include "vcne/embedding_table.hpp"
#include "vcne/eval/classifier.hpp"
#include "vcne/eval/metrics.hpp"
#include "vcne/graph.hpp"

namespace vcne::eval {

/// 0/1 indicator matrix; one column per label (multi-class uses one-hot rows).
struct LabelMatrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<int> data;

  LabelMatrix() = default;
  LabelMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), data(r * c, 0) {}
  std::span<int> row(std::size_t i) noexcept { return {data.data() + i * cols, cols}; }
  std::span<const int> row(std::size_t i) const noexcept { return {data.data() + i * cols, cols}; }
};

struct VertexSplits {
  std::vector<VertexId> train;
  std::vector<VertexId> validation;
  std::vector<VertexId> test;
};

struct VertexClassification {
  Metrics features_only;
  Metrics combined;  // features with the embedding appended
};

/// [features ; embedding] per row.
Matrix concat_features(const Matrix& features, const EmbeddingTable& e);

/// One-vs-rest classifiers, micro-averaged over every (test vertex, label) decision at 0.5.
Metrics one_vs_rest_micro(const Matrix& x, const LabelMatrix& labels, const VertexSplits& splits,
                          const ClassifierSpec& spec);

VertexClassification classify_vertices(const EmbeddingTable& e, const Matrix& features, const LabelMatrix& labels,
                                       const VertexSplits& splits, const ClassifierSpec& spec);

/// Rows of `vertex_id v1 ... vk`; every row must carry the same number of values.
struct VertexRows {
  std::vector<ExternalId> ids;
  Matrix values;
};
VertexRows read_vertex_rows(const std::filesystem::path& path);
/// `vertex_id train|val|test` lines mapped through ids (position = row index).
VertexSplits read_vertex_splits(const std::filesystem::path& path, const std::vector<ExternalId>& ids);
void write_vertex_splits(const std::filesystem::path& path, const VertexSplits& splits, const RemapTable& remap);

}  // namespace vcne::eval
