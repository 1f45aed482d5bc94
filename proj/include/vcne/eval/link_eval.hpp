#pragma once
#include <span>
#include <string_view>
#include <vector>

#include "vcne/embedding_table.hpp"
#include "vcne/eval/classifier.hpp"
#include "vcne/eval/link_dataset.hpp"
#include "vcne/eval/metrics.hpp"

namespace vcne::eval {

enum class PairFeature { hadamard, concat, dot };

std::string_view to_string(PairFeature f);
PairFeature parse_pair_feature(std::string_view name);

/// d (hadamard), 2d (concat) or 1 (dot).
std::size_t feature_dim(PairFeature f, std::size_t dim) noexcept;

void featurize_pair(const EmbeddingTable& e, VertexId a, VertexId b, PairFeature f, std::span<double> out);
std::vector<double> featurize_pair(const EmbeddingTable& e, VertexId a, VertexId b, PairFeature f);
Matrix featurize_pairs(const EmbeddingTable& e, std::span<const LabeledPair> pairs, PairFeature f);

/// Test-split metrics at 0.5, or at the F1-best validation threshold when tune_threshold is set.
Metrics evaluate(const BinaryClassifier& classifier, const LinkDataset& ds, const EmbeddingTable& e, PairFeature f,
                 bool tune_threshold = false);

/// Trains on ds.train (selecting on ds.validation) and evaluates on ds.test.
Metrics link_predict(const EmbeddingTable& e, const LinkDataset& ds, PairFeature f, const ClassifierSpec& spec,
                     bool tune_threshold = false);

}  // namespace vcne::eval
