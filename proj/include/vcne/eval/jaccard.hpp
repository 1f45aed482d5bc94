#pragma once
#include <span>
#include <vector>

#include "vcne/eval/link_dataset.hpp"
#include "vcne/eval/metrics.hpp"
#include "vcne/graph.hpp"

namespace vcne::eval {

/// |N(u) & N(v)| / |N(u) | N(v)| over the undirected view of g; 0 for an empty union.
double jaccard_score(const Graph& g, VertexId u, VertexId v);

std::vector<double> jaccard_scores(const Graph& g, std::span<const LabeledPair> pairs, int threads = 0);

/// Threshold picked for best validation F1, reported on the test split.
Metrics jaccard_predict(const Graph& core, const LinkDataset& ds, int threads = 0);

}  // namespace vcne::eval
