#include "vcne/eval/jaccard.hpp"

#include <omp.h>

#include "vcne/error.hpp"

namespace vcne::eval {

double jaccard_score(const Graph& g, VertexId u, VertexId v) {
  auto a = g.neighbors(u);
  auto b = g.neighbors(v);
  std::size_t common = 0;
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    if (a[i] < b[j]) ++i;
    else if (b[j] < a[i]) ++j;
    else {
      ++common;
      ++i;
      ++j;
    }
  }
  const std::size_t uni = a.size() + b.size() - common;
  return uni == 0 ? 0.0 : static_cast<double>(common) / static_cast<double>(uni);
}

std::vector<double> jaccard_scores(const Graph& g, std::span<const LabeledPair> pairs, int threads) {
  std::vector<double> scores(pairs.size());
  for (const auto& p : pairs)
    if (p.u >= g.num_vertices() || p.v >= g.num_vertices())
      throw ValidationError("pair (" + std::to_string(p.u) + ", " + std::to_string(p.v) + ") out of range");
  g.degrees();  // build adjacency before the parallel region
  const auto n = static_cast<std::int64_t>(pairs.size());
#pragma omp parallel for schedule(static) num_threads(threads > 0 ? threads : omp_get_max_threads())
  for (std::int64_t k = 0; k < n; ++k) {
    const auto& p = pairs[static_cast<std::size_t>(k)];
    scores[static_cast<std::size_t>(k)] = jaccard_score(g, p.u, p.v);
  }
  return scores;
}

Metrics jaccard_predict(const Graph& core, const LinkDataset& ds, int threads) {
  if (ds.validation.empty()) throw ValidationError("validation split is empty");
  if (ds.test.empty()) throw ValidationError("test split is empty");
  auto val_scores = jaccard_scores(core, ds.validation, threads);
  const Metrics chosen = best_threshold(val_scores, labels_of(ds.validation));
  auto test_scores = jaccard_scores(core, ds.test, threads);
  return metrics_at(test_scores, labels_of(ds.test), chosen.threshold);
}

}  // namespace vcne::eval
