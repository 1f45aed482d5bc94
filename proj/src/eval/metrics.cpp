#include "vcne/eval/metrics.hpp"

#include <algorithm>
#include <cstdio>
#include <numeric>
#include <vector>

#include "vcne/error.hpp"

namespace vcne::eval {

Confusion confusion(std::span<const double> scores, std::span<const int> labels, double threshold) {
  if (scores.size() != labels.size()) throw ValidationError("score and label counts differ");
  Confusion c;
  for (std::size_t k = 0; k < scores.size(); ++k) {
    const bool predicted = scores[k] >= threshold;
    const bool actual = labels[k] != 0;
    if (predicted && actual) ++c.tp;
    else if (predicted) ++c.fp;
    else if (actual) ++c.fn;
    else ++c.tn;
  }
  return c;
}

Metrics metrics_from(const Confusion& c, double threshold) {
  Metrics m;
  m.threshold = threshold;
  m.precision = c.tp + c.fp > 0 ? static_cast<double>(c.tp) / static_cast<double>(c.tp + c.fp) : 0.0;
  m.recall = c.tp + c.fn > 0 ? static_cast<double>(c.tp) / static_cast<double>(c.tp + c.fn) : 0.0;
  m.f1 = m.precision + m.recall > 0.0 ? 2.0 * m.precision * m.recall / (m.precision + m.recall) : 0.0;
  return m;
}

Metrics metrics_at(std::span<const double> scores, std::span<const int> labels, double threshold) {
  return metrics_from(confusion(scores, labels, threshold), threshold);
}

Metrics best_threshold(std::span<const double> scores, std::span<const int> labels) {
  if (scores.size() != labels.size()) throw ValidationError("score and label counts differ");
  if (scores.empty()) throw ValidationError("cannot select a threshold on an empty split");
  std::vector<std::size_t> order(scores.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return scores[a] > scores[b]; });
  std::size_t positives = 0;
  for (int l : labels) positives += l != 0;

  // Sweep thresholds from high to low; at each distinct score every item with
  // score >= threshold is predicted positive.
  Metrics best;
  bool have = false;
  Confusion c;
  c.fn = positives;
  c.tn = scores.size() - positives;
  for (std::size_t k = 0; k < order.size();) {
    const double t = scores[order[k]];
    while (k < order.size() && scores[order[k]] == t) {
      if (labels[order[k]] != 0) {
        ++c.tp;
        --c.fn;
      } else {
        ++c.fp;
        --c.tn;
      }
      ++k;
    }
    Metrics m = metrics_from(c, t);
    if (!have || m.f1 >= best.f1) {
      best = m;
      have = true;
    }
  }
  return best;
}

std::string format_metrics(const Metrics& m) {
  char buf[128];
  std::snprintf(buf, sizeof buf, "%.6f\t%.6f\t%.6f\t%.6g", m.precision, m.recall, m.f1, m.threshold);
  return buf;
}

}  // namespace vcne::eval
