#pragma once
#include <cstddef>
#include <span>
#include <string>

namespace vcne::eval {

struct Confusion {
  std::size_t tp = 0, fp = 0, tn = 0, fn = 0;

  Confusion& operator+=(const Confusion& o) noexcept {
    tp += o.tp;
    fp += o.fp;
    tn += o.tn;
    fn += o.fn;
    return *this;
  }
};

struct Metrics {
  double precision = 0.0;
  double recall = 0.0;
  double f1 = 0.0;
  double threshold = 0.5;
};

/// score >= threshold predicts the positive class.
Confusion confusion(std::span<const double> scores, std::span<const int> labels, double threshold);
Metrics metrics_from(const Confusion& c, double threshold);
Metrics metrics_at(std::span<const double> scores, std::span<const int> labels, double threshold);

/// Threshold maximising F1, scanned over every distinct score (lowest wins ties).
Metrics best_threshold(std::span<const double> scores, std::span<const int> labels);

/// `precision recall f1 threshold`, tab-separated.
std::string format_metrics(const Metrics& m);

}  // namespace vcne::eval
