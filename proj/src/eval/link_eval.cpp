#include "vcne/eval/link_eval.hpp"

#include <string>

#include "vcne/error.hpp"

namespace vcne::eval {

std::string_view to_string(PairFeature f) {
  switch (f) {
    case PairFeature::hadamard: return "hadamard";
    case PairFeature::concat: return "concat";
    case PairFeature::dot: return "dot";
  }
  return "?";
}

PairFeature parse_pair_feature(std::string_view name) {
  if (name == "hadamard") return PairFeature::hadamard;
  if (name == "concat") return PairFeature::concat;
  if (name == "dot") return PairFeature::dot;
  throw ValidationError("unknown pair feature '" + std::string(name) + "'");
}

std::size_t feature_dim(PairFeature f, std::size_t dim) noexcept {
  switch (f) {
    case PairFeature::hadamard: return dim;
    case PairFeature::concat: return 2 * dim;
    case PairFeature::dot: return 1;
  }
  return 0;
}

void featurize_pair(const EmbeddingTable& e, VertexId a, VertexId b, PairFeature f, std::span<double> out) {
  if (a >= e.rows() || b >= e.rows())
    throw ValidationError("pair (" + std::to_string(a) + ", " + std::to_string(b) + ") has no embedding");
  auto ua = e.row(a);
  auto ub = e.row(b);
  const std::size_t d = e.dim();
  switch (f) {
    case PairFeature::hadamard:
      for (std::size_t k = 0; k < d; ++k) out[k] = ua[k] * ub[k];
      break;
    case PairFeature::concat:
      for (std::size_t k = 0; k < d; ++k) {
        out[k] = ua[k];
        out[d + k] = ub[k];
      }
      break;
    case PairFeature::dot:
      out[0] = dot(ua, ub);
      break;
  }
}

std::vector<double> featurize_pair(const EmbeddingTable& e, VertexId a, VertexId b, PairFeature f) {
  std::vector<double> out(feature_dim(f, e.dim()));
  featurize_pair(e, a, b, f, out);
  return out;
}

Matrix featurize_pairs(const EmbeddingTable& e, std::span<const LabeledPair> pairs, PairFeature f) {
  Matrix x(pairs.size(), feature_dim(f, e.dim()));
  for (std::size_t i = 0; i < pairs.size(); ++i) featurize_pair(e, pairs[i].u, pairs[i].v, f, x.row(i));
  return x;
}

Metrics evaluate(const BinaryClassifier& classifier, const LinkDataset& ds, const EmbeddingTable& e, PairFeature f,
                 bool tune_threshold) {
  if (ds.test.empty()) throw ValidationError("test split is empty");
  double threshold = 0.5;
  if (tune_threshold) {
    if (ds.validation.empty()) throw ValidationError("validation split is empty");
    auto val = classifier.predict(featurize_pairs(e, ds.validation, f));
    threshold = best_threshold(val, labels_of(ds.validation)).threshold;
  }
  auto scores = classifier.predict(featurize_pairs(e, ds.test, f));
  return metrics_at(scores, labels_of(ds.test), threshold);
}

Metrics link_predict(const EmbeddingTable& e, const LinkDataset& ds, PairFeature f, const ClassifierSpec& spec,
                     bool tune_threshold) {
  if (ds.test.empty()) throw ValidationError("test split is empty");
  Matrix x = featurize_pairs(e, ds.train, f);
  auto y = labels_of(ds.train);
  Matrix vx = featurize_pairs(e, ds.validation, f);
  auto vy = labels_of(ds.validation);
  BinaryClassifier c = train_classifier(x, y, spec, &vx, vy);
  return evaluate(c, ds, e, f, tune_threshold);
}

}  // namespace vcne::eval
