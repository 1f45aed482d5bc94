#include "vcne/eval/classifier.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <random>
#include <string>

#include "vcne/error.hpp"
#include "vcne/eval/metrics.hpp"
#include "vcne/hash.hpp"

namespace vcne::eval {

namespace {

double sigmoid(double z) noexcept {
  z = std::clamp(z, -30.0, 30.0);
  return 1.0 / (1.0 + std::exp(-z));
}

double bce(double p, int y) noexcept {
  constexpr double eps = 1e-15;
  p = std::clamp(p, eps, 1.0 - eps);
  return y ? -std::log(p) : -std::log(1.0 - p);
}

Matrix standardize(const Matrix& x, std::span<const double> mean, std::span<const double> inv_scale) {
  Matrix out(x.rows, x.cols);
  for (std::size_t i = 0; i < x.rows; ++i) {
    auto src = x.row(i);
    auto dst = out.row(i);
    for (std::size_t k = 0; k < x.cols; ++k) dst[k] = (src[k] - mean[k]) * inv_scale[k];
  }
  return out;
}

struct Adam {
  double lr, beta1 = 0.9, beta2 = 0.999, eps = 1e-8;
  std::size_t t = 0;
  std::vector<double> m, v;

  Adam(std::size_t n, double rate) : lr(rate), m(n, 0.0), v(n, 0.0) {}

  void step(std::span<double> params, std::span<const double> grad, std::size_t offset) {
    const double c1 = 1.0 - std::pow(beta1, static_cast<double>(t));
    const double c2 = 1.0 - std::pow(beta2, static_cast<double>(t));
    for (std::size_t k = 0; k < params.size(); ++k) {
      double& mk = m[offset + k];
      double& vk = v[offset + k];
      mk = beta1 * mk + (1.0 - beta1) * grad[k];
      vk = beta2 * vk + (1.0 - beta2) * grad[k] * grad[k];
      params[k] -= lr * (mk / c1) / (std::sqrt(vk / c2) + eps);
    }
  }
};

// Largest eigenvalue of [z 1]^T [z 1] / n by power iteration.
double gram_spectral_radius(const Matrix& z) {
  const std::size_t d = z.cols + 1;
  std::vector<double> v(d, 1.0 / std::sqrt(static_cast<double>(d))), next(d);
  double lambda = 0.0;
  for (int it = 0; it < 100; ++it) {
    std::fill(next.begin(), next.end(), 0.0);
    for (std::size_t i = 0; i < z.rows; ++i) {
      auto row = z.row(i);
      double s = v[z.cols];
      for (std::size_t k = 0; k < z.cols; ++k) s += row[k] * v[k];
      for (std::size_t k = 0; k < z.cols; ++k) next[k] += s * row[k];
      next[z.cols] += s;
    }
    double norm = 0.0;
    for (double& x : next) {
      x /= static_cast<double>(z.rows);
      norm += x * x;
    }
    norm = std::sqrt(norm);
    if (norm == 0.0) return 0.0;
    const double prev = lambda;
    lambda = norm;
    for (std::size_t k = 0; k < d; ++k) v[k] = next[k] / norm;
    if (std::abs(lambda - prev) <= 1e-9 * lambda) break;
  }
  return lambda;
}

}  // namespace

std::string_view to_string(ClassifierKind k) { return k == ClassifierKind::logreg ? "logreg" : "mlp"; }

ClassifierKind parse_classifier_kind(std::string_view name) {
  if (name == "logreg") return ClassifierKind::logreg;
  if (name == "mlp") return ClassifierKind::mlp;
  throw ValidationError("unknown classifier '" + std::string(name) + "'");
}

LogisticGradient logistic_gradient(const Matrix& x, std::span<const int> y, std::span<const double> w, double b,
                                   double l2) {
  LogisticGradient g;
  g.weights.assign(x.cols, 0.0);
  const double n = static_cast<double>(x.rows);
  for (std::size_t i = 0; i < x.rows; ++i) {
    auto row = x.row(i);
    double z = b;
    for (std::size_t k = 0; k < x.cols; ++k) z += w[k] * row[k];
    const double p = sigmoid(z);
    const double r = p - static_cast<double>(y[i]);
    for (std::size_t k = 0; k < x.cols; ++k) g.weights[k] += r * row[k];
    g.bias += r;
    g.loss += bce(p, y[i]);
  }
  for (std::size_t k = 0; k < x.cols; ++k) {
    g.weights[k] = g.weights[k] / n + l2 * w[k];
    g.loss += 0.5 * l2 * w[k] * w[k] * n;
  }
  g.bias /= n;
  g.loss /= n;
  return g;
}

double BinaryClassifier::logit(std::span<const double> z) const {
  if (kind_ == ClassifierKind::logreg) {
    double s = b_;
    for (std::size_t k = 0; k < z.size(); ++k) s += w_[k] * z[k];
    return s;
  }
  double out = b2_;
  const std::size_t in = z.size();
  for (std::size_t h = 0; h < hidden_; ++h) {
    double a = b1_[h];
    const double* wr = w1_.data() + h * in;
    for (std::size_t k = 0; k < in; ++k) a += wr[k] * z[k];
    if (a > 0.0) out += w2_[h] * a;
  }
  return out;
}

double BinaryClassifier::predict(std::span<const double> x) const {
  if (x.size() != mean_.size())
    throw ValidationError("classifier expects " + std::to_string(mean_.size()) + " features, got " +
                          std::to_string(x.size()));
  std::vector<double> z(x.size());
  for (std::size_t k = 0; k < x.size(); ++k) z[k] = (x[k] - mean_[k]) * inv_scale_[k];
  return sigmoid(logit(z));
}

std::vector<double> BinaryClassifier::predict(const Matrix& x) const {
  std::vector<double> out(x.rows);
  for (std::size_t i = 0; i < x.rows; ++i) out[i] = predict(x.row(i));
  return out;
}

BinaryClassifier train_classifier(const Matrix& x, std::span<const int> y, const ClassifierSpec& spec,
                                  const Matrix* val_x, std::span<const int> val_y) {
  if (x.rows != y.size()) throw ValidationError("feature rows and labels differ in length");
  if (x.rows == 0) throw ValidationError("empty training set");
  const std::size_t positives = static_cast<std::size_t>(std::count_if(y.begin(), y.end(), [](int l) { return l != 0; }));
  if (positives == 0 || positives == x.rows) throw ValidationError("training set has a single class");
  if (spec.kind == ClassifierKind::mlp && spec.hidden_units < 1) throw ValidationError("mlp needs >= 1 hidden unit");
  if (val_x && (val_x->rows != val_y.size() || (val_x->rows > 0 && val_x->cols != x.cols)))
    throw ValidationError("validation set does not match training features");

  BinaryClassifier c;
  c.kind_ = spec.kind;
  const std::size_t d = x.cols;
  c.mean_.assign(d, 0.0);
  c.inv_scale_.assign(d, 1.0);
  for (std::size_t i = 0; i < x.rows; ++i)
    for (std::size_t k = 0; k < d; ++k) c.mean_[k] += x.row(i)[k];
  for (double& m : c.mean_) m /= static_cast<double>(x.rows);
  for (std::size_t k = 0; k < d; ++k) {
    double var = 0.0;
    for (std::size_t i = 0; i < x.rows; ++i) var += (x.row(i)[k] - c.mean_[k]) * (x.row(i)[k] - c.mean_[k]);
    const double sd = std::sqrt(var / static_cast<double>(x.rows));
    c.inv_scale_[k] = sd > 1e-12 ? 1.0 / sd : 1.0;
  }
  const Matrix z = standardize(x, c.mean_, c.inv_scale_);

  if (spec.kind == ClassifierKind::logreg) {
    const std::size_t epochs = spec.epochs ? spec.epochs : 2000;
    // 1/L with L bounding the curvature of the mean log-loss.
    const double lr =
        spec.learning_rate > 0.0 ? spec.learning_rate : 1.0 / (0.25 * gram_spectral_radius(z) + spec.l2);
    c.w_.assign(d, 0.0);
    double prev = std::numeric_limits<double>::infinity();
    for (std::size_t e = 0; e < epochs; ++e) {
      auto g = logistic_gradient(z, y, c.w_, c.b_, spec.l2);
      c.epochs_run_ = e + 1;
      if (std::abs(prev - g.loss) < spec.tolerance) break;
      prev = g.loss;
      for (std::size_t k = 0; k < d; ++k) c.w_[k] -= lr * g.weights[k];
      c.b_ -= lr * g.bias;
    }
    c.selected_epoch_ = c.epochs_run_;
    return c;
  }

  // One hidden ReLU layer, sigmoid output, mini-batch Adam.
  const std::size_t epochs = spec.epochs ? spec.epochs : 200;
  const double lr = spec.learning_rate > 0.0 ? spec.learning_rate : 0.005;
  const std::size_t hidden = spec.hidden_units;
  c.hidden_ = hidden;
  std::mt19937_64 rng(stream_seed(spec.seed, 0xC1A55ull));
  {
    std::uniform_real_distribution<double> w1(-std::sqrt(6.0 / static_cast<double>(std::max<std::size_t>(d, 1))),
                                               std::sqrt(6.0 / static_cast<double>(std::max<std::size_t>(d, 1))));
    std::uniform_real_distribution<double> w2(-std::sqrt(6.0 / static_cast<double>(hidden + 1)),
                                              std::sqrt(6.0 / static_cast<double>(hidden + 1)));
    c.w1_.resize(hidden * d);
    for (double& v : c.w1_) v = w1(rng);
    c.b1_.assign(hidden, 0.0);
    c.w2_.resize(hidden);
    for (double& v : c.w2_) v = w2(rng);
  }
  const std::size_t n_params = hidden * d + hidden + hidden + 1;
  Adam adam(n_params, lr);
  std::vector<double> g_w1(hidden * d), g_b1(hidden), g_w2(hidden), act(hidden);
  std::vector<std::size_t> order(x.rows);
  std::iota(order.begin(), order.end(), std::size_t{0});
  const std::size_t batch = std::max<std::size_t>(1, spec.batch_size);

  BinaryClassifier best = c;
  double best_f1 = -1.0;
  const bool select = val_x && val_x->rows > 0;
  for (std::size_t e = 0; e < epochs; ++e) {
    std::shuffle(order.begin(), order.end(), rng);
    for (std::size_t start = 0; start < order.size(); start += batch) {
      const std::size_t stop = std::min(order.size(), start + batch);
      std::fill(g_w1.begin(), g_w1.end(), 0.0);
      std::fill(g_b1.begin(), g_b1.end(), 0.0);
      std::fill(g_w2.begin(), g_w2.end(), 0.0);
      double g_b2 = 0.0;
      for (std::size_t s = start; s < stop; ++s) {
        auto row = z.row(order[s]);
        double out = c.b2_;
        for (std::size_t h = 0; h < hidden; ++h) {
          double a = c.b1_[h];
          const double* wr = c.w1_.data() + h * d;
          for (std::size_t k = 0; k < d; ++k) a += wr[k] * row[k];
          act[h] = a > 0.0 ? a : 0.0;
          out += c.w2_[h] * act[h];
        }
        const double r = sigmoid(out) - static_cast<double>(y[order[s]]);
        g_b2 += r;
        for (std::size_t h = 0; h < hidden; ++h) {
          g_w2[h] += r * act[h];
          if (act[h] <= 0.0) continue;
          const double dh = r * c.w2_[h];
          g_b1[h] += dh;
          double* gr = g_w1.data() + h * d;
          for (std::size_t k = 0; k < d; ++k) gr[k] += dh * row[k];
        }
      }
      const double inv = 1.0 / static_cast<double>(stop - start);
      for (std::size_t k = 0; k < g_w1.size(); ++k) g_w1[k] = g_w1[k] * inv + spec.l2 * c.w1_[k];
      for (std::size_t h = 0; h < hidden; ++h) {
        g_b1[h] *= inv;
        g_w2[h] = g_w2[h] * inv + spec.l2 * c.w2_[h];
      }
      g_b2 *= inv;
      ++adam.t;
      adam.step(c.w1_, g_w1, 0);
      adam.step(c.b1_, g_b1, hidden * d);
      adam.step(c.w2_, g_w2, hidden * d + hidden);
      adam.step(std::span<double>(&c.b2_, 1), std::span<const double>(&g_b2, 1), hidden * d + 2 * hidden);
    }
    c.epochs_run_ = e + 1;
    if (select) {
      const double f1 = metrics_at(c.predict(*val_x), val_y, 0.5).f1;
      if (f1 > best_f1) {
        best_f1 = f1;
        best = c;
        best.selected_epoch_ = e + 1;
      }
    }
  }
  if (!select) {
    c.selected_epoch_ = c.epochs_run_;
    return c;
  }
  best.epochs_run_ = c.epochs_run_;
  return best;
}

}  // namespace vcne::eval
