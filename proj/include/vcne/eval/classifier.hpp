#pragma once
#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

namespace vcne::eval {

/// Row-major dense matrix of features.
struct Matrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<double> data;

  Matrix() = default;
  Matrix(std::size_t r, std::size_t c) : rows(r), cols(c), data(r * c, 0.0) {}

  std::span<double> row(std::size_t i) noexcept { return {data.data() + i * cols, cols}; }
  std::span<const double> row(std::size_t i) const noexcept { return {data.data() + i * cols, cols}; }
};

enum class ClassifierKind { logreg, mlp };

std::string_view to_string(ClassifierKind k);
ClassifierKind parse_classifier_kind(std::string_view name);

struct ClassifierSpec {
  ClassifierKind kind = ClassifierKind::logreg;
  std::size_t hidden_units = 500;
  std::size_t epochs = 0;       // 0: 2000 (logreg) / 200 (mlp)
  double learning_rate = 0.0;   // 0: 1/L for logreg GD (L: curvature bound) / 0.005 for mlp Adam
  double l2 = 1e-4;
  std::size_t batch_size = 64;  // mlp only
  double tolerance = 1e-8;      // logreg stops when the loss changes by less
  std::uint64_t seed = 1;
};

/// Mean cross-entropy (+ l2/2 |w|^2) and its gradient for logistic regression.
struct LogisticGradient {
  std::vector<double> weights;
  double bias = 0.0;
  double loss = 0.0;
};
LogisticGradient logistic_gradient(const Matrix& x, std::span<const int> y, std::span<const double> w, double b,
                                   double l2 = 0.0);

/**
 * Binary probabilistic classifier over standardised features: either logistic
 * regression or one hidden ReLU layer with a sigmoid output.
 */
class BinaryClassifier {
 public:
  ClassifierKind kind() const noexcept { return kind_; }
  std::size_t input_dim() const noexcept { return mean_.size(); }
  std::size_t epochs_run() const noexcept { return epochs_run_; }
  std::size_t selected_epoch() const noexcept { return selected_epoch_; }

  double predict(std::span<const double> x) const;
  std::vector<double> predict(const Matrix& x) const;

 private:
  friend BinaryClassifier train_classifier(const Matrix&, std::span<const int>, const ClassifierSpec&,
                                           const Matrix*, std::span<const int>);
  double logit(std::span<const double> standardized) const;

  ClassifierKind kind_ = ClassifierKind::logreg;
  std::vector<double> mean_, inv_scale_;
  std::vector<double> w_;  // logreg weights
  double b_ = 0.0;
  std::size_t hidden_ = 0;
  std::vector<double> w1_, b1_, w2_;  // mlp
  double b2_ = 0.0;
  std::size_t epochs_run_ = 0;
  std::size_t selected_epoch_ = 0;
};

/**
 * Trains on (x, y). With a validation set the MLP keeps the epoch with the best
 * validation F1; logistic regression runs full-batch gradient descent to
 * convergence. Throws ValidationError when y holds a single class.
 */
BinaryClassifier train_classifier(const Matrix& x, std::span<const int> y, const ClassifierSpec& spec,
                                  const Matrix* val_x = nullptr, std::span<const int> val_y = {});

}  // namespace vcne::eval
