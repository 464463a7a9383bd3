#pragma once

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "smfp/features.hpp"

namespace smfp {

// Labeled training/test data. labels[i] in {0,1}; every vector's dimension
// equals dimension.
struct LabeledSet {
  std::vector<FeatureVector> vectors;
  std::vector<int> labels;
  std::size_t dimension = 0;
};

// Hyperbolic tangent used as the MLP hidden activation.
double tanh_activation(double z);

// Numerically stable softmax (max-subtraction): outputs positive, sum to 1.
// Throws InvalidArgument on an empty input.
std::vector<double> softmax(const std::vector<double>& z);

// Logistic sigmoid used for the MLP output unit.
double sigmoid(double z);

// Linear decision rule: predict 1 iff w'x + w0 >= 0.
struct LinearModel {
  std::vector<double> w;
  double w0 = 0.0;
  double c = 0.1;
};

struct SvmOptions {
  double c = 0.1;     // hinge penalty strength
  int epochs = 10;
  double lr = 0.1;
  std::uint64_t seed = 1;
  bool shuffle = true;  // per-epoch shuffling; disable for descent tests
};

// Trains by seeded stochastic subgradient descent on the primal objective
//   J(w, w0) = 1/2 ||w||^2 + c * sum_i hinge(t_i (w'x_i + w0)),
// labels mapped t = 2y - 1. Deterministic given the seed. Throws
// DegenerateData unless both classes are present.
LinearModel train_linear_svm(const LabeledSet& data, const SvmOptions& options = {});

// The exact primal objective above, for convergence checks.
double svm_objective(const LinearModel& model, const LabeledSet& data);

// Throws DimensionMismatch if x.dimension != |w|.
int predict_linear(const LinearModel& model, const FeatureVector& x);

// One-hidden-layer perceptron: p(x) = sigmoid(W2 . tanh(W1^T x + b1) + b2).
// w1 is row-major hidden x dim.
struct MlpModel {
  std::vector<double> w1;
  std::vector<double> b1;
  std::vector<double> w2;
  double b2 = 0.0;
  std::size_t hidden = 0;
  std::size_t dim = 0;
};

struct MlpOptions {
  std::size_t hidden = 500;
  int epochs = 20;
  double lr = 0.1;
  std::uint64_t seed = 1;
  bool shuffle = true;
};

// Per-sample backpropagation SGD on binary cross-entropy. Weights start from
// a seeded Gaussian with variance 0.01; biases start at zero. Deterministic
// given the seed. Throws DegenerateData unless both classes are present.
MlpModel train_mlp(const LabeledSet& data, const MlpOptions& options = {});

// Sigmoid output for one instance (probability of class 1).
double mlp_probability(const MlpModel& model, const FeatureVector& x);

// Predict 1 iff the sigmoid output >= 0.5. Throws DimensionMismatch.
int predict_mlp(const MlpModel& model, const FeatureVector& x);

// Total (summed) binary cross-entropy of the model over data, computed from
// logits in a numerically stable form.
double mlp_loss(const MlpModel& model, const LabeledSet& data);

// Analytic loss gradients accumulated over data, laid out like the model.
// Exposed so finite-difference checks can compare against them.
struct MlpGradients {
  std::vector<double> w1;
  std::vector<double> b1;
  std::vector<double> w2;
  double b2 = 0.0;
};

MlpGradients mlp_gradients(const MlpModel& model, const LabeledSet& data);

// Every `every`-th index of 0..n_total-1, i.e. {every-1, 2*every-1, ...}.
// Length is floor(n_total / every). Throws InvalidArgument if every == 0.
std::vector<std::size_t> systematic_sample(std::size_t n_total, std::size_t every);

// Balances classes by duplicating seeded-random minority instances (with
// replacement) until counts are equal. Originals are preserved untouched, in
// order, with duplicates appended. Throws DegenerateData on single-class input.
LabeledSet ros_oversample(const LabeledSet& data, std::uint64_t seed);

// Fraction of test instances predicted correctly. Throws InvalidArgument on
// an empty test set.
double evaluate_accuracy(const LinearModel& model, const LabeledSet& test);
double evaluate_accuracy(const MlpModel& model, const LabeledSet& test);

// JSON persistence for either model kind. Parameters round-trip exactly
// (shortest-round-trip double rendering), so reloaded models predict
// identically. config_json is an opaque caller-provided JSON object.
using AnyModel = std::variant<LinearModel, MlpModel>;

struct SavedModel {
  AnyModel model;
  std::uint64_t seed = 0;
  std::string config_json = "{}";
};

void save_model(const SavedModel& saved, const std::string& path);
SavedModel load_model(const std::string& path);

}  // namespace smfp
