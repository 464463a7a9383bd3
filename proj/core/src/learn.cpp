#include "smfp/learn.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>

#include "json.hpp"
#include "smfp/errors.hpp"
#include "smfp/rng.hpp"
#include "smfp/version.hpp"

namespace smfp {

using nlohmann::json;

double tanh_activation(double z) { return std::tanh(z); }

std::vector<double> softmax(const std::vector<double>& z) {
  if (z.empty()) {
    throw InvalidArgument("softmax input must be non-empty");
  }
  const double zmax = *std::max_element(z.begin(), z.end());
  std::vector<double> out(z.size());
  double sum = 0.0;
  for (std::size_t i = 0; i < z.size(); ++i) {
    out[i] = std::exp(z[i] - zmax);
    sum += out[i];
  }
  for (double& v : out) v /= sum;
  return out;
}

double sigmoid(double z) {
  if (z >= 0.0) {
    return 1.0 / (1.0 + std::exp(-z));
  }
  const double e = std::exp(z);
  return e / (1.0 + e);
}

namespace {

void require_both_classes(const LabeledSet& data) {
  if (data.vectors.empty()) {
    throw DegenerateData("training data is empty");
  }
  if (data.vectors.size() != data.labels.size()) {
    throw DegenerateData("vector/label count mismatch");
  }
  bool has0 = false;
  bool has1 = false;
  for (int y : data.labels) {
    if (y == 0) has0 = true;
    if (y == 1) has1 = true;
  }
  if (!has0 || !has1) {
    throw DegenerateData("training data must contain both classes");
  }
}

double sparse_dot(const std::vector<double>& w, const FeatureVector& x) {
  double s = 0.0;
  for (std::size_t i : x.indices) {
    s += w[i];
  }
  return s;
}

// ln(1 + e^z) without overflow; the BCE-from-logit building block.
double softplus(double z) {
  if (z > 35.0) return z;
  if (z < -35.0) return std::exp(z);
  return std::log1p(std::exp(z));
}

}  // namespace

LinearModel train_linear_svm(const LabeledSet& data, const SvmOptions& options) {
  require_both_classes(data);
  const std::size_t n = data.vectors.size();

  LinearModel model;
  model.w.assign(data.dimension, 0.0);
  model.w0 = 0.0;
  model.c = options.c;

  Rng rng(options.seed);
  std::vector<std::size_t> order(n);
  for (std::size_t i = 0; i < n; ++i) order[i] = i;

  for (int epoch = 0; epoch < options.epochs; ++epoch) {
    if (options.shuffle) {
      shuffle_vec(order, rng);
    }
    for (const std::size_t i : order) {
      const FeatureVector& x = data.vectors[i];
      const double t = data.labels[i] == 1 ? 1.0 : -1.0;
      // Regularizer spread across the n per-sample steps of one pass.
      const double decay = 1.0 - options.lr / static_cast<double>(n);
      for (double& wj : model.w) wj *= decay;
      const double margin = t * (sparse_dot(model.w, x) + model.w0);
      if (margin < 1.0) {
        const double step = options.lr * options.c * t;
        for (std::size_t idx : x.indices) {
          model.w[idx] += step;  // binary features: x_idx == 1
        }
        model.w0 += step;  // bias is unregularized
      }
    }
  }
  return model;
}

double svm_objective(const LinearModel& model, const LabeledSet& data) {
  double reg = 0.0;
  for (double wj : model.w) reg += wj * wj;
  reg *= 0.5;
  double hinge = 0.0;
  for (std::size_t i = 0; i < data.vectors.size(); ++i) {
    const double t = data.labels[i] == 1 ? 1.0 : -1.0;
    const double margin = t * (sparse_dot(model.w, data.vectors[i]) + model.w0);
    hinge += std::max(0.0, 1.0 - margin);
  }
  return reg + model.c * hinge;
}

int predict_linear(const LinearModel& model, const FeatureVector& x) {
  if (x.dimension != model.w.size()) {
    throw DimensionMismatch("feature dimension " + std::to_string(x.dimension) +
                            " does not match model dimension " +
                            std::to_string(model.w.size()));
  }
  return sparse_dot(model.w, x) + model.w0 >= 0.0 ? 1 : 0;
}

namespace {

// Hidden activations for one instance.
std::vector<double> mlp_hidden(const MlpModel& m, const FeatureVector& x) {
  std::vector<double> h(m.hidden);
  for (std::size_t j = 0; j < m.hidden; ++j) {
    double z = m.b1[j];
    const double* row = m.w1.data() + j * m.dim;
    for (std::size_t i : x.indices) {
      z += row[i];
    }
    h[j] = tanh_activation(z);
  }
  return h;
}

double mlp_logit(const MlpModel& m, const std::vector<double>& h) {
  double z = m.b2;
  for (std::size_t j = 0; j < m.hidden; ++j) {
    z += m.w2[j] * h[j];
  }
  return z;
}

}  // namespace

MlpModel train_mlp(const LabeledSet& data, const MlpOptions& options) {
  require_both_classes(data);
  if (options.hidden == 0) {
    throw InvalidArgument("hidden unit count must be >= 1");
  }
  const std::size_t n = data.vectors.size();

  MlpModel m;
  m.hidden = options.hidden;
  m.dim = data.dimension;
  m.w1.resize(m.hidden * m.dim);
  m.b1.assign(m.hidden, 0.0);
  m.w2.resize(m.hidden);
  m.b2 = 0.0;

  // Gaussian N(0, 0.01) init (stddev 0.1), drawn in a fixed order: W1
  // row-major, then W2. Biases start at zero.
  Rng rng(options.seed);
  for (double& v : m.w1) v = rand_gaussian(rng, 0.0, 0.1);
  for (double& v : m.w2) v = rand_gaussian(rng, 0.0, 0.1);

  std::vector<std::size_t> order(n);
  for (std::size_t i = 0; i < n; ++i) order[i] = i;

  for (int epoch = 0; epoch < options.epochs; ++epoch) {
    if (options.shuffle) {
      shuffle_vec(order, rng);
    }
    for (const std::size_t i : order) {
      const FeatureVector& x = data.vectors[i];
      const double y = data.labels[i];

      const std::vector<double> h = mlp_hidden(m, x);
      const double p = sigmoid(mlp_logit(m, h));
      const double delta = p - y;  // dL/dlogit for BCE

      // Output layer first, using pre-update weights for the hidden deltas.
      std::vector<double> dh(m.hidden);
      for (std::size_t j = 0; j < m.hidden; ++j) {
        dh[j] = delta * m.w2[j];
      }
      for (std::size_t j = 0; j < m.hidden; ++j) {
        m.w2[j] -= options.lr * delta * h[j];
      }
      m.b2 -= options.lr * delta;

      for (std::size_t j = 0; j < m.hidden; ++j) {
        const double dz = dh[j] * (1.0 - h[j] * h[j]);
        double* row = m.w1.data() + j * m.dim;
        for (std::size_t idx : x.indices) {
          row[idx] -= options.lr * dz;  // x_idx == 1
        }
        m.b1[j] -= options.lr * dz;
      }
    }
  }
  return m;
}

double mlp_probability(const MlpModel& model, const FeatureVector& x) {
  if (x.dimension != model.dim) {
    throw DimensionMismatch("feature dimension " + std::to_string(x.dimension) +
                            " does not match model dimension " + std::to_string(model.dim));
  }
  return sigmoid(mlp_logit(model, mlp_hidden(model, x)));
}

int predict_mlp(const MlpModel& model, const FeatureVector& x) {
  return mlp_probability(model, x) >= 0.5 ? 1 : 0;
}

double mlp_loss(const MlpModel& model, const LabeledSet& data) {
  double total = 0.0;
  for (std::size_t i = 0; i < data.vectors.size(); ++i) {
    const double z = mlp_logit(model, mlp_hidden(model, data.vectors[i]));
    const double y = data.labels[i];
    // BCE from the logit: softplus(z) - y*z is exact and never takes log(0).
    total += softplus(z) - y * z;
  }
  return total;
}

MlpGradients mlp_gradients(const MlpModel& model, const LabeledSet& data) {
  MlpGradients g;
  g.w1.assign(model.w1.size(), 0.0);
  g.b1.assign(model.b1.size(), 0.0);
  g.w2.assign(model.w2.size(), 0.0);
  g.b2 = 0.0;

  for (std::size_t i = 0; i < data.vectors.size(); ++i) {
    const FeatureVector& x = data.vectors[i];
    const std::vector<double> h = mlp_hidden(model, x);
    const double p = sigmoid(mlp_logit(model, h));
    const double delta = p - static_cast<double>(data.labels[i]);

    for (std::size_t j = 0; j < model.hidden; ++j) {
      g.w2[j] += delta * h[j];
      const double dz = delta * model.w2[j] * (1.0 - h[j] * h[j]);
      g.b1[j] += dz;
      double* row = g.w1.data() + j * model.dim;
      for (std::size_t idx : x.indices) {
        row[idx] += dz;
      }
    }
    g.b2 += delta;
  }
  return g;
}

std::vector<std::size_t> systematic_sample(std::size_t n_total, std::size_t every) {
  if (every == 0) {
    throw InvalidArgument("sampling interval must be >= 1");
  }
  std::vector<std::size_t> out;
  out.reserve(n_total / every);
  for (std::size_t i = every - 1; i < n_total; i += every) {
    out.push_back(i);
  }
  return out;
}

LabeledSet ros_oversample(const LabeledSet& data, std::uint64_t seed) {
  require_both_classes(data);
  std::vector<std::size_t> zeros;
  std::vector<std::size_t> ones;
  for (std::size_t i = 0; i < data.labels.size(); ++i) {
    (data.labels[i] == 1 ? ones : zeros).push_back(i);
  }
  const std::vector<std::size_t>& minority = zeros.size() < ones.size() ? zeros : ones;
  const std::size_t deficit =
      (zeros.size() < ones.size() ? ones.size() : zeros.size()) - minority.size();

  LabeledSet out = data;
  Rng rng(seed);
  for (std::size_t k = 0; k < deficit; ++k) {
    const std::size_t pick = minority[rand_index(rng, minority.size())];
    out.vectors.push_back(data.vectors[pick]);
    out.labels.push_back(data.labels[pick]);
  }
  return out;
}

namespace {

template <typename Model>
double accuracy_impl(const Model& model, const LabeledSet& test) {
  if (test.vectors.empty()) {
    throw InvalidArgument("test set must be non-empty");
  }
  std::size_t correct = 0;
  for (std::size_t i = 0; i < test.vectors.size(); ++i) {
    int predicted = 0;
    if constexpr (std::is_same_v<Model, LinearModel>) {
      predicted = predict_linear(model, test.vectors[i]);
    } else {
      predicted = predict_mlp(model, test.vectors[i]);
    }
    if (predicted == test.labels[i]) ++correct;
  }
  return static_cast<double>(correct) / static_cast<double>(test.vectors.size());
}

}  // namespace

double evaluate_accuracy(const LinearModel& model, const LabeledSet& test) {
  return accuracy_impl(model, test);
}

double evaluate_accuracy(const MlpModel& model, const LabeledSet& test) {
  return accuracy_impl(model, test);
}

void save_model(const SavedModel& saved, const std::string& path) {
  json doc;
  doc["seed"] = saved.seed;
  try {
    doc["config"] = json::parse(saved.config_json);
  } catch (const json::exception&) {
    doc["config"] = json::object();
  }
  if (std::holds_alternative<LinearModel>(saved.model)) {
    const auto& m = std::get<LinearModel>(saved.model);
    doc["type"] = "svm";
    doc["c"] = m.c;
    doc["w"] = m.w;
    doc["w0"] = m.w0;
  } else {
    const auto& m = std::get<MlpModel>(saved.model);
    doc["type"] = "mlp";
    doc["hidden"] = m.hidden;
    doc["dim"] = m.dim;
    doc["w1"] = m.w1;
    doc["b1"] = m.b1;
    doc["w2"] = m.w2;
    doc["b2"] = m.b2;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw IoError("cannot open file for writing: " + path);
  }
  out << doc.dump(2) << '\n';
  if (!out.good()) {
    throw IoError("write failure on file: " + path);
  }
}

SavedModel load_model(const std::string& path) {
  json doc;
  try {
    doc = json::parse(read_file(path));
  } catch (const json::exception& e) {
    throw ParseError(path + ": invalid JSON: " + e.what(), 1);
  }
  SavedModel saved;
  try {
    saved.seed = doc.value("seed", std::uint64_t{0});
    saved.config_json = doc.contains("config") ? doc["config"].dump() : "{}";
    const std::string type = doc.at("type").get<std::string>();
    if (type == "svm") {
      LinearModel m;
      m.c = doc.at("c").get<double>();
      m.w = doc.at("w").get<std::vector<double>>();
      m.w0 = doc.at("w0").get<double>();
      saved.model = std::move(m);
    } else if (type == "mlp") {
      MlpModel m;
      m.hidden = doc.at("hidden").get<std::size_t>();
      m.dim = doc.at("dim").get<std::size_t>();
      m.w1 = doc.at("w1").get<std::vector<double>>();
      m.b1 = doc.at("b1").get<std::vector<double>>();
      m.w2 = doc.at("w2").get<std::vector<double>>();
      m.b2 = doc.at("b2").get<double>();
      if (m.w1.size() != m.hidden * m.dim || m.b1.size() != m.hidden ||
          m.w2.size() != m.hidden) {
        throw ValidationError(path + ": inconsistent parameter shapes");
      }
      saved.model = std::move(m);
    } else {
      throw ValidationError(path + ": unknown model type \"" + type + "\"");
    }
  } catch (const json::exception& e) {
    throw ValidationError(path + ": bad model document: " + std::string(e.what()));
  }
  return saved;
}

}  // namespace smfp
