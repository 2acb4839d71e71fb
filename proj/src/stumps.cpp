#include "qboost/stumps.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "json.hpp"

namespace qboost {

int predict(const Stump& s, std::span<const double> x) {
  if (x.size() <= s.feature)
    throw std::invalid_argument("predict: input has " + std::to_string(x.size()) +
                                " features, stump needs index " + std::to_string(s.feature));
  const bool ge = x[s.feature] >= s.threshold;
  return s.polarity > 0 ? (ge ? 1 : 0) : (ge ? 0 : 1);
}

double soft_correctness(const Stump& s, std::span<const double> x, int y, double scale) {
  if (!(scale > 0.0)) throw std::invalid_argument("soft_correctness: scale must be positive");
  const double margin = s.polarity * (x[s.feature] - s.threshold) / scale;
  const double sigma = 1.0 / (1.0 + std::exp(-margin));
  return 1.0 - std::abs(sigma - y);
}

namespace {

// Hard limit of the logistic as scale -> 0+ (used for degenerate constant
// features where the stored per-feature scale is 0).
double hard_limit_correctness(const Stump& s, std::span<const double> x, int y) {
  const double m = s.polarity * (x[s.feature] - s.threshold);
  const double sigma = m > 0.0 ? 1.0 : (m < 0.0 ? 0.0 : 0.5);
  return 1.0 - std::abs(sigma - y);
}

double quantile(const std::vector<double>& sorted, double level) {
  const std::size_t n = sorted.size();
  if (n == 1) return sorted[0];
  const double pos = level * static_cast<double>(n - 1);
  const std::size_t lo = static_cast<std::size_t>(pos);
  const std::size_t hi = std::min(lo + 1, n - 1);
  const double frac = pos - static_cast<double>(lo);
  return sorted[lo] + frac * (sorted[hi] - sorted[lo]);
}

}  // namespace

LearnerSet generate_stumps(const Dataset& train, std::size_t k) {
  if (k < 1) throw std::invalid_argument("generate_stumps: thresholds_per_feature must be >= 1");
  if (train.n == 0) throw std::invalid_argument("generate_stumps: empty dataset");

  LearnerSet ls;
  ls.negation_closed = true;
  ls.stumps.reserve(2 * k * train.dim);
  ls.feature_scales.resize(train.dim);

  std::vector<double> column(train.n);
  for (std::size_t f = 0; f < train.dim; ++f) {
    for (std::size_t i = 0; i < train.n; ++i) column[i] = train.features[i * train.dim + f];
    std::sort(column.begin(), column.end());
    ls.feature_scales[f] = (column.back() - column.front()) / static_cast<double>(k + 1);
    for (std::size_t j = 1; j <= k; ++j) {
      const double tau = quantile(column, static_cast<double>(j) / static_cast<double>(k + 1));
      ls.stumps.push_back({f, tau, +1});
      ls.stumps.push_back({f, tau, -1});
    }
  }
  return ls;
}

ErrorMatrices build_matrices(const LearnerSet& ls, const Dataset& ds, MatrixMode mode,
                             double scale) {
  const std::size_t n = ds.n, w = ls.size();
  ErrorMatrices em;
  em.mode = mode;
  em.M = Matrix(n, w);
  em.Mp = Matrix(w, n);

  for (std::size_t t = 0; t < w; ++t) {
    const Stump& s = ls.stumps[t];
    if (s.feature >= ds.dim)
      throw std::invalid_argument("build_matrices: stump feature " + std::to_string(s.feature) +
                                  " out of range for d=" + std::to_string(ds.dim));
    double eff_scale = scale;
    if (!ls.feature_scales.empty()) eff_scale = scale * ls.feature_scales[s.feature];
    for (std::size_t i = 0; i < n; ++i) {
      const auto x = ds.row(i);
      const int y = ds.labels[i];
      double correct;
      if (mode == MatrixMode::hard) {
        correct = 1.0 - std::abs(predict(s, x) - y);
      } else {
        correct = eff_scale > 0.0 ? soft_correctness(s, x, y, eff_scale)
                                  : hard_limit_correctness(s, x, y);
      }
      em.M(i, t) = 1.0 - correct;
      em.Mp(t, i) = correct;
    }
  }
  return em;
}

std::vector<double> accuracies(const Matrix& Mp) {
  std::vector<double> a(Mp.rows(), 0.0);
  for (std::size_t t = 0; t < Mp.rows(); ++t) {
    double s = 0.0;
    for (std::size_t i = 0; i < Mp.cols(); ++i) s += Mp(t, i);
    a[t] = s / static_cast<double>(Mp.cols());
  }
  return a;
}

std::vector<int> predictions(const LearnerSet& ls, std::span<const double> x) {
  std::vector<int> out(ls.size());
  for (std::size_t t = 0; t < ls.size(); ++t) out[t] = predict(ls.stumps[t], x);
  return out;
}

std::string learner_set_to_json(const LearnerSet& ls) {
  nlohmann::json j;
  j["negation_closed"] = ls.negation_closed;
  j["feature_scales"] = ls.feature_scales;
  auto& arr = j["stumps"] = nlohmann::json::array();
  for (const Stump& s : ls.stumps)
    arr.push_back({{"feature", s.feature}, {"threshold", s.threshold}, {"polarity", s.polarity}});
  return j.dump(2);
}

LearnerSet learner_set_from_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw std::runtime_error(std::string("learner set: invalid JSON: ") + e.what());
  }
  if (!j.contains("stumps") || !j["stumps"].is_array())
    throw std::runtime_error("learner set: missing 'stumps' array");
  LearnerSet ls;
  ls.negation_closed = j.value("negation_closed", false);
  ls.feature_scales = j.value("feature_scales", std::vector<double>{});
  for (const auto& e : j["stumps"]) {
    Stump s;
    s.feature = e.at("feature").get<std::size_t>();
    s.threshold = e.at("threshold").get<double>();
    s.polarity = e.at("polarity").get<int>();
    if (s.polarity != 1 && s.polarity != -1)
      throw std::runtime_error("learner set: polarity must be +1 or -1");
    ls.stumps.push_back(s);
  }
  if (ls.stumps.empty()) throw std::runtime_error("learner set: empty 'stumps' array");
  return ls;
}

}  // namespace qboost
