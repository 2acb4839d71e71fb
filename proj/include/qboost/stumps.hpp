#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "qboost/dataset.hpp"
#include "qboost/linalg.hpp"

namespace qboost {

// One-feature threshold classifier. polarity +1 predicts 1 on
// x[feature] >= threshold, polarity -1 predicts 1 on x[feature] < threshold,
// so negate() flips exactly the polarity and negate(negate(s)) == s.
struct Stump {
  std::size_t feature = 0;
  double threshold = 0.0;
  int polarity = +1;
};

inline Stump negate(const Stump& s) { return {s.feature, s.threshold, -s.polarity}; }

int predict(const Stump& s, std::span<const double> x);

// Confidence-weighted correctness in [0,1]: a logistic of the signed margin,
// sigma = 1 / (1 + exp(-polarity * (x[feature] - threshold) / scale)),
// returned as 1 - |sigma - y|. Exactly 0.5 on the threshold; the hard 0/1
// correctness is the scale -> 0+ limit away from the threshold.
double soft_correctness(const Stump& s, std::span<const double> x, int y, double scale);

struct LearnerSet {
  std::vector<Stump> stumps;
  bool negation_closed = false;
  // (max - min) / (k + 1) of the training values per feature; used as the
  // base scale of the soft matrix entries. Empty for hand-built sets, in
  // which case build_matrices' scale argument is taken as absolute.
  std::vector<double> feature_scales;

  std::size_t size() const { return stumps.size(); }
};

// k thresholds per feature at the j/(k+1) quantiles (j = 1..k, linear
// interpolation between order statistics), each with both polarities, so
// W = 2*k*d and the set is closed under negation. Stumps are ordered
// feature-major, threshold next, +1 before -1; indices are stable for the
// lifetime of a run. Constant features still emit their stumps (all
// thresholds equal) to keep W = 2*k*d.
LearnerSet generate_stumps(const Dataset& train, std::size_t thresholds_per_feature);

// The paper-style pair of matrices. M is N x W with the errors,
// Mp is W x N with the accuracies; Mp[t][i] == 1 - M[i][t] exactly in
// both modes.
enum class MatrixMode { hard, soft };

struct ErrorMatrices {
  Matrix M;   // N x W, errors
  Matrix Mp;  // W x N, accuracies
  MatrixMode mode = MatrixMode::hard;
};

// Hard: M[i][t] = |h_t(x_i) - y_i|. Soft: M[i][t] = 1 - soft_correctness
// with effective scale = scale * feature_scales[stump.feature] (or plain
// `scale` when the learner set has no stored scales). A zero effective
// scale degenerates to the hard limit.
ErrorMatrices build_matrices(const LearnerSet& ls, const Dataset& ds, MatrixMode mode,
                             double scale = 1.0);

// Per-learner accuracy a_theta = (#correct)/N from the accuracy matrix.
std::vector<double> accuracies(const Matrix& Mp);

// Hard prediction bits of every learner on one input.
std::vector<int> predictions(const LearnerSet& ls, std::span<const double> x);

// JSON round-trip for the CLI model files.
std::string learner_set_to_json(const LearnerSet& ls);
LearnerSet learner_set_from_json(const std::string& text);

}  // namespace qboost
