#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

namespace qboost {

// ROC curve plus its trapezoidal area. Points run from (0,0) to (1,1),
// one point per distinct score (ties grouped), monotone nondecreasing in
// both coordinates.
struct RocReport {
  std::vector<std::pair<double, double>> points;  // (FPR, TPR)
  double auc = 0.0;
};

// Threshold sweep over the distinct score values, descending.
// Throws std::invalid_argument unless both classes are present.
RocReport roc_points(const std::vector<double>& scores, const std::vector<int>& labels);

// Rank-based Mann-Whitney AUC, ties counting 1/2 per tied positive/negative
// pair. Agrees with the trapezoidal area of roc_points to ~1e-15.
double auc(const std::vector<double>& scores, const std::vector<int>& labels);

void write_roc_csv(const RocReport& roc, const std::string& path);
void write_roc_svg(const RocReport& roc, const std::string& path);

}  // namespace qboost
