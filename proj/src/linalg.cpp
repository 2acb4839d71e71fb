#include "qboost/linalg.hpp"

#include <cmath>
#include <stdexcept>

namespace qboost {

double l1_norm(const std::vector<double>& v) {
  double s = 0.0;
  for (double x : v) s += std::abs(x);
  return s;
}

std::vector<double> l1_normalized(const std::vector<double>& v) {
  const double s = l1_norm(v);
  if (s == 0.0) throw std::domain_error("l1_normalized: zero vector");
  std::vector<double> out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = v[i] / s;
  return out;
}

double total_variation(const std::vector<double>& p, const std::vector<double>& q) {
  if (p.size() != q.size()) throw std::invalid_argument("total_variation: size mismatch");
  double s = 0.0;
  for (std::size_t i = 0; i < p.size(); ++i) s += std::abs(p[i] - q[i]);
  return 0.5 * s;
}

}  // namespace qboost
