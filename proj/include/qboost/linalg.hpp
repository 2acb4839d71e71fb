#pragma once

#include <cstddef>
#include <stdexcept>
#include <vector>

namespace qboost {

// Row-major dense matrix of doubles. Just enough linear algebra for the
// error/accuracy matrices and the reweighting iteration.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, double fill = 0.0)
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  double& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  double operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  const std::vector<double>& data() const { return data_; }

  // y = A x
  std::vector<double> apply(const std::vector<double>& x) const {
    if (x.size() != cols_) throw std::invalid_argument("Matrix::apply: size mismatch");
    std::vector<double> y(rows_, 0.0);
    for (std::size_t r = 0; r < rows_; ++r) {
      const double* row = &data_[r * cols_];
      double acc = 0.0;
      for (std::size_t c = 0; c < cols_; ++c) acc += row[c] * x[c];
      y[r] = acc;
    }
    return y;
  }

  // C = A B
  Matrix multiply(const Matrix& other) const {
    if (cols_ != other.rows_) throw std::invalid_argument("Matrix::multiply: size mismatch");
    Matrix out(rows_, other.cols_);
    for (std::size_t r = 0; r < rows_; ++r) {
      for (std::size_t k = 0; k < cols_; ++k) {
        const double a = data_[r * cols_ + k];
        if (a == 0.0) continue;
        const double* brow = &other.data_[k * other.cols_];
        double* orow = &out.data_[r * other.cols_];
        for (std::size_t c = 0; c < other.cols_; ++c) orow[c] += a * brow[c];
      }
    }
    return out;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<double> data_;
};

double l1_norm(const std::vector<double>& v);

// v / ||v||_1; throws std::domain_error on a zero vector.
std::vector<double> l1_normalized(const std::vector<double>& v);

// Half the L1 distance between two probability vectors.
double total_variation(const std::vector<double>& p, const std::vector<double>& q);

}  // namespace qboost
