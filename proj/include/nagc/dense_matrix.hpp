#pragma once

#include <cmath>
#include <cstddef>
#include <limits>
#include <vector>

namespace nagc {

// Row-major dense matrix of doubles. Factor matrices in this project are
// non-negative; that is enforced by the algorithms, not by this container.
class DenseMatrix {
 public:
  DenseMatrix() = default;
  DenseMatrix(std::size_t rows, std::size_t cols, double fill = 0.0)
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::size_t size() const { return data_.size(); }

  double& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  double operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  double* row(std::size_t i) { return data_.data() + i * cols_; }
  const double* row(std::size_t i) const { return data_.data() + i * cols_; }

  double* data() { return data_.data(); }
  const double* data() const { return data_.data(); }

  double sum() const {
    double s = 0.0;
    for (double v : data_) s += v;
    return s;
  }

  double squared_norm() const {
    double s = 0.0;
    for (double v : data_) s += v * v;
    return s;
  }

  double min_entry() const {
    double m = std::numeric_limits<double>::infinity();
    for (double v : data_) m = v < m ? v : m;
    return m;
  }

  double max_entry() const {
    double m = -std::numeric_limits<double>::infinity();
    for (double v : data_) m = v > m ? v : m;
    return m;
  }

  bool all_finite() const {
    for (double v : data_)
      if (!std::isfinite(v)) return false;
    return true;
  }

  bool is_nonnegative() const {
    for (double v : data_)
      if (!(v >= 0.0)) return false;
    return true;
  }

  friend bool operator==(const DenseMatrix& a, const DenseMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<double> data_;
};

}  // namespace nagc
