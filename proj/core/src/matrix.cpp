#include "tropic/matrix.hpp"

#include "tropic/errors.hpp"

namespace tropic {

RatMatrix::RatMatrix(int rows, int cols) : rows_(rows), cols_(cols) {
  if (rows < 1 || cols < 1) {
    throw DimensionMismatchError("matrix dimensions must be at least 1x1");
  }
  data_.resize(static_cast<size_t>(rows) * cols);
}

RatMatrix::RatMatrix(std::initializer_list<std::initializer_list<Rat>> rows) {
  rows_ = static_cast<int>(rows.size());
  if (rows_ == 0) throw DimensionMismatchError("matrix needs at least one row");
  cols_ = static_cast<int>(rows.begin()->size());
  if (cols_ == 0) throw DimensionMismatchError("matrix needs at least one column");
  data_.reserve(static_cast<size_t>(rows_) * cols_);
  for (const auto& r : rows) {
    if (static_cast<int>(r.size()) != cols_) {
      throw DimensionMismatchError("ragged matrix rows");
    }
    for (const auto& v : r) data_.push_back(v);
  }
}

RatMatrix RatMatrix::from_longs(std::initializer_list<std::initializer_list<long long>> rows) {
  RatMatrix m;
  m.rows_ = static_cast<int>(rows.size());
  if (m.rows_ == 0) throw DimensionMismatchError("matrix needs at least one row");
  m.cols_ = static_cast<int>(rows.begin()->size());
  if (m.cols_ == 0) throw DimensionMismatchError("matrix needs at least one column");
  m.data_.reserve(static_cast<size_t>(m.rows_) * m.cols_);
  for (const auto& r : rows) {
    if (static_cast<int>(r.size()) != m.cols_) {
      throw DimensionMismatchError("ragged matrix rows");
    }
    for (long long v : r) m.data_.emplace_back(v);
  }
  return m;
}

Rat& RatMatrix::at(int row, int col) {
  if (row < 0 || row >= rows_ || col < 0 || col >= cols_) {
    throw IndexOutOfRangeError("matrix index out of range");
  }
  return data_[static_cast<size_t>(row) * cols_ + col];
}

const Rat& RatMatrix::at(int row, int col) const {
  if (row < 0 || row >= rows_ || col < 0 || col >= cols_) {
    throw IndexOutOfRangeError("matrix index out of range");
  }
  return data_[static_cast<size_t>(row) * cols_ + col];
}

std::vector<Rat> RatMatrix::row(int index) const {
  std::vector<Rat> out(cols_);
  for (int j = 0; j < cols_; ++j) out[j] = at(index, j);
  return out;
}

RatMatrix RatMatrix::minor_matrix(const std::vector<int>& row_idx,
                                  const std::vector<int>& col_idx) const {
  RatMatrix m(static_cast<int>(row_idx.size()), static_cast<int>(col_idx.size()));
  for (size_t i = 0; i < row_idx.size(); ++i) {
    for (size_t j = 0; j < col_idx.size(); ++j) {
      m.at(static_cast<int>(i), static_cast<int>(j)) = at(row_idx[i], col_idx[j]);
    }
  }
  return m;
}

} // namespace tropic
