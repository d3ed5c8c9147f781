#ifndef TROPIC_MATRIX_HPP
#define TROPIC_MATRIX_HPP

#include "tropic/rat.hpp"

#include <initializer_list>
#include <vector>

namespace tropic {

/// Dense matrix of exact rationals. Row/column indices are 0-based.
class RatMatrix {
public:
  RatMatrix() = default;
  RatMatrix(int rows, int cols);
  RatMatrix(std::initializer_list<std::initializer_list<Rat>> rows);

  static RatMatrix from_longs(std::initializer_list<std::initializer_list<long long>> rows);

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  Rat& at(int row, int col);
  const Rat& at(int row, int col) const;

  std::vector<Rat> row(int index) const;

  /// Submatrix with the given (0-based, strictly increasing) row and column indices.
  RatMatrix minor_matrix(const std::vector<int>& row_idx, const std::vector<int>& col_idx) const;

  bool operator==(const RatMatrix& other) const = default;

private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<Rat> data_;
};

} // namespace tropic

#endif
