#include "tropic/tropical.hpp"

#include "tropic/errors.hpp"

#include <algorithm>
#include <numeric>
#include <optional>

namespace tropic {

Bijection Bijection::identity(int size) {
  Bijection b;
  b.images.resize(size);
  std::iota(b.images.begin(), b.images.end(), 1);
  return b;
}

namespace {

void require_square(const RatMatrix& m, int cap) {
  if (m.rows() != m.cols()) {
    throw NonSquareError("tropical determinant needs a square matrix, got " +
                         std::to_string(m.rows()) + "x" + std::to_string(m.cols()));
  }
  if (m.rows() > cap) {
    throw TooLargeError("matrix size " + std::to_string(m.rows()) +
                        " exceeds the permutation enumeration cap " + std::to_string(cap));
  }
}

Rat diagonal_sum(const RatMatrix& m, const std::vector<int>& images) {
  Rat s = 0;
  for (int p = 0; p < m.rows(); ++p) s += m.at(p, images[p] - 1);
  return s;
}

} // namespace

Rat tropical_det(const RatMatrix& m, int cap) {
  require_square(m, cap);
  std::vector<int> images(m.rows());
  std::iota(images.begin(), images.end(), 1);
  std::optional<Rat> best;
  do {
    Rat s = diagonal_sum(m, images);
    if (!best || s > *best) best = s;
  } while (std::next_permutation(images.begin(), images.end()));
  return *best;
}

std::vector<Bijection> optimal_bijections(const RatMatrix& m, int cap) {
  require_square(m, cap);
  std::vector<int> images(m.rows());
  std::iota(images.begin(), images.end(), 1);
  std::optional<Rat> best;
  std::vector<Bijection> optima;
  // next_permutation enumerates in lexicographic order, so optima stays sorted.
  do {
    Rat s = diagonal_sum(m, images);
    if (!best || s > *best) {
      best = s;
      optima.clear();
      optima.push_back(Bijection{images});
    } else if (s == *best) {
      optima.push_back(Bijection{images});
    }
  } while (std::next_permutation(images.begin(), images.end()));
  return optima;
}

std::vector<std::vector<int>> covector_at(const std::vector<Rat>& z, const RatMatrix& t) {
  if (static_cast<int>(z.size()) != t.cols()) {
    throw DimensionMismatchError("point has length " + std::to_string(z.size()) +
                                 " but the type matrix has " + std::to_string(t.cols()) +
                                 " columns");
  }
  std::vector<std::vector<int>> rows(t.rows());
  for (int i = 0; i < t.rows(); ++i) {
    Rat best = z[0] - t.at(i, 0);
    std::vector<int> arg{1};
    for (int j = 1; j < t.cols(); ++j) {
      Rat v = z[j] - t.at(i, j);
      if (v < best) {
        best = v;
        arg.assign(1, j + 1);
      } else if (v == best) {
        arg.push_back(j + 1);
      }
    }
    rows[i] = std::move(arg);
  }
  return rows;
}

} // namespace tropic
