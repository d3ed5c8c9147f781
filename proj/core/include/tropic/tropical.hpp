#ifndef TROPIC_TROPICAL_HPP
#define TROPIC_TROPICAL_HPP

#include "tropic/matrix.hpp"
#include "tropic/rat.hpp"

#include <compare>
#include <vector>

namespace tropic {

/// Largest square size for which permutations are enumerated exhaustively.
inline constexpr int kPermutationCap = 9;

/// A bijection of {1..l}, stored as 1-based images: images[p-1] = sigma(p).
struct Bijection {
  std::vector<int> images;

  int size() const { return static_cast<int>(images.size()); }
  static Bijection identity(int size);

  auto operator<=>(const Bijection&) const = default;
};

/// Max-plus determinant: max over bijections sigma of sum_p M[p, sigma(p)].
/// Throws NonSquareError / TooLargeError.
Rat tropical_det(const RatMatrix& m, int cap = kPermutationCap);

/// All bijections attaining tropical_det(m), in lexicographic image order.
std::vector<Bijection> optimal_bijections(const RatMatrix& m, int cap = kPermutationCap);

/// Row i of the result is the set of 1-based outcomes j attaining
/// min_j (z_j - T[i,j]) -- the sector of the min-plus hyperplane with apex
/// row i of T that contains z. Each set is nonempty and sorted.
std::vector<std::vector<int>> covector_at(const std::vector<Rat>& z, const RatMatrix& t);

} // namespace tropic

#endif
