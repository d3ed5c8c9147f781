#include "tropic/tropical.hpp"

#include "tropic/errors.hpp"
#include "tropic/report.hpp" // Rng

#include <doctest.h>

#include <algorithm>
#include <numeric>

using namespace tropic;

namespace {

// independent oracle: recursive enumeration of diagonal sums, no
// next_permutation, tracking the best value and the argmax set
void enumerate_diagonals(const RatMatrix& m, std::vector<int>& images, std::vector<bool>& used,
                         Rat acc, std::optional<Rat>& best,
                         std::vector<std::vector<int>>& argmax) {
  int p = static_cast<int>(images.size());
  if (p == m.rows()) {
    if (!best || acc > *best) {
      best = acc;
      argmax.assign(1, images);
    } else if (acc == *best) {
      argmax.push_back(images);
    }
    return;
  }
  for (int q = 0; q < m.cols(); ++q) {
    if (used[q]) continue;
    used[q] = true;
    images.push_back(q + 1);
    enumerate_diagonals(m, images, used, acc + m.at(p, q), best, argmax);
    images.pop_back();
    used[q] = false;
  }
}

std::pair<Rat, std::vector<std::vector<int>>> oracle(const RatMatrix& m) {
  std::vector<int> images;
  std::vector<bool> used(m.cols(), false);
  std::optional<Rat> best;
  std::vector<std::vector<int>> argmax;
  enumerate_diagonals(m, images, used, Rat(0), best, argmax);
  std::sort(argmax.begin(), argmax.end());
  return {*best, argmax};
}

RatMatrix random_square(Rng& rng, int l, int lo, int hi) {
  RatMatrix m(l, l);
  for (int i = 0; i < l; ++i) {
    for (int j = 0; j < l; ++j) m.at(i, j) = rng.range(lo, hi);
  }
  return m;
}

} // namespace

TEST_CASE("tropical determinant on pinned instances") {
  CHECK(tropical_det(RatMatrix::from_longs({{46, 11}, {47, 24}})) == 70);
  CHECK(tropical_det(RatMatrix::from_longs({{0, 0}, {0, 0}})) == 0);
  // oracle value: identity diagonal 0+4+7 beats the other five
  RatMatrix t1 = RatMatrix::from_longs({{0, 2, 3}, {0, 4, 2}, {0, 3, 7}});
  CHECK(oracle(t1).first == 11);
  CHECK(tropical_det(t1) == 11);
}

TEST_CASE("optimal bijection sets on pinned instances") {
  auto only_identity = optimal_bijections(RatMatrix::from_longs({{46, 11}, {47, 24}}));
  REQUIRE(only_identity.size() == 1);
  CHECK(only_identity[0].images == std::vector<int>{1, 2});

  auto tie = optimal_bijections(RatMatrix::from_longs({{0, 0}, {0, 0}}));
  REQUIRE(tie.size() == 2);
  CHECK(tie[0].images == std::vector<int>{1, 2});
  CHECK(tie[1].images == std::vector<int>{2, 1});

  auto swapped = optimal_bijections(RatMatrix::from_longs({{3, 4}, {0, 0}}));
  REQUIRE(swapped.size() == 1);
  CHECK(swapped[0].images == std::vector<int>{2, 1});
}

TEST_CASE("errors: non-square and cap") {
  CHECK_THROWS_AS(tropical_det(RatMatrix::from_longs({{1, 2, 3}, {4, 5, 6}})), NonSquareError);
  Rng rng(1);
  CHECK_THROWS_AS(tropical_det(random_square(rng, 4, 0, 1), 3), TooLargeError);
}

TEST_CASE("optimal set matches exhaustive enumeration up to size 5") {
  Rng rng(42);
  for (int trial = 0; trial < 40; ++trial) {
    int l = rng.range(1, 5);
    RatMatrix m = random_square(rng, l, -3, 3);
    auto [best, argmax] = oracle(m);
    CHECK(tropical_det(m) == best);
    auto optima = optimal_bijections(m);
    REQUIRE(!optima.empty());
    std::vector<std::vector<int>> got;
    for (const auto& b : optima) got.push_back(b.images);
    CHECK(got == argmax);
  }
}

TEST_CASE("adding c to every entry shifts the determinant by l*c and keeps optima") {
  Rng rng(7);
  for (int trial = 0; trial < 25; ++trial) {
    int l = rng.range(1, 4);
    RatMatrix m = random_square(rng, l, -4, 4);
    Rat c(rng.range(-5, 5), rng.range(1, 3));
    RatMatrix shifted = m;
    for (int i = 0; i < l; ++i) {
      for (int j = 0; j < l; ++j) shifted.at(i, j) += c;
    }
    CHECK(tropical_det(shifted) == tropical_det(m) + Rat(l) * c);
    CHECK(optimal_bijections(shifted) == optimal_bijections(m));
  }
}

TEST_CASE("covectors at pinned points") {
  RatMatrix single({{Rat(0), Rat(2), Rat(3)}});
  CHECK(covector_at({Rat(0), Rat(2), Rat(3)}, single) ==
        std::vector<std::vector<int>>{{1, 2, 3}});
  CHECK(covector_at({Rat(0), Rat(0), Rat(0)}, single) == std::vector<std::vector<int>>{{3}});

  RatMatrix t1 = RatMatrix::from_longs({{0, 2, 3}, {0, 4, 2}, {0, 3, 7}});
  CHECK(covector_at({Rat(0), Rat(0), Rat(0)}, t1) ==
        std::vector<std::vector<int>>{{3}, {2}, {3}});
}

TEST_CASE("covector dimension mismatch") {
  RatMatrix single({{Rat(0), Rat(2), Rat(3)}});
  CHECK_THROWS_AS(covector_at({Rat(0), Rat(0)}, single), DimensionMismatchError);
}

TEST_CASE("covector invariances") {
  Rng rng(11);
  for (int trial = 0; trial < 30; ++trial) {
    int r = rng.range(1, 4), m = rng.range(1, 4);
    RatMatrix t(r, m);
    std::vector<Rat> z(m);
    for (int i = 0; i < r; ++i) {
      for (int j = 0; j < m; ++j) t.at(i, j) = rng.range(-3, 3);
    }
    for (int j = 0; j < m; ++j) z[j] = Rat(rng.range(-3, 3), rng.range(1, 2));
    auto base = covector_at(z, t);

    // z -> z + c * ones
    Rat c(rng.range(-4, 4), rng.range(1, 3));
    std::vector<Rat> shifted = z;
    for (Rat& v : shifted) v += c;
    CHECK(covector_at(shifted, t) == base);

    // adding c_j to column j of both z and t
    int col = rng.below(m);
    RatMatrix t2 = t;
    std::vector<Rat> z2 = z;
    z2[col] += c;
    for (int i = 0; i < r; ++i) t2.at(i, col) += c;
    CHECK(covector_at(z2, t2) == base);
  }
}
