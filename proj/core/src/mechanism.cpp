#include "tropic/mechanism.hpp"

#include "tropic/errors.hpp"
#include "tropic/feasibility.hpp"

#include <algorithm>
#include <functional>

namespace tropic {

OutcomeFunction OutcomeFunction::vector(std::vector<int> values, int outcomes) {
  OutcomeFunction g;
  g.shape = {static_cast<int>(values.size())};
  g.outcomes = outcomes;
  g.values = std::move(values);
  g.validate();
  return g;
}

OutcomeFunction OutcomeFunction::matrix(std::vector<std::vector<int>> rows, int outcomes) {
  OutcomeFunction g;
  g.shape = {static_cast<int>(rows.size()), rows.empty() ? 0 : static_cast<int>(rows[0].size())};
  g.outcomes = outcomes;
  for (const auto& r : rows) {
    if (static_cast<int>(r.size()) != g.shape[1]) {
      throw ShapeMismatchError("ragged outcome matrix");
    }
    g.values.insert(g.values.end(), r.begin(), r.end());
  }
  g.validate();
  return g;
}

long long OutcomeFunction::size() const {
  long long n = 1;
  for (int s : shape) n *= s;
  return n;
}

int OutcomeFunction::at(std::span<const int> index) const {
  if (static_cast<int>(index.size()) != players()) {
    throw ShapeMismatchError("multi-index arity mismatch");
  }
  long long flat = 0;
  for (int a = 0; a < players(); ++a) {
    if (index[a] < 0 || index[a] >= shape[a]) {
      throw IndexOutOfRangeError("outcome index out of range on axis " + std::to_string(a));
    }
    flat = flat * shape[a] + index[a];
  }
  return values[flat];
}

std::vector<int> OutcomeFunction::fiber(int axis, std::span<const int> fixed) const {
  if (axis < 0 || axis >= players()) throw IndexOutOfRangeError("fiber axis out of range");
  std::vector<int> index(fixed.begin(), fixed.end());
  std::vector<int> out(shape[axis]);
  for (int i = 0; i < shape[axis]; ++i) {
    index[axis] = i;
    out[i] = at(index);
  }
  return out;
}

void OutcomeFunction::validate() const {
  if (shape.empty()) throw ShapeMismatchError("outcome function needs at least one player");
  long long n = 1;
  for (int s : shape) {
    if (s < 1) throw ShapeMismatchError("outcome shape entries must be positive");
    n *= s;
  }
  if (n != static_cast<long long>(values.size())) {
    throw ShapeMismatchError("outcome value count does not match shape");
  }
  if (outcomes < 1) throw ShapeMismatchError("outcome count must be positive");
  for (int v : values) {
    if (v < 1 || v > outcomes) {
      throw ShapeMismatchError("outcome value " + std::to_string(v) + " outside 1.." +
                               std::to_string(outcomes));
    }
  }
}

TypeSpace minkowski_combine(std::span<const TypeSpace> spaces, std::span<const Rat> alphas,
                            const std::vector<Rat>& gamma) {
  if (spaces.empty()) throw ShapeMismatchError("need at least one type space");
  if (alphas.size() != spaces.size()) {
    throw ShapeMismatchError("one alpha per type space required");
  }
  const int m = spaces[0].outcome_count();
  for (const TypeSpace& s : spaces) {
    if (s.outcome_count() != m) {
      throw DimensionMismatchError("type spaces disagree on the number of outcomes");
    }
  }
  if (static_cast<int>(gamma.size()) != m) {
    throw DimensionMismatchError("gamma has the wrong length");
  }
  for (const Rat& a : alphas) {
    if (a <= 0) throw NonpositiveAlphaError("weights must be positive");
  }

  long long rows = 1;
  for (const TypeSpace& s : spaces) rows *= s.type_count();

  TypeSpace out;
  out.matrix = RatMatrix(static_cast<int>(rows), m);
  std::vector<int> index(spaces.size(), 0);
  for (long long row = 0; row < rows; ++row) {
    for (int k = 0; k < m; ++k) {
      Rat v = gamma[k];
      for (size_t j = 0; j < spaces.size(); ++j) {
        v += alphas[j] * spaces[j].matrix.at(index[j], k);
      }
      out.matrix.at(static_cast<int>(row), k) = std::move(v);
    }
    for (int j = static_cast<int>(spaces.size()) - 1; j >= 0; --j) {
      if (++index[j] < spaces[j].type_count()) break;
      index[j] = 0;
    }
  }
  return out;
}

std::optional<std::vector<Rat>> is_ic_single(const std::vector<int>& g, const TypeSpace& space) {
  return solve_difference(g, space.matrix);
}

namespace {

// Walks row subsets on which g is injective, maintaining the picked diagonal
// sum, and compares against the tropical determinant of each minor. The
// optional memo (keyed by rows,cols) lets ic_set reuse determinants across
// candidate vectors.
using DetMemo = std::map<std::pair<std::vector<int>, std::vector<int>>, Rat>;

bool minor_criterion(const std::vector<int>& g, const RatMatrix& t, DetMemo* memo) {
  const int r = t.rows();
  std::vector<int> rows;   // chosen row indices, increasing
  std::vector<bool> used(t.cols() + 1, false);
  Rat diagonal = 0;

  std::function<bool(int)> walk = [&](int next) -> bool {
    if (rows.size() >= 2) {
      std::vector<int> cols;
      cols.reserve(rows.size());
      for (int i : rows) cols.push_back(g[i] - 1);
      std::sort(cols.begin(), cols.end());
      Rat det;
      if (memo) {
        auto key = std::make_pair(rows, cols);
        auto it = memo->find(key);
        if (it == memo->end()) {
          it = memo->emplace(key, tropical_det(t.minor_matrix(rows, cols))).first;
        }
        det = it->second;
      } else {
        det = tropical_det(t.minor_matrix(rows, cols));
      }
      if (diagonal != det) return false;
    }
    for (int i = next; i < r; ++i) {
      if (used[g[i]]) continue;
      rows.push_back(i);
      used[g[i]] = true;
      diagonal += t.at(i, g[i] - 1);
      bool ok = walk(i + 1);
      diagonal -= t.at(i, g[i] - 1);
      used[g[i]] = false;
      rows.pop_back();
      if (!ok) return false;
    }
    return true;
  };
  return walk(0);
}

} // namespace

bool is_ic_single_minor(const std::vector<int>& g, const TypeSpace& space) {
  if (static_cast<int>(g.size()) != space.type_count()) {
    throw ShapeMismatchError("outcome vector length does not match the type count");
  }
  for (int v : g) {
    if (v < 1 || v > space.outcome_count()) {
      throw ShapeMismatchError("outcome value outside 1..m");
    }
  }
  return minor_criterion(g, space.matrix, nullptr);
}

bool ICSet::contains(const std::vector<int>& g) const {
  return std::binary_search(members.begin(), members.end(), g);
}

ICSet ic_set(const TypeSpace& space, long long cap) {
  const int r = space.type_count();
  const int m = space.outcome_count();
  long long total = 1;
  for (int i = 0; i < r; ++i) {
    total *= m;
    if (total > cap) {
      throw TooLargeError("m^r = " + std::to_string(m) + "^" + std::to_string(r) +
                          " exceeds the enumeration cap " + std::to_string(cap));
    }
  }

  DetMemo memo;
  ICSet out;
  std::vector<int> g(r, 1);
  while (true) {
    if (minor_criterion(g, space.matrix, &memo)) out.members.push_back(g);
    int pos = r - 1;
    while (pos >= 0 && g[pos] == m) {
      g[pos] = 1;
      --pos;
    }
    if (pos < 0) break;
    ++g[pos];
  }
  return out; // enumeration order is already lexicographic
}

namespace {

void enumerate_subsets(int n, int size, const std::function<void(const std::vector<int>&)>& fn) {
  std::vector<int> pick(size);
  std::function<void(int, int)> rec = [&](int start, int depth) {
    if (depth == size) {
      fn(pick);
      return;
    }
    for (int i = start; i <= n - (size - depth); ++i) {
      pick[depth] = i;
      rec(i + 1, depth + 1);
    }
  };
  rec(0, 0);
}

} // namespace

MatchingMultifield multifield(const TypeSpace& space, int minor_cap) {
  const int r = space.type_count();
  const int m = space.outcome_count();
  if (std::min(r, m) > minor_cap) {
    throw TooLargeError("minor size " + std::to_string(std::min(r, m)) +
                        " exceeds the cap " + std::to_string(minor_cap));
  }
  MatchingMultifield out;
  for (int l = 1; l <= std::min(r, m); ++l) {
    enumerate_subsets(r, l, [&](const std::vector<int>& rows) {
      enumerate_subsets(m, l, [&](const std::vector<int>& cols) {
        out.entries.emplace(std::make_pair(rows, cols),
                            optimal_bijections(space.matrix.minor_matrix(rows, cols)));
      });
    });
  }
  return out;
}

ICEqualResult ic_equal(const TypeSpace& a, const TypeSpace& b, int minor_cap) {
  if (a.type_count() != b.type_count() || a.outcome_count() != b.outcome_count()) {
    throw ShapeMismatchError("type spaces must have identical dimensions");
  }
  const int r = a.type_count();
  const int m = a.outcome_count();
  if (std::min(r, m) > minor_cap) {
    throw TooLargeError("minor size exceeds the cap");
  }

  ICEqualResult result;
  result.equal = true;
  for (int l = 1; l <= std::min(r, m) && result.equal; ++l) {
    enumerate_subsets(r, l, [&](const std::vector<int>& rows) {
      if (!result.equal) return;
      enumerate_subsets(m, l, [&](const std::vector<int>& cols) {
        if (!result.equal) return;
        auto first = optimal_bijections(a.matrix.minor_matrix(rows, cols));
        auto second = optimal_bijections(b.matrix.minor_matrix(rows, cols));
        if (first != second) {
          result.equal = false;
          result.witness = MinorWitness{rows, cols, std::move(first), std::move(second)};
        }
      });
    });
  }
  return result;
}

bool is_ic_multi(const OutcomeFunction& g, std::span<const TypeSpace> spaces) {
  if (g.players() != static_cast<int>(spaces.size())) {
    throw ShapeMismatchError("outcome function arity does not match the number of spaces");
  }
  for (int a = 0; a < g.players(); ++a) {
    if (g.shape[a] != spaces[a].type_count()) {
      throw ShapeMismatchError("axis " + std::to_string(a) +
                               " does not match the type count of its space");
    }
    if (g.outcomes != spaces[a].outcome_count()) {
      throw ShapeMismatchError("outcome counts disagree");
    }
  }

  std::vector<int> index(g.players(), 0);
  for (int axis = 0; axis < g.players(); ++axis) {
    std::fill(index.begin(), index.end(), 0);
    while (true) {
      if (index[axis] == 0) {
        if (!is_ic_single_minor(g.fiber(axis, index), spaces[axis])) return false;
      }
      int pos = g.players() - 1;
      while (pos >= 0 && (pos == axis || ++index[pos] >= g.shape[pos])) {
        if (pos != axis) index[pos] = 0;
        --pos;
      }
      if (pos < 0) break;
    }
  }
  return true;
}

} // namespace tropic
