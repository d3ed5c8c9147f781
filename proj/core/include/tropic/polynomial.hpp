#ifndef TROPIC_POLYNOMIAL_HPP
#define TROPIC_POLYNOMIAL_HPP

#include "tropic/rat.hpp"

#include <array>
#include <map>
#include <string>

namespace tropic {

/// Polynomial with rational coefficients in four formal parameters
/// (a1, a2, b1, b2), used to manipulate inequality combinations whose
/// multipliers depend on unknown positive weights.
class ParamPoly {
public:
  using Monomial = std::array<int, 4>; // exponents of a1, a2, b1, b2

  ParamPoly() = default;
  ParamPoly(const Rat& constant); // NOLINT: implicit by design
  static ParamPoly param(int index); // 0..3

  ParamPoly operator+(const ParamPoly& other) const;
  ParamPoly operator-(const ParamPoly& other) const;
  ParamPoly operator*(const ParamPoly& other) const;
  ParamPoly operator-() const;
  ParamPoly& operator+=(const ParamPoly& other);

  bool is_zero() const { return terms_.empty(); }
  /// Every coefficient nonnegative: the value is >= 0 (and > 0 if any
  /// coefficient is positive) whenever all four parameters are positive.
  bool has_nonnegative_coeffs() const;

  bool operator==(const ParamPoly&) const = default;

  const std::map<Monomial, Rat>& terms() const { return terms_; }
  std::string str() const;

private:
  void prune();
  std::map<Monomial, Rat> terms_;
};

/// The polynomial with parameters i and j exchanged in every monomial.
ParamPoly swap_params(const ParamPoly& p, int i, int j);

inline ParamPoly param_a1() { return ParamPoly::param(0); }
inline ParamPoly param_a2() { return ParamPoly::param(1); }
inline ParamPoly param_b1() { return ParamPoly::param(2); }
inline ParamPoly param_b2() { return ParamPoly::param(3); }

} // namespace tropic

#endif
