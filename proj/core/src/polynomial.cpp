#include "tropic/polynomial.hpp"

#include <sstream>

namespace tropic {

ParamPoly::ParamPoly(const Rat& constant) {
  if (constant != 0) terms_[{0, 0, 0, 0}] = constant;
}

ParamPoly ParamPoly::param(int index) {
  ParamPoly p;
  Monomial m{0, 0, 0, 0};
  m[index] = 1;
  p.terms_[m] = 1;
  return p;
}

ParamPoly ParamPoly::operator+(const ParamPoly& other) const {
  ParamPoly out = *this;
  out += other;
  return out;
}

ParamPoly& ParamPoly::operator+=(const ParamPoly& other) {
  for (const auto& [m, c] : other.terms_) terms_[m] += c;
  prune();
  return *this;
}

ParamPoly ParamPoly::operator-(const ParamPoly& other) const {
  return *this + (-other);
}

ParamPoly ParamPoly::operator-() const {
  ParamPoly out;
  for (const auto& [m, c] : terms_) out.terms_[m] = -c;
  return out;
}

ParamPoly ParamPoly::operator*(const ParamPoly& other) const {
  ParamPoly out;
  for (const auto& [m1, c1] : terms_) {
    for (const auto& [m2, c2] : other.terms_) {
      Monomial m{m1[0] + m2[0], m1[1] + m2[1], m1[2] + m2[2], m1[3] + m2[3]};
      out.terms_[m] += c1 * c2;
    }
  }
  out.prune();
  return out;
}

bool ParamPoly::has_nonnegative_coeffs() const {
  for (const auto& [m, c] : terms_) {
    if (c < 0) return false;
  }
  return true;
}

void ParamPoly::prune() {
  for (auto it = terms_.begin(); it != terms_.end();) {
    if (it->second == 0) {
      it = terms_.erase(it);
    } else {
      ++it;
    }
  }
}

ParamPoly swap_params(const ParamPoly& p, int i, int j) {
  ParamPoly out;
  for (const auto& [m, c] : p.terms()) {
    ParamPoly::Monomial swapped = m;
    std::swap(swapped[i], swapped[j]);
    out += [&] {
      ParamPoly t(c);
      ParamPoly unit(Rat(1));
      for (int idx = 0; idx < 4; ++idx) {
        for (int e = 0; e < swapped[idx]; ++e) unit = unit * ParamPoly::param(idx);
      }
      return t * unit;
    }();
  }
  return out;
}

std::string ParamPoly::str() const {
  if (terms_.empty()) return "0";
  static const char* names[4] = {"a1", "a2", "b1", "b2"};
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    if (!first) os << " + ";
    os << format_rat(c);
    for (int i = 0; i < 4; ++i) {
      for (int e = 0; e < m[i]; ++e) os << "*" << names[i];
    }
    first = false;
  }
  return os.str();
}

} // namespace tropic
