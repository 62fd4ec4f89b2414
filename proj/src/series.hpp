#pragma once

#include <vector>

#include "scalar.hpp"

namespace ytw {

// Truncated formal series in u^{-1}: coeff(k) multiplies u^{-k}, exact for
// k = 0..order() inclusive. Arithmetic truncates at the smaller order.
class USeries {
 public:
  USeries(const Field& f, int order);
  static USeries one(const Field& f, int order);
  static USeries constant(const Scalar& c, int order);

  const Field& field() const { return field_; }
  int order() const { return static_cast<int>(coeffs_.size()) - 1; }

  const Scalar& coeff(int k) const { return coeffs_.at(k); }
  void set_coeff(int k, const Scalar& c) { coeffs_.at(k) = c; }

  bool is_zero() const;
  bool is_one() const;
  // True when only even powers of u^{-1} appear.
  bool is_even() const;

  USeries truncated(int order) const;

  USeries operator-() const;
  friend USeries operator+(const USeries& a, const USeries& b);
  friend USeries operator-(const USeries& a, const USeries& b);
  friend USeries operator*(const USeries& a, const USeries& b);
  USeries& operator+=(const USeries& o) { return *this = *this + o; }
  USeries& operator*=(const USeries& o) { return *this = *this * o; }
  USeries operator*(const Scalar& c) const;

  // Multiplicative inverse; requires coeff(0) != 0.
  USeries inverse() const;
  // u -> -u (negates odd coefficients).
  USeries negate_u() const;
  // Multiply by u^k (k may be negative); coefficients shifted off either end
  // are dropped, so the result is still exact to order().
  USeries mul_u_power(int k) const;

  friend bool operator==(const USeries& a, const USeries& b);
  friend bool operator!=(const USeries& a, const USeries& b) { return !(a == b); }

  std::string to_string() const;

 private:
  Field field_;
  std::vector<Scalar> coeffs_;  // size order+1
};

// Expansion of (u+c)^{-1} = sum_{j>=0} (-c)^j u^{-j-1}, truncated at order O.
USeries expand_shifted_inverse(const Scalar& c, int order);

// Expansion of (u+c)^{-r} for r >= 0.
USeries expand_shifted_inverse_pow(const Scalar& c, int r, int order);

}  // namespace ytw
