#pragma once

#include <optional>
#include <vector>

#include "scalar.hpp"
#include "series.hpp"

namespace ytw {

// Dense univariate polynomial with exact coefficients, ascending powers.
// Used both for polynomials in u (Drinfeld data) and in x = u^{-1}
// (normalized weight numerators). The zero polynomial has empty coeffs.
class Poly {
 public:
  explicit Poly(const Field& f) : field_(f) {}
  Poly(const Field& f, std::vector<Scalar> coeffs);
  static Poly constant(const Scalar& c);
  static Poly one(const Field& f);
  static Poly variable(const Field& f);  // u
  static Poly from_roots(const Field& f, const std::vector<Scalar>& roots);  // monic

  const Field& field() const { return field_; }
  bool is_zero() const { return coeffs_.empty(); }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }  // -1 for zero
  Scalar coeff(int k) const;
  const Scalar& leading() const;
  bool is_monic() const { return !is_zero() && leading().is_one(); }
  bool is_one() const { return degree() == 0 && coeffs_[0].is_one(); }

  Poly operator-() const;
  friend Poly operator+(const Poly& a, const Poly& b);
  friend Poly operator-(const Poly& a, const Poly& b);
  friend Poly operator*(const Poly& a, const Poly& b);
  Poly operator*(const Scalar& c) const;
  Poly& operator*=(const Poly& o) { return *this = *this * o; }

  // Quotient/remainder; divisor must be nonzero.
  std::pair<Poly, Poly> divmod(const Poly& d) const;
  // Division that must be exact.
  Poly divexact(const Poly& d) const;

  Scalar eval(const Scalar& x) const;
  // P(u) -> P(u+c).
  Poly shift(const Scalar& c) const;
  // P(u) -> P(-u).
  Poly negate_var() const;
  // P(u) == P(-u+1), decided coefficientwise.
  bool is_symmetric_about_half() const;

  friend bool operator==(const Poly& a, const Poly& b);
  friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

  // Viewing the coefficients as powers of u^{-1}, the series expansion.
  USeries as_useries(int order) const;

  // Full linear-root extraction; throws math_error unless the polynomial is
  // a product of linear factors over the base field. Returns the sorted
  // root multiset.
  std::vector<Scalar> extract_roots() const;

  std::string to_string(const char* var = "u") const;

 private:
  void normalize();

  Field field_;
  std::vector<Scalar> coeffs_;
};

// P(u) -> P(u+c); same degree, monic preserved.
Poly poly_shift(const Poly& p, const Scalar& c);

// q_p(u) = u^p - u over F_p.
Poly frobenius_period_poly(const Field& f);

}  // namespace ytw
