#pragma once

#include <vector>

#include "poly.hpp"
#include "scalar.hpp"
#include "series.hpp"

namespace ytw {

// Exact rational function kept in factored form:
//
//     pref * prod_i (u - a_i) / prod_j (u - b_j)
//
// with the root multisets sorted. This is the carrier of highest-weight
// components: (1 + c u^{-1}) enters as (u + c) over a denominator root at 0.
// Expansion to USeries needs #num <= #den.
class FactoredRational {
 public:
  explicit FactoredRational(const Field& f);
  static FactoredRational one(const Field& f);
  static FactoredRational from_roots(const Field& f, std::vector<Scalar> num,
                                     std::vector<Scalar> den, const Scalar& pref);
  // (1 + c u^{-1}) = (u + c)/u.
  static FactoredRational one_plus_c_over_u(const Scalar& c);
  // Polynomial in u^{-1} with constant term 1, factored by root extraction.
  static FactoredRational from_x_poly(const Poly& p_in_x);

  const Field& field() const { return field_; }
  const std::vector<Scalar>& num_roots() const { return num_; }
  const std::vector<Scalar>& den_roots() const { return den_; }
  const Scalar& prefactor() const { return pref_; }

  bool is_one() const;
  // Degree of numerator minus denominator; <= 0 iff expandable as a series.
  int u_degree() const { return static_cast<int>(num_.size()) - static_cast<int>(den_.size()); }
  // Constant term of the series expansion (requires u_degree() <= 0).
  Scalar constant_term() const;

  // Cancels common roots; canonical form.
  FactoredRational reduced() const;

  friend FactoredRational operator*(const FactoredRational& a, const FactoredRational& b);
  friend FactoredRational operator/(const FactoredRational& a, const FactoredRational& b);
  FactoredRational& operator*=(const FactoredRational& o) { return *this = *this * o; }

  // u -> -u.
  FactoredRational negate_u() const;
  // u -> u + c.
  FactoredRational shift_u(const Scalar& c) const;
  FactoredRational inverse() const;

  // Exact evaluation at u = x; x must not be a denominator root.
  Scalar eval(const Scalar& x) const;

  USeries expand(int order) const;

  // True iff invariant under u -> -u (as a rational function).
  bool is_even() const;

  // Equality as rational functions (compares reduced forms).
  friend bool operator==(const FactoredRational& a, const FactoredRational& b);
  friend bool operator!=(const FactoredRational& a, const FactoredRational& b) { return !(a == b); }

  std::string to_string() const;

 private:
  Field field_;
  Scalar pref_;
  std::vector<Scalar> num_, den_;  // sorted
};

// Even normalizer of Prop "Y(sp_2) polynomial weights": returns the even
// series g(u) = d(u)d(-u) built from m's denominator, and the polynomial (in
// u^{-1}, constant term 1) g(u) * m(u). Requires m to have constant term 1.
struct EvenNormalized {
  FactoredRational g;
  Poly poly_in_x;
};
EvenNormalized even_part_normalizer(const FactoredRational& m);

}  // namespace ytw
