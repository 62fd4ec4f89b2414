#include "series.hpp"

#include <sstream>

namespace ytw {

USeries::USeries(const Field& f, int order) : field_(f) {
  if (order < 0) throw math_error("series order must be >= 0");
  coeffs_.assign(order + 1, f.zero());
}

USeries USeries::one(const Field& f, int order) {
  USeries s(f, order);
  s.coeffs_[0] = f.one();
  return s;
}

USeries USeries::constant(const Scalar& c, int order) {
  USeries s(c.field(), order);
  s.coeffs_[0] = c;
  return s;
}

bool USeries::is_zero() const {
  for (const Scalar& c : coeffs_)
    if (!c.is_zero()) return false;
  return true;
}

bool USeries::is_one() const {
  if (!coeffs_[0].is_one()) return false;
  for (size_t k = 1; k < coeffs_.size(); ++k)
    if (!coeffs_[k].is_zero()) return false;
  return true;
}

bool USeries::is_even() const {
  for (size_t k = 1; k < coeffs_.size(); k += 2)
    if (!coeffs_[k].is_zero()) return false;
  return true;
}

USeries USeries::truncated(int order) const {
  USeries s(field_, order);
  for (int k = 0; k <= order && k <= this->order(); ++k) s.coeffs_[k] = coeffs_[k];
  return s;
}

USeries USeries::operator-() const {
  USeries s = *this;
  for (Scalar& c : s.coeffs_) c = -c;
  return s;
}

USeries operator+(const USeries& a, const USeries& b) {
  USeries s = a.truncated(std::min(a.order(), b.order()));
  for (int k = 0; k <= s.order(); ++k) s.coeffs_[k] += b.coeffs_[k];
  return s;
}

USeries operator-(const USeries& a, const USeries& b) {
  USeries s = a.truncated(std::min(a.order(), b.order()));
  for (int k = 0; k <= s.order(); ++k) s.coeffs_[k] -= b.coeffs_[k];
  return s;
}

USeries operator*(const USeries& a, const USeries& b) {
  int order = std::min(a.order(), b.order());
  USeries s(a.field_, order);
  for (int i = 0; i <= order; ++i) {
    if (a.coeffs_[i].is_zero()) continue;
    for (int j = 0; i + j <= order; ++j) s.coeffs_[i + j].addmul(a.coeffs_[i], b.coeffs_[j]);
  }
  return s;
}

USeries USeries::operator*(const Scalar& c) const {
  USeries s = *this;
  for (Scalar& x : s.coeffs_) x *= c;
  return s;
}

USeries USeries::inverse() const {
  if (coeffs_[0].is_zero()) throw math_error("series inverse requires a unit constant term");
  USeries r(field_, order());
  Scalar c0inv = coeffs_[0].inv();
  r.coeffs_[0] = c0inv;
  for (int k = 1; k <= order(); ++k) {
    Scalar acc = field_.zero();
    for (int j = 1; j <= k; ++j) acc.addmul(coeffs_[j], r.coeffs_[k - j]);
    r.coeffs_[k] = -acc * c0inv;
  }
  return r;
}

USeries USeries::negate_u() const {
  USeries s = *this;
  for (size_t k = 1; k < s.coeffs_.size(); k += 2) s.coeffs_[k] = -s.coeffs_[k];
  return s;
}

USeries USeries::mul_u_power(int k) const {
  USeries s(field_, order());
  for (int j = 0; j <= order(); ++j) {
    int t = j - k;  // u^{-j} * u^{k} = u^{-(j-k)}
    if (t >= 0 && t <= order()) s.coeffs_[t] = coeffs_[j];
  }
  return s;
}

bool operator==(const USeries& a, const USeries& b) {
  int order = std::min(a.order(), b.order());
  for (int k = 0; k <= order; ++k)
    if (a.coeffs_[k] != b.coeffs_[k]) return false;
  return true;
}

std::string USeries::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (int k = 0; k <= order(); ++k) {
    if (coeffs_[k].is_zero()) continue;
    if (!first) os << " + ";
    os << coeffs_[k].to_string();
    if (k > 0) os << "*u^-" << k;
    first = false;
  }
  if (first) os << "0";
  os << " + O(u^-" << order() + 1 << ")";
  return os.str();
}

USeries expand_shifted_inverse(const Scalar& c, int order) {
  if (order < 1) throw math_error("expand_shifted_inverse needs order >= 1");
  USeries s(c.field(), order);
  Scalar term = c.field().one();
  for (int j = 0; j + 1 <= order; ++j) {
    s.set_coeff(j + 1, term);
    term *= -c;
  }
  return s;
}

USeries expand_shifted_inverse_pow(const Scalar& c, int r, int order) {
  USeries acc = USeries::one(c.field(), order);
  if (r == 0) return acc;
  USeries base = expand_shifted_inverse(c, order);
  for (int i = 0; i < r; ++i) acc *= base;
  return acc;
}

}  // namespace ytw
