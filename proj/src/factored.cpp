#include "factored.hpp"

#include <algorithm>
#include <sstream>

namespace ytw {

FactoredRational::FactoredRational(const Field& f) : field_(f), pref_(f.one()) {}

FactoredRational FactoredRational::one(const Field& f) { return FactoredRational(f); }

FactoredRational FactoredRational::from_roots(const Field& f, std::vector<Scalar> num,
                                              std::vector<Scalar> den, const Scalar& pref) {
  FactoredRational r(f);
  r.pref_ = pref;
  r.num_ = std::move(num);
  r.den_ = std::move(den);
  std::sort(r.num_.begin(), r.num_.end());
  std::sort(r.den_.begin(), r.den_.end());
  return r;
}

FactoredRational FactoredRational::one_plus_c_over_u(const Scalar& c) {
  const Field& f = c.field();
  return from_roots(f, {-c}, {f.zero()}, f.one());
}

FactoredRational FactoredRational::from_x_poly(const Poly& p) {
  const Field& f = p.field();
  if (p.is_zero() || !p.coeff(0).is_one())
    throw math_error("from_x_poly expects constant term 1");
  // p(x) = prod (1 - g_i x); reversing gives the monic u-polynomial
  // u^d p(1/u) = prod (u - g_i).
  int d = p.degree();
  std::vector<Scalar> rev(d + 1, f.zero());
  for (int k = 0; k <= d; ++k) rev[d - k] = p.coeff(k);
  std::vector<Scalar> roots = Poly(f, rev).extract_roots();
  return from_roots(f, roots, std::vector<Scalar>(d, f.zero()), f.one());
}

bool FactoredRational::is_one() const {
  FactoredRational r = reduced();
  return r.pref_.is_one() && r.num_.empty() && r.den_.empty();
}

Scalar FactoredRational::constant_term() const {
  int d = u_degree();
  if (d > 0) throw math_error("not a power series in u^{-1}");
  return d == 0 ? pref_ : field_.zero();
}

FactoredRational FactoredRational::reduced() const {
  FactoredRational r(field_);
  r.pref_ = pref_;
  std::vector<Scalar> den = den_;
  for (const Scalar& a : num_) {
    auto it = std::find(den.begin(), den.end(), a);
    if (it != den.end())
      den.erase(it);
    else
      r.num_.push_back(a);
  }
  r.den_ = std::move(den);
  std::sort(r.num_.begin(), r.num_.end());
  std::sort(r.den_.begin(), r.den_.end());
  return r;
}

FactoredRational operator*(const FactoredRational& a, const FactoredRational& b) {
  std::vector<Scalar> num = a.num_, den = a.den_;
  num.insert(num.end(), b.num_.begin(), b.num_.end());
  den.insert(den.end(), b.den_.begin(), b.den_.end());
  return FactoredRational::from_roots(a.field_, std::move(num), std::move(den),
                                      a.pref_ * b.pref_)
      .reduced();
}

FactoredRational operator/(const FactoredRational& a, const FactoredRational& b) {
  return a * b.inverse();
}

FactoredRational FactoredRational::inverse() const {
  if (pref_.is_zero()) throw math_error("inverse of zero rational function");
  return from_roots(field_, den_, num_, pref_.inv());
}

FactoredRational FactoredRational::negate_u() const {
  std::vector<Scalar> num, den;
  for (const Scalar& a : num_) num.push_back(-a);
  for (const Scalar& b : den_) den.push_back(-b);
  int sign_exp = static_cast<int>(num_.size()) + static_cast<int>(den_.size());
  Scalar pref = (sign_exp % 2 == 0) ? pref_ : -pref_;
  return from_roots(field_, std::move(num), std::move(den), pref);
}

FactoredRational FactoredRational::shift_u(const Scalar& c) const {
  std::vector<Scalar> num, den;
  for (const Scalar& a : num_) num.push_back(a - c);
  for (const Scalar& b : den_) den.push_back(b - c);
  return from_roots(field_, std::move(num), std::move(den), pref_);
}

Scalar FactoredRational::eval(const Scalar& x) const {
  Scalar v = pref_;
  for (const Scalar& a : num_) v *= (x - a);
  for (const Scalar& b : den_) {
    Scalar t = x - b;
    if (t.is_zero()) throw math_error("evaluation at a pole");
    v /= t;
  }
  return v;
}

USeries FactoredRational::expand(int order) const {
  if (u_degree() > 0) throw math_error("factored rational has positive u-degree");
  // num(u)/den(u) = u^{n-d} * N(x)/D(x) with x = u^{-1}, N, D constant term 1.
  USeries acc = USeries::constant(pref_, order);
  for (const Scalar& a : num_) {
    USeries lin = USeries::one(field_, order);
    if (!a.is_zero()) lin.set_coeff(1, -a);
    acc *= lin;
  }
  for (const Scalar& b : den_) {
    USeries lin = USeries::one(field_, order);
    if (!b.is_zero()) lin.set_coeff(1, -b);
    acc *= lin.inverse();
  }
  return acc.mul_u_power(u_degree());
}

bool FactoredRational::is_even() const { return reduced() == negate_u().reduced(); }

bool operator==(const FactoredRational& a, const FactoredRational& b) {
  FactoredRational x = a.reduced(), y = b.reduced();
  return x.pref_ == y.pref_ && x.num_ == y.num_ && x.den_ == y.den_;
}

std::string FactoredRational::to_string() const {
  std::ostringstream os;
  os << pref_.to_string();
  for (const Scalar& a : num_) os << "*(u-" << a.to_string() << ")";
  for (const Scalar& b : den_) os << "/(u-" << b.to_string() << ")";
  return os.str();
}

EvenNormalized even_part_normalizer(const FactoredRational& m_in) {
  FactoredRational m = m_in.reduced();
  if (m.u_degree() != 0 || !m.constant_term().is_one())
    throw math_error("even_part_normalizer needs constant term 1");
  const Field& f = m.field();
  // g(u) = d(u)d(-u) where d is the denominator normalized to constant term
  // 1; even by construction, and g*m clears every pole.
  std::vector<Scalar> gnum, gden;
  for (const Scalar& b : m.den_roots()) {
    gnum.push_back(b);
    gnum.push_back(-b);
    gden.push_back(f.zero());
    gden.push_back(f.zero());
  }
  FactoredRational g = FactoredRational::from_roots(f, std::move(gnum), std::move(gden), f.one());
  FactoredRational prod = (g * m).reduced();
  if (!prod.den_roots().empty()) {
    for (const Scalar& b : prod.den_roots())
      if (!b.is_zero()) throw math_error("even normalizer failed to clear poles");
  }
  // prod = prod (u - a_i) / u^{k}; as a polynomial in x: prod (1 - a_i x).
  Poly poly = Poly::one(f);
  for (const Scalar& a : prod.num_roots()) poly *= Poly(f, {f.one(), -a});
  poly = poly * prod.prefactor();
  return {g, poly};
}

}  // namespace ytw
