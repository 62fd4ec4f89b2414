#include "poly.hpp"

#include <algorithm>
#include <sstream>

namespace ytw {

Poly::Poly(const Field& f, std::vector<Scalar> coeffs) : field_(f), coeffs_(std::move(coeffs)) {
  normalize();
}

void Poly::normalize() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

Poly Poly::constant(const Scalar& c) {
  Poly p(c.field());
  if (!c.is_zero()) p.coeffs_ = {c};
  return p;
}

Poly Poly::one(const Field& f) { return constant(f.one()); }

Poly Poly::variable(const Field& f) {
  Poly p(f);
  p.coeffs_ = {f.zero(), f.one()};
  return p;
}

Poly Poly::from_roots(const Field& f, const std::vector<Scalar>& roots) {
  Poly p = one(f);
  for (const Scalar& r : roots) {
    Poly lin(f);
    lin.coeffs_ = {-r, f.one()};
    p *= lin;
  }
  return p;
}

Scalar Poly::coeff(int k) const {
  if (k < 0 || k > degree()) return field_.zero();
  return coeffs_[k];
}

const Scalar& Poly::leading() const {
  if (is_zero()) throw math_error("leading coefficient of zero polynomial");
  return coeffs_.back();
}

Poly Poly::operator-() const {
  Poly p = *this;
  for (Scalar& c : p.coeffs_) c = -c;
  return p;
}

Poly operator+(const Poly& a, const Poly& b) {
  Poly p(a.field_);
  p.coeffs_.assign(std::max(a.coeffs_.size(), b.coeffs_.size()), a.field_.zero());
  for (size_t i = 0; i < a.coeffs_.size(); ++i) p.coeffs_[i] += a.coeffs_[i];
  for (size_t i = 0; i < b.coeffs_.size(); ++i) p.coeffs_[i] += b.coeffs_[i];
  p.normalize();
  return p;
}

Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }

Poly operator*(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return Poly(a.field_);
  Poly p(a.field_);
  p.coeffs_.assign(a.coeffs_.size() + b.coeffs_.size() - 1, a.field_.zero());
  for (size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i].is_zero()) continue;
    for (size_t j = 0; j < b.coeffs_.size(); ++j) p.coeffs_[i + j].addmul(a.coeffs_[i], b.coeffs_[j]);
  }
  p.normalize();
  return p;
}

Poly Poly::operator*(const Scalar& c) const {
  Poly p = *this;
  for (Scalar& x : p.coeffs_) x *= c;
  p.normalize();
  return p;
}

std::pair<Poly, Poly> Poly::divmod(const Poly& d) const {
  if (d.is_zero()) throw math_error("polynomial division by zero");
  Poly q(field_), r = *this;
  q.coeffs_.assign(std::max(0, degree() - d.degree() + 1), field_.zero());
  Scalar lead_inv = d.leading().inv();
  while (!r.is_zero() && r.degree() >= d.degree()) {
    int k = r.degree() - d.degree();
    Scalar c = r.leading() * lead_inv;
    q.coeffs_[k] = c;
    for (int i = 0; i <= d.degree(); ++i) r.coeffs_[k + i] -= c * d.coeffs_[i];
    r.normalize();
  }
  q.normalize();
  return {q, r};
}

Poly Poly::divexact(const Poly& d) const {
  auto [q, r] = divmod(d);
  if (!r.is_zero()) throw math_error("inexact polynomial division");
  return q;
}

Scalar Poly::eval(const Scalar& x) const {
  Scalar acc = field_.zero();
  for (int k = degree(); k >= 0; --k) {
    acc *= x;
    acc += coeffs_[k];
  }
  return acc;
}

Poly Poly::shift(const Scalar& c) const {
  // Horner in (u + c).
  Poly acc(field_);
  Poly lin(field_, {c, field_.one()});
  for (int k = degree(); k >= 0; --k) acc = acc * lin + Poly::constant(coeffs_[k]);
  return acc;
}

Poly Poly::negate_var() const {
  Poly p = *this;
  for (int k = 1; k <= p.degree(); k += 2) p.coeffs_[k] = -p.coeffs_[k];
  return p;
}

bool Poly::is_symmetric_about_half() const {
  // P(-u+1) = S(-u) with S(u) = P(u+1).
  return *this == shift(field_.one()).negate_var();
}

bool operator==(const Poly& a, const Poly& b) {
  if (a.coeffs_.size() != b.coeffs_.size()) return false;
  for (size_t i = 0; i < a.coeffs_.size(); ++i)
    if (a.coeffs_[i] != b.coeffs_[i]) return false;
  return true;
}

USeries Poly::as_useries(int order) const {
  USeries s(field_, order);
  for (int k = 0; k <= std::min(order, degree()); ++k) s.set_coeff(k, coeffs_[k]);
  return s;
}

namespace {

// Divisors of |n| (n != 0), for rational root candidates.
std::vector<uint64_t> divisors_u64(const mpz_class& n) {
  mpz_class a = abs(n);
  if (!a.fits_ulong_p()) throw math_error("root search: coefficient too large to factor");
  uint64_t v = a.get_ui();
  std::vector<uint64_t> divs;
  for (uint64_t d = 1; d * d <= v; ++d) {
    if (v % d == 0) {
      divs.push_back(d);
      divs.push_back(v / d);
    }
  }
  return divs;
}

}  // namespace

std::vector<Scalar> Poly::extract_roots() const {
  if (is_zero()) throw math_error("root extraction of the zero polynomial");
  std::vector<Scalar> roots;
  Poly p = *this;
  if (!field_.is_rational()) {
    for (uint32_t a = 0; a < field_.characteristic() && p.degree() > 0; ++a) {
      Scalar r = field_(static_cast<long>(a));
      while (p.degree() > 0 && p.eval(r).is_zero()) {
        roots.push_back(r);
        p = p.divexact(Poly(field_, {-r, field_.one()}));
      }
    }
  } else {
    // Strip roots at zero, then use the rational root theorem on the
    // denominator-cleared polynomial.
    while (p.degree() > 0 && p.coeffs_[0].is_zero()) {
      roots.push_back(field_.zero());
      p = p.divexact(variable(field_));
    }
    if (p.degree() > 0) {
      mpz_class den_lcm = 1;
      for (const Scalar& c : p.coeffs_) den_lcm = lcm(den_lcm, c.rational().get_den());
      std::vector<mpz_class> ic;
      for (const Scalar& c : p.coeffs_) ic.push_back(mpz_class(c.rational() * den_lcm));
      std::vector<uint64_t> nums = divisors_u64(ic.front());
      std::vector<uint64_t> dens = divisors_u64(ic.back());
      std::vector<Scalar> candidates;
      for (uint64_t nu : nums)
        for (uint64_t de : dens) {
          mpq_class q(static_cast<unsigned long>(nu), static_cast<unsigned long>(de));
          q.canonicalize();
          candidates.push_back(Scalar(field_, q));
          candidates.push_back(Scalar(field_, mpq_class(-q)));
        }
      std::sort(candidates.begin(), candidates.end());
      candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());
      for (const Scalar& r : candidates) {
        while (p.degree() > 0 && p.eval(r).is_zero()) {
          roots.push_back(r);
          p = p.divexact(Poly(field_, {-r, field_.one()}));
        }
      }
    }
  }
  if (p.degree() > 0)
    throw math_error("polynomial does not split into linear factors over " + field_.to_string());
  std::sort(roots.begin(), roots.end());
  return roots;
}

std::string Poly::to_string(const char* var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int k = degree(); k >= 0; --k) {
    if (coeffs_[k].is_zero()) continue;
    if (!first) os << " + ";
    os << coeffs_[k].to_string();
    if (k > 0) os << "*" << var;
    if (k > 1) os << "^" << k;
    first = false;
  }
  return os.str();
}

Poly poly_shift(const Poly& p, const Scalar& c) { return p.shift(c); }

Poly frobenius_period_poly(const Field& f) {
  if (f.is_rational()) throw math_error("q_p(u) needs positive characteristic");
  std::vector<Scalar> coeffs(f.characteristic() + 1, f.zero());
  coeffs[1] = -f.one();
  coeffs[f.characteristic()] = f.one();
  return Poly(f, std::move(coeffs));
}

}  // namespace ytw
