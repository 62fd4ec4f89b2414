#include "scalar.hpp"

#include <charconv>

namespace ytw {

bool is_prime_u32(uint32_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (uint64_t d = 3; d * d <= n; d += 2)
    if (n % d == 0) return false;
  return true;
}

std::vector<uint32_t> primes_in_range(uint32_t lo, uint32_t hi) {
  std::vector<uint32_t> out;
  for (uint32_t n = lo; n < hi; ++n)
    if (is_prime_u32(n)) out.push_back(n);
  return out;
}

Field Field::prime_field(uint32_t p) {
  if (p == 2) throw config_error("characteristic 2 unsupported");
  if (!is_prime_u32(p)) throw config_error("field modulus " + std::to_string(p) + " is not prime");
  Field f;
  f.p_ = p;
  return f;
}

Field Field::parse(std::string_view text) {
  if (text == "Q") return rationals();
  constexpr std::string_view kPrefix = "Fp:";
  if (text.substr(0, kPrefix.size()) == kPrefix) {
    std::string_view num = text.substr(kPrefix.size());
    uint32_t p = 0;
    auto [ptr, ec] = std::from_chars(num.data(), num.data() + num.size(), p);
    if (ec != std::errc() || ptr != num.data() + num.size())
      throw config_error("bad field spec '" + std::string(text) + "'");
    return prime_field(p);
  }
  throw config_error("bad field spec '" + std::string(text) + "' (want Q or Fp:<prime>)");
}

std::string Field::to_string() const {
  return p_ == 0 ? std::string("Q") : "Fp:" + std::to_string(p_);
}

Scalar Field::operator()(long num, long den) const { return Scalar(*this, mpq_class(num, den)); }

Scalar Field::scalar_from_string(std::string_view s) const {
  mpq_class q;
  if (q.set_str(std::string(s), 10) != 0) throw config_error("bad scalar '" + std::string(s) + "'");
  q.canonicalize();
  return Scalar(*this, q);
}

namespace {

int64_t mod_reduce(int64_t v, uint32_t p) {
  int64_t r = v % static_cast<int64_t>(p);
  return r < 0 ? r + p : r;
}

// Inverse mod p by extended Euclid; a must be nonzero mod p.
int64_t mod_inverse(int64_t a, uint32_t p) {
  int64_t t = 0, new_t = 1, r = p, new_r = mod_reduce(a, p);
  if (new_r == 0) throw math_error("division by zero in F_p");
  while (new_r != 0) {
    int64_t q = r / new_r;
    t = std::exchange(new_t, t - q * new_t);
    r = std::exchange(new_r, r - q * new_r);
  }
  return mod_reduce(t, p);
}

int64_t mpz_mod_p(const mpz_class& z, uint32_t p) {
  mpz_class r = z % p;
  int64_t v = r.get_si();
  return v < 0 ? v + p : v;
}

}  // namespace

Scalar::Scalar(const Field& f, long n) : p_(f.characteristic()) {
  if (p_ == 0)
    q_ = n;
  else
    v_ = mod_reduce(n, p_);
}

Scalar::Scalar(const Field& f, const mpq_class& q) : p_(f.characteristic()) {
  if (p_ == 0) {
    q_ = q;
    q_.canonicalize();
  } else {
    int64_t den = mpz_mod_p(q.get_den(), p_);
    v_ = mod_reduce(mpz_mod_p(q.get_num(), p_) * mod_inverse(den, p_), p_);
  }
}

bool Scalar::is_integer() const { return p_ != 0 || q_.get_den() == 1; }

const mpq_class& Scalar::rational() const {
  if (p_ != 0) throw math_error("rational() on an F_p scalar");
  return q_;
}

int64_t Scalar::residue() const {
  if (p_ == 0) throw math_error("residue() on a rational scalar");
  return v_;
}

int64_t Scalar::integer_value() const {
  if (p_ != 0) return v_;
  if (q_.get_den() != 1) throw math_error("integer_value() on non-integer " + to_string());
  if (!q_.get_num().fits_slong_p()) throw math_error("integer too large: " + to_string());
  return q_.get_num().get_si();
}

void Scalar::check_same_field(const Scalar& o) const {
  if (p_ != o.p_) throw math_error("scalars from different fields");
}

Scalar Scalar::operator-() const {
  Scalar r = *this;
  if (p_ == 0)
    r.q_ = -r.q_;
  else
    r.v_ = v_ == 0 ? 0 : p_ - v_;
  return r;
}

Scalar Scalar::inv() const {
  Scalar r = *this;
  if (p_ == 0) {
    if (q_ == 0) throw math_error("division by zero");
    r.q_ = 1 / q_;
  } else {
    r.v_ = mod_inverse(v_, p_);
  }
  return r;
}

Scalar Scalar::pow(long e) const {
  Scalar base = e < 0 ? inv() : *this;
  unsigned long k = static_cast<unsigned long>(e < 0 ? -e : e);
  Scalar acc = field().one();
  while (k) {
    if (k & 1) acc *= base;
    base *= base;
    k >>= 1;
  }
  return acc;
}

Scalar& Scalar::operator+=(const Scalar& o) {
  check_same_field(o);
  if (p_ == 0)
    q_ += o.q_;
  else
    v_ = mod_reduce(v_ + o.v_, p_);
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
  check_same_field(o);
  if (p_ == 0)
    q_ -= o.q_;
  else
    v_ = mod_reduce(v_ - o.v_, p_);
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
  check_same_field(o);
  if (p_ == 0)
    q_ *= o.q_;
  else
    v_ = mod_reduce(v_ * o.v_, p_);
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) { return *this *= o.inv(); }

void Scalar::addmul(const Scalar& a, const Scalar& b) {
  a.check_same_field(b);
  check_same_field(a);
  if (p_ == 0)
    q_ += a.q_ * b.q_;
  else
    v_ = mod_reduce(v_ + a.v_ * b.v_, p_);
}

bool operator==(const Scalar& a, const Scalar& b) {
  a.check_same_field(b);
  return a.p_ == 0 ? a.q_ == b.q_ : a.v_ == b.v_;
}

bool operator<(const Scalar& a, const Scalar& b) {
  a.check_same_field(b);
  return a.p_ == 0 ? a.q_ < b.q_ : a.v_ < b.v_;
}

std::string Scalar::to_string() const {
  return p_ == 0 ? q_.get_str() : std::to_string(v_);
}

Scalar Scalar::reduce_mod(const Scalar& q, const Field& fp) {
  if (q.p_ != 0) throw math_error("reduce_mod expects a rational scalar");
  if (fp.is_rational()) return q;
  return Scalar(fp, q.q_);
}

}  // namespace ytw
