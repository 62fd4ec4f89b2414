#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace ytw {

/// Raised when a mathematical precondition fails (division by zero, wrong
/// field, non-split polynomial, ...).
struct math_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Raised when user-supplied configuration is malformed.
struct config_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

class Scalar;

// Ground field: Q or F_p with p an odd prime >= 3. Characteristic 2 is
// rejected everywhere; half-integer constants are honest field divisions.
class Field {
 public:
  Field() = default;  // rationals
  static Field rationals() { return Field(); }
  static Field prime_field(uint32_t p);
  // Accepts "Q" or "Fp:<prime>"; diagnoses p = 2 and composite p.
  static Field parse(std::string_view text);

  bool is_rational() const { return p_ == 0; }
  uint32_t characteristic() const { return p_; }
  std::string to_string() const;

  Scalar zero() const;
  Scalar one() const;
  Scalar operator()(long n) const;
  Scalar operator()(long num, long den) const;
  // Parses "3", "-1/2", ...
  Scalar scalar_from_string(std::string_view s) const;
  Scalar half() const;

  friend bool operator==(const Field& a, const Field& b) { return a.p_ == b.p_; }
  friend bool operator!=(const Field& a, const Field& b) { return a.p_ != b.p_; }

 private:
  uint32_t p_ = 0;  // 0 = rationals
};

// Exact field element. Canonical representative is kept at all times:
// reduced fraction over Q, value in [0, p) over F_p. Immutable value
// semantics; arithmetic between different fields is an error.
class Scalar {
 public:
  Scalar() : p_(0) {}  // 0 in Q
  Scalar(const Field& f, long n);
  Scalar(const Field& f, const mpq_class& q);

  Field field() const { return p_ == 0 ? Field::rationals() : Field::prime_field(p_); }
  uint32_t characteristic() const { return p_; }

  bool is_zero() const { return p_ == 0 ? q_ == 0 : v_ == 0; }
  bool is_one() const { return p_ == 0 ? q_ == 1 : v_ == 1; }
  bool is_integer() const;

  // Value as an exact rational (Q only).
  const mpq_class& rational() const;
  // Minimal non-negative representative (F_p only).
  int64_t residue() const;

  // The unique integer n with *this == n, as int64; requires is_integer()
  // over Q. Over F_p this is the minimal representative [n].
  int64_t integer_value() const;

  Scalar operator-() const;
  Scalar inv() const;
  Scalar pow(long e) const;

  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o);
  // *this += a*b without temporaries on the F_p path.
  void addmul(const Scalar& a, const Scalar& b);

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

  friend bool operator==(const Scalar& a, const Scalar& b);
  friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }
  // Total order used for canonical sorting of root multisets; over F_p this
  // is the representative order 0 < 1 < ... < p-1.
  friend bool operator<(const Scalar& a, const Scalar& b);

  std::string to_string() const;

  // Reduction Q -> F_p (denominator must be invertible mod p).
  static Scalar reduce_mod(const Scalar& q, const Field& fp);

 private:
  friend class Field;
  void check_same_field(const Scalar& o) const;

  uint32_t p_ = 0;
  int64_t v_ = 0;   // F_p value
  mpq_class q_;     // Q value
};

inline Scalar Field::zero() const { return Scalar(*this, 0); }
inline Scalar Field::one() const { return Scalar(*this, 1); }
inline Scalar Field::operator()(long n) const { return Scalar(*this, n); }
inline Scalar Field::half() const { return (*this)(1, 2); }

bool is_prime_u32(uint32_t n);

// All primes in [lo, hi).
std::vector<uint32_t> primes_in_range(uint32_t lo, uint32_t hi);

}  // namespace ytw
