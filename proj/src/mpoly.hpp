#pragma once

#include <array>
#include <map>
#include <sstream>
#include <vector>

#include "linalg.hpp"
#include "scalar.hpp"

namespace ytw {

// Sparse multivariate polynomial in up to 4 formal variables, used for the
// identity-in-u checks on R-matrix products after clearing denominators.
class MPoly {
 public:
  using Expo = std::array<int, 4>;

  explicit MPoly(const Field& f) : field_(f) {}
  static MPoly constant(const Scalar& c);
  static MPoly variable(const Field& f, int i);

  const Field& field() const { return field_; }
  bool is_zero() const { return terms_.empty(); }

  MPoly operator-() const;
  friend MPoly operator+(const MPoly& a, const MPoly& b);
  friend MPoly operator-(const MPoly& a, const MPoly& b);
  friend MPoly operator*(const MPoly& a, const MPoly& b);
  MPoly& operator+=(const MPoly& o) { return *this = *this + o; }
  MPoly& operator*=(const MPoly& o) { return *this = *this * o; }

  friend bool operator==(const MPoly& a, const MPoly& b) { return (a - b).is_zero(); }
  friend bool operator!=(const MPoly& a, const MPoly& b) { return !(a == b); }

  Scalar eval(const std::vector<Scalar>& point) const;
  std::string to_string() const;

 private:
  void add_term(const Expo& e, const Scalar& c);

  Field field_;
  std::map<Expo, Scalar> terms_;
};

// Dense matrix over MPoly; only needed at small sizes (N^m for m <= 3).
class MPolyMat {
 public:
  MPolyMat(const Field& f, int rows, int cols);
  static MPolyMat identity(const Field& f, int n);
  // Lift a scalar matrix to constant polynomial entries.
  static MPolyMat lift(const SpMat& m);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  MPoly& at(int i, int j) { return data_[i * cols_ + j]; }
  const MPoly& at(int i, int j) const { return data_[i * cols_ + j]; }

  friend MPolyMat operator+(const MPolyMat& a, const MPolyMat& b);
  friend MPolyMat operator-(const MPolyMat& a, const MPolyMat& b);
  friend MPolyMat operator*(const MPolyMat& a, const MPolyMat& b);
  MPolyMat scaled(const MPoly& c) const;

  bool is_zero() const;
  friend bool operator==(const MPolyMat& a, const MPolyMat& b) { return (a - b).is_zero(); }

 private:
  Field field_;
  int rows_, cols_;
  std::vector<MPoly> data_;
};

}  // namespace ytw
