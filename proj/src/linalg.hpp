#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "scalar.hpp"

namespace ytw {

using DenseVec = std::vector<Scalar>;

// Sparse matrix with exact entries, sorted rows, no explicit zeros. All the
// module action matrices and tensor-leg operators live here.
class SpMat {
 public:
  SpMat() = default;
  SpMat(const Field& f, int rows, int cols);
  static SpMat identity(const Field& f, int n);
  static SpMat single(const Field& f, int rows, int cols, int i, int j, const Scalar& v);

  const Field& field() const { return field_; }
  int rows() const { return rows_; }
  int cols() const { return cols_; }
  int nnz() const;
  bool is_zero() const;

  void add_entry(int i, int j, const Scalar& v);
  Scalar get(int i, int j) const;
  const std::vector<std::pair<int, Scalar>>& row(int i) const { return rows_data_[i]; }

  SpMat operator-() const;
  // In-place *this += c * o (row-wise merge, no full copies).
  void add_scaled(const SpMat& o, const Scalar& c);
  friend SpMat operator+(const SpMat& a, const SpMat& b);
  friend SpMat operator-(const SpMat& a, const SpMat& b);
  friend SpMat operator*(const SpMat& a, const SpMat& b);
  SpMat operator*(const Scalar& c) const;
  SpMat& operator+=(const SpMat& o) { return *this = *this + o; }

  SpMat kron(const SpMat& b) const;
  SpMat transpose() const;

  DenseVec apply(const DenseVec& x) const;
  // y += c * (A x)
  void apply_accum(DenseVec& y, const Scalar& c, const DenseVec& x) const;

  friend bool operator==(const SpMat& a, const SpMat& b);
  friend bool operator!=(const SpMat& a, const SpMat& b) { return !(a == b); }

 private:
  Field field_;
  int rows_ = 0, cols_ = 0;
  std::vector<std::vector<std::pair<int, Scalar>>> rows_data_;
};

SpMat commutator(const SpMat& a, const SpMat& b);

DenseVec dense_zero(const Field& f, int n);
bool is_zero_vec(const DenseVec& v);
DenseVec scale_vec(const DenseVec& v, const Scalar& c);

// In-place reduced row echelon form; returns the pivot columns.
std::vector<int> rref(std::vector<DenseVec>& m, const Field& f);

int rank_of(std::vector<DenseVec> m, const Field& f);

// Basis of the right kernel of the matrix whose rows are `rows` (each of
// length `cols`).
std::vector<DenseVec> kernel_basis(std::vector<DenseVec> rows, int cols, const Field& f);

// Solves sum_i x_i * basis[i] = target exactly; nullopt if target is not in
// the span.
std::optional<DenseVec> coordinates_in_span(const std::vector<DenseVec>& basis,
                                            const DenseVec& target, const Field& f);

// Maintains a row-reduced spanning set; add() reports whether the vector
// enlarged the span.
class SpanBuilder {
 public:
  SpanBuilder(const Field& f, int dim) : field_(f), dim_(dim) {}
  bool add(DenseVec v);
  const std::vector<DenseVec>& reduced_basis() const { return basis_; }
  const std::vector<DenseVec>& original_vectors() const { return originals_; }
  int size() const { return static_cast<int>(basis_.size()); }

 private:
  Field field_;
  int dim_;
  std::vector<DenseVec> basis_;      // row-reduced
  std::vector<int> pivots_;
  std::vector<DenseVec> originals_;  // the vectors that enlarged the span
};

}  // namespace ytw
