#pragma once

#include <functional>
#include <memory>
#include <optional>

#include "liecore.hpp"
#include "poly.hpp"
#include "series.hpp"

namespace ytw {

// Truncated operator-valued series: coefficient k multiplies u^{-k}.
class OpSeries {
 public:
  OpSeries(const Field& f, int dim, int order);
  static OpSeries identity(const Field& f, int dim, int order);

  const Field& field() const { return field_; }
  int dim() const { return dim_; }
  int order() const { return static_cast<int>(coeffs_.size()) - 1; }
  const SpMat& coeff(int k) const { return coeffs_.at(k); }
  SpMat& coeff(int k) { return coeffs_.at(k); }

  friend OpSeries operator+(const OpSeries& a, const OpSeries& b);
  friend OpSeries operator-(const OpSeries& a, const OpSeries& b);
  friend OpSeries operator*(const OpSeries& a, const OpSeries& b);
  OpSeries operator*(const USeries& s) const;
  OpSeries operator*(const Scalar& c) const;
  OpSeries& operator+=(const OpSeries& o) { return *this = *this + o; }

  bool is_zero() const;
  // True iff every coefficient is c_k * Id; fills the scalar series.
  bool is_scalar(USeries* out = nullptr) const;
  // Extracts the scalar series under the assumption above; throws otherwise.
  USeries scalar_series() const;

 private:
  Field field_;
  int dim_;
  std::vector<SpMat> coeffs_;
};

// Vector-valued truncated series; used when long operator chains are
// applied columnwise.
using VecSeries = std::vector<DenseVec>;

VecSeries vec_series_zero(const Field& f, int dim, int order);
VecSeries apply_op_series(const std::vector<SpMat>& op, const VecSeries& x);

// u -> u + c on scalar series.
USeries useries_shift(const USeries& s, const Scalar& c, int order);
// u -> -u + c.
USeries useries_neg_shift(const USeries& s, const Scalar& c, int order);

// The matrix T(u) (or any operator-valued polynomial matrix in u^{-1}) on a
// concrete module: N x N entries, each a polynomial of bounded degree with
// operator coefficients. The constant term is the identity matrix for every
// T produced by evaluation and coproduct.
class OperatorMatrix {
 public:
  OperatorMatrix(std::shared_ptr<const GModule> module, int degree);

  int N() const { return module_->form().N(); }
  int dim() const { return module_->dim(); }
  int degree() const { return degree_; }
  const GModule& module() const { return *module_; }
  const std::shared_ptr<const GModule>& module_ptr() const { return module_; }

  // Signed indices; degree d in 0..degree(). Out-of-range degrees read as 0.
  const SpMat& coeff(int i, int j, int d) const;
  void add_coeff(int i, int j, int d, const SpMat& m);

  // t_{ij}(u + shift) as a truncated operator series.
  std::vector<SpMat> entry_series(int i, int j, const Scalar& shift, int order) const;
  // t_{ij}(-u): degree-d coefficient times (-1)^d; still polynomial.
  SpMat coeff_neg_u(int i, int j, int d) const;

 private:
  std::shared_ptr<const GModule> module_;
  int degree_;
  SpMat zero_;
  std::vector<std::vector<SpMat>> entries_;  // [pos_i*N+pos_j][d]
};

// Evaluation operators t_{ij}(u) = delta_ij + E_ij u^{-1}.
OperatorMatrix evaluation_T(std::shared_ptr<const GModule> module);

// Coproduct on two factors: t_{ij} = sum_a t_{ia} (x) t_{aj}; the module is
// the tensor product, degrees add.
OperatorMatrix tensor_T(const OperatorMatrix& a, const OperatorMatrix& b);

// T(u) -> f(u) T(u) for a polynomial f in u^{-1} with f(0) = 1.
OperatorMatrix rescale_T(const OperatorMatrix& t, const Poly& f_in_x);

struct CheckReport {
  bool ok = true;
  std::string detail;
};

// Exact ternary relation check, coefficientwise in (u^{-1}, v^{-1}) after
// clearing (u - v):
//   (u-v)[t_{ij}(u), t_{kl}(v)] = t_{kj}(u)t_{il}(v) - t_{kj}(v)t_{il}(u).
CheckReport check_ternary(const OperatorMatrix& T);

// T(u0) as a concrete matrix on (K^N) (x) M.
SpMat evaluate_T_at(const OperatorMatrix& T, const Scalar& u0);

// The same relation certified exactly by evaluation on an interpolation
// grid sized from the degree bounds (both sides are polynomial matrices
// after clearing, so vanishing on the grid is vanishing identically).
CheckReport check_ternary_at_points(const OperatorMatrix& T);

// Quantum determinant via the permutation sum (row or column form of the
// positive-characteristic proposition), for any permutation pi of I_N given
// as signed indices.
OpSeries qdet_permutation(const OperatorMatrix& T, const std::vector<int>& pi, bool row_form,
                          int order);
// Quantum determinant via A_N T_1(u) ... T_N(u-N+1) = A_N qdet T(u).
OpSeries qdet_antisym(const OperatorMatrix& T, int order);
// Scalar quantum determinant; asserts the operator is a scalar series.
USeries qdet_scalar(const OperatorMatrix& T, int order);

// Solves d(u)d(u-1)...d(u-N+1) = q for the unique series with constant term
// 1; requires N invertible in the field.
USeries dtilde_series(const USeries& qdet, int N);

// A singular line: joint kernel vector of the strictly upper triangular
// entries, with its module weight and the diagonal eigen-polynomials (in
// x = u^{-1}) of the requested diagonal entries.
struct SingularLine {
  DenseVec vector;
  std::vector<Scalar> weight;     // module g_n-weight of the line
  std::vector<Poly> diag_polys;   // one per requested diagonal index
};

// Generic triangular search over numerator coefficient matrices
// coeff(i,j,d): joint kernel of all (i,j) with pos_i < pos_j, d = 1..degree,
// split into weight lines; each line must be a joint eigenvector of the
// diagonal entries. `only_weight` restricts the search to one weight space.
std::vector<SingularLine> singular_lines(
    const GModule& module, const std::function<const SpMat&(int, int, int)>& coeff, int degree,
    const std::vector<int>& diag_indices,
    const std::optional<std::vector<Scalar>>& only_weight = std::nullopt,
    bool group_by_gl_weight = false);

// gl-mode singular vectors of T: diagonal components for all i in I_N.
std::vector<SingularLine> singular_vectors_gl(const OperatorMatrix& T);

}  // namespace ytw
