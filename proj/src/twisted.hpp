#pragma once

#include "factored.hpp"
#include "rtt.hpp"

namespace ytw {

// S(u) on a module, kept as cleared numerators over a scalar denominator:
// S(u) = num(u)/den(u), den a polynomial in x = u^{-1} with constant term 1
// (the (1 +/- (1/2)u^{-1}) of the evaluation homomorphism; 1 for images of
// T(u)T'(-u)). The constant term of num equals den(0) = 1 times the
// identity, so S(u) = Id + O(u^{-1}).
class TwistedOperatorMatrix {
 public:
  TwistedOperatorMatrix(std::shared_ptr<const GModule> module, int degree, Poly denom_x);

  int N() const { return module_->form().N(); }
  int dim() const { return module_->dim(); }
  int degree() const { return degree_; }
  const GModule& module() const { return *module_; }
  const std::shared_ptr<const GModule>& module_ptr() const { return module_; }
  const FormData& form() const { return module_->form(); }
  const Poly& denom() const { return denom_; }

  const SpMat& num_coeff(int i, int j, int d) const;
  void add_num_coeff(int i, int j, int d, const SpMat& m);

  // s_{ij}(u + shift) as a truncated operator series (numerator divided by
  // the denominator).
  std::vector<SpMat> entry_series(int i, int j, const Scalar& shift, int order) const;

 private:
  std::shared_ptr<const GModule> module_;
  int degree_;
  Poly denom_;
  SpMat zero_;
  std::vector<std::vector<SpMat>> num_;
};

// S(u) = T(u) T'(-u): s_{ij}(u) = sum_a theta_{aj} t_{ia}(u) t_{-j,-a}(-u).
TwistedOperatorMatrix twisted_S(const OperatorMatrix& T);

// Twisted evaluation on a g_n-module: s_{ij}(u) = delta_ij + F_ij (u +/- 1/2)^{-1},
// cleared to (delta_ij (1 +/- (1/2)x) + F_ij x) / (1 +/- (1/2)x).
TwistedOperatorMatrix twisted_eval(std::shared_ptr<const GModule> gn_module);

// Coideal coproduct on (gl-tensor) (x) (g-module):
//   s_{ij}(u) = sum_{a,b} theta_{bj} t_{ia}(u) t_{-j,-b}(-u) (x) s_{ab}(u).
TwistedOperatorMatrix mixed_tensor(const OperatorMatrix& T, const TwistedOperatorMatrix& S);

// The sharp automorphism of Y(o_2n): swap indices 1 <-> -1 in both slots.
TwistedOperatorMatrix sharp(const TwistedOperatorMatrix& S);

// S(u) -> g(u) S(u) for an even polynomial g in u^{-1}, g(0) = 1.
TwistedOperatorMatrix rescale_S(const TwistedOperatorMatrix& S, const Poly& even_g);

// Symmetry relation S'(-u) = S(u) +/- (S(u) - S(-u))/(2u), exactly, after
// clearing 2u den(u) den(-u).
CheckReport check_symmetry(const TwistedOperatorMatrix& S);

// Quaternary relation R(u-v) S_1(u) R'(-u-v) S_2(v) = S_2(v) R'(-u-v) S_1(u)
// R(u-v), exactly, after clearing (u-v)(-u-v) den(u) den(v).
CheckReport check_quaternary(const TwistedOperatorMatrix& S);

// S(u0) as a concrete matrix on K^N (x) M (denominator evaluated).
SpMat evaluate_S_at(const TwistedOperatorMatrix& S, const Scalar& u0);

// The same relations certified exactly by evaluation on interpolation grids
// sized from the degree bounds.
CheckReport check_quaternary_at_points(const TwistedOperatorMatrix& S);
CheckReport check_symmetry_at_points(const TwistedOperatorMatrix& S);

// Coefficientwise quaternary check through the componentized form of the
// relation (entry products on the module only); the fast path for N = 4.
CheckReport check_quaternary_components(const TwistedOperatorMatrix& S);

// alpha_N(u): 1 (orthogonal) or (2u+1)/(2u-N+1) (symplectic).
FactoredRational alpha_factor(const Field& f, const FormData& form);

// Sklyanin determinant via A_N <S_1,...,S_N> = A_N sdet S(u).
OpSeries sdet_operator(const TwistedOperatorMatrix& S, int order);
USeries sdet_scalar(const TwistedOperatorMatrix& S, int order);

// Hand-derived N = 2 closed form (the permutation-style formula):
//   sdet = s_{-1,-1}(u) s_{11}(u-1) - s_{1,-1}(u) s_{-1,1}(u-1)
//          - [s_{-1,-1}(u) s_{11}(u-1) - theta_{1,-1} s_{11}(u) s_{11}(u-1)]/(2u-1) * (-1)
// (the last term divided by (-2u+1)); used as an independent cross-check.
OpSeries sdet_n2_closed_form(const TwistedOperatorMatrix& S, int order);

// beta_N from A_N <I_1,...,I_N> = A_N beta_N(u), as a series and as exact
// evaluations at sample points; both must match alpha_N.
USeries beta_series(const Field& f, const FormData& form, int order);
bool beta_matches_alpha_at_points(const Field& f, const FormData& form,
                                  const std::vector<Scalar>& samples);

// alpha_N(-u+N-1) sdet(u) = alpha_N(u) sdet(-u+N-1), and odd coefficients
// solved from the even ones via that identity.
bool check_alpha_parity(const USeries& sdet, const FormData& form);
bool odd_coeffs_determined_by_even(const USeries& sdet, const FormData& form);

struct TwistedHighestWeight {
  DenseVec vector;
  std::vector<Scalar> g_weight;
  std::vector<FactoredRational> mu;  // components i = 1..n
};

// Twisted-mode singular lines: joint kernel of the upper s_{ij}(u)
// coefficients, with mu_i(u) extracted as exact factored rationals.
std::vector<TwistedHighestWeight> twisted_singular_lines(
    const TwistedOperatorMatrix& S,
    const std::optional<std::vector<Scalar>>& only_weight = std::nullopt);

// The symmetry relation forces s_{-i,-i}(u) xi = [s_{ii}(-u) +/- (s_{ii}(u)
// - s_{ii}(-u))/(2u)] xi on a highest vector; verified per line.
bool check_negative_diag_series(const TwistedOperatorMatrix& S, const TwistedHighestWeight& line,
                                int order);

struct ZhcReport {
  bool factorization_ok = false;
  bool centrality_ok = false;
  bool invariance_ok = false;
  std::string detail;
  bool ok() const { return factorization_ok && centrality_ok && invariance_ok; }
};

// The Z_HC / SY decomposition checks on the module of T:
//  (a) alpha_N^{-1} sdet = prod_i dtilde(u-i) dtilde(-u+i),
//  (b) sdet coefficients are central,
//  (c) (dtilde(u)dtilde(-u))^{-1} s_{ij}(u) is invariant under T -> f(u)T.
ZhcReport zhc_decomposition_check(const OperatorMatrix& T, int order);

}  // namespace ytw
