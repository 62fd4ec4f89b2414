#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "linalg.hpp"
#include "scalar.hpp"

namespace ytw {

enum class Flavor { Orthogonal, Symplectic };

Flavor parse_flavor(std::string_view s);  // "o" | "sp"
std::string flavor_name(Flavor f);

// Signed index set I_N = {-n,...,-1,1,...,n} mapped onto positions 0..N-1 in
// the order -n,...,-1,1,...,n.
inline int pos_of(int i, int n) { return i < 0 ? i + n : i + n - 1; }
inline int idx_of(int pos, int n) { return pos < n ? pos - n : pos - n + 1; }
inline int sgn_idx(int i) { return i < 0 ? -1 : 1; }

// The bilinear form G, the signs theta, and the global +/- convention of the
// paper: (+) orthogonal, (-) symplectic.
class FormData {
 public:
  FormData(Flavor flavor, int n);

  Flavor flavor() const { return flavor_; }
  int n() const { return n_; }
  int N() const { return 2 * n_; }
  friend bool operator==(const FormData& a, const FormData& b) {
    return a.flavor_ == b.flavor_ && a.n_ == b.n_;
  }
  // g_{ij} = delta_{i,-j} (orthogonal) or delta_{i,-j} sgn i (symplectic).
  int g_entry(int i, int j) const;
  // theta_{ij} = 1 (orthogonal) or sgn i sgn j (symplectic).
  int theta(int i, int j) const;
  // +1 orthogonal, -1 symplectic.
  int pm() const { return flavor_ == Flavor::Orthogonal ? 1 : -1; }

  SpMat g_matrix(const Field& f) const;
  SpMat g_inverse_matrix(const Field& f) const;

 private:
  Flavor flavor_;
  int n_;
};

// A' := G^{-1} A^t G, entrywise a'_{ij} = theta_{ij} a_{-j,-i}.
SpMat prime_transpose(const SpMat& a, const FormData& form);

using IntWeight = std::vector<int64_t>;  // g_n weight, length n

bool is_dominant_gl(const std::vector<int64_t>& lambda);  // length N, descending
bool is_dominant_gn(Flavor flavor, const IntWeight& lambda);

// Exact alcove membership 0 <= <lambda+rho, alpha^vee> < p' for all positive
// roots; p = 0 means characteristic zero (p' = infinity). Rejects
// non-dominant weights.
bool in_fundamental_alcove(Flavor flavor, const IntWeight& lambda, uint32_t p);
// The sufficient bound of the lemma: -2 lambda_n + 2n < p.
bool alcove_lemma_bound(const IntWeight& lambda, uint32_t p);

int64_t weyl_dimension(Flavor flavor, const IntWeight& lambda);

// Partial order on g_n-weights: mu <= lambda iff lambda - mu is a
// nonnegative rational combination of simple roots. Rational field only.
bool dominance_leq(Flavor flavor, const std::vector<Scalar>& mu, const std::vector<Scalar>& lambda);

enum class ActionKind { Gl, Gn };

// A concrete module: explicit basis, sparse generator matrices, weight
// grading. Gl modules store the E_{ij}; Gn modules store only the F_{ij}
// (the o_2 one-dimensional V(gamma) has no gl-action at all). Immutable
// after construction.
class GModule {
 public:
  const Field& field() const { return field_; }
  const FormData& form() const { return form_; }
  ActionKind kind() const { return kind_; }
  int dim() const { return dim_; }
  const std::string& name() const { return name_; }
  void set_name(std::string s) { name_ = std::move(s); }

  // Signed indices. E is Gl-only; F works for both kinds.
  const SpMat& E(int i, int j) const;
  SpMat F(int i, int j) const;

  // g_n-weight of a basis vector (length n).
  const std::vector<Scalar>& g_weight(int basis_index) const { return gweights_.at(basis_index); }
  // gl-weight (length N), Gl modules only.
  const std::vector<Scalar>& gl_weight(int basis_index) const;

  // Exhaustive bracket check [X_ij, X_kl] on all generators; X = E for Gl
  // kind, X = F for Gn kind. Used by tests and negative controls.
  bool check_brackets() const;
  // Every E_ij (resp. F_ij) shifts g-weights by eps_i - eps_j (image of the
  // gl-root); checked on the grading.
  bool check_weight_grading() const;

  friend GModule power_module_impl(const GModule& base, int k, bool wedge);
  friend GModule gl_natural(const Field& f, const FormData& form);
  friend GModule gl_dual(const Field& f, const FormData& form);
  friend GModule gl_one_dimensional(const Field& f, const FormData& form, const Scalar& c);
  friend GModule gn_natural(const Field& f, const FormData& form);
  friend GModule gn_trivial(const Field& f, const FormData& form);
  friend GModule o2_one_dimensional(const Field& f, const Scalar& gamma);
  friend GModule tensor_product(const GModule& a, const GModule& b);
  friend GModule sym_power(const GModule& m, int k);
  friend GModule wedge_power(const GModule& m, int k);
  friend GModule highest_weight_submodule(const GModule& parent, const std::vector<Scalar>& weight,
                                          ActionKind mode, bool allow_outside_alcove);

 private:
  GModule(const Field& f, const FormData& form, ActionKind kind, int dim)
      : field_(f), form_(form), kind_(kind), dim_(dim) {}
  SpMat& gen(int i, int j) { return act_[pos_of(i, form_.n()) * form_.N() + pos_of(j, form_.n())]; }
  const SpMat& gen(int i, int j) const {
    return act_[pos_of(i, form_.n()) * form_.N() + pos_of(j, form_.n())];
  }

  Field field_;
  FormData form_;
  ActionKind kind_;
  int dim_;
  std::string name_;
  std::vector<SpMat> act_;  // N*N generator matrices (E or F by kind)
  std::vector<std::vector<Scalar>> gweights_;
  std::vector<std::vector<Scalar>> glweights_;  // Gl kind only
};

GModule gl_natural(const Field& f, const FormData& form);
GModule gl_dual(const Field& f, const FormData& form);
GModule gl_one_dimensional(const Field& f, const FormData& form, const Scalar& c);
GModule gn_natural(const Field& f, const FormData& form);
GModule gn_trivial(const Field& f, const FormData& form);
GModule o2_one_dimensional(const Field& f, const Scalar& gamma);
GModule tensor_product(const GModule& a, const GModule& b);
GModule sym_power(const GModule& m, int k);
GModule wedge_power(const GModule& m, int k);

// Cyclic span of a singular vector of the given weight under the lowering
// operators, with all generators restricted to it. `mode` selects which
// triangular family defines singular/lowering (E for Gl, F for Gn); the
// weight is a gl-weight (length N) in Gl mode and a g_n-weight (length n)
// in Gn mode. In characteristic p the target weight must lie in the
// fundamental alcove unless allow_outside_alcove is set.
GModule highest_weight_submodule(const GModule& parent, const std::vector<Scalar>& weight,
                                 ActionKind mode, bool allow_outside_alcove = false);

// Builds the simple gl_N-module L(lambda) for a dominant weight given as an
// integer vector plus a scalar shift on every entry: lambda = base + c*(1..1).
// Realized as a highest-weight submodule of a tensor of wedge powers of the
// natural module twisted by a one-dimensional character.
GModule gl_highest_weight_module(const Field& f, const FormData& form, const IntWeight& base,
                                 const Scalar& shift, bool allow_outside_alcove = false);

// Simple g_n-module V(lambda) for a dominant integral g_n-weight; built from
// wedge powers of the natural module (o_2: the one-dimensional V(gamma)).
GModule gn_highest_weight_module(const Field& f, const FormData& form, const IntWeight& lambda,
                                 bool allow_outside_alcove = false);

}  // namespace ytw
