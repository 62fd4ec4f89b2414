#pragma once

#include <array>
#include <vector>

#include "liecore.hpp"
#include "linalg.hpp"
#include "mpoly.hpp"

namespace ytw {

// The flip P on K^N (x) K^N.
SpMat flip_matrix(const Field& f, int N);

// P' = G_1^{-1} P^{t_1} G_1 = sum_{ij} theta_{ij} E_{ij} (x) E_{-i,-j}.
SpMat flip_prime_matrix(const Field& f, const FormData& form);

// R(u) = 1 - P/u and R'(u) = 1 - P'/u at a scalar point u != 0.
SpMat r_matrix_at(const Field& f, int N, const Scalar& u);
SpMat r_prime_matrix_at(const Field& f, const FormData& form, const Scalar& u);

// Embeds a two-leg operator (N^2 x N^2) into legs (i,j) of (K^N)^{(x)m};
// the operator's first slot acts on leg i, second on leg j (0-based).
SpMat embed_two_leg(const SpMat& op, int N, int m, int leg_i, int leg_j);

// Embeds a one-leg operator (N x N) into leg i of (K^N)^{(x)m}.
SpMat embed_one_leg(const SpMat& op, int N, int m, int leg);

// A_m = sum_sigma sgn(sigma) sigma on (K^N)^{(x)m}; requires m! != 0 in the
// field.
SpMat antisymmetrizer(const Field& f, int m, int N);

// R(u_1,...,u_m) = (R_{m-1,m})(R_{m-2,m}R_{m-2,m-1})...(R_{1m}...R_{12}) at
// scalar points; all pairwise differences must be nonzero.
SpMat fused_R(const Field& f, int N, const std::vector<Scalar>& points);
// The companion order (R_{12}...R_{1m})...(R_{m-1,m}).
SpMat fused_R_reversed(const Field& f, int N, const std::vector<Scalar>& points);

// Formal fused products with every factor cleared by its own denominator
// (u_i - u_j), so both orders share the clearing factor prod_{i<j}(u_i-u_j).
MPolyMat fused_R_formal(const Field& f, int N, int m, bool reversed);

enum class YBVariant { Plain, Transposed, FinalTransposed };

YBVariant parse_yb_variant(std::string_view s);

// Exact Yang-Baxter check at scalar points (u1,u2,u3); set negate_control to
// flip the sign of P (a deliberate failure probe).
bool check_yang_baxter(const Field& f, const FormData& form, YBVariant v,
                       const std::array<Scalar, 3>& points, bool negate_control = false);

// The same identity as polynomial matrices after clearing denominators.
bool check_yang_baxter_formal(const Field& f, const FormData& form, YBVariant v);

}  // namespace ytw
