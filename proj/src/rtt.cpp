#include "rtt.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

#include "rmatrix.hpp"

namespace ytw {

OpSeries::OpSeries(const Field& f, int dim, int order) : field_(f), dim_(dim) {
  if (order < 0) throw math_error("series order must be >= 0");
  coeffs_.assign(order + 1, SpMat(f, dim, dim));
}

OpSeries OpSeries::identity(const Field& f, int dim, int order) {
  OpSeries s(f, dim, order);
  s.coeffs_[0] = SpMat::identity(f, dim);
  return s;
}

OpSeries operator+(const OpSeries& a, const OpSeries& b) {
  OpSeries s(a.field_, a.dim_, std::min(a.order(), b.order()));
  for (int k = 0; k <= s.order(); ++k) s.coeffs_[k] = a.coeffs_[k] + b.coeffs_[k];
  return s;
}

OpSeries operator-(const OpSeries& a, const OpSeries& b) {
  OpSeries s(a.field_, a.dim_, std::min(a.order(), b.order()));
  for (int k = 0; k <= s.order(); ++k) s.coeffs_[k] = a.coeffs_[k] - b.coeffs_[k];
  return s;
}

OpSeries operator*(const OpSeries& a, const OpSeries& b) {
  OpSeries s(a.field_, a.dim_, std::min(a.order(), b.order()));
  for (int i = 0; i <= s.order(); ++i) {
    if (a.coeffs_[i].is_zero()) continue;
    for (int j = 0; i + j <= s.order(); ++j) {
      if (b.coeffs_[j].is_zero()) continue;
      s.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
  }
  return s;
}

OpSeries OpSeries::operator*(const USeries& sc) const {
  OpSeries s(field_, dim_, std::min(order(), sc.order()));
  for (int i = 0; i <= s.order(); ++i) {
    if (coeffs_[i].is_zero()) continue;
    for (int j = 0; i + j <= s.order(); ++j) {
      if (sc.coeff(j).is_zero()) continue;
      s.coeffs_[i + j] += coeffs_[i] * sc.coeff(j);
    }
  }
  return s;
}

OpSeries OpSeries::operator*(const Scalar& c) const {
  OpSeries s = *this;
  for (SpMat& m : s.coeffs_) m = m * c;
  return s;
}

bool OpSeries::is_zero() const {
  for (const SpMat& m : coeffs_)
    if (!m.is_zero()) return false;
  return true;
}

bool OpSeries::is_scalar(USeries* out) const {
  USeries s(field_, order());
  for (int k = 0; k <= order(); ++k) {
    Scalar c = coeffs_[k].get(0, 0);
    if (coeffs_[k] != SpMat::identity(field_, dim_) * c) return false;
    s.set_coeff(k, c);
  }
  if (out) *out = s;
  return true;
}

USeries OpSeries::scalar_series() const {
  USeries s(field_, order());
  if (!is_scalar(&s)) throw math_error("operator series is not scalar");
  return s;
}

VecSeries vec_series_zero(const Field& f, int dim, int order) {
  return VecSeries(order + 1, dense_zero(f, dim));
}

VecSeries apply_op_series(const std::vector<SpMat>& op, const VecSeries& x) {
  int order = static_cast<int>(x.size()) - 1;
  const Field& f = op.at(0).field();
  VecSeries y = vec_series_zero(f, op[0].rows(), order);
  int opdeg = static_cast<int>(op.size()) - 1;
  for (int d = 0; d <= std::min(opdeg, order); ++d) {
    if (op[d].is_zero()) continue;
    for (int k = 0; d + k <= order; ++k) op[d].apply_accum(y[d + k], f.one(), x[k]);
  }
  return y;
}

USeries useries_shift(const USeries& s, const Scalar& c, int order) {
  const Field& f = s.field();
  USeries out(f, order);
  for (int k = 0; k <= std::min(order, s.order()); ++k) {
    if (s.coeff(k).is_zero()) continue;
    USeries pw = expand_shifted_inverse_pow(c, k, order);
    out += pw * s.coeff(k);
  }
  return out;
}

USeries useries_neg_shift(const USeries& s, const Scalar& c, int order) {
  // (-u+c)^{-k} = (-1)^k (u-c)^{-k}
  const Field& f = s.field();
  USeries out(f, order);
  for (int k = 0; k <= std::min(order, s.order()); ++k) {
    if (s.coeff(k).is_zero()) continue;
    USeries pw = expand_shifted_inverse_pow(-c, k, order);
    Scalar sign = (k % 2 == 0) ? f.one() : -f.one();
    out += pw * (s.coeff(k) * sign);
  }
  return out;
}

OperatorMatrix::OperatorMatrix(std::shared_ptr<const GModule> module, int degree)
    : module_(std::move(module)), degree_(degree), zero_(module_->field(), module_->dim(), module_->dim()) {
  int N = module_->form().N();
  entries_.assign(static_cast<size_t>(N) * N,
                  std::vector<SpMat>(degree + 1, SpMat(module_->field(), dim(), dim())));
}

const SpMat& OperatorMatrix::coeff(int i, int j, int d) const {
  if (d < 0 || d > degree_) return zero_;
  int n = module_->form().n();
  return entries_[pos_of(i, n) * N() + pos_of(j, n)][d];
}

void OperatorMatrix::add_coeff(int i, int j, int d, const SpMat& m) {
  int n = module_->form().n();
  auto& e = entries_[pos_of(i, n) * N() + pos_of(j, n)][d];
  e = e + m;
}

std::vector<SpMat> OperatorMatrix::entry_series(int i, int j, const Scalar& shift, int order) const {
  const Field& f = module_->field();
  std::vector<SpMat> out(order + 1, SpMat(f, dim(), dim()));
  for (int d = 0; d <= degree_; ++d) {
    const SpMat& a = coeff(i, j, d);
    if (a.is_zero()) continue;
    if (shift.is_zero()) {
      if (d <= order) out[d] = out[d] + a;
      continue;
    }
    USeries pw = expand_shifted_inverse_pow(shift, d, order);
    for (int k = d; k <= order; ++k)
      if (!pw.coeff(k).is_zero()) out[k] = out[k] + a * pw.coeff(k);
  }
  return out;
}

SpMat OperatorMatrix::coeff_neg_u(int i, int j, int d) const {
  const SpMat& a = coeff(i, j, d);
  return d % 2 == 0 ? a : -a;
}

OperatorMatrix evaluation_T(std::shared_ptr<const GModule> module) {
  if (module->kind() != ActionKind::Gl) throw math_error("evaluation_T needs a gl-module");
  const Field& f = module->field();
  int n = module->form().n();
  OperatorMatrix t(module, 1);
  SpMat id = SpMat::identity(f, module->dim());
  for (int i = -n; i <= n; ++i) {
    if (i == 0) continue;
    for (int j = -n; j <= n; ++j) {
      if (j == 0) continue;
      if (i == j) t.add_coeff(i, j, 0, id);
      t.add_coeff(i, j, 1, module->E(i, j));
    }
  }
  return t;
}

OperatorMatrix tensor_T(const OperatorMatrix& a, const OperatorMatrix& b) {
  auto module = std::make_shared<GModule>(tensor_product(a.module(), b.module()));
  int n = module->form().n();
  OperatorMatrix t(module, a.degree() + b.degree());
  for (int i = -n; i <= n; ++i) {
    if (i == 0) continue;
    for (int j = -n; j <= n; ++j) {
      if (j == 0) continue;
      for (int k = -n; k <= n; ++k) {
        if (k == 0) continue;
        for (int da = 0; da <= a.degree(); ++da) {
          const SpMat& xa = a.coeff(i, k, da);
          if (xa.is_zero()) continue;
          for (int db = 0; db <= b.degree(); ++db) {
            const SpMat& xb = b.coeff(k, j, db);
            if (xb.is_zero()) continue;
            t.add_coeff(i, j, da + db, xa.kron(xb));
          }
        }
      }
    }
  }
  return t;
}

OperatorMatrix rescale_T(const OperatorMatrix& t, const Poly& f_in_x) {
  if (f_in_x.is_zero() || !f_in_x.coeff(0).is_one())
    throw math_error("rescale_T needs f with constant term 1");
  int n = t.module().form().n();
  OperatorMatrix out(t.module_ptr(), t.degree() + f_in_x.degree());
  for (int i = -n; i <= n; ++i)
    for (int j = -n; j <= n; ++j) {
      if (!i || !j) continue;
      for (int d = 0; d <= t.degree(); ++d) {
        const SpMat& a = t.coeff(i, j, d);
        if (a.is_zero()) continue;
        for (int k = 0; k <= f_in_x.degree(); ++k) {
          Scalar c = f_in_x.coeff(k);
          if (!c.is_zero()) out.add_coeff(i, j, d + k, a * c);
        }
      }
    }
  return out;
}

CheckReport check_ternary(const OperatorMatrix& T) {
  int n = T.module().form().n();
  int D = T.degree();
  auto idx = [&](int s) { return idx_of(s, n); };
  for (int pi = 0; pi < T.N(); ++pi)
    for (int pj = 0; pj < T.N(); ++pj)
      for (int pk = 0; pk < T.N(); ++pk)
        for (int pl = 0; pl < T.N(); ++pl) {
          int i = idx(pi), j = idx(pj), k = idx(pk), l = idx(pl);
          for (int a = 0; a <= D + 1; ++a)
            for (int b = 0; b <= D + 1; ++b) {
              // (u-v)[t_ij(u), t_kl(v)] - t_kj(u)t_il(v) + t_kj(v)t_il(u),
              // coefficient of u^{-a} v^{-b}.
              SpMat r = commutator(T.coeff(i, j, a + 1), T.coeff(k, l, b)) -
                        commutator(T.coeff(i, j, a), T.coeff(k, l, b + 1)) -
                        T.coeff(k, j, a) * T.coeff(i, l, b) +
                        T.coeff(k, j, b) * T.coeff(i, l, a);
              if (!r.is_zero()) {
                std::ostringstream os;
                os << "ternary residual at (i,j,k,l)=(" << i << "," << j << "," << k << "," << l
                   << "), coefficient u^-" << a << " v^-" << b;
                return {false, os.str()};
              }
            }
        }
  return {true, ""};
}

SpMat evaluate_T_at(const OperatorMatrix& T, const Scalar& u0) {
  const Field& f = T.module().field();
  if (u0.is_zero()) throw math_error("evaluation at u = 0");
  int N = T.N(), n = T.module().form().n();
  Scalar x0 = u0.inv();
  SpMat out(f, N * T.dim(), N * T.dim());
  for (int i = -n; i <= n; ++i) {
    if (!i) continue;
    for (int j = -n; j <= n; ++j) {
      if (!j) continue;
      SpMat acc(f, T.dim(), T.dim());
      Scalar xp = f.one();
      for (int d = 0; d <= T.degree(); ++d) {
        acc = acc + T.coeff(i, j, d) * xp;
        xp *= x0;
      }
      if (acc.is_zero()) continue;
      SpMat leg = SpMat::single(f, N, N, pos_of(i, n), pos_of(j, n), f.one());
      out = out + leg.kron(acc);
    }
  }
  return out;
}

CheckReport check_ternary_at_points(const OperatorMatrix& T) {
  const Field& f = T.module().field();
  int N = T.N();
  int count = T.degree() + 4;
  // v0 > u0 > 0 keeps u - v away from zero, also mod p when p comfortably
  // exceeds the grid span.
  long base_u = 2, base_v = count + 3;
  if (f.characteristic() > 0 && static_cast<long>(f.characteristic()) <= 4 * count + 10)
    throw math_error("characteristic too small for the sampling grid");
  SpMat p = flip_matrix(f, N).kron(SpMat::identity(f, T.dim()));
  SpMat id = SpMat::identity(f, N * N * T.dim());
  for (int a = 0; a < count; ++a)
    for (int b = 0; b < count; ++b) {
      Scalar u0 = f(base_u + a), v0 = f(base_v + b);
      Scalar w = u0 - v0;
      SpMat r = id - p * w.inv();
      SpMat T1(f, N * N * T.dim(), N * N * T.dim());
      SpMat T2(f, N * N * T.dim(), N * N * T.dim());
      {
        int n = T.module().form().n();
        Scalar x0 = u0.inv(), y0 = v0.inv();
        for (int i = -n; i <= n; ++i) {
          if (!i) continue;
          for (int j = -n; j <= n; ++j) {
            if (!j) continue;
            SpMat acc_u(f, T.dim(), T.dim()), acc_v(f, T.dim(), T.dim());
            Scalar xp = f.one(), yp = f.one();
            for (int d = 0; d <= T.degree(); ++d) {
              acc_u = acc_u + T.coeff(i, j, d) * xp;
              acc_v = acc_v + T.coeff(i, j, d) * yp;
              xp *= x0;
              yp *= y0;
            }
            SpMat unit = SpMat::single(f, N, N, pos_of(i, n), pos_of(j, n), f.one());
            if (!acc_u.is_zero())
              T1 = T1 + unit.kron(SpMat::identity(f, N)).kron(acc_u);
            if (!acc_v.is_zero())
              T2 = T2 + SpMat::identity(f, N).kron(unit).kron(acc_v);
          }
        }
      }
      SpMat lhs = r * (T1 * T2);
      SpMat rhs = (T2 * T1) * r;
      if (lhs != rhs) {
        std::ostringstream os;
        os << "ternary residual at sample (u,v)=(" << u0.to_string() << "," << v0.to_string()
           << ")";
        return {false, os.str()};
      }
    }
  return {true, "certified on a " + std::to_string(count) + "^2 grid"};
}

namespace {

int perm_sign_positions(const std::vector<int>& perm) {
  int inv = 0;
  for (size_t i = 0; i < perm.size(); ++i)
    for (size_t j = i + 1; j < perm.size(); ++j)
      if (perm[i] > perm[j]) ++inv;
  return inv % 2 == 0 ? 1 : -1;
}

}  // namespace

OpSeries qdet_permutation(const OperatorMatrix& T, const std::vector<int>& pi, bool row_form,
                          int order) {
  const Field& f = T.module().field();
  int N = T.N(), n = T.module().form().n();
  if (N > 4) throw math_error("permutation-sum qdet supported for N <= 4");
  if (static_cast<int>(pi.size()) != N) throw math_error("pi must list all signed indices");
  std::vector<int> pi_pos(N);
  for (int s = 0; s < N; ++s) pi_pos[s] = pos_of(pi[s], n);
  int sgn_pi = perm_sign_positions(pi_pos);
  std::vector<int> sigma(N);
  std::iota(sigma.begin(), sigma.end(), 0);
  OpSeries acc(f, T.dim(), order);
  do {
    int sgn = perm_sign_positions(sigma) * sgn_pi;
    OpSeries term = OpSeries::identity(f, T.dim(), order);
    for (int s = 0; s < N; ++s) {
      // Row form: t_{pi(s), sigma(s)}(u - N + 1 + s); column form:
      // t_{sigma(s), pi(s)}(u - s), slots s = 0..N-1.
      int a = row_form ? pi[s] : idx_of(sigma[s], n);
      int b = row_form ? idx_of(sigma[s], n) : pi[s];
      Scalar shift = row_form ? f(-(N - 1 - s)) : f(-s);
      OpSeries factor(f, T.dim(), order);
      auto coeffs = T.entry_series(a, b, shift, order);
      for (int k = 0; k <= order; ++k) factor.coeff(k) = coeffs[k];
      term = term * factor;
    }
    acc = acc + term * (sgn > 0 ? f.one() : -f.one());
  } while (std::next_permutation(sigma.begin(), sigma.end()));
  return acc;
}

OpSeries qdet_antisym(const OperatorMatrix& T, int order) {
  const Field& f = T.module().field();
  int N = T.N();
  int legdim = 1;
  for (int k = 0; k < N; ++k) legdim *= N;
  int big = legdim * T.dim();
  int n = T.module().form().n();

  // T_k(u-k+1) acting on leg k-1 and the module, as a coefficient list.
  std::vector<std::vector<SpMat>> factors;
  for (int k = 1; k <= N; ++k) {
    std::vector<SpMat> op(order + 1, SpMat(f, big, big));
    for (int i = -n; i <= n; ++i) {
      if (i == 0) continue;
      for (int j = -n; j <= n; ++j) {
        if (j == 0) continue;
        SpMat leg = embed_one_leg(
            SpMat::single(f, N, N, pos_of(i, n), pos_of(j, n), f.one()), N, N, k - 1);
        auto series = T.entry_series(i, j, f(-(k - 1)), order);
        for (int d = 0; d <= order; ++d)
          if (!series[d].is_zero()) op[d] = op[d] + leg.kron(series[d]);
      }
    }
    factors.push_back(std::move(op));
  }

  SpMat an = antisymmetrizer(f, N, N);
  // v0 = e_0 (x) e_1 (x) ... (x) e_{N-1} in position labels.
  int v0 = 0;
  for (int k = 0; k < N; ++k) v0 = v0 * N + k;

  OpSeries result(f, T.dim(), order);
  for (int b = 0; b < T.dim(); ++b) {
    VecSeries x = vec_series_zero(f, big, order);
    x[0][v0 * T.dim() + b] = f.one();
    for (int k = N; k >= 1; --k) x = apply_op_series(factors[k - 1], x);
    // Project with A_N on the legs and read the component along v0.
    for (int d = 0; d <= order; ++d) {
      DenseVec& xd = x[d];
      // (A_N (x) Id) xd restricted to rows (v0, m'): row v0 of A_N applied.
      for (const auto& [col, v] : an.row(v0)) {
        for (int mp = 0; mp < T.dim(); ++mp) {
          Scalar contrib = xd[col * T.dim() + mp];
          if (!contrib.is_zero()) result.coeff(d).add_entry(mp, b, v * contrib);
        }
      }
    }
  }
  return result;
}

USeries qdet_scalar(const OperatorMatrix& T, int order) {
  return qdet_antisym(T, order).scalar_series();
}

USeries dtilde_series(const USeries& qdet, int N) {
  const Field& f = qdet.field();
  if (f.characteristic() > 0 && N % f.characteristic() == 0)
    throw math_error("N vanishes in the field; dtilde recursion undefined");
  if (!qdet.coeff(0).is_one()) throw math_error("qdet must have constant term 1");
  int order = qdet.order();
  USeries d = USeries::one(f, order);
  Scalar invN = f(N).inv();
  for (int k = 1; k <= order; ++k) {
    // With x_k = 0, the product's u^{-k} coefficient misses N x_k.
    USeries prod = USeries::one(f, k);
    for (int i = 0; i < N; ++i) prod = prod * useries_shift(d.truncated(k), f(-i), k);
    d.set_coeff(k, (qdet.coeff(k) - prod.coeff(k)) * invN);
  }
  return d;
}

std::vector<SingularLine> singular_lines(
    const GModule& module, const std::function<const SpMat&(int, int, int)>& coeff, int degree,
    const std::vector<int>& diag_indices, const std::optional<std::vector<Scalar>>& only_weight,
    bool group_by_gl_weight) {
  const Field& f = module.field();
  int N = module.form().N(), n = module.form().n();

  // Group the basis by weight (gl-weight when requested: distinct gl-weights
  // can share a g_n-weight).
  auto weight_of = [&](int b) -> const std::vector<Scalar>& {
    return group_by_gl_weight ? module.gl_weight(b) : module.g_weight(b);
  };
  std::map<std::vector<Scalar>, std::vector<int>> spaces;
  for (int b = 0; b < module.dim(); ++b) {
    if (only_weight && weight_of(b) != *only_weight) continue;
    spaces[weight_of(b)].push_back(b);
  }

  std::vector<SingularLine> lines;
  for (const auto& [weight, space] : spaces) {
    // Joint kernel of all strictly upper coefficients on this weight space.
    std::vector<DenseVec> equations;
    for (int pi = 0; pi < N; ++pi)
      for (int pj = pi + 1; pj < N; ++pj) {
        int i = idx_of(pi, n), j = idx_of(pj, n);
        for (int d = 1; d <= degree; ++d) {
          const SpMat& a = coeff(i, j, d);
          if (a.is_zero()) continue;
          SpMat at = a.transpose();
          std::map<int, DenseVec> rows;
          for (size_t c = 0; c < space.size(); ++c)
            for (const auto& [r, v] : at.row(space[c])) {
              auto [it, fresh] = rows.try_emplace(r, DenseVec());
              if (fresh) it->second = dense_zero(f, space.size());
              it->second[c] += v;
            }
          for (auto& [r, row] : rows) equations.push_back(std::move(row));
        }
      }
    std::vector<DenseVec> ker = kernel_basis(std::move(equations), static_cast<int>(space.size()), f);
    for (const DenseVec& kv : ker) {
      SingularLine line;
      line.vector = dense_zero(f, module.dim());
      for (size_t c = 0; c < space.size(); ++c) line.vector[space[c]] = kv[c];
      line.weight = weight;
      // Diagonal eigen-polynomials.
      int lead = -1;
      for (int b = 0; b < module.dim(); ++b)
        if (!line.vector[b].is_zero()) {
          lead = b;
          break;
        }
      bool eigen_ok = true;
      for (int di : diag_indices) {
        std::vector<Scalar> cs;
        for (int d = 0; d <= degree; ++d) {
          const SpMat& a = coeff(di, di, d);
          DenseVec img = a.apply(line.vector);
          Scalar c = img[lead] / line.vector[lead];
          if (img != scale_vec(line.vector, c)) {
            eigen_ok = false;
            break;
          }
          cs.push_back(c);
        }
        if (!eigen_ok) break;
        line.diag_polys.emplace_back(f, cs);
      }
      if (!eigen_ok)
        throw math_error("singular line is not a joint eigenvector of the diagonal entries");
      lines.push_back(std::move(line));
    }
  }
  return lines;
}

std::vector<SingularLine> singular_vectors_gl(const OperatorMatrix& T) {
  int n = T.module().form().n();
  std::vector<int> diag;
  for (int i = -n; i <= n; ++i)
    if (i != 0) diag.push_back(i);
  return singular_lines(
      T.module(), [&](int i, int j, int d) -> const SpMat& { return T.coeff(i, j, d); },
      T.degree(), diag, std::nullopt, true);
}

}  // namespace ytw
