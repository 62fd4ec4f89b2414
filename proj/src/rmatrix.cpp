#include "rmatrix.hpp"

#include <algorithm>
#include <numeric>

namespace ytw {

SpMat flip_matrix(const Field& f, int N) {
  SpMat p(f, N * N, N * N);
  for (int a = 0; a < N; ++a)
    for (int b = 0; b < N; ++b) p.add_entry(a * N + b, b * N + a, f.one());
  return p;
}

SpMat flip_prime_matrix(const Field& f, const FormData& form) {
  int N = form.N(), n = form.n();
  SpMat p(f, N * N, N * N);
  // P'(e_a (x) e_b) = delta_{b,-a} sum_i theta_{ia} e_i (x) e_{-i}.
  for (int a = -n; a <= n; ++a) {
    if (a == 0) continue;
    int col = pos_of(a, n) * N + pos_of(-a, n);
    for (int i = -n; i <= n; ++i) {
      if (i == 0) continue;
      p.add_entry(pos_of(i, n) * N + pos_of(-i, n), col, f(form.theta(i, a)));
    }
  }
  return p;
}

SpMat r_matrix_at(const Field& f, int N, const Scalar& u) {
  if (u.is_zero()) throw math_error("R(u) evaluated at u = 0");
  return SpMat::identity(f, N * N) - flip_matrix(f, N) * u.inv();
}

SpMat r_prime_matrix_at(const Field& f, const FormData& form, const Scalar& u) {
  if (u.is_zero()) throw math_error("R'(u) evaluated at u = 0");
  int N = form.N();
  return SpMat::identity(f, N * N) - flip_prime_matrix(f, form) * u.inv();
}

SpMat embed_two_leg(const SpMat& op, int N, int m, int leg_i, int leg_j) {
  if (leg_i == leg_j || leg_i < 0 || leg_j < 0 || leg_i >= m || leg_j >= m)
    throw math_error("bad tensor legs");
  const Field& f = op.field();
  int dim = 1;
  for (int k = 0; k < m; ++k) dim *= N;
  SpMat out(f, dim, dim);
  std::vector<int> digits(m);
  SpMat opt = op.transpose();  // column access
  for (int col = 0; col < dim; ++col) {
    int tmp = col;
    for (int k = m - 1; k >= 0; --k) {
      digits[k] = tmp % N;
      tmp /= N;
    }
    int ci = digits[leg_i], cj = digits[leg_j];
    for (const auto& [rc, v] : opt.row(ci * N + cj)) {
      int a = rc / N, b = rc % N;
      // row index: col with digits (leg_i, leg_j) replaced by (a, b)
      int stride_i = 1, stride_j = 1;
      for (int k = leg_i + 1; k < m; ++k) stride_i *= N;
      for (int k = leg_j + 1; k < m; ++k) stride_j *= N;
      int row = col + (a - ci) * stride_i + (b - cj) * stride_j;
      out.add_entry(row, col, v);
    }
  }
  return out;
}

SpMat embed_one_leg(const SpMat& op, int N, int m, int leg) {
  if (leg < 0 || leg >= m) throw math_error("bad tensor leg");
  const Field& f = op.field();
  int dim = 1;
  for (int k = 0; k < m; ++k) dim *= N;
  int stride = 1;
  for (int k = leg + 1; k < m; ++k) stride *= N;
  SpMat out(f, dim, dim);
  SpMat opt = op.transpose();
  for (int col = 0; col < dim; ++col) {
    int c = (col / stride) % N;
    for (const auto& [r, v] : opt.row(c)) out.add_entry(col + (r - c) * stride, col, v);
  }
  return out;
}

SpMat antisymmetrizer(const Field& f, int m, int N) {
  if (f.characteristic() > 0) {
    uint64_t fact = 1;
    for (int k = 2; k <= m; ++k) fact = (fact * k) % f.characteristic();
    if (fact == 0) throw math_error("m! vanishes in the field; antisymmetrizer degenerate");
  }
  int dim = 1;
  for (int k = 0; k < m; ++k) dim *= N;
  SpMat out(f, dim, dim);
  std::vector<int> perm(m);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<int> digits(m), img(m);
  do {
    int inversions = 0;
    for (int i = 0; i < m; ++i)
      for (int j = i + 1; j < m; ++j)
        if (perm[i] > perm[j]) ++inversions;
    Scalar sign = inversions % 2 == 0 ? f.one() : -f.one();
    for (int col = 0; col < dim; ++col) {
      int tmp = col;
      for (int k = m - 1; k >= 0; --k) {
        digits[k] = tmp % N;
        tmp /= N;
      }
      // A_m(e_{i_1} (x) ... ) = sum sgn(sigma) e_{i_sigma(1)} (x) ...
      for (int k = 0; k < m; ++k) img[k] = digits[perm[k]];
      int row = 0;
      for (int k = 0; k < m; ++k) row = row * N + img[k];
      out.add_entry(row, col, sign);
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

namespace {

// Factor order of the fused product: pairs (i,j), i < j, 0-based legs.
std::vector<std::pair<int, int>> fused_order(int m, bool reversed) {
  std::vector<std::pair<int, int>> order;
  if (!reversed) {
    for (int i = m - 2; i >= 0; --i)
      for (int j = m - 1; j >= i + 1; --j) order.emplace_back(i, j);
  } else {
    for (int i = 0; i <= m - 2; ++i)
      for (int j = i + 1; j <= m - 1; ++j) order.emplace_back(i, j);
  }
  return order;
}

}  // namespace

SpMat fused_R(const Field& f, int N, const std::vector<Scalar>& points) {
  int m = static_cast<int>(points.size());
  int dim = 1;
  for (int k = 0; k < m; ++k) dim *= N;
  SpMat acc = SpMat::identity(f, dim);
  SpMat p = flip_matrix(f, N);
  for (auto [i, j] : fused_order(m, false)) {
    Scalar w = points[i] - points[j];
    if (w.is_zero()) throw math_error("fused R at coincident points");
    acc = acc * (SpMat::identity(f, dim) - embed_two_leg(p, N, m, i, j) * w.inv());
  }
  return acc;
}

SpMat fused_R_reversed(const Field& f, int N, const std::vector<Scalar>& points) {
  int m = static_cast<int>(points.size());
  int dim = 1;
  for (int k = 0; k < m; ++k) dim *= N;
  SpMat acc = SpMat::identity(f, dim);
  SpMat p = flip_matrix(f, N);
  for (auto [i, j] : fused_order(m, true)) {
    Scalar w = points[i] - points[j];
    if (w.is_zero()) throw math_error("fused R at coincident points");
    acc = acc * (SpMat::identity(f, dim) - embed_two_leg(p, N, m, i, j) * w.inv());
  }
  return acc;
}

MPolyMat fused_R_formal(const Field& f, int N, int m, bool reversed) {
  if (m > 4) throw math_error("formal fused R supported for m <= 4");
  int dim = 1;
  for (int k = 0; k < m; ++k) dim *= N;
  MPolyMat acc = MPolyMat::identity(f, dim);
  SpMat p = flip_matrix(f, N);
  for (auto [i, j] : fused_order(m, reversed)) {
    // (u_i - u_j) Id - P_{ij}, the factor cleared by its own denominator.
    MPoly w = MPoly::variable(f, i) - MPoly::variable(f, j);
    MPolyMat factor = MPolyMat::identity(f, dim).scaled(w) -
                      MPolyMat::lift(embed_two_leg(p, N, m, i, j));
    acc = acc * factor;
  }
  return acc;
}

YBVariant parse_yb_variant(std::string_view s) {
  if (s == "plain") return YBVariant::Plain;
  if (s == "transposed") return YBVariant::Transposed;
  if (s == "final_transposed") return YBVariant::FinalTransposed;
  throw config_error("bad Yang-Baxter variant '" + std::string(s) + "'");
}

namespace {

struct YBFactor {
  bool primed;   // R' vs R
  int li, lj;    // legs
  int si, sj;    // signs of u_{li}, u_{lj} in the argument: +1/-1
};

// The three identities, left and right factor lists:
//   plain:            R12 R13 R23 = R23 R13 R12              args u_i - u_j
//   transposed:       R12 R'23 R'13 = R'13 R'23 R12          primed args u_i + u_j
//   final transposed: R12 R'13 R'23 = R'23 R'13 R12          primed args -u_i - u_j
// The transposed form is the leg-3 partial transpose of the plain equation
// taken at (u_1, u_2, -u_3), which is where the u_i + u_j arguments come
// from; substituting u_3 -> -u_3 once more and swapping the primed factors
// via P_12-conjugation yields the final transposed form at -u_i - u_j.
std::pair<std::vector<YBFactor>, std::vector<YBFactor>> yb_factors(YBVariant v) {
  auto R = [](int i, int j) { return YBFactor{false, i, j, 1, -1}; };
  auto Rpp = [](int i, int j) { return YBFactor{true, i, j, 1, 1}; };
  auto Rpm = [](int i, int j) { return YBFactor{true, i, j, -1, -1}; };
  switch (v) {
    case YBVariant::Plain:
      return {{R(0, 1), R(0, 2), R(1, 2)}, {R(1, 2), R(0, 2), R(0, 1)}};
    case YBVariant::Transposed:
      return {{R(0, 1), Rpp(1, 2), Rpp(0, 2)}, {Rpp(0, 2), Rpp(1, 2), R(0, 1)}};
    case YBVariant::FinalTransposed:
      return {{R(0, 1), Rpm(0, 2), Rpm(1, 2)}, {Rpm(1, 2), Rpm(0, 2), R(0, 1)}};
  }
  throw math_error("unreachable");
}

}  // namespace

bool check_yang_baxter(const Field& f, const FormData& form, YBVariant v,
                       const std::array<Scalar, 3>& points, bool negate_control) {
  int N = form.N();
  SpMat p = flip_matrix(f, N);
  if (negate_control) p = -p;
  SpMat pp = flip_prime_matrix(f, form);
  auto [lhs_f, rhs_f] = yb_factors(v);
  auto build = [&](const std::vector<YBFactor>& factors) {
    SpMat acc = SpMat::identity(f, N * N * N);
    for (const YBFactor& fac : factors) {
      Scalar arg = points[fac.li] * f(fac.si) + points[fac.lj] * f(fac.sj);
      if (arg.is_zero()) throw math_error("Yang-Baxter check at a pole");
      const SpMat& core = fac.primed ? pp : p;
      SpMat emb = SpMat::identity(f, N * N * N) -
                  embed_two_leg(core, N, 3, fac.li, fac.lj) * arg.inv();
      acc = acc * emb;
    }
    return acc;
  };
  return build(lhs_f) == build(rhs_f);
}

bool check_yang_baxter_formal(const Field& f, const FormData& form, YBVariant v) {
  int N = form.N();
  SpMat p = flip_matrix(f, N);
  SpMat pp = flip_prime_matrix(f, form);
  auto [lhs_f, rhs_f] = yb_factors(v);
  auto build = [&](const std::vector<YBFactor>& factors) {
    MPolyMat acc = MPolyMat::identity(f, N * N * N);
    for (const YBFactor& fac : factors) {
      MPoly arg(f);
      arg += MPoly::variable(f, fac.li);
      if (fac.si < 0) arg = -arg;
      MPoly vj = MPoly::variable(f, fac.lj);
      arg = arg + (fac.sj < 0 ? -vj : vj);
      const SpMat& core = fac.primed ? pp : p;
      MPolyMat factor = MPolyMat::identity(f, N * N * N).scaled(arg) -
                        MPolyMat::lift(embed_two_leg(core, N, 3, fac.li, fac.lj));
      acc = acc * factor;
    }
    return acc;
  };
  // Both sides carry the same cleared denominator, factor by factor.
  return build(lhs_f) == build(rhs_f);
}

}  // namespace ytw
