#include "liecore.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace ytw {

Flavor parse_flavor(std::string_view s) {
  if (s == "o") return Flavor::Orthogonal;
  if (s == "sp") return Flavor::Symplectic;
  throw config_error("bad flavor '" + std::string(s) + "' (want o or sp)");
}

std::string flavor_name(Flavor f) { return f == Flavor::Orthogonal ? "o" : "sp"; }

FormData::FormData(Flavor flavor, int n) : flavor_(flavor), n_(n) {
  if (n < 1) throw config_error("rank must be >= 1");
}

int FormData::g_entry(int i, int j) const {
  if (i != -j) return 0;
  return flavor_ == Flavor::Orthogonal ? 1 : sgn_idx(i);
}

int FormData::theta(int i, int j) const {
  return flavor_ == Flavor::Orthogonal ? 1 : sgn_idx(i) * sgn_idx(j);
}

SpMat FormData::g_matrix(const Field& f) const {
  SpMat m(f, N(), N());
  for (int i = -n_; i <= n_; ++i) {
    if (i == 0) continue;
    m.add_entry(pos_of(i, n_), pos_of(-i, n_), f(g_entry(i, -i)));
  }
  return m;
}

SpMat FormData::g_inverse_matrix(const Field& f) const {
  // G^{-1} = G (orthogonal), -G (symplectic).
  SpMat g = g_matrix(f);
  return flavor_ == Flavor::Orthogonal ? g : -g;
}

SpMat prime_transpose(const SpMat& a, const FormData& form) {
  int n = form.n();
  if (a.rows() != form.N() || a.cols() != form.N())
    throw math_error("prime_transpose: matrix must be N x N");
  SpMat out(a.field(), form.N(), form.N());
  for (int pi = 0; pi < form.N(); ++pi) {
    int i = idx_of(pi, n);
    for (const auto& [pj, v] : a.row(pi)) {
      int j = idx_of(pj, n);
      // a'_{ij} = theta_{ij} a_{-j,-i}; here (pi,pj) holds a_{-j,-i} when we
      // emit to (pos(j'), pos(i')) with j' = -pi-index etc.
      out.add_entry(pos_of(-j, n), pos_of(-i, n),
                    a.field()(form.theta(-j, -i)) * v);
    }
  }
  return out;
}

bool is_dominant_gl(const std::vector<int64_t>& lambda) {
  for (size_t i = 0; i + 1 < lambda.size(); ++i)
    if (lambda[i] < lambda[i + 1]) return false;
  return true;
}

bool is_dominant_gn(Flavor flavor, const IntWeight& lambda) {
  (void)flavor;
  if (lambda.empty()) return true;
  if (lambda[0] > 0) return false;
  for (size_t i = 0; i + 1 < lambda.size(); ++i)
    if (lambda[i] < lambda[i + 1]) return false;
  return true;
}

namespace {

// Positive-root pairings <lambda+rho, alpha^vee> for g_n, following the
// lemma's rho: rho_i = -(i-1) orthogonal, -i symplectic (1-based i).
std::vector<int64_t> positive_root_pairings(Flavor flavor, const IntWeight& lambda) {
  int n = static_cast<int>(lambda.size());
  auto val = [&](int i) {  // (lambda + rho)_i, i = 1..n
    int64_t rho = flavor == Flavor::Orthogonal ? -(i - 1) : -i;
    return lambda[i - 1] + rho;
  };
  std::vector<int64_t> out;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) {
      out.push_back(val(i) - val(j));    // eps_i - eps_j
      out.push_back(-val(i) - val(j));   // -eps_i - eps_j
    }
  if (flavor == Flavor::Symplectic)
    for (int i = 1; i <= n; ++i) out.push_back(-val(i));  // -2eps_i, coroot -eps_i
  return out;
}

}  // namespace

bool in_fundamental_alcove(Flavor flavor, const IntWeight& lambda, uint32_t p) {
  if (!is_dominant_gn(flavor, lambda)) throw math_error("alcove test on non-dominant weight");
  for (int64_t v : positive_root_pairings(flavor, lambda)) {
    if (v < 0) return false;
    if (p > 0 && v >= static_cast<int64_t>(p)) return false;
  }
  return true;
}

bool alcove_lemma_bound(const IntWeight& lambda, uint32_t p) {
  if (p == 0) return true;
  int64_t n = static_cast<int64_t>(lambda.size());
  return -2 * lambda.back() + 2 * n < static_cast<int64_t>(p);
}

int64_t weyl_dimension(Flavor flavor, const IntWeight& lambda) {
  if (!is_dominant_gn(flavor, lambda)) throw math_error("weyl_dimension on non-dominant weight");
  IntWeight zero(lambda.size(), 0);
  std::vector<int64_t> top = positive_root_pairings(flavor, lambda);
  std::vector<int64_t> bot = positive_root_pairings(flavor, zero);
  mpq_class acc(1);
  for (size_t k = 0; k < top.size(); ++k) {
    if (bot[k] == 0) throw math_error("degenerate rho pairing");
    acc *= mpq_class(static_cast<long>(top[k]), static_cast<long>(bot[k]));
  }
  acc.canonicalize();
  if (acc.get_den() != 1) throw math_error("weyl dimension not integral");
  return acc.get_num().get_si();
}

bool dominance_leq(Flavor flavor, const std::vector<Scalar>& mu, const std::vector<Scalar>& lambda) {
  if (mu.size() != lambda.size()) throw math_error("weight length mismatch");
  const Field f = mu.empty() ? Field::rationals() : mu[0].field();
  if (!f.is_rational()) throw math_error("dominance order needs characteristic zero");
  int n = static_cast<int>(mu.size());
  // Simple roots: eps_i - eps_{i+1}, plus -2 eps_n (sp) or -eps_{n-1}-eps_n (o).
  std::vector<std::vector<Scalar>> roots;
  for (int i = 0; i + 1 < n; ++i) {
    std::vector<Scalar> r(n, f.zero());
    r[i] = f.one();
    r[i + 1] = -f.one();
    roots.push_back(r);
  }
  {
    std::vector<Scalar> r(n, f.zero());
    if (flavor == Flavor::Symplectic) {
      r[n - 1] = f(-2);
    } else {
      if (n == 1) {
        // o_2 has no roots: comparable iff equal.
        return mu == lambda;
      }
      r[n - 2] = -f.one();
      r[n - 1] = -f.one();
    }
    roots.push_back(r);
  }
  std::vector<Scalar> diff(n, f.zero());
  for (int i = 0; i < n; ++i) diff[i] = lambda[i] - mu[i];
  auto coords = coordinates_in_span(roots, diff, f);
  if (!coords) return false;
  for (const Scalar& c : *coords)
    if (c < f.zero()) return false;
  return true;
}

const SpMat& GModule::E(int i, int j) const {
  if (kind_ != ActionKind::Gl) throw math_error("E_{ij} unavailable on a g_n-only module");
  return gen(i, j);
}

SpMat GModule::F(int i, int j) const {
  if (kind_ == ActionKind::Gn) return gen(i, j);
  return gen(i, j) - gen(-j, -i) * field_(form_.theta(i, j));
}

const std::vector<Scalar>& GModule::gl_weight(int b) const {
  if (kind_ != ActionKind::Gl) throw math_error("gl weights unavailable on a g_n-only module");
  return glweights_.at(b);
}

namespace {

std::vector<Scalar> g_weight_from_gl(const std::vector<Scalar>& gl, int n) {
  std::vector<Scalar> w;
  w.reserve(n);
  for (int i = 1; i <= n; ++i) w.push_back(gl[pos_of(i, n)] - gl[pos_of(-i, n)]);
  return w;
}

// eps_i as a g_n-weight increment.
void add_eps(std::vector<Scalar>& w, int i, const Scalar& amount) {
  if (i > 0)
    w[i - 1] += amount;
  else
    w[-i - 1] -= amount;
}

}  // namespace

GModule gl_natural(const Field& f, const FormData& form) {
  int N = form.N(), n = form.n();
  GModule m(f, form, ActionKind::Gl, N);
  m.name_ = "natural";
  m.act_.reserve(N * N);
  for (int pi = 0; pi < N; ++pi)
    for (int pj = 0; pj < N; ++pj) m.act_.push_back(SpMat::single(f, N, N, pi, pj, f.one()));
  for (int p = 0; p < N; ++p) {
    std::vector<Scalar> gl(N, f.zero());
    gl[p] = f.one();
    m.glweights_.push_back(gl);
    m.gweights_.push_back(g_weight_from_gl(gl, n));
  }
  return m;
}

GModule gl_dual(const Field& f, const FormData& form) {
  int N = form.N(), n = form.n();
  GModule m(f, form, ActionKind::Gl, N);
  m.name_ = "dual";
  m.act_.reserve(N * N);
  for (int pi = 0; pi < N; ++pi)
    for (int pj = 0; pj < N; ++pj) m.act_.push_back(SpMat::single(f, N, N, pj, pi, -f.one()));
  for (int p = 0; p < N; ++p) {
    std::vector<Scalar> gl(N, f.zero());
    gl[p] = -f.one();
    m.glweights_.push_back(gl);
    m.gweights_.push_back(g_weight_from_gl(gl, n));
  }
  return m;
}

GModule gl_one_dimensional(const Field& f, const FormData& form, const Scalar& c) {
  int N = form.N();
  GModule m(f, form, ActionKind::Gl, 1);
  m.name_ = "one_dimensional(" + c.to_string() + ")";
  for (int pi = 0; pi < N; ++pi)
    for (int pj = 0; pj < N; ++pj)
      m.act_.push_back(pi == pj ? SpMat::single(f, 1, 1, 0, 0, c) : SpMat(f, 1, 1));
  m.glweights_.push_back(std::vector<Scalar>(N, c));
  m.gweights_.push_back(std::vector<Scalar>(form.n(), f.zero()));
  return m;
}

GModule gn_natural(const Field& f, const FormData& form) {
  int N = form.N(), n = form.n();
  GModule m(f, form, ActionKind::Gn, N);
  m.name_ = "natural_g";
  m.act_.reserve(N * N);
  for (int pi = 0; pi < N; ++pi)
    for (int pj = 0; pj < N; ++pj) {
      int i = idx_of(pi, n), j = idx_of(pj, n);
      SpMat x = SpMat::single(f, N, N, pi, pj, f.one());
      x = x - SpMat::single(f, N, N, pos_of(-j, n), pos_of(-i, n), f(form.theta(i, j)));
      m.act_.push_back(std::move(x));
    }
  for (int p = 0; p < N; ++p) {
    std::vector<Scalar> w(n, f.zero());
    add_eps(w, idx_of(p, n), f.one());
    m.gweights_.push_back(std::move(w));
  }
  return m;
}

GModule gn_trivial(const Field& f, const FormData& form) {
  int N = form.N();
  GModule m(f, form, ActionKind::Gn, 1);
  m.name_ = "trivial";
  for (int k = 0; k < N * N; ++k) m.act_.push_back(SpMat(f, 1, 1));
  m.gweights_.push_back(std::vector<Scalar>(form.n(), f.zero()));
  return m;
}

GModule o2_one_dimensional(const Field& f, const Scalar& gamma) {
  FormData form(Flavor::Orthogonal, 1);
  GModule m(f, form, ActionKind::Gn, 1);
  m.name_ = "V(" + gamma.to_string() + ")";
  // o_2 is spanned by F_{11} = -F_{-1,-1}; F_{1,-1} = F_{-1,1} = 0.
  for (int pi = 0; pi < 2; ++pi)
    for (int pj = 0; pj < 2; ++pj) {
      int i = idx_of(pi, 1), j = idx_of(pj, 1);
      Scalar v = f.zero();
      if (i == 1 && j == 1) v = gamma;
      if (i == -1 && j == -1) v = -gamma;
      m.act_.push_back(v.is_zero() ? SpMat(f, 1, 1) : SpMat::single(f, 1, 1, 0, 0, v));
    }
  m.gweights_.push_back({gamma});
  return m;
}

GModule tensor_product(const GModule& a, const GModule& b) {
  if (a.field() != b.field()) throw math_error("tensor factors over different fields");
  if (a.form().flavor() != b.form().flavor() || a.form().n() != b.form().n())
    throw math_error("tensor factors with different form data");
  const Field& f = a.field();
  int N = a.form().N();
  ActionKind kind =
      (a.kind() == ActionKind::Gl && b.kind() == ActionKind::Gl) ? ActionKind::Gl : ActionKind::Gn;
  GModule m(f, a.form(), kind, a.dim() * b.dim());
  m.name_ = a.name() + " (x) " + b.name();
  SpMat ia = SpMat::identity(f, a.dim()), ib = SpMat::identity(f, b.dim());
  for (int pi = 0; pi < N; ++pi)
    for (int pj = 0; pj < N; ++pj) {
      int i = idx_of(pi, a.form().n()), j = idx_of(pj, a.form().n());
      SpMat xa = kind == ActionKind::Gl ? a.E(i, j) : a.F(i, j);
      SpMat xb = kind == ActionKind::Gl ? b.E(i, j) : b.F(i, j);
      m.act_.push_back(xa.kron(ib) + ia.kron(xb));
    }
  for (int x = 0; x < a.dim(); ++x)
    for (int y = 0; y < b.dim(); ++y) {
      std::vector<Scalar> w = a.g_weight(x);
      for (size_t k = 0; k < w.size(); ++k) w[k] += b.g_weight(y)[k];
      m.gweights_.push_back(std::move(w));
      if (kind == ActionKind::Gl) {
        std::vector<Scalar> gw = a.gl_weight(x);
        for (size_t k = 0; k < gw.size(); ++k) gw[k] += b.gl_weight(y)[k];
        m.glweights_.push_back(std::move(gw));
      }
    }
  return m;
}

namespace {

std::vector<std::vector<int>> tuples(int d, int k, bool strict) {
  // Non-decreasing (sym) or strictly increasing (wedge) k-tuples from 0..d-1.
  std::vector<std::vector<int>> out;
  std::vector<int> cur(k);
  auto rec = [&](auto&& self, int slot, int lo) -> void {
    if (slot == k) {
      out.push_back(cur);
      return;
    }
    for (int v = lo; v < d; ++v) {
      cur[slot] = v;
      self(self, slot + 1, strict ? v + 1 : v);
    }
  };
  rec(rec, 0, 0);
  return out;
}

// Sorts tuple, returns permutation sign or 0 on a repeat (wedge mode).
int sort_with_sign(std::vector<int>& t) {
  int sign = 1;
  for (size_t i = 1; i < t.size(); ++i)
    for (size_t j = i; j > 0 && t[j] < t[j - 1]; --j) {
      std::swap(t[j], t[j - 1]);
      sign = -sign;
    }
  for (size_t i = 1; i < t.size(); ++i)
    if (t[i] == t[i - 1]) return 0;
  return sign;
}

}  // namespace

GModule power_module_impl(const GModule& base, int k, bool wedge) {
  const Field& f = base.field();
  int N = base.form().N();
  auto basis = tuples(base.dim(), k, wedge);
  std::map<std::vector<int>, int> index;
  for (size_t i = 0; i < basis.size(); ++i) index[basis[i]] = static_cast<int>(i);
  int dim = static_cast<int>(basis.size());
  if (dim == 0) throw math_error("empty power basis");
  GModule m(f, base.form(), base.kind(), dim);
  std::ostringstream nm;
  nm << (wedge ? "wedge^" : "sym^") << k << "(" << base.name() << ")";
  m.name_ = nm.str();
  for (int pi = 0; pi < N; ++pi)
    for (int pj = 0; pj < N; ++pj) {
      int i = idx_of(pi, base.form().n()), j = idx_of(pj, base.form().n());
      SpMat x = base.kind() == ActionKind::Gl ? base.E(i, j) : base.F(i, j);
      SpMat xt = x.transpose();  // column access
      SpMat out(f, dim, dim);
      for (int col = 0; col < dim; ++col) {
        const auto& t = basis[col];
        for (size_t slot = 0; slot < t.size(); ++slot) {
          for (const auto& [r, v] : xt.row(t[slot])) {
            std::vector<int> img = t;
            img[slot] = r;
            if (wedge) {
              int sign = sort_with_sign(img);
              if (sign == 0) continue;
              out.add_entry(index.at(img), col, sign > 0 ? v : -v);
            } else {
              std::sort(img.begin(), img.end());
              out.add_entry(index.at(img), col, v);
            }
          }
        }
      }
      m.act_.push_back(std::move(out));
    }
  for (const auto& t : basis) {
    std::vector<Scalar> w(base.form().n(), f.zero());
    for (int b : t)
      for (size_t q = 0; q < w.size(); ++q) w[q] += base.g_weight(b)[q];
    m.gweights_.push_back(std::move(w));
    if (base.kind() == ActionKind::Gl) {
      std::vector<Scalar> gw(N, f.zero());
      for (int b : t)
        for (int q = 0; q < N; ++q) gw[q] += base.gl_weight(b)[q];
      m.glweights_.push_back(std::move(gw));
    }
  }
  return m;
}

GModule sym_power(const GModule& m, int k) { return power_module_impl(m, k, false); }
GModule wedge_power(const GModule& m, int k) { return power_module_impl(m, k, true); }

GModule highest_weight_submodule(const GModule& parent, const std::vector<Scalar>& weight,
                                 ActionKind mode, bool allow_outside_alcove) {
  (void)allow_outside_alcove;  // alcove gating happens in the named builders
  const Field& f = parent.field();
  int N = parent.form().N(), n = parent.form().n();
  if (mode == ActionKind::Gl && parent.kind() != ActionKind::Gl)
    throw math_error("gl-mode submodule of a g_n-only module");
  auto weight_of = [&](int b) -> const std::vector<Scalar>& {
    return mode == ActionKind::Gl ? parent.gl_weight(b) : parent.g_weight(b);
  };
  // Weight space of the target.
  std::vector<int> wspace;
  for (int b = 0; b < parent.dim(); ++b)
    if (weight_of(b) == weight) wspace.push_back(b);
  if (wspace.empty()) throw math_error("no singular vector of the requested weight (empty weight space)");

  auto op = [&](int i, int j) { return mode == ActionKind::Gl ? parent.E(i, j) : parent.F(i, j); };

  // Joint kernel of the raising operators restricted to the weight space.
  std::vector<DenseVec> equations;
  for (int pi = 0; pi < N; ++pi)
    for (int pj = pi + 1; pj < N; ++pj) {
      SpMat x = op(idx_of(pi, n), idx_of(pj, n));
      std::map<int, DenseVec> rows;
      SpMat xt = x.transpose();
      for (size_t c = 0; c < wspace.size(); ++c)
        for (const auto& [r, v] : xt.row(wspace[c])) {
          auto [it, fresh] = rows.try_emplace(r, DenseVec());
          if (fresh) it->second = dense_zero(f, wspace.size());
          it->second[c] += v;
        }
      for (auto& [r, row] : rows) equations.push_back(std::move(row));
    }
  std::vector<DenseVec> ker = kernel_basis(std::move(equations), static_cast<int>(wspace.size()), f);
  if (ker.empty()) throw math_error("no singular vector of the requested weight");

  DenseVec seed = dense_zero(f, parent.dim());
  for (size_t c = 0; c < wspace.size(); ++c) seed[wspace[c]] = ker[0][c];

  // Cyclic span under the lowering operators.
  SpanBuilder span(f, parent.dim());
  span.add(seed);
  std::vector<SpMat> lowering;
  for (int pi = 0; pi < N; ++pi)
    for (int pj = 0; pj < pi; ++pj) lowering.push_back(op(idx_of(pi, n), idx_of(pj, n)));
  size_t frontier_begin = 0;
  while (frontier_begin < span.original_vectors().size()) {
    size_t frontier_end = span.original_vectors().size();
    for (size_t v = frontier_begin; v < frontier_end; ++v) {
      DenseVec src = span.original_vectors()[v];
      for (const SpMat& low : lowering) {
        DenseVec img = low.apply(src);
        if (!is_zero_vec(img)) span.add(std::move(img));
      }
    }
    frontier_begin = frontier_end;
  }

  const std::vector<DenseVec>& basis = span.reduced_basis();
  int dim = static_cast<int>(basis.size());
  // A g_n-cyclic span of a gl-module need not be E-invariant, so the result
  // kind follows the mode, not the parent.
  GModule sub(f, parent.form(), mode, dim);
  sub.name_ = "hw_submodule(" + parent.name() + ")";

  // Restrict the generators of the chosen action; images must stay inside
  // the span since the seed is singular.
  for (int pi = 0; pi < N; ++pi)
    for (int pj = 0; pj < N; ++pj) {
      int i = idx_of(pi, n), j = idx_of(pj, n);
      SpMat big = mode == ActionKind::Gl ? parent.E(i, j) : parent.F(i, j);
      SpMat small(f, dim, dim);
      for (int b = 0; b < dim; ++b) {
        DenseVec img = big.apply(basis[b]);
        auto coords = coordinates_in_span(basis, img, f);
        if (!coords) throw math_error("cyclic span is not invariant (internal error)");
        for (int r = 0; r < dim; ++r)
          if (!(*coords)[r].is_zero()) small.add_entry(r, b, (*coords)[r]);
      }
      sub.act_.push_back(std::move(small));
    }

  for (int b = 0; b < dim; ++b) {
    int support = -1;
    for (int k = 0; k < parent.dim(); ++k)
      if (!basis[b][k].is_zero()) {
        support = k;
        break;
      }
    sub.gweights_.push_back(parent.g_weight(support));
    if (mode == ActionKind::Gl) sub.glweights_.push_back(parent.gl_weight(support));
  }
  return sub;
}

bool GModule::check_brackets() const {
  int N = form_.N(), n = form_.n();
  for (int pa = 0; pa < N; ++pa)
    for (int pb = 0; pb < N; ++pb)
      for (int pc = 0; pc < N; ++pc)
        for (int pd = 0; pd < N; ++pd) {
          int i = idx_of(pa, n), j = idx_of(pb, n), k = idx_of(pc, n), l = idx_of(pd, n);
          if (kind_ == ActionKind::Gl) {
            SpMat lhs = commutator(gen(i, j), gen(k, l));
            SpMat rhs(field_, dim_, dim_);
            if (j == k) rhs += gen(i, l);
            if (l == i) rhs += -gen(k, j);
            if (lhs != rhs) return false;
          } else {
            // [F_ij, F_kl] = d_jk F_il - d_li F_kj
            //   - theta_{k,-j} d_{j,-l} F_{i,-k} + theta_{-i,l} d_{i,-k} F_{-l,j}
            SpMat lhs = commutator(gen(i, j), gen(k, l));
            SpMat rhs(field_, dim_, dim_);
            if (j == k) rhs += gen(i, l);
            if (l == i) rhs += -gen(k, j);
            if (j == -l) rhs += -(gen(i, -k) * field_(form_.theta(k, -j)));
            if (i == -k) rhs += gen(-l, j) * field_(form_.theta(-i, l));
            if (lhs != rhs) return false;
          }
        }
  return true;
}

bool GModule::check_weight_grading() const {
  int N = form_.N(), n = form_.n();
  for (int pi = 0; pi < N; ++pi)
    for (int pj = 0; pj < N; ++pj) {
      int i = idx_of(pi, n), j = idx_of(pj, n);
      SpMat x = kind_ == ActionKind::Gl ? gen(i, j) : F(i, j);
      for (int r = 0; r < dim_; ++r)
        for (const auto& [c, v] : x.row(r)) {
          std::vector<Scalar> expect = gweights_[c];
          add_eps(expect, i, field_.one());
          add_eps(expect, j, -field_.one());
          if (expect != gweights_[r]) return false;
        }
    }
  return true;
}

namespace {

bool in_gl_alcove(const IntWeight& base, uint32_t p) {
  if (p == 0) return true;
  int N = static_cast<int>(base.size());
  for (int i = 0; i < N; ++i)
    for (int j = i + 1; j < N; ++j)
      if (base[i] - base[j] + (j - i) >= static_cast<int64_t>(p)) return false;
  return true;
}

}  // namespace

GModule gl_highest_weight_module(const Field& f, const FormData& form, const IntWeight& base,
                                 const Scalar& shift, bool allow_outside_alcove) {
  int N = form.N();
  if (static_cast<int>(base.size()) != N) throw math_error("gl weight needs N entries");
  if (!is_dominant_gl(base)) throw math_error("gl weight is not dominant");
  if (!allow_outside_alcove && !in_gl_alcove(base, f.characteristic()))
    throw math_error("gl weight outside the fundamental alcove (use the override to force)");
  int64_t floor = base.back();
  Scalar c = shift + f(static_cast<long>(floor));
  std::vector<int64_t> parts(N);
  for (int i = 0; i < N; ++i) parts[i] = base[i] - floor;
  GModule acc = gl_one_dimensional(f, form, c);
  for (int64_t h = 1; h <= parts[0]; ++h) {
    int height = 0;
    while (height < N && parts[height] >= h) ++height;
    acc = tensor_product(acc, wedge_power(gl_natural(f, form), height));
  }
  if (parts[0] == 0) return acc;  // pure character
  std::vector<Scalar> target(N, f.zero());
  for (int i = 0; i < N; ++i) target[i] = f(static_cast<long>(base[i])) + shift;
  GModule sub = highest_weight_submodule(acc, target, ActionKind::Gl, allow_outside_alcove);
  std::ostringstream nm;
  nm << "L(";
  for (int i = 0; i < N; ++i) nm << (i ? "," : "") << target[i].to_string();
  nm << ")";
  sub.set_name(nm.str());
  return sub;
}

GModule gn_highest_weight_module(const Field& f, const FormData& form, const IntWeight& lambda,
                                 bool allow_outside_alcove) {
  int n = form.n();
  if (static_cast<int>(lambda.size()) != n) throw math_error("g_n weight needs n entries");
  if (!is_dominant_gn(form.flavor(), lambda)) throw math_error("g_n weight is not dominant");
  if (!allow_outside_alcove && f.characteristic() > 0 &&
      !in_fundamental_alcove(form.flavor(), lambda, f.characteristic()))
    throw math_error("g_n weight outside the fundamental alcove (use the override to force)");
  bool zero = true;
  for (int64_t v : lambda) zero = zero && v == 0;
  if (zero) return gn_trivial(f, form);
  if (n == 1 && form.flavor() == Flavor::Orthogonal)
    return o2_one_dimensional(f, f(static_cast<long>(lambda[0])));
  // Columns of the negated partition, each a wedge power of the natural.
  std::vector<int64_t> parts(n);
  for (int i = 0; i < n; ++i) parts[i] = -lambda[n - 1 - i];  // descending positive
  GModule acc = gn_trivial(f, form);
  for (int64_t h = 1; h <= parts[0]; ++h) {
    int height = 0;
    while (height < n && parts[height] >= h) ++height;
    acc = tensor_product(acc, wedge_power(gn_natural(f, form), height));
  }
  std::vector<Scalar> target(n, f.zero());
  for (int i = 0; i < n; ++i) target[i] = f(static_cast<long>(lambda[i]));
  GModule sub = highest_weight_submodule(acc, target, ActionKind::Gn, allow_outside_alcove);
  std::ostringstream nm;
  nm << "V(";
  for (int i = 0; i < n; ++i) nm << (i ? "," : "") << lambda[i];
  nm << ")";
  sub.set_name(nm.str());
  return sub;
}

}  // namespace ytw
