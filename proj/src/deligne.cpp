#include "deligne.hpp"

#include <algorithm>
#include <sstream>

namespace ytw {

BrauerDiagram::BrauerDiagram(int bottom, int top, std::vector<std::pair<int, int>> arcs)
    : bottom_(bottom), top_(top), arcs_(std::move(arcs)) {
  if ((bottom_ + top_) % 2 != 0) throw math_error("diagram needs an even number of dots");
  std::vector<char> seen(bottom_ + top_, 0);
  for (auto& [a, b] : arcs_) {
    if (a > b) std::swap(a, b);
    if (a == b || a < 0 || b >= bottom_ + top_) throw math_error("bad arc");
    if (seen[a] || seen[b]) throw math_error("arcs are not a matching");
    seen[a] = seen[b] = 1;
  }
  for (char s : seen)
    if (!s) throw math_error("matching is not perfect");
  std::sort(arcs_.begin(), arcs_.end());
}

BrauerDiagram BrauerDiagram::identity(int r) {
  std::vector<std::pair<int, int>> arcs;
  for (int i = 0; i < r; ++i) arcs.emplace_back(i, r + i);
  return BrauerDiagram(r, r, std::move(arcs));
}

int BrauerDiagram::partner(int point) const {
  for (const auto& [a, b] : arcs_) {
    if (a == point) return b;
    if (b == point) return a;
  }
  throw math_error("point out of range");
}

namespace {

// Arc classes for crossing counts: local coordinates on the two lines.
struct ArcGeom {
  int kind;  // 0 cap (bottom-bottom), 1 cup (top-top), 2 through
  int x1, x2;
};

ArcGeom geom_of(const BrauerDiagram& d, std::pair<int, int> arc) {
  auto [a, b] = arc;
  bool ab = a < d.bottom(), bb = b < d.bottom();
  if (ab && bb) return {0, a, b};
  if (!ab && !bb) return {1, a - d.bottom(), b - d.bottom()};
  return {2, a, b - d.bottom()};  // bottom coordinate, top coordinate
}

bool arcs_cross(const ArcGeom& p, const ArcGeom& q) {
  auto inside = [](int x, int lo, int hi) { return lo < x && x < hi; };
  if (p.kind == 2 && q.kind == 2)
    return (p.x1 < q.x1 && p.x2 > q.x2) || (p.x1 > q.x1 && p.x2 < q.x2);
  if (p.kind == 2 && q.kind != 2) return arcs_cross(q, p);
  if (p.kind == 0 && q.kind == 2) return inside(q.x1, p.x1, p.x2);
  if (p.kind == 1 && q.kind == 2) return inside(q.x2, p.x1, p.x2);
  if (p.kind != q.kind) return false;  // cap vs cup never cross
  // same kind: crossing iff interleaved
  return (p.x1 < q.x1 && inside(q.x1, p.x1, p.x2) && !inside(q.x2, p.x1, p.x2)) ||
         (q.x1 < p.x1 && inside(p.x1, q.x1, q.x2) && !inside(p.x2, q.x1, q.x2));
}

}  // namespace

int BrauerDiagram::crossing_count() const {
  int count = 0;
  for (size_t i = 0; i < arcs_.size(); ++i)
    for (size_t j = i + 1; j < arcs_.size(); ++j)
      if (arcs_cross(geom_of(*this, arcs_[i]), geom_of(*this, arcs_[j]))) ++count;
  return count;
}

BrauerDiagram BrauerDiagram::flipped() const {
  std::vector<std::pair<int, int>> arcs;
  auto map = [&](int p) { return p < bottom_ ? p + top_ : p - bottom_; };
  for (const auto& [a, b] : arcs_) arcs.emplace_back(map(a), map(b));
  return BrauerDiagram(top_, bottom_, std::move(arcs));
}

std::string BrauerDiagram::to_string() const {
  std::ostringstream os;
  os << "[";
  bool first = true;
  auto name = [&](int p) {
    return p < bottom_ ? "b" + std::to_string(p + 1) : "t" + std::to_string(p - bottom_ + 1);
  };
  for (const auto& [a, b] : arcs_) {
    if (!first) os << ",";
    os << name(a) << "-" << name(b);
    first = false;
  }
  os << "]";
  return os.str();
}

BrauerMorphism::BrauerMorphism(const Field& f, int bottom, int top)
    : field_(f), bottom_(bottom), top_(top) {}

BrauerMorphism BrauerMorphism::single(const Field& f, const BrauerDiagram& d) {
  BrauerMorphism m(f, d.bottom(), d.top());
  m.add_term(d, Poly::one(f));
  return m;
}

void BrauerMorphism::add_term(const BrauerDiagram& d, const Poly& coeff) {
  if (d.bottom() != bottom_ || d.top() != top_) throw math_error("diagram arity mismatch");
  auto [it, fresh] = terms_.try_emplace(d, coeff);
  if (!fresh) {
    it->second = it->second + coeff;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

BrauerMorphism operator+(const BrauerMorphism& a, const BrauerMorphism& b) {
  BrauerMorphism m = a;
  for (const auto& [d, c] : b.terms_) m.add_term(d, c);
  return m;
}

BrauerMorphism BrauerMorphism::operator*(const Poly& c) const {
  BrauerMorphism m(field_, bottom_, top_);
  for (const auto& [d, coeff] : terms_) m.add_term(d, coeff * c);
  return m;
}

bool operator==(const BrauerMorphism& a, const BrauerMorphism& b) {
  return a.bottom_ == b.bottom_ && a.top_ == b.top_ && a.terms_ == b.terms_;
}

std::string BrauerMorphism::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (const auto& [d, c] : terms_) {
    if (!first) os << " + ";
    os << "(" << c.to_string("t") << ")*" << d.to_string();
    first = false;
  }
  if (first) os << "0";
  return os.str();
}

std::pair<BrauerDiagram, int> compose_diagrams(const BrauerDiagram& a, const BrauerDiagram& b) {
  if (b.top() != a.bottom()) throw math_error("diagram composition arity mismatch");
  int r1 = b.bottom(), r2 = a.bottom(), r3 = a.top();
  // Node labels: 0..r1-1 result bottom, then middle 0..r2-1, then result top.
  // Walk the glued graph: edges from b's arcs (bottom/middle) and a's arcs
  // (middle/top); middle nodes have degree exactly 2.
  auto b_other = [&](int p) { return b.partner(p); };
  auto a_other = [&](int p) { return a.partner(p); };
  std::vector<std::pair<int, int>> arcs;
  int loops = 0;
  std::vector<char> used_mid(r2, 0);
  std::vector<char> visited(r1 + r3, 0);

  auto walk_from = [&](int start_kind, int start_idx) {
    // start at a visible endpoint; returns the terminal visible point.
    int kind = start_kind, idx = start_idx;  // kind 0: b-bottom, 1: a-top
    // first step
    int point = kind == 0 ? b_other(idx) : a_other(idx + r2);
    bool in_b = (kind == 0);
    while (true) {
      if (in_b) {
        // point is in b's label space
        if (point < r1) return std::make_pair(0, point);  // result bottom
        int mid = point - r1;
        used_mid[mid] = 1;
        point = a_other(mid);
        in_b = false;
      } else {
        if (point >= r2) return std::make_pair(1, point - r2);  // result top
        used_mid[point] = 1;
        point = b_other(point + r1);
        in_b = true;
      }
    }
  };

  for (int i = 0; i < r1 + r3; ++i) {
    if (visited[i]) continue;
    visited[i] = 1;
    auto [kind, idx] = i < r1 ? walk_from(0, i) : walk_from(1, i - r1);
    int me = i < r1 ? i : r1 + (i - r1);
    int other = kind == 0 ? idx : r1 + idx;
    visited[other] = 1;
    arcs.emplace_back(me, other);
  }
  // loops: middle cycles never touched by the walks
  std::vector<char> mid_seen = used_mid;
  for (int m = 0; m < r2; ++m) {
    if (mid_seen[m]) continue;
    ++loops;
    int cur = m;
    bool in_a = true;  // start with a's arc
    while (true) {
      mid_seen[cur] = 1;
      int nxt = in_a ? a_other(cur) : b_other(cur + r1) - r1;
      in_a = !in_a;
      cur = nxt;
      if (cur == m && in_a) break;
      if (mid_seen[cur] && in_a) break;
    }
  }
  return {BrauerDiagram(r1, r3, std::move(arcs)), loops};
}

BrauerMorphism compose(const BrauerMorphism& a, const BrauerMorphism& b) {
  const Field& f = a.field();
  BrauerMorphism out(f, b.bottom(), a.top());
  Poly t = Poly::variable(f);
  for (const auto& [da, ca] : a.terms())
    for (const auto& [db, cb] : b.terms()) {
      auto [d, loops] = compose_diagrams(da, db);
      Poly coeff = ca * cb;
      for (int l = 0; l < loops; ++l) coeff = coeff * t;
      out.add_term(d, coeff);
    }
  return out;
}

int64_t hom_dimension(int r1, int r2) {
  if ((r1 + r2) % 2 != 0) return 0;
  int m = (r1 + r2) / 2;
  int64_t v = 1;
  for (int k = 2 * m; k > 0; k -= 2) v *= (k - 1);  // (2m-1)!! matchings
  return v;
}

std::vector<BrauerDiagram> enumerate_diagrams(int r, int s) {
  std::vector<BrauerDiagram> out;
  if ((r + s) % 2 != 0) return out;
  int total = r + s;
  std::vector<std::pair<int, int>> arcs;
  std::vector<char> used(total, 0);
  auto rec = [&](auto&& self) -> void {
    int first = -1;
    for (int i = 0; i < total; ++i)
      if (!used[i]) {
        first = i;
        break;
      }
    if (first < 0) {
      out.emplace_back(r, s, arcs);
      return;
    }
    used[first] = 1;
    for (int j = first + 1; j < total; ++j) {
      if (used[j]) continue;
      used[j] = 1;
      arcs.emplace_back(first, j);
      self(self);
      arcs.pop_back();
      used[j] = 0;
    }
    used[first] = 0;
  };
  rec(rec);
  return out;
}

Scalar functor_loop_scalar(const Field& f, const FormData& form) {
  return f(form.flavor() == Flavor::Orthogonal ? form.N() : -form.N());
}

Scalar dimension_probe(const Field& f, const FormData& form) {
  // ev o sigma o coev = tr(G^{-1} G)
  SpMat g = form.g_matrix(f), gi = form.g_inverse_matrix(f);
  SpMat prod = gi * g;
  Scalar tr = f.zero();
  for (int i = 0; i < form.N(); ++i) tr += prod.get(i, i);
  return tr;
}

Scalar plain_loop_probe(const Field& f, const FormData& form) {
  // The closed cup-cap circle as honest operators: cap o cup.
  BrauerDiagram cup(0, 2, {{0, 1}});
  BrauerDiagram cap(2, 0, {{0, 1}});
  SpMat m = evaluate_diagram(cap, f, form) * evaluate_diagram(cup, f, form);
  return m.get(0, 0);
}

SpMat evaluate_diagram(const BrauerDiagram& d, const Field& f, const FormData& form) {
  int N = form.N(), n = form.n();
  int r = d.bottom(), s = d.top();
  int cols = 1, rows = 1;
  for (int k = 0; k < r; ++k) cols *= N;
  for (int k = 0; k < s; ++k) rows *= N;
  SpMat out(f, rows, cols);

  // Split the arcs.
  std::vector<std::pair<int, int>> caps, cups, throughs;  // local coordinates
  for (const auto& arc : d.arcs()) {
    ArcGeom g = geom_of(d, arc);
    if (g.kind == 0) caps.emplace_back(g.x1, g.x2);
    if (g.kind == 1) cups.emplace_back(g.x1, g.x2);
    if (g.kind == 2) throughs.emplace_back(g.x1, g.x2);
  }

  Scalar sign = f.one();
  if (form.flavor() == Flavor::Symplectic && d.crossing_count() % 2 == 1) sign = -sign;

  std::vector<int> bdig(r), tdig(s);
  int cup_count = static_cast<int>(cups.size());
  int cup_states = 1;
  for (int k = 0; k < cup_count; ++k) cup_states *= N;
  for (int col = 0; col < cols; ++col) {
    int tmp = col;
    for (int k = r - 1; k >= 0; --k) {
      bdig[k] = tmp % N;
      tmp /= N;
    }
    // cap factors: B(x_p, x_q) = g_{idx(p), idx(q)}
    Scalar capval = sign;
    bool zero = false;
    for (const auto& [p, q] : caps) {
      int gi = form.g_entry(idx_of(bdig[p], n), idx_of(bdig[q], n));
      if (gi == 0) {
        zero = true;
        break;
      }
      capval *= f(gi);
    }
    if (zero) continue;
    // enumerate cup assignments: cup (p,q) -> (a, -a) with coefficient
    // (G^{-1})_{a,-a}
    for (int state = 0; state < cup_states; ++state) {
      Scalar val = capval;
      int st = state;
      for (int k = 0; k < s; ++k) tdig[k] = -1;
      for (const auto& [b, t] : throughs) tdig[t] = bdig[b];
      for (int k = 0; k < cup_count; ++k) {
        int apos = st % N;
        st /= N;
        int a = idx_of(apos, n);
        // (G^{-1})_{a,-a}: 1 orthogonal, -sgn a symplectic
        int c = form.flavor() == Flavor::Orthogonal ? 1 : -sgn_idx(a);
        val *= f(c);
        tdig[cups[k].first] = apos;
        tdig[cups[k].second] = pos_of(-a, n);
      }
      int row = 0;
      for (int k = 0; k < s; ++k) row = row * N + tdig[k];
      out.add_entry(row, col, val);
    }
  }
  return out;
}

SpMat evaluate_morphism(const BrauerMorphism& m, const FormData& form, const Scalar& t_value) {
  const Field& f = m.field();
  int N = form.N();
  int cols = 1, rows = 1;
  for (int k = 0; k < m.bottom(); ++k) cols *= N;
  for (int k = 0; k < m.top(); ++k) rows *= N;
  SpMat out(f, rows, cols);
  for (const auto& [d, c] : m.terms()) out = out + evaluate_diagram(d, f, form) * c.eval(t_value);
  return out;
}

Poly diagram_pairing(const Field& f, const BrauerDiagram& a, const BrauerDiagram& b) {
  auto [comp, loops] = compose_diagrams(a.flipped(), b);
  // Close the residual [m] -> [m] diagram with identity strands and count
  // every cycle.
  int m = comp.bottom();
  int total_loops = loops;
  std::vector<char> seen(m, 0);
  for (int i = 0; i < m; ++i) {
    if (seen[i]) continue;
    ++total_loops;
    int cur = i;  // bottom point
    while (true) {
      seen[cur] = 1;
      int p = comp.partner(cur);
      // follow the closure edge: top j glues to bottom j
      int nxt = p < m ? p : p - m;
      if (p >= m) seen[nxt] = 0;  // bottom marker handled below
      seen[nxt] = 1;
      if (nxt == i) break;
      cur = nxt;
    }
  }
  Poly t = Poly::variable(f), out = Poly::one(f);
  for (int l = 0; l < total_loops; ++l) out = out * t;
  return out;
}

Poly gram_determinant(const Field& f, int m) {
  if (m > 4) throw math_error("gram determinant supported for m <= 4");
  auto diagrams = enumerate_diagrams(m, m);
  int k = static_cast<int>(diagrams.size());
  std::vector<std::vector<Poly>> gram(k, std::vector<Poly>(k, Poly::one(f)));
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) gram[i][j] = diagram_pairing(f, diagrams[i], diagrams[j]);
  // Fraction-free Bareiss over K[t].
  Poly denom = Poly::one(f);
  Scalar sign = f.one();
  std::vector<std::vector<Poly>> a = gram;
  for (int col = 0; col < k - 1; ++col) {
    int pivot = -1;
    for (int row = col; row < k; ++row)
      if (!a[row][col].is_zero()) {
        pivot = row;
        break;
      }
    if (pivot < 0) return Poly(f);  // singular: determinant 0
    if (pivot != col) {
      std::swap(a[pivot], a[col]);
      sign = -sign;
    }
    for (int row = col + 1; row < k; ++row) {
      for (int c2 = col + 1; c2 < k; ++c2)
        a[row][c2] = (a[col][col] * a[row][c2] - a[row][col] * a[col][c2]).divexact(denom);
      a[row][col] = Poly(f);
    }
    denom = a[col][col];
  }
  return a[k - 1][k - 1] * sign;
}

IntWeight weight_embedding(const std::vector<int64_t>& neg_partition, int n) {
  int k = static_cast<int>(neg_partition.size());
  if (n < k) throw math_error("rank too small for the partition");
  for (int i = 0; i + 1 < k; ++i)
    if (neg_partition[i] < neg_partition[i + 1]) throw math_error("partition not weakly decreasing");
  for (int64_t part : neg_partition)
    if (part >= 0) throw math_error("parts must be negative");
  IntWeight w(n, 0);
  for (int j = 0; j < k; ++j) w[n - k + j] = neg_partition[j];
  if (!is_dominant_gn(Flavor::Orthogonal, w)) throw math_error("embedding not dominant");
  return w;
}

}  // namespace ytw
