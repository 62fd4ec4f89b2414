#pragma once

#include <map>

#include "liecore.hpp"
#include "poly.hpp"

namespace ytw {

// A perfect matching on r bottom dots (0..r-1) and s top dots (r..r+s-1).
class BrauerDiagram {
 public:
  BrauerDiagram(int bottom, int top, std::vector<std::pair<int, int>> arcs);
  static BrauerDiagram identity(int r);

  int bottom() const { return bottom_; }
  int top() const { return top_; }
  const std::vector<std::pair<int, int>>& arcs() const { return arcs_; }
  int partner(int point) const;
  bool is_bottom(int point) const { return point < bottom_; }

  // Crossing parity of the standard two-line drawing (arcs as interleaving
  // pairs); well defined on the matching.
  int crossing_count() const;

  // Top/bottom flip (the mirror diagram).
  BrauerDiagram flipped() const;

  friend bool operator==(const BrauerDiagram& a, const BrauerDiagram& b) {
    return a.bottom_ == b.bottom_ && a.top_ == b.top_ && a.arcs_ == b.arcs_;
  }
  friend bool operator<(const BrauerDiagram& a, const BrauerDiagram& b) {
    return std::tie(a.bottom_, a.top_, a.arcs_) < std::tie(b.bottom_, b.top_, b.arcs_);
  }

  std::string to_string() const;

 private:
  int bottom_, top_;
  std::vector<std::pair<int, int>> arcs_;  // canonical: first < second, sorted
};

// Formal linear combination of diagrams with coefficients in K[t].
class BrauerMorphism {
 public:
  BrauerMorphism(const Field& f, int bottom, int top);
  static BrauerMorphism single(const Field& f, const BrauerDiagram& d);

  const Field& field() const { return field_; }
  int bottom() const { return bottom_; }
  int top() const { return top_; }
  const std::map<BrauerDiagram, Poly>& terms() const { return terms_; }

  void add_term(const BrauerDiagram& d, const Poly& coeff);
  friend BrauerMorphism operator+(const BrauerMorphism& a, const BrauerMorphism& b);
  BrauerMorphism operator*(const Poly& c) const;
  friend bool operator==(const BrauerMorphism& a, const BrauerMorphism& b);

  std::string to_string() const;

 private:
  Field field_;
  int bottom_, top_;
  std::map<BrauerDiagram, Poly> terms_;
};

// Stack A on top of B ([r1] -> [r2] -> [r3]), concatenate arcs, erase loops,
// multiply by t per loop.
std::pair<BrauerDiagram, int> compose_diagrams(const BrauerDiagram& a, const BrauerDiagram& b);
BrauerMorphism compose(const BrauerMorphism& a, const BrauerMorphism& b);

// 0 when r1 + r2 is odd, else (2m)!/(m! 2^m) with m = (r1+r2)/2.
int64_t hom_dimension(int r1, int r2);

// All perfect matchings in Hom([r], [s]).
std::vector<BrauerDiagram> enumerate_diagrams(int r, int s);

// The loop scalar the arc-contraction functor is exactly functorial for:
// +2n (orthogonal) or -2n (symplectic; the crossing-parity sign makes every
// closed loop evaluate there).
Scalar functor_loop_scalar(const Field& f, const FormData& form);

// The categorical dimension probe: the loop closed through one crossing,
// ev o sigma o coev = tr(G^{-1} G) = 2n for both flavors.
Scalar dimension_probe(const Field& f, const FormData& form);
// The plain cup-then-cap closure, ev o coev = tr(G^{-1} G^t) = +/- 2n.
Scalar plain_loop_probe(const Field& f, const FormData& form);

// Arc-contraction operator of a diagram on tensor powers of K^{2n}: caps
// contract with the form G, cups insert the dual copairing G^{-1}, through
// strands are identities; the symplectic case carries the crossing-parity
// sign. evaluate(compose(A,B)) = evaluate(A) evaluate(B) with t set to
// functor_loop_scalar.
SpMat evaluate_diagram(const BrauerDiagram& d, const Field& f, const FormData& form);
SpMat evaluate_morphism(const BrauerMorphism& m, const FormData& form, const Scalar& t_value);

// Closure pairing <a, b> = t^{loops of the full closure of flipped(a) o b}.
Poly diagram_pairing(const Field& f, const BrauerDiagram& a, const BrauerDiagram& b);

// Determinant of the Gram matrix of Hom([m],[m]) under the closure pairing.
Poly gram_determinant(const Field& f, int m);

// [lambda]_{t_n}: the dominant g_n-weight with the negative partition's
// parts in the last k slots.
IntWeight weight_embedding(const std::vector<int64_t>& neg_partition, int n);

}  // namespace ytw
