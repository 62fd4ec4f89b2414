#include <random>

#include "doctest.h"
#include "liecore.hpp"

using namespace ytw;

TEST_CASE("form matrices satisfy the paper's identities") {
  Field Q = Field::rationals();
  for (Flavor fl : {Flavor::Orthogonal, Flavor::Symplectic}) {
    for (int n : {1, 2, 3}) {
      FormData form(fl, n);
      SpMat g = form.g_matrix(Q);
      SpMat gi = form.g_inverse_matrix(Q);
      CHECK(g * gi == SpMat::identity(Q, form.N()));
      SpMat gt = g.transpose();
      if (fl == Flavor::Orthogonal)
        CHECK(gt == g);
      else
        CHECK(gt == -g);
      // theta_{ij} theta_{ji} = 1
      for (int i = -n; i <= n; ++i)
        for (int j = -n; j <= n; ++j)
          if (i && j) CHECK(form.theta(i, j) * form.theta(j, i) == 1);
    }
  }
}

TEST_CASE("prime transpose examples and anti-homomorphism") {
  Field Q = Field::rationals();
  SUBCASE("identity") {
    FormData form(Flavor::Orthogonal, 2);
    CHECK(prime_transpose(SpMat::identity(Q, 4), form) == SpMat::identity(Q, 4));
  }
  SUBCASE("orthogonal n=1: E_{1,1} -> E_{-1,-1}") {
    FormData form(Flavor::Orthogonal, 1);
    SpMat e11 = SpMat::single(Q, 2, 2, pos_of(1, 1), pos_of(1, 1), Q(1));
    SpMat expect = SpMat::single(Q, 2, 2, pos_of(-1, 1), pos_of(-1, 1), Q(1));
    CHECK(prime_transpose(e11, form) == expect);
    // agrees with G^{-1} E^t G
    SpMat direct = form.g_inverse_matrix(Q) * e11.transpose() * form.g_matrix(Q);
    CHECK(prime_transpose(e11, form) == direct);
  }
  SUBCASE("symplectic n=1: E_{1,-1} -> -E_{1,-1}") {
    FormData form(Flavor::Symplectic, 1);
    SpMat e = SpMat::single(Q, 2, 2, pos_of(1, 1), pos_of(-1, 1), Q(1));
    CHECK(prime_transpose(e, form) == -e);
  }
  SUBCASE("anti-homomorphism and involution on random matrices") {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<long> d(-3, 3);
    for (Flavor fl : {Flavor::Orthogonal, Flavor::Symplectic}) {
      FormData form(fl, 2);
      for (int trial = 0; trial < 25; ++trial) {
        SpMat a(Q, 4, 4), b(Q, 4, 4);
        for (int i = 0; i < 4; ++i)
          for (int j = 0; j < 4; ++j) {
            a.add_entry(i, j, Q(d(rng)));
            b.add_entry(i, j, Q(d(rng)));
          }
        CHECK(prime_transpose(prime_transpose(a, form), form) == a);
        CHECK(prime_transpose(a * b, form) == prime_transpose(b, form) * prime_transpose(a, form));
        // G^{-1} A^t G route
        CHECK(prime_transpose(a, form) ==
              form.g_inverse_matrix(Q) * a.transpose() * form.g_matrix(Q));
      }
    }
  }
}

TEST_CASE("dominance and alcove") {
  SUBCASE("lambda = 0 inside for p >= 3") {
    for (Flavor fl : {Flavor::Orthogonal, Flavor::Symplectic})
      for (uint32_t p : {3u, 5u, 101u}) {
        // rho pairings must fit below p for the zero weight at small rank
        if (fl == Flavor::Symplectic && p == 3) continue;  // <rho,alpha> reaches 3 at n=2
        CHECK(in_fundamental_alcove(fl, {0, 0}, p));
      }
  }
  SUBCASE("sp n=2 lemma bound and exact test") {
    IntWeight lam = {0, -1};
    CHECK(alcove_lemma_bound(lam, 11));       // -2(-1)+4 = 6 < 11
    CHECK(in_fundamental_alcove(Flavor::Symplectic, lam, 11));
    // p = 3: direct pairing test fails (pairing -lam-...-rho reaches 4)
    CHECK(!in_fundamental_alcove(Flavor::Symplectic, lam, 3));
  }
  SUBCASE("non-dominant rejected") {
    CHECK_THROWS_AS(in_fundamental_alcove(Flavor::Symplectic, {-2, -1}, 11), math_error);
    CHECK(!is_dominant_gn(Flavor::Symplectic, {1, 0}));
    CHECK(is_dominant_gl({2, 1, 0, -1}));
    CHECK(!is_dominant_gl({0, 1}));
  }
}

TEST_CASE("weyl dimension") {
  CHECK(weyl_dimension(Flavor::Symplectic, {0, 0}) == 1);
  CHECK(weyl_dimension(Flavor::Orthogonal, {0, 0, 0}) == 1);
  CHECK(weyl_dimension(Flavor::Symplectic, {0, -1}) == 4);   // natural sp_4
  CHECK(weyl_dimension(Flavor::Orthogonal, {0, 0, -1}) == 6);  // natural so_6
  CHECK(weyl_dimension(Flavor::Orthogonal, {0, -1, -1}) == 15);  // wedge^2 so_6
  // so_4 wedge-square splits; the (-1,-1) constituent is 3-dimensional (the
  // value 6 is the O_4 induced module, which lives above the Lie algebra).
  CHECK(weyl_dimension(Flavor::Orthogonal, {-1, -1}) == 3);
}

TEST_CASE("module constructors satisfy brackets and grading") {
  Field Q = Field::rationals();
  Field F101 = Field::prime_field(101);
  for (const Field& f : {Q, F101}) {
    for (Flavor fl : {Flavor::Orthogonal, Flavor::Symplectic}) {
      FormData form(fl, 2);
      GModule nat = gl_natural(f, form);
      CHECK(nat.check_brackets());
      CHECK(nat.check_weight_grading());
      GModule du = gl_dual(f, form);
      CHECK(du.check_brackets());
      GModule tens = tensor_product(nat, du);
      CHECK(tens.check_brackets());
      CHECK(tens.check_weight_grading());
      GModule gn = gn_natural(f, form);
      CHECK(gn.check_brackets());
      CHECK(gn.check_weight_grading());
      GModule w2 = wedge_power(gn, 2);
      CHECK(w2.check_brackets());
      GModule s2 = sym_power(nat, 2);
      CHECK(s2.check_brackets());
      CHECK(s2.dim() == 10);
    }
  }
}

TEST_CASE("natural gl_2 module E_{-1,-1} = diag(1,0)") {
  Field Q = Field::rationals();
  FormData form(Flavor::Symplectic, 1);
  GModule nat = gl_natural(Q, form);
  CHECK(nat.dim() == 2);
  CHECK(nat.E(-1, -1).get(0, 0) == Q(1));
  CHECK(nat.E(-1, -1).get(1, 1) == Q(0));
}

TEST_CASE("F' = -F for all generators") {
  Field Q = Field::rationals();
  for (Flavor fl : {Flavor::Orthogonal, Flavor::Symplectic}) {
    FormData form(fl, 2);
    int n = form.n();
    // Check on the natural representation matrices: the N x N matrix of
    // F_{ij} as an element of gl_N satisfies X' = -X.
    for (int i = -n; i <= n; ++i)
      for (int j = -n; j <= n; ++j) {
        if (!i || !j) continue;
        SpMat x(Q, form.N(), form.N());
        x.add_entry(pos_of(i, n), pos_of(j, n), Q(1));
        x.add_entry(pos_of(-j, n), pos_of(-i, n), Q(-form.theta(i, j)));
        CHECK(prime_transpose(x, form) == -x);
      }
  }
}

TEST_CASE("tensor of naturals contains the invariant vector (sp n=1)") {
  Field Q = Field::rationals();
  FormData form(Flavor::Symplectic, 1);
  GModule t = tensor_product(gn_natural(Q, form), gn_natural(Q, form));
  CHECK(t.dim() == 4);
  // The contraction vector sum_a g^{ab}-ish e_a (x) e_{-a} is killed by all F.
  DenseVec v = dense_zero(Q, 4);
  // e_{-1} (x) e_1 - e_1 (x) e_{-1} (indices via positions 0,1)
  v[0 * 2 + 1] = Q(1);
  v[1 * 2 + 0] = Q(-1);
  for (int i : {-1, 1})
    for (int j : {-1, 1}) CHECK(is_zero_vec(t.F(i, j).apply(v)));
}

TEST_CASE("highest weight submodules and Weyl dimensions") {
  Field Q = Field::rationals();
  SUBCASE("gl2 adjoint-like: L(1,-1) inside natural (x) dual") {
    FormData form(Flavor::Symplectic, 1);
    GModule parent = tensor_product(gl_natural(Q, form), gl_dual(Q, form));
    GModule sub = highest_weight_submodule(parent, {Q(1), Q(-1)}, ActionKind::Gl);
    CHECK(sub.dim() == 3);
    CHECK(sub.check_brackets());
  }
  SUBCASE("sp4 natural as V(0,-1)") {
    FormData form(Flavor::Symplectic, 2);
    GModule v = gn_highest_weight_module(Q, form, {0, -1});
    CHECK(v.dim() == weyl_dimension(Flavor::Symplectic, {0, -1}));
    CHECK(v.check_brackets());
  }
  SUBCASE("orthogonal wedge-square submodule at n=2 matches the Weyl value") {
    FormData form(Flavor::Orthogonal, 2);
    GModule v = gn_highest_weight_module(Q, form, {-1, -1});
    CHECK(v.dim() == 3);
    CHECK(v.dim() == weyl_dimension(Flavor::Orthogonal, {-1, -1}));
  }
  SUBCASE("so_6 wedge-square is 15-dimensional") {
    FormData form(Flavor::Orthogonal, 3);
    GModule v = gn_highest_weight_module(Q, form, {0, -1, -1});
    CHECK(v.dim() == 15);
  }
  SUBCASE("gl highest weight with shift") {
    FormData form(Flavor::Symplectic, 1);
    GModule l = gl_highest_weight_module(Q, form, {1, 0}, Q(-1, 2));
    CHECK(l.dim() == 2);
    CHECK(l.gl_weight(0)[0] == Q(1, 2));
  }
  SUBCASE("char p alcove gate") {
    Field F3 = Field::prime_field(3);
    FormData form(Flavor::Symplectic, 2);
    CHECK_THROWS_AS(gn_highest_weight_module(F3, form, {0, -1}), math_error);
    GModule forced = gn_highest_weight_module(F3, form, {0, -1}, true);
    CHECK(forced.dim() == 4);
    Field F5 = Field::prime_field(5);
    CHECK(gn_highest_weight_module(F5, form, {0, -1}).dim() == 4);
  }
}

TEST_CASE("dominance partial order") {
  Field Q = Field::rationals();
  std::vector<Scalar> hi = {Q(0), Q(-1)};
  std::vector<Scalar> lo = {Q(-1), Q(0)};  // differs by eps_1 - eps_2 downward
  CHECK(dominance_leq(Flavor::Symplectic, lo, hi));
  CHECK(!dominance_leq(Flavor::Symplectic, hi, lo));
  CHECK(dominance_leq(Flavor::Symplectic, hi, hi));
}
