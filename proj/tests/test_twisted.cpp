#include <memory>

#include "doctest.h"
#include "twisted.hpp"

using namespace ytw;

namespace {

std::shared_ptr<GModule> mk(GModule m) { return std::make_shared<GModule>(std::move(m)); }

void check_relations(const TwistedOperatorMatrix& s) {
  CHECK(check_symmetry(s).ok);
  CHECK(check_quaternary(s).ok);
}

}  // namespace

TEST_CASE("twisted_S relations on evaluation and tensor modules") {
  Field Q = Field::rationals();
  Field F101 = Field::prime_field(101);
  for (const Field& f : {Q, F101}) {
    for (Flavor fl : {Flavor::Orthogonal, Flavor::Symplectic}) {
      FormData form(fl, 1);
      OperatorMatrix t = evaluation_T(mk(gl_natural(f, form)));
      SUBCASE("trivial module") {
        OperatorMatrix triv = evaluation_T(mk(gl_one_dimensional(f, form, f.zero())));
        TwistedOperatorMatrix s = twisted_S(triv);
        CHECK(s.num_coeff(1, 1, 0).get(0, 0) == f.one());
        check_relations(s);
      }
      SUBCASE("natural evaluation") { check_relations(twisted_S(t)); }
      SUBCASE("two-fold tensor") { check_relations(twisted_S(tensor_T(t, t))); }
    }
  }
}

TEST_CASE("twisted evaluation modules") {
  Field Q = Field::rationals();
  SUBCASE("o_2 one-dimensional V(gamma): s_11 = (1+(gamma+1/2)u^{-1})/(1+u^{-1}/2)") {
    auto v = mk(o2_one_dimensional(Q, Q(1)));
    TwistedOperatorMatrix s = twisted_eval(v);
    CHECK(s.denom() == Poly(Q, {Q(1), Q(1, 2)}));
    CHECK(s.num_coeff(1, 1, 1).get(0, 0) == Q(3, 2));
    check_relations(s);
  }
  SUBCASE("sp_2 natural g-module") {
    FormData form(Flavor::Symplectic, 1);
    TwistedOperatorMatrix s = twisted_eval(mk(gn_natural(Q, form)));
    // s-matrix entries against the F matrices: numerator of s_{ij} has
    // degree-1 coefficient F_ij + delta_ij (-1/2).
    GModule gn = gn_natural(Q, form);
    for (int i : {-1, 1})
      for (int j : {-1, 1}) {
        SpMat expect = gn.F(i, j);
        if (i == j) expect = expect + SpMat::identity(Q, 2) * Q(-1, 2);
        CHECK(s.num_coeff(i, j, 1) == expect);
      }
    check_relations(s);
  }
  SUBCASE("orthogonal natural g-module, n=2") {
    FormData form(Flavor::Orthogonal, 2);
    check_relations(twisted_eval(mk(gn_natural(Q, form))));
  }
}

TEST_CASE("mixed tensor relations and highest weights") {
  Field Q = Field::rationals();
  SUBCASE("L(1,-1) (x) trivial, symplectic: highest component (1-u^{-1})^2") {
    FormData form(Flavor::Symplectic, 1);
    GModule l = gl_highest_weight_module(Q, form, {1, -1}, Q(0));
    OperatorMatrix t = evaluation_T(mk(std::move(l)));
    TwistedOperatorMatrix s = mixed_tensor(t, twisted_eval(mk(gn_trivial(Q, form))));
    CHECK(s.degree() == 3);  // 2k+1 with the trivial V-factor denominator
    check_relations(s);
    auto lines = twisted_singular_lines(s);
    REQUIRE(!lines.empty());
    // The maximal line carries mu(u) = (1-u^{-1})^2.
    FactoredRational expect = FactoredRational::one_plus_c_over_u(Q(-1));
    expect = expect * expect;
    bool found = false;
    for (const auto& line : lines) found = found || (line.mu[0] == expect);
    CHECK(found);
    for (const auto& line : lines) CHECK(check_negative_diag_series(s, line, 12));
  }
  SUBCASE("one gl eval (x) o_2 V(gamma): component lambda(u) lambda(-u) mu(u)") {
    FormData form(Flavor::Orthogonal, 1);
    OperatorMatrix t = evaluation_T(mk(gl_natural(Q, form)));
    TwistedOperatorMatrix s = mixed_tensor(t, twisted_eval(mk(o2_one_dimensional(Q, Q(2)))));
    check_relations(s);
    auto lines = twisted_singular_lines(s);
    // Expected top component: (1+u^{-1})(1-0 u^{-1}) ... with lambda_{-1}=1,
    // lambda_1=0: lambda_1(u) lambda_{-1}(-u) mu_1(u)
    //   = 1 * (1-u^{-1}) * (1+(5/2)u^{-1})/(1+(1/2)u^{-1}).
    FactoredRational expect = FactoredRational::one_plus_c_over_u(Q(-1)) *
                              (FactoredRational::one_plus_c_over_u(Q(5, 2)) /
                               FactoredRational::one_plus_c_over_u(Q(1, 2)));
    bool found = false;
    for (const auto& line : lines) found = found || (line.mu[0] == expect);
    CHECK(found);
  }
  SUBCASE("two gl factors, sp n=2, over F101") {
    Field F = Field::prime_field(101);
    FormData form(Flavor::Symplectic, 2);
    OperatorMatrix t = evaluation_T(mk(gl_natural(F, form)));
    OperatorMatrix t2 = tensor_T(t, t);
    TwistedOperatorMatrix s = mixed_tensor(t2, twisted_eval(mk(gn_trivial(F, form))));
    check_relations(s);
  }
}

TEST_CASE("sharp automorphism") {
  Field Q = Field::rationals();
  SUBCASE("identity stays identity and sharp is an involution") {
    FormData form(Flavor::Orthogonal, 1);
    TwistedOperatorMatrix s = twisted_eval(mk(o2_one_dimensional(Q, Q(1))));
    TwistedOperatorMatrix s1 = sharp(s);
    check_relations(s1);
    TwistedOperatorMatrix s2 = sharp(s1);
    for (int i : {-1, 1})
      for (int j : {-1, 1})
        for (int d = 0; d <= s.degree(); ++d)
          CHECK(s2.num_coeff(i, j, d) == s.num_coeff(i, j, d));
  }
  SUBCASE("on V(gamma=1) the weight transforms by (u-gamma+1)/(u+gamma), gamma = 3/2") {
    // V(1) carries the pair (P, gamma) = (1, 3/2); the sharp-composed weight
    // is mu(u)(u - 1/2)/(u + 3/2).
    TwistedOperatorMatrix s = twisted_eval(mk(o2_one_dimensional(Q, Q(1))));
    auto lines = twisted_singular_lines(sharp(s));
    REQUIRE(lines.size() == 1);
    FactoredRational mu = FactoredRational::one_plus_c_over_u(Q(3, 2)) /
                          FactoredRational::one_plus_c_over_u(Q(1, 2));
    FactoredRational shift = FactoredRational::from_roots(Q, {Q(1, 2)}, {Q(-3, 2)}, Q(1));
    CHECK(lines[0].mu[0] == mu * shift);
  }
  SUBCASE("symplectic flavor rejected") {
    FormData form(Flavor::Symplectic, 1);
    TwistedOperatorMatrix s = twisted_eval(mk(gn_natural(Q, form)));
    CHECK_THROWS_AS(sharp(s), math_error);
  }
}

TEST_CASE("rescale by an even polynomial") {
  Field Q = Field::rationals();
  TwistedOperatorMatrix s = twisted_eval(mk(o2_one_dimensional(Q, Q(1))));
  Poly g(Q, {Q(1), Q(0), Q(-1, 4)});  // 1 - u^{-2}/4
  TwistedOperatorMatrix gs = rescale_S(s, g);
  check_relations(gs);
  auto lines = twisted_singular_lines(gs);
  REQUIRE(lines.size() == 1);
  // weight = g(u) (1+(3/2)u^{-1})/(1+(1/2)u^{-1}) = (1+(3/2)u^{-1})(1-(1/2)u^{-1})
  FactoredRational expect =
      FactoredRational::one_plus_c_over_u(Q(3, 2)) * FactoredRational::one_plus_c_over_u(Q(-1, 2));
  CHECK(lines[0].mu[0] == expect);
  CHECK_THROWS_AS(rescale_S(s, Poly(Q, {Q(1), Q(1)})), math_error);
}

TEST_CASE("Sklyanin determinant") {
  Field Q = Field::rationals();
  SUBCASE("trivial module: sdet = alpha_N") {
    for (Flavor fl : {Flavor::Orthogonal, Flavor::Symplectic}) {
      FormData form(fl, 1);
      auto triv = mk(gn_trivial(Q, form));
      USeries sd = sdet_scalar(twisted_eval(triv), 10);
      CHECK(sd == alpha_factor(Q, form).expand(10));
    }
  }
  SUBCASE("beta_N = alpha_N (series and exact points)") {
    for (Flavor fl : {Flavor::Orthogonal, Flavor::Symplectic}) {
      for (int n : {1, 2}) {
        FormData form(fl, n);
        CHECK(beta_series(Q, form, 12) == alpha_factor(Q, form).expand(12));
        CHECK(beta_matches_alpha_at_points(Q, form,
                                           {Q(5), Q(7), Q(11, 3), Q(-9, 2), Q(13)}));
      }
    }
  }
  SUBCASE("sdet = alpha qdet(u) qdet(-u+N-1) on gl-eval modules, N=2") {
    for (Flavor fl : {Flavor::Orthogonal, Flavor::Symplectic}) {
      FormData form(fl, 1);
      for (IntWeight w : {IntWeight{1, 0}, IntWeight{1, -1}, IntWeight{2, 0}}) {
        OperatorMatrix t = evaluation_T(mk(gl_highest_weight_module(Q, form, w, Q(0))));
        TwistedOperatorMatrix s = twisted_S(t);
        USeries sd = sdet_scalar(s, 10);
        USeries q = qdet_scalar(t, 10);
        USeries rhs = alpha_factor(Q, form).expand(10) * q * useries_neg_shift(q, Q(1), 10);
        CHECK(sd == rhs);
        CHECK(check_alpha_parity(sd, form));
        CHECK(odd_coeffs_determined_by_even(sd, form));
        // the hand-derived permutation-style closed form agrees
        USeries closed = sdet_n2_closed_form(s, 10).scalar_series();
        CHECK(closed == sd);
      }
    }
  }
  SUBCASE("symplectic trivial value (2u+1)/(2u-1)") {
    FormData form(Flavor::Symplectic, 1);
    USeries sd = sdet_scalar(twisted_eval(mk(gn_trivial(Q, form))), 10);
    FactoredRational expect = FactoredRational::from_roots(Q, {Q(-1, 2)}, {Q(1, 2)}, Q(1));
    CHECK(sd == expect.expand(10));
  }
}

TEST_CASE("twisted singular lines: unique on alcove modules, several on a reducible one") {
  Field Q = Field::rationals();
  FormData form(Flavor::Symplectic, 1);
  // L(1,-1) evaluation: irreducible, one line.
  OperatorMatrix t = evaluation_T(mk(gl_highest_weight_module(Q, form, {1, -1}, Q(0))));
  CHECK(twisted_singular_lines(twisted_S(t)).size() == 1);
  // L(0,-1) (x) L(1,0) violates the gamma-ordering condition of the tensor
  // irreducibility proposition (the reversed order satisfies it): reducible,
  // and the exhaustive kernel finds a second line.
  OperatorMatrix bad =
      tensor_T(evaluation_T(mk(gl_dual(Q, form))), evaluation_T(mk(gl_natural(Q, form))));
  CHECK(twisted_singular_lines(twisted_S(bad)).size() > 1);
  OperatorMatrix good =
      tensor_T(evaluation_T(mk(gl_natural(Q, form))), evaluation_T(mk(gl_dual(Q, form))));
  CHECK(twisted_singular_lines(twisted_S(good)).size() == 1);
}

TEST_CASE("point-sampled relation checks agree with the coefficientwise ones") {
  for (const char* fs : {"Q", "Fp:101"}) {
    Field f = Field::parse(fs);
    for (Flavor fl : {Flavor::Orthogonal, Flavor::Symplectic}) {
      FormData form(fl, 1);
      OperatorMatrix t = evaluation_T(mk(gl_natural(f, form)));
      OperatorMatrix t2 = tensor_T(t, t);
      CHECK(check_ternary_at_points(t2).ok);
      TwistedOperatorMatrix s = twisted_S(t2);
      CHECK(check_quaternary_at_points(s).ok);
      CHECK(check_quaternary_components(s).ok);
      CHECK(check_symmetry_at_points(s).ok);
      TwistedOperatorMatrix bad = s;
      bad.add_num_coeff(-1, 1, 1, SpMat::single(f, 4, 4, 0, 0, f.one()));
      CHECK(!check_quaternary_at_points(bad).ok);
      CHECK(!check_quaternary_components(bad).ok);
    }
  }
}

TEST_CASE("ZHC decomposition checks") {
  Field Q = Field::rationals();
  for (Flavor fl : {Flavor::Orthogonal, Flavor::Symplectic}) {
    FormData form(fl, 1);
    SUBCASE("trivial module") {
      OperatorMatrix t = evaluation_T(mk(gl_one_dimensional(Q, form, Q(0))));
      ZhcReport rep = zhc_decomposition_check(t, 10);
      CHECK(rep.ok());
    }
    SUBCASE("L(1,0) evaluation") {
      OperatorMatrix t = evaluation_T(mk(gl_natural(Q, form)));
      ZhcReport rep = zhc_decomposition_check(t, 10);
      CHECK(rep.factorization_ok);
      CHECK(rep.centrality_ok);
      CHECK(rep.invariance_ok);
    }
  }
  SUBCASE("over F101") {
    Field F = Field::prime_field(101);
    FormData form(Flavor::Symplectic, 1);
    OperatorMatrix t = evaluation_T(mk(gl_natural(F, form)));
    CHECK(zhc_decomposition_check(t, 10).ok());
  }
}
