#pragma once

#include <optional>

#include "factored.hpp"
#include "twisted.hpp"

namespace ytw {

enum class GammaType { A, B, C };

std::string gamma_type_name(GammaType t);

// Classification data: monic Drinfeld polynomials P_1..P_n (P_1 symmetric
// about 1/2 when the double arrow is asserted), the o_2 parameter gamma for
// the orthogonal flavor, and its type tag in characteristic zero.
struct DrinfeldData {
  std::vector<Poly> polys;
  std::optional<Scalar> gamma;
  std::optional<GammaType> type_tag;

  bool operator==(const DrinfeldData& o) const {
    return polys == o.polys && gamma == o.gamma && type_tag == o.type_tag;
  }
};

// The degree-minimal monic P with P(u+1)/P(u) = nu(u)/mu(u), via the string
// construction: after reduction every numerator root a pairs with a
// denominator root b at a positive integer gap (any nonzero gap counts over
// F_p, where the minimal-total-degree pairing picks the representative below
// the q_p ambiguity). Returns nullopt when no pairing exists.
std::optional<Poly> recover_arrow(const FactoredRational& nu, const FactoredRational& mu);
std::optional<Poly> recover_arrow_ratio(const FactoredRational& ratio);

// The o_2 pair: mu'(-u)/mu'(u) = P(u+1)/P(u) (u-gamma)/(u+gamma) with
// mu' = (1 + u^{-1}/2) mu polynomial, P = P(-u+1) monic, P(gamma) != 0,
// degree-minimal.
struct O2Pair {
  Poly P;
  Scalar gamma;
};
std::optional<O2Pair> recover_pair_o2(const FactoredRational& mu);

// gamma in {1/2} -> A, -1/2 - Z_+ -> B, 3/2 + Z_+ -> C; always A in positive
// characteristic. gamma must lie in 1/2 + Z.
GammaType classify_type(const Scalar& gamma, uint32_t characteristic);

// Reorders so that each consecutive pair realizes the minimal defined
// bracket sum among the remaining ones (the reordering lemma). For odd
// length the last element is the V-parameter and stays last.
std::vector<Scalar> reorder_gammas(std::vector<Scalar> gammas);
// The minimality condition of the irreducibility proposition, used as the
// test oracle for reorder_gammas.
bool reorder_condition_holds(const std::vector<Scalar>& gammas);

// A field-independent module spec: a tensor of gl-evaluation factors
// (integer dominant weight plus a constant shift on all entries) and an
// optional constant-weight g_n factor V(c,...,c); for orthogonal type C the
// action is composed with the sharp automorphism.
struct GlFactorSpec {
  std::vector<int64_t> base;  // length 2n, dominant
  mpq_class shift;            // added to every entry
};

struct YangianModuleSpec {
  Flavor flavor = Flavor::Symplectic;
  int n = 1;
  std::vector<GlFactorSpec> gl_factors;
  int64_t v_const = 0;  // V(v_const * (1,...,1)); 0 = trivial
  bool sharp_twist = false;

  std::string describe() const;
};

// Instantiated spec: the operator matrix plus the expected top weight.
struct RealizedModule {
  TwistedOperatorMatrix S;
  std::vector<Scalar> expected_weight;
};

RealizedModule realize_spec(const YangianModuleSpec& spec, const Field& f,
                            bool allow_outside_alcove = false);

struct ExtractResult {
  DrinfeldData data;
  std::vector<FactoredRational> mu;  // extracted highest-weight components
};

// Extracts the highest weight of the realized spec via the twisted singular
// line at the maximal weight and converts it to Drinfeld data.
ExtractResult pipeline_extract(const YangianModuleSpec& spec, const Field& f,
                               bool allow_outside_alcove = false);

// Builds a module spec realizing the given data (tensor of gl-evaluation
// blocks, one per string/root, canonicalized by the reordering lemma).
YangianModuleSpec pipeline_build(const DrinfeldData& data, Flavor flavor, int n,
                                 uint32_t characteristic);

// The Drinfeld degree bound of the uniqueness statements:
// deg P_1 + 2 sum_{i>=2} deg P_i + 2n < p.
bool drinfeld_degree_bound_ok(const DrinfeldData& data, int n, uint32_t p);

// Reduction of characteristic-zero data mod p.
DrinfeldData reduce_data_mod(const DrinfeldData& data, const Field& fp);
Poly reduce_poly_mod(const Poly& p, const Field& fp);

}  // namespace ytw
