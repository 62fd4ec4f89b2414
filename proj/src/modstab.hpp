#pragma once

#include "drinfeld.hpp"

namespace ytw {

// Pairs (p, s) with q(2s) = 0 mod p, p an odd prime; the modular avatars of
// an algebraic parameter t with minimal polynomial q.
struct ModularParams {
  Poly q;  // over Q
  std::vector<std::pair<uint32_t, int64_t>> pairs;
};

// Sieves primes p >= p_min and residues s in [0, p) for q(2s) = 0 mod p,
// collecting `count` pairs. q must have no integer root (checked for
// degree-1 inputs and by rational root search). Throws when the search
// bound is exhausted first.
ModularParams find_modular_parameters(const Poly& q, int count, uint32_t p_min,
                                      uint32_t search_bound = 100000);

// Filters to pairs with p - 2s > c.
std::vector<std::pair<uint32_t, int64_t>> gap_filter(const ModularParams& params, int64_t c);

// A stabilization spec: tail-indexed arrow polynomials T_1, T_2, ... over Q
// (position j counts from the bottom diagonal entry), realized at rank n by
// one gl-evaluation block per root, with the block's zero slots at the last
// j positions. Its Drinfeld tail data is rank-independent by construction
// of the classification.
struct StabilitySpec {
  std::string name;
  Flavor flavor = Flavor::Symplectic;
  std::vector<Poly> tail;  // over Q, monic with rational roots
};

// The realized module spec at a given rank.
YangianModuleSpec stability_module_spec(const StabilitySpec& spec, int n, const Field& f);

// Tail data extracted at rank n over f: arrow polynomials from the
// bottom-indexed ratios, trimmed of trailing 1s.
std::vector<Poly> extract_tail_data(const StabilitySpec& spec, int n, const Field& f);

struct HypothesisLedger {
  bool alcove = false;        // -2 lambda_n + 2n < p on the top weight
  bool degree_bound = false;  // 2 sum deg T_j + 2n < p
};

HypothesisLedger stability_hypotheses(const StabilitySpec& spec, int n, uint32_t p);

struct StabilityCell {
  std::string field;
  int rank = 0;
  HypothesisLedger ledger;
  bool skipped = false;  // hypothesis violated
  bool agrees = false;   // equals the reduced rational reference
  std::vector<Poly> tail;
};

struct StabilityReport {
  std::string spec_name;
  std::string flavor;
  std::vector<Poly> reference;  // rational tail data at the base rank
  std::vector<StabilityCell> cells;
  bool pass = false;
  std::string detail;
};

// Runs the panel: ranks {n0, n0+1, n0+2} over Q and every requested prime;
// PASS iff every non-skipped cell equals the mod-p reduction of the rational
// reference (rank padding included). Cells run in parallel, assembled in a
// canonical order.
StabilityReport stability_experiment(const StabilitySpec& spec,
                                     const std::vector<uint32_t>& primes, bool compare_to_q = true);

}  // namespace ytw
