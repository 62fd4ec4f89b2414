#include "drinfeld.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace ytw {

std::string gamma_type_name(GammaType t) {
  switch (t) {
    case GammaType::A: return "A";
    case GammaType::B: return "B";
    case GammaType::C: return "C";
  }
  return "?";
}

namespace {

mpq_class mpq_of(const Scalar& s) {
  if (s.field().is_rational()) return s.rational();
  return mpq_class(static_cast<long>(s.residue()));
}

// P(u+1)/P(u) = prod(u - A)/prod(u - B), cross-multiplied.
bool arrow_verifies(const Poly& p, const std::vector<Scalar>& A, const std::vector<Scalar>& B) {
  const Field& f = p.field();
  Poly lhs = p.shift(f.one()) * Poly::from_roots(f, B);
  Poly rhs = p * Poly::from_roots(f, A);
  return lhs == rhs;
}

}  // namespace

std::optional<Poly> recover_arrow_ratio(const FactoredRational& ratio) {
  FactoredRational r = ratio.reduced();
  const Field& f = r.field();
  if (!r.prefactor().is_one()) return std::nullopt;
  std::vector<Scalar> A = r.num_roots(), B = r.den_roots();
  if (A.size() != B.size()) return std::nullopt;
  if (A.empty()) return Poly::one(f);

  std::vector<Scalar> roots;  // of P, with multiplicity
  if (f.is_rational()) {
    // Group both sides by Z-coset; within a coset every feasible pairing
    // yields the same string multiset, so the sorted pairing is canonical.
    std::vector<std::pair<std::vector<Scalar>, std::vector<Scalar>>> groups;
    auto place = [&](const Scalar& x, bool num_side) {
      for (auto& [ga, gb] : groups) {
        const Scalar& rep = ga.empty() ? gb.front() : ga.front();
        if ((x - rep).is_integer()) {
          (num_side ? ga : gb).push_back(x);
          return;
        }
      }
      groups.emplace_back();
      (num_side ? groups.back().first : groups.back().second).push_back(x);
    };
    for (const Scalar& a : A) place(a, true);
    for (const Scalar& b : B) place(b, false);
    for (auto& [ga, gb] : groups) {
      if (ga.size() != gb.size()) return std::nullopt;
      std::sort(ga.begin(), ga.end());
      std::sort(gb.begin(), gb.end());
      for (size_t k = 0; k < ga.size(); ++k) {
        Scalar gap = gb[k] - ga[k];
        if (!gap.is_integer() || gap.integer_value() <= 0) return std::nullopt;
        for (int64_t j = 1; j <= gap.integer_value(); ++j)
          roots.push_back(ga[k] + f(static_cast<long>(j)));
      }
    }
  } else {
    // Positive characteristic: any bijection has nonzero gaps (the multisets
    // are disjoint after reduction); minimize the total of the minimal
    // representatives to stay below the q_p ambiguity.
    size_t m = A.size();
    if (m > 8) throw math_error("arrow recovery: too many roots for exhaustive pairing");
    std::vector<int> perm(m);
    std::iota(perm.begin(), perm.end(), 0);
    std::optional<int64_t> best_total;
    std::vector<int> best;
    do {
      int64_t total = 0;
      bool ok = true;
      for (size_t k = 0; k < m; ++k) {
        Scalar gap = B[perm[k]] - A[k];
        if (gap.is_zero()) {
          ok = false;
          break;
        }
        total += gap.integer_value();
      }
      if (ok && (!best_total || total < *best_total)) {
        best_total = total;
        best = perm;
      }
    } while (std::next_permutation(perm.begin(), perm.end()));
    if (!best_total) return std::nullopt;
    for (size_t k = 0; k < m; ++k) {
      int64_t gap = (B[best[k]] - A[k]).integer_value();
      for (int64_t j = 1; j <= gap; ++j) roots.push_back(A[k] + f(static_cast<long>(j)));
    }
  }
  Poly p = Poly::from_roots(f, roots);
  if (!arrow_verifies(p, A, B)) return std::nullopt;
  return p;
}

std::optional<Poly> recover_arrow(const FactoredRational& nu, const FactoredRational& mu) {
  return recover_arrow_ratio(nu / mu);
}

std::optional<O2Pair> recover_pair_o2(const FactoredRational& mu) {
  const Field& f = mu.field();
  FactoredRational muprime = (FactoredRational::one_plus_c_over_u(f.half()) * mu).reduced();
  for (const Scalar& b : muprime.den_roots())
    if (!b.is_zero()) return std::nullopt;  // mu' must be polynomial in u^{-1}
  if (muprime.u_degree() != 0 || !muprime.prefactor().is_one()) return std::nullopt;
  std::vector<Scalar> gammas = muprime.num_roots();
  // Factors (1 - 0*u^{-1}) are invisible in reduced factored form; restore
  // one to fix the parity of the multiset.
  if (gammas.size() % 2 == 0) {
    gammas.push_back(f.zero());
    std::sort(gammas.begin(), gammas.end());
  }

  std::optional<O2Pair> best;
  for (size_t j = 0; j < gammas.size(); ++j) {
    if (j > 0 && gammas[j] == gammas[j - 1]) continue;
    Scalar gamma = -gammas[j];
    std::vector<Scalar> rest_num, rest_den;
    for (size_t k = 0; k < gammas.size(); ++k) {
      if (k == j) continue;
      rest_num.push_back(-gammas[k]);
      rest_den.push_back(gammas[k]);
    }
    auto p = recover_arrow_ratio(
        FactoredRational::from_roots(f, std::move(rest_num), std::move(rest_den), f.one()));
    if (!p || !p->is_symmetric_about_half()) continue;
    if (p->eval(gamma).is_zero()) continue;
    if (!best || p->degree() < best->P.degree() ||
        (p->degree() == best->P.degree() && gamma < best->gamma))
      best = O2Pair{*p, gamma};
  }
  return best;
}

GammaType classify_type(const Scalar& gamma, uint32_t characteristic) {
  if (characteristic > 0) return GammaType::A;
  const Field& f = gamma.field();
  Scalar delta = gamma - f.half();
  if (!delta.is_integer()) throw math_error("gamma must lie in 1/2 + Z");
  int64_t d = delta.integer_value();
  if (d == 0) return GammaType::A;
  return d < 0 ? GammaType::B : GammaType::C;
}

namespace {

// Greedy pair selection per the reordering lemma; returns pairs in order.
// "Defined" sums are nonnegative integers in characteristic zero and all of
// F_p in positive characteristic.
bool sum_defined(const Scalar& a, const Scalar& b) {
  Scalar s = a + b;
  if (s.characteristic() > 0) return true;
  return s.is_integer() && s.integer_value() >= 0;
}

int64_t bracket_value(const Scalar& a, const Scalar& b) { return (a + b).integer_value(); }

}  // namespace

std::vector<Scalar> reorder_gammas(std::vector<Scalar> gammas) {
  std::optional<Scalar> v_param;
  if (gammas.size() % 2 == 1) {
    v_param = gammas.back();
    gammas.pop_back();
  }
  std::vector<Scalar> out;
  std::vector<Scalar> rest = gammas;  // input order preserved
  while (rest.size() >= 2) {
    std::optional<int64_t> best;
    std::pair<size_t, size_t> pick{0, 1};
    for (size_t i = 0; i < rest.size(); ++i)
      for (size_t j = i + 1; j < rest.size(); ++j) {
        if (!sum_defined(rest[i], rest[j])) continue;
        int64_t v = bracket_value(rest[i], rest[j]);
        if (!best || v < *best) {
          best = v;
          pick = {i, j};
        }
      }
    if (!best) break;  // nothing defined: remaining order is unconstrained
    Scalar a = rest[pick.first], b = rest[pick.second];
    rest.erase(rest.begin() + pick.second);
    rest.erase(rest.begin() + pick.first);
    out.push_back(a);
    out.push_back(b);
  }
  out.insert(out.end(), rest.begin(), rest.end());
  if (v_param) out.push_back(*v_param);
  return out;
}

bool reorder_condition_holds(const std::vector<Scalar>& gammas) {
  size_t limit = gammas.size() - (gammas.size() % 2);
  for (size_t i = 0; 2 * i + 1 < limit; ++i) {
    std::optional<int64_t> min_defined;
    for (size_t p = 2 * i; p < gammas.size(); ++p)
      for (size_t q = p + 1; q < gammas.size(); ++q)
        if (sum_defined(gammas[p], gammas[q])) {
          int64_t v = bracket_value(gammas[p], gammas[q]);
          if (!min_defined || v < *min_defined) min_defined = v;
        }
    if (!min_defined) continue;
    if (!sum_defined(gammas[2 * i], gammas[2 * i + 1])) return false;
    if (bracket_value(gammas[2 * i], gammas[2 * i + 1]) != *min_defined) return false;
  }
  return true;
}

std::string YangianModuleSpec::describe() const {
  std::ostringstream os;
  os << flavor_name(flavor) << "_" << 2 * n << ":";
  for (const auto& fac : gl_factors) {
    os << " L(";
    for (size_t k = 0; k < fac.base.size(); ++k) {
      if (k) os << ",";
      mpq_class v = fac.base[k] + fac.shift;
      os << v.get_str();
    }
    os << ")";
  }
  if (v_const != 0) os << " V(" << v_const << "*1)";
  if (sharp_twist) os << " sharp";
  return os.str();
}

RealizedModule realize_spec(const YangianModuleSpec& spec, const Field& f,
                            bool allow_outside_alcove) {
  FormData form(spec.flavor, spec.n);
  int n = spec.n;

  std::optional<OperatorMatrix> T;
  std::vector<Scalar> expected(n, f.zero());
  for (const auto& fac : spec.gl_factors) {
    if (static_cast<int>(fac.base.size()) != 2 * n) throw config_error("gl factor needs 2n entries");
    Scalar shift(f, fac.shift);
    auto mod = std::make_shared<GModule>(
        gl_highest_weight_module(f, form, fac.base, shift, allow_outside_alcove));
    for (int i = 1; i <= n; ++i) expected[i - 1] += mod->g_weight(0)[i - 1];
    OperatorMatrix tf = evaluation_T(mod);
    T = T ? tensor_T(*T, tf) : tf;
  }
  if (!T) T = evaluation_T(std::make_shared<GModule>(gl_one_dimensional(f, form, f.zero())));

  std::shared_ptr<GModule> vmod;
  if (spec.v_const == 0) {
    vmod = std::make_shared<GModule>(gn_trivial(f, form));
  } else if (n == 1 && spec.flavor == Flavor::Orthogonal) {
    vmod = std::make_shared<GModule>(o2_one_dimensional(f, f(static_cast<long>(spec.v_const))));
  } else {
    IntWeight w(n, spec.v_const);
    vmod = std::make_shared<GModule>(gn_highest_weight_module(f, form, w, allow_outside_alcove));
  }
  for (int i = 1; i <= n; ++i) expected[i - 1] += vmod->g_weight(0)[i - 1];

  TwistedOperatorMatrix S = mixed_tensor(*T, twisted_eval(vmod));
  if (spec.sharp_twist) S = sharp(S);
  return {std::move(S), std::move(expected)};
}

ExtractResult pipeline_extract(const YangianModuleSpec& spec, const Field& f,
                               bool allow_outside_alcove) {
  if (spec.sharp_twist) {
    // V(mu)^sharp carries the pair (P, -gamma+1); extract the underlying
    // module and apply the lemma's shift.
    YangianModuleSpec base = spec;
    base.sharp_twist = false;
    ExtractResult res = pipeline_extract(base, f, allow_outside_alcove);
    if (!res.data.gamma) throw math_error("sharp twist on a non-orthogonal extraction");
    Scalar g = *res.data.gamma;
    res.data.gamma = -g + f.one();
    res.data.type_tag = classify_type(*res.data.gamma, f.characteristic());
    return res;
  }
  RealizedModule rm = realize_spec(spec, f, allow_outside_alcove);
  auto lines = twisted_singular_lines(rm.S, rm.expected_weight);
  if (lines.empty()) throw math_error("no singular line at the expected weight");
  if (lines.size() > 1) throw math_error("singular line at the expected weight is not unique");

  ExtractResult res;
  res.mu = lines[0].mu;
  int n = spec.n;
  DrinfeldData& data = res.data;
  if (spec.flavor == Flavor::Symplectic) {
    auto p1 = recover_arrow(res.mu[0].negate_u(), res.mu[0]);
    if (!p1) throw math_error("double arrow recovery failed at mu_1");
    if (!p1->is_symmetric_about_half()) throw math_error("P_1 is not symmetric about 1/2");
    data.polys.push_back(*p1);
  } else {
    auto pair = recover_pair_o2(res.mu[0]);
    if (!pair) throw math_error("o_2 pair recovery failed at mu_1");
    data.polys.push_back(pair->P);
    data.gamma = pair->gamma;
    data.type_tag = classify_type(pair->gamma, f.characteristic());
  }
  for (int i = 1; i < n; ++i) {
    auto p = recover_arrow(res.mu[i - 1], res.mu[i]);
    if (!p) throw math_error("arrow recovery failed at index " + std::to_string(i));
    data.polys.push_back(*p);
  }
  return res;
}

namespace {

// One full-width block per symmetric root pair of P_1, encoded as gamma
// pairs (1-c, c).
std::vector<std::pair<Scalar, Scalar>> p1_gamma_pairs(const Poly& p1) {
  const Field& f = p1.field();
  std::vector<Scalar> roots = p1.extract_roots();
  std::vector<std::pair<Scalar, Scalar>> pairs;
  while (!roots.empty()) {
    Scalar c = roots.back();
    roots.pop_back();
    Scalar partner = f.one() - c;
    auto it = std::find(roots.begin(), roots.end(), partner);
    if (it == roots.end()) throw math_error("P_1 root multiset is not symmetric about 1/2");
    roots.erase(it);
    Scalar rep = c < partner ? partner : c;
    pairs.emplace_back(f.one() - rep, rep);  // (gamma_odd, gamma_even)
  }
  return pairs;
}

}  // namespace

YangianModuleSpec pipeline_build(const DrinfeldData& data, Flavor flavor, int n,
                                 uint32_t characteristic) {
  if (static_cast<int>(data.polys.size()) > n) throw config_error("more polynomials than the rank");
  if (characteristic > 0 && !drinfeld_degree_bound_ok(data, n, characteristic))
    throw math_error("Drinfeld degree bound violated in characteristic p");
  const Field& f = data.polys.empty() ? Field::rationals() : data.polys[0].field();

  YangianModuleSpec spec;
  spec.flavor = flavor;
  spec.n = n;

  Poly p1 = data.polys.empty() ? Poly::one(f) : data.polys[0];
  if (!p1.is_symmetric_about_half()) throw math_error("P_1(u) != P_1(-u+1)");

  Scalar gamma = data.gamma.value_or(f.half());
  if (flavor == Flavor::Orthogonal) {
    Scalar delta = gamma - f.half();
    if (!delta.is_integer()) throw math_error("gamma must lie in 1/2 + Z");
    GammaType type = classify_type(gamma, characteristic);
    if (type == GammaType::C) {
      // Build the sharp-partner (type B) and twist the action.
      DrinfeldData flipped = data;
      flipped.gamma = -gamma + f.one();
      flipped.type_tag = GammaType::B;
      YangianModuleSpec base = pipeline_build(flipped, flavor, n, characteristic);
      base.sharp_twist = true;
      return base;
    }
    spec.v_const = delta.integer_value();
  } else if (data.gamma) {
    throw config_error("gamma is an orthogonal-flavor parameter");
  }

  // Full-width blocks for P_1, canonicalized by the reordering lemma.
  std::vector<Scalar> gammas;
  for (const auto& [go, ge] : p1_gamma_pairs(p1)) {
    gammas.push_back(go);
    gammas.push_back(ge);
  }
  gammas = reorder_gammas(std::move(gammas));
  for (size_t k = 0; k + 1 < gammas.size(); k += 2) {
    Scalar go = gammas[k], ge = gammas[k + 1];
    Scalar s = go + ge;
    if (!s.is_integer() || s.integer_value() < 0)
      throw math_error("reordered gamma pair is not a dominant block");
    if (s.is_zero() && go.is_zero()) continue;  // trivial block
    GlFactorSpec fac;
    fac.base.assign(2 * n, 0);
    for (int k2 = 0; k2 < n; ++k2) fac.base[k2] = s.integer_value();
    fac.shift = mpq_of(-ge);
    spec.gl_factors.push_back(std::move(fac));
  }

  // Slot-split blocks for the deeper arrows: one per root of P_{i+1}.
  for (size_t i = 1; i < data.polys.size(); ++i) {
    for (const Scalar& c : data.polys[i].extract_roots()) {
      GlFactorSpec fac;
      fac.base.assign(2 * n, 0);
      for (size_t k = 0; k < static_cast<size_t>(n) + i; ++k) fac.base[k] = 1;
      fac.shift = mpq_of(-c);
      spec.gl_factors.push_back(std::move(fac));
    }
  }
  return spec;
}

bool drinfeld_degree_bound_ok(const DrinfeldData& data, int n, uint32_t p) {
  if (p == 0) return true;
  int64_t total = 0;
  for (size_t i = 0; i < data.polys.size(); ++i)
    total += (i == 0 ? 1 : 2) * data.polys[i].degree();
  return total + 2 * n < static_cast<int64_t>(p);
}

Poly reduce_poly_mod(const Poly& p, const Field& fp) {
  std::vector<Scalar> coeffs;
  for (int k = 0; k <= p.degree(); ++k) coeffs.push_back(Scalar::reduce_mod(p.coeff(k), fp));
  return Poly(fp, coeffs);
}

DrinfeldData reduce_data_mod(const DrinfeldData& data, const Field& fp) {
  DrinfeldData out;
  for (const Poly& p : data.polys) out.polys.push_back(reduce_poly_mod(p, fp));
  if (data.gamma) out.gamma = Scalar::reduce_mod(*data.gamma, fp);
  if (out.gamma) out.type_tag = classify_type(*out.gamma, fp.characteristic());
  return out;
}

}  // namespace ytw
