#include "modstab.hpp"

#include <future>
#include <sstream>

namespace ytw {

ModularParams find_modular_parameters(const Poly& q, int count, uint32_t p_min,
                                      uint32_t search_bound) {
  if (q.is_zero() || q.degree() < 1) throw config_error("q must be non-constant");
  if (!q.field().is_rational()) throw config_error("q must have rational coefficients");
  // Reject integer roots (the minimal polynomial of an algebraic non-integer
  // cannot have any).
  try {
    for (const Scalar& r : q.extract_roots())
      if (r.is_integer()) throw config_error("q has the integer root " + r.to_string());
  } catch (const math_error&) {
    // does not split over Q: no rational roots at all, fine
  }
  ModularParams out{q, {}};
  for (uint32_t p = std::max(3u, p_min); p < search_bound && static_cast<int>(out.pairs.size()) < count;
       ++p) {
    if (!is_prime_u32(p)) continue;
    Field fp = Field::prime_field(p);
    Poly qp = reduce_poly_mod(q, fp);
    for (int64_t s = 0; s < p && static_cast<int>(out.pairs.size()) < count; ++s) {
      if (qp.eval(fp(2 * s)).is_zero()) out.pairs.emplace_back(p, s);
    }
  }
  if (static_cast<int>(out.pairs.size()) < count)
    throw math_error("modular parameter search exhausted below the bound");
  return out;
}

std::vector<std::pair<uint32_t, int64_t>> gap_filter(const ModularParams& params, int64_t c) {
  std::vector<std::pair<uint32_t, int64_t>> out;
  for (auto [p, s] : params.pairs)
    if (static_cast<int64_t>(p) - 2 * s > c) out.emplace_back(p, s);
  return out;
}

YangianModuleSpec stability_module_spec(const StabilitySpec& spec, int n, const Field& f) {
  if (static_cast<int>(spec.tail.size()) >= n)
    throw config_error("rank must exceed the tail window");
  YangianModuleSpec out;
  out.flavor = spec.flavor;
  out.n = n;
  for (size_t j = 1; j <= spec.tail.size(); ++j) {
    Poly tj = f.is_rational() ? spec.tail[j - 1] : reduce_poly_mod(spec.tail[j - 1], f);
    for (const Scalar& c : tj.extract_roots()) {
      GlFactorSpec fac;
      fac.base.assign(2 * n, 1);
      for (size_t k = 0; k < j; ++k) fac.base[2 * n - 1 - k] = 0;  // last j slots
      if (c.field().is_rational())
        fac.shift = -c.rational();
      else
        fac.shift = mpq_class(-static_cast<long>(c.residue()));
      out.gl_factors.push_back(std::move(fac));
    }
  }
  return out;
}

std::vector<Poly> extract_tail_data(const StabilitySpec& spec, int n, const Field& f) {
  YangianModuleSpec mspec = stability_module_spec(spec, n, f);
  RealizedModule rm = realize_spec(mspec, f);
  auto lines = twisted_singular_lines(rm.S, rm.expected_weight);
  if (lines.size() != 1) throw math_error("stability extraction: singular line not unique");
  const auto& mu = lines[0].mu;
  std::vector<Poly> tail;
  for (int j = 1; j < n; ++j) {
    // tail ratio mu^t_{j+1} / mu^t_j = mu_{n-j} / mu_{n-j+1}
    FactoredRational ratio = mu[n - j - 1] / mu[n - j];
    auto p = recover_arrow_ratio(ratio);
    if (!p) throw math_error("tail arrow recovery failed at position " + std::to_string(j));
    tail.push_back(*p);
  }
  while (!tail.empty() && tail.back().is_one()) tail.pop_back();
  return tail;
}

HypothesisLedger stability_hypotheses(const StabilitySpec& spec, int n, uint32_t p) {
  HypothesisLedger ledger;
  // Top weight: each root of T_j contributes -1 to the last j slots, so
  // lambda_n = -sum_j deg T_j.
  int64_t depth = 0;
  int64_t degsum = 0;
  for (const Poly& t : spec.tail) {
    depth += t.degree();
    degsum += t.degree();
  }
  ledger.alcove = p == 0 || 2 * depth + 2 * n < static_cast<int64_t>(p);
  ledger.degree_bound = p == 0 || 2 * degsum + 2 * n < static_cast<int64_t>(p);
  return ledger;
}

StabilityReport stability_experiment(const StabilitySpec& spec,
                                     const std::vector<uint32_t>& primes, bool compare_to_q) {
  StabilityReport report;
  report.spec_name = spec.name;
  report.flavor = flavor_name(spec.flavor);
  int n0 = static_cast<int>(spec.tail.size()) + 1;
  Field q = Field::rationals();
  report.reference = extract_tail_data(spec, n0, q);

  struct Job {
    std::string field;
    int rank;
  };
  std::vector<Job> jobs;
  for (int n = n0; n <= n0 + 2; ++n) {
    if (compare_to_q) jobs.push_back({"Q", n});
    for (uint32_t p : primes) jobs.push_back({"Fp:" + std::to_string(p), n});
  }

  std::vector<std::future<StabilityCell>> futures;
  for (const Job& job : jobs) {
    futures.push_back(std::async(std::launch::async, [&spec, &report, job]() {
      StabilityCell cell;
      cell.field = job.field;
      cell.rank = job.rank;
      Field f = Field::parse(job.field);
      cell.ledger = stability_hypotheses(spec, job.rank, f.characteristic());
      if (!cell.ledger.alcove || !cell.ledger.degree_bound) {
        cell.skipped = true;
        return cell;
      }
      cell.tail = extract_tail_data(spec, job.rank, f);
      std::vector<Poly> expect;
      for (const Poly& t : report.reference)
        expect.push_back(f.is_rational() ? t : reduce_poly_mod(t, f));
      cell.agrees = (cell.tail == expect);
      return cell;
    }));
  }
  report.pass = true;
  for (auto& fut : futures) {
    StabilityCell cell = fut.get();
    if (!cell.skipped && !cell.agrees) {
      report.pass = false;
      report.detail += cell.field + " rank " + std::to_string(cell.rank) + " disagrees; ";
    }
    if (cell.skipped)
      report.detail += cell.field + " rank " + std::to_string(cell.rank) + " skipped (hypotheses); ";
    report.cells.push_back(std::move(cell));
  }
  return report;
}

}  // namespace ytw
