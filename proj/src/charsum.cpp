#include "addcomb/charsum.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "addcomb/summation.hpp"

namespace addcomb {

WeylResult weyl_sum(const IntPoly& poly, const PrimeCtx& ctx) {
  const auto values = poly.value_table(ctx);
  const auto table = ep_table(ctx);
  std::vector<Complex> terms(ctx.p());
  for (Residue y = 0; y < ctx.p(); ++y) terms[y] = table[values[y]];

  WeylResult r;
  r.value = pairwise_mean<Complex>(terms);
  r.modulus = std::abs(r.value);
  r.degree = poly.degree_mod(ctx);
  r.bound_applies = r.degree >= 1 && static_cast<std::uint64_t>(r.degree) < ctx.p();
  if (r.bound_applies) {
    r.bound = static_cast<double>(r.degree - 1) / std::sqrt(static_cast<double>(ctx.p()));
    r.within_bound = r.modulus <= r.bound + kWeylSlack;
  }
  return r;
}

bool WeylScanReport::all_within_bound() const {
  return std::all_of(cells.begin(), cells.end(), [](const auto& c) { return c.violations == 0; });
}

double WeylScanReport::max_ratio() const {
  double best = 0.0;
  for (const auto& c : cells) best = std::max(best, c.max_ratio);
  return best;
}

WeylScanReport weyl_bound_scan(const std::vector<int>& degrees, const std::vector<std::uint64_t>& primes,
                               std::size_t trials, std::uint64_t seed) {
  WeylScanReport report;
  for (std::uint64_t p : primes) {
    if (p > 10000) throw ContractError("weyl_bound_scan: primes must not exceed 10^4");
    const PrimeCtx ctx(p);
    for (int d : degrees) {
      if (d < 1 || static_cast<std::uint64_t>(d) >= p) continue;
      std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                        static_cast<std::uint32_t>(p), static_cast<std::uint32_t>(d)};
      std::mt19937_64 rng(seq);
      WeylScanCell cell;
      cell.degree = d;
      cell.p = p;
      for (std::size_t trial = 0; trial < trials; ++trial) {
        std::vector<BigInt> coeffs(static_cast<std::size_t>(d) + 1);
        do {
          for (auto& c : coeffs) c = rng() % p;
        } while (coeffs.back() == 0);
        const WeylResult r = weyl_sum(IntPoly(coeffs), ctx);
        ++cell.samples;
        if (!r.within_bound) ++cell.violations;
        cell.max_modulus = std::max(cell.max_modulus, r.modulus);
        if (d >= 2) cell.max_ratio = std::max(cell.max_ratio, r.modulus / r.bound);
      }
      report.cells.push_back(cell);
    }
  }
  return report;
}

}  // namespace addcomb
