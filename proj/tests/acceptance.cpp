// Acceptance run: one PASS/FAIL line per numbered criterion, plus an
// informational line 9. Exit status is nonzero when any of 1-8 fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "addcomb/charsum.hpp"
#include "addcomb/counting.hpp"
#include "addcomb/gowers.hpp"
#include "addcomb/harness.hpp"
#include "addcomb/pet.hpp"
#include "oracles.hpp"
#include "test_support.hpp"

using namespace addcomb;
using testing_support::random_direction;
using testing_support::random_function;

namespace {

// Tolerances and time limits.
constexpr double kIdentityTol = 1e-9;
constexpr double kMonotoneSlack = 1e-12;
constexpr double kWeylTol = 1e-12;
constexpr double kGaussTol = 1e-9;
constexpr double kDualTol = 1e-9;
constexpr double kVonNeumannSlack = 1e-9;
constexpr double kLowerBoundSlack = 1e-12;
constexpr double kEnvelopeExponent = 1.0 / 8.0;
constexpr std::uint64_t kEnvelopeFrom = 53;
constexpr double kMinDecay = 0.05;
constexpr std::size_t kPetMaxSteps = 50;

constexpr double kLimitIdentities = 60.0;
constexpr double kLimitWeyl = 10.0;
constexpr double kLimitDual = 120.0;
constexpr double kLimitVonNeumann = 30.0;
constexpr double kLimitLowerBound = 30.0;
constexpr double kLimitSquareScan = 300.0;
constexpr double kLimitPet = 10.0;
constexpr double kLimitFinder = 120.0;

struct Outcome {
  bool pass = true;
  std::string detail;
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

std::string fmt(const char* pattern, double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, pattern, x);
  return buf;
}

bool report(int number, const std::string& title, double limit, const std::function<Outcome()>& body) {
  const auto start = Clock::now();
  Outcome o;
  try {
    o = body();
  } catch (const std::exception& e) {
    o.pass = false;
    o.detail = std::string("exception: ") + e.what();
  }
  const double secs = seconds_since(start);
  if (secs > limit) {
    o.pass = false;
    o.detail += "; runtime " + fmt("%.1f", secs) + " s exceeds " + fmt("%.0f", limit) + " s";
  }
  std::cout << "criterion " << number << " (" << title << "): " << (o.pass ? "PASS" : "FAIL") << " | "
            << o.detail << " | " << fmt("%.2f", secs) << " s" << std::endl;
  return o.pass;
}

// ---------------------------------------------------------------- identities

Outcome identities() {
  std::mt19937_64 rng(20240101);
  double err_u1 = 0.0, err_parseval = 0.0, err_u2 = 0.0, err_slice = 0.0, err_induction = 0.0;
  double worst_mono = 0.0;  // most negative gap
  std::size_t count = 0;
  for (std::uint64_t p : {5u, 7u, 11u, 13u}) {
    for (std::size_t dim : {1u, 2u, 3u}) {
      const GridShape shape(PrimeCtx(p), dim);
      const PrimeCtx& ctx = shape.ctx();
      for (int trial = 0; trial < 50; ++trial, ++count) {
        const GridFunction f = random_function(shape, rng);
        const FpVec v = random_direction(dim, p, rng);

        // (a) recursion at s = 1 against the conditional expectation
        const double u1_rec = gowers_norm(f, v, 1).value;
        const double u1 = gowers_u1(f, v).value;
        err_u1 = std::max(err_u1, std::abs(u1_rec - u1));

        // (b) Parseval on every line and (c) U^2 through the transform
        const double u2_power = gowers_norm_power(f, v, 2);
        double fourth = 0.0;
        for (std::size_t x = 0; x < shape.size(); ++x) {
          const FpVec pt = shape.point(x);
          const auto coeffs = fourier_line(f, pt, v);
          double energy = 0.0;
          for (const auto& c : coeffs) {
            energy += std::norm(c);
            fourth += std::norm(c) * std::norm(c);
          }
          double line = 0.0;
          for (Residue n = 0; n < p; ++n) line += std::norm(f.at(pt.plus(v.scaled(n, ctx), ctx)));
          err_parseval = std::max(err_parseval, std::abs(energy - line / static_cast<double>(p)));
        }
        err_u2 = std::max(err_u2, std::abs(u2_power - fourth / static_cast<double>(shape.size())));

        // (d) slice identity, s = 2
        const auto slice = gowers_1d_slice_identity(f, v, 2);
        err_slice = std::max(err_slice, std::abs(slice.lhs - slice.rhs));

        // (e) induction property with independently computed inner norms:
        //   s = 2, k = 1: E_h ||Delta_{vh} f||_{U^1}^2 via conditional expectation
        //   s = 3, k = 1: E_{h,h'} ||Delta_{vh,vh'} f||_{U^1}^2
        //   s = 3, k = 2: E_h ||Delta_{vh} f||_{U^2}^4 via the transform
        const double u3_power = gowers_norm_power(f, v, 3);
        double in21 = 0.0, in31 = 0.0, in32 = 0.0;
        for (Residue h = 0; h < p; ++h) {
          const GridFunction d = delta_mult(f, v.scaled(h, ctx));
          in21 += l2_norm_squared(conditional_expectation(d, v));
          double d_fourth = 0.0;
          for (std::size_t x = 0; x < shape.size(); ++x) {
            for (const auto& c : fourier_line(d, shape.point(x), v)) d_fourth += std::norm(c) * std::norm(c);
          }
          in32 += d_fourth / static_cast<double>(shape.size());
          for (Residue h2 = 0; h2 < p; ++h2) {
            in31 += l2_norm_squared(conditional_expectation(delta_mult(d, v.scaled(h2, ctx)), v));
          }
        }
        const double pd = static_cast<double>(p);
        err_induction = std::max({err_induction, std::abs(u2_power - in21 / pd),
                                  std::abs(u3_power - in31 / (pd * pd)), std::abs(u3_power - in32 / pd)});

        // (f) monotonicity
        const double u2 = std::pow(u2_power, 0.25);
        const double u3 = std::pow(u3_power, 0.125);
        worst_mono = std::min({worst_mono, u2 - u1 + kMonotoneSlack, u3 - u2 + kMonotoneSlack});
      }
    }
  }
  Outcome o;
  o.pass = err_u1 <= kIdentityTol && err_parseval <= kIdentityTol && err_u2 <= kIdentityTol &&
           err_slice <= kIdentityTol && err_induction <= kIdentityTol && worst_mono >= 0.0;
  std::ostringstream d;
  d << count << " functions; max errors: U1 " << fmt("%.1e", err_u1) << ", Parseval " << fmt("%.1e", err_parseval)
    << ", U2-Fourier " << fmt("%.1e", err_u2) << ", slice " << fmt("%.1e", err_slice) << ", induction "
    << fmt("%.1e", err_induction) << "; monotonicity " << (worst_mono >= 0.0 ? "holds" : "violated");
  o.detail = d.str();
  return o;
}

// ---------------------------------------------------------------- weyl

Outcome weyl() {
  const auto primes = primes_in_range(3, 199);
  const auto scan = weyl_bound_scan({2, 3, 4}, primes, 100, 7);
  std::size_t samples = 0, violations = 0;
  for (const auto& c : scan.cells) {
    samples += c.samples;
    violations += c.violations;
  }
  // weyl_sum applies the bound with slack 1e-12; recheck against the pinned slack.
  bool bound_ok = violations == 0 && scan.max_ratio() <= 1.0 + kWeylTol * std::sqrt(199.0);

  std::mt19937_64 rng(8);
  double gauss_err = 0.0;
  std::size_t quad = 0;
  for (std::uint64_t p : primes) {
    const PrimeCtx ctx(p);
    for (int k = 0; k < 100; ++k, ++quad) {
      const IntPoly P{static_cast<long long>(rng() % p), static_cast<long long>(rng() % p), 1};
      const WeylResult r = weyl_sum(P, ctx);
      gauss_err = std::max(gauss_err, std::abs(r.modulus - 1.0 / std::sqrt(static_cast<double>(p))));
      if (r.modulus > r.bound + kWeylTol) bound_ok = false;
    }
  }
  Outcome o;
  o.pass = bound_ok && gauss_err <= kGaussTol;
  std::ostringstream d;
  d << samples << " random polynomials (d=2,3,4), " << violations << " bound violations, max |sum|/bound "
    << fmt("%.4f", scan.max_ratio()) << "; " << quad << " monic quadratics, max | |sum| - p^-1/2 | "
    << fmt("%.1e", gauss_err);
  o.detail = d.str();
  return o;
}

// ---------------------------------------------------------------- dual identity

ConfigurationSpec random_spec(std::size_t t, std::uint64_t p, std::mt19937_64& rng) {
  const std::size_t dim = 2;
  std::vector<int> degrees;
  if (t == 3) {
    degrees = {1, 2, 3};
  } else {
    std::vector<int> pool{1, 2, 3};
    std::shuffle(pool.begin(), pool.end(), rng);
    degrees.assign(pool.begin(), pool.begin() + static_cast<long>(t));
    std::sort(degrees.begin(), degrees.end());
  }
  std::vector<IntVec> vectors;
  std::vector<IntPoly> polys;
  for (std::size_t i = 0; i < t; ++i) {
    IntVec v;
    do {
      v = {static_cast<std::int64_t>(rng() % 7) - 3, static_cast<std::int64_t>(rng() % 7) - 3};
    } while (v[0] == 0 && v[1] == 0);
    vectors.push_back(v);
    std::vector<BigInt> c(static_cast<std::size_t>(degrees[i]) + 1);
    for (auto& x : c) x = static_cast<long long>(rng() % 11) - 5;
    c.back() = static_cast<long long>(1 + rng() % 5);
    polys.emplace_back(c);
  }
  ConfigurationSpec spec(dim, vectors, polys);
  require_valid(spec, PrimeCtx(p));
  return spec;
}

Outcome dual_identity() {
  std::mt19937_64 rng(3141);
  double worst = 0.0;
  std::size_t count = 0;
  const std::vector<std::pair<std::size_t, std::size_t>> shapes{{1, 1}, {1, 2}, {2, 2}, {2, 3}};
  for (auto [m, t] : shapes) {
    for (std::uint64_t p : {11u, 31u}) {
      const GridShape shape(PrimeCtx(p), 2);
      for (int k = 0; k < 20; ++k, ++count) {
        const ConfigurationSpec spec = random_spec(t, p, rng);
        std::vector<GridFunction> fns;
        std::vector<PhaseFunction> phases;
        for (std::size_t i = 0; i < m; ++i) fns.push_back(random_function(shape, rng));
        for (std::size_t i = m; i < t; ++i) phases.push_back(testing_support::random_phase(shape, rng));
        const double density = std::uniform_real_distribution<double>(0.2, 1.0)(rng);
        const DualSpec d{m, fns, phases, testing_support::random_mask(shape, density, rng)};
        const GridFunction G = g_function(d, spec);
        const GridFunction F = dual_function(d, spec);
        worst = std::max(worst, std::abs(inner_product(F, d.functions[m - 1]) - l2_norm_squared(G)));
      }
    }
  }
  Outcome o;
  o.pass = worst <= kDualTol;
  o.detail = std::to_string(count) + " instances; max |<F, f_m> - ||G||^2| = " + fmt("%.1e", worst);
  return o;
}

// ---------------------------------------------------------------- von Neumann

Outcome von_neumann() {
  std::mt19937_64 rng(2718);
  const std::vector<std::uint64_t> primes{5, 7, 11, 13, 17, 19, 23, 29, 31};
  double tightest = 1e9;
  double largest_lhs = 0.0;
  std::size_t violations = 0;
  for (int k = 0; k < 100; ++k) {
    const std::uint64_t p = primes[rng() % primes.size()];
    const std::size_t m = 1 + rng() % 3;
    const GridShape shape(PrimeCtx(p), 1);
    std::vector<Residue> a;
    while (a.size() < m) {
      const Residue c = 1 + rng() % (p - 1);
      if (std::find(a.begin(), a.end(), c) == a.end()) a.push_back(c);
    }
    std::vector<GridFunction> f;
    for (std::size_t i = 0; i <= m; ++i) {
      if (k % 2 == 0) {
        f.push_back(random_function(shape, rng));
      } else {
        // Polynomial phases of degree <= m with random amplitude: correlated inputs.
        const double amp = std::uniform_real_distribution<double>(0.5, 1.0)(rng);
        std::vector<Residue> c(m + 1);
        for (auto& x : c) x = rng() % p;
        f.push_back(GridFunction::generate(shape, [&](const FpVec& x) {
          Residue acc = 0;
          for (std::size_t e = c.size(); e-- > 0;) acc = (acc * x[0] + c[e]) % p;
          return amp * oracle::e(static_cast<std::int64_t>(acc), p);
        }));
      }
    }
    const VonNeumannSides s = von_neumann_sides(f, a);
    if (s.lhs > s.rhs + kVonNeumannSlack) ++violations;
    tightest = std::min(tightest, s.rhs - s.lhs);
    largest_lhs = std::max(largest_lhs, s.lhs);
  }
  Outcome o;
  o.pass = violations == 0;
  o.detail = "100 instances, " + std::to_string(violations) + " violations; min (rhs - lhs) = " +
             fmt("%.3e", tightest) + ", max lhs = " + fmt("%.3f", largest_lhs);
  return o;
}

// ---------------------------------------------------------------- lower bound

GridFunction random_nonnegative(const GridShape& shape, int kind, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  switch (kind % 3) {
    case 0:
      return testing_support::random_nonnegative(shape, rng);
    case 1: {
      const double density = unit(rng);
      return GridFunction::generate(shape, [&](const FpVec&) { return unit(rng) < density ? 1.0 : 0.0; });
    }
    default: {
      const double power = 1.0 + 4.0 * unit(rng);
      return GridFunction::generate(shape, [&](const FpVec&) { return std::pow(unit(rng), power); });
    }
  }
}

Outcome lower_bound() {
  std::mt19937_64 rng(1618);
  double worst = 1e9;
  std::size_t count = 0, violations = 0;
  for (const auto& spec : {ConfigurationSpec::square_corners(), ConfigurationSpec::cubic_corners()}) {
    for (std::uint64_t p : {7u, 11u, 13u}) {
      const GridShape shape(PrimeCtx(p), spec.dim());
      for (int k = 0; k < 200; ++k, ++count) {
        const LowerBound b = product_lower_bound(random_nonnegative(shape, k, rng), spec);
        if (b.lhs < b.rhs - kLowerBoundSlack) ++violations;
        worst = std::min(worst, b.lhs - b.rhs);
      }
    }
  }
  Outcome o;
  o.pass = violations == 0;
  o.detail = std::to_string(count) + " functions, " + std::to_string(violations) + " violations; min (lhs - rhs) = " +
             fmt("%.3e", worst);
  return o;
}

// ---------------------------------------------------------------- error decay

struct ScanSummary {
  ScanResult result;
  std::vector<double> max_error;
};

ScanResult run_scan(const ConfigurationSpec& spec, std::uint64_t p_max, const std::string& csv_path) {
  ScanConfig cfg{.spec = spec};
  cfg.p_min = 11;
  cfg.p_max = p_max;
  cfg.trials = 20;
  cfg.seed = 42;
  cfg.family.kind = FunctionKind::rademacher;
  std::ofstream csv(csv_path);
  ScanSinks sinks;
  if (csv) sinks.csv = &csv;
  return scan_error_decay(cfg, sinks);
}

Outcome error_decay() {
  Outcome o;
  std::ostringstream d;

  const auto start = Clock::now();
  const ScanResult sq = run_scan(ConfigurationSpec::square_corners(), 199, "acceptance_square_scan.csv");
  const double sq_secs = seconds_since(start);
  std::size_t checked = 0, over = 0;
  double worst_ratio = 0.0;
  for (std::size_t k = 0; k < sq.fit.primes.size(); ++k) {
    const auto p = sq.fit.primes[k];
    if (p < kEnvelopeFrom) continue;
    const double envelope = std::pow(static_cast<double>(p), -kEnvelopeExponent);
    ++checked;
    if (sq.fit.max_error[k] > envelope) ++over;
    worst_ratio = std::max(worst_ratio, sq.fit.max_error[k] / envelope);
  }
  const bool sq_fit = sq.fit.status == FitStatus::fitted && sq.fit.c_hat >= kMinDecay;
  d << "square corners: " << sq.rows.size() << " rows, " << over << "/" << checked
    << " primes >= 53 above p^-1/8 (max error/envelope " << fmt("%.3f", worst_ratio) << "), c_hat "
    << fmt("%.3f", sq.fit.c_hat) << ", " << fmt("%.0f", sq_secs) << " s";
  if (sq_secs > kLimitSquareScan) d << " (over the " << fmt("%.0f", kLimitSquareScan) << " s limit)";

  const ScanResult cu = run_scan(ConfigurationSpec::cubic_corners(), 101, "acceptance_cubic_scan.csv");
  const bool cu_fit = cu.fit.status == FitStatus::fitted && cu.fit.c_hat >= kMinDecay;
  d << "; cubic corners: " << cu.rows.size() << " rows, c_hat " << fmt("%.3f", cu.fit.c_hat);

  o.pass = over == 0 && checked > 0 && sq_fit && cu_fit && sq_secs <= kLimitSquareScan;
  o.detail = d.str();
  return o;
}

// ---------------------------------------------------------------- PET

bool trace_ok(const PetTrace& trace, std::string& why) {
  if (trace.status != TraceStatus::terminated) {
    why = to_string(trace.status);
    return false;
  }
  if (trace.steps.size() > kPetMaxSteps) {
    why = "too many steps";
    return false;
  }
  for (const auto& s : trace.steps) {
    if (!type_less(s.type_after, s.type_before)) {
      why = "type did not decrease";
      return false;
    }
  }
  if (trace.final_family.max_degree() > 1 || !is_nice(trace.final_family).nice()) {
    why = "final family is not a nice degree-1 family";
    return false;
  }
  return true;
}

ShiftPoly small_poly(std::mt19937_64& rng) {
  const int degree = 1 + static_cast<int>(rng() % 2);
  std::vector<BigInt> c(static_cast<std::size_t>(degree) + 1);
  for (auto& x : c) x = static_cast<long long>(rng() % 3) - 1;
  c.back() = static_cast<long long>(1 + rng() % 2);
  return ShiftPoly(IntPoly(c));
}

TypeMatrix small_type(std::mt19937_64& rng) {
  TypeMatrix w;
  const std::size_t d = 1 + rng() % 2;
  w.w.assign(2, std::vector<unsigned>(d));
  for (auto& row : w.w)
    for (auto& x : row) x = static_cast<unsigned>(rng() % 2);
  return w;
}

Outcome pet() {
  Outcome o;
  std::ostringstream d;
  const PolyFamily square = PolyFamily::diagonal({IntPoly{0, 1}, IntPoly{0, 0, 1}});
  const PolyFamily cubic = PolyFamily::diagonal({IntPoly{0, 1}, IntPoly{0, 0, 1}, IntPoly{0, 0, 0, 1}});

  std::string why;
  const PetTrace sq = pet_trace(square, kPetMaxSteps);
  const bool sq_ok = trace_ok(sq, why);
  d << "square corners: " << (sq_ok ? "terminated" : why) << " after " << sq.steps.size() << " steps";

  const PetTrace cu = pet_trace(cubic, kPetMaxSteps);
  const bool cu_ok = trace_ok(cu, why);
  bool cu_descending = true;
  for (const auto& s : cu.steps) cu_descending = cu_descending && type_less(s.type_after, s.type_before);
  d << "; cubic corners: " << (cu_ok ? "terminated" : why) << " after " << cu.steps.size() << " steps ("
    << cu.final_family.m() << " columns, type "
    << (cu.steps.empty() ? type_of(cubic).to_string() : cu.steps.back().type_after.to_string()) << ", steps "
    << (cu_descending ? "descending" : "NOT descending") << ")";

  // Row-permutation invariance of type_of.
  std::mt19937_64 rng(999);
  bool invariant = true;
  for (int k = 0; k < 200; ++k) {
    const std::size_t t = 1 + rng() % 3;
    const std::size_t m = 1 + rng() % 4;
    std::vector<std::vector<ShiftPoly>> rows(t);
    for (auto& r : rows)
      for (std::size_t i = 0; i < m; ++i) r.push_back(rng() % 3 == 0 ? ShiftPoly() : small_poly(rng));
    std::vector<std::size_t> perm(m);
    for (std::size_t i = 0; i < m; ++i) perm[i] = i;
    std::shuffle(perm.begin(), perm.end(), rng);
    std::vector<std::vector<ShiftPoly>> permuted(t);
    for (std::size_t j = 0; j < t; ++j)
      for (std::size_t i = 0; i < m; ++i) permuted[j].push_back(rows[j][perm[i]]);
    invariant = invariant && type_of(PolyFamily(rows)) == type_of(PolyFamily(permuted));
  }
  d << "; permutation invariance " << (invariant ? "holds" : "FAILS");

  // Equivalence axioms for poly_equiv and strict total order axioms for type_less.
  std::size_t axiom_failures = 0;
  for (int k = 0; k < 1000; ++k) {
    const ShiftPoly a = small_poly(rng), b = small_poly(rng), c = small_poly(rng);
    if (!poly_equiv(a, a)) ++axiom_failures;
    if (poly_equiv(a, b) != poly_equiv(b, a)) ++axiom_failures;
    if (poly_equiv(a, b) && poly_equiv(b, c) && !poly_equiv(a, c)) ++axiom_failures;

    const TypeMatrix x = small_type(rng), y = small_type(rng), z = small_type(rng);
    if (type_less(x, x)) ++axiom_failures;
    if (type_less(x, y) && type_less(y, x)) ++axiom_failures;
    if (type_less(x, y) && type_less(y, z) && !type_less(x, z)) ++axiom_failures;
    // Totality up to zero padding.
    TypeMatrix xp = x, yp = y;
    const std::size_t dd = std::max(x.d(), y.d());
    for (auto& r : xp.w) r.resize(dd, 0);
    for (auto& r : yp.w) r.resize(dd, 0);
    if (!(xp == yp) && !type_less(x, y) && !type_less(y, x)) ++axiom_failures;
  }
  d << "; " << axiom_failures << " axiom failures in 1000 random instances";

  o.pass = sq_ok && cu_ok && invariant && axiom_failures == 0;
  o.detail = d.str();
  return o;
}

// ---------------------------------------------------------------- finder

Outcome finder() {
  const auto spec = ConfigurationSpec::cubic_corners();
  const GridShape shape(PrimeCtx(31), 3);
  const PrimeCtx& ctx = shape.ctx();
  std::size_t found = 0;
  bool valid = true;
  for (std::uint64_t trial = 0; trial < 20; ++trial) {
    const SubsetMask A = gen_mask(shape, 0.9, 2024, trial);
    const auto w = find_config(A, spec);
    if (!w) continue;
    ++found;
    const Residue y = w->y;
    valid = valid && y != 0 && A.at(w->x) && A.at(w->x.plus(FpVec({y, 0, 0}), ctx)) &&
            A.at(w->x.plus(FpVec({0, ctx.mul(y, y), 0}), ctx)) &&
            A.at(w->x.plus(FpVec({0, 0, ctx.mul(y, ctx.mul(y, y))}), ctx));
  }
  Outcome o;
  o.pass = found == 20 && valid;
  o.detail = std::to_string(found) + "/20 density-0.9 sets contain a nontrivial configuration; witnesses " +
             (valid ? "verified" : "INVALID");
  return o;
}

}  // namespace

int main() {
  std::cout << "acceptance run (tolerances and limits are fixed in the source)" << std::endl;
  bool ok = true;
  ok &= report(1, "exact identities", kLimitIdentities, identities);
  ok &= report(2, "Weyl bound", kLimitWeyl, weyl);
  ok &= report(3, "dual inner-product identity", kLimitDual, dual_identity);
  ok &= report(4, "von Neumann inequality", kLimitVonNeumann, von_neumann);
  ok &= report(5, "product lower bound", kLimitLowerBound, lower_bound);
  ok &= report(6, "error decay", 1e9, error_decay);
  ok &= report(7, "PET descent", kLimitPet, pet);
  ok &= report(8, "configuration finder", kLimitFinder, finder);
  std::cout << "criterion 9 (constants c, C, p0): INFO | not reproducible: they are existential; criteria 1-8 "
               "substitute exact identities, proved inequalities and the explicit exponent 1/8"
            << std::endl;
  std::cout << (ok ? "all criteria 1-8 PASS" : "some criteria FAIL") << std::endl;
  return ok ? 0 : 1;
}
