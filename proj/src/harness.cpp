#include "addcomb/harness.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <ostream>
#include <random>

#include <nlohmann/json.hpp>

namespace addcomb {

FunctionKind parse_function_kind(const std::string& name) {
  if (name == "rademacher") return FunctionKind::rademacher;
  if (name == "unit-circle") return FunctionKind::unit_circle;
  if (name == "random-set") return FunctionKind::random_set;
  throw ContractError("unknown function kind '" + name + "' (rademacher, unit-circle, random-set)");
}

std::string to_string(FunctionKind kind) {
  switch (kind) {
    case FunctionKind::rademacher:
      return "rademacher";
    case FunctionKind::unit_circle:
      return "unit-circle";
    case FunctionKind::random_set:
      return "random-set";
  }
  return "unknown";
}

namespace {

std::mt19937_64 make_rng(std::uint64_t seed, std::uint64_t trial, const GridShape& shape, std::uint64_t stream,
                         std::uint32_t salt) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed),  static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(trial), static_cast<std::uint32_t>(trial >> 32),
                    static_cast<std::uint32_t>(shape.p()), static_cast<std::uint32_t>(shape.dim()),
                    static_cast<std::uint32_t>(stream), salt};
  return std::mt19937_64(seq);
}

// Uniform in [0, 1) from the top 53 bits; independent of the library's distributions.
double unit_double(std::mt19937_64& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

void check_alpha(double alpha) {
  if (!(alpha > 0.0 && alpha <= 1.0)) throw ContractError("random-set density must lie in (0, 1]");
}

}  // namespace

GridFunction gen_function(const FunctionFamily& family, const GridShape& shape, std::uint64_t seed,
                          std::uint64_t trial, std::uint64_t stream) {
  auto rng = make_rng(seed, trial, shape, stream, static_cast<std::uint32_t>(family.kind));
  std::vector<Complex> v(shape.size());
  switch (family.kind) {
    case FunctionKind::rademacher:
      for (auto& z : v) z = (rng() >> 63) ? 1.0 : -1.0;
      break;
    case FunctionKind::unit_circle:
      for (auto& z : v) {
        const double theta = 2.0 * std::numbers::pi * unit_double(rng);
        z = Complex(std::cos(theta), std::sin(theta));
      }
      break;
    case FunctionKind::random_set:
      check_alpha(family.alpha);
      for (auto& z : v) z = unit_double(rng) < family.alpha ? 1.0 : 0.0;
      break;
  }
  return GridFunction(shape, std::move(v));
}

PhaseFunction gen_phase(const GridShape& shape, std::uint64_t seed, std::uint64_t trial, std::uint64_t stream) {
  auto rng = make_rng(seed, trial, shape, stream, 101);
  std::vector<Residue> v(shape.size());
  for (auto& r : v) r = rng() % shape.p();
  return PhaseFunction(shape, std::move(v));
}

SubsetMask gen_mask(const GridShape& shape, double alpha, std::uint64_t seed, std::uint64_t trial,
                    std::uint64_t stream) {
  check_alpha(alpha);
  auto rng = make_rng(seed, trial, shape, stream, 102);
  std::vector<std::uint8_t> v(shape.size());
  for (auto& b : v) b = unit_double(rng) < alpha ? 1 : 0;
  return SubsetMask(shape, std::move(v));
}

std::string to_string(FitStatus s) {
  switch (s) {
    case FitStatus::fitted:
      return "fitted";
    case FitStatus::exact:
      return "exact";
    case FitStatus::undefined:
      return "undefined";
  }
  return "unknown";
}

DecayFit fit_decay(const std::vector<std::uint64_t>& primes, const std::vector<double>& max_error) {
  if (primes.size() != max_error.size()) throw ContractError("fit_decay: primes and errors differ in length");
  DecayFit fit;
  fit.primes = primes;
  fit.max_error = max_error;
  if (primes.empty()) return fit;
  bool all_zero = true;
  std::vector<double> xs;
  std::vector<double> ys;
  for (std::size_t k = 0; k < primes.size(); ++k) {
    if (max_error[k] > 0.0) {
      all_zero = false;
      xs.push_back(std::log(static_cast<double>(primes[k])));
      ys.push_back(std::log(max_error[k]));
    }
  }
  if (all_zero) {
    fit.status = FitStatus::exact;
    return fit;
  }
  if (xs.size() < 2) return fit;
  const double n = static_cast<double>(xs.size());
  double mx = 0.0;
  double my = 0.0;
  for (std::size_t k = 0; k < xs.size(); ++k) {
    mx += xs[k];
    my += ys[k];
  }
  mx /= n;
  my /= n;
  double sxy = 0.0;
  double sxx = 0.0;
  for (std::size_t k = 0; k < xs.size(); ++k) {
    sxy += (xs[k] - mx) * (ys[k] - my);
    sxx += (xs[k] - mx) * (xs[k] - mx);
  }
  fit.status = FitStatus::fitted;
  fit.c_hat = -sxy / sxx;
  return fit;
}

std::vector<std::uint64_t> primes_in_range(std::uint64_t lo, std::uint64_t hi) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t n = lo; n <= hi; ++n) {
    if (n >= 3 && is_prime(n)) out.push_back(n);
  }
  return out;
}

namespace {

std::string fmt(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

std::string spec_summary(const ConfigurationSpec& spec) {
  std::string s = "D=" + std::to_string(spec.dim());
  for (std::size_t i = 0; i < spec.t(); ++i) {
    s += " v" + std::to_string(i + 1) + "=(";
    for (std::size_t j = 0; j < spec.vectors()[i].size(); ++j) {
      s += (j ? "," : "") + std::to_string(spec.vectors()[i][j]);
    }
    s += ") P" + std::to_string(i + 1) + "=" + spec.polys()[i].to_string();
  }
  return s;
}

}  // namespace

ScanResult scan_error_decay(const ScanConfig& cfg, const ScanSinks& sinks) {
  if (cfg.trials < 1) throw ContractError("scan needs at least one trial per prime");
  if (cfg.p_min > cfg.p_max) throw ContractError("scan prime range is empty");
  if (!cfg.all_ones && cfg.family.kind == FunctionKind::random_set) check_alpha(cfg.family.alpha);

  if (sinks.csv) {
    auto& o = *sinks.csv;
    o << "# generator: " << kGeneratorName << "\n";
    o << "# configuration: " << spec_summary(cfg.spec) << "\n";
    o << "# family: " << (cfg.all_ones ? std::string("ones") : to_string(cfg.family.kind));
    if (!cfg.all_ones && cfg.family.kind == FunctionKind::random_set) o << " alpha=" << fmt(cfg.family.alpha);
    o << "\n# seed: " << cfg.seed << "\n# primes: " << cfg.p_min << ".." << cfg.p_max << " trials: " << cfg.trials
      << "\n";
    o << "p,trial,counting_re,counting_im,main_re,main_im,abs_error,runtime_ms\n";
    o.flush();
  }

  ScanResult result;
  std::vector<std::uint64_t> fitted_primes;
  std::vector<double> max_errors;
  for (std::uint64_t p : primes_in_range(cfg.p_min, cfg.p_max)) {
    const PrimeCtx ctx(p);
    const auto problems = validate(cfg.spec, ctx);
    if (!problems.empty()) {
      std::string line = "skipping p=" + std::to_string(p) + ":";
      for (const auto& e : problems) line += " " + e + ";";
      result.skipped.push_back(line);
      if (sinks.log) *sinks.log << line << "\n";
      continue;
    }
    const GridShape shape(ctx, cfg.spec.dim());
    double worst = 0.0;
    for (std::size_t trial = 0; trial < cfg.trials; ++trial) {
      const auto start = std::chrono::steady_clock::now();
      std::vector<GridFunction> fns;
      for (std::size_t i = 0; i <= cfg.spec.t(); ++i) {
        fns.push_back(cfg.all_ones ? GridFunction::filled(shape, 1.0)
                                   : gen_function(cfg.family, shape, cfg.seed, trial, i));
      }
      const CountReport rep = error_report(cfg.spec, fns);
      const auto stop = std::chrono::steady_clock::now();

      ScanRow row{p, trial, rep.counting_value, rep.main_term, rep.abs_error,
                  std::chrono::duration<double, std::milli>(stop - start).count()};
      worst = std::max(worst, row.abs_error);
      if (sinks.csv) {
        *sinks.csv << p << "," << trial << "," << fmt(row.counting_value.real()) << ","
                   << fmt(row.counting_value.imag()) << "," << fmt(row.main_term.real()) << ","
                   << fmt(row.main_term.imag()) << "," << fmt(row.abs_error) << "," << fmt(row.runtime_ms) << "\n";
        sinks.csv->flush();
      }
      if (sinks.jsonl) {
        nlohmann::json j = {{"p", p},
                            {"trial", trial},
                            {"counting_re", row.counting_value.real()},
                            {"counting_im", row.counting_value.imag()},
                            {"main_re", row.main_term.real()},
                            {"main_im", row.main_term.imag()},
                            {"abs_error", row.abs_error},
                            {"runtime_ms", row.runtime_ms}};
        *sinks.jsonl << j.dump() << "\n";
        sinks.jsonl->flush();
      }
      result.rows.push_back(row);
    }
    fitted_primes.push_back(p);
    max_errors.push_back(worst);
  }
  result.fit = fit_decay(fitted_primes, max_errors);
  return result;
}

}  // namespace addcomb
