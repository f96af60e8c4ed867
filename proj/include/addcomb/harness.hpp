#pragma once

// Deterministic random inputs and prime-range error-decay scans.

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "addcomb/counting.hpp"

namespace addcomb {

enum class FunctionKind { rademacher, unit_circle, random_set };

struct FunctionFamily {
  FunctionKind kind = FunctionKind::rademacher;
  double alpha = 0.5;  // density for random_set
};

// "rademacher", "unit-circle", "random-set" (density given separately).
FunctionKind parse_function_kind(const std::string& name);
std::string to_string(FunctionKind kind);

constexpr const char* kGeneratorName = "std::mt19937_64 (seed_seq of seed, trial, p, D, stream)";

// Identical (family, shape, seed, trial, stream) gives bit-identical values.
// `stream` separates the functions f_0, f_1, ... of one trial.
GridFunction gen_function(const FunctionFamily& family, const GridShape& shape, std::uint64_t seed,
                          std::uint64_t trial, std::uint64_t stream = 0);
PhaseFunction gen_phase(const GridShape& shape, std::uint64_t seed, std::uint64_t trial, std::uint64_t stream = 0);
SubsetMask gen_mask(const GridShape& shape, double alpha, std::uint64_t seed, std::uint64_t trial,
                    std::uint64_t stream = 0);

struct ScanConfig {
  ConfigurationSpec spec;
  std::uint64_t p_min = 11;
  std::uint64_t p_max = 11;
  std::size_t trials = 1;
  std::uint64_t seed = 0;
  FunctionFamily family{};
  // The constant family f_i = 1 (every error is zero).
  bool all_ones = false;
};

struct ScanRow {
  std::uint64_t p = 0;
  std::size_t trial = 0;
  Complex counting_value;
  Complex main_term;
  double abs_error = 0.0;
  double runtime_ms = 0.0;
};

enum class FitStatus { fitted, exact, undefined };
std::string to_string(FitStatus s);

struct DecayFit {
  FitStatus status = FitStatus::undefined;
  double c_hat = 0.0;  // minus the slope of log(max error) against log p
  std::vector<std::uint64_t> primes;
  std::vector<double> max_error;  // per prime, same order
};

// Least squares of log(max_error) against log(p). Fewer than two primes gives
// `undefined`, all-zero errors give `exact`; zero errors alongside nonzero ones
// are left out of the fit.
DecayFit fit_decay(const std::vector<std::uint64_t>& primes, const std::vector<double>& max_error);

struct ScanResult {
  std::vector<ScanRow> rows;
  std::vector<std::string> skipped;  // one line per prime rejected by validate
  DecayFit fit;
};

struct ScanSinks {
  std::ostream* csv = nullptr;    // header comment lines, column names, one row per (p, trial)
  std::ostream* jsonl = nullptr;  // the same rows as JSON objects
  std::ostream* log = nullptr;    // skipped primes
};

std::vector<std::uint64_t> primes_in_range(std::uint64_t lo, std::uint64_t hi);

// Rows are written and flushed as they are computed.
ScanResult scan_error_decay(const ScanConfig& cfg, const ScanSinks& sinks = {});

}  // namespace addcomb
