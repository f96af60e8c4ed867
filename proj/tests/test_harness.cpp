#include <gtest/gtest.h>

#include <cmath>
#include <sstream>
#include <string>

#include "addcomb/harness.hpp"

using namespace addcomb;

namespace {

// CSV body with the runtime column removed.
std::string without_runtime(const std::string& csv) {
  std::istringstream in(csv);
  std::string line;
  std::string out;
  while (std::getline(in, line)) {
    if (!line.empty() && line[0] != '#' && line.rfind("p,", 0) != 0) line = line.substr(0, line.rfind(','));
    out += line + "\n";
  }
  return out;
}

}  // namespace

TEST(Generators, Deterministic) {
  GridShape shape(PrimeCtx(11), 2);
  for (auto kind : {FunctionKind::rademacher, FunctionKind::unit_circle, FunctionKind::random_set}) {
    const FunctionFamily fam{kind, 0.3};
    const auto a = gen_function(fam, shape, 42, 3, 1);
    const auto b = gen_function(fam, shape, 42, 3, 1);
    const auto c = gen_function(fam, shape, 42, 3, 2);
    bool differs = false;
    for (std::size_t i = 0; i < shape.size(); ++i) {
      EXPECT_EQ(a[i], b[i]);
      differs = differs || a[i] != c[i];
    }
    EXPECT_TRUE(differs);
    EXPECT_TRUE(is_one_bounded(a));
  }
  const auto m1 = gen_mask(shape, 0.5, 7, 0);
  const auto m2 = gen_mask(shape, 0.5, 7, 0);
  const auto p1 = gen_phase(shape, 7, 0);
  const auto p2 = gen_phase(shape, 7, 0);
  for (std::size_t i = 0; i < shape.size(); ++i) {
    EXPECT_EQ(m1[i], m2[i]);
    EXPECT_EQ(p1[i], p2[i]);
  }
}

TEST(Generators, ValueRanges) {
  GridShape shape(PrimeCtx(13), 2);
  const auto r = gen_function({FunctionKind::rademacher}, shape, 1, 0);
  for (auto z : r.values()) EXPECT_TRUE(z == Complex(1.0) || z == Complex(-1.0));
  const auto u = gen_function({FunctionKind::unit_circle}, shape, 1, 0);
  for (auto z : u.values()) EXPECT_NEAR(std::abs(z), 1.0, 1e-15);
  const auto full = gen_function({FunctionKind::random_set, 1.0}, shape, 1, 0);
  for (auto z : full.values()) EXPECT_EQ(z, Complex(1.0));
  EXPECT_THROW(gen_function({FunctionKind::random_set, 0.0}, shape, 1, 0), ContractError);
  EXPECT_THROW(gen_mask(shape, 1.5, 1, 0), ContractError);
}

TEST(FunctionKind, Names) {
  EXPECT_EQ(parse_function_kind("unit-circle"), FunctionKind::unit_circle);
  EXPECT_EQ(to_string(FunctionKind::random_set), "random-set");
  EXPECT_THROW(parse_function_kind("gaussian"), ContractError);
}

TEST(FitDecay, Cases) {
  EXPECT_EQ(fit_decay({11}, {0.1}).status, FitStatus::undefined);
  EXPECT_EQ(fit_decay({11, 13}, {0.0, 0.0}).status, FitStatus::exact);
  const auto f = fit_decay({10, 100, 1000}, {1.0, 0.1, 0.01});
  EXPECT_EQ(f.status, FitStatus::fitted);
  EXPECT_NEAR(f.c_hat, 1.0, 1e-12);
  EXPECT_EQ(fit_decay({11, 13, 17}, {0.0, 0.2, 0.0}).status, FitStatus::undefined);
  EXPECT_THROW(fit_decay({11}, {}), ContractError);
}

TEST(PrimesInRange, Basic) {
  EXPECT_EQ(primes_in_range(1, 20), (std::vector<std::uint64_t>{3, 5, 7, 11, 13, 17, 19}));
  EXPECT_TRUE(primes_in_range(24, 28).empty());
}

TEST(Scan, SinglePrimeIsUndefined) {
  ScanConfig cfg{.spec = ConfigurationSpec::square_corners()};
  cfg.p_min = 11;
  cfg.p_max = 11;
  cfg.trials = 1;
  const auto res = scan_error_decay(cfg);
  ASSERT_EQ(res.rows.size(), 1u);
  EXPECT_EQ(res.fit.status, FitStatus::undefined);
}

TEST(Scan, AllOnesIsExact) {
  ScanConfig cfg{.spec = ConfigurationSpec::square_corners()};
  cfg.p_min = 5;
  cfg.p_max = 23;
  cfg.trials = 2;
  cfg.all_ones = true;
  const auto res = scan_error_decay(cfg);
  for (const auto& row : res.rows) EXPECT_EQ(row.abs_error, 0.0);
  EXPECT_EQ(res.fit.status, FitStatus::exact);
}

TEST(Scan, SkipsInvalidPrimes) {
  ScanConfig cfg{.spec = ConfigurationSpec::cubic_corners()};
  cfg.p_min = 3;
  cfg.p_max = 7;
  std::ostringstream log;
  const auto res = scan_error_decay(cfg, {nullptr, nullptr, &log});
  ASSERT_EQ(res.skipped.size(), 1u);
  EXPECT_NE(log.str().find("skipping p=3"), std::string::npos);
  EXPECT_EQ(res.rows.size(), 2u);
}

TEST(Scan, CsvLayoutAndReproducibility) {
  ScanConfig cfg{.spec = ConfigurationSpec::square_corners()};
  cfg.p_min = 11;
  cfg.p_max = 17;
  cfg.trials = 3;
  cfg.seed = 42;
  std::ostringstream csv1;
  std::ostringstream csv2;
  std::ostringstream jsonl;
  const auto r1 = scan_error_decay(cfg, {&csv1, &jsonl, nullptr});
  scan_error_decay(cfg, {&csv2, nullptr, nullptr});
  EXPECT_EQ(without_runtime(csv1.str()), without_runtime(csv2.str()));
  EXPECT_NE(csv1.str().find("# generator: "), std::string::npos);
  EXPECT_NE(csv1.str().find("p,trial,counting_re,counting_im,main_re,main_im,abs_error,runtime_ms\n"),
            std::string::npos);
  std::size_t data_lines = 0;
  std::istringstream in(csv1.str());
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line[0] != '#' && line.rfind("p,", 0) != 0) ++data_lines;
  }
  EXPECT_EQ(data_lines, 9u);
  EXPECT_EQ(r1.rows.size(), 9u);
  EXPECT_EQ(r1.rows[0].p, 11u);
  EXPECT_EQ(r1.rows[8].p, 17u);
  std::size_t json_lines = 0;
  std::istringstream jin(jsonl.str());
  while (std::getline(jin, line)) {
    EXPECT_NE(line.find("\"abs_error\""), std::string::npos);
    ++json_lines;
  }
  EXPECT_EQ(json_lines, 9u);
  EXPECT_EQ(r1.fit.status, FitStatus::fitted);
}

TEST(Scan, Contracts) {
  ScanConfig cfg{.spec = ConfigurationSpec::square_corners()};
  cfg.trials = 0;
  EXPECT_THROW(scan_error_decay(cfg), ContractError);
  cfg.trials = 1;
  cfg.p_min = 20;
  cfg.p_max = 10;
  EXPECT_THROW(scan_error_decay(cfg), ContractError);
}
