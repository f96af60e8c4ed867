#include "cli.hpp"

#include <algorithm>
#include <fstream>
#include <memory>
#include <optional>
#include <ostream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "addcomb/charsum.hpp"
#include "addcomb/counting.hpp"
#include "addcomb/gowers.hpp"
#include "addcomb/grid_io.hpp"
#include "addcomb/harness.hpp"
#include "addcomb/pet.hpp"

namespace addcomb::cli {

namespace {

using nlohmann::json;

json complex_json(const Complex& z) { return json::array({z.real(), z.imag()}); }

// Configuration flags shared by count, find and scan.
struct ConfigFlags {
  std::string preset;
  std::size_t dim = 0;
  std::string vectors;
  std::string polys;

  void add_to(CLI::App& app) {
    app.add_option("--preset", preset, "square-corners or cubic-corners")
        ->check(CLI::IsMember({"square-corners", "cubic-corners"}));
    app.add_option("--dim", dim, "dimension D");
    app.add_option("--vectors", vectors, "direction vectors, e.g. \"1,0;0,1\"");
    app.add_option("--polys", polys, "polynomials, e.g. \"0,1|0,0,1\"");
  }

  ConfigurationSpec build() const {
    if (!preset.empty()) {
      if (dim != 0 || !vectors.empty() || !polys.empty()) {
        throw CLI::ValidationError("--preset", "cannot be combined with --dim/--vectors/--polys");
      }
      return preset == "square-corners" ? ConfigurationSpec::square_corners() : ConfigurationSpec::cubic_corners();
    }
    if (dim == 0 || vectors.empty() || polys.empty()) {
      throw CLI::ValidationError("configuration", "give --preset or all of --dim, --vectors, --polys");
    }
    return ConfigurationSpec(dim, parse_int_vector_list(vectors), parse_poly_list(polys));
  }
};

// key=value lines become "--key value" unless the flag is already present.
std::vector<std::string> merge_config(const std::vector<std::string>& args, const std::string& path) {
  std::ifstream in(path);
  if (!in) throw CLI::FileError::Missing(path);
  std::vector<std::string> merged(args);
  std::string line;
  while (std::getline(in, line)) {
    const auto first = line.find_first_not_of(" \t");
    if (first == std::string::npos || line[first] == '#') continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) throw CLI::ConversionError("config line without '=': " + line);
    auto strip = [](std::string s) {
      const auto a = s.find_first_not_of(" \t\r");
      const auto b = s.find_last_not_of(" \t\r");
      return a == std::string::npos ? std::string() : s.substr(a, b - a + 1);
    };
    const std::string key = "--" + strip(line.substr(0, eq));
    const std::string value = strip(line.substr(eq + 1));
    const bool given = std::any_of(args.begin(), args.end(), [&](const std::string& a) {
      return a == key || a.rfind(key + "=", 0) == 0;
    });
    if (!given) {
      merged.push_back(key);
      merged.push_back(value);
    }
  }
  return merged;
}

std::optional<std::string> find_config_path(const std::vector<std::string>& args) {
  for (std::size_t k = 0; k < args.size(); ++k) {
    if (args[k] == "--config" && k + 1 < args.size()) return args[k + 1];
    if (args[k].rfind("--config=", 0) == 0) return args[k].substr(9);
  }
  return std::nullopt;
}

std::vector<std::string> split_paths(const std::string& list) {
  std::vector<std::string> out;
  std::size_t start = 0;
  for (;;) {
    const auto pos = list.find(',', start);
    out.push_back(list.substr(start, pos == std::string::npos ? std::string::npos : pos - start));
    if (pos == std::string::npos) return out;
    start = pos + 1;
  }
}

void require_grid(const GridShape& expected, const GridShape& got, const std::string& path) {
  if (!(expected == got)) {
    throw ContractError(path + ": grid is p=" + std::to_string(got.p()) + " D=" + std::to_string(got.dim()) +
                        ", expected p=" + std::to_string(expected.p()) + " D=" + std::to_string(expected.dim()));
  }
}

}  // namespace

int dispatch(const std::vector<std::string>& raw_args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Finite-field additive combinatorics toolkit", "addcomb"};
  app.require_subcommand(1);
  app.fallthrough();
  std::string config_path;
  app.add_option("--config", config_path, "key=value file; flags on the command line take precedence");

  // count
  auto* count = app.add_subcommand("count", "counting operator, main term and their difference");
  std::uint64_t count_p = 0;
  ConfigFlags count_cfg;
  std::string count_fns;
  count->add_option("--prime", count_p, "prime p")->required();
  count_cfg.add_to(*count);
  count->add_option("--fns", count_fns, "comma-separated gridfn files f_0,...,f_t")->required();

  // norm
  auto* norm = app.add_subcommand("norm", "Gowers norm along a direction");
  std::uint64_t norm_p = 0;
  std::size_t norm_dim = 0;
  std::string norm_vector;
  unsigned norm_degree = 0;
  std::string norm_fn;
  norm->add_option("--prime", norm_p, "prime p")->required();
  norm->add_option("--dim", norm_dim, "dimension D")->required();
  norm->add_option("--vector", norm_vector, "direction, e.g. \"1,0\"")->required();
  norm->add_option("--degree", norm_degree, "degree s >= 1")->required();
  norm->add_option("--fn", norm_fn, "gridfn file")->required();

  // weyl
  auto* weyl = app.add_subcommand("weyl", "complete exponential sum of a polynomial");
  std::uint64_t weyl_p = 0;
  std::string weyl_poly;
  weyl->add_option("--prime", weyl_p, "prime p")->required();
  weyl->add_option("--poly", weyl_poly, "polynomial literal, e.g. \"0,0,1\"")->required();

  // pet-trace
  auto* pet = app.add_subcommand("pet-trace", "van der Corput descent on a polynomial family");
  std::string pet_family;
  std::size_t pet_steps = kDefaultMaxSteps;
  pet->add_option("--family", pet_family, "family file")->required();
  pet->add_option("--max-steps", pet_steps, "step limit");

  // scan
  auto* scan = app.add_subcommand("scan", "error decay of the counting operator over a prime range");
  ConfigFlags scan_cfg;
  std::uint64_t scan_pmin = 0;
  std::uint64_t scan_pmax = 0;
  std::size_t scan_trials = 1;
  std::uint64_t scan_seed = 0;
  std::string scan_family = "rademacher";
  double scan_alpha = 0.5;
  std::string scan_out;
  std::string scan_jsonl;
  scan_cfg.add_to(*scan);
  scan->add_option("--p-min", scan_pmin, "smallest prime")->required();
  scan->add_option("--p-max", scan_pmax, "largest prime")->required();
  scan->add_option("--trials", scan_trials, "trials per prime");
  scan->add_option("--seed", scan_seed, "seed");
  scan->add_option("--family", scan_family, "rademacher, unit-circle, random-set or ones");
  scan->add_option("--alpha", scan_alpha, "density for random-set");
  scan->add_option("--out", scan_out, "CSV output path (default: stdout)");
  scan->add_option("--jsonl", scan_jsonl, "JSON-lines output path");

  // find
  auto* find = app.add_subcommand("find", "first nontrivial configuration inside a set");
  std::uint64_t find_p = 0;
  ConfigFlags find_cfg;
  std::string find_set;
  find->add_option("--prime", find_p, "prime p")->required();
  find_cfg.add_to(*find);
  find->add_option("--set", find_set, "mask file")->required();

  try {
    std::vector<std::string> args = raw_args;
    if (auto path = find_config_path(raw_args)) args = merge_config(raw_args, *path);
    std::reverse(args.begin(), args.end());
    app.parse(args);
  } catch (const CLI::CallForHelp& e) {
    app.exit(e, out, err);
    return kOk;
  } catch (const CLI::CallForAllHelp& e) {
    app.exit(e, out, err);
    return kOk;
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kUsageError;
  }

  try {
    if (count->parsed()) {
      const ConfigurationSpec spec = count_cfg.build();
      const GridShape shape(PrimeCtx(count_p), spec.dim());
      std::vector<GridFunction> fns;
      for (const auto& path : split_paths(count_fns)) {
        fns.push_back(load_grid_function(path));
        require_grid(shape, fns.back().shape(), path);
      }
      const CountReport rep = error_report(spec, fns);
      out << json{{"counting", complex_json(rep.counting_value)},
                  {"main", complex_json(rep.main_term)},
                  {"abs_error", rep.abs_error}}
                 .dump()
          << "\n";
    } else if (norm->parsed()) {
      const GridShape shape(PrimeCtx(norm_p), norm_dim);
      const GridFunction f = load_grid_function(norm_fn);
      require_grid(shape, f.shape(), norm_fn);
      const FpVec v = FpVec::reduce(parse_int_vector(norm_vector), shape.ctx());
      const NormResult r = gowers_norm(f, v, norm_degree);
      out << json{{"norm", r.value}, {"degree", r.s}, {"vector", r.v.coords()}}.dump() << "\n";
    } else if (weyl->parsed()) {
      const PrimeCtx ctx(weyl_p);
      const WeylResult r = weyl_sum(parse_poly_literal(weyl_poly), ctx);
      json j{{"value", complex_json(r.value)}, {"modulus", r.modulus}, {"degree", r.degree}};
      if (r.bound_applies) {
        j["bound"] = r.bound;
        j["verdict"] = r.within_bound ? "pass" : "fail";
      } else {
        j["verdict"] = "not applicable";
      }
      out << j.dump() << "\n";
    } else if (pet->parsed()) {
      const PolyFamily fam = load_family(pet_family);
      const PetTrace trace = pet_trace(fam, pet_steps);
      out << "initial family, type " << type_of(fam).to_string() << "\n" << fam.to_string() << "\n";
      for (std::size_t k = 0; k < trace.steps.size(); ++k) {
        const VdcStep& s = trace.steps[k];
        out << "step " << k + 1 << ": h" << s.symbol.index << ", Q = (";
        for (std::size_t j = 0; j < s.q.size(); ++j) out << (j ? ", " : "") << s.q[j].to_string();
        out << "), type " << s.type_before.to_string() << " -> " << s.type_after.to_string()
            << ", degenerate " << s.degenerate_h.to_string() << "\n"
            << s.family.to_string() << "\n";
      }
      out << "status: " << to_string(trace.status) << "\n";
      for (std::size_t k = 0; k < trace.steps.size(); ++k) {
        const VdcStep& s = trace.steps[k];
        json q = json::array();
        for (const auto& p : s.q) q.push_back(p.to_string());
        json values = json::array();
        for (const auto& v : s.degenerate_h.values) values.push_back(v.str());
        json polys = json::array();
        for (const auto& p : s.degenerate_h.polys) polys.push_back(p.to_string());
        out << json{{"step", k + 1},
                    {"Q", q},
                    {"type_before", s.type_before.w},
                    {"type_after", s.type_after.w},
                    {"degenerate_h", {{"symbol", "h" + std::to_string(s.degenerate_h.symbol.index)},
                                      {"values", values},
                                      {"polys", polys}}}}
                   .dump()
            << "\n";
      }
      if (trace.status != TraceStatus::terminated) return kContractViolation;
    } else if (scan->parsed()) {
      ScanConfig cfg{.spec = scan_cfg.build()};
      cfg.p_min = scan_pmin;
      cfg.p_max = scan_pmax;
      cfg.trials = scan_trials;
      cfg.seed = scan_seed;
      if (scan_family == "ones") {
        cfg.all_ones = true;
      } else {
        cfg.family.kind = parse_function_kind(scan_family);
        cfg.family.alpha = scan_alpha;
      }
      std::unique_ptr<std::ofstream> csv_file;
      std::unique_ptr<std::ofstream> json_file;
      ScanSinks sinks;
      sinks.log = &err;
      if (!scan_out.empty()) {
        csv_file = std::make_unique<std::ofstream>(scan_out);
        if (!*csv_file) throw std::runtime_error("cannot write " + scan_out);
        sinks.csv = csv_file.get();
      } else {
        sinks.csv = &out;
      }
      if (!scan_jsonl.empty()) {
        json_file = std::make_unique<std::ofstream>(scan_jsonl);
        if (!*json_file) throw std::runtime_error("cannot write " + scan_jsonl);
        sinks.jsonl = json_file.get();
      }
      const ScanResult res = scan_error_decay(cfg, sinks);
      json summary{{"fit", to_string(res.fit.status)}, {"primes", res.fit.primes}, {"max_error", res.fit.max_error}};
      if (res.fit.status == FitStatus::fitted) summary["c_hat"] = res.fit.c_hat;
      (scan_out.empty() ? err : out) << summary.dump() << "\n";
    } else if (find->parsed()) {
      const ConfigurationSpec spec = find_cfg.build();
      const GridShape shape(PrimeCtx(find_p), spec.dim());
      const SubsetMask set = load_subset_mask(find_set);
      require_grid(shape, set.shape(), find_set);
      const auto w = find_config(set, spec);
      if (w) {
        out << json{{"x", w->x.coords()}, {"y", w->y}}.dump() << "\n";
      } else {
        out << "none\n";
      }
    }
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kUsageError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kContractViolation;
  }
  return kOk;
}

}  // namespace addcomb::cli
