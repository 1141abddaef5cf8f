// kepler-bench: run Kepler integrators, collect conservation diagnostics,
// write CSV/JSONL sample streams and SVG comparison plots.
//
// Exit codes: 0 success, 2 config validation, 3 integrator failure, 4 I/O.
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include <kepler/config.hpp>
#include <kepler/emit.hpp>
#include <kepler/errors.hpp>
#include <kepler/runner.hpp>

namespace {

using kepler::bench::OutputFormat;
using kepler::bench::RunResult;
using kepler::bench::Scenario;

std::filesystem::path default_out_dir() {
  if (const char* env = std::getenv("KEPLER_OUT_DIR")) {
    return env;
  }
  return "out";
}

OutputFormat parse_format(const std::string& format) {
  if (format == "csv") {
    return OutputFormat::csv;
  }
  if (format == "jsonl") {
    return OutputFormat::jsonl;
  }
  throw kepler::ConfigError("--format must be csv or jsonl, got '" + format + "'");
}

void print_summary(const RunResult& result) {
  const auto& s = result.summary;
  std::printf("%-14s steps=%llu steps/period=%.6g\n",
              std::string(result.scenario.effective_label()).c_str(),
              static_cast<unsigned long long>(result.samples.back().n),
              result.steps_per_period);
  std::printf("  sup e_E=%.3e e_L=%.3e e_dirL=%.3e e_A=%.3e e_dirA=%.3e e_q=%.3e\n",
              s.e_E, s.e_L, s.e_dirL, s.e_A, s.e_dirA, s.e_q);
}

struct ScenarioFlags {
  std::string config_path;
  std::string label;
  std::string method;
  std::vector<double> q0;
  std::vector<double> p0;
  double m = 0.0;
  double k = 0.0;
  double step = 0.0;
  std::uint64_t n_steps = 0;
  double periods = 0.0;
  std::uint64_t stride = 0;
};

void add_scenario_flags(CLI::App& cmd, ScenarioFlags& flags) {
  cmd.add_option("--config", flags.config_path, "Scenario config file (key = value)");
  cmd.add_option("--label", flags.label, "Scenario label");
  cmd.add_option("--method", flags.method, "mtpi, rk4, leapfrog or composition4");
  cmd.add_option("--q0", flags.q0, "Initial position")->expected(3);
  cmd.add_option("--p0", flags.p0, "Initial momentum")->expected(3);
  cmd.add_option("--m", flags.m, "Mass");
  cmd.add_option("--k", flags.k, "Force constant");
  cmd.add_option("--step", flags.step, "dt for fixed-step methods, h0 for mtpi");
  cmd.add_option("--n-steps", flags.n_steps, "Run length in steps");
  cmd.add_option("--periods", flags.periods, "Run length in orbital periods");
  cmd.add_option("--stride", flags.stride, "Sample every K-th step");
}

// Flags win over config-file values.
Scenario scenario_from_flags(const CLI::App& cmd, const ScenarioFlags& flags) {
  Scenario sc;
  if (!flags.config_path.empty()) {
    sc = kepler::bench::scenario_from_config(
        kepler::bench::parse_config_file(flags.config_path));
  }
  if (cmd.count("--label") > 0) {
    sc.label = flags.label;
  }
  if (cmd.count("--method") > 0) {
    const auto method = kepler::bench::method_from_name(flags.method);
    if (!method) {
      throw kepler::ConfigError("--method must be one of mtpi, rk4, leapfrog, "
                                "composition4; got '" + flags.method + "'");
    }
    sc.method = *method;
  }
  if (cmd.count("--q0") > 0) {
    sc.q0 = {flags.q0[0], flags.q0[1], flags.q0[2]};
  }
  if (cmd.count("--p0") > 0) {
    sc.p0 = {flags.p0[0], flags.p0[1], flags.p0[2]};
  }
  if (cmd.count("--m") > 0) {
    sc.params.m = flags.m;
  }
  if (cmd.count("--k") > 0) {
    sc.params.k = flags.k;
  }
  if (cmd.count("--step") > 0) {
    sc.step = flags.step;
  }
  if (cmd.count("--n-steps") > 0) {
    sc.n_steps = flags.n_steps;
    sc.n_periods.reset();
  }
  if (cmd.count("--periods") > 0) {
    sc.n_periods = flags.periods;
    sc.n_steps.reset();
  }
  if (cmd.count("--stride") > 0) {
    sc.sample_stride = flags.stride;
  }
  kepler::bench::validate(sc);
  return sc;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Kepler problem integrator benchmark"};
  app.require_subcommand(1);
  app.fallthrough();  // shared flags may follow the subcommand name

  std::filesystem::path out_dir = default_out_dir();
  std::string format = "csv";
  bool plot = false;
  app.add_option("--out", out_dir, "Output directory (default $KEPLER_OUT_DIR or ./out)");
  app.add_option("--format", format, "Sample file format: csv or jsonl");
  app.add_flag("--plot", plot, "Also write SVG comparison plots");

  CLI::App* run_cmd = app.add_subcommand("run", "Run a single scenario");
  ScenarioFlags run_flags;
  add_scenario_flags(*run_cmd, run_flags);

  CLI::App* compare_cmd =
      app.add_subcommand("compare", "Run several scenarios and compare them");
  std::vector<std::string> compare_configs;
  std::uint64_t compare_stride = 0;
  double compare_periods = 0.0;
  compare_cmd->add_option("--config", compare_configs, "Scenario config file (repeatable)")
      ->required();
  compare_cmd->add_option("--stride", compare_stride, "Override sample stride for all scenarios");
  compare_cmd->add_option("--periods", compare_periods, "Override run length for all scenarios");

  CLI::App* paper_cmd =
      app.add_subcommand("paper", "Run the built-in four-method reference experiment");
  double paper_periods = 5.0;
  std::uint64_t paper_stride = 100;
  paper_cmd->add_option("--periods", paper_periods, "Number of orbital periods (default 5)");
  paper_cmd->add_option("--stride", paper_stride, "Sample every K-th step (default 100)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    const OutputFormat out_format = parse_format(format);
    std::vector<RunResult> results;

    if (run_cmd->parsed()) {
      results.push_back(kepler::bench::run_scenario(scenario_from_flags(*run_cmd, run_flags)));
    } else if (compare_cmd->parsed()) {
      std::vector<Scenario> scenarios;
      scenarios.reserve(compare_configs.size());
      for (const std::string& path : compare_configs) {
        Scenario sc =
            kepler::bench::scenario_from_config(kepler::bench::parse_config_file(path));
        if (compare_cmd->count("--stride") > 0) {
          sc.sample_stride = compare_stride;
        }
        if (compare_cmd->count("--periods") > 0) {
          sc.n_periods = compare_periods;
          sc.n_steps.reset();
        }
        kepler::bench::validate(sc);
        scenarios.push_back(std::move(sc));
      }
      results = kepler::bench::run_comparison(scenarios);
    } else {
      kepler::bench::PaperOptions options;
      options.periods = paper_periods;
      options.sample_stride = paper_stride;
      options.out_dir = out_dir;
      options.format = out_format;
      options.write_plots = plot;
      results = kepler::bench::paper_experiment(options);
      for (const RunResult& result : results) {
        print_summary(result);
      }
      return 0;
    }

    kepler::bench::write_outputs(results, out_dir, out_format, plot);
    for (const RunResult& result : results) {
      print_summary(result);
    }
    return 0;
  } catch (const kepler::ConfigError& e) {
    std::fprintf(stderr, "config error: %s\n", e.what());
    return 2;
  } catch (const kepler::IoError& e) {
    std::fprintf(stderr, "io error: %s\n", e.what());
    return 4;
  } catch (const kepler::Error& e) {
    std::fprintf(stderr, "integrator error: %s\n", e.what());
    return 3;
  }
}
