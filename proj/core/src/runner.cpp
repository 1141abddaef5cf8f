#include <kepler/runner.hpp>

#include <algorithm>
#include <cmath>
#include <fstream>
#include <future>
#include <limits>
#include <numbers>
#include <string>

#include <kepler/anomaly.hpp>
#include <kepler/baseline.hpp>
#include <kepler/emit.hpp>
#include <kepler/errors.hpp>
#include <kepler/mtpi.hpp>

namespace kepler::bench {

std::string_view method_name(Method method) {
  switch (method) {
    case Method::mtpi: return "mtpi";
    case Method::rk4: return "rk4";
    case Method::leapfrog: return "leapfrog";
    case Method::composition4: return "composition4";
  }
  return "?";
}

std::optional<Method> method_from_name(std::string_view name) {
  for (Method m : kAllMethods) {
    if (method_name(m) == name) {
      return m;
    }
  }
  return std::nullopt;
}

void validate(const Scenario& scenario) {
  if (!(scenario.params.m > 0.0)) {
    throw ConfigError("scenario field m must be positive, got " +
                      std::to_string(scenario.params.m));
  }
  if (!(scenario.params.k > 0.0)) {
    throw ConfigError("scenario field k must be positive, got " +
                      std::to_string(scenario.params.k));
  }
  if (!(norm(scenario.q0) > 0.0)) {
    throw ConfigError("scenario field q0 must be nonzero");
  }
  if (!(scenario.step > 0.0)) {
    throw ConfigError("scenario field step must be positive, got " +
                      std::to_string(scenario.step));
  }
  if (scenario.n_steps.has_value() == scenario.n_periods.has_value()) {
    throw ConfigError("scenario requires exactly one of n_steps or n_periods");
  }
  if (scenario.n_periods) {
    if (!(*scenario.n_periods > 0.0)) {
      throw ConfigError("scenario field n_periods must be positive, got " +
                        std::to_string(*scenario.n_periods));
    }
    const double e0 = energy({scenario.q0, scenario.p0, 0.0}, scenario.params);
    if (!(e0 < 0.0)) {
      throw ConfigError("scenario field n_periods requires a bound orbit; "
                        "energy(q0, p0) = " + std::to_string(e0) + " is not negative");
    }
  }
  if (scenario.sample_stride < 1) {
    throw ConfigError("scenario field sample_stride must be at least 1");
  }
}

namespace {

SampleRow make_row(std::uint64_t n, double t, const Vec3& q, const Vec3& p, double h,
                   const diag::Sample& errors) {
  return {n, t, q, p, h, errors.e_E, errors.e_L, errors.e_dirL, errors.e_A,
          errors.e_dirA, errors.e_q};
}

}  // namespace

RunResult run_scenario(const Scenario& scenario) {
  validate(scenario);

  const PhaseState initial{scenario.q0, scenario.p0, 0.0};
  const double e0 = energy(initial, scenario.params);
  double period = std::numeric_limits<double>::quiet_NaN();
  if (e0 < 0.0) {
    period = anomaly::orbital_period(first_integrals(initial, scenario.params),
                                     scenario.params);
  }

  RunResult result;
  result.scenario = scenario;

  diag::ErrorTracker tracker(initial, scenario.params);
  const std::uint64_t stride = scenario.sample_stride;

  if (scenario.method == Method::mtpi) {
    mtpi::State state =
        mtpi::init(scenario.q0, scenario.p0, scenario.step, scenario.params);
    result.steps_per_period = std::numbers::pi / state.angles.delta;
    const std::uint64_t total =
        scenario.n_steps
            ? *scenario.n_steps
            : static_cast<std::uint64_t>(
                  std::llround(*scenario.n_periods * result.steps_per_period));
    result.samples.reserve(total / stride + 2);
    result.samples.push_back(
        make_row(0, 0.0, scenario.q0, scenario.p0, scenario.step, tracker.observe(initial)));
    for (std::uint64_t j = 1; j <= total; ++j) {
      const mtpi::StepResult r = mtpi::step(state);
      state = r.state;
      if (j % stride == 0 || j == total) {
        const diag::Sample errors =
            tracker.observe({r.output.q, r.output.p, r.output.t});
        result.samples.push_back(
            make_row(j, r.output.t, r.output.q, r.output.p, r.output.h_next, errors));
      }
    }
  } else {
    const auto method = [&] {
      switch (scenario.method) {
        case Method::rk4: return baseline::FixedStepMethod::rk4;
        case Method::leapfrog: return baseline::FixedStepMethod::leapfrog;
        default: return baseline::FixedStepMethod::composition4;
      }
    }();
    result.steps_per_period = period / scenario.step;  // NaN for unbound orbits
    const std::uint64_t total =
        scenario.n_steps ? *scenario.n_steps
                         : static_cast<std::uint64_t>(std::llround(
                               *scenario.n_periods * period / scenario.step));
    result.samples.reserve(total / stride + 2);
    PhaseState state = initial;
    result.samples.push_back(
        make_row(0, 0.0, state.q, state.p, scenario.step, tracker.observe(state)));
    for (std::uint64_t j = 1; j <= total; ++j) {
      state = baseline::fixed_step(method, state, scenario.params, scenario.step);
      if (j % stride == 0 || j == total) {
        result.samples.push_back(
            make_row(j, state.t, state.q, state.p, scenario.step, tracker.observe(state)));
      }
    }
  }

  result.summary = tracker.summarize();
  return result;
}

std::vector<RunResult> run_comparison(const std::vector<Scenario>& scenarios) {
  if (scenarios.empty()) {
    throw ConfigError("comparison requires at least one scenario");
  }
  for (const Scenario& scenario : scenarios) {
    validate(scenario);
  }

  std::vector<std::future<RunResult>> futures;
  futures.reserve(scenarios.size());
  for (const Scenario& scenario : scenarios) {
    futures.push_back(std::async(std::launch::async,
                                 [scenario] { return run_scenario(scenario); }));
  }

  std::vector<RunResult> results;
  results.reserve(scenarios.size());
  std::string failures;
  for (std::size_t i = 0; i < futures.size(); ++i) {
    try {
      results.push_back(futures[i].get());
    } catch (const std::exception& e) {
      if (!failures.empty()) {
        failures += "; ";
      }
      failures += std::string(scenarios[i].effective_label()) + ": " + e.what();
    }
  }
  if (!failures.empty()) {
    throw ComparisonError("comparison failures: " + failures);
  }
  return results;
}

std::vector<Scenario> paper_scenarios(double periods, std::uint64_t sample_stride) {
  const Vec3 q0{100.0, 0.0, 0.1};
  const Vec3 p0{0.0, 0.01, 0.0};
  const PhysParams params{0.5, 3.0};

  Scenario base;
  base.q0 = q0;
  base.p0 = p0;
  base.params = params;
  base.n_periods = periods;
  base.sample_stride = sample_stride;

  std::vector<Scenario> scenarios(4, base);
  scenarios[0].method = Method::mtpi;
  scenarios[0].step = 10.0;
  scenarios[1].method = Method::rk4;
  scenarios[1].step = 0.02;
  scenarios[2].method = Method::leapfrog;
  scenarios[2].step = 0.01;
  scenarios[3].method = Method::composition4;
  scenarios[3].step = 0.02;
  for (Scenario& s : scenarios) {
    s.label = method_name(s.method);
  }
  return scenarios;
}

void write_outputs(const std::vector<RunResult>& results,
                   const std::filesystem::path& out_dir, OutputFormat format,
                   bool write_plots) {
  std::error_code ec;
  std::filesystem::create_directories(out_dir, ec);
  if (ec) {
    throw IoError("cannot create output directory '" + out_dir.string() +
                  "': " + ec.message());
  }

  for (const RunResult& result : results) {
    const char* ext = format == OutputFormat::csv ? ".csv" : ".jsonl";
    const std::filesystem::path path =
        out_dir / (std::string(result.scenario.effective_label()) + ext);
    std::ofstream out(path, std::ios::binary);
    if (!out) {
      throw IoError("cannot open '" + path.string() + "' for writing");
    }
    if (format == OutputFormat::csv) {
      emit_csv(result, out);
    } else {
      emit_jsonl(result, out);
    }
  }

  if (write_plots) {
    for (diag::Metric metric : kComparisonPlotMetrics) {
      const bool usable = std::all_of(
          results.begin(), results.end(), [metric](const RunResult& r) {
            return r.summary.enabled[static_cast<std::size_t>(metric)];
          });
      if (!usable) {
        continue;  // degenerate reference; nothing to plot for this metric
      }
      emit_plot(results, metric,
                out_dir / (std::string(diag::metric_name(metric)) + ".svg"));
    }
  }
}

std::vector<RunResult> paper_experiment(const PaperOptions& options) {
  const std::vector<RunResult> results =
      run_comparison(paper_scenarios(options.periods, options.sample_stride));
  write_outputs(results, options.out_dir, options.format, options.write_plots);
  return results;
}

}  // namespace kepler::bench
