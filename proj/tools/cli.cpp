#include "cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>

#include "bhgame/error.hpp"
#include "bhgame/output.hpp"
#include "bhgame/version.hpp"

namespace bhgame::cli {
namespace {

struct ModelArgs {
  std::string model = "default";
  double alpha = 1.05;
  double beta = 0.05;
  int capacity = 15;
  std::string resource_model = "growth";
  double diagonal_fitness = 2.0;
  std::string mortality = "on";
  std::string normalize = "on";
  std::string label_order = "latest-first";
  std::string classifier = "five-class";
};

void add_model_options(CLI::App& cmd, ModelArgs& a) {
  cmd.add_option("--model", a.model, "Sensor model: default, modified, or a sensor file path");
  cmd.add_option("--alpha", a.alpha, "Resource growth factor")->check(CLI::PositiveNumber);
  cmd.add_option("--beta", a.beta, "Replenishment per step (replenish model)")
      ->check(CLI::NonNegativeNumber);
  cmd.add_option("--capacity", a.capacity, "Carrying capacity N = M (individuals)")
      ->check(CLI::Range(1, 64));
  cmd.add_option("--resource-model", a.resource_model, "Resource dynamics")
      ->check(CLI::IsMember({"growth", "replenish"}));
  cmd.add_option("--diagonal-fitness", a.diagonal_fitness,
                 "Reproduction rate of a matching phenotype")
      ->check(CLI::Range(1.0, 4.0));
  cmd.add_option("--mortality-in-logistic", a.mortality,
                 "Only resource-fed survivors enter the logistic update")
      ->check(CLI::IsMember({"on", "off"}));
  cmd.add_option("--interpolation-normalize", a.normalize,
                 "Renormalize interpolated population distributions")
      ->check(CLI::IsMember({"on", "off"}));
  cmd.add_option("--label-order", a.label_order,
                 "Strategy label (a,b): latest-first reads a as the action at t+1")
      ->check(CLI::IsMember({"latest-first", "earliest-first"}));
  cmd.add_option("--classifier", a.classifier, "Dominance classes reported")
      ->check(CLI::IsMember({"five-class", "six-class"}));
}

EcoParams make_params(const ModelArgs& a) {
  EcoParams p;
  p.alpha = a.alpha;
  p.beta = a.beta;
  p.capacity_x = p.capacity_y = a.capacity;
  p.resource_model = parse_resource_model(a.resource_model);
  p.sensors = sensors_by_name(a.model);
  p.diagonal_fitness = a.diagonal_fitness;
  p.mortality_in_logistic = a.mortality == "on";
  p.interpolation_normalize = a.normalize == "on";
  validate_params(p);
  return p;
}

GameOptions make_game(const ModelArgs& a) {
  return {parse_label_order(a.label_order), parse_classifier_mode(a.classifier)};
}

int default_workers() {
  const char* env = std::getenv("BHGAME_WORKERS");
  if (env == nullptr || *env == '\0') return 0;
  char* end = nullptr;
  const long v = std::strtol(env, &end, 10);
  if (*end != '\0' || v < 0 || v > 4096) {
    throw UsageError(std::string("BHGAME_WORKERS must be a non-negative integer, got '") + env +
                     "'");
  }
  return static_cast<int>(v);
}

// Writes to the file, or to `out` for "-".
void write_output(const std::string& path, const std::string& text, std::ostream& out) {
  if (path == "-") {
    out << text;
  } else {
    emit_text(text, path);
  }
}

std::pair<double, double> parse_range(const std::string& text, const char* name) {
  const auto sep = text.find(':');
  if (sep == std::string::npos) throw UsageError(std::string(name) + " range must be lo:hi");
  try {
    std::size_t used = 0;
    const double lo = std::stod(text.substr(0, sep), &used);
    if (used != sep) throw std::invalid_argument(text);
    const std::string rest = text.substr(sep + 1);
    const double hi = std::stod(rest, &used);
    if (used != rest.size()) throw std::invalid_argument(text);
    return {lo, hi};
  } catch (const std::logic_error&) {
    throw UsageError(std::string(name) + " range must be lo:hi, got '" + text + "'");
  }
}

std::string payoff_text(const EcoState& s, const PayoffMatrix& m, StrategyClass cls,
                        bool growth_units) {
  std::ostringstream os;
  os << "initial x=" << format_number(s.x) << " y=" << format_number(s.y)
     << " r=" << format_number(s.r) << '\n';
  os << (growth_units ? "growth rate 2^W" : "payoff W (log2)")
     << "; rows: X strategy, columns: Y strategy\n";
  os << std::setw(8) << "";
  for (const auto& col : kStrategies) os << std::setw(16) << strategy_label(col);
  os << '\n';
  for (std::size_t i = 0; i < kStrategyCount; ++i) {
    os << std::setw(8) << strategy_label(kStrategies[i]);
    for (std::size_t j = 0; j < kStrategyCount; ++j) {
      const double v = growth_units ? std::exp2(m(i, j)) : m(i, j);
      os << std::setw(16) << format_number(v);
    }
    os << '\n';
  }
  os << "class " << to_string(cls) << " (code " << class_code(cls) << ")\n";
  return os.str();
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Two-species information-sharing game: information curves, payoff matrices "
               "and phase sweeps",
               "bhgame"};
  app.option_defaults()->always_capture_default();
  app.set_version_flag("--version", std::string(kVersion));
  app.require_subcommand(1);

  // info-curves
  ModelArgs curves_model;
  int max_n = 15;
  std::string curves_format = "csv";
  std::string curves_out = "-";
  auto* curves = app.add_subcommand("info-curves", "Environmental information vs population size");
  add_model_options(*curves, curves_model);
  curves->add_option("--max-n", max_n, "Largest population size")->check(CLI::NonNegativeNumber);
  curves->add_option("--format", curves_format, "Output format")
      ->check(CLI::IsMember({"csv", "json"}));
  curves->add_option("-o,--output", curves_out, "Output path, - for stdout");

  // payoff
  ModelArgs payoff_model;
  double px = 0, py = 0, pr = 0;
  std::string payoff_format = "text";
  std::string payoff_units = "log2";
  std::string payoff_out = "-";
  auto* payoff = app.add_subcommand("payoff", "Payoff matrix of species X and its class");
  add_model_options(*payoff, payoff_model);
  payoff->add_option("--x", px, "Initial X density")->required()->check(CLI::Range(0.0, 1.0));
  payoff->add_option("--y", py, "Initial Y density")->required()->check(CLI::Range(0.0, 1.0));
  payoff->add_option("--r", pr, "Initial resource level")->required()->check(CLI::NonNegativeNumber);
  payoff->add_option("--format", payoff_format, "Output format")
      ->check(CLI::IsMember({"text", "json"}));
  payoff->add_option("--units", payoff_units, "Payoff units: log2 (W) or growth (2^W)")
      ->check(CLI::IsMember({"log2", "growth"}));
  payoff->add_option("-o,--output", payoff_out, "Output path, - for stdout");

  // sweep
  ModelArgs sweep_model;
  std::optional<double> r_fixed;
  int grid_steps = 100;
  std::string x_range = "0:1", y_range = "0:1", r_range = "0:3";
  int r_steps = 30;
  bool full_volume = false;
  std::string registration = "centers";
  std::optional<int> workers;
  std::string sweep_out = "-";
  std::string image_path, manifest_path;
  bool no_manifest = false;
  bool show_progress = false;
  auto* sweep = app.add_subcommand("sweep", "Classify a grid of initial states");
  add_model_options(*sweep, sweep_model);
  sweep->add_option("--r-fixed", r_fixed, "Fixed resource level (2D slice)")
      ->check(CLI::NonNegativeNumber);
  sweep->add_option("--grid", grid_steps, "Steps along x and y")->check(CLI::Range(1, 100000));
  sweep->add_option("--x-range", x_range, "X interval lo:hi");
  sweep->add_option("--y-range", y_range, "Y interval lo:hi");
  sweep->add_option("--r-range", r_range, "R interval lo:hi (volume mode)");
  sweep->add_option("--r-steps", r_steps, "Steps along r (volume mode)")
      ->check(CLI::Range(1, 100000));
  sweep->add_flag("--full-volume", full_volume,
                  "250 x 250 x 300 grid over [0,1] x [0,1] x [0,3] with progress");
  sweep->add_option("--registration", registration, "Sample placement within each interval")
      ->check(CLI::IsMember({"centers", "endpoints"}));
  sweep->add_option("--workers", workers,
                    "Worker threads; 0 = all cores (default from BHGAME_WORKERS, else 0)")
      ->check(CLI::Range(0, 4096));
  sweep->add_option("-o,--output", sweep_out, "CSV path, - for stdout");
  sweep->add_option("--image", image_path, "P6 pixmap path (slices only)");
  sweep->add_option("--manifest", manifest_path,
                    "Manifest path (default <output>.manifest.json)");
  sweep->add_flag("--no-manifest", no_manifest, "Do not write a manifest");
  sweep->add_flag("--progress", show_progress, "Report progress on stderr");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kSuccess : kUsageError;
  }

  try {
    if (curves->parsed()) {
      const EcoParams params = make_params(curves_model);
      if (max_n > params.capacity_x) {
        throw UsageError("--max-n " + std::to_string(max_n) + " exceeds capacity " +
                         std::to_string(params.capacity_x));
      }
      const auto rows = info_curves(params, max_n);
      std::string text;
      if (curves_format == "csv") {
        std::ostringstream os;
        write_info_curves_csv(rows, os);
        text = os.str();
      } else {
        text = info_curves_document(rows, params) + "\n";
      }
      write_output(curves_out, text, out);
      return kSuccess;
    }

    if (payoff->parsed()) {
      const EcoParams params = make_params(payoff_model);
      const GameOptions game = make_game(payoff_model);
      const EcoState initial{px, py, pr};
      const PayoffMatrix m = payoff_matrix(initial, params, game);
      const StrategyClass cls =
          classify(m, game.classifier, log_growth_rate(0.0, params.diagonal_fitness));
      const std::string text = payoff_format == "json"
                                   ? payoff_document(initial, params, game, m, cls) + "\n"
                                   : payoff_text(initial, m, cls, payoff_units == "growth");
      write_output(payoff_out, text, out);
      return kSuccess;
    }

    // sweep
    SweepConfig config;
    config.params = make_params(sweep_model);
    config.game = make_game(sweep_model);
    config.registration = parse_registration(registration);
    config.workers = workers ? *workers : default_workers();
    if (full_volume) {
      if (r_fixed) throw UsageError("--full-volume and --r-fixed are exclusive");
      config.x = {0.0, 1.0, 250};
      config.y = {0.0, 1.0, 250};
      config.r = {0.0, 3.0, 300};
      show_progress = true;
    } else {
      const auto [xl, xh] = parse_range(x_range, "--x-range");
      const auto [yl, yh] = parse_range(y_range, "--y-range");
      config.x = {xl, xh, grid_steps};
      config.y = {yl, yh, grid_steps};
      if (r_fixed) {
        config.fixed_r = *r_fixed;
        config.r = {*r_fixed, *r_fixed, 1};
      } else {
        const auto [rl, rh] = parse_range(r_range, "--r-range");
        config.r = {rl, rh, r_steps};
      }
    }
    if (!image_path.empty() && config.r.steps != 1) {
      throw UsageError("--image needs a slice (--r-fixed)");
    }
    validate_config(config);

    ProgressCallback progress;
    std::size_t last_percent = 101;
    if (show_progress) {
      progress = [&](std::size_t done, std::size_t total) {
        const std::size_t percent = total == 0 ? 100 : done * 100 / total;
        if (percent != last_percent) {
          last_percent = percent;
          err << "\rsweep " << done << "/" << total << " cells (" << percent << "%)"
              << std::flush;
        }
      };
    }
    const ClassificationGrid grid = run_sweep(config, progress);
    if (show_progress) err << '\n';

    std::vector<std::string> outputs;
    std::ostringstream csv;
    write_grid_csv(grid, csv);
    write_output(sweep_out, csv.str(), out);
    outputs.push_back(sweep_out);
    if (!image_path.empty()) {
      emit_slice_image(grid, image_path);
      outputs.push_back(image_path);
    }
    if (!no_manifest) {
      std::string path = manifest_path;
      if (path.empty() && sweep_out != "-") path = sweep_out + ".manifest.json";
      if (!path.empty()) emit_text(sweep_manifest(grid, outputs), path);
    }
    if (!grid.complete()) {
      err << "sweep incomplete: " << grid.completed << " of " << grid.classes.size()
          << " cells computed";
      if (grid.failure) err << " (" << *grid.failure << ")";
      err << '\n';
      return kRuntimeFailure;
    }
    return kSuccess;
  } catch (const UsageError& e) {
    err << "bhgame: " << e.what() << '\n';
    return kUsageError;
  } catch (const ValidationError& e) {
    err << "bhgame: " << e.what() << '\n';
    return kUsageError;
  } catch (const std::exception& e) {
    err << "bhgame: " << e.what() << '\n';
    return kRuntimeFailure;
  }
}

}  // namespace bhgame::cli
