// SPDX-License-Identifier: Apache-2.0
//
// Copyright 2026 The mimocap Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "mimocap/cli.hpp"

#include <functional>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "mimocap/capacity.hpp"
#include "mimocap/combining.hpp"
#include "mimocap/fading.hpp"
#include "mimocap/io.hpp"
#include "mimocap/sweep.hpp"

namespace mimocap {

namespace {

// Re-labels a ValidationError with the flag it came from.
template <typename F>
auto flagged(std::string_view flag, F&& build) {
  try {
    return build();
  } catch (const ValidationError& e) {
    throw ValidationError(std::string(flag) + ": " + e.what());
  }
}

struct OutputOptions {
  std::optional<std::string> out;
  std::string format = "csv";
  bool plot = false;
};

void write_dataset(const ComparisonDataset& dataset, const OutputOptions& opts,
                   std::ostream& out) {
  const auto format = flagged("--format", [&] { return parse_format(opts.format); });
  const std::string body = format == OutputFormat::Csv ? to_csv(dataset) : to_json(dataset);
  if (!opts.out) {
    if (opts.plot) throw ValidationError("--plot: requires --out");
    out << body;
    return;
  }
  if (opts.plot && format != OutputFormat::Csv) {
    throw ValidationError("--plot: requires --format csv");
  }
  const auto path = resolve_output_path(*opts.out);
  write_file(path, body);
  out << "wrote " << path.string() << '\n';
  if (opts.plot) {
    auto script_path = path;
    script_path.replace_extension(".gp");
    std::ostringstream script;
    emit_plot_script(dataset, path, script);
    write_file(script_path, script.str());
    out << "wrote " << script_path.string() << '\n';
  }
}

void add_output_flags(CLI::App* cmd, OutputOptions& opts) {
  cmd->add_option("--out", opts.out, "Output file (relative paths go under $" +
                                         std::string(kOutputDirEnv) + " when set)");
  cmd->add_option("--format", opts.format, "csv or json")->capture_default_str();
  cmd->add_flag("--plot", opts.plot, "Also write a gnuplot script next to the CSV");
}

}  // namespace

int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"mimocap: SISO/SIMO/MISO/MIMO channel capacity calculator", "mimocap"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(kToolVersion));

  std::function<int()> action;

  // capacity
  struct {
    std::string model;
    int ntx = 1, nrx = 1;
    double snr_db = 0.0, bandwidth = 1.0;
    std::uint64_t trials = 10000, seed = 1;
  } cap;
  auto* capacity_cmd = app.add_subcommand("capacity", "Capacity at a single SNR point");
  capacity_cmd->add_option("--model", cap.model, "shannon|array_gain|product_gain|stc|ergodic")
      ->required();
  capacity_cmd->add_option("--ntx", cap.ntx, "Transmit antennas")->capture_default_str();
  capacity_cmd->add_option("--nrx", cap.nrx, "Receive antennas")->capture_default_str();
  capacity_cmd->add_option("--snr-db", cap.snr_db, "SNR in dB")->required();
  capacity_cmd->add_option("--bandwidth", cap.bandwidth, "Bandwidth in Hz")->capture_default_str();
  capacity_cmd->add_option("--trials", cap.trials, "Monte-Carlo trials (ergodic)")
      ->capture_default_str();
  capacity_cmd->add_option("--seed", cap.seed, "RNG seed (ergodic)")->capture_default_str();
  capacity_cmd->callback([&] {
    action = [&] {
      const auto model =
          flagged("--model", [&] { return CapacityModel::parse(cap.model, cap.trials, cap.seed); });
      const auto config = flagged("--ntx/--nrx", [&] { return AntennaConfig(cap.ntx, cap.nrx); });
      const auto snr = flagged("--snr-db", [&] { return Snr::from_db(cap.snr_db); });
      const auto b = flagged("--bandwidth", [&] { return Bandwidth(cap.bandwidth); });
      out << format_number(evaluate(model, b, config, snr).bits_per_second) << '\n';
      return int{kExitOk};
    };
  });

  // sweep
  struct {
    std::string config_path;
    double start = 0.0, stop = 20.0, bandwidth = 1.0;
    int points = 81;
    std::vector<std::string> series;
    std::uint64_t trials = 10000, seed = 1;
    OutputOptions output;
  } sw;
  auto* sweep_cmd = app.add_subcommand("sweep", "SNR sweep over a list of series");
  auto* config_opt = sweep_cmd->add_option("--config", sw.config_path, "JSON run config");
  auto* start_opt = sweep_cmd->add_option("--snr-start-db", sw.start, "First SNR point (dB)");
  auto* stop_opt = sweep_cmd->add_option("--snr-stop-db", sw.stop, "Last SNR point (dB)");
  auto* points_opt = sweep_cmd->add_option("--points", sw.points, "Grid points (>= 2)");
  auto* series_opt =
      sweep_cmd->add_option("--series", sw.series, "Comma-separated <model>:<nT>x<nR> list")
          ->delimiter(',');
  auto* bw_opt = sweep_cmd->add_option("--bandwidth", sw.bandwidth, "Bandwidth in Hz");
  auto* trials_opt = sweep_cmd->add_option("--trials", sw.trials, "Monte-Carlo trials");
  auto* seed_opt = sweep_cmd->add_option("--seed", sw.seed, "RNG seed");
  add_output_flags(sweep_cmd, sw.output);
  sweep_cmd->callback([&] {
    action = [&, config_opt, start_opt, stop_opt, points_opt, series_opt, bw_opt, trials_opt,
              seed_opt, sweep_cmd] {
      RunConfig rc;
      if (config_opt->count() > 0) rc = load_run_config(sw.config_path);
      if (start_opt->count() > 0) rc.snr_start_db = sw.start;
      if (stop_opt->count() > 0) rc.snr_stop_db = sw.stop;
      if (points_opt->count() > 0) rc.points = sw.points;
      if (series_opt->count() > 0) rc.series = sw.series;
      if (bw_opt->count() > 0) rc.bandwidth_hz = sw.bandwidth;
      if (trials_opt->count() > 0) rc.trials = sw.trials;
      if (seed_opt->count() > 0) rc.seed = sw.seed;
      OutputOptions opts = sw.output;
      if (sweep_cmd->get_option("--out")->count() == 0 && rc.output) opts.out = rc.output;
      if (sweep_cmd->get_option("--format")->count() == 0) {
        opts.format = rc.format == OutputFormat::Csv ? "csv" : "json";
      }
      opts.plot = opts.plot || rc.plot_script;
      const auto dataset = run_sweep(rc.to_sweep_spec());
      write_dataset(dataset, opts, out);
      return int{kExitOk};
    };
  });

  // figure
  std::string preset;
  OutputOptions fig_output;
  auto* figure_cmd = app.add_subcommand("figure", "Run a figure preset (figure7|figure8|figure9)");
  figure_cmd->add_option("preset", preset, "Preset name")->required();
  add_output_flags(figure_cmd, fig_output);
  figure_cmd->callback([&] {
    action = [&] {
      auto dataset = run_sweep(figure_preset(preset));
      dataset.provenance.preset = preset;
      write_dataset(dataset, fig_output, out);
      return int{kExitOk};
    };
  });

  // ergodic
  struct {
    int ntx = 1, nrx = 1;
    double snr_db = 0.0, bandwidth = 1.0;
    std::uint64_t trials = 10000, seed = 1;
    unsigned workers = 0;
  } erg;
  auto* ergodic_cmd = app.add_subcommand("ergodic", "Monte-Carlo Rayleigh ergodic capacity");
  ergodic_cmd->add_option("--ntx", erg.ntx, "Transmit antennas")->capture_default_str();
  ergodic_cmd->add_option("--nrx", erg.nrx, "Receive antennas")->capture_default_str();
  ergodic_cmd->add_option("--snr-db", erg.snr_db, "SNR in dB")->required();
  ergodic_cmd->add_option("--bandwidth", erg.bandwidth, "Bandwidth in Hz")->capture_default_str();
  ergodic_cmd->add_option("--trials", erg.trials, "Channel draws")->capture_default_str();
  ergodic_cmd->add_option("--seed", erg.seed, "RNG seed")->capture_default_str();
  ergodic_cmd->add_option("--workers", erg.workers, "Threads (0 = all cores)")
      ->capture_default_str();
  ergodic_cmd->callback([&] {
    action = [&] {
      const auto config = flagged("--ntx/--nrx", [&] { return AntennaConfig(erg.ntx, erg.nrx); });
      const auto snr = flagged("--snr-db", [&] { return Snr::from_db(erg.snr_db); });
      const auto b = flagged("--bandwidth", [&] { return Bandwidth(erg.bandwidth); });
      const auto est = flagged("--trials", [&] {
        return ergodic_capacity(config, b, snr, erg.trials, erg.seed, erg.workers);
      });
      out << "mean_capacity=" << format_number(est.mean_capacity) << '\n'
          << "std_error=" << format_number(est.std_error) << '\n'
          << "trials=" << est.trials << '\n'
          << "seed=" << est.seed << '\n';
      return int{kExitOk};
    };
  });

  // gap-report
  struct {
    std::uint64_t trials = 100000, seed = 1;
    unsigned workers = 0;
    std::optional<std::string> out;
  } gap;
  auto* gap_cmd =
      app.add_subcommand("gap-report", "Ergodic oracle vs product-gain formula on 2x2 and 4x4");
  gap_cmd->add_option("--trials", gap.trials, "Channel draws per point")->capture_default_str();
  gap_cmd->add_option("--seed", gap.seed, "RNG seed")->capture_default_str();
  gap_cmd->add_option("--workers", gap.workers, "Threads (0 = all cores)")->capture_default_str();
  gap_cmd->add_option("--out", gap.out, "Output file (default stdout)");
  gap_cmd->callback([&] {
    action = [&] {
      const auto report = flagged("--trials", [&] {
        return oracle_gap_report({AntennaConfig(2, 2), AntennaConfig(4, 4)}, {0.0, 10.0, 20.0},
                                 gap.trials, gap.seed, gap.workers);
      });
      const auto text = format_gap_report(report);
      if (gap.out) {
        const auto path = resolve_output_path(*gap.out);
        write_file(path, text);
        out << "wrote " << path.string() << '\n';
      } else {
        out << text;
      }
      return int{kExitOk};
    };
  });

  // combine
  struct {
    std::string scheme;
    std::vector<double> amplitudes;
    double noise_power = 1.0, tx_power = 1.0, bandwidth = 1.0;
  } comb;
  auto* combine_cmd = app.add_subcommand("combine", "Receive-diversity combining");
  combine_cmd->add_option("--scheme", comb.scheme, "selection|maximal_ratio|equal_gain")
      ->required();
  combine_cmd->add_option("--amplitudes", comb.amplitudes, "Comma-separated branch |h_i|")
      ->required()
      ->delimiter(',');
  combine_cmd->add_option("--noise-power", comb.noise_power, "Per-branch noise power")
      ->capture_default_str();
  combine_cmd->add_option("--tx-power", comb.tx_power, "Transmit power")->capture_default_str();
  combine_cmd->add_option("--bandwidth", comb.bandwidth, "Bandwidth in Hz")->capture_default_str();
  combine_cmd->callback([&] {
    action = [&] {
      const auto kind = flagged("--scheme", [&] { return parse_combiner(comb.scheme); });
      const auto branches = flagged("--amplitudes/--noise-power", [&] {
        return BranchSet(comb.amplitudes, comb.noise_power);
      });
      const auto b = flagged("--bandwidth", [&] { return Bandwidth(comb.bandwidth); });
      const auto snr = flagged("--tx-power", [&] { return combine_snr(kind, branches, comb.tx_power); });
      const auto result = combined_capacity(kind, branches, b, comb.tx_power);
      out << "scheme=" << to_string(kind) << '\n'
          << "snr=" << format_number(snr.linear()) << '\n'
          << "snr_db=" << format_number(snr.db()) << '\n'
          << "capacity=" << format_number(result.bits_per_second) << '\n';
      return int{kExitOk};
    };
  });

  // check
  std::string check_preset;
  std::vector<std::size_t> order;
  auto* check_cmd = app.add_subcommand("check", "Verify a preset's expected capacity ordering");
  check_cmd->add_option("preset", check_preset, "Preset name")->required();
  check_cmd->add_option("--order", order, "Strongest-first series indices (default per preset)")
      ->delimiter(',');
  check_cmd->callback([&] {
    action = [&] {
      auto dataset = run_sweep(figure_preset(check_preset));
      dataset.provenance.preset = check_preset;
      const auto expected = order.empty() ? preset_expected_order(check_preset) : order;
      const auto report = flagged("--order", [&] { return assert_ordering(dataset, expected); });
      out << format_ordering_report(dataset, report);
      return int{report.passed ? kExitOk : kExitOrdering};
    };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n" << app.help();
    return kExitValidation;
  }

  try {
    return action();
  } catch (const IoError& e) {
    err << "error: " << e.what() << '\n';
    return kExitIo;
  } catch (const ValidationError& e) {
    err << "error: " << e.what() << '\n';
    return kExitValidation;
  }
}

}  // namespace mimocap
