#pragma once

#include <fstream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "twocontour/golden.hpp"
#include "twocontour/phase_sweep.hpp"
#include "twocontour/reporting.hpp"

namespace twocontour::cli {

namespace detail {

struct SystemArgs {
  int n = 0, l1 = 0, l2 = 0, d = 0;
};

inline void add_system_options(CLI::App* cmd, SystemArgs& a) {
  cmd->add_option("--n", a.n, "cells per contour")->required();
  cmd->add_option("--l1", a.l1, "cluster 1 length")->required();
  cmd->add_option("--l2", a.l2, "cluster 2 length")->required();
  cmd->add_option("--d", a.d, "cell index of the foreign node")->required();
}

inline SystemState parse_init(const std::string& text, const SystemParams& p) {
  const auto comma = text.find(',');
  std::size_t used_a = 0, used_b = 0;
  SystemState s;
  try {
    if (comma == std::string::npos) throw std::invalid_argument("");
    const std::string a = text.substr(0, comma), b = text.substr(comma + 1);
    s = {std::stoi(a, &used_a), std::stoi(b, &used_b)};
    if (used_a != a.size() || used_b != b.size()) throw std::invalid_argument("");
  } catch (const std::exception&) {
    throw std::invalid_argument("--init expects A,B, got '" + text + "'");
  }
  if (!in_range(p, s)) throw std::invalid_argument("--init " + s.str() + " outside [0, n)");
  return s;
}

}  // namespace detail

// Exit status: 0 success, 1 golden replay failure, 2 invalid arguments.
// On status 2 nothing is written to `out`.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Two-contour cluster dynamics: simulation, limit cycles and phase grids", "twocontour"};
  app.require_subcommand(1);

  detail::SystemArgs sys;
  std::string init;
  int steps = 0;
  bool allow_inadmissible = false;
  std::string format = "csv";
  std::string out_path;
  unsigned threads = 0;

  auto* simulate = app.add_subcommand("simulate", "print a trajectory");
  detail::add_system_options(simulate, sys);
  simulate->add_option("--init", init, "initial fronts A,B")->required();
  simulate->add_option("--steps", steps, "number of steps")->required()->check(CLI::NonNegativeNumber);
  simulate->add_flag("--allow-inadmissible", allow_inadmissible, "apply the rule through rejected states");

  auto* orbit = app.add_subcommand("orbit", "limit cycle of one initial state as JSON");
  detail::add_system_options(orbit, sys);
  orbit->add_option("--init", init, "initial fronts A,B")->required();
  orbit->add_flag("--allow-inadmissible", allow_inadmissible, "apply the rule through rejected states");

  auto* spectrum = app.add_subcommand("spectrum", "velocity spectrum and scenario as JSON");
  detail::add_system_options(spectrum, sys);

  auto* verify_cmd = app.add_subcommand("verify", "lemma and theorem verdicts as JSON");
  detail::add_system_options(verify_cmd, sys);

  auto* sweep = app.add_subcommand("sweep", "scenario grid over l1 <= l2");
  sweep->add_option("--n", sys.n, "cells per contour")->required();
  sweep->add_option("--d", sys.d, "cell index of the foreign node")->required();
  sweep->add_option("--format", format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
  sweep->add_option("--out", out_path, "write to a file instead of stdout");
  sweep->add_option("--threads", threads, "worker threads, 0 for all cores");

  auto* replay = app.add_subcommand("replay-examples", "replay the embedded printed sequences");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }

  std::ostringstream buf;
  int status = 0;
  try {
    const Admissibility mode = allow_inadmissible ? Admissibility::Unchecked : Admissibility::Strict;
    if (simulate->parsed()) {
      const auto p = make_params(sys.n, sys.l1, sys.l2, sys.d);
      const auto s0 = detail::parse_init(init, p);
      if (mode == Admissibility::Strict && !is_acceptable(p, s0)) throw UnacceptableState(s0);
      buf << render_trajectory(trajectory(p, s0, steps, mode));
    } else if (orbit->parsed()) {
      const auto p = make_params(sys.n, sys.l1, sys.l2, sys.d);
      const auto s0 = detail::parse_init(init, p);
      buf << orbit_to_json(p, analyze_orbit(p, s0, mode)).dump(2) << "\n";
    } else if (spectrum->parsed()) {
      const auto p = make_params(sys.n, sys.l1, sys.l2, sys.d);
      buf << spectrum_to_json(velocity_spectrum(p)).dump(2) << "\n";
    } else if (verify_cmd->parsed()) {
      const auto p = make_params(sys.n, sys.l1, sys.l2, sys.d);
      buf << report_to_json(verify(p)).dump(2) << "\n";
    } else if (sweep->parsed()) {
      const auto grid = sweep_grid(sys.n, sys.d, threads);
      const std::string text = emit_grid(grid, grid_format_from_string(format));
      if (out_path.empty()) {
        buf << text;
      } else {
        std::ofstream f(out_path, std::ios::binary);
        if (!f) throw std::invalid_argument("cannot open " + out_path + " for writing");
        f << text;
        buf << "wrote " << grid.cells.size() << " cells to " << out_path << "\n";
      }
    } else if (replay->parsed()) {
      const auto report = replay_golden(reference_corpus());
      for (const auto& f : report.failures) buf << "FAIL " << f.str() << "\n";
      buf << "sequences " << report.sequences << ", edges checked " << report.edges_checked << ", excluded "
          << report.edges_excluded << ", from inadmissible states " << report.inadmissible_sources << ", failures "
          << report.failures.size() << "\n";
      status = report.passed() ? 0 : 1;
    }
  } catch (const ParamError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const UnacceptableState& e) {
    err << "error: " << e.what() << " (use --allow-inadmissible to replay it anyway)\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  out << buf.str();
  return status;
}

}  // namespace twocontour::cli
