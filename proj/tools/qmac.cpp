// This code is licensed under the Apache License, Version 2.0. You may
// obtain a copy of this license in the LICENSE.txt file in the root directory
// of this source tree or at http://www.apache.org/licenses/LICENSE-2.0.

// Command-line front end: reproduces the built-in channel examples,
// sweeps capacity-region frontiers for built-in or file-loaded channels,
// runs the rectangle-vs-pentagon additivity experiment, and validates
// channel files. All results go to stdout as JSON (default) or CSV;
// diagnostics go to stderr.

#include <cstdio>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "qmac/entropic.hpp"
#include "qmac/io.hpp"

using namespace qmac;

namespace {

std::vector<double> parse_grid(const std::string& text) {
  double start = 0, stop = 0, step = 0;
  const int n = std::sscanf(text.c_str(), "%lf:%lf:%lf", &start, &stop, &step);
  if (n == 1) return {start};
  if (n != 3 || step <= 0)
    throw ParseError("grid must be start:stop:step with positive step");
  std::vector<double> grid;
  for (double v = start; v <= stop + 1e-12; v += step) grid.push_back(v);
  return grid;
}

std::vector<std::string> split_labels(const std::string& text) {
  std::vector<std::string> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ','))
    if (!item.empty()) out.push_back(item);
  return out;
}

Characterization parse_characterization(const std::string& s) {
  if (s == "cq-rect") return Characterization::CqRectangle;
  if (s == "cq-pent") return Characterization::CqPentagon;
  if (s == "qq-rect") return Characterization::QqRectangle;
  if (s == "qq-pent") return Characterization::QqPentagon;
  throw ParseError("unknown characterization '" + s + "'");
}

PureState bell_input(const std::string& purifier, const std::string& input) {
  return maximally_entangled(2, purifier, input);
}

Ensemble qubit_ensemble(double p0, const Vector& v0, const Vector& v1) {
  FactorLayout l({{"A'", 2}});
  return Ensemble({p0, 1 - p0}, {PureState(l, v0), PureState(l, v1)});
}

json qq_corners_json(double p) {
  const PentBound2 pent = qq_pentagon(collective_qubit_flip(p), 1,
                                      bell_input("A", "A'"),
                                      bell_input("B", "B'"));
  const RectBound2 rect = qq_rectangle(collective_qubit_flip(p), 1,
                                       bell_input("A", "A'"),
                                       bell_input("B", "B'"));
  return json{{"p", round12(p)},
              {"a_max", round12(pent.a_max)},
              {"b_max", round12(pent.b_max)},
              {"sum_max", round12(pent.sum_max)},
              {"rectangle", {round12(rect.r_max), round12(rect.q_max)}}};
}

json cq_corners_json(double p) {
  const KrausChannel ch = collective_qubit_flip(p);
  const double s = 1.0 / std::sqrt(2.0);
  Vector vp(2), vm(2), v0(2), v1(2);
  vp << s, s;
  vm << s, -s;
  v0 << 1, 0;
  v1 << 0, 1;
  const PureState bob = bell_input("B", "B'");
  const RectBound2 r1 = cq_rectangle(ch, 1, qubit_ensemble(0.5, vp, vm), bob);
  const RectBound2 r2 = cq_rectangle(ch, 1, qubit_ensemble(0.5, v0, v1), bob);
  const PentBound2 p2 = cq_pentagon(ch, 1, qubit_ensemble(0.5, v0, v1), bob);
  return json{
      {"p", round12(p)},
      {"omega1", {{"r_max", round12(r1.r_max)}, {"q_max", round12(r1.q_max)}}},
      {"omega2", {{"r_max", round12(r2.r_max)}, {"q_max", round12(r2.q_max)}}},
      {"omega2_pentagon",
       {{"a_max", round12(p2.a_max)},
        {"b_max", round12(p2.b_max)},
        {"sum_max", round12(p2.sum_max)},
        {"corner", {round12(p2.a_max), round12(p2.sum_max - p2.a_max)}}}}};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Entropic quantities and capacity-region inner bounds for "
               "two-sender quantum multiple-access channels"};
  app.require_subcommand(1);

  // entropy
  std::string state_file, subsystem;
  auto* c_entropy = app.add_subcommand(
      "entropy", "Von Neumann entropy of a subsystem of a state file");
  c_entropy->add_option("--state", state_file, "state JSON file")->required();
  c_entropy->add_option("--subsystem", subsystem,
                        "comma-separated factor labels")->required();

  // example-qubit-flip
  double p = 0.1;
  std::string what = "qq-corners";
  int k = 1, directions = 33, restarts = 20, threads = 1;
  std::uint64_t seed = 0;
  std::string format = "json", characterization = "qq-pent";
  auto* c_flip = app.add_subcommand("example-qubit-flip",
                                    "Collective qubit-flip channel corners "
                                    "and regions");
  c_flip->add_option("--p", p, "flip probability")->required();
  c_flip
      ->add_option("--what", what,
                   "qq-corners | cq-corners | full-bounds | region")
      ->check(CLI::IsMember({"qq-corners", "cq-corners", "full-bounds",
                             "region"}));
  c_flip->add_option("--k", k)->check(CLI::IsMember({1, 2}));
  c_flip->add_option("--directions", directions);
  c_flip->add_option("--restarts", restarts);
  c_flip->add_option("--seed", seed);
  c_flip->add_option("--threads", threads);
  c_flip->add_option("--characterization", characterization)
      ->check(CLI::IsMember({"cq-rect", "cq-pent", "qq-rect", "qq-pent"}));
  c_flip->add_option("--format", format)->check(CLI::IsMember({"json", "csv"}));

  // example-erasure-mac
  std::string p_grid_text = "0:0.5:0.05";
  auto* c_erasure = app.add_subcommand(
      "example-erasure-mac", "Erasure channel rate pairs over a p grid");
  c_erasure->add_option("--p-grid", p_grid_text, "start:stop:step");
  c_erasure->add_option("--format", format)
      ->check(CLI::IsMember({"json", "csv"}));

  // region
  std::string channel_file;
  auto* c_region = app.add_subcommand(
      "region", "Frontier sweep for a channel file (two input factors)");
  c_region->add_option("--channel", channel_file, "channel JSON file")
      ->required();
  c_region->add_option("--characterization", characterization)
      ->check(CLI::IsMember({"cq-rect", "cq-pent", "qq-rect", "qq-pent"}));
  c_region->add_option("--k", k)->check(CLI::IsMember({1, 2}));
  c_region->add_option("--directions", directions);
  c_region->add_option("--restarts", restarts);
  c_region->add_option("--seed", seed);
  c_region->add_option("--threads", threads);
  c_region->add_option("--format", format)
      ->check(CLI::IsMember({"json", "csv"}));

  // additivity
  std::string add_grid = "0.05:0.45:0.05";
  int add_directions = 9;
  auto* c_add = app.add_subcommand(
      "additivity",
      "k=1 vs k=2 rectangle and pentagon hulls of the qubit-flip channel");
  c_add->add_option("--p-grid", add_grid, "start:stop:step");
  c_add->add_option("--directions", add_directions);
  c_add->add_option("--restarts", restarts);
  c_add->add_option("--seed", seed);
  c_add->add_option("--threads", threads);
  c_add->add_option("--format", format)->check(CLI::IsMember({"json", "csv"}));

  // validate-channel
  auto* c_validate =
      app.add_subcommand("validate-channel", "Check a channel JSON file");
  c_validate->add_option("--channel", channel_file, "channel JSON file")
      ->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    app.exit(e);
    return 2;
  }

  try {
    if (*c_entropy) {
      const LabeledState s = load_state(state_file);
      const json j{{"entropy", round12(entropy(s, split_labels(subsystem)))}};
      std::cout << j.dump(2) << "\n";
      return 0;
    }

    if (*c_flip) {
      if (p < 0.0 || p > 1.0) throw BadProbability("--p outside [0,1]");
      if (what == "qq-corners") {
        std::cout << qq_corners_json(p).dump(2) << "\n";
      } else if (what == "cq-corners") {
        std::cout << cq_corners_json(p).dump(2) << "\n";
      } else if (what == "full-bounds") {
        // classical Alice preparation against a singleton Bell for Bob:
        // the (R_a, Q_b) shadow of the simultaneous region
        const double s = 1.0 / std::sqrt(2.0);
        Vector vp(2), vm(2);
        vp << s, s;
        vm << s, -s;
        const FactorLayout la({{"A", 1}, {"A'", 2}});
        const Ensemble alice(
            {0.5, 0.5}, {PureState(la, vp), PureState(la, vm)});
        const Ensemble bob(std::vector<double>{1.0}, {bell_input("B", "B'")});
        const SixBound4 six =
            full_region_bounds(collective_qubit_flip(p), k, alice, bob);
        std::cout << emit_six_bound(
            six, "collective-qubit-flip p=" + std::to_string(p), k,
            format == "csv" ? Format::Csv : Format::Json);
        if (format != "csv") std::cout << "\n";
      } else {
        OptimizerConfig cfg;
        cfg.restarts = restarts;
        cfg.seed = seed;
        cfg.threads = threads;
        const Characterization cc = parse_characterization(characterization);
        const RegionCloud cloud = sweep_frontier(collective_qubit_flip(p), k,
                                                 cc, directions, cfg);
        const bool cq = cc == Characterization::CqRectangle ||
                        cc == Characterization::CqPentagon;
        std::cout << emit_region(
            cloud, "collective-qubit-flip p=" + std::to_string(p),
            format == "csv" ? Format::Csv : Format::Json,
            cq ? std::make_pair(std::string("r"), std::string("q"))
               : std::make_pair(std::string("qa"), std::string("qb")));
        if (format != "csv") std::cout << "\n";
      }
      return 0;
    }

    if (*c_erasure) {
      const KrausChannel ch = erasure_mac();
      Vector v0(2), v1(2);
      v0 << 1, 0;
      v1 << 0, 1;
      const PureState bob = bell_input("B", "B'");
      json points = json::array();
      std::string csv = "r,q\n";
      for (double pv : parse_grid(p_grid_text)) {
        if (pv < 0.0 || pv > 1.0)
          throw BadProbability("grid value outside [0,1]");
        const RectBound2 r =
            cq_rectangle(ch, 1, qubit_ensemble(1 - pv, v0, v1), bob);
        points.push_back({{"p", round12(pv)},
                          {"r", round12(r.r_max)},
                          {"q", round12(r.q_max)}});
        char buf[64];
        std::snprintf(buf, sizeof(buf), "%.12g,%.12g\n", r.r_max, r.q_max);
        csv += buf;
      }
      if (format == "csv")
        std::cout << csv;
      else
        std::cout << json{{"channel", "erasure-mac"}, {"points", points}}.dump(2)
                  << "\n";
      return 0;
    }

    if (*c_region) {
      const KrausChannel ch = load_channel(channel_file);
      OptimizerConfig cfg;
      cfg.restarts = restarts;
      cfg.seed = seed;
      cfg.threads = threads;
      const Characterization cc = parse_characterization(characterization);
      const RegionCloud cloud = sweep_frontier(ch, k, cc, directions, cfg);
      const bool cq = cc == Characterization::CqRectangle ||
                      cc == Characterization::CqPentagon;
      std::cout << emit_region(
          cloud, channel_file, format == "csv" ? Format::Csv : Format::Json,
          cq ? std::make_pair(std::string("r"), std::string("q"))
             : std::make_pair(std::string("qa"), std::string("qb")));
      if (format != "csv") std::cout << "\n";
      return 0;
    }

    if (*c_add) {
      OptimizerConfig cfg;
      cfg.restarts = restarts;
      cfg.seed = seed;
      cfg.threads = threads;
      const AdditivityReport report = additivity_experiment(
          [](double pv) { return collective_qubit_flip(pv); },
          parse_grid(add_grid), cfg, add_directions);
      std::cout << emit_report(report,
                               format == "csv" ? Format::Csv : Format::Json);
      if (format != "csv") std::cout << "\n";
      return 0;
    }

    if (*c_validate) {
      const KrausChannel ch = load_channel(channel_file);
      const json j{{"valid", true},
                   {"in_dim", ch.in_dim()},
                   {"out_dim", ch.out_dim()},
                   {"kraus_count", ch.kraus().size()},
                   {"completeness_residual", ch.completeness_residual()}};
      std::cout << j.dump(2) << "\n";
      return 0;
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
