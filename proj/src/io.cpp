// This code is licensed under the Apache License, Version 2.0. You may
// obtain a copy of this license in the LICENSE.txt file in the root directory
// of this source tree or at http://www.apache.org/licenses/LICENSE-2.0.

#include "qmac/io.hpp"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

namespace qmac {

double round12(double x) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.12g", x);
  return std::strtod(buf, nullptr);
}

namespace {

json layout_to_json(const FactorLayout& layout) {
  json arr = json::array();
  for (const auto& f : layout.factors())
    arr.push_back({{"label", f.label}, {"dim", f.dim}});
  return arr;
}

FactorLayout layout_from_json(const json& arr) {
  if (!arr.is_array()) throw ParseError("factor list must be an array");
  std::vector<Factor> fs;
  for (const auto& f : arr) {
    if (!f.contains("label") || !f.contains("dim"))
      throw ParseError("factor entry needs 'label' and 'dim'");
    fs.push_back({f.at("label").get<std::string>(), f.at("dim").get<Index>()});
  }
  return FactorLayout(std::move(fs));
}

json matrix_to_json(const Matrix& m) {
  json re = json::array(), im = json::array();
  for (Index i = 0; i < m.rows(); ++i) {
    json rr = json::array(), ri = json::array();
    for (Index j = 0; j < m.cols(); ++j) {
      rr.push_back(m(i, j).real());
      ri.push_back(m(i, j).imag());
    }
    re.push_back(std::move(rr));
    im.push_back(std::move(ri));
  }
  return json{{"re", std::move(re)}, {"im", std::move(im)}};
}

Matrix matrix_from_json(const json& j, const char* what) {
  if (!j.contains("re") || !j.contains("im"))
    throw ParseError(std::string(what) + " needs 're' and 'im' arrays");
  const json& re = j.at("re");
  const json& im = j.at("im");
  if (!re.is_array() || re.empty() || re.size() != im.size())
    throw ParseError(std::string(what) + " re/im shapes disagree");
  const Index rows = Index(re.size());
  const Index cols = Index(re.front().size());
  Matrix m(rows, cols);
  for (Index i = 0; i < rows; ++i) {
    const auto& rr = re[std::size_t(i)];
    const auto& ri = im[std::size_t(i)];
    if (Index(rr.size()) != cols || Index(ri.size()) != cols)
      throw ParseError(std::string(what) + " rows have uneven lengths");
    for (Index c = 0; c < cols; ++c)
      m(i, c) = cxd(rr[std::size_t(c)].get<double>(),
                    ri[std::size_t(c)].get<double>());
  }
  return m;
}

json parse_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'");
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    throw ParseError("invalid JSON in '" + path + "': " + e.what());
  }
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw ParseError("cannot write '" + path + "'");
  out << text << "\n";
}

json point_list(const std::vector<Eigen::Vector2d>& pts) {
  json arr = json::array();
  for (const auto& p : pts)
    arr.push_back({round12(p.x()), round12(p.y())});
  return arr;
}

json witness_to_json(const AdditivityWitness& w) {
  json inp = json::array();
  for (const auto* part : {&w.input.alice, &w.input.bob, &w.input.ensemble})
    for (Index i = 0; i < part->size(); ++i) inp.push_back(round12((*part)(i)));
  return json{{"theta", round12(w.theta)},
              {"corner", {round12(w.corner.x()), round12(w.corner.y())}},
              {"gap", round12(w.gap)},
              {"distance_outside_k1_hull", round12(w.distance_outside)},
              {"objective", round12(w.objective)},
              {"input_params", std::move(inp)},
              {"alice_param_count", w.input.alice.size()},
              {"bob_param_count", w.input.bob.size()}};
}

}  // namespace

json state_to_json(const LabeledState& s) {
  json j = matrix_to_json(s.matrix());
  j["factors"] = layout_to_json(s.layout());
  return j;
}

LabeledState state_from_json(const json& j) {
  if (!j.contains("factors")) throw ParseError("state needs 'factors'");
  return LabeledState(layout_from_json(j.at("factors")),
                      matrix_from_json(j, "state"));
}

void save_state(const LabeledState& s, const std::string& path) {
  write_file(path, state_to_json(s).dump(2));
}

LabeledState load_state(const std::string& path) {
  return state_from_json(parse_file(path));
}

json channel_to_json(const KrausChannel& ch) {
  json ops = json::array();
  for (const auto& k : ch.kraus()) ops.push_back(matrix_to_json(k));
  return json{{"in_factors", layout_to_json(ch.in_layout())},
              {"out_factors", layout_to_json(ch.out_layout())},
              {"kraus", std::move(ops)}};
}

KrausChannel channel_from_json(const json& j) {
  if (!j.contains("in_factors") || !j.contains("out_factors") ||
      !j.contains("kraus"))
    throw ParseError("channel needs 'in_factors', 'out_factors' and 'kraus'");
  FactorLayout in = layout_from_json(j.at("in_factors"));
  FactorLayout out = layout_from_json(j.at("out_factors"));
  std::vector<Matrix> ops;
  for (const auto& kj : j.at("kraus"))
    ops.push_back(matrix_from_json(kj, "kraus operator"));
  return KrausChannel(std::move(in), std::move(out), std::move(ops));
}

void save_channel(const KrausChannel& ch, const std::string& path) {
  write_file(path, channel_to_json(ch).dump(2));
}

KrausChannel load_channel(const std::string& path) {
  return channel_from_json(parse_file(path));
}

std::string emit_region(const RegionCloud& cloud, const std::string& channel,
                        Format format,
                        const std::pair<std::string, std::string>& columns) {
  if (format == Format::Csv) {
    std::ostringstream out;
    out << columns.first << "," << columns.second << "\n";
    char buf[64];
    for (const auto& p : cloud.points) {
      std::snprintf(buf, sizeof(buf), "%.12g,%.12g\n", p.x(), p.y());
      out << buf;
    }
    return out.str();
  }
  json gens = json::array();
  for (const auto& g : cloud.generators) {
    json vals = json::array();
    for (double v : g.values) vals.push_back(round12(v));
    json inp = json::array();
    for (double v : g.input_params) inp.push_back(round12(v));
    gens.push_back({{"type", g.type},
                    {"bounds", std::move(vals)},
                    {"input_seed", g.input_seed},
                    {"input", std::move(inp)},
                    {"provenance", g.provenance}});
  }
  json j{{"k", cloud.k},
         {"channel", channel},
         {"points", point_list(cloud.points)},
         {"hull", point_list(cloud.hull)},
         {"generators", std::move(gens)}};
  return j.dump(2);
}

std::string emit_six_bound(const SixBound4& bound, const std::string& channel,
                           int k, Format format) {
  const auto corners4 = four_d_corners(bound);
  if (format == Format::Csv) {
    std::ostringstream out;
    out << "ra,rb,qa,qb\n";
    char buf[128];
    for (const auto& c : corners4) {
      std::snprintf(buf, sizeof(buf), "%.12g,%.12g,%.12g,%.12g\n", c[0], c[1],
                    c[2], c[3]);
      out << buf;
    }
    return out.str();
  }
  json pts = json::array();
  for (const auto& c : corners4)
    pts.push_back(
        {round12(c[0]), round12(c[1]), round12(c[2]), round12(c[3])});
  json j{{"k", k},
         {"channel", channel},
         {"bounds",
          {{"ra_max", round12(bound.ra_max)},
           {"rb_max", round12(bound.rb_max)},
           {"rab_max", round12(bound.rab_max)},
           {"qa_max", round12(bound.qa_max)},
           {"qb_max", round12(bound.qb_max)},
           {"qab_max", round12(bound.qab_max)}}},
         {"provenance", bound.provenance},
         {"corner_points", std::move(pts)}};
  return j.dump(2);
}

std::string emit_report(const AdditivityReport& report, Format format) {
  if (format == Format::Csv) {
    std::ostringstream out;
    out << "p,rect_gap,pent_gap\n";
    char buf[96];
    for (const auto& e : report.entries) {
      std::snprintf(buf, sizeof(buf), "%.12g,%.12g,%.12g\n", e.p, e.rect_gap,
                    e.pent_gap);
      out << buf;
    }
    return out.str();
  }
  json entries = json::array();
  for (const auto& e : report.entries) {
    entries.push_back(
        {{"p", round12(e.p)},
         {"rect_gap", round12(e.rect_gap)},
         {"pent_gap", round12(e.pent_gap)},
         {"rect_distinguishable", e.rect_distinguishable},
         {"pent_distinguishable", e.pent_distinguishable},
         {"rect_witness", witness_to_json(e.rect_witness)},
         {"pent_witness", witness_to_json(e.pent_witness)}});
  }
  json grid = json::array();
  for (double p : report.p_grid) grid.push_back(round12(p));
  json j{{"channel", "collective-qubit-flip"},
         {"p_grid", std::move(grid)},
         {"k_values", {1, 2}},
         {"noise_floor", report.noise_floor},
         {"directions", report.directions},
         {"config",
          {{"restarts", report.config.restarts},
           {"max_iters", report.config.max_iters},
           {"simplex_scale", report.config.simplex_scale},
           {"seed", report.config.seed},
           {"convergence_tol", report.config.convergence_tol},
           {"polish_rounds", report.config.polish_rounds}}},
         {"entries", std::move(entries)}};
  return j.dump(2);
}

}  // namespace qmac
