// This code is licensed under the Apache License, Version 2.0. You may
// obtain a copy of this license in the LICENSE.txt file in the root directory
// of this source tree or at http://www.apache.org/licenses/LICENSE-2.0.

#include "qmac/optimize.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <limits>
#include <numbers>
#include <thread>

namespace qmac {

namespace {
constexpr double kNegInf = -std::numeric_limits<double>::infinity();

std::uint64_t mix64(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}
}  // namespace

std::uint64_t Rng::next_u64() {
  state_ += 0x9E3779B97F4A7C15ull;
  return mix64(state_);
}

double Rng::uniform() {
  return double(next_u64() >> 11) * 0x1.0p-53;
}

double Rng::gaussian() {
  if (have_spare_) {
    have_spare_ = false;
    return spare_;
  }
  double u1 = 0.0;
  while (u1 <= 0.0) u1 = uniform();
  const double u2 = uniform();
  const double r = std::sqrt(-2.0 * std::log(u1));
  const double a = 2.0 * std::numbers::pi * u2;
  spare_ = r * std::sin(a);
  have_spare_ = true;
  return r * std::cos(a);
}

std::uint64_t derive_seed(std::uint64_t root, std::uint64_t a, std::uint64_t b,
                          std::uint64_t c) {
  std::uint64_t s = mix64(root ^ 0xA0761D6478BD642Full);
  s = mix64(s ^ (a + 0x9E3779B97F4A7C15ull));
  s = mix64(s ^ (b + 0xE7037ED1A0B428DBull));
  s = mix64(s ^ (c + 0x8EBC6AF09C88C6E3ull));
  return s;
}

Vector random_unit_vector(Index dim, Rng& rng) {
  if (dim < 1) throw DimMismatch("dimension must be positive");
  Vector v(dim);
  for (Index i = 0; i < dim; ++i) v(i) = cxd(rng.gaussian(), rng.gaussian());
  const double n = v.norm();
  if (n <= 0.0) {
    v.setZero();
    v(0) = 1.0;
    return v;
  }
  return v / n;
}

PureState random_pure(Index dim, Rng& rng, const std::string& label) {
  return PureState(FactorLayout({{label, dim}}), random_unit_vector(dim, rng));
}

PureState decode_pure(const Eigen::VectorXd& params,
                      const FactorLayout& layout) {
  const Index d = layout.dim();
  if (params.size() != 2 * d)
    throw DimMismatch("pure-state parameter vector has wrong length");
  Vector v(d);
  for (Index i = 0; i < d; ++i) v(i) = cxd(params(i), params(d + i));
  const double n = v.norm();
  if (n < 1e-150) {
    v.setZero();
    v(0) = 1.0;
  } else {
    v /= n;
  }
  return PureState(layout, std::move(v));
}

Ensemble decode_ensemble(const Eigen::VectorXd& params, std::size_t count,
                         const FactorLayout& state_layout) {
  const Index d = state_layout.dim();
  const Index n = Index(count);
  if (params.size() != n + n * 2 * d)
    throw DimMismatch("ensemble parameter vector has wrong length");
  const double top = params.head(n).maxCoeff();
  std::vector<double> w(count);
  double sum = 0.0;
  for (Index i = 0; i < n; ++i) {
    w[std::size_t(i)] = std::exp(params(i) - top);
    sum += w[std::size_t(i)];
  }
  std::vector<double> probs(count);
  std::vector<PureState> states;
  states.reserve(count);
  for (Index i = 0; i < n; ++i) {
    probs[std::size_t(i)] = w[std::size_t(i)] / sum;
    states.push_back(
        decode_pure(params.segment(n + i * 2 * d, 2 * d), state_layout));
  }
  return Ensemble(std::move(probs), std::move(states));
}

std::string to_string(Characterization c) {
  switch (c) {
    case Characterization::CqRectangle: return "cq-rectangle";
    case Characterization::CqPentagon: return "cq-pentagon";
    case Characterization::QqRectangle: return "qq-rectangle";
    case Characterization::QqPentagon: return "qq-pentagon";
  }
  return "?";
}

// ---------------------------------------------------------------------
// Nelder-Mead

namespace {

struct NmOut {
  Eigen::VectorXd x;
  double fx = kNegInf;
};

// Minimizes g. Standard reflect/expand/contract/shrink moves with a
// restart-on-collapse: a degenerate simplex is re-seeded around the
// incumbent at a tenth of the scale.
NmOut nelder_mead(const std::function<double(const Eigen::VectorXd&)>& g,
                  const Eigen::VectorXd& x0, double scale, int max_iters,
                  double ftol) {
  const Index n = x0.size();
  std::vector<Eigen::VectorXd> xs(std::size_t(n) + 1, x0);
  std::vector<double> fs(std::size_t(n) + 1);
  auto init_simplex = [&](const Eigen::VectorXd& center, double sc) {
    for (Index i = 0; i <= n; ++i) {
      xs[std::size_t(i)] = center;
      if (i > 0) xs[std::size_t(i)](i - 1) += sc;
      fs[std::size_t(i)] = g(xs[std::size_t(i)]);
    }
  };
  init_simplex(x0, scale);
  std::vector<std::size_t> order(std::size_t(n) + 1);

  for (int iter = 0; iter < max_iters; ++iter) {
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(),
              [&](std::size_t a, std::size_t b) { return fs[a] < fs[b]; });
    const std::size_t best = order.front(), worst = order.back();
    const std::size_t second_worst = order[order.size() - 2];
    if (std::isfinite(fs[worst]) && fs[worst] - fs[best] < ftol) break;

    Eigen::VectorXd centroid = Eigen::VectorXd::Zero(n);
    for (std::size_t i = 0; i < order.size(); ++i)
      if (i != worst) centroid += xs[i];
    centroid /= double(n);

    double spread = 0.0;
    for (std::size_t i = 0; i <= std::size_t(n); ++i)
      spread = std::max(spread, (xs[i] - xs[best]).cwiseAbs().maxCoeff());
    if (spread < 1e-13) {
      init_simplex(xs[best], scale * 0.1);
      continue;
    }

    const Eigen::VectorXd xr = centroid + (centroid - xs[worst]);
    const double fr = g(xr);
    if (fr < fs[best]) {
      const Eigen::VectorXd xe = centroid + 2.0 * (centroid - xs[worst]);
      const double fe = g(xe);
      if (fe < fr) {
        xs[worst] = xe;
        fs[worst] = fe;
      } else {
        xs[worst] = xr;
        fs[worst] = fr;
      }
    } else if (fr < fs[second_worst]) {
      xs[worst] = xr;
      fs[worst] = fr;
    } else {
      const bool outside = fr < fs[worst];
      const Eigen::VectorXd xc =
          outside ? Eigen::VectorXd(centroid + 0.5 * (xr - centroid))
                  : Eigen::VectorXd(centroid - 0.5 * (centroid - xs[worst]));
      const double fc = g(xc);
      if (fc < (outside ? fr : fs[worst])) {
        xs[worst] = xc;
        fs[worst] = fc;
      } else {
        for (std::size_t i = 0; i <= std::size_t(n); ++i) {
          if (i == best) continue;
          xs[i] = xs[best] + 0.5 * (xs[i] - xs[best]);
          fs[i] = g(xs[i]);
        }
      }
    }
  }
  std::size_t best = 0;
  for (std::size_t i = 1; i <= std::size_t(n); ++i)
    if (fs[i] < fs[best]) best = i;
  return NmOut{xs[best], fs[best]};
}

Eigen::VectorXd flatten(const InputPoint& p) {
  Eigen::VectorXd x(p.alice.size() + p.bob.size() + p.ensemble.size());
  Index off = 0;
  x.segment(off, p.alice.size()) = p.alice;
  off += p.alice.size();
  x.segment(off, p.bob.size()) = p.bob;
  off += p.bob.size();
  x.segment(off, p.ensemble.size()) = p.ensemble;
  return x;
}

InputPoint unflatten(const Eigen::VectorXd& x, const InputShape& shape) {
  InputPoint p;
  p.alice = x.head(shape.alice);
  p.bob = x.segment(shape.alice, shape.bob);
  p.ensemble = x.tail(shape.ensemble);
  return p;
}

void parallel_for(int tasks, int threads, const std::function<void(int)>& fn) {
  threads = std::min(threads, tasks);
  if (threads <= 1) {
    for (int i = 0; i < tasks; ++i) fn(i);
    return;
  }
  std::atomic<int> next{0};
  std::vector<std::thread> pool;
  pool.reserve(std::size_t(threads));
  for (int t = 0; t < threads; ++t)
    pool.emplace_back([&] {
      for (int i = next.fetch_add(1); i < tasks; i = next.fetch_add(1)) fn(i);
    });
  for (auto& th : pool) th.join();
}

}  // namespace

MaximizeResult maximize_scalar(const Objective& f, const InputShape& shape,
                               const OptimizerConfig& cfg,
                               const std::vector<InputPoint>& extra_starts) {
  if (cfg.restarts < 1) throw Error("optimizer needs restarts >= 1");
  if (cfg.convergence_tol <= 0.0) throw Error("convergence_tol must be positive");
  std::atomic<long> failures{0};
  auto g = [&](const Eigen::VectorXd& x) -> double {
    try {
      const double v = f(unflatten(x, shape));
      return std::isfinite(v) ? -v : std::numeric_limits<double>::infinity();
    } catch (const std::exception&) {
      failures.fetch_add(1, std::memory_order_relaxed);
      return std::numeric_limits<double>::infinity();
    }
  };

  std::vector<Eigen::VectorXd> starts;
  for (const auto& p : extra_starts) {
    if (flatten(p).size() != shape.total())
      throw DimMismatch("extra start has wrong parameter count");
    starts.push_back(flatten(p));
  }
  for (int r = 0; r < cfg.restarts; ++r) {
    Rng rng(derive_seed(cfg.seed, 0x5eedu, std::uint64_t(r)));
    Eigen::VectorXd x(shape.total());
    for (Index i = 0; i < x.size(); ++i) x(i) = rng.gaussian();
    starts.push_back(std::move(x));
  }

  std::vector<NmOut> results(starts.size());
  parallel_for(int(starts.size()), std::max(cfg.threads, 1), [&](int i) {
    Eigen::VectorXd x = starts[std::size_t(i)];
    double fx = g(x);
    double scale = cfg.simplex_scale;
    for (int round = 0; round <= cfg.polish_rounds; ++round) {
      NmOut out = nelder_mead(g, x, scale, cfg.max_iters, cfg.convergence_tol);
      if (out.fx < fx) {
        fx = out.fx;
        x = out.x;
      }
      scale *= 0.2;
    }
    results[std::size_t(i)] = NmOut{std::move(x), fx};
  });

  std::size_t best = 0;
  for (std::size_t i = 1; i < results.size(); ++i)
    if (results[i].fx < results[best].fx) best = i;
  if (failures.load() > 0)
    std::fprintf(stderr, "note: %ld objective evaluations failed and were "
                         "scored as -inf\n", failures.load());
  return MaximizeResult{unflatten(results[best].x, shape), -results[best].fx};
}

// ---------------------------------------------------------------------
// Frontier sweeps

namespace {

std::string fresh_label(const std::string& base,
                        const std::vector<const FactorLayout*>& layouts,
                        const std::vector<std::string>& also_avoid = {}) {
  std::string l = base;
  int n = 0;
  auto taken = [&](const std::string& cand) {
    for (const auto* ly : layouts)
      if (ly->has(cand)) return true;
    return std::find(also_avoid.begin(), also_avoid.end(), cand) !=
           also_avoid.end();
  };
  while (taken(l)) l = base + "_" + std::to_string(++n);
  return l;
}

struct CharSetup {
  Characterization what;
  MacContext ctx;
  InputShape shape;
  FactorLayout alice_layout;  // qq: [purifier, copies]; cq: the copies only
  FactorLayout bob_layout;    // [purifier, copies]
  std::size_t ensemble_count = 0;

  bool is_cq() const {
    return what == Characterization::CqRectangle ||
           what == Characterization::CqPentagon;
  }
  bool is_rect() const {
    return what == Characterization::CqRectangle ||
           what == Characterization::QqRectangle;
  }
};

CharSetup make_setup(const KrausChannel& ch, int k, Characterization what) {
  MacContext ctx = make_mac_context(ch, k);
  const auto& in = ctx.powered.in_layout();

  std::vector<Factor> alice_copies, bob_copies;
  for (const auto& l : ctx.labels.alice)
    alice_copies.push_back({l, in.dim_of(l)});
  for (const auto& l : ctx.labels.bob) bob_copies.push_back({l, in.dim_of(l)});
  Index d_a = 1, d_b = 1;
  for (const auto& f : alice_copies) d_a *= f.dim;
  for (const auto& f : bob_copies) d_b *= f.dim;

  const std::string a_label =
      fresh_label("A", {&ctx.powered.in_layout(), &ctx.powered.out_layout()});
  const std::string b_label =
      fresh_label("B", {&ctx.powered.in_layout(), &ctx.powered.out_layout()},
                  {a_label});

  std::vector<Factor> af{{a_label, d_a}};
  af.insert(af.end(), alice_copies.begin(), alice_copies.end());
  std::vector<Factor> bf{{b_label, d_b}};
  bf.insert(bf.end(), bob_copies.begin(), bob_copies.end());

  const bool cq = what == Characterization::CqRectangle ||
                  what == Characterization::CqPentagon;
  InputShape shape;
  FactorLayout alice_layout;
  std::size_t ensemble_count = 0;
  if (cq) {
    alice_layout = FactorLayout(alice_copies);
    ensemble_count = std::size_t(std::min<Index>(d_a * d_a, 8));
    shape.ensemble = Index(ensemble_count) + Index(ensemble_count) * 2 * d_a;
  } else {
    alice_layout = FactorLayout(af);
    shape.alice = 2 * d_a * d_a;
  }
  shape.bob = 2 * d_b * d_b;
  return CharSetup{what,
                   std::move(ctx),
                   shape,
                   std::move(alice_layout),
                   FactorLayout(bf),
                   ensemble_count};
}

BoundRecord evaluate_bound(const CharSetup& s, const InputPoint& p) {
  const PureState bob = decode_pure(p.bob, s.bob_layout);
  BoundRecord rec;
  if (s.is_cq()) {
    const Ensemble ens =
        decode_ensemble(p.ensemble, s.ensemble_count, s.alice_layout);
    if (s.is_rect()) {
      const RectBound2 b = cq_rectangle(s.ctx, ens, bob);
      rec = BoundRecord{"rectangle", {b.r_max, b.q_max}, b.provenance, {}, 0};
    } else {
      const PentBound2 b = cq_pentagon(s.ctx, ens, bob);
      rec = BoundRecord{
          "pentagon", {b.a_max, b.b_max, b.sum_max}, b.provenance, {}, 0};
    }
  } else {
    const PureState alice = decode_pure(p.alice, s.alice_layout);
    if (s.is_rect()) {
      const RectBound2 b = qq_rectangle(s.ctx, alice, bob);
      rec = BoundRecord{"rectangle", {b.r_max, b.q_max}, b.provenance, {}, 0};
    } else {
      const PentBound2 b = qq_pentagon(s.ctx, alice, bob);
      rec = BoundRecord{
          "pentagon", {b.a_max, b.b_max, b.sum_max}, b.provenance, {}, 0};
    }
  }
  return rec;
}

std::vector<Eigen::Vector2d> record_corners(const BoundRecord& rec) {
  if (rec.type == "rectangle")
    return corners(RectBound2{rec.values[0], rec.values[1], ""});
  return corners(
      make_pent_bound(rec.values[0], rec.values[1], rec.values[2], ""));
}

double support_of_record(const BoundRecord& rec, const Eigen::Vector2d& dir,
                         Eigen::Vector2d* arg = nullptr) {
  double best = kNegInf;
  for (const auto& c : record_corners(rec)) {
    const double v = dir.dot(c);
    if (v > best) {
      best = v;
      if (arg) *arg = c;
    }
  }
  return best;
}

Eigen::VectorXd encode_vec(const Vector& v) {
  Eigen::VectorXd p(2 * v.size());
  for (Index i = 0; i < v.size(); ++i) {
    p(i) = v(i).real();
    p(v.size() + i) = v(i).imag();
  }
  return p;
}

Vector maxent_vec(Index d_pur, Index d_in) {
  const Index d = std::min(d_pur, d_in);
  Vector v = Vector::Zero(d_pur * d_in);
  for (Index b = 0; b < d; ++b) v(b * d_in + b) = 1.0 / std::sqrt(double(d));
  return v;
}

// cos(beta) |0>|0..0> + sin(beta) |1>|1..1>, when the factors allow it.
Vector repetition_flag_vec(const FactorLayout& sender_layout, double beta) {
  Vector v = Vector::Zero(sender_layout.dim());
  const auto strides = layout_strides(sender_layout);
  Index ones = 0;
  for (std::size_t i = 1; i < sender_layout.size(); ++i) {
    if (sender_layout[i].dim < 2) return Vector();  // no two-level flag
    ones += strides[i];
  }
  if (sender_layout[0].dim < 2) return Vector();
  v(0) = std::cos(beta);
  v(strides[0] + ones) = std::sin(beta);
  return v;
}

std::vector<InputPoint> structured_starts(const CharSetup& s) {
  std::vector<InputPoint> out;
  const Index da_in = s.is_cq() ? s.alice_layout.dim()
                                : s.alice_layout.dim() / s.alice_layout[0].dim;
  const Index db_in = s.bob_layout.dim() / s.bob_layout[0].dim;
  const Eigen::VectorXd bob_maxent =
      encode_vec(maxent_vec(s.bob_layout[0].dim, db_in));

  auto push_qq = [&](const Vector& a, const Vector& b) {
    if (a.size() == 0 || b.size() == 0) return;
    InputPoint p;
    p.alice = encode_vec(a);
    p.bob = encode_vec(b);
    p.ensemble = Eigen::VectorXd();
    out.push_back(std::move(p));
  };

  if (!s.is_cq()) {
    const Vector am = maxent_vec(s.alice_layout[0].dim, da_in);
    const Vector bm = maxent_vec(s.bob_layout[0].dim, db_in);
    push_qq(am, bm);
    for (double beta : {0.0, std::numbers::pi / 4}) {
      push_qq(am, repetition_flag_vec(s.bob_layout, beta));
      push_qq(repetition_flag_vec(s.alice_layout, beta), bm);
    }
    return out;
  }

  // cq starts: computational-basis and Fourier-basis ensembles with a
  // maximally entangled Bob input, at a few weight skews.
  const Index n = Index(s.ensemble_count);
  const Index d = s.alice_layout.dim();
  for (int fourier = 0; fourier < 2; ++fourier) {
    for (double skew : {0.0, 2.2, -2.2}) {
      InputPoint p;
      p.ensemble = Eigen::VectorXd::Zero(n + n * 2 * d);
      p.ensemble(0) = skew;
      for (Index j = 0; j < n; ++j) {
        Vector st = Vector::Zero(d);
        if (fourier) {
          for (Index m = 0; m < d; ++m)
            st(m) = std::polar(1.0 / std::sqrt(double(d)),
                               2.0 * std::numbers::pi * double((j % d) * m) /
                                   double(d));
        } else {
          st(j % d) = 1.0;
        }
        p.ensemble.segment(n + j * 2 * d, 2 * d) = encode_vec(st);
      }
      p.bob = bob_maxent;
      p.alice = Eigen::VectorXd();
      out.push_back(std::move(p));
    }
  }
  return out;
}

}  // namespace

SweepResult sweep_frontier_detailed(
    const KrausChannel& ch, int k, Characterization what, int direction_count,
    const OptimizerConfig& cfg,
    const std::vector<std::vector<InputPoint>>& extra_starts_per_direction) {
  if (direction_count < 1) throw Error("need at least one sweep direction");
  const CharSetup setup = make_setup(ch, k, what);
  const std::vector<InputPoint> common_starts = structured_starts(setup);

  SweepResult res;
  res.cloud.k = k;
  res.directions.resize(std::size_t(direction_count));

  for (int j = 0; j < direction_count; ++j) {
    const double theta =
        direction_count == 1
            ? std::numbers::pi / 4
            : -std::numbers::pi / 4 +
                  std::numbers::pi * double(j) / double(direction_count - 1);
    const Eigen::Vector2d dir(std::cos(theta), std::sin(theta));

    auto objective = [&setup, dir](const InputPoint& p) -> double {
      return support_of_record(evaluate_bound(setup, p), dir);
    };
    std::vector<InputPoint> starts = common_starts;
    if (std::size_t(j) < extra_starts_per_direction.size())
      for (const auto& p : extra_starts_per_direction[std::size_t(j)])
        starts.push_back(p);

    OptimizerConfig cfg_j = cfg;
    cfg_j.seed = derive_seed(cfg.seed, 0xd1c, std::uint64_t(j));
    const MaximizeResult best = maximize_scalar(objective, setup.shape, cfg_j,
                                                starts);

    BoundRecord rec = evaluate_bound(setup, best.point);
    const Eigen::VectorXd flat = flatten(best.point);
    rec.input_params.assign(flat.begin(), flat.end());
    rec.input_seed = cfg_j.seed;
    for (const auto& c : record_corners(rec)) res.cloud.points.push_back(c);
    res.cloud.generators.push_back(rec);

    DirectionResult& dr = res.directions[std::size_t(j)];
    dr.theta = theta;
    dr.direction = dir;
    dr.support = best.value;
    dr.input = best.point;
    dr.bound = rec;
  }
  rebuild_hull(res.cloud);
  return res;
}

RegionCloud sweep_frontier(const KrausChannel& ch, int k, Characterization what,
                           int direction_count, const OptimizerConfig& cfg) {
  return sweep_frontier_detailed(ch, k, what, direction_count, cfg).cloud;
}

// ---------------------------------------------------------------------
// Additivity experiment

namespace {

// Embed a one-copy bipartite pure input as its two-copy product, pairing
// copy c of the channel input with factor c of the doubled purifier.
InputPoint lift_to_two_copies(const InputPoint& p1, const CharSetup& s1,
                              const CharSetup& s2) {
  const PureState a1 = decode_pure(p1.alice, s1.alice_layout);
  const PureState b1 = decode_pure(p1.bob, s1.bob_layout);
  auto lift = [](const PureState& st, const FactorLayout& target) {
    const Index dp = st.layout()[0].dim;    // one-copy purifier dim
    const Index di = st.dim() / dp;         // one-copy input dim
    Vector v = Vector::Zero(target.dim());
    for (Index a1i = 0; a1i < dp; ++a1i)
      for (Index a2i = 0; a2i < dp; ++a2i)
        for (Index i1 = 0; i1 < di; ++i1)
          for (Index i2 = 0; i2 < di; ++i2)
            v((a1i * dp + a2i) * di * di + i1 * di + i2) =
                st.vec()(a1i * di + i1) * st.vec()(a2i * di + i2);
    return v;
  };
  InputPoint out;
  out.alice = encode_vec(lift(a1, s2.alice_layout));
  out.bob = encode_vec(lift(b1, s2.bob_layout));
  out.ensemble = Eigen::VectorXd();
  return out;
}

AdditivityWitness best_witness(const SweepResult& s2,
                               const std::vector<Eigen::Vector2d>& hull1,
                               const Eigen::Vector2d& dir, double theta,
                               double gap) {
  AdditivityWitness w;
  w.theta = theta;
  w.gap = gap;
  double best = kNegInf;
  for (const auto& dr : s2.directions) {
    Eigen::Vector2d corner;
    const double v = support_of_record(dr.bound, dir, &corner);
    if (v > best) {
      best = v;
      w.corner = corner;
      w.input = dr.input;
      w.objective = v;
    }
  }
  w.distance_outside = distance_outside_hull(hull1, w.corner);
  return w;
}

}  // namespace

AdditivityReport additivity_experiment(const ChannelFamily& family,
                                       const std::vector<double>& p_grid,
                                       const OptimizerConfig& cfg,
                                       int direction_count) {
  AdditivityReport report;
  report.p_grid = p_grid;
  report.directions = direction_count;
  report.config = cfg;

  for (std::size_t pi = 0; pi < p_grid.size(); ++pi) {
    const KrausChannel ch = family(p_grid[pi]);
    AdditivityEntry entry;
    entry.p = p_grid[pi];

    for (const Characterization what :
         {Characterization::QqRectangle, Characterization::QqPentagon}) {
      OptimizerConfig cfg1 = cfg;
      cfg1.seed = derive_seed(cfg.seed, pi, std::uint64_t(what), 1);
      const SweepResult s1 =
          sweep_frontier_detailed(ch, 1, what, direction_count, cfg1);

      const CharSetup setup1 = make_setup(ch, 1, what);
      const CharSetup setup2 = make_setup(ch, 2, what);
      InputPoint global_best;
      double global_val = kNegInf;
      for (const auto& dr : s1.directions)
        if (dr.support > global_val) {
          global_val = dr.support;
          global_best = dr.input;
        }
      std::vector<std::vector<InputPoint>> lifted{
          std::size_t(direction_count)};
      for (int j = 0; j < direction_count; ++j) {
        lifted[std::size_t(j)].push_back(lift_to_two_copies(
            s1.directions[std::size_t(j)].input, setup1, setup2));
        lifted[std::size_t(j)].push_back(
            lift_to_two_copies(global_best, setup1, setup2));
      }

      OptimizerConfig cfg2 = cfg;
      cfg2.restarts = std::max(2, cfg.restarts / 4);
      cfg2.seed = derive_seed(cfg.seed, pi, std::uint64_t(what), 2);
      const SweepResult s2 =
          sweep_frontier_detailed(ch, 2, what, direction_count, cfg2, lifted);

      double gap = kNegInf;
      Eigen::Vector2d gap_dir(1, 0);
      double gap_theta = 0.0;
      for (const auto& dr : s1.directions) {
        const double h1 = hull_support(s1.cloud.hull, dr.direction);
        const double h2 = hull_support(s2.cloud.hull, dr.direction);
        if (h2 - h1 > gap) {
          gap = h2 - h1;
          gap_dir = dr.direction;
          gap_theta = dr.theta;
        }
      }
      const AdditivityWitness w =
          best_witness(s2, s1.cloud.hull, gap_dir, gap_theta, gap);
      if (what == Characterization::QqRectangle) {
        entry.rect_gap = gap;
        entry.rect_distinguishable = gap > report.noise_floor;
        entry.rect_witness = w;
      } else {
        entry.pent_gap = gap;
        entry.pent_distinguishable = gap > report.noise_floor;
        entry.pent_witness = w;
      }
    }
    report.entries.push_back(std::move(entry));
  }
  return report;
}

}  // namespace qmac
