// This code is licensed under the Apache License, Version 2.0. You may
// obtain a copy of this license in the LICENSE.txt file in the root directory
// of this source tree or at http://www.apache.org/licenses/LICENSE-2.0.

#include "qmac/region.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

#include "qmac/entropic.hpp"

namespace qmac {

namespace {

std::vector<std::string> unite(const std::vector<std::string>& a,
                               const std::vector<std::string>& b) {
  std::vector<std::string> out = a;
  out.insert(out.end(), b.begin(), b.end());
  return out;
}

std::string fresh(const std::string& base,
                  const std::vector<const FactorLayout*>& layouts) {
  std::string l = base;
  int n = 0;
  auto taken = [&](const std::string& cand) {
    for (const auto* ly : layouts)
      if (ly->has(cand)) return true;
    return false;
  };
  while (taken(l)) l = base + "_" + std::to_string(++n);
  return l;
}

void check_sender_input(const PureState& in,
                        const std::vector<std::string>& copies,
                        const KrausChannel& ch_k, const char* who) {
  if (in.layout().size() != copies.size() + 1)
    throw DimMismatch(std::string(who) +
                      " input needs one purifier factor plus the channel "
                      "input copies");
  for (std::size_t i = 0; i < copies.size(); ++i) {
    const Factor& f = in.layout()[i + 1];
    if (f.label != copies[i] || f.dim != ch_k.in_layout().dim_of(copies[i]))
      throw DimMismatch(std::string(who) + " input factor " +
                        std::to_string(i + 1) + " must be '" + copies[i] + "'");
  }
}

void check_ensemble_states(const Ensemble& ens,
                           const std::vector<std::string>& copies,
                           const KrausChannel& ch_k, const char* who) {
  const FactorLayout& ly = ens.layout();
  if (ly.size() != copies.size())
    throw DimMismatch(std::string(who) +
                      " ensemble states must live on the channel input copies");
  for (std::size_t i = 0; i < copies.size(); ++i)
    if (ly[i].label != copies[i] ||
        ly[i].dim != ch_k.in_layout().dim_of(copies[i]))
      throw DimMismatch(std::string(who) + " ensemble factor " +
                        std::to_string(i) + " must be '" + copies[i] + "'");
}

void warn_cardinality(std::size_t have, double cap, const char* rule) {
  if (double(have) > cap)
    std::fprintf(stderr,
                 "warning: ensemble size %zu exceeds the sufficient bound "
                 "%.0f (%s)\n",
                 have, cap, rule);
}

CqBranches build_cq_branches(const KrausChannel& ch_k, const Ensemble& alice,
                             const PureState& bob) {
  CqBranches cq;
  cq.classical_label = fresh("X", {&bob.layout(), &ch_k.out_layout()});
  const auto targets = ch_k.in_layout().labels();
  for (std::size_t x = 0; x < alice.size(); ++x) {
    cq.probs.push_back(alice.prob(x));
    cq.blocks.push_back(
        apply_to_pure(ch_k, tensor(alice.state(x), bob), targets));
  }
  return cq;
}

}  // namespace

MacLabels mac_in_labels(const KrausChannel& ch, const KrausChannel& ch_k,
                        int k) {
  if (ch.in_layout().size() != 2)
    throw DimMismatch(
        "two-sender evaluators need a channel with exactly two input "
        "factors (Alice's first)");
  MacLabels m;
  for (int c = 0; c < k; ++c) {
    m.alice.push_back(ch_k.in_layout()[2 * c].label);
    m.bob.push_back(ch_k.in_layout()[2 * c + 1].label);
  }
  m.out = ch_k.out_layout().labels();
  return m;
}

MacContext make_mac_context(const KrausChannel& ch, int k) {
  MacContext ctx{ch, tensor_power(ch, k), {}, k};
  ctx.labels = mac_in_labels(ctx.base, ctx.powered, k);
  return ctx;
}

PentBound2 make_pent_bound(double a, double b, double sum, std::string prov) {
  if (a + b < sum - tol::entropic)
    throw Error("pentagon bound violates a+b >= sum (" + std::to_string(a) +
                " + " + std::to_string(b) + " < " + std::to_string(sum) + ")");
  return PentBound2{a, b, sum, std::move(prov)};
}

RectBound2 cq_rectangle(const MacContext& ctx, const Ensemble& alice,
                        const PureState& bob) {
  const MacLabels& m = ctx.labels;
  check_ensemble_states(alice, m.alice, ctx.powered, "alice");
  check_sender_input(bob, m.bob, ctx.powered, "bob");
  warn_cardinality(alice.size(),
                   std::pow(double(std::max(ctx.base.in_layout()[0].dim,
                                            ctx.base.out_dim())),
                            2.0 * ctx.k),
                   "|X| <= max{|A'|,|C|}^2k");

  const CqBranches cq = build_cq_branches(ctx.powered, alice, bob);
  const std::string B = bob.layout()[0].label;
  const std::vector<std::string> X{cq.classical_label};
  const double hx = subsystem_entropy(cq, X);
  const double hc = subsystem_entropy(cq, m.out);
  const double hxc = subsystem_entropy(cq, unite(X, m.out));
  const double hxbc = subsystem_entropy(cq, unite(unite(X, {B}), m.out));
  return RectBound2{(hx + hc - hxc) / ctx.k, (hxc - hxbc) / ctx.k,
                    "cq_rectangle k=" + std::to_string(ctx.k)};
}

PentBound2 cq_pentagon(const MacContext& ctx, const Ensemble& alice,
                       const PureState& bob) {
  const MacLabels& m = ctx.labels;
  check_ensemble_states(alice, m.alice, ctx.powered, "alice");
  check_sender_input(bob, m.bob, ctx.powered, "bob");

  const CqBranches cq = build_cq_branches(ctx.powered, alice, bob);
  const std::string B = bob.layout()[0].label;
  const std::vector<std::string> X{cq.classical_label};
  const double hx = subsystem_entropy(cq, X);
  const double hc = subsystem_entropy(cq, m.out);
  const double hbc = subsystem_entropy(cq, unite({B}, m.out));
  const double hxc = subsystem_entropy(cq, unite(X, m.out));
  const double hxbc = subsystem_entropy(cq, unite(unite(X, {B}), m.out));

  const double r = (hx + hbc - hxbc) / ctx.k;    // I(X;BC^k)/k
  const double q = (hxc - hxbc) / ctx.k;         // I_c(B>C^k X)/k
  const double sum = (hx + hc - hxc + hxc - hxbc) / ctx.k;
  const double sum_alt = r + (hc - hbc) / ctx.k;  // I(X;BC^k)+I_c(B>C^k)
  if (std::abs(sum - sum_alt) > tol::entropic)
    throw Error("cq pentagon sum-rate identity violated by " +
                std::to_string(std::abs(sum - sum_alt)));
  return make_pent_bound(r, q, sum, "cq_pentagon k=" + std::to_string(ctx.k));
}

PentBound2 qq_pentagon(const MacContext& ctx, const PureState& alice,
                       const PureState& bob) {
  const MacLabels& m = ctx.labels;
  check_sender_input(alice, m.alice, ctx.powered, "alice");
  check_sender_input(bob, m.bob, ctx.powered, "bob");

  const PureBranches br = apply_to_pure(ctx.powered, tensor(alice, bob),
                                        ctx.powered.in_layout().labels());
  const std::string A = alice.layout()[0].label;
  const std::string B = bob.layout()[0].label;
  const double hc = subsystem_entropy(br, m.out);
  const double hac = subsystem_entropy(br, unite({A}, m.out));
  const double hbc = subsystem_entropy(br, unite({B}, m.out));
  const double habc = subsystem_entropy(br, br.layout.labels());
  return make_pent_bound((hbc - habc) / ctx.k, (hac - habc) / ctx.k,
                         (hc - habc) / ctx.k,
                         "qq_pentagon k=" + std::to_string(ctx.k));
}

RectBound2 qq_rectangle(const MacContext& ctx, const PureState& alice,
                        const PureState& bob) {
  const MacLabels& m = ctx.labels;
  check_sender_input(alice, m.alice, ctx.powered, "alice");
  check_sender_input(bob, m.bob, ctx.powered, "bob");

  const PureBranches br = apply_to_pure(ctx.powered, tensor(alice, bob),
                                        ctx.powered.in_layout().labels());
  const std::string A = alice.layout()[0].label;
  const std::string B = bob.layout()[0].label;
  const double hc = subsystem_entropy(br, m.out);
  const double hac = subsystem_entropy(br, unite({A}, m.out));
  const double hbc = subsystem_entropy(br, unite({B}, m.out));
  return RectBound2{(hc - hac) / ctx.k, (hc - hbc) / ctx.k,
                    "qq_rectangle k=" + std::to_string(ctx.k)};
}

RectBound2 cq_rectangle(const KrausChannel& ch, int k, const Ensemble& alice,
                        const PureState& bob) {
  return cq_rectangle(make_mac_context(ch, k), alice, bob);
}

PentBound2 cq_pentagon(const KrausChannel& ch, int k, const Ensemble& alice,
                       const PureState& bob) {
  return cq_pentagon(make_mac_context(ch, k), alice, bob);
}

PentBound2 qq_pentagon(const KrausChannel& ch, int k, const PureState& alice,
                       const PureState& bob) {
  return qq_pentagon(make_mac_context(ch, k), alice, bob);
}

RectBound2 qq_rectangle(const KrausChannel& ch, int k, const PureState& alice,
                        const PureState& bob) {
  return qq_rectangle(make_mac_context(ch, k), alice, bob);
}

SixBound4 full_region_bounds(const KrausChannel& ch, int k,
                             const Ensemble& alice, const Ensemble& bob) {
  const KrausChannel ch_k = tensor_power(ch, k);
  const MacLabels m = mac_in_labels(ch, ch_k, k);
  check_sender_input(alice.state(0), m.alice, ch_k, "alice");
  check_sender_input(bob.state(0), m.bob, ch_k, "bob");
  warn_cardinality(
      alice.size(),
      std::pow(double(std::min(ch.in_layout()[0].dim, ch.out_dim())), 2.0 * k),
      "|X| <= min{|A'|,|C|}^2k");
  warn_cardinality(
      bob.size(),
      std::pow(double(std::min(ch.in_layout()[1].dim, ch.out_dim())), 2.0 * k),
      "|Y| <= min{|B'|,|C|}^2k");

  const std::string A = alice.state(0).layout()[0].label;
  const std::string B = bob.state(0).layout()[0].label;
  const std::string X = fresh("X", {&alice.layout(), &bob.layout(),
                                    &ch_k.out_layout()});
  const std::string Y = fresh("Y", {&alice.layout(), &bob.layout(),
                                    &ch_k.out_layout()});

  const auto targets = ch_k.in_layout().labels();
  const Index nx = Index(alice.size()), ny = Index(bob.size());
  Matrix big;
  FactorLayout quantum_layout;
  for (Index x = 0; x < nx; ++x)
    for (Index y = 0; y < ny; ++y) {
      const LabeledState block = apply(
          ch_k, tensor(alice.state(std::size_t(x)), bob.state(std::size_t(y)))
                    .density(),
          targets);
      if (big.size() == 0) {
        quantum_layout = block.layout();
        const Index d = block.dim();
        big = Matrix::Zero(nx * ny * d, nx * ny * d);
      }
      const Index d = block.dim();
      const double w = alice.prob(std::size_t(x)) * bob.prob(std::size_t(y));
      big.block((x * ny + y) * d, (x * ny + y) * d, d, d) = w * block.matrix();
    }
  std::vector<Factor> fs{{X, nx}, {Y, ny}};
  for (const auto& f : quantum_layout.factors()) fs.push_back(f);
  const LabeledState omega(FactorLayout(std::move(fs)), std::move(big));

  SixBound4 out;
  out.provenance = "full_region_bounds k=" + std::to_string(k);
  out.ra_max = conditional_mutual_information(omega, {X}, m.out, {Y}) / k;
  out.rb_max = conditional_mutual_information(omega, {Y}, m.out, {X}) / k;
  out.rab_max = mutual_information(omega, {X, Y}, m.out) / k;
  out.qa_max =
      coherent_information(omega, {A}, unite(unite(m.out, {B}), {X, Y})) / k;
  out.qb_max =
      coherent_information(omega, {B}, unite(unite(m.out, {A}), {X, Y})) / k;
  out.qab_max = coherent_information(omega, {A, B}, unite(m.out, {X, Y})) / k;
  return out;
}

// --- Geometry ------------------------------------------------------------

namespace {

void push_unique(std::vector<Eigen::Vector2d>& pts, double x, double y) {
  for (const auto& p : pts)
    if (std::abs(p.x() - x) <= tol::geom && std::abs(p.y() - y) <= tol::geom)
      return;
  pts.emplace_back(x, y);
}

double cross(const Eigen::Vector2d& o, const Eigen::Vector2d& a,
             const Eigen::Vector2d& b) {
  return (a.x() - o.x()) * (b.y() - o.y()) - (a.y() - o.y()) * (b.x() - o.x());
}

double segment_distance(const Eigen::Vector2d& p, const Eigen::Vector2d& a,
                        const Eigen::Vector2d& b) {
  const Eigen::Vector2d ab = b - a;
  const double len2 = ab.squaredNorm();
  if (len2 <= 0.0) return (p - a).norm();
  const double t = std::clamp((p - a).dot(ab) / len2, 0.0, 1.0);
  return (p - (a + t * ab)).norm();
}

}  // namespace

std::vector<Eigen::Vector2d> corners(const RectBound2& b) {
  const double a = std::max(b.r_max, 0.0), q = std::max(b.q_max, 0.0);
  std::vector<Eigen::Vector2d> pts;
  push_unique(pts, 0, 0);
  push_unique(pts, a, 0);
  push_unique(pts, 0, q);
  push_unique(pts, a, q);
  return pts;
}

std::vector<Eigen::Vector2d> clamped_pentagon_corners(double a, double b,
                                                      double sum) {
  a = std::max(a, 0.0);
  b = std::max(b, 0.0);
  const double s = std::max(sum, 0.0);
  std::vector<Eigen::Vector2d> pts;
  push_unique(pts, 0, 0);
  push_unique(pts, std::min(a, s), 0);
  push_unique(pts, 0, std::min(b, s));
  if (s < a + b) {
    if (s - a >= 0) push_unique(pts, a, s - a);
    if (s - b >= 0) push_unique(pts, s - b, b);
  } else {
    push_unique(pts, a, b);
  }
  return pts;
}

std::vector<Eigen::Vector2d> corners(const PentBound2& b) {
  return clamped_pentagon_corners(b.a_max, b.b_max, b.sum_max);
}

std::vector<std::array<double, 4>> four_d_corners(const SixBound4& b) {
  const auto classical =
      clamped_pentagon_corners(b.ra_max, b.rb_max, b.rab_max);
  const auto quantum = clamped_pentagon_corners(b.qa_max, b.qb_max, b.qab_max);
  std::vector<std::array<double, 4>> out;
  out.reserve(classical.size() * quantum.size());
  for (const auto& r : classical)
    for (const auto& q : quantum)
      out.push_back({r.x(), r.y(), q.x(), q.y()});
  return out;
}

void accumulate(RegionCloud& cloud, const RectBound2& b) {
  for (const auto& c : corners(b)) cloud.points.push_back(c);
  cloud.generators.push_back(
      BoundRecord{"rectangle", {b.r_max, b.q_max}, b.provenance, {}, 0});
}

void accumulate(RegionCloud& cloud, const PentBound2& b) {
  for (const auto& c : corners(b)) cloud.points.push_back(c);
  cloud.generators.push_back(BoundRecord{
      "pentagon", {b.a_max, b.b_max, b.sum_max}, b.provenance, {}, 0});
}

std::vector<Eigen::Vector2d> hull_2d(const std::vector<Eigen::Vector2d>& pts) {
  if (pts.empty()) throw Error("hull of an empty point set");
  std::vector<Eigen::Vector2d> p;
  for (const auto& q : pts) push_unique(p, q.x(), q.y());
  std::sort(p.begin(), p.end(), [](const auto& a, const auto& b) {
    return a.x() < b.x() || (a.x() == b.x() && a.y() < b.y());
  });
  if (p.size() <= 2) return p;

  std::vector<Eigen::Vector2d> h(2 * p.size());
  std::size_t n = 0;
  for (const auto& q : p) {  // lower chain
    while (n >= 2 && cross(h[n - 2], h[n - 1], q) <= tol::geom) --n;
    h[n++] = q;
  }
  const std::size_t lower = n + 1;
  for (std::size_t i = p.size() - 1; i-- > 0;) {  // upper chain
    const auto& q = p[i];
    while (n >= lower && cross(h[n - 2], h[n - 1], q) <= tol::geom) --n;
    h[n++] = q;
  }
  h.resize(n - 1);  // last point equals the first

  // The chain guards can leave a collinear middle behind; sweep those out.
  bool changed = true;
  while (changed && h.size() > 2) {
    changed = false;
    for (std::size_t i = 0; i < h.size(); ++i) {
      const auto& a = h[(i + h.size() - 1) % h.size()];
      const auto& b = h[i];
      const auto& c = h[(i + 1) % h.size()];
      if (cross(a, b, c) <= tol::geom) {
        h.erase(h.begin() + std::ptrdiff_t(i));
        changed = true;
        break;
      }
    }
  }
  return h;
}

void rebuild_hull(RegionCloud& cloud) { cloud.hull = hull_2d(cloud.points); }

double distance_outside_hull(const std::vector<Eigen::Vector2d>& hull,
                             const Eigen::Vector2d& p) {
  if (hull.empty()) throw Error("hull not computed");
  if (hull.size() == 1) return (p - hull[0]).norm();
  if (hull.size() == 2) return segment_distance(p, hull[0], hull[1]);
  bool inside = true;
  for (std::size_t i = 0; i < hull.size(); ++i) {
    const auto& a = hull[i];
    const auto& b = hull[(i + 1) % hull.size()];
    if (cross(a, b, p) < -tol::geom) {
      inside = false;
      break;
    }
  }
  if (inside) return 0.0;
  double d = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < hull.size(); ++i)
    d = std::min(d, segment_distance(p, hull[i], hull[(i + 1) % hull.size()]));
  return d;
}

bool contains(const RegionCloud& cloud, const Eigen::Vector2d& p, double tol) {
  return distance_outside_hull(cloud.hull, p) <= tol;
}

double hull_support(const std::vector<Eigen::Vector2d>& hull,
                    const Eigen::Vector2d& direction) {
  if (hull.empty()) throw Error("hull not computed");
  double best = -std::numeric_limits<double>::infinity();
  for (const auto& v : hull) best = std::max(best, direction.dot(v));
  return best;
}

}  // namespace qmac
