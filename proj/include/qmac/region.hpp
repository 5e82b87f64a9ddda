// This code is licensed under the Apache License, Version 2.0. You may
// obtain a copy of this license in the LICENSE.txt file in the root directory
// of this source tree or at http://www.apache.org/licenses/LICENSE-2.0.

#ifndef QMAC_REGION_HPP
#define QMAC_REGION_HPP

#include <string>
#include <vector>

#include "qmac/branches.hpp"
#include "qmac/channel.hpp"

namespace qmac {

/// Rectangle bound (R, Q) or (Q_a, Q_b): r_max is the first rate, q_max
/// the second. Raw (possibly negative) values are kept; clamping to the
/// nonnegative quadrant happens at corner enumeration.
struct RectBound2 {
  double r_max = 0.0;
  double q_max = 0.0;
  std::string provenance;
};

/// Pentagon bound: two individual rates and one sum rate. Strong
/// subadditivity forces a_max + b_max >= sum_max, checked on construction.
struct PentBound2 {
  double a_max = 0.0;
  double b_max = 0.0;
  double sum_max = 0.0;
  std::string provenance;
};
PentBound2 make_pent_bound(double a, double b, double sum, std::string prov);

/// The six simultaneous-region bounds (classical pair + sum, quantum pair
/// + sum), each already divided by the blocking level k.
struct SixBound4 {
  double ra_max = 0.0, rb_max = 0.0, rab_max = 0.0;
  double qa_max = 0.0, qb_max = 0.0, qab_max = 0.0;
  std::string provenance;
};

struct BoundRecord {
  std::string type;  // "rectangle" or "pentagon"
  std::vector<double> values;
  std::string provenance;
  std::vector<double> input_params;  // optimizer decode vector, if any
  std::uint64_t input_seed = 0;
};

/// Accumulated 2-D rate points, their generating bounds, and the convex
/// hull of everything seen so far.
struct RegionCloud {
  int k = 1;
  std::vector<Eigen::Vector2d> points;
  std::vector<BoundRecord> generators;
  std::vector<Eigen::Vector2d> hull;
};

// --- Two-sender conventions -------------------------------------------
// A multiple-access channel declares exactly two input factors, Alice's
// first. `mac_in_labels` returns the per-sender input labels of the k-th
// tensor power in copy order.
struct MacLabels {
  std::vector<std::string> alice, bob, out;
};
MacLabels mac_in_labels(const KrausChannel& ch, const KrausChannel& ch_k,
                        int k);

/// Channel power and label bookkeeping hoisted out of evaluation loops.
struct MacContext {
  KrausChannel base;
  KrausChannel powered;
  MacLabels labels;
  int k = 1;
};
MacContext make_mac_context(const KrausChannel& ch, int k);

// --- Bound evaluators ---------------------------------------------------
// Every evaluator builds the theorem state from pure inputs pushed through
// the k-th tensor power and reports the rate bounds divided by k.

/// (I(X;C^k), I_c(B>C^k X)) / k from a pure-state ensemble on Alice's
/// inputs and a bipartite pure state on (B, Bob's inputs).
RectBound2 cq_rectangle(const KrausChannel& ch, int k, const Ensemble& alice,
                        const PureState& bob);
RectBound2 cq_rectangle(const MacContext& ctx, const Ensemble& alice,
                        const PureState& bob);

/// (I(X;BC^k), I_c(B>C^k X), I(X;C^k)+I_c(B>C^k X)) / k; also verifies the
/// equivalent sum-rate expression I(X;BC^k)+I_c(B>C^k).
PentBound2 cq_pentagon(const KrausChannel& ch, int k, const Ensemble& alice,
                       const PureState& bob);
PentBound2 cq_pentagon(const MacContext& ctx, const Ensemble& alice,
                       const PureState& bob);

/// (I_c(A>BC^k), I_c(B>AC^k), I_c(AB>C^k)) / k from bipartite pure inputs.
PentBound2 qq_pentagon(const KrausChannel& ch, int k, const PureState& alice,
                       const PureState& bob);
PentBound2 qq_pentagon(const MacContext& ctx, const PureState& alice,
                       const PureState& bob);

/// The superseded rectangle characterization (I_c(A>C^k), I_c(B>C^k)) / k.
RectBound2 qq_rectangle(const KrausChannel& ch, int k, const PureState& alice,
                        const PureState& bob);
RectBound2 qq_rectangle(const MacContext& ctx, const PureState& alice,
                        const PureState& bob);

/// All six simultaneous-region bounds from bipartite pure-state ensembles
/// for both senders.
SixBound4 full_region_bounds(const KrausChannel& ch, int k,
                             const Ensemble& alice, const Ensemble& bob);

// --- Geometry ------------------------------------------------------------

/// Vertices of the bound's polygon clamped to the nonnegative quadrant.
std::vector<Eigen::Vector2d> corners(const RectBound2& b);
std::vector<Eigen::Vector2d> corners(const PentBound2& b);

/// Corners of {0 <= x <= a, 0 <= y <= b, x + y <= sum} for arbitrary raw
/// bounds (negative values clamp to zero, an inactive sum is ignored).
std::vector<Eigen::Vector2d> clamped_pentagon_corners(double a, double b,
                                                      double sum);

/// Corner points of the four-dimensional simultaneous region, which is
/// the product of the classical and quantum sum-capped boxes. Rows are
/// (ra, rb, qa, qb).
std::vector<std::array<double, 4>> four_d_corners(const SixBound4& b);

void accumulate(RegionCloud& cloud, const RectBound2& b);
void accumulate(RegionCloud& cloud, const PentBound2& b);

/// Convex hull, counterclockwise, starting at the lexicographically
/// smallest vertex; collinear middles are dropped within tol::geom.
std::vector<Eigen::Vector2d> hull_2d(const std::vector<Eigen::Vector2d>& pts);
void rebuild_hull(RegionCloud& cloud);

/// Euclidean distance from `p` to the hull polygon; zero inside.
double distance_outside_hull(const std::vector<Eigen::Vector2d>& hull,
                             const Eigen::Vector2d& p);
bool contains(const RegionCloud& cloud, const Eigen::Vector2d& p, double tol);

/// max over hull vertices of direction . vertex.
double hull_support(const std::vector<Eigen::Vector2d>& hull,
                    const Eigen::Vector2d& direction);

}  // namespace qmac

#endif
