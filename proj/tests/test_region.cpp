// This code is licensed under the Apache License, Version 2.0. You may
// obtain a copy of this license in the LICENSE.txt file in the root directory
// of this source tree or at http://www.apache.org/licenses/LICENSE-2.0.

#include <doctest.h>

#include <numeric>

#include "qmac/entropic.hpp"
#include "test_support.hpp"

using namespace qmac;
using namespace qmac::test;

TEST_CASE("qq pentagon and rectangle corners for the flip channel") {
  for (double p : {0.0, 0.1, 0.25}) {
    const KrausChannel ch = collective_qubit_flip(p);
    const PentBound2 pent =
        qq_pentagon(ch, 1, bell_pair("A", "A'"), bell_pair("B", "B'"));
    CHECK(pent.a_max == doctest::Approx(1.0).epsilon(1e-10));
    CHECK(pent.b_max == doctest::Approx(1.0).epsilon(1e-10));
    CHECK(pent.sum_max ==
          doctest::Approx(2.0 - binary_entropy(p)).epsilon(1e-10));

    const RectBound2 rect =
        qq_rectangle(ch, 1, bell_pair("A", "A'"), bell_pair("B", "B'"));
    CHECK(rect.r_max == doctest::Approx(rect.q_max).epsilon(1e-10));
    CHECK(rect.r_max ==
          doctest::Approx(1.0 - binary_entropy(p)).epsilon(1e-10));
  }

  // completely dephased sum rate at p = 1/2, against a hand-rolled
  // five-qubit evaluation
  {
    const KrausChannel ch = collective_qubit_flip(0.5);
    const RectBound2 rect =
        qq_rectangle(ch, 1, bell_pair("A", "A'"), bell_pair("B", "B'"));
    const LabeledState omega =
        apply(ch, tensor(bell_pair("A", "A'"), bell_pair("B", "B'")).density(),
              {"A'", "B'"});
    const Matrix ac =
        oracle_partial_trace(omega.matrix(), omega.layout(), {"A", "CA", "CB"});
    const Matrix c =
        oracle_partial_trace(omega.matrix(), omega.layout(), {"CA", "CB"});
    CHECK(rect.r_max ==
          doctest::Approx(oracle_entropy(c) - oracle_entropy(ac)).epsilon(1e-10));
  }

  // unentangled purifiers give vanishing bounds
  {
    Rng rng(61);
    const KrausChannel ch = collective_qubit_flip(0.2);
    const PureState pa = random_pure_on(FactorLayout({{"A", 1}, {"A'", 2}}), rng);
    const PureState pb = random_pure_on(FactorLayout({{"B", 1}, {"B'", 2}}), rng);
    const PentBound2 pent = qq_pentagon(ch, 1, pa, pb);
    CHECK(std::abs(pent.a_max) < 1e-10);
    CHECK(std::abs(pent.b_max) < 1e-10);
    CHECK(std::abs(pent.sum_max) < 1e-10);
  }

  // identity channel carries two noiseless qubits
  {
    const KrausChannel id = identity_channel(FactorLayout({{"A'", 2}, {"B'", 2}}));
    const PentBound2 pent =
        qq_pentagon(id, 1, bell_pair("A", "A'"), bell_pair("B", "B'"));
    CHECK(pent.a_max == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(pent.sum_max == doctest::Approx(2.0).epsilon(1e-12));
    const RectBound2 rect =
        qq_rectangle(id, 1, bell_pair("A", "A'"), bell_pair("B", "B'"));
    CHECK(rect.r_max == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(rect.q_max == doctest::Approx(1.0).epsilon(1e-12));
  }
}

TEST_CASE("cq corners for the flip channel") {
  const double p = 0.25;
  const KrausChannel ch = collective_qubit_flip(p);
  const PureState bob = bell_pair("B", "B'");
  const double s = 1.0 / std::sqrt(2.0);
  const Ensemble e1 = two_state_ensemble(0.5, ket({s, s}), ket({s, -s}));
  const Ensemble e2 = two_state_ensemble(0.5, ket({1, 0}), ket({0, 1}));

  const RectBound2 r1 = cq_rectangle(ch, 1, e1, bob);
  CHECK(r1.r_max == doctest::Approx(1.0).epsilon(1e-10));
  CHECK(r1.q_max == doctest::Approx(1 - binary_entropy(p)).epsilon(1e-10));

  const RectBound2 r2 = cq_rectangle(ch, 1, e2, bob);
  CHECK(r2.r_max == doctest::Approx(1 - binary_entropy(p)).epsilon(1e-10));
  CHECK(r2.q_max == doctest::Approx(1.0).epsilon(1e-10));

  const PentBound2 p2 = cq_pentagon(ch, 1, e2, bob);
  CHECK(p2.a_max == doctest::Approx(1.0).epsilon(1e-10));
  CHECK(p2.b_max == doctest::Approx(1.0).epsilon(1e-10));
  CHECK(p2.sum_max == doctest::Approx(2 - binary_entropy(p)).epsilon(1e-10));
  // corner on the x = a_max edge
  CHECK(p2.sum_max - p2.a_max ==
        doctest::Approx(1 - binary_entropy(p)).epsilon(1e-10));

  // the first preparation degenerates to a rectangle: sum = a + b
  const PentBound2 p1 = cq_pentagon(ch, 1, e1, bob);
  CHECK(p1.a_max + p1.b_max == doctest::Approx(p1.sum_max).epsilon(1e-9));

  // single-element ensemble has no classical rate
  const Ensemble single(std::vector<double>{1.0},
                        {PureState(FactorLayout({{"A'", 2}}), ket({1, 0}))});
  const PentBound2 ps = cq_pentagon(ch, 1, single, bob);
  CHECK(std::abs(ps.a_max) < 1e-10);
}

TEST_CASE("erasure rate pairs") {
  const KrausChannel ch = erasure_mac();
  const PureState bob = bell_pair("B", "B'");
  for (double p : {0.0, 0.2, 0.5}) {
    const RectBound2 r =
        cq_rectangle(ch, 1, two_state_ensemble(1 - p, ket({1, 0}), ket({0, 1})),
                     bob);
    CHECK(r.r_max == doctest::Approx(binary_entropy(p)).epsilon(1e-10));
    CHECK(r.q_max == doctest::Approx(1 - 2 * p).epsilon(1e-10));
  }
}

TEST_CASE("pentagon invariant holds on random inputs") {
  Rng rng(62);
  for (int i = 0; i < 40; ++i) {
    const double p = rng.uniform();
    const KrausChannel ch = collective_qubit_flip(p);
    const PureState alice =
        random_pure_on(FactorLayout({{"A", 2}, {"A'", 2}}), rng);
    const PureState bob =
        random_pure_on(FactorLayout({{"B", 2}, {"B'", 2}}), rng);
    const PentBound2 pent = qq_pentagon(ch, 1, alice, bob);
    CHECK(pent.a_max + pent.b_max >= pent.sum_max - tol::entropic);
    // dephasing-channel sum-rate cap
    CHECK(pent.sum_max <= 2 - binary_entropy(p) + tol::entropic);
    // the rectangle sits inside the pentagon region of the same state
    const RectBound2 rect = qq_rectangle(ch, 1, alice, bob);
    RegionCloud cloud;
    accumulate(cloud, pent);
    rebuild_hull(cloud);
    for (const auto& corner : corners(rect))
      CHECK(contains(cloud, corner, tol::geom));
  }
}

TEST_CASE("theorem-3 bounds degenerate correctly") {
  const double p = 0.15;
  const KrausChannel ch = collective_qubit_flip(p);
  const PureState alice = bell_pair("A", "A'");
  const PureState bob = bell_pair("B", "B'");

  const Ensemble alice_single(std::vector<double>{1.0}, {alice});
  const Ensemble bob_single(std::vector<double>{1.0}, {bob});
  const SixBound4 six = full_region_bounds(ch, 1, alice_single, bob_single);
  const PentBound2 pent = qq_pentagon(ch, 1, alice, bob);
  CHECK(std::abs(six.ra_max) < 1e-10);
  CHECK(std::abs(six.rb_max) < 1e-10);
  CHECK(std::abs(six.rab_max) < 1e-10);
  CHECK(six.qa_max == doctest::Approx(pent.a_max).epsilon(1e-10));
  CHECK(six.qb_max == doctest::Approx(pent.b_max).epsilon(1e-10));
  CHECK(six.qab_max == doctest::Approx(pent.sum_max).epsilon(1e-10));

  // classical Alice ensemble against the rectangle characterization
  const double s = 1.0 / std::sqrt(2.0);
  const FactorLayout la({{"A", 1}, {"A'", 2}});
  const Ensemble alice_classical(
      {0.5, 0.5},
      {PureState(la, ket({s, s})), PureState(la, ket({s, -s}))});
  const SixBound4 shadow = full_region_bounds(ch, 1, alice_classical, bob_single);
  const RectBound2 rect = cq_rectangle(
      ch, 1, two_state_ensemble(0.5, ket({s, s}), ket({s, -s})), bob);
  CHECK(shadow.ra_max == doctest::Approx(rect.r_max).epsilon(1e-10));
  CHECK(shadow.qb_max == doctest::Approx(rect.q_max).epsilon(1e-10));
}

TEST_CASE("corner enumeration") {
  const RectBound2 rect{1.0, 0.5, ""};
  const auto rc = corners(rect);
  REQUIRE(rc.size() == 4);
  RegionCloud cloud;
  accumulate(cloud, rect);
  CHECK(cloud.points.size() == 4);
  CHECK(cloud.generators.size() == 1);
  CHECK(cloud.generators[0].type == "rectangle");

  const PentBound2 pent = make_pent_bound(1.0, 1.0, 1.5, "");
  const auto pc = corners(pent);
  REQUIRE(pc.size() == 5);
  bool has_a = false, has_b = false;
  for (const auto& c : pc) {
    if ((c - Eigen::Vector2d(1.0, 0.5)).norm() < 1e-12) has_a = true;
    if ((c - Eigen::Vector2d(0.5, 1.0)).norm() < 1e-12) has_b = true;
  }
  CHECK(has_a);
  CHECK(has_b);

  // inactive sum constraint degenerates to the rectangle corner set
  const PentBound2 degenerate = make_pent_bound(1.0, 0.5, 1.5, "");
  const auto dc = corners(degenerate);
  CHECK(dc.size() == 4);

  // negative rates clamp to zero but stay in the record
  const RectBound2 neg{-0.25, 0.5, ""};
  const auto nc = corners(neg);
  CHECK(nc.size() == 2);  // (0,0) and (0,0.5)
  RegionCloud cloud2;
  accumulate(cloud2, neg);
  CHECK(cloud2.generators[0].values[0] == doctest::Approx(-0.25));

  CHECK_THROWS_AS(make_pent_bound(0.4, 0.4, 1.0, ""), Error);
}

TEST_CASE("hull basics and brute-force agreement") {
  // single point
  const auto h1 = hull_2d({Eigen::Vector2d(0.3, 0.4)});
  REQUIRE(h1.size() == 1);

  // unit square with interior points
  std::vector<Eigen::Vector2d> sq{{0, 0}, {1, 0}, {1, 1}, {0, 1},
                                  {0.5, 0.5}, {0.2, 0.7}};
  const auto h2 = hull_2d(sq);
  REQUIRE(h2.size() == 4);
  CHECK(h2[0] == Eigen::Vector2d(0, 0));  // lexicographic start, CCW
  CHECK(h2[1] == Eigen::Vector2d(1, 0));
  CHECK(h2[2] == Eigen::Vector2d(1, 1));
  CHECK(h2[3] == Eigen::Vector2d(0, 1));

  // random point sets up to 12 points against gift wrapping
  Rng rng(63);
  for (int trial = 0; trial < 120; ++trial) {
    const int n = 1 + int(rng.next_u64() % 12);
    std::vector<Eigen::Vector2d> pts;
    for (int i = 0; i < n; ++i)
      pts.emplace_back(rng.uniform() * 2 - 1, rng.uniform() * 2 - 1);
    auto fast = hull_2d(pts);
    auto slow = oracle_hull(pts);
    REQUIRE(fast.size() == slow.size());
    // same cyclic vertex set
    for (const auto& v : fast) {
      bool found = false;
      for (const auto& w : slow)
        if ((v - w).norm() < 1e-9) found = true;
      CHECK(found);
    }
  }

  // all 1000 disk points are inside their own hull
  std::vector<Eigen::Vector2d> disk;
  for (int i = 0; i < 1000; ++i) {
    const double r = std::sqrt(rng.uniform());
    const double t = 2 * std::numbers::pi * rng.uniform();
    disk.emplace_back(r * std::cos(t), r * std::sin(t));
  }
  RegionCloud cloud;
  cloud.points = disk;
  rebuild_hull(cloud);
  for (const auto& q : disk) CHECK(contains(cloud, q, tol::geom));
}

TEST_CASE("containment") {
  RegionCloud cloud;
  accumulate(cloud, make_pent_bound(1.0, 1.0, 2 - binary_entropy(0.1), ""));
  rebuild_hull(cloud);

  for (const auto& v : cloud.hull) CHECK(contains(cloud, v, 1e-12));
  CHECK(contains(cloud, Eigen::Vector2d(0, 0), 0.0));

  // a point 0.1 beyond the sum facet is out by 0.1/sqrt(2)
  const double s = 2 - binary_entropy(0.1);
  const Eigen::Vector2d outside(s / 2 + 0.05, s / 2 + 0.05);
  CHECK(!contains(cloud, outside, 0.05));
  CHECK(distance_outside_hull(cloud.hull, outside) ==
        doctest::Approx(0.1 / std::sqrt(2.0)).epsilon(1e-9));
}

TEST_CASE("sum-rate identity on random cq states") {
  Rng rng(64);
  const KrausChannel ch = collective_qubit_flip(0.13);
  const PureState bobs[2] = {
      random_pure_on(FactorLayout({{"B", 2}, {"B'", 2}}), rng),
      bell_pair("B", "B'")};
  for (int i = 0; i < 30; ++i) {
    const FactorLayout la({{"A'", 2}});
    const int nx = 2 + int(rng.next_u64() % 3);
    std::vector<double> probs;
    std::vector<PureState> states;
    double left = 1.0;
    for (int x = 0; x < nx; ++x) {
      const double w = (x == nx - 1) ? left : left * rng.uniform();
      probs.push_back(w);
      left -= (x == nx - 1) ? 0.0 : w;
      states.push_back(random_pure_on(la, rng));
    }
    probs.back() = 1.0 - std::accumulate(probs.begin(), probs.end() - 1, 0.0);
    const Ensemble ens(probs, states);
    const PureState& bob = bobs[i % 2];

    std::vector<LabeledState> blocks;
    for (std::size_t x = 0; x < ens.size(); ++x)
      blocks.push_back(
          apply(ch, tensor(ens.state(x), bob).density(), {"A'", "B'"}));
    const LabeledState omega = cq_mix(probs, blocks, "X");

    const std::vector<std::string> c{"CA", "CB"};
    const double lhs =
        mutual_information(omega, {"X"}, c) +
        conditional_coherent_information(omega, {"B"}, c, {"X"});
    const double rhs =
        mutual_information(omega, {"X"}, {"B", "CA", "CB"}) +
        coherent_information(omega, {"B"}, c);
    CHECK(std::abs(lhs - rhs) < tol::entropic);
  }
}
