// This code is licensed under the Apache License, Version 2.0. You may
// obtain a copy of this license in the LICENSE.txt file in the root directory
// of this source tree or at http://www.apache.org/licenses/LICENSE-2.0.

#include <doctest.h>

#include "qmac/entropic.hpp"
#include "test_support.hpp"

using namespace qmac;
using namespace qmac::test;

namespace {
LabeledState basis_density(Index dim, Index which, const std::string& label) {
  Vector v = Vector::Zero(dim);
  v(which) = 1.0;
  return PureState(FactorLayout({{label, dim}}), v).density();
}

LabeledState maximally_mixed(Index dim, const std::string& label) {
  return LabeledState(FactorLayout({{label, dim}}),
                      Matrix::Identity(dim, dim) / double(dim));
}
}  // namespace

TEST_CASE("layout validation") {
  CHECK_THROWS_AS(FactorLayout({{"A", 2}, {"A", 3}}), DuplicateLabel);
  CHECK_THROWS_AS(FactorLayout({{"A", 0}}), DimMismatch);
  const FactorLayout l({{"A", 2}, {"B", 3}});
  CHECK(l.dim() == 6);
  CHECK(l.dim_of("B") == 3);
  CHECK_THROWS_AS((void)l.index_of("C"), UnknownLabel);
  CHECK(l.restricted({"B"}).labels() == std::vector<std::string>{"B"});
}

TEST_CASE("state invariant validation") {
  const FactorLayout l({{"A", 2}});
  Matrix herm_bad(2, 2);
  herm_bad << 0.5, cxd(0, 0.5), cxd(0, 0.5), 0.5;
  CHECK_THROWS_AS(LabeledState(l, herm_bad), InvalidState);
  Matrix trace_bad = Matrix::Identity(2, 2);
  CHECK_THROWS_AS(LabeledState(l, trace_bad), InvalidState);
  Matrix psd_bad(2, 2);
  psd_bad << 1.5, 0, 0, -0.5;
  CHECK_THROWS_AS(LabeledState(l, psd_bad), InvalidState);
  Vector unnorm(2);
  unnorm << 1.0, 1.0;
  CHECK_THROWS_AS(PureState(l, unnorm), InvalidState);
}

TEST_CASE("tensor basics") {
  const LabeledState rho = maximally_mixed(2, "A");
  // trivial one-dimensional factor prepended
  const LabeledState triv(FactorLayout({{"T", 1}}), Matrix::Identity(1, 1));
  const LabeledState t = tensor(triv, rho);
  CHECK(t.layout().size() == 2);
  CHECK((t.matrix() - rho.matrix()).cwiseAbs().maxCoeff() == 0.0);

  const LabeledState quarter = tensor(rho, maximally_mixed(2, "B"));
  CHECK((quarter.matrix() - Matrix::Identity(4, 4) / 4.0).cwiseAbs().maxCoeff()
        < 1e-15);

  const LabeledState zero_one =
      tensor(basis_density(2, 0, "A"), basis_density(2, 1, "B"));
  Matrix want = Matrix::Zero(4, 4);
  want(1, 1) = 1.0;  // |01><01| in row-major ordering
  CHECK((zero_one.matrix() - want).cwiseAbs().maxCoeff() == 0.0);

  CHECK_THROWS_AS(tensor(rho, maximally_mixed(2, "A")), DuplicateLabel);
}

TEST_CASE("partial trace") {
  Rng rng(11);
  const FactorLayout l({{"A", 2}, {"B", 3}});
  const LabeledState rho = random_density(l, rng);

  const LabeledState same = partial_trace(rho, {"A", "B"});
  CHECK((same.matrix() - rho.matrix()).cwiseAbs().maxCoeff() == 0.0);

  const LabeledState bell = bell_pair("A", "B").density();
  const LabeledState marg = partial_trace(bell, {"A"});
  CHECK((marg.matrix() - Matrix::Identity(2, 2) / 2.0).cwiseAbs().maxCoeff()
        < 1e-15);

  CHECK_THROWS_AS(partial_trace(rho, {"C"}), UnknownLabel);
}

TEST_CASE("partial trace matches brute-force oracle and commutes with permutation") {
  Rng rng(12);
  const FactorLayout l({{"A", 2}, {"B", 2}, {"C", 3}});
  for (int i = 0; i < 25; ++i) {
    const LabeledState rho = random_density(l, rng);
    const Matrix fast = partial_trace(rho, {"A", "C"}).matrix();
    const Matrix slow = oracle_partial_trace(rho.matrix(), l, {"A", "C"});
    CHECK((fast - slow).cwiseAbs().maxCoeff() < 1e-13);
    CHECK(std::abs(fast.trace().real() - 1.0) < 1e-12);

    // permuting untouched factors first changes nothing on the kept ones
    const LabeledState perm = permute_factors(rho, {"C", "B", "A"});
    const Matrix via_perm = permute_factors(partial_trace(perm, {"A", "C"}),
                                            std::vector<std::string>{"A", "C"})
                                .matrix();
    CHECK((fast - via_perm).cwiseAbs().maxCoeff() < 1e-13);
  }
}

TEST_CASE("omega1 classical marginal is uniform") {
  const double p = 0.23;
  const KrausChannel ch = collective_qubit_flip(p);
  const double s = 1.0 / std::sqrt(2.0);
  const PureState bob = bell_pair("B", "B'");
  std::vector<LabeledState> blocks;
  for (const Vector& v : {ket({s, s}), ket({s, -s})}) {
    const PureState phi(FactorLayout({{"A'", 2}}), v);
    blocks.push_back(apply(ch, tensor(phi, bob).density(), {"A'", "B'"}));
  }
  const LabeledState omega1 = cq_mix({0.5, 0.5}, blocks, "X");
  const Matrix xm = partial_trace(omega1, {"X"}).matrix();
  CHECK(std::abs(xm(0, 0).real() - 0.5) < 1e-12);
  CHECK(std::abs(xm(1, 1).real() - 0.5) < 1e-12);
  CHECK(std::abs(xm(0, 1)) < 1e-12);
}

TEST_CASE("permute factors") {
  Rng rng(13);
  const FactorLayout l({{"A", 2}, {"B", 3}});
  const LabeledState rho = random_density(l, rng);

  const LabeledState same = permute_factors(rho, {"A", "B"});
  CHECK((same.matrix() - rho.matrix()).cwiseAbs().maxCoeff() == 0.0);

  const LabeledState twice =
      permute_factors(permute_factors(rho, {"B", "A"}), {"A", "B"});
  CHECK((twice.matrix() - rho.matrix()).cwiseAbs().maxCoeff() == 0.0);

  const LabeledState z_o =
      tensor(basis_density(2, 0, "A"), basis_density(2, 1, "B"));
  const LabeledState swapped = permute_factors(z_o, {"B", "A"});
  Matrix want = Matrix::Zero(4, 4);
  want(2, 2) = 1.0;  // |10><10|
  CHECK((swapped.matrix() - want).cwiseAbs().maxCoeff() == 0.0);

  CHECK_THROWS_AS(permute_factors(rho, {"A", "A"}), BadPermutation);
  CHECK_THROWS_AS(permute_factors(rho, {"A"}), BadPermutation);

  // spectrum unchanged
  Eigen::SelfAdjointEigenSolver<Matrix> e1(rho.matrix(), Eigen::EigenvaluesOnly);
  Eigen::SelfAdjointEigenSolver<Matrix> e2(
      permute_factors(rho, {"B", "A"}).matrix(), Eigen::EigenvaluesOnly);
  CHECK((e1.eigenvalues() - e2.eigenvalues()).cwiseAbs().maxCoeff() < 1e-12);
}

TEST_CASE("purification") {
  Rng rng(14);

  // pure input: rank-1 reference
  const PureState phi = random_pure_on(FactorLayout({{"A", 3}}), rng);
  const PureState purified = purify(phi.density(), "R");
  const LabeledState back = partial_trace(purified.density(), {"A"});
  CHECK((back.matrix() - phi.density().matrix()).cwiseAbs().maxCoeff() < 1e-10);

  // maximally mixed qubit purifies to a maximally entangled pair
  const PureState me = purify(maximally_mixed(2, "A"), "R");
  const LabeledState ref_marg = partial_trace(me.density(), {"R"});
  CHECK((ref_marg.matrix() - Matrix::Identity(2, 2) / 2.0).cwiseAbs().maxCoeff()
        < 1e-12);

  // random 3-dim round trip against the eigendecomposition oracle
  for (int i = 0; i < 20; ++i) {
    const LabeledState rho = random_density(FactorLayout({{"A", 3}}), rng);
    const PureState psi = purify(rho, "R");
    CHECK(psi.layout()[0].label == "R");
    const Matrix rec = partial_trace(psi.density(), {"A"}).matrix();
    CHECK((rec - rho.matrix()).cwiseAbs().maxCoeff() < tol::recon);
  }
  CHECK_THROWS_AS(purify(maximally_mixed(2, "A"), "A"), DuplicateLabel);
}

TEST_CASE("fidelity") {
  Rng rng(15);
  const FactorLayout l({{"A", 2}});
  const LabeledState rho = random_density(l, rng);
  CHECK(fidelity(rho, rho) == doctest::Approx(1.0).epsilon(1e-10));
  CHECK(fidelity(basis_density(2, 0, "A"), basis_density(2, 1, "A")) ==
        doctest::Approx(0.0).epsilon(1e-12));

  Matrix d1 = Matrix::Zero(2, 2), d2 = Matrix::Zero(2, 2);
  d1(0, 0) = 0.5;
  d1(1, 1) = 0.5;
  d2(0, 0) = 0.9;
  d2(1, 1) = 0.1;
  const double classical = std::pow(std::sqrt(0.45) + std::sqrt(0.05), 2);
  CHECK(fidelity(LabeledState(l, d1), LabeledState(l, d2)) ==
        doctest::Approx(classical).epsilon(1e-12));

  CHECK_THROWS_AS(fidelity(rho, maximally_mixed(2, "B")), LayoutMismatch);

  for (int i = 0; i < 30; ++i) {
    const LabeledState a = random_density(FactorLayout({{"A", 3}}), rng);
    const LabeledState b = random_density(FactorLayout({{"A", 3}}), rng);
    const double f = fidelity(a, b);
    CHECK(f >= 0.0);
    CHECK(f <= 1.0);
    CHECK(f == doctest::Approx(fidelity(b, a)).epsilon(1e-9));
    // pure first argument reduces to <psi|sigma|psi>; the square-root
    // eigendecomposition limits agreement to about 1e-8
    const PureState psi = random_pure_on(FactorLayout({{"A", 3}}), rng);
    const double want =
        (psi.vec().adjoint() * b.matrix() * psi.vec())(0).real();
    CHECK(fidelity(psi.density(), b) == doctest::Approx(want).epsilon(1e-7));
  }
}

TEST_CASE("maximally entangled") {
  const PureState one = maximally_entangled(1, "A", "B");
  CHECK(one.dim() == 1);
  const PureState bell = maximally_entangled(2, "A", "B");
  const Matrix marg = partial_trace(bell.density(), {"B"}).matrix();
  CHECK((marg - Matrix::Identity(2, 2) / 2.0).cwiseAbs().maxCoeff() < 1e-15);
  const PureState four = maximally_entangled(4, "A", "B");
  CHECK(entropy(four.density(), {"A"}) == doctest::Approx(2.0).epsilon(1e-12));
}

TEST_CASE("cq state") {
  Rng rng(16);
  const FactorLayout lb({{"B", 2}});
  const PureState sigma = random_pure_on(lb, rng);

  const LabeledState single = cq_state(Ensemble({1.0}, {sigma}), "X");
  CHECK(single.layout()[0].label == "X");
  CHECK(single.layout()[0].dim == 1);
  CHECK((partial_trace(single, {"B"}).matrix() - sigma.density().matrix())
            .cwiseAbs()
            .maxCoeff() < 1e-14);

  const LabeledState uniform =
      cq_state(Ensemble({0.5, 0.5}, {sigma, sigma}), "X");
  CHECK(mutual_information(uniform, {"X"}, {"B"}) ==
        doctest::Approx(0.0).epsilon(1e-10));
  CHECK(entropy(uniform, {"X"}) == doctest::Approx(1.0).epsilon(1e-12));

  // off-diagonal X blocks vanish exactly
  CHECK(uniform.matrix().block(0, 2, 2, 2).cwiseAbs().maxCoeff() == 0.0);

  CHECK_THROWS_AS(cq_state(Ensemble({0.7, 0.7}, {sigma, sigma}), "X"),
                  BadDistribution);
  CHECK_THROWS_AS(cq_state(Ensemble({0.5, 0.5}, {sigma, sigma}), "B"),
                  DuplicateLabel);
}

TEST_CASE("tensor then trace returns the factor") {
  Rng rng(17);
  for (int i = 0; i < 20; ++i) {
    const LabeledState a = random_density(FactorLayout({{"A", 3}}), rng);
    const LabeledState b = random_density(FactorLayout({{"B", 2}}), rng);
    const Matrix back = partial_trace(tensor(a, b), {"A"}).matrix();
    CHECK((back - a.matrix()).cwiseAbs().maxCoeff() < tol::recon);
  }
}
