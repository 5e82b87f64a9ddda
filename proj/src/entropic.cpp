// This code is licensed under the Apache License, Version 2.0. You may
// obtain a copy of this license in the LICENSE.txt file in the root directory
// of this source tree or at http://www.apache.org/licenses/LICENSE-2.0.

#include "qmac/entropic.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include <Eigen/Eigenvalues>

namespace qmac {

namespace {

void require_disjoint(std::initializer_list<const std::vector<std::string>*> sets) {
  std::set<std::string> seen;
  for (const auto* s : sets)
    for (const auto& l : *s)
      if (!seen.insert(l).second)
        throw OverlappingSubsystems("label '" + l +
                                    "' appears in two subsystems");
}

std::vector<std::string> unite(const std::vector<std::string>& a,
                               const std::vector<std::string>& b) {
  std::vector<std::string> out = a;
  out.insert(out.end(), b.begin(), b.end());
  return out;
}

double checked(double v) {
  if (!std::isfinite(v)) throw Error("non-finite information quantity");
  return v;
}

std::string fresh_label(const std::string& base,
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

}  // namespace

double entropy_from_eigenvalues(const Eigen::VectorXd& eigenvalues) {
  double h = 0.0;
  for (Index i = 0; i < eigenvalues.size(); ++i) {
    const double lam = eigenvalues(i);
    if (lam > tol::eig_floor) h -= lam * std::log2(lam);
  }
  return checked(h);
}

double entropy(const LabeledState& s,
               const std::vector<std::string>& subsystem) {
  const Matrix reduced = partial_trace_matrix(s.matrix(), s.layout(), subsystem);
  Eigen::SelfAdjointEigenSolver<Matrix> es(reduced, Eigen::EigenvaluesOnly);
  return entropy_from_eigenvalues(es.eigenvalues());
}

double binary_entropy(double p) {
  if (p < 0.0 || p > 1.0) throw BadProbability("probability outside [0,1]");
  if (p <= 0.0 || p >= 1.0) return 0.0;
  return -p * std::log2(p) - (1.0 - p) * std::log2(1.0 - p);
}

double mutual_information(const LabeledState& s,
                          const std::vector<std::string>& x,
                          const std::vector<std::string>& b) {
  require_disjoint({&x, &b});
  return checked(entropy(s, x) + entropy(s, b) - entropy(s, unite(x, b)));
}

double conditional_mutual_information(const LabeledState& s,
                                      const std::vector<std::string>& x,
                                      const std::vector<std::string>& b,
                                      const std::vector<std::string>& z) {
  require_disjoint({&x, &b, &z});
  if (z.empty()) return mutual_information(s, x, b);
  return checked(entropy(s, unite(x, z)) + entropy(s, unite(b, z)) -
                 entropy(s, z) - entropy(s, unite(unite(x, b), z)));
}

double coherent_information(const LabeledState& s,
                            const std::vector<std::string>& a,
                            const std::vector<std::string>& b) {
  require_disjoint({&a, &b});
  return checked(entropy(s, b) - entropy(s, unite(a, b)));
}

double channel_coherent_information(const LabeledState& rho,
                                    const KrausChannel& ch) {
  if (rho.dim() != ch.in_dim() || !(rho.layout() == ch.in_layout()))
    throw DimMismatch("state layout does not match channel input");
  const std::string ref =
      fresh_label("ref", {&rho.layout(), &ch.out_layout()});
  const PureState phi = purify(rho, ref);
  const LabeledState joint =
      apply(ch, phi.density(), rho.layout().labels());
  return coherent_information(joint, {ref}, ch.out_layout().labels());
}

double conditional_coherent_information(const LabeledState& s,
                                        const std::vector<std::string>& a,
                                        const std::vector<std::string>& b,
                                        const std::vector<std::string>& x) {
  require_disjoint({&a, &b, &x});
  if (!x.empty()) {
    // Validate classicality: off-diagonal X blocks must vanish.
    std::vector<std::string> order = x;
    for (const auto& f : s.layout().factors())
      if (std::find(x.begin(), x.end(), f.label) == x.end())
        order.push_back(f.label);
    const LabeledState p = permute_factors(s, order);
    const Index dx = s.layout().dim_of_subset(x);
    const Index dq = s.dim() / dx;
    for (Index i = 0; i < dx; ++i)
      for (Index j = 0; j < dx; ++j) {
        if (i == j) continue;
        const double off =
            p.matrix().block(i * dq, j * dq, dq, dq).cwiseAbs().maxCoeff();
        if (off > tol::cq)
          throw NotClassicalConditioner(
              "conditioning system has off-diagonal blocks of size " +
              std::to_string(off));
      }
  }
  return checked(entropy(s, unite(b, x)) - entropy(s, unite(unite(a, b), x)));
}

}  // namespace qmac
