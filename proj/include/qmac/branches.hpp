// This code is licensed under the Apache License, Version 2.0. You may
// obtain a copy of this license in the LICENSE.txt file in the root directory
// of this source tree or at http://www.apache.org/licenses/LICENSE-2.0.

#ifndef QMAC_BRANCHES_HPP
#define QMAC_BRANCHES_HPP

#include <vector>

#include "qmac/channel.hpp"

namespace qmac {

/// Channel output of a pure input, kept as the list of (unnormalized)
/// Kraus branch vectors. The represented density matrix is
/// sum_i |v_i><v_i| and the squared norms sum to one, which keeps every
/// marginal computable from low-rank pieces instead of the full matrix.
struct PureBranches {
  FactorLayout layout;
  std::vector<Vector> vecs;

  LabeledState to_state() const;
};

/// Push a pure state through a channel branch by branch. Output layout is
/// [channel outputs..., untouched factors in original order...].
PureBranches apply_to_pure(const KrausChannel& ch, const PureState& in,
                           const std::vector<std::string>& targets);

/// Reduced density matrix on `keep` (original factor order).
Matrix reduced_density(const PureBranches& br,
                       const std::vector<std::string>& keep);

/// Entropy (bits) of the reduced state on `keep`. Uses the Gram matrix of
/// branch slices whenever that is smaller than the reduced matrix itself.
double subsystem_entropy(const PureBranches& br,
                         const std::vector<std::string>& keep);

/// Classical mixture of branch bundles: sum_x p(x) |x><x| (x) rho_x with
/// every rho_x held in branch form over a shared quantum layout.
struct CqBranches {
  std::string classical_label;
  std::vector<double> probs;
  std::vector<PureBranches> blocks;

  LabeledState to_state() const;
};

/// Entropy of the subsystem named by `labels`, which may include the
/// classical label; block-diagonal structure is exploited either way.
double subsystem_entropy(const CqBranches& cq,
                         const std::vector<std::string>& labels);

}  // namespace qmac

#endif
