// This code is licensed under the Apache License, Version 2.0. You may
// obtain a copy of this license in the LICENSE.txt file in the root directory
// of this source tree or at http://www.apache.org/licenses/LICENSE-2.0.

#ifndef QMAC_STATE_HPP
#define QMAC_STATE_HPP

#include <complex>
#include <string>
#include <vector>

#include <Eigen/Core>

#include "qmac/layout.hpp"

namespace qmac {

using cxd = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;

class LabeledState;

/// Unit vector over a labeled factor layout.
class PureState {
 public:
  PureState(FactorLayout layout, Vector vec);

  const FactorLayout& layout() const { return layout_; }
  const Vector& vec() const { return vec_; }
  Index dim() const { return vec_.size(); }

  /// |psi><psi| as a density matrix.
  LabeledState density() const;

 private:
  FactorLayout layout_;
  Vector vec_;
};

/// Density matrix over a labeled factor layout. Construction validates
/// Hermiticity, positive semidefiniteness and unit trace.
class LabeledState {
 public:
  LabeledState(FactorLayout layout, Matrix mat);

  const FactorLayout& layout() const { return layout_; }
  const Matrix& matrix() const { return mat_; }
  Index dim() const { return mat_.rows(); }

 private:
  FactorLayout layout_;
  Matrix mat_;
};

/// Probability-weighted list of pure states sharing one layout.
class Ensemble {
 public:
  Ensemble(std::vector<double> probs, std::vector<PureState> states);

  std::size_t size() const { return probs_.size(); }
  double prob(std::size_t i) const { return probs_[i]; }
  const PureState& state(std::size_t i) const { return states_[i]; }
  const FactorLayout& layout() const { return states_.front().layout(); }

 private:
  std::vector<double> probs_;
  std::vector<PureState> states_;
};

LabeledState tensor(const LabeledState& a, const LabeledState& b);
PureState tensor(const PureState& a, const PureState& b);

/// Trace out every factor not named in `keep`; kept factors remain in
/// their original order.
LabeledState partial_trace(const LabeledState& s,
                           const std::vector<std::string>& keep);
Matrix partial_trace_matrix(const Matrix& m, const FactorLayout& layout,
                            const std::vector<std::string>& keep);

LabeledState permute_factors(const LabeledState& s,
                             const std::vector<std::string>& new_order);
PureState permute_factors(const PureState& s,
                          const std::vector<std::string>& new_order);

/// Purification of rho on (ref_label, original factors). The reference
/// factor has the same dimension as rho; surplus Schmidt coefficients
/// are zero.
PureState purify(const LabeledState& rho, const std::string& ref_label);

/// Uhlmann fidelity (tr sqrt(sqrt(rho) sigma sqrt(rho)))^2 in [0,1].
double fidelity(const LabeledState& rho, const LabeledState& sigma);

/// sum_b |b>|b> / sqrt(dim) on two dim-`dim` factors.
PureState maximally_entangled(Index dim, const std::string& label_a,
                              const std::string& label_b);

/// Block-diagonal cq state sum_x p(x) |x><x| (x) phi_x.
LabeledState cq_state(const Ensemble& ensemble,
                      const std::string& classical_label);

/// Same block-diagonal assembly for mixed components.
LabeledState cq_mix(const std::vector<double>& probs,
                    const std::vector<LabeledState>& states,
                    const std::string& classical_label);

}  // namespace qmac

#endif
