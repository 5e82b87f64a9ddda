// This code is licensed under the Apache License, Version 2.0. You may
// obtain a copy of this license in the LICENSE.txt file in the root directory
// of this source tree or at http://www.apache.org/licenses/LICENSE-2.0.

#ifndef QMAC_CHANNEL_HPP
#define QMAC_CHANNEL_HPP

#include <string>
#include <vector>

#include "qmac/state.hpp"

namespace qmac {

/// Trace-preserving completely positive map in Kraus form. Construction
/// checks sum_i K_i^dag K_i = 1 within tol::cptp.
class KrausChannel {
 public:
  KrausChannel(FactorLayout in_layout, FactorLayout out_layout,
               std::vector<Matrix> kraus);

  const FactorLayout& in_layout() const { return in_layout_; }
  const FactorLayout& out_layout() const { return out_layout_; }
  const std::vector<Matrix>& kraus() const { return kraus_; }
  Index in_dim() const { return in_layout_.dim(); }
  Index out_dim() const { return out_layout_.dim(); }

  /// max-norm of sum K^dag K - 1.
  double completeness_residual() const;

 private:
  FactorLayout in_layout_, out_layout_;
  std::vector<Matrix> kraus_;
};

/// Channel with a classical outcome record: a list of completely positive
/// components whose sum is trace preserving.
class Instrument {
 public:
  Instrument(FactorLayout in_layout, FactorLayout out_layout,
             std::vector<std::vector<Matrix>> components,
             std::string classical_label);

  const FactorLayout& in_layout() const { return in_layout_; }
  const FactorLayout& out_layout() const { return out_layout_; }
  const std::vector<std::vector<Matrix>>& components() const {
    return components_;
  }
  const std::string& classical_label() const { return classical_label_; }
  std::size_t outcome_count() const { return components_.size(); }

  /// The trace-preserving channel sum_x N_x, forgetting the outcome.
  KrausChannel summed() const;

  /// tau -> sum_x |x><x| (x) N_x(tau) as an ordinary channel.
  KrausChannel as_channel() const;

 private:
  FactorLayout in_layout_, out_layout_;
  std::vector<std::vector<Matrix>> components_;
  std::string classical_label_;
};

/// Apply `ch` to the named target factors of `s`, acting as the identity
/// elsewhere. Targets must match the channel input layout in order; the
/// output factors take the targets' place in the layout.
LabeledState apply(const KrausChannel& ch, const LabeledState& s,
                   const std::vector<std::string>& targets);

LabeledState apply_instrument(const Instrument& ins, const LabeledState& s,
                              const std::vector<std::string>& targets);

/// k-fold tensor power. Factor labels gain a copy suffix for k >= 2;
/// k = 1 returns the channel unchanged.
KrausChannel tensor_power(const KrausChannel& ch, int k);

KrausChannel identity_channel(const FactorLayout& layout);

/// Two-qubit collective flip: rho -> (1-p) rho + p (XX) rho (XX), inputs
/// A', B', outputs CA, CB.
KrausChannel collective_qubit_flip(double p);

/// Single-qubit flip rho -> (1-p) rho + p X rho X, input A', output C.
KrausChannel bit_flip(double p);

/// Two-sender erasure channel: Alice's bit is delivered dephased on CA;
/// Bob's qubit rides to the qutrit CB but is replaced by the erasure
/// flag |e> whenever Alice sends 1.
KrausChannel erasure_mac();

}  // namespace qmac

#endif
