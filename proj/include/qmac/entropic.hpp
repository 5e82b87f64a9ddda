// This code is licensed under the Apache License, Version 2.0. You may
// obtain a copy of this license in the LICENSE.txt file in the root directory
// of this source tree or at http://www.apache.org/licenses/LICENSE-2.0.

#ifndef QMAC_ENTROPIC_HPP
#define QMAC_ENTROPIC_HPP

#include <vector>

#include "qmac/channel.hpp"
#include "qmac/state.hpp"

// Information functionals. All logarithms are base 2; every quantity is in
// bits (rates are bits or qubits per channel use).

namespace qmac {

/// -sum lambda log2 lambda, ignoring eigenvalues at or below tol::eig_floor.
double entropy_from_eigenvalues(const Eigen::VectorXd& eigenvalues);

/// Von Neumann entropy of the reduced state on `subsystem`.
double entropy(const LabeledState& s, const std::vector<std::string>& subsystem);

/// H(p) = -p log2 p - (1-p) log2 (1-p), exactly 0 at the endpoints.
double binary_entropy(double p);

/// I(X;B) = H(X) + H(B) - H(XB).
double mutual_information(const LabeledState& s,
                          const std::vector<std::string>& x,
                          const std::vector<std::string>& b);

/// I(X;B|Z) = H(XZ) + H(BZ) - H(Z) - H(XBZ).
double conditional_mutual_information(const LabeledState& s,
                                      const std::vector<std::string>& x,
                                      const std::vector<std::string>& b,
                                      const std::vector<std::string>& z);

/// I_c(A>B) = H(B) - H(AB).
double coherent_information(const LabeledState& s,
                            const std::vector<std::string>& a,
                            const std::vector<std::string>& b);

/// I_c(rho, N) = H(N(rho)) - H((1 (x) N)(Phi_rho)), evaluated through a
/// purification; independent of which purification is used.
double channel_coherent_information(const LabeledState& rho,
                                    const KrausChannel& ch);

/// I_c(A>BX) with a classical conditioner X: computed directly as
/// H(BX) - H(ABX) after validating that s is block diagonal in X.
double conditional_coherent_information(const LabeledState& s,
                                        const std::vector<std::string>& a,
                                        const std::vector<std::string>& b,
                                        const std::vector<std::string>& x);

}  // namespace qmac

#endif
