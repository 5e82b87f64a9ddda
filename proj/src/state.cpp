// This code is licensed under the Apache License, Version 2.0. You may
// obtain a copy of this license in the LICENSE.txt file in the root directory
// of this source tree or at http://www.apache.org/licenses/LICENSE-2.0.

#include "qmac/state.hpp"

#include <algorithm>
#include <cmath>

#include <Eigen/Eigenvalues>

namespace qmac {

namespace {

Matrix kron(const Matrix& a, const Matrix& b) {
  Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Index i = 0; i < a.rows(); ++i)
    for (Index j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

}  // namespace

PureState::PureState(FactorLayout layout, Vector vec)
    : layout_(std::move(layout)), vec_(std::move(vec)) {
  if (vec_.size() != layout_.dim())
    throw DimMismatch("vector length does not match layout dimension");
  if (std::abs(vec_.norm() - 1.0) > tol::norm)
    throw InvalidState("pure state vector is not normalized");
}

LabeledState PureState::density() const {
  return LabeledState(layout_, vec_ * vec_.adjoint());
}

LabeledState::LabeledState(FactorLayout layout, Matrix mat)
    : layout_(std::move(layout)), mat_(std::move(mat)) {
  if (mat_.rows() != mat_.cols() || mat_.rows() != layout_.dim())
    throw DimMismatch("matrix dimension does not match layout dimension");
  const double herm_residual = (mat_ - mat_.adjoint()).cwiseAbs().maxCoeff();
  if (herm_residual > tol::herm)
    throw InvalidState("matrix is not Hermitian (residual " +
                       std::to_string(herm_residual) + ")");
  if (std::abs(mat_.trace().real() - 1.0) > tol::trace ||
      std::abs(mat_.trace().imag()) > tol::trace)
    throw InvalidState("matrix does not have unit trace");
  Eigen::SelfAdjointEigenSolver<Matrix> es(mat_, Eigen::EigenvaluesOnly);
  if (es.eigenvalues().minCoeff() < -tol::psd)
    throw InvalidState("matrix is not positive semidefinite (min eigenvalue " +
                       std::to_string(es.eigenvalues().minCoeff()) + ")");
}

Ensemble::Ensemble(std::vector<double> probs, std::vector<PureState> states)
    : probs_(std::move(probs)), states_(std::move(states)) {
  if (probs_.empty() || probs_.size() != states_.size())
    throw BadDistribution("ensemble needs matching nonempty probability and state lists");
  double sum = 0.0;
  for (double p : probs_) {
    if (p < -tol::prob) throw BadDistribution("negative ensemble probability");
    sum += p;
  }
  if (std::abs(sum - 1.0) > tol::prob)
    throw BadDistribution("ensemble probabilities sum to " + std::to_string(sum));
  for (const auto& s : states_)
    if (!(s.layout() == states_.front().layout()))
      throw LayoutMismatch("ensemble states must share one layout");
}

LabeledState tensor(const LabeledState& a, const LabeledState& b) {
  return LabeledState(FactorLayout::concat(a.layout(), b.layout()),
                      kron(a.matrix(), b.matrix()));
}

PureState tensor(const PureState& a, const PureState& b) {
  Vector v(a.dim() * b.dim());
  for (Index i = 0; i < a.dim(); ++i)
    v.segment(i * b.dim(), b.dim()) = a.vec()(i) * b.vec();
  return PureState(FactorLayout::concat(a.layout(), b.layout()), std::move(v));
}

Matrix partial_trace_matrix(const Matrix& m, const FactorLayout& layout,
                            const std::vector<std::string>& keep) {
  const SubsystemSplit sp = split_indices(layout, keep);
  Matrix out = Matrix::Zero(sp.keep_dim, sp.keep_dim);
  // rho'(k,k') = sum_r rho((k,r),(k',r)); indices are interleaved, so walk
  // rows once and columns only within the matching traced part.
  std::vector<std::vector<Index>> by_rest(sp.rest_dim);
  for (Index g = 0; g < layout.dim(); ++g)
    by_rest[sp.rest_index[g]].push_back(g);
  for (const auto& group : by_rest)
    for (Index gr : group)
      for (Index gc : group)
        out(sp.keep_index[gr], sp.keep_index[gc]) += m(gr, gc);
  return out;
}

LabeledState partial_trace(const LabeledState& s,
                           const std::vector<std::string>& keep) {
  return LabeledState(s.layout().restricted(keep),
                      partial_trace_matrix(s.matrix(), s.layout(), keep));
}

LabeledState permute_factors(const LabeledState& s,
                             const std::vector<std::string>& new_order) {
  const auto map = permuted_indices(s.layout(), new_order);
  Matrix out(s.dim(), s.dim());
  for (Index i = 0; i < s.dim(); ++i)
    for (Index j = 0; j < s.dim(); ++j) out(i, j) = s.matrix()(map[i], map[j]);
  std::vector<Factor> fs;
  for (const auto& l : new_order)
    fs.push_back(s.layout()[s.layout().index_of(l)]);
  return LabeledState(FactorLayout(std::move(fs)), std::move(out));
}

PureState permute_factors(const PureState& s,
                          const std::vector<std::string>& new_order) {
  const auto map = permuted_indices(s.layout(), new_order);
  Vector out(s.dim());
  for (Index i = 0; i < s.dim(); ++i) out(i) = s.vec()(map[i]);
  std::vector<Factor> fs;
  for (const auto& l : new_order)
    fs.push_back(s.layout()[s.layout().index_of(l)]);
  return PureState(FactorLayout(std::move(fs)), std::move(out));
}

PureState purify(const LabeledState& rho, const std::string& ref_label) {
  if (rho.layout().has(ref_label))
    throw DuplicateLabel("reference label '" + ref_label + "' already in layout");
  Eigen::SelfAdjointEigenSolver<Matrix> es(rho.matrix());
  const Index d = rho.dim();
  Vector v = Vector::Zero(d * d);
  // |Phi> = sum_i sqrt(lambda_i) |i>_ref (x) |u_i>, reference index most
  // significant per the row-major convention.
  for (Index i = 0; i < d; ++i) {
    const double lam = std::max(es.eigenvalues()(i), 0.0);
    if (lam <= 0.0) continue;
    v.segment(i * d, d) = std::sqrt(lam) * es.eigenvectors().col(i);
  }
  v /= v.norm();
  std::vector<Factor> fs{{ref_label, d}};
  for (const auto& f : rho.layout().factors()) fs.push_back(f);
  return PureState(FactorLayout(std::move(fs)), std::move(v));
}

double fidelity(const LabeledState& rho, const LabeledState& sigma) {
  if (!(rho.layout() == sigma.layout()))
    throw LayoutMismatch("fidelity requires identical layouts");
  Eigen::SelfAdjointEigenSolver<Matrix> es(rho.matrix());
  Eigen::VectorXd sq = es.eigenvalues().cwiseMax(0.0).cwiseSqrt();
  const Matrix sqrt_rho =
      es.eigenvectors() * sq.asDiagonal() * es.eigenvectors().adjoint();
  Matrix inner = sqrt_rho * sigma.matrix() * sqrt_rho;
  inner = 0.5 * (inner + Matrix(inner.adjoint()));
  Eigen::SelfAdjointEigenSolver<Matrix> es2(inner, Eigen::EigenvaluesOnly);
  const double root_sum = es2.eigenvalues().cwiseMax(0.0).cwiseSqrt().sum();
  return std::min(root_sum * root_sum, 1.0);
}

PureState maximally_entangled(Index dim, const std::string& label_a,
                              const std::string& label_b) {
  if (dim < 1) throw DimMismatch("dimension must be positive");
  Vector v = Vector::Zero(dim * dim);
  for (Index b = 0; b < dim; ++b) v(b * dim + b) = 1.0 / std::sqrt(double(dim));
  return PureState(FactorLayout({{label_a, dim}, {label_b, dim}}), std::move(v));
}

LabeledState cq_state(const Ensemble& ensemble,
                      const std::string& classical_label) {
  std::vector<double> probs;
  std::vector<LabeledState> states;
  for (std::size_t x = 0; x < ensemble.size(); ++x) {
    probs.push_back(ensemble.prob(x));
    states.push_back(ensemble.state(x).density());
  }
  return cq_mix(probs, states, classical_label);
}

LabeledState cq_mix(const std::vector<double>& probs,
                    const std::vector<LabeledState>& states,
                    const std::string& classical_label) {
  if (probs.empty() || probs.size() != states.size())
    throw BadDistribution("cq mixture needs matching nonempty lists");
  double sum = 0.0;
  for (double p : probs) {
    if (p < -tol::prob) throw BadDistribution("negative probability");
    sum += p;
  }
  if (std::abs(sum - 1.0) > tol::prob)
    throw BadDistribution("probabilities sum to " + std::to_string(sum));
  const FactorLayout& qlayout = states.front().layout();
  for (const auto& s : states)
    if (!(s.layout() == qlayout))
      throw LayoutMismatch("cq mixture states must share one layout");
  if (qlayout.has(classical_label))
    throw DuplicateLabel("classical label collides with a quantum factor");
  const Index n = Index(probs.size());
  const Index d = qlayout.dim();
  Matrix out = Matrix::Zero(n * d, n * d);
  for (Index x = 0; x < n; ++x)
    out.block(x * d, x * d, d, d) = probs[x] * states[x].matrix();
  std::vector<Factor> fs{{classical_label, n}};
  for (const auto& f : qlayout.factors()) fs.push_back(f);
  return LabeledState(FactorLayout(std::move(fs)), std::move(out));
}

}  // namespace qmac
