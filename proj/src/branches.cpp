// This code is licensed under the Apache License, Version 2.0. You may
// obtain a copy of this license in the LICENSE.txt file in the root directory
// of this source tree or at http://www.apache.org/licenses/LICENSE-2.0.

#include "qmac/branches.hpp"

#include <algorithm>
#include <cmath>

#include <Eigen/Eigenvalues>

#include "qmac/entropic.hpp"

namespace qmac {

namespace {

// Scatter a branch vector into a keep_dim x rest_dim matrix.
Matrix slice_matrix(const Vector& v, const SubsystemSplit& sp) {
  Matrix t = Matrix::Zero(sp.keep_dim, sp.rest_dim);
  for (Index g = 0; g < v.size(); ++g)
    t(sp.keep_index[g], sp.rest_index[g]) = v(g);
  return t;
}

Eigen::VectorXd reduced_eigenvalues(const std::vector<const Vector*>& vecs,
                                    const SubsystemSplit& sp) {
  const Index n_slices = Index(vecs.size()) * sp.rest_dim;
  if (n_slices < sp.keep_dim) {
    // Nonzero spectrum of sum_i T_i T_i^dag equals that of the Gram matrix
    // of all slice rows.
    Matrix s(n_slices, sp.keep_dim);
    Index row = 0;
    for (const Vector* v : vecs) {
      Matrix t = slice_matrix(*v, sp);
      s.block(row, 0, sp.rest_dim, sp.keep_dim) = t.transpose();
      row += sp.rest_dim;
    }
    Matrix gram = s.conjugate() * s.transpose();
    Eigen::SelfAdjointEigenSolver<Matrix> es(gram, Eigen::EigenvaluesOnly);
    return es.eigenvalues();
  }
  Matrix rho = Matrix::Zero(sp.keep_dim, sp.keep_dim);
  for (const Vector* v : vecs) {
    Matrix t = slice_matrix(*v, sp);
    rho.noalias() += t * t.adjoint();
  }
  Eigen::SelfAdjointEigenSolver<Matrix> es(rho, Eigen::EigenvaluesOnly);
  return es.eigenvalues();
}

}  // namespace

LabeledState PureBranches::to_state() const {
  Matrix m = Matrix::Zero(layout.dim(), layout.dim());
  for (const auto& v : vecs) m.noalias() += v * v.adjoint();
  return LabeledState(layout, std::move(m));
}

PureBranches apply_to_pure(const KrausChannel& ch, const PureState& in,
                           const std::vector<std::string>& targets) {
  if (targets.size() != ch.in_layout().size())
    throw DimMismatch("target count does not match channel input factors");
  for (std::size_t i = 0; i < targets.size(); ++i)
    if (in.layout().dim_of(targets[i]) != ch.in_layout()[i].dim)
      throw DimMismatch("target '" + targets[i] +
                        "' does not match channel input dimension");
  std::vector<std::string> rest;
  for (const auto& f : in.layout().factors())
    if (std::find(targets.begin(), targets.end(), f.label) == targets.end())
      rest.push_back(f.label);
  for (const auto& f : ch.out_layout().factors())
    if (std::find(rest.begin(), rest.end(), f.label) != rest.end())
      throw LabelCollision("output label '" + f.label +
                           "' already present among untouched factors");

  std::vector<std::string> front_order = targets;
  front_order.insert(front_order.end(), rest.begin(), rest.end());
  const PureState sp = permute_factors(in, front_order);

  const Index d_rest = in.layout().dim() / ch.in_dim();
  using RowMat =
      Eigen::Matrix<cxd, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
  Eigen::Map<const RowMat> v(sp.vec().data(), ch.in_dim(), d_rest);

  PureBranches out;
  out.layout = FactorLayout::concat(ch.out_layout(),
                                    in.layout().restricted(rest));
  out.vecs.reserve(ch.kraus().size());
  for (const auto& k : ch.kraus()) {
    RowMat branch = k * v;
    out.vecs.emplace_back(
        Eigen::Map<const Vector>(branch.data(), branch.size()));
  }
  return out;
}

Matrix reduced_density(const PureBranches& br,
                       const std::vector<std::string>& keep) {
  const SubsystemSplit sp = split_indices(br.layout, keep);
  Matrix rho = Matrix::Zero(sp.keep_dim, sp.keep_dim);
  for (const auto& v : br.vecs) {
    Matrix t = slice_matrix(v, sp);
    rho.noalias() += t * t.adjoint();
  }
  return rho;
}

double subsystem_entropy(const PureBranches& br,
                         const std::vector<std::string>& keep) {
  const SubsystemSplit sp = split_indices(br.layout, keep);
  std::vector<const Vector*> ptrs;
  ptrs.reserve(br.vecs.size());
  for (const auto& v : br.vecs) ptrs.push_back(&v);
  return entropy_from_eigenvalues(reduced_eigenvalues(ptrs, sp));
}

LabeledState CqBranches::to_state() const {
  std::vector<LabeledState> states;
  states.reserve(blocks.size());
  for (const auto& b : blocks) states.push_back(b.to_state());
  return cq_mix(probs, states, classical_label);
}

double subsystem_entropy(const CqBranches& cq,
                         const std::vector<std::string>& labels) {
  const bool with_x =
      std::find(labels.begin(), labels.end(), cq.classical_label) !=
      labels.end();
  if (!with_x) {
    // Marginal without the classical index: pool sqrt(p_x)-scaled branches.
    const SubsystemSplit sp = split_indices(cq.blocks.front().layout, labels);
    std::vector<Vector> scaled;
    std::vector<const Vector*> ptrs;
    for (std::size_t x = 0; x < cq.blocks.size(); ++x)
      for (const auto& v : cq.blocks[x].vecs)
        scaled.push_back(std::sqrt(cq.probs[x]) * v);
    for (const auto& v : scaled) ptrs.push_back(&v);
    return entropy_from_eigenvalues(reduced_eigenvalues(ptrs, sp));
  }
  // Block diagonal over x: the spectrum is the union of the per-block
  // spectra scaled by p_x.
  std::vector<std::string> quantum;
  for (const auto& l : labels)
    if (l != cq.classical_label) quantum.push_back(l);
  double h = 0.0;
  for (std::size_t x = 0; x < cq.blocks.size(); ++x) {
    if (cq.probs[x] <= 0.0) continue;
    if (quantum.empty()) {
      h -= cq.probs[x] * std::log2(cq.probs[x]);
      continue;
    }
    const SubsystemSplit sp = split_indices(cq.blocks[x].layout, quantum);
    std::vector<const Vector*> ptrs;
    for (const auto& v : cq.blocks[x].vecs) ptrs.push_back(&v);
    Eigen::VectorXd ev = reduced_eigenvalues(ptrs, sp);
    for (Index i = 0; i < ev.size(); ++i) {
      const double lam = cq.probs[x] * ev(i);
      if (lam > tol::eig_floor) h -= lam * std::log2(lam);
    }
  }
  return h;
}

}  // namespace qmac
