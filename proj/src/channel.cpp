// This code is licensed under the Apache License, Version 2.0. You may
// obtain a copy of this license in the LICENSE.txt file in the root directory
// of this source tree or at http://www.apache.org/licenses/LICENSE-2.0.

#include "qmac/channel.hpp"

#include <algorithm>
#include <cmath>

namespace qmac {

namespace {

Matrix kron(const Matrix& a, const Matrix& b) {
  Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Index i = 0; i < a.rows(); ++i)
    for (Index j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

double completeness_residual_of(const std::vector<Matrix>& kraus, Index in_dim) {
  Matrix acc = Matrix::Zero(in_dim, in_dim);
  for (const auto& k : kraus) acc += k.adjoint() * k;
  return (acc - Matrix::Identity(in_dim, in_dim)).cwiseAbs().maxCoeff();
}

void check_kraus_shapes(const std::vector<Matrix>& kraus, Index out_dim,
                        Index in_dim) {
  if (kraus.empty()) throw DimMismatch("channel needs at least one Kraus operator");
  for (const auto& k : kraus)
    if (k.rows() != out_dim || k.cols() != in_dim)
      throw DimMismatch("Kraus operator shape does not match layouts");
}

FactorLayout relabeled(const FactorLayout& layout, int copy) {
  std::vector<Factor> fs;
  for (const auto& f : layout.factors())
    fs.push_back({f.label + std::to_string(copy), f.dim});
  return FactorLayout(std::move(fs));
}

}  // namespace

KrausChannel::KrausChannel(FactorLayout in_layout, FactorLayout out_layout,
                           std::vector<Matrix> kraus)
    : in_layout_(std::move(in_layout)),
      out_layout_(std::move(out_layout)),
      kraus_(std::move(kraus)) {
  check_kraus_shapes(kraus_, out_layout_.dim(), in_layout_.dim());
  const double res = completeness_residual_of(kraus_, in_layout_.dim());
  if (res > tol::cptp)
    throw CompletenessViolation("sum K^dag K deviates from identity by " +
                                std::to_string(res));
}

double KrausChannel::completeness_residual() const {
  return completeness_residual_of(kraus_, in_dim());
}

Instrument::Instrument(FactorLayout in_layout, FactorLayout out_layout,
                       std::vector<std::vector<Matrix>> components,
                       std::string classical_label)
    : in_layout_(std::move(in_layout)),
      out_layout_(std::move(out_layout)),
      components_(std::move(components)),
      classical_label_(std::move(classical_label)) {
  if (components_.empty())
    throw DimMismatch("instrument needs at least one component");
  std::vector<Matrix> pooled;
  for (const auto& comp : components_)
    pooled.insert(pooled.end(), comp.begin(), comp.end());
  check_kraus_shapes(pooled, out_layout_.dim(), in_layout_.dim());
  const double res = completeness_residual_of(pooled, in_layout_.dim());
  if (res > tol::cptp)
    throw CompletenessViolation(
        "instrument components sum to a non-trace-preserving map (residual " +
        std::to_string(res) + ")");
  if (out_layout_.has(classical_label_))
    throw DuplicateLabel("classical label collides with an output factor");
}

KrausChannel Instrument::summed() const {
  std::vector<Matrix> pooled;
  for (const auto& comp : components_)
    pooled.insert(pooled.end(), comp.begin(), comp.end());
  return KrausChannel(in_layout_, out_layout_, std::move(pooled));
}

KrausChannel Instrument::as_channel() const {
  const Index n = Index(components_.size());
  const Index d_out = out_layout_.dim();
  std::vector<Matrix> lifted;
  for (Index x = 0; x < n; ++x) {
    for (const auto& k : components_[x]) {
      Matrix m = Matrix::Zero(n * d_out, in_layout_.dim());
      m.block(x * d_out, 0, d_out, in_layout_.dim()) = k;
      lifted.push_back(std::move(m));
    }
  }
  std::vector<Factor> fs{{classical_label_, n}};
  for (const auto& f : out_layout_.factors()) fs.push_back(f);
  return KrausChannel(in_layout_, FactorLayout(std::move(fs)),
                      std::move(lifted));
}

LabeledState apply(const KrausChannel& ch, const LabeledState& s,
                   const std::vector<std::string>& targets) {
  if (targets.size() != ch.in_layout().size())
    throw DimMismatch("target count does not match channel input factors");
  for (std::size_t i = 0; i < targets.size(); ++i) {
    if (std::count(targets.begin(), targets.end(), targets[i]) != 1)
      throw BadPermutation("target '" + targets[i] + "' repeated");
    if (s.layout().dim_of(targets[i]) != ch.in_layout()[i].dim)
      throw DimMismatch("target '" + targets[i] +
                        "' does not match channel input dimension");
  }

  // Untouched factors, in original order.
  std::vector<std::string> rest;
  for (const auto& f : s.layout().factors())
    if (std::find(targets.begin(), targets.end(), f.label) == targets.end())
      rest.push_back(f.label);
  for (const auto& f : ch.out_layout().factors())
    if (std::find(rest.begin(), rest.end(), f.label) != rest.end())
      throw LabelCollision("output label '" + f.label +
                           "' already present among untouched factors");

  // Permute targets to the front in channel order.
  std::vector<std::string> front_order = targets;
  front_order.insert(front_order.end(), rest.begin(), rest.end());
  const LabeledState sp = permute_factors(s, front_order);

  const Index d_rest = s.layout().dim() / ch.in_dim();
  const Matrix id_rest = Matrix::Identity(d_rest, d_rest);
  Matrix acc = Matrix::Zero(ch.out_dim() * d_rest, ch.out_dim() * d_rest);
  for (const auto& k : ch.kraus()) {
    const Matrix lifted = kron(k, id_rest);
    acc += lifted * sp.matrix() * lifted.adjoint();
  }
  acc = 0.5 * (acc + Matrix(acc.adjoint()));

  FactorLayout mid = FactorLayout::concat(ch.out_layout(),
                                          s.layout().restricted(rest));
  LabeledState out(mid, std::move(acc));

  // Permute back: the output block takes the earliest target's position.
  std::vector<std::string> final_order;
  bool inserted = false;
  for (const auto& f : s.layout().factors()) {
    if (std::find(targets.begin(), targets.end(), f.label) != targets.end()) {
      if (!inserted) {
        for (const auto& g : ch.out_layout().factors())
          final_order.push_back(g.label);
        inserted = true;
      }
      continue;
    }
    final_order.push_back(f.label);
  }
  return permute_factors(out, final_order);
}

LabeledState apply_instrument(const Instrument& ins, const LabeledState& s,
                              const std::vector<std::string>& targets) {
  return apply(ins.as_channel(), s, targets);
}

KrausChannel tensor_power(const KrausChannel& ch, int k) {
  if (k < 1) throw SizeOverflow("tensor power needs k >= 1");
  if (k == 1) return ch;
  double dim_in = 1, dim_out = 1, count = 1;
  for (int i = 0; i < k; ++i) {
    dim_in *= double(ch.in_dim());
    dim_out *= double(ch.out_dim());
    count *= double(ch.kraus().size());
  }
  if (dim_in > double(tol::max_dim) || dim_out > double(tol::max_dim))
    throw SizeOverflow("tensor power dimension exceeds cap");
  if (count > double(tol::max_kraus))
    throw SizeOverflow("tensor power Kraus count exceeds cap");

  FactorLayout in_l = relabeled(ch.in_layout(), 1);
  FactorLayout out_l = relabeled(ch.out_layout(), 1);
  std::vector<Matrix> ops = ch.kraus();
  for (int copy = 2; copy <= k; ++copy) {
    in_l = FactorLayout::concat(in_l, relabeled(ch.in_layout(), copy));
    out_l = FactorLayout::concat(out_l, relabeled(ch.out_layout(), copy));
    std::vector<Matrix> next;
    next.reserve(ops.size() * ch.kraus().size());
    for (const auto& a : ops)
      for (const auto& b : ch.kraus()) next.push_back(kron(a, b));
    ops = std::move(next);
  }
  return KrausChannel(std::move(in_l), std::move(out_l), std::move(ops));
}

KrausChannel identity_channel(const FactorLayout& layout) {
  return KrausChannel(layout, layout,
                      {Matrix::Identity(layout.dim(), layout.dim())});
}

KrausChannel collective_qubit_flip(double p) {
  if (p < 0.0 || p > 1.0) throw BadProbability("flip probability outside [0,1]");
  Matrix xx = Matrix::Zero(4, 4);
  xx(0, 3) = xx(3, 0) = xx(1, 2) = xx(2, 1) = 1.0;
  std::vector<Matrix> ops;
  if (p < 1.0) ops.push_back(std::sqrt(1.0 - p) * Matrix::Identity(4, 4));
  if (p > 0.0) ops.push_back(std::sqrt(p) * xx);
  return KrausChannel(FactorLayout({{"A'", 2}, {"B'", 2}}),
                      FactorLayout({{"CA", 2}, {"CB", 2}}), std::move(ops));
}

KrausChannel bit_flip(double p) {
  if (p < 0.0 || p > 1.0) throw BadProbability("flip probability outside [0,1]");
  Matrix x = Matrix::Zero(2, 2);
  x(0, 1) = x(1, 0) = 1.0;
  std::vector<Matrix> ops;
  if (p < 1.0) ops.push_back(std::sqrt(1.0 - p) * Matrix::Identity(2, 2));
  if (p > 0.0) ops.push_back(std::sqrt(p) * x);
  return KrausChannel(FactorLayout({{"A'", 2}}), FactorLayout({{"C", 2}}),
                      std::move(ops));
}

KrausChannel erasure_mac() {
  // Outputs: CA qubit (Alice's dephased bit), CB qutrit {|0>,|1>,|e>}.
  Matrix embed = Matrix::Zero(3, 2);
  embed(0, 0) = embed(1, 1) = 1.0;
  Matrix p0 = Matrix::Zero(2, 2), p1 = Matrix::Zero(2, 2);
  p0(0, 0) = 1.0;
  p1(1, 1) = 1.0;
  std::vector<Matrix> ops;
  ops.push_back(kron(p0, embed));
  for (Index b = 0; b < 2; ++b) {
    Matrix erase = Matrix::Zero(3, 2);
    erase(2, b) = 1.0;
    ops.push_back(kron(p1, erase));
  }
  return KrausChannel(FactorLayout({{"A'", 2}, {"B'", 2}}),
                      FactorLayout({{"CA", 2}, {"CB", 3}}), std::move(ops));
}

}  // namespace qmac
