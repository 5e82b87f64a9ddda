// This code is licensed under the Apache License, Version 2.0. You may
// obtain a copy of this license in the LICENSE.txt file in the root directory
// of this source tree or at http://www.apache.org/licenses/LICENSE-2.0.

#include "qmac/layout.hpp"

#include <algorithm>
#include <set>

namespace qmac {

FactorLayout::FactorLayout(std::vector<Factor> factors)
    : factors_(std::move(factors)) {
  std::set<std::string> seen;
  for (const auto& f : factors_) {
    if (f.dim < 1) throw DimMismatch("factor '" + f.label + "' has dim < 1");
    if (!seen.insert(f.label).second)
      throw DuplicateLabel("duplicate factor label '" + f.label + "'");
    dim_ *= f.dim;
    if (dim_ > tol::max_dim)
      throw SizeOverflow("layout dimension exceeds cap of " +
                         std::to_string(tol::max_dim));
  }
}

FactorLayout FactorLayout::concat(const FactorLayout& a,
                                  const FactorLayout& b) {
  if (!a.disjoint_from(b))
    throw DuplicateLabel("layouts share a factor label");
  std::vector<Factor> fs = a.factors_;
  fs.insert(fs.end(), b.factors_.begin(), b.factors_.end());
  return FactorLayout(std::move(fs));
}

bool FactorLayout::has(std::string_view label) const {
  return std::any_of(factors_.begin(), factors_.end(),
                     [&](const Factor& f) { return f.label == label; });
}

std::size_t FactorLayout::index_of(std::string_view label) const {
  for (std::size_t i = 0; i < factors_.size(); ++i)
    if (factors_[i].label == label) return i;
  throw UnknownLabel("no factor labeled '" + std::string(label) + "'");
}

Index FactorLayout::dim_of(std::string_view label) const {
  return factors_[index_of(label)].dim;
}

std::vector<std::string> FactorLayout::labels() const {
  std::vector<std::string> out;
  out.reserve(factors_.size());
  for (const auto& f : factors_) out.push_back(f.label);
  return out;
}

Index FactorLayout::dim_of_subset(const std::vector<std::string>& subset) const {
  Index d = 1;
  for (const auto& l : subset) d *= dim_of(l);
  return d;
}

FactorLayout FactorLayout::restricted(
    const std::vector<std::string>& keep) const {
  for (const auto& l : keep) (void)index_of(l);
  std::vector<Factor> fs;
  for (const auto& f : factors_)
    if (std::find(keep.begin(), keep.end(), f.label) != keep.end())
      fs.push_back(f);
  return FactorLayout(std::move(fs));
}

bool FactorLayout::disjoint_from(const FactorLayout& other) const {
  for (const auto& f : other.factors_)
    if (has(f.label)) return false;
  return true;
}

bool FactorLayout::operator==(const FactorLayout& other) const {
  if (factors_.size() != other.factors_.size()) return false;
  for (std::size_t i = 0; i < factors_.size(); ++i)
    if (factors_[i].label != other.factors_[i].label ||
        factors_[i].dim != other.factors_[i].dim)
      return false;
  return true;
}

std::vector<Index> layout_strides(const FactorLayout& layout) {
  std::vector<Index> s(layout.size());
  Index acc = 1;
  for (std::size_t i = layout.size(); i-- > 0;) {
    s[i] = acc;
    acc *= layout[i].dim;
  }
  return s;
}

SubsystemSplit split_indices(const FactorLayout& layout,
                             const std::vector<std::string>& keep) {
  SubsystemSplit sp;
  const auto strides = layout_strides(layout);
  std::vector<bool> kept(layout.size(), false);
  for (const auto& l : keep) kept[layout.index_of(l)] = true;

  std::vector<Index> keep_stride(layout.size(), 0), rest_stride(layout.size(), 0);
  for (std::size_t i = layout.size(); i-- > 0;) {
    if (kept[i]) {
      keep_stride[i] = sp.keep_dim;
      sp.keep_dim *= layout[i].dim;
    } else {
      rest_stride[i] = sp.rest_dim;
      sp.rest_dim *= layout[i].dim;
    }
  }
  sp.keep_index.resize(layout.dim());
  sp.rest_index.resize(layout.dim());
  for (Index g = 0; g < layout.dim(); ++g) {
    Index k = 0, r = 0;
    for (std::size_t i = 0; i < layout.size(); ++i) {
      const Index digit = (g / strides[i]) % layout[i].dim;
      if (kept[i])
        k += digit * keep_stride[i];
      else
        r += digit * rest_stride[i];
    }
    sp.keep_index[g] = k;
    sp.rest_index[g] = r;
  }
  return sp;
}

std::vector<Index> permuted_indices(const FactorLayout& layout,
                                    const std::vector<std::string>& new_order) {
  if (new_order.size() != layout.size())
    throw BadPermutation("permutation has wrong number of labels");
  std::vector<std::size_t> src;  // position in old layout of each new slot
  std::vector<bool> used(layout.size(), false);
  for (const auto& l : new_order) {
    const std::size_t i = layout.index_of(l);
    if (used[i]) throw BadPermutation("label '" + l + "' repeated");
    used[i] = true;
    src.push_back(i);
  }
  const auto old_strides = layout_strides(layout);
  std::vector<Index> map(layout.dim());
  // Walk new composite indices digit by digit.
  std::vector<Index> new_dims(layout.size());
  for (std::size_t j = 0; j < src.size(); ++j) new_dims[j] = layout[src[j]].dim;
  for (Index g = 0; g < layout.dim(); ++g) {
    Index rem = g, old_idx = 0;
    for (std::size_t j = layout.size(); j-- > 0;) {
      const Index digit = rem % new_dims[j];
      rem /= new_dims[j];
      old_idx += digit * old_strides[src[j]];
    }
    map[g] = old_idx;
  }
  return map;
}

}  // namespace qmac
