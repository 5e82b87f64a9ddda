// This code is licensed under the Apache License, Version 2.0. You may
// obtain a copy of this license in the LICENSE.txt file in the root directory
// of this source tree or at http://www.apache.org/licenses/LICENSE-2.0.

#ifndef QMAC_LAYOUT_HPP
#define QMAC_LAYOUT_HPP

#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Core>

#include "qmac/errors.hpp"

namespace qmac {

using Index = Eigen::Index;

// Numerical tolerances used throughout the toolkit.
namespace tol {
inline constexpr double herm = 1e-9;
inline constexpr double trace = 1e-9;
inline constexpr double norm = 1e-9;
inline constexpr double prob = 1e-9;
inline constexpr double psd = 1e-9;
inline constexpr double recon = 1e-8;
inline constexpr double cptp = 1e-8;
inline constexpr double entropic = 1e-7;
inline constexpr double cq = 1e-9;
inline constexpr double geom = 1e-7;
inline constexpr double eig_floor = 1e-12;
inline constexpr Index max_dim = 4096;
inline constexpr Index max_kraus = 4096;
}  // namespace tol

/// One named tensor factor of a composite Hilbert space.
struct Factor {
  std::string label;
  Index dim = 0;
};

/// Ordered list of named tensor factors. Composite basis indices are
/// row-major over the factor indices, leftmost factor most significant.
class FactorLayout {
 public:
  FactorLayout() = default;
  explicit FactorLayout(std::vector<Factor> factors);

  static FactorLayout concat(const FactorLayout& a, const FactorLayout& b);

  Index dim() const { return dim_; }
  std::size_t size() const { return factors_.size(); }
  const Factor& operator[](std::size_t i) const { return factors_[i]; }
  const std::vector<Factor>& factors() const { return factors_; }

  bool has(std::string_view label) const;
  std::size_t index_of(std::string_view label) const;  // throws UnknownLabel
  Index dim_of(std::string_view label) const;
  std::vector<std::string> labels() const;
  Index dim_of_subset(const std::vector<std::string>& subset) const;

  /// Factors named in `keep`, in their original order.
  FactorLayout restricted(const std::vector<std::string>& keep) const;
  bool disjoint_from(const FactorLayout& other) const;

  bool operator==(const FactorLayout& other) const;

 private:
  std::vector<Factor> factors_;
  Index dim_ = 1;
};

/// Row-major strides of each factor within the composite index.
std::vector<Index> layout_strides(const FactorLayout& layout);

/// Decomposition of every composite index into a kept part and a traced
/// part. Kept factors keep their original relative order.
struct SubsystemSplit {
  Index keep_dim = 1;
  Index rest_dim = 1;
  std::vector<Index> keep_index;  // size layout.dim()
  std::vector<Index> rest_index;
};
SubsystemSplit split_indices(const FactorLayout& layout,
                             const std::vector<std::string>& keep);

/// Index map realizing a factor reordering: result[new_composite] is the
/// old composite index holding the same basis element.
std::vector<Index> permuted_indices(const FactorLayout& layout,
                                    const std::vector<std::string>& new_order);

}  // namespace qmac

#endif
