#pragma once

#include <vector>

#include "shoda/algebra.hpp"
#include "shoda/random.hpp"

namespace testing_support {

inline double max_abs(const shoda::Matrix& m) { return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff(); }

inline double max_abs_diff(const shoda::Element& a, const shoda::Element& b) {
  double d = 0.0;
  for (int i = 0; i < a.spec().num_blocks(); ++i) d = std::max(d, max_abs(a.block(i) - b.block(i)));
  return d;
}

/// Every ordered list of block dimensions with sum <= max_order and at most
/// max_blocks blocks.
inline std::vector<shoda::AlgebraSpec> all_specs(int max_order, int max_blocks) {
  std::vector<shoda::AlgebraSpec> out;
  std::vector<int> current;
  auto recurse = [&](auto&& self, int remaining) -> void {
    if (!current.empty()) out.emplace_back(current);
    if (static_cast<int>(current.size()) == max_blocks) return;
    for (int n = 1; n <= remaining; ++n) {
      current.push_back(n);
      self(self, remaining - n);
      current.pop_back();
    }
  };
  recurse(recurse, max_order);
  return out;
}

/// Block dimensions in nonincreasing order: one representative per
/// isomorphism class.
inline std::vector<shoda::AlgebraSpec> partition_specs(int max_order, int max_blocks) {
  std::vector<shoda::AlgebraSpec> out;
  for (auto& s : all_specs(max_order, max_blocks)) {
    const auto& d = s.block_dims();
    if (std::is_sorted(d.rbegin(), d.rend())) out.push_back(s);
  }
  return out;
}

}  // namespace testing_support
