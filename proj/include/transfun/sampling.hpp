#pragma once

#include <random>
#include <vector>

#include "transfun/measure.hpp"

namespace transfun {

using Rng = std::mt19937_64;

/// Random subset; each point joins with probability `density`.
inline PointSet random_subset(const SpacePtr& space, Rng& rng, double density = 0.5) {
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  std::vector<point_id> ids;
  for (point_id p = 0; p < space->size(); ++p)
    if (coin(rng) < density) ids.push_back(p);
  return PointSet(space, std::move(ids));
}

/// Random nonnegative measure with nonempty support.
inline Measure random_measure(const SpacePtr& space, Rng& rng, double density = 0.6) {
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  std::uniform_real_distribution<double> mass(0.1, 2.0);
  std::vector<double> w(space->size(), 0.0);
  bool any = false;
  for (point_id p = 0; p < space->size(); ++p)
    if (coin(rng) < density) {
      w[p] = mass(rng);
      any = true;
    }
  if (!any) w[rng() % space->size()] = mass(rng);
  return Measure(space, std::move(w));
}

/// Splits mu into k orthogonal parts by assigning each support point to a
/// random block; empty blocks are dropped.
inline std::vector<Measure> random_orthogonal_decomposition(const Measure& mu, Rng& rng,
                                                            int max_blocks = 4) {
  const auto support = mu.support();
  const int k = 1 + static_cast<int>(rng() % static_cast<unsigned>(max_blocks));
  std::vector<std::vector<double>> parts(k, std::vector<double>(mu.space()->size(), 0.0));
  for (point_id p : support.ids()) parts[rng() % k][p] = mu.weights()[p];
  std::vector<Measure> out;
  for (auto& w : parts) {
    Measure m(mu.space(), std::move(w), mu.is_signed());
    if (!m.is_zero()) out.push_back(std::move(m));
  }
  if (out.empty()) out.push_back(Measure::zero(mu.space()));
  return out;
}

/// Splits mu into k nonnegative parts that sum to mu pointwise but need not
/// be orthogonal (random convex split of each weight).
inline std::vector<Measure> random_bounded_decomposition(const Measure& mu, Rng& rng,
                                                         int max_blocks = 4) {
  const int k = 2 + static_cast<int>(rng() % static_cast<unsigned>(max_blocks));
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::vector<std::vector<double>> parts(k, std::vector<double>(mu.space()->size(), 0.0));
  for (point_id p = 0; p < mu.space()->size(); ++p) {
    const double w = mu.weights()[p];
    if (w == 0.0) continue;
    std::vector<double> cuts(k);
    double sum = 0.0;
    for (double& c : cuts) sum += (c = unit(rng) + 1e-3);
    for (int i = 0; i < k; ++i) parts[i][p] = w * (cuts[i] / sum);
  }
  std::vector<Measure> out;
  out.reserve(k);
  for (auto& w : parts) out.emplace_back(mu.space(), std::move(w), mu.is_signed());
  return out;
}

}  // namespace transfun
