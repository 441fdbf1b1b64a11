#pragma once

#include <cmath>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include "transfun/space.hpp"

namespace transfun {

/// A finite measure on a MetricSpace: one weight per point. Nonnegative
/// unless constructed as signed. Carrier and orthogonality tests compare
/// weights against exact zero; projection and summation only copy or add
/// weights, so the carrier calculus holds without tolerances.
class Measure {
public:
  Measure(SpacePtr space, std::vector<double> weights, bool is_signed = false)
      : space_(std::move(space)), weights_(std::move(weights)), signed_(is_signed) {
    if (weights_.size() != space_->size())
      throw std::invalid_argument("weight count does not match space size");
    if (!signed_)
      for (double w : weights_)
        if (w < 0.0) throw std::invalid_argument("negative weight in nonnegative measure");
  }

  static Measure zero(SpacePtr space) {
    return Measure(std::move(space), std::vector<double>(space ? space->size() : 0, 0.0));
  }

  static Measure dirac(SpacePtr space, point_id p, double mass = 1.0) {
    space->check_id(p);
    std::vector<double> w(space->size(), 0.0);
    w[p] = mass;
    return Measure(std::move(space), std::move(w), mass < 0.0);
  }

  static Measure uniform(SpacePtr space, double mass_per_point = 1.0) {
    return Measure(std::move(space),
                   std::vector<double>(space->size(), mass_per_point), mass_per_point < 0.0);
  }

  /// Indicator measure of a set: weight 1 on members, 0 elsewhere.
  static Measure indicator(const PointSet& set) {
    std::vector<double> w(set.space()->size(), 0.0);
    for (point_id p : set.ids()) w[p] = 1.0;
    return Measure(set.space(), std::move(w));
  }

  const SpacePtr& space() const { return space_; }
  const std::vector<double>& weights() const& { return weights_; }
  std::vector<double> weights() && { return std::move(weights_); }
  double weight(point_id p) const {
    space_->check_id(p);
    return weights_[p];
  }
  bool is_signed() const { return signed_; }

  /// Total variation norm.
  double norm() const {
    double acc = 0.0;
    for (double w : weights_) acc += std::abs(w);
    return acc;
  }

  /// Signed total mass, i.e. the measure of the whole space.
  double total() const { return std::accumulate(weights_.begin(), weights_.end(), 0.0); }

  bool is_zero() const {
    for (double w : weights_)
      if (w != 0.0) return false;
    return true;
  }

  /// The minimal carrier: points with nonzero weight.
  PointSet support() const {
    std::vector<point_id> ids;
    for (point_id p = 0; p < weights_.size(); ++p)
      if (weights_[p] != 0.0) ids.push_back(p);
    return PointSet(space_, std::move(ids));
  }

  Measure operator+(const Measure& other) const {
    require_same_space(space_, other.space_);
    std::vector<double> w(weights_);
    for (point_id p = 0; p < w.size(); ++p) w[p] += other.weights_[p];
    return Measure(space_, std::move(w), signed_ || other.signed_);
  }

  Measure scaled(double c) const {
    std::vector<double> w(weights_);
    for (double& x : w) x *= c;
    return Measure(space_, std::move(w), signed_ || c < 0.0);
  }

  friend bool operator==(const Measure& a, const Measure& b) {
    return a.space_ == b.space_ && a.weights_ == b.weights_;
  }

private:
  SpacePtr space_;
  std::vector<double> weights_;
  bool signed_ = false;
};

inline void require_nonnegative(const Measure& mu) {
  if (mu.is_signed()) throw std::invalid_argument("signed input");
}

/// mu is carried by A iff all weight outside A is exactly zero.
inline bool is_carried(const Measure& mu, const PointSet& a) {
  require_same_space(mu.space(), a.space());
  for (point_id p = 0; p < mu.space()->size(); ++p)
    if (mu.weights()[p] != 0.0 && !a.contains(p)) return false;
  return true;
}

/// Projection onto A: keep weights in A, zero elsewhere.
inline Measure project(const Measure& mu, const PointSet& a) {
  require_same_space(mu.space(), a.space());
  std::vector<double> w(mu.space()->size(), 0.0);
  for (point_id p : a.ids()) w[p] = mu.weights()[p];
  return Measure(mu.space(), std::move(w), mu.is_signed());
}

/// If the supports are disjoint, returns the witness set A = support(mu),
/// which carries mu while its complement carries nu.
inline std::optional<PointSet> orthogonal(const Measure& mu, const Measure& nu) {
  require_same_space(mu.space(), nu.space());
  auto sm = mu.support();
  if (!sm.disjoint_from(nu.support())) return std::nullopt;
  return sm;
}

/// Pairwise disjoint carriers for pairwise orthogonal measures. Supports are
/// already disjoint; points outside every support are assigned to the first
/// set so the result partitions the space.
inline std::vector<PointSet> disjoint_carriers(const std::vector<Measure>& ms) {
  if (ms.empty()) return {};
  const auto& space = ms.front().space();
  for (const auto& m : ms) require_same_space(space, m.space());
  for (std::size_t i = 0; i < ms.size(); ++i)
    for (std::size_t j = i + 1; j < ms.size(); ++j)
      if (!orthogonal(ms[i], ms[j])) {
        std::ostringstream msg;
        msg << "measures " << i << " and " << j << " are not orthogonal";
        throw std::invalid_argument(msg.str());
      }
  std::vector<PointSet> out;
  out.reserve(ms.size());
  PointSet used = PointSet::empty(space);
  for (const auto& m : ms) {
    out.push_back(m.support());
    used = used.unite(out.back());
  }
  out.front() = out.front().unite(used.complement());
  return out;
}

/// Pointwise sum of pairwise orthogonal measures; projecting the sum onto
/// the carriers from disjoint_carriers recovers the summands.
inline Measure orthogonal_sum(const std::vector<Measure>& ms) {
  if (ms.empty()) throw std::invalid_argument("orthogonal_sum of empty list needs a space");
  disjoint_carriers(ms);  // validates pairwise orthogonality
  Measure acc = ms.front();
  for (std::size_t i = 1; i < ms.size(); ++i) acc = acc + ms[i];
  return acc;
}

inline Measure orthogonal_sum(SpacePtr space, const std::vector<Measure>& ms) {
  if (ms.empty()) return Measure::zero(std::move(space));
  return orthogonal_sum(ms);
}

/// Componentwise |mu| <= |nu|.
inline bool dominated(const Measure& mu, const Measure& nu) {
  require_same_space(mu.space(), nu.space());
  for (point_id p = 0; p < mu.space()->size(); ++p)
    if (std::abs(mu.weights()[p]) > std::abs(nu.weights()[p])) return false;
  return true;
}

inline bool approx_equal(double a, double b, double rel_tol) {
  if (a == b) return true;
  return std::abs(a - b) <= rel_tol * std::max(std::abs(a), std::abs(b));
}

inline bool approx_equal(const Measure& a, const Measure& b, double rel_tol) {
  if (a.space() != b.space()) return false;
  for (point_id p = 0; p < a.space()->size(); ++p)
    if (!approx_equal(a.weights()[p], b.weights()[p], rel_tol)) return false;
  return true;
}

}  // namespace transfun
