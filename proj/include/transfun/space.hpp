#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <memory>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace transfun {

using point_id = std::size_t;

/// One axis of a regular grid: points at lo, lo+step, ..., up to hi.
struct AxisSpec {
  double lo = 0.0;
  double hi = 0.0;
  double step = 1.0;
};

/// A finite metric point cloud. Immutable after construction; distances are
/// euclidean on the stored coordinates unless an explicit table is given.
/// Spaces built from AxisSpecs keep their grid structure, which convolution
/// and mollification need for translation arithmetic.
class MetricSpace {
public:
  static std::shared_ptr<const MetricSpace> grid(std::vector<AxisSpec> axes) {
    if (axes.empty()) throw std::invalid_argument("grid needs at least one axis");
    std::vector<std::size_t> counts;
    for (const auto& a : axes) {
      if (!(a.step > 0.0)) throw std::invalid_argument("grid step must be positive");
      if (a.hi < a.lo) throw std::invalid_argument("grid axis has hi < lo");
      // half-step tolerance so hi is included despite rounding
      auto n = static_cast<std::size_t>(std::floor((a.hi - a.lo) / a.step + 0.5)) + 1;
      counts.push_back(n);
    }
    std::size_t total = 1;
    for (auto n : counts) total *= n;
    const std::size_t dim = axes.size();
    std::vector<double> coords(total * dim);
    for (std::size_t i = 0; i < total; ++i) {
      std::size_t rem = i;
      for (std::size_t ax = dim; ax-- > 0;) {
        const std::size_t k = rem % counts[ax];
        rem /= counts[ax];
        coords[i * dim + ax] = axes[ax].lo + static_cast<double>(k) * axes[ax].step;
      }
    }
    auto s = std::shared_ptr<MetricSpace>(new MetricSpace(dim, std::move(coords), {}));
    s->axes_ = std::move(axes);
    s->counts_ = std::move(counts);
    return s;
  }

  static std::shared_ptr<const MetricSpace> points(std::vector<std::vector<double>> pts) {
    auto [dim, flat] = flatten(pts);
    return std::shared_ptr<MetricSpace>(new MetricSpace(dim, std::move(flat), {}));
  }

  static std::shared_ptr<const MetricSpace> custom(std::vector<std::vector<double>> pts,
                                                   std::vector<std::vector<double>> distances) {
    auto [dim, flat] = flatten(pts);
    const std::size_t n = distances.size();
    if (n != flat.size() / std::max<std::size_t>(dim, 1))
      throw std::invalid_argument("distance table size does not match point count");
    std::vector<double> table(n * n);
    for (std::size_t i = 0; i < n; ++i) {
      if (distances[i].size() != n) throw std::invalid_argument("distance table is not square");
      for (std::size_t j = 0; j < n; ++j) table[i * n + j] = distances[i][j];
    }
    return std::shared_ptr<MetricSpace>(new MetricSpace(dim, std::move(flat), std::move(table)));
  }

  std::size_t size() const { return size_; }
  std::size_t dim() const { return dim_; }

  double distance(point_id a, point_id b) const {
    check_id(a);
    check_id(b);
    if (!table_.empty()) return table_[a * size_ + b];
    double acc = 0.0;
    for (std::size_t k = 0; k < dim_; ++k) {
      const double d = coords_[a * dim_ + k] - coords_[b * dim_ + k];
      acc += d * d;
    }
    return std::sqrt(acc);
  }

  std::span<const double> coords(point_id p) const {
    check_id(p);
    return {coords_.data() + p * dim_, dim_};
  }

  /// Minimal nonzero pairwise distance (the grid resolution).
  double resolution() const { return h_; }
  double diameter() const { return diameter_; }

  /// Comparison slack used to absorb floating-point noise in coordinates.
  /// Far below resolution()/2, far above accumulated rounding error.
  double slack() const { return slack_; }

  bool is_grid() const { return !axes_.empty(); }
  const std::vector<AxisSpec>& axes() const { return axes_; }
  const std::vector<std::size_t>& axis_counts() const { return counts_; }

  /// Multi-index of a grid point (grid spaces only).
  std::vector<std::size_t> multi_index(point_id p) const {
    check_id(p);
    std::vector<std::size_t> idx(counts_.size());
    std::size_t rem = p;
    for (std::size_t ax = counts_.size(); ax-- > 0;) {
      idx[ax] = rem % counts_[ax];
      rem /= counts_[ax];
    }
    return idx;
  }

  point_id flat_index(const std::vector<std::size_t>& idx) const {
    std::size_t p = 0;
    for (std::size_t ax = 0; ax < counts_.size(); ++ax) p = p * counts_[ax] + idx[ax];
    return p;
  }

  /// Closest point of the cloud to the given coordinates (lowest id on ties).
  point_id nearest(std::span<const double> c) const {
    if (c.size() != dim_) throw std::invalid_argument("coordinate dimension mismatch");
    point_id best = 0;
    double best_d = std::numeric_limits<double>::infinity();
    for (point_id p = 0; p < size_; ++p) {
      double acc = 0.0;
      for (std::size_t k = 0; k < dim_; ++k) {
        const double d = coords_[p * dim_ + k] - c[k];
        acc += d * d;
      }
      if (acc < best_d - slack_ * slack_) {
        best_d = acc;
        best = p;
      }
    }
    return best;
  }

  void check_id(point_id p) const {
    if (p >= size_) throw std::invalid_argument("unknown point");
  }

private:
  MetricSpace(std::size_t dim, std::vector<double> coords, std::vector<double> table)
      : dim_(dim), coords_(std::move(coords)), table_(std::move(table)) {
    size_ = dim_ == 0 ? 0 : coords_.size() / dim_;
    if (size_ == 0) throw std::invalid_argument("space needs at least one point");
    validate_metric();
    h_ = std::numeric_limits<double>::infinity();
    diameter_ = 0.0;
    for (point_id a = 0; a < size_; ++a)
      for (point_id b = a + 1; b < size_; ++b) {
        const double d = raw_distance(a, b);
        if (d > 0.0) h_ = std::min(h_, d);
        diameter_ = std::max(diameter_, d);
      }
    if (!std::isfinite(h_)) h_ = 1.0;  // one-point space
    slack_ = 1e-9 * h_;
  }

  double raw_distance(point_id a, point_id b) const {
    if (!table_.empty()) return table_[a * size_ + b];
    double acc = 0.0;
    for (std::size_t k = 0; k < dim_; ++k) {
      const double d = coords_[a * dim_ + k] - coords_[b * dim_ + k];
      acc += d * d;
    }
    return std::sqrt(acc);
  }

  void validate_metric() const {
    if (table_.empty()) return;
    const std::size_t n = size_;
    for (std::size_t i = 0; i < n; ++i) {
      if (table_[i * n + i] != 0.0) throw std::invalid_argument("metric diagonal must be zero");
      for (std::size_t j = 0; j < n; ++j) {
        const double d = table_[i * n + j];
        if (d < 0.0) throw std::invalid_argument("metric must be nonnegative");
        if (i != j && d == 0.0) throw std::invalid_argument("metric vanishes off the diagonal");
        if (d != table_[j * n + i]) throw std::invalid_argument("metric must be symmetric");
      }
    }
    // triangle inequality on all triples; desk-scale tables are small
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = 0; k < n; ++k)
          if (table_[i * n + j] > table_[i * n + k] + table_[k * n + j] + 1e-12)
            throw std::invalid_argument("metric violates the triangle inequality");
  }

  static std::pair<std::size_t, std::vector<double>> flatten(
      const std::vector<std::vector<double>>& pts) {
    if (pts.empty()) throw std::invalid_argument("space needs at least one point");
    const std::size_t dim = pts.front().size();
    if (dim == 0) throw std::invalid_argument("points need at least one coordinate");
    std::vector<double> flat;
    flat.reserve(pts.size() * dim);
    for (const auto& p : pts) {
      if (p.size() != dim) throw std::invalid_argument("inconsistent point dimension");
      flat.insert(flat.end(), p.begin(), p.end());
    }
    return {dim, std::move(flat)};
  }

  std::size_t dim_ = 0;
  std::size_t size_ = 0;
  std::vector<double> coords_;
  std::vector<double> table_;
  std::vector<AxisSpec> axes_;
  std::vector<std::size_t> counts_;
  double h_ = 1.0;
  double diameter_ = 0.0;
  double slack_ = 1e-9;
};

using SpacePtr = std::shared_ptr<const MetricSpace>;

inline void require_same_space(const SpacePtr& a, const SpacePtr& b) {
  if (a != b) throw std::invalid_argument("space mismatch");
}

/// A subset of a space's points; ids kept sorted for stable iteration.
class PointSet {
public:
  PointSet() = default;
  PointSet(SpacePtr space, std::vector<point_id> ids) : space_(std::move(space)), ids_(std::move(ids)) {
    std::sort(ids_.begin(), ids_.end());
    ids_.erase(std::unique(ids_.begin(), ids_.end()), ids_.end());
    for (point_id p : ids_) space_->check_id(p);
  }

  static PointSet empty(SpacePtr space) { return PointSet(std::move(space), {}); }
  static PointSet full(SpacePtr space) {
    std::vector<point_id> ids(space->size());
    for (point_id p = 0; p < ids.size(); ++p) ids[p] = p;
    return PointSet(std::move(space), std::move(ids));
  }

  const SpacePtr& space() const { return space_; }
  const std::vector<point_id>& ids() const& { return ids_; }
  std::vector<point_id> ids() && { return std::move(ids_); }
  std::size_t size() const { return ids_.size(); }
  bool is_empty() const { return ids_.empty(); }

  bool contains(point_id p) const {
    return std::binary_search(ids_.begin(), ids_.end(), p);
  }

  PointSet complement() const {
    std::vector<point_id> out;
    out.reserve(space_->size() - ids_.size());
    for (point_id p = 0; p < space_->size(); ++p)
      if (!contains(p)) out.push_back(p);
    return PointSet(space_, std::move(out));
  }

  PointSet unite(const PointSet& other) const {
    require_same_space(space_, other.space_);
    std::vector<point_id> out;
    std::set_union(ids_.begin(), ids_.end(), other.ids_.begin(), other.ids_.end(),
                   std::back_inserter(out));
    return PointSet(space_, std::move(out));
  }

  PointSet intersect(const PointSet& other) const {
    require_same_space(space_, other.space_);
    std::vector<point_id> out;
    std::set_intersection(ids_.begin(), ids_.end(), other.ids_.begin(), other.ids_.end(),
                          std::back_inserter(out));
    return PointSet(space_, std::move(out));
  }

  PointSet subtract(const PointSet& other) const {
    require_same_space(space_, other.space_);
    std::vector<point_id> out;
    std::set_difference(ids_.begin(), ids_.end(), other.ids_.begin(), other.ids_.end(),
                        std::back_inserter(out));
    return PointSet(space_, std::move(out));
  }

  bool subset_of(const PointSet& other) const {
    require_same_space(space_, other.space_);
    return std::includes(other.ids_.begin(), other.ids_.end(), ids_.begin(), ids_.end());
  }

  bool disjoint_from(const PointSet& other) const {
    require_same_space(space_, other.space_);
    auto a = ids_.begin();
    auto b = other.ids_.begin();
    while (a != ids_.end() && b != other.ids_.end()) {
      if (*a < *b) ++a;
      else if (*b < *a) ++b;
      else return false;
    }
    return true;
  }

  friend bool operator==(const PointSet& a, const PointSet& b) {
    return a.space_ == b.space_ && a.ids_ == b.ids_;
  }

private:
  SpacePtr space_;
  std::vector<point_id> ids_;
};

/// Open ball { p : d(x,p) < r }.
inline PointSet ball(const SpacePtr& space, point_id x, double r) {
  space->check_id(x);
  if (r < 0.0) throw std::invalid_argument("ball radius must be nonnegative");
  std::vector<point_id> out;
  for (point_id p = 0; p < space->size(); ++p)
    if (space->distance(x, p) < r - space->slack()) out.push_back(p);
  return PointSet(space, std::move(out));
}

/// Greedy ball cover: repeatedly take the lowest-id uncovered point as the
/// next center until the open balls of radius r cover everything.
inline std::vector<point_id> greedy_cover(const SpacePtr& space, double r) {
  if (!(r > 0.0)) throw std::invalid_argument("cover radius must be positive");
  std::vector<char> covered(space->size(), 0);
  std::vector<point_id> centers;
  for (point_id p = 0; p < space->size(); ++p) {
    if (covered[p]) continue;
    centers.push_back(p);
    for (point_id q = p; q < space->size(); ++q)
      if (!covered[q] && space->distance(p, q) < r - space->slack()) covered[q] = 1;
  }
  return centers;
}

struct EnclosingBall {
  point_id center = 0;
  double radius = 0.0;
};

/// Minimax center of s over the candidate set: the candidate minimizing the
/// largest distance to s, lowest id on ties.
inline EnclosingBall chebyshev(const SpacePtr& space, const PointSet& s,
                               const PointSet& candidates) {
  if (s.is_empty()) throw std::invalid_argument("empty support");
  if (candidates.is_empty()) throw std::invalid_argument("empty candidate set");
  require_same_space(space, s.space());
  require_same_space(space, candidates.space());
  EnclosingBall best{candidates.ids().front(), std::numeric_limits<double>::infinity()};
  for (point_id y : candidates.ids()) {
    double worst = 0.0;
    bool pruned = false;
    for (point_id p : s.ids()) {
      worst = std::max(worst, space->distance(y, p));
      if (worst >= best.radius - space->slack()) {
        pruned = true;
        break;
      }
    }
    if (!pruned && worst < best.radius - space->slack()) best = {y, worst};
  }
  return best;
}

}  // namespace transfun
