#pragma once

#include <vector>

#include "transfun/space.hpp"

namespace transfun {

/// A relation on X x Y, stored densely. Plays the role a graph plays for a
/// function: rectangles that miss the relation force outputs off their
/// Y-side (see graphs.hpp for the carrier check).
class GraphCarrier {
public:
  GraphCarrier(SpacePtr domain, SpacePtr codomain)
      : domain_(std::move(domain)),
        codomain_(std::move(codomain)),
        rel_(domain_->size() * codomain_->size(), 0) {}

  static GraphCarrier from_pairs(SpacePtr domain, SpacePtr codomain,
                                 const std::vector<std::pair<point_id, point_id>>& pairs) {
    GraphCarrier g(std::move(domain), std::move(codomain));
    for (auto [p, q] : pairs) g.add(p, q);
    return g;
  }

  static GraphCarrier full(SpacePtr domain, SpacePtr codomain) {
    GraphCarrier g(std::move(domain), std::move(codomain));
    std::fill(g.rel_.begin(), g.rel_.end(), 1);
    return g;
  }

  /// Exact graph of a point map {(p, f(p))}.
  static GraphCarrier of_map(SpacePtr domain, SpacePtr codomain,
                             const std::vector<point_id>& map) {
    GraphCarrier g(std::move(domain), std::move(codomain));
    if (map.size() != g.domain_->size())
      throw std::invalid_argument("map size does not match domain");
    for (point_id p = 0; p < map.size(); ++p) g.add(p, map[p]);
    return g;
  }

  const SpacePtr& domain() const { return domain_; }
  const SpacePtr& codomain() const { return codomain_; }

  void add(point_id p, point_id q) {
    domain_->check_id(p);
    codomain_->check_id(q);
    rel_[p * codomain_->size() + q] = 1;
  }

  bool contains(point_id p, point_id q) const {
    return rel_[p * codomain_->size() + q] != 0;
  }

  std::vector<std::pair<point_id, point_id>> pairs() const {
    std::vector<std::pair<point_id, point_id>> out;
    for (point_id p = 0; p < domain_->size(); ++p)
      for (point_id q = 0; q < codomain_->size(); ++q)
        if (contains(p, q)) out.emplace_back(p, q);
    return out;
  }

  bool empty() const {
    for (char c : rel_)
      if (c) return false;
    return true;
  }

private:
  SpacePtr domain_;
  SpacePtr codomain_;
  std::vector<char> rel_;
};

}  // namespace transfun
