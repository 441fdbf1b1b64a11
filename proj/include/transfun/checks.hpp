#pragma once

#include <sstream>

#include "transfun/report.hpp"
#include "transfun/sampling.hpp"

namespace transfun {

namespace detail {
inline std::string describe_set(const PointSet& s) {
  std::ostringstream os;
  os << "{";
  for (std::size_t i = 0; i < s.ids().size(); ++i) os << (i ? "," : "") << s.ids()[i];
  os << "}";
  return os.str();
}
}  // namespace detail

/// Carrier filter laws: upward closure, closure under intersections,
/// dominance, and closure of carriers under sums of carried measures.
inline CheckReport check_carrier_laws(const SpacePtr& space, Rng& rng, int trials) {
  CheckReport rep{.name = "carrier_laws"};
  for (int t = 0; t < trials; ++t) {
    ++rep.trials;
    const Measure mu = random_measure(space, rng);
    const PointSet supp = mu.support();
    const PointSet a = supp.unite(random_subset(space, rng, 0.3));
    const PointSet b = a.unite(random_subset(space, rng, 0.5));
    if (!is_carried(mu, a) || !is_carried(mu, b)) {
      rep.fail("upward closure failed on trial " + std::to_string(t));
      break;
    }
    // intersection of carriers is a carrier
    const PointSet c1 = supp.unite(random_subset(space, rng, 0.4));
    const PointSet c2 = supp.unite(random_subset(space, rng, 0.4));
    if (!is_carried(mu, c1.intersect(c2))) {
      rep.fail("intersection closure failed on trial " + std::to_string(t));
      break;
    }
    // dominance: |mu'| <= |mu| and mu carried by A implies mu' carried by A
    std::uniform_real_distribution<double> frac(0.0, 1.0);
    std::vector<double> w(space->size(), 0.0);
    for (point_id p = 0; p < space->size(); ++p) w[p] = mu.weights()[p] * frac(rng);
    const Measure dominated_mu(space, std::move(w));
    if (!dominated(dominated_mu, mu) || !is_carried(dominated_mu, a)) {
      rep.fail("dominance law failed on trial " + std::to_string(t));
      break;
    }
    // sums of measures carried by A stay carried by A
    auto parts = random_orthogonal_decomposition(project(mu, a), rng);
    Measure sum = Measure::zero(space);
    for (const auto& part : parts) {
      if (!is_carried(part, a)) {
        rep.fail("projection part escaped its carrier on trial " + std::to_string(t));
        break;
      }
      sum = sum + part;
    }
    if (!rep.pass) break;
    if (!is_carried(sum, a)) {
      rep.fail("sum of carried measures escaped the carrier on trial " + std::to_string(t));
      break;
    }
  }
  return rep;
}

/// Projection identities: carried iff projection is the identity, projection
/// is idempotent, and mu splits exactly into the A / A-complement parts.
inline CheckReport check_projection_laws(const SpacePtr& space, Rng& rng, int trials) {
  CheckReport rep{.name = "projection_laws"};
  for (int t = 0; t < trials; ++t) {
    ++rep.trials;
    const Measure mu = random_measure(space, rng);
    const PointSet a = random_subset(space, rng);
    const Measure pa = project(mu, a);
    if (!is_carried(pa, a)) {
      rep.fail("projection not carried by its set on trial " + std::to_string(t));
      break;
    }
    if (!(project(pa, a) == pa)) {
      rep.fail("projection not idempotent on trial " + std::to_string(t));
      break;
    }
    if (!(pa + project(mu, a.complement()) == mu)) {
      rep.fail("projection split does not reassemble mu on trial " + std::to_string(t));
      break;
    }
    if (is_carried(mu, a) != (pa == mu)) {
      rep.fail("carried <=> projection fixed point failed on trial " + std::to_string(t));
      break;
    }
  }
  return rep;
}

/// Ample-space axioms for the full weight space: closure under projections
/// and orthogonal sums is structural; every nonempty set carries a nonzero
/// measure (its indicator).
inline CheckReport check_ample_axioms(const SpacePtr& space, Rng& rng, int trials) {
  CheckReport rep{.name = "ample_axioms"};
  for (int t = 0; t < trials; ++t) {
    ++rep.trials;
    const Measure mu = random_measure(space, rng);
    auto parts = random_orthogonal_decomposition(mu, rng);
    auto carriers = disjoint_carriers(parts);
    const Measure sum = orthogonal_sum(space, parts);
    if (!(sum == mu)) {
      rep.fail("orthogonal sum did not reassemble on trial " + std::to_string(t));
      break;
    }
    for (std::size_t i = 0; i < parts.size(); ++i) {
      if (!is_carried(parts[i], carriers[i]) || !(project(sum, carriers[i]) == parts[i])) {
        rep.fail("projection onto disjoint carrier failed on trial " + std::to_string(t));
        break;
      }
      for (std::size_t j = i + 1; j < parts.size(); ++j)
        if (!carriers[i].disjoint_from(carriers[j])) {
          rep.fail("carriers not disjoint on trial " + std::to_string(t));
          break;
        }
    }
    if (!rep.pass) break;
    PointSet open = random_subset(space, rng);
    if (open.is_empty()) open = PointSet(space, {rng() % space->size()});
    const Measure ind = Measure::indicator(open);
    if (ind.is_zero() || !is_carried(ind, open)) {
      rep.fail("nonempty set carries no nonzero measure on trial " + std::to_string(t));
      break;
    }
  }
  return rep;
}

}  // namespace transfun
