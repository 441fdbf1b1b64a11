#include <doctest.h>

#include "transfun/checks.hpp"
#include "transfun/measure.hpp"

using namespace transfun;

namespace {
SpacePtr grid21() { return MetricSpace::grid({{-1.0, 1.0, 0.1}}); }
}

TEST_CASE("measure basics") {
  auto s = grid21();
  auto mu = Measure::uniform(s, 1.0);
  CHECK(mu.norm() == doctest::Approx(21.0));
  CHECK(mu.support().size() == 21);
  CHECK(Measure::zero(s).is_zero());
  CHECK(Measure::dirac(s, 4, 2.5).norm() == 2.5);
  CHECK_THROWS(Measure(s, std::vector<double>(21, -1.0)));          // negative, unsigned
  CHECK(Measure(s, std::vector<double>(21, -1.0), true).norm() == doctest::Approx(21.0));
  CHECK_THROWS(Measure(s, std::vector<double>(5, 0.0)));            // size mismatch
}

TEST_CASE("carrier predicate") {
  auto s = grid21();
  auto delta = Measure::dirac(s, 7);
  CHECK(is_carried(delta, PointSet(s, {7})));
  CHECK_FALSE(is_carried(delta, PointSet::empty(s)));
  CHECK(is_carried(delta, PointSet::full(s)));
  CHECK(is_carried(Measure::uniform(s), PointSet::full(s)));
  CHECK(is_carried(Measure::zero(s), PointSet::empty(s)));

  auto other = MetricSpace::grid({{0.0, 1.0, 0.5}});
  CHECK_THROWS_WITH(is_carried(delta, PointSet::full(other)), "space mismatch");
}

TEST_CASE("projection") {
  auto s = grid21();
  auto mu = Measure::uniform(s, 1.0);
  PointSet a(s, {0, 1, 2, 3, 4});

  CHECK(project(mu, a).norm() == doctest::Approx(5.0));
  CHECK(project(mu, PointSet::empty(s)).is_zero());

  // carried => projection is the identity
  auto nu = project(mu, a);
  CHECK(project(nu, a) == nu);
  CHECK(is_carried(nu, a));
}

TEST_CASE("orthogonality") {
  auto s = grid21();
  auto dp = Measure::dirac(s, 2);
  auto dq = Measure::dirac(s, 9);

  auto witness = orthogonal(dp, dq);
  REQUIRE(witness.has_value());
  CHECK(*witness == PointSet(s, {2}));

  CHECK_FALSE(orthogonal(dp, dp).has_value());
  CHECK(orthogonal(dp, Measure::zero(s)).has_value());
}

TEST_CASE("disjoint carriers") {
  auto s = grid21();
  std::vector<Measure> ms{Measure::dirac(s, 1), Measure::dirac(s, 5), Measure::dirac(s, 9)};
  auto sets = disjoint_carriers(ms);
  REQUIRE(sets.size() == 3);
  for (std::size_t i = 0; i < ms.size(); ++i) {
    CHECK(is_carried(ms[i], sets[i]));
    for (std::size_t j = i + 1; j < sets.size(); ++j) CHECK(sets[i].disjoint_from(sets[j]));
  }
  // remainder goes to the first set, so the sets partition the space
  std::size_t covered = 0;
  for (const auto& set : sets) covered += set.size();
  CHECK(covered == s->size());

  CHECK(disjoint_carriers({Measure::dirac(s, 3)}).front() == PointSet::full(s));

  std::vector<Measure> clash{Measure::dirac(s, 1), Measure::dirac(s, 1)};
  CHECK_THROWS_WITH(disjoint_carriers(clash), "measures 0 and 1 are not orthogonal");
}

TEST_CASE("orthogonal sum") {
  auto s = grid21();
  std::vector<Measure> ms{Measure::dirac(s, 2, 2.0), Measure::dirac(s, 11, 3.0)};
  auto sum = orthogonal_sum(ms);
  CHECK(sum.norm() == doctest::Approx(5.0));
  auto sets = disjoint_carriers(ms);
  CHECK(project(sum, sets[0]) == ms[0]);
  CHECK(project(sum, sets[1]) == ms[1]);

  CHECK(orthogonal_sum(s, {}).is_zero());
  auto single = orthogonal_sum(std::vector<Measure>{ms[0]});
  CHECK(single == ms[0]);
}

TEST_CASE("measure calculus law samplers") {
  auto s = MetricSpace::grid({{0.0, 1.1, 0.1}});  // 12 points
  Rng rng(0);
  auto carrier = check_carrier_laws(s, rng, 300);
  CHECK_MESSAGE(carrier.pass, carrier.counterexample);
  auto projection = check_projection_laws(s, rng, 300);
  CHECK_MESSAGE(projection.pass, projection.counterexample);
  auto ample = check_ample_axioms(s, rng, 300);
  CHECK_MESSAGE(ample.pass, ample.counterexample);
}
