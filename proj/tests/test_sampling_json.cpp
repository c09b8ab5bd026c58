#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>

#include "ballcomp/json_io.hpp"
#include "ballcomp/sampling.hpp"
#include "doctest.h"

using namespace ballcomp;

TEST_CASE("seeded draws are reproducible and in range") {
  Rng a(42), b(42), c(43);
  bool all_equal = true, any_diff = false;
  for (int i = 0; i < 1000; ++i) {
    const double x = a.uniform(), y = b.uniform(), z = c.uniform();
    all_equal = all_equal && x == y;
    any_diff = any_diff || x != z;
    CHECK(x >= 0.0);
    CHECK(x < 1.0);
  }
  CHECK(all_equal);
  CHECK(any_diff);

  for (int i = 0; i < 200; ++i) {
    CHECK(a.unit_vector(3).norm() == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(a.ball_interior(4, 0.9).norm() < 0.9);
    const double u = a.uniform(-2.0, 5.0);
    CHECK(u >= -2.0);
    CHECK(u < 5.0);
  }

  // Normal draws have roughly the right spread.
  double sum = 0.0, sumsq = 0.0;
  const int m = 20000;
  for (int i = 0; i < m; ++i) {
    const double g = a.normal();
    sum += g;
    sumsq += g * g;
  }
  CHECK(std::abs(sum / m) < 0.05);
  CHECK(sumsq / m == doctest::Approx(1.0).epsilon(0.05));
}

TEST_CASE("random group elements satisfy the membership conditions") {
  Rng rng(7);
  for (int n : {2, 4}) {
    const Mat j = LorentzForm(n).j();
    for (int i = 0; i < 50; ++i) {
      const GroupElement g = rng.group_element(n, 0.8);
      CHECK((g.mat().transpose() * j * g.mat() - j).norm() < 1e-9);
      const AlgebraElement x = rng.algebra_element(n, 1.0);
      CHECK((x.mat().transpose() * j + j * x.mat()).norm() < 1e-12);
    }
  }
}

TEST_CASE("anchored pairs sit at the advertised separations") {
  Rng rng(11);
  for (const auto& [a, w] : sphere_anchored_pairs(rng, 3, 200, 1.0, 4.0)) {
    CHECK(a.norm() == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(w.norm() < 1.0);
    const double sep = (a - w).norm();
    CHECK(sep <= 1.02e-1);
    CHECK(sep >= 0.98e-4);
  }
  for (const auto& [a, w] : halfspace_anchored_pairs(rng, 3, 200, 1.0, 4.0)) {
    CHECK(a[2] == 0.0);
    CHECK(w[2] > 0.0);
    const double sep = (a - w).norm();
    CHECK(sep <= 1.02e-1);
    CHECK(sep >= 0.98e-4);
    // The companion's inward fraction obeys the requested band.
    CHECK(w[2] >= 0.69 * sep);
  }
}

TEST_CASE("model points round trip through json") {
  Rng rng(13);
  const ModelPoint pts[] = {
      ModelPoint::klein(rng.ball_interior(3, 0.9)),
      ModelPoint::poincare(rng.unit_vector(3)),
      ModelPoint::chart_kc(Vec::Zero(3)),
      ModelPoint::infinity(Model::ChartKC, 3),
      ModelPoint::hyperboloid(klein_to_hyperboloid(
          ModelPoint::klein(rng.ball_interior(3, 0.5))).coords()),
  };
  for (const ModelPoint& p : pts) {
    const OrderedJson j = model_point_to_json(p);
    const ModelPoint q = model_point_from_json(j);
    CHECK(q.model() == p.model());
    CHECK(q.is_infinity() == p.is_infinity());
    CHECK(q.n() == p.n());
    if (!p.is_infinity())
      CHECK((q.coords() - p.coords()).norm() == 0.0);
  }
}

TEST_CASE("polynomial fields round trip through json") {
  const PolyVectorField x =
      parse_field("2/3 x1^2 y^(-1) d/dy - x2 d/dx1 + 7 y^(5/2) d/dx2", 3);
  CHECK(poly_field_from_json(poly_field_to_json(x)) == x);
  const PolyVectorField zero = PolyVectorField(4);
  CHECK(poly_field_from_json(poly_field_to_json(zero)) == zero);
}

TEST_CASE("report serializers keep their numeric content") {
  SmoothnessReport sr;
  sr.orders_checked = 5;
  sr.smooth = false;
  sr.order = 3;
  OrderTrail t;
  t.order = 3;
  t.estimates = {1.0, 10.0};
  t.noise_floor = {0.1, 0.2};
  t.status = "diverges";
  t.window_ratio = 123.0;
  sr.evidence.push_back(t);
  const OrderedJson j = smoothness_to_json(sr);
  CHECK(j["verdict"] == "diverges_at_order");
  CHECK(j["order"] == 3);
  CHECK(j["evidence"][0]["estimates"][1] == 10.0);
  CHECK(j["evidence"][0]["status"] == "diverges");

  HolderReport hr;
  hr.slope = 0.5;
  hr.residual = 0.01;
  hr.decades = 3.5;
  hr.pairs = 100;
  CHECK(holder_to_json(hr)["slope"] == 0.5);

  ChartPoint cp;
  cp.u = Vec::Zero(2);
  cp.v = 0.25;
  const OrderedJson cj = chart_point_to_json(cp);
  CHECK(cj["v"] == 0.25);
  CHECK(!cj.value("inf", false));
}
