#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>

#include "ballcomp/actions.hpp"
#include "ballcomp/diagnostics.hpp"
#include "ballcomp/sampling.hpp"
#include "doctest.h"

using namespace ballcomp;

TEST_CASE("smoothness cascade on the built-in ratios") {
  const auto ratio = [](const ReparamMap& f) {
    return [f](double y) { return f.f_over_fprime(y); };
  };
  for (int p : {1, 2, 5}) {
    const SmoothnessReport r = classify_smoothness(ratio(ReparamMap::monomial(p)));
    CHECK(r.smooth);
    CHECK(r.order == 5);
  }
  const SmoothnessReport r1 = classify_smoothness(ratio(ReparamMap::flat_f1()));
  CHECK(r1.smooth);
  CHECK(r1.order == 5);

  const SmoothnessReport r2 = classify_smoothness(ratio(ReparamMap::flat_f2()));
  CHECK(!r2.smooth);
  CHECK(r2.order == 3);
  // The blow-up is visible as sustained growth, two decades of it at the
  // highest order.
  bool strong_growth = false;
  for (const OrderTrail& t : r2.evidence)
    if (t.status == "diverges" && t.window_ratio >= 100.0) strong_growth = true;
  CHECK(strong_growth);
}

TEST_CASE("smoothness is scale equivariant") {
  for (double c : {1e-3, 1e3}) {
    const SmoothnessReport r =
        classify_smoothness([c](double y) { return c * y * y * y / 2.0; });
    CHECK(r.smooth);
    const SmoothnessReport b = classify_smoothness(
        [c](double y) { return c * std::pow(y, 2.5); });
    CHECK(!b.smooth);
    CHECK(b.order == 3);
  }
}

TEST_CASE("flatness orders of monomials and flats") {
  for (int p : {1, 2, 3, 4, 5}) {
    const FlatnessReport r = flatness_order(ReparamMap::monomial(p));
    CHECK(!r.flat);
    CHECK(r.order == p);
  }
  CHECK(flatness_order(ReparamMap::flat_f1()).flat);
  CHECK(flatness_order(ReparamMap::flat_f2()).flat);
}

TEST_CASE("holder fit recovers known exponents") {
  Rng rng(5);
  // Pure powers of the separation, evaluated on anchored halfspace pairs.
  const auto fit = [&](double e, double rho_min, double rho_max) {
    const auto pairs =
        halfspace_anchored_pairs(rng, 3, 300, 1.0, 5.0, rho_min, rho_max);
    std::vector<HolderSample> s;
    for (const auto& [a, w] : pairs) {
      const double sep = (a - w).norm();
      s.push_back({sep, std::pow(sep, e)});
    }
    return holder_exponent(s);
  };
  const HolderReport identity = fit(1.0, 0.7, 1.0);
  CHECK(identity.slope == doctest::Approx(1.0).epsilon(0.01));
  CHECK(identity.residual < 0.01);
  const HolderReport half = fit(0.5, 0.7, 1.0);
  CHECK(half.slope == doctest::Approx(0.5).epsilon(0.01));

  // The normal-coordinate square map: image separation is dominated by the
  // tangential part, except where the pair is pushed almost straight in.
  const auto square_fit = [&](double rho_min, double rho_max) {
    const auto pairs =
        halfspace_anchored_pairs(rng, 3, 300, 1.0, 5.0, rho_min, rho_max);
    std::vector<HolderSample> s;
    for (const auto& [a, w] : pairs) {
      Vec ia = a, iw = w;
      ia[2] *= ia[2];
      iw[2] *= iw[2];
      s.push_back({(a - w).norm(), (ia - iw).norm()});
    }
    return holder_exponent(s);
  };
  CHECK(square_fit(0.7, 0.9).slope == doctest::Approx(1.0).epsilon(0.05));

  // Normal-coordinate square root, the shape of the model conjugacy.
  const auto root_fit = [&]() {
    const auto pairs = halfspace_anchored_pairs(rng, 3, 300, 1.0, 5.0);
    std::vector<HolderSample> s;
    for (const auto& [a, w] : pairs) {
      Vec ia = a, iw = w;
      ia[2] = std::sqrt(ia[2]);
      iw[2] = std::sqrt(iw[2]);
      s.push_back({(a - w).norm(), (ia - iw).norm()});
    }
    return holder_exponent(s);
  };
  const HolderReport root = root_fit();
  CHECK(root.slope == doctest::Approx(0.5).epsilon(0.1));
  CHECK(root.residual < 0.1);

  // Too narrow a separation range is refused.
  std::vector<HolderSample> narrow;
  for (int i = 0; i < 50; ++i)
    narrow.push_back({1e-3 + 1e-5 * i, 1e-3 + 1e-5 * i});
  CHECK_THROWS(holder_exponent(narrow));
}

TEST_CASE("model conjugacy exponent is one half") {
  Rng rng(9);
  const auto pairs = sphere_anchored_pairs(rng, 2, 200);
  std::vector<HolderSample> s;
  for (const auto& [u, v] : pairs) {
    const Vec a = klein_to_poincare(ModelPoint::klein(u)).coords();
    const Vec b = klein_to_poincare(ModelPoint::klein(v)).coords();
    s.push_back({(u - v).norm(), (a - b).norm()});
  }
  const HolderReport r = holder_exponent(s);
  CHECK(r.slope > 0.45);
  CHECK(r.slope < 0.55);
  CHECK(r.residual < 0.1);
  CHECK(r.decades >= 2.0);
}

TEST_CASE("geodesic parametrization and its boundary gap") {
  Rng rng(13);
  const Vec a = rng.unit_vector(3);
  Vec b = rng.unit_vector(3);
  const Geodesic g(a, b);
  // Endpoints are renormalized onto the sphere, which may shift them a ulp.
  CHECK((g.point(0.0) - a).norm() < 1e-14);
  CHECK((g.point(1.0) - b).norm() < 1e-14);
  CHECK(g.boundary_gap(0.0) == 0.0);
  CHECK(g.boundary_gap(1.0) == 0.0);
  for (double t : {0.1, 0.5, 0.9}) {
    const double direct = 1.0 - g.point(t).squaredNorm();
    CHECK(g.boundary_gap(t) == doctest::Approx(direct).epsilon(1e-10));
    CHECK(g.boundary_gap(t) > 0.0);
  }
}

TEST_CASE("vertical chord endpoints: origin and the missed point") {
  const int n = 3;
  Vec north = Vec::Zero(n), south = Vec::Zero(n);
  north[n - 1] = 1.0;
  south[n - 1] = -1.0;
  for (const ReparamMap& f :
       {ReparamMap::monomial(1), ReparamMap::monomial(2), ReparamMap::flat_f1()}) {
    const EndpointsReport r = endpoints_under(f, Geodesic(south, north));
    CHECK(r.start.converged);
    CHECK(!r.start.infinity);
    CHECK(r.start.limit.u.norm() < 1e-9);
    CHECK(r.finish.converged);
    CHECK(r.finish.infinity);
    CHECK(r.distinct);
  }
}

TEST_CASE("trivial reparametrization endpoints are the chart endpoints") {
  Rng rng(17);
  const int n = 3;
  const ReparamMap m1 = ReparamMap::monomial(1);
  for (int rep = 0; rep < 20; ++rep) {
    Vec a = rng.unit_vector(n), b = rng.unit_vector(n);
    if (a.dot(b) > 0.99 || std::abs(1.0 - a[n - 1]) < 1e-3 ||
        std::abs(1.0 - b[n - 1]) < 1e-3)
      continue;
    const EndpointsReport r = endpoints_under(m1, Geodesic(a, b));
    CHECK(r.start.converged);
    CHECK(r.finish.converged);
    const ChartPoint ca = chart_point_of(klein_to_chart_kc(ModelPoint::klein(a)));
    const ChartPoint cb = chart_point_of(klein_to_chart_kc(ModelPoint::klein(b)));
    CHECK((r.start.limit.u - ca.u).norm() < 1e-6 * std::max(1.0, ca.u.norm()));
    CHECK((r.finish.limit.u - cb.u).norm() < 1e-6 * std::max(1.0, cb.u.norm()));
  }
}

TEST_CASE("endpoint limits are fixed by the chord's symmetries") {
  Rng rng(19);
  const int n = 3;
  for (const ReparamMap& f : {ReparamMap::monomial(2), ReparamMap::flat_f1()}) {
    for (int rep = 0; rep < 5; ++rep) {
      Vec a = rng.unit_vector(n), b = rng.unit_vector(n);
      if (a.dot(b) > 0.9 || std::abs(1.0 - a[n - 1]) < 1e-3 ||
          std::abs(1.0 - b[n - 1]) < 1e-3)
        continue;
      const EndpointsReport r = endpoints_under(f, Geodesic(a, b));
      if (!(r.start.converged && r.finish.converged) || r.start.infinity ||
          r.finish.infinity)
        continue;
      for (const GroupElement& s : symmetry_through_geodesic(a, b, n)) {
        for (const EndpointTrail* e : {&r.start, &r.finish}) {
          Vec c(n);
          c.head(n - 1) = e->limit.u;
          c[n - 1] = e->limit.v;
          const ModelPoint img = act_reparam(f, s, ModelPoint::chart_kc(c));
          CHECK((img.coords().head(n - 1) - e->limit.u).norm() <
                1e-8 * std::max(1.0, e->limit.u.norm()));
        }
      }
    }
  }
}

TEST_CASE("tangency angles separate the two boundary structures") {
  const int n = 3;
  Vec a = Vec::Zero(n), b = Vec::Zero(n), c = Vec::Zero(n);
  a[0] = 1.0;
  b[0] = -0.8;
  b[1] = 0.6;
  c[0] = -0.8;
  c[1] = -0.6;
  const Geodesic g1(a, b), g2(a, c);

  const TangencyReport conf = boundary_tangency_angle(BoundaryModel::Conf, g1, g2);
  CHECK(conf.converged);
  CHECK(conf.angle < 1e-3);

  const TangencyReport proj = boundary_tangency_angle(BoundaryModel::Proj, g1, g2);
  CHECK(proj.converged);
  CHECK(proj.angle > 1e-2);

  // Identical chords subtend no angle in either structure.
  const TangencyReport same = boundary_tangency_angle(BoundaryModel::Proj, g1, g1);
  CHECK(same.angle < 1e-12);
}

TEST_CASE("transversality of the compactified chords") {
  const int n = 3;
  Vec south = Vec::Zero(n), north = Vec::Zero(n);
  south[n - 1] = -1.0;
  north[n - 1] = 1.0;
  Vec east = Vec::Zero(n);
  east[0] = 1.0;

  // The identity reparametrization meets the boundary at a genuine angle,
  // vertically and on generic chords.
  const TransversalityReport vert =
      transversality_check(ReparamMap::monomial(1), Geodesic(south, north));
  CHECK(vert.transversal);
  CHECK(vert.angle == doctest::Approx(3.14159265358979 / 2).epsilon(1e-6));

  const TransversalityReport gen =
      transversality_check(ReparamMap::monomial(1), Geodesic(south, east));
  CHECK(gen.transversal);
  CHECK(gen.angle > 0.5);
  CHECK(gen.angle < 3.14159265358979 / 2);

  // Squaring the height straightens every chord to a right angle.
  const TransversalityReport sq =
      transversality_check(ReparamMap::monomial(2), Geodesic(south, east));
  CHECK(sq.transversal);
  CHECK(sq.angle == doctest::Approx(3.14159265358979 / 2).epsilon(1e-4));

  const TransversalityReport flat =
      transversality_check(ReparamMap::flat_f1(), Geodesic(south, east));
  CHECK(flat.transversal);
  CHECK(flat.angle == doctest::Approx(3.14159265358979 / 2).epsilon(1e-4));

  // A chord into the missed point reads its angle at the other end.
  const TransversalityReport rev =
      transversality_check(ReparamMap::monomial(1), Geodesic(north, south));
  CHECK(rev.transversal);
  CHECK(rev.used_reverse_end);
}

TEST_CASE("action axioms sweep is deterministic and tight") {
  const int n = 3;
  Rng rng1(123), rng2(123);
  const CompactifiedAction conf = CompactifiedAction::conf();
  const ActionAxiomsReport a = action_axioms(rng1, conf, n, 200);
  const ActionAxiomsReport b = action_axioms(rng2, conf, n, 200);
  CHECK(a.samples == 200);
  CHECK(a.boundary_samples == 20);
  CHECK(a.max_composition == b.max_composition);
  CHECK(a.max_identity == b.max_identity);
  CHECK(a.max_composition < 1e-9);
  CHECK(a.max_boundary < 1e-10);
  CHECK(a.composition_errors.size() == 200);

  const ActionAxiomsReport r = action_axioms(
      rng1, CompactifiedAction::reparam(ReparamMap::flat_f2()), n, 200);
  CHECK(r.max_composition < 1e-9);
  CHECK(r.max_identity < 1e-9);
  CHECK(r.max_boundary < 1e-10);
}
