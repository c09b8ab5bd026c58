#include "ballcomp/diagnostics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace ballcomp {

namespace {

constexpr double kEps = 2.220446049250313e-16;

struct Stencil {
  std::vector<int> offsets;
  std::vector<double> coeffs;
};

// Central-difference stencils for derivatives 1..5, error O(h^2).
const Stencil& stencil_for(int k) {
  static const std::vector<Stencil> table = {
      {{-1, 1}, {-0.5, 0.5}},
      {{-1, 0, 1}, {1.0, -2.0, 1.0}},
      {{-2, -1, 1, 2}, {-0.5, 1.0, -1.0, 0.5}},
      {{-2, -1, 0, 1, 2}, {1.0, -4.0, 6.0, -4.0, 1.0}},
      {{-3, -2, -1, 1, 2, 3}, {-0.5, 2.0, -2.5, 2.5, -2.0, 0.5}},
  };
  return table.at(k - 1);
}

// How the last three levels of one order behaved.  Checked in this order:
// all below the rounding floor; clear tenfold growth well above the floor;
// relative Cauchy convergence (with an absolute floor so convergence to 0
// is not penalized); clean decay.  Anything else is left indeterminate in
// the evidence without forcing a blow-up verdict.
void classify_window(OrderTrail& t) {
  const std::size_t L = t.estimates.size();
  const double d0 = std::abs(t.estimates[L - 3]);
  const double d1 = std::abs(t.estimates[L - 2]);
  const double d2 = std::abs(t.estimates[L - 1]);
  const double f0 = t.noise_floor[L - 3];
  const double f1 = t.noise_floor[L - 2];
  const double f2 = t.noise_floor[L - 1];
  t.window_ratio = d0 > 0.0 ? d2 / d0 : 0.0;
  if (d0 <= f0 && d1 <= f1 && d2 <= f2) {
    t.status = "below-noise";
    return;
  }
  if (d2 >= 9.99 * d0 && d2 > 10.0 * f2) {
    t.status = "diverges";
    return;
  }
  const double floor_abs = 1e-6 * std::max({d0, d1, d2});
  const double s21 = std::abs(t.estimates[L - 1] - t.estimates[L - 2]);
  const double s10 = std::abs(t.estimates[L - 2] - t.estimates[L - 3]);
  if (s21 <= 1e-3 * std::max(d1, d2) + floor_abs &&
      s10 <= 1e-3 * std::max(d0, d1) + floor_abs) {
    t.status = "converged";
    return;
  }
  if (d2 <= 0.5 * d0 && d1 <= 1.1 * d0) {
    t.status = "decays-to-zero";
    return;
  }
  t.status = "indeterminate";
}

double binom(int k, int i) {
  double v = 1.0;
  for (int m = 1; m <= i; ++m) v = v * (k - m + 1) / m;
  return v;
}

// Aitken delta-squared acceleration; a vanishing second difference means
// the sequence already settled, so the raw value passes through.
std::vector<double> aitken(const std::vector<double>& s) {
  std::vector<double> out;
  for (std::size_t i = 2; i < s.size(); ++i) {
    const double d21 = s[i] - s[i - 1];
    const double d10 = s[i - 1] - s[i - 2];
    const double dd = d21 - d10;
    const double scale =
        std::max({std::abs(s[i]), std::abs(s[i - 1]), std::abs(s[i - 2]), 1.0});
    if (std::abs(dd) <= 1e-14 * scale)
      out.push_back(s[i]);
    else
      out.push_back(s[i] - d21 * d21 / dd);
  }
  return out;
}

// Angle between unit vectors via normalized differences; accurate for
// nearly parallel and nearly opposite pairs where acos loses digits.
double vector_angle(const Vec& p, const Vec& q) {
  const double pi = 3.14159265358979323846;
  if (p.dot(q) >= 0.0)
    return 2.0 * std::asin(std::min(1.0, (p - q).norm() / 2.0));
  return pi - 2.0 * std::asin(std::min(1.0, (p + q).norm() / 2.0));
}

constexpr int kEndpointLevels = 14;
constexpr int kTailSteps = 5;

// Follows the reparametrized chart curve toward one chord end at
// t = 10^{-j}.  The chart height along a chord is exactly linear-in-t up
// to a bounded factor, so its consecutive ratios separate the two limit
// behaviours cleanly: geometric decay means a boundary endpoint whose
// height limit is f^{-1}(0) = 0, geometric growth means the curve runs to
// the chart's point at infinity.  The tangential part is accelerated by
// one Richardson step, which the Cauchy verdict is taken on; raw iterates
// alone settle far too slowly for flat maps.
EndpointTrail trace_endpoint(const ReparamMap& f, const Geodesic& L) {
  EndpointTrail tr;
  std::vector<double> chart_v;
  bool chart_inf = false;
  for (int j = 1; j <= kEndpointLevels; ++j) {
    const double t = std::pow(10.0, -j);
    const ChartPoint cp = L.chart_point(t);
    if (cp.inf) {
      chart_inf = true;
      break;
    }
    tr.t.push_back(t);
    chart_v.push_back(cp.v);
    ChartPoint raw;
    raw.u = cp.u;
    raw.v = cp.v < 1e-300 ? 0.0 : f.inverse(cp.v);
    tr.raw.push_back(raw);
  }
  for (std::size_t i = 1; i < chart_v.size(); ++i)
    tr.height_ratio.push_back(chart_v[i] / chart_v[i - 1]);

  const std::size_t R = tr.height_ratio.size();
  auto tail_in = [&](double lo, double hi) {
    if (R < 3) return false;
    for (std::size_t i = R - 3; i < R; ++i)
      if (tr.height_ratio[i] < lo || tr.height_ratio[i] > hi) return false;
    return true;
  };

  if (chart_inf || tail_in(3.0, 1e308)) {
    tr.infinity = true;
    tr.converged = true;
    tr.limit = ChartPoint::at_infinity(L.n());
    return tr;
  }
  if (!tail_in(0.0, 1.0 / 3.0)) {
    tr.converged = false;
    tr.limit = tr.raw.back();
    return tr;
  }
  for (std::size_t i = 1; i < tr.raw.size(); ++i) {
    ChartPoint est;
    est.u = (10.0 * tr.raw[i].u - tr.raw[i - 1].u) / 9.0;
    est.v = 0.0;
    tr.estimate.push_back(est);
  }
  tr.limit = tr.estimate.back();
  double worst = 0.0;
  const std::size_t M = tr.estimate.size();
  for (std::size_t i = M - kTailSteps; i < M; ++i)
    worst = std::max(
        worst, (tr.estimate[i].u - tr.estimate[i - 1].u).lpNorm<Eigen::Infinity>());
  tr.max_step = worst;
  tr.converged = worst < 1e-6;
  return tr;
}

Vec boundary_secant(BoundaryModel model, const Geodesic& g, double t) {
  if (model == BoundaryModel::Proj) {
    // point(t) - a = t (b - a) exactly, so the unit secant never depends on
    // t; forming it this way avoids the cancellation at small t.
    (void)t;
    Vec d = g.b() - g.a();
    return d / d.norm();
  }
  // Conformal image of the chord: P(t) = k(t) / (1 + sqrt(gap)).  The
  // secant to the shared endpoint is formed before any cancellation:
  // P - a is parallel to t(b - a) - sqrt(gap) a.
  const double sigma = std::sqrt(g.boundary_gap(t));
  Vec num = t * (g.b() - g.a()) - sigma * g.a();
  return num / num.norm();
}

}  // namespace

SmoothnessReport classify_smoothness(const std::function<double(double)>& g,
                                     int k_max, int levels) {
  if (k_max < 1 || k_max > 5)
    throw std::invalid_argument("classify_smoothness: k_max must be 1..5");
  if (levels < 4)
    throw std::invalid_argument("classify_smoothness: need at least 4 levels");
  SmoothnessReport rep;
  rep.orders_checked = k_max;
  rep.smooth = true;
  rep.order = k_max;
  for (int k = 1; k <= k_max; ++k) {
    const Stencil& st = stencil_for(k);
    OrderTrail trail;
    trail.order = k;
    bool seen_nonzero = false;
    for (int j = 1; j <= levels; ++j) {
      const double y = std::pow(10.0, -j);
      const double h = y / 10.0;
      double sum = 0.0;
      double mag = 0.0;
      for (std::size_t m = 0; m < st.offsets.size(); ++m) {
        const double val = g(y + st.offsets[m] * h);
        if (!std::isfinite(val))
          throw std::domain_error("classify_smoothness: g not finite near 0");
        if (val != 0.0 && std::abs(val) < 2.3e-308) rep.underflow_seen = true;
        if (val == 0.0 && seen_nonzero) rep.underflow_seen = true;
        if (val != 0.0) seen_nonzero = true;
        sum += st.coeffs[m] * val;
        mag = std::max(mag, std::abs(val));
      }
      const double hk = std::pow(h, k);
      trail.estimates.push_back(sum / hk);
      trail.noise_floor.push_back((1 << k) * 8.0 * kEps * mag / hk);
    }
    classify_window(trail);
    if (trail.status == "diverges" && rep.smooth) {
      rep.smooth = false;
      rep.order = k;
    }
    rep.evidence.push_back(std::move(trail));
  }
  return rep;
}

FlatnessReport flatness_order(const ReparamMap& f, int k_max) {
  constexpr int kLevels = 17;
  FlatnessReport rep;
  rep.orders_checked = k_max;
  rep.flat = true;
  rep.order = k_max;
  for (int k = 1; k <= k_max; ++k) {
    std::vector<double> est;
    for (int j = 0; j < kLevels; ++j) {
      const double h = std::ldexp(0.5, -j);
      double sum = 0.0;
      for (int i = 1; i <= k; ++i) {
        const double sign = ((k - i) % 2 == 0) ? 1.0 : -1.0;
        sum += sign * binom(k, i) * f.f(i * h);
      }
      est.push_back(sum / std::pow(h, k));
    }
    rep.estimates.push_back(std::move(est));
  }
  for (int k = 1; k <= k_max; ++k) {
    const auto& e = rep.estimates[k - 1];
    const double a = e[kLevels - 2];
    const double b = e[kLevels - 1];
    if (std::abs(a) > 1e-6 && std::abs(b) > 1e-6 &&
        std::abs(a - b) < 0.2 * std::max(std::abs(a), std::abs(b))) {
      rep.flat = false;
      rep.order = k;
      break;
    }
  }
  return rep;
}

HolderReport holder_exponent(const std::vector<HolderSample>& samples) {
  if (samples.size() < 2)
    throw std::invalid_argument("holder_exponent: need at least two samples");
  std::vector<double> lx, ly;
  lx.reserve(samples.size());
  ly.reserve(samples.size());
  for (const HolderSample& s : samples) {
    if (!(s.sep > 0.0) || !(s.image_sep > 0.0))
      throw std::invalid_argument("holder_exponent: separations must be positive");
    lx.push_back(std::log(s.sep));
    ly.push_back(std::log(s.image_sep));
  }
  HolderReport rep;
  rep.pairs = static_cast<int>(samples.size());
  const auto [mn, mx] = std::minmax_element(lx.begin(), lx.end());
  rep.decades = (*mx - *mn) / std::log(10.0);
  if (rep.decades < 2.0)
    throw std::invalid_argument(
        "holder_exponent: separations span fewer than two decades");
  const double N = static_cast<double>(lx.size());
  double mean_x = 0.0, mean_y = 0.0;
  for (std::size_t i = 0; i < lx.size(); ++i) {
    mean_x += lx[i];
    mean_y += ly[i];
  }
  mean_x /= N;
  mean_y /= N;
  double sxx = 0.0, sxy = 0.0;
  for (std::size_t i = 0; i < lx.size(); ++i) {
    sxx += (lx[i] - mean_x) * (lx[i] - mean_x);
    sxy += (lx[i] - mean_x) * (ly[i] - mean_y);
  }
  rep.slope = sxy / sxx;
  const double intercept = mean_y - rep.slope * mean_x;
  double ss = 0.0;
  for (std::size_t i = 0; i < lx.size(); ++i) {
    const double r = ly[i] - (intercept + rep.slope * lx[i]);
    ss += r * r;
  }
  rep.residual = std::sqrt(ss / N);
  return rep;
}

Geodesic::Geodesic(Vec a, Vec b) : a_(std::move(a)), b_(std::move(b)) {
  if (a_.size() != b_.size() || a_.size() < 2)
    throw std::invalid_argument("Geodesic: endpoints must share dimension >= 2");
  for (Vec* v : {&a_, &b_}) {
    const double r = v->norm();
    if (std::abs(r - 1.0) > 1e-9)
      throw std::invalid_argument("Geodesic: endpoints must be unit vectors");
    *v /= r;
  }
  if ((a_ - b_).lpNorm<Eigen::Infinity>() <= 1e-9)
    throw std::invalid_argument("Geodesic: endpoints must be distinct");
  dot_ = a_.dot(b_);
}

Vec Geodesic::point(double t) const { return (1.0 - t) * a_ + t * b_; }

double Geodesic::boundary_gap(double t) const {
  // |point(t)|^2 = 1 - 2 t (1-t) (1 - a.b); the product form is exact at
  // the ends and free of cancellation near them.
  return 2.0 * t * (1.0 - t) * (1.0 - dot_);
}

ChartPoint Geodesic::chart_point(double t) const {
  const int nn = n();
  const double wa = 1.0 - a_[nn - 1];
  const double wb = 1.0 - b_[nn - 1];
  const double w = (1.0 - t) * wa + t * wb;
  if (w < 1e-150) return ChartPoint::at_infinity(nn);
  ChartPoint q;
  q.u = ((1.0 - t) * a_.head(nn - 1) + t * b_.head(nn - 1)) / w;
  q.v = boundary_gap(t) / (w * w);
  return q;
}

EndpointsReport endpoints_under(const ReparamMap& f, const Geodesic& L) {
  EndpointsReport rep;
  rep.start = trace_endpoint(f, L);
  rep.finish = trace_endpoint(f, L.reversed());
  if (rep.start.converged && rep.finish.converged) {
    if (rep.start.infinity != rep.finish.infinity)
      rep.distinct = true;
    else if (!rep.start.infinity)
      rep.distinct =
          (rep.start.limit.u - rep.finish.limit.u).lpNorm<Eigen::Infinity>() >
          1e-6;
  }
  return rep;
}

TangencyReport boundary_tangency_angle(BoundaryModel model, const Geodesic& g1,
                                       const Geodesic& g2) {
  if ((g1.a() - g2.a()).lpNorm<Eigen::Infinity>() > 1e-9)
    throw std::invalid_argument(
        "boundary_tangency_angle: chords must share endpoint a");
  TangencyReport rep;
  if ((g1.b() - g2.b()).lpNorm<Eigen::Infinity>() <= 1e-12) {
    rep.angle = 0.0;
    rep.converged = true;
    return rep;
  }
  for (int j = 1; j <= 11; ++j) {
    const double t = std::pow(10.0, -j);
    rep.raw.push_back(vector_angle(boundary_secant(model, g1, t),
                                   boundary_secant(model, g2, t)));
  }
  rep.accelerated = aitken(rep.raw);
  rep.angle = rep.accelerated.back();
  const std::size_t m = rep.accelerated.size();
  rep.converged =
      std::abs(rep.accelerated[m - 1] - rep.accelerated[m - 2]) < 1e-6;
  return rep;
}

TransversalityReport transversality_check(const ReparamMap& f,
                                          const Geodesic& L) {
  TransversalityReport rep;
  EndpointTrail tr = trace_endpoint(f, L);
  if (tr.infinity) {
    tr = trace_endpoint(f, L.reversed());
    rep.used_reverse_end = true;
  }
  if (!tr.converged || tr.infinity) return rep;
  const Vec& ustar = tr.limit.u;
  // The secant distance to the limit shrinks linearly in t while its roundoff
  // stays at eps * |ustar|, so the deep tail of the trail only contributes
  // noise to the angle.  Keep levels while the distance is safely above that
  // floor (at least four, so the acceleration has material to work with).
  const double floor_u = 1e-8 * (1.0 + ustar.norm());
  for (const ChartPoint& q : tr.raw) {
    const double du = (q.u - ustar).norm();
    if (du < floor_u && rep.raw.size() >= 4) break;
    rep.raw.push_back(std::atan2(q.v, du));
  }
  rep.accelerated = aitken(rep.raw);
  rep.angle = rep.accelerated.back();
  const std::size_t m = rep.accelerated.size();
  rep.converged =
      std::abs(rep.accelerated[m - 1] - rep.accelerated[m - 2]) < 1e-6;
  rep.transversal = rep.converged && rep.angle > 1e-3;
  return rep;
}

namespace {

// Point error in the ambient model, relative once coordinates leave O(1).
double point_gap(const ModelPoint& a, const ModelPoint& b) {
  if (a.is_infinity() || b.is_infinity())
    return a.is_infinity() == b.is_infinity()
               ? 0.0
               : std::numeric_limits<double>::infinity();
  const double scale = std::max(1.0, a.coords().lpNorm<Eigen::Infinity>());
  return (a.coords() - b.coords()).lpNorm<Eigen::Infinity>() / scale;
}

// Distance of an image from the boundary stratum of its model.
double boundary_drift(const ModelPoint& p) {
  if (p.is_infinity()) return 0.0;  // the missed point lies on the boundary
  if (p.model() == Model::ChartKC || p.model() == Model::ChartPC)
    return std::abs(p.coords()[p.n() - 1]);
  return std::abs(p.coords().norm() - 1.0);
}

bool well_conditioned(const ModelPoint& p) {
  return !p.is_infinity() && p.coords().lpNorm<Eigen::Infinity>() <= 1e3;
}

}  // namespace

ActionAxiomsReport action_axioms(Rng& rng, const CompactifiedAction& action,
                                 int n, int samples) {
  if (n < 2) throw std::invalid_argument("action_axioms: need n >= 2");
  if (samples < 1) throw std::invalid_argument("action_axioms: need samples >= 1");
  const Model ambient = action.ambient(n);
  const GroupElement e = GroupElement::identity(n);

  auto draw_point = [&](bool boundary) {
    switch (ambient) {
      case Model::KleinClosed:
        return boundary ? ModelPoint::klein(rng.unit_vector(n))
                        : ModelPoint::klein(rng.ball_interior(n, 0.9));
      case Model::PoincareClosed:
        return boundary ? ModelPoint::poincare(rng.unit_vector(n))
                        : ModelPoint::poincare(rng.ball_interior(n, 0.9));
      default: {
        Vec c(n);
        c.head(n - 1) = rng.ball_interior(n - 1, 2.0);
        c[n - 1] = boundary ? 0.0 : rng.uniform(0.05, 3.0);
        return ModelPoint::chart_kc(c);
      }
    }
  };

  ActionAxiomsReport rep;
  int guard = 0;
  while (rep.samples < samples) {
    if (++guard > 60 * samples)
      throw std::runtime_error("action_axioms: resampling did not settle");
    const bool boundary = rep.samples % 10 == 0;
    const GroupElement g = rng.group_element(n, 0.5);
    const GroupElement h = rng.group_element(n, 0.5);
    const ModelPoint q = draw_point(boundary);

    const ModelPoint hq = action.act(h, q);
    const ModelPoint ghq = action.act(g, hq);
    const ModelPoint gh_q = action.act(g * h, q);
    if (!well_conditioned(hq) || !well_conditioned(ghq) ||
        !well_conditioned(gh_q)) {
      ++rep.resampled;
      continue;
    }

    const double comp = point_gap(ghq, gh_q);
    const double id = point_gap(action.act(e, q), q);
    rep.composition_errors.push_back(comp);
    rep.identity_errors.push_back(id);
    rep.max_composition = std::max(rep.max_composition, comp);
    rep.max_identity = std::max(rep.max_identity, id);
    if (boundary) {
      const double drift = boundary_drift(action.act(g, q));
      rep.boundary_errors.push_back(drift);
      rep.max_boundary = std::max(rep.max_boundary, drift);
      ++rep.boundary_samples;
    }
    ++rep.samples;
  }
  return rep;
}

}  // namespace ballcomp
