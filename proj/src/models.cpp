#include "ballcomp/models.hpp"

#include <cmath>
#include <stdexcept>

namespace ballcomp {

namespace {

void require(bool cond, const std::string& msg) {
  if (!cond) throw std::invalid_argument(msg);
}

void require_model(const ModelPoint& p, Model m, const char* who) {
  require(p.model() == m,
          std::string(who) + ": wrong source model " + model_name(p.model()));
}

constexpr double kSnapBand = 1e-9;

}  // namespace

std::string model_name(Model m) {
  switch (m) {
    case Model::Hyperboloid: return "hyperboloid";
    case Model::KleinClosed: return "klein_closed";
    case Model::PoincareClosed: return "poincare_closed";
    case Model::ChartKC: return "chart_kc";
    case Model::ChartPC: return "chart_pc";
  }
  return "?";
}

ModelPoint ModelPoint::hyperboloid(const Vec& c, double tol) {
  require(c.size() >= 3, "hyperboloid point: need dimension >= 3");
  const double q = minkowski(c, c);
  require(std::abs(q + 1.0) <= tol * std::max(1.0, c.squaredNorm()),
          "hyperboloid point: Q != -1");
  require(c[c.size() - 1] > 0.0, "hyperboloid point: lower sheet");
  return ModelPoint(Model::Hyperboloid, c, static_cast<int>(c.size()) - 1,
                    false);
}

namespace {
Vec snap_ball(const Vec& c, const char* who) {
  const double r = c.norm();
  if (r <= 1.0) return c;
  if (r <= 1.0 + kSnapBand) return c / r;
  throw std::invalid_argument(std::string(who) + ": point outside closed ball");
}
}  // namespace

ModelPoint ModelPoint::klein(const Vec& c, double) {
  require(c.size() >= 2, "klein point: need n >= 2");
  return ModelPoint(Model::KleinClosed, snap_ball(c, "klein point"),
                    static_cast<int>(c.size()), false);
}

ModelPoint ModelPoint::poincare(const Vec& c, double) {
  require(c.size() >= 2, "poincare point: need n >= 2");
  return ModelPoint(Model::PoincareClosed, snap_ball(c, "poincare point"),
                    static_cast<int>(c.size()), false);
}

namespace {
Vec snap_halfspace(const Vec& c, const char* who) {
  const double y = c[c.size() - 1];
  if (y >= 0.0) return c;
  if (y >= -kSnapBand) {
    Vec out = c;
    out[c.size() - 1] = 0.0;
    return out;
  }
  throw std::invalid_argument(std::string(who) + ": negative height");
}
}  // namespace

ModelPoint ModelPoint::chart_kc(const Vec& c, double) {
  require(c.size() >= 2, "chart_kc point: need n >= 2");
  return ModelPoint(Model::ChartKC, snap_halfspace(c, "chart_kc point"),
                    static_cast<int>(c.size()), false);
}

ModelPoint ModelPoint::chart_pc(const Vec& c, double) {
  require(c.size() >= 2, "chart_pc point: need n >= 2");
  return ModelPoint(Model::ChartPC, snap_halfspace(c, "chart_pc point"),
                    static_cast<int>(c.size()), false);
}

ModelPoint ModelPoint::infinity(Model chart, int n) {
  require(chart == Model::ChartKC || chart == Model::ChartPC,
          "infinity: only the half-space charts have a point at infinity");
  return ModelPoint(chart, Vec(), n, true);
}

const Vec& ModelPoint::coords() const {
  if (infinity_)
    throw std::domain_error("ModelPoint: coordinates of the point at infinity");
  return coords_;
}

bool ModelPoint::is_boundary(double tol) const {
  switch (model_) {
    case Model::Hyperboloid:
      return false;
    case Model::KleinClosed:
    case Model::PoincareClosed:
      return std::abs(coords_.norm() - 1.0) <= tol;
    case Model::ChartKC:
    case Model::ChartPC:
      return !infinity_ && std::abs(coords_[coords_.size() - 1]) <= tol;
  }
  return false;
}

ModelPoint hyperboloid_to_klein(const ModelPoint& p) {
  require_model(p, Model::Hyperboloid, "hyperboloid_to_klein");
  const Vec& c = p.coords();
  const auto n = c.size() - 1;
  return ModelPoint::klein(c.head(n) / c[n]);
}

ModelPoint klein_to_hyperboloid(const ModelPoint& k) {
  require_model(k, Model::KleinClosed, "klein_to_hyperboloid");
  const Vec& c = k.coords();
  const double r2 = c.squaredNorm();
  require(r2 < 1.0, "klein_to_hyperboloid: boundary point has no lift");
  const double t = 1.0 / std::sqrt(1.0 - r2);
  Vec out(c.size() + 1);
  out.head(c.size()) = t * c;
  out[c.size()] = t;
  return ModelPoint::hyperboloid(out);
}

ModelPoint klein_to_poincare(const ModelPoint& k) {
  require_model(k, Model::KleinClosed, "klein_to_poincare");
  const Vec& c = k.coords();
  // On the boundary sphere the two models share coordinates.  Going through
  // sqrt(1 - |c|^2) there would amplify the last-bit radius defect of a
  // snapped point to sqrt(eps), so the identity is taken literally.
  if (k.is_boundary()) return ModelPoint::poincare(c);
  const double s = std::sqrt(std::max(0.0, 1.0 - c.squaredNorm()));
  return ModelPoint::poincare(c / (1.0 + s));
}

ModelPoint poincare_to_klein(const ModelPoint& p) {
  require_model(p, Model::PoincareClosed, "poincare_to_klein");
  const Vec& c = p.coords();
  if (p.is_boundary()) return ModelPoint::klein(c);
  return ModelPoint::klein(2.0 * c / (1.0 + c.squaredNorm()));
}

/*
 * Half-space chart of the ball model by straight chords:
 *
 *   (x, y) |-> ( x / (1 - y), (1 - |x|^2 - y^2) / (1 - y)^2 )
 *
 * with (0,...,0,1) sent to the point at infinity.  The inverse recovers the
 * ball point from t = 2 / (1 + v + |u|^2) as (u t, 1 - t).
 */
ModelPoint klein_to_chart_kc(const ModelPoint& k) {
  require_model(k, Model::KleinClosed, "klein_to_chart_kc");
  const Vec& c = k.coords();
  const auto n = c.size();
  const double y = c[n - 1];
  const double om = 1.0 - y;
  if (om <= 1e-13) return ModelPoint::infinity(Model::ChartKC, static_cast<int>(n));
  Vec out(n);
  out.head(n - 1) = c.head(n - 1) / om;
  double num = 1.0 - c.squaredNorm();
  if (std::abs(num) <= 1e-12) num = 0.0;  // boundary input, cancel the noise
  out[n - 1] = std::max(0.0, num) / (om * om);
  return ModelPoint::chart_kc(out);
}

ModelPoint chart_kc_to_klein(const ModelPoint& q) {
  require_model(q, Model::ChartKC, "chart_kc_to_klein");
  if (q.is_infinity()) {
    Vec c = Vec::Zero(q.n());
    c[q.n() - 1] = 1.0;
    return ModelPoint::klein(c);
  }
  const Vec& c = q.coords();
  const auto n = c.size();
  const double v = c[n - 1];
  const double u2 = c.head(n - 1).squaredNorm();
  const double t = 2.0 / (1.0 + v + u2);
  Vec out(n);
  out.head(n - 1) = t * c.head(n - 1);
  out[n - 1] = (v + u2 - 1.0) / (v + u2 + 1.0);
  return ModelPoint::klein(out);
}

/*
 * Half-space chart of the conformal ball: lift to the upper unit hemisphere
 * through the inverse stereographic projection from (0,...,0,-1), then
 * project stereographically from the equator point (0,...,0,1,0) onto the
 * vertical half-space.  Composed, for a ball point p:
 *
 *   p |-> ( 2 p_1, ..., 2 p_{n-1}, 1 - |p|^2 ) / (1 + |p|^2 - 2 p_n)
 *
 * with (0,...,0,1) sent to the point at infinity.
 */
ModelPoint poincare_to_chart_pc(const ModelPoint& p) {
  require_model(p, Model::PoincareClosed, "poincare_to_chart_pc");
  const Vec& c = p.coords();
  const auto n = c.size();
  const double w = c.squaredNorm();
  const double den = 1.0 + w - 2.0 * c[n - 1];
  if (den <= 1e-13) return ModelPoint::infinity(Model::ChartPC, static_cast<int>(n));
  Vec out(n);
  out.head(n - 1) = 2.0 * c.head(n - 1) / den;
  double num = 1.0 - w;
  if (std::abs(num) <= 1e-12) num = 0.0;
  out[n - 1] = std::max(0.0, num) / den;
  return ModelPoint::chart_pc(out);
}

ModelPoint chart_pc_to_poincare(const ModelPoint& q) {
  require_model(q, Model::ChartPC, "chart_pc_to_poincare");
  if (q.is_infinity()) {
    Vec c = Vec::Zero(q.n());
    c[q.n() - 1] = 1.0;
    return ModelPoint::poincare(c);
  }
  const Vec& c = q.coords();
  const auto n = c.size();
  const double t = c[n - 1];
  const double mu = 2.0 / (1.0 + c.head(n - 1).squaredNorm() + t * t);
  Vec out(n);
  out.head(n - 1) = mu * c.head(n - 1);
  out[n - 1] = 1.0 - mu;
  const double den = 1.0 + mu * t;
  return ModelPoint::poincare(out / den);
}

double hyperbolic_distance(const ModelPoint& p, const ModelPoint& q) {
  require_model(p, Model::Hyperboloid, "hyperbolic_distance");
  require_model(q, Model::Hyperboloid, "hyperbolic_distance");
  const Vec d = p.coords() - q.coords();
  const double qq = std::max(0.0, minkowski(d, d));
  return 2.0 * std::asinh(0.5 * std::sqrt(qq));
}

// ---------------------------------------------------------------------------
// ReparamMap

ReparamMap ReparamMap::monomial(int p) {
  require(p >= 1, "ReparamMap::monomial: need p >= 1");
  ReparamMap m;
  m.kind_ = Kind::Monomial;
  m.p_ = p;
  m.name_ = "p=" + std::to_string(p);
  return m;
}

ReparamMap ReparamMap::flat_f1() {
  ReparamMap m;
  m.kind_ = Kind::FlatF1;
  m.name_ = "f1";
  return m;
}

ReparamMap ReparamMap::flat_f2() {
  ReparamMap m;
  m.kind_ = Kind::FlatF2;
  m.name_ = "f2";
  return m;
}

ReparamMap ReparamMap::custom(std::string name, Fn f, Fn fprime, Fn ratio,
                              Fn inverse, bool ratio_extends) {
  require(static_cast<bool>(f) && static_cast<bool>(fprime),
          "ReparamMap::custom: need f and f'");
  ReparamMap m;
  m.kind_ = Kind::Custom;
  m.name_ = std::move(name);
  m.f_ = std::move(f);
  m.fprime_ = std::move(fprime);
  m.ratio_ = std::move(ratio);
  m.inverse_ = std::move(inverse);
  m.ratio_extends_ = ratio_extends;
  // Homeomorphism sanity: fixes 0, strictly increasing on a sample grid.
  require(m.f_(0.0) == 0.0, "ReparamMap::custom: f(0) != 0");
  double prev = 0.0;
  for (double y = 0.25; y <= 8.0; y += 0.25) {
    const double fy = m.f_(y);
    require(fy > prev, "ReparamMap::custom: f not strictly increasing");
    prev = fy;
  }
  return m;
}

namespace {

double flat1_raw(double y) { return std::exp(-1.0 / (y * y)); }
double flat1_raw_prime(double y) {
  return 2.0 * std::pow(y, -3.0) * flat1_raw(y);
}
double flat2_raw(double y) { return std::exp(-std::pow(y, -1.5)); }
double flat2_raw_prime(double y) {
  return 1.5 * std::pow(y, -2.5) * flat2_raw(y);
}

}  // namespace

double ReparamMap::f(double y) const {
  require(y >= 0.0, "ReparamMap::f: negative argument");
  switch (kind_) {
    case Kind::Monomial:
      if (p_ == 1) return y;
      if (p_ == 2) return y * y;
      return std::pow(y, p_);
    case Kind::FlatF1:
      if (y == 0.0) return 0.0;
      if (y <= flat_germ_end) return flat1_raw(y);
      return flat1_raw(flat_germ_end) +
             flat1_raw_prime(flat_germ_end) * (y - flat_germ_end);
    case Kind::FlatF2:
      if (y == 0.0) return 0.0;
      if (y <= flat_germ_end) return flat2_raw(y);
      return flat2_raw(flat_germ_end) +
             flat2_raw_prime(flat_germ_end) * (y - flat_germ_end);
    case Kind::Custom:
      return f_(y);
  }
  return 0.0;
}

double ReparamMap::fprime(double y) const {
  require(y >= 0.0, "ReparamMap::fprime: negative argument");
  switch (kind_) {
    case Kind::Monomial:
      if (p_ == 1) return 1.0;
      return p_ * std::pow(y, p_ - 1);
    case Kind::FlatF1:
      if (y == 0.0) return 0.0;
      if (y <= flat_germ_end) return flat1_raw_prime(y);
      return flat1_raw_prime(flat_germ_end);
    case Kind::FlatF2:
      if (y == 0.0) return 0.0;
      if (y <= flat_germ_end) return flat2_raw_prime(y);
      return flat2_raw_prime(flat_germ_end);
    case Kind::Custom:
      return fprime_(y);
  }
  return 0.0;
}

double ReparamMap::f_over_fprime(double y) const {
  require(y >= 0.0, "ReparamMap::f_over_fprime: negative argument");
  switch (kind_) {
    case Kind::Monomial:
      return y / p_;
    case Kind::FlatF1:
      if (y <= flat_germ_end) return 0.5 * y * y * y;
      return f(y) / flat1_raw_prime(flat_germ_end);
    case Kind::FlatF2:
      if (y <= flat_germ_end) return (2.0 / 3.0) * std::pow(y, 2.5);
      return f(y) / flat2_raw_prime(flat_germ_end);
    case Kind::Custom:
      if (ratio_) return ratio_(y);
      if (y == 0.0) {
        require(ratio_extends_,
                "ReparamMap::f_over_fprime: no continuous extension at 0");
        return 0.0;
      }
      return f_(y) / fprime_(y);
  }
  return 0.0;
}

double ReparamMap::inverse(double v) const {
  require(v >= 0.0, "ReparamMap::inverse: negative argument");
  if (v == 0.0) return 0.0;
  switch (kind_) {
    case Kind::Monomial:
      if (p_ == 1) return v;
      if (p_ == 2) return std::sqrt(v);
      return std::pow(v, 1.0 / p_);
    case Kind::FlatF1: {
      const double edge = flat1_raw(flat_germ_end);
      if (v <= edge) return 1.0 / std::sqrt(-std::log(v));
      return flat_germ_end + (v - edge) / flat1_raw_prime(flat_germ_end);
    }
    case Kind::FlatF2: {
      const double edge = flat2_raw(flat_germ_end);
      if (v <= edge) return std::pow(-std::log(v), -2.0 / 3.0);
      return flat_germ_end + (v - edge) / flat2_raw_prime(flat_germ_end);
    }
    case Kind::Custom:
      if (inverse_) return inverse_(v);
      return invert_by_bisection(v);
  }
  return 0.0;
}

double ReparamMap::invert_by_bisection(double v) const {
  double hi = 1.0;
  int guard = 0;
  while (f_(hi) < v) {
    hi *= 2.0;
    require(++guard < 1100, "ReparamMap::inverse: range exhausted");
  }
  double lo = 0.0;
  for (int i = 0; i < 200; ++i) {
    const double mid = 0.5 * (lo + hi);
    if (f_(mid) < v)
      lo = mid;
    else
      hi = mid;
  }
  return 0.5 * (lo + hi);
}

ModelPoint apply_phi(const ReparamMap& f, const ModelPoint& q) {
  require(q.model() == Model::ChartKC || q.model() == Model::ChartPC,
          "apply_phi: chart point expected");
  if (q.is_infinity()) return q;
  Vec c = q.coords();
  c[c.size() - 1] = f.f(c[c.size() - 1]);
  return q.model() == Model::ChartKC ? ModelPoint::chart_kc(c)
                                     : ModelPoint::chart_pc(c);
}

ModelPoint apply_phi_inverse(const ReparamMap& f, const ModelPoint& q) {
  require(q.model() == Model::ChartKC || q.model() == Model::ChartPC,
          "apply_phi_inverse: chart point expected");
  if (q.is_infinity()) return q;
  Vec c = q.coords();
  c[c.size() - 1] = f.inverse(c[c.size() - 1]);
  return q.model() == Model::ChartKC ? ModelPoint::chart_kc(c)
                                     : ModelPoint::chart_pc(c);
}

}  // namespace ballcomp
