#include "ballcomp/actions.hpp"

#include <cmath>
#include <stdexcept>

namespace ballcomp {

namespace {

void require(bool cond, const std::string& msg) {
  if (!cond) throw std::invalid_argument(msg);
}

}  // namespace

ChartPoint chart_point_of(const ModelPoint& q) {
  require(q.model() == Model::ChartKC, "chart_point_of: chart_kc point expected");
  ChartPoint out;
  if (q.is_infinity()) return ChartPoint::at_infinity(q.n());
  const Vec& c = q.coords();
  out.u = c.head(c.size() - 1);
  out.v = c[c.size() - 1];
  return out;
}

ModelPoint model_point_of(const ChartPoint& q, int n) {
  if (q.inf) return ModelPoint::infinity(Model::ChartKC, n);
  Vec c(n);
  c.head(n - 1) = q.u;
  c[n - 1] = q.v;
  return ModelPoint::chart_kc(c);
}

ChartPoint chart_kc_apply_proj(const GroupElement& g, const ChartPoint& q) {
  const int n = g.n();
  const int d = n + 1;
  Vec w(d);
  double v = 0.0;
  if (q.inf) {
    // Null vector over the chart's point at infinity.
    w.setZero();
    w[n - 1] = 1.0;
    w[n] = 1.0;
  } else {
    require(q.u.size() == n - 1, "chart_kc_apply_proj: dimension mismatch");
    require(q.v >= 0.0, "chart_kc_apply_proj: negative height");
    v = q.v;
    const double u2 = q.u.squaredNorm();
    w.head(n - 1) = q.u;
    w[n - 1] = 0.5 * (u2 + v - 1.0);
    w[n] = 0.5 * (u2 + v + 1.0);
  }
  const Vec wp = g.mat() * w;
  const double den = wp[n] - wp[n - 1];
  if (std::abs(den) <= 1e-13 * wp.lpNorm<Eigen::Infinity>())
    return ChartPoint::at_infinity(n);
  ChartPoint out;
  out.u = wp.head(n - 1) / den;
  out.v = v / (den * den);
  return out;
}

ModelPoint act_proj(const GroupElement& g, const ModelPoint& k) {
  require(k.model() == Model::KleinClosed, "act_proj: klein point expected");
  require(g.n() == k.n(), "act_proj: dimension mismatch");
  const Vec& c = k.coords();
  const int n = k.n();
  Vec w(n + 1);
  w.head(n) = c;
  w[n] = 1.0;
  const Vec wp = g.mat() * w;
  if (wp[n] <= 1e-12 * wp.lpNorm<Eigen::Infinity>())
    throw std::domain_error(
        "act_proj: homogenizing coordinate vanished on a closed-ball input");
  return ModelPoint::klein(wp.head(n) / wp[n]);
}

ModelPoint act_conf(const GroupElement& g, const ModelPoint& p) {
  require(p.model() == Model::PoincareClosed, "act_conf: poincare point expected");
  require(g.n() == p.n(), "act_conf: dimension mismatch");
  const Vec& c = p.coords();
  const double s2 = 1.0 - c.squaredNorm();
  if (std::abs(s2) <= 1e-9) {
    // On the boundary sphere the conformal action reduces to the projective
    // one, and the interior route loses half the digits there: recovering the
    // radius via sqrt(1 - |k|^2) turns coordinate roundoff into sqrt(eps)
    // drift.  Evaluate through the null lift (theta, 1) and renormalize.
    const int n = p.n();
    Vec w(n + 1);
    w.head(n) = c / c.norm();
    w[n] = 1.0;
    const Vec wp = g.mat() * w;  // future null vector, so wp[n] > 0
    Vec theta = wp.head(n) / wp[n];
    theta /= theta.norm();
    return ModelPoint::poincare(theta);
  }
  return klein_to_poincare(act_proj(g, poincare_to_klein(p)));
}

ModelPoint act_reparam(const ReparamMap& f, const GroupElement& g,
                       const ModelPoint& q) {
  require(q.model() == Model::ChartKC, "act_reparam: chart_kc point expected");
  require(q.is_infinity() || g.n() == q.n(), "act_reparam: dimension mismatch");
  const int n = g.n();

  ChartPoint in;
  if (q.is_infinity()) {
    in = ChartPoint::at_infinity(n);
  } else {
    in = chart_point_of(q);
    // Flat maps underflow for tiny heights; such points are indistinguishable
    // from the boundary and are evaluated by the boundary formula (in = v -> 0
    // collapses to the exact-boundary path of the kernel).
    if (in.v < 1e-300) in.v = 0.0;
    else in.v = f.f(in.v);
  }

  ChartPoint img = chart_kc_apply_proj(g, in);
  if (img.inf) return ModelPoint::infinity(Model::ChartKC, n);
  img.v = f.inverse(img.v);
  return model_point_of(img, n);
}

ModelPoint CompactifiedAction::act(const GroupElement& g,
                                   const ModelPoint& q) const {
  switch (kind_) {
    case ActionKind::Proj: return act_proj(g, q);
    case ActionKind::Conf: return act_conf(g, q);
    case ActionKind::Reparam: return act_reparam(f_, g, q);
  }
  throw std::logic_error("CompactifiedAction: bad kind");
}

}  // namespace ballcomp
