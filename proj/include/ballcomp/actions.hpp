#pragma once

#include "ballcomp/lorentz.hpp"
#include "ballcomp/models.hpp"

namespace ballcomp {

// Raw half-space chart point used by the action kernel and the diagnostics:
// u is the boundary-parallel part (size n-1), v >= 0 the height.
struct ChartPoint {
  Vec u;
  double v = 0.0;
  bool inf = false;

  static ChartPoint at_infinity(int n) {
    ChartPoint q;
    q.u = Vec::Zero(n - 1);
    q.inf = true;
    return q;
  }
};

ChartPoint chart_point_of(const ModelPoint& q);       // ChartKC ModelPoint -> raw
ModelPoint model_point_of(const ChartPoint& q, int n);  // raw -> ChartKC

// Projective action written directly in the half-space chart.  The chart
// point is homogenized as w = (u, (|u|^2+v-1)/2, (|u|^2+v+1)/2), for which
// Q(w) = -v identically; since the group preserves Q, the image height is
// v / d^2 with d the (timelike - last spatial) component of m w.  Using the
// conserved form keeps heights exact on the boundary and preserves heights
// far below rounding scale, which the flat reparametrizations need.
ChartPoint chart_kc_apply_proj(const GroupElement& g, const ChartPoint& q);

ModelPoint act_proj(const GroupElement& g, const ModelPoint& klein_point);
ModelPoint act_conf(const GroupElement& g, const ModelPoint& poincare_point);
ModelPoint act_reparam(const ReparamMap& f, const GroupElement& g,
                       const ModelPoint& chart_point);

enum class ActionKind { Proj, Conf, Reparam };

// One compactified action with its ambient model, for callers that dispatch
// on a configured family.
class CompactifiedAction {
public:
  static CompactifiedAction proj() {
    return CompactifiedAction(ActionKind::Proj, ReparamMap::monomial(1));
  }
  static CompactifiedAction conf() {
    return CompactifiedAction(ActionKind::Conf, ReparamMap::monomial(1));
  }
  static CompactifiedAction reparam(ReparamMap f) {
    return CompactifiedAction(ActionKind::Reparam, std::move(f));
  }

  ActionKind kind() const { return kind_; }
  Model ambient(int /*n*/) const {
    switch (kind_) {
      case ActionKind::Proj: return Model::KleinClosed;
      case ActionKind::Conf: return Model::PoincareClosed;
      case ActionKind::Reparam: return Model::ChartKC;
    }
    return Model::KleinClosed;
  }
  const ReparamMap& map() const { return f_; }
  ModelPoint act(const GroupElement& g, const ModelPoint& q) const;

private:
  CompactifiedAction(ActionKind k, ReparamMap f) : kind_(k), f_(std::move(f)) {}
  ActionKind kind_;
  ReparamMap f_;
};

}  // namespace ballcomp
