#pragma once

#include <functional>
#include <string>
#include <vector>

#include "ballcomp/actions.hpp"
#include "ballcomp/models.hpp"
#include "ballcomp/sampling.hpp"

namespace ballcomp {

// Evidence from the seeded action-axiom sweep: composition against the group
// product, identity, and boundary preservation, with per-sample errors kept
// for tabular output.
struct ActionAxiomsReport {
  int samples = 0;
  int boundary_samples = 0;
  int resampled = 0;  // ill-conditioned draws replaced
  double max_composition = 0.0;
  double max_identity = 0.0;
  double max_boundary = 0.0;
  std::vector<double> composition_errors;  // one per kept triple
  std::vector<double> identity_errors;
  std::vector<double> boundary_errors;  // one per kept boundary triple
};

// Checks act(g, act(h, q)) = act(gh, q) and act(e, q) = q over seeded
// triples, every tenth q on the boundary (whose image height/radius drift is
// measured separately).  Chart draws whose images leave a bounded coordinate
// window or hit the missed point are replaced and counted, so the statistics
// measure the action, not coordinate blow-ups near the chart's infinity.
ActionAxiomsReport action_axioms(Rng& rng, const CompactifiedAction& action,
                                 int n, int samples);

// Per-order evidence from the derivative cascade: finite-difference
// estimates of g^(k) at y_j = 10^{-j} together with the rounding-noise
// scale of each estimate, and how the last three levels behaved.
struct OrderTrail {
  int order = 0;
  std::vector<double> estimates;
  std::vector<double> noise_floor;
  std::string status;   // converged | decays-to-zero | below-noise |
                        // diverges | indeterminate
  double window_ratio = 0.0;  // |D(last)| / |D(last-2)|
};

struct SmoothnessReport {
  int orders_checked = 0;
  bool smooth = false;  // false means the estimates blow up at `order`
  int order = 0;        // orders_checked when smooth, else first bad order
  bool underflow_seen = false;
  std::vector<OrderTrail> evidence;
};

// Classifies the boundary behaviour of g on (0, 1]: derivative estimates of
// orders 1..k_max at geometrically shrinking y, each with step y/10.  An
// order whose estimates grow tenfold per window while clearly above the
// rounding floor marks the blow-up order; estimates that stay below the
// floor count as converged to zero at the available resolution.
SmoothnessReport classify_smoothness(const std::function<double(double)>& g,
                                     int k_max = 5, int levels = 8);

struct FlatnessReport {
  bool flat = false;
  int order = 0;  // first order with a stable nonzero derivative at 0
  int orders_checked = 0;
  std::vector<std::vector<double>> estimates;  // [order-1][grid level]
};

// Forward-difference probe of f at 0 on dyadic grids: reports the first
// order whose estimate is stable (> 1e-6, relative drift < 0.2 across the
// two finest levels), or flat-to-resolution.
FlatnessReport flatness_order(const ReparamMap& f, int k_max = 5);

struct HolderSample {
  double sep = 0.0;        // |u - v|
  double image_sep = 0.0;  // |phi(u) - phi(v)|
};

struct HolderReport {
  double slope = 0.0;
  double residual = 0.0;  // RMS about the regression line
  double decades = 0.0;   // log10 spread of the separations
  int pairs = 0;
};

// Least-squares slope of log image separation against log separation.
// Throws when the separations span fewer than two decades.
HolderReport holder_exponent(const std::vector<HolderSample>& samples);

// Boundary chord of the ball: endpoints on the unit sphere, parametrized
// by t in [0, 1].  Evaluation keeps 1 - |point|^2 in product form so the
// boundary gap stays accurate down to the last bit.
class Geodesic {
 public:
  Geodesic(Vec a, Vec b);
  int n() const { return static_cast<int>(a_.size()); }
  const Vec& a() const { return a_; }
  const Vec& b() const { return b_; }
  Geodesic reversed() const { return Geodesic(b_, a_); }
  Vec point(double t) const;
  double boundary_gap(double t) const;  // 1 - |point(t)|^2, exact at t = 0, 1
  ChartPoint chart_point(double t) const;

 private:
  Vec a_, b_;
  double dot_;
};

// One end of a compactified chord: raw curve samples at t = 10^{-j}, the
// height-decay ratios that witness where the limit lands, and the
// accelerated estimates whose Cauchy behaviour the verdict relies on.
struct EndpointTrail {
  std::vector<double> t;
  std::vector<ChartPoint> raw;       // half-space samples (u, y)
  std::vector<double> height_ratio;  // consecutive chart-height ratios
  std::vector<ChartPoint> estimate;
  ChartPoint limit;
  bool infinity = false;
  bool converged = false;
  double max_step = 0.0;  // largest estimator step over the tail window
};

struct EndpointsReport {
  EndpointTrail start;   // t -> 0
  EndpointTrail finish;  // t -> 1
  bool distinct = false;
};

// Limits of the reparametrized chart curve at both chord ends, with the
// full iterate trail as evidence.
EndpointsReport endpoints_under(const ReparamMap& f, const Geodesic& L);

enum class BoundaryModel { Proj, Conf };

struct TangencyReport {
  double angle = 0.0;
  std::vector<double> raw;          // secant angles at t = 10^{-j}
  std::vector<double> accelerated;  // Aitken-extrapolated tail
  bool converged = false;
};

// Angle between two chords sharing the endpoint a, measured at the
// boundary: straight Klein secants for Proj, secants of the conformal
// images for Conf.  Small angles come from normalized-difference formulas,
// not acos.
TangencyReport boundary_tangency_angle(BoundaryModel model, const Geodesic& g1,
                                       const Geodesic& g2);

struct TransversalityReport {
  bool transversal = false;
  double angle = 0.0;
  std::vector<double> raw;
  std::vector<double> accelerated;
  bool converged = false;
  bool used_reverse_end = false;  // first end fell on the chart's missed point
};

// Angle between the compactified chord and the boundary plane y = 0 at its
// endpoint, Aitken-extrapolated; transversal iff it converges above 1e-3.
TransversalityReport transversality_check(const ReparamMap& f, const Geodesic& L);

}  // namespace ballcomp
