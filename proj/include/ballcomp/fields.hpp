#pragma once

#include <optional>

#include "ballcomp/actions.hpp"
#include "ballcomp/lorentz.hpp"
#include "ballcomp/models.hpp"

namespace ballcomp {

// Value of a chart vector field at a chart point; components are ordered
// (d/dx_1, ..., d/dx_{n-1}, d/dy).
struct FieldEvaluation {
  Vec point;
  Vec vector;
};

// Field of the projective action induced by an algebra element, in the
// half-space chart.  Tagged generators use their closed forms:
//   X_i -> e_i,   H -> (2 x, 4 y),
//   Y_1 -> (y + x_2^2 + ... + x_{n-1}^2 - x_1^2, -2 x_1 x_j ..., -4 x_1 y),
//   Y_i by conjugating Y_1 with the quarter-turn in the (x_1, x_i) plane,
//   R_{jk} -> (-x_k at slot j, x_j at slot k).
// Untagged elements differentiate t -> exp(tX).q numerically.
Vec proj_field(const AlgebraElement& x, const Vec& q);

// Central-difference derivative of the chart action with one Richardson
// level; exposed so closed forms can be cross-checked.
Vec proj_field_numeric(const AlgebraElement& x, const Vec& q,
                       double step = 1e-5);

// Pullback under (x, y) -> (x, f(y)): x-part of the projective field at
// (x, f(y)), y-part divided by f'(y).  At y = 0 the closed forms evaluate
// through f/f'; absent a continuous extension of f/f' there is no value and
// the evaluation reports failure instead.
std::optional<Vec> pullback_field(const ReparamMap& f, const AlgebraElement& x,
                                  const Vec& q);

double f_over_fprime(const ReparamMap& f, double y);

// Largest discrepancy between the closed forms and the numeric derivative of
// the chart action, over a fixed interior probe set; cheap startup assertion
// that the generator normalization matches the chart formulas.
double calibration_check(int n);

}  // namespace ballcomp
