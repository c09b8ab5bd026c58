#pragma once

#include <functional>
#include <optional>
#include <string>

#include "ballcomp/lorentz.hpp"

namespace ballcomp {

enum class Model { Hyperboloid, KleinClosed, PoincareClosed, ChartKC, ChartPC };

std::string model_name(Model m);

// A validated point of one of the five models.  Hyperboloid points live in
// R^{n+1} with Q = -1 and positive last coordinate; the closed ball models
// carry |coords| <= 1 with a snap band just outside; the half-space charts
// carry a nonnegative last coordinate plus a tagged point at infinity.
class ModelPoint {
public:
  static ModelPoint hyperboloid(const Vec& c, double tol = 1e-9);
  static ModelPoint klein(const Vec& c, double tol = 1e-9);
  static ModelPoint poincare(const Vec& c, double tol = 1e-9);
  static ModelPoint chart_kc(const Vec& c, double tol = 1e-9);
  static ModelPoint chart_pc(const Vec& c, double tol = 1e-9);
  static ModelPoint infinity(Model chart, int n);

  Model model() const { return model_; }
  bool is_infinity() const { return infinity_; }
  const Vec& coords() const;
  int n() const { return n_; }
  bool is_boundary(double tol = 1e-12) const;

private:
  ModelPoint(Model m, Vec c, int n, bool inf)
      : model_(m), coords_(std::move(c)), n_(n), infinity_(inf) {}
  Model model_;
  Vec coords_;
  int n_;
  bool infinity_;
};

ModelPoint hyperboloid_to_klein(const ModelPoint& p);
ModelPoint klein_to_hyperboloid(const ModelPoint& k);
ModelPoint klein_to_poincare(const ModelPoint& k);
ModelPoint poincare_to_klein(const ModelPoint& p);
ModelPoint klein_to_chart_kc(const ModelPoint& k);
ModelPoint chart_kc_to_klein(const ModelPoint& q);
ModelPoint poincare_to_chart_pc(const ModelPoint& p);
ModelPoint chart_pc_to_poincare(const ModelPoint& q);

// Geodesic distance through the hyperboloid model, in the stable form
// 2 asinh(sqrt(Q(p - q)) / 2).
double hyperbolic_distance(const ModelPoint& p, const ModelPoint& q);

// Boundary reparametrization (x, y) -> (x, f(y)) of the half-space chart.
// f is an increasing self-homeomorphism of [0, inf) with f(0) = 0.  The two
// named flat maps use their closed forms on [0, 4] and continue affinely
// (C^1) beyond, which keeps them bijective; every quantity the boundary
// diagnostics sample lives inside the closed-form region.
class ReparamMap {
public:
  enum class Kind { Monomial, FlatF1, FlatF2, Custom };
  using Fn = std::function<double(double)>;

  static ReparamMap monomial(int p);
  static ReparamMap flat_f1();  // exp(-1/y^2) germ
  static ReparamMap flat_f2();  // exp(-1/y^(3/2)) germ
  static ReparamMap custom(std::string name, Fn f, Fn fprime, Fn ratio,
                           Fn inverse = nullptr, bool ratio_extends = true);

  double f(double y) const;
  double fprime(double y) const;
  double f_over_fprime(double y) const;
  double inverse(double v) const;  // analytic per kind, else bisection

  Kind kind() const { return kind_; }
  int p() const { return p_; }
  const std::string& name() const { return name_; }
  // Whether f/f' extends continuously to y = 0 (with value 0).
  bool ratio_extends_at_zero() const { return ratio_extends_; }

private:
  ReparamMap() = default;
  double invert_by_bisection(double v) const;

  Kind kind_ = Kind::Monomial;
  int p_ = 1;
  std::string name_ = "p=1";
  Fn f_, fprime_, ratio_, inverse_;
  bool ratio_extends_ = true;
};

// Germ boundary for the named flat maps: closed forms on [0, flat_germ_end],
// affine beyond.
inline constexpr double flat_germ_end = 4.0;

ModelPoint apply_phi(const ReparamMap& f, const ModelPoint& q);
ModelPoint apply_phi_inverse(const ReparamMap& f, const ModelPoint& q);

}  // namespace ballcomp
