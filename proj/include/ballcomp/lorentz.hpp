#pragma once

#include <Eigen/Dense>
#include <optional>
#include <string>
#include <vector>

namespace ballcomp {

using Mat = Eigen::MatrixXd;
using Vec = Eigen::VectorXd;

// Quadratic form x1^2 + ... + xn^2 - y^2 on R^{n+1}.  Spatial slots come
// first, the timelike slot is last; J = diag(1,...,1,-1).
class LorentzForm {
public:
  explicit LorentzForm(int n);
  int n() const { return n_; }
  int dim() const { return n_ + 1; }
  Mat j() const;
  double q(const Vec& u) const { return minkowski_product(u, u); }

  static double minkowski_product(const Vec& u, const Vec& v);

private:
  int n_;
};

inline double minkowski(const Vec& u, const Vec& v) {
  return LorentzForm::minkowski_product(u, v);
}

// Distinguished one-parameter subgroups of so(n,1), named by their role in
// the half-space chart: the boost H scaling the chart, the abelian parabolic
// translations X_i fixing the chart's point at infinity, their opposites Y_i
// fixing the chart origin, and the rotations R_{jk} of the spatial slots.
struct GeneratorTag {
  enum class Kind { H, X, Y, R };
  Kind kind = Kind::H;
  int i = 0;  // index for X_i / Y_i, first rotation slot for R
  int j = 0;  // second rotation slot for R

  static GeneratorTag boost() { return {Kind::H, 0, 0}; }
  static GeneratorTag para_inf(int i) { return {Kind::X, i, 0}; }
  static GeneratorTag para_zero(int i) { return {Kind::Y, i, 0}; }
  static GeneratorTag rotation(int j, int k) { return {Kind::R, j, k}; }
  std::string name() const;
};

class AlgebraElement {
public:
  static AlgebraElement from_matrix(const Mat& x, double tol = 1e-9);
  static AlgebraElement from_matrix(const Mat& x, const GeneratorTag& tag,
                                    double tol = 1e-9);

  const Mat& mat() const { return x_; }
  int n() const { return static_cast<int>(x_.rows()) - 1; }
  const std::optional<GeneratorTag>& tag() const { return tag_; }

  AlgebraElement scaled(double c) const;
  AlgebraElement bracket_with(const AlgebraElement& other) const;

private:
  AlgebraElement(Mat x, std::optional<GeneratorTag> tag)
      : x_(std::move(x)), tag_(std::move(tag)) {}
  Mat x_;
  std::optional<GeneratorTag> tag_;
};

// Element of the identity component: m^T J m = J, det m > 0 and the
// lower-right entry positive (forward timelike cone preserved).
class GroupElement {
public:
  static GroupElement identity(int n);
  static GroupElement from_matrix(const Mat& m, double tol = 1e-9);

  const Mat& mat() const { return m_; }
  int n() const { return static_cast<int>(m_.rows()) - 1; }

  GroupElement inverse() const;  // J m^T J, exact for exact members
  GroupElement operator*(const GroupElement& other) const;

private:
  explicit GroupElement(Mat m) : m_(std::move(m)) {}
  Mat m_;
};

AlgebraElement generator(const GeneratorTag& tag, int n);

// H, X_1..X_{n-1}, Y_1..Y_{n-1}, R_{jk} for 1 <= j < k <= n-1; spans so(n,1).
std::vector<AlgebraElement> algebra_basis(int n);

// Weight of the parabolic translations under the boost: [H, X_i] = c X_i.
inline constexpr double parabolic_weight = 2.0;

// Scaling-and-squaring exponential; squarings chosen so the scaled norm is
// below 1/2, then a Taylor sum with tail bound.
Mat expm(const Mat& x);
GroupElement group_exp(const AlgebraElement& x);

// Involutions in the identity component whose common fixed-point set is the
// geodesic with the given boundary endpoints (unit vectors in the ball
// model).  One element for odd n, two commuting ones for even n; defined for
// n >= 3 only (in the plane no direct isometry fixes a geodesic pointwise).
std::vector<GroupElement> symmetry_through_geodesic(const Vec& a, const Vec& b,
                                                    int n);

}  // namespace ballcomp
