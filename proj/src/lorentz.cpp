#include "ballcomp/lorentz.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace ballcomp {

namespace {

void require(bool cond, const std::string& msg) {
  if (!cond) throw std::invalid_argument(msg);
}

double rel_scale(const Mat& m) {
  return std::max(1.0, m.lpNorm<Eigen::Infinity>());
}

}  // namespace

LorentzForm::LorentzForm(int n) : n_(n) {
  require(n >= 2, "LorentzForm: need n >= 2");
}

Mat LorentzForm::j() const {
  Mat m = Mat::Identity(dim(), dim());
  m(n_, n_) = -1.0;
  return m;
}

double LorentzForm::minkowski_product(const Vec& u, const Vec& v) {
  require(u.size() == v.size(), "minkowski: dimension mismatch");
  require(u.size() >= 3, "minkowski: need dimension >= 3");
  const auto n = u.size() - 1;
  double s = 0.0;
  for (Eigen::Index i = 0; i < n; ++i) s += u[i] * v[i];
  return s - u[n] * v[n];
}

std::string GeneratorTag::name() const {
  std::ostringstream os;
  switch (kind) {
    case Kind::H: os << "H"; break;
    case Kind::X: os << "X" << i; break;
    case Kind::Y: os << "Y" << i; break;
    case Kind::R: os << "R" << i << j; break;
  }
  return os.str();
}

AlgebraElement AlgebraElement::from_matrix(const Mat& x, double tol) {
  AlgebraElement e = from_matrix(x, GeneratorTag{}, tol);
  e.tag_.reset();
  return e;
}

AlgebraElement AlgebraElement::from_matrix(const Mat& x, const GeneratorTag& tag,
                                           double tol) {
  require(x.rows() == x.cols() && x.rows() >= 3,
          "AlgebraElement: need square matrix of size >= 3");
  const int n = static_cast<int>(x.rows()) - 1;
  const Mat j = LorentzForm(n).j();
  const double err = (x.transpose() * j + j * x).lpNorm<Eigen::Infinity>();
  require(err <= tol * rel_scale(x), "AlgebraElement: x^T J + J x != 0");
  return AlgebraElement(x, tag);
}

AlgebraElement AlgebraElement::scaled(double c) const {
  return AlgebraElement(c * x_, std::nullopt);
}

AlgebraElement AlgebraElement::bracket_with(const AlgebraElement& other) const {
  require(x_.rows() == other.x_.rows(), "bracket: dimension mismatch");
  return AlgebraElement(x_ * other.x_ - other.x_ * x_, std::nullopt);
}

GroupElement GroupElement::identity(int n) {
  return GroupElement(Mat::Identity(n + 1, n + 1));
}

GroupElement GroupElement::from_matrix(const Mat& m, double tol) {
  require(m.rows() == m.cols() && m.rows() >= 3,
          "GroupElement: need square matrix of size >= 3");
  const int n = static_cast<int>(m.rows()) - 1;
  const Mat j = LorentzForm(n).j();
  const double scale = rel_scale(m);
  const double err = (m.transpose() * j * m - j).lpNorm<Eigen::Infinity>();
  require(err <= tol * scale * scale, "GroupElement: m^T J m != J");
  require(m.determinant() > 0.0, "GroupElement: det <= 0");
  require(m(n, n) > 0.0, "GroupElement: backward timelike cone");
  return GroupElement(m);
}

GroupElement GroupElement::inverse() const {
  const int n = this->n();
  const Mat j = LorentzForm(n).j();
  return GroupElement(j * m_.transpose() * j);
}

GroupElement GroupElement::operator*(const GroupElement& other) const {
  require(m_.rows() == other.m_.rows(), "GroupElement: dimension mismatch");
  return GroupElement(m_ * other.m_);
}

/*
 * Generator matrices, calibrated so the induced vector fields in the
 * half-space chart have the fixed normal forms
 *
 *   X_i  ->  d/dx_i
 *   H    ->  (2 x_1, ..., 2 x_{n-1}, 4 y)
 *   Y_1  ->  (y + x_2^2 + ... + x_{n-1}^2 - x_1^2, -2 x_1 x_2, ..., -4 x_1 y)
 *
 * Writing xi+ = (0,..,0,1,1) and xi- = (0,..,0,-1,1) for the null vectors
 * over the chart's point at infinity and the chart origin, the parabolic
 * fixing a null vector xi with direction vector A (spacelike, <A,xi> = 0) is
 * N(w) = <A,w> xi - <xi,w> A.  The chart computation pins the normalization:
 * A must be a unit vector for both families, and H = 2 (E_{n,n+1}+E_{n+1,n})
 * so that exp(tH) has eigenvalues exp(+-2t) on the two null lines.
 */
AlgebraElement generator(const GeneratorTag& tag, int n) {
  require(n >= 2, "generator: need n >= 2");
  const int d = n + 1;
  Mat x = Mat::Zero(d, d);
  switch (tag.kind) {
    case GeneratorTag::Kind::H:
      x(n - 1, n) = 2.0;
      x(n, n - 1) = 2.0;
      break;
    case GeneratorTag::Kind::X: {
      require(tag.i >= 1 && tag.i <= n - 1, "generator: X index out of range");
      const int a = tag.i - 1;
      x(n - 1, a) = 1.0;
      x(n, a) = 1.0;
      x(a, n - 1) = -1.0;
      x(a, n) = 1.0;
      break;
    }
    case GeneratorTag::Kind::Y: {
      require(tag.i >= 1 && tag.i <= n - 1, "generator: Y index out of range");
      const int a = tag.i - 1;
      x(n - 1, a) = -1.0;
      x(n, a) = 1.0;
      x(a, n - 1) = 1.0;
      x(a, n) = 1.0;
      break;
    }
    case GeneratorTag::Kind::R: {
      require(tag.i >= 1 && tag.j >= 1 && tag.i < tag.j && tag.j <= n - 1,
              "generator: rotation indices need 1 <= j < k <= n-1");
      const int a = tag.i - 1;
      const int b = tag.j - 1;
      // exp(tR) rotates by angle t in the (x_j, x_k) plane.
      x(b, a) = 1.0;
      x(a, b) = -1.0;
      break;
    }
  }
  return AlgebraElement::from_matrix(x, tag);
}

std::vector<AlgebraElement> algebra_basis(int n) {
  std::vector<AlgebraElement> basis;
  basis.push_back(generator(GeneratorTag::boost(), n));
  for (int i = 1; i <= n - 1; ++i)
    basis.push_back(generator(GeneratorTag::para_inf(i), n));
  for (int i = 1; i <= n - 1; ++i)
    basis.push_back(generator(GeneratorTag::para_zero(i), n));
  for (int j = 1; j <= n - 1; ++j)
    for (int k = j + 1; k <= n - 1; ++k)
      basis.push_back(generator(GeneratorTag::rotation(j, k), n));
  return basis;
}

Mat expm(const Mat& x) {
  const double norm = x.lpNorm<Eigen::Infinity>();
  int s = 0;
  double scaled = norm;
  while (scaled >= 0.5) {
    scaled *= 0.5;
    ++s;
  }
  const Mat a = x / std::pow(2.0, s);
  Mat sum = Mat::Identity(x.rows(), x.cols());
  Mat term = sum;
  for (int k = 1; k <= 64; ++k) {
    term = (term * a) / static_cast<double>(k);
    sum += term;
    // ||a|| < 1/2, so the dropped tail is below twice the last term.
    if (term.lpNorm<Eigen::Infinity>() <=
        0.25 * 1e-18 * sum.lpNorm<Eigen::Infinity>())
      break;
  }
  for (int k = 0; k < s; ++k) sum = sum * sum;
  return sum;
}

GroupElement group_exp(const AlgebraElement& x) {
  return GroupElement::from_matrix(expm(x.mat()), 1e-9);
}

std::vector<GroupElement> symmetry_through_geodesic(const Vec& a, const Vec& b,
                                                    int n) {
  // In the plane (n = 2) no direct isometry fixes a geodesic pointwise, so
  // the construction starts at n = 3.
  require(n >= 3, "symmetry_through_geodesic: need n >= 3");
  require(a.size() == n && b.size() == n,
          "symmetry_through_geodesic: endpoint dimension mismatch");
  require(std::abs(a.norm() - 1.0) <= 1e-9 && std::abs(b.norm() - 1.0) <= 1e-9,
          "symmetry_through_geodesic: endpoints must be unit vectors");
  require((a - b).norm() > 1e-9,
          "symmetry_through_geodesic: coincident endpoints");

  const int d = n + 1;
  const Mat j = LorentzForm(n).j();
  Vec na(d), nb(d);
  na.head(n) = a / a.norm();
  na[n] = 1.0;
  nb.head(n) = b / b.norm();
  nb[n] = 1.0;

  // The geodesic spans the timelike plane P = <na, nb>; its J-orthogonal
  // projection, with the degenerate Gram matrix [[0, g],[g, 0]] inverted
  // explicitly.
  const double g = minkowski(na, nb);
  const Mat proj_p =
      (na * (j * nb).transpose() + nb * (j * na).transpose()) / g;

  auto reflect_through = [&](const Mat& fixed_proj) {
    return GroupElement::from_matrix(2.0 * fixed_proj - Mat::Identity(d, d),
                                     1e-9);
  };

  if (n % 2 == 1) {
    // Identity on P, minus one on the spacelike complement: an even number
    // of sign flips, so this lands in the identity component.
    return {reflect_through(proj_p)};
  }

  // Even n: split off two spacelike unit directions w1, w2 orthogonal to P
  // and to each other; each reflection keeps P (+ one direction) fixed and
  // they commute with common fixed set P.
  std::vector<Vec> ws;
  for (int c = 0; c < d && ws.size() < 2; ++c) {
    Vec v = Vec::Zero(d);
    v[c] = 1.0;
    v -= proj_p * v;
    for (const Vec& w : ws) v -= minkowski(w, v) * w;
    const double nn = minkowski(v, v);
    if (nn > 1e-6) ws.push_back(v / std::sqrt(nn));
  }
  require(ws.size() == 2, "symmetry_through_geodesic: complement basis failed");

  std::vector<GroupElement> out;
  for (const Vec& w : ws) {
    const Mat proj_w = w * (j * w).transpose();
    out.push_back(reflect_through(proj_p + proj_w));
  }
  return out;
}

}  // namespace ballcomp
