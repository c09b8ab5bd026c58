#include "ballcomp/sampling.hpp"

#include <cmath>
#include <stdexcept>

namespace ballcomp {

std::uint64_t Rng::next() {
  state_ += 0x9E3779B97F4A7C15ULL;
  std::uint64_t z = state_;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

double Rng::uniform() { return (next() >> 11) * 0x1.0p-53; }

double Rng::uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

double Rng::normal() {
  double u;
  do {
    u = uniform();
  } while (u <= 0.0);
  const double r = std::sqrt(-2.0 * std::log(u));
  return r * std::cos(6.283185307179586 * uniform());
}

Vec Rng::unit_vector(int dim) {
  if (dim < 1) throw std::invalid_argument("unit_vector: dim >= 1 required");
  for (;;) {
    Vec v(dim);
    for (int i = 0; i < dim; ++i) v[i] = normal();
    const double r = v.norm();
    if (r > 1e-9) return v / r;
  }
}

Vec Rng::ball_interior(int dim, double max_radius) {
  const double r = max_radius * std::pow(uniform(), 1.0 / dim);
  return r * unit_vector(dim);
}

AlgebraElement Rng::algebra_element(int n, double scale) {
  Mat m = Mat::Zero(n + 1, n + 1);
  for (const AlgebraElement& e : algebra_basis(n))
    m += uniform(-scale, scale) * e.mat();
  return AlgebraElement::from_matrix(m);
}

GroupElement Rng::group_element(int n, double scale) {
  return group_exp(algebra_element(n, scale));
}

std::vector<std::pair<Vec, Vec>> sphere_anchored_pairs(Rng& rng, int dim,
                                                       int count, double min_e,
                                                       double max_e,
                                                       double rho_min,
                                                       double rho_max) {
  std::vector<std::pair<Vec, Vec>> out;
  out.reserve(count);
  while ((int)out.size() < count) {
    const Vec a = rng.unit_vector(dim);
    Vec tang = rng.unit_vector(dim);
    tang -= tang.dot(a) * a;
    const double tn = tang.norm();
    if (tn < 1e-6) continue;
    tang /= tn;
    const double delta = std::pow(10.0, -rng.uniform(min_e, max_e));
    const double inward = rng.uniform(rho_min, rho_max);
    const Vec w = (1.0 - delta * inward) * a +
                  delta * std::sqrt(1.0 - inward * inward) * tang;
    out.emplace_back(a, w);
  }
  return out;
}

std::vector<std::pair<Vec, Vec>> halfspace_anchored_pairs(Rng& rng, int n,
                                                          int count,
                                                          double min_e,
                                                          double max_e,
                                                          double rho_min,
                                                          double rho_max) {
  std::vector<std::pair<Vec, Vec>> out;
  out.reserve(count);
  for (int i = 0; i < count; ++i) {
    Vec a = Vec::Zero(n);
    for (int k = 0; k < n - 1; ++k) a[k] = rng.uniform(-1.0, 1.0);
    const double delta = std::pow(10.0, -rng.uniform(min_e, max_e));
    const double inward = rng.uniform(rho_min, rho_max);
    Vec w = a;
    if (n > 1) {
      const Vec tang = rng.unit_vector(n - 1);
      w.head(n - 1) += delta * std::sqrt(1.0 - inward * inward) * tang;
    }
    w[n - 1] = delta * inward;
    out.emplace_back(a, w);
  }
  return out;
}

}  // namespace ballcomp
