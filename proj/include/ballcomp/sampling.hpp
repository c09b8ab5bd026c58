#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "ballcomp/lorentz.hpp"

namespace ballcomp {

// Deterministic draws: a splitmix64 core with hand-rolled transforms, so a
// seed pins every downstream report byte for byte.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  double uniform();  // [0, 1)
  double uniform(double lo, double hi);
  double normal();
  Vec unit_vector(int dim);
  Vec ball_interior(int dim, double max_radius = 0.9);
  AlgebraElement algebra_element(int n, double scale = 1.0);
  GroupElement group_element(int n, double scale = 1.0);

 private:
  std::uint64_t state_;
  std::uint64_t next();
};

// Pairs (anchor on the unit sphere, companion at distance 10^{-e}) with the
// companion pushed inward by a fraction in [rho_min, rho_max] of the step
// and tilted tangentially by the rest; e sweeps [min_e, max_e].
std::vector<std::pair<Vec, Vec>> sphere_anchored_pairs(Rng& rng, int dim,
                                                       int count,
                                                       double min_e = 1.0,
                                                       double max_e = 5.0,
                                                       double rho_min = 0.7,
                                                       double rho_max = 1.0);

// Same construction against the plane y = 0 of the closed half-space
// (points are (x_1..x_{n-1}, y), anchors have y = 0).
std::vector<std::pair<Vec, Vec>> halfspace_anchored_pairs(Rng& rng, int n,
                                                          int count,
                                                          double min_e = 1.0,
                                                          double max_e = 5.0,
                                                          double rho_min = 0.7,
                                                          double rho_max = 1.0);

}  // namespace ballcomp
