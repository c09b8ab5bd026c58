#include "ballcomp/fields.hpp"

#include <cmath>
#include <stdexcept>

namespace ballcomp {

namespace {

void require(bool cond, const std::string& msg) {
  if (!cond) throw std::invalid_argument(msg);
}

Vec field_Y1(const Vec& q) {
  const auto n = q.size();
  const Vec x = q.head(n - 1);
  const double y = q[n - 1];
  Vec out(n);
  out[0] = y + x.squaredNorm() - 2.0 * x[0] * x[0];
  for (Eigen::Index j = 1; j < n - 1; ++j) out[j] = -2.0 * x[0] * x[j];
  out[n - 1] = -4.0 * x[0] * y;
  return out;
}

// Quarter turn in the (x_1, x_i) plane: x_1 -> -x_i, x_i -> x_1 (height
// fixed).  Exact linear involution-free conjugator carrying Y_1 to Y_i.
Vec quarter_turn(const Vec& q, int i, bool inverse) {
  Vec out = q;
  if (!inverse) {
    out[0] = -q[i - 1];
    out[i - 1] = q[0];
  } else {
    out[0] = q[i - 1];
    out[i - 1] = -q[0];
  }
  return out;
}

Vec field_Y1_with_height(const Vec& q, double height_term) {
  // Y_1 with the chart height replaced (used by the pullbacks, where the
  // first component carries f(y) and the last f/f').
  const auto n = q.size();
  const Vec x = q.head(n - 1);
  Vec out(n);
  out[0] = height_term + x.squaredNorm() - 2.0 * x[0] * x[0];
  for (Eigen::Index j = 1; j < n - 1; ++j) out[j] = -2.0 * x[0] * x[j];
  out[n - 1] = -4.0 * x[0];  // caller multiplies by the height factor
  return out;
}

}  // namespace

Vec proj_field_numeric(const AlgebraElement& x, const Vec& q, double step) {
  const int n = x.n();
  require(q.size() == n, "proj_field_numeric: dimension mismatch");
  require(q[n - 1] > 0.0, "proj_field_numeric: interior point expected");
  ChartPoint cp;
  cp.u = q.head(n - 1);
  cp.v = q[n - 1];
  auto flow = [&](double t) {
    const GroupElement g = group_exp(x.scaled(t));
    const ChartPoint img = chart_kc_apply_proj(g, cp);
    require(!img.inf, "proj_field_numeric: trajectory left the chart");
    Vec out(n);
    out.head(n - 1) = img.u;
    out[n - 1] = img.v;
    return out;
  };
  auto central = [&](double h) { return Vec(((flow(h) - flow(-h)) / (2.0 * h)).eval()); };
  const Vec d1 = central(step);
  const Vec d2 = central(0.5 * step);
  return (4.0 * d2 - d1) / 3.0;
}

Vec proj_field(const AlgebraElement& x, const Vec& q) {
  const int n = x.n();
  require(q.size() == n, "proj_field: dimension mismatch");
  if (!x.tag()) return proj_field_numeric(x, q);
  const GeneratorTag& tag = *x.tag();
  Vec out = Vec::Zero(n);
  switch (tag.kind) {
    case GeneratorTag::Kind::X:
      out[tag.i - 1] = 1.0;
      return out;
    case GeneratorTag::Kind::H:
      out.head(n - 1) = 2.0 * q.head(n - 1);
      out[n - 1] = 4.0 * q[n - 1];
      return out;
    case GeneratorTag::Kind::Y: {
      if (tag.i == 1) return field_Y1(q);
      const Vec back = quarter_turn(q, tag.i, true);
      return quarter_turn(field_Y1(back), tag.i, false);
    }
    case GeneratorTag::Kind::R:
      out[tag.i - 1] = -q[tag.j - 1];
      out[tag.j - 1] = q[tag.i - 1];
      return out;
  }
  throw std::logic_error("proj_field: bad tag");
}

double f_over_fprime(const ReparamMap& f, double y) {
  return f.f_over_fprime(y);
}

std::optional<Vec> pullback_field(const ReparamMap& f, const AlgebraElement& x,
                                  const Vec& q) {
  const int n = x.n();
  require(q.size() == n, "pullback_field: dimension mismatch");
  const double y = q[n - 1];
  require(y >= 0.0, "pullback_field: negative height");

  if (y == 0.0 && !f.ratio_extends_at_zero()) return std::nullopt;

  if (x.tag()) {
    const GeneratorTag& tag = *x.tag();
    Vec out = Vec::Zero(n);
    switch (tag.kind) {
      case GeneratorTag::Kind::X:
        out[tag.i - 1] = 1.0;
        return out;
      case GeneratorTag::Kind::H:
        out.head(n - 1) = 2.0 * q.head(n - 1);
        out[n - 1] = 4.0 * f.f_over_fprime(y);
        return out;
      case GeneratorTag::Kind::Y: {
        auto pulled_y1 = [&](const Vec& p) {
          Vec v = field_Y1_with_height(p, f.f(p[n - 1]));
          v[n - 1] *= f.f_over_fprime(p[n - 1]);
          return v;
        };
        if (tag.i == 1) return pulled_y1(q);
        const Vec back = quarter_turn(q, tag.i, true);
        return quarter_turn(pulled_y1(back), tag.i, false);
      }
      case GeneratorTag::Kind::R:
        out[tag.i - 1] = -q[tag.j - 1];
        out[tag.j - 1] = q[tag.i - 1];
        return out;
    }
  }

  // Generic element: evaluate the projective field at (x, f(y)) and rescale
  // the height component by 1/f'(y).  Needs the interior.
  require(y > 0.0, "pullback_field: untagged element needs y > 0");
  Vec up = q;
  up[n - 1] = f.f(y);
  require(up[n - 1] > 0.0, "pullback_field: f(y) underflowed to the boundary");
  Vec v = proj_field_numeric(x, up);
  v[n - 1] /= f.fprime(y);
  return v;
}

double calibration_check(int n) {
  double worst = 0.0;
  Vec q(n);
  for (int i = 0; i < n - 1; ++i) q[i] = 0.3 + 0.17 * i;
  q[n - 1] = 0.8;
  for (const AlgebraElement& x : algebra_basis(n)) {
    const Vec closed = proj_field(x, q);
    const Vec numeric = proj_field_numeric(x, q);
    worst = std::max(worst, (closed - numeric).lpNorm<Eigen::Infinity>());
  }
  return worst;
}

}  // namespace ballcomp
