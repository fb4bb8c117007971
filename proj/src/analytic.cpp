#include "magent/analytic.hpp"

#include "magent/errors.hpp"

#include <algorithm>
#include <cmath>

namespace magent {

void validate(const ReducedParams& p) {
  if (!(p.a > 0.0) || !std::isfinite(p.a)) throw InvalidArgument("ReducedParams: a must be > 0");
  if (!(p.b >= 0.0) || !std::isfinite(p.b)) throw InvalidArgument("ReducedParams: b must be >= 0");
  if (!(p.r >= 0.0) || !std::isfinite(p.r)) throw InvalidArgument("ReducedParams: r must be >= 0");
}

CovarianceMatrix vaa_analytic(double r) {
  if (!(r >= 0.0)) throw InvalidArgument("vaa_analytic: r must be >= 0");
  const double c = std::cosh(2.0 * r);
  const double s = std::sinh(2.0 * r);
  Eigen::Matrix4d v;
  v << c, 0, s, 0,
       0, c, 0, -s,
       s, 0, c, 0,
       0, -s, 0, c;
  return CovarianceMatrix(0.5 * v, {"cavity-1", "cavity-2"});
}

double eaa_analytic(double r) {
  if (!(r >= 0.0)) throw InvalidArgument("eaa_analytic: r must be >= 0");
  const double minus = std::cosh(r) - std::sinh(r);
  const double plus = std::cosh(r) + std::sinh(r);
  const double smallest = std::min(minus * minus, plus * plus);
  return std::max(0.0, -std::log(smallest));
}

CovarianceMatrix vmm_analytic(const ReducedParams& p) {
  validate(p);
  const double a = p.a, b2 = p.b * p.b;
  const double pref = 1.0 / (2.0 * (1.0 + a) * (a + b2));
  const double d = a * (1.0 + a + b2) + b2 * std::cosh(2.0 * p.r);
  const double o = b2 * std::sinh(2.0 * p.r);
  Eigen::Matrix4d v;
  v << d, 0, -o, 0,
       0, d, 0, o,
       -o, 0, d, 0,
       0, o, 0, d;
  return CovarianceMatrix(pref * v, {"magnon-1", "magnon-2"});
}

CovarianceMatrix vam_analytic(const ReducedParams& p) {
  validate(p);
  const double a = p.a, b = p.b, b2 = b * b;
  const double pref = 1.0 / (2.0 * (1.0 + a) * (a + b2));
  const double c2r = std::cosh(2.0 * p.r);
  const double cav = a * b2 + (a + a * a + b2) * c2r;
  const double mag = a * (1.0 + a + b2) + b2 * c2r;
  const double sh = std::sinh(p.r);
  const double e = 2.0 * a * b * sh * sh;
  Eigen::Matrix4d v;
  v << cav, 0, 0, -e,
       0, cav, e, 0,
       0, e, mag, 0,
       -e, 0, 0, mag;
  return CovarianceMatrix(pref * v, {"cavity", "magnon"});
}

double cavity_magnon_N(const ReducedParams& p) {
  const auto pt = partial_transpose(vam_analytic(p), 0);
  return -std::log(2.0 * two_mode_symplectic_eigenvalues(pt)[0]);
}

}  // namespace magent
