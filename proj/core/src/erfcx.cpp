// SPDX-License-Identifier: Apache-2.0
#include "qcs/special.hpp"

#include <cmath>

namespace qcs {

// Laplace continued fraction for erfc(x)*exp(x^2)*sqrt(pi), evaluated with the
// modified Lentz scheme. Converges quickly for x >= 6.
static double erfcx_cf(double x) {
  const double tiny = 1e-300;
  double f = x;
  double c = x;
  double d = 0.0;
  for (int n = 1; n < 64; ++n) {
    const double a = 0.5 * n;
    d = x + a * d;
    if (d == 0.0) d = tiny;
    c = x + a / c;
    if (c == 0.0) c = tiny;
    d = 1.0 / d;
    const double delta = c * d;
    f *= delta;
    if (std::abs(delta - 1.0) < 1e-17) break;
  }
  return 1.0 / (1.7724538509055160273 * f); // sqrt(pi)
}

double erfcx(double x) {
  if (x < 0.0) return 2.0 * std::exp(x * x) - erfcx(-x);
  if (x < 6.0) return std::exp(x * x) * std::erfc(x);
  return erfcx_cf(x);
}

} // namespace qcs
