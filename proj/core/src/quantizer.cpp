// SPDX-License-Identifier: Apache-2.0
#include "qcs/quantizer.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace qcs {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// Optimal uniform quantizer for a unit-variance Gaussian input.
// The 1-bit row is exact: Delta = sqrt(8/pi), NMSE = (pi-2)/pi.
struct TableRow {
  double stepsize;
  double nmse;
  double sqnr_db;
};

const TableRow kTable[8] = {
    {1.595769121605731, 0.3633802276324187, 4.396389725951001},
    {0.9957, 0.1188, 9.25},
    {0.586, 0.03744, 14.27},
    {0.3352, 0.01154, 19.38},
    {0.1881, 0.003504, 24.55},
    {0.1041, 0.001035, 29.85},
    {0.0569, 0.0002999, 35.23},
    {0.0308, 0.00008543, 40.68},
};

double branch_step(double power, double delta_b) {
  if (!(power > 0.0)) throw std::invalid_argument("quantize: nonpositive branch power");
  return std::sqrt(power) * delta_b;
}

// Mid-rise level index for one real dimension: floor(x/step) clamped to the
// 2^b levels. Equivalent to the sign/ceil form almost everywhere and makes
// sign(0) := +1 automatic.
double quantize_real(double x, double step, int half_levels) {
  double k = std::floor(x / step);
  if (k < -half_levels) k = -half_levels;
  if (k > half_levels - 1) k = half_levels - 1;
  return (k + 0.5) * step;
}

CellInterval cell_real(double y, double step, int half_levels) {
  const double k_real = y / step - 0.5;
  const double k = std::round(k_real);
  if (std::abs(k_real - k) > 1e-6 || k < -half_levels || k > half_levels - 1)
    throw std::invalid_argument("inverse_cell: value off the quantizer grid");
  CellInterval cell;
  cell.lo = (k == -half_levels) ? -kInf : k * step;
  cell.hi = (k == half_levels - 1) ? kInf : (k + 1) * step;
  return cell;
}

} // namespace

bool CellInterval::is_finite() const { return std::isfinite(lo) && std::isfinite(hi); }

QuantizerSpec QuantizerSpec::infinite() {
  QuantizerSpec spec;
  spec.bits = 0;
  spec.stepsize = std::numeric_limits<double>::quiet_NaN();
  spec.nmse = 0.0;
  spec.sqnr_db = kInf;
  return spec;
}

QuantizerSpec stepsize_table(int bits) {
  if (bits == 0) return QuantizerSpec::infinite();
  if (bits < 1 || bits > 8)
    throw std::invalid_argument("stepsize_table: supported resolutions are 1..8 bits or 0 (infinite)");
  QuantizerSpec spec;
  spec.bits = bits;
  spec.stepsize = kTable[bits - 1].stepsize;
  spec.nmse = kTable[bits - 1].nmse;
  spec.sqnr_db = kTable[bits - 1].sqnr_db;
  return spec;
}

PowerEstimate PowerEstimate::measure(const CVec& x) {
  PowerEstimate p;
  if (x.size() == 0) return p;
  p.re_power = x.real().squaredNorm() / static_cast<double>(x.size());
  p.im_power = x.imag().squaredNorm() / static_cast<double>(x.size());
  return p;
}

cd quantize_scalar(cd x, const QuantizerSpec& spec, const PowerEstimate& power) {
  if (spec.is_infinite()) return x;
  const double step_re = branch_step(power.re_power, spec.stepsize);
  const double step_im = branch_step(power.im_power, spec.stepsize);
  const int half = spec.levels_per_side();
  return {quantize_real(x.real(), step_re, half), quantize_real(x.imag(), step_im, half)};
}

CVec quantize(const CVec& x, const QuantizerSpec& spec, const PowerEstimate& power) {
  if (spec.is_infinite()) return x;
  const double step_re = branch_step(power.re_power, spec.stepsize);
  const double step_im = branch_step(power.im_power, spec.stepsize);
  const int half = spec.levels_per_side();
  CVec y(x.size());
  for (Eigen::Index i = 0; i < x.size(); ++i)
    y[i] = cd(quantize_real(x[i].real(), step_re, half),
              quantize_real(x[i].imag(), step_im, half));
  return y;
}

QuantizerCell inverse_cell(cd y, const QuantizerSpec& spec, const PowerEstimate& power) {
  if (spec.is_infinite())
    throw std::invalid_argument("inverse_cell: infinite-resolution quantizer has no cells");
  const double step_re = branch_step(power.re_power, spec.stepsize);
  const double step_im = branch_step(power.im_power, spec.stepsize);
  const int half = spec.levels_per_side();
  return {cell_real(y.real(), step_re, half), cell_real(y.imag(), step_im, half)};
}

} // namespace qcs
