// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "qcs/types.hpp"

namespace qcs {

/// Few-bit uniform mid-rise quantizer description. `bits` is the resolution
/// per real dimension (1..8); bits == 0 denotes infinite resolution (no
/// quantization). Stepsizes and NMSE figures are the optimal-uniform-quantizer
/// values for a unit-variance Gaussian input.
struct QuantizerSpec {
  int bits = 0;
  double stepsize = 0.0; // Delta_b, unit-variance normalized
  double nmse = 0.0;     // eta_b
  double sqnr_db = 0.0;

  bool is_infinite() const { return bits == 0; }
  int levels_per_side() const { return 1 << (bits - 1); }

  static QuantizerSpec infinite();
};

/// Table row for b in {1..8}; b == 0 returns the infinite-resolution spec.
/// Throws std::invalid_argument for unsupported b.
QuantizerSpec stepsize_table(int bits);

/// Pre-ADC analog power measurement (ideal AGC): average power of the real
/// and imaginary parts of the unquantized signal.
struct PowerEstimate {
  double re_power = 0.0;
  double im_power = 0.0;

  static PowerEstimate measure(const CVec& x);
};

/// Component-wise mid-rise quantization of a complex sequence. The per-branch
/// stepsize is sqrt(power) * Delta_b. Zero input maps to the positive
/// innermost level (sign(0) := +1). Infinite-resolution specs pass x through.
/// Throws std::invalid_argument on nonpositive power (finite bits only).
CVec quantize(const CVec& x, const QuantizerSpec& spec, const PowerEstimate& power);

cd quantize_scalar(cd x, const QuantizerSpec& spec, const PowerEstimate& power);

/// Half-open interval [lo, hi); outermost cells extend to +-infinity.
struct CellInterval {
  double lo = 0.0;
  double hi = 0.0;
  double midpoint() const { return 0.5 * (lo + hi); }
  bool is_finite() const;
};

struct QuantizerCell {
  CellInterval re;
  CellInterval im;
};

/// Preimage Q^{-1}(y) of an output point, as one interval per real dimension.
/// Throws std::invalid_argument if y is not on the output grid or the spec is
/// infinite-resolution.
QuantizerCell inverse_cell(cd y, const QuantizerSpec& spec, const PowerEstimate& power);

} // namespace qcs
