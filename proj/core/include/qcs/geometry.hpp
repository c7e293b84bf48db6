// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <stdexcept>

namespace qcs {

/// Uniform planar array: rows_elev x cols_azim elements, spacing in wavelengths.
/// The total element count is rows_elev * cols_azim; vectors over the array are
/// indexed column-major (elevation index fastest), matching the Kronecker order
/// F_azim (x) F_elev of the angle-domain DFT basis.
struct ArrayGeometry {
  int rows_elev = 1;
  int cols_azim = 1;
  double spacing = 0.5;

  int size() const { return rows_elev * cols_azim; }

  void validate() const {
    if (rows_elev < 1 || cols_azim < 1)
      throw std::invalid_argument("ArrayGeometry: element counts must be positive");
    if (spacing <= 0.0)
      throw std::invalid_argument("ArrayGeometry: spacing must be positive");
  }
};

} // namespace qcs
